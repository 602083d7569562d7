"""Characteristic polynomials by counting linear subdigraphs.

A linear subdigraph is a disjoint union of directed cycles. Counting them
with sign (-1)^{number of cycles}, grouped by total vertex count, yields the
characteristic polynomial coefficients. This is an independent route from
the division-free determinant in `spectral` and cross-validates it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Digraph
from .errors import SizeLimitExceeded
from .spectral import Polynomial


@dataclass(frozen=True)
class LinearSubdigraph:
    """A set of pairwise vertex-disjoint directed cycles of the host digraph."""

    cycles: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return sum(len(c) for c in self.cycles)

    @property
    def component_count(self) -> int:
        return len(self.cycles)


def enumerate_cycles(d: Digraph, max_len: int | None = None) -> list[tuple[int, ...]]:
    """All simple directed cycles of length 2..max_len, each exactly once.

    Cycles are rotation-normalized: the minimal vertex comes first, followed
    by the rest in arc order. Enumeration anchors each cycle at its minimal
    vertex and only walks through larger vertices, so nothing repeats.
    """
    n = d.n
    limit = n if max_len is None else min(max_len, n)
    cycles: list[tuple[int, ...]] = []
    if limit < 2:
        return cycles
    path: list[int] = []
    on_path = 0

    def walk(start: int, v: int) -> None:
        nonlocal on_path
        for w in d.out_adj[v]:
            if w == start and len(path) >= 2:
                cycles.append(tuple(path))
            elif w > start and not on_path >> w & 1 and len(path) < limit:
                path.append(w)
                on_path |= 1 << w
                walk(start, w)
                path.pop()
                on_path ^= 1 << w

    for s in range(n):
        path = [s]
        on_path = 1 << s
        walk(s, s)
    return cycles


def linear_subdigraphs(
    d: Digraph, max_n: int = 14
) -> list[LinearSubdigraph]:
    """Every nonempty linear subdigraph; exponential, intended for small n."""
    if d.n > max_n:
        raise SizeLimitExceeded(
            f"linear subdigraph enumeration capped at {max_n} vertices, got {d.n}"
        )
    cycles = enumerate_cycles(d)
    masks = [sum(1 << v for v in c) for c in cycles]
    found: list[LinearSubdigraph] = []
    chosen: list[tuple[int, ...]] = []

    def pack(i: int, used: int) -> None:
        for j in range(i, len(cycles)):
            if masks[j] & used:
                continue
            chosen.append(cycles[j])
            found.append(LinearSubdigraph(tuple(chosen)))
            pack(j + 1, used | masks[j])
            chosen.pop()

    pack(0, 0)
    return found


def sachs_char_poly(d: Digraph, max_n: int = 14) -> Polynomial:
    """Characteristic polynomial via signed linear-subdigraph counts.

    Coefficient of x^{n-i} is the sum of (-1)^{component count} over linear
    subdigraphs on exactly i vertices. Packings are assembled by backtracking
    over the precomputed cycle list with a disjointness bitmask, so each one
    is generated exactly once.
    """
    n = d.n
    if n > max_n:
        raise SizeLimitExceeded(
            f"signed cycle-packing enumeration capped at {max_n} vertices, got {n}"
        )
    cycles = enumerate_cycles(d)
    masks = [sum(1 << v for v in c) for c in cycles]
    sizes = [len(c) for c in cycles]
    acc = [0] * (n + 1)
    acc[0] = 1

    def pack(i: int, used: int, total: int, sign: int) -> None:
        for j in range(i, len(cycles)):
            if masks[j] & used:
                continue
            acc[total + sizes[j]] += -sign
            pack(j + 1, used | masks[j], total + sizes[j], -sign)

    pack(0, 0, 0, 1)
    ascending = [0] * (n + 1)
    for i, a in enumerate(acc):
        ascending[n - i] = a
    return Polynomial(ascending)
