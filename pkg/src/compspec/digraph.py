"""Finite simple digraphs on vertex set {0, ..., n-1}.

Digraphs are immutable: every operation returns a new instance. Arcs are
ordered pairs (u, v) with u != v; parallel arcs collapse because the arc set
is a set. Vertex subsets are passed around as sorted tuples of ints.

The edge-list text format is: a header line "n m", then m lines "u v", with
"#" starting a comment anywhere on a line. Blank lines are ignored.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import SelfLoopError, SizeLimitExceeded, VertexOutOfRangeError


class Digraph:
    """A simple digraph with frozen vertex count and arc set."""

    __slots__ = ("n", "arcs", "out_adj", "in_adj", "out_mask", "in_mask", "_hash")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("order must be >= 0")
        seen: set[tuple[int, int]] = set()
        for u, v in arcs:
            if not (0 <= u < n):
                raise VertexOutOfRangeError(u, n)
            if not (0 <= v < n):
                raise VertexOutOfRangeError(v, n)
            if u == v:
                raise SelfLoopError(u)
            seen.add((u, v))
        self.n = n
        self.arcs: tuple[tuple[int, int], ...] = tuple(sorted(seen))
        out_mask = [0] * n
        in_mask = [0] * n
        for u, v in self.arcs:
            out_mask[u] |= 1 << v
            in_mask[v] |= 1 << u
        self.out_mask: tuple[int, ...] = tuple(out_mask)
        self.in_mask: tuple[int, ...] = tuple(in_mask)
        self.out_adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(v for v in range(n) if out_mask[u] >> v & 1) for u in range(n)
        )
        self.in_adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(u for u in range(n) if in_mask[v] >> u & 1) for v in range(n)
        )
        self._hash = hash((n, self.arcs))

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and bool(self.out_mask[u] >> v & 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        shown = ", ".join(f"({u},{v})" for u, v in self.arcs[:8])
        if self.arc_count > 8:
            shown += f", ... {self.arc_count} arcs total"
        return f"Digraph(n={self.n}, arcs=[{shown}])"

    def vertices(self) -> range:
        return range(self.n)


def from_arcs(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    """Build a digraph on {0..n-1} from an iterable of arcs."""
    return Digraph(n, arcs)


def induced(d: Digraph, vertices: Iterable[int]) -> Digraph:
    """Induced subdigraph on the given vertex set, relabeled to 0..k-1.

    Relabeling follows sorted order of the vertex set: the i-th smallest
    original vertex becomes vertex i.
    """
    vs = sorted(set(vertices))
    for v in vs:
        if not (0 <= v < d.n):
            raise VertexOutOfRangeError(v, d.n)
    index = {v: i for i, v in enumerate(vs)}
    arcs = [
        (index[u], index[v])
        for u, v in d.arcs
        if u in index and v in index
    ]
    return Digraph(len(vs), arcs)


def converse(d: Digraph) -> Digraph:
    """The digraph with every arc reversed."""
    return Digraph(d.n, ((v, u) for u, v in d.arcs))


def _signature(d: Digraph, v: int) -> tuple:
    """Cheap isomorphism-invariant per vertex: degrees plus neighbor degrees."""
    deg = lambda u: (len(d.out_adj[u]), len(d.in_adj[u]))
    return (
        deg(v),
        tuple(sorted(deg(u) for u in d.out_adj[v])),
        tuple(sorted(deg(u) for u in d.in_adj[v])),
    )


def is_isomorphic(d: Digraph, h: Digraph, max_n: int = 16) -> bool:
    """Decide digraph isomorphism by backtracking over signature-matched pools.

    Intended for small digraphs; raises SizeLimitExceeded above max_n vertices.
    """
    if d.n > max_n or h.n > max_n:
        raise SizeLimitExceeded(
            f"isomorphism test capped at {max_n} vertices, got {max(d.n, h.n)}"
        )
    if d.n != h.n or d.arc_count != h.arc_count:
        return False
    n = d.n
    if n == 0:
        return True
    sig_d = [_signature(d, v) for v in range(n)]
    sig_h = [_signature(h, v) for v in range(n)]
    if sorted(sig_d) != sorted(sig_h):
        return False
    pools = [[w for w in range(n) if sig_h[w] == sig_d[v]] for v in range(n)]
    order = sorted(range(n), key=lambda v: (len(pools[v]), -len(d.out_adj[v])))
    mapping = [-1] * n
    used = [False] * n

    def assign(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in pools[v]:
            if used[w]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                mu = mapping[u]
                if (d.out_mask[v] >> u & 1) != (h.out_mask[w] >> mu & 1):
                    ok = False
                    break
                if (d.out_mask[u] >> v & 1) != (h.out_mask[mu] >> w & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            if assign(i + 1):
                return True
            mapping[v] = -1
            used[w] = False
        return False

    return assign(0)


def canonical_form(d: Digraph, max_n: int = 16) -> bytes:
    """Canonical byte string: equal bytes if and only if isomorphic digraphs.

    The form is the minimum, over all vertex orderings, of the adjacency bits
    read in staircase order (for each k: arcs from vertex k to vertices 0..k-1,
    then arcs from 0..k-1 to k). The minimum is found by branch-and-bound with
    prefix pruning. Highly symmetric digraphs near the cap can be slow; the
    cap keeps the worst case bounded.
    """
    if d.n > max_n:
        raise SizeLimitExceeded(
            f"canonical form capped at {max_n} vertices, got {d.n}"
        )
    n = d.n
    if n == 0:
        return bytes([0])
    out = d.out_mask
    best: list[int] | None = None

    placed: list[int] = []

    def dfs(chunks: list[int]) -> None:
        nonlocal best
        k = len(placed)
        if k == n:
            if best is None or chunks < best:
                best = list(chunks)
            return
        options = []
        for u in range(n):
            if u in placed:
                continue
            row = 0
            col = 0
            for j, w in enumerate(placed):
                row = row << 1 | (out[u] >> w & 1)
                col = col << 1 | (out[w] >> u & 1)
            options.append(((row << k) | col, u))
        options.sort()
        for chunk, u in options:
            chunks.append(chunk)
            if best is not None and chunks > best[: len(chunks)]:
                chunks.pop()
                break  # options ascending: the rest are no better
            placed.append(u)
            dfs(chunks)
            placed.pop()
            chunks.pop()

    dfs([])
    assert best is not None
    bits = []
    for k, chunk in enumerate(best):
        bits.extend((chunk >> (2 * k - 1 - i)) & 1 for i in range(2 * k))
    packed = bytearray([n])
    acc = 0
    for i, b in enumerate(bits):
        acc = acc << 1 | b
        if i % 8 == 7:
            packed.append(acc)
            acc = 0
    if len(bits) % 8:
        packed.append(acc << (8 - len(bits) % 8))
    return bytes(packed)


def parse_edge_list(text: str) -> Digraph:
    """Parse the edge-list text format ("n m" header then "u v" lines)."""
    rows: list[list[str]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise ValueError("empty edge list: missing 'n m' header")
    header = rows[0]
    if len(header) != 2:
        raise ValueError(f"bad header {' '.join(header)!r}: expected 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise ValueError(f"bad header {' '.join(header)!r}: expected ints") from exc
    body = rows[1:]
    if len(body) != m:
        raise ValueError(f"header promises {m} arcs, found {len(body)}")
    arcs = []
    for row in body:
        if len(row) != 2:
            raise ValueError(f"bad arc line {' '.join(row)!r}: expected 'u v'")
        try:
            arcs.append((int(row[0]), int(row[1])))
        except ValueError as exc:
            raise ValueError(f"bad arc line {' '.join(row)!r}: expected ints") from exc
    return Digraph(n, arcs)


def format_edge_list(d: Digraph) -> str:
    """Serialize to the edge-list text format; inverse of parse_edge_list."""
    lines = [f"{d.n} {d.arc_count}"]
    lines.extend(f"{u} {v}" for u, v in d.arcs)
    return "\n".join(lines) + "\n"


def to_dot(d: Digraph) -> str:
    """DOT rendering with vertex indices as node names."""
    lines = ["digraph {"]
    isolated = [v for v in range(d.n) if not d.out_adj[v] and not d.in_adj[v]]
    lines.extend(f"  {v};" for v in isolated)
    lines.extend(f"  {u} -> {v};" for u, v in d.arcs)
    lines.append("}")
    return "\n".join(lines) + "\n"
