"""Exhaustive small-order search for complementarity-cospectral digraphs.

Digraphs are enumerated one representative per isomorphism class by scanning
every labeled adjacency pattern and keeping the patterns that are minimal
over all vertex relabelings. Representatives are then grouped by certified
spectrum to locate cospectral classes and test spectrum determination.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Iterator
from itertools import permutations

import numpy as np

from .digraph import Digraph, canonical_form, is_isomorphic
from .errors import NotStronglyConnected, SizeLimitExceeded
from .scc import is_strongly_connected
from .spectral import Polynomial, char_poly_exact
from .spectrum import (
    DEFAULT_MERGE_TOL,
    DEFAULT_RADIUS_TOL,
    CompSpectrum,
    complementarity_spectrum,
    spectra_equal,
)

MAX_ENUM_ORDER = 5

UNIVERSES = ("all", "strongly_connected")


@dataclass(frozen=True)
class CospectralClass:
    """Pairwise non-isomorphic digraphs sharing one certified spectrum."""

    members: tuple[Digraph, ...]
    spectrum: CompSpectrum


@dataclass(frozen=True)
class SearchReport:
    """Cospectral grouping of all isomorphism classes at one order."""

    order: int
    universe: str
    classes: tuple[CospectralClass, ...]
    nontrivial_classes: tuple[CospectralClass, ...]

    def to_json_dict(self) -> dict:
        def member(d: Digraph) -> dict:
            return {
                "canonical": canonical_form(d).hex(),
                "arcs": [list(a) for a in d.arcs],
                "order": d.n,
                "size": d.arc_count,
            }

        def cls(c: CospectralClass) -> dict:
            return {
                "spectrum": c.spectrum.to_json_dict(),
                "members": [member(m) for m in c.members],
            }

        return {
            "order": self.order,
            "universe": self.universe,
            "classes": [cls(c) for c in self.classes],
            "nontrivial_classes": [cls(c) for c in self.nontrivial_classes],
        }


def _arc_slots(n: int) -> list[tuple[int, int]]:
    # bit position u*(n-1) + (v-1 if v > u else v) holds arc (u, v)
    return [(u, v) for u in range(n) for v in range(n) if u != v]


def _perm_lookup(
    n: int, perm: tuple[int, ...], lo_bits: int, hi_bits: int
) -> tuple[np.ndarray, np.ndarray]:
    """Chunked tables mapping a code to the code of the relabeled digraph."""
    m = n * (n - 1)
    target = [0] * m
    for u in range(n):
        for v in range(n):
            if u != v:
                pu, pv = perm[u], perm[v]
                src = u * (n - 1) + (v - 1 if v > u else v)
                target[src] = pu * (n - 1) + (pv - 1 if pv > pu else pv)

    def table(offset: int, bits: int) -> np.ndarray:
        out = np.zeros(1 << bits, dtype=np.uint32)
        for code in range(1, 1 << bits):
            low = code & -code
            out[code] = out[code ^ low] | (
                1 << target[offset + low.bit_length() - 1]
            )
        return out

    return table(0, lo_bits), table(lo_bits, hi_bits)


_REP_CODE_CACHE: dict[int, np.ndarray] = {}


def _representative_codes(n: int) -> np.ndarray:
    """Codes minimal over all relabelings, ascending; one per iso class."""
    hit = _REP_CODE_CACHE.get(n)
    if hit is not None:
        return hit

    m = n * (n - 1)
    lo_bits = min(10, m)
    hi_bits = m - lo_bits
    codes = np.arange(1 << m, dtype=np.uint32)
    canon = codes.copy()
    lo_mask = (1 << lo_bits) - 1
    for perm in permutations(range(n)):
        if perm == tuple(range(n)):
            continue
        lo, hi = _perm_lookup(n, perm, lo_bits, hi_bits)
        relabeled = lo[codes & lo_mask] | hi[codes >> lo_bits]
        np.minimum(canon, relabeled, out=canon)
    reps = codes[canon == codes]
    _REP_CODE_CACHE[n] = reps
    return reps


def enumerate_digraphs(n: int, universe: str = "all") -> Iterator[Digraph]:
    """One representative per isomorphism class of order n, ascending code.

    universe "all" yields every digraph, "strongly_connected" only the
    strongly connected ones. Capped at order 5: the labeled scan doubles
    per arc slot and order 6 already needs 2^30 patterns.
    """
    if universe not in UNIVERSES:
        raise ValueError(f"universe must be one of {UNIVERSES}, got {universe!r}")
    if n > MAX_ENUM_ORDER:
        raise SizeLimitExceeded(
            f"enumeration capped at order {MAX_ENUM_ORDER}"
            f" (order {n} needs 2^{n * (n - 1)} labeled patterns)"
        )
    if n <= 0:
        yield Digraph(0, [])
        return
    slots = _arc_slots(n)
    for code in _representative_codes(n):
        code = int(code)
        arcs = [slots[i] for i in range(len(slots)) if code >> i & 1]
        d = Digraph(n, arcs)
        if universe == "all" or is_strongly_connected(d):
            yield d


def find_cospectral_classes(
    n: int,
    universe: str = "strongly_connected",
    require_equal_size: bool = False,
    tol: float = DEFAULT_RADIUS_TOL,
    merge_tol: float = DEFAULT_MERGE_TOL,
) -> SearchReport:
    """Group all order-n representatives into cospectral classes.

    Representatives are sorted by size key, spectrum cardinality and point
    values, then clustered with the certified-interval comparison: distinct
    radii of small integer matrices are separated far beyond merge_tol, so
    equal spectra land adjacent in the sort. With require_equal_size, arc
    count joins the grouping key. nontrivial_classes are the classes pairing
    two or more members of equal size: the counterexamples to spectrum
    determination at this order.
    """
    cache: dict = {}
    items = [
        (d, complementarity_spectrum(d, tol=tol, merge_tol=merge_tol, cache=cache))
        for d in enumerate_digraphs(n, universe)
    ]
    items.sort(
        key=lambda t: (
            t[0].arc_count if require_equal_size else 0,
            t[1].cardinality,
            t[1].point_values(),
        )
    )
    classes: list[CospectralClass] = []
    group: list[Digraph] = []
    group_spectrum: CompSpectrum | None = None
    group_size = -1

    def flush() -> None:
        if group:
            classes.append(CospectralClass(tuple(group), group_spectrum))

    for d, sp in items:
        size = d.arc_count if require_equal_size else 0
        if (
            group_spectrum is not None
            and size == group_size
            and spectra_equal(group_spectrum, sp, tol=max(merge_tol, 4 * tol))
        ):
            group.append(d)
        else:
            flush()
            group = [d]
            group_spectrum = sp
            group_size = size
    flush()
    nontrivial = tuple(c for c in classes if _has_equal_size_pair(c))
    return SearchReport(
        order=n,
        universe=universe,
        classes=tuple(classes),
        nontrivial_classes=nontrivial,
    )


def _has_equal_size_pair(c: CospectralClass) -> bool:
    sizes = [m.arc_count for m in c.members]
    return any(sizes.count(s) >= 2 for s in set(sizes))


def is_dcs(d: Digraph, tol: float = DEFAULT_RADIUS_TOL) -> bool:
    """True iff d's spectrum identifies it among strongly connected digraphs.

    Checks every strongly connected isomorphism class of the same order: d
    is determined by its spectrum iff no non-isomorphic one is cospectral
    with it. Equal order is the only sharing requirement; arc counts may
    differ.
    """
    if not is_strongly_connected(d):
        raise NotStronglyConnected(
            "spectrum determination is defined for strongly connected digraphs"
        )
    cache: dict = {}
    mine = complementarity_spectrum(d, tol=tol, cache=cache)
    for rep in enumerate_digraphs(d.n, "strongly_connected"):
        other = complementarity_spectrum(rep, tol=tol, cache=cache)
        if spectra_equal(mine, other) and not is_isomorphic(d, rep):
            return False
    return True


def find_by_charpoly(
    n: int, p: Polynomial, universe: str = "all"
) -> list[Digraph]:
    """All order-n representatives whose characteristic polynomial equals p."""
    return [d for d in enumerate_digraphs(n, universe) if char_poly_exact(d) == p]
