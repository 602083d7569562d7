"""Complementarity spectra of digraphs.

The complementarity spectrum of a digraph is the set of spectral radii of
its induced strongly connected subdigraphs; any single vertex contributes 0.
It is computed here by enumerating connected vertex subsets inside each
strongly connected component (a strongly connected subdigraph on two or more
vertices cannot straddle components), certifying each radius with interval
bounds, and merging values whose certified intervals agree.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from .digraph import Digraph
from .errors import IncomparableTolerances, SizeLimitExceeded
from .scc import decompose, is_acyclic
from .spectral import EXACT_ZERO, RadiusEstimate, radius_of_masks

DEFAULT_RADIUS_TOL = 1e-12
DEFAULT_MERGE_TOL = 1e-9
DEFAULT_MAX_SCC = 20


@dataclass(frozen=True)
class CompSpectrum:
    """Certified spectrum values in increasing order, one witness per value.

    Each value is a certified interval around one spectral radius; the
    matching entry of `witnesses` is a vertex set inducing a strongly
    connected subdigraph whose radius lies inside that interval. Values are
    separated by more than `merge_tol`; `radius_tol` is the certification
    tolerance the values were computed with.
    """

    values: tuple[RadiusEstimate, ...]
    witnesses: tuple[tuple[int, ...], ...]
    merge_tol: float
    radius_tol: float

    @property
    def cardinality(self) -> int:
        return len(self.values)

    def point_values(self) -> tuple[float, ...]:
        return tuple(e.value for e in self.values)

    def to_json_dict(self) -> dict:
        return {
            "values": [
                {"lower": e.lower, "upper": e.upper, "witness": list(w)}
                for e, w in zip(self.values, self.witnesses)
            ],
            "merge_tol": self.merge_tol,
        }


@dataclass(frozen=True)
class CardinalityClass:
    """Spectrum cardinality decided structurally: One, Two or ThreePlus."""

    tag: str
    reason: str


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        mask ^= b
        out.append(b.bit_length() - 1)
    return out


def _connected_masks(und: list[int]) -> Iterator[int]:
    """Vertex subsets connected in the undirected adjacency, each exactly once.

    Subsets are anchored at their minimum vertex and grown through larger
    vertices only; at each step the branches split on which frontier vertex
    joins first, so no subset is produced twice.
    """
    k = len(und)
    full = (1 << k) - 1

    def grow(sub: int, nbr: int, allowed: int) -> Iterator[int]:
        yield sub
        ext = nbr & allowed
        while ext:
            u_bit = ext & -ext
            ext ^= u_bit
            allowed ^= u_bit
            u = u_bit.bit_length() - 1
            new_sub = sub | u_bit
            yield from grow(new_sub, (nbr | und[u]) & ~new_sub, allowed)

    for v in range(k):
        above = full & ~((1 << (v + 1)) - 1)
        yield from grow(1 << v, und[v] & above, above)


def _degrees_ok(sub: int, out_local: list[int], in_local: list[int]) -> bool:
    # cheap screen: strong connectivity needs in- and out-arcs at every vertex
    rem = sub
    while rem:
        b = rem & -rem
        rem ^= b
        i = b.bit_length() - 1
        if not out_local[i] & sub or not in_local[i] & sub:
            return False
    return True


def _mask_strongly_connected(
    sub: int, out_local: list[int], in_local: list[int]
) -> bool:
    start = sub & -sub
    for masks in (out_local, in_local):
        seen = start
        frontier = start
        while frontier:
            b = frontier & -frontier
            frontier ^= b
            new = masks[b.bit_length() - 1] & sub & ~seen
            seen |= new
            frontier |= new
        if seen != sub:
            return False
    return True


def _induced_rows(sub: int, out_local: list[int]) -> tuple[int, ...]:
    members = _bits(sub)
    pos = {v: i for i, v in enumerate(members)}
    rows = []
    for i in members:
        row = 0
        rem = out_local[i] & sub
        while rem:
            b = rem & -rem
            rem ^= b
            row |= 1 << pos[b.bit_length() - 1]
        rows.append(row)
    return tuple(rows)


def _transposed(rows: tuple[int, ...]) -> tuple[int, ...]:
    t = [0] * len(rows)
    for i, r in enumerate(rows):
        rem = r
        while rem:
            b = rem & -rem
            rem ^= b
            t[b.bit_length() - 1] |= 1 << i
    return tuple(t)


def _cached_radius(
    rows: tuple[int, ...], tol: float, cache: dict
) -> RadiusEstimate:
    # a matrix and its transpose share their radius; normalize the key
    key = (min(rows, _transposed(rows)), tol)
    est = cache.get(key)
    if est is None:
        est = radius_of_masks(list(key[0]), tol=tol)[0]
        cache[key] = est
    return est


def _component_subsets(
    d: Digraph, verts: list[int]
) -> Iterator[tuple[int, list[int], tuple[int, ...]]]:
    """Strongly connected subsets of one component: (mask, out_local, rows)."""
    k = len(verts)
    index = {v: i for i, v in enumerate(verts)}
    out_local = [0] * k
    in_local = [0] * k
    for i, v in enumerate(verts):
        for w in d.out_adj[v]:
            j = index.get(w)
            if j is not None:
                out_local[i] |= 1 << j
                in_local[j] |= 1 << i
    und = [out_local[i] | in_local[i] for i in range(k)]
    for sub in _connected_masks(und):
        if sub.bit_count() < 2:
            continue
        if not _degrees_ok(sub, out_local, in_local):
            continue
        if not _mask_strongly_connected(sub, out_local, in_local):
            continue
        yield sub, out_local, _induced_rows(sub, out_local)


def complementarity_spectrum(
    d: Digraph,
    tol: float = DEFAULT_RADIUS_TOL,
    merge_tol: float = DEFAULT_MERGE_TOL,
    max_scc: int = DEFAULT_MAX_SCC,
    cache: dict | None = None,
) -> CompSpectrum:
    """Certified complementarity spectrum of d.

    Every strongly connected component is scanned with a connected-subset
    enumeration; each strongly connected subset contributes its certified
    spectral radius. Values whose certified intervals come within merge_tol
    of each other are merged, keeping the lexicographically smallest witness.
    `cache` (optional dict) carries radius certifications across calls.
    """
    if cache is None:
        cache = {}
    entries: list[tuple[RadiusEstimate, tuple[int, ...]]] = []
    entries.append((EXACT_ZERO, (0,) if d.n else ()))
    for comp in decompose(d).components:
        if len(comp) < 2:
            continue
        if len(comp) > max_scc:
            raise SizeLimitExceeded(
                f"strongly connected component has {len(comp)} vertices,"
                f" cap is {max_scc}"
            )
        verts = sorted(comp)
        for sub, _, rows in _component_subsets(d, verts):
            est = _cached_radius(rows, tol, cache)
            witness = tuple(verts[i] for i in _bits(sub))
            entries.append((est, witness))
    values, witnesses = _merge(entries, merge_tol)
    return CompSpectrum(
        values=values, witnesses=witnesses, merge_tol=merge_tol, radius_tol=tol
    )


def _merge(
    entries: list[tuple[RadiusEstimate, tuple[int, ...]]], merge_tol: float
) -> tuple[tuple[RadiusEstimate, ...], tuple[tuple[int, ...], ...]]:
    entries.sort(key=lambda e: (e[0].value, e[1]))
    clusters: list[list] = []  # [hull_lo, hull_hi, best_est, best_witness]
    for est, wit in entries:
        if clusters and est.lower <= clusters[-1][1] + merge_tol:
            c = clusters[-1]
            c[0] = min(c[0], est.lower)
            c[1] = max(c[1], est.upper)
            if wit < c[3]:
                c[2], c[3] = est, wit
        else:
            clusters.append([est.lower, est.upper, est, wit])
    values = tuple(
        RadiusEstimate(
            lower=lo, upper=hi, value=best.value, iterations=best.iterations
        )
        for lo, hi, best, _ in clusters
    )
    witnesses = tuple(c[3] for c in clusters)
    return values, witnesses


def classify_cardinality(d: Digraph) -> CardinalityClass:
    """Spectrum cardinality from component structure, with no enumeration.

    One iff acyclic; Two iff there is a cycle and every strongly connected
    component is a single vertex or a directed cycle; ThreePlus otherwise,
    since a strongly connected non-cycle component has radius above 1 and
    also contains a cycle, giving values 0, 1 and the component's radius.
    """
    if is_acyclic(d):
        return CardinalityClass(
            tag="One", reason="acyclic: 0 is the only spectrum value"
        )
    for comp in decompose(d).components:
        if len(comp) >= 2 and not _is_cycle_component(d, comp):
            vs = tuple(sorted(comp))
            return CardinalityClass(
                tag="ThreePlus",
                reason=(
                    f"strongly connected component {vs} is not a directed"
                    " cycle, so its radius is a value above 1"
                ),
            )
    return CardinalityClass(
        tag="Two",
        reason=(
            "has a cycle and every strongly connected component is a single"
            " vertex or a directed cycle"
        ),
    )


def _is_cycle_component(d: Digraph, comp: tuple[int, ...]) -> bool:
    cs = set(comp)
    for v in comp:
        if sum(1 for w in d.out_adj[v] if w in cs) != 1:
            return False
        if sum(1 for w in d.in_adj[v] if w in cs) != 1:
            return False
    return True


def contains_cycle(d: Digraph) -> bool:
    """True iff d has a directed cycle, equivalently iff 1 is in its spectrum."""
    return not is_acyclic(d)


def spectra_equal(a: CompSpectrum, b: CompSpectrum, tol: float = 1e-9) -> bool:
    """True iff both spectra have the same values up to tol.

    Requires both inputs certified at radius tolerance at most tol/4 so the
    interval comparison is meaningful.
    """
    if a.radius_tol > tol / 4 or b.radius_tol > tol / 4:
        raise IncomparableTolerances(
            f"comparison at tol={tol} needs radius tolerance <= {tol / 4},"
            f" got {a.radius_tol} and {b.radius_tol}"
        )
    if len(a.values) != len(b.values):
        return False
    for x, y in zip(a.values, b.values):
        gap = max(x.lower, y.lower) - min(x.upper, y.upper)
        if gap > tol:
            return False
    return True


# pattern-keyed radius+vector memo; repeated probes of one digraph dominate
_EICP_CACHE: dict[tuple[int, ...], tuple[RadiusEstimate, np.ndarray]] = {}


def _radius_with_vector(
    rows: tuple[int, ...]
) -> tuple[RadiusEstimate, np.ndarray]:
    hit = _EICP_CACHE.get(rows)
    if hit is None:
        est, vec = radius_of_masks(list(rows), tol=DEFAULT_RADIUS_TOL)
        hit = (est, np.array(vec))
        _EICP_CACHE[rows] = hit
    return hit


def verify_eicp_definition(
    d: Digraph, lam: float, tol: float = 1e-9, max_n: int = 12
) -> bool:
    """Check lam against the eigenvalue complementarity conditions directly.

    Looks for a nonzero x >= 0 with Ax >= lam*x and <x, Ax - lam*x> = 0,
    within tol. The support of such an x can be reduced to a single vertex
    (lam = 0) or to a vertex set whose induced subdigraph is strongly
    connected with spectral radius lam, so those supports are searched: the
    certified radius must cover lam, and the assembled witness must satisfy
    the slack conditions numerically.
    """
    if d.n > max_n:
        raise SizeLimitExceeded(
            f"support-set search capped at {max_n} vertices, got {d.n}"
        )
    if d.n == 0:
        return False
    if abs(lam) <= tol:
        return True  # x = e_v: Ax >= 0 and the inner product vanishes
    a = np.zeros((d.n, d.n))
    for u, v in d.arcs:
        a[u, v] = 1.0
    for comp in decompose(d).components:
        if len(comp) < 2:
            continue
        verts = sorted(comp)
        for sub, _, rows in _component_subsets(d, verts):
            est, vec = _radius_with_vector(rows)
            if not est.lower - tol <= lam <= est.upper + tol:
                continue
            members = [verts[i] for i in _bits(sub)]
            x = np.zeros(d.n)
            for idx, v in enumerate(members):
                x[v] = vec[idx]
            x /= x.max()
            w = a @ x - lam * x
            eps = d.n * (est.width + 2 * tol + 1e-11)
            off = x == 0.0
            if float(np.min(w[off], initial=0.0)) >= -eps and abs(
                float(x @ w)
            ) <= eps:
                return True
    return False
