"""Parameterized digraph families and their cospectral constructions.

Labelings are frozen so canonical forms and witnesses are reproducible:

- Cycle(n): arcs i -> (i+1) mod n.
- Infinity(r, s): two directed cycles sharing hub 0; first cycle
  0 -> 1 -> ... -> r-1 -> 0, second cycle 0 -> r -> ... -> r+s-2 -> 0.
  Order r+s-1, size r+s.
- Theta(a, b, c): junctions u = 0 and v = 1; two forward u-v paths with a
  and b internal vertices (labeled 2..a+1 and a+2..a+b+1 in path order) and
  a return v-u path with c internal vertices (a+b+2..a+b+c+1). Order
  a+b+c+2, size a+b+c+3.
- InfinityHat(r, s): Infinity(r, s) plus the arc r-1 -> r (last vertex of
  the first cycle into the first internal vertex of the second). Size r+s+1.
- DJ(n, j): Cycle(n) plus the arcs 1 -> 0 and j -> j-1. Size n+2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Digraph, from_arcs
from .errors import InvalidFamilyParameters
from .spectral import Polynomial


@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class Infinity:
    r: int
    s: int


@dataclass(frozen=True)
class Theta:
    a: int
    b: int
    c: int


@dataclass(frozen=True)
class InfinityHat:
    r: int
    s: int


@dataclass(frozen=True)
class DJ:
    n: int
    j: int


FamilySpec = Cycle | Infinity | Theta | InfinityHat | DJ


def validate(spec: FamilySpec) -> None:
    """Raise InvalidFamilyParameters naming the violated constraint."""
    if isinstance(spec, Cycle):
        if spec.n < 2:
            raise InvalidFamilyParameters(f"cycle needs n >= 2, got n={spec.n}")
    elif isinstance(spec, Infinity):
        if spec.r < 2 or spec.s < 2:
            raise InvalidFamilyParameters(
                f"infinity needs r >= 2 and s >= 2, got r={spec.r}, s={spec.s}"
            )
    elif isinstance(spec, Theta):
        if spec.a < 0 or spec.c < 0:
            raise InvalidFamilyParameters(
                f"theta needs a >= 0 and c >= 0, got a={spec.a}, c={spec.c}"
            )
        if spec.b <= 0:
            # b = 0 with a = 0 would be a doubled arc, not a simple digraph
            raise InvalidFamilyParameters(f"theta needs b > 0, got b={spec.b}")
        if spec.a > spec.b:
            raise InvalidFamilyParameters(
                f"theta needs a <= b, got a={spec.a}, b={spec.b}"
            )
    elif isinstance(spec, InfinityHat):
        if spec.r < 2 or spec.s < 2:
            raise InvalidFamilyParameters(
                f"infinity-hat needs r >= 2 and s >= 2,"
                f" got r={spec.r}, s={spec.s}"
            )
    elif isinstance(spec, DJ):
        if spec.n < 4:
            raise InvalidFamilyParameters(f"dj needs n >= 4, got n={spec.n}")
        if not 2 <= spec.j <= spec.n - 1:
            raise InvalidFamilyParameters(
                f"dj needs 2 <= j <= n-1, got j={spec.j}, n={spec.n}"
            )
    else:
        raise TypeError(f"not a family spec: {spec!r}")


def order_of(spec: FamilySpec) -> int:
    """Number of vertices of the generated digraph."""
    if isinstance(spec, Cycle):
        return spec.n
    if isinstance(spec, (Infinity, InfinityHat)):
        return spec.r + spec.s - 1
    if isinstance(spec, Theta):
        return spec.a + spec.b + spec.c + 2
    return spec.n


def generate(spec: FamilySpec) -> Digraph:
    """Build the digraph for spec under the module's frozen labeling."""
    validate(spec)
    if isinstance(spec, Cycle):
        n = spec.n
        return from_arcs(n, [(i, (i + 1) % n) for i in range(n)])
    if isinstance(spec, (Infinity, InfinityHat)):
        r, s = spec.r, spec.s
        arcs = [(i, i + 1) for i in range(r - 1)] + [(r - 1, 0)]
        arcs += [(0, r)] + [(r + i, r + i + 1) for i in range(s - 2)]
        arcs += [(r + s - 2, 0)]
        if isinstance(spec, InfinityHat):
            arcs.append((r - 1, r))
        return from_arcs(r + s - 1, arcs)
    if isinstance(spec, Theta):
        a, b, c = spec.a, spec.b, spec.c
        arcs = _path_arcs(0, 1, range(2, a + 2))
        arcs += _path_arcs(0, 1, range(a + 2, a + b + 2))
        arcs += _path_arcs(1, 0, range(a + b + 2, a + b + c + 2))
        return from_arcs(a + b + c + 2, arcs)
    n, j = spec.n, spec.j
    arcs = [(i, (i + 1) % n) for i in range(n)] + [(1, 0), (j, j - 1)]
    return from_arcs(n, arcs)


def _path_arcs(tail: int, head: int, internals: range) -> list[tuple[int, int]]:
    verts = [tail, *internals, head]
    return [(verts[i], verts[i + 1]) for i in range(len(verts) - 1)]


def closed_form_charpoly(spec: FamilySpec) -> Polynomial:
    """The family's closed-form characteristic polynomial.

    For DJ this is the j-independent formula x^n - 2x^(n-2) + x^(n-4) - 1;
    the generated DJ digraph matches it for j >= 3 but not for j = 2, where
    the two added 2-cycles share a vertex and the actual polynomial is
    x^n - 2x^(n-2) - 1.
    """
    validate(spec)
    mono = Polynomial.monomial
    if isinstance(spec, Cycle):
        return mono(spec.n) - mono(0)
    if isinstance(spec, Infinity):
        n = spec.r + spec.s - 1
        return mono(n) - mono(n - spec.r) - mono(n - spec.s)
    if isinstance(spec, Theta):
        n = spec.a + spec.b + spec.c + 2
        return mono(n) - mono(spec.b) - mono(spec.a)
    if isinstance(spec, InfinityHat):
        n = spec.r + spec.s - 1
        return mono(n) - mono(n - spec.r) - mono(n - spec.s) - mono(0)
    n = spec.n
    return mono(n) - mono(n - 2) - mono(n - 2) + mono(n - 4) - mono(0)


def infinity_for_theta(a: int, b: int, c: int) -> Infinity:
    """The infinity digraph sharing Theta(a, b, c)'s complementarity spectrum.

    The theta polynomial times x^(1+c) equals the infinity polynomial with
    r = a+c+2 and s = b+c+2, so the largest roots agree and both spectra are
    {0, 1, that root}.
    """
    validate(Theta(a, b, c))
    return Infinity(a + c + 2, b + c + 2)


def thetas_for_infinity(r: int, s: int) -> list[Theta]:
    """The r-1 theta specs sharing Infinity(r, s)'s spectrum, for 2 <= r <= s.

    The i-th spec (i = 1..r-1) is Theta(r-i-1, s-i-1, i-1). When r = s the
    last spec has b = 0; it is returned symbolically and rejected by
    generate(), surfacing the boundary case instead of dropping it.
    """
    if not 2 <= r <= s:
        raise InvalidFamilyParameters(
            f"needs 2 <= r <= s, got r={r}, s={s}"
        )
    return [Theta(r - i - 1, s - i - 1, i - 1) for i in range(1, r)]


def prop12_pair(r: int) -> tuple[Infinity, Infinity]:
    """The cospectral pair Infinity(r, 5r) and Infinity(2r, 3r), r >= 2.

    Their polynomials are tied by the exact identity
    x^r * P(r, 5r) = (x^(2r) - x^r + 1) * P(2r, 3r), so the largest roots
    coincide and the spectra are both {0, 1, that root}.
    """
    if r < 2:
        raise InvalidFamilyParameters(f"needs r >= 2, got r={r}")
    return Infinity(r, 5 * r), Infinity(2 * r, 3 * r)


def notdcs_pairs(kind: str, **params: int) -> list[Digraph]:
    """Same-order, same-size digraph lists used as cospectral-mate candidates.

    kind "InfinityHat" with r, s (2 <= r < s): the two hat digraphs with the
    cycle lengths swapped. kind "DJ" with n (>= 4): D(j) for every j in
    2..n-1.
    """
    if kind == "InfinityHat":
        r, s = params["r"], params["s"]
        if not 2 <= r < s:
            raise InvalidFamilyParameters(
                f"needs 2 <= r < s for a non-isomorphic pair, got r={r}, s={s}"
            )
        return [generate(InfinityHat(r, s)), generate(InfinityHat(s, r))]
    if kind == "DJ":
        n = params["n"]
        if n < 4:
            raise InvalidFamilyParameters(f"needs n >= 4, got n={n}")
        return [generate(DJ(n, j)) for j in range(2, n)]
    raise InvalidFamilyParameters(
        f"kind must be 'InfinityHat' or 'DJ', got {kind!r}"
    )


_PARSE_TABLE: dict[str, tuple[type, int]] = {
    "cycle": (Cycle, 1),
    "inf": (Infinity, 2),
    "theta": (Theta, 3),
    "infhat": (InfinityHat, 2),
    "dj": (DJ, 2),
}


def parse_spec(text: str) -> FamilySpec:
    """Parse 'cycle:n', 'inf:r,s', 'theta:a,b,c', 'infhat:r,s' or 'dj:n,j'.

    Raises ValueError on malformed text; parameter constraints are checked
    later by generate()/closed_form_charpoly(), not here.
    """
    name, sep, rest = text.partition(":")
    if not sep or name not in _PARSE_TABLE:
        raise ValueError(f"not a family spec: {text!r}")
    cls, arity = _PARSE_TABLE[name]
    parts = rest.split(",")
    if len(parts) != arity:
        raise ValueError(
            f"{name} takes {arity} integer parameter(s), got {rest!r}"
        )
    try:
        args = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"non-integer parameter in {text!r}") from None
    return cls(*args)


def spec_prefixes() -> tuple[str, ...]:
    """Family-name prefixes recognized by parse_spec."""
    return tuple(_PARSE_TABLE)
