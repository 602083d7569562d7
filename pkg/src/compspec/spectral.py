"""Exact characteristic polynomials and certified spectral radii.

Two independent routes to the same number, by design:

* spectral_radius: floating-point power iteration on A + I with ratio bounds
  that remain mathematically valid (min/max of (Mx)_i / x_i bracket the
  dominant eigenvalue for any positive x; float rounding is absorbed by an
  a-priori widening factor).
* char_poly_exact + largest_real_root: division-free integer characteristic
  polynomial, then Sturm-chain bisection with exact rational arithmetic.

Polynomials store exact integer coefficients in ascending order (index i is
the coefficient of x^i).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .digraph import Digraph
from .errors import NoRealRootAtOrAboveZero, NonConvergence, NotStronglyConnected
from .scc import is_strongly_connected


@dataclass(frozen=True)
class Polynomial:
    """Integer-coefficient polynomial, coefficients ascending, no leading zeros."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Sequence[int]):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, x: int | Fraction | float) -> Fraction:
        return eval_poly(self, x)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not self.coeffs or not other.coeffs:
            return Polynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + Polynomial(tuple(-c for c in other.coeffs))

    def shifted(self, k: int) -> "Polynomial":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return Polynomial((0,) * k + self.coeffs)

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def to_json_dict(self) -> dict:
        """JSON form with exact decimal integer strings."""
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Polynomial":
        return cls([int(c) for c in data["coeffs"]])

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> "Polynomial":
        return cls((0,) * k + (coeff,))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            term = (
                f"{abs(c)}" if i == 0
                else ("x" if abs(c) == 1 else f"{abs(c)}x") + (f"^{i}" if i > 1 else "")
            )
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append((" + " if c > 0 else " - ") + term)
        return "".join(parts)


@dataclass(frozen=True)
class RadiusEstimate:
    """A certified bracket [lower, upper] around a real value."""

    lower: float
    upper: float
    value: float
    iterations: int

    @property
    def width(self) -> float:
        return self.upper - self.lower


EXACT_ZERO = RadiusEstimate(0.0, 0.0, 0.0, 0)


def eval_poly(p: Polynomial, x: int | Fraction | float) -> Fraction:
    """Exact Horner evaluation; floats are converted to their exact value."""
    acc = Fraction(0)
    xf = Fraction(x)
    for c in reversed(p.coeffs):
        acc = acc * xf + c
    return acc


def char_poly_exact(d: Digraph) -> Polynomial:
    """Characteristic polynomial det(xI - A) by the Berkowitz method.

    Division-free exact integer arithmetic; monic by construction.
    """
    n = d.n
    a = [[1 if d.out_mask[i] >> j & 1 else 0 for j in range(n)] for i in range(n)]
    poly = [1]  # descending coefficients of det(xI - M) for the empty corner
    for k in range(n):
        row = a[k][:k]
        col = [a[j][k] for j in range(k)]
        toeplitz = [1, -a[k][k]]
        if k:
            vec = col[:]
            toeplitz.append(-sum(r * c for r, c in zip(row, vec)))
            for _ in range(1, k):
                vec = [sum(a[i][j] * vec[j] for j in range(k)) for i in range(k)]
                toeplitz.append(-sum(r * c for r, c in zip(row, vec)))
        nxt = [0] * (k + 2)
        for i in range(k + 2):
            acc = 0
            lo = max(0, i - len(toeplitz) + 1)
            for j in range(lo, min(i, k) + 1):
                acc += toeplitz[i - j] * poly[j]
            nxt[i] = acc
        poly = nxt
    return Polynomial(tuple(reversed(poly)))


# --- certified power iteration ---------------------------------------------


def radius_of_masks(
    rows: Sequence[int], tol: float = 1e-12, max_iter: int = 100_000
) -> tuple[RadiusEstimate, tuple[float, ...]]:
    """Low-level radius kernel on adjacency bitmask rows.

    Assumes the digraph described by `rows` is strongly connected (callers
    validate). Returns the certified estimate and the final positive iterate,
    normalized to max 1 (an approximate dominant eigenvector).

    The ratio bounds min_i (Mx)_i/x_i <= rho(M) <= max_i (Mx)_i/x_i hold for
    M = A + I and any positive x; they are widened by (n+2)*2^-53 relatively
    plus one ulp per side after the shift subtraction, so float rounding
    cannot invalidate them.
    """
    k = len(rows)
    if k == 1:
        return EXACT_ZERO, (1.0,)
    m = np.zeros((k, k))
    for i, bits in enumerate(rows):
        for j in range(k):
            if bits >> j & 1:
                m[i, j] = 1.0
        m[i, i] = 1.0
    slack = (k + 2) * 2.0**-53
    x = np.ones(k)
    lo_best = 1.0  # rho >= 1: any strongly connected digraph on >= 2 vertices has a cycle
    hi_best = math.inf
    warmed = False
    for it in range(1, max_iter + 1):
        y = m @ x
        r = y / x
        lo = math.nextafter(float(r.min()) * (1.0 - slack) - 1.0, -math.inf)
        hi = math.nextafter(float(r.max()) * (1.0 + slack) - 1.0, math.inf)
        if lo > lo_best:
            lo_best = lo
        if hi < hi_best:
            hi_best = hi
        if hi_best - lo_best <= tol:
            xs = y / y.max()
            est = RadiusEstimate(lo_best, hi_best, 0.5 * (lo_best + hi_best), it)
            return est, tuple(float(v) for v in xs)
        if not warmed:
            warmed = True
            try:
                w, vecs = np.linalg.eig(m)
                v = np.abs(vecs[:, int(np.argmax(w.real))])
                v = np.maximum(v, v.max() * 1e-12)
                x = v / v.max()
                continue
            except np.linalg.LinAlgError:
                pass
        x = y / y.max()
    raise NonConvergence(
        f"power iteration did not reach tolerance {tol} in {max_iter} iterations"
    )


def spectral_radius(
    d: Digraph, tol: float = 1e-12, max_iter: int = 100_000
) -> RadiusEstimate:
    """Certified spectral radius of a strongly connected (or edgeless) digraph.

    Returns exact zero bounds for a single vertex or an edgeless digraph;
    raises NotStronglyConnected otherwise when the digraph is not strongly
    connected.
    """
    if d.arc_count == 0:
        return EXACT_ZERO
    if not is_strongly_connected(d):
        raise NotStronglyConnected(
            "spectral_radius needs a strongly connected or edgeless digraph"
        )
    est, _ = radius_of_masks(d.out_mask, tol=tol, max_iter=max_iter)
    return est


# --- exact largest real root ------------------------------------------------


def _fractions(coeffs: Sequence[int | Fraction]) -> list[Fraction]:
    return [Fraction(c) for c in coeffs]


def _poly_eval_frac(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _poly_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Remainder of a by b over the rationals (b nonzero)."""
    r = a[:]
    db = len(b) - 1
    lead = b[-1]
    while len(r) - 1 >= db and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
        q = r[-1] / lead
        shift = len(r) - 1 - db
        for i, c in enumerate(b):
            r[shift + i] -= q * c
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return r


def _primitive(coeffs: list[Fraction]) -> list[int]:
    """Scale by a positive rational to primitive integer coefficients."""
    if not coeffs:
        return []
    denom = math.lcm(*(c.denominator for c in coeffs))
    ints = [int(c * denom) for c in coeffs]
    g = math.gcd(*(abs(c) for c in ints))
    return [c // g for c in ints]


def _square_free_part(coeffs: list[int]) -> list[int]:
    """p / gcd(p, p'), primitive with the sign of the leading coefficient kept."""
    a = _fractions(coeffs)
    b = _fractions([i * c for i, c in enumerate(coeffs) if i])
    while b:
        a, b = b, _poly_rem(a, b)
    g = _primitive(a)
    if len(g) == 1:
        return list(coeffs)
    # exact division p // g over the rationals
    num = _fractions(coeffs)
    q: list[Fraction] = [Fraction(0)] * (len(num) - len(g) + 1)
    lead = Fraction(g[-1])
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(g) - 1] / lead
        q[i] = c
        for j, gc in enumerate(g):
            num[i + j] -= c * gc
    out = _primitive(q)
    if out and coeffs[-1] * out[-1] < 0:
        out = [-c for c in out]
    return out


def _sturm_chain(coeffs: list[int]) -> list[list[int]]:
    chain = [list(coeffs)]
    deriv = [i * c for i, c in enumerate(coeffs) if i]
    if deriv:
        chain.append(deriv)
    while len(chain[-1]) > 1:
        rem = _poly_rem(_fractions(chain[-2]), _fractions(chain[-1]))
        if not rem:
            break
        chain.append([-c for c in _primitive(rem)])
    return chain


def _variations(chain: list[list[int]], x: Fraction) -> int:
    signs = []
    for poly in chain:
        v = _poly_eval_frac(_fractions(poly), x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _deflate(coeffs: list[int], root: Fraction) -> list[int]:
    """Exact synthetic division by (x - root); the division must be exact."""
    out: list[Fraction] = []
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * root + c
        out.append(acc)
    assert out[-1] == 0, "deflation at a non-root"
    out.pop()
    quotient = list(reversed([Fraction(c) for c in out]))
    return _primitive(quotient) if quotient else []


def largest_real_root(p: Polynomial, tol: float = 1e-12) -> RadiusEstimate:
    """Certified bracket on the largest real root of p, which must be >= 0.

    Exact arithmetic throughout: the chain of sign-variation counts (Sturm)
    localizes the largest root; bisection uses dyadic midpoints so rational
    evaluation stays cheap. Raises NoRealRootAtOrAboveZero when every real
    root is negative or none exists.
    """
    coeffs = list(p.coeffs)
    if not coeffs:
        raise NoRealRootAtOrAboveZero("the zero polynomial has no defined root")
    zero_root = False
    while coeffs[0] == 0:
        zero_root = True
        coeffs.pop(0)
        if len(coeffs) == 1:
            return EXACT_ZERO
    if len(coeffs) == 1:
        if zero_root:
            return EXACT_ZERO
        raise NoRealRootAtOrAboveZero("constant polynomial has no root")

    bound = 1 + max(-(-abs(c) // abs(coeffs[-1])) for c in coeffs[:-1])
    sf = _square_free_part(coeffs)
    chain = _sturm_chain(sf)
    hi = Fraction(bound)
    lo = Fraction(0)
    v_hi = _variations(chain, hi)
    if _variations(chain, lo) - v_hi == 0:
        if zero_root:
            return EXACT_ZERO
        raise NoRealRootAtOrAboveZero(f"no real root in (0, {bound}]")

    tol_frac = Fraction(tol)
    steps = 0
    while hi - lo > tol_frac:
        steps += 1
        mid = (lo + hi) / 2
        if _poly_eval_frac(_fractions(sf), mid) == 0:
            above = _deflate(sf, mid)
            chain_above = _sturm_chain(above)
            if _variations(chain_above, mid) - _variations(chain_above, hi) > 0:
                sf = above
                chain = chain_above
                lo = mid
                v_hi = _variations(chain, hi)
            else:
                val = float(mid)
                lo_f = val if Fraction(val) <= mid else math.nextafter(val, -math.inf)
                hi_f = val if Fraction(val) >= mid else math.nextafter(val, math.inf)
                return RadiusEstimate(lo_f, hi_f, val, steps)
        elif _variations(chain, mid) - v_hi > 0:
            lo = mid
        else:
            hi = mid
    lo_f = float(lo)
    if Fraction(lo_f) > lo:
        lo_f = math.nextafter(lo_f, -math.inf)
    hi_f = float(hi)
    if Fraction(hi_f) < hi:
        hi_f = math.nextafter(hi_f, math.inf)
    return RadiusEstimate(lo_f, hi_f, 0.5 * (lo_f + hi_f), steps)
