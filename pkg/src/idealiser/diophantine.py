"""Integer points on plane curves: Pell solutions, box searches, classification.

Pell fundamentals come from the continued fraction of sqrt(n), entirely in
integer arithmetic (convergents are tested against the equation directly, no
floating point).  The curve classifier is syntactic: it recognises rational
lines, Pell conics up to variable swap / overall scale / integer translation
of the centre, graph curves a*x + r(y), and smooth projective plane curves of
degree >= 3 via the Jacobian criterion; everything else is left unclassified
rather than guessed.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .groebner import Ideal, reduced_groebner_basis
from .poly import Poly, PolyRing, mono_degree


@dataclass(frozen=True)
class PellSolution:
    n: int
    x: int
    y: int

    def __post_init__(self):
        if self.x * self.x - self.n * self.y * self.y != 1:
            raise ValueError(f"({self.x},{self.y}) does not solve x^2-{self.n}y^2=1")


def pell_fundamental(n: int) -> PellSolution:
    """Least positive solution of x^2 - n y^2 = 1 for nonsquare n >= 2."""
    if n < 2:
        raise ValueError("n must be at least 2")
    a0 = math.isqrt(n)
    if a0 * a0 == n:
        raise ValueError("n must not be a perfect square")
    # continued fraction expansion of sqrt(n); convergents h/k
    m, d, a = 0, 1, a0
    h_prev, h = 1, a0
    k_prev, k = 0, 1
    while h * h - n * k * k != 1:
        m = d * a - m
        d = (n - m * m) // d
        a = (a0 + m) // d
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
    return PellSolution(n, h, k)


def pell_enumerate(n: int, count: int) -> list[PellSolution]:
    """First ``count`` positive solutions in increasing x, each verified."""
    if count < 0:
        raise ValueError("count must be non-negative")
    out: list[PellSolution] = []
    if count == 0:
        return out
    fund = pell_fundamental(n)
    x, y = fund.x, fund.y
    out.append(fund)
    while len(out) < count:
        x, y = fund.x * x + n * fund.y * y, fund.x * y + fund.y * x
        out.append(PellSolution(n, x, y))
    return out


def lattice_points_box(
    f: Poly, offset: Sequence[Fraction], radius: int
) -> list[tuple[int, ...]]:
    """Integer vectors m with sup-norm <= radius and f(offset + m) = 0.

    Exact by construction: every candidate is evaluated.  Integer offsets and
    coefficients take a pure-int fast path; anything rational falls back to
    Fraction arithmetic.
    """
    ring = f.ring
    if len(offset) != ring.n:
        raise ValueError("offset dimension mismatch")
    offset = [Fraction(o) for o in offset]
    denom = math.lcm(*(c.denominator for c in f.terms.values())) if f.terms else 1
    integral = all(o.denominator == 1 for o in offset)
    hits = []
    if integral:
        scaled = {m: int(c * denom) for m, c in f.terms.items()}
        base = [int(o) for o in offset]
        for shift in itertools.product(*(range(-radius, radius + 1) for _ in range(ring.n))):
            point = [b + s for b, s in zip(base, shift)]
            total = 0
            for mono, c in scaled.items():
                v = c
                for p, e in zip(point, mono):
                    if e:
                        v *= p**e
                total += v
            if total == 0:
                hits.append(tuple(shift))
    else:
        for shift in itertools.product(*(range(-radius, radius + 1) for _ in range(ring.n))):
            point = [o + s for o, s in zip(offset, shift)]
            if f.eval_at(point) == 0:
                hits.append(tuple(shift))
    hits.sort()
    return hits


@dataclass(frozen=True)
class CurveClass:
    """Outcome of the syntactic plane-curve classifier."""

    tag: str  # rational_line | pell_conic | graph_curve | smooth_high_degree | unknown
    degree: int
    pell_n: int | None = None
    pell_centre: tuple[int, int] | None = None
    pell_axis: int | None = None  # index of the variable carrying the +x^2
    graph_axis: int | None = None  # index of the linear variable in a*x + r(y)
    graph_poly: Poly | None = None  # the graph function q with x_axis = q(other)
    genus: int | None = None
    jacobian_pure_powers: tuple[int, ...] | None = None  # per-variable exponents


def _try_pell(f: Poly) -> CurveClass | None:
    """Detect a*((u - c1)^2 - n*(w - c2)^2 - 1) with integer centre, n
    a positive nonsquare integer, up to swapping the two variables."""
    if f.ring.n != 2 or f.degree() != 2:
        return None
    for axis in (0, 1):
        other = 1 - axis
        sq = [0, 0]
        sq[axis] = 2
        alpha = f.coefficient(tuple(sq))
        sq_other = [0, 0]
        sq_other[other] = 2
        beta = f.coefficient(tuple(sq_other))
        if alpha == 0 or beta == 0:
            continue
        cross = [0, 0]
        cross[axis] = 1
        cross[other] = 1
        if f.coefficient(tuple(cross)) != 0:
            continue
        ratio = -beta / alpha
        if ratio.denominator != 1 or ratio <= 0:
            continue
        n = int(ratio)
        if math.isqrt(n) ** 2 == n or n < 2:
            continue
        lin_axis = [0, 0]
        lin_axis[axis] = 1
        lin_other = [0, 0]
        lin_other[other] = 1
        u = -f.coefficient(tuple(lin_axis)) / (2 * alpha)
        w = f.coefficient(tuple(lin_other)) / (2 * alpha * n)
        if u.denominator != 1 or w.denominator != 1:
            continue
        const_needed = alpha * (u * u - n * w * w - 1)
        if f.coefficient((0, 0)) != const_needed:
            continue
        return CurveClass(
            tag="pell_conic",
            degree=2,
            pell_n=n,
            pell_centre=(int(u), int(w)),
            pell_axis=axis,
        )
    return None


def _try_graph(f: Poly) -> CurveClass | None:
    """Detect a*x_i + r(x_j) with deg r >= 2."""
    if f.ring.n != 2:
        return None
    for axis in (0, 1):
        other = 1 - axis
        a = None
        rest: dict = {}
        ok = True
        for mono, c in f.terms.items():
            if mono[axis] == 1 and mono[other] == 0:
                a = c
            elif mono[axis] == 0:
                rest[mono] = c
            else:
                ok = False
                break
        if not ok or a is None:
            continue
        r = Poly(f.ring, rest)
        if r.degree_in(other) < 2:
            continue
        graph = r * (Fraction(-1) / a)
        return CurveClass(tag="graph_curve", degree=int(f.degree()), graph_axis=axis, graph_poly=graph)
    return None


def _projective_smoothness(f: Poly) -> tuple[int, ...] | None:
    """Pure-power witness exponents when the projective closure is smooth.

    Homogenise, take the Jacobian ideal of the partials, and demand that its
    basis exhibits a pure power of every projective variable: the singular
    cone is then the origin only, over any field extension.
    """
    ring = f.ring
    d = int(f.degree())
    hname = "_h"
    while hname in ring.variables:
        hname = "_" + hname
    pring = PolyRing(ring.variables + (hname,))
    F = Poly(
        pring,
        {m + (d - mono_degree(m),): c for m, c in f.terms.items()},
    )
    partials = [F.partial(i) for i in range(pring.n)]
    basis = reduced_groebner_basis(partials, pring.order)
    if basis and basis[0].is_constant():
        return None  # cannot happen for d >= 1, defensive
    powers = [0] * pring.n
    for g in basis:
        lm = g.leading()[0]
        nz = [i for i, e in enumerate(lm) if e]
        if len(nz) == 1:
            i = nz[0]
            if powers[i] == 0 or lm[i] < powers[i]:
                powers[i] = lm[i]
    if all(p > 0 for p in powers):
        return tuple(powers)
    return None


def classify_plane_curve(f: Poly) -> CurveClass:
    """Classify an (assumed irreducible) plane curve generator.

    Dispatch order matters: lines first, then Pell conics, then graph curves
    (a smooth graph like x - y^3 must land here, its closure is singular at
    infinity anyway), then the smooth high-degree branch.
    """
    if f.ring.n != 2:
        raise ValueError("classifier works on two-variable polynomials")
    if f.is_zero or f.is_constant():
        raise ValueError("classifier needs a nonconstant polynomial")
    degree = int(f.degree())
    if degree == 1:
        return CurveClass(tag="rational_line", degree=1)
    pell = _try_pell(f)
    if pell is not None:
        return pell
    graph = _try_graph(f)
    if graph is not None:
        return graph
    if degree >= 3:
        powers = _projective_smoothness(f)
        if powers is not None:
            genus = (degree - 1) * (degree - 2) // 2
            if genus >= 1:
                return CurveClass(
                    tag="smooth_high_degree",
                    degree=degree,
                    genus=genus,
                    jacobian_pure_powers=powers,
                )
    return CurveClass(tag="unknown", degree=degree)


def line_data(f: Poly) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients (a, b, c) of a line a*x + b*y + c."""
    if f.ring.n != 2 or f.degree() != 1:
        raise ValueError("not a line")
    return (f.coefficient((1, 0)), f.coefficient((0, 1)), f.coefficient((0, 0)))
