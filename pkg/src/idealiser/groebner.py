"""Buchberger-based Groebner calculus over Q.

The engine is deliberately small: sugar-ordered pair queue, product and chain
criteria, full normal forms, canonical reduced bases (monic, inter-reduced,
sorted by leading monomial).  Every run is capped by a processed-pair budget
so runaway eliminations fail loudly instead of hanging.

Ideal-level operations (sum, product, intersection via an elimination block
order, colon quotient, equality, containment, dimension probes) all reduce to
the same basis machinery.
"""

from __future__ import annotations

import heapq
import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .poly import (
    MonomialOrder,
    Poly,
    PolyRing,
    _ElimOrder,
    mono_degree,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

DEFAULT_PAIR_LIMIT = 100_000


class ResourceLimitError(RuntimeError):
    """Raised when a basis computation exceeds its pair budget."""


def effective_pair_limit(value: int | None = None) -> int:
    if value is not None:
        return value
    env = os.environ.get("IDEALISER_PAIR_LIMIT")
    if env:
        return int(env)
    return DEFAULT_PAIR_LIMIT


def _prepare(basis: Sequence[Poly], order) -> list[tuple[tuple[int, ...], Fraction, dict]]:
    prepared = []
    for g in basis:
        if g.is_zero:
            continue
        lm, lc = g.leading(order)
        prepared.append((lm, lc, g.terms))
    return prepared


def _nf_terms(terms: dict, prepared, order) -> dict:
    work = dict(terms)
    out: dict = {}
    key = order.key
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for lm, lc, gterms in prepared:
            if mono_divides(lm, m):
                factor = c / lc
                q = mono_div(m, lm)
                for gm, gc in gterms.items():
                    if gm == lm:
                        continue
                    tm = mono_mul(q, gm)
                    s = work.get(tm, Fraction(0)) - factor * gc
                    if s:
                        work[tm] = s
                    else:
                        work.pop(tm, None)
                break
        else:
            out[m] = c
    return out


def normal_form(f: Poly, basis: Sequence[Poly], order=None) -> Poly:
    """Full remainder of f on division by ``basis``."""
    if order is None:
        order = f.ring.order
    prepared = _prepare(basis, order)
    if not prepared:
        return f
    return Poly(f.ring, _nf_terms(f.terms, prepared, order))


def s_polynomial(f: Poly, g: Poly, order=None) -> Poly:
    if order is None:
        order = f.ring.order
    lmf, lcf = f.leading(order)
    lmg, lcg = g.leading(order)
    lcm = mono_lcm(lmf, lmg)
    mf = Poly(f.ring, {mono_div(lcm, lmf): 1 / lcf})
    mg = Poly(g.ring, {mono_div(lcm, lmg): 1 / lcg})
    return mf * f - mg * g


def buchberger(gens: Sequence[Poly], order, pair_limit: int | None = None) -> list[Poly]:
    limit = effective_pair_limit(pair_limit)
    G: list[Poly] = []
    sugars: list[int] = []
    lms: list[tuple[int, ...]] = []
    for g in gens:
        if g.is_zero:
            continue
        g = g.monic(order)
        G.append(g)
        sugars.append(int(g.degree()))
        lms.append(g.leading(order)[0])

    queue: list = []

    def push_pairs(j: int) -> None:
        for i in range(j):
            lcm = mono_lcm(lms[i], lms[j])
            sugar = mono_degree(lcm) + max(
                sugars[i] - mono_degree(lms[i]), sugars[j] - mono_degree(lms[j])
            )
            heapq.heappush(queue, (sugar, order.key(lcm), i, j))

    for j in range(1, len(G)):
        push_pairs(j)

    resolved: set[tuple[int, int]] = set()
    processed = 0
    while queue:
        processed += 1
        if processed > limit:
            raise ResourceLimitError(f"pair budget exceeded ({limit} processed pairs)")
        sugar, _, i, j = heapq.heappop(queue)
        resolved.add((i, j))
        lcm = mono_lcm(lms[i], lms[j])
        # product criterion: coprime leading monomials never yield new elements
        if lcm == mono_mul(lms[i], lms[j]):
            continue
        # chain criterion, justified only by pairs resolved strictly earlier
        skipped = False
        for k in range(len(G)):
            if k == i or k == j:
                continue
            if (
                mono_divides(lms[k], lcm)
                and (min(i, k), max(i, k)) in resolved
                and (min(j, k), max(j, k)) in resolved
            ):
                skipped = True
                break
        if skipped:
            continue
        s = s_polynomial(G[i], G[j], order)
        r = normal_form(s, G, order)
        if r.is_zero:
            continue
        r = r.monic(order)
        G.append(r)
        sugars.append(max(sugar, int(r.degree())))
        lms.append(r.leading(order)[0])
        push_pairs(len(G) - 1)
    return G


def reduced_groebner_basis(
    gens: Sequence[Poly], order, pair_limit: int | None = None
) -> tuple[Poly, ...]:
    """Canonical reduced basis: minimal, monic, fully inter-reduced, sorted."""
    G = buchberger(gens, order, pair_limit)
    if not G:
        return ()
    # minimalise: ascending sweep keeps only elements with undominated lm
    G_sorted = sorted(G, key=lambda g: order.key(g.leading(order)[0]))
    minimal: list[Poly] = []
    for g in G_sorted:
        lm = g.leading(order)[0]
        if not any(mono_divides(h.leading(order)[0], lm) for h in minimal):
            minimal.append(g)
    # a single full-reduction pass leaves every monomial irreducible
    reduced: list[Poly] = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        reduced.append(normal_form(g, others, order).monic(order))
    reduced.sort(key=lambda g: order.key(g.leading(order)[0]), reverse=True)
    return tuple(reduced)


def exact_divide(g: Poly, f: Poly) -> Poly:
    """Quotient g/f for g in the principal ideal of f; errors otherwise."""
    if f.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    order = g.ring.order
    lmf, lcf = f.leading(order)
    quotient = g.ring.zero()
    work = g
    while not work.is_zero:
        m, c = work.leading(order)
        if not mono_divides(lmf, m):
            raise ValueError("polynomial is not divisible")
        t = Poly(g.ring, {mono_div(m, lmf): c / lcf})
        quotient = quotient + t
        work = work - t * f
    return quotient


class Ideal:
    """Finitely generated ideal of a polynomial ring with optional flags.

    ``claimed_prime``/``claimed_maximal`` are caller assertions; cheap checks
    accept a maximality claim automatically when the quotient has dimension 1
    over Q.  Reduced bases are cached per monomial order.
    """

    __slots__ = ("ring", "gens", "claimed_prime", "claimed_maximal", "_gb")

    def __init__(
        self,
        ring: PolyRing,
        gens: Iterable[Poly],
        claimed_prime: bool = False,
        claimed_maximal: bool = False,
    ):
        kept = []
        for g in gens:
            if not isinstance(g, Poly) or g.ring != ring:
                raise ValueError("generator from the wrong ring")
            if not g.is_zero:
                kept.append(g)
        self.ring = ring
        self.gens = tuple(kept)
        self.claimed_prime = bool(claimed_prime)
        self.claimed_maximal = bool(claimed_maximal)
        self._gb: dict = {}

    def __repr__(self) -> str:
        return "Ideal<" + ", ".join(str(g) for g in self.gens) + ">"

    def groebner_basis(
        self, order: MonomialOrder | None = None, pair_limit: int | None = None
    ) -> tuple[Poly, ...]:
        if order is None:
            order = self.ring.order
        cache_key = (order.kind, order.perm)
        if cache_key not in self._gb:
            self._gb[cache_key] = reduced_groebner_basis(self.gens, order, pair_limit)
        return self._gb[cache_key]

    def normal_form(self, f: Poly, order: MonomialOrder | None = None) -> Poly:
        if order is None:
            order = self.ring.order
        return normal_form(f, self.groebner_basis(order), order)

    def contains_poly(self, f: Poly) -> bool:
        return self.normal_form(f).is_zero

    def is_zero_ideal(self) -> bool:
        return not self.groebner_basis()

    def is_unit_ideal(self) -> bool:
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].is_constant()

    def is_principal(self) -> bool:
        return len(self.groebner_basis()) == 1

    def seed_basis_cache(self, basis: tuple[Poly, ...]) -> None:
        self._gb[(self.ring.order.kind, self.ring.order.perm)] = basis


def unit_ideal(ring: PolyRing) -> Ideal:
    return Ideal(ring, [ring.one()])


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    return Ideal(I.ring, I.gens + J.gens)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    return Ideal(I.ring, [f * g for f in I.gens for g in J.gens])


def _fresh_aux_name(ring: PolyRing) -> str:
    name = "_t"
    while name in ring.variables:
        name = "_" + name
    return name


def ideal_intersect(I: Ideal, J: Ideal, pair_limit: int | None = None) -> Ideal:
    """I cap J via the auxiliary variable t: eliminate t from t*I + (1-t)*J."""
    ring = I.ring
    if not I.gens or not J.gens:
        return Ideal(ring, [])
    aux = _fresh_aux_name(ring)
    ext = PolyRing((aux,) + ring.variables)
    t = ext.var(0)

    def lift(p: Poly) -> Poly:
        return Poly(ext, {(0,) + m: c for m, c in p.terms.items()})

    raw = [t * lift(f) for f in I.gens] + [(ext.one() - t) * lift(g) for g in J.gens]
    elim = _ElimOrder(1, ring.order)
    basis = reduced_groebner_basis(raw, elim, pair_limit)
    down = []
    for p in basis:
        if all(m[0] == 0 for m in p.terms):
            down.append(Poly(ring, {m[1:]: c for m, c in p.terms.items()}))
    result = Ideal(ring, down)
    # the t-free block of an elimination basis is already a reduced basis
    result.seed_basis_cache(
        tuple(sorted(down, key=lambda g: ring.order.key(g.leading()[0]), reverse=True))
    )
    return result


def ideal_quotient(J: Ideal, I: Ideal, pair_limit: int | None = None) -> Ideal:
    """Colon quotient (J : I) = {c | c*I subset of J}."""
    ring = J.ring
    if not I.gens:
        return unit_ideal(ring)
    result: Ideal | None = None
    for f in I.gens:
        meet = ideal_intersect(Ideal(ring, [f]), J, pair_limit)
        colon_f = Ideal(ring, [exact_divide(g, f) for g in meet.gens])
        result = colon_f if result is None else ideal_intersect(result, colon_f, pair_limit)
    return result


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    return I.groebner_basis() == J.groebner_basis()


def ideal_contains(I: Ideal, J: Ideal) -> bool:
    """True when J is a subset of I: every generator of J reduces to 0 mod I."""
    return all(I.contains_poly(g) for g in J.gens)


def _monomials_up_to(n: int, bound: int):
    for total in range(bound + 1):
        for cuts in itertools.combinations(range(total + n - 1), n - 1):
            exps = []
            prev = -1
            for c in cuts:
                exps.append(c - prev - 1)
                prev = c
            exps.append(total + n - 2 - prev)
            yield tuple(exps)


@dataclass(frozen=True)
class DimensionProbe:
    """Counting report for C/I: cumulative dims by degree, finiteness flag."""

    cumulative: tuple[int, ...]
    zero_dimensional: bool
    total_dimension: int | None


def dimension_probe(I: Ideal, bound: int = 8) -> DimensionProbe:
    ring = I.ring
    gb = I.groebner_basis()
    if gb and gb[0].is_constant():
        return DimensionProbe(tuple(0 for _ in range(bound + 1)), True, 0)
    lms = [g.leading()[0] for g in gb]

    def standard(m) -> bool:
        return not any(mono_divides(lm, m) for lm in lms)

    counts = [0] * (bound + 1)
    for m in _monomials_up_to(ring.n, bound):
        if standard(m):
            counts[mono_degree(m)] += 1
    cumulative = tuple(itertools.accumulate(counts))

    pure_powers: dict[int, int] = {}
    for lm in lms:
        nz = [i for i, e in enumerate(lm) if e]
        if len(nz) == 1:
            i = nz[0]
            pure_powers[i] = min(pure_powers.get(i, lm[i]), lm[i])
    zero_dim = len(pure_powers) == ring.n
    total = None
    if zero_dim:
        reach = sum(p - 1 for p in pure_powers.values())
        total = sum(1 for m in _monomials_up_to(ring.n, reach) if standard(m))
    return DimensionProbe(cumulative, zero_dim, total)


def is_maximal_effective(I: Ideal) -> bool:
    """Caller flag, or the cheap certificate: residue dimension 1 over Q."""
    if I.claimed_maximal:
        return True
    probe = dimension_probe(I, bound=1)
    return probe.zero_dimensional and probe.total_dimension == 1


def rational_point_of(I: Ideal) -> tuple[Fraction, ...] | None:
    """The unique rational point of a residue-dimension-1 ideal, else None."""
    probe = dimension_probe(I, bound=1)
    if not (probe.zero_dimensional and probe.total_dimension == 1):
        return None
    coords = []
    for i in range(I.ring.n):
        nf = I.normal_form(I.ring.var(i))
        if not nf.is_constant():
            return None
        coords.append(nf.constant_value())
    return tuple(coords)
