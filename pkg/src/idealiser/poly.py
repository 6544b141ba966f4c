"""Sparse multivariate polynomials over Q with exact rational coefficients.

A polynomial is a map from exponent tuples to nonzero Fractions.  The ring
fixes the variable names and a monomial order; every stored polynomial keeps
its term dict in descending order of that order, so iteration, printing and
leading-term extraction are deterministic.  Coefficients are plain
``fractions.Fraction`` values: always reduced, positive denominator, one zero.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Monomial = tuple[int, ...]

NEG_INFINITY = float("-inf")


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when a | b, i.e. b - a is componentwise non-negative."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


@dataclass(frozen=True)
class MonomialOrder:
    """Total monomial order: lex or graded reverse lex, up to a permutation.

    ``perm`` lists variable indices from most to least significant.  ``key``
    maps an exponent tuple to a tuple that compares the same way the order
    does, so max() and sorted() can be used directly.
    """

    kind: str
    perm: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in ("lex", "grevlex"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError("perm must be a permutation of the variable indices")

    @classmethod
    def lex(cls, n: int, perm: Sequence[int] | None = None) -> "MonomialOrder":
        return cls("lex", tuple(perm) if perm is not None else tuple(range(n)))

    @classmethod
    def grevlex(cls, n: int, perm: Sequence[int] | None = None) -> "MonomialOrder":
        return cls("grevlex", tuple(perm) if perm is not None else tuple(range(n)))

    def key(self, exps: Monomial):
        permuted = tuple(exps[i] for i in self.perm)
        if self.kind == "lex":
            return permuted
        # grevlex: compare by total degree, ties broken by the smallest
        # exponent on the least significant variable (negated, reversed).
        return (sum(exps), tuple(-e for e in reversed(permuted)))


class _ElimOrder:
    """Block order eliminating the first ``block`` variables.

    Used internally for intersections: the auxiliary variables dominate, the
    remaining block is compared by an inner order on the original ring.
    """

    def __init__(self, block: int, inner: MonomialOrder):
        self.block = block
        self.inner = inner

    def key(self, exps: Monomial):
        head = exps[: self.block]
        return (sum(head), head, self.inner.key(exps[self.block :]))


@dataclass(frozen=True)
class PolyRing:
    variables: tuple[str, ...]
    order: MonomialOrder

    def __init__(self, variables: Sequence[str], order: MonomialOrder | None = None):
        variables = tuple(variables)
        if not variables:
            raise ValueError("ring needs at least one variable")
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        if order is None:
            order = MonomialOrder.grevlex(len(variables))
        if len(order.perm) != len(variables):
            raise ValueError("order size does not match variable count")
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "order", order)

    @property
    def n(self) -> int:
        return len(self.variables)

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c) -> "Poly":
        return Poly(self, {(0,) * self.n: Fraction(c)})

    def var(self, i: int) -> "Poly":
        exps = [0] * self.n
        exps[i] = 1
        return Poly(self, {tuple(exps): Fraction(1)})

    def from_terms(self, terms: Mapping[Monomial, Fraction]) -> "Poly":
        return Poly(self, terms)

    def parse(self, text: str) -> "Poly":
        from .parser import parse_poly

        return parse_poly(text, self)


class Poly:
    """Immutable-by-convention sparse polynomial attached to a ring."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: Mapping[Monomial, Fraction]):
        cleaned = {}
        for mono, coeff in terms.items():
            coeff = Fraction(coeff)
            if coeff:
                cleaned[tuple(mono)] = coeff
        key = ring.order.key
        self.ring = ring
        self.terms = {m: cleaned[m] for m in sorted(cleaned, key=key, reverse=True)}

    # -- basic structure -------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(mono_degree(m) == 0 for m in self.terms)

    def constant_value(self) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def degree(self):
        """Total degree; the zero polynomial gets -inf."""
        if not self.terms:
            return NEG_INFINITY
        return max(mono_degree(m) for m in self.terms)

    def degree_in(self, i: int):
        if not self.terms:
            return NEG_INFINITY
        return max(m[i] for m in self.terms)

    def leading(self, order: MonomialOrder | None = None) -> tuple[Monomial, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        if order is None or order == self.ring.order:
            mono = next(iter(self.terms))
        else:
            mono = max(self.terms, key=order.key)
        return mono, self.terms[mono]

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def monic(self, order: MonomialOrder | None = None) -> "Poly":
        if self.is_zero:
            return self
        _, lc = self.leading(order)
        return self if lc == 1 else self * (1 / lc)

    # -- arithmetic ------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    __hash__ = None

    def __neg__(self) -> "Poly":
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly(self.ring, out)

    def __radd__(self, other) -> "Poly":
        return self.__add__(other)

    def __sub__(self, other) -> "Poly":
        return self.__add__(-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return (-self).__add__(other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return Poly(self.ring, {m: cc * c for m, cc in self.terms.items()})
        other = self._coerce(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, Fraction(0)) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly(self.ring, out)

    def __rmul__(self, other) -> "Poly":
        return self.__mul__(other)

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    # -- calculus and substitution ---------------------------------------

    def partial(self, i: int) -> "Poly":
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                mm = list(m)
                mm[i] -= 1
                out[tuple(mm)] = c * m[i]
        return Poly(self.ring, out)

    def eval_at(self, point: Sequence[Fraction]) -> Fraction:
        if len(point) != self.ring.n:
            raise ValueError("point dimension mismatch")
        point = [Fraction(p) for p in point]
        pows: list[dict[int, Fraction]] = [{0: Fraction(1)} for _ in point]
        total = Fraction(0)
        for m, c in self.terms.items():
            val = c
            for i, e in enumerate(m):
                if e:
                    cache = pows[i]
                    if e not in cache:
                        cache[e] = point[i] ** e
                    val *= cache[e]
            total += val
        return total

    def translate(self, shift: Sequence[Fraction]) -> "Poly":
        """Substitute x_i -> x_i + shift_i."""
        shift = [Fraction(s) for s in shift]
        if len(shift) != self.ring.n:
            raise ValueError("shift dimension mismatch")
        if all(s == 0 for s in shift):
            return self
        out: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            options = []
            for i, e in enumerate(m):
                if shift[i] == 0 or e == 0:
                    options.append([(e, Fraction(1))])
                else:
                    s = shift[i]
                    options.append(
                        [(j, Fraction(math.comb(e, j)) * s ** (e - j)) for j in range(e + 1)]
                    )
            for combo in itertools.product(*options):
                mono = tuple(j for j, _ in combo)
                coeff = c
                for _, factor in combo:
                    coeff *= factor
                s = out.get(mono, Fraction(0)) + coeff
                if s:
                    out[mono] = s
                else:
                    del out[mono]
        return Poly(self.ring, out)

    # -- printing ---------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for idx, (m, c) in enumerate(self.terms.items()):
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            factors = []
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(self.ring.variables[i])
                elif e > 1:
                    factors.append(f"{self.ring.variables[i]}^{e}")
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = str(mag) + "*" + "*".join(factors)
            if idx == 0:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self})"


def directional_derivative(f: Poly, v: Sequence[Fraction]) -> Poly:
    """Derivative of f along the rational vector v."""
    if len(v) != f.ring.n:
        raise ValueError("direction dimension mismatch")
    out = f.ring.zero()
    for i, vi in enumerate(v):
        vi = Fraction(vi)
        if vi:
            out = out + f.partial(i) * vi
    return out


def poly_from_pairs(ring: PolyRing, pairs: Iterable[tuple[Monomial, Fraction]]) -> Poly:
    acc: dict[Monomial, Fraction] = {}
    for m, c in pairs:
        acc[tuple(m)] = acc.get(tuple(m), Fraction(0)) + Fraction(c)
    return Poly(ring, acc)
