"""Skew group algebra B = C # Z^d for a translation action on C = Q[x..].

Elements are finite sums sum_g r_g * g with left coefficients r_g in C, and
multiplication twists the right factor: (r*g)(s*h) = (r * s^g)*(g+h).  The
idealiser of the right ideal IB collects, degree by degree, the colon ideals
(I : I^g); for prime I each of those is either everything or I itself, which
is what makes the subring computable.

Text syntax for elements: a sum of terms "(<poly>)*g[a1,...,ad]", with "e"
for the identity group element, e.g. "(x)*g[1,0] + (3)*e".
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

from .action import (
    GroupElement,
    Lattice,
    TranslationAction,
    act_on_ideal,
    apply_action,
    stabiliser,
)
from .groebner import (
    DimensionProbe,
    Ideal,
    dimension_probe,
    ideal_contains,
    ideal_quotient,
    unit_ideal,
)
from .parser import ParseError, parse_poly
from .poly import Poly


class SkewElement:
    """Finite left-coefficient sum over group elements, zero terms dropped."""

    __slots__ = ("action", "components")

    def __init__(self, action: TranslationAction, components: Mapping[GroupElement, Poly]):
        cleaned = {}
        for g, p in components.items():
            g = tuple(int(x) for x in g)
            if len(g) != action.d:
                raise ValueError("group element has wrong rank")
            if p.ring != action.ring:
                raise ValueError("coefficient from the wrong ring")
            if not p.is_zero:
                cleaned[g] = p
        self.action = action
        self.components = {g: cleaned[g] for g in sorted(cleaned)}

    @classmethod
    def zero(cls, action: TranslationAction) -> "SkewElement":
        return cls(action, {})

    @classmethod
    def monomial(cls, action: TranslationAction, p: Poly, g: GroupElement) -> "SkewElement":
        return cls(action, {tuple(g): p})

    @property
    def is_zero(self) -> bool:
        return not self.components

    def support(self) -> tuple[GroupElement, ...]:
        return tuple(self.components)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SkewElement)
            and self.action == other.action
            and self.components == other.components
        )

    __hash__ = None

    def __add__(self, other: "SkewElement") -> "SkewElement":
        out = dict(self.components)
        for g, p in other.components.items():
            s = out.get(g)
            out[g] = p if s is None else s + p
        return SkewElement(self.action, out)

    def __neg__(self) -> "SkewElement":
        return SkewElement(self.action, {g: -p for g, p in self.components.items()})

    def __sub__(self, other: "SkewElement") -> "SkewElement":
        return self + (-other)

    def __mul__(self, other: "SkewElement") -> "SkewElement":
        out: dict[GroupElement, Poly] = {}
        for g, r in self.components.items():
            for h, s in other.components.items():
                twisted = r * apply_action(s, g, self.action)
                key = tuple(a + b for a, b in zip(g, h))
                acc = out.get(key)
                out[key] = twisted if acc is None else acc + twisted
        return SkewElement(self.action, out)

    def __str__(self) -> str:
        if not self.components:
            return "(0)*e"
        parts = []
        for g, p in self.components.items():
            if any(g):
                label = "g[" + ",".join(str(x) for x in g) + "]"
            else:
                label = "e"
            # coefficients render compactly so terms stay single tokens
            parts.append(f"({str(p).replace(' ', '')})*{label}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"SkewElement({self})"


_GROUP_TOKEN = re.compile(r"\s*\*\s*(?:e|g\[\s*(-?\d+)(?:\s*,\s*(-?\d+))*\s*\])")


def parse_skew(text: str, action: TranslationAction) -> SkewElement:
    """Parse "(poly)*g[a,...] + (poly)*e - ..." into a skew element."""
    pos = 0
    n = len(text)
    components: dict[GroupElement, Poly] = {}
    sign = 1
    first = True
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            if first:
                raise ParseError("empty skew element", pos)
            break
        if not first:
            if text[pos] == "+":
                sign = 1
            elif text[pos] == "-":
                sign = -1
            else:
                raise ParseError("expected '+' or '-' between terms", pos)
            pos += 1
            while pos < n and text[pos].isspace():
                pos += 1
        first = False
        if pos >= n or text[pos] != "(":
            raise ParseError("expected '(' starting a coefficient", pos)
        depth = 0
        start = pos
        while pos < n:
            if text[pos] == "(":
                depth += 1
            elif text[pos] == ")":
                depth -= 1
                if depth == 0:
                    break
            pos += 1
        if depth != 0:
            raise ParseError("unbalanced parentheses", start)
        coeff = parse_poly(text[start + 1 : pos], action.ring)
        pos += 1
        m = _GROUP_TOKEN.match(text, pos)
        if m is None:
            raise ParseError("expected '*e' or '*g[a1,...,ad]'", pos)
        token = m.group(0)
        if token.strip().endswith("e"):
            g = (0,) * action.d
        else:
            inner = token[token.index("[") + 1 : token.rindex("]")]
            g = tuple(int(x) for x in inner.split(","))
            if len(g) != action.d:
                raise ParseError(f"group element needs {action.d} coordinates", pos)
        pos = m.end()
        prev = components.get(g)
        term = coeff * sign
        components[g] = term if prev is None else prev + term
    return SkewElement(action, components)


@dataclass(frozen=True)
class GradedIdeal:
    """Component view of IB (right) or BJ (left) as a G-graded left C-module."""

    side: str
    base: Ideal
    action: TranslationAction

    def __post_init__(self):
        if self.side not in ("right", "left"):
            raise ValueError("side must be 'right' or 'left'")

    def component(self, g: GroupElement) -> Ideal:
        if self.side == "right":
            return self.base
        return act_on_ideal(self.base, g, self.action)


def graded_component(graded: GradedIdeal, g: GroupElement) -> Ideal:
    return graded.component(g)


def idealiser_component(I: Ideal, g: GroupElement, act: TranslationAction) -> Ideal:
    """(I : I^g): for prime I this is everything when I^g lies inside I,
    otherwise I itself; the general case is a colon quotient."""
    moved = act_on_ideal(I, g, act)
    if I.claimed_prime:
        return unit_ideal(I.ring) if ideal_contains(I, moved) else I
    return ideal_quotient(I, moved)


def quotient_table(
    J: Ideal, I: Ideal, act: TranslationAction, box: int
) -> dict[GroupElement, Ideal]:
    """(J : I^g) for all g in the sup-norm box, by honest colon quotients."""
    table = {}
    for g in Lattice.standard(act.d).points_in_box(box):
        table[g] = ideal_quotient(J, act_on_ideal(I, g, act))
    return table


def idealiser_membership(b: SkewElement, I: Ideal, act: TranslationAction) -> bool:
    """b * IB inside IB, tested component by component against (I : I^g)."""
    for g, coeff in b.components.items():
        comp = idealiser_component(I, g, act)
        if not comp.contains_poly(coeff):
            return False
    return True


def right_ideal_truncation(
    I: Ideal, act: TranslationAction, radius: int
) -> list[SkewElement]:
    """Generators i*g of IB with support in the box, for brute-force checks."""
    out = []
    for g in Lattice.standard(act.d).points_in_box(radius):
        for f in I.gens:
            out.append(SkewElement.monomial(act, f, g))
    return out


@dataclass(frozen=True)
class IdealiserPresentation:
    """R/IB as the skew group algebra of the stabiliser over the residue ring.

    The idealiser R = sum over g of (I:I^g)*g surjects onto (C/I) # K with
    K the stabiliser of I; components away from K die in the quotient.
    """

    ideal: Ideal
    stabiliser: Lattice
    action: TranslationAction
    residue_probe: DimensionProbe

    def component(self, g: GroupElement) -> Ideal:
        return idealiser_component(self.ideal, g, self.action)

    def quotient_component_is_zero(self, g: GroupElement) -> bool:
        return not self.stabiliser.contains(g)

    def induced_translations(self) -> list[tuple]:
        """Residue automorphism data: translation vector per stabiliser basis vector."""
        return [self.action.translation(v) for v in self.stabiliser.basis]


def presentation_R_mod_IB(I: Ideal, act: TranslationAction) -> IdealiserPresentation:
    if not I.claimed_prime:
        raise ValueError("presentation requires an ideal flagged prime")
    K = stabiliser(I, act)
    return IdealiserPresentation(I, K, act, dimension_probe(I))
