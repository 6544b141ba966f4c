#!/usr/bin/env python3
"""Decide noetherianity for a gallery of curves and points.

Runs the full decision ladder over a mix of plane curves, maximal ideals,
and a one-variable example, then prints the verdict table with the rule
that fired for each side.
"""

from idealiser import Ideal, PolyRing, TranslationAction, decide

ring = PolyRing(("x", "y"))
x, y = ring.var(0), ring.var(1)
std = TranslationAction.standard(ring)
axis = TranslationAction(ring, [[1], [0]])

ring1 = PolyRing(("t",))
t = ring1.var(0)
std1 = TranslationAction.standard(ring1)

GALLERY = [
    ("pell conic", Ideal(ring, [x**2 - 7 * y**2 - 1], claimed_prime=True), std),
    ("parabola graph", Ideal(ring, [x - 7 * y**2 - 1], claimed_prime=True), std),
    ("smooth cubic", Ideal(ring, [y**2 - x**3 - x - 1], claimed_prime=True), std),
    ("rational line", Ideal(ring, [2 * x - 3 * y - 1], claimed_prime=True), std),
    (
        "point (1,2)",
        Ideal(ring, [x - 1, y - 2], claimed_prime=True, claimed_maximal=True),
        std,
    ),
    (
        "point, one variable",
        Ideal(ring1, [t - 5], claimed_prime=True, claimed_maximal=True),
        std1,
    ),
    (
        "origin, rank-one action",
        Ideal(ring, [x, y], claimed_prime=True, claimed_maximal=True),
        axis,
    ),
    ("cuspidal cubic", Ideal(ring, [y**2 - x**3], claimed_prime=True), std),
]


def main():
    width = max(len(name) for name, _, _ in GALLERY)
    print(f"{'ideal':<{width}}  right    left     rules")
    for name, I, act in GALLERY:
        verdict, _ = decide(I, act)
        rules = ", ".join(c.rule for c in verdict.certificates)
        print(f"{name:<{width}}  {verdict.right:<7}  {verdict.left:<7}  {rules}")


if __name__ == "__main__":
    main()
