#!/usr/bin/env python3
"""Walk through the Pell conic example end to end.

The curve x^2 - 7y^2 = 1 has infinitely many integer points but they thin
out exponentially, so the idealiser of the corresponding graded ideal fails
the chain conditions on both sides.  This script shows each ingredient:
the fundamental solution, the S-set inside a large box, a growth probe,
and the final verdict with its certificates.
"""

from idealiser import (
    Ideal,
    Lattice,
    PolyRing,
    TranslationAction,
    decide,
    growth_probe,
    pell_enumerate,
    s_set_box,
)

ring = PolyRing(("x", "y"))
x, y = ring.var(0), ring.var(1)
act = TranslationAction.standard(ring)

I = Ideal(ring, [x**2 - 7 * y**2 - 1], claimed_prime=True)


def main():
    print("curve: x^2 - 7*y^2 = 1")
    sols = pell_enumerate(7, 5)
    print("first solutions:", " ".join(f"({s.x},{s.y})" for s in sols))

    report = s_set_box(I, (1, 0), Lattice.standard(2), 130, act)
    print(f"\nS-set for the point (1,0), box 130 ({len(report.members)} members):")
    for g in report.members:
        print("  g =", g)

    J = Ideal(ring, [x - 1, y], claimed_prime=True, claimed_maximal=True)
    probe = growth_probe(I, J, act, "right", radii=(2, 8, 32, 130))
    print("\ncomponent classes hit per radius:", list(probe.counts))
    print("probe flag:", probe.flag)

    verdict, sets = decide(I, act)
    print("\nright noetherian:", verdict.right)
    print("left noetherian:", verdict.left)
    for cert in verdict.certificates:
        print(f"certificate {cert.rule}: {cert.payload}")


if __name__ == "__main__":
    main()
