import math
import random
from fractions import Fraction

import pytest

from idealiser import (
    Ideal,
    Lattice,
    PolyRing,
    TranslationAction,
    act_on_ideal,
    act_on_point,
    apply_action,
    column_hermite,
    complement,
    effective_directions,
    hermite_smith,
    ideal_equal,
    kernel_basis,
    smith_normal_form,
    stabiliser,
)
from idealiser.normalforms import det_int, identity_matrix, mat_mul_int

RING = PolyRing(("x", "y"))
X, Y = RING.var(0), RING.var(1)
STD = TranslationAction.standard(RING)


def random_poly(rng, ring=RING, max_deg=3):
    terms = {}
    for _ in range(rng.randint(1, 4)):
        mono = tuple(rng.randint(0, max_deg) for _ in range(ring.n))
        terms[mono] = Fraction(rng.randint(-5, 5))
    f = ring.from_terms(terms)
    return f if not f.is_zero else ring.one()


# ------------------------------------------------------------- actions


def test_action_is_a_group_homomorphism():
    rng = random.Random(9)
    for _ in range(25):
        f = random_poly(rng)
        g = (rng.randint(-3, 3), rng.randint(-3, 3))
        h = (rng.randint(-3, 3), rng.randint(-3, 3))
        composed = apply_action(apply_action(f, g, STD), h, STD)
        direct = apply_action(f, tuple(a + b for a, b in zip(g, h)), STD)
        assert composed == direct
        assert apply_action(f, (0, 0), STD) == f
        minus = tuple(-a for a in g)
        assert apply_action(apply_action(f, g, STD), minus, STD) == f


def test_action_evaluation_compatibility():
    # f^g(p) = f(p + A g) = f(g.p)
    rng = random.Random(13)
    act = TranslationAction(RING, [[1, 2], [0, 1]])
    for _ in range(20):
        f = random_poly(rng)
        g = (rng.randint(-3, 3), rng.randint(-3, 3))
        p = tuple(Fraction(rng.randint(-4, 4)) for _ in range(2))
        moved_point = act_on_point(p, g, act)
        assert apply_action(f, g, act).eval_at(p) == f.eval_at(moved_point)


def test_rational_action_matrix():
    act = TranslationAction(RING, [[Fraction(1, 2), 0], [0, Fraction(1, 3)]])
    assert not act.is_integral()
    assert act.translation((2, 3)) == (1, 1)
    f = X + Y
    assert apply_action(f, (2, 3), act) == X + Y + 2


def test_action_shape_validation():
    with pytest.raises(ValueError):
        TranslationAction(RING, [[1, 0]])  # needs one row per variable
    with pytest.raises(ValueError):
        TranslationAction(RING, [[1], [1, 2]])


def test_act_on_ideal_preserves_membership():
    I = Ideal(RING, [X**2 - Y, X + 1])
    g = (2, -1)
    J = act_on_ideal(I, g, STD)
    for f in I.gens:
        assert J.contains_poly(apply_action(f, g, STD))
    assert ideal_equal(act_on_ideal(J, tuple(-a for a in g), STD), I)


# ------------------------------------------------------------ lattices


def test_lattice_canonical_basis():
    L1 = Lattice(2, [(3, 2)])
    L2 = Lattice(2, [(-3, -2), (6, 4)])
    assert L1 == L2
    assert L1.rank == 1
    assert Lattice.standard(2).rank == 2
    assert Lattice.zero(2).rank == 0


def test_lattice_membership_and_coords():
    L = Lattice(2, [(3, 2)])
    assert L.contains((6, 4))
    assert L.contains((0, 0))
    assert not L.contains((3, 1))
    assert L.coords((9, 6)) in (( 3,), (-3,))
    assert L.coords((1, 1)) is None

    full = Lattice(2, [(2, 1), (1, 1)])
    assert full.rank == 2
    assert full.contains((1, 0)) and full.contains((0, 1))


def test_points_in_box():
    assert len(Lattice.standard(2).points_in_box(1)) == 9
    pts = Lattice(2, [(3, 2)]).points_in_box(7)
    assert pts == sorted([(-6, -4), (-3, -2), (0, 0), (3, 2), (6, 4)])
    assert Lattice.zero(2).points_in_box(5) == [(0, 0)]
    # rectangular sublattice of rank 2
    pts2 = Lattice(2, [(2, 0), (0, 3)]).points_in_box(3)
    assert set(pts2) == {(a, b) for a in (-2, 0, 2) for b in (-3, 0, 3)}


# ---------------------------------------------------------- stabilisers


def test_stabiliser_of_a_line():
    I = Ideal(RING, [2 * X - 3 * Y - 1], claimed_prime=True)
    assert stabiliser(I, STD) == Lattice(2, [(3, 2)])


def test_stabiliser_of_pell_curve_is_trivial():
    I = Ideal(RING, [X**2 - 7 * Y**2 - 1], claimed_prime=True)
    assert stabiliser(I, STD).rank == 0


def test_stabiliser_of_point_is_trivial():
    I = Ideal(RING, [X - 1, Y - 2], claimed_prime=True, claimed_maximal=True)
    assert stabiliser(I, STD).rank == 0


def test_stabiliser_of_sum_line():
    I = Ideal(RING, [X + Y], claimed_prime=True)
    assert stabiliser(I, STD) == Lattice(2, [(1, -1)])


def test_stabiliser_under_scaled_action():
    act = TranslationAction(RING, [[2, 0], [0, 2]])
    I = Ideal(RING, [2 * X - 3 * Y - 1], claimed_prime=True)
    assert stabiliser(I, act) == Lattice(2, [(3, 2)])


def test_stabiliser_under_rank_one_action():
    act = TranslationAction(RING, [[1], [0]])
    pell = Ideal(RING, [X**2 - 7 * Y**2 - 1], claimed_prime=True)
    assert stabiliser(pell, act).rank == 0
    line = Ideal(RING, [Y - 1], claimed_prime=True)
    # translations along x fix the horizontal line
    assert stabiliser(line, act) == Lattice(1, [(1,)])


def test_stabiliser_of_trivial_action_is_everything():
    act = TranslationAction(RING, [[0, 0], [0, 0]])
    I = Ideal(RING, [X - 1, Y], claimed_prime=True, claimed_maximal=True)
    assert stabiliser(I, act) == Lattice.standard(2)


def test_stabiliser_random_lines():
    rng = random.Random(77)
    for _ in range(8):
        while True:
            m, n = rng.randint(-6, 6), rng.randint(-6, 6)
            if (m, n) != (0, 0) and math.gcd(m, n) == 1:
                break
        p = rng.randint(-5, 5)
        I = Ideal(RING, [m * X - n * Y - p], claimed_prime=True)
        assert stabiliser(I, STD) == Lattice(2, [(n, m)])


# ---------------------------------------------------------- complements


def _is_valid_complement(K: Lattice, H: Lattice, d: int) -> bool:
    if K.rank + H.rank != d:
        return False
    combined = [list(v) for v in K.basis] + [list(v) for v in H.basis]
    if len(combined) != d:
        return len(combined) == d
    # trivial intersection + finite index both follow from a nonzero det
    return det_int([[combined[j][i] for j in range(d)] for i in range(d)]) != 0


def test_complement_of_line_stabiliser():
    K = Lattice(2, [(3, 2)])
    H = complement(K)
    assert _is_valid_complement(K, H, 2)


def test_complement_edge_cases():
    assert complement(Lattice.zero(2)) == Lattice.standard(2)
    assert complement(Lattice.standard(2)).rank == 0


def test_complement_random_sublattices():
    rng = random.Random(19)
    for _ in range(15):
        vecs = [
            [rng.randint(-4, 4) for _ in range(3)]
            for _ in range(rng.randint(0, 3))
        ]
        K = Lattice(3, vecs)
        H = complement(K)
        assert _is_valid_complement(K, H, 3)


def test_effective_directions():
    assert effective_directions(STD) == [(1, 0), (0, 1)]
    act1 = TranslationAction(RING, [[1], [0]])
    assert effective_directions(act1) == [(1, 0)]
    frac = TranslationAction(RING, [[Fraction(1, 2), 0], [0, Fraction(1, 3)]])
    dirs = frac.matrix and effective_directions(frac)
    assert len(dirs) == 2
    for v in dirs:
        assert math.gcd(*[abs(int(c)) for c in v]) == 1
    zero = TranslationAction(RING, [[0, 0], [0, 0]])
    assert effective_directions(zero) == []


# --------------------------------------------------------- normal forms


def test_column_hermite_transform_identity():
    rng = random.Random(29)
    for _ in range(20):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        M = [[rng.randint(-6, 6) for _ in range(cols)] for _ in range(rows)]
        res = column_hermite(M)
        assert mat_mul_int(M, res.v) == res.h
        assert abs(det_int(res.v)) == 1
        # pivots step strictly down and are positive
        for (r, c), (r2, c2) in zip(res.pivots, res.pivots[1:]):
            assert r < r2 and c < c2
        for r, c in res.pivots:
            assert res.h[r][c] > 0


def test_smith_normal_form_identities():
    rng = random.Random(37)
    for _ in range(20):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        M = [[rng.randint(-6, 6) for _ in range(cols)] for _ in range(rows)]
        res = smith_normal_form(M)
        assert mat_mul_int(mat_mul_int(res.u, M), res.v) == res.d
        assert abs(det_int(res.u)) == 1
        assert abs(det_int(res.v)) == 1
        assert mat_mul_int(res.u_inv, res.u) == identity_matrix(rows)
        diag = res.diagonal
        for a, b in zip(diag, diag[1:]):
            if b != 0:
                assert a != 0 and b % a == 0
        for i, v in enumerate(diag):
            assert v >= 0
            assert res.d[i][i] == v
        for i in range(rows):
            for j in range(cols):
                if i != j:
                    assert res.d[i][j] == 0


def test_smith_known_values():
    res = smith_normal_form([[2, 0], [0, 3]])
    assert res.diagonal == (1, 6)
    res2 = smith_normal_form([[3], [2]])
    assert res2.diagonal == (1,)


def test_kernel_basis():
    rng = random.Random(43)
    for _ in range(20):
        rows = rng.randint(1, 3)
        cols = rng.randint(1, 4)
        M = [[rng.randint(-5, 5) for _ in range(cols)] for _ in range(rows)]
        for v in kernel_basis(M):
            assert all(
                sum(M[i][j] * v[j] for j in range(cols)) == 0 for i in range(rows)
            )


def test_hermite_smith_convenience():
    hs = hermite_smith([[2, 4], [6, 8]])
    assert hs.hermite.h is not None
    assert hs.smith.diagonal[0] >= 1
