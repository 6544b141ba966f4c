import random
import time
from fractions import Fraction

import pytest

from idealiser import (
    PolyRing,
    classify_plane_curve,
    lattice_points_box,
    pell_enumerate,
    pell_fundamental,
)
from idealiser.diophantine import line_data

RING = PolyRing(("x", "y"))
X, Y = RING.var(0), RING.var(1)


# ----------------------------------------------------------------- pell


def test_pell_fundamental_seven():
    s = pell_fundamental(7)
    assert (s.x, s.y) == (8, 3)
    assert s.x**2 - 7 * s.y**2 == 1


def test_pell_fundamental_two():
    assert (pell_fundamental(2).x, pell_fundamental(2).y) == (3, 2)


def test_pell_recurrence_step():
    sols = pell_enumerate(7, 2)
    assert [(s.x, s.y) for s in sols] == [(8, 3), (127, 48)]
    assert pell_enumerate(7, 1)[0].x == 8


def test_pell_enumerate_checks_equation_and_growth():
    for n in (2, 3, 7, 13, 61):
        sols = pell_enumerate(n, 5)
        x1, y1 = sols[0].x, sols[0].y
        for s in sols:
            assert s.x**2 - n * s.y**2 == 1
        for a, b in zip(sols, sols[1:]):
            assert b.x > a.x
            assert (b.x, b.y) == (x1 * a.x + n * y1 * a.y, x1 * a.y + y1 * a.x)


def test_pell_hard_instance_is_fast():
    t0 = time.perf_counter()
    s = pell_fundamental(61)
    assert (s.x, s.y) == (1766319049, 226153980)
    assert time.perf_counter() - t0 < 1.0


def test_pell_rejects_bad_n():
    for bad in (0, 1, -3, 4, 9, 16):
        with pytest.raises(ValueError):
            pell_fundamental(bad)


# ------------------------------------------------------- box enumeration


def test_lattice_points_on_graph_curve():
    f = X - 7 * Y**2 - 1
    shifts = lattice_points_box(f, (1, 0), 10)
    assert shifts == sorted([(0, 0), (7, -1), (7, 1)])


def test_lattice_points_on_pell_curve():
    f = X**2 - 7 * Y**2 - 1
    shifts = lattice_points_box(f, (1, 0), 8)
    assert shifts == sorted([(-2, 0), (0, 0), (7, -3), (7, 3)])


def test_lattice_points_fraction_offset():
    f = 2 * X - 1
    assert lattice_points_box(f, (Fraction(1, 2), 0), 3) == [
        (0, -3), (0, -2), (0, -1), (0, 0), (0, 1), (0, 2), (0, 3),
    ]
    assert lattice_points_box(f, (0, 0), 3) == []


# -------------------------------------------------------- classification


def test_classify_line():
    cls = classify_plane_curve(2 * X - 3 * Y - 1)
    assert cls.tag == "rational_line"
    assert cls.degree == 1


def test_classify_pell():
    cls = classify_plane_curve(X**2 - 7 * Y**2 - 1)
    assert cls.tag == "pell_conic"
    assert cls.pell_n == 7
    assert cls.pell_centre == (0, 0)


def test_classify_pell_is_translation_invariant():
    f = X**2 - 7 * Y**2 - 1
    for shift in [(1, 0), (-4, 2), (10, -7)]:
        cls = classify_plane_curve(f.translate(shift))
        assert cls.tag == "pell_conic"
        assert cls.pell_n == 7
        assert cls.pell_centre == (-shift[0], -shift[1])


def test_classify_pell_scaling_and_axis_swap():
    assert classify_plane_curve(3 * X**2 - 21 * Y**2 - 3).pell_n == 7
    swapped = classify_plane_curve(Y**2 - 7 * X**2 - 1)
    assert swapped.tag == "pell_conic"
    assert swapped.pell_axis == 1


def test_classify_non_integer_centre_stays_unknown():
    # (x - 1/2)^2 - 7 y^2 = 1 has no integer solutions to witness with
    f = (X - RING.const(Fraction(1, 2))) ** 2 - 7 * Y**2 - 1
    assert classify_plane_curve(f).tag == "unknown"


def test_classify_ellipse_is_not_pell():
    assert classify_plane_curve(X**2 + 7 * Y**2 - 1).tag == "unknown"


def test_classify_graph_curve():
    cls = classify_plane_curve(X - 7 * Y**2 - 1)
    assert cls.tag == "graph_curve"
    assert cls.graph_axis == 0
    assert str(cls.graph_poly) == "7*y^2 + 1"
    other = classify_plane_curve(Y - X**3)
    assert other.tag == "graph_curve" and other.graph_axis == 1


def test_classify_smooth_cubic():
    cls = classify_plane_curve(Y**2 - X**3 - X - 1)
    assert cls.tag == "smooth_high_degree"
    assert cls.degree == 3
    assert cls.genus == 1
    assert len(cls.jacobian_pure_powers) == 3


def test_classify_smooth_quartic():
    cls = classify_plane_curve(X**4 + Y**4 - 1)
    assert cls.tag == "smooth_high_degree"
    assert cls.genus == 3


def test_classify_singular_cubic_unknown():
    assert classify_plane_curve(Y**2 - X**3).tag == "unknown"
    assert classify_plane_curve(Y**2 - X**2 * (X + 1)).tag == "unknown"


def test_classify_rejects_degenerate_input():
    with pytest.raises(ValueError):
        classify_plane_curve(RING.const(3))
    with pytest.raises(ValueError):
        classify_plane_curve(RING.zero())
    R3 = PolyRing(("x", "y", "z"))
    with pytest.raises(ValueError):
        classify_plane_curve(R3.var(0))


def test_line_data():
    a, b, c = line_data(2 * X - 3 * Y - 1)
    assert (a, b, c) == (2, -3, -1)
    with pytest.raises(ValueError):
        line_data(X**2 - Y)
