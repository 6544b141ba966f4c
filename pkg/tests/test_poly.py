import random
from fractions import Fraction

import pytest

from idealiser import MonomialOrder, Poly, PolyRing, ParseError, directional_derivative


RING = PolyRing(("x", "y"))
X, Y = RING.var(0), RING.var(1)


def random_poly(rng, ring, max_deg=3, max_terms=4):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = tuple(rng.randint(0, max_deg) for _ in range(ring.n))
        terms[mono] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return ring.from_terms(terms)


def test_ring_arithmetic_identities():
    rng = random.Random(11)
    for _ in range(40):
        f = random_poly(rng, RING)
        g = random_poly(rng, RING)
        h = random_poly(rng, RING)
        assert f + g == g + f
        assert (f + g) + h == f + (g + h)
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert f - f == RING.zero()
        assert f * RING.one() == f
        assert f * RING.zero() == RING.zero()


def test_int_and_fraction_coercion():
    assert 2 * X == X + X
    assert X * Fraction(1, 2) + X * Fraction(1, 2) == X
    assert 1 + X - 1 == X
    assert (3 - X) + (X - 3) == RING.zero()


def test_pow():
    assert (X + Y) ** 0 == RING.one()
    assert (X + Y) ** 2 == X**2 + 2 * X * Y + Y**2
    f = X - 2 * Y + 1
    assert f**5 == f * f * f * f * f
    with pytest.raises(ValueError):
        (X + Y) ** -1


def test_degree_and_leading():
    f = X**2 - 7 * Y**2 - 1
    assert f.degree() == 2
    assert f.degree_in(0) == 2 and f.degree_in(1) == 2
    assert RING.zero().degree() == float("-inf")
    lm, lc = f.leading()
    assert lm == (2, 0) and lc == 1  # grevlex prefers x^2 over y^2
    lex = MonomialOrder.lex(2)
    lm_lex, _ = (Y**3 + X).leading(lex)
    assert lm_lex == (1, 0)


def test_str_is_deterministic_and_parses_back():
    f = X**2 - 7 * Y**2 - 1
    assert str(f) == "x^2 - 7*y^2 - 1"
    assert RING.parse(str(f)) == f
    g = Fraction(3, 2) * X - Y
    assert str(g) == "3/2*x - y"
    assert RING.parse(str(g)) == g
    assert str(RING.zero()) == "0"


def test_parse_round_trip_random():
    rng = random.Random(23)
    for _ in range(60):
        f = random_poly(rng, RING)
        assert RING.parse(str(f)) == f


def test_parse_expressions():
    assert RING.parse("(x + y)^2 - (x - y)^2") == 4 * X * Y
    assert RING.parse("-x") == -X
    assert RING.parse("2/3 * x*y") == Fraction(2, 3) * X * Y
    assert RING.parse("x^2*y^3") == X**2 * Y**3
    assert RING.parse("5") == RING.const(5)


def test_parse_errors_carry_position():
    with pytest.raises(ParseError):
        RING.parse("x +")
    with pytest.raises(ParseError):
        RING.parse("z + 1")  # unknown variable
    with pytest.raises(ParseError):
        RING.parse("x ^ y")  # exponent must be an integer literal
    with pytest.raises(ParseError):
        RING.parse("x^-2")
    with pytest.raises(ParseError):
        RING.parse("(x + 1")


def test_eval_at():
    f = X**2 - 7 * Y**2 - 1
    assert f.eval_at((8, 3)) == 0
    assert f.eval_at((1, 1)) == -7
    assert f.eval_at((Fraction(1, 2), 0)) == Fraction(-3, 4)


def test_translate_matches_evaluation():
    rng = random.Random(7)
    for _ in range(30):
        f = random_poly(rng, RING)
        shift = tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(2))
        moved = f.translate(shift)
        for _ in range(5):
            p = tuple(Fraction(rng.randint(-4, 4)) for _ in range(2))
            expected = f.eval_at(tuple(a + b for a, b in zip(p, shift)))
            assert moved.eval_at(p) == expected


def test_translate_is_additive():
    f = X**3 - 2 * X * Y + 5
    assert f.translate((1, 2)).translate((3, -1)) == f.translate((4, 1))
    assert f.translate((0, 0)) == f


def test_partial_and_directional_derivative():
    f = X**2 * Y + 3 * Y
    assert f.partial(0) == 2 * X * Y
    assert f.partial(1) == X**2 + 3
    assert directional_derivative(f, (1, 1)) == f.partial(0) + f.partial(1)
    assert directional_derivative(f, (0, 0)) == RING.zero()


def test_monic():
    f = 4 * X**2 - 2 * Y
    m = f.monic()
    assert m.leading()[1] == 1
    assert m == X**2 - Fraction(1, 2) * Y


def test_order_keys_sort_monomials():
    grevlex = MonomialOrder.grevlex(2)
    # same degree: grevlex falls back to reversed exponent comparison
    assert grevlex.key((2, 0)) > grevlex.key((1, 1)) > grevlex.key((0, 2))
    assert grevlex.key((0, 3)) > grevlex.key((2, 0))
    lex = MonomialOrder.lex(2)
    assert lex.key((1, 0)) > lex.key((0, 5))


def test_ring_validation():
    with pytest.raises(ValueError):
        PolyRing(())
    with pytest.raises(ValueError):
        PolyRing(("x", "x"))


def test_cross_ring_mixing_rejected():
    other = PolyRing(("a", "b"))
    with pytest.raises(ValueError):
        X + other.var(0)
