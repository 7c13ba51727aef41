import random
from fractions import Fraction

import pytest

from hopfchar.errors import NotInvertibleError, ParseError
from hopfchar.rings import RATIONAL, TruncatedSeriesRing, resolve_ring
from hopfchar.sampling import random_ring_element, random_unit

SERIES = TruncatedSeriesRing(3)


@pytest.mark.parametrize("ring", [RATIONAL, SERIES], ids=lambda r: r.key)
def test_ring_axioms_randomized(ring):
    rng = random.Random(11)
    for _ in range(50):
        a = random_ring_element(ring, rng)
        b = random_ring_element(ring, rng)
        c = random_ring_element(ring, rng)
        assert ring.add(a, b) == ring.add(b, a)
        assert ring.add(ring.add(a, b), c) == ring.add(a, ring.add(b, c))
        assert ring.mul(a, b) == ring.mul(b, a)
        assert ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c))
        assert ring.mul(a, ring.add(b, c)) == ring.add(ring.mul(a, b), ring.mul(a, c))
        assert ring.add(a, ring.zero) == a
        assert ring.mul(a, ring.one) == a
        assert ring.add(a, ring.neg(a)) == ring.zero


@pytest.mark.parametrize("ring", [RATIONAL, SERIES], ids=lambda r: r.key)
def test_inverse_law_randomized(ring):
    rng = random.Random(12)
    for _ in range(30):
        a = random_unit(ring, rng)
        assert ring.mul(a, ring.inv(a)) == ring.one


def test_series_unit_iff_nonzero_constant_term():
    rng = random.Random(13)
    for _ in range(40):
        a = random_ring_element(SERIES, rng)
        assert SERIES.is_unit(a) == (a[0] != 0)
    assert not SERIES.is_unit(SERIES.x)
    with pytest.raises(NotInvertibleError):
        SERIES.inv(SERIES.x)


def test_series_inverse_example():
    # (1 + X)^-1 = 1 - X + X^2 - X^3 modulo X^4
    one_plus_x = SERIES.element([1, 1])
    assert SERIES.inv(one_plus_x) == SERIES.element([1, -1, 1, -1])


def test_series_truncation_in_product():
    ring = TruncatedSeriesRing(2)
    x = ring.x
    assert ring.mul(x, x) == ring.element([0, 0, 1])
    assert ring.mul(ring.mul(x, x), x) == ring.zero


def test_rational_inverse_of_zero():
    with pytest.raises(NotInvertibleError):
        RATIONAL.inv(Fraction(0))


def test_scale_is_rational_module_structure():
    assert RATIONAL.scale(Fraction(3, 2), Fraction(2, 3)) == 1
    a = SERIES.element([2, 4])
    assert SERIES.scale(a, Fraction(1, 2)) == SERIES.element([1, 2])


@pytest.mark.parametrize("ring", [RATIONAL, SERIES], ids=lambda r: r.key)
def test_format_parse_roundtrip(ring):
    rng = random.Random(14)
    for _ in range(20):
        a = random_ring_element(ring, rng)
        assert ring.parse_element(ring.format_element(a)) == a


def test_rational_formatting_lowest_terms():
    assert RATIONAL.format_element(Fraction(2, 4)) == "1/2"
    assert RATIONAL.format_element(Fraction(3)) == "3"
    assert RATIONAL.format_element(Fraction(1, -2)) == "-1/2"


def test_resolve_ring():
    assert resolve_ring("rational") is RATIONAL
    assert resolve_ring("series:4").modulus_degree == 4
    with pytest.raises(ParseError):
        resolve_ring("series:x")
    with pytest.raises(ParseError):
        resolve_ring("integers")
    with pytest.raises(ValueError):
        TruncatedSeriesRing(0)


def test_parse_element_errors():
    with pytest.raises(ParseError):
        RATIONAL.parse_element("1/0")
    with pytest.raises(ParseError):
        SERIES.parse_element("1,nope")
