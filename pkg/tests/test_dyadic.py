import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from walshnet.dyadic import DyadicRational

dyadics = st.builds(DyadicRational, st.integers(-(2**80), 2**80), st.integers(0, 90))


def test_normalises_to_odd_numerator():
    d = DyadicRational(12, 5)
    assert (d.numerator, d.exponent) == (3, 3)
    assert DyadicRational(0, 7) == DyadicRational(0, 0)
    assert DyadicRational(8, 1) == DyadicRational(4, 0)


def test_power_of_two():
    assert DyadicRational.power_of_two(-3) == DyadicRational(1, 3)
    assert DyadicRational.power_of_two(4) == DyadicRational(16)


def test_text_round_trip():
    d = DyadicRational(871, 11)
    assert str(d) == "871/2^11"
    assert DyadicRational.parse("871/2^11") == d
    with pytest.raises(ValueError):
        DyadicRational.parse("871/11")


def test_log2_below_float_range():
    tiny = DyadicRational(3, 2000)
    assert float(tiny) == 0.0
    assert tiny.log2() == pytest.approx(-2000 + 1.584962500721156, abs=1e-12)
    assert DyadicRational(0).log2() == float("-inf")


@given(dyadics, dyadics)
def test_arithmetic_matches_fraction(a, b):
    assert (a + b).as_fraction() == a.as_fraction() + b.as_fraction()
    assert (a - b).as_fraction() == a.as_fraction() - b.as_fraction()
    assert (a < b) == (a.as_fraction() < b.as_fraction())
    assert (a == b) == (a.as_fraction() == b.as_fraction())


@given(dyadics)
def test_float_is_correctly_rounded(a):
    assert float(a) == float(a.as_fraction())


@given(st.integers(1, 2**200), st.integers(0, 400))
def test_log2_accuracy(a, e):
    # math.log2 accepts arbitrarily large ints
    assert DyadicRational(a, e).log2() == pytest.approx(math.log2(a) - e, rel=1e-13, abs=1e-12)
