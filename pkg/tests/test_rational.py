from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mslope.rational import (INFINITY, evaluate_continued_fraction, farey_adjacent,
                             farey_parents, format_fraction, make_fraction,
                             parse_fraction, standard_continued_fraction)

from conftest import tangle_fractions

F = Fraction


@pytest.mark.parametrize("f, terms", [
    (F(3, 10), [0, 3, 3]),
    (F(2, 5), [0, 2, 2]),
    (F(5, 2), [2, 2]),
    (F(-2, 3), [0, -1, -2]),
    (F(-17, 6), [-2, -1, -5]),
    (F(1, 7), [0, 7]),
    (F(4), [4]),
    (F(0), [0]),
])
def test_known_expansions(f, terms):
    assert standard_continued_fraction(f) == terms
    assert evaluate_continued_fraction(terms) == f


@given(tangle_fractions(max_den=500, max_abs=50))
def test_expansion_roundtrip_and_shape(f):
    terms = standard_continued_fraction(f)
    assert evaluate_continued_fraction(terms) == f
    mags = [abs(a) for a in terms]
    assert mags[-1] >= 2
    assert all(a >= 1 for a in mags[1:])
    assert all((a >= 0) == (f > 0) or a == 0 for a in terms)


@given(st.integers(-1000, 1000))
def test_integers_expand_to_one_term(z):
    assert standard_continued_fraction(F(z)) == [z]


def test_malformed_tower():
    with pytest.raises(ZeroDivisionError):
        evaluate_continued_fraction([1, 0])
    with pytest.raises(ValueError):
        evaluate_continued_fraction([])


def test_parse_and_format():
    assert parse_fraction(" 2 / -4 ") == F(-1, 2)
    assert parse_fraction("7") == 7
    assert parse_fraction("3/0") is INFINITY
    assert format_fraction(INFINITY) == "1/0"
    assert format_fraction(F(-6, 4)) == "-3/2"
    with pytest.raises(ValueError):
        parse_fraction("0/0")
    with pytest.raises(ValueError):
        parse_fraction("1/2/3")
    with pytest.raises(ZeroDivisionError):
        make_fraction(1, 0)
    assert make_fraction(2, -4) == F(-1, 2)


def test_infinity_is_a_singleton():
    import pickle
    assert pickle.loads(pickle.dumps(INFINITY)) is INFINITY
    assert str(INFINITY) == "1/0"


def test_known_parents():
    assert farey_parents(F(3, 10)) == (F(2, 7), F(1, 3))
    assert farey_parents(F(1, 2)) == (F(0), F(1))
    assert farey_parents(F(-2, 3)) == (F(-1), F(-1, 2))
    with pytest.raises(ValueError):
        farey_parents(F(3))
    with pytest.raises(ValueError):
        farey_parents(INFINITY)


@given(tangle_fractions(max_den=300, max_abs=20))
def test_parents_are_adjacent_and_mediate(f):
    lo, hi = farey_parents(f)
    assert lo < f < hi
    assert farey_adjacent(lo, f) and farey_adjacent(f, hi) and farey_adjacent(lo, hi)
    assert F(lo.numerator + hi.numerator, lo.denominator + hi.denominator) == f
    assert max(lo.denominator, hi.denominator) < f.denominator
