from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mslope import diagram as dg
from mslope.diagram import OrientedTangleType as T
from mslope.montesinos import MontesinosExpression, is_knot, mirror, parse_expression
from mslope.rational import standard_continued_fraction

from conftest import expressions, knot_expressions, tangle_fractions, unit_interval_fractions

F = Fraction
ENTERING = [("NW", "NE"), ("SW", "SE"), ("NW", "SW"), ("NE", "SE"), ("NW", "SE"), ("NE", "SW")]


def valid_orientations(d):
    out = []
    for e in ENTERING:
        try:
            out.append(dg.orient_tangle(d, e))
        except dg.DiagramError:
            pass
    return out


def oriented_knot(text, choice=0):
    return dg.orient_diagram(dg.assemble_montesinos_diagram(parse_expression(text)), choice)


def test_integer_tangle():
    d = dg.build_integer_tangle_diagram(3)
    assert d.crossing_count == 3 and len(d.open_ends) == 4
    assert all(c.over == 0 for c in d.crossings.values())
    assert all(c.over == 1 for c in dg.build_integer_tangle_diagram(-2).crossings.values())
    assert dg.build_integer_tangle_diagram(0).crossing_count == 0


def test_extend_builds_two_fifths():
    d = dg.extend_tangle_diagram(dg.extend_tangle_diagram(dg.build_integer_tangle_diagram(2), 2), 0)
    assert d.history == (0, 2, 2)
    assert dg.fraction_of_diagram(d) == F(2, 5)
    assert d.crossing_count == 4


def test_extend_rejects_closed():
    d = dg.assemble_montesinos_diagram(parse_expression("1/3,1/3,1/3"))
    assert d.is_closed
    with pytest.raises(dg.DiagramError):
        dg.extend_tangle_diagram(d, 1)


@given(tangle_fractions(max_den=80, max_abs=6))
def test_standard_diagram_realizes_fraction(f):
    d = dg.tangle_diagram(f)
    terms = standard_continued_fraction(f)
    assert dg.fraction_of_diagram(d) == f
    assert d.crossing_count == sum(abs(a) for a in terms)


@given(unit_interval_fractions())
def test_tangle_orientations_types_and_signs(f):
    for o in valid_orientations(dg.tangle_diagram(f)):
        info = dg.standalone_orientation(o)
        # every twist row carries a single sign
        assert all(len(s) == 1 for s in dg.row_sign_sets(o).values() if s)
        assert info.outer is dg.classify_oriented_tangle(o)
        assert len(info.types) == len(standard_continued_fraction(f)) - 1


@given(tangle_fractions(max_den=40))
def test_connectivity_is_parity(f):
    types = {dg.classify_oriented_tangle(o) for o in valid_orientations(dg.tangle_diagram(f))}
    assert {t.connectivity for t in types} == {f"{f.numerator % 2}/{f.denominator % 2}"}
    assert len(types) == 2


def test_known_knot():
    d = oriented_knot("1/2,1/3,-2/3")
    assert dg.count_components(d) == 1
    assert d.crossing_count == 8
    assert dg.count_signed_crossings(d) == (8, 0)
    assert dg.count_signed_crossings(oriented_knot("1/2,1/3,-2/3", 1)) == (8, 0)
    types = [t.outer for t in dg.tangle_orientations(d)]
    assert types[0] is T.V_INF and types[1] is T.V1


def test_two_component_link():
    d = dg.assemble_montesinos_diagram(parse_expression("1/2,1/2,1/3"))
    assert dg.count_components(d) == 2
    with pytest.raises(dg.DiagramError):
        dg.export_gauss(d)
    assert dg.pd_component_count(dg.export_pd(d)) == 2


@settings(max_examples=60)
@given(expressions(max_n=5, max_den=9))
def test_component_count_matches_parity(e):
    d = dg.assemble_montesinos_diagram(e)
    n = dg.count_components(d)
    assert (n == 1) == is_knot(e).is_knot
    assert dg.pd_component_count(dg.export_pd(d)) == n


@settings(max_examples=60)
@given(knot_expressions(max_n=5, max_den=9))
def test_pd_signs_match_traced_signs(e):
    d = dg.orient_diagram(dg.assemble_montesinos_diagram(e))
    signs = dg.crossing_signs(d)
    assert dg.pd_signs(dg.export_pd(d)) == [signs[c] for c in sorted(signs)]


@settings(max_examples=60)
@given(knot_expressions(max_n=5, max_den=9))
def test_orientation_reversal_and_mirror(e):
    d0 = dg.orient_diagram(dg.assemble_montesinos_diagram(e), 0)
    d1 = dg.orient_diagram(dg.assemble_montesinos_diagram(e), 1)
    assert dg.crossing_signs(d0) == dg.crossing_signs(d1)
    plus, minus = dg.count_signed_crossings(d0)
    m = dg.orient_diagram(dg.assemble_montesinos_diagram(mirror(e)))
    assert dg.count_signed_crossings(m) == (minus, plus)


def test_gauss_code_shape():
    g = dg.export_gauss(oriented_knot("1/3,1/3,1/3"))
    visits, signs = g.split("\n")
    nums = [int(x) for x in visits.split()]
    assert sorted(abs(x) for x in nums) == sorted(list(range(1, 10)) * 2)
    assert all(nums.count(c) == 1 and nums.count(-c) == 1 for c in range(1, 10))
    assert signs.split() == [f"{c}-" for c in range(1, 10)]


def test_pd_of_open_tangle_rejected():
    with pytest.raises(dg.DiagramError):
        dg.export_pd(dg.tangle_diagram(F(1, 3)))


def test_orient_tangle_rejects_same_strand():
    with pytest.raises(dg.DiagramError):
        dg.orient_tangle(dg.tangle_diagram(F(1, 2)), ("NW", "SW"))


def test_subtangle_types_lengths():
    e = MontesinosExpression((F(3, 10), F(1, 3), F(-2, 5)))
    assert [len(t) for t in dg.subtangle_types(e)] == [2, 1, 2]
