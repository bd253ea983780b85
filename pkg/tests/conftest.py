from fractions import Fraction

from hypothesis import strategies as st

from mslope.montesinos import MontesinosExpression, is_knot


@st.composite
def tangle_fractions(draw, max_den=12, max_abs=4):
    q = draw(st.integers(2, max_den))
    p = draw(st.integers(-max_abs * q, max_abs * q).filter(lambda p: p % q))
    return Fraction(p, q)


@st.composite
def unit_interval_fractions(draw, max_den=60):
    q = draw(st.integers(2, max_den))
    p = draw(st.integers(1, q - 1))
    return Fraction(p, q)


@st.composite
def expressions(draw, min_n=3, max_n=6, max_den=12, knot=None):
    ts = draw(st.lists(tangle_fractions(max_den), min_size=min_n, max_size=max_n))
    expr = MontesinosExpression(tuple(ts))
    if knot is not None:
        from hypothesis import assume
        assume(is_knot(expr).is_knot == knot)
    return expr


def knot_expressions(**kw):
    return expressions(knot=True, **kw)


ACCEPTANCE_LINES = []


def record_acceptance(line):
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
