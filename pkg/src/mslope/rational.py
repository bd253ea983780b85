"""
Exact rationals, standard continued fractions and Farey parents.

Values are plain :class:`fractions.Fraction` objects; the point at infinity
``1/0`` is the module constant :data:`INFINITY` and never takes part in
arithmetic.
"""
from fractions import Fraction
import math
import re

__all__ = [
    "Fraction", "INFINITY", "make_fraction", "parse_fraction", "format_fraction",
    "standard_continued_fraction", "evaluate_continued_fraction",
    "farey_parents", "farey_adjacent", "is_integral",
]


class _Infinity:
    """The vertex 1/0.  A singleton; equality is identity."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    numerator = 1
    denominator = 0

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "1/0"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()

_FRACTION_RE = re.compile(r"\s*(-?\d+)\s*(?:/\s*(-?\d+))?\s*$")


def make_fraction(num, den=1):
    """Reduced fraction with positive denominator.

    >>> make_fraction(2, -4)
    Fraction(-1, 2)
    """
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    return Fraction(int(num), int(den))


def parse_fraction(text):
    """Parse ``"P/Q"`` or ``"P"``.  ``"1/0"`` (any ``p/0``) returns INFINITY."""
    m = _FRACTION_RE.match(text)
    if m is None:
        raise ValueError(f"not a fraction: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        if num == 0:
            raise ValueError("0/0 is not a fraction")
        return INFINITY
    return Fraction(num, den)


def format_fraction(f):
    if f is INFINITY:
        return "1/0"
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def is_integral(f):
    return f is not INFINITY and f.denominator == 1


def standard_continued_fraction(f):
    """Standard expansion ``[a1, ..., ak]`` of a finite rational.

    Positive values get a1 >= 0, middle terms >= 1 and a last term >= 2;
    negative values are the termwise negation of the expansion of ``-f``.
    Integers expand to the length-1 list ``[f]``.

    >>> standard_continued_fraction(Fraction(3, 10))
    [0, 3, 3]
    >>> standard_continued_fraction(Fraction(-2, 3))
    [0, -1, -2]
    """
    if f is INFINITY:
        raise ValueError("1/0 has no continued fraction")
    f = Fraction(f)
    if f < 0:
        return [-a for a in standard_continued_fraction(-f)]
    p, q = f.numerator, f.denominator
    terms = []
    while q:
        a, r = divmod(p, q)
        terms.append(a)
        p, q = q, r
    # Euclid ends with a last term >= 2 unless the value is an integer.
    return terms


def evaluate_continued_fraction(terms):
    """Value of the tower a1 + 1/(a2 + 1/(... + 1/ak))."""
    if not terms:
        raise ValueError("empty continued fraction")
    value = Fraction(terms[-1])
    for a in reversed(terms[:-1]):
        if value == 0:
            raise ZeroDivisionError("continued fraction divides by zero")
        value = a + 1 / value
    return value


def farey_adjacent(x, y):
    """True when <x> and <y> span an edge of the Farey graph (|ps - qr| = 1)."""
    p, q = x.numerator, x.denominator
    r, s = y.numerator, y.denominator
    return abs(p * s - q * r) == 1


def farey_parents(f):
    """The two Farey neighbours of ``f`` with smaller denominator.

    Returns ``(smaller, larger)``; ``f`` is their mediant.

    >>> farey_parents(Fraction(3, 10))
    (Fraction(2, 7), Fraction(1, 3))
    """
    if f is INFINITY:
        raise ValueError("1/0 has no parents")
    f = Fraction(f)
    p, q = f.numerator, f.denominator
    if q == 1:
        raise ValueError(f"integer {p} has no parent pair")
    # Solve p*s - q*r = 1 with 0 < s < q: then r/s < p/q is one parent.
    s = pow(p, -1, q)
    r = (p * s - 1) // q
    left = Fraction(r, s)
    right = Fraction(p - r, q - s)
    assert math.gcd(p - r, q - s) == 1
    return left, right
