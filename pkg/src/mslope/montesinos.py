"""
Montesinos knot expressions M(P1/Q1, ..., PN/QN).

An expression is an ordered tuple of at least three finite, non-integral
fractions.  It names a decomposition of the knot into rational tangles, not
just an isotopy class, so two expressions of the same knot are different
objects here.
"""
from dataclasses import dataclass
import enum
import math

from .rational import Fraction, INFINITY, format_fraction, parse_fraction


class ExpressionError(ValueError):
    """Base class for rejected expressions."""


class TooFewTangles(ExpressionError):
    pass


class IntegralTangle(ExpressionError):
    pass


class InfiniteTangle(ExpressionError):
    pass


class ParseError(ExpressionError):
    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class IllegalMove(ExpressionError):
    pass


class KnotCase(enum.Enum):
    KNOT_A = "knot (a)"   # exactly one even denominator
    KNOT_B = "knot (b)"   # all denominators odd, odd number of odd numerators
    LINK = "link"

    @property
    def is_knot(self):
        return self is not KnotCase.LINK


class RestrictedKind(enum.Enum):
    ALL_POSITIVE = "all-positive"
    ALL_NEGATIVE = "all-negative"
    MIXED = "mixed"


@dataclass(frozen=True)
class MontesinosExpression:
    tangles: tuple

    def __post_init__(self):
        object.__setattr__(self, "tangles", tuple(Fraction(t) for t in self.tangles))

    def __len__(self):
        return len(self.tangles)

    def __iter__(self):
        return iter(self.tangles)

    def __getitem__(self, i):
        return self.tangles[i]

    @property
    def N(self):
        return len(self.tangles)

    def total(self):
        return sum(self.tangles, Fraction(0))

    def text(self):
        return ",".join(format_fraction(t) for t in self.tangles)

    def __str__(self):
        return f"M({', '.join(format_fraction(t) for t in self.tangles)})"


@dataclass(frozen=True)
class RestrictedForm:
    kind: RestrictedKind
    expression: MontesinosExpression


def validate(tangles):
    """Check the standing assumptions and return an expression."""
    tangles = list(tangles)
    for i, t in enumerate(tangles):
        if t is INFINITY:
            raise InfiniteTangle(f"tangle {i + 1} is 1/0")
        if Fraction(t).denominator == 1:
            raise IntegralTangle(f"tangle {i + 1} is the integer {Fraction(t)}")
    if len(tangles) < 3:
        raise TooFewTangles(f"need at least 3 tangles, got {len(tangles)}")
    return MontesinosExpression(tuple(tangles))


def parse_expression(text):
    """Parse ``"1/2,1/3,-2/3"``.  Whitespace is ignored.

    Syntax errors carry the byte offset of the offending field.
    """
    fractions = []
    offset = 0
    for field in text.split(","):
        stripped = field.strip()
        if not stripped:
            raise ParseError("empty fraction", offset)
        try:
            fractions.append(parse_fraction(stripped))
        except ValueError:
            raise ParseError(f"malformed fraction {stripped!r}",
                             offset + field.index(stripped)) from None
        offset += len(field.encode()) + 1
    return validate(fractions)


def is_knot(expr):
    """Classify by parity: which clause of the one-component condition holds."""
    dens = [t.denominator for t in expr]
    even = sum(1 for q in dens if q % 2 == 0)
    if even == 1:
        return KnotCase.KNOT_A
    if even == 0:
        odd_nums = sum(1 for t in expr if t.numerator % 2)
        if odd_nums % 2 == 1:
            return KnotCase.KNOT_B
    return KnotCase.LINK


def link_reason(expr):
    """Human readable reason an expression fails to be a knot, or None."""
    dens = [t.denominator for t in expr]
    even = sum(1 for q in dens if q % 2 == 0)
    if even > 1:
        return (f"{even} tangles have even denominator; condition (a) needs exactly one")
    if even == 0:
        odd_nums = sum(1 for t in expr if t.numerator % 2)
        if odd_nums % 2 == 0:
            return (f"all denominators odd but {odd_nums} odd numerators; "
                    "condition (b) needs an odd count")
    return None


def tangle_rotation_move(expr, i, direction):
    """Rotate one tangle: tangle ``i`` gains ``direction``, tangle ``i+1`` loses it.

    ``i`` is 1-based as in M(P1/Q1, ...); there is no wrap-around move.
    """
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    if not 1 <= i <= expr.N - 1:
        raise IllegalMove(f"move index {i} outside 1..{expr.N - 1}")
    tangles = list(expr.tangles)
    tangles[i - 1] += direction
    tangles[i] -= direction
    for j in (i - 1, i):
        if tangles[j].denominator == 1:
            raise IllegalMove(f"tangle {j + 1} would become integral")
    return MontesinosExpression(tuple(tangles))


def mirror(expr):
    return MontesinosExpression(tuple(-t for t in expr))


def classify_restricted(tangles):
    """The restricted case a tuple satisfies, or None."""
    if all(t > 0 for t in tangles):
        return RestrictedKind.ALL_POSITIVE
    if all(t < 0 for t in tangles):
        return RestrictedKind.ALL_NEGATIVE
    if all(abs(t) < 1 for t in tangles):
        return RestrictedKind.MIXED
    return None


def to_restricted_expression(expr):
    """Move integer parts between tangles until a restricted form is reached.

    With fractional parts f_i in (0, 1) and e = sum of floors: e >= 0 puts
    the whole surplus on the last tangle; -N < e < 0 pushes the last |e|
    tangles below zero; e <= -N makes every tangle negative and puts the
    remaining deficit on the last one.
    """
    n = expr.N
    floors = [math.floor(t) for t in expr]
    fracs = [t - z for t, z in zip(expr, floors)]
    e = sum(floors)
    if e >= 0:
        out = fracs[:-1] + [fracs[-1] + e]
    elif e > -n:
        k = -e
        out = fracs[:n - k] + [f - 1 for f in fracs[n - k:]]
    else:
        out = [f - 1 for f in fracs]
        out[-1] += e + n
    kind = classify_restricted(out)
    assert kind is not None
    return RestrictedForm(kind, MontesinosExpression(tuple(out)))


def rotation_moves(source, target):
    """A list of (i, direction) moves carrying ``source`` to ``target``.

    Both must have equal length, equal sums and tangles differing by
    integers; raises IllegalMove otherwise.  Intermediate tangles stay
    non-integral because every move shifts by an integer.
    """
    if source.N != target.N:
        raise IllegalMove("length mismatch")
    diffs = [t - s for s, t in zip(source, target)]
    if any(d.denominator != 1 for d in diffs) or sum(diffs) != 0:
        raise IllegalMove("target is not reachable by tangle rotations")
    moves = []
    carry = 0
    # Tangle i must gain diffs[i]; carry what's left to its right neighbour.
    for i in range(source.N - 1):
        carry += int(diffs[i])
        step = 1 if carry > 0 else -1
        moves.extend([(i + 1, step)] * abs(carry))
    return moves


def apply_moves(expr, moves):
    for i, d in moves:
        expr = tangle_rotation_move(expr, i, d)
    return expr
