"""
Edgepaths in the Hatcher-Oertel diagram and the slope bounds they give.

Paths are stored in written order: ``vertices[0]`` is the left end (where
the path finishes) and ``vertices[-1]`` the starting vertex <P/Q>.  The
path is traversed right to left, so each edge runs from ``vertices[i+1]``
to ``vertices[i]``.

Twist per edge, following the traversal: +2 when v decreases, -2 when it
increases.  That covers Farey edges and vertical edges <z>--<z+1> alike;
infinity edges and horizontal edges carry no twist.
"""
from dataclasses import dataclass
from functools import cached_property
import enum
import math

from .rational import (Fraction, INFINITY, farey_adjacent, farey_parents,
                       format_fraction, parse_fraction, standard_continued_fraction)
from . import diagram as dg
from .montesinos import is_knot, link_reason, to_restricted_expression


class EdgepathError(ValueError):
    pass


class IdentityViolation(AssertionError):
    """Edgepath twists and crossing counts disagree: an implementation bug."""


# -- vertices and edges -------------------------------------------------------

@dataclass(frozen=True)
class DVertex:
    """<p/q> (``circle=False``), the circle vertex o p/q, or <1/0>."""
    value: object
    circle: bool = False

    def __post_init__(self):
        if self.value is not INFINITY:
            object.__setattr__(self, "value", Fraction(self.value))
        elif self.circle:
            raise EdgepathError("there is no circle vertex at 1/0")

    @property
    def is_infinity(self):
        return self.value is INFINITY

    @property
    def is_integer(self):
        return not self.is_infinity and not self.circle and self.value.denominator == 1

    @property
    def u(self):
        if self.is_infinity:
            return Fraction(-1)
        if self.circle:
            return Fraction(1)
        q = self.value.denominator
        return Fraction(q - 1, q)

    @property
    def v(self):
        if self.is_infinity:
            raise EdgepathError("<1/0> has no v coordinate")
        return self.value

    def __str__(self):
        if self.circle:
            return f"o{format_fraction(self.value)}"
        return f"<{format_fraction(self.value)}>"


INF = DVertex(INFINITY)


def angle(x):
    return INF if x is INFINITY else DVertex(x)


class EdgeKind(enum.Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"
    VERTICAL = "vertical"
    HORIZONTAL = "horizontal"
    INFINITY = "infinity"


def is_edge(x, y):
    """Whether two vertices span an edge of the diagram."""
    if x.is_infinity or y.is_infinity:
        other = y if x.is_infinity else x
        return other.is_integer
    if x.circle or y.circle:
        return x.value == y.value and x.circle != y.circle
    return farey_adjacent(x.value, y.value)


def classify_edge(start, end):
    """Kind of the edge traversed from ``start`` to ``end``."""
    if not is_edge(start, end):
        raise EdgepathError(f"{start} and {end} are not adjacent")
    if start.is_infinity or end.is_infinity:
        return EdgeKind.INFINITY
    if start.circle or end.circle:
        return EdgeKind.HORIZONTAL
    if start.is_integer and end.is_integer:
        return EdgeKind.VERTICAL
    # orient leftward: from the larger denominator to the smaller
    if start.value.denominator < end.value.denominator:
        start, end = end, start
    return EdgeKind.INCREASING if end.v > start.v else EdgeKind.DECREASING


def edge_twist(start, end):
    """Twist of the edge traversed from ``start`` to ``end``."""
    kind = classify_edge(start, end)
    if kind is EdgeKind.INCREASING:
        return -2
    if kind is EdgeKind.DECREASING:
        return 2
    if kind is EdgeKind.VERTICAL:
        return 2 if end.v < start.v else -2
    return 0


# -- edgepaths ----------------------------------------------------------------

@dataclass(frozen=True)
class Edgepath:
    vertices: tuple

    def __post_init__(self):
        verts = tuple(v if isinstance(v, DVertex) else angle(v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        for left, right in zip(verts, verts[1:]):
            if not is_edge(left, right):
                raise EdgepathError(f"{right} -> {left} is not an edge of the diagram")

    @classmethod
    def from_values(cls, values):
        return cls(tuple(angle(x) for x in values))

    @classmethod
    def parse(cls, text):
        verts = []
        for token in text.split("--"):
            token = token.strip()
            if token.startswith("<") and token.endswith(">"):
                verts.append(angle(parse_fraction(token[1:-1])))
            elif token.startswith("o"):
                verts.append(DVertex(parse_fraction(token[1:]), circle=True))
            else:
                raise EdgepathError(f"bad vertex {token!r}")
        return cls(tuple(verts))

    @property
    def start(self):
        return self.vertices[-1]

    @property
    def end(self):
        return self.vertices[0]

    def edges(self):
        """(start, end) pairs in traversal order."""
        v = self.vertices
        return [(v[i], v[i - 1]) for i in range(len(v) - 1, 0, -1)]

    def edge_kinds(self):
        return [classify_edge(a, b) for a, b in self.edges()]

    @cached_property
    def twist(self):
        return sum(edge_twist(a, b) for a, b in self.edges())

    @property
    def kind(self):
        """'III' for paths ending at <1/0>, 'II' on u = 0, 'I' otherwise."""
        if self.end.is_infinity:
            return "III"
        if self.end.is_integer:
            return "II"
        return "I"

    def has_vertical_edges(self):
        return EdgeKind.VERTICAL in self.edge_kinds()

    def __add__(self, other):
        """Concatenate written left to right; the shared vertex is merged."""
        if not other.vertices:
            return self
        if not self.vertices:
            return other
        if self.vertices[-1] == other.vertices[0]:
            return Edgepath(self.vertices + other.vertices[1:])
        return Edgepath(self.vertices + other.vertices)

    def __len__(self):
        return max(len(self.vertices) - 1, 0)

    def __str__(self):
        return "--".join(str(v) for v in self.vertices)


def twist(obj):
    """Twist of an edgepath or an edgepath system."""
    if isinstance(obj, EdgepathSystem):
        return sum(p.twist for p in obj.paths)
    return obj.twist


@dataclass(frozen=True)
class EdgepathSystem:
    paths: tuple

    @property
    def kind(self):
        """Common type of the endpoints, or 'formal' when they disagree."""
        kinds = {p.kind for p in self.paths}
        return kinds.pop() if len(kinds) == 1 else "formal"

    @cached_property
    def twist(self):
        return twist(self)

    def __iter__(self):
        return iter(self.paths)

    def __len__(self):
        return len(self.paths)

    def __str__(self):
        return "(" + ", ".join(str(p) for p in self.paths) + ")"


def slope(system, seifert):
    """Boundary slope of ``system`` relative to the Seifert system."""
    return Fraction(twist(system) - twist(seifert))


# -- monotone edgepaths -------------------------------------------------------

def monotone_basic_edgepath(f, direction):
    """Path from <f> to an integer taking the larger (inc) or smaller (dec) parent."""
    if direction not in ("inc", "dec"):
        raise ValueError("direction must be 'inc' or 'dec'")
    f = Fraction(f)
    if f.denominator == 1:
        raise EdgepathError("monotone paths start at a non-integral vertex")
    chain = [f]
    while chain[-1].denominator != 1:
        smaller, larger = farey_parents(chain[-1])
        chain.append(larger if direction == "inc" else smaller)
    return Edgepath.from_values(reversed(chain))


def vertical_run(a, b):
    """Vertical edges between integers, written from <a> to <b>."""
    step = 1 if b >= a else -1
    return Edgepath.from_values(range(a, b + step, step))


def monotone_edgepath(f, direction):
    """Monotone path completed to type III (infinity edge) or type II (vertical run to <0>)."""
    f = Fraction(f)
    basic = monotone_basic_edgepath(f, direction)
    z = int(basic.end.v)
    to_infinity = (direction == "inc") == (f > 0)
    if to_infinity:
        return Edgepath((INF,) + basic.vertices)
    return vertical_run(0, z) + basic


def monotone_systems(expr):
    inc = EdgepathSystem(tuple(monotone_edgepath(t, "inc") for t in expr))
    dec = EdgepathSystem(tuple(monotone_edgepath(t, "dec") for t in expr))
    return inc, dec


# -- reduced expressions --------------------------------------------------------

def _map_vertex(v, fn):
    if v.circle:
        raise EdgepathError("reduced transforms act on <p/q> vertices only")
    return angle(fn(v.value))


def reduced_transform(path, op, a=0):
    """Vertex-wise ``[a + path]`` ('add'), ``[1/(a + path)]`` ('reciprocal') or ``[-path]`` ('negate')."""
    if op == "add":
        fn = lambda x: x if x is INFINITY else x + a
    elif op == "negate":
        fn = lambda x: x if x is INFINITY else -x
    elif op == "reciprocal":
        def fn(x):
            if x is INFINITY:
                return Fraction(0)
            if a + x == 0:
                raise ZeroDivisionError(f"1/({a} + {format_fraction(x)}) is 1/0")
            return 1 / (a + x)
    else:
        raise ValueError(f"unknown transform {op!r}")
    return Edgepath(tuple(_map_vertex(v, fn) for v in path.vertices))


# -- the Seifert edgepath -------------------------------------------------------

def _unit_fraction_run(n):
    """<1>--<1/2>--...--<1/n>; empty for n < 1."""
    return Edgepath.from_values(Fraction(1, j) for j in range(1, n + 1))


def seifert_lambda_prime(f, types, base_sign):
    """The path lambda'_s of an oriented f-tangle with 0 < f < 1.

    ``types`` lists the oriented types of the nested tangles
    [0, a2, ..., ak], [0, a3, ..., ak], ..., [0, ak] (outermost first);
    ``base_sign`` is the crossing sign of the innermost [0, ak] block.
    """
    f = Fraction(f)
    if not 0 < f < 1:
        raise EdgepathError("lambda'_s needs 0 < P/Q < 1")
    terms = standard_continued_fraction(f)
    k = len(terms)
    if terms[0] != 0 or k < 2:
        raise EdgepathError(f"malformed expansion {terms}")
    if types is None or len(types) != k - 1:
        raise EdgepathError(f"need {k - 1} nesting types for {format_fraction(f)}")
    if base_sign not in (1, -1):
        raise EdgepathError("base sign must be +1 or -1")
    a = terms[-1]
    if base_sign > 0:
        path = _unit_fraction_run(a)
    else:
        path = Edgepath.from_values([0, Fraction(1, a)])
    # level j builds [0, a_j, ...] over [0, a_{j+1}, ...], whose type is types[j-1]
    for j in range(k - 2, 0, -1):
        a = terms[j]
        family = types[j].family
        tail = reduced_transform(path, "reciprocal", a)
        if family in ("V", "D"):
            path = Edgepath.from_values([0]) + tail
        else:
            path = _unit_fraction_run(a - 1) + tail
    return path


def seifert_gamma(f, types, base_sign):
    """gamma_s of an oriented f-tangle, f non-integral.

    ``types`` and ``base_sign`` describe the nested blocks of the standard
    diagram of ``f`` itself (see :func:`seifert_lambda_prime`).  Negative
    fractions are handled through the crossing-changed diagram of ``-f``:
    same types, opposite base sign, and the resulting path negated.
    """
    f = Fraction(f)
    if f.denominator == 1:
        raise EdgepathError("gamma_s needs a non-integral fraction")
    if f < 0:
        return reduced_transform(seifert_gamma(-f, types, -base_sign), "negate")
    z = math.floor(f)
    inner = seifert_lambda_prime(f - z, types, base_sign)
    shifted = reduced_transform(inner, "add", z)
    if types[0].family in ("V", "D"):
        return Edgepath((INF,) + shifted.vertices)
    if z == 0:
        return shifted
    return vertical_run(0, z - 1) + shifted


def seifert_system(expr, choice=0):
    """Gamma_s with tangle orientations induced from an oriented knot."""
    if not is_knot(expr).is_knot:
        raise EdgepathError(f"{expr} is a link: {link_reason(expr)}")
    d = dg.orient_diagram(dg.assemble_montesinos_diagram(expr), choice)
    return _seifert_from_oriented(d)


def _seifert_from_oriented(d):
    paths = tuple(seifert_gamma(t.fraction, t.types, t.base_sign)
                  for t in dg.tangle_orientations(d))
    return EdgepathSystem(paths)


# -- slope bounds --------------------------------------------------------------

@dataclass(frozen=True)
class SlopeBoundsReport:
    expression: object
    restricted: object
    continued_fractions: tuple
    C_plus: int
    C_minus: int
    twist_Gamma_inc: int
    twist_Gamma_dec: int
    twist_Gamma_s: int
    slope_lower: int
    slope_upper: int
    crossing_lower: int         # -2 C_-, from the diagram
    crossing_upper: int         # 2 C_+, from the diagram
    verified: bool
    crossing_number: int
    diameter_bound: int
    Gamma_inc: object = None
    Gamma_dec: object = None
    Gamma_s: object = None

    def as_dict(self):
        return {
            "expression": self.expression.text(),
            "restricted_expression": self.restricted.expression.text(),
            "restricted_kind": self.restricted.kind.value,
            "continued_fractions": [list(cf) for cf in self.continued_fractions],
            "C_plus": self.C_plus,
            "C_minus": self.C_minus,
            "twist_Gamma_inc": self.twist_Gamma_inc,
            "twist_Gamma_dec": self.twist_Gamma_dec,
            "twist_Gamma_s": self.twist_Gamma_s,
            "slope_lower": self.slope_lower,
            "slope_upper": self.slope_upper,
            "crossing_lower": self.crossing_lower,
            "crossing_upper": self.crossing_upper,
            "verified": self.verified,
            "crossing_number": self.crossing_number,
            "diameter_bound": self.diameter_bound,
            "Gamma_inc": [str(p) for p in self.Gamma_inc],
            "Gamma_dec": [str(p) for p in self.Gamma_dec],
            "Gamma_s": [str(p) for p in self.Gamma_s],
        }


def standard_crossing_total(expr):
    return sum(sum(abs(a) for a in standard_continued_fraction(t)) for t in expr)


def slope_bounds(expr, choice=0):
    """Both routes to the bounds -2 C_- <= R <= 2 C_+ plus the crossing-number bound."""
    if not is_knot(expr).is_knot:
        raise EdgepathError(f"{expr} is a link: {link_reason(expr)}")
    d = dg.orient_diagram(dg.assemble_montesinos_diagram(expr), choice)
    c_plus, c_minus = dg.count_signed_crossings(d)
    inc, dec = monotone_systems(expr)
    seifert = _seifert_from_oriented(d)
    lower = int(slope(inc, seifert))
    upper = int(slope(dec, seifert))
    if lower != -2 * c_minus or upper != 2 * c_plus:
        raise IdentityViolation(
            f"{expr}: slopes ({lower}, {upper}) vs crossings (-2*{c_minus}, 2*{c_plus})")
    restricted = to_restricted_expression(expr)
    cn = standard_crossing_total(restricted.expression)
    return SlopeBoundsReport(
        expression=expr, restricted=restricted,
        continued_fractions=tuple(tuple(standard_continued_fraction(t)) for t in expr),
        C_plus=c_plus, C_minus=c_minus,
        twist_Gamma_inc=inc.twist, twist_Gamma_dec=dec.twist, twist_Gamma_s=seifert.twist,
        slope_lower=lower, slope_upper=upper,
        crossing_lower=-2 * c_minus, crossing_upper=2 * c_plus, verified=True,
        crossing_number=cn, diameter_bound=2 * cn,
        Gamma_inc=inc, Gamma_dec=dec, Gamma_s=seifert)
