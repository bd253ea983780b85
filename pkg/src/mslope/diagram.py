"""
Standard diagrams of rational tangles and Montesinos knots.

Diagrams are combinatorial.  A crossing has four arms, each labelled with
the compass direction it points to (NE, NW, SW, SE); arms 0 and 2 form one
strand and arms 1 and 3 the other.  Every tangle box built along the way
contributes four two-armed *junctions* (arm 0 faces into the box, arm 1
out of it), so the corner orientation of any nested sub-tangle can be read
off after the whole knot is oriented.

Reflection in the NW-SE diagonal swaps the NE and SW labels everywhere;
handedness, and with it every crossing sign, comes out of the compass
geometry, so "signs invert on taking mirror" holds by construction.

Chirality: in a positive integer tangle the SW-NE strand passes over.
With both strands running left to right such a crossing is negative.
"""
from dataclasses import dataclass, field, replace
import enum
import itertools
import re

from .rational import evaluate_continued_fraction, standard_continued_fraction

CORNERS = ("NW", "NE", "SW", "SE")
VECTORS = {"NE": (1, 1), "NW": (-1, 1), "SW": (-1, -1), "SE": (1, -1)}
# counterclockwise order of compass positions, used by PD export
CCW = ("NE", "NW", "SW", "SE")
DIAGONAL_REFLECTION = {"NE": "SW", "SW": "NE", "NW": "NW", "SE": "SE"}


class DiagramError(ValueError):
    pass


class OrientedTangleType(enum.Enum):
    H0 = ("H", "0/1")
    D0 = ("D", "0/1")
    V_INF = ("V", "1/0")
    D_INF = ("D", "1/0")
    V1 = ("V", "1/1")
    H1 = ("H", "1/1")

    @property
    def family(self):
        """'H', 'V' or 'D': the union classes H*, V*, D*."""
        return self.value[0]

    @property
    def connectivity(self):
        return self.value[1]

    def __str__(self):
        return self.name.replace("_INF", "inf")


_FLOW = {
    frozenset({"NW", "SW"}): "H", frozenset({"NE", "SE"}): "H",
    frozenset({"NW", "NE"}): "V", frozenset({"SW", "SE"}): "V",
    frozenset({"NW", "SE"}): "D", frozenset({"NE", "SW"}): "D",
}
_TYPES = {t.value: t for t in OrientedTangleType}


@dataclass
class Crossing:
    id: int
    labels: list            # compass position of arms 0..3
    over: int               # 0: strand of arms (0, 2) on top; 1: arms (1, 3)
    row: int                # integer twist region the crossing belongs to
    # arm through which each strand enters, filled in by orientation
    entry: list = field(default_factory=lambda: [None, None])


@dataclass
class Junction:
    id: int
    box: int
    corner: str             # corner label in the box's own frame
    entering: bool = None   # orientation runs from arm 1 (outside) to arm 0


@dataclass
class Box:
    """A tangle sub-box; ``terms`` is the continued fraction it realizes."""
    id: int
    kind: str               # 'integer', 'twist', 'reciprocal', 'extended'
    terms: tuple
    corners: dict           # own-frame corner label -> junction id
    tangle: int = 0         # index of the Montesinos tangle it lives in
    row: int = None         # twist-region id for integer/twist boxes
    # diagonal reflections applied to the contents since the box was made;
    # a crossing's sign in the box's own frame is its current sign times
    # (-1) ** reflections
    reflections: int = 0


class PlanarDiagram:
    """Crossings, junctions and the arcs joining their arms.

    Arms are addressed as ``(node_id, arm)``.  ``open_ends`` maps a corner
    position (current frame) to the unmatched arm there; it is empty for a
    closed diagram.  ``history`` is the continued fraction of a tangle built
    by this module, or None for assembled knots.
    """

    def __init__(self):
        self.crossings = {}
        self.junctions = {}
        self.adj = {}
        self.open_ends = {}
        self.boxes = []
        self.rows = {}          # row id -> sign of the integer it came from
        self.history = None
        self.oriented = False
        self.tangle_boxes = None    # outermost box id per Montesinos tangle
        self._next = 0

    # -- construction helpers -------------------------------------------------

    def copy(self):
        new = PlanarDiagram()
        new.crossings = {k: replace(c, labels=list(c.labels), entry=list(c.entry))
                         for k, c in self.crossings.items()}
        new.junctions = {k: replace(j) for k, j in self.junctions.items()}
        new.adj = dict(self.adj)
        new.open_ends = dict(self.open_ends)
        new.boxes = [replace(b, corners=dict(b.corners)) for b in self.boxes]
        new.rows = dict(self.rows)
        new.history = self.history
        new.oriented = self.oriented
        new.tangle_boxes = self.tangle_boxes
        new._next = self._next
        return new

    def _new_id(self):
        self._next += 1
        return self._next - 1

    def _link(self, x, y):
        self.adj[x] = y
        self.adj[y] = x

    def _new_box(self, kind, terms, ends, row=None):
        """Wrap the four ``ends`` (position -> arm) in a box of junctions."""
        box_id = len(self.boxes)
        corners = {}
        for pos in CORNERS:
            j = Junction(self._new_id(), box_id, pos)
            self.junctions[j.id] = j
            corners[pos] = j.id
            self._link((j.id, 0), ends[pos])
        self.boxes.append(Box(box_id, kind, tuple(terms), corners, row=row))
        return {pos: (corners[pos], 1) for pos in CORNERS}

    def _twist_row(self, a, kind):
        """Row of |a| crossings; returns the open ends of its box."""
        row = len(self.rows)
        self.rows[row] = (a > 0) - (a < 0)
        over = 0 if a > 0 else 1
        ids = []
        for _ in range(abs(a)):
            c = Crossing(self._new_id(), ["NE", "NW", "SW", "SE"], over, row)
            self.crossings[c.id] = c
            ids.append(c.id)
        # arm index of each compass label in a freshly made crossing
        NE, NW, SW, SE = 0, 1, 2, 3
        for left, right in zip(ids, ids[1:]):
            self._link((left, NE), (right, NW))
            self._link((left, SE), (right, SW))
        if ids:
            inner = {"NW": (ids[0], NW), "SW": (ids[0], SW),
                     "NE": (ids[-1], NE), "SE": (ids[-1], SE)}
        else:
            # two free arcs NW-NE and SW-SE; realised by the junctions alone
            inner = None
        box_id = len(self.boxes)
        corners = {}
        for pos in CORNERS:
            j = Junction(self._new_id(), box_id, pos)
            self.junctions[j.id] = j
            corners[pos] = j.id
        if inner is None:
            self._link((corners["NW"], 0), (corners["NE"], 0))
            self._link((corners["SW"], 0), (corners["SE"], 0))
        else:
            for pos in CORNERS:
                self._link((corners[pos], 0), inner[pos])
        self.boxes.append(Box(box_id, kind, (a,), corners, row=row))
        return {pos: (corners[pos], 1) for pos in CORNERS}

    # -- basic queries --------------------------------------------------------

    @property
    def crossing_count(self):
        return len(self.crossings)

    @property
    def is_closed(self):
        return not self.open_ends

    def _step(self, node, arm):
        """Arm through which a strand entering (node, arm) leaves the node."""
        if node in self.crossings:
            return (node, (arm + 2) % 4)
        return (node, 1 - arm)

    def _trace(self, start):
        """Follow the strand leaving through ``start`` until it closes or ends.

        Yields ``(node, arm_in, arm_out)`` for every node passed.
        """
        here = start
        while True:
            if here not in self.adj:
                return
            node, arm_in = self.adj[here]
            out = self._step(node, arm_in)
            yield node, arm_in, out[1]
            if out == start:
                return
            here = out

    def strands(self):
        """All strands as lists of (node, arm_in, arm_out); open ones first."""
        seen = set()
        result = []
        starts = [arm for _, arm in sorted(self.open_ends.items())]
        for end in starts:
            if end in seen:
                continue
            # an open end is an outward junction arm; the strand runs inward
            inward = self._step(*end)
            path = [(end[0], end[1], inward[1])] + list(self._trace(inward))
            for node, a_in, a_out in path:
                seen.add((node, a_in))
                seen.add((node, a_out))
            result.append(path)
        for node in sorted(itertools.chain(self.crossings, self.junctions)):
            arms = (0, 1) if node in self.crossings else (0,)
            for arm in arms:
                if (node, arm) in seen:
                    continue
                out = self._step(node, arm)
                path = list(self._trace(out))
                for n, a_in, a_out in path:
                    seen.add((n, a_in))
                    seen.add((n, a_out))
                result.append(path)
        return result

    def __repr__(self):
        kind = "closed" if self.is_closed else "tangle"
        return f"<PlanarDiagram {kind}, {self.crossing_count} crossings>"


# -- tangle construction ------------------------------------------------------

def build_integer_tangle_diagram(a):
    """Horizontal row of |a| crossings realizing the integer tangle ``a``."""
    d = PlanarDiagram()
    d.open_ends = d._twist_row(a, "integer")
    d.history = (a,)
    return d


def reflect_diagonal(d):
    """Reflect in the NW-SE diagonal: NE and SW trade places everywhere."""
    new = d.copy()
    for c in new.crossings.values():
        c.labels = [DIAGONAL_REFLECTION[x] for x in c.labels]
    new.open_ends = {DIAGONAL_REFLECTION[p]: arm for p, arm in d.open_ends.items()}
    for b in new.boxes:
        b.reflections += 1
    return new


def extend_tangle_diagram(d, a):
    """Diagram of ``[a, *history(d)]``: reflect ``d`` then add ``a`` twists on the right.

    The reflected copy of ``d`` is recorded as its own box (the tangle
    ``[0, *history(d)]``) so its orientation type stays visible.
    """
    if d.is_closed or len(d.open_ends) != 4:
        raise DiagramError("extend_tangle_diagram needs a 4-ended tangle")
    new = reflect_diagonal(d)
    history = d.history
    inner = new._new_box("reciprocal", (0,) + tuple(history or ()), new.open_ends)
    twist = new._twist_row(a, "twist")
    new._link(inner["NE"], twist["NW"])
    new._link(inner["SE"], twist["SW"])
    ends = {"NW": inner["NW"], "SW": inner["SW"], "NE": twist["NE"], "SE": twist["SE"]}
    new.open_ends = new._new_box("extended", (a,) + tuple(history or ()), ends)
    new.history = None if history is None else (a,) + history
    return new


def build_standard_tangle_diagram(terms):
    """Fold the continued fraction ``[a1, ..., ak]`` from the innermost term out."""
    terms = list(terms)
    if not terms:
        raise DiagramError("empty continued fraction")
    d = build_integer_tangle_diagram(terms[-1])
    for a in reversed(terms[:-1]):
        d = extend_tangle_diagram(d, a)
    return d


def tangle_diagram(f):
    """Standard diagram of the f-tangle."""
    return build_standard_tangle_diagram(standard_continued_fraction(f))


def fraction_of_diagram(d):
    """Fraction of a tangle recomputed from its construction history."""
    if d.history is None:
        raise DiagramError("diagram carries no construction history")
    return evaluate_continued_fraction(list(d.history))


# -- Montesinos assembly ------------------------------------------------------

def _merge(target, source, tangle_index):
    """Copy ``source`` into ``target`` with fresh ids; return its open ends."""
    offset = target._next
    for c in source.crossings.values():
        target.crossings[c.id + offset] = replace(
            c, id=c.id + offset, labels=list(c.labels), entry=list(c.entry),
            row=c.row + len(target.rows))
    for j in source.junctions.values():
        target.junctions[j.id + offset] = replace(
            j, id=j.id + offset, box=j.box + len(target.boxes))
    for (n, a), (m, b) in source.adj.items():
        target.adj[(n + offset, a)] = (m + offset, b)
    row_offset = len(target.rows)
    box_offset = len(target.boxes)
    for b in source.boxes:
        target.boxes.append(Box(
            b.id + box_offset, b.kind, b.terms,
            {p: j + offset for p, j in b.corners.items()},
            tangle=tangle_index,
            row=None if b.row is None else b.row + row_offset,
            reflections=b.reflections))
    for r, s in source.rows.items():
        target.rows[r + row_offset] = s
    target._next += source._next
    return {p: (n + offset, a) for p, (n, a) in source.open_ends.items()}


def assemble_montesinos_diagram(expr):
    """Standard diagram of M(P1/Q1, ..., PN/QN).

    Tangles sit side by side; NE/SE of each joins NW/SW of the next, and
    two outer arcs join the last tangle's NE/SE back to the first's NW/SW.
    """
    d = PlanarDiagram()
    ends = [_merge(d, tangle_diagram(t), i) for i, t in enumerate(expr)]
    n = len(ends)
    for i in range(n):
        right, left = ends[i], ends[(i + 1) % n]
        d._link(right["NE"], left["NW"])
        d._link(right["SE"], left["SW"])
    d.tangle_boxes = [_outer_box(d, i) for i in range(n)]
    return d


def _outer_box(d, tangle_index):
    boxes = [b for b in d.boxes if b.tangle == tangle_index]
    return boxes[-1].id


def count_components(d):
    if not d.is_closed:
        raise DiagramError("count_components needs a closed diagram")
    return len(d.strands())


# -- orientation ----------------------------------------------------------------

def _orient_path(d, path):
    for node, a_in, a_out in path:
        if node in d.crossings:
            d.crossings[node].entry[a_in % 2] = a_in
        else:
            d.junctions[node].entering = (a_in == 1)


def _reverse(path):
    return [(n, a_out, a_in) for n, a_in, a_out in reversed(path)]


def orient_diagram(d, choice=0):
    """Orient a one-component closed diagram; ``choice`` picks the direction."""
    if not d.is_closed:
        raise DiagramError("orient_diagram needs a closed diagram")
    strands = d.strands()
    if len(strands) != 1:
        raise DiagramError(f"diagram has {len(strands)} components, not a knot")
    new = d.copy()
    path = strands[0] if choice == 0 else _reverse(strands[0])
    _orient_path(new, path)
    new.oriented = True
    return new


def orient_all_components(d):
    """Orient every component of a closed diagram in its traced direction."""
    new = d.copy()
    for path in d.strands():
        _orient_path(new, path)
    new.oriented = True
    return new


def orient_tangle(d, entering=("NW", "NE")):
    """Orient a 4-ended tangle so strands enter at the ``entering`` corners."""
    if len(d.open_ends) != 4:
        raise DiagramError("orient_tangle needs a 4-ended tangle")
    new = d.copy()
    entering = set(entering)
    seen = set()
    for pos in CORNERS:
        if pos in seen:
            continue
        end = d.open_ends[pos]
        inward = d._step(*end)
        path = [(end[0], end[1], inward[1])] + list(d._trace(inward))
        last_node, _, last_out = path[-1]
        other = next(p for p, arm in d.open_ends.items() if arm == (last_node, last_out))
        seen.update({pos, other})
        if (pos in entering) == (other in entering):
            raise DiagramError(
                f"corners {pos} and {other} lie on one strand; exactly one must be entering")
        if pos not in entering:
            path = _reverse(path)
        _orient_path(new, path)
    new.oriented = True
    return new


# -- signs -------------------------------------------------------------------

def _direction(c, strand):
    arm_in = c.entry[strand]
    if arm_in is None:
        raise DiagramError(f"crossing {c.id} is not oriented")
    x0, y0 = VECTORS[c.labels[arm_in]]
    x1, y1 = VECTORS[c.labels[(arm_in + 2) % 4]]
    return (x1 - x0, y1 - y0)


def crossing_sign(c):
    """+1 for a right-handed (positive) crossing: cross(over, under) > 0."""
    ox, oy = _direction(c, c.over)
    ux, uy = _direction(c, 1 - c.over)
    z = ox * uy - oy * ux
    return 1 if z > 0 else -1


def crossing_signs(d):
    if not d.oriented:
        raise DiagramError("diagram is not oriented")
    return {cid: crossing_sign(c) for cid, c in d.crossings.items()}


def count_signed_crossings(d, crossing_ids=None):
    """(C+, C-) of an oriented diagram, optionally over a subset of crossings."""
    signs = crossing_signs(d)
    if crossing_ids is not None:
        signs = {k: signs[k] for k in crossing_ids}
    plus = sum(1 for s in signs.values() if s > 0)
    return plus, len(signs) - plus


def box_crossings(d, box_id):
    """Ids of the crossings inside a box (found by walking from its corners)."""
    box = d.boxes[box_id]
    mine = set(box.corners.values())
    found = set()
    for pos in CORNERS:
        j = box.corners[pos]
        here = (j, 0)
        while True:
            node, arm = d.adj[here]
            if node in mine:
                break
            if node in d.crossings:
                found.add(node)
            here = d._step(node, arm)
    # a strand may visit a crossing whose other strand is the only route; the
    # walk above already covers both strands since every strand meets a corner
    return found


# -- tangle types -------------------------------------------------------------

def _box_connectivity(d, box):
    mine = {j: pos for pos, j in box.corners.items()}
    here = (box.corners["NW"], 0)
    while True:
        node, arm = d.adj[here]
        if node in mine:
            partner = mine[node]
            break
        here = d._step(node, arm)
    return {"NE": "0/1", "SW": "1/0", "SE": "1/1"}[partner]


def classify_box(d, box_id):
    """Oriented type of a sub-box, read in the box's own frame."""
    box = d.boxes[box_id]
    entering = frozenset(pos for pos, j in box.corners.items()
                         if d.junctions[j].entering)
    if any(d.junctions[j].entering is None for j in box.corners.values()):
        raise DiagramError("box corners are not oriented")
    if len(entering) != 2:
        raise DiagramError(f"inconsistent boundary orientation: entering at {sorted(entering)}")
    conn = _box_connectivity(d, box)
    key = (_FLOW[entering], conn)
    if key not in _TYPES:
        raise DiagramError(f"inconsistent boundary orientation {key}")
    return _TYPES[key]


def classify_oriented_tangle(d):
    """Type of an oriented standalone tangle diagram (its outermost box)."""
    if not d.oriented or len(d.open_ends) != 4:
        raise DiagramError("need an oriented 4-ended tangle")
    return classify_box(d, len(d.boxes) - 1)


@dataclass(frozen=True)
class TangleOrientation:
    """Orientation data the Seifert edgepath needs for one tangle.

    ``types[j]`` is the type of the nested tangle [0, a_{j+2}, ..., a_k]
    (outermost first); ``base_sign`` is the sign of the crossings of the
    innermost [0, a_k] block, read in that block's own standard diagram;
    ``outer`` is the type of the whole tangle.
    """
    fraction: object
    terms: tuple
    types: tuple
    base_sign: int
    outer: OrientedTangleType
    row_signs: tuple


def _orientation_of(d, boxes, outer_id, by_row):
    outer = d.boxes[outer_id]
    recips = sorted((b for b in boxes if b.kind == "reciprocal"),
                    key=lambda b: len(b.terms), reverse=True)
    types = tuple(classify_box(d, b.id) for b in recips)
    innermost = next(b for b in boxes if b.kind == "integer")
    base = by_row.get(innermost.row, set())
    if len(base) != 1:
        raise DiagramError("innermost twist row has mixed or no signs")
    # read the sign in the frame of the innermost [0, ak] block
    frame = recips[-1] if recips else innermost
    base_sign = next(iter(base)) * (-1) ** frame.reflections
    row_signs = tuple(
        next(iter(by_row[b.row])) if b.row in by_row else 0
        for b in boxes if b.row is not None)
    return TangleOrientation(
        evaluate_continued_fraction(list(outer.terms)), outer.terms, types,
        base_sign, classify_box(d, outer_id), row_signs)


def tangle_orientations(d):
    """Per-tangle orientation data of an oriented assembled diagram."""
    if not d.oriented:
        raise DiagramError("diagram is not oriented")
    by_row = row_sign_sets(d)
    return [_orientation_of(d, [b for b in d.boxes if b.tangle == t_index], outer_id, by_row)
            for t_index, outer_id in enumerate(d.tangle_boxes)]


def standalone_orientation(d):
    """Orientation data of an oriented standalone tangle diagram (see orient_tangle)."""
    if not d.oriented or len(d.open_ends) != 4:
        raise DiagramError("need an oriented 4-ended tangle")
    return _orientation_of(d, d.boxes, len(d.boxes) - 1, row_sign_sets(d))


def subtangle_types(expr, choice=0):
    """Types of every nested [0, a_j, ..., a_k] block of every tangle."""
    d = orient_diagram(assemble_montesinos_diagram(expr), choice)
    return [t.types for t in tangle_orientations(d)]


def row_sign_sets(d):
    """Set of crossing signs found in each twist row."""
    signs = crossing_signs(d)
    rows = {}
    for cid, c in d.crossings.items():
        rows.setdefault(c.row, set()).add(signs[cid])
    return rows


# -- PD and Gauss codes -------------------------------------------------------

def _edge_labels(d):
    """Label arcs between crossings 1..2n along each oriented component.

    Returns {(crossing, arm): label} and the per-component visit sequence.
    """
    labels = {}
    visits = []
    counter = 1
    for path in d.strands():
        cross = [(n, a_in, a_out) for n, a_in, a_out in path if n in d.crossings]
        if not cross:
            continue
        # orient the component as the diagram says
        n0, a_in0, _ = cross[0]
        if d.crossings[n0].entry[a_in0 % 2] != a_in0:
            path = _reverse(path)
            cross = [(n, a_in, a_out) for n, a_in, a_out in path if n in d.crossings]
        first = counter
        m = len(cross)
        for i, (n, a_in, a_out) in enumerate(cross):
            labels[(n, a_out)] = first + (i + 1) % m
            labels[(n, a_in)] = first + i
        counter += m
        visits.append(cross)
    return labels, visits


def export_pd(d):
    """PD code ``X[i,j,k,l]`` per crossing: i is the incoming under arc, then counterclockwise."""
    if not d.is_closed:
        raise DiagramError("PD export needs a closed diagram")
    if not d.oriented:
        d = orient_all_components(d)
    labels, _ = _edge_labels(d)
    records = []
    for cid in sorted(d.crossings):
        c = d.crossings[cid]
        under = 1 - c.over
        arm_in = c.entry[under]
        pos = {c.labels[arm]: arm for arm in range(4)}
        start = CCW.index(c.labels[arm_in])
        order = [pos[CCW[(start + k) % 4]] for k in range(4)]
        records.append("X[%s]" % ",".join(str(labels[(cid, arm)]) for arm in order))
    return "PD[" + ", ".join(records) + "]" if records else ""


_PD_RE = re.compile(r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")


def _pd_records(text):
    return [tuple(map(int, m.groups())) for m in _PD_RE.finditer(text)]


def _pd_components(records):
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j, k, l in records:
        for x, y in ((i, k), (j, l)):
            parent[find(x)] = find(y)
    comps = {}
    for x in list(parent):
        comps.setdefault(find(x), []).append(x)
    return list(comps.values())


def pd_component_count(text):
    """Components of a PD code: arcs i~k and j~l share a strand at each crossing."""
    return len(_pd_components(_pd_records(text)))


def pd_signs(text):
    """Crossing signs recovered from a PD code.

    Arc labels must increase by one along each component (wrapping at the
    component's end), as :func:`export_pd` produces.  The over strand runs
    l -> j exactly when the crossing is positive.
    """
    records = _pd_records(text)
    succ = {}
    for comp in _pd_components(records):
        lo, hi = min(comp), max(comp)
        for x in comp:
            succ[x] = lo if x == hi else x + 1
    return [1 if succ[l] == j else -1 for i, j, k, l in records]


def export_gauss(d):
    """Signed Gauss code: one line of visits (+c over, -c under), one line of signs."""
    if not d.is_closed:
        raise DiagramError("Gauss export needs a closed diagram")
    if len(d.strands()) != 1:
        raise DiagramError("Gauss code needs a one-component diagram")
    if not d.oriented:
        d = orient_diagram(d)
    if not d.crossings:
        return ""
    number = {cid: i + 1 for i, cid in enumerate(sorted(d.crossings))}
    _, visits = _edge_labels(d)
    seq = []
    for n, a_in, _ in visits[0]:
        c = d.crossings[n]
        over = (a_in % 2) == c.over
        seq.append(number[n] if over else -number[n])
    signs = crossing_signs(d)
    sign_line = " ".join(f"{number[cid]}{'+' if signs[cid] > 0 else '-'}"
                         for cid in sorted(d.crossings))
    return " ".join(str(x) for x in seq) + "\n" + sign_line
