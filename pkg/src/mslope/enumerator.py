"""
Brute-force enumeration of basic edgepaths and type II/III candidate systems.

Used as an oracle: every candidate system's twist must lie between the
twists of the monotone systems, so every candidate slope lies inside the
crossing-count bounds.  No essentialness test is applied, which makes the
check stronger, not weaker.
"""
from dataclasses import dataclass
from functools import lru_cache
import itertools
import logging

from .rational import Fraction, farey_adjacent, farey_parents
from .edgepath import (INF, Edgepath, EdgepathSystem, monotone_basic_edgepath,
                       slope_bounds, vertical_run)

log = logging.getLogger(__name__)


class EnumerationLimitError(RuntimeError):
    pass


@dataclass(frozen=True)
class EnumerationLimits:
    max_denominator: int = 64
    max_paths: int = 10_000
    max_systems: int = 200_000

    def __post_init__(self):
        if min(self.max_denominator, self.max_paths, self.max_systems) <= 0:
            raise ValueError("enumeration limits must be positive")


def _walks(f, minimal):
    """Leftward walks from <f> to an integer; each step goes to a Farey parent."""
    stack = [(f,)]
    while stack:
        chain = stack.pop()
        head = chain[-1]
        if head.denominator == 1:
            yield chain
            continue
        for nxt in farey_parents(head):
            if minimal and len(chain) >= 2 and farey_adjacent(chain[-2], nxt):
                # two consecutive edges of one triangle
                continue
            stack.append(chain + (nxt,))


def enumerate_minimal_basic_edgepaths(f, limits=EnumerationLimits(), minimal=True):
    """All basic edgepaths from <f>, sorted by their written vertex sequence.

    With ``minimal`` set, paths never run along two edges of one triangle
    in a row.  Leftward steps always land on a Farey parent, so there is no
    retracing to rule out.
    """
    f = Fraction(f)
    if f.denominator == 1:
        raise ValueError("basic edgepaths start at a non-integral vertex")
    if f.denominator > limits.max_denominator:
        raise EnumerationLimitError(
            f"denominator {f.denominator} exceeds limit {limits.max_denominator}")
    paths = []
    for chain in _walks(f, minimal):
        paths.append(Edgepath.from_values(reversed(chain)))
        if len(paths) > limits.max_paths:
            raise EnumerationLimitError(f"more than {limits.max_paths} paths from {f}")
    paths.sort(key=lambda p: [(v.value.numerator, v.value.denominator) for v in p.vertices])
    return paths


def complete(path, kind):
    """Extend a basic path to type III (infinity edge) or type II (vertical run to <0>)."""
    if kind == "typeIII":
        return Edgepath((INF,) + path.vertices)
    if kind == "typeII":
        return vertical_run(0, int(path.end.v)) + path
    raise ValueError(f"unknown system kind {kind!r}")


@lru_cache(maxsize=4096)
def _completed_paths(f, kind, limits, minimal):
    return tuple(complete(p, kind) for p in enumerate_minimal_basic_edgepaths(f, limits, minimal))


def assemble_candidate_systems(expr, kind, limits=EnumerationLimits(), minimal=True):
    """Every combination of per-tangle basic paths, completed to ``kind``."""
    per_tangle = [_completed_paths(t, kind, limits, minimal) for t in expr]
    total = 1
    for options in per_tangle:
        total *= len(options)
    if total > limits.max_systems:
        raise EnumerationLimitError(f"{total} systems exceed limit {limits.max_systems}")
    return [EdgepathSystem(combo) for combo in itertools.product(*per_tangle)]


def verify_twist_ordering(expr, limits=EnumerationLimits(), minimal=True):
    """Check twist(G_inc) <= twist(G) <= twist(G_dec) and the slope bounds on all candidates."""
    report = slope_bounds(expr)
    lo, hi = report.twist_Gamma_inc, report.twist_Gamma_dec
    seifert_twist = report.twist_Gamma_s
    checked = passed = 0
    twists = []
    violations = []
    for kind in ("typeII", "typeIII"):
        for system in assemble_candidate_systems(expr, kind, limits, minimal):
            checked += 1
            t = system.twist
            s = t - seifert_twist
            twists.append(t)
            ok = lo <= t <= hi and report.slope_lower <= s <= report.slope_upper
            if ok:
                passed += 1
            else:
                violations.append({"kind": kind, "system": [str(p) for p in system],
                                   "twist": t, "slope": s})
    if violations:
        log.warning("%s: %d ordering violations", expr, len(violations))
    return {
        "expression": expr.text(),
        "minimality": minimal,
        "checked": checked,
        "passed": passed,
        "failed": len(violations),
        "twist_Gamma_inc": lo,
        "twist_Gamma_dec": hi,
        "min_twist": min(twists) if twists else None,
        "max_twist": max(twists) if twists else None,
        "slope_lower": report.slope_lower,
        "slope_upper": report.slope_upper,
        "violations": violations,
    }


def basic_twist_range(f):
    """(twist(lambda_inc), twist(lambda_dec)) of a single tangle."""
    return (monotone_basic_edgepath(f, "inc").twist, monotone_basic_edgepath(f, "dec").twist)
