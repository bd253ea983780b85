"""
Seeded random expressions and batch verification of the slope identities.
"""
from dataclasses import dataclass, asdict
from concurrent.futures import ProcessPoolExecutor
import random

from .rational import Fraction
from .montesinos import (MontesinosExpression, classify_restricted, is_knot,
                         mirror, to_restricted_expression)
from . import diagram as dg
from .edgepath import IdentityViolation, slope_bounds, standard_crossing_total
from .enumerator import EnumerationLimitError, EnumerationLimits, verify_twist_ordering

PROPERTIES = ("crossing_identity", "orientation", "mirror", "parity", "restricted", "enumerator")


class RejectionBudgetExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class CampaignConfig:
    count: int = 1000
    seed: int = 0
    min_tangles: int = 3
    max_tangles: int = 6
    max_denominator: int = 12
    max_abs_value: int = 4          # |P/Q| <= this
    enumerate_max_denominator: int = 7
    minimality: bool = True
    jobs: int = 1

    def __post_init__(self):
        if self.count < 0:
            raise ValueError("count must be non-negative")
        if not 1 <= self.min_tangles <= self.max_tangles:
            raise ValueError("bad tangle-count range")
        if self.max_denominator < 2 or self.max_abs_value < 1:
            raise ValueError("bounds must allow a non-integral fraction")


def random_fraction(config, rng):
    """Uniform over non-integral P/Q with 2 <= Q <= bound and |P/Q| <= max_abs_value."""
    while True:
        q = rng.randint(2, config.max_denominator)
        p = rng.randint(-config.max_abs_value * q, config.max_abs_value * q)
        f = Fraction(p, q)
        if f.denominator != 1:
            return f


def random_expression(config, rng, knot=True, budget=10_000, rejected=None):
    """Draw N then N fractions; with ``knot`` set, redraw until the parity condition holds.

    Rejected link expressions are appended to ``rejected`` when given.
    """
    for _ in range(budget):
        n = rng.randint(config.min_tangles, config.max_tangles)
        expr = MontesinosExpression(tuple(random_fraction(config, rng) for _ in range(n)))
        if not knot or is_knot(expr).is_knot:
            return expr
        if rejected is not None:
            rejected.append(expr)
    raise RejectionBudgetExhausted(f"no knot after {budget} draws")


def generate_corpus(config):
    """``count`` knot expressions plus the links rejected on the way."""
    rng = random.Random(config.seed)
    knots, links = [], []
    for _ in range(config.count):
        knots.append(random_expression(config, rng, rejected=links))
    return knots, links


def check_parity(expr):
    d = dg.assemble_montesinos_diagram(expr)
    return (dg.count_components(d) == 1) == is_knot(expr).is_knot


def check_expression(expr, config):
    """Run every property on one knot expression; returns {property: failure or None}."""
    out = {}
    try:
        rep = slope_bounds(expr, 0)
        out["crossing_identity"] = None
    except IdentityViolation as exc:
        return {"crossing_identity": str(exc)}
    rep1 = slope_bounds(expr, 1)
    same = (rep1.C_plus, rep1.C_minus, rep1.twist_Gamma_s) == (rep.C_plus, rep.C_minus, rep.twist_Gamma_s)
    out["orientation"] = None if same else "orientation choice changed C+/C-/twist(Gamma_s)"
    m = slope_bounds(mirror(expr))
    ok = (m.C_plus, m.C_minus) == (rep.C_minus, rep.C_plus) and \
        (m.slope_lower, m.slope_upper) == (-rep.slope_upper, -rep.slope_lower)
    out["mirror"] = None if ok else "mirror did not swap crossing counts / negate bounds"
    out["parity"] = None if check_parity(expr) else "component count disagrees"
    r = to_restricted_expression(expr)
    ok = (classify_restricted(r.expression.tangles) is r.kind
          and to_restricted_expression(r.expression) == r
          and r.expression.total() == expr.total()
          and is_knot(r.expression) == is_knot(expr)
          and standard_crossing_total(r.expression) <= standard_crossing_total(expr))
    out["restricted"] = None if ok else "restricted normalization property failed"
    if all(t.denominator <= config.enumerate_max_denominator for t in expr) and len(expr) <= 4:
        try:
            res = verify_twist_ordering(
                expr, EnumerationLimits(max_denominator=config.enumerate_max_denominator),
                config.minimality)
            out["enumerator"] = None if res["failed"] == 0 else f"{res['failed']} violations"
        except EnumerationLimitError:
            pass
    return out


def _check_star(args):
    expr, config = args
    return check_expression(expr, config)


def run_verification(config):
    """Summary dict; ``ok`` is False iff any property failed on any expression."""
    knots, links = generate_corpus(config)
    if config.jobs > 1 and knots:
        with ProcessPoolExecutor(config.jobs) as pool:
            results = list(pool.map(_check_star, [(e, config) for e in knots], chunksize=16))
    else:
        results = [check_expression(e, config) for e in knots]
    counts = {p: {"passed": 0, "failed": 0} for p in PROPERTIES}
    failures = []
    for expr, res in zip(knots, results):
        for prop, err in res.items():
            counts[prop]["failed" if err else "passed"] += 1
            if err:
                failures.append({"expression": expr.text(), "property": prop, "error": err})
    for expr in links:
        ok = check_parity(expr)
        counts["parity"]["passed" if ok else "failed"] += 1
        if not ok:
            failures.append({"expression": expr.text(), "property": "parity",
                             "error": "component count disagrees"})
    failures.sort(key=lambda f: (f["property"], f["expression"]))
    return {
        "config": asdict(config),
        "knots": len(knots),
        "links_checked": len(links),
        "properties": counts,
        "failures": failures,
        "ok": not failures,
    }
