"""JSON, CSV and plain-text renderings of slope-bound reports."""
import csv
import io
import json

CSV_FIELDS = ("expression", "restricted_expression", "restricted_kind", "C_plus", "C_minus",
              "twist_Gamma_inc", "twist_Gamma_dec", "twist_Gamma_s",
              "slope_lower", "slope_upper", "verified", "crossing_number", "diameter_bound")

REQUIRED_KEYS = frozenset(CSV_FIELDS) | {"continued_fractions", "crossing_lower",
                                         "crossing_upper", "Gamma_inc", "Gamma_dec", "Gamma_s"}


def to_json(reports):
    rows = [r.as_dict() for r in reports]
    return json.dumps(rows[0] if len(rows) == 1 else rows, indent=2, sort_keys=True) + "\n"


def to_csv(reports):
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, extrasaction="ignore",
                            lineterminator="\n")
    writer.writeheader()
    for r in reports:
        writer.writerow(r.as_dict())
    return buf.getvalue()


def to_plain(reports, show_restricted=False):
    lines = []
    for r in reports:
        d = r.as_dict()
        lines.append(str(r.expression))
        if show_restricted:
            lines.append(f"  restricted:      M({d['restricted_expression']})  [{d['restricted_kind']}]")
        lines.append(f"  C+ = {r.C_plus}, C- = {r.C_minus}")
        lines.append(f"  twists:          inc {r.twist_Gamma_inc}, dec {r.twist_Gamma_dec}, "
                     f"seifert {r.twist_Gamma_s}")
        lines.append(f"  slope bounds:    {r.slope_lower} <= R <= {r.slope_upper}"
                     f"  (crossings: {r.crossing_lower}, {r.crossing_upper}; "
                     f"{'verified' if r.verified else 'MISMATCH'})")
        lines.append(f"  crossing number: {r.crossing_number}, diameter bound {r.diameter_bound}")
        for name in ("Gamma_inc", "Gamma_dec", "Gamma_s"):
            lines.append(f"  {name}:")
            for p in getattr(r, name):
                lines.append(f"    {p}")
    return "\n".join(lines) + "\n"


def check_report_dict(d):
    """Re-validate a parsed JSON report: keys present and the bound identities hold."""
    from .montesinos import parse_expression
    missing = REQUIRED_KEYS - set(d)
    if missing:
        raise ValueError(f"report missing keys {sorted(missing)}")
    parse_expression(d["expression"])
    parse_expression(d["restricted_expression"])
    if d["slope_lower"] != -2 * d["C_minus"] or d["slope_upper"] != 2 * d["C_plus"]:
        raise ValueError("slope bounds disagree with crossing counts")
    if d["slope_upper"] - d["slope_lower"] != 2 * (d["C_plus"] + d["C_minus"]):
        raise ValueError("bound width is not twice the crossing total")
    return True
