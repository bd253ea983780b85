"""
Static SVG of the Hatcher-Oertel diagram window with edgepath systems drawn on it.
"""
from xml.sax.saxutils import escape
import math

from .rational import Fraction, farey_adjacent, format_fraction
from .edgepath import slope_bounds

WIDTH, HEIGHT, MARGIN = 640, 640, 60
STYLES = {
    "Gamma_inc": "stroke:#1f77b4;stroke-width:2.5",
    "Gamma_dec": "stroke:#d62728;stroke-width:2.5",
    "Gamma_s": "stroke:#2ca02c;stroke-width:2;stroke-dasharray:6 4",
}


def _background_vertices(lo, hi, max_den):
    verts = []
    for q in range(1, max_den + 1):
        for p in range(math.floor(lo * q), math.ceil(hi * q) + 1):
            f = Fraction(p, q)
            if f.denominator == q and lo <= f <= hi:
                verts.append(f)
    return verts


def render_svg(expr, max_background_denominator=6):
    """SVG text for the diagram window covering every vertex of the three systems."""
    report = slope_bounds(expr)
    systems = {"Gamma_inc": report.Gamma_inc, "Gamma_dec": report.Gamma_dec,
               "Gamma_s": report.Gamma_s}
    finite = [v.value for sys in systems.values() for p in sys for v in p.vertices
              if not v.is_infinity]
    lo = math.floor(min(finite + [Fraction(0)]))
    hi = math.ceil(max(finite + [Fraction(0)]))
    if hi == lo:
        hi += 1

    def xy(u, v):
        x = MARGIN + (u + 1) / 2 * (WIDTH - 2 * MARGIN)
        y = HEIGHT - MARGIN - (v - lo) / (hi - lo) * (HEIGHT - 2 * MARGIN)
        return float(x), float(y)

    def pos(vertex, neighbour):
        if vertex.is_infinity:
            # draw <1/0> on the left edge at the height of the integer it meets
            return xy(-1, neighbour.v)
        return xy(vertex.u, vertex.v)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
           f'viewBox="0 0 {WIDTH} {HEIGHT}">',
           f"<title>{escape(str(expr))}</title>",
           '<g id="background" style="stroke:#bbbbbb;stroke-width:0.7;fill:none">']
    bg = _background_vertices(lo, hi, max_background_denominator)
    for i, a in enumerate(bg):
        for b in bg[i + 1:]:
            if farey_adjacent(a, b) and not (a.denominator == b.denominator == 1):
                (x1, y1), (x2, y2) = xy(Fraction(a.denominator - 1, a.denominator), a), \
                    xy(Fraction(b.denominator - 1, b.denominator), b)
                out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}"/>')
    (x1, y1), (x2, y2) = xy(0, lo), xy(0, hi)
    out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}"/>')
    for z in range(lo, hi + 1):
        (x1, y1), (x2, y2) = xy(-1, z), xy(0, z)
        out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
                   'style="stroke-dasharray:2 3"/>')
    for t in expr:
        (x1, y1), (x2, y2) = xy(Fraction(t.denominator - 1, t.denominator), t), xy(1, t)
        out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}"/>')
    out.append("</g>")

    used = {}
    for name, system in systems.items():
        out.append(f'<g id="{name}" style="fill:none;{STYLES[name]}">')
        for i, path in enumerate(system):
            verts = path.vertices
            pts = []
            for j, v in enumerate(verts):
                neighbour = verts[j + 1] if j + 1 < len(verts) else verts[j - 1]
                x, y = pos(v, neighbour)
                pts.append(f"{x:.2f},{y:.2f}")
                label = "<1/0>" if v.is_infinity else str(v)
                used.setdefault((round(x, 2), round(y, 2)), label)
            out.append(f'<polyline class="{name}" data-tangle="{i + 1}" '
                       f'points="{" ".join(pts)}"><title>{escape(str(path))}</title></polyline>')
        out.append("</g>")
    for t in expr:
        x, y = xy(1, t)
        used.setdefault((round(x, 2), round(y, 2)), f"o{format_fraction(t)}")
    out.append('<g id="labels" style="font-family:sans-serif;font-size:11px;fill:#222">')
    for (x, y), label in sorted(used.items()):
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="2.5"/>')
        out.append(f'<text class="vertex-label" x="{x + 4:.2f}" y="{y - 4:.2f}">'
                   f"{escape(label)}</text>")
    out.append("</g>")
    legend_y = 20
    for name in systems:
        out.append(f'<text x="{MARGIN}" y="{legend_y}" style="font-size:12px">'
                   f"{name} (twist {getattr(report, 'twist_' + name)})</text>")
        legend_y += 14
    out.append("</svg>")
    return "\n".join(out) + "\n"
