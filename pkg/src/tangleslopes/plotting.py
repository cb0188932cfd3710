"""Figure output for stored systems: SVG 1.1 and exact-fraction TSV.

Every coordinate starts life as a Fraction. SVG attribute values are
produced by _dec, an exact scaled-integer conversion (round half away
from zero), so output never depends on float formatting. TSV cells keep
the fractions verbatim.
"""

from fractions import Fraction

from .diagram import uv_coords, vertex_point
from .edgepaths import endpoint_point

ZERO = Fraction(0)
ONE = Fraction(1)

WIDTH = 720
HEIGHT = 520
MARGIN = 60

PALETTE = ("#1b6ca8", "#c23b22", "#2e8540", "#7d3c98", "#b7950b", "#148f77")


def _dec(value, places=4):
    """Exact decimal string for a Fraction, places digits, trimmed."""
    negative = value < 0
    scaled = abs(Fraction(value)) * 10 ** places
    whole, rest = divmod(scaled.numerator, scaled.denominator)
    if 2 * rest >= scaled.denominator:
        whole += 1
    digits = str(whole).rjust(places + 1, "0")
    head, tail = digits[:-places], digits[-places:].rstrip("0")
    text = head + ("." + tail if tail else "")
    return "-" + text if negative and text != "0" else text


def _points(path):
    """The (u, v) polyline of one edgepath as exact fraction pairs."""
    if path.is_constant:
        q = path.tangle.denominator
        v = path.tangle
        here = uv_coords(path.state)
        pts = [(Fraction(q - 1, q), v), (here.u, here.v), (ONE, v)]
        deduped = [pts[0]]
        for pt in pts[1:]:
            if pt != deduped[-1]:
                deduped.append(pt)
        return tuple(deduped)
    pts = [vertex_point(v) for v in path.vertices]
    if path.final_fraction != 1:
        pts[-1] = endpoint_point(path)
    return tuple((p.u, p.v) for p in pts)


def _collect(systems):
    """Distinct polylines across systems, first-seen order, with leaf index."""
    seen = set()
    collected = []
    for system in systems:
        for index, path in enumerate(system.assignment):
            pts = _points(path)
            if len(pts) < 2 or pts in seen:
                continue
            seen.add(pts)
            collected.append((index, pts))
    return collected


def render_tsv(systems):
    """One line per drawn segment: u1, v1, u2, v2 as reduced fractions."""
    rows = set()
    for _, pts in _collect(systems):
        for a, b in zip(pts, pts[1:]):
            rows.add(a + b)
    lines = ["\t".join(str(x) for x in row) for row in sorted(rows)]
    return "\n".join(lines) + "\n" if lines else ""


def render_svg(systems, title=None):
    """The strip 0 <= u <= 1 with all stored edgepaths as polylines."""
    collected = _collect(systems)
    values = [v for _, pts in collected for _, v in pts]
    vmin = min(values + [ZERO])
    vmax = max(values + [ONE])
    span = vmax - vmin

    def x(u):
        return MARGIN + u * (WIDTH - 2 * MARGIN)

    def y(v):
        return MARGIN + (vmax - v) * (HEIGHT - 2 * MARGIN) / span

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        'width="%d" height="%d" viewBox="0 0 %d %d">' % (WIDTH, HEIGHT, WIDTH, HEIGHT),
    ]
    if title:
        parts.append("<title>%s</title>" % _escape(title))
    parts.append(
        '<rect x="0" y="0" width="%d" height="%d" fill="#fdfdf8"/>' % (WIDTH, HEIGHT)
    )
    parts.append(
        '<rect x="%s" y="%s" width="%s" height="%s" fill="none" '
        'stroke="#888888" stroke-width="1"/>'
        % (_dec(x(ZERO)), MARGIN, _dec(x(ONE) - x(ZERO)), HEIGHT - 2 * MARGIN)
    )
    # the u = 0 closure line, where systems meet the axis
    parts.append(
        '<line x1="%s" y1="%d" x2="%s" y2="%d" stroke="#444444" '
        'stroke-width="2"/>' % (_dec(x(ZERO)), MARGIN, _dec(x(ZERO)), HEIGHT - MARGIN)
    )
    for label, u in (("u=0", ZERO), ("u=1", ONE)):
        parts.append(
            '<text x="%s" y="%d" font-size="12" text-anchor="middle" '
            'fill="#333333">%s</text>' % (_dec(x(u)), HEIGHT - MARGIN + 18, label)
        )
    for label, v in (("v=%s" % vmin, vmin), ("v=%s" % vmax, vmax)):
        parts.append(
            '<text x="%d" y="%s" font-size="12" text-anchor="end" '
            'fill="#333333">%s</text>'
            % (MARGIN - 6, _dec(y(v) + 4), _escape(label))
        )
    for index, pts in collected:
        color = PALETTE[index % len(PALETTE)]
        points = " ".join("%s,%s" % (_dec(x(u)), _dec(y(v))) for u, v in pts)
        parts.append(
            '<polyline points="%s" fill="none" stroke="%s" '
            'stroke-width="1.5"/>' % (points, color)
        )
        for u, v in pts:
            parts.append(
                '<circle cx="%s" cy="%s" r="2.5" fill="%s"/>'
                % (_dec(x(u)), _dec(y(v)), color)
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _escape(text):
    return (
        str(text)
        .replace("&", "&amp;")
        .replace("<", "&lt;")
        .replace(">", "&gt;")
    )
