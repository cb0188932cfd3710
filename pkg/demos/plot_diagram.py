"""Render candidate edgepath systems to SVG and TSV files.

Usage: python3 plot_diagram.py [outdir]
"""

import os
import sys

from tangleslopes import kn, parse, render, solve
from tangleslopes.plotting import render_svg, render_tsv


def emit(expr, stem, outdir):
    rep = solve(expr)
    if not rep.systems:
        print("%s: nothing to draw" % stem)
        return
    svg = os.path.join(outdir, stem + ".svg")
    tsv = os.path.join(outdir, stem + ".tsv")
    with open(svg, "w") as fh:
        fh.write(render_svg(rep.systems, title=render(expr)))
    with open(tsv, "w") as fh:
        fh.write(render_tsv(rep.systems))
    segments = sum(1 for _ in open(tsv))
    print("%s: %d systems, %d segments -> %s, %s" % (
        render(expr), len(rep.systems), segments, svg, tsv))


def main(argv):
    outdir = argv[1] if len(argv) > 1 else "plots"
    os.makedirs(outdir, exist_ok=True)
    emit(kn(2), "kn2", outdir)
    emit(kn(3), "kn3", outdir)
    emit(parse("-1/2 + 1/3 + 1/7"), "pretzel_237", outdir)
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
