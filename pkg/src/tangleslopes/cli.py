"""Command line front end.

Subcommands: slopes (any expression), kn (the distinguished family),
verify (family invariant checks), plot (SVG/TSV figures). Exit codes:
0 success, 1 verification failure, 2 usage or parse error, 3 empty
result, 4 output I/O error. Diagnostics go to stderr; LOG_LEVEL
(error|warn|info|debug) tunes logging, default warn.
"""

import argparse
import json
import logging
import os
import sys
from fractions import Fraction

from .errors import TangleSlopesError
from .plotting import render_svg, render_tsv
from .solver import kn_system, solve, solve_sn
from .tangles import kn, parse, render

log = logging.getLogger("tangleslopes.cli")

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_EMPTY = 3
EXIT_IO = 4

SCHEMA_VERSION = 1


# ---------------------------------------------------------------------------
# report serialization


def _frac(value):
    return str(Fraction(value)) if value is not None else None


def _weights(state):
    if state is None:
        return None
    return {
        "a": state.a,
        "b": state.b,
        "c": state.c,
        "n_inf": state.n_inf,
        "has_zero": state.has_zero,
    }


def _path_doc(path):
    if path.is_constant:
        return {
            "kind": "const",
            "tangle": _frac(path.tangle),
            "state": list(path.state.triple()),
        }
    return {
        "kind": "path",
        "tangle": _frac(path.tangle),
        "vertices": [_frac(v) for v in path.vertices],
        "final_fraction": _frac(path.final_fraction),
        "sheets": path.sheets,
    }


def _node_doc(node):
    return {
        "label": node.label,
        "kind": node.kind,
        "state": _weights(node.state),
        "tau": _frac(node.tau),
        "scales": list(node.scales),
        "case_id": node.case_id,
        "m": node.m,
        "tau_prime": _frac(node.tau_prime),
        "transformed": _weights(node.transformed),
    }


def _system_doc(system):
    return {
        "slope": _frac(system.slope),
        "tau": _frac(system.tau),
        "note": system.note,
        "closure": _weights(system.closure),
        "paths": [_path_doc(p) for p in system.assignment],
        "nodes": [_node_doc(n) for n in system.nodes],
    }


def report_document(rep):
    """The JSON-ready dict for a SlopeReport; matches the shipped schema."""
    return {
        "schema_version": SCHEMA_VERSION,
        "expr": render(rep.expr),
        "c_bound": rep.c_bound,
        "scale_bound": rep.scale_bound,
        "crossings": {"count": rep.crossings, "source": rep.crossing_source},
        "slopes": [_frac(s) for s in rep.slopes],
        "certified": [_frac(s) for s in rep.certified],
        "diameter": _frac(rep.diameter),
        "ratio": _frac(rep.ratio),
        "notes": list(rep.notes),
        "systems": [_system_doc(s) for s in rep.systems],
    }


def format_json(rep):
    return json.dumps(report_document(rep), indent=2) + "\n"


def format_table(rep):
    rows = [
        ("expression", render(rep.expr)),
        ("crossings", "%d (%s)" % (rep.crossings, rep.crossing_source)),
        ("c_bound", str(rep.c_bound)),
        ("scale_bound", str(rep.scale_bound) if rep.scale_bound is not None else "-"),
        ("slopes", " ".join(str(s) for s in rep.slopes) or "(none)"),
        ("certified", " ".join(str(s) for s in rep.certified) or "(none)"),
        ("diameter", str(rep.diameter) if rep.diameter is not None else "-"),
        ("ratio", str(rep.ratio) if rep.ratio is not None else "-"),
        ("systems", str(len(rep.systems))),
    ]
    rows.extend(("note", note) for note in rep.notes)
    width = max(len(name) for name, _ in rows)
    return "\n".join("%-*s  %s" % (width, name, value) for name, value in rows) + "\n"


def _triple_text(state):
    return "(%d,%d,%d)" % (state.a, state.b, state.c)


def format_trace(system, n):
    """The intermediate values of the distinguished family system."""
    root, lsum, rsum = system.nodes[0], system.nodes[1], system.nodes[4]
    lines = [
        "family system n=%d" % n,
        "  leaf triples  %s %s"
        % (_triple_text(system.nodes[2].state), _triple_text(system.nodes[3].state)),
        "  glued         %s" % _triple_text(lsum.state),
        "  transformed   %s  tau'=%s" % (_triple_text(root.transformed), root.tau_prime),
        "  right tau     %s" % rsum.tau,
        "  system tau    %s" % root.tau,
        "  slope         %s" % system.slope,
    ]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# subcommands


def _write_out(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _emit_report(rep, args):
    text = format_json(rep) if args.format == "json" else format_table(rep)
    if getattr(args, "trace", None):
        text += args.trace
    _write_out(text, args.out)
    if not rep.slopes:
        for note in rep.notes:
            print("diagnostic: %s" % note, file=sys.stderr)
        print("no candidate slopes found", file=sys.stderr)
        return EXIT_EMPTY
    return EXIT_OK


def cmd_slopes(args):
    expr = parse(args.expr)
    rep = solve(expr, args.c_bound, args.scale_bound)
    return _emit_report(rep, args)


def cmd_kn(args):
    system = kn_system(args.n)
    rep = solve_sn(kn(args.n), args.c_bound, args.scale_bound)
    if args.format == "table":
        args.trace = format_trace(system, args.n)
    return _emit_report(rep, args)


def _verify_one(n, c_bound, scale_bound):
    """Returns (passed, stdout line) for one family index."""
    high = Fraction(2 * (n + 1) ** 2 - 4)
    try:
        kn_system(n)
    except RuntimeError as exc:
        return False, "n=%d FAIL (trace: %s)" % (n, exc)
    rep = solve_sn(kn(n), c_bound, scale_bound)
    if not {high, -high} <= set(rep.slopes):
        return False, "n=%d FAIL (slopes: expected %s and %s in %s)" % (
            n,
            -high,
            high,
            " ".join(str(s) for s in rep.slopes) or "(none)",
        )
    floor = 4 * (n + 1) ** 2 - 8
    if rep.diameter is None or rep.diameter < floor:
        return False, "n=%d FAIL (diameter: %s below %d)" % (n, rep.diameter, floor)
    least = Fraction((n + 1) ** 2 - 2, n)
    if rep.ratio is None or rep.ratio < least:
        return False, "n=%d FAIL (ratio: %s below %s)" % (n, rep.ratio, least)
    return True, "n=%d pass (slopes ±%s, diameter %s, ratio %s)" % (
        n,
        high,
        rep.diameter,
        rep.ratio,
    )


def cmd_verify(args):
    if args.n_max < 2:
        print("error: --n-max must be at least 2", file=sys.stderr)
        return EXIT_USAGE
    failures = []
    for n in range(2, args.n_max + 1):
        passed, line = _verify_one(n, args.c_bound, args.scale_bound)
        print(line)
        if not passed:
            failures.append(line)
    if failures:
        print("FAIL: %d of %d checks" % (len(failures), args.n_max - 1))
        return EXIT_VERIFY
    print("all pass (n=2..%d)" % args.n_max)
    return EXIT_OK


def cmd_plot(args):
    if (args.expr is None) == (args.n is None):
        print("error: give exactly one of EXPR or --n", file=sys.stderr)
        return EXIT_USAGE
    expr = kn(args.n) if args.n is not None else parse(args.expr)
    rep = solve(expr, args.c_bound, args.scale_bound)
    if not rep.systems:
        for note in rep.notes:
            print("diagnostic: %s" % note, file=sys.stderr)
        print("nothing to plot", file=sys.stderr)
        return EXIT_EMPTY
    if args.format == "svg":
        text = render_svg(rep.systems, title=render(expr))
    else:
        text = render_tsv(rep.systems)
    _write_out(text, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# wiring


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tangleslopes",
        description="Candidate boundary slopes of algebraic tangle closures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def bounds(p):
        p.add_argument("--c-bound", type=int, default=None, dest="c_bound")
        p.add_argument("--scale-bound", type=int, default=None, dest="scale_bound")

    p_slopes = sub.add_parser("slopes", help="solve one expression")
    p_slopes.add_argument("expr")
    bounds(p_slopes)
    p_slopes.add_argument("--format", choices=("json", "table"), default="json")
    p_slopes.add_argument("--out", default=None)
    p_slopes.set_defaults(func=cmd_slopes, trace=None)

    p_kn = sub.add_parser("kn", help="solve the n-th family knot")
    p_kn.add_argument("--n", type=int, required=True)
    bounds(p_kn)
    p_kn.add_argument("--format", choices=("json", "table"), default="json")
    p_kn.add_argument("--out", default=None)
    p_kn.set_defaults(func=cmd_kn, trace=None)

    p_verify = sub.add_parser("verify", help="check the family invariants")
    p_verify.add_argument("--n-max", type=int, default=4, dest="n_max")
    bounds(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_plot = sub.add_parser("plot", help="draw stored systems")
    p_plot.add_argument("expr", nargs="?", default=None)
    p_plot.add_argument("--n", type=int, default=None)
    bounds(p_plot)
    p_plot.add_argument("--format", choices=("svg", "tsv"), default="svg")
    p_plot.add_argument("--out", default=None)
    p_plot.set_defaults(func=cmd_plot)

    return parser


def main(argv=None):
    """Parse arguments and run; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (TangleSlopesError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except RuntimeError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_VERIFY
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_IO


def _configure_logging():
    chosen = os.environ.get("LOG_LEVEL", "warn").strip().lower()
    level = {
        "error": logging.ERROR,
        "warn": logging.WARNING,
        "info": logging.INFO,
        "debug": logging.DEBUG,
    }.get(chosen, logging.WARNING)
    logging.basicConfig(
        stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s"
    )


def entrypoint(argv=None):
    _configure_logging()
    return main(argv)


if __name__ == "__main__":
    sys.exit(entrypoint())
