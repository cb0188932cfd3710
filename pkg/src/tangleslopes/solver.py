"""Candidate system enumeration and closure solving.

Two closure regimes:

* solve_sn handles expressions with at least one product. Per-leaf
  edgepaths (constant families bounded by c_bound, plus descents with
  vertical runs) are combined bottom-up. States glue at sum nodes after
  rescaling to a common (a, b) (multipliers capped by scale_bound), pass
  through the rotation transform at product nodes, and a system closes
  when the root state carries no net slope weight (c = 0) and no leftover
  slope-infinity edges.

* solve_montesinos handles sums of three or more rational tangles. The
  common endpoint abscissa u is one unknown: each leaf contributes either
  its constant family or a partially traversed final edge, v is affine in
  u on each piece, and sum v = 0 is solved exactly piece by piece
  (type I). Systems whose paths all reach the u = 0 line close when the
  integer endpoints sum to zero (type II); such a system is counted as a
  slope only when no path travels along u = 0 and the penultimate-vertex
  denominators y_i satisfy sum 1/y_i <= 1. Everything found is stored,
  inessential candidates flagged.

Both attach the Seifert reference system (slope 0) when the normalization
exists. All output is exhaustively sorted; nothing depends on hash or
insertion order, so identical inputs give identical reports.
"""

import logging
from bisect import insort
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iterproduct
from math import gcd, prod

from .diagram import WeightState, is_edge
from .edgepaths import ConstantPath, VertexPath, constant_path, endpoint_state, enumerate_paths, tau
from .errors import SeifertUndefined, UnsupportedShape
from .slopes import build_system, seifert_system, seifert_tau
from .tangles import (
    Leaf,
    Sum,
    crossing_count,
    family_crossing_count,
    family_index,
    kn,
    render,
)
from .transforms import common_scaling, glue_sum, rotate_reflect

log = logging.getLogger("tangleslopes.solver")

ZERO = Fraction(0)
ONE = Fraction(1)

SYSTEMS_PER_SLOPE = 16
TRACES_PER_STATE = 8
TYPE_II_RUN_WINDOW = 6
TYPE_II_COMBO_GUARD = 200000


@dataclass(frozen=True)
class SlopeReport:
    expr: object
    systems: tuple
    slopes: tuple  # sorted distinct Fractions
    certified: tuple  # slopes carrying the family certification
    diameter: Fraction  # None when no slopes
    crossings: int
    crossing_source: str  # "family-exact" | "diagram-count"
    ratio: Fraction  # None when no slopes
    c_bound: int
    scale_bound: int  # None for the Montesinos solve
    notes: tuple = ()


def default_c_bound(expr):
    """Family expressions get room for their long vertical runs."""
    n = family_index(expr)
    return max(8, n * n + n + 2) if n is not None else 32


def report(expr, systems, slopes, c_bound, scale_bound, notes=()):
    """Aggregate systems and slopes into a SlopeReport."""
    slopes = tuple(sorted(set(slopes)))
    n = family_index(expr)
    if n is not None:
        crossings, source = family_crossing_count(n), "family-exact"
        family = (Fraction(-2 * (n + 1) ** 2 + 4), Fraction(2 * (n + 1) ** 2 - 4))
        certified = tuple(s for s in family if s in slopes)
    else:
        crossings, source = crossing_count(expr), "diagram-count"
        certified = ()
    diameter = slopes[-1] - slopes[0] if slopes else None
    ratio = diameter / crossings if diameter is not None else None
    return SlopeReport(
        expr,
        tuple(systems),
        slopes,
        certified,
        diameter,
        crossings,
        source,
        ratio,
        c_bound,
        scale_bound,
        tuple(notes),
    )


# ---------------------------------------------------------------------------
# the product-expression solve (closure at u = 0)


def _statekey(w):
    return (w.a, w.b, w.c, w.n_inf, w.has_zero)


def _direction(key):
    g = gcd(key[0], key[1])
    return (key[0] // g, key[1] // g) if g else (key[0], key[1])


def _insert(table, state, t, desc, assignment):
    entries = table.setdefault(_statekey(state), {}).setdefault(t, [])
    if len(entries) == TRACES_PER_STATE and desc >= entries[-1][0]:
        return
    insort(entries, (desc, assignment), key=lambda e: e[0])
    del entries[TRACES_PER_STATE:]


def _combine(table, state, t, lents, rents):
    # entries are sorted by descriptor, so concatenations arrive in order
    # and whole blocks can be skipped once they fall past the cap
    entries = table.setdefault(_statekey(state), {}).setdefault(t, [])
    for ldesc, lassign in lents:
        if len(entries) == TRACES_PER_STATE and ldesc + rents[0][0] >= entries[-1][0]:
            break
        for rdesc, rassign in rents:
            desc = ldesc + rdesc
            if len(entries) == TRACES_PER_STATE and desc >= entries[-1][0]:
                break
            insort(entries, (desc, lassign + rassign), key=lambda e: e[0])
            del entries[TRACES_PER_STATE:]


def _leaf_table(leaf, c_bound):
    pq = leaf.fraction
    p, q = pq.numerator, pq.denominator
    table = {}
    for k in range(1, c_bound // abs(p) + 1):
        for a in range(1, k + 1):
            path = ConstantPath(pq, WeightState(a, q * k - a, p * k))
            _insert(table, path.state.primitive(), ZERO, (path.describe(),), (path,))
    for path in enumerate_paths(pq, target_u_zero=True, c_bound=c_bound):
        if path.is_constant:
            continue
        _insert(
            table,
            endpoint_state(path).primitive(),
            tau(path),
            (path.describe(),),
            (path,),
        )
    return table


def _bucket_by_direction(table):
    buckets = {}
    for key in sorted(table):
        buckets.setdefault(_direction(key), []).append(key)
    return buckets

def _merge_sum(left, right, scale_bound):
    out = {}
    lbuckets = _bucket_by_direction(left)
    rbuckets = _bucket_by_direction(right)
    for direction in sorted(set(lbuckets) & set(rbuckets)):
        for lkey in lbuckets[direction]:
            lw = WeightState(*lkey)
            for rkey in rbuckets[direction]:
                rw = WeightState(*rkey)
                ks = common_scaling(lw, rw, scale_bound)
                if ks is None:
                    continue
                glued = glue_sum(lw.scaled(ks[0]), rw.scaled(ks[1])).primitive()
                for lt in sorted(left[lkey]):
                    for rt in sorted(right[rkey]):
                        _combine(out, glued, lt + rt, left[lkey][lt], right[rkey][rt])
    return out


def _merge_product(left, right, scale_bound):
    out = {}
    rbuckets = _bucket_by_direction(right)
    for lkey in sorted(left):
        if lkey[2] == 0:
            log.debug("product: dropped untransformable c=0 state %r", lkey)
            continue
        outcome = rotate_reflect(WeightState(*lkey), allow_infeasible=True)
        if not outcome.feasible:
            continue
        tw = outcome.state
        for rkey in rbuckets.get(_direction(_statekey(tw)), ()):
            rw = WeightState(*rkey)
            ks = common_scaling(tw, rw, scale_bound)
            if ks is None:
                continue
            glued = glue_sum(tw.scaled(ks[0]), rw.scaled(ks[1])).primitive()
            for lt in sorted(left[lkey]):
                for rt in sorted(right[rkey]):
                    t = -lt + outcome.tau_prime + rt
                    _combine(out, glued, t, left[lkey][lt], right[rkey][rt])
    return out


def _eval_tables(node, c_bound, scale_bound, memo):
    if id(node) in memo:
        return memo[id(node)]
    if isinstance(node, Leaf):
        result = _leaf_table(node, c_bound)
    else:
        left = _eval_tables(node.left, c_bound, scale_bound, memo)
        right = _eval_tables(node.right, c_bound, scale_bound, memo)
        if isinstance(node, Sum):
            result = _merge_sum(left, right, scale_bound)
        else:
            result = _merge_product(left, right, scale_bound)
    memo[id(node)] = result
    return result


def _materialize(expr, grouped, reference):
    """Build capped, deterministically ordered systems per slope group."""
    systems = []
    for group_key in sorted(grouped, key=lambda s: (s is None, s)):
        candidates = sorted(grouped[group_key], key=lambda c: (c[0], c[1]))
        for sort_key, note, assignment in candidates[:SYSTEMS_PER_SLOPE]:
            systems.append(
                build_system(
                    expr, assignment, scale_bound=None, note=note, reference_tau=reference
                )
            )
    return systems


def solve_sn(expr, c_bound=None, scale_bound=None):
    """Enumerate closed systems for an expression with products."""
    if expr.is_montesinos():
        raise UnsupportedShape(
            "expression %s has no product; use solve_montesinos" % render(expr)
        )
    if c_bound is None:
        c_bound = default_c_bound(expr)
    if scale_bound is None:
        scale_bound = 8
    if c_bound < 1 or scale_bound < 1:
        raise ValueError("c_bound and scale_bound must be at least 1")
    notes = []
    try:
        reference = seifert_tau(expr)
    except SeifertUndefined as exc:
        reference = None
        notes.append(str(exc))
    table = _eval_tables(expr, c_bound, scale_bound, {})
    grouped = {}
    slopes = set()
    for key in sorted(table):
        if key[2] != 0 or key[3] != 0:
            continue
        for t in sorted(table[key]):
            slope = t - reference if reference is not None else None
            if slope is not None:
                slopes.add(slope)
            for desc, assignment in table[key][t]:
                grouped.setdefault(slope, []).append(((key, t, desc), "", assignment))
    systems = _materialize(expr, grouped, reference)
    if not grouped:
        notes.append(
            "no closed systems within c_bound=%d, scale_bound=%d"
            % (c_bound, scale_bound)
        )
    if reference is not None:
        systems.append(seifert_system(expr))
        slopes.add(ZERO)
    systems.sort(key=_system_order)
    return report(expr, systems, slopes, c_bound, scale_bound, notes)


def _system_order(system):
    return (
        system.slope is None,
        system.slope if system.slope is not None else ZERO,
        system.note,
        system.descriptor(),
    )


# ---------------------------------------------------------------------------
# the Montesinos solve (full piecewise-linear closure)


@dataclass(frozen=True)
class _Segment:
    kind: str  # "const" | "edge"
    prefix: tuple  # vertices through the partial edge (edge segments)
    coeff: Fraction  # v(u) = coeff * u + offset on the validity interval
    offset: Fraction
    lo: Fraction  # valid for lo <= u < hi
    hi: Fraction


def _leaf_segments(pq):
    p, q = pq.numerator, pq.denominator
    segments = [
        _Segment("const", (), ZERO, Fraction(p, q), Fraction(q - 1, q), ONE)
    ]
    seen = set()
    for path in enumerate_paths(pq, target_u_zero=False):
        if path.is_constant or len(path.vertices) == 1:
            continue
        vs = path.vertices
        for j in range(len(vs) - 1):
            prefix = vs[: j + 2]
            if prefix in seen:
                continue
            seen.add(prefix)
            pj, qj = vs[j].numerator, vs[j].denominator
            pk, qk = vs[j + 1].numerator, vs[j + 1].denominator
            rise = Fraction(pk - pj, qk - qj)
            segments.append(
                _Segment(
                    "edge",
                    prefix,
                    -pj + qj * rise,
                    pj + (1 - qj) * rise,
                    Fraction(qk - 1, qk),
                    Fraction(qj - 1, qj),
                )
            )
    return segments


def _segment_path(pq, segment, u0):
    if segment.kind == "const":
        return constant_path(pq, u=u0)
    vj, vk = segment.prefix[-2], segment.prefix[-1]
    total = 1 / (1 - u0)
    f = (total - vj.denominator) / (vk.denominator - vj.denominator)
    return VertexPath(pq, segment.prefix, final_fraction=f)


def _type_i_candidates(leaves, notes):
    """Solve sum v_i(u) = 0 over every segment combination; yield systems."""
    per_leaf = [_leaf_segments(l.fraction) for l in leaves]
    for combo in iterproduct(*per_leaf):
        coeff = sum(s.coeff for s in combo)
        offset = sum(s.offset for s in combo)
        lo = max(s.lo for s in combo)
        hi = min(s.hi for s in combo)
        if lo >= hi:
            continue
        if coeff == 0:
            if offset == 0:
                # the closure holds along the whole interval; only its
                # reachable endpoint is kept, flagged, and not counted
                notes.append(
                    "degenerate closure family on u in [%s, %s) for %s"
                    % (lo, hi, "; ".join(_segment_label(s) for s in combo))
                )
                if lo > 0:
                    yield lo, combo, "degenerate-family-endpoint"
            continue
        u0 = -offset / coeff
        if u0 <= 0:  # u = 0 closures belong to the integer solve
            continue
        if all(s.lo <= u0 < s.hi for s in combo):
            yield u0, combo, ""


def _segment_label(segment):
    if segment.kind == "const":
        return "const %s" % segment.offset
    return "edge to %s" % segment.prefix[-1]


def _type_ii_options(pq, c_bound):
    """(vertices, endpoint, ran, y) choices for a leaf ending on u = 0."""
    options = []
    window = min(c_bound, TYPE_II_RUN_WINDOW)
    for path in enumerate_paths(pq, target_u_zero=False):
        if path.is_constant:
            continue
        vs = path.vertices
        m0 = int(vs[-1])
        y = vs[-2].denominator if len(vs) > 1 else 1
        if abs(m0) <= c_bound:
            options.append((vs, m0, False, y))
        if len(vs) < 2:
            continue  # integer tangles keep only their trivial path
        for d in (-1, 1):
            if is_edge(vs[-2], Fraction(m0 + d)):
                continue  # first run step would cut a triangle
            run = vs
            for step in range(1, window + 1):
                m = m0 + d * step
                if abs(m) > c_bound:
                    break
                run = run + (Fraction(m),)
                options.append((run, m, True, 1))
    return options


def solve_montesinos(expr, c_bound=None):
    """Full closure solve for a sum of three or more rational tangles."""
    if not expr.is_montesinos():
        raise UnsupportedShape(
            "expression %s contains a product; use solve_sn" % render(expr)
        )
    leaves = list(expr.leaves())
    if len(leaves) < 3:
        raise UnsupportedShape(
            "need at least 3 rational tangles, got %d (two-bridge closures"
            " are out of scope)" % len(leaves)
        )
    if c_bound is None:
        c_bound = default_c_bound(expr)
    if c_bound < 1:
        raise ValueError("c_bound must be at least 1")
    notes = []
    try:
        reference = seifert_tau(expr)
    except SeifertUndefined as exc:
        reference = None
        notes.append(str(exc))

    grouped = {}
    slopes = set()

    def stage(assignment, note, counted):
        total = sum((tau(p) for p in assignment), ZERO)
        slope = total - reference if reference is not None else None
        if counted and slope is not None:
            slopes.add(slope)
        desc = tuple(p.describe() for p in assignment)
        grouped.setdefault(slope, []).append(((note, desc), note, tuple(assignment)))

    for u0, combo, note in _type_i_candidates(leaves, notes):
        assignment = [
            _segment_path(l.fraction, s, u0) for l, s in zip(leaves, combo)
        ]
        stage(assignment, note, counted=(note == ""))

    per_leaf = [_type_ii_options(l.fraction, c_bound) for l in leaves]
    combos = prod(len(o) for o in per_leaf)
    if combos > TYPE_II_COMBO_GUARD:
        notes.append(
            "u=0 closure enumeration skipped: %d combinations exceed %d"
            % (combos, TYPE_II_COMBO_GUARD)
        )
    else:
        for combo in iterproduct(*per_leaf):
            if sum(m for _, m, _, _ in combo) != 0:
                continue
            ran = any(r for _, _, r, _ in combo)
            slim = sum(Fraction(1, y) for _, _, _, y in combo)
            essential = not ran and slim <= 1
            assignment = [
                VertexPath(l.fraction, vs)
                for l, (vs, _, _, _) in zip(leaves, combo)
            ]
            stage(
                assignment,
                "" if essential else "inessential-candidate",
                counted=essential,
            )

    systems = _materialize(expr, grouped, reference)
    if not grouped:
        notes.append("no closed systems within c_bound=%d" % c_bound)
    if reference is not None:
        systems.append(seifert_system(expr))
        slopes.add(ZERO)
    systems.sort(key=_system_order)
    return report(expr, systems, slopes, c_bound, None, sorted(set(notes)))


def solve(expr, c_bound=None, scale_bound=None):
    """Dispatch on expression shape."""
    if expr.is_montesinos():
        return solve_montesinos(expr, c_bound)
    return solve_sn(expr, c_bound, scale_bound)


# ---------------------------------------------------------------------------
# the distinguished family system


def kn_system(n):
    """The published closed system for the n-th family knot, fully checked.

    Builds the exact edgepaths (two constant paths on the left factor, the
    short and the long descending-then-climbing path on the right), replays
    them, and checks every intermediate value before returning.
    """
    expr = kn(n)
    nn = n * n + n
    lneg = ConstantPath(Fraction(-1, n), WeightState(1, nn - 1, -(n + 1)))
    lpos = ConstantPath(Fraction(1, n + 1), WeightState(1, nn - 1, n))
    short = VertexPath(Fraction(-1, n), (Fraction(-1, n), ZERO))
    climb = tuple(Fraction(1, q) for q in range(n + 1, 0, -1)) + tuple(
        Fraction(m) for m in range(2, nn + 1)
    )
    long = VertexPath(Fraction(1, n + 1), climb)
    reference = seifert_tau(expr)
    system = build_system(
        expr, (lneg, lpos, short, long), scale_bound=None, reference_tau=reference
    )
    root, lsum, rsum = system.nodes[0], system.nodes[1], system.nodes[4]
    checks = (
        ("left leaf triples", (system.nodes[2].state, system.nodes[3].state),
         (WeightState(1, nn - 1, -(n + 1)), WeightState(1, nn - 1, n))),
        ("left glued state", lsum.state, WeightState(1, nn - 1, -1)),
        ("left tau", lsum.tau, ZERO),
        ("transformed state", root.transformed, WeightState(1, 0, -nn)),
        ("tau prime", root.tau_prime, Fraction(2)),
        ("right tau", rsum.tau, Fraction(-2 * (n * n + 2 * n))),
        ("system tau", root.tau, Fraction(-2 * (n + 1) ** 2 + 4)),
        ("reference tau", reference, ZERO),
        ("closure", system.closure, WeightState(1, 0, 0)),
        ("slope", system.slope, Fraction(-2 * (n + 1) ** 2 + 4)),
    )
    for name, got, expected in checks:
        if got != expected:
            raise RuntimeError(
                "family system check '%s' failed: %r != %r" % (name, got, expected)
            )
    return system
