"""Edgepaths: the curves in the diagram that encode candidate surfaces.

An edgepath for a rational tangle p/q is either

* constant: a single point on the horizontal line v = p/q with
  u >= (q-1)/q, stored as an integer weight state, or
* a vertex path: a chain of adjacent vertices starting at <p/q>, moving
  monotonically leftward (non-increasing u), never retracing an edge and
  never cutting across a triangle, with an optional fractional share of the
  last edge.

The properties checked by `validate`:

* E1: a vertex path starts at the vertex of its own tangle; a constant
  point lies on the tangle's horizontal edge.
* E2: no retracing, and no two successive edges of one triangle.
* E4: u never increases along the path (vertical edges at u = 0 are fine).

The twist number tau of a path is 2*(e_minus - e_plus) where e_plus counts
slope-increasing edges and e_minus slope-decreasing ones; the last edge
counts fractionally when partial. Constants have tau = 0.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .diagram import WeightState, is_edge, parents, uv_coords, vertex_point, vertex_triple
from .errors import FractionalEndpoint

ONE = Fraction(1)


@dataclass(frozen=True)
class ConstantPath:
    tangle: Fraction
    state: WeightState

    @property
    def is_constant(self):
        return True

    def describe(self):
        return ("const", self.state.triple())


@dataclass(frozen=True)
class VertexPath:
    tangle: Fraction
    vertices: tuple
    final_fraction: Fraction = ONE
    sheets: int = 1

    @property
    def is_constant(self):
        return False

    def describe(self):
        return ("path", self.vertices, self.final_fraction)


def constant_path(pq, scale=1, u=None):
    """A constant edgepath for p/q; by default the vertex point itself.

    With `u` given, the point at that abscissa on the horizontal edge,
    using the smallest integer state that realizes it exactly.
    """
    pq = Fraction(pq)
    p, q = pq.numerator, pq.denominator
    if u is None:
        return ConstantPath(pq, vertex_triple(pq).scaled(scale))
    # a + b = total, b = u * total, c = p * total / q: pick the least total
    total = u.denominator * q // gcd(q, u.denominator)
    b = u.numerator * total // u.denominator
    state = WeightState(total - b, b, p * total // q)
    return ConstantPath(pq, state.scaled(scale))


def validate(path):
    """Return the list of property violations; empty means the path is ok."""
    problems = []
    if path.is_constant:
        st = path.state
        p, q = path.tangle.numerator, path.tangle.denominator
        if st.a < 1 or st.b < 0:
            problems.append("E1: constant state %r is not a positive point" % (st,))
            return problems
        if st.c * q != p * (st.a + st.b):
            problems.append("E1: constant point is off the line v = %s" % path.tangle)
        if st.b * q < (q - 1) * (st.a + st.b):
            problems.append("E1: constant point lies left of the vertex <%s>" % path.tangle)
        return problems

    vs = path.vertices
    if not vs:
        return ["E1: empty vertex list"]
    if vs[0] != path.tangle:
        problems.append("E1: path starts at <%s>, not <%s>" % (vs[0], path.tangle))
    if not 0 < path.final_fraction <= 1:
        problems.append("final fraction %s outside (0, 1]" % (path.final_fraction,))
    if path.sheets < 1:
        problems.append("sheet count %d < 1" % path.sheets)
    for i in range(len(vs) - 1):
        if not is_edge(vs[i], vs[i + 1]):
            problems.append("adjacency: <%s>-<%s> is not an edge (index %d)" % (vs[i], vs[i + 1], i + 1))
    for i in range(len(vs) - 2):
        if vs[i + 2] == vs[i]:
            problems.append("E2: retraced edge at index %d" % (i + 2,))
        elif is_edge(vs[i], vs[i + 2]):
            problems.append("E2: two sides of one triangle at index %d" % (i + 2,))
    for i in range(len(vs) - 1):
        if vertex_point(vs[i + 1]).u > vertex_point(vs[i]).u:
            problems.append("E4: u increases at index %d" % (i + 1,))
    return problems


def endpoint_state(path):
    """Integer weight state at the end of the path."""
    if path.is_constant:
        return path.state
    if path.final_fraction != 1:
        raise FractionalEndpoint(
            "path ends %s of the way along its last edge" % (path.final_fraction,)
        )
    return vertex_triple(path.vertices[-1]).scaled(path.sheets)


def endpoint_point(path):
    """Diagram coordinates of the end of the path, fractional edges included."""
    if path.is_constant:
        return uv_coords(path.state)
    if len(path.vertices) == 1 or path.final_fraction == 1:
        return vertex_point(path.vertices[-1])
    w1 = vertex_triple(path.vertices[-2])
    w2 = vertex_triple(path.vertices[-1])
    f = path.final_fraction
    # barycentric combination (1-f) * previous + f * last, cleared to integers
    k1, k2 = f.denominator - f.numerator, f.numerator
    mixed = WeightState(
        k1 * w1.a + k2 * w2.a, k1 * w1.b + k2 * w2.b, k1 * w1.c + k2 * w2.c
    )
    return uv_coords(mixed)


def tau(path):
    """Twist number 2*(e_minus - e_plus), last edge weighted when partial."""
    if path.is_constant:
        return Fraction(0)
    vs = path.vertices
    total = Fraction(0)
    for i in range(len(vs) - 1):
        step = Fraction(2) if vs[i + 1] < vs[i] else Fraction(-2)
        if i == len(vs) - 2:
            step *= path.final_fraction
        total += step
    return total


def _run_blocked(last_fraction_vertex, m, d):
    # first step of a vertical run is blocked when it would cut a triangle
    return is_edge(last_fraction_vertex, Fraction(m + d))


def enumerate_paths(start, target_u_zero=True, c_bound=8):
    """All valid edgepaths from <start>, plus the constant family seed.

    With target_u_zero, paths descend all the way to integer vertices on
    u = 0 and extend along vertical runs to every reachable integer m with
    |m| <= c_bound. Without it, only the descents themselves are produced
    (no vertical runs), which is what the Montesinos closure solve consumes.

    The first element is always the constant edgepath at the start vertex,
    representing the whole constant family; callers scale it as needed.
    """
    start = Fraction(start)
    results = [constant_path(start)]
    if start.denominator == 1:
        # already on u = 0: the single trivial path
        results.append(VertexPath(start, (start,)))
        return results

    paths = []

    def extend_runs(vs):
        m = int(vs[-1])
        if abs(m) <= c_bound:
            paths.append(VertexPath(start, vs))
        for d in (-1, 1):
            if _run_blocked(vs[-2], m, d):
                continue
            k = m + d
            run = vs
            while (k <= c_bound) if d > 0 else (k >= -c_bound):
                run = run + (Fraction(k),)
                if abs(k) <= c_bound:
                    paths.append(VertexPath(start, run))
                k += d

    def descend(vs):
        here = vs[-1]
        if here.denominator == 1:
            if target_u_zero:
                extend_runs(vs)
            else:
                paths.append(VertexPath(start, vs))
            return
        for nxt in parents(here):
            if len(vs) >= 2 and is_edge(vs[-2], nxt):
                continue  # would cut across a triangle
            descend(vs + (nxt,))

    descend((start,))
    paths.sort(key=lambda p: (len(p.vertices), p.vertices))
    results.extend(paths)
    return results
