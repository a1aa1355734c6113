"""Drawing data model, simple-drawing validation and class recognition.

A Drawing holds one explicit curve per edge of a complete (or complete
bipartite) graph and derives an exact crossing matrix from them.  All
structural predicates the transformation algorithms rely on (spine paths,
twiggly edges, the vertical-above relation, cylindrical roles, bumpy edges,
the cut to a monotone drawing) live here.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Tuple

from .errors import (
    InternalInvariantViolated,
    InvalidRadiiError,
    EmptySetError,
    NotSimpleError,
    NotTwigglyError,
)
from .geometry import (
    CartesianCurve,
    Degenerate,
    Point,
    PolarCurve,
    Proper,
    Rat,
    _in_box,
    curve_circle_crossing,
    curve_eval,
    curve_self_contacts,
    is_x_monotone,
    normalize_polar,
    orient,
    polar_crossings,
    polyline_crossings,
)

Edge = Tuple[int, int]


def edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError("loop edge")
    return (u, v) if u < v else (v, u)


def complete_edges(n: int) -> List[Edge]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def bipartite_edges(a: int, b: int) -> List[Edge]:
    return [(u, v) for u in range(a) for v in range(a, a + b)]


@dataclass
class Drawing:
    """n vertices plus one curve per edge.  ``graph`` is ("complete",) or
    ("bipartite", a, b); ``backend`` is "cartesian" or "polar".  For the
    polar backend vertex points are (theta, r) pairs in rational turns and
    curve waypoints have strictly increasing theta spanning < 1 turn."""

    n: int
    backend: str
    vertex_points: tuple
    curves: Dict[Edge, tuple]
    graph: tuple = ("complete",)
    circles: Optional[Tuple[Rat, Rat]] = None  # (r_in^2, r_out^2) hint

    _report: object = field(default=None, repr=False, compare=False)
    _cross: Optional[Dict[Edge, FrozenSet[Edge]]] = field(
        default=None, repr=False, compare=False)
    _cert_cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def edges(self) -> List[Edge]:
        return sorted(self.curves)

    def expected_edges(self) -> List[Edge]:
        if self.graph[0] == "complete":
            return complete_edges(self.n)
        _, a, b = self.graph
        return bipartite_edges(a, b)

    def vertex_point(self, v: int):
        return self.vertex_points[v]

    # crossing queries (populate via validate_simple)
    @property
    def crossings(self) -> Dict[Edge, FrozenSet[Edge]]:
        if self._cross is None:
            validate_simple(self)
        return self._cross

    def cross(self, e: Edge, f: Edge) -> bool:
        return f in self.crossings[e]

    def crossing_pairs(self) -> List[Tuple[Edge, Edge]]:
        out = []
        for e, s in self.crossings.items():
            for f in s:
                if e < f:
                    out.append((e, f))
        return sorted(out)


@dataclass(frozen=True)
class SpineStructure:
    kind: str                      # "monotone" | "cmonotone"
    order: Tuple[int, ...]         # x-order, or cyclic order by angle
    spine_edges: Tuple[Edge, ...]
    all_cycle_edges_spine: Optional[bool] = None


@dataclass(frozen=True)
class CylRoles:
    r_in2: Rat
    r_out2: Rat
    inner_vertices: Tuple[int, ...]
    outer_vertices: Tuple[int, ...]
    roles: Dict[Edge, str]                      # inner | outer | side
    cycle_edges: Tuple[Edge, ...]
    crossed_cycle_edges: Tuple[Edge, ...]
    inner_path: Tuple[Edge, ...]                # uncrossed Hamiltonian paths
    outer_path: Tuple[Edge, ...]


@dataclass(frozen=True)
class ClassReport:
    is_simple: bool
    is_monotone: bool
    is_two_page_book: bool
    is_cylindrical: Optional[CylRoles]
    is_c_monotone: bool
    is_strongly_c_monotone: bool
    notes: Tuple[str, ...] = ()


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def _check_cartesian_curve(d: Drawing, e: Edge, curve: CartesianCurve) -> None:
    if len(curve) < 2:
        raise NotSimpleError(f"curve of {e} has fewer than 2 waypoints")
    for i in range(len(curve) - 1):
        if curve[i] == curve[i + 1]:
            raise NotSimpleError(f"zero-length segment in curve of {e}")
    pu, pv = d.vertex_point(e[0]), d.vertex_point(e[1])
    if {curve[0], curve[-1]} != {pu, pv}:
        raise NotSimpleError(f"curve of {e} does not join its endpoints")
    if curve_self_contacts(curve):
        raise NotSimpleError(f"curve of {e} is self-intersecting")


def _check_polar_curve(d: Drawing, e: Edge, curve: PolarCurve) -> None:
    if len(curve) < 2:
        raise NotSimpleError(f"curve of {e} has fewer than 2 waypoints")
    for w in curve:
        if w.r <= 0:
            raise NotSimpleError(f"curve of {e} has non-positive radius")
    for i in range(len(curve) - 1):
        if curve[i].theta >= curve[i + 1].theta:
            raise NotSimpleError(f"curve of {e} is not angle-monotone")
    if curve[-1].theta - curve[0].theta >= 1:
        raise NotSimpleError(f"curve of {e} spans a full turn or more")
    ends = {(curve[0].theta % 1, curve[0].r), (curve[-1].theta % 1, curve[-1].r)}
    pu, pv = d.vertex_point(e[0]), d.vertex_point(e[1])
    want = {(pu[0] % 1, pu[1]), (pv[0] % 1, pv[1])}
    if ends != want:
        raise NotSimpleError(f"curve of {e} does not join its endpoints")


def _vertex_on_curve(d: Drawing, e: Edge, curve, v: int) -> bool:
    """Does the curve pass through vertex v's point anywhere it must not?"""
    if d.backend == "cartesian":
        p = d.vertex_point(v)
        interior = curve[1:-1]
        if v in e:
            return p in interior
        if p == curve[0] or p == curve[-1]:
            return True
        if p in interior:
            return True
        for i in range(len(curve) - 1):
            a, b = curve[i], curve[i + 1]
            if orient(a, b, p) == 0 and _in_box(a, b, p):
                return True
        return False
    theta, r = d.vertex_point(v)
    c = normalize_polar(curve)
    t0, tn = c[0].theta, c[-1].theta
    base = theta % 1
    cand = base + math.ceil(t0 - base)
    while cand <= tn:
        at_start = cand == t0
        at_end = cand == tn
        val = curve_eval(curve, cand)
        if val == r:
            own_end = v in e and ((at_start and (c[0].theta % 1, c[0].r) == (base, r))
                                  or (at_end and (c[-1].theta % 1, c[-1].r) == (base, r)))
            if not own_end:
                return True
        cand += 1
    return False


def _pair_contacts(d: Drawing, e: Edge, f: Edge) -> list:
    if d.backend == "cartesian":
        return polyline_crossings(d.curves[e], d.curves[f])
    return polar_crossings(d.curves[e], d.curves[f])


def _shared_vertex_point(d: Drawing, e: Edge, f: Edge):
    common = set(e) & set(f)
    if not common:
        return None
    v = common.pop()
    p = d.vertex_point(v)
    if d.backend == "cartesian":
        return p
    return (p[0] % 1, p[1])


def validate_simple(d: Drawing) -> ClassReport:
    """Build the crossing matrix, confirm every simple-drawing invariant and
    fill all classification flags.  Raises NotSimpleError on violation."""
    if d._report is not None:
        return d._report

    if d.n < 2:
        raise NotSimpleError("need at least 2 vertices")
    if sorted(d.curves) != d.expected_edges():
        raise NotSimpleError("edge set does not match declared graph")
    if len(set(d.vertex_points)) != d.n:
        raise NotSimpleError("vertex points are not distinct")
    if d.backend == "polar":
        seen = {(p[0] % 1, p[1]) for p in d.vertex_points}
        if len(seen) != d.n:
            raise NotSimpleError("vertex points are not distinct")

    for e, curve in d.curves.items():
        if d.backend == "cartesian":
            _check_cartesian_curve(d, e, curve)
        else:
            _check_polar_curve(d, e, curve)
        for v in range(d.n):
            if _vertex_on_curve(d, e, curve, v):
                raise NotSimpleError(f"curve of {e} passes through vertex {v}")

    cross: Dict[Edge, set] = {e: set() for e in d.curves}
    edges = d.edges
    for i, e in enumerate(edges):
        for f in edges[i + 1:]:
            contacts = _pair_contacts(d, e, f)
            shared = _shared_vertex_point(d, e, f)
            if shared is not None:
                ok = (len(contacts) == 1
                      and isinstance(contacts[0], Degenerate)
                      and contacts[0].at == shared)
                if not ok:
                    raise NotSimpleError("adjacent crossing or degenerate contact",
                                         pair=(e, f))
            else:
                propers = [c for c in contacts if isinstance(c, Proper)]
                if len(propers) > 1:
                    raise NotSimpleError("double crossing", pair=(e, f))
                if len(propers) != len(contacts):
                    raise NotSimpleError("degenerate contact", pair=(e, f))
                if propers:
                    cross[e].add(f)
                    cross[f].add(e)

    d._cross = {e: frozenset(s) for e, s in cross.items()}

    notes = []
    mono = classify_monotone(d) if d.backend == "cartesian" else None
    two_page = classify_two_page(d) if d.backend == "cartesian" else False
    cyl = None
    if d.backend == "cartesian" and d.circles is not None:
        cyl = classify_cylindrical(d, d.circles[0], d.circles[1])
    c_mono, strongly = False, False
    if d.backend == "polar":
        c_mono, strongly, _ = classify_c_monotone(d)
    report = ClassReport(
        is_simple=True,
        is_monotone=mono is not None,
        is_two_page_book=two_page,
        is_cylindrical=cyl,
        is_c_monotone=c_mono,
        is_strongly_c_monotone=strongly,
        notes=tuple(notes),
    )
    d._report = report
    return report


# ---------------------------------------------------------------------------
# monotone drawings
# ---------------------------------------------------------------------------

def classify_monotone(d: Drawing) -> Optional[SpineStructure]:
    """x-order and spine-path edges, or None if two vertices share an
    x-coordinate or some curve is not x-monotone."""
    if d.backend != "cartesian":
        return None
    xs = [p.x for p in d.vertex_points]
    if len(set(xs)) != d.n:
        return None
    if not all(is_x_monotone(c) for c in d.curves.values()):
        return None
    order = tuple(sorted(range(d.n), key=lambda v: xs[v]))
    spine = tuple(edge(order[i], order[i + 1]) for i in range(d.n - 1))
    return SpineStructure(kind="monotone", order=order, spine_edges=spine)


def classify_two_page(d: Drawing) -> bool:
    """True iff all vertices sit on one horizontal line and every edge
    interior stays strictly inside one open halfplane of it."""
    if d.backend != "cartesian":
        return False
    ys = {p.y for p in d.vertex_points}
    if len(ys) != 1:
        return False
    y0 = ys.pop()
    for curve in d.curves.values():
        interior = curve[1:-1]
        if not interior:
            return False  # a segment lying on the line itself
        signs = {1 if w.y > y0 else (-1 if w.y < y0 else 0) for w in interior}
        if 0 in signs or len(signs) != 1:
            return False
    return True


def twiggly_set(d: Drawing, spine: SpineStructure, edges_in) -> FrozenSet[Edge]:
    """Subset of ``edges_in`` properly crossing at least one spine edge."""
    spine_set = set(spine.spine_edges)
    return frozenset(e for e in edges_in if d.crossings[e] & spine_set)


def _open_x_range(d: Drawing, e: Edge):
    xa = d.vertex_point(e[0]).x
    xb = d.vertex_point(e[1]).x
    return (xa, xb) if xa < xb else (xb, xa)


def succ_above(d: Drawing, e: Edge, f: Edge) -> Optional[bool]:
    """True if e runs above f over their common open x-range, False if below,
    None if the open ranges do not overlap.  Only valid for non-crossing
    pairs, whose vertical order is constant on the overlap."""
    lo1, hi1 = _open_x_range(d, e)
    lo2, hi2 = _open_x_range(d, f)
    lo, hi = max(lo1, lo2), min(hi1, hi2)
    if lo >= hi:
        return None
    xm = (lo + hi) / 2
    ye = curve_eval(d.curves[e], xm)
    yf = curve_eval(d.curves[f], xm)
    if ye == yf:
        raise InternalInvariantViolated(f"edges {e}, {f} meet at x={xm}")
    return ye > yf


def succ_maximal(d: Drawing, twigglies) -> Edge:
    """An edge with no other twiggly above it (ties broken by smallest id)."""
    twigglies = sorted(twigglies)
    if not twigglies:
        raise EmptySetError("no twiggly edges")
    for e in twigglies:
        if not any(succ_above(d, f, e) for f in twigglies if f != e):
            return e
    raise InternalInvariantViolated("vertical-above relation has no maximum")


def vertices_above(d: Drawing, e: Edge) -> List[int]:
    """Vertices strictly between e's endpoints in x and strictly above e."""
    lo, hi = _open_x_range(d, e)
    out = []
    for v in range(d.n):
        p = d.vertex_point(v)
        if lo < p.x < hi:
            ye = curve_eval(d.curves[e], p.x)
            if ye is None:
                raise InternalInvariantViolated("edge does not span vertex column")
            if p.y > ye:
                out.append(v)
    return out


# ---------------------------------------------------------------------------
# cylindrical drawings
# ---------------------------------------------------------------------------

def _angle_cmp(p: Point, q: Point) -> int:
    def half(t: Point) -> int:
        return 0 if (t.y > 0 or (t.y == 0 and t.x > 0)) else 1
    hp, hq = half(p), half(q)
    if hp != hq:
        return -1 if hp < hq else 1
    c = p.x * q.y - p.y * q.x
    return 0 if c == 0 else (-1 if c > 0 else 1)


def _sorted_by_angle(d: Drawing, vs: List[int]) -> List[int]:
    return sorted(vs, key=functools.cmp_to_key(
        lambda a, b: _angle_cmp(d.vertex_point(a), d.vertex_point(b))))


def classify_cylindrical(d: Drawing, r_in2: Rat, r_out2: Rat) -> Optional[CylRoles]:
    """Roles and cycle structure for vertices on two origin-centred circles,
    or None if some vertex is off-circle or some edge crosses a circle."""
    if r_in2 >= r_out2:
        raise InvalidRadiiError("inner squared radius must be smaller")
    if r_in2 <= 0:
        raise InvalidRadiiError("radii must be positive")
    if d.backend != "cartesian":
        return None
    _ = d.crossings  # ensure the drawing is validated
    origin = Point(Fraction(0), Fraction(0))
    inner, outer = [], []
    for v in range(d.n):
        p = d.vertex_point(v)
        norm = p.x ** 2 + p.y ** 2
        if norm == r_in2:
            inner.append(v)
        elif norm == r_out2:
            outer.append(v)
        else:
            return None
    for curve in d.curves.values():
        for rr in (r_in2, r_out2):
            if curve_circle_crossing(curve, origin, rr):
                return None

    inner_set = set(inner)
    roles = {}
    for e in d.edges:
        k = (e[0] in inner_set) + (e[1] in inner_set)
        roles[e] = "inner" if k == 2 else ("side" if k == 1 else "outer")

    def circle_cycle(vs: List[int]) -> List[Edge]:
        if len(vs) < 2:
            return []
        ring = _sorted_by_angle(d, vs)
        if len(ring) == 2:
            return [edge(ring[0], ring[1])]
        return [edge(ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring))]

    cycle = sorted(circle_cycle(inner) + circle_cycle(outer))
    crossed = tuple(e for e in cycle if d.crossings[e])
    for e in crossed:
        for f in d.crossings[e]:
            if roles[f] != "side":
                raise InternalInvariantViolated(
                    f"cycle edge {e} crossed by non-side edge {f}")
    for vs in (inner, outer):
        on_circle = [e for e in crossed if e[0] in set(vs) and e[1] in set(vs)]
        if len(on_circle) > 1:
            raise InternalInvariantViolated(
                "more than one crossed cycle edge on a circle")

    def ham_path(vs: List[int]) -> Tuple[Edge, ...]:
        es = circle_cycle(vs)
        if len(vs) < 3:
            return tuple(es)
        bad = [e for e in es if d.crossings[e]]
        drop = bad[0] if bad else max(es)
        return tuple(e for e in es if e != drop)

    return CylRoles(
        r_in2=r_in2, r_out2=r_out2,
        inner_vertices=tuple(sorted(inner)), outer_vertices=tuple(sorted(outer)),
        roles=roles, cycle_edges=tuple(cycle), crossed_cycle_edges=crossed,
        inner_path=ham_path(inner), outer_path=ham_path(outer),
    )


# ---------------------------------------------------------------------------
# c-monotone drawings
# ---------------------------------------------------------------------------

def vertex_angles(d: Drawing) -> List[Rat]:
    return [p[0] % 1 for p in d.vertex_points]


def edge_span(d: Drawing, e: Edge) -> Tuple[Rat, Rat]:
    """Closed angular span [t0, tn] of an edge's curve, t0 in [0, 1)."""
    c = normalize_polar(d.curves[e])
    return c[0].theta, c[-1].theta


def span_contains(span: Tuple[Rat, Rat], theta: Rat, strict: bool = True) -> bool:
    """Whether the angle theta (mod 1) lies in the span interval."""
    t0, tn = span
    base = theta % 1
    cand = base + math.ceil(t0 - base)
    if strict:
        return t0 < cand < tn
    return t0 <= cand <= tn


def _spans_cover_circle(s1, s2) -> bool:
    l1 = s1[1] - s1[0]
    comp_lo, comp_hi = s1[1], s1[0] + 1  # complement arc of s1
    for k in (0, 1, 2):
        if s2[0] + k <= comp_lo and s2[1] + k >= comp_hi:
            return True
    return False


def classify_c_monotone(d: Drawing):
    """(c_monotone, strongly, spine) for a polar drawing.

    A validated polar drawing is c-monotone by construction once all
    vertices lie on one circle; strongly requires that no edge pair's spans
    jointly cover the circle.  Spine edges are the consecutive-vertex edges
    whose open span contains no vertex ray.
    """
    if d.backend != "polar":
        return False, False, None
    _ = d.crossings  # ensure the drawing is validated
    radii = {p[1] for p in d.vertex_points}
    if len(radii) != 1:
        return False, False, None

    spans = {e: edge_span(d, e) for e in d.edges}
    strongly = True
    es = d.edges
    for i, e in enumerate(es):
        for f in es[i + 1:]:
            if _spans_cover_circle(spans[e], spans[f]):
                strongly = False
                break
        if not strongly:
            break

    angles = vertex_angles(d)
    order = tuple(sorted(range(d.n), key=lambda v: angles[v]))
    cycle = [edge(order[i], order[(i + 1) % d.n]) for i in range(d.n)]
    spine = []
    for e in cycle:
        span = spans[e]
        if not any(span_contains(span, angles[v]) for v in range(d.n)):
            spine.append(e)
    structure = SpineStructure(
        kind="cmonotone", order=order,
        spine_edges=tuple(sorted(spine)),
        all_cycle_edges_spine=len(spine) == d.n,
    )
    return True, strongly, structure


def spine_crossing_angles(d: Drawing, e: Edge, spine: SpineStructure) -> List[Rat]:
    """Angles (lifted into e's span) where e crosses spine edges, in
    traversal order along e."""
    t0, tn = edge_span(d, e)
    out = []
    for s in sorted(d.crossings[e] & set(spine.spine_edges)):
        hits = [c for c in polar_crossings(d.curves[e], d.curves[s])
                if isinstance(c, Proper)]
        if len(hits) != 1:
            raise InternalInvariantViolated("expected exactly one spine crossing")
        base = hits[0].at
        lifted = base + math.ceil(t0 - base)
        if not t0 <= lifted <= tn:
            raise InternalInvariantViolated("crossing outside edge span")
        out.append(lifted)
    return sorted(out)


def bumpy_edges(d: Drawing, e: Edge, spine: Optional[SpineStructure] = None) -> List[Edge]:
    """For a twiggly edge with spine crossings x_1..x_k along its traversal,
    the k+1 edges joining the vertex before each crossing gap to the vertex
    after it (endpoints included as the outermost stops)."""
    if spine is None:
        _, _, spine = classify_c_monotone(d)
    if spine is None:
        raise NotTwigglyError("drawing is not c-monotone")
    crossings = spine_crossing_angles(d, e, spine)
    if not crossings:
        raise NotTwigglyError(f"{e} crosses no spine edge")
    angles = vertex_angles(d)
    t0, tn = edge_span(d, e)
    u = e[0] if (d.vertex_point(e[0])[0] % 1) == t0 % 1 else e[1]
    w = e[1] if u == e[0] else e[0]

    def before(phi: Rat) -> int:
        return min(range(d.n), key=lambda v: (phi - angles[v]) % 1)

    def after(phi: Rat) -> int:
        return min(range(d.n), key=lambda v: (angles[v] - phi) % 1)

    stops_minus = [u] + [before(phi) for phi in crossings]
    stops_plus = [after(phi) for phi in crossings] + [w]
    return [edge(stops_minus[i], stops_plus[i]) for i in range(len(crossings) + 1)]


# ---------------------------------------------------------------------------
# cut to monotone
# ---------------------------------------------------------------------------

def cut_to_monotone(d: Drawing):
    """If some cycle edge of a strongly c-monotone drawing is not a spine
    edge, the wedge between its endpoints is empty of edges; cutting there
    and unrolling (x = turns past the cut ray, y = radius) yields a monotone
    drawing with an identical crossing matrix.  Returns (drawing, x-order)
    or None when all cycle edges are spine edges."""
    c_mono, strongly, spine = classify_c_monotone(d)
    if not (c_mono and strongly):
        return None
    if spine.all_cycle_edges_spine:
        return None

    angles = vertex_angles(d)
    order = spine.order
    spine_set = set(spine.spine_edges)
    gap = None
    for i in range(d.n):
        a, b = order[i], order[(i + 1) % d.n]
        if edge(a, b) not in spine_set:
            lo = angles[a]
            hi = angles[b] if angles[b] > angles[a] else angles[b] + 1
            gap = (lo, hi)
            break
    if gap is None:
        raise InternalInvariantViolated("missing non-spine cycle edge")
    for e in d.edges:
        span = edge_span(d, e)
        for t in (gap[0], gap[1], (gap[0] + gap[1]) / 2):
            if span_contains(span, t):
                raise InternalInvariantViolated("cut wedge is not empty")
    cut = (gap[0] + gap[1]) / 2

    def unroll(theta: Rat) -> Rat:
        base = theta % 1
        shifted = base - cut
        return shifted % 1  # in (0, 1) since nothing sits on the cut ray

    points = tuple(Point(unroll(t), r) for t, r in d.vertex_points)
    curves = {}
    for e, curve in d.curves.items():
        c = normalize_polar(curve)
        x0 = unroll(c[0].theta)
        curves[e] = tuple(Point(w.theta - c[0].theta + x0, w.r) for w in c)
    out = Drawing(n=d.n, backend="cartesian", vertex_points=points,
                  curves=curves, graph=d.graph)
    validate_simple(out)
    if out.crossings != d.crossings:
        raise InternalInvariantViolated("cut changed the crossing matrix")
    xorder = tuple(sorted(range(d.n), key=lambda v: points[v].x))
    return out, xorder
