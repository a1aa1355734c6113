"""Seedable drawing generators for every supported class, plus the frozen
bipartite fixture.

Every construction uses integer-only randomness (SplitMix64) and exact
rational coordinates; candidate drawings are re-validated and resampled
with fresh jitter until they pass both validate_simple and their class
check, within the spec's rejection budget.

Points on circles come from the tangent half-angle parametrization
t -> ((1-t^2), 2t) / (1+t^2), which is exactly on the unit circle for every
rational t; vertices are therefore bit-exactly on their circles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .drawing import (
    Drawing,
    Edge,
    classify_c_monotone,
    complete_edges,
    edge,
    validate_simple,
)
from .errors import NotSimpleError, RejectionBudgetExceededError, TreespanError
from .geometry import Point, PolarPoint
from .rng import SplitMix64


@dataclass(frozen=True)
class GenSpec:
    cls: str          # convex | random_points | monotone_perturbed | two_page
    #                 | cylindrical | strongly_cmonotone
    n: int
    seed: int
    a: Optional[int] = None   # cylindrical circle sizes, a + b = n
    b: Optional[int] = None
    max_rejects: int = 1000

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("need n >= 3")
        if self.cls == "cylindrical":
            if not (self.a and self.b and self.a >= 1 and self.b >= 1
                    and self.a + self.b == self.n):
                raise ValueError("cylindrical needs a, b >= 1 with a + b = n")


class _Reject(TreespanError):
    pass


def _unit_point(t: Fraction) -> Point:
    den = 1 + t * t
    return Point((1 - t * t) / den, 2 * t / den)


def _scaled_unit(t: Fraction, scale: Fraction) -> Point:
    p = _unit_point(t)
    return Point(p.x * scale, p.y * scale)


def _jitter(rng: SplitMix64, den: int = 1000, mag: int = 100) -> Fraction:
    return Fraction(rng.randint(-mag, mag), den)


# ---------------------------------------------------------------------------
# straight-line classes
# ---------------------------------------------------------------------------

def _straight(points) -> Dict[Edge, tuple]:
    return {e: (points[e[0]], points[e[1]]) for e in complete_edges(len(points))}


def _gen_convex(n: int, rng: SplitMix64) -> Drawing:
    ts = []
    for k in range(n):
        base = Fraction(5 * (2 * k + 1 - n), 2 * n) + Fraction(1, 7 * n)
        ts.append(base + _jitter(rng, den=100000, mag=400))
    pts = tuple(_scaled_unit(t, Fraction(8)) for t in ts)
    if len({p.x for p in pts}) != n or len(set(pts)) != n:
        raise _Reject("coincident coordinates")
    return Drawing(n=n, backend="cartesian", vertex_points=pts,
                   curves=_straight(pts))


def _gen_random_points(n: int, rng: SplitMix64) -> Drawing:
    pts = tuple(Point(Fraction(rng.randint(-8000, 8000), 1000),
                      Fraction(rng.randint(-8000, 8000), 1000))
                for _ in range(n))
    if len(set(pts)) != n:
        raise _Reject("coincident points")
    return Drawing(n=n, backend="cartesian", vertex_points=pts,
                   curves=_straight(pts))


def _gen_monotone(n: int, rng: SplitMix64) -> Drawing:
    """Random x-order on the axis, straight chords bent at a jittered
    midpoint into 3-waypoint x-monotone polylines."""
    ranks = list(range(n))
    rng.shuffle(ranks)
    pts = tuple(Point(Fraction(ranks[v]) + _jitter(rng, 1000, 200),
                      Fraction(rng.randint(-1500, 1500), 1000))
                for v in range(n))
    if len({p.x for p in pts}) != n:
        raise _Reject("equal x")
    curves = {}
    for e in complete_edges(n):
        a, b = pts[e[0]], pts[e[1]]
        mid = Point((a.x + b.x) / 2 + _jitter(rng, 1000, 60),
                    (a.y + b.y) / 2 + _jitter(rng, 1000, 60))
        if not (min(a.x, b.x) < mid.x < max(a.x, b.x)):
            raise _Reject("midpoint escaped the column")
        curves[e] = (a, mid, b)
    return Drawing(n=n, backend="cartesian", vertex_points=pts, curves=curves)


def _gen_two_page(n: int, rng: SplitMix64) -> Drawing:
    """Vertices on a line; every edge is a tent into a random halfplane with
    height proportional to its span, so nested tents never meet and
    interleaved same-page tents cross exactly once."""
    pts = tuple(Point(Fraction(k), Fraction(0)) for k in range(n))
    curves = {}
    for e in complete_edges(n):
        span = Fraction(e[1] - e[0])
        sign = 1 if rng.randint(0, 1) else -1
        # slope grows strictly with span so tents sharing a foot diverge
        kappa = Fraction(1000 + 20 * (e[1] - e[0]) + rng.randint(0, 15), 2000)
        apex = Point((Fraction(e[0]) + Fraction(e[1])) / 2, sign * kappa * span)
        curves[e] = (pts[e[0]], apex, pts[e[1]])
    return Drawing(n=n, backend="cartesian", vertex_points=pts, curves=curves)


# ---------------------------------------------------------------------------
# cylindrical
# ---------------------------------------------------------------------------

def _spread_ts(count: int, rng: SplitMix64, phase: Fraction) -> List[Fraction]:
    ts = []
    for k in range(count):
        base = Fraction(-22, 10) + Fraction(44, 10) * Fraction(k + 1, count + 1)
        ts.append(base + phase + _jitter(rng, 1000, 80))
    if any(ts[i] >= ts[i + 1] for i in range(len(ts) - 1)):
        raise _Reject("angular order broke")
    return ts


def _t_walk(t0: Fraction, t1: Fraction, step: Fraction) -> List[Fraction]:
    """Strictly increasing t values from t0 to t1 inclusive, spaced <= step."""
    if t1 < t0:
        return list(reversed(_t_walk(t1, t0, step)))
    ticks = [t0]
    k = 1
    while ticks[-1] + step < t1:
        ticks.append(t0 + step * k)
        k += 1
    ticks.append(t1)
    return ticks


def _gen_cylindrical(n: int, a: int, b: int, rng: SplitMix64) -> Drawing:
    inner_ts = _spread_ts(a, rng, Fraction(0))
    outer_ts = _spread_ts(b, rng, Fraction(1, 50))
    pts: List[Point] = []
    for t in inner_ts:
        pts.append(_scaled_unit(t, Fraction(1)))
    for t in outer_ts:
        pts.append(_scaled_unit(t, Fraction(2)))
    t_of = inner_ts + outer_ts
    if len(set(pts)) != n:
        raise _Reject("coincident points")

    inner_ids = set(range(a))
    curves: Dict[Edge, tuple] = {}
    sigma = Fraction(1, 50)

    outer_edges = [e for e in complete_edges(n)
                   if e[0] not in inner_ids and e[1] not in inner_ids]
    outer_edges.sort(key=lambda e: (abs(t_of[e[1]] - t_of[e[0]]), e))
    for rank, e in enumerate(outer_edges):
        tu, tw = t_of[e[0]], t_of[e[1]]
        if tu > tw:
            tu, tw = tw, tu
            u, w = e[1], e[0]
        else:
            u, w = e
        radius = Fraction(4) + Fraction(7, 10) * rank + _jitter(rng, 1000, 40)
        way = [pts[u]]
        for t in _t_walk(tu + sigma, tw - sigma, Fraction(1, 2)):
            way.append(_scaled_unit(t, radius))
        way.append(pts[w])
        curves[e] = tuple(way)

    for e in complete_edges(n):
        if e[0] in inner_ids and e[1] in inner_ids:
            curves[e] = (pts[e[0]], pts[e[1]])

    side_edges = [e for e in complete_edges(n)
                  if (e[0] in inner_ids) != (e[1] in inner_ids)]
    for e in side_edges:
        u, w = (e[0], e[1]) if e[0] in inner_ids else (e[1], e[0])
        tu, tw = t_of[u], t_of[w]
        jig = _jitter(rng, 10000, 300)

        def radius_at(t: Fraction) -> Fraction:
            frac = (t - tu) / (tw - tu)
            return 1 + frac + jig * frac * (1 - frac) * 4

        way = [pts[u]]
        fine = Fraction(1, 20)
        ticks = _t_walk(tu, tw, Fraction(1, 5))
        if len(ticks) > 2:
            ticks = ([tu, tu + fine * (1 if tw > tu else -1)] + ticks[1:-1]
                     + [tw - fine * (1 if tw > tu else -1), tw])
        for t in ticks[1:-1]:
            way.append(_scaled_unit(t, radius_at(t)))
        way.append(pts[w])
        curves[e] = tuple(way)

    return Drawing(n=n, backend="cartesian", vertex_points=tuple(pts),
                   curves=curves, circles=(Fraction(1), Fraction(4)))


# ---------------------------------------------------------------------------
# strongly c-monotone
# ---------------------------------------------------------------------------

def _subdivide_at_columns(curve, columns) -> tuple:
    """Insert a waypoint wherever the curve's interior crosses one of the
    given x-columns, so that later per-strip shears stay segment-exact."""
    out = [curve[0]]
    for a, b in zip(curve, curve[1:]):
        lo, hi = (a.x, b.x) if a.x < b.x else (b.x, a.x)
        cuts = sorted((x for x in columns if lo < x < hi),
                      reverse=a.x > b.x)
        for x in cuts:
            y = a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x)
            out.append(Point(x, y))
        out.append(b)
    return tuple(out)


def _gen_strongly_cmonotone(n: int, rng: SplitMix64) -> Drawing:
    """Wrap a perturbed monotone drawing onto an annulus.

    theta is the scaled x-coordinate; the radius is y minus the
    piecewise-linear baseline through the vertex points, lifted above zero.
    The per-strip shear is affine, so the crossing pattern is preserved
    exactly and all vertices land on one circle.  Half the seeds reroute
    the cycle-closing edge through the empty wedge across the seam (all
    cycle edges become spine edges); the rest keep its unrolled shape,
    leaving a non-spine cycle edge for the cut branch."""
    flat = _gen_monotone(n, rng)
    reroute = rng.randint(0, 1) == 0

    order = sorted(range(n), key=lambda v: flat.vertex_points[v].x)
    columns = [flat.vertex_points[v].x for v in order]
    base_pts = [flat.vertex_points[v] for v in order]

    def baseline(x: Fraction) -> Fraction:
        for a, b in zip(base_pts, base_pts[1:]):
            if a.x <= x <= b.x:
                return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x)
        raise ValueError("x outside the drawing")

    ys = [w.y for curve in flat.curves.values() for w in curve]
    lift = 2 * max(abs(y) for y in ys) + 2
    xmin, xmax = columns[0], columns[-1]
    margin = Fraction(1, 4 * n)

    def theta(x: Fraction) -> Fraction:
        return margin + (x - xmin) * (1 - 2 * margin) / (xmax - xmin)

    points = tuple(PolarPoint(theta(p.x), lift) for p in flat.vertex_points)
    curves = {}
    for e, curve in flat.curves.items():
        if curve[0].x > curve[-1].x:
            curve = tuple(reversed(curve))
        refined = _subdivide_at_columns(curve, columns)
        curves[e] = tuple(PolarPoint(theta(w.x), w.y - baseline(w.x) + lift)
                          for w in refined)

    if reroute:
        seam = edge(order[0], order[-1])
        t_hi = points[order[-1]].theta
        t_lo = points[order[0]].theta + 1
        mid = PolarPoint((t_hi + t_lo) / 2, lift + _jitter(rng, 1000, 300))
        curves[seam] = (PolarPoint(t_hi, lift), mid, PolarPoint(t_lo, lift))

    return Drawing(n=n, backend="polar", vertex_points=points, curves=curves)


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

def _class_check(spec: GenSpec, d: Drawing) -> None:
    report = validate_simple(d)
    if spec.cls == "convex":
        n = spec.n
        want = n * (n - 1) * (n - 2) * (n - 3) // 24
        if len(d.crossing_pairs()) != want:
            raise _Reject("not in convex position")
    elif spec.cls == "monotone_perturbed":
        if not report.is_monotone:
            raise _Reject("not monotone")
    elif spec.cls == "two_page":
        if not report.is_two_page_book:
            raise _Reject("not a 2-page book drawing")
    elif spec.cls == "cylindrical":
        if report.is_cylindrical is None:
            raise _Reject("not cylindrical")
    elif spec.cls == "strongly_cmonotone":
        c, strong, _ = classify_c_monotone(d)
        if not (c and strong):
            raise _Reject("not strongly c-monotone")


_BUILDERS = {
    "convex": lambda spec, rng: _gen_convex(spec.n, rng),
    "random_points": lambda spec, rng: _gen_random_points(spec.n, rng),
    "monotone_perturbed": lambda spec, rng: _gen_monotone(spec.n, rng),
    "two_page": lambda spec, rng: _gen_two_page(spec.n, rng),
    "cylindrical": lambda spec, rng: _gen_cylindrical(spec.n, spec.a, spec.b, rng),
    "strongly_cmonotone": lambda spec, rng: _gen_strongly_cmonotone(spec.n, rng),
}


def generate(spec: GenSpec) -> Drawing:
    """Deterministic in (class, n, seed); resamples with fresh jitter until
    the drawing validates and matches its class, within max_rejects."""
    if spec.cls not in _BUILDERS:
        raise ValueError(f"unknown drawing class {spec.cls!r}")
    rng = SplitMix64(spec.seed)
    for _ in range(spec.max_rejects):
        try:
            d = _BUILDERS[spec.cls](spec, rng.split())
            _class_check(spec, d)
            return d
        except (_Reject, NotSimpleError):
            continue
    raise RejectionBudgetExceededError(spec)


# ---------------------------------------------------------------------------
# frozen bipartite fixture
# ---------------------------------------------------------------------------

def fixture_bipartite_isolated() -> Tuple[Drawing, tuple]:
    """A simple drawing of K_{2,3} with a plane spanning tree that crosses
    every non-tree edge, making the tree an isolated vertex of the
    compatibility graph.  Vertices 0-1 form one part, 2-4 the other; the
    tree consists of the three edges of the hub 0 plus the edge 1-2.

    The waypoints were found by guided search over small cases and are
    frozen here; the properties are re-verified by the test suite."""
    F = Fraction
    pts = (
        Point(F(0), F(0)),      # 0: hub of the two-vertex part
        Point(F(40), F(0)),     # 1
        Point(F(20), F(0)),     # 2
        Point(F(-10), F(15)),   # 3
        Point(F(-10), F(-15)),  # 4
    )

    def pl(*coords):
        return tuple(Point(F(x), F(y)) for x, y in coords)

    curves = {
        (0, 2): (pts[0], pts[2]),
        (0, 3): (pts[0], pts[3]),
        (0, 4): (pts[0], pts[4]),
        (1, 2): (pts[1], pts[2]),
        (1, 3): pl((40, 0), (30, -6), (11, 4), (-10, 15)),
        (1, 4): pl((40, 0), (33, -8), (11, -8), (7, -1), (4, 1), (0, 2),
                   (-5, F(9, 2)), (-9, -12), (-10, -15)),
    }
    d = Drawing(n=5, backend="cartesian", vertex_points=pts, curves=curves,
                graph=("bipartite", 2, 3))
    tree = ((0, 2), (0, 3), (0, 4), (1, 2))
    return d, tree
