"""Exact rational predicates for the two curve backends.

Cartesian curves are polylines through ``Point`` waypoints; polar curves are
piecewise-linear radius profiles over angles measured in rational *turns*
(1 turn = full revolution), so every comparison in the package is a rational
sign test.  Contacts that are not transversal interior crossings (shared
endpoints, endpoint-on-interior touches, collinear overlaps, hits on waypoint
breakpoints) are reported as ``Degenerate`` values rather than errors; the
drawing layer decides which of them are legal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence, Tuple, Union

from .errors import NonMonotoneCurveError

Rat = Fraction


class Point(NamedTuple):
    x: Rat
    y: Rat


class PolarPoint(NamedTuple):
    theta: Rat  # turns
    r: Rat


CartesianCurve = Tuple[Point, ...]
PolarCurve = Tuple[PolarPoint, ...]


@dataclass(frozen=True)
class Proper:
    """Transversal crossing in the relative interior of both curves.

    ``at`` is the crossing Point for cartesian input and the crossing angle
    (a turn value in [0, 1)) for polar input.
    """

    at: object


@dataclass(frozen=True)
class Degenerate:
    """Any non-transversal contact.  ``at`` locates point contacts: a Point
    for cartesian input, a (theta, r) pair for polar input, None for
    collinear overlaps."""

    reason: str
    at: object = None


CrossKind = Union[Proper, Degenerate]


# ---------------------------------------------------------------------------
# cartesian primitives
# ---------------------------------------------------------------------------

def orient(a: Point, b: Point, c: Point) -> int:
    """Sign of the cross product (b - a) x (c - a)."""
    v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


def _in_box(a: Point, b: Point, p: Point) -> bool:
    return (min(a.x, b.x) <= p.x <= max(a.x, b.x)
            and min(a.y, b.y) <= p.y <= max(a.y, b.y))


def _line_intersection(a: Point, b: Point, c: Point, d: Point) -> Point:
    rx, ry = b.x - a.x, b.y - a.y
    sx, sy = d.x - c.x, d.y - c.y
    denom = rx * sy - ry * sx
    t = ((c.x - a.x) * sy - (c.y - a.y) * sx) / denom
    return Point(a.x + t * rx, a.y + t * ry)


def segment_proper_crossing(s1: Sequence[Point], s2: Sequence[Point]) -> Optional[CrossKind]:
    """Classify the contact of two closed segments.

    Proper: one transversal crossing interior to both open segments.
    Degenerate: collinear overlap, endpoint-on-segment touch, or shared
    endpoint.  None: disjoint.
    """
    a, b = s1
    c, d = s2
    if a == b or c == d:
        raise ValueError("zero-length segment")
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    if o1 == 0 and o2 == 0:
        # all four points on one line; lexicographic order = order along it
        lo1, hi1 = sorted((a, b))
        lo2, hi2 = sorted((c, d))
        lo, hi = max(lo1, lo2), min(hi1, hi2)
        if lo > hi:
            return None
        if lo == hi:
            return Degenerate("shared endpoint", at=lo)
        return Degenerate("collinear overlap")
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return Proper(_line_intersection(a, b, c, d))
    for p, (u, v) in ((c, (a, b)), (d, (a, b)), (a, (c, d)), (b, (c, d))):
        if orient(u, v, p) == 0 and _in_box(u, v, p):
            shared = p in (a, b) and p in (c, d)
            return Degenerate("shared endpoint" if shared else "endpoint contact", at=p)
    return None


def _segments(curve: CartesianCurve):
    return [(curve[i], curve[i + 1]) for i in range(len(curve) - 1)]


def _bbox_disjoint(s1, s2) -> bool:
    (a, b), (c, d) = s1, s2
    return (max(a.x, b.x) < min(c.x, d.x) or max(c.x, d.x) < min(a.x, b.x)
            or max(a.y, b.y) < min(c.y, d.y) or max(c.y, d.y) < min(a.y, b.y))


def polyline_crossings(c1: CartesianCurve, c2: CartesianCurve) -> list:
    """All Proper and Degenerate contacts between two polylines, each once."""
    out = []
    for s1 in _segments(c1):
        for s2 in _segments(c2):
            if _bbox_disjoint(s1, s2):
                continue
            r = segment_proper_crossing(s1, s2)
            if r is not None and r not in out:
                out.append(r)
    return out


def curve_self_contacts(curve: CartesianCurve) -> list:
    """Illegal self-contacts of one polyline (an edge must be a simple arc).

    Consecutive segments are allowed to meet exactly at their shared
    waypoint; everything else is reported.
    """
    segs = _segments(curve)
    bad = []
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            r = segment_proper_crossing(segs[i], segs[j])
            if r is None:
                continue
            if j == i + 1 and isinstance(r, Degenerate) and r.at == curve[i + 1]:
                continue
            bad.append(r)
    return bad


# ---------------------------------------------------------------------------
# polar primitives
# ---------------------------------------------------------------------------

def normalize_polar(curve: PolarCurve) -> PolarCurve:
    """Shift the whole curve by an integer number of turns so that its first
    waypoint angle lies in [0, 1)."""
    shift = curve[0].theta - (curve[0].theta % 1)
    if shift == 0:
        return tuple(curve)
    return tuple(PolarPoint(w.theta - shift, w.r) for w in curve)


def _polar_pieces(curve: PolarCurve):
    return [(curve[i], curve[i + 1]) for i in range(len(curve) - 1)]


def _piece_r(p0: PolarPoint, p1: PolarPoint, theta: Rat) -> Rat:
    return p0.r + (p1.r - p0.r) * (theta - p0.theta) / (p1.theta - p0.theta)


def polar_crossings(c1: PolarCurve, c2: PolarCurve) -> list:
    """All Proper and Degenerate contacts between two polar curves.

    Angles are compared mod 1 turn; a contact at a piece boundary or curve
    endpoint is Degenerate, a sign change of r1 - r2 interior to both pieces
    is Proper.
    """
    c1 = normalize_polar(c1)
    c2 = normalize_polar(c2)
    out = []

    def add(entry):
        if entry not in out:
            out.append(entry)

    for p0, p1 in _polar_pieces(c1):
        for q0, q1 in _polar_pieces(c2):
            for k in (-1, 0, 1):
                lo = max(p0.theta, q0.theta + k)
                hi = min(p1.theta, q1.theta + k)
                if lo > hi:
                    continue
                r1lo = _piece_r(p0, p1, lo)
                r2lo = _piece_r(q0, q1, lo - k)
                if lo == hi:
                    if r1lo == r2lo:
                        add(Degenerate("endpoint contact", at=(lo % 1, r1lo)))
                    continue
                r1hi = _piece_r(p0, p1, hi)
                r2hi = _piece_r(q0, q1, hi - k)
                dlo = r1lo - r2lo
                dhi = r1hi - r2hi
                if dlo == 0 and dhi == 0:
                    add(Degenerate("collinear overlap"))
                elif dlo == 0:
                    add(Degenerate("endpoint contact", at=(lo % 1, r1lo)))
                elif dhi == 0:
                    add(Degenerate("endpoint contact", at=(hi % 1, r1hi)))
                elif (dlo < 0) != (dhi < 0):
                    t = lo + (hi - lo) * dlo / (dlo - dhi)
                    add(Proper(t % 1))
    return out


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

def _x_direction(curve: CartesianCurve) -> int:
    xs = [w.x for w in curve]
    if all(xs[i] < xs[i + 1] for i in range(len(xs) - 1)):
        return 1
    if all(xs[i] > xs[i + 1] for i in range(len(xs) - 1)):
        return -1
    return 0


def is_x_monotone(curve: CartesianCurve) -> bool:
    return _x_direction(curve) != 0


def curve_eval(curve, at: Rat) -> Optional[Rat]:
    """y at x for an x-monotone cartesian curve, or r at theta (mod 1) for a
    polar curve.  None when the curve does not span the query."""
    if isinstance(curve[0], PolarPoint):
        c = normalize_polar(curve)
        t0, tn = c[0].theta, c[-1].theta
        # unique representative of `at` mod 1 inside [t0, tn], if any
        base = at % 1
        cand = base + math.ceil(t0 - base)
        if cand > tn:
            return None
        for p0, p1 in _polar_pieces(c):
            if p0.theta <= cand <= p1.theta:
                return _piece_r(p0, p1, cand)
        return None
    direction = _x_direction(curve)
    if direction == 0:
        raise NonMonotoneCurveError("y-at-x query on a non-x-monotone curve")
    pts = curve if direction == 1 else tuple(reversed(curve))
    if at < pts[0].x or at > pts[-1].x:
        return None
    for a, b in _segments(pts):
        if a.x <= at <= b.x:
            return a.y + (b.y - a.y) * (at - a.x) / (b.x - a.x)
    return None


# ---------------------------------------------------------------------------
# circle relation
# ---------------------------------------------------------------------------

def segment_circle_relation(s: Sequence[Point], center: Point, r2: Rat) -> str:
    """Relation of a closed segment to the circle of squared radius r2:
    'disjoint', 'crosses' (the open segment passes through the circle
    transversally) or 'touches' (contact without a transversal pass)."""
    if r2 <= 0:
        raise ValueError("squared radius must be positive")
    a, b = s

    def f(p: Point) -> Rat:
        return (p.x - center.x) ** 2 + (p.y - center.y) ** 2 - r2

    fa, fb = f(a), f(b)
    dx, dy = b.x - a.x, b.y - a.y
    dd = dx * dx + dy * dy
    tstar = ((center.x - a.x) * dx + (center.y - a.y) * dy) / dd
    tcl = min(max(tstar, Fraction(0)), Fraction(1))
    fmin = f(Point(a.x + tcl * dx, a.y + tcl * dy))

    if fa > 0 and fb > 0:
        if fmin < 0:
            return "crosses"
        if fmin == 0:
            return "touches"
        return "disjoint"
    if (fa > 0 and fb < 0) or (fa < 0 and fb > 0):
        return "crosses"
    if fa < 0 and fb < 0:
        return "disjoint"
    if fa == 0 and fb == 0:
        return "touches"
    # exactly one endpoint on the circle
    if fa == 0:
        other = fb
        t_inward = tstar > 0
    else:
        other = fa
        t_inward = tstar < 1
    if other < 0:
        return "touches"
    return "crosses" if t_inward else "touches"


def curve_circle_crossing(curve: CartesianCurve, center: Point, r2: Rat) -> bool:
    """Whether a polyline passes transversally through a circle, including
    passes exactly through waypoints (tangential touches do not count)."""

    def f(p: Point) -> Rat:
        return (p.x - center.x) ** 2 + (p.y - center.y) ** 2 - r2

    signs = []

    def push(v: Rat) -> None:
        s = 1 if v > 0 else (-1 if v < 0 else 0)
        if s != 0 and (not signs or signs[-1] != s):
            signs.append(s)

    for a, b in _segments(curve):
        push(f(a))
        dx, dy = b.x - a.x, b.y - a.y
        dd = dx * dx + dy * dy
        tstar = ((center.x - a.x) * dx + (center.y - a.y) * dy) / dd
        if 0 < tstar < 1:
            push(f(Point(a.x + tstar * dx, a.y + tstar * dy)))
        push(f(b))
    return any(signs[i] != signs[i + 1] for i in range(len(signs) - 1))
