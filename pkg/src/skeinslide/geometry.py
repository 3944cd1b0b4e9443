"""Exact rational plane geometry: orientation, segment intersection, parity tests.

Points are ``(Fraction, Fraction)`` pairs.  Nothing here uses floating point.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

Point = tuple[Fraction, Fraction]

_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?")


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of the turn ``p -> q -> r`` (1 left, -1 right, 0 collinear)."""
    v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (v > 0) - (v < 0)


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """True if ``p`` lies on the closed segment ``ab``."""
    if orient(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def segment_intersection(a: Point, b: Point, c: Point, d: Point) -> Point | None:
    """A common point of closed segments ``ab`` and ``cd``, or ``None``.

    For overlapping collinear segments one shared endpoint is returned.
    """
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        # proper crossing: solve a + s (b - a) = c + u (d - c)
        den = (b[0] - a[0]) * (d[1] - c[1]) - (b[1] - a[1]) * (d[0] - c[0])
        s = ((c[0] - a[0]) * (d[1] - c[1]) - (c[1] - a[1]) * (d[0] - c[0])) / den
        return (a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1]))
    for p, (x, y) in ((c, (a, b)), (d, (a, b)), (a, (c, d)), (b, (c, d))):
        if on_segment(p, x, y):
            return p
    return None


def segment_meets_open_rect(a: Point, b: Point, x0, y0, x1, y1) -> bool:
    """True if segment ``ab`` passes through the interior of the rectangle."""
    # Liang-Barsky clip against the closed rectangle
    t0, t1 = Fraction(0), Fraction(1)
    dx, dy = b[0] - a[0], b[1] - a[1]
    for p, q in ((-dx, a[0] - x0), (dx, x1 - a[0]), (-dy, a[1] - y0), (dy, y1 - a[1])):
        if p == 0:
            if q < 0:
                return False
            continue
        r = q / p
        if p < 0:
            t0 = max(t0, r)
        else:
            t1 = min(t1, r)
        if t0 > t1:
            return False
    if t0 == t1:
        # a single touching point; interior only if the segment is a point inside
        t = t0
    else:
        t = (t0 + t1) / 2
    mx, my = a[0] + t * dx, a[1] + t * dy
    return x0 < mx < x1 and y0 < my < y1


def crossing_parity(point: Point, polygon: Sequence[Point], direction: str = "+x") -> int:
    """Parity of crossings of a ray from ``point`` with a closed polygon.

    ``direction`` is one of ``+x``, ``-x``, ``+y``, ``-y``.  Uses the
    half-open rule so vertices on the ray are counted consistently.
    """
    swap = direction[1] == "y"
    flip = direction[0] == "-"

    def tr(p: Point) -> Point:
        x, y = (p[1], p[0]) if swap else p
        return (-x, y) if flip else (x, y)

    px, py = tr(point)
    n = len(polygon)
    count = 0
    for i in range(n):
        ax, ay = tr(polygon[i])
        bx, by = tr(polygon[(i + 1) % n])
        if (ay > py) != (by > py):
            xint = ax + (py - ay) * (bx - ax) / (by - ay)
            if xint > px:
                count += 1
    return count & 1


def polygon_is_simple(polygon: Sequence[Point]) -> bool:
    """Exhaustive check that a closed polyline has no self-intersections."""
    n = len(polygon)
    if n < 3:
        return False
    segs = [(polygon[i], polygon[(i + 1) % n]) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            a, b = segs[i]
            c, d = segs[j]
            adjacent = j == i + 1 or (i == 0 and j == n - 1)
            p = segment_intersection(a, b, c, d)
            if p is None:
                continue
            if not adjacent:
                return False
            shared = b if j == i + 1 else a
            other = d if j == i + 1 else c
            if p != shared or on_segment(other, a, b) or on_segment(a if j == i + 1 else b, c, d):
                return False
    return True


def as_fraction(v) -> Fraction:
    """Parse an exact coordinate: an int or a string ``"p/q"`` / ``"p"``."""
    if isinstance(v, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, Fraction):
        return v
    if isinstance(v, str):
        if not _RATIONAL.fullmatch(v.strip()):
            raise ValueError(f"coordinate {v!r} must look like 'p/q' or 'p'")
        return Fraction(v.strip())
    raise TypeError(f"coordinate {v!r} must be an integer or a 'p/q' string")
