"""Exact planar predicates for footprint discs and segments against obstacle shapes.

Shapes are treated as open regions: a contact of measure zero (tangency,
running along a rectangle edge, touching a corner) never counts as overlap
or penetration. Every predicate reduces to strict comparisons of squared
distances or open interval intersections, so there is no tolerance anywhere.
"""

from __future__ import annotations


def seg_point_dist_sq(
    ax: float, ay: float, bx: float, by: float, px: float, py: float
) -> float:
    """Squared distance from point (px, py) to the closed segment a-b."""
    dx = bx - ax
    dy = by - ay
    denom = dx * dx + dy * dy
    if denom == 0.0:
        ex = px - ax
        ey = py - ay
        return ex * ex + ey * ey
    t = ((px - ax) * dx + (py - ay) * dy) / denom
    if t <= 0.0:
        cx, cy = ax, ay
    elif t >= 1.0:
        cx, cy = bx, by
    else:
        cx = ax + t * dx
        cy = ay + t * dy
    ex = px - cx
    ey = py - cy
    return ex * ex + ey * ey


def rect_point_dist_sq(
    xmin: float, ymin: float, xmax: float, ymax: float, px: float, py: float
) -> float:
    """Squared distance from a point to the closed rectangle (0 inside)."""
    dx = max(xmin - px, 0.0, px - xmax)
    dy = max(ymin - py, 0.0, py - ymax)
    return dx * dx + dy * dy


def point_in_open_rect(
    xmin: float, ymin: float, xmax: float, ymax: float, px: float, py: float
) -> bool:
    return xmin < px < xmax and ymin < py < ymax


def disc_overlaps_circle(
    cx: float, cy: float, radius: float, px: float, py: float, footprint: float
) -> bool:
    """Does a disc of the given footprint radius at (px, py) overlap the circle?

    footprint 0 degenerates to a strict point-in-circle test.
    """
    dx = px - cx
    dy = py - cy
    r = radius + footprint
    return dx * dx + dy * dy < r * r


def disc_overlaps_rect(
    xmin: float,
    ymin: float,
    xmax: float,
    ymax: float,
    px: float,
    py: float,
    footprint: float,
) -> bool:
    """Does a disc of the given footprint radius at (px, py) overlap the rectangle?"""
    if footprint == 0.0:
        return point_in_open_rect(xmin, ymin, xmax, ymax, px, py)
    return rect_point_dist_sq(xmin, ymin, xmax, ymax, px, py) < footprint * footprint


def _slab_interval(
    p: float, d: float, lo: float, hi: float
) -> tuple[float, float] | None:
    """Parameter interval where p + t*d lies strictly inside (lo, hi)."""
    if d == 0.0:
        return (0.0, 1.0) if lo < p < hi else None
    ta = (lo - p) / d
    tb = (hi - p) / d
    if ta > tb:
        ta, tb = tb, ta
    return ta, tb


def segment_meets_open_rect(
    xmin: float,
    ymin: float,
    xmax: float,
    ymax: float,
    ax: float,
    ay: float,
    bx: float,
    by: float,
) -> bool:
    """Does segment a-b spend positive length inside the open rectangle?

    A segment collinear with an edge or clipping exactly a corner does not.
    """
    ix = _slab_interval(ax, bx - ax, xmin, xmax)
    if ix is None:
        return False
    iy = _slab_interval(ay, by - ay, ymin, ymax)
    if iy is None:
        return False
    t0 = max(0.0, ix[0], iy[0])
    t1 = min(1.0, ix[1], iy[1])
    return t0 < t1


def _segment_meets_closed_rect(
    xmin: float,
    ymin: float,
    xmax: float,
    ymax: float,
    ax: float,
    ay: float,
    bx: float,
    by: float,
) -> bool:
    dx = bx - ax
    if dx == 0.0:
        if not xmin <= ax <= xmax:
            return False
        ix = (0.0, 1.0)
    else:
        ta = (xmin - ax) / dx
        tb = (xmax - ax) / dx
        ix = (ta, tb) if ta <= tb else (tb, ta)
    dy = by - ay
    if dy == 0.0:
        if not ymin <= ay <= ymax:
            return False
        iy = (0.0, 1.0)
    else:
        ta = (ymin - ay) / dy
        tb = (ymax - ay) / dy
        iy = (ta, tb) if ta <= tb else (tb, ta)
    t0 = max(0.0, ix[0], iy[0])
    t1 = min(1.0, ix[1], iy[1])
    return t0 <= t1


def segment_crosses_circle(
    cx: float,
    cy: float,
    radius: float,
    ax: float,
    ay: float,
    bx: float,
    by: float,
    footprint: float,
) -> bool:
    """Does segment a-b enter the circle inflated by the footprint radius?

    Exact tangency (closest approach equal to the inflated radius) is not
    a crossing.
    """
    r = radius + footprint
    return seg_point_dist_sq(ax, ay, bx, by, cx, cy) < r * r


def segment_crosses_rect(
    xmin: float,
    ymin: float,
    xmax: float,
    ymax: float,
    ax: float,
    ay: float,
    bx: float,
    by: float,
    footprint: float,
) -> bool:
    """Does segment a-b enter the rectangle inflated by the footprint radius?"""
    if footprint == 0.0:
        return segment_meets_open_rect(xmin, ymin, xmax, ymax, ax, ay, bx, by)
    if _segment_meets_closed_rect(xmin, ymin, xmax, ymax, ax, ay, bx, by):
        return True
    # Disjoint convex sets: the minimum distance is realized endpoint-to-rect
    # or corner-to-segment.
    d = min(
        rect_point_dist_sq(xmin, ymin, xmax, ymax, ax, ay),
        rect_point_dist_sq(xmin, ymin, xmax, ymax, bx, by),
        seg_point_dist_sq(ax, ay, bx, by, xmin, ymin),
        seg_point_dist_sq(ax, ay, bx, by, xmin, ymax),
        seg_point_dist_sq(ax, ay, bx, by, xmax, ymin),
        seg_point_dist_sq(ax, ay, bx, by, xmax, ymax),
    )
    return d < footprint * footprint
