"""Parameterized intersection layouts and line-arc-line vehicle paths.

An intersection is described by the number of road arms, per-arm forward and
backward lane counts, arm angles, and a common lane width.  All lane markings,
boundaries, and lane centers of one arm are offsets of a single normalized
line equation; corners, entrance lines, and entrance points are derived from
those lines.  A vehicle path is a straight approach segment, a circular arc
tangent to both lane center lines, and a straight exit segment, parameterized
by arc length.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

TWO_PI = 2.0 * math.pi

# Two lane center lines closer than this in cross-product are treated as
# colinear (straight-through paths on exactly opposite arms).
COLINEAR_TOL = 1e-9
# Max perpendicular offset between "colinear" lines that still admits a path.
OFFSET_TOL = 1e-6
MIN_ARM_SEPARATION = math.pi / 6.0


class GeometryError(ValueError):
    """A path or intersection construction is impossible."""


class Maneuver(Enum):
    LEFT = "left"
    STRAIGHT = "straight"
    RIGHT = "right"


FORWARD = "forward"
BACKWARD = "backward"


@dataclass(frozen=True)
class Line:
    """Normalized line a*x + b*y + c = 0 with a^2 + b^2 = 1."""

    a: float
    b: float
    c: float

    def signed_distance(self, x: float, y: float) -> float:
        return self.a * x + self.b * y + self.c

    def foot(self, x: float, y: float) -> tuple[float, float]:
        """Perpendicular projection of (x, y) onto the line."""
        d = self.signed_distance(x, y)
        return (x - d * self.a, y - d * self.b)


@dataclass(frozen=True)
class LaneRef:
    """A lane on one arm: 1-based index from the left of its direction group."""

    arm: int
    direction: str  # FORWARD or BACKWARD
    index: int

    def __post_init__(self):
        if self.direction not in (FORWARD, BACKWARD):
            raise ValueError(f"bad lane direction {self.direction!r}")
        if self.index < 1:
            raise ValueError("lane index is 1-based")


@dataclass(frozen=True)
class IntersectionSpec:
    """Layout parameters: arm count, lane counts per arm, arm angles, lane width.

    Angles are counter-clockwise from the x-axis and must be cyclically
    increasing with pairwise separation above MIN_ARM_SEPARATION so that every
    pair of adjacent road boundaries intersects in a well-defined corner.
    """

    forward_lanes: tuple[int, ...]
    backward_lanes: tuple[int, ...]
    angles: tuple[float, ...]
    lane_width: float

    def __post_init__(self):
        n = len(self.angles)
        if n not in (3, 4, 5):
            raise ValueError(f"arm count must be 3, 4, or 5, got {n}")
        if len(self.forward_lanes) != n or len(self.backward_lanes) != n:
            raise ValueError("lane count lists must match the arm count")
        for mf, mb in zip(self.forward_lanes, self.backward_lanes):
            if mf < 0 or mb < 0 or mf + mb < 1:
                raise ValueError("each arm needs non-negative lane counts, at least one lane")
        if not self.lane_width > 0:
            raise ValueError("lane width must be positive")
        object.__setattr__(self, "angles", tuple(a % TWO_PI for a in self.angles))
        order = sorted(range(n), key=lambda m: self.angles[m])
        # The given arm order must be a rotation of the angular order.
        start = order.index(0)
        rotated = order[start:] + order[:start]
        if rotated != list(range(n)):
            raise ValueError("arm angles must be cyclically increasing")
        for p in range(n):
            a0 = self.angles[order[p]]
            a1 = self.angles[order[(p + 1) % n]]
            sep = (a1 - a0) % TWO_PI
            if sep <= MIN_ARM_SEPARATION:
                raise ValueError(
                    f"arms {order[p]} and {order[(p + 1) % n]} are separated by "
                    f"{sep:.4f} rad <= pi/6")
        object.__setattr__(self, "_ccw_order", tuple(order))

    @property
    def n_arms(self) -> int:
        return len(self.angles)

    @property
    def ccw_order(self) -> tuple[int, ...]:
        """Arm indices sorted by angle (counter-clockwise)."""
        return self._ccw_order

    def rank(self, arm: int) -> int:
        return self._ccw_order.index(arm)

    def arms_adjacent(self, arm_a: int, arm_b: int) -> bool:
        d = (self.rank(arm_a) - self.rank(arm_b)) % self.n_arms
        return d in (1, self.n_arms - 1)

    def right_of(self, arm_i: int, arm_j: int) -> bool:
        """True if traffic from arm_i approaches from the right of traffic
        from arm_j (right-hand traffic: the next arm counter-clockwise)."""
        return self.rank(arm_i) == (self.rank(arm_j) + 1) % self.n_arms

    def lanes(self, direction: str) -> list[LaneRef]:
        counts = self.forward_lanes if direction == FORWARD else self.backward_lanes
        return [LaneRef(m, direction, i)
                for m in range(self.n_arms)
                for i in range(1, counts[m] + 1)]


def lane_offset(ref: LaneRef) -> int:
    """Signed half-lane-width multiple k of a lane's center line."""
    return 2 * ref.index - 1 if ref.direction == FORWARD else -(2 * ref.index - 1)


def lane_line(spec: IntersectionSpec, arm: int, k: int) -> Line:
    """Line of offset k on one arm: markings/boundaries for even k, lane
    centers for odd k; k > 0 is the forward side, k = 0 the road centerline."""
    if not -2 * spec.backward_lanes[arm] <= k <= 2 * spec.forward_lanes[arm]:
        raise ValueError(f"offset k={k} out of range for arm {arm}")
    phi = spec.angles[arm]
    return Line(math.sin(phi), -math.cos(phi), k * spec.lane_width / 2.0)


def lane_center(spec: IntersectionSpec, ref: LaneRef) -> Line:
    return lane_line(spec, ref.arm, lane_offset(ref))


def travel_direction(spec: IntersectionSpec, ref: LaneRef) -> tuple[float, float]:
    """Unit travel direction: forward lanes point at the intersection center."""
    phi = spec.angles[ref.arm]
    if ref.direction == FORWARD:
        return (-math.cos(phi), -math.sin(phi))
    return (math.cos(phi), math.sin(phi))


def _intersect_lines(l1: Line, l2: Line) -> tuple[float, float]:
    det = l1.a * l2.b - l2.a * l1.b
    if abs(det) < 1e-12:
        raise GeometryError("parallel lines do not intersect")
    x = (-l1.c * l2.b + l2.c * l1.b) / det
    y = (-l1.a * l2.c + l2.a * l1.c) / det
    return (x, y)


@dataclass(frozen=True)
class IntersectionLayout:
    """Derived geometry: corners, entrance lines, and entrance points.

    corners[p] is the corner between the arms of ccw rank p and p+1; the
    entrance line of an arm joins its two adjacent corners; each forward
    lane's entrance point is its center line crossed with that entrance line.
    """

    corners: tuple[tuple[float, float], ...]
    entrance_lines: dict[int, tuple[tuple[float, float], tuple[float, float]]]
    entrance_points: dict[LaneRef, tuple[float, float]]

    def entrance_line_of(self, arm: int, spec: IntersectionSpec) -> Line:
        p1, p2 = self.entrance_lines[arm]
        dx, dy = p2[0] - p1[0], p2[1] - p1[1]
        norm = math.hypot(dx, dy)
        a, b = -dy / norm, dx / norm
        return Line(a, b, -(a * p1[0] + b * p1[1]))


@lru_cache(maxsize=128)
def corners_and_entrances(spec: IntersectionSpec) -> IntersectionLayout:
    n = spec.n_arms
    order = spec.ccw_order
    corners = []
    for p in range(n):
        m = order[p]
        m_next = order[(p + 1) % n]
        fwd_boundary = lane_line(spec, m, 2 * spec.forward_lanes[m])
        bwd_boundary = lane_line(spec, m_next, -2 * spec.backward_lanes[m_next])
        try:
            corners.append(_intersect_lines(fwd_boundary, bwd_boundary))
        except GeometryError as exc:
            raise GeometryError(
                f"adjacent boundaries of arms {m} and {m_next} are parallel") from exc
    entrance_lines = {}
    for p in range(n):
        m = order[p]
        entrance_lines[m] = (corners[p - 1], corners[p])
    entrance_points = {}
    for ref in spec.lanes(FORWARD):
        p1, p2 = entrance_lines[ref.arm]
        dx, dy = p2[0] - p1[0], p2[1] - p1[1]
        norm = math.hypot(dx, dy)
        ent_line = Line(-dy / norm, dx / norm,
                        -(-dy / norm * p1[0] + dx / norm * p1[1]))
        entrance_points[ref] = _intersect_lines(lane_center(spec, ref), ent_line)
    return IntersectionLayout(tuple(corners), entrance_lines, entrance_points)


def classify_maneuver(spec: IntersectionSpec, origin_arm: int, target_arm: int) -> Maneuver:
    """Turn classification by the clockwise angle from origin arm to target arm."""
    if origin_arm == target_arm:
        raise ValueError("origin and target arms must differ (no U-turns)")
    alpha = (spec.angles[origin_arm] - spec.angles[target_arm]) % TWO_PI
    if alpha <= 0.75 * math.pi:
        return Maneuver.LEFT
    if alpha < 1.25 * math.pi:
        return Maneuver.STRAIGHT
    return Maneuver.RIGHT


def admissibility_violation(spec: IntersectionSpec, origin: LaneRef,
                            target: LaneRef) -> str | None:
    """Reason the (origin, target) pair breaks a lane rule, or None if legal.

    Rule 1: left turns only from the leftmost forward lane to the leftmost
    backward lane.  Rule 2: right turns only from the rightmost forward lane
    to the rightmost backward lane.  Rule 3: going straight from the eta-th
    forward lane targets the eta'-th backward lane, eta' = min(eta, M_b).
    """
    if origin.direction != FORWARD:
        return "origin must be a forward lane"
    if target.direction != BACKWARD:
        return "target must be a backward lane"
    if origin.arm == target.arm:
        return "U-turns are not allowed"
    if target.index > spec.backward_lanes[target.arm]:
        return "target lane does not exist on its arm"
    maneuver = classify_maneuver(spec, origin.arm, target.arm)
    if maneuver is Maneuver.LEFT:
        if origin.index != 1 or target.index != 1:
            return ("rule 1: a left turn must run from the leftmost forward "
                    "lane to the leftmost backward lane")
    elif maneuver is Maneuver.RIGHT:
        if (origin.index != spec.forward_lanes[origin.arm]
                or target.index != spec.backward_lanes[target.arm]):
            return ("rule 2: a right turn must run from the rightmost forward "
                    "lane to the rightmost backward lane")
    else:
        expect = min(origin.index, spec.backward_lanes[target.arm])
        if target.index != expect:
            return (f"rule 3: going straight from forward lane {origin.index} "
                    f"must target backward lane {expect}")
    return None


def admissible_targets(spec: IntersectionSpec, origin: LaneRef) -> set[LaneRef]:
    """All target lanes reachable from a forward lane under the lane rules."""
    targets = set()
    for arm in range(spec.n_arms):
        if arm == origin.arm or spec.backward_lanes[arm] < 1:
            continue
        maneuver = classify_maneuver(spec, origin.arm, arm)
        if maneuver is Maneuver.LEFT:
            if origin.index == 1:
                targets.add(LaneRef(arm, BACKWARD, 1))
        elif maneuver is Maneuver.RIGHT:
            if origin.index == spec.forward_lanes[origin.arm]:
                targets.add(LaneRef(arm, BACKWARD, spec.backward_lanes[arm]))
        else:
            targets.add(LaneRef(arm, BACKWARD,
                                min(origin.index, spec.backward_lanes[arm])))
    return targets


@dataclass(frozen=True)
class LineSeg:
    x0: float
    y0: float
    dx: float  # unit direction
    dy: float
    length: float

    def eval(self, s: float) -> tuple[float, float, float]:
        return (self.x0 + self.dx * s, self.y0 + self.dy * s,
                math.atan2(self.dy, self.dx))


@dataclass(frozen=True)
class ArcSeg:
    cx: float
    cy: float
    radius: float  # > 0
    psi0: float    # angular position of the start point
    orient: int    # +1 counter-clockwise travel, -1 clockwise
    length: float

    def eval(self, s: float) -> tuple[float, float, float]:
        psi = self.psi0 + self.orient * s / self.radius
        x = self.cx + self.radius * math.cos(psi)
        y = self.cy + self.radius * math.sin(psi)
        heading = psi + self.orient * (math.pi / 2.0)
        return (x, y, math.atan2(math.sin(heading), math.cos(heading)))


@dataclass(frozen=True)
class Path:
    """Arc-length-parameterized curve with entrance/exit/terminal markers."""

    segments: tuple
    breaks: tuple[float, ...]  # start arc length of each segment
    rho_entrance: float
    rho_exit: float
    rho_terminal: float
    origin: LaneRef
    target: LaneRef
    maneuver: Maneuver
    arc: ArcSeg | None  # None on straight-degenerate paths

    @property
    def sweep(self) -> float:
        """Signed arc sweep (positive counter-clockwise)."""
        if self.arc is None:
            return 0.0
        return self.arc.orient * self.arc.length / self.arc.radius


def path_eval(path: Path, rho: float) -> tuple[float, float, float]:
    """Position and tangent heading at arc length rho; beyond the terminal
    marker the final line extrapolates."""
    segs = path.segments
    idx = len(segs) - 1
    for i in range(len(segs) - 1):
        if rho < path.breaks[i + 1]:
            idx = i
            break
    return segs[idx].eval(rho - path.breaks[idx])


def _solve_tangent_arc(line1: Line, line2: Line, entrance: tuple[float, float],
                       d1: tuple[float, float], d2: tuple[float, float]) -> ArcSeg:
    """Circle tangent to line1 at the entrance point and tangent to line2,
    traversed so the exit tangent matches the target travel direction d2.

    The center sits on the entrance normal at signed offset t (which is also
    the signed radius); tangency to line2 gives t = sigma_en / (s - cos) for
    s in {+1, -1}, of which exactly one candidate exits in the d2 direction.
    """
    ex, ey = entrance
    sigma_en = line2.signed_distance(ex, ey)
    cos_lines = line1.a * line2.a + line1.b * line2.b
    chosen = None
    for s in (1.0, -1.0):
        denom = s - cos_lines
        if abs(denom) < 1e-12:
            continue
        t = sigma_en / denom
        if abs(t) < 1e-9:
            continue
        cx, cy = ex + t * line1.a, ey + t * line1.b
        fx, fy = line2.foot(cx, cy)
        ux, uy = ex - cx, ey - cy
        orient = 1 if ux * d1[1] - uy * d1[0] > 0 else -1
        vx, vy = fx - cx, fy - cy
        vnorm = math.hypot(vx, vy)
        tangent = (orient * -vy / vnorm, orient * vx / vnorm)
        if tangent[0] * d2[0] + tangent[1] * d2[1] > 0.0:
            cosang = (ux * vx + uy * vy) / (math.hypot(ux, uy) * vnorm)
            sweep = math.acos(max(-1.0, min(1.0, cosang)))
            chosen = ArcSeg(cx, cy, abs(t), math.atan2(uy, ux), orient,
                            abs(t) * sweep)
            break
    if chosen is None:
        raise GeometryError("no tangent arc connects the origin and target lanes")
    return chosen


def plan_path(spec: IntersectionSpec, origin: LaneRef, target: LaneRef,
              d_init: float, d_term: float) -> Path:
    """Line-arc-line path from d_init before the entrance point to d_term
    past the exit point.  Colinear lane centers degenerate to a straight
    line whose exit is on the target arm's entrance line."""
    violation = admissibility_violation(spec, origin, target)
    if violation is not None:
        raise GeometryError(violation)
    if not (d_init > 0 and d_term > 0):
        raise ValueError("d_init and d_term must be positive")
    layout = corners_and_entrances(spec)
    entrance = layout.entrance_points[origin]
    line1 = lane_center(spec, origin)
    line2 = lane_center(spec, target)
    d1 = travel_direction(spec, origin)
    d2 = travel_direction(spec, target)
    maneuver = classify_maneuver(spec, origin.arm, target.arm)
    init_pt = (entrance[0] - d_init * d1[0], entrance[1] - d_init * d1[1])
    seg1 = LineSeg(init_pt[0], init_pt[1], d1[0], d1[1], d_init)

    det = line1.a * line2.b - line2.a * line1.b
    if abs(det) < COLINEAR_TOL:
        offset = abs(line2.signed_distance(*entrance))
        if offset > OFFSET_TOL:
            raise GeometryError(
                f"parallel lane centers offset by {offset:.3g} m admit no smooth path")
        exit_pt = _intersect_lines(line1, layout.entrance_line_of(target.arm, spec))
        run = (exit_pt[0] - entrance[0]) * d1[0] + (exit_pt[1] - entrance[1]) * d1[1]
        if run <= 0:
            raise GeometryError("target entrance line lies behind the entrance point")
        mid = LineSeg(entrance[0], entrance[1], d1[0], d1[1], run)
        seg3 = LineSeg(exit_pt[0], exit_pt[1], d1[0], d1[1], d_term)
        return Path((seg1, mid, seg3), (0.0, d_init, d_init + run),
                    d_init, d_init + run, d_init + run + d_term,
                    origin, target, maneuver, None)

    arc = _solve_tangent_arc(line1, line2, entrance, d1, d2)
    exit_pt = arc.eval(arc.length)[:2]
    seg3 = LineSeg(exit_pt[0], exit_pt[1], d2[0], d2[1], d_term)
    rho_ex = d_init + arc.length
    return Path((seg1, arc, seg3), (0.0, d_init, rho_ex),
                d_init, rho_ex, rho_ex + d_term, origin, target, maneuver, arc)
