"""Rigid-body pose algebra, grasp pose representation, and grasp distance.

Conventions used throughout the package:

- rotations are 3x3 row-major numpy arrays with columns (x, y, z),
- the gripper z-axis is the approach direction,
- the gripper x-axis is the finger closing line,
- the gripper y-axis completes the right-handed frame.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

ROTATION_TOL = 1e-9

_X = np.array([1.0, 0.0, 0.0])
_Y = np.array([0.0, 1.0, 0.0])


def identity_rotation() -> np.ndarray:
    return np.eye(3)


def rotation_about_z(angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def is_rotation(r: np.ndarray, tol: float = ROTATION_TOL) -> bool:
    """True if r is orthonormal with determinant +1 within tol."""
    r = np.asarray(r, dtype=float)
    if r.shape != (3, 3):
        return False
    if not np.all(np.abs(r.T @ r - np.eye(3)) <= tol):
        return False
    return abs(np.linalg.det(r) - 1.0) <= tol


def check_rotation(r: np.ndarray, tol: float = ROTATION_TOL) -> np.ndarray:
    r = np.asarray(r, dtype=float)
    if not is_rotation(r, tol):
        raise ValueError("expected an orthonormal right-handed 3x3 rotation matrix")
    return r


def rotation_from_view(approach_dir: np.ndarray, in_plane_angle: float) -> np.ndarray:
    """Build a grasp rotation whose z-column equals approach_dir.

    The finger closing axis (x-column) is rotated by in_plane_angle about
    the approach direction.  The reference closing axis is obtained by
    projecting a fixed world axis onto the plane normal to the approach,
    so the construction is deterministic; approach (0,0,1) at angle 0
    yields the identity.
    """
    a = np.asarray(approach_dir, dtype=float).reshape(3)
    norm = np.linalg.norm(a)
    if norm < 1e-12:
        raise ValueError("approach direction must be nonzero")
    a = a / norm
    ref = _X if abs(a @ _X) < 0.9 else _Y
    x0 = ref - (ref @ a) * a
    x0 /= np.linalg.norm(x0)
    y0 = np.cross(a, x0)
    x = math.cos(in_plane_angle) * x0 + math.sin(in_plane_angle) * y0
    y = np.cross(a, x)
    return np.column_stack([x, y, a])


def rotation_distance(r1: np.ndarray, r2: np.ndarray) -> float:
    """Geodesic angle between two rotations, in [0, pi].

    The arccos argument is clamped to [-1, 1] to absorb floating-point
    drift near the identity and near half-turns.
    """
    cos_angle = (np.trace(np.asarray(r1).T @ np.asarray(r2)) - 1.0) / 2.0
    return float(math.acos(min(1.0, max(-1.0, cos_angle))))


@dataclass
class Pose:
    """Rigid transform mapping points p -> rotation @ p + translation."""

    rotation: np.ndarray = field(default_factory=identity_rotation)
    translation: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def __post_init__(self):
        self.rotation = np.asarray(self.rotation, dtype=float).reshape(3, 3)
        self.translation = np.asarray(self.translation, dtype=float).reshape(3)

    @classmethod
    def identity(cls) -> "Pose":
        return cls()

    def compose(self, other: "Pose") -> "Pose":
        """self o other: apply other first, then self."""
        return Pose(self.rotation @ other.rotation,
                    self.rotation @ other.translation + self.translation)

    def inverse(self) -> "Pose":
        rt = self.rotation.T
        return Pose(rt, -(rt @ self.translation))

    def apply(self, points: np.ndarray) -> np.ndarray:
        """Transform a single point (3,) or an array of points (N, 3)."""
        pts = np.asarray(points, dtype=float)
        if pts.ndim == 1:
            return self.rotation @ pts + self.translation
        return pts @ self.rotation.T + self.translation


@dataclass
class GraspPose:
    """Parallel-jaw grasp: frame, opening width, approach depth, scores.

    rotation columns are (closing axis, plane normal, approach axis);
    translation is the grasp center in meters.  score and stable_score
    live in [0, 1]; object_id is the owning object or None.
    """

    rotation: np.ndarray
    translation: np.ndarray
    width: float
    depth: float
    score: float = 0.0
    stable_score: float = 0.0
    object_id: int | None = None

    def __post_init__(self):
        self.rotation = np.asarray(self.rotation, dtype=float).reshape(3, 3)
        self.translation = np.asarray(self.translation, dtype=float).reshape(3)
        if self.width <= 0:
            raise ValueError("grasp width must be positive")

    @property
    def closing_axis(self) -> np.ndarray:
        return self.rotation[:, 0]

    @property
    def plane_normal(self) -> np.ndarray:
        return self.rotation[:, 1]

    @property
    def approach_axis(self) -> np.ndarray:
        return self.rotation[:, 2]

    def replace(self, **kw) -> "GraspPose":
        return replace(self, **kw)


@dataclass
class DistanceParams:
    """Constants of the grasp distance: d = dt/w_max + gamma * dR/pi."""

    w_max: float = 0.01
    gamma: float = 0.1

    def __post_init__(self):
        if self.w_max <= 0:
            raise ValueError("w_max must be positive")
        if self.gamma < 0:
            raise ValueError("gamma must be nonnegative")


def grasp_distance(g1: GraspPose, g2: GraspPose, p: DistanceParams | None = None) -> float:
    """Blended translation/rotation distance between two grasps.

    Both grasps must be expressed in the same coordinate frame (the
    object frame for annotation use).  Grasps on different objects are
    infinitely far apart.
    """
    if p is None:
        p = DistanceParams()
    if g1.object_id != g2.object_id:
        return math.inf
    dt = float(np.linalg.norm(g1.translation - g2.translation))
    dr = rotation_distance(g1.rotation, g2.rotation)
    return dt / p.w_max + p.gamma * dr / math.pi


def transform_grasp(g: GraspPose, t: Pose) -> GraspPose:
    """Express a grasp in a new frame; width/depth/scores/id unchanged."""
    return g.replace(rotation=t.rotation @ g.rotation,
                     translation=t.rotation @ g.translation + t.translation)
