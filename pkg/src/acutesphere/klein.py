"""Slanted cubes in the Klein ball model of hyperbolic 3-space.

The Klein model is the right home for these cubes: geodesic planes are flat
chords, so the cube is an honest Euclidean convex polytope, and the foot
parameter x = tanh d(O, X) of a duality witness is exactly the Klein radius
of the foot.  (The Poincare quantity 2/(r + 1/r) equals tanh d under
r = tanh(d/2), which is the bridge between the two models.)

Hyperbolic angles and distances are computed through the Minkowski
hyperboloid: a Klein point p lifts to (1, p)/sqrt(1-|p|^2), and the plane
{p . n = d} has spacelike normal (d, n)/sqrt(|n|^2 - d^2).
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .duality import DualityWitness, solve_dual_22p
from .errors import GeometryError, InternalInconsistency, ValidationError
from .spherical import is_acute, place_triangle, triangle_from_points

LINK_TOL = 1e-8

CUBE_FACES = {
    "F_XY": ("O", "X", "Z'", "Y"),
    "F_YZ": ("O", "Y", "X'", "Z"),
    "F_ZX": ("O", "Z", "Y'", "X"),
    "F_X": ("X", "Z'", "O'", "Y'"),
    "F_Y": ("Y", "X'", "O'", "Z'"),
    "F_Z": ("Z", "Y'", "O'", "X'"),
}

CUBE_EDGES = {
    ("O", "X"): ("F_XY", "F_ZX"),
    ("O", "Y"): ("F_XY", "F_YZ"),
    ("O", "Z"): ("F_YZ", "F_ZX"),
    ("X", "Z'"): ("F_XY", "F_X"),
    ("X", "Y'"): ("F_ZX", "F_X"),
    ("Y", "Z'"): ("F_XY", "F_Y"),
    ("Y", "X'"): ("F_YZ", "F_Y"),
    ("Z", "Y'"): ("F_ZX", "F_Z"),
    ("Z", "X'"): ("F_YZ", "F_Z"),
    ("O'", "X'"): ("F_Y", "F_Z"),
    ("O'", "Y'"): ("F_Z", "F_X"),
    ("O'", "Z'"): ("F_X", "F_Y"),
}


def lift(p):
    """Klein point -> unit timelike Minkowski vector."""
    p = np.asarray(p, float)
    s = 1.0 - float(p @ p)
    if s <= 0.0:
        raise GeometryError(f"point {p} outside the Klein ball")
    return np.concatenate(([1.0], p)) / math.sqrt(s)


def mdot(P, Q):
    return float(-P[0] * Q[0] + P[1:] @ Q[1:])


def hyperbolic_distance(p, q) -> float:
    c = -mdot(lift(p), lift(q))
    return math.acosh(max(1.0, c))


def plane_normal(n, d):
    """Unit spacelike Minkowski normal of the Klein plane {p . n = d},
    oriented so the positive side is {p . n > d}."""
    n = np.asarray(n, float)
    s = float(n @ n) - d * d
    if s <= 0.0:
        raise GeometryError("plane does not meet the ball")
    return np.concatenate(([d], n)) / math.sqrt(s)


def boost_to(b):
    """Lorentz boost taking the origin of the Klein ball to the point b."""
    b = np.asarray(b, float)
    b2 = float(b @ b)
    if b2 >= 1.0:
        raise GeometryError("boost target outside the ball")
    if b2 < 1e-28:
        return np.eye(4)
    g = 1.0 / math.sqrt(1.0 - b2)
    M = np.eye(4)
    M[0, 0] = g
    M[0, 1:] = g * b
    M[1:, 0] = g * b
    M[1:, 1:] = np.eye(3) + (g - 1.0) * np.outer(b, b) / b2
    return M


def transform_point(B, p):
    out = B @ lift(p)
    return out[1:] / out[0]


def vertex_link_sides(base, p, q, s):
    """Face angles at ``base`` between the edges toward p, q, s, ordered as
    (angle(q, s), angle(s, p), angle(p, q)): the side lengths of the link
    triangle, each opposite the corresponding edge direction.

    The base vertex is recentered at the origin first, which keeps the
    measurement well conditioned even when it lies close to the ideal
    boundary (geodesics through the origin are straight with the Euclidean
    angle in the Klein model).
    """
    B = boost_to(-np.asarray(base, float))
    o = transform_point(B, base)
    tp, tq, ts = (transform_point(B, w) - o for w in (p, q, s))

    def ang(u, v):
        return math.atan2(float(np.linalg.norm(np.cross(u, v))), float(u @ v))

    return (ang(tq, ts), ang(ts, tp), ang(tp, tq))


@dataclass(frozen=True)
class SlantedCubeModel:
    """A slanted cube with Klein coordinates and verified metric data.

    ``vertices`` maps the eight labels O, X, Y, Z, X', Y', Z', O' to Klein
    points; ``half_spaces`` lists the six faces as outward pairs (n, d)
    meaning p . n <= d inside.  Dihedral angles and links are measured from
    the coordinates, not copied from the witness.
    """

    vertices: dict
    half_spaces: tuple
    witness: DualityWitness
    dihedrals: dict
    link_at_O: tuple        # ((A, B, C), (a, b, c)) measured
    link_at_opposite: tuple

    def edge_lengths(self) -> dict:
        return {e: hyperbolic_distance(self.vertices[e[0]], self.vertices[e[1]])
                for e in CUBE_EDGES}

    def to_json(self):
        return {
            "vertices": {k: list(map(float, v)) for k, v in self.vertices.items()},
            "faces": {name: list(cycle) for name, cycle in CUBE_FACES.items()},
            "half_spaces": [{"n": list(map(float, n)), "d": float(d)}
                            for n, d in self.half_spaces],
            "dihedrals": {"-".join(e): float(a) for e, a in self.dihedrals.items()},
            "witness": self.witness.to_json(),
        }


def build_slanted_cube(witness: DualityWitness) -> SlantedCubeModel:
    """Reconstruct the cube of a duality witness and verify it end to end.

    Places the feet X, Y, Z at Klein radii x, y, z along directions separated
    by the angles of the link at O, intersects the perpendicular planes for
    the remaining vertices, and checks convexity, the six automatic right
    dihedral angles, and both links against the witness to 1e-8.
    """
    R = witness.R
    T = witness.target
    uX, uY, uZ = place_triangle(R)
    x, y, z = witness.x, witness.y, witness.z

    pts = {"O": np.zeros(3), "X": x * uX, "Y": y * uY, "Z": z * uZ}
    M = np.vstack([uX, uY, uZ])
    pts["O'"] = np.linalg.solve(M, np.array([x, y, z]))

    def corner(u1, d1, u2, d2):
        # intersection of {p.u1 = d1}, {p.u2 = d2} inside span(u1, u2)
        g = float(u1 @ u2)
        gram = np.array([[1.0, g], [g, 1.0]])
        ab = np.linalg.solve(gram, np.array([d1, d2]))
        return ab[0] * u1 + ab[1] * u2

    pts["Z'"] = corner(uX, x, uY, y)
    pts["X'"] = corner(uY, y, uZ, z)
    pts["Y'"] = corner(uZ, z, uX, x)

    for name, p in pts.items():
        if float(p @ p) >= 1.0:
            raise GeometryError(
                f"cube vertex {name} at Euclidean radius {math.sqrt(float(p @ p)):.6f} "
                "outside the Klein ball; witness inconsistent")

    # outward half-spaces: three foot planes and three coordinate planes at O
    half = [(uX, x), (uY, y), (uZ, z)]
    for ua, ub, uc in ((uX, uY, uZ), (uY, uZ, uX), (uZ, uX, uY)):
        n = np.cross(ua, ub)
        n = n / np.linalg.norm(n)
        if float(n @ uc) > 0:
            n = -n
        half.append((n, 0.0))
    for n, d in half:
        worst = max(float(p @ n) - d for p in pts.values())
        if worst > 1e-9:
            raise GeometryError(f"cube is not convex: vertex violates a face plane by {worst:.3e}")

    normals = {
        "F_X": plane_normal(uX, x), "F_Y": plane_normal(uY, y), "F_Z": plane_normal(uZ, z),
        "F_XY": plane_normal(half[3][0], 0.0),
        "F_YZ": plane_normal(half[4][0], 0.0),
        "F_ZX": plane_normal(half[5][0], 0.0),
    }
    dihedrals = {}
    for edge, (f1, f2) in CUBE_EDGES.items():
        c = -mdot(normals[f1], normals[f2])
        dihedrals[edge] = math.acos(min(1.0, max(-1.0, c)))

    for edge in (("X", "Z'"), ("X", "Y'"), ("Y", "Z'"), ("Y", "X'"), ("Z", "Y'"), ("Z", "X'")):
        if abs(dihedrals[edge] - math.pi / 2) > LINK_TOL:
            raise InternalInconsistency(
                f"equatorial dihedral at {edge} is {dihedrals[edge]!r}, expected pi/2")

    link_O = (
        (dihedrals[("O", "X")], dihedrals[("O", "Y")], dihedrals[("O", "Z")]),
        vertex_link_sides(pts["O"], pts["X"], pts["Y"], pts["Z"]),
    )
    link_O2 = (
        (dihedrals[("O'", "X'")], dihedrals[("O'", "Y'")], dihedrals[("O'", "Z'")]),
        vertex_link_sides(pts["O'"], pts["X'"], pts["Y'"], pts["Z'"]),
    )
    for measured, expected, where in (
            (link_O, (R.angles(), R.sides()), "O"),
            (link_O2, (T.angles(), T.sides()), "O'")):
        err = max(abs(m - e) for ms, es in zip(measured, expected) for m, e in zip(ms, es))
        if err > LINK_TOL:
            raise InternalInconsistency(
                f"reconstructed link at {where} deviates from the witness by {err:.3e}")

    return SlantedCubeModel(
        vertices=pts, half_spaces=tuple((n.copy(), float(d)) for n, d in half),
        witness=witness, dihedrals=dihedrals, link_at_O=link_O, link_at_opposite=link_O2)


# -- Monte-Carlo volume ------------------------------------------------------


@dataclass(frozen=True)
class VolumeEstimate:
    value: float
    stderr: float
    samples: int

    def to_json(self):
        return {"value": self.value, "stderr": self.stderr, "samples": self.samples}


def _shard_counts(samples: int, shard_size: int = 1 << 19):
    counts = []
    left = samples
    while left > 0:
        take = min(left, shard_size)
        counts.append(take)
        left -= take
    return counts


def _thread_budget() -> int:
    raw = os.environ.get("ACUTE_SPHERE_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def volume(cube: SlantedCubeModel, samples: int, seed: int = 0) -> VolumeEstimate:
    """Monte-Carlo hyperbolic volume of a slanted cube.

    Uniform samples in the Euclidean bounding box of the vertices are
    filtered by the six half-spaces and weighted by the Klein density
    (1 - |p|^2)^(-2).  Shard sums combine in fixed order, so the estimate is
    deterministic for a given seed regardless of thread count.
    """
    if samples < 1000:
        raise ValidationError(f"need at least 1000 samples, got {samples}")
    verts = np.vstack(list(cube.vertices.values()))
    lo = verts.min(axis=0)
    hi = verts.max(axis=0)
    box_vol = float(np.prod(hi - lo))
    normals = np.vstack([n for n, _ in cube.half_spaces])
    offsets = np.array([d for _, d in cube.half_spaces])

    counts = _shard_counts(samples)
    seeds = np.random.SeedSequence(seed).spawn(len(counts))

    def run_shard(i):
        rng = np.random.default_rng(seeds[i])
        pts = rng.uniform(lo, hi, size=(counts[i], 3))
        inside = np.all(pts @ normals.T <= offsets + 1e-12, axis=1)
        w = np.zeros(counts[i])
        r2 = np.einsum("ij,ij->i", pts[inside], pts[inside])
        w[inside] = (1.0 - r2) ** -2
        return float(w.sum()), float((w * w).sum())

    threads = min(_thread_budget(), len(counts))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            partials = list(pool.map(run_shard, range(len(counts))))
    else:
        partials = [run_shard(i) for i in range(len(counts))]

    s1 = sum(p[0] for p in partials)
    s2 = sum(p[1] for p in partials)
    n = samples
    mean = s1 / n
    var = max(0.0, s2 / n - mean * mean)
    return VolumeEstimate(value=box_vol * mean,
                          stderr=box_vol * math.sqrt(var / n),
                          samples=n)


def beta(realization, samples: int, seed: int = 0) -> VolumeEstimate:
    """Sum over the faces of an acute geodesic triangulation of the volumes
    of the slanted cubes dual to the all-right triangle.

    ``realization`` must provide ``parent.faces`` and unit-vector positions;
    a non-acute face raises ValidationError.
    """
    total = 0.0
    var = 0.0
    seeds = np.random.SeedSequence(seed).spawn(len(realization.parent.faces))
    for i, face in enumerate(realization.parent.faces):
        pa, pb, pc = (realization.positions[v] for v in face)
        R = triangle_from_points(pa, pb, pc)
        if not is_acute(R):
            raise ValidationError(
                f"face {tuple(face)} is not acute (max angle {max(R.angles()):.6f})")
        witness = solve_dual_22p(R, 2)
        if witness is None:
            raise ValidationError(f"face {tuple(face)} admits no all-right dual cube")
        cube = build_slanted_cube(witness)
        est = volume(cube, samples, seed=int(seeds[i].generate_state(1)[0]))
        total += est.value
        var += est.stderr ** 2
    return VolumeEstimate(value=total, stderr=math.sqrt(var),
                          samples=samples * len(realization.parent.faces))
