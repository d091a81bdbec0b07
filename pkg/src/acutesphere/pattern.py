"""Orthogonal circle-pattern solver on the unit sphere.

A pattern assigns each vertex a spherical disk (center on S^2, radius in
(0, pi/2), or radius 0 for designated ideal vertices) so that disks of
adjacent vertices intersect orthogonally: cos d(x_u, x_v) = cos r_u cos r_v.
The solver is a plain dense Levenberg-Marquardt loop over the stacked
residuals (edge equations plus unit-norm equations).  Damping uses a scalar
multiple of the identity, so the iteration commutes with rotations of the
initialization; all randomness is drawn from an explicit seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import least_squares

from .errors import InternalInconsistency, SolveError
from .klein import boost_to
from .triangulation import AbstractTriangulation


@dataclass
class PatternSolution:
    positions: np.ndarray      # (V, 3) unit rows
    radii: np.ndarray          # (V,), zero at ideal vertices
    residual: float            # max |edge residual|
    iterations: int


class PatternProblem:
    """Residuals and Jacobian of a pattern for one triangulation.

    ``fixed_zero`` lists vertices whose radius is pinned at 0 (wheel hubs /
    ideal vertices); they contribute edge equations but no radius variable.
    """

    def __init__(self, tri: AbstractTriangulation, fixed_zero=()):
        self.tri = tri
        self.index = {v: i for i, v in enumerate(tri.vertices)}
        self.nv = len(tri.vertices)
        self.edges = np.array(sorted((self.index[u], self.index[v])
                                     for u, v in map(tuple, tri.edges)))
        self.fixed = np.zeros(self.nv, dtype=bool)
        for v in fixed_zero:
            self.fixed[self.index[v]] = True
        self.free_r = np.nonzero(~self.fixed)[0]
        self.r_col = {int(v): 3 * self.nv + k for k, v in enumerate(self.free_r)}
        self.nvar = 3 * self.nv + len(self.free_r)
        self.nres = len(self.edges) + self.nv

    def unpack(self, theta):
        pos = theta[:3 * self.nv].reshape(self.nv, 3)
        r = np.zeros(self.nv)
        r[self.free_r] = theta[3 * self.nv:]
        return pos, r

    def pack(self, pos, r):
        return np.concatenate([pos.ravel(), r[self.free_r]])

    def residuals(self, theta):
        pos, r = self.unpack(theta)
        eu, ev = self.edges[:, 0], self.edges[:, 1]
        re = np.einsum("ij,ij->i", pos[eu], pos[ev]) - np.cos(r[eu]) * np.cos(r[ev])
        rn = np.einsum("ij,ij->i", pos, pos) - 1.0
        return np.concatenate([re, rn])

    def jacobian(self, theta):
        pos, r = self.unpack(theta)
        J = np.zeros((self.nres, self.nvar))
        for i, (u, v) in enumerate(self.edges):
            J[i, 3 * u:3 * u + 3] = pos[v]
            J[i, 3 * v:3 * v + 3] = pos[u]
            if not self.fixed[u]:
                J[i, self.r_col[int(u)]] = math.sin(r[u]) * math.cos(r[v])
            if not self.fixed[v]:
                J[i, self.r_col[int(v)]] = math.cos(r[u]) * math.sin(r[v])
        for v in range(self.nv):
            J[len(self.edges) + v, 3 * v:3 * v + 3] = 2.0 * pos[v]
        return J

    def check_gradient(self, theta, rng, columns=6, h=1e-6, tol=1e-4):
        """Spot-check the analytic Jacobian against central differences."""
        J = self.jacobian(theta)
        idx = rng.choice(self.nvar, size=min(columns, self.nvar), replace=False)
        for i in idx:
            tp = theta.copy()
            tm = theta.copy()
            tp[i] += h
            tm[i] -= h
            fd = (self.residuals(tp) - self.residuals(tm)) / (2 * h)
            err = np.max(np.abs(fd - J[:, i])) / max(1.0, np.max(np.abs(J[:, i])))
            if err > tol:
                raise InternalInconsistency(
                    f"jacobian column {i} disagrees with finite differences ({err:.2e})")


def levenberg_marquardt(problem, theta0, tol=1e-13, max_iter=400):
    """Damped Gauss-Newton with scalar (rotation-equivariant) damping."""
    theta = theta0.copy()
    r = problem.residuals(theta)
    cost = float(r @ r)
    lam = 1e-3
    iters = 0
    for iters in range(1, max_iter + 1):
        if np.max(np.abs(r)) < tol:
            break
        J = problem.jacobian(theta)
        A = J.T @ J
        g = J.T @ r
        scale = max(np.trace(A) / A.shape[0], 1e-30)
        accepted = False
        for _ in range(60):
            try:
                delta = np.linalg.solve(A + lam * scale * np.eye(A.shape[0]), -g)
            except np.linalg.LinAlgError:
                lam *= 10.0
                continue
            trial = theta + delta
            rt = problem.residuals(trial)
            ct = float(rt @ rt)
            if ct < cost:
                theta, r, cost = trial, rt, ct
                lam = max(lam / 3.0, 1e-12)
                accepted = True
                break
            lam *= 3.0
            if lam > 1e14:
                break
        if not accepted:
            break
    return theta, float(np.max(np.abs(r))), iters


# -- initialization ----------------------------------------------------------


def link_cycle(tri: AbstractTriangulation, v) -> list:
    """Neighbors of an interior vertex in cyclic link order."""
    nbr_edges = {}
    for f in tri.faces:
        if v in f:
            u, w = [x for x in f if x != v]
            nbr_edges.setdefault(u, []).append(w)
            nbr_edges.setdefault(w, []).append(u)
    start = next(iter(nbr_edges))
    cycle = [start]
    prev, cur = start, nbr_edges[start][0]
    while cur != start:
        cycle.append(cur)
        ns = nbr_edges[cur]
        prev, cur = cur, (ns[1] if ns[0] == prev else ns[0])
    return cycle


def tutte_sphere_init(tri: AbstractTriangulation, pole_vertex, rng) -> np.ndarray:
    """Embedded starting positions: Tutte layout of the graph minus one
    vertex, pinned on its link circle, lifted by inverse stereographic
    projection with the removed vertex at the north pole."""
    idx = {v: i for i, v in enumerate(tri.vertices)}
    n = len(tri.vertices)
    ring = link_cycle(tri, pole_vertex)
    pinned = {w: (math.cos(2 * math.pi * k / len(ring)),
                  math.sin(2 * math.pi * k / len(ring)))
              for k, w in enumerate(ring)}
    inner = [v for v in tri.vertices if v != pole_vertex and v not in pinned]
    plane = np.zeros((n, 2))
    if inner:
        pos_of = {v: i for i, v in enumerate(inner)}
        L = np.zeros((len(inner), len(inner)))
        b = np.zeros((len(inner), 2))
        for i, v in enumerate(inner):
            nbrs = [u for u in tri.adjacency[v] if u != pole_vertex]
            L[i, i] = len(nbrs)
            for u in nbrs:
                if u in pos_of:
                    L[i, pos_of[u]] -= 1.0
                else:
                    b[i] += pinned[u]
        sol = np.linalg.solve(L, b)
        for v, i in pos_of.items():
            plane[idx[v]] = sol[i]
    for w, p in pinned.items():
        plane[idx[w]] = p

    norms = np.linalg.norm(plane, axis=1)
    scale = 1.0 / max(1e-9, np.median(norms[norms > 1e-12]))
    plane = plane * scale
    d2 = np.einsum("ij,ij->i", plane, plane)
    pos = np.column_stack([2 * plane[:, 0], 2 * plane[:, 1], d2 - 1.0]) / (d2 + 1.0)[:, None]
    pos[idx[pole_vertex]] = (0.0, 0.0, 1.0)
    pos += 1e-3 * rng.standard_normal(pos.shape)
    pos /= np.linalg.norm(pos, axis=1)[:, None]
    return pos


def initial_radii(problem: PatternProblem, pos: np.ndarray) -> np.ndarray:
    acc = np.zeros(problem.nv)
    cnt = np.zeros(problem.nv)
    for u, v in problem.edges:
        d = math.acos(float(np.clip(pos[u] @ pos[v], -1.0, 1.0)))
        acc[u] += d
        acc[v] += d
        cnt[u] += 1
        cnt[v] += 1
    mean = acc / np.maximum(cnt, 1)
    r = np.arccos(np.sqrt(np.clip(np.cos(mean), 0.05, 1.0)))
    r = np.clip(r, 0.05, 1.4)
    r[problem.fixed] = 0.0
    return r


# -- Moebius normalization ---------------------------------------------------


def _transport_pattern(B, pos, radii, fixed):
    """Move a whole pattern by the Minkowski transformation B: disks via
    their plane normals, ideal vertices as points.  The orthogonality
    relations are Moebius-invariant, so residuals survive up to roundoff."""
    new_pos = pos.copy()
    new_r = radii.copy()
    for i in range(len(pos)):
        if fixed[i] or radii[i] <= 0.0:
            out = B @ np.concatenate([[1.0], pos[i]])
            new_pos[i] = out[1:] / out[0]
        else:
            normal = np.concatenate([[math.cos(radii[i])], pos[i]]) / math.sin(radii[i])
            out = B @ normal
            n0, nvec = out[0], out[1:]
            nn = np.linalg.norm(nvec)
            if n0 <= 0.0 or nn <= 0.0:
                raise SolveError("normalization pushed a disk past a hemisphere")
            new_pos[i] = nvec / nn
            new_r[i] = math.atan2(1.0, float(n0))
    new_pos /= np.linalg.norm(new_pos, axis=1)[:, None]
    return new_pos, new_r


def _to_ball(w):
    nw = np.linalg.norm(w)
    if nw < 1e-12:
        return w
    return w * (math.tanh(nw) / nw)


def moebius_normalize(pos: np.ndarray, radii: np.ndarray, fixed: np.ndarray):
    """Normalize a pattern to the gauge where the disk centers sum to zero.

    The boost parameter is found by root-finding on the transported centers
    (parametrized through w -> tanh|w| w/|w| to stay inside the ball); a
    symmetric pattern lands exactly on its symmetric representative.
    """

    def fun(w):
        try:
            newp, _ = _transport_pattern(boost_to(_to_ball(w)), pos, radii, fixed)
        except SolveError:
            return np.full(3, 1e3) * (1.0 + np.linalg.norm(w))
        return newp.sum(axis=0)

    res = least_squares(fun, np.zeros(3), xtol=1e-15, ftol=1e-15, gtol=1e-15)
    return _transport_pattern(boost_to(_to_ball(res.x)), pos, radii, fixed)


# -- top-level solve ---------------------------------------------------------


def solve_pattern(tri: AbstractTriangulation, fixed_zero=(), seed: int = 0,
                  tol: float = 1e-11, max_starts: int = 8,
                  validate=None) -> PatternSolution:
    """Solve the orthogonal circle pattern of a closed triangulation.

    Multi-start: each attempt picks a pole vertex for the Tutte
    initialization from the seeded RNG, runs LM, Moebius-normalizes and
    re-polishes.  ``validate`` may reject a converged solution (returning an
    error string) to force a restart, e.g. when non-adjacent disks overlap.
    Raises SolveError with the best residual if every start fails.
    """
    problem = PatternProblem(tri, fixed_zero)
    rng = np.random.default_rng(seed)
    best = math.inf
    last_reason = "no attempts"
    order = list(rng.permutation(len(tri.vertices)))
    for attempt in range(max_starts):
        pole = tri.vertices[order[attempt % len(order)]]
        pos0 = tutte_sphere_init(tri, pole, rng)
        r0 = initial_radii(problem, pos0)
        theta0 = problem.pack(pos0, r0)
        if attempt == 0:
            problem.check_gradient(theta0, rng)
        theta, resid, iters = levenberg_marquardt(problem, theta0)
        best = min(best, resid)
        if resid > tol:
            last_reason = f"stagnated at residual {resid:.3e}"
            continue
        pos, r = problem.unpack(theta)
        if np.any(r[problem.free_r] <= 1e-6) or np.any(r[problem.free_r] >= math.pi / 2 - 1e-9):
            last_reason = "radii left (0, pi/2)"
            continue
        try:
            pos, r = moebius_normalize(pos, r, problem.fixed)
        except SolveError as exc:
            last_reason = str(exc)
            continue
        theta, resid, more = levenberg_marquardt(problem, problem.pack(pos, r))
        pos, r = problem.unpack(theta)
        pos = pos / np.linalg.norm(pos, axis=1)[:, None]
        edge_res = float(np.max(np.abs(problem.residuals(problem.pack(pos, r))[:len(problem.edges)])))
        if edge_res > tol:
            last_reason = f"post-normalization residual {edge_res:.3e}"
            continue
        sol = PatternSolution(positions=pos, radii=r, residual=edge_res,
                              iterations=iters + more)
        if validate is not None:
            reason = validate(sol)
            if reason:
                last_reason = reason
                continue
        return sol
    raise SolveError(
        f"circle pattern did not converge after {max_starts} starts ({last_reason}); "
        "this is not a proof of nonexistence", best_residual=best)
