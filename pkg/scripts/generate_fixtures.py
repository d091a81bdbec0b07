#!/usr/bin/env python3
"""Regenerate the fixture JSON files under src/acutesphere/data.

The 28- and 34-face closed triangulations are given by their edge lists;
since both are flag, their faces are exactly the 3-cliques of the graph,
which is verified here together with the expected predicate outcomes for
every fixture.
"""

import itertools
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

import numpy as np

from acutesphere import triangulation as tr
from acutesphere.triangulation import AbstractTriangulation, serialize

OUT = Path(__file__).resolve().parent.parent / "src" / "acutesphere" / "data"


def tetrahedron():
    return AbstractTriangulation(
        ["a", "b", "c", "d"],
        [("a", "b", "c"), ("a", "b", "d"), ("a", "c", "d"), ("b", "c", "d")])


def octahedron():
    rim = ["r0", "r1", "r2", "r3"]
    faces = []
    for pole in ("n", "s"):
        for i in range(4):
            faces.append((pole, rim[i], rim[(i + 1) % 4]))
    return AbstractTriangulation(["n", "s"] + rim, faces)


def icosahedron():
    phi = (1 + 5 ** 0.5) / 2
    coords = []
    for s1 in (1, -1):
        for s2 in (1, -1):
            coords += [(0, s1, s2 * phi), (s1, s2 * phi, 0), (s2 * phi, 0, s1)]
    pts = [np.array(c) / np.linalg.norm(c) for c in coords]
    names = [f"v{i}" for i in range(12)]
    adj = {i: set() for i in range(12)}
    for i, j in itertools.combinations(range(12), 2):
        if abs(pts[i] @ pts[j] - 5 ** -0.5) < 1e-9:
            adj[i].add(j)
            adj[j].add(i)
    faces = sorted({tuple(sorted((names[i], names[j], names[k])))
                    for i in range(12) for j in adj[i] for k in adj[j]
                    if k in adj[i] and i < j < k})
    return AbstractTriangulation(names, faces)


def square_disk_a():
    """Square-boundary disk: pentagon + rotated inner pentagon + cone point.

    Corner arcs around the outer pentagon: x0 {P0,P1}, x1 {P1,P2},
    x2 {P2,P3}, x3 {P3,P4,P0}.
    """
    P = [f"P{i}" for i in range(5)]
    q = [f"q{i}" for i in range(5)]
    x = [f"x{i}" for i in range(4)]
    faces = []
    for i in range(5):
        j = (i + 1) % 5
        faces.append(("z", q[i], q[j]))
        faces.append((P[i], q[(i - 1) % 5], q[i]))
        faces.append((P[i], q[i], P[j]))
    arcs = {0: (0, 1), 1: (1, 2), 2: (2, 3), 3: (3, 4, 0)}
    for k, arc in arcs.items():
        for a, b in zip(arc, arc[1:]):
            faces.append((x[k], P[a], P[b]))
        faces.append((x[k], P[arc[-1]], x[(k + 1) % 4]))
    return AbstractTriangulation(["z"] + q + P + x, faces)


def square_disk_b():
    """Square-boundary disk: hexagon around a central edge."""
    p = [f"p{i}" for i in range(6)]
    x = [f"x{i}" for i in range(4)]
    faces = [("q0", "q1", "p1"), ("q0", "q1", "p4"),
             ("q0", "p4", "p5"), ("q0", "p5", "p0"), ("q0", "p0", "p1"),
             ("q1", "p1", "p2"), ("q1", "p2", "p3"), ("q1", "p3", "p4")]
    arcs = {0: (5, 0), 1: (0, 1, 2), 2: (2, 3), 3: (3, 4, 5)}
    for k, arc in arcs.items():
        for a, b in zip(arc, arc[1:]):
            faces.append((x[k], p[a], p[b]))
        faces.append((x[k], p[arc[-1]], x[(k + 1) % 4]))
    return AbstractTriangulation(["q0", "q1"] + p + x, faces)


SPHERE28_EDGES = [
    (16, 11), (16, 15), (16, 14), (16, 13), (16, 12),
    (15, 9), (15, 14), (15, 11), (15, 10),
    (14, 7), (14, 13), (14, 9), (14, 8),
    (13, 6), (13, 12), (13, 7),
    (12, 5), (12, 11), (12, 6),
    (11, 4), (11, 10), (11, 5),
    (10, 3), (10, 9), (10, 4),
    (9, 3), (9, 8),
    (8, 2), (8, 7), (8, 3),
    (7, 2), (7, 6),
    (6, 1), (6, 5), (6, 2),
    (5, 1), (5, 4),
    (4, 1), (4, 3),
    (3, 1), (3, 2),
    (2, 1),
]

SPHERE34_EDGES = [
    (19, 12), (19, 18), (19, 17), (19, 16), (19, 13),
    (18, 10), (18, 17), (18, 12), (18, 11),
    (17, 8), (17, 16), (17, 10), (17, 9),
    (16, 8), (16, 15), (16, 13),
    (15, 7), (15, 14), (15, 13), (15, 8),
    (14, 5), (14, 13), (14, 7), (14, 6),
    (13, 5), (13, 12),
    (12, 5), (12, 11),
    (11, 4), (11, 10), (11, 5),
    (10, 4), (10, 9),
    (9, 3), (9, 8), (9, 4),
    (8, 2), (8, 7), (8, 3),
    (7, 2), (7, 6),
    (6, 1), (6, 5), (6, 2),
    (5, 1), (5, 4),
    (4, 1), (4, 3),
    (3, 1), (3, 2),
    (2, 1),
]


def closed_from_edges(n_vertices, edges, expected_faces):
    """A flag closed triangulation from its edge graph: faces = 3-cliques."""
    names = [f"v{i}" for i in range(1, n_vertices + 1)]
    adj = {v: set() for v in names}
    for a, b in edges:
        adj[f"v{a}"].add(f"v{b}")
        adj[f"v{b}"].add(f"v{a}")
    faces = sorted({tuple(sorted((u, v, w)))
                    for u in names for v in adj[u] for w in adj[v]
                    if w in adj[u] and u < v < w})
    if len(faces) != expected_faces:
        raise SystemExit(f"expected {expected_faces} faces, found {len(faces)}")
    return AbstractTriangulation(names, faces)


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    fixtures = {
        "tetrahedron": tetrahedron(),
        "octahedron": octahedron(),
        "icosahedron": icosahedron(),
        "square_wheel": tr.square_wheel(),
        "square_disk_a": square_disk_a(),
        "square_disk_b": square_disk_b(),
        "sphere_28": closed_from_edges(16, SPHERE28_EDGES, 28),
        "sphere_34": closed_from_edges(19, SPHERE34_EDGES, 34),
    }
    for n in (5, 6, 7, 8):
        fixtures[f"maehara_cap_{n}"] = tr.maehara_cap(n)
    fixtures["square_disk_a_double"] = tr.double(fixtures["square_disk_a"])
    fixtures["square_disk_b_double"] = tr.double(fixtures["square_disk_b"])

    # expected predicate outcomes, checked before anything is written
    expect_fns = {
        "tetrahedron": False, "octahedron": False, "icosahedron": True,
        "sphere_28": True, "sphere_34": True,
        "square_disk_a_double": False, "square_disk_b_double": False,
    }
    for name, closed_value in expect_fns.items():
        t = fixtures[name]
        assert t.is_closed, name
        got = tr.is_flag_no_square(t)
        assert got == closed_value, f"{name}: flag-no-square {got}, wanted {closed_value}"
    for name in ("square_wheel", "square_disk_a", "square_disk_b",
                 "maehara_cap_5", "maehara_cap_6", "maehara_cap_7", "maehara_cap_8"):
        t = fixtures[name]
        assert not t.is_closed, name
        assert tr.is_flag_no_separating_square(t), f"{name} should be flag-no-separating-square"
    for name in ("square_disk_a_double", "square_disk_b_double"):
        t = fixtures[name]
        assert tr.is_flag(t), f"{name} should be flag"
        assert min(t.degree(v) for v in t.vertices) > 4, f"{name} should have all degrees > 4"
        kinds = {w.kind for w in tr.separating_cycles(t)}
        assert "separating-4-cycle" in kinds, f"{name} should have a separating square"

    for name, t in sorted(fixtures.items()):
        path = OUT / f"{name}.json"
        path.write_text(serialize(t) + "\n", encoding="utf-8")
        print(f"{name:16s} V={len(t.vertices):3d} E={len(t.edges):3d} F={len(t.faces):3d} "
              f"{'closed' if t.is_closed else 'planar'}")


if __name__ == "__main__":
    main()
