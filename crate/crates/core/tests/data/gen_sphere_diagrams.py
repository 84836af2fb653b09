"""Generate .onepl diagrams from geodesic drawings on the unit sphere.

Rotation order at each vertex is clockwise as seen from outside the sphere.

    python3 gen_sphere_diagrams.py k6 > k6.onepl
    python3 gen_sphere_diagrams.py rhombicuboctahedron > rhombicuboctahedron_crossed.onepl
"""
import itertools
import math
import sys

import numpy as np


def unit(v):
    v = np.asarray(v, dtype=float)
    return v / np.linalg.norm(v)


def rotations(pos, adj):
    rot = {}
    for u, nbrs in adj.items():
        p = pos[u]
        a = np.cross(p, [0.3, 0.5, 0.7])
        a = a / np.linalg.norm(a)
        b = np.cross(p, a)  # a x b points along p: (a, b) is counterclockwise from outside
        def ang(v):
            t = pos[v] - np.dot(pos[v], p) * p
            return math.atan2(np.dot(t, b), np.dot(t, a))
        order = sorted(nbrs, key=ang, reverse=True)  # decreasing angle = clockwise
        start = min(range(len(order)), key=lambda i: names.index(order[i]))
        rot[u] = order[start:] + order[:start]
    return rot


def emit(title, vertices, kinds, rot):
    # the title stays out of the file so that it is already in canonical form
    del title
    print("onepl 1")
    print("# rotations are clockwise")
    for v in vertices:
        print(f"vertex {v} {kinds[v]}")
    for v in vertices:
        print("rot " + v + " " + " ".join(rot[v]))


def trace_faces(rot):
    seen = set()
    faces = []
    for u in rot:
        for v in rot[u]:
            if (u, v) in seen:
                continue
            face = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                face.append(a)
                r = rot[b]
                c = r[(r.index(a) + 1) % len(r)]
                a, b = b, c
            faces.append(face)
    return faces


def k6():
    global names
    ax = {"v1": [1, 0, 0], "v2": [-1, 0, 0], "v3": [0, 1, 0],
          "v4": [0, -1, 0], "v5": [0, 0, 1], "v6": [0, 0, -1]}
    # each antipodal pair crosses one octahedron edge; the six faces used are disjoint
    crossings = {"x1": (("v5", "v6"), ("v1", "v3")),
                 "x2": (("v1", "v2"), ("v4", "v5")),
                 "x3": (("v3", "v4"), ("v2", "v6"))}
    names = list(ax) + list(crossings)
    pos = {k: unit(v) for k, v in ax.items()}
    adj = {k: set() for k in names}
    crossed = {frozenset(e) for _, e in crossings.values()}
    for a, b in itertools.combinations(ax, 2):
        if np.dot(pos[a], pos[b]) > -0.5 and frozenset((a, b)) not in crossed:
            adj[a].add(b); adj[b].add(a)
    for x, (e1, e2) in crossings.items():
        pos[x] = unit(pos[e2[0]] + pos[e2[1]])
        for v in e1 + e2:
            adj[x].add(v); adj[v].add(x)
    kinds = {k: ("crossing" if k in crossings else "true") for k in names}
    emit("K6 drawn with 3 crossings", names, kinds, rotations(pos, adj))


def rhombicuboctahedron():
    global names
    s = 1 + math.sqrt(2)
    pts = set()
    for perm in itertools.permutations([1, 1, s]):
        for signs in itertools.product([1, -1], repeat=3):
            pts.add(tuple(round(p * q, 9) for p, q in zip(perm, signs)))
    pts = sorted(pts)
    true_names = [f"v{i}" for i in range(len(pts))]
    names = list(true_names)
    pos = {n: unit(p) for n, p in zip(true_names, pts)}
    raw = {n: np.array(p) for n, p in zip(true_names, pts)}
    adj = {n: set() for n in true_names}
    for a, b in itertools.combinations(true_names, 2):
        if abs(np.linalg.norm(raw[a] - raw[b]) - 2) < 1e-6:
            adj[a].add(b); adj[b].add(a)
    plane = rotations(pos, adj)
    quads = [f for f in trace_faces(plane) if len(f) == 4]
    kinds = {n: "true" for n in true_names}
    for i, q in enumerate(quads):
        x = f"x{i}"
        names.append(x)
        kinds[x] = "crossing"
        pos[x] = unit(sum(pos[v] for v in q))
        adj[x] = set(q)
        for v in q:
            adj[v].add(x)
    emit("rhombicuboctahedron with both diagonals of every square face (7-regular)",
         names, kinds, rotations(pos, adj))


if __name__ == "__main__":
    {"k6": k6, "rhombicuboctahedron": rhombicuboctahedron}[sys.argv[1]]()
