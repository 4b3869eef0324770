#!/usr/bin/env python3
"""Rebuild the structured DIMACS clique instances from their constructions.

Vertex numbering follows the original generators, which matters because the
benchmark edge weights depend on vertex indices. Each rebuilt graph matches
the published vertex count, edge count and weighted optimum.

    python3 tools/make_dimacs_families.py data/dimacs

brock* and p_hat* are randomly generated and cannot be rebuilt; copy the
original files into the same directory to use them.
"""

import itertools
import math
import pathlib
import sys


def hamming(bits, dist):
    n = 1 << bits
    return n, [(a, b) for a in range(n) for b in range(a + 1, n) if bin(a ^ b).count("1") >= dist]


def johnson(size, weight, dist):
    # colex order over weight-subsets (equivalently, ascending bitmask)
    verts = [m for m in range(1 << size) if bin(m).count("1") == weight]
    n = len(verts)
    return n, [(a, b) for a in range(n) for b in range(a + 1, n) if bin(verts[a] ^ verts[b]).count("1") >= dist]


def c_fat(n, c):
    k = int(n / (c * math.log(n)))
    cluster = [i % k for i in range(n)]
    edges = []
    for a in range(n):
        for b in range(a + 1, n):
            if (cluster[a] - cluster[b]) % k in (0, 1, k - 1):
                edges.append((a, b))
    return n, edges


def mann_a9():
    # Steiner triple covering: 9 point vertices, then three copies per triple.
    triples = [(1, 2, 3), (4, 5, 6), (7, 8, 9), (1, 4, 7), (2, 5, 8), (3, 6, 9),
               (1, 5, 9), (2, 6, 7), (3, 4, 8), (1, 6, 8), (2, 4, 9), (3, 5, 7)]
    verts = [("p", x, None) for x in range(1, 10)]
    verts += [("t", x, t) for t, tri in enumerate(triples) for x in tri]

    def clash(u, v):
        if u[0] == "t" and v[0] == "t":
            return u[2] == v[2]
        if u[0] != v[0]:
            return u[1] == v[1]
        return False

    n = len(verts)
    return n, [(a, b) for a in range(n) for b in range(a + 1, n) if not clash(verts[a], verts[b])]


def keller(dim):
    # Neighbourhood of the origin in the Keller graph on {0,1,2,3}^dim.
    def adj(a, b):
        diff = [(x - y) % 4 for x, y in zip(a, b)]
        return sum(d != 0 for d in diff) >= 2 and 2 in diff

    origin = (0,) * dim
    verts = [t for t in itertools.product(range(4), repeat=dim) if adj(t, origin)]
    n = len(verts)
    return n, [(a, b) for a in range(n) for b in range(a + 1, n) if adj(verts[a], verts[b])]


INSTANCES = {
    "hamming6-2": lambda: hamming(6, 2),
    "hamming6-4": lambda: hamming(6, 4),
    "johnson8-2-4": lambda: johnson(8, 2, 4),
    "johnson8-4-4": lambda: johnson(8, 4, 4),
    "johnson16-2-4": lambda: johnson(16, 2, 4),
    "MANN_a9": mann_a9,
    "keller4": lambda: keller(4),
    "c-fat200-1": lambda: c_fat(200, 1),
    "c-fat200-2": lambda: c_fat(200, 2),
    "c-fat500-1": lambda: c_fat(500, 1),
}


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "data/dimacs")
    out.mkdir(parents=True, exist_ok=True)
    for name, build in INSTANCES.items():
        n, edges = build()
        lines = [f"c {name} rebuilt by tools/make_dimacs_families.py", f"p edge {n} {len(edges)}"]
        lines += [f"e {a + 1} {b + 1}" for a, b in edges]
        (out / f"{name}.clq").write_text("\n".join(lines) + "\n")
        print(f"{name}: n={n} m={len(edges)}")


if __name__ == "__main__":
    main()
