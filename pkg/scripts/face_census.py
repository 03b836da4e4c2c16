#!/usr/bin/env python3
"""Face census for small diagram families.

Prints, for paths, cycles, stars and complete diagrams, the f-vector of
the associahedron, the 2-face census and the number of coherence words
in the quasi-Coxeter presentation.

Usage: python scripts/face_census.py [max_n]
"""

import itertools
import sys

from graphassoc.coherence import pentagon_relations
from graphassoc.diagram import Diagram
from graphassoc.nested import TwoFace, classify_two_face, f_vector, faces


def path(n):
    return Diagram.from_edges([str(i + 1) for i in range(n)], [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Diagram.from_edges([str(i + 1) for i in range(n)], [(i, (i + 1) % n) for i in range(n)])


def star(legs):
    return Diagram.from_edges(["c"] + [str(i) for i in range(1, legs + 1)], [(0, i) for i in range(1, legs + 1)])


def complete(n):
    return Diagram.from_edges([str(i + 1) for i in range(n)], list(itertools.combinations(range(n), 2)))


def census(D):
    counts = {kind: 0 for kind in TwoFace}
    if D.n >= 3:
        for H in faces(D, 2):
            counts[classify_two_face(D, H)] += 1
    return counts


def main():
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    families = [("path", path, range(1, max_n + 1)), ("cycle", cycle, range(3, max_n + 1)),
                ("star", star, range(3, max_n)), ("complete", complete, range(2, max_n + 1))]
    print(f"{'diagram':<12} {'f-vector':<24} {'squares':>7} {'pentagons':>9} {'hexagons':>8} {'words':>6}")
    for name, build, sizes in families:
        for n in sizes:
            D = build(n)
            counts = census(D)
            words = len(pentagon_relations(D))
            print(
                f"{name + str(n):<12} {str(f_vector(D)):<24}"
                f" {counts[TwoFace.SQUARE]:>7} {counts[TwoFace.PENTAGON]:>9}"
                f" {counts[TwoFace.HEXAGON]:>8} {words:>6}"
            )


if __name__ == "__main__":
    main()
