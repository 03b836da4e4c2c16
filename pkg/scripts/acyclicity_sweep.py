#!/usr/bin/env python3
"""Exhaustive acyclicity sweep over small connected diagrams.

For every connected diagram up to the requested size (one representative
per isomorphism class), computes the integer homology of the oriented
nested-set complex and reports cell counts, Euler characteristic and
Betti numbers.  Every line should end in 'acyclic'.

Usage: python scripts/acyclicity_sweep.py [max_n]
"""

import itertools
import sys

from graphassoc.diagram import Diagram, is_connected
from graphassoc.homology import chain_basis, homology


def connected_reps(n):
    reps = {}
    pairs = list(itertools.combinations(range(n), 2))
    for selector in range(1 << len(pairs)):
        edges = [pairs[k] for k in range(len(pairs)) if (selector >> k) & 1]
        D = Diagram.from_edges([str(i + 1) for i in range(n)], edges)
        if not is_connected(D, D.full):
            continue
        key = min(
            tuple(sorted(
                (min(p[i], p[j]), max(p[i], p[j]))
                for i, j in edges
            ))
            for p in itertools.permutations(range(n))
        )
        reps.setdefault(key, D)
    return reps.values()


def main():
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    for n in range(1, max_n + 1):
        for D in connected_reps(n):
            counts = [len(chain_basis(D, k)) for k in range(D.n)]
            euler = sum((-1) ** k * c for k, c in enumerate(counts))
            H = homology(D)
            betti = [b for b, _ in H]
            torsion_free = all(not t for _, t in H)
            verdict = (
                "acyclic"
                if betti[0] == 1 and all(b == 0 for b in betti[1:]) and torsion_free
                else "UNEXPECTED"
            )
            edges = sum(bin(a).count("1") for a in D.adj) // 2
            print(
                f"n={n} edges={edges:<2} cells={counts} euler={euler} "
                f"betti={betti} {verdict}"
            )


if __name__ == "__main__":
    main()
