"""Convex realization of the associahedron over exact rationals.

The polytope lives in the hyperplane ``sum(t) = c(D)`` of R^|D| and is cut
out by one inequality ``sum(t over B) >= c(B)`` per proper connected
subdiagram B, for any superadditive weight function c.  Faces correspond
to nested sets; all arithmetic is exact (``fractions.Fraction``), with no
tolerances anywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .diagram import Diagram, DiagramError, bits, components, is_compatible, is_connected
from .nested import NestedSet, boundary_cycle, connected_subdiagrams, faces, maximal_nested_sets


class RealizationError(DiagramError):
    """Weight function failing the superadditivity requirement."""


@dataclass(frozen=True)
class Realization:
    """A diagram with a superadditive weight on its connected subdiagrams."""

    diagram: Diagram
    weights: tuple[tuple[int, Fraction], ...]

    def weight(self, mask: int) -> Fraction:
        """c(B); disconnected arguments sum over their components."""
        table = dict(self.weights)
        if mask in table:
            return table[mask]
        total = Fraction(0)
        for comp in components(self.diagram, mask):
            total += table[comp]
        return total


def make_realization(D: Diagram, overrides=None) -> Realization:
    """Build a realization, default weight ``c(B) = 3^|B|``.

    Overrides must cover every connected subdiagram and are rejected
    unless ``c(B1 | B2) > c(B1) + c(B2)`` for every incompatible pair.
    """
    masks = connected_subdiagrams(D)
    if overrides is None:
        table = {m: Fraction(3) ** bin(m).count("1") for m in masks}
    else:
        table = {m: Fraction(overrides[m]) for m in masks}
    for m, c in table.items():
        if c <= 0:
            raise RealizationError(f"weight of {D.vertex_names(m)} must be positive")
    for i, a in enumerate(masks):
        for b in masks[i + 1:]:
            if not is_compatible(D, a, b):
                if table[a | b] <= table[a] + table[b]:
                    raise RealizationError(
                        "superadditivity fails on "
                        f"{D.vertex_names(a)} / {D.vertex_names(b)}"
                    )
    return Realization(D, tuple(sorted(table.items())))


def vertex_coordinates(R: Realization, F: NestedSet) -> tuple[Fraction, ...]:
    """The vertex of the polytope labeled by a maximal nested set.

    Solved by the triangular recursion ``t at alpha(B) = c(B) - sum of
    c over the maximal elements of F inside B``.
    """
    if not F.is_maximal():
        raise DiagramError("vertex coordinates need a maximal nested set")
    D = R.diagram
    t = [Fraction(0)] * D.n
    for B in F.elements:  # elements sorted by size: children come first
        alpha = F.alpha_set(B)
        inner = F.inner_union(B)
        t[next(bits(alpha))] = R.weight(B) - (R.weight(inner) if inner else Fraction(0))
    return tuple(t)


# ---------------------------------------------------------------------------
# exact linear-programming feasibility (Fourier-Motzkin)


def _normalize(coeffs, rhs):
    for a in coeffs:
        if a != 0:
            scale = abs(a)
            return tuple(c / scale for c in coeffs), rhs / scale
    return tuple(coeffs), rhs


def _feasible(n: int, equalities, inequalities) -> bool:
    """Exact feasibility of ``A t = b``, ``C t >= d`` by substitution + elimination."""
    eqs = [(list(c), r) for c, r in equalities]
    ineqs = [(list(c), r) for c, r in inequalities]
    # eliminate equality constraints by pivoting
    for idx in range(len(eqs)):
        coeffs, rhs = eqs[idx]
        pivot = next((k for k, a in enumerate(coeffs) if a != 0), None)
        if pivot is None:
            if rhs != 0:
                return False
            continue
        scale = coeffs[pivot]
        coeffs = [a / scale for a in coeffs]
        rhs = rhs / scale
        eqs[idx] = (coeffs, rhs)
        for rows in (eqs, ineqs):
            for j, (c2, r2) in enumerate(rows):
                if rows is eqs and j == idx:
                    continue
                factor = c2[pivot]
                if factor != 0:
                    rows[j] = (
                        [x - factor * y for x, y in zip(c2, coeffs)],
                        r2 - factor * rhs,
                    )
    # Fourier-Motzkin elimination on the surviving inequalities
    rows = {_normalize(c, r) for c, r in ineqs}
    for var in range(n):
        lowers, uppers, rest = [], [], []
        for coeffs, rhs in rows:
            a = coeffs[var]
            if a > 0:
                lowers.append((coeffs, rhs, a))
            elif a < 0:
                uppers.append((coeffs, rhs, a))
            else:
                rest.append((coeffs, rhs))
        new_rows = set(rest)
        for cl, rl, al in lowers:
            for cu, ru, au in uppers:
                # lower bound from the positive row must not exceed the upper bound
                merged = tuple(
                    x / al - y / au if k != var else Fraction(0)
                    for k, (x, y) in enumerate(zip(cl, cu))
                )
                new_rows.add(_normalize(merged, rl / al - ru / au))
        rows = new_rows
    return all(rhs <= 0 for coeffs, rhs in rows)


def _polytope_system(R: Realization, extra_equal=()):
    D = R.diagram
    n = D.n

    def indicator(mask):
        return tuple(Fraction(1) if (mask >> k) & 1 else Fraction(0) for k in range(n))

    eqs = [(indicator(D.full), R.weight(D.full))]
    for B in extra_equal:
        eqs.append((indicator(B), R.weight(B)))
    ineqs = [
        (indicator(B), R.weight(B))
        for B in connected_subdiagrams(D)
        if B != D.full
    ]
    return eqs, ineqs


def is_face_nonempty(R: Realization, Bs, cross_check: bool = False) -> bool:
    """Exact feasibility of the polytope sliced along the given hyperplanes.

    This holds exactly when the subdiagrams are pairwise compatible,
    which ``cross_check`` re-asserts.
    """
    D = R.diagram
    Bs = list(Bs)
    for B in Bs:
        if B == 0 or B == D.full or not is_connected(D, B):
            raise DiagramError("face hyperplanes need proper connected subdiagrams")
    eqs, ineqs = _polytope_system(R, Bs)
    feasible = _feasible(D.n, eqs, ineqs)
    if cross_check:
        compat = all(
            is_compatible(D, a, b) for i, a in enumerate(Bs) for b in Bs[i + 1:]
        )
        assert feasible == compat, "LP feasibility disagrees with compatibility"
    return feasible


# ---------------------------------------------------------------------------
# exports


def _fmt(q: Fraction) -> str:
    return str(q)


def export_polytope(R: Realization) -> dict:
    """JSON V- and H-representation with exact rational coordinates.

    When the affine dimension is at most 3 the document also carries the
    OFF text (floating point, for viewers; the exact data stays in the
    coordinate strings).
    """
    D = R.diagram
    verts = [
        {
            "face": [D.vertex_names(m) for m in F.elements],
            "coords": [_fmt(c) for c in vertex_coordinates(R, F)],
        }
        for F in maximal_nested_sets(D)
    ]
    hrep = {
        "equality": {"B": list(D.names), "rhs": _fmt(R.weight(D.full))},
        "inequalities": [
            {"B": D.vertex_names(B), "rhs": _fmt(R.weight(B))}
            for B in connected_subdiagrams(D)
            if B != D.full
        ],
    }
    doc = {"vertices": verts, "h_representation": hrep}
    off = off_text(R)
    if off is not None:
        doc["off"] = off
    return doc


def off_text(R: Realization) -> str | None:
    """OFF file for polytopes of affine dimension at most 3, else None.

    The hyperplane coordinate t_n is redundant and dropped; remaining
    coordinates are padded with zeros up to three.
    """
    D = R.diagram
    dim = D.n - 1
    if dim > 3:
        return None
    mns = maximal_nested_sets(D)
    index = {F.elements: i for i, F in enumerate(mns)}
    polygons = []
    if dim == 2:
        polygons.append([index[F.elements] for F in boundary_cycle(D, NestedSet.make(D, [D.full]))])
    elif dim == 3:
        for H in faces(D, 2):
            polygons.append([index[F.elements] for F in boundary_cycle(D, H)])
    lines = ["OFF", f"{len(mns)} {len(polygons)} 0"]
    for F in mns:
        coords = list(vertex_coordinates(R, F))[: max(D.n - 1, 1)]
        coords += [Fraction(0)] * (3 - len(coords))
        lines.append(" ".join(str(float(c)) for c in coords))
    for poly in polygons:
        lines.append(" ".join([str(len(poly))] + [str(i) for i in poly]))
    return "\n".join(lines) + "\n"


def parse_export(text: str) -> dict:
    """Round-trip helper: re-parse an exported JSON document with exact rationals."""
    doc = json.loads(text)
    for v in doc["vertices"]:
        v["coords"] = [Fraction(s) for s in v["coords"]]
    return doc
