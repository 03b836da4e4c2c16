"""The Dynkin cochain complex of a diagram with pluggable coefficients.

A coefficient system assigns to each pair (connected B, S inside B) a
rational subspace M(B, S) of a fixed ambient space: the elements
commuting with the S-part.  Cochains of degree p store one vector of
M(B, B - alpha) per pair (connected B, alpha inside B, |alpha| = p);
antisymmetry in alpha is realized by keeping ascending orders only.
The differential alternately forgets a vertex of alpha or restricts to
the component around the rest, and in degrees >= 2 the whole complex
embeds into the cellular cochain complex of the associahedron.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from ._ratlinalg import independent_columns, solve_columns, subspace_leq
from .diagram import (
    Diagram,
    DiagramError,
    bits,
    component_containing,
    components,
    mask_of,
)
from .homology import boundary_matrix, chain_basis
from .nested import connected_subdiagrams, irreducible_cell


class CoefficientError(DiagramError):
    """A coefficient system violating an inclusion the differential needs."""


class CoefficientSystem:
    """Base class: subclasses provide ``ambient_dim`` and ``subspace``.

    Every subspace is given in the coordinates of one shared ambient
    space, so the inclusion maps the differential needs are literal
    containments of spans.  This is a design commitment: systems that
    cannot be embedded this way are out of scope, and ``validate``
    rejects any table whose spans fail a required containment.  The
    degree-0 slot of the complex is M(B, B), the fully invariant part.
    """

    ambient_dim: int

    def subspace(self, B: int, S: int):
        """Basis vectors (ambient coordinates) of M(B, S)."""
        raise NotImplementedError

    def validate(self, D: Diagram) -> "CoefficientSystem":
        """Check every inclusion used by the differential, by exact rank tests."""
        for B in connected_subdiagrams(D):
            verts = list(bits(B))
            for r in range(len(verts) + 1):
                for keep in combinations(verts, r):
                    S2 = mask_of(keep)
                    big = self.subspace(B, S2)
                    for v in keep:
                        if not subspace_leq(big, self.subspace(B, S2 & ~(1 << v))):
                            raise CoefficientError(
                                f"monotonicity fails at B={D.vertex_names(B)}, "
                                f"S={D.vertex_names(S2)}"
                            )
            for p1 in range(1, len(verts) + 1):
                for alpha in combinations(verts, p1):
                    amask = mask_of(alpha)
                    target = self.subspace(B, B & ~amask)
                    for a in alpha:
                        rest = amask & ~(1 << a)
                        if rest == 0:
                            comps = components(D, B & ~(1 << a))
                        else:
                            C = component_containing(D, 1 << a, rest, within=B)
                            comps = [C] if C else []
                        for C in comps:
                            if not subspace_leq(self.subspace(C, C & ~rest), target):
                                raise CoefficientError(
                                    f"nesting fails at B={D.vertex_names(B)}, "
                                    f"C={D.vertex_names(C)}"
                                )
        return self

    def to_json(self, D: Diagram) -> dict:
        subspaces = []
        for B in connected_subdiagrams(D):
            verts = list(bits(B))
            for r in range(len(verts) + 1):
                for keep in combinations(verts, r):
                    S = mask_of(keep)
                    basis = self.subspace(B, S)
                    subspaces.append(
                        {
                            "B": D.vertex_names(B),
                            "S": D.vertex_names(S),
                            "basis": [[str(x) for x in v] for v in basis],
                        }
                    )
        return {"ambient_dim": self.ambient_dim, "subspaces": subspaces}


class ConstantCoefficients(CoefficientSystem):
    """One-dimensional coefficients: every subspace is the full line."""

    ambient_dim = 1

    def subspace(self, B: int, S: int):
        return ((Fraction(1),),)


@dataclass
class MatrixCoefficients(CoefficientSystem):
    """Explicit subspace table; unlisted pairs default to the full space."""

    ambient_dim: int
    table: dict = field(default_factory=dict)

    def __post_init__(self):
        self.table = {
            key: independent_columns(vectors) for key, vectors in self.table.items()
        }

    def subspace(self, B: int, S: int):
        full = tuple(
            tuple(Fraction(int(i == j)) for j in range(self.ambient_dim))
            for i in range(self.ambient_dim)
        )
        return self.table.get((B, S), full)

    @staticmethod
    def from_json(D: Diagram, doc: dict) -> "MatrixCoefficients":
        table = {}
        for entry in doc.get("subspaces", []):
            B = mask_of(D.index(v) for v in entry["B"])
            S = mask_of(D.index(v) for v in entry["S"])
            basis = tuple(tuple(Fraction(x) for x in vec) for vec in entry["basis"])
            table[(B, S)] = basis
        return MatrixCoefficients(int(doc["ambient_dim"]), table)


def random_coefficient_system(D: Diagram, ambient_dim: int, rng: random.Random) -> MatrixCoefficients:
    """A random coefficient system that is valid by construction.

    Seeds random generator vectors on pairs (connected B0, T in B0) and
    closes them up: M(B, S) is spanned by all generators with B0 inside B
    and T containing S meet B0, which forces every inclusion the
    differential relies on.
    """
    seeds = {}
    for B0 in connected_subdiagrams(D):
        verts = list(bits(B0))
        for r in range(len(verts) + 1):
            for T in combinations(verts, r):
                if rng.random() < 0.4:
                    seeds[(B0, mask_of(T))] = tuple(
                        Fraction(rng.randint(-2, 2)) for _ in range(ambient_dim)
                    )
    table = {}
    for B in connected_subdiagrams(D):
        verts = list(bits(B))
        for r in range(len(verts) + 1):
            for keep in combinations(verts, r):
                S = mask_of(keep)
                vectors = [
                    vec
                    for (B0, T), vec in sorted(seeds.items())
                    if B0 & ~B == 0 and (S & B0) & ~T == 0
                ]
                table[(B, S)] = independent_columns(vectors)
    return MatrixCoefficients(ambient_dim, table)


# ---------------------------------------------------------------------------
# cochain spaces and the differential


def dynkin_basis(D: Diagram, p: int) -> list[tuple[int, tuple[int, ...]]]:
    """Slot labels of degree p: (connected B, ascending alpha of size p)."""
    if not 0 <= p <= D.n:
        raise DiagramError(f"degree {p} out of range 0..{D.n}")
    out = []
    for B in connected_subdiagrams(D):
        for alpha in combinations(list(bits(B)), p):
            out.append((B, alpha))
    return out


@dataclass(frozen=True)
class CochainSpace:
    """Degree-p cochains in slot-local coordinates."""

    degree: int
    ambient_dim: int
    slots: tuple[tuple[int, tuple[int, ...]], ...]
    bases: tuple[tuple[tuple[Fraction, ...], ...], ...]
    offsets: tuple[int, ...]
    dim: int

    def slot_index(self, B: int, alpha) -> int:
        return self.slots.index((B, tuple(alpha)))

    def ambient(self, vec, slot_i: int):
        """Ambient vector of one slot component of a local-coordinates cochain."""
        basis = self.bases[slot_i]
        off = self.offsets[slot_i]
        out = [Fraction(0)] * self.ambient_dim
        for j, bvec in enumerate(basis):
            coeff = vec[off + j]
            if coeff:
                for t in range(self.ambient_dim):
                    out[t] += coeff * bvec[t]
        return tuple(out)


def cochain_space(D: Diagram, M: CoefficientSystem, p: int) -> CochainSpace:
    slots = tuple(dynkin_basis(D, p))
    bases = tuple(M.subspace(B, B & ~mask_of(alpha)) for B, alpha in slots)
    offsets = []
    total = 0
    for basis in bases:
        offsets.append(total)
        total += len(basis)
    return CochainSpace(p, M.ambient_dim, slots, bases, tuple(offsets), total)


def dynkin_differential(D: Diagram, M: CoefficientSystem, p: int):
    """Matrix of the degree-p differential in slot-local coordinates.

    Rows run over degree p+1, columns over degree p; the top differential
    (p = |D|) is the empty matrix.
    """
    if not 0 <= p <= D.n:
        raise DiagramError(f"degree {p} out of range 0..{D.n}")
    src = cochain_space(D, M, p)
    if p == D.n:
        return []
    dst = cochain_space(D, M, p + 1)
    rows = [[Fraction(0)] * src.dim for _ in range(dst.dim)]
    slot_of = {slot: i for i, slot in enumerate(src.slots)}

    def add_block(ti, si, coeff):
        tbasis, toff = dst.bases[ti], dst.offsets[ti]
        sbasis, soff = src.bases[si], src.offsets[si]
        for j, svec in enumerate(sbasis):
            coords = solve_columns(tbasis, svec)
            if coords is None:
                B, alpha = dst.slots[ti]
                raise CoefficientError(
                    f"subspace inclusion fails at slot B={D.vertex_names(B)}, "
                    f"alpha={[D.names[v] for v in alpha]}"
                )
            for r, x in enumerate(coords):
                if x:
                    rows[toff + r][soff + j] += coeff * x

    for ti, (B, alpha) in enumerate(dst.slots):
        for idx, a in enumerate(alpha):
            sign = (-1) ** idx
            rest = tuple(v for v in alpha if v != a)
            if p == 0:
                add_block(ti, slot_of[(B, ())], Fraction(1))
                for C in components(D, B & ~(1 << a)):
                    add_block(ti, slot_of[(C, ())], Fraction(-1))
                break  # p = 0 has a single alpha vertex; formula handled above
            add_block(ti, slot_of[(B, rest)], Fraction(sign))
            C = component_containing(D, 1 << a, mask_of(rest), within=B)
            if C:
                add_block(ti, slot_of[(C, rest)], Fraction(-sign))
    return rows


def _rat_rank(M) -> int:
    from ._ratlinalg import rank

    return rank(M) if M else 0


def dynkin_cohomology(D: Diagram, M: CoefficientSystem) -> list[int]:
    """Rational cohomology dimensions in degrees 0..|D|."""
    dims = [cochain_space(D, M, p).dim for p in range(D.n + 1)]
    ranks = [_rat_rank(dynkin_differential(D, M, p)) for p in range(D.n)] + [0]
    out = []
    for p in range(D.n + 1):
        below = ranks[p - 1] if p > 0 else 0
        out.append(dims[p] - ranks[p] - below)
    return out


# ---------------------------------------------------------------------------
# embedding into cellular cochains


def cellular_embedding_g(D: Diagram, M: CoefficientSystem, k: int, vec):
    """Image of a degree-k Dynkin cochain among cellular cochains.

    Degree 0 lands in the augmentation slot (a single ambient vector);
    degree k >= 1 yields one ambient vector per cell of dimension k-1
    (aligned with the canonical cell basis), supported on irreducible
    cells for k >= 2.
    """
    if not 0 <= k <= D.n:
        raise DiagramError(f"degree {k} out of range 0..{D.n}")
    space = cochain_space(D, M, k)
    zero = tuple(Fraction(0) for _ in range(M.ambient_dim))
    if k == 0:
        return space.ambient(vec, space.slot_index(D.full, ()))
    values = []
    for cell in chain_basis(D, k - 1):
        H = cell.nested
        if k == 1:
            total = list(zero)
            for B in H.elements:
                a = next(bits(H.alpha_set(B)))
                amb = space.ambient(vec, space.slot_index(B, (a,)))
                total = [x + y for x, y in zip(total, amb)]
            values.append(tuple(total))
            continue
        unsat = H.unsaturated()
        if len(unsat) != 1:
            values.append(zero)
            continue
        B, alpha_mask = unsat[0]
        alpha = tuple(bits(alpha_mask))
        values.append(space.ambient(vec, space.slot_index(B, alpha)))
    return values


def _cellular_coboundary(D: Diagram, k: int, values, ambient_dim: int):
    # cochain degree k-1 -> k: transpose of the chain boundary
    M = boundary_matrix(D, k)
    out = []
    for c in range(len(chain_basis(D, k))):
        total = [Fraction(0)] * ambient_dim
        for r, row in enumerate(M):
            if row[c]:
                for t in range(ambient_dim):
                    total[t] += row[c] * values[r][t]
        out.append(tuple(total))
    return out


def _apply(matrix, vec):
    return tuple(sum(row[j] * vec[j] for j in range(len(vec))) for row in matrix)


@dataclass
class ChainMapReport:
    """Outcome of the chain-map verification; falsy when a check failed."""

    ok: bool
    failures: list[str]

    def __bool__(self):
        return self.ok


def verify_chain_map(
    D: Diagram,
    M: CoefficientSystem,
    trials: int,
    rng: random.Random | None = None,
    dynkin_diff=dynkin_differential,
) -> ChainMapReport:
    """Check d_cell . g = g . d_D exactly on random cochains, plus injectivity.

    Random rational cochains are drawn at every degree; for degrees >= 2
    each slot basis vector must keep a nonzero image (evaluated on an
    explicitly built irreducible cell).
    """
    if trials < 1:
        raise DiagramError("need at least one trial")
    rng = rng or random.Random(7)
    failures = []
    spaces = [cochain_space(D, M, p) for p in range(D.n + 1)]
    diffs = [dynkin_diff(D, M, p) for p in range(D.n)]

    def random_vec(dim):
        return tuple(
            Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(dim)
        )

    for k in range(D.n):
        for _ in range(trials):
            vec = random_vec(spaces[k].dim)
            dvec = _apply(diffs[k], vec) if spaces[k].dim else tuple(
                Fraction(0) for _ in range(spaces[k + 1].dim)
            )
            rhs = cellular_embedding_g(D, M, k + 1, dvec)
            if k == 0:
                g0 = cellular_embedding_g(D, M, 0, vec)
                lhs = [g0 for _ in chain_basis(D, 0)]
            else:
                gk = cellular_embedding_g(D, M, k, vec)
                lhs = _cellular_coboundary(D, k, gk, M.ambient_dim)
            if lhs != rhs:
                failures.append(f"chain-map identity fails at degree {k}")
                break
    for k in range(2, D.n + 1):
        space = spaces[k]
        cells = chain_basis(D, k - 1)
        for i, (B, alpha) in enumerate(space.slots):
            for j in range(len(space.bases[i])):
                vec = [Fraction(0)] * space.dim
                vec[space.offsets[i] + j] = Fraction(1)
                values = cellular_embedding_g(D, M, k, vec)
                witness = irreducible_cell(D, B, mask_of(alpha))
                cell_index = next(
                    idx for idx, c in enumerate(cells)
                    if c.nested.elements == witness.elements
                )
                if all(x == 0 for x in values[cell_index]):
                    failures.append(
                        f"g^{k} kills the basis vector at B={D.vertex_names(B)}, "
                        f"alpha={[D.names[v] for v in alpha]}"
                    )
    return ChainMapReport(not failures, failures)


def dynkin_json(D: Diagram, M: CoefficientSystem) -> dict:
    dims = [cochain_space(D, M, p).dim for p in range(D.n + 1)]
    return {"HD": dynkin_cohomology(D, M), "dims": dims}


def load_coefficients(D: Diagram, path: str | None) -> CoefficientSystem:
    """CLI helper: read a coefficient-system JSON file, defaulting to Constant."""
    if path is None:
        return ConstantCoefficients()
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    return MatrixCoefficients.from_json(D, doc).validate(D)
