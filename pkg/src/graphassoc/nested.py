"""Nested sets: the face poset of the graph associahedron.

A nested set on a connected diagram D is a family of pairwise compatible
connected subdiagrams containing D itself.  Nested sets ordered by
reverse inclusion form the face poset of a convex polytope of dimension
``|D| - 1``; a nested set of cardinality k labels a face of dimension
``|D| - k``, and the maximal nested sets (cardinality ``|D|``) label the
vertices.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .diagram import (
    Diagram,
    DiagramError,
    bits,
    components,
    induced,
    is_compatible,
    is_connected,
    quotient,
    quotient_components,
)


def element_key(mask: int):
    """Canonical sort key for nested set elements: size, then vertex list."""
    vs = tuple(bits(mask))
    return (len(vs), vs)


@dataclass(frozen=True)
class NestedSet:
    """An immutable nested set; ``elements`` is canonically sorted."""

    diagram: Diagram
    elements: tuple[int, ...]

    @staticmethod
    def make(D: Diagram, masks) -> "NestedSet":
        masks = sorted(set(masks), key=element_key)
        H = NestedSet(D, tuple(masks))
        H.validate()
        return H

    @staticmethod
    def from_vertex_lists(D: Diagram, lists) -> "NestedSet":
        """Build from vertex-index lists; the full diagram may be omitted."""
        masks = {D.full}
        for vs in lists:
            m = 0
            for v in vs:
                m |= 1 << v
            masks.add(m)
        return NestedSet.make(D, masks)

    def validate(self):
        D = self.diagram
        if D.full not in self.elements:
            raise DiagramError("nested set must contain the full diagram")
        for m in self.elements:
            D.check_subset(m)
            if not is_connected(D, m):
                raise DiagramError(f"element {D.vertex_names(m)} is not connected")
        for i, a in enumerate(self.elements):
            for b in self.elements[i + 1:]:
                if not is_compatible(D, a, b):
                    raise DiagramError(
                        f"incompatible elements {D.vertex_names(a)} / {D.vertex_names(b)}"
                    )

    def __contains__(self, mask: int) -> bool:
        return mask in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def dim(self) -> int:
        return self.diagram.n - len(self.elements)

    def is_maximal(self) -> bool:
        return len(self.elements) == self.diagram.n

    def inner_union(self, B: int) -> int:
        """Union of the maximal elements properly contained in B (i_H(B))."""
        if B not in self.elements:
            raise DiagramError("element not in the nested set")
        inner = 0
        proper = [m for m in self.elements if m != B and m & ~B == 0]
        for m in proper:
            if not any(m != other and m & ~other == 0 for other in proper):
                inner |= m
        return inner

    def alpha_set(self, B: int) -> int:
        """The vertices of B not covered by smaller elements; always nonempty."""
        return B & ~self.inner_union(B)

    def unsaturated(self) -> list[tuple[int, int]]:
        """The (element, alpha-set) pairs with at least two alpha vertices.

        Ordered by least vertex then size, the canonical enumeration used
        for orientations.
        """
        out = []
        for B in self.elements:
            alpha = self.alpha_set(B)
            if bin(alpha).count("1") >= 2:
                out.append((B, alpha))
        out.sort(key=lambda pair: ((pair[0] & -pair[0]).bit_length(), bin(pair[0]).count("1")))
        return out

    def restrict(self, B: int) -> tuple[int, ...]:
        """The induced nested set on an element B (elements contained in B)."""
        return tuple(m for m in self.elements if m & ~B == 0)

    def vertex_lists(self) -> list[list[str]]:
        return [self.diagram.vertex_names(m) for m in self.elements]


def is_nested(D: Diagram, masks) -> bool:
    """True iff the family contains D and is connected and pairwise compatible."""
    masks = list(masks)
    for m in masks:
        D.check_subset(m)
    if D.full not in masks:
        return False
    if not all(is_connected(D, m) for m in masks):
        return False
    return all(
        is_compatible(D, a, b) for i, a in enumerate(masks) for b in masks[i + 1:]
    )


@lru_cache(maxsize=None)
def connected_subdiagrams(D: Diagram) -> tuple[int, ...]:
    """All connected subdiagram masks, in increasing bitmask order."""
    found = set()
    # grow each connected set by one adjacent vertex at a time
    layer = {1 << i for i in range(D.n)}
    while layer:
        found |= layer
        nxt = set()
        for m in layer:
            for v in bits(D.neighbors(m)):
                grown = m | (1 << v)
                if grown not in found:
                    nxt.add(grown)
        layer = nxt - found
    return tuple(sorted(found))


@lru_cache(maxsize=None)
def _nested_families(D: Diagram, size: int | None) -> tuple[NestedSet, ...]:
    if not is_connected(D, D.full):
        raise DiagramError("ambient diagram must be connected")
    candidates = [m for m in connected_subdiagrams(D) if m != D.full]
    out = []
    chosen = []

    def extend(start: int):
        if size is None or len(chosen) + 1 == size:
            out.append(NestedSet(D, tuple(sorted(chosen + [D.full], key=element_key))))
            if size is not None:
                return
        for idx in range(start, len(candidates)):
            m = candidates[idx]
            if all(is_compatible(D, m, c) for c in chosen):
                chosen.append(m)
                extend(idx + 1)
                chosen.pop()

    extend(0)
    out.sort(key=lambda H: tuple(tuple(bits(m)) for m in H.elements))
    return tuple(out)


def all_nested_sets(D: Diagram) -> tuple[NestedSet, ...]:
    return _nested_families(D, None)


def maximal_nested_sets(D: Diagram) -> tuple[NestedSet, ...]:
    """All nested sets of cardinality |D|, in deterministic order."""
    return _nested_families(D, D.n)


def faces(D: Diagram, dim: int) -> tuple[NestedSet, ...]:
    """All faces of the given dimension (nested sets of cardinality |D|-dim)."""
    if not 0 <= dim <= D.n - 1:
        raise DiagramError(f"dimension {dim} out of range 0..{D.n - 1}")
    return _nested_families(D, D.n - dim)


def f_vector(D: Diagram) -> list[int]:
    return [len(faces(D, k)) for k in range(D.n)]


@dataclass(frozen=True)
class FaceDescriptor:
    """A face presented by its nested set, dimension and factorization data."""

    nested: NestedSet
    dim: int
    unsaturated: tuple[tuple[int, int], ...]
    factors: tuple[Diagram, ...]


def face_factorization(D: Diagram, H: NestedSet) -> list[Diagram]:
    """Quotient diagrams ``B / i_H(B)`` over the unsaturated elements of H.

    The face labeled H is the product of the associahedra of these
    diagrams; their dimensions ``|factor| - 1`` add up to ``dim(H)``.
    """
    out = []
    for B, _alpha in H.unsaturated():
        sub, old_to_new = induced(D, B)
        inner = H.inner_union(B)
        if inner == 0:
            out.append(sub)
        else:
            inner_in_sub = 0
            for v in bits(inner):
                inner_in_sub |= 1 << old_to_new[v]
            out.append(quotient(sub, inner_in_sub)[0])
    return out


def describe_face(D: Diagram, H: NestedSet) -> FaceDescriptor:
    return FaceDescriptor(H, H.dim, tuple(H.unsaturated()), tuple(face_factorization(D, H)))


def edge_graph(D: Diagram) -> tuple[tuple[NestedSet, ...], list[tuple[int, int]]]:
    """The 1-skeleton: maximal nested sets, joined when they differ by one element."""
    verts = maximal_nested_sets(D)
    edges = []
    for i, F in enumerate(verts):
        fset = set(F.elements)
        for j in range(i + 1, len(verts)):
            if len(fset - set(verts[j].elements)) == 1:
                edges.append((i, j))
    return verts, edges


class TwoFace(enum.Enum):
    SQUARE = "square"
    PENTAGON = "pentagon"
    HEXAGON = "hexagon"


def classify_two_face(D: Diagram, H: NestedSet) -> TwoFace:
    """Classify a 2-face by the shape of its unsaturated quotient.

    Two unsaturated elements give a square.  Otherwise the single
    unsaturated element B has a 3-vertex quotient ``B / i_H(B)``, a
    triangle (hexagon face) or a path (pentagon face).
    """
    if H.dim != 2:
        raise DiagramError("classification needs a 2-dimensional face")
    unsat = H.unsaturated()
    if len(unsat) == 2:
        return TwoFace.SQUARE
    B, alpha = unsat[0]
    inner = H.inner_union(B)
    edge_count = 0
    alphas = list(bits(alpha))
    for x, a in enumerate(alphas):
        for b in alphas[x + 1:]:
            joined = len(quotient_components(D, inner, (1 << a) | (1 << b))) == 1 \
                if inner else bool(D.adj[a] & (1 << b))
            if joined:
                edge_count += 1
    return TwoFace.HEXAGON if edge_count == 3 else TwoFace.PENTAGON


def boundary_cycle(D: Diagram, H: NestedSet) -> list[NestedSet]:
    """The vertices of a 2-face in cyclic order along its boundary."""
    if H.dim != 2:
        raise DiagramError("boundary cycle needs a 2-dimensional face")
    hset = set(H.elements)
    verts = [F for F in maximal_nested_sets(D) if hset <= set(F.elements)]
    cycle = [verts[0]]
    seen = {verts[0]}
    while len(cycle) < len(verts):
        cur = set(cycle[-1].elements)
        for G in verts:
            if G not in seen and len(cur - set(G.elements)) == 1:
                cycle.append(G)
                seen.add(G)
                break
        else:
            raise DiagramError("boundary walk got stuck; face poset corrupt")
    return cycle


def face_poset_json(D: Diagram) -> dict:
    """JSON-able face-poset export: every face with dimension and alpha data."""
    out = []
    for dim in range(D.n - 1, -1, -1):
        for H in faces(D, dim):
            out.append(
                {
                    "elements": [D.vertex_names(m) for m in H.elements],
                    "dim": H.dim,
                    "unsaturated": [
                        {"B": D.vertex_names(B), "alpha": D.vertex_names(a)}
                        for B, a in H.unsaturated()
                    ],
                }
            )
    return {"faces": out}


def first_maximal_nested_set(D: Diagram, S: int | None = None) -> tuple[int, ...]:
    """Deterministic maximal nested set on the (connected) subdiagram S.

    Elements are returned as masks of D; the choice is the first leaf of
    the enumeration order, i.e. the lexicographically least family.
    """
    S = D.full if S is None else S
    if not is_connected(D, S):
        raise DiagramError("need a connected subdiagram")
    sub, old_to_new = induced(D, S)
    new_to_old = {new: old for old, new in old_to_new.items()}
    F = maximal_nested_sets(sub)[0]
    lifted = []
    for m in F.elements:
        lifted.append(sum(1 << new_to_old[v] for v in bits(m)))
    return tuple(sorted(lifted, key=element_key))


def ascending_chain(D: Diagram, B: int) -> list[int]:
    """Connected subdiagrams ``B = C_0 < C_1 < ... < D`` growing one vertex at a time.

    Each step adds the least-index vertex adjacent to the current set.
    """
    if not is_connected(D, B):
        raise DiagramError("chain must start from a connected subdiagram")
    chain = [B]
    cur = B
    while cur != D.full:
        v = (D.neighbors(cur) & -D.neighbors(cur)).bit_length() - 1
        cur |= 1 << v
        chain.append(cur)
    return chain


def irreducible_cell(D: Diagram, B: int, alpha: int) -> NestedSet:
    """A nested set whose unique unsaturated element is B with the given alpha set.

    Built from deterministic maximal nested sets on the components of
    ``B - alpha`` plus an ascending chain from B to D.
    """
    if alpha & ~B:
        raise DiagramError("alpha must be a subset of B")
    masks = set(ascending_chain(D, B))
    for comp in components(D, B & ~alpha):
        masks.update(first_maximal_nested_set(D, comp))
    H = NestedSet.make(D, masks)
    if H.alpha_set(B) != alpha:
        raise DiagramError("construction failed to realize the alpha set")
    return H
