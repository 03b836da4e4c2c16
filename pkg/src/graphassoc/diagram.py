"""Labeled diagrams, subdiagrams and the quotient/lifting calculus.

A diagram is a finite simple graph whose vertices are named identifiers
and whose edges carry a multiplicity in ``{3, 4, ...}`` or ``INFINITY``.
Non-adjacent pairs implicitly carry multiplicity 2.  A subdiagram is a
vertex subset together with all edges between its members; throughout
this package subdiagrams are plain integer bitmasks over the ambient
vertex order (bit ``i`` = vertex with canonical index ``i``).

All values are immutable and all operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass

INFINITY = float("inf")

MAX_VERTICES = 64


class DiagramError(ValueError):
    """Invalid diagram data or an operation applied outside its domain."""


class ParseError(DiagramError):
    """Malformed diagram source text."""


class CapacityError(DiagramError):
    """More vertices than the bitmask representation supports."""


def bits(mask: int):
    """Iterate over the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class Diagram:
    """An edge-labeled simple graph on named vertices.

    ``names`` fixes the canonical vertex order, ``adj[i]`` is the bitmask
    of neighbours of vertex ``i`` and ``edge_labels`` stores the label of
    each edge as ``((i, j), label)`` with ``i < j``.  Labels of declared
    edges are at least 3 (or ``INFINITY``); non-edges are implicitly 2.
    """

    names: tuple[str, ...]
    adj: tuple[int, ...]
    edge_labels: tuple[tuple[tuple[int, int], float], ...] = ()

    def __post_init__(self):
        if not self.names:
            raise DiagramError("diagram needs at least one vertex")
        if len(self.names) > MAX_VERTICES:
            raise CapacityError(
                f"{len(self.names)} vertices exceed the {MAX_VERTICES}-bit capacity"
            )
        if len(set(self.names)) != len(self.names):
            raise DiagramError("duplicate vertex identifier")
        for i, row in enumerate(self.adj):
            if row >> len(self.names):
                raise DiagramError("adjacency bit outside vertex range")
            if row & (1 << i):
                raise DiagramError(f"loop at vertex {self.names[i]}")
            for j in bits(row):
                if not self.adj[j] & (1 << i):
                    raise DiagramError("adjacency not symmetric")
        for (i, j), label in self.edge_labels:
            if not self.adj[i] & (1 << j):
                raise DiagramError("label on a non-edge")
            if label != INFINITY and (label < 3 or label != int(label)):
                raise DiagramError(f"edge label {label} must be >= 3 or infinity")

    @staticmethod
    def from_edges(names, edges=()) -> "Diagram":
        """Build a diagram from vertex names and ``(i, j)`` or ``(i, j, label)`` edges."""
        names = tuple(str(x) for x in names)
        n = len(names)
        adj = [0] * n
        labels = {}
        for edge in edges:
            i, j = edge[0], edge[1]
            label = edge[2] if len(edge) > 2 else INFINITY
            if i == j:
                raise DiagramError(f"loop at vertex {names[i]}")
            if not (0 <= i < n and 0 <= j < n):
                raise DiagramError("edge endpoint out of range")
            key = (min(i, j), max(i, j))
            if key in labels and labels[key] != label:
                raise DiagramError(f"conflicting labels on edge {key}")
            labels[key] = label
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        ordered = tuple(sorted(labels.items()))
        return Diagram(names, tuple(adj), ordered)

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def full(self) -> int:
        """Bitmask of the whole vertex set."""
        return (1 << self.n) - 1

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise DiagramError(f"unknown vertex {name!r}") from None

    def vertex_names(self, mask: int) -> list[str]:
        return [self.names[i] for i in bits(mask)]

    def check_subset(self, mask: int):
        if mask & ~self.full:
            raise DiagramError(f"mask {mask:#x} is not a subset of the vertex set")

    def label(self, i: int, j: int) -> float:
        """The multiplicity m_ij; 2 exactly when i and j are non-adjacent."""
        if i == j:
            raise DiagramError("no label on a vertex pair (i, i)")
        if not self.adj[i] & (1 << j):
            return 2
        for key, label in self.edge_labels:
            if key == (min(i, j), max(i, j)):
                return label
        return INFINITY

    def neighbors(self, mask: int) -> int:
        """Vertices outside ``mask`` joined to it by an edge."""
        out = 0
        for i in bits(mask):
            out |= self.adj[i]
        return out & ~mask


def parse_diagram(text: str) -> Diagram:
    """Parse the line-oriented diagram grammar.

    Line 1: ``vertices: <id> <id> ...``; line 2 (optional for edgeless
    diagrams): ``edges: <id>-<id>[:<label>] ...`` with label in
    ``{3, 4, ...}`` or ``inf``.  ``#`` starts a comment.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines or not lines[0].startswith("vertices:"):
        raise ParseError("first line must be 'vertices: ...'")
    names = lines[0][len("vertices:"):].split()
    if not names:
        raise ParseError("no vertices declared")
    if len(set(names)) != len(names):
        raise ParseError("duplicate vertex")
    index = {v: i for i, v in enumerate(names)}
    edges = []
    if len(lines) > 1:
        if not lines[1].startswith("edges:"):
            raise ParseError("second line must be 'edges: ...'")
        if len(lines) > 2:
            raise ParseError("trailing content after the edges line")
        for token in lines[1][len("edges:"):].split():
            head, _, labeltext = token.partition(":")
            a, sep, b = head.partition("-")
            if not sep or not a or not b:
                raise ParseError(f"malformed edge {token!r}")
            for v in (a, b):
                if v not in index:
                    raise ParseError(f"edge references unknown vertex {v!r}")
            if a == b:
                raise ParseError(f"loop edge {token!r}")
            if labeltext == "" :
                label = INFINITY
            elif labeltext == "inf":
                label = INFINITY
            else:
                try:
                    label = int(labeltext)
                except ValueError:
                    raise ParseError(f"bad label in {token!r}") from None
                if label < 3:
                    raise ParseError(f"label {label} < 3 on edge {token!r}")
            edges.append((index[a], index[b], label))
    try:
        return Diagram.from_edges(names, edges)
    except (ParseError, CapacityError):
        raise
    except DiagramError as exc:
        raise ParseError(str(exc)) from exc


def components(D: Diagram, S: int) -> list[int]:
    """Connected components of the induced subgraph on ``S``.

    Returned as disjoint masks sorted by least vertex index; the empty
    set yields an empty list.
    """
    D.check_subset(S)
    out = []
    remaining = S
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            grown = 0
            for i in bits(frontier):
                grown |= D.adj[i] & S & ~comp
            comp |= grown
            frontier = grown
        out.append(comp)
        remaining &= ~comp
    return out


def is_connected(D: Diagram, S: int) -> bool:
    return S != 0 and len(components(D, S)) == 1


def is_orthogonal(D: Diagram, S1: int, S2: int) -> bool:
    """True iff S1, S2 are disjoint and no edge joins them.

    Overlapping subdiagrams are never orthogonal.
    """
    D.check_subset(S1)
    D.check_subset(S2)
    if S1 & S2:
        return False
    return not (D.neighbors(S1) & S2)


def is_compatible(D: Diagram, S1: int, S2: int) -> bool:
    """True iff one contains the other or they are orthogonal."""
    if S1 & ~S2 == 0 or S2 & ~S1 == 0:
        D.check_subset(S1 | S2)
        return True
    return is_orthogonal(D, S1, S2)


def component_containing(D: Diagram, removed: int, anchor: int, within: int | None = None) -> int:
    """The component of ``within - removed`` containing all of ``anchor``.

    ``within`` defaults to the whole diagram.  Returns the empty mask when
    ``anchor`` is split across several components (or is empty).
    """
    ctx = D.full if within is None else within
    D.check_subset(ctx)
    if anchor & removed:
        raise DiagramError("anchor meets the removed set")
    if anchor & ~ctx:
        raise DiagramError("anchor outside the context subdiagram")
    if anchor == 0:
        return 0
    for comp in components(D, ctx & ~removed):
        if anchor & ~comp == 0:
            return comp
        if anchor & comp:
            return 0
    return 0


def _quotient_adjacent(D: Diagram, b_components: list[int], a: int, b: int) -> bool:
    # a, b are surviving vertex indices; linked in D/B iff D-adjacent or both
    # non-orthogonal to a common component of B.
    if D.adj[a] & (1 << b):
        return True
    for comp in b_components:
        nbrs = D.neighbors(comp)
        if nbrs & (1 << a) and nbrs & (1 << b):
            return True
    return False


def quotient(D: Diagram, B: int) -> tuple[Diagram, dict[int, int]]:
    """The quotient diagram on ``V(D) - V(B)`` and the old->new vertex map.

    Two surviving vertices are adjacent iff they are adjacent in D or both
    non-orthogonal to a common connected component of B.  Edges already in
    D keep their labels; newly created edges are labeled ``INFINITY``.
    """
    D.check_subset(B)
    if B == 0 or B == D.full:
        raise DiagramError("quotient needs a proper nonempty subdiagram")
    b_components = components(D, B)
    survivors = [i for i in bits(D.full & ~B)]
    old_to_new = {old: new for new, old in enumerate(survivors)}
    edges = []
    for x, a in enumerate(survivors):
        for b in survivors[x + 1:]:
            if _quotient_adjacent(D, b_components, a, b):
                if D.adj[a] & (1 << b):
                    edges.append((x, old_to_new[b], D.label(a, b)))
                else:
                    edges.append((x, old_to_new[b], INFINITY))
    Q = Diagram.from_edges([D.names[i] for i in survivors], edges)
    return Q, old_to_new


def quotient_components(D: Diagram, B: int, S: int) -> list[int]:
    """Components of ``S`` in the quotient D/B, expressed as masks of D.

    ``S`` must be a set of surviving vertices (disjoint from B).
    """
    D.check_subset(S)
    if S & B:
        raise DiagramError("subdiagram of the quotient meets B")
    b_components = components(D, B)
    out = []
    remaining = S
    while remaining:
        seed_index = (remaining & -remaining).bit_length() - 1
        comp = {seed_index}
        frontier = [seed_index]
        while frontier:
            a = frontier.pop()
            for b in bits(remaining):
                if b not in comp and _quotient_adjacent(D, b_components, a, b):
                    comp.add(b)
                    frontier.append(b)
        mask = mask_of(comp)
        out.append(mask)
        remaining &= ~mask
    return out


def lift(D: Diagram, B: int, A: int) -> int:
    """Lift a connected subdiagram ``A`` of D/B back into D.

    The lift is ``A`` together with every component of B that is
    non-orthogonal to ``A``; it is connected in D, and its quotient image
    is ``A`` again.
    """
    if A == 0:
        raise DiagramError("cannot lift the empty subdiagram")
    if len(quotient_components(D, B, A)) != 1:
        raise DiagramError("subdiagram is not connected in the quotient")
    out = A
    for comp in components(D, B):
        if not is_orthogonal(D, comp, A):
            out |= comp
    return out


def induced(D: Diagram, S: int) -> tuple[Diagram, dict[int, int]]:
    """The full subdiagram on ``S`` as a standalone diagram, with old->new map."""
    D.check_subset(S)
    if S == 0:
        raise DiagramError("induced subdiagram needs at least one vertex")
    kept = list(bits(S))
    old_to_new = {old: new for new, old in enumerate(kept)}
    edges = []
    for x, a in enumerate(kept):
        for b in kept[x + 1:]:
            if D.adj[a] & (1 << b):
                edges.append((x, old_to_new[b], D.label(a, b)))
    return Diagram.from_edges([D.names[i] for i in kept], edges), old_to_new
