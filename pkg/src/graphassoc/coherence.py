"""Support theory of pairs of maximal nested sets and symbolic relation words.

Pairs of maximal nested sets are oriented edge-paths on the associahedron;
their support and central support localize the formal associators attached
to them.  The relation words produced here (generalized pentagon and
hexagon words, braid relations, monodromy words and twist rewrites) are
free-group words over tagged letters: nothing is ever evaluated in an
algebra.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .diagram import (
    Diagram,
    DiagramError,
    INFINITY,
    bits,
    component_containing,
    components,
    is_connected,
    is_orthogonal,
)
from .nested import (
    NestedSet,
    TwoFace,
    classify_two_face,
    connected_subdiagrams,
    faces,
    first_maximal_nested_set,
    ascending_chain,
    maximal_nested_sets,
)


# ---------------------------------------------------------------------------
# letters and words


@dataclass(frozen=True)
class LocalGenerator:
    """The formal local monodromy S_i attached to a vertex."""

    vertex: int


@dataclass(frozen=True)
class AssociatorSymbol:
    """The formal associator of a connected subdiagram and an ordered vertex pair.

    Canonical letters store the ascending pair; the descending variant is
    its formal inverse.
    """

    support: int
    pair: tuple[int, int]


@dataclass(frozen=True)
class TwistSymbol:
    """A twist letter attached to a connected subdiagram and one of its vertices."""

    support: int
    vertex: int


Letter = tuple[object, int]


@dataclass(frozen=True)
class RelationWord:
    """A free-group word over tagged letters, with a relation-kind tag."""

    kind: str
    letters: tuple[Letter, ...]

    def __len__(self):
        return len(self.letters)


def associator_letter(B: int, source: int, target: int, exp: int = 1) -> Letter:
    """Canonicalized letter for the associator (B; source, target)."""
    if source == target:
        raise DiagramError("associator needs two distinct vertices")
    if source < target:
        return (AssociatorSymbol(B, (source, target)), exp)
    return (AssociatorSymbol(B, (target, source)), -exp)


def invert_word(word: RelationWord) -> RelationWord:
    return RelationWord(word.kind, tuple((sym, -e) for sym, e in reversed(word.letters)))


def free_reduce(letters) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for sym, e in letters:
        if out and out[-1][0] == sym:
            merged = out[-1][1] + e
            out.pop()
            if merged:
                out.append((sym, merged))
        elif e:
            out.append((sym, e))
    return tuple(out)


# ---------------------------------------------------------------------------
# support and central support


def _check_maximal(F: NestedSet):
    if not F.is_maximal():
        raise DiagramError("operation needs maximal nested sets")


def symmetric_difference(F: NestedSet, G: NestedSet) -> list[int]:
    fs, gs = set(F.elements), set(G.elements)
    return sorted(fs ^ gs)


def is_elementary(F: NestedSet, G: NestedSet) -> bool:
    return len(set(F.elements) - set(G.elements)) == 1


def support(D: Diagram, F: NestedSet, G: NestedSet) -> int:
    """Union of the symmetric difference; empty when F = G.

    For elementary pairs this is the unique unsaturated element of the
    intersection, which is re-derived as a cross-check.
    """
    _check_maximal(F)
    _check_maximal(G)
    supp = 0
    for m in symmetric_difference(F, G):
        supp |= m
    if is_elementary(F, G):
        meet = NestedSet.make(D, set(F.elements) & set(G.elements))
        unsat = meet.unsaturated()
        assert len(unsat) == 1 and unsat[0][0] == supp
    return supp


def kappa(D: Diagram, collection) -> list[int]:
    """Connected subdiagrams orthogonal to or contained in every member."""
    out = []
    for B in connected_subdiagrams(D):
        if all(B & ~C == 0 or is_orthogonal(D, B, C) for C in collection):
            out.append(B)
    return out


def central_support(D: Diagram, F: NestedSet, G: NestedSet) -> int:
    """Union of the kappa-elements of the symmetric difference inside the support."""
    _check_maximal(F)
    _check_maximal(G)
    delta = symmetric_difference(F, G)
    if not delta:
        return 0
    supp = support(D, F, G)
    z = 0
    for B in kappa(D, delta):
        if B & ~supp == 0:
            z |= B
    return z


@dataclass(frozen=True)
class PairSupport:
    """Support data of an ordered pair of maximal nested sets."""

    pair: tuple[NestedSet, NestedSet]
    sym_diff: tuple[int, ...]
    supp: int
    zsupp: int


def pair_support(D: Diagram, F: NestedSet, G: NestedSet) -> PairSupport:
    return PairSupport(
        (F, G),
        tuple(symmetric_difference(F, G)),
        support(D, F, G),
        central_support(D, F, G) if F.elements != G.elements else 0,
    )


def are_equivalent(D: Diagram, pair1, pair2) -> bool:
    """Ordered pairs are equivalent when both one-sided differences agree."""
    (F, G), (F2, G2) = pair1, pair2
    for H in (F, G, F2, G2):
        _check_maximal(H)
    return (
        set(F.elements) - set(G.elements) == set(F2.elements) - set(G2.elements)
        and set(G.elements) - set(F.elements) == set(G2.elements) - set(F2.elements)
    )


# ---------------------------------------------------------------------------
# elementary pairs <-> diagrammatic triples


def triple_from_pair(D: Diagram, G: NestedSet, F: NestedSet) -> tuple[int, int, int]:
    """The triple (support; alpha_G, alpha_F) classifying an elementary pair."""
    if not is_elementary(G, F):
        raise DiagramError("pair is not elementary")
    B = support(D, G, F)
    alpha_g = G.alpha_set(B)
    alpha_f = F.alpha_set(B)
    ag, af = next(bits(alpha_g)), next(bits(alpha_f))
    if ag == af:
        raise DiagramError("degenerate elementary pair")
    return B, ag, af


def pair_from_triple(D: Diagram, B: int, alpha_g: int, alpha_f: int) -> tuple[NestedSet, NestedSet]:
    """The canonical elementary pair (G, F) with the given support triple.

    F keeps the component of ``B - alpha_f`` containing ``alpha_g`` and
    symmetrically for G; both share deterministic maximal tails on the
    components of ``B - {alpha_f, alpha_g}`` and an ascending chain from
    B up to the full diagram.
    """
    if alpha_g == alpha_f:
        raise DiagramError("the two vertices must be distinct")
    if not ((B >> alpha_g) & 1 and (B >> alpha_f) & 1):
        raise DiagramError("both vertices must lie in B")
    if not is_connected(D, B):
        raise DiagramError("support must be connected")
    shared = set(ascending_chain(D, B))
    both = (1 << alpha_g) | (1 << alpha_f)
    for comp in components(D, B & ~both):
        shared.update(first_maximal_nested_set(D, comp))
    B1 = component_containing(D, 1 << alpha_f, 1 << alpha_g, within=B)
    B2 = component_containing(D, 1 << alpha_g, 1 << alpha_f, within=B)
    F = NestedSet.make(D, shared | {B1})
    G = NestedSet.make(D, shared | {B2})
    if triple_from_pair(D, G, F) != (B, alpha_g, alpha_f):
        raise AssertionError("triple round-trip failed")
    return G, F


# ---------------------------------------------------------------------------
# good elementary sequences


@lru_cache(maxsize=None)
def _skeleton(D: Diagram):
    from .nested import edge_graph

    verts, edges = edge_graph(D)
    adj = {i: [] for i in range(len(verts))}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    for nbrs in adj.values():
        nbrs.sort()
    return verts, adj


def good_elementary_sequence(D: Diagram, F: NestedSet, G: NestedSet) -> list[NestedSet]:
    """An elementary path from F to G staying inside the face of their intersection.

    Every step shares the intersection, has support inside supp(F, G) and
    treats each component of the central support as the supports axiom
    requires; the output is re-checked clause by clause.
    """
    _check_maximal(F)
    _check_maximal(G)
    if F.elements == G.elements:
        return [F]
    meet = set(F.elements) & set(G.elements)
    verts, adj = _skeleton(D)
    index = {H.elements: i for i, H in enumerate(verts)}
    allowed = {i for i, H in enumerate(verts) if meet <= set(H.elements)}
    start, goal = index[F.elements], index[G.elements]
    parent = {start: None}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if cur == goal:
            break
        for j in adj[cur]:
            if j in allowed and j not in parent:
                parent[j] = cur
                queue.append(j)
    if goal not in parent:
        raise DiagramError("face of the intersection is disconnected; poset corrupt")
    path = []
    node = goal
    while node is not None:
        path.append(verts[node])
        node = parent[node]
    path.reverse()
    validate_good_sequence(D, F, G, path)
    return path


def transport_good_sequence(D: Diagram, seq, F2: NestedSet, G2: NestedSet) -> list[NestedSet]:
    """Transport a good sequence along an equivalence of pairs.

    Equivalent pairs share their one-sided differences, so replacing the
    common intersection of the original pair by that of ``(F2, G2)`` step
    by step yields a good sequence whose steps are equivalent to the
    original ones.
    """
    F, G = seq[0], seq[-1]
    if not are_equivalent(D, (F, G), (F2, G2)):
        raise DiagramError("pairs are not equivalent")
    meet = set(F.elements) & set(G.elements)
    meet2 = set(F2.elements) & set(G2.elements)
    out = []
    for H in seq:
        extras = set(H.elements) - meet
        out.append(NestedSet.make(D, meet2 | extras))
    validate_good_sequence(D, F2, G2, out)
    return out


def validate_good_sequence(D: Diagram, F: NestedSet, G: NestedSet, seq) -> None:
    """Raise unless ``seq`` satisfies every clause required of a good sequence."""
    if seq[0].elements != F.elements or seq[-1].elements != G.elements:
        raise DiagramError("sequence endpoints are wrong")
    meet = set(F.elements) & set(G.elements)
    supp_fg = support(D, F, G)
    zsupp_fg = central_support(D, F, G)
    for H, K in zip(seq, seq[1:]):
        if not is_elementary(H, K):
            raise DiagramError("non-elementary step")
        if not meet <= (set(H.elements) & set(K.elements)):
            raise DiagramError("step loses the intersection")
        supp_step = support(D, H, K)
        if supp_step & ~supp_fg:
            raise DiagramError("step support leaves supp(F, G)")
        zsupp_step = central_support(D, H, K)
        for comp in components(D, zsupp_fg):
            if not is_orthogonal(D, comp, supp_step) and comp & ~zsupp_step:
                raise DiagramError("central support clause violated")


# ---------------------------------------------------------------------------
# relation words


def elementary_letter(D: Diagram, G: NestedSet, F: NestedSet) -> Letter:
    """The diagrammatic letter of the elementary associator from F to G."""
    B, ag, af = triple_from_pair(D, G, F)
    return associator_letter(B, ag, af)


def general_associator_letters(D: Diagram, G: NestedSet, F: NestedSet) -> list[Letter]:
    """Letters (in product order) expanding the associator from F to G."""
    seq = good_elementary_sequence(D, F, G)
    out = []
    for H, K in zip(seq, seq[1:]):
        out.append(elementary_letter(D, K, H))
    out.reverse()
    return out


def _two_face_data(D: Diagram, H: NestedSet):
    (B, alpha), = H.unsaturated()
    inner = H.inner_union(B)
    alphas = list(bits(alpha))

    def comp_of(anchor_mask: int) -> int:
        removed = alpha & ~anchor_mask
        return component_containing(D, removed, anchor_mask, within=B)

    return B, inner, alphas, comp_of


def pentagon_relations(D: Diagram) -> list[RelationWord]:
    """One coherence word per pentagonal or hexagonal 2-face.

    Square 2-faces impose no condition and are omitted; together with the
    orientation convention these words generate all coherence relations.
    """
    if D.n < 3:
        return []
    out = []
    for H in faces(D, 2):
        kind = classify_two_face(D, H)
        if kind is TwoFace.SQUARE:
            continue
        B, _inner, alphas, comp_of = _two_face_data(D, H)
        pair_comp = {}
        for x in alphas:
            for y in alphas:
                if x != y:
                    pair_comp[(x, y)] = comp_of((1 << x) | (1 << y))
        if kind is TwoFace.PENTAGON:
            # relabel so the split pair is (j, k): i is the quotient middle
            empties = [p for p in pair_comp if pair_comp[p] == 0 and p[0] < p[1]]
            (j, k), = empties
            (i,) = [x for x in alphas if x not in (j, k)]
            word = [
                associator_letter(B, k, i),
                associator_letter(B, i, j),
                associator_letter(pair_comp[(i, k)], i, k),
                associator_letter(B, j, k),
                associator_letter(pair_comp[(i, j)], j, i),
            ]
            out.append(RelationWord("pentagon5", tuple(word)))
        else:
            i, j, k = alphas
            word = [
                associator_letter(B, k, i),
                associator_letter(pair_comp[(j, k)], k, j),
                associator_letter(B, i, j),
                associator_letter(pair_comp[(i, k)], i, k),
                associator_letter(B, j, k),
                associator_letter(pair_comp[(i, j)], j, i),
            ]
            out.append(RelationWord("hexagon6", tuple(word)))
    return out


def relations_by_face(D: Diagram) -> list[tuple[NestedSet, RelationWord]]:
    """Pairs (2-face, coherence word) for the non-square 2-faces."""
    words = iter(pentagon_relations(D))
    out = []
    for H in faces(D, 2):
        if classify_two_face(D, H) is not TwoFace.SQUARE:
            out.append((H, next(words)))
    return out


def braid_relations(D: Diagram, include_commuting: bool = False) -> list[RelationWord]:
    """Braid relation words, one per vertex pair with finite multiplicity.

    Each word is LHS * RHS^{-1} of the alternating relation with m_ij
    factors per side, the S_i factor conjugated by the two-vertex
    associator.  Pairs with m_ij = 2 reduce to plain commutation and are
    emitted only on request.
    """
    out = []
    for i in range(D.n):
        for j in range(i + 1, D.n):
            m = D.label(i, j)
            if m == INFINITY:
                continue
            if m == 2:
                if include_commuting:
                    si, sj = LocalGenerator(i), LocalGenerator(j)
                    out.append(
                        RelationWord("braid", ((si, 1), (sj, 1), (si, -1), (sj, -1)))
                    )
                continue
            B = (1 << i) | (1 << j)
            phi = associator_letter(B, i, j)
            phi_inv = (phi[0], -phi[1])
            conj_si = [phi, (LocalGenerator(i), 1), phi_inv]
            conj_si_inv = [phi, (LocalGenerator(i), -1), phi_inv]
            sj = [(LocalGenerator(j), 1)]
            sj_inv = [(LocalGenerator(j), -1)]
            lhs = []
            for t in range(int(m)):
                lhs.extend(conj_si if t % 2 == 0 else sj)
            rhs_inv = []
            for t in reversed(range(int(m))):
                rhs_inv.extend(conj_si_inv if t % 2 == 1 else sj_inv)
            out.append(RelationWord("braid", tuple(lhs + rhs_inv)))
    return out


def monodromy_word(D: Diagram, F: NestedSet, i: int) -> RelationWord:
    """The word conjugating S_i into the braid-group image at the base point F.

    When the singleton {i} already lies in F the word is the single
    letter S_i; otherwise the associator to the deterministically chosen
    maximal nested set through {i} is expanded into elementary letters.
    """
    _check_maximal(F)
    single = 1 << i
    if single in F.elements:
        return RelationWord("monodromy", ((LocalGenerator(i), 1),))
    G_i = next(H for H in maximal_nested_sets(D) if single in H.elements)
    prefix = general_associator_letters(D, F, G_i)
    # the return trip inverts the same expansion, keeping the word a conjugate
    suffix = [(sym, -e) for sym, e in reversed(prefix)]
    letters = prefix + [(LocalGenerator(i), 1)] + suffix
    return RelationWord("monodromy", tuple(letters))


def twist_associator(D: Diagram, B: int, alpha_j: int, alpha_i: int) -> RelationWord:
    """The twisted associator as a five-letter word, empty components dropped."""
    if alpha_i == alpha_j:
        raise DiagramError("twist needs two distinct vertices")
    if not ((B >> alpha_i) & 1 and (B >> alpha_j) & 1):
        raise DiagramError("both vertices must lie in B")
    if not is_connected(D, B):
        raise DiagramError("B must be connected")
    c_i = component_containing(D, 1 << alpha_j, 1 << alpha_i, within=B)
    c_j = component_containing(D, 1 << alpha_i, 1 << alpha_j, within=B)
    letters = [
        (TwistSymbol(B, alpha_j), 1),
        (TwistSymbol(c_i, alpha_i), 1) if c_i else None,
        associator_letter(B, alpha_j, alpha_i),
        (TwistSymbol(c_j, alpha_j), -1) if c_j else None,
        (TwistSymbol(B, alpha_i), -1),
    ]
    return RelationWord("twist", tuple(l for l in letters if l is not None))


# ---------------------------------------------------------------------------
# JSON export


def _letter_json(D: Diagram, letter: Letter) -> dict:
    sym, exp = letter
    if isinstance(sym, LocalGenerator):
        return {"letter": {"type": "S", "vertex": D.names[sym.vertex]}, "exp": exp}
    if isinstance(sym, AssociatorSymbol):
        return {
            "letter": {
                "type": "Phi",
                "B": D.vertex_names(sym.support),
                "pair": [D.names[sym.pair[0]], D.names[sym.pair[1]]],
            },
            "exp": exp,
        }
    return {
        "letter": {
            "type": "a",
            "B": D.vertex_names(sym.support),
            "alpha": D.names[sym.vertex],
        },
        "exp": exp,
    }


def presentation_json(D: Diagram, include_commuting: bool = False) -> dict:
    """The symbolic presentation: generator inventory plus relation words."""
    phis = []
    twists = []
    for B in connected_subdiagrams(D):
        vs = list(bits(B))
        for a in vs:
            twists.append({"B": D.vertex_names(B), "alpha": D.names[a]})
            for b in vs:
                if a < b:
                    phis.append({"B": D.vertex_names(B), "pair": [D.names[a], D.names[b]]})
    relations = []
    for word in pentagon_relations(D) + braid_relations(D, include_commuting):
        relations.append(
            {"kind": word.kind, "word": [_letter_json(D, l) for l in word.letters]}
        )
    return {
        "generators": {"S": list(D.names), "Phi": phis, "a": twists},
        "relations": relations,
    }
