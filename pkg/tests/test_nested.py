import json

import pytest

from graphassoc.diagram import DiagramError, is_compatible, is_connected
from graphassoc.nested import (
    NestedSet,
    TwoFace,
    classify_two_face,
    boundary_cycle,
    connected_subdiagrams,
    edge_graph,
    f_vector,
    face_factorization,
    face_poset_json,
    faces,
    is_nested,
    maximal_nested_sets,
)
from conftest import (
    connected_reps,
    cycle_diagram,
    labeled_connected,
    path_diagram,
    relabelings,
    star_diagram,
)

P2 = path_diagram(2)
P3 = path_diagram(3)
P5 = path_diagram(5)
C3 = cycle_diagram(3)


def ns(D, *lists):
    return NestedSet.from_vertex_lists(D, lists)


# -- independent oracles -----------------------------------------------------


def bracketings(n):
    """All complete bracketings of a word of n letters, by recursive splitting."""
    if n == 1:
        return [("x",)]
    out = []
    for split in range(1, n):
        for left in bracketings(split):
            for right in bracketings(n - split):
                out.append((left, right))
    return out


def brute_force_maximal_families(D):
    """Independent search: all |D|-element pairwise-compatible families with D."""
    import itertools

    conn = [m for m in range(1, D.full + 1) if is_connected(D, m)]
    found = []
    for combo in itertools.combinations(conn, D.n):
        if D.full not in combo:
            continue
        if all(
            is_compatible(D, a, b)
            for i, a in enumerate(combo)
            for b in combo[i + 1:]
        ):
            found.append(frozenset(combo))
    return found


# -- nestedness and enumeration ----------------------------------------------


def test_is_nested_examples():
    assert is_nested(P3, [P3.full, 0b011, 0b001])
    assert not is_nested(P3, [P3.full, 0b011, 0b110])
    assert not is_nested(P3, [0b001])


def test_is_nested_rejects_foreign_vertices():
    with pytest.raises(DiagramError):
        is_nested(P3, [0b1000])


def test_maximal_nested_sets_p2():
    mns = maximal_nested_sets(P2)
    assert [[P2.vertex_names(m) for m in F.elements] for F in mns] == [
        [["1"], ["1", "2"]],
        [["2"], ["1", "2"]],
    ]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_maximal_count_matches_bracketings(n):
    assert len(maximal_nested_sets(path_diagram(n))) == len(bracketings(n + 1))


def test_maximal_count_cycle_brute_force():
    assert len(maximal_nested_sets(C3)) == len(brute_force_maximal_families(C3))
    C4 = cycle_diagram(4)
    assert len(maximal_nested_sets(C4)) == len(brute_force_maximal_families(C4))


def test_faces_examples():
    assert [H.elements for H in faces(P3, 2)] == [(P3.full,)]
    assert len(faces(P3, 1)) == 5
    assert len(faces(P2, 0)) == 2
    with pytest.raises(DiagramError):
        faces(P3, 3)


def test_every_maximal_is_maximal():
    for F in maximal_nested_sets(P5):
        assert F.is_maximal()
        free = [
            m
            for m in connected_subdiagrams(P5)
            if m not in F.elements
            and all(is_compatible(P5, m, e) for e in F.elements)
        ]
        assert free == []


# -- alpha sets, unsaturated elements, factorization ---------------------------


def test_alpha_set_examples():
    H = ns(P3, [0, 1], [0])
    assert H.alpha_set(0b011) == 0b010
    assert H.alpha_set(P3.full) == 0b100
    top = ns(P3)
    assert top.alpha_set(P3.full) == P3.full


def test_alpha_set_requires_membership():
    with pytest.raises(DiagramError):
        ns(P3).alpha_set(0b011)


def test_unsaturated_examples():
    for F in maximal_nested_sets(P3):
        assert F.unsaturated() == []
    assert ns(P3).unsaturated() == [(P3.full, P3.full)]
    H = ns(P5, [0, 1], [3, 4])
    assert H.unsaturated() == [(0b00011, 0b00011), (0b11000, 0b11000)]
    assert H.alpha_set(P5.full) == 0b00100


def test_face_factorization_examples():
    assert [Q.names for Q in face_factorization(P3, ns(P3))] == [("1", "2", "3")]
    factors = face_factorization(P5, ns(P5, [0, 1], [3, 4]))
    assert [Q.names for Q in factors] == [("1", "2"), ("4", "5")]
    factors = face_factorization(P3, ns(P3, [1]))
    assert [Q.names for Q in factors] == [("1", "3")]
    assert is_connected(factors[0], factors[0].full)


def test_face_dimensions_add_up():
    for D in labeled_connected(4):
        for dim in range(D.n):
            for H in faces(D, dim):
                assert sum(Q.n - 1 for Q in face_factorization(D, H)) == dim


# -- edges and 2-faces ---------------------------------------------------------


def test_edge_graph_examples():
    verts, edges = edge_graph(P2)
    assert len(verts) == 2 and edges == [(0, 1)]
    verts, edges = edge_graph(P3)
    assert len(verts) == 5 and len(edges) == 5
    degree = [0] * 5
    for i, j in edges:
        degree[i] += 1
        degree[j] += 1
    assert degree == [2] * 5
    verts, edges = edge_graph(C3)
    assert len(verts) == 6 and len(edges) == 6


def test_edge_graph_connected():
    for D in labeled_connected(4)[::4]:
        verts, edges = edge_graph(D)
        adj = {i: set() for i in range(len(verts))}
        for i, j in edges:
            adj[i].add(j)
            adj[j].add(i)
        seen = {0}
        stack = [0]
        while stack:
            for j in adj[stack.pop()]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        assert len(seen) == len(verts)


def test_classify_examples():
    assert classify_two_face(P3, ns(P3)) is TwoFace.PENTAGON
    assert classify_two_face(C3, ns(C3)) is TwoFace.HEXAGON
    assert classify_two_face(P5, ns(P5, [0, 1], [3, 4])) is TwoFace.SQUARE
    with pytest.raises(DiagramError):
        classify_two_face(P5, ns(P5))


def test_classification_matches_boundary_length():
    expected = {TwoFace.SQUARE: 4, TwoFace.PENTAGON: 5, TwoFace.HEXAGON: 6}
    for D in [P3, C3, P5, star_diagram(3), cycle_diagram(4)]:
        for H in faces(D, 2):
            kind = classify_two_face(D, H)
            assert len(boundary_cycle(D, H)) == expected[kind]


def test_paths_have_no_hexagons_star_does():
    for n in range(3, 6):
        D = path_diagram(n)
        kinds = {classify_two_face(D, H) for H in faces(D, 2)}
        assert TwoFace.HEXAGON not in kinds
    S3 = star_diagram(3)
    kinds = [classify_two_face(S3, H) for H in faces(S3, 2)]
    assert TwoFace.HEXAGON in kinds


# -- global invariants ----------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_rank_function_exhaustive(n):
    for D in labeled_connected(n):
        for dim in range(D.n):
            for H in faces(D, dim):
                total = sum(
                    bin(H.alpha_set(B)).count("1") - 1 for B in H.elements
                )
                assert total == H.dim == D.n - len(H.elements)


def test_rank_function_five_vertex_reps(five_vertex_reps):
    for D in five_vertex_reps:
        for dim in range(D.n):
            for H in faces(D, dim):
                total = sum(bin(H.alpha_set(B)).count("1") - 1 for B in H.elements)
                assert total == H.dim


def test_codim_one_in_exactly_two_maximal(five_vertex_reps):
    universe = [D for n in (2, 3, 4) for D in labeled_connected(n)]
    universe += list(five_vertex_reps)
    for D in universe:
        mns = [set(F.elements) for F in maximal_nested_sets(D)]
        for H in faces(D, 1):
            hset = set(H.elements)
            assert sum(1 for F in mns if hset <= F) == 2


def test_facet_counts_factorize(five_vertex_reps):
    from graphassoc.diagram import induced, quotient

    for D in list(labeled_connected(4)) + list(five_vertex_reps):
        mns = [set(F.elements) for F in maximal_nested_sets(D)]
        for B in connected_subdiagrams(D):
            if B == D.full:
                continue
            containing = sum(1 for F in mns if B in F)
            sub, _ = induced(D, B)
            quot, _ = quotient(D, B)
            assert containing == len(maximal_nested_sets(sub)) * len(
                maximal_nested_sets(quot)
            )


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_euler_characteristic(n):
    for D in connected_reps(n):
        assert sum((-1) ** k * c for k, c in enumerate(f_vector(D))) == 1


def test_relabeling_preserves_f_vector(five_vertex_reps):
    for D in five_vertex_reps[:5]:
        for E in relabelings(D, count=1):
            assert f_vector(E) == f_vector(D)


def test_face_poset_json_roundtrip():
    doc = face_poset_json(P3)
    assert json.loads(json.dumps(doc)) == doc
    assert len(doc["faces"]) == 11
    top = doc["faces"][0]
    assert top["dim"] == 2 and top["elements"] == [["1", "2", "3"]]
