import random
from math import gcd

import pytest
from hypothesis import given, strategies as st

from graphassoc.diagram import DiagramError
from graphassoc.homology import (
    OrientedCell,
    boundary,
    boundary_cell,
    boundary_matrix,
    boundary_matrix_json,
    canonicalize,
    chain_basis,
    homology,
    homology_json,
    oriented,
    rank,
    shuffle_number,
    smith_normal_form,
)
from graphassoc.nested import NestedSet, faces
from conftest import connected_reps, cycle_diagram, labeled_connected, path_diagram

P2 = path_diagram(2)
P3 = path_diagram(3)
P5 = path_diagram(5)
C3 = cycle_diagram(3)


def ns(D, *lists):
    return NestedSet.from_vertex_lists(D, lists)


# -- canonical form -----------------------------------------------------------


def test_canonicalize_fixes_canonical_input():
    cell = oriented(ns(P3))
    assert canonicalize(cell) == (cell, 1)


def test_canonicalize_alpha_transposition():
    cell = OrientedCell(ns(P3), ((P3.full, (1, 0, 2)),))
    canon, sign = canonicalize(cell)
    assert canon.orientation == ((P3.full, (0, 1, 2)),)
    assert sign == -1


def test_canonicalize_unsaturated_swap():
    H = ns(P5, [0, 1], [3, 4])
    swapped = OrientedCell(H, ((0b11000, (3, 4)), (0b00011, (0, 1))))
    canon, sign = canonicalize(swapped)
    assert canon == oriented(H)
    assert sign == -1  # (2-1)(2-1) exponent


def test_canonicalize_rejects_malformed():
    with pytest.raises(DiagramError):
        canonicalize(OrientedCell(ns(P3), ()))
    with pytest.raises(DiagramError):
        canonicalize(OrientedCell(ns(P3), ((P3.full, (0, 1)),)))
    with pytest.raises(DiagramError):
        canonicalize(OrientedCell(ns(P3), ((P3.full, (0, 1, 2)), (P3.full, (0, 1, 2)))))


def _scramble(rng, cell):
    entries = list(cell.orientation)
    rng.shuffle(entries)
    scrambled = []
    sign = 1
    for B, alpha in entries:
        perm = list(alpha)
        rng.shuffle(perm)
        scrambled.append((B, tuple(perm)))
    return OrientedCell(cell.nested, tuple(scrambled))


def test_canonicalize_idempotent_and_involutive_signs():
    rng = random.Random(11)
    for D in [P3, P5, C3, cycle_diagram(4)]:
        for k in range(D.n):
            for H in faces(D, k):
                cell = oriented(H)
                for _ in range(3):
                    scrambled = _scramble(rng, cell)
                    canon, sign = canonicalize(scrambled)
                    assert canon == cell
                    assert sign in (-1, 1)
                    again, sign2 = canonicalize(canon)
                    assert (again, sign2) == (cell, 1)
                    # applying the move twice returns the original sign
                    back, sign3 = canonicalize(scrambled)
                    assert sign3 == sign


def test_scrambled_sign_prediction():
    """Sign of a scramble = parity product of the generating moves."""
    H = ns(P5, [0, 1], [3, 4])
    base = oriented(H)
    # swap the two unsaturated blocks and reverse one alpha pair: signs multiply
    cell = OrientedCell(H, ((0b11000, (4, 3)), (0b00011, (0, 1))))
    _, sign = canonicalize(cell)
    assert sign == (-1) * (-1)


def predicted_sign(cell, target):
    """Independent predictor: bubble the enumeration, then count inversions."""
    entries = list(cell.orientation)
    order = [B for B, _ in target.orientation]
    sign = 1
    changed = True
    while changed:
        changed = False
        for i in range(len(entries) - 1):
            if order.index(entries[i][0]) > order.index(entries[i + 1][0]):
                a, b = entries[i], entries[i + 1]
                sign *= (-1) ** ((len(a[1]) - 1) * (len(b[1]) - 1))
                entries[i], entries[i + 1] = b, a
                changed = True
    for (B, alpha), (_, target_alpha) in zip(entries, target.orientation):
        inversions = sum(
            1
            for i in range(len(alpha))
            for j in range(i + 1, len(alpha))
            if target_alpha.index(alpha[i]) > target_alpha.index(alpha[j])
        )
        sign *= (-1) ** inversions
    return sign


def test_random_scramble_signs_match_independent_predictor():
    rng = random.Random(23)
    for D in [P5, cycle_diagram(4)]:
        for k in range(2, D.n):
            for H in faces(D, k)[::3]:
                base = oriented(H)
                for _ in range(4):
                    scrambled = _scramble(rng, base)
                    canon, sign = canonicalize(scrambled)
                    assert canon == base
                    assert sign == predicted_sign(scrambled, base)


# -- shuffle numbers -------------------------------------------------------------


def test_shuffle_examples():
    assert shuffle_number((1, 3), (0, 1, 2, 3)) == 3
    assert shuffle_number((0,), (0, 1, 2)) == 0
    assert shuffle_number((0, 1, 2), (0, 1, 2)) == 0


def test_shuffle_rejects_non_subsequence():
    with pytest.raises(DiagramError):
        shuffle_number((3, 1), (0, 1, 2, 3))
    with pytest.raises(DiagramError):
        shuffle_number((9,), (0, 1))


def bubble_count(beta, alpha):
    """Oracle: literally bubble the beta elements to the front."""
    seq = list(alpha)
    count = 0
    target = 0
    for x in beta:
        pos = seq.index(x)
        while pos > target:
            seq[pos], seq[pos - 1] = seq[pos - 1], seq[pos]
            pos -= 1
            count += 1
        target += 1
    return count


@given(st.data())
def test_shuffle_matches_bubble_oracle(data):
    n = data.draw(st.integers(1, 7))
    alpha = tuple(range(n))
    size = data.draw(st.integers(1, n))
    beta = tuple(sorted(data.draw(st.permutations(range(n)))[:size]))
    assert shuffle_number(beta, alpha) == bubble_count(beta, alpha)


# -- boundary ----------------------------------------------------------------------


def test_boundary_of_p2_top_cell():
    terms = boundary_cell(P2, oriented(ns(P2)))
    named = {
        tuple(tuple(P2.vertex_names(m)) for m in cell.nested.elements): coeff
        for cell, coeff in terms.items()
    }
    assert named == {((("1",), ("1", "2"))): 1, ((("2",), ("1", "2"))): -1}


def test_boundary_of_zero_cells_vanishes():
    for F in faces(P3, 0):
        assert boundary_cell(P3, oriented(F)) == {}


def test_boundary_squared_top_cell_p3():
    assert boundary(P3, boundary_cell(P3, oriented(ns(P3)))) == {}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_boundary_squared_exhaustive(n):
    for D in labeled_connected(n):
        for k in range(1, D.n):
            for cell in chain_basis(D, k):
                assert boundary(D, boundary_cell(D, cell)) == {}


def test_boundary_rejects_mixed_dimensions():
    cells = {oriented(faces(P3, 0)[0]): 1, oriented(faces(P3, 1)[0]): 1}
    with pytest.raises(DiagramError):
        boundary(P3, cells)


def test_boundary_matrix_examples():
    assert boundary_matrix(P2, 1) in ([[1], [-1]], [[-1], [1]])
    M = boundary_matrix(P3, 2)
    assert len(M) == 5 and len(M[0]) == 1
    assert sorted(abs(row[0]) for row in M) == [1, 1, 1, 1, 1]
    assert boundary_matrix(P2, 0) == []


def test_boundary_matrix_json():
    doc = boundary_matrix_json(P3, 2)
    assert doc["rows"] == 5 and doc["cols"] == 1
    assert len(doc["entries"]) == 5
    doc0 = boundary_matrix_json(P3, 0)
    assert doc0 == {"rows": 0, "cols": 5, "entries": []}


# -- Smith normal form ---------------------------------------------------------------


def test_snf_examples():
    assert smith_normal_form([[1, 0], [0, 1]]) == [1, 1]
    assert smith_normal_form([[2, 0], [0, 4]]) == [2, 4]
    assert smith_normal_form([[1, -1]]) == [1]


def minor_gcd(M, k):
    """Determinant-divisor oracle: gcd of all k x k minors."""
    import itertools

    rows, cols = len(M), len(M[0])

    def det(sub):
        if len(sub) == 1:
            return sub[0][0]
        total = 0
        for j in range(len(sub)):
            minor = [row[:j] + row[j + 1:] for row in sub[1:]]
            total += (-1) ** j * sub[0][j] * det(minor)
        return total

    g = 0
    for rsel in itertools.combinations(range(rows), k):
        for csel in itertools.combinations(range(cols), k):
            g = gcd(g, det([[M[r][c] for c in csel] for r in rsel]))
    return abs(g)


def test_snf_matches_determinant_divisors():
    rng = random.Random(5)
    for _ in range(25):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        M = [[rng.randint(-6, 6) for _ in range(cols)] for _ in range(rows)]
        factors = smith_normal_form(M)
        for k in range(1, len(factors) + 1):
            prod = 1
            for d in factors[:k]:
                prod *= d
            assert prod == minor_gcd(M, k)
        for a, b in zip(factors, factors[1:]):
            assert b % a == 0


# -- homology --------------------------------------------------------------------------


def test_homology_examples():
    assert homology(P3) == [(1, []), (0, []), (0, [])]
    assert homology(C3) == [(1, []), (0, []), (0, [])]
    assert homology(path_diagram(1)) == [(1, [])]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_acyclic_exhaustive(n):
    for D in labeled_connected(n):
        H = homology(D)
        assert H[0] == (1, [])
        assert all(h == (0, []) for h in H[1:])


def test_rank_nullity_accounting():
    for D in [P3, C3, cycle_diagram(4), path_diagram(4)]:
        counts = [len(chain_basis(D, k)) for k in range(D.n)]
        H = homology(D)
        for k in range(D.n):
            rank_k = rank(boundary_matrix(D, k)) if k >= 1 else 0
            rank_k1 = rank(boundary_matrix(D, k + 1)) if k + 1 <= D.n - 1 else 0
            assert rank_k + rank_k1 + H[k][0] == counts[k]


def test_euler_from_cells():
    for D in connected_reps(4):
        total = sum((-1) ** k * len(chain_basis(D, k)) for k in range(D.n))
        assert total == 1


def test_homology_json():
    assert homology_json(C3) == {"H": [{"betti": 1}, {"betti": 0}, {"betti": 0}]}
