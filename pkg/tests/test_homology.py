import itertools
import random
from fractions import Fraction

from confspace.homology import boundary_matrix, homology_ranks, smith_diagonal


def closure_of_facets(facets):
    """All faces of the given top simplices, grouped by dimension."""
    by_dim = {}
    for f in facets:
        for size in range(1, len(f) + 1):
            for face in itertools.combinations(sorted(f), size):
                by_dim.setdefault(size - 1, set()).add(face)
    top = max(by_dim)
    return [sorted(by_dim.get(k, ())) for k in range(top + 1)]


def rank_oracle(mat):
    m = [[Fraction(x) for x in row] for row in mat]
    rank = 0
    rows = len(m)
    cols = len(m[0]) if rows else 0
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c] / m[r][c]
                for j in range(c, cols):
                    m[i][j] -= f * m[r][j]
        r += 1
        rank += 1
    return rank


def test_smith_known_invariant_factors():
    assert smith_diagonal([[2, 4], [6, 8]]) == [2, 4]
    assert smith_diagonal([[1, 0], [0, 1]]) == [1, 1]
    assert smith_diagonal([[0, 0], [0, 0]]) == []
    assert smith_diagonal([[6]]) == [6]


def test_smith_divisibility_chain_and_rank():
    rng = random.Random(19)
    for _ in range(40):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        mat = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        diag = smith_diagonal(mat)
        assert len(diag) == rank_oracle(mat)
        for a, b in zip(diag, diag[1:]):
            assert b % a == 0


def test_circle_homology():
    facets = [(0, 1), (1, 2), (0, 2)]
    ranks = homology_ranks(closure_of_facets(facets))
    assert [b for b, _ in ranks] == [1, 1]
    assert all(not t for _, t in ranks)


def test_two_sphere_homology():
    facets = list(itertools.combinations(range(4), 3))
    ranks = homology_ranks(closure_of_facets(facets))
    assert [b for b, _ in ranks] == [1, 0, 1]


def test_projective_plane_torsion():
    # minimal six-vertex triangulation; first homology is pure 2-torsion
    facets = [
        (1, 2, 3), (1, 2, 4), (1, 3, 5), (1, 4, 6), (1, 5, 6),
        (2, 3, 6), (2, 4, 5), (2, 5, 6), (3, 4, 5), (3, 4, 6),
    ]
    by_dim = closure_of_facets(facets)
    assert [len(level) for level in by_dim] == [6, 15, 10]
    ranks = homology_ranks(by_dim)
    assert ranks[0] == (1, [])
    assert ranks[1] == (0, [2])
    assert ranks[2] == (0, [])


def test_boundary_matrix_entries():
    faces = [(0, 1), (0, 2), (1, 2)]
    simplices = [(0, 1, 2)]
    mat = boundary_matrix(faces, simplices)
    assert [row[0] for row in mat] == [1, -1, 1]
