import itertools
import random

import numpy as np
import pytest

from hermlab import gf, gfmat, projgeo


@pytest.fixture(scope="module")
def f4():
    return gf.quadratic_tower(2)[1]


@pytest.fixture(scope="module")
def f9():
    return gf.quadratic_tower(3)[1]


def test_normalize_divides_by_first_nonzero(f9):
    g = f9.generator
    p = projgeo.normalize(f9, (0, g, g, 1))
    assert p.coords[1] == 1
    assert p.coords == (0, 1, 1, f9.inv(g))


def test_normalize_scalar_invariance(f9):
    rng = random.Random(7)
    for _ in range(200):
        coords = [rng.randrange(f9.order) for _ in range(4)]
        if not any(coords):
            continue
        c = rng.randrange(1, f9.order)
        scaled = [f9.mul(c, x) for x in coords]
        assert projgeo.normalize(f9, coords) == projgeo.normalize(f9, scaled)


def test_normalize_zero_vector_rejected(f4):
    with pytest.raises(ValueError):
        projgeo.normalize(f4, (0, 0, 0, 0))


def test_p3_f4_has_85_points_and_raw_variants_collapse(f4):
    pts = projgeo.enumerate_proj(f4, 3)
    assert len(pts) == 85
    assert len(set(pts)) == 85
    # normalizing every nonzero raw vector gives the same 85 points
    seen = set()
    for coords in itertools.product(range(4), repeat=4):
        if any(coords):
            seen.add(projgeo.normalize(f4, coords))
    assert len(seen) == 85
    assert seen == set(pts)


def test_point_count_formulas(f9):
    assert len(projgeo.enumerate_proj(f9, 1)) == 10
    assert len(projgeo.enumerate_proj(f9, 3)) == 820


def test_enumeration_order_is_lex(f4):
    pts = projgeo.enumerate_proj(f4, 3)
    tuples = [p.coords for p in pts]
    assert tuples == sorted(tuples)
    assert tuples[0] == (0, 0, 0, 1)


def test_canonical_line_identity_top(f4):
    mat = np.array([[1, 0], [0, 1], [2, 3], [1, 0]])
    line = projgeo.canonical_line(f4, mat)
    assert (line.mat[:2] == np.eye(2, dtype=int)).all()
    again = projgeo.canonical_line(f4, line.mat)
    assert line == again


def test_canonical_line_gl2_invariance(f9):
    rng = random.Random(11)
    for _ in range(100):
        mat = np.array([[rng.randrange(9) for _ in range(2)] for _ in range(4)])
        try:
            line = projgeo.canonical_line(f9, mat)
        except ValueError:
            continue
        # multiply on the right by a random invertible 2x2
        while True:
            g = np.array([[rng.randrange(9) for _ in range(2)] for _ in range(2)])
            if len(gfmat.rref(f9, g)[1]) == 2:
                break
        mixed = gfmat.matmul(f9, mat, g)
        assert projgeo.canonical_line(f9, mixed) == line


def test_canonical_line_rank_deficient(f4):
    with pytest.raises(ValueError):
        projgeo.canonical_line(f4, np.array([[1, 2], [1, 2], [0, 0], [0, 0]]))


def test_line_points_count_and_membership(f4, f9):
    for spec, expect in ((f4, 5), (f9, 10)):
        mat = np.zeros((4, 2), dtype=int)
        mat[0, 0] = 1
        mat[1, 1] = 1
        line = projgeo.canonical_line(spec, mat)
        pts = projgeo.line_points(line)
        assert len(pts) == expect
        assert len(set(pts)) == expect


def test_equal_frames_same_point_set(f4):
    m1 = np.array([[1, 0], [0, 1], [2, 3], [3, 2]])
    g = np.array([[2, 1], [1, 1]])
    m2 = gfmat.matmul(f4, m1, g)
    l1 = projgeo.canonical_line(f4, m1)
    l2 = projgeo.canonical_line(f4, m2)
    assert l1 == l2
    assert set(projgeo.line_points(l1)) == set(projgeo.line_points(l2))


# -- gfmat sanity ----------------------------------------------------------

def test_rref_and_nullspace_roundtrip(f9):
    rng = random.Random(3)
    for _ in range(50):
        M = np.array([[rng.randrange(9) for _ in range(7)] for _ in range(5)])
        R, piv = gfmat.rref(f9, M)
        assert len(piv) == R.shape[0]
        ns = gfmat.right_nullspace(f9, M)
        assert ns.shape[0] == 7 - len(piv)
        if ns.shape[0]:
            prod = gfmat.matmul(f9, M, ns.T)
            assert gfmat.is_zero(prod)


def test_matmul_against_scalar_loop(f9):
    rng = random.Random(5)
    A = np.array([[rng.randrange(9) for _ in range(3)] for _ in range(4)])
    B = np.array([[rng.randrange(9) for _ in range(5)] for _ in range(3)])
    C = gfmat.matmul(f9, A, B)
    for i in range(4):
        for j in range(5):
            acc = 0
            for t in range(3):
                acc = f9.add(acc, f9.mul(int(A[i, t]), int(B[t, j])))
            assert acc == int(C[i, j])


def test_inverse(f9):
    rng = random.Random(9)
    for _ in range(20):
        A = np.array([[rng.randrange(9) for _ in range(4)] for _ in range(4)])
        try:
            Ainv = gfmat.inverse(f9, A)
        except np.linalg.LinAlgError:
            assert len(gfmat.rref(f9, A)[1]) < 4
            continue
        eye = gfmat.matmul(f9, A, Ainv)
        assert (eye == np.eye(4, dtype=int)).all()
