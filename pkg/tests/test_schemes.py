from fractions import Fraction

import numpy as np
import pytest

from hermlab import hermitian as hm, reference_data, schemes, tablematch
from hermlab.cyclo import CycField


@pytest.fixture(scope="module")
def points_scheme(surface2):
    return surface2.schurian_scheme("points")


@pytest.fixture(scope="module")
def lines_scheme(surface2):
    return surface2.schurian_scheme("lines")


@pytest.fixture(scope="module")
def curves_scheme(surface2, orbit2):
    return surface2.schurian_scheme("curves")


@pytest.fixture(scope="module")
def intersection_scheme2(orbit2, ivals2):
    return schemes.scheme_from_invariant(orbit2.items, ivals2)


# --- basic construction and axioms ------------------------------------------

def test_trivial_scheme_on_k3():
    r = np.array([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    s = schemes.Scheme(list("abc"), r)
    assert s.d == 1
    t = schemes.character_table(s)
    assert [[x.as_rational() for x in row] for row in t.P] == [[1, 2], [1, -1]]


def test_constant_invariant_gives_trivial_scheme():
    s = schemes.scheme_from_invariant(list("abc"), lambda a, b: 7)
    assert s.d == 1 and s.class_values == [None, 7]


def test_not_a_scheme_detected():
    # path graph on 3 vertices: common-neighbor counts are not constant
    r = np.array([[0, 1, 2], [1, 0, 1], [2, 1, 0]])
    with pytest.raises(schemes.NotAssociationScheme):
        schemes.Scheme(list("abc"), r)


def test_asymmetric_invariant_rejected():
    vals = np.array([[0, 1, 2], [2, 0, 1], [1, 2, 0]])
    with pytest.raises(ValueError):
        schemes.scheme_from_invariant(list("abc"), vals)


def test_intransitive_action_rejected():
    perms = [np.array([1, 0, 2])]
    with pytest.raises(ValueError):
        schemes.scheme_from_orbitals(list("abc"), perms)


def test_axiom_identities_on_all_constructed_schemes(points_scheme, lines_scheme,
                                                     curves_scheme,
                                                     intersection_scheme2):
    for s in (points_scheme, lines_scheme, curves_scheme, intersection_scheme2):
        d1 = s.d + 1
        for i in range(d1):
            for k in range(d1):
                assert s.p3[i, :, k].sum() == s.valencies[i]
            for j in range(d1):
                expect = s.valencies[i] if j == s.transpose_map[i] else 0
                assert s.p3[i, j, 0] == expect
        assert sum(s.valencies) == s.n


def test_trace_products(points_scheme, curves_scheme):
    for s in (points_scheme, curves_scheme):
        T = s.trace_products()
        d1 = s.d + 1
        assert T[0, 0] == s.n
        for l in range(d1):
            for j in range(d1):
                if j != s.transpose_map[l]:
                    assert T[l, j] == 0
                else:
                    assert T[l, j] == s.n * s.valencies[l]


def test_trace_products_dense_spot_check(curves_scheme):
    T = curves_scheme.trace_products()
    rng = np.random.default_rng(5)
    for _ in range(3):
        l, j = (int(x) for x in rng.integers(0, curves_scheme.d + 1, 2))
        Al = curves_scheme.adjacency_matrix(l).astype(np.float64)
        Aj = curves_scheme.adjacency_matrix(j).astype(np.float64)
        assert abs((Al @ Aj).trace() - T[l, j]) < 1e-9


# --- q=2 intersection scheme vs the published tables -------------------------

def test_intersection_scheme_q2_shape(intersection_scheme2):
    ref = reference_data.INTERSECTION_Q2
    assert intersection_scheme2.n == ref["order"]
    assert intersection_scheme2.d == ref["d"]
    assert intersection_scheme2.class_values[1:] == ref["class_values"]
    assert intersection_scheme2.valencies == ref["valencies"]
    assert intersection_scheme2.is_commutative()
    assert intersection_scheme2.is_symmetric()


def test_intersection_scheme_q2_L_matrices(intersection_scheme2):
    ref = reference_data.INTERSECTION_Q2["L"]
    for L, expect in zip(intersection_scheme2.intersection_matrices(), ref):
        assert L.tolist() == expect


def test_intersection_scheme_q2_eigenmatrices(intersection_scheme2):
    t = schemes.character_table(intersection_scheme2)
    ref = reference_data.INTERSECTION_Q2
    P = [[x.as_rational() for x in row] for row in t.P]
    Q = [[x.as_rational() for x in row] for row in t.Q]
    assert P == ref["P"]
    assert Q == ref["Q"]
    duals = schemes.dual_intersection_matrices(t)
    for D, expect in zip(duals, ref["L_dual"]):
        assert [[Fraction(x) for x in row] for row in D] == \
            [[Fraction(x) for x in row] for row in expect]


def test_intersection_scheme_q2_dense_oracle(intersection_scheme2):
    t = schemes.character_table(intersection_scheme2)
    assert schemes.dense_character_oracle(intersection_scheme2, t) < 1e-6


# --- q=2 Schurian schemes vs the published tables ----------------------------

def test_points_scheme_q2(points_scheme):
    ref = reference_data.POINTS_Q2
    assert points_scheme.n == 45 and points_scheme.d == 2
    t = schemes.character_table(points_scheme)
    hit = tablematch.match_with_conjugation(t, ref["P"], ref["Q"])
    assert hit is not None
    sigma = tablematch.match_intersection_matrices(
        [m.tolist() for m in points_scheme.intersection_matrices()], ref["L"])
    assert sigma is not None
    duals = schemes.dual_intersection_matrices(t)
    sigma_d = tablematch.match_intersection_matrices(duals, ref["L_dual"])
    assert sigma_d is not None


def test_lines_scheme_q2(lines_scheme):
    ref = reference_data.LINES_Q2
    assert lines_scheme.n == 27 and lines_scheme.d == 2
    t = schemes.character_table(lines_scheme)
    hit = tablematch.match_with_conjugation(t, ref["P"], ref["Q"])
    assert hit is not None
    sigma = tablematch.match_intersection_matrices(
        [m.tolist() for m in lines_scheme.intersection_matrices()], ref["L"])
    assert sigma is not None
    duals = schemes.dual_intersection_matrices(t)
    sigma_d = tablematch.match_intersection_matrices(
        duals, ref["L_dual_transposed"], allow_transpose=True)
    assert sigma_d is not None


def test_points_scheme_matches_graphs(points_scheme, surface2, curve_points2,
                                      line_points2):
    """The two nontrivial orbitals are exactly the collinearity graph and its
    complement (the rank-3 property, scheme-side)."""
    from hermlab import graphs
    coll = graphs.collinearity_graph(surface2.points(), line_points2)
    curve_graph = graphs.build_point_curve_graph(surface2.points(), curve_points2)
    rels = [points_scheme.adjacency_matrix(i).astype(bool) for i in (1, 2)]
    adjs = {m.tobytes() for m in rels}
    assert coll.adj.tobytes() in adjs
    assert curve_graph.adj.tobytes() in adjs


def test_curves_scheme_q2_table1(curves_scheme):
    ref = reference_data.CURVES_Q2
    assert curves_scheme.n == 432 and curves_scheme.d == 19
    assert not curves_scheme.is_commutative()
    assert sorted(curves_scheme.valencies) == sorted(ref["valencies"])
    t = schemes.character_table(curves_scheme)
    assert sorted(t.ranks) == sorted(ref["ranks"])
    assert sorted(t.rep_ranks) == sorted(ref["rep_ranks"])
    assert sorted(t.multiplicities) == sorted(ref["multiplicities"])
    hit = tablematch.match_with_conjugation(t, ref["P"], ref["Q"])
    assert hit is not None
    row_map, col_map, conj = hit
    # the matched permutation must carry the metadata across
    for i in range(len(t.P)):
        assert ref["multiplicities"][row_map[i]] == t.multiplicities[i]
        assert ref["ranks"][row_map[i]] == t.ranks[i]
        assert ref["rep_ranks"][row_map[i]] == t.rep_ranks[i]
    for j in range(curves_scheme.d + 1):
        assert ref["valencies"][col_map[j]] == curves_scheme.valencies[j]


def test_curves_scheme_q2_dual_matrices_report(curves_scheme):
    t = schemes.character_table(curves_scheme)
    rep = schemes.dual_intersection_matrices(t)
    assert isinstance(rep, schemes.HadamardClosureReport)


def test_reference_table1_is_internally_consistent():
    """PQ = |V| D for the transcribed d=19 tables (guards transcription)."""
    ref = reference_data.CURVES_Q2
    K = CycField(12)
    P = tablematch.table_to_cyc(K, ref["P"])
    Q = tablematch.table_to_cyc(K, ref["Q"])
    for i in range(14):
        for j in range(14):
            acc = K.zero()
            for l in range(20):
                acc = acc + P[i][l] * Q[l][j]
            expect = K.from_rational(432 * (P[i][0].as_rational() if i == j else 0))
            assert acc == expect, (i, j)


def test_minimal_cyclotomic_order(points_scheme, curves_scheme):
    assert schemes.minimal_cyclotomic_order(points_scheme) == 1  # rational
    assert schemes.minimal_cyclotomic_order(curves_scheme) == 3  # Q(sqrt(-3))


def test_commutativity_flags(points_scheme, lines_scheme, curves_scheme,
                             intersection_scheme2):
    assert schemes.commutativity(points_scheme)
    assert schemes.commutativity(lines_scheme)
    assert schemes.commutativity(intersection_scheme2)
    assert not schemes.commutativity(curves_scheme)


def test_curves_scheme_dense_oracle(curves_scheme):
    t = schemes.character_table(curves_scheme)
    assert schemes.dense_character_oracle(curves_scheme, t) < 1e-6


# --- partition function and conjecture ---------------------------------------

def test_partition_function_values():
    assert schemes.partition_function(0) == 1
    assert [schemes.partition_function(n) for n in range(1, 9)] == \
        [1, 2, 3, 5, 7, 11, 15, 22]
    assert schemes.partition_function(10) == 42
    assert schemes.partition_function(20) == 627


def test_partition_sums():
    assert sum(schemes.partition_function(v) for v in (1, 2, 3, 4, 5)) == 18
    vals = (1, 2, 3, 4, 5, 6, 7, 8, 10, 20)
    assert sum(schemes.partition_function(v) for v in vals) == 735


def test_partition_bound_report():
    rep = schemes.partition_bound([1, 2, 3, 4, 5], 19)
    assert rep.partition_sum == 18
    assert rep.bound == 18  # min(19, 18)


def test_conjecture_check():
    assert schemes.conjecture_check(2, [1, 2, 3, 4, 5]).verdict
    assert schemes.conjecture_check(3, [0, 1, 2, 3, 4, 5, 6, 7, 8, 10]).verdict
    assert not schemes.conjecture_check(2, [1, 2, 3]).verdict


def test_character_table_identity_certificates(points_scheme):
    """The table computation certifies idempotency internally; re-check the
    public outputs here."""
    t = schemes.character_table(points_scheme)
    K = t.field
    n = points_scheme.n
    # sum over idempotent coefficient vectors = identity coordinates
    total = [K.zero()] * (points_scheme.d + 1)
    for vec in t.idempotents:
        total = [a + b for a, b in zip(total, vec)]
    assert total[0] == K.from_rational(1)
    assert all(x.is_zero() for x in total[1:])
    assert sum(t.ranks) == n
    assert sum(m * r for m, r in zip(t.multiplicities, t.rep_ranks)) == n
    assert sum(r * r for r in t.rep_ranks) == points_scheme.d + 1
