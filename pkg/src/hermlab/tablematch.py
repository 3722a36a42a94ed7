"""Match computed character tables against expected ones up to row/column
permutation and the Galois conjugation of sqrt(-3).

Table orderings are conventions; the comparison searches for a simultaneous
row bijection (irreducibles) and column bijection (relation classes) under
which both P and Q agree entry-exactly, optionally after conjugating the
computed table.  Expected 2-dimensional representation rows are normalized
as n_i * character, so computed rows are scaled before matching.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .cyclo import CycField, CycNum


def entry_to_cyc(K: CycField, entry):
    """Reference-table entry -> CycNum: int/Fraction, or (a, b) = a+b*sqrt(-3)."""
    if isinstance(entry, tuple):
        a, b = entry
        root = K.sqrt_rational(-3)
        if root is None:
            raise ValueError("field does not contain sqrt(-3)")
        return K.from_rational(Fraction(a)) + root * Fraction(b)
    return K.from_rational(Fraction(entry))


def table_to_cyc(K, rows):
    return [[entry_to_cyc(K, x) for x in row] for row in rows]


def conjugate_table(rows):
    return [[x.conjugate() for x in row] for row in rows]


def scaled_P(table):
    """Computed character rows in the published normalization n_i * chi_i."""
    out = []
    for ni, row in zip(table.rep_ranks, table.P):
        out.append([x * ni for x in row])
    return out


def _key(x: CycNum):
    return x.coords


def match_tables(P1, Q1, P2, Q2):
    """Bijections (row_map, col_map) with P2[row_map[i]][col_map[j]] ==
    P1[i][j] and Q2[col_map[j]][row_map[i]] == Q1[j][i], or None."""
    nr = len(P1)
    nc = len(P1[0])
    if len(P2) != nr or len(P2[0]) != nc:
        return None

    # group rows by signature: sorted multiset of P entries + Q column entries
    def row_sig(P, Q, i):
        return (tuple(sorted(_key(x) for x in P[i])),
                tuple(sorted(_key(Q[j][i]) for j in range(nc))))

    sig1 = [row_sig(P1, Q1, i) for i in range(nr)]
    sig2 = [row_sig(P2, Q2, i) for i in range(nr)]
    if sorted(sig1) != sorted(sig2):
        return None
    groups = {}
    for i, s in enumerate(sig2):
        groups.setdefault(s, []).append(i)
    candidates = [groups.get(s, []) for s in sig1]

    for assignment in _assignments(candidates):
        col_map = _match_columns(P1, P2, assignment)
        if col_map is None:
            continue
        if _verify(P1, Q1, P2, Q2, assignment, col_map):
            return assignment, col_map
    return None


def _assignments(candidates):
    """All injective choices assignment[i] in candidates[i]."""
    order = sorted(range(len(candidates)), key=lambda i: len(candidates[i]))
    chosen = [None] * len(candidates)
    used = set()

    def rec(k):
        if k == len(order):
            yield list(chosen)
            return
        i = order[k]
        for c in candidates[i]:
            if c in used:
                continue
            chosen[i] = c
            used.add(c)
            yield from rec(k + 1)
            used.discard(c)
            chosen[i] = None

    yield from rec(0)


def _match_columns(P1, P2, row_map):
    nc = len(P1[0])
    cols2 = {}
    for j in range(nc):
        vec = tuple(_key(P2[row_map[i]][j]) for i in range(len(P1)))
        cols2.setdefault(vec, []).append(j)
    col_map = [None] * nc
    taken = set()
    for j in range(nc):
        vec = tuple(_key(P1[i][j]) for i in range(len(P1)))
        for cand in cols2.get(vec, []):
            if cand not in taken:
                col_map[j] = cand
                taken.add(cand)
                break
        else:
            return None
    return col_map


def _verify(P1, Q1, P2, Q2, row_map, col_map):
    nr, nc = len(P1), len(P1[0])
    for i in range(nr):
        for j in range(nc):
            if P1[i][j] != P2[row_map[i]][col_map[j]]:
                return False
    for j in range(nc):
        for i in range(nr):
            if Q1[j][i] != Q2[col_map[j]][row_map[i]]:
                return False
    return True


def match_with_conjugation(table, expected_P, expected_Q):
    """Match a computed CharTable against expected P/Q data (reference entry
    encoding); tries both Galois embeddings of sqrt(-3).  Returns
    (row_map, col_map, conjugated) or None."""
    K = table.field
    P2 = table_to_cyc(K, expected_P)
    Q2 = table_to_cyc(K, expected_Q)
    P1 = scaled_P(table)
    Q1 = table.Q
    hit = match_tables(P1, Q1, P2, Q2)
    if hit is not None:
        return hit[0], hit[1], False
    hit = match_tables(conjugate_table(P1),
                       [[x.conjugate() for x in row] for row in Q1], P2, Q2)
    if hit is not None:
        return hit[0], hit[1], True
    return None


def match_intersection_matrices(computed, expected, allow_transpose=False):
    """Find one class permutation sigma with computed_L_i[k][j] ==
    expected_L_{sigma(i)}[sigma(k)][sigma(j)] for all i, k, j; the lists,
    rows and columns all carry the same class indexing.  With
    ``allow_transpose`` a per-matrix transposed match is also accepted (the
    published dual tables for the line scheme use the transposed layout)."""
    d1 = len(computed)
    if len(expected) != d1:
        return None
    comp = [[[Fraction(x) for x in row] for row in m] for m in computed]
    exp = [[[Fraction(x) for x in row] for row in m] for m in expected]
    # the permutation must preserve the total entry sum of each L_i
    # ((d+1) * valency resp. multiplicity), which is transpose-invariant
    sums_c = [sum(sum(row) for row in m) for m in comp]
    sums_e = [sum(sum(row) for row in m) for m in exp]
    cands = [[j for j in range(d1) if sums_e[j] == sums_c[i]] for i in range(d1)]
    for sigma in _assignments(cands):
        ok = True
        for i in range(d1):
            direct = all(comp[i][k][j] == exp[sigma[i]][sigma[k]][sigma[j]]
                         for k in range(d1) for j in range(d1))
            if direct:
                continue
            if allow_transpose and all(
                    comp[i][k][j] == exp[sigma[i]][sigma[j]][sigma[k]]
                    for k in range(d1) for j in range(d1)):
                continue
            ok = False
            break
        if ok:
            return sigma
    return None
