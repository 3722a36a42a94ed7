"""Frozen q=2 verification targets.

Expected eigenmatrices, intersection matrices, dual intersection matrices
and character tables for the q=2 schemes, as published for this family of
combinatorial structures.  Entries are ints, Fractions, or (a, b) pairs
standing for a + b*sqrt(-3).  The verification suite compares computed
tables against these up to the documented row/column permutation and the
Galois conjugation of sqrt(-3).
"""

from fractions import Fraction

F = Fraction

# --- intersection scheme on the 432 curves: d = 5 --------------------------

INTERSECTION_Q2 = {
    "order": 432,
    "d": 5,
    "class_values": [1, 2, 3, 4, 5],
    "valencies": [1, 5, 120, 180, 120, 6],
    "P": [
        [1, 5, 120, 180, 120, 6],
        [1, 5, 60, 0, -60, -6],
        [1, 5, -24, 36, -24, 6],
        [1, 5, 12, -36, 12, 6],
        [1, 5, -12, 0, 12, -6],
        [1, -1, 0, 0, 0, 0],
    ],
    "Q": [
        [1, 6, 15, 20, 30, 360],
        [1, 6, 15, 20, 30, -72],
        [1, 3, -3, 2, -3, 0],
        [1, 0, 3, -4, 0, 0],
        [1, -3, -3, 2, 3, 0],
        [1, -6, 15, 20, -30, 0],
    ],
    "L": [
        [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0],
         [0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1]],
        [[0, 5, 0, 0, 0, 0], [1, 4, 0, 0, 0, 0], [0, 0, 5, 0, 0, 0],
         [0, 0, 0, 5, 0, 0], [0, 0, 0, 0, 5, 0], [0, 0, 0, 0, 0, 5]],
        [[0, 0, 120, 0, 0, 0], [0, 0, 120, 0, 0, 0], [1, 5, 54, 54, 6, 0],
         [0, 0, 36, 48, 36, 0], [0, 0, 6, 54, 54, 6], [0, 0, 0, 0, 120, 0]],
        [[0, 0, 0, 180, 0, 0], [0, 0, 0, 180, 0, 0], [0, 0, 54, 72, 54, 0],
         [1, 5, 48, 72, 48, 6], [0, 0, 54, 72, 54, 0], [0, 0, 0, 180, 0, 0]],
        [[0, 0, 0, 0, 120, 0], [0, 0, 0, 0, 120, 0], [0, 0, 6, 54, 54, 6],
         [0, 0, 36, 48, 36, 0], [1, 5, 54, 54, 6, 0], [0, 0, 120, 0, 0, 0]],
        [[0, 0, 0, 0, 0, 6], [0, 0, 0, 0, 0, 6], [0, 0, 0, 0, 6, 0],
         [0, 0, 0, 6, 0, 0], [0, 0, 6, 0, 0, 0], [1, 5, 0, 0, 0, 0]],
    ],
    "L_dual": [
        [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0],
         [0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1]],
        [[0, 6, 0, 0, 0, 0], [1, 0, 0, 5, 0, 0], [0, 0, 0, 0, 6, 0],
         [0, F(3, 2), 0, 0, F(9, 2), 0], [0, 0, 3, 3, 0, 0], [0, 0, 0, 0, 0, 6]],
        [[0, 0, 15, 0, 0, 0], [0, 0, 0, 0, 15, 0], [1, 0, 6, 8, 0, 0],
         [0, 0, 6, 9, 0, 0], [0, 3, 0, 0, 12, 0], [0, 0, 0, 0, 0, 15]],
        [[0, 0, 0, 20, 0, 0], [0, 5, 0, 0, 15, 0], [0, 0, 8, 12, 0, 0],
         [1, 0, 9, 10, 0, 0], [0, 3, 0, 0, 17, 0], [0, 0, 0, 0, 0, 20]],
        [[0, 0, 0, 0, 30, 0], [0, 0, 15, 15, 0, 0], [0, 6, 0, 0, 24, 0],
         [0, F(9, 2), 0, 0, F(51, 2), 0], [1, 0, 12, 17, 0, 0], [0, 0, 0, 0, 0, 30]],
        [[0, 0, 0, 0, 0, 360], [0, 0, 0, 0, 0, 360], [0, 0, 0, 0, 0, 360],
         [0, 0, 0, 0, 0, 360], [0, 0, 0, 0, 0, 360], [1, 6, 15, 20, 30, 288]],
    ],
}

# --- Schurian scheme on the 45 points: d = 2 --------------------------------

POINTS_Q2 = {
    "order": 45,
    "d": 2,
    "P": [[1, 32, 12], [1, 2, -3], [1, -4, 3]],
    "Q": [[1, 24, 20], [1, F(3, 2), F(-5, 2)], [1, -6, 5]],
    "L": [
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[0, 32, 0], [1, 22, 9], [0, 24, 8]],
        [[0, 0, 12], [0, 9, 3], [1, 8, 3]],
    ],
    "L_dual": [
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[0, 24, 0], [1, F(21, 2), F(25, 2)], [0, 15, 9]],
        [[0, 0, 20], [0, F(25, 2), F(15, 2)], [1, 9, 10]],
    ],
}

# --- Schurian scheme on the 27 lines: d = 2 ---------------------------------
# The published dual intersection matrices for this scheme are transposed
# relative to the convention the points tables use; the comparison helper
# accepts them either way.

LINES_Q2 = {
    "order": 27,
    "d": 2,
    "P": [[1, 10, 16], [1, 1, -2], [1, -5, 4]],
    "Q": [[1, 20, 6], [1, 2, -3], [1, F(-5, 2), F(3, 2)]],
    "L": [
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[0, 10, 0], [1, 1, 8], [0, 5, 5]],
        [[0, 0, 16], [0, 8, 8], [1, 5, 10]],
    ],
    "L_dual_transposed": [
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[0, 1, 0], [20, F(29, 2), 15], [0, F(9, 2), 5]],
        [[0, 0, 1], [0, F(9, 2), 5], [6, F(3, 2), 0]],
    ],
}

# --- Schurian scheme on the 432 curves: d = 19, noncommutative ---------------
# (a, b) means a + b*sqrt(-3).  P rows here are normalized so that row i of
# the 2-dimensional representations carries n_i * (character); the honest
# character rows are these divided by the leading entry over n_i.

CURVES_Q2 = {
    "order": 432,
    "d": 19,
    "valencies": [1, 1, 20, 20, 5, 10, 20, 20, 10, 5, 10, 10,
                  30, 30, 30, 30, 30, 30, 60, 60],
    "ranks": [1, 30, 60, 5, 5, 81, 6, 24, 40, 40, 20, 30, 30, 60],
    "rep_ranks": [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2],
    "multiplicities": [1, 30, 60, 5, 5, 81, 6, 24, 40, 40, 20, 30, 15, 30],
    "P": [
        [1, 1, 20, 20, 5, 10, 20, 20, 10, 5, 10, 10,
         30, 30, 30, 30, 30, 30, 60, 60],
        [1, 1, (-4, -2), (-4, -2), -1, (1, -2), (-4, 2), (-4, 2), (1, 2), -1,
         (1, -2), (1, 2), 3, 0, 3, 0, 3, 3, 0, 0],
        [1, -1, 2, -2, 1, -1, -2, 2, 1, -1, 1, -1, -3, -6, 3, 6, 3, -3, 0, 0],
        [1, -1, (8, -4), (-8, 4), 1, (2, 4), (-8, -4), (8, 4), (-2, 4), -1,
         (-2, -4), (2, -4), -6, 18, 6, -18, 6, -6, (0, 12), (0, -12)],
        [1, -1, (8, 4), (-8, -4), 1, (2, -4), (-8, 4), (8, -4), (-2, -4), -1,
         (-2, 4), (2, 4), -6, 18, 6, -18, 6, -6, (0, -12), (0, 12)],
        [1, 1, 2, 2, -1, -1, 2, 2, -1, -1, -1, -1, -1, -4, -1, -4, -1, -1, 4, 4],
        [1, -1, -10, 10, -5, 5, 10, -10, -5, 5, -5, 5, -15, 0, 15, 0, 15, -15, 0, 0],
        [1, 1, 2, 2, -1, 4, 2, 2, 4, -1, 4, 4, -6, 6, -6, 6, -6, -6, -6, -6],
        [1, -1, (-1, -1), (1, 1), 1, (2, 1), (1, -1), (-1, 1), (-2, 1), -1,
         (-2, -1), (2, -1), 3, 0, -3, 0, -3, 3, (0, -6), (0, 6)],
        [1, -1, (-1, 1), (1, -1), 1, (2, -1), (1, 1), (-1, -1), (-2, -1), -1,
         (-2, 1), (2, 1), 3, 0, -3, 0, -3, 3, (0, 6), (0, -6)],
        [1, 1, 2, 2, 5, 1, 2, 2, 1, 5, 1, 1, 3, -6, 3, -6, 3, 3, -12, -12],
        [1, 1, (-4, 2), (-4, 2), -1, (1, 2), (-4, -2), (-4, -2), (1, -2), -1,
         (1, 2), (1, -2), 3, 0, 3, 0, 3, 3, 0, 0],
        [4, 4, -4, -4, 8, -14, -4, -4, -14, 8, -14, -14, -6, 36, -6, 36, -6, -6, 0, 0],
        [4, -4, -4, 4, -8, -10, 4, -4, 10, 8, 10, -10, 6, 12, -6, -12, -6, 6, 0, 0],
    ],
    "Q": [
        [1, 30, 60, 5, 5, 81, 6, 24, 40, 40, 20, 30, 30, 60],
        [1, 30, -60, -5, -5, 81, -6, 24, -40, -40, 20, 30, 30, -60],
        [1, (-6, 3), 6, (2, 1), (2, -1), F(81, 10), -3, F(12, 5), (-2, 2),
         (-2, -2), 2, (-6, -3), F(-3, 2), -3],
        [1, (-6, 3), -6, (-2, -1), (-2, 1), F(81, 10), 3, F(12, 5), (2, -2),
         (2, 2), 2, (-6, -3), F(-3, 2), 3],
        [1, -6, 12, 1, 1, F(-81, 5), -6, F(-24, 5), 8, 8, 20, -6, 12, -24],
        [1, (3, 6), -6, (1, -2), (1, 2), F(-81, 10), 3, F(48, 5), (8, -4),
         (8, 4), 2, (3, -6), F(-21, 2), -15],
        [1, (-6, -3), -6, (-2, 1), (-2, -1), F(81, 10), 3, F(12, 5), (2, 2),
         (2, -2), 2, (-6, 3), F(-3, 2), 3],
        [1, (-6, -3), 6, (2, -1), (2, 1), F(81, 10), -3, F(12, 5), (-2, -2),
         (-2, 2), 2, (-6, 3), F(-3, 2), -3],
        [1, (3, -6), 6, (-1, -2), (-1, 2), F(-81, 10), -3, F(48, 5), (-8, -4),
         (-8, 4), 2, (3, 6), F(-21, 2), 15],
        [1, -6, -12, -1, -1, F(-81, 5), 6, F(-24, 5), -8, -8, 20, -6, 12, 24],
        [1, (3, 6), 6, (-1, 2), (-1, -2), F(-81, 10), -3, F(48, 5), (-8, 4),
         (-8, -4), 2, (3, -6), F(-21, 2), 15],
        [1, (3, -6), -6, (1, 2), (1, -2), F(-81, 10), 3, F(48, 5), (8, 4),
         (8, -4), 2, (3, 6), F(-21, 2), -15],
        [1, 3, -6, -1, -1, F(-27, 10), -3, F(-24, 5), 4, 4, 2, 3, F(-3, 2), 3],
        [1, 0, -12, 3, 3, F(-54, 5), 0, F(24, 5), 0, 0, -4, 0, 9, 6],
        [1, 3, 6, 1, 1, F(-27, 10), 3, F(-24, 5), -4, -4, 2, 3, F(-3, 2), -3],
        [1, 0, 12, -3, -3, F(-54, 5), 0, F(24, 5), 0, 0, -4, 0, 9, -6],
        [1, 3, 6, 1, 1, F(-27, 10), 3, F(-24, 5), -4, -4, 2, 3, F(-3, 2), -3],
        [1, 3, -6, -1, -1, F(-27, 10), -3, F(-24, 5), 4, 4, 2, 3, F(-3, 2), 3],
        [1, 0, 0, (0, -1), (0, 1), F(27, 5), 0, F(-12, 5), (0, 4), (0, -4),
         -4, 0, 0, 0],
        [1, 0, 0, (0, 1), (0, -1), F(27, 5), 0, F(-12, 5), (0, -4), (0, 4),
         -4, 0, 0, 0],
    ],
}
