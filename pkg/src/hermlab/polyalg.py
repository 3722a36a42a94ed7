"""Homogeneous polynomial linear algebra over F_{q^2}.

Forms in four variables are coefficient vectors over the lexicographic
monomial basis of their degree.  Substituting a parameterized curve or line
into a form is a linear map (form coefficients -> binary-form coefficients);
its kernel is the degree-d graded piece of the defining ideal.  Intersection
numbers of two curves are computed two independent ways:

* ``intersection_number`` -- Hilbert function of the ideal sum, read off
  graded-piece ranks until the value stabilizes (the length of the
  0-dimensional intersection scheme, multiplicities over the closure
  included).
* ``intersection_number_fast`` -- pull the second curve's equations back to
  the first curve's parameter line and take the degree of the gcd divisor.

The two must agree; the test suite enforces it exhaustively for q=2.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import gfmat


class SameSubschemeError(ValueError):
    """Both arguments cut out the same subscheme (1-dimensional overlap)."""


class InconclusiveError(RuntimeError):
    """Hilbert function failed to stabilize below the degree cap."""


# ---------------------------------------------------------------------------
# monomial bookkeeping (field independent)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def monomials(d):
    """Exponent 4-tuples of total degree d, lexicographically sorted."""
    out = []
    for a in range(d + 1):
        for b in range(d + 1 - a):
            for c in range(d + 1 - a - b):
                out.append((a, b, c, d - a - b - c))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def monomial_index(d):
    return {m: i for i, m in enumerate(monomials(d))}


def num_monomials(d):
    return math.comb(d + 3, 3)


@lru_cache(maxsize=None)
def _degree_of_length(length):
    d = 0
    while num_monomials(d) < length:
        d += 1
    if num_monomials(d) != length:
        raise ValueError(f"{length} is not a monomial-basis size")
    return d


@lru_cache(maxsize=None)
def _dp_arrays(d):
    """For each degree-d monomial: (index of parent in degree d-1, variable
    split off).  The parent is the monomial minus its first nonzero slot."""
    idx_prev = monomial_index(d - 1)
    parents = []
    variables = []
    for m in monomials(d):
        lead = next(i for i in range(4) if m[i])
        parent = list(m)
        parent[lead] -= 1
        parents.append(idx_prev[tuple(parent)])
        variables.append(lead)
    return np.array(parents), np.array(variables)


@lru_cache(maxsize=None)
def _mult_scatter(e, d):
    """Index map for multiplying a degree-e form by each degree-(d-e)
    monomial: scatter[b, a] = position of monomial a*b in degree d."""
    idx_d = monomial_index(d)
    mons_e = monomials(e)
    mons_b = monomials(d - e)
    out = np.zeros((len(mons_b), len(mons_e)), dtype=np.int64)
    for bi, mb in enumerate(mons_b):
        for ai, ma in enumerate(mons_e):
            out[bi, ai] = idx_d[tuple(x + y for x, y in zip(ma, mb))]
    return out


# ---------------------------------------------------------------------------
# substitution of a parameterized curve / line
# ---------------------------------------------------------------------------

class PullbackContext:
    """Substitution matrices S_d for one parameterized object.

    For a 4x4 curve matrix F the coordinates pull back to binary forms of
    degree q+1 supported on t-exponents {0, 1, q, q+1}; for a 4x2 line frame
    they pull back to linear binary forms.  S_d maps form coefficients to
    the coefficients of the degree d*step pullback.
    """

    def __init__(self, spec, mat):
        mat = np.asarray(mat)
        self.spec = spec
        self.mat = mat
        q = spec.base_q
        if mat.shape == (4, 4):
            # coordinate i pulls back to sum_j F[i,j] * v_j with v =
            # (s^{q+1}, s^q t, s t^q, t^{q+1}): t-exponents 0, 1, q, q+1
            self.step = q + 1
            w = np.zeros((4, q + 2), dtype=spec.ADD.dtype)
            w[:, 0] = mat[:, 0]
            w[:, 1] = mat[:, 1]
            w[:, q] = mat[:, 2]
            w[:, q + 1] = mat[:, 3]
            self.w = w
        elif mat.shape == (4, 2):
            self.step = 1
            self.w = mat.copy()
        else:
            raise ValueError("expected a 4x4 curve matrix or 4x2 line frame")
        self._S = {}
        self._pieces = {}

    def S(self, d):
        """Substitution matrix in degree d: (num_monomials(d), d*step + 1)."""
        if d in self._S:
            return self._S[d]
        spec = self.spec
        ADD, MUL = spec.ADD, spec.MUL
        if d == 0:
            S = np.ones((1, 1), dtype=spec.ADD.dtype)
        elif d == 1:
            # row order follows the lex monomial order (0001)=x3 first
            S = self.w[[3, 2, 1, 0]].copy()
        else:
            prev = self.S(d - 1)
            parents, variables = _dp_arrays(d)
            prev_rows = prev[parents]
            wv = self.w[variables]
            width = d * self.step + 1
            S = np.zeros((len(parents), width), dtype=spec.ADD.dtype)
            prev_width = prev.shape[1]
            for off in range(self.w.shape[1]):
                coefs = wv[:, off]
                if not coefs.any():
                    continue
                block = S[:, off:off + prev_width]
                S[:, off:off + prev_width] = ADD[block, MUL[coefs[:, None], prev_rows]]
        self._S[d] = S
        return S

    def rank(self, d):
        return gfmat.rank(self.spec, self.S(d).T)

    def ideal_piece(self, d):
        """Memoized degree-d graded piece of the object's ideal."""
        if d not in self._pieces:
            basis = gfmat.left_nullspace(self.spec, self.S(d))
            self._pieces[d] = GradedPiece(d, basis)
        return self._pieces[d]

    def trim(self, max_degree):
        """Drop cached matrices above max_degree (bulk runs keep contexts
        alive per curve; high-degree Hilbert scratch must not accumulate)."""
        for store in (self._S, self._pieces):
            for d in [d for d in store if d > max_degree]:
                del store[d]


def pullback(spec, form, mat):
    """Substitute the parameterization into ``form`` (degree inferred from
    the coefficient-vector length); returns binary-form coefficients with
    t-exponent ascending."""
    form = np.asarray(form)
    d = _degree_of_length(form.shape[-1])
    ctx = PullbackContext(spec, mat)
    return gfmat.matmul(spec, form.reshape(1, -1), ctx.S(d))[0]


@dataclass(frozen=True)
class GradedPiece:
    """Degree-d slice of a homogeneous ideal as a canonical RREF row basis."""
    degree: int
    basis: np.ndarray  # (dim, num_monomials(degree)) over the field

    @property
    def dim(self):
        return self.basis.shape[0]


def curve_ideal_piece(spec, mat, d, ctx=None):
    """All degree-d forms vanishing identically on the parameterized object."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    if ctx is None:
        ctx = PullbackContext(spec, mat)
    return ctx.ideal_piece(d)


def ideal_pieces(spec, mat, ctx=None):
    """Defining graded pieces: degree 1 for a line, degrees 2..q+1 for a curve."""
    mat = np.asarray(mat)
    if ctx is None:
        ctx = PullbackContext(spec, mat)
    if mat.shape == (4, 2):
        return [curve_ideal_piece(spec, mat, 1, ctx)]
    q = spec.base_q
    return [curve_ideal_piece(spec, mat, d, ctx) for d in range(2, q + 2)]


# ---------------------------------------------------------------------------
# Hilbert functions
# ---------------------------------------------------------------------------

def hilbert_function(spec, pieces, d):
    """Dimension of the degree-d part of the quotient by the ideal the given
    graded pieces generate."""
    rows = []
    for piece in pieces:
        if piece.degree > d or piece.dim == 0:
            continue
        scatter = _mult_scatter(piece.degree, d)
        block = np.zeros((scatter.shape[0] * piece.dim, num_monomials(d)),
                         dtype=spec.ADD.dtype)
        for bi in range(scatter.shape[0]):
            block[bi * piece.dim:(bi + 1) * piece.dim, scatter[bi]] = piece.basis
        rows.append(block)
    if not rows:
        return num_monomials(d)
    stacked = np.concatenate(rows, axis=0)
    return num_monomials(d) - len(gfmat.rref(spec, stacked)[1])


def _unwrap(obj):
    """Accept CurveMatrix / LineFrame objects or raw arrays."""
    spec = getattr(obj, "spec", None)
    mat = getattr(obj, "mat", obj)
    return spec, np.asarray(mat)


STABLE_WINDOW = 3


def intersection_number(c1, c2, cap=None):
    """Length of the scheme-theoretic intersection of two distinct curves or
    lines: the stabilized Hilbert function of the ideal sum (0 when the
    intersection is empty).

    Multiplicities are counted over the algebraic closure (a conjugate pair
    of intersection points contributes its residue degree), so everything
    happens over F_{q^2}.
    """
    return _hilbert_intersection(c1, c2, cap=cap, empty_total=False)


def cone_intersection_number(c1, c2, cap=None):
    """Like ``intersection_number`` except a provably empty projective
    intersection reports the total length of the graded quotient -- the
    multiplicity of the two affine cones at the origin -- instead of 0.

    This is how the degree of the unsaturated ideal sum comes out of
    computer-algebra systems, and the class labels for q >= 3 follow it
    (an empty pair of degree-4 curves has cone multiplicity 20).
    """
    return _hilbert_intersection(c1, c2, cap=cap, empty_total=True)


def _hilbert_intersection(c1, c2, cap, empty_total):
    spec1, m1 = _unwrap(c1)
    spec2, m2 = _unwrap(c2)
    spec = spec1 or spec2
    q = spec.base_q
    if cap is None:
        cap = 6 * (q + 1)
    ctx1 = c1._pullback_ctx() if hasattr(c1, "_pullback_ctx") else PullbackContext(spec, m1)
    ctx2 = c2._pullback_ctx() if hasattr(c2, "_pullback_ctx") else PullbackContext(spec, m2)
    _reject_equal_subschemes(spec, m1, m2, ctx1, ctx2)

    try:
        history = []
        for d in range(0, cap + 1):
            h = _ideal_sum_hilbert(spec, ctx1, ctx2, d)
            history.append(h)
            if h == 0:
                # the ideal sum fills a whole degree: the intersection is empty
                return sum(history) if empty_total else 0
            if len(history) >= STABLE_WINDOW and len(set(history[-STABLE_WINDOW:])) == 1:
                return history[-1]
        raise InconclusiveError(
            f"Hilbert function did not stabilize by degree {cap}: {history}")
    finally:
        ctx1.trim(q + 1)
        ctx2.trim(q + 1)


def _ideal_sum_hilbert(spec, ctx1, ctx2, d):
    S1, S2 = ctx1.S(d), ctx2.S(d)
    r1 = gfmat.rank(spec, S1.T)
    r2 = gfmat.rank(spec, S2.T)
    both = np.concatenate([S1, S2], axis=1)
    r12 = gfmat.rank(spec, both.T)
    return r1 + r2 - r12


def _reject_equal_subschemes(spec, m1, m2, ctx1, ctx2):
    if m1.shape != m2.shape:
        return
    if m1.shape == (4, 2):
        if (m1 == m2).all():
            raise SameSubschemeError("identical lines")
        return
    q = spec.base_q
    for d in range(2, q + 2):
        b1 = curve_ideal_piece(spec, m1, d, ctx1).basis
        b2 = curve_ideal_piece(spec, m2, d, ctx2).basis
        if b1.shape != b2.shape or not (b1 == b2).all():
            return
    raise SameSubschemeError("both matrices parameterize the same curve")


# ---------------------------------------------------------------------------
# parameter-space (gcd) route
# ---------------------------------------------------------------------------

def _poly_deg(u):
    for i in range(len(u) - 1, -1, -1):
        if u[i]:
            return i
    return -1


def _poly_mod_inplace(spec, a, b):
    """a mod b for coefficient lists (ascending powers), b != 0."""
    db = _poly_deg(b)
    inv_lead = spec.inv(b[db])
    da = _poly_deg(a)
    while da >= db:
        c = spec.mul(a[da], inv_lead)
        shift = da - db
        for j in range(db + 1):
            if b[j]:
                a[shift + j] = spec.sub(a[shift + j], spec.mul(c, b[j]))
        da = _poly_deg(a)
    return a


def _poly_gcd(spec, a, b):
    a = list(a)
    b = list(b)
    while _poly_deg(b) >= 0:
        a = _poly_mod_inplace(spec, a, b)
        a, b = b, a
    return a


def intersection_number_fast(c1, c2):
    """Same contract as ``intersection_number`` via the parameter line of the
    first argument: degree of the gcd of the second ideal's pullbacks, plus
    the shared vanishing order at the parameter point at infinity."""
    spec1, m1 = _unwrap(c1)
    spec2, m2 = _unwrap(c2)
    spec = spec1 or spec2
    ctx1 = c1._pullback_ctx() if hasattr(c1, "_pullback_ctx") else PullbackContext(spec, m1)
    ctx2 = c2._pullback_ctx() if hasattr(c2, "_pullback_ctx") else PullbackContext(spec, m2)
    _reject_equal_subschemes(spec, m1, m2, ctx1, ctx2)

    inf_ord = None
    g = None
    for piece in ideal_pieces(spec, m2, ctx2):
        if piece.dim == 0:
            continue
        B = gfmat.matmul(spec, piece.basis, ctx1.S(piece.degree))
        for row in B:
            row = [int(x) for x in row]
            lead = next((j for j, x in enumerate(row) if x), None)
            if lead is None:
                continue  # this equation also vanishes on the first curve
            inf_ord = lead if inf_ord is None else min(inf_ord, lead)
            # univariate part in s: coefficient of s^k is row[D-k]
            u = row[::-1]
            g = u if g is None else _poly_gcd(spec, g, u)
            if _poly_deg(g) == 0 and inf_ord == 0:
                return 0
    if g is None:
        raise SameSubschemeError("every equation of one object vanishes on the other")
    return _poly_deg(g) + inf_ord
