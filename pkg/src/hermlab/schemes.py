"""Association schemes: relation partitions, structure constants, and exact
character tables.

A scheme is stored as a relation matrix r: V x V -> {0..d} with R_0 the
diagonal.  Structure constants p^k_{ij} are computed and verified over every
vertex pair with dense integer matmuls.  Character tables are computed in
the regular representation of the (d+1)-dimensional adjacency algebra:
split the center by an exact rational eigenvalue computation (charpoly
factorization, cyclotomic square roots for quadratic factors), build the
primitive idempotents as exact cyclotomic vectors, and read ranks,
multiplicities, P and Q off traces.  Everything is certified by exact
identities (E_i E_j = delta E_i, sum E_i = I, PQ = |V| D).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import sympy

from .cyclo import CycField, CycNum


class NotAssociationScheme(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message + (f" (witness {witness})" if witness else ""))
        self.witness = witness


class CharTableError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# scheme construction and verification
# ---------------------------------------------------------------------------

class Scheme:
    """Verified association scheme.

    ``r`` is the relation matrix; ``p3[i, j, k]`` holds p^k_{ij}, the number
    of z with (x,z) in R_i, (z,y) in R_j for any (x,y) in R_k.
    """

    def __init__(self, labels, r):
        r = np.asarray(r)
        n = r.shape[0]
        if r.shape != (n, n):
            raise ValueError("relation matrix must be square")
        self.labels = list(labels)
        if len(self.labels) != n:
            raise ValueError("label count mismatch")
        self.n = n
        self.r = r
        self.d = int(r.max())
        self._verify_partition()
        self.valencies = self._valencies()
        self.transpose_map = self._transposes()
        self.p3 = self._structure_constants()
        self._verify_axioms()

    # -- construction-time checks -------------------------------------------

    def _verify_partition(self):
        r = self.r
        if (np.diag(r) != 0).any():
            raise NotAssociationScheme("R_0 must be the diagonal")
        off = ~np.eye(self.n, dtype=bool)
        if (r[off] == 0).any():
            i, j = np.argwhere((r == 0) & off)[0]
            raise NotAssociationScheme("off-diagonal pair in R_0", (int(i), int(j)))
        if set(np.unique(r).tolist()) != set(range(self.d + 1)):
            raise NotAssociationScheme("relation indices must be 0..d without gaps")

    def _valencies(self):
        counts = np.stack([(self.r == i).sum(axis=1) for i in range(self.d + 1)])
        if (counts != counts[:, :1]).any():
            i = int(np.argwhere(counts != counts[:, :1])[0][0])
            raise NotAssociationScheme("relation is not regular", i)
        return [int(c) for c in counts[:, 0]]

    def _transposes(self):
        out = []
        rt = self.r.T
        for i in range(self.d + 1):
            mask = self.r == i
            vals = set(np.unique(rt[mask]).tolist())
            if len(vals) != 1:
                raise NotAssociationScheme("transpose of a relation is not a relation", i)
            out.append(int(vals.pop()))
        if any(out[out[i]] != i for i in range(self.d + 1)):
            raise NotAssociationScheme("transpose pairing is not an involution")
        return out

    def _structure_constants(self):
        n, d1 = self.n, self.d + 1
        rflat = self.r.reshape(-1)
        order = np.argsort(rflat, kind="stable")
        sorted_r = rflat[order]
        bounds = np.searchsorted(sorted_r, np.arange(d1 + 1))
        adj = [(self.r == i).astype(np.float64) for i in range(d1)]
        p3 = np.zeros((d1, d1, d1), dtype=np.int64)
        for i in range(d1):
            for j in range(d1):
                m = (adj[i] @ adj[j]).reshape(-1)[order]
                for k in range(d1):
                    seg = m[bounds[k]:bounds[k + 1]]
                    v = seg[0]
                    if seg.size and (seg != v).any():
                        x, y = divmod(int(order[bounds[k] + int(np.argmax(seg != v))]), n)
                        raise NotAssociationScheme(
                            f"p^{k}_{{{i}{j}}} is not constant", (x, y))
                    p3[i, j, k] = int(v)
        return p3

    def _verify_axioms(self):
        d1 = self.d + 1
        for i in range(d1):
            for k in range(d1):
                if self.p3[i, :, k].sum() != self.valencies[i]:
                    raise NotAssociationScheme("row-sum axiom fails", (i, k))
            for j in range(d1):
                expect = self.valencies[i] if j == self.transpose_map[i] else 0
                if self.p3[i, j, 0] != expect:
                    raise NotAssociationScheme("p^0_{ij} axiom fails", (i, j))
        if sum(self.valencies) != self.n:
            raise NotAssociationScheme("valencies do not sum to |V|")

    # -- derived data ---------------------------------------------------------

    def adjacency_matrix(self, i):
        return (self.r == i).astype(np.int64)

    def is_commutative(self):
        return bool((self.p3 == self.p3.transpose(1, 0, 2)).all())

    def is_symmetric(self):
        return all(self.transpose_map[i] == i for i in range(self.d + 1))

    def intersection_matrices(self):
        """L_i with (L_i)_{k,j} = p^k_{ij}."""
        return [np.array([[self.p3[i, j, k] for j in range(self.d + 1)]
                          for k in range(self.d + 1)], dtype=np.int64)
                for i in range(self.d + 1)]

    def trace_products(self):
        """T[l, j] = Tr(A_l A_j) = |V| p^0_{lj}, straight from the constants."""
        d1 = self.d + 1
        return np.array([[self.n * int(self.p3[l, j, 0]) for j in range(d1)]
                         for l in range(d1)], dtype=np.int64)

    def __repr__(self):
        return f"Scheme(order={self.n}, d={self.d})"


def commutativity(scheme: Scheme):
    return scheme.is_commutative()


def adjacency_trace_products(scheme: Scheme):
    return scheme.trace_products()


def intersection_matrices(scheme: Scheme):
    return scheme.intersection_matrices()


def scheme_from_invariant(labels, invariant):
    """Relations from a symmetric pair invariant: classes are indexed by the
    sorted distinct values m_1 < ... < m_d, plus the identity relation."""
    n = len(labels)
    if callable(invariant):
        vals = np.zeros((n, n), dtype=np.int64)
        for a in range(n):
            for b in range(a + 1, n):
                v = invariant(labels[a], labels[b])
                vals[a, b] = vals[b, a] = v
    else:
        vals = np.asarray(invariant)
    off = ~np.eye(n, dtype=bool)
    if (vals[off] != vals.T[off]).any():
        raise ValueError("invariant is not symmetric")
    classes = sorted(set(np.unique(vals[off]).tolist()))
    r = np.zeros((n, n), dtype=np.int16)
    for idx, value in enumerate(classes, start=1):
        r[off & (vals == value)] = idx
    scheme = Scheme(labels, r)
    scheme.class_values = [None] + classes
    return scheme


def scheme_from_orbitals(labels, generators, action=None, key=None):
    """Schurian scheme: relations are the orbits of the diagonal group action
    on V x V, computed through a Schreier transversal of the base vertex.

    ``generators`` are group elements applied through ``action`` (vertex
    identity resolved via ``key`` when the action builds fresh objects), or
    ready-made permutation arrays when ``action`` is None.
    """
    n = len(labels)
    if action is None:
        perms = [np.asarray(g, dtype=np.int64) for g in generators]
    else:
        if key is None:
            key = lambda lab: lab
        index = {key(lab): i for i, lab in enumerate(labels)}
        perms = []
        for g in generators:
            perms.append(np.array([index[key(action(g, lab))] for lab in labels],
                                  dtype=np.int64))

    ident = np.arange(n, dtype=np.int64)
    transversal = {0: ident}
    frontier = [0]
    while frontier:
        fresh = []
        for perm in perms:
            for x in frontier:
                y = int(perm[x])
                if y not in transversal:
                    transversal[y] = perm[transversal[x]]
                    fresh.append(y)
        frontier = fresh
    if len(transversal) != n:
        raise ValueError("action is not transitive on the vertex set")

    inverses = {x: np.argsort(t) for x, t in transversal.items()}
    schreier = {}
    for perm in perms:
        for x in range(n):
            s = inverses[int(perm[x])][perm[transversal[x]]]
            schreier[s.tobytes()] = s
    stab_gens = list(schreier.values())

    # stabilizer orbits on vertices = the base row of the orbital partition
    cls = np.full(n, -1, dtype=np.int64)
    next_class = 0
    for v in range(n):
        if cls[v] >= 0:
            continue
        stack = [v]
        cls[v] = next_class
        while stack:
            x = stack.pop()
            for s in stab_gens:
                y = int(s[x])
                if cls[y] < 0:
                    cls[y] = next_class
                    stack.append(y)
        next_class += 1
    if cls[0] != 0 or int((cls == cls[0]).sum()) != 1:
        raise NotAssociationScheme("base vertex is not alone in its orbital")

    # deterministic class order: identity first, then (valency, min member)
    sizes = np.bincount(cls)
    order = [0] + sorted(range(1, next_class),
                         key=lambda c: (int(sizes[c]), int(np.argmax(cls == c))))
    relabel = np.zeros(next_class, dtype=np.int64)
    for new, old in enumerate(order):
        relabel[old] = new

    r = np.zeros((n, n), dtype=np.int16)
    for x in range(n):
        r[x] = relabel[cls[inverses[x]]]
    return Scheme(labels, r)


# ---------------------------------------------------------------------------
# exact rational / cyclotomic linear algebra on small dense systems
# ---------------------------------------------------------------------------

def _rref_rows(rows, width):
    """In-place RREF for rows of exact scalars (Fraction or CycNum)."""
    rows = [list(r) for r in rows]
    pivots = []
    rank = 0
    for c in range(width):
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = rows[rank][c]
        if inv != 1:
            rows[rank] = [x / inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        pivots.append(c)
        rank += 1
    return rows[:rank], pivots


def _nullspace_rows(rows, width):
    """Canonical basis of {x : rows . x = 0} over Fractions."""
    red, piv = _rref_rows(rows, width)
    pivset = set(piv)
    free = [c for c in range(width) if c not in pivset]
    basis = []
    for f in free:
        vec = [Fraction(0)] * width
        vec[f] = Fraction(1)
        for i, pc in enumerate(piv):
            vec[pc] = -red[i][f]
        basis.append(vec)
    basis, _ = _rref_rows(basis, width)
    return basis


# ---------------------------------------------------------------------------
# character tables
# ---------------------------------------------------------------------------

@dataclass
class CharTable:
    scheme: Scheme
    field: CycField
    P: list            # (r+1) x (d+1) CycNum
    Q: list            # (d+1) x (r+1) CycNum
    ranks: list        # rank(E_i) = m_i n_i
    rep_ranks: list    # n_i
    multiplicities: list  # m_i
    idempotents: list  # (r+1) vectors of CycNum over the A_j basis
    center_basis: list  # rational vectors over the A_j basis
    z_vector: list     # A-coordinates of the separating center element
    z_eigenvalues: list  # omega_i(z), aligned with the idempotents

    @property
    def num_irreducibles(self):
        return len(self.P)

    def diagonal(self):
        """D with D_ii = P_{i,0} (= n_i)."""
        return [row[0] for row in self.P]

    def to_json(self):
        return {
            "cyclotomic_order": self.field.N,
            "P": [[x.to_json() for x in row] for row in self.P],
            "Q": [[x.to_json() for x in row] for row in self.Q],
            "ranks": self.ranks,
            "rep_ranks": self.rep_ranks,
            "multiplicities": self.multiplicities,
        }


N_LADDER = (4, 8, 12, 24)


def character_table(scheme: Scheme, N=12):
    """Exact character table of the adjacency algebra; retries with larger
    cyclotomic order when an eigenvalue does not embed."""
    orders = [N] + [m for m in N_LADDER if m > N]
    last = None
    for order in orders:
        try:
            return _character_table_at(scheme, order)
        except CharTableError as exc:
            last = exc
    raise CharTableError(
        f"eigenvalue recognition failed for every cyclotomic order in {orders}: {last}")


def minimal_cyclotomic_order(scheme: Scheme, orders=(1, 3, 4, 8, 12, 24)):
    """Smallest probed N for which the character table embeds in Q(zeta_N)
    (N=1 means every entry is rational)."""
    for order in orders:
        try:
            _character_table_at(scheme, order)
            return order
        except CharTableError:
            continue
    raise CharTableError(f"no order in {orders} suffices")


def _center_basis(scheme):
    d1 = scheme.d + 1
    rows = []
    for j in range(d1):
        for k in range(d1):
            rows.append([Fraction(int(scheme.p3[i, j, k]) - int(scheme.p3[j, i, k]))
                         for i in range(d1)])
    return _nullspace_rows(rows, d1)


def _character_table_at(scheme, order):
    K = CycField(order)
    d1 = scheme.d + 1
    n = scheme.n
    center = _center_basis(scheme)
    r1 = len(center)
    p3 = scheme.p3

    def alg_mul_rational(u, v):
        out = [Fraction(0)] * d1
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if vj:
                    f = ui * vj
                    for k in range(d1):
                        c = int(p3[i, j, k])
                        if c:
                            out[k] += f * c
        return out

    # express an algebra element (A-coords) in the center basis
    red, piv = _rref_rows([list(c) for c in center], d1)

    def center_coords(vec):
        coords = [Fraction(0)] * r1
        residue = list(vec)
        for i, pc in enumerate(piv):
            coords[i] = residue[pc]
            if coords[i]:
                residue = [x - coords[i] * y for x, y in zip(residue, red[i])]
        if any(residue):
            raise CharTableError("element not in center")
        return coords

    center_red = [list(row) for row in red]  # canonical center basis

    # multiplication-by-z matrices on the center, z = sum t^a c^a
    def mult_matrix(t):
        zvec = [Fraction(0)] * d1
        for a, c in enumerate(center_red):
            w = Fraction(t) ** a
            zvec = [x + w * y for x, y in zip(zvec, c)]
        cols = []
        for a in range(r1):
            prod = alg_mul_rational(zvec, center_red[a])
            cols.append(center_coords(prod))
        m = [[cols[a][b] for a in range(r1)] for b in range(r1)]
        return zvec, m

    eigs = None
    zvec = m_frac = None
    for t in range(1, 40):
        cand_z, cand_m = mult_matrix(t)
        # cheap numeric separation filter before the exact factorization
        approx = np.linalg.eigvals(np.array([[float(x) for x in row]
                                             for row in cand_m]))
        approx = np.sort_complex(approx)
        if r1 > 1 and np.min(np.abs(np.diff(approx))) < 1e-9:
            continue
        roots = _exact_eigenvalues(cand_m, K)
        if roots is None:
            raise CharTableError(f"charpoly factor of degree > 2 at t={t}")
        if len(roots) == r1 and len(set(x.coords for x in roots)) == r1:
            eigs = roots
            zvec, m_frac = cand_z, cand_m
            break
    if eigs is None:
        raise CharTableError("no separating center element found")

    # idempotents: E_i = prod_{j != i} (z - l_j) / (l_i - l_j), evaluated by
    # repeated application of the rational matrix m to the identity element
    ident_c = center_coords([Fraction(1)] + [Fraction(0)] * (d1 - 1))

    def apply_m_cyc(vec):
        out = []
        for r in range(r1):
            acc = K.zero()
            for c in range(r1):
                coef = m_frac[r][c]
                if coef:
                    acc = acc + vec[c] * coef
            out.append(acc)
        return out

    idem_center = []
    for i, li in enumerate(eigs):
        vec = [K.from_rational(c) for c in ident_c]
        for j, lj in enumerate(eigs):
            if j == i:
                continue
            applied = apply_m_cyc(vec)
            scale = (li - lj).inverse()
            vec = [(a - lj * b) * scale for a, b in zip(applied, vec)]
        idem_center.append(vec)

    # exact certificates on the idempotent system
    gamma = _center_structure_constants(center_red, alg_mul_rational, center_coords)
    for i in range(r1):
        ei = idem_center[i]
        if all(x.is_zero() for x in ei):
            raise CharTableError("vanishing idempotent")
        for j in range(i, r1):
            prod = _center_mul(gamma, ei, idem_center[j], K)
            if i == j:
                if prod != ei:
                    raise CharTableError("idempotent fails E^2 = E")
            elif any(not x.is_zero() for x in prod):
                raise CharTableError("idempotents fail E_i E_j = 0")
    total = [K.zero()] * r1
    for ei in idem_center:
        total = [a + b for a, b in zip(total, ei)]
    if total != [K.from_rational(c) for c in ident_c]:
        raise CharTableError("idempotents do not sum to the identity")

    # convert to A-coordinates
    idem = []
    for vec in idem_center:
        acoords = [K.zero()] * d1
        for a, coef in enumerate(vec):
            if coef.is_zero():
                continue
            for k in range(d1):
                b = center_red[a][k]
                if b:
                    acoords[k] = acoords[k] + coef * b
        idem.append(acoords)

    # ranks, representation degrees, multiplicities
    ranks = []
    rep_ranks = []
    for e in idem:
        tr = e[0] * n
        if not tr.is_rational():
            raise CharTableError("rank is not rational")
        rk = tr.as_rational()
        if rk.denominator != 1 or rk <= 0:
            raise CharTableError(f"rank(E) = {rk} is not a positive integer")
        ranks.append(int(rk))
        span_rows = []
        for j in range(d1):
            row = [K.zero()] * d1
            for l in range(d1):
                coef = e[l]
                if coef.is_zero():
                    continue
                for k in range(d1):
                    c = int(p3[l, j, k])
                    if c:
                        row[k] = row[k] + coef * c
            span_rows.append(row)
        _, pivots = _rref_rows(span_rows, d1)
        dim = len(pivots)
        ni = math.isqrt(dim)
        if ni * ni != dim:
            raise CharTableError(f"dim span(E A_j) = {dim} is not a square")
        rep_ranks.append(int(ni))
    mults = []
    for rk, ni in zip(ranks, rep_ranks):
        if rk % ni:
            raise CharTableError("rank(E) not divisible by n_i")
        mults.append(rk // ni)

    # P and Q
    kvals = scheme.valencies
    tmap = scheme.transpose_map
    P = []
    for i, e in enumerate(idem):
        row = []
        for j in range(d1):
            val = e[tmap[j]] * Fraction(n * kvals[j], mults[i])
            row.append(val)
        P.append(row)
    Q = [[idem[i][j] * n for i in range(len(idem))] for j in range(d1)]

    # certificates: P_{i,0} = n_i, PQ = |V| D, Q_{0,i} = rank(E_i)
    for i in range(len(idem)):
        if P[i][0] != K.from_rational(rep_ranks[i]):
            raise CharTableError("P_{i,0} != n_i")
        if Q[0][i] != K.from_rational(ranks[i]):
            raise CharTableError("Q_{0,i} != rank(E_i)")
    for i in range(len(idem)):
        for j in range(len(idem)):
            acc = K.zero()
            for l in range(d1):
                acc = acc + P[i][l] * Q[l][j]
            target = K.from_rational(n * rep_ranks[i]) if i == j else K.zero()
            if acc != target:
                raise CharTableError("PQ != |V| D")

    # deterministic irreducible order: (n_i, m_i, lexicographic P row)
    order_key = [(rep_ranks[i], mults[i], tuple(x.sort_key() for x in P[i]))
                 for i in range(len(idem))]
    perm = sorted(range(len(idem)), key=lambda i: order_key[i])
    P = [P[i] for i in perm]
    idem = [idem[i] for i in perm]
    ranks = [ranks[i] for i in perm]
    rep_ranks = [rep_ranks[i] for i in perm]
    mults = [mults[i] for i in perm]
    eigs = [eigs[i] for i in perm]
    Q = [[idem[i][j] * n for i in range(len(idem))] for j in range(d1)]

    return CharTable(scheme=scheme, field=K, P=P, Q=Q, ranks=ranks,
                     rep_ranks=rep_ranks, multiplicities=mults,
                     idempotents=idem, center_basis=center_red,
                     z_vector=zvec, z_eigenvalues=eigs)


def _center_structure_constants(center_red, alg_mul_rational, center_coords):
    r1 = len(center_red)
    gamma = [[None] * r1 for _ in range(r1)]
    for a in range(r1):
        for b in range(r1):
            gamma[a][b] = center_coords(alg_mul_rational(center_red[a], center_red[b]))
    return gamma


def _center_mul(gamma, u, v, K):
    r1 = len(u)
    out = [K.zero()] * r1
    for a in range(r1):
        if u[a].is_zero():
            continue
        for b in range(r1):
            if v[b].is_zero():
                continue
            f = u[a] * v[b]
            for e in range(r1):
                c = gamma[a][b][e]
                if c:
                    out[e] = out[e] + f * c
    return out


def _exact_eigenvalues(m, K):
    """All eigenvalues of a rational matrix inside Q(zeta_N), or None when an
    irreducible charpoly factor has degree > 2 (recognition failure)."""
    r1 = len(m)
    sm = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row]
                       for row in m])
    lam = sympy.Symbol("lam")
    poly = sm.charpoly(lam)
    roots = []
    for factor, mult in sympy.factor_list(poly.as_expr(), lam)[1]:
        p = sympy.Poly(factor, lam)
        cs = [Fraction(int(c.p), int(c.q)) for c in p.all_coeffs()]
        if p.degree() == 1:
            root = K.from_rational(-cs[1] / cs[0])
            roots.extend([root] * mult)
        elif p.degree() == 2:
            a, b, c = cs
            disc = b * b - 4 * a * c
            sq = K.sqrt_rational(disc)
            if sq is None:
                return None
            inv2a = Fraction(1, 2) / a
            r1_ = (sq - b) * inv2a
            r2_ = (-sq - b) * inv2a
            roots.extend([r1_, r2_] * mult)
        else:
            return None
    return roots


# ---------------------------------------------------------------------------
# dual intersection matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HadamardClosureReport:
    """Emitted for noncommutative schemes, where the idempotent basis is not
    closed under the entrywise product; only Q is meaningful there."""
    reason: str


def dual_intersection_matrices(table: CharTable):
    """L*_i with (L*_i)_{k,j} = q^k_{ij} from the entrywise idempotent
    expansion; only defined for commutative schemes."""
    scheme = table.scheme
    if not scheme.is_commutative():
        return HadamardClosureReport("noncommutative scheme: entrywise products "
                                     "of idempotents do not stay in their span")
    d1 = scheme.d + 1
    n = scheme.n
    K = table.field
    P, Q = table.P, table.Q
    out = []
    for i in range(d1):
        mat = [[None] * d1 for _ in range(d1)]
        for j in range(d1):
            for k in range(d1):
                acc = K.zero()
                for r in range(d1):
                    acc = acc + Q[r][i] * Q[r][j] * P[k][r]
                val = acc * Fraction(1, n)
                if not val.is_rational():
                    raise CharTableError("dual constants must be rational")
                mat[k][j] = val.as_rational()
        out.append([[mat[k][j] for j in range(d1)] for k in range(d1)])
    return out


# ---------------------------------------------------------------------------
# conjecture report and partition bound
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConjectureReport:
    q: int
    class_count: int
    expected: int

    @property
    def verdict(self):
        return self.class_count == self.expected


def conjecture_check(q, class_values):
    """Compare the number of distinct intersection classes with |P^1(F_{q^2})|
    = q^2 + 1."""
    return ConjectureReport(q=q, class_count=len(set(class_values)),
                            expected=q**2 + 1)


def partition_function(n):
    """p(n) by the Euler pentagonal recurrence."""
    if n < 0:
        return 0
    table = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m and g2 > m:
                break
            sign = 1 if k % 2 else -1
            if g1 <= m:
                total += sign * table[m - g1]
            if g2 <= m:
                total += sign * table[m - g2]
            k += 1
        table[m] = total
    return table[n]


@dataclass(frozen=True)
class PartitionBoundReport:
    values: tuple
    d: int
    partition_sum: int
    bound: int  # min(d, sum of partition numbers); an upper bound for the
                # count of classes distinguishable by multiplicity patterns


def partition_bound(values, d):
    s = sum(partition_function(v) for v in values)
    return PartitionBoundReport(values=tuple(values), d=d, partition_sum=s,
                                bound=min(d, s))


# ---------------------------------------------------------------------------
# dense-matrix oracle (used by the verification suite)
# ---------------------------------------------------------------------------

def dense_character_oracle(scheme: Scheme, table: CharTable, tol=1e-8):
    """Recompute ranks, multiplicities, P and Q numerically from the dense
    |V| x |V| adjacency matrices and compare with the exact table.  Returns
    the maximum absolute deviation found."""
    n = scheme.n
    d1 = scheme.d + 1
    adj = [scheme.adjacency_matrix(i).astype(np.complex128) for i in range(d1)]
    # dense copy of the verified separating central element
    z = np.zeros((n, n), dtype=np.complex128)
    for k, c in enumerate(table.z_vector):
        if c:
            z += float(c) * adj[k]
    for a in adj:
        if np.abs(z @ a - a @ z).max() > 1e-6:
            raise AssertionError("dense center element does not commute")
    evals, vecs = np.linalg.eig(z)
    # assign numeric eigenvalues to the certified exact ones; the cluster
    # sizes must reproduce the idempotent ranks
    lams = [complex(x.to_complex()) for x in table.z_eigenvalues]
    assignment = np.array([int(np.argmin([abs(v - l) for l in lams]))
                           for v in evals])
    counts = [int((assignment == i).sum()) for i in range(len(lams))]
    if counts != list(table.ranks):
        raise AssertionError(
            f"eigenvalue multiplicities {counts} != ranks {table.ranks}")
    # spectral projectors P_i = V 1_i V^{-1} from the dense z alone
    vinv = np.linalg.inv(vecs)
    worst = 0.0
    for i in range(len(lams)):
        sel = assignment == i
        proj = vecs[:, sel] @ vinv[sel, :]
        worst = max(worst, float(np.abs(proj @ proj - proj).max()))
        rank = proj.trace().real
        worst = max(worst, abs(rank - table.ranks[i]))
        exact_dense = sum(complex(e.to_complex()) * adj[k]
                          for k, e in enumerate(table.idempotents[i]))
        worst = max(worst, float(np.abs(proj - exact_dense).max()))
        mi = table.multiplicities[i]
        for j in range(d1):
            tr = (proj @ adj[j]).trace() / mi
            worst = max(worst, abs(tr - complex(table.P[i][j].to_complex())))
    if worst > tol:
        raise AssertionError(f"dense oracle deviates by {worst}")
    return worst
