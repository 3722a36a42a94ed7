"""The Fermat--Hermitian surface over F_{q^2} and its unitary symmetry.

The surface is the zero locus of x0^(q+1) + x1^(q+1) + x2^(q+1) + x3^(q+1),
equivalently the isotropic points of the sesquilinear form
b(u, v) = sum u_i v_i^q.  This module enumerates rational points, the lines
contained in the surface, and the orbit of the standard degree-(q+1)
rational curve under the projective unitary group, with canonical keys that
make orbit BFS and downstream combinatorics deterministic.
"""

from __future__ import annotations

import itertools
import random

import numpy as np

from . import gf, gfmat, polyalg, projgeo

SUPPORTED_Q = (2, 3, 4, 5)


def group_order(q):
    """|PGU_4(F_{q^2})| = q^6 (q^2-1) (q^3+1) (q^4-1)."""
    return q**6 * (q**2 - 1) * (q**3 + 1) * (q**4 - 1)


def point_count(q):
    return (q**3 + 1) * (q**2 + 1)


def line_count(q):
    return (q**3 + 1) * (q + 1)


def curve_count(q):
    return q**4 * (q**3 + 1) * (q**2 - 1)


# ---------------------------------------------------------------------------
# the Hermitian form
# ---------------------------------------------------------------------------

def hermitian_form(spec, u, v):
    """b(u, v) = sum_i u_i v_i^q; b(p, p) = 0 is the Fermat equation."""
    acc = 0
    for ui, vi in zip(u, v):
        acc = spec.add(acc, spec.mul(int(ui), spec.frobenius_q(int(vi))))
    return acc


def gram_target(spec):
    """The Gram matrix every conforming curve frame must satisfy:
    antidiagonal -1 at the corners, 1 at the two center slots."""
    m = np.zeros((4, 4), dtype=spec.ADD.dtype)
    m[0, 3] = m[3, 0] = spec.neg_one
    m[1, 1] = m[2, 2] = 1
    return m


def frame_gram(spec, mat):
    """F^T F^(q) for a 4xk matrix of field codes."""
    mat = np.asarray(mat)
    fq = spec.FROBQ[mat]
    return gfmat.matmul(spec, mat.T, fq)


# ---------------------------------------------------------------------------
# curve frames
# ---------------------------------------------------------------------------

class CurveMatrix:
    """4x4 frame F parameterizing a degree-(q+1) rational curve on the
    surface; satisfies F^T F^(q) = gram_target."""

    __slots__ = ("spec", "mat", "_ctx")

    def __init__(self, spec, mat, check=True):
        self.spec = spec
        m = np.asarray(mat, dtype=spec.ADD.dtype).copy()
        m.setflags(write=False)
        self.mat = m
        self._ctx = None
        if check:
            g = frame_gram(spec, m)
            if not (g == gram_target(spec)).all():
                raise ValueError("frame does not satisfy the Gram condition")

    def _pullback_ctx(self):
        if self._ctx is None:
            self._ctx = polyalg.PullbackContext(self.spec, self.mat)
        return self._ctx

    def __repr__(self):
        return f"CurveMatrix({self.mat.tolist()})"

    def to_json(self):
        return self.mat.tolist()


def construct_FJ(q):
    """Standard conforming frame: isotropic pair scaled so they pair to -1,
    completed by an orthonormal pair from the orthogonal complement."""
    _, spec = gf.quadratic_tower(q)
    rho, rho2 = gf.find_rho_pair(spec)
    e0 = np.array([1, rho, 0, 0], dtype=np.int64)
    e3 = np.array([1, rho2, 0, 0], dtype=np.int64)
    pairing = hermitian_form(spec, e0, e3)
    # scale e3 by mu with mu^q * pairing = -1
    mu = spec.pow(spec.div(spec.neg_one, pairing), q)
    e3 = np.array([spec.mul(mu, int(x)) for x in e3])

    # orthogonal complement: b(e, u) = 0 is linear in u^(q)
    rows = np.array([e0, e3])
    w = gfmat.right_nullspace(spec, rows)
    basis = [np.array([spec.frobenius_q(int(x)) for x in row]) for row in w]
    u1, u2 = basis
    if hermitian_form(spec, u1, u1) == 0:
        for c in range(1, spec.order):
            cand = np.array([spec.add(int(a), spec.mul(c, int(b)))
                             for a, b in zip(u1, u2)])
            if hermitian_form(spec, cand, cand) != 0:
                u1 = cand
                break
    u1 = _scale_to_unit_norm(spec, u1)
    alpha = spec.frobenius_q(hermitian_form(spec, u1, u2))
    u2 = np.array([spec.sub(int(b), spec.mul(alpha, int(a)))
                   for a, b in zip(u1, u2)])
    u2 = _scale_to_unit_norm(spec, u2)

    mat = np.stack([e0, u1, u2, e3], axis=1)
    return CurveMatrix(spec, mat)


def _scale_to_unit_norm(spec, v):
    n = hermitian_form(spec, v, v)
    if n == 0:
        raise ArithmeticError("isotropic vector cannot be normalized")
    c = gf.norm_root(spec, spec.inv(n))
    return np.array([spec.mul(c, int(x)) for x in v])


def standard_line(q):
    """The line (s, t, rho*s, rho*t) with rho^(q+1) = -1; lies on the surface."""
    _, spec = gf.quadratic_tower(q)
    rho = gf.find_rho(spec)
    mat = np.array([[1, 0], [0, 1], [rho, 0], [0, rho]])
    return projgeo.canonical_line(spec, mat)


def disjoint_line_pair(q):
    """Two disjoint lines x0 = rho*x1, x2 = rho*x3 for two different rho."""
    _, spec = gf.quadratic_tower(q)
    r1, r2 = gf.find_rho_pair(spec)
    mats = [np.array([[r, 1, 0, 0], [0, 0, r, 1]]).T for r in (r1, r2)]
    return tuple(projgeo.canonical_line(spec, m) for m in mats)


def _p1_param_vectors(spec):
    """v(s, t) = (s^{q+1}, s^q t, s t^q, t^{q+1}) for canonical (s:t)."""
    q = spec.base_q
    cols = []
    for s, t in projgeo._p1_params(spec):
        cols.append([spec.mul(spec.pow(s, q), s),
                     spec.mul(spec.pow(s, q), t),
                     spec.mul(s, spec.pow(t, q)),
                     spec.mul(spec.pow(t, q), t)])
    return np.array(cols, dtype=spec.ADD.dtype).T  # 4 x (q^2+1)


def parameterize(curve: CurveMatrix, param):
    """Image point of (s:t); (1:0) and (0:1) give the outer frame columns."""
    spec = curve.spec
    s, t = param
    if s == 0 and t == 0:
        raise ValueError("(0:0) is not a parameter")
    q = spec.base_q
    v = [spec.mul(spec.pow(s, q), s), spec.mul(spec.pow(s, q), t),
         spec.mul(s, spec.pow(t, q)), spec.mul(spec.pow(t, q), t)]
    coords = gfmat.matvec(spec, curve.mat, np.array(v))
    return projgeo.normalize(spec, coords)


def curve_rational_points(curve: CurveMatrix):
    """The q^2+1 rational points (the parameterization is injective)."""
    spec = curve.spec
    pts = _curve_point_columns(spec, curve.mat)
    out = [projgeo.normalize(spec, pts[:, j]) for j in range(pts.shape[1])]
    if len(set(out)) != spec.order + 1:
        raise ValueError("parameterization produced duplicate points")
    return out


def _curve_point_columns(spec, mat):
    return gfmat.matmul(spec, np.asarray(mat), _param_matrix(spec))


_PARAM_CACHE = {}


def _param_matrix(spec):
    key = (spec.p, spec.e)
    if key not in _PARAM_CACHE:
        _PARAM_CACHE[key] = _p1_param_vectors(spec)
    return _PARAM_CACHE[key]


_EXT_CACHE = {}


def _extension_tools(spec):
    """(F_{q^4} spec, embedding table, parameter matrix) for the fast
    point-set curve key.  Over F_{q^2} alone two distinct curves can share
    every rational point (the maximal-intersection partner), so the key
    evaluates the parameterization over F_{q^4} where q^4+1 points cannot
    all coincide."""
    key = (spec.p, spec.e)
    if key not in _EXT_CACHE:
        ext = gf.FieldSpec(spec.p, 2 * spec.e, base_q=spec.base_q)
        emb = gf.embedding(spec, ext)
        _EXT_CACHE[key] = (ext, emb, _p1_param_vectors(ext))
    return _EXT_CACHE[key]


def curve_prekey(spec, mat):
    """Fast orbit-dedup key: sorted packed point set over F_{q^4}.  Orbit
    enumeration still re-validates cardinality with the ideal-based key."""
    ext, emb, params = _extension_tools(spec)
    pts = gfmat.matmul(ext, emb[np.asarray(mat)], params)
    lead = (pts != 0).argmax(axis=0)
    leading = pts[lead, np.arange(pts.shape[1])]
    scaled = ext.MUL[pts, ext.INV[leading][None, :]]
    n = ext.order
    packed = ((scaled[0].astype(np.int64) * n + scaled[1]) * n + scaled[2]) * n + scaled[3]
    packed.sort()
    return packed.tobytes()


def curve_key(spec, mat, ctx=None):
    """Canonical curve identity: concatenated RREF bases of the ideal's
    graded pieces in degrees 2..q+1.  Projectively equal curves collide."""
    if ctx is None:
        ctx = polyalg.PullbackContext(spec, mat)
    parts = []
    for piece in polyalg.ideal_pieces(spec, mat, ctx):
        parts.append(np.int64(piece.degree).tobytes())
        parts.append(np.int64(piece.dim).tobytes())
        parts.append(np.ascontiguousarray(piece.basis, dtype=np.int16).tobytes())
    return b"".join(parts)


# ---------------------------------------------------------------------------
# unitary group elements
# ---------------------------------------------------------------------------

class GroupElem:
    """Projective unitary similitude: A^T A^(q) = lambda I, canonically
    scaled so the first nonzero entry (row-major) is 1."""

    __slots__ = ("spec", "mat", "_key")

    def __init__(self, spec, mat, check=True):
        self.spec = spec
        m = np.asarray(mat, dtype=spec.ADD.dtype)
        flat = m.reshape(-1)
        lead = int((flat != 0).argmax())
        if flat[lead] != 1:
            m = spec.MUL[m, spec.INV[flat[lead]]]
        m = m.copy()
        m.setflags(write=False)
        self.mat = m
        self._key = m.tobytes()
        if check and self.similitude_factor() is None:
            raise ValueError("matrix is not a unitary similitude")

    def similitude_factor(self):
        """lambda in F_q^x with A^T A^(q) = lambda I, or None."""
        g = frame_gram(self.spec, self.mat)
        lam = int(g[0, 0])
        if lam == 0 or self.spec.frobenius_q(lam) != lam:
            return None
        target = np.diag(np.full(4, lam, dtype=g.dtype))
        return lam if (g == target).all() else None

    def __mul__(self, other):
        return GroupElem(self.spec, gfmat.matmul(self.spec, self.mat, other.mat),
                         check=False)

    def inverse(self):
        return GroupElem(self.spec, gfmat.inverse(self.spec, self.mat), check=False)

    def __eq__(self, other):
        return isinstance(other, GroupElem) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    @property
    def key(self):
        return self._key

    def __repr__(self):
        return f"GroupElem({self.mat.tolist()})"


def act_on_point(g: GroupElem, point: projgeo.ProjPoint):
    coords = gfmat.matvec(g.spec, g.mat, np.array(point.coords))
    return projgeo.normalize(g.spec, coords)


def act_on_line(g: GroupElem, line: projgeo.LineFrame):
    return projgeo.canonical_line(g.spec, gfmat.matmul(g.spec, g.mat, line.mat))


def act_on_curve(g: GroupElem, curve: CurveMatrix, check=False):
    """g.F rescaled so the Gram condition is restored: multiply by the least
    c with c^(q+1) = lambda^{-1}."""
    spec = g.spec
    m = gfmat.matmul(spec, g.mat, curve.mat)
    lam = _gram_entry_11(spec, m)
    if lam == 0:
        raise ValueError("degenerate image frame")
    c = gf.norm_root(spec, spec.inv(lam))
    if c != 1:
        m = spec.MUL[m, c]
    return CurveMatrix(spec, m, check=check)


def _gram_entry_11(spec, m):
    col = m[:, 1]
    acc = 0
    for x in col:
        acc = spec.add(acc, spec.mul(int(x), spec.frobenius_q(int(x))))
    return acc


# ---------------------------------------------------------------------------
# generators of the unitary group
# ---------------------------------------------------------------------------

def _transposition(spec, i, j):
    m = np.eye(4, dtype=int)
    m[[i, j]] = m[[j, i]]
    return GroupElem(spec, m)


def _diag_root_of_unity(spec, q):
    alpha = spec.pow(spec.generator, q - 1)  # order q+1; alpha^(q+1) = 1
    m = np.eye(4, dtype=int)
    m[0, 0] = alpha
    return GroupElem(spec, m)


def _dense_unitary_block(spec, q):
    """Non-monomial 2x2 unitary embedded in coordinates 0, 1; absent for
    q = 2 where every norm-1 vector is monomial."""
    for a in range(2, spec.order):
        na = spec.norm_q(a)
        for c in range(2, spec.order):
            if spec.add(na, spec.norm_q(c)) == 1:
                b = spec.frobenius_q(spec.neg(c))
                d = spec.frobenius_q(a)
                m = np.eye(4, dtype=int)
                m[0, 0], m[0, 1], m[1, 0], m[1, 1] = a, b, c, d
                return GroupElem(spec, m)
    return None


def random_unitary(spec, rng):
    """Random matrix with b-orthonormal columns (Gram-Schmidt completion)."""
    cols = []
    while len(cols) < 4:
        v = [rng.randrange(spec.order) for _ in range(4)]
        for u in cols:
            alpha = spec.frobenius_q(hermitian_form(spec, u, v))
            v = [spec.sub(int(x), spec.mul(alpha, int(y))) for x, y in zip(v, u)]
        if hermitian_form(spec, v, v) == 0 or not any(v):
            continue
        cols.append(_scale_to_unit_norm(spec, np.array(v)))
    return GroupElem(spec, np.stack(cols, axis=1))


AUGMENT_BUDGET = 16


def unitary_generators(q, seed=0):
    """Validated generator list: coordinate transpositions, a diagonal
    (q+1)-st root of unity, a dense 2x2 unitary block where one exists, plus
    seeded random unitaries until the point and line orbits have the sizes
    they must have.  The curve orbit is validated during curve enumeration."""
    _, spec = gf.quadratic_tower(q)
    gens = [_transposition(spec, 0, 1), _transposition(spec, 1, 2),
            _transposition(spec, 2, 3), _diag_root_of_unity(spec, q)]
    block = _dense_unitary_block(spec, q)
    if block is not None:
        gens.append(block)
    rng = random.Random(seed)
    for _ in range(AUGMENT_BUDGET):
        if _generators_act_transitively(spec, q, gens):
            return gens
        gens.append(random_unitary(spec, rng))
    raise ArithmeticError(
        f"failed to generate a transitive unitary group for q={q} "
        f"within {AUGMENT_BUDGET} augmentations")


def _generators_act_transitively(spec, q, gens):
    seed_pt = parameterize(construct_FJ(q), (1, 0))
    pts = enumerate_orbit(seed_pt, gens, lambda p: p.coords, act_on_point,
                          cap=4 * point_count(q))
    if len(pts.items) != point_count(q):
        return False
    lines = enumerate_orbit(standard_line(q), gens, lambda l: l.key, act_on_line,
                            cap=4 * line_count(q))
    return len(lines.items) == line_count(q)


# ---------------------------------------------------------------------------
# orbit enumeration
# ---------------------------------------------------------------------------

class OrbitCapExceeded(RuntimeError):
    pass


class OrbitResult:
    """Deterministically ordered orbit with per-generator permutations."""

    def __init__(self, items, keys, gen_perms):
        self.items = items
        self.keys = keys
        self.index = {k: i for i, k in enumerate(keys)}
        self.gen_perms = gen_perms

    def __len__(self):
        return len(self.items)


def enumerate_orbit(seed, generators, key_fn, act_fn, cap=10**6, sort_keys=None):
    """BFS closure of the seed under the generators.

    ``key_fn`` must be injective on the orbit (validated by callers against
    closed-form counts).  The result is sorted by key -- or by
    ``sort_keys(items)`` when a different canonical order is wanted -- and
    includes the permutation each generator induces.
    """
    k0 = key_fn(seed)
    index_bfs = {k0: 0}
    items_bfs = [seed]
    hits = [[] for _ in generators]
    frontier = [0]
    while frontier:
        fresh = []
        for gi, g in enumerate(generators):
            hit = hits[gi]
            while len(hit) < len(items_bfs):
                hit.append(None)
            for xi in frontier:
                y = act_fn(g, items_bfs[xi])
                k = key_fn(y)
                pos = index_bfs.get(k)
                if pos is None:
                    pos = len(items_bfs)
                    index_bfs[k] = pos
                    items_bfs.append(y)
                    fresh.append(pos)
                    if pos + 1 > cap:
                        raise OrbitCapExceeded(f"orbit exceeded cap {cap}")
                hit[xi] = k
        frontier = fresh
    for gi in range(len(generators)):
        hit = hits[gi]
        while len(hit) < len(items_bfs):
            hit.append(None)
        for xi in range(len(items_bfs)):
            if hit[xi] is None:
                hit[xi] = key_fn(act_fn(generators[gi], items_bfs[xi]))

    if sort_keys is None:
        final_keys = list(index_bfs.keys())
    else:
        final_keys = sort_keys(items_bfs)
    order = sorted(range(len(items_bfs)), key=lambda i: final_keys[i])
    pos_of_bfs = {b: s for s, b in enumerate(order)}
    items = [items_bfs[b] for b in order]
    keys = [final_keys[b] for b in order]
    gen_perms = []
    for gi in range(len(generators)):
        perm = np.zeros(len(items), dtype=np.int64)
        for b in range(len(items_bfs)):
            perm[pos_of_bfs[b]] = pos_of_bfs[index_bfs[hits[gi][b]]]
        gen_perms.append(perm)
    return OrbitResult(items, keys, gen_perms)


# ---------------------------------------------------------------------------
# the surface
# ---------------------------------------------------------------------------

class HermitianSurface:
    """Rational points, lines, and the standard curve orbit for one q.

    Everything heavy is computed lazily and kept; the object is immutable
    afterwards and safe to share.
    """

    def __init__(self, q, seed=0, cache_dir=None):
        if q not in SUPPORTED_Q:
            raise ValueError(f"q must be one of {SUPPORTED_Q}")
        self.q = q
        self.subfield, self.field = gf.quadratic_tower(q)
        self._points = None
        self._point_index = None
        self._lines = None
        self._generators = None
        self._curve_orbit = None
        self._seed = seed
        self.cache_dir = cache_dir

    # -- points -------------------------------------------------------------

    def points(self):
        if self._points is None:
            cached = self._cache_load("points")
            if cached is not None:
                self._points = cached
                return self._points
            spec = self.field
            pts = [p for p in projgeo.enumerate_proj(spec, 3)
                   if hermitian_form(spec, p.coords, p.coords) == 0]
            if len(pts) != point_count(self.q):
                raise AssertionError("surface point count mismatch")
            self._points = pts
            self._cache_save("points", pts)
        return self._points

    def _cache_load(self, kind):
        if not self.cache_dir:
            return None
        from . import cache
        return cache.load(self.cache_dir, self, kind)

    def _cache_save(self, kind, items):
        if self.cache_dir:
            from . import cache
            cache.save(self.cache_dir, self, kind, items)

    def point_index(self):
        if self._point_index is None:
            self._point_index = {p: i for i, p in enumerate(self.points())}
        return self._point_index

    # -- lines --------------------------------------------------------------

    def lines(self):
        if self._lines is None:
            cached = self._cache_load("lines")
            if cached is not None:
                self._lines = cached
            else:
                self._lines = self._enumerate_lines()
                self._cache_save("lines", self._lines)
        return self._lines

    def _enumerate_lines(self):
        spec = self.field
        pts = self.points()
        coords = np.array([p.coords for p in pts], dtype=spec.ADD.dtype)
        frob = spec.FROBQ[coords]
        seen = {}
        order = []
        for i, p in enumerate(pts):
            # b(p, x) over all points x at once
            acc = np.zeros(len(pts), dtype=spec.ADD.dtype)
            for k in range(4):
                acc = spec.ADD[acc, spec.MUL[int(p.coords[k]), frob[:, k]]]
            mates = set(np.nonzero((acc == 0))[0].tolist()) - {i}
            mates = {j for j in mates if j > i}
            while mates:
                j = min(mates)
                frame = np.stack([p.coords, pts[j].coords], axis=1)
                line = projgeo.canonical_line(spec, frame)
                if line.key not in seen:
                    seen[line.key] = line
                    order.append(line)
                member_idx = {self.point_index()[x] for x in projgeo.line_points(line)}
                mates -= member_idx
        if len(order) != line_count(self.q):
            raise AssertionError("surface line count mismatch")
        return sorted(order, key=lambda l: l.key)

    def line_index(self):
        return {l: i for i, l in enumerate(self.lines())}

    # -- group and curve orbit ----------------------------------------------

    def generators(self):
        if self._generators is None:
            self._generators = unitary_generators(self.q, seed=self._seed)
        return self._generators

    def standard_curve(self):
        return construct_FJ(self.q)

    def curve_orbit(self, use_prekey=True):
        """Orbit of the standard curve, sorted by the ideal-based canonical
        key, with generator permutations.  Runs a fast point-set key first
        and falls back to the ideal key if the cardinality check fails."""
        if self._curve_orbit is not None:
            return self._curve_orbit
        spec = self.field
        expected = curve_count(self.q)
        cached = self._cache_load("curves")
        if cached is not None:
            self._curve_orbit = self._orbit_from_items(cached)
            return self._curve_orbit
        seed_curve = self.standard_curve()
        gens = self.generators()
        cap = 2 * expected

        def ideal_sort(items):
            return [curve_key(spec, c.mat, c._pullback_ctx()) for c in items]

        res = None
        if use_prekey:
            res = enumerate_orbit(seed_curve, gens,
                                  key_fn=lambda c: curve_prekey(spec, c.mat),
                                  act_fn=act_on_curve, cap=cap,
                                  sort_keys=ideal_sort)
            if len(res) != expected or len(set(res.keys)) != expected:
                res = None  # point-set key collided; redo with the real key
        if res is None:
            res = enumerate_orbit(seed_curve, gens,
                                  key_fn=lambda c: curve_key(spec, c.mat),
                                  act_fn=act_on_curve, cap=cap)
            if len(res) != expected:
                raise AssertionError(
                    f"curve orbit has {len(res)} elements, expected {expected}")
            if len(set(res.keys)) != expected:
                raise AssertionError("curve keys collided on the orbit")
        # admit new members only after verifying the Gram invariant held up
        for c in (res.items[0], res.items[-1]):
            if not (frame_gram(spec, c.mat) == gram_target(spec)).all():
                raise AssertionError("Gram condition violated on the orbit")
        self._curve_orbit = res
        self._cache_save("curves", res.items)
        return res

    def _orbit_from_items(self, items):
        """Rebuild an OrbitResult (keys + generator permutations) from cached
        canonical-order curve frames."""
        spec = self.field
        keys = [curve_key(spec, c.mat, c._pullback_ctx()) for c in items]
        if len(set(keys)) != len(items):
            raise AssertionError("cached curves have colliding keys")
        prekeys = [curve_prekey(spec, c.mat) for c in items]
        if len(set(prekeys)) == len(items):
            lookup = {k: i for i, k in enumerate(prekeys)}
            key_of = lambda c: curve_prekey(spec, c.mat)
        else:
            lookup = {k: i for i, k in enumerate(keys)}
            key_of = lambda c: curve_key(spec, c.mat)
        gens = self.generators()
        perms = []
        for g in gens:
            perm = np.array([lookup[key_of(act_on_curve(g, c))] for c in items],
                            dtype=np.int64)
            perms.append(perm)
        res = OrbitResult(items, keys, perms)
        return res

    def group_order(self):
        return group_order(self.q)

    # -- schemes --------------------------------------------------------------

    def schurian_scheme(self, kind):
        """Orbital scheme on points, lines, or curves."""
        from . import schemes
        gens = self.generators()
        if kind == "points":
            return schemes.scheme_from_orbitals(self.points(), gens, act_on_point)
        if kind == "lines":
            return schemes.scheme_from_orbitals(self.lines(), gens, act_on_line)
        if kind == "curves":
            orbit = self.curve_orbit()
            return schemes.scheme_from_orbitals(list(range(len(orbit))),
                                                orbit.gen_perms)
        raise ValueError(f"unknown kind {kind!r}")

    def intersection_scheme(self, method="fast", jobs=1):
        """Scheme on the curve orbit classed by intersection number."""
        from . import bulk, schemes
        orbit = self.curve_orbit()
        vals = bulk.pairwise_matrix(orbit, method=method, jobs=jobs)
        return schemes.scheme_from_invariant(orbit.items, vals)


def surface_points(q):
    """All F_{q^2}-rational points of the surface ((q^3+1)(q^2+1) of them)."""
    return HermitianSurface(q).points()


def surface_lines(q):
    """All lines contained in the surface ((q^3+1)(q+1) of them)."""
    return HermitianSurface(q).lines()


# ---------------------------------------------------------------------------
# explicit group closure and Schreier machinery (small q diagnostics)
# ---------------------------------------------------------------------------

def group_closure(gens, cap=200000):
    """All products of the generators (projective canonical forms)."""
    els = {g.key: g for g in gens}
    frontier = list(els.values())
    while frontier:
        fresh = []
        for g in gens:
            for h in frontier:
                prod = g * h
                if prod.key not in els:
                    els[prod.key] = prod
                    fresh.append(prod)
                    if len(els) > cap:
                        raise OrbitCapExceeded(f"group closure exceeded {cap}")
        frontier = fresh
    return list(els.values())


def schreier_stabilizer_gens(orbit: OrbitResult, gen_mats, base=0):
    """Stabilizer generators of the base vertex from the orbit's generator
    permutations: t(g x)^(-1) g t(x), deduplicated by canonical matrix."""
    n = len(orbit)
    transversal = {base: None}  # base -> identity (None)
    words = {base: ()}
    frontier = [base]
    while frontier:
        fresh = []
        for gi, perm in enumerate(orbit.gen_perms):
            for x in frontier:
                y = int(perm[x])
                if y not in words:
                    words[y] = words[x] + (gi,)
                    fresh.append(y)
        frontier = fresh
    if len(words) != n:
        raise ValueError("generators are not transitive on the orbit")

    spec = gen_mats[0].spec
    ident = GroupElem(spec, np.eye(4, dtype=int), check=False)

    def mat_of(word):
        m = ident
        for gi in word:
            m = gen_mats[gi] * m
        return m

    t_mats = {x: mat_of(w) for x, w in words.items()}
    out = {}
    for gi, perm in enumerate(orbit.gen_perms):
        for x in range(n):
            y = int(perm[x])
            s = t_mats[y].inverse() * gen_mats[gi] * t_mats[x]
            out[s.key] = s
    return list(out.values())
