"""Exact arithmetic in the finite-field tower F_p < F_q < F_{q^2} < F_{q^{2m}}.

Elements are integer codes: 0 is the zero element, and code c >= 1 stands
for g^(c-1) where g is the class of x modulo the (primitive) defining
polynomial.  This makes the integer code identical to the serialized form
(0 for zero, else 1 + discrete log).

Two backends exist:

* ``FieldSpec`` -- table mode.  Zech logarithms drive addition; for small
  fields full ``ADD``/``MUL`` numpy tables are materialized so that bulk
  linear algebra can run as fancy-indexing on integer arrays.
* ``GenericField`` -- coefficient-vector mode for fields too large for
  tables.  Elements are tuples over F_p; only scalar operations.

The Frobenius x -> x^q of the quadratic subextension is a first-class
operation (``frobenius_q``) because every Hermitian computation needs it.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
import sympy

TABLE_LIMIT = 1 << 16        # largest field order handled in table mode
DENSE_LIMIT = 1 << 12        # below this, dense N x N add/mul tables are built
GENERIC_LIMIT = 1 << 24      # hard cap for coefficient-vector mode


# ---------------------------------------------------------------------------
# polynomial helpers over F_p (dense coefficient lists, constant term first)
# ---------------------------------------------------------------------------

def _poly_mulmod(a, b, mod, p):
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    return _poly_reduce(res, mod, p)


def _poly_reduce(a, mod, p):
    a = list(a)
    e = len(mod) - 1
    for i in range(len(a) - 1, e - 1, -1):
        c = a[i]
        if c:
            a[i] = 0
            for j in range(e):
                a[i - e + j] = (a[i - e + j] - c * mod[j]) % p
    while len(a) < e:
        a.append(0)
    return a[:e]


def _poly_powmod(a, n, mod, p):
    result = [1] + [0] * (len(mod) - 2)
    base = _poly_reduce(a, mod, p)
    while n:
        if n & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        n >>= 1
    return result


def _is_one(vec):
    return vec[0] == 1 and not any(vec[1:])


def _x_has_full_order(mod, p, e, factors):
    """True iff x generates a cyclic group of order p^e - 1 mod ``mod``."""
    if mod[0] == 0:
        return False  # x divides the modulus
    n = p**e - 1
    x = _poly_reduce([0, 1], mod, p)
    if not _is_one(_poly_powmod(x, n, mod, p)):
        return False
    for ell in factors:
        if _is_one(_poly_powmod(x, n // ell, mod, p)):
            return False
    return True


def is_irreducible(mod, p):
    """Rabin irreducibility test for a monic polynomial over F_p."""
    e = len(mod) - 1
    if e < 1 or mod[-1] != 1:
        return False
    x = _poly_reduce([0, 1], mod, p)
    xq = _poly_powmod(x, p**e, mod, p)
    if xq != _poly_reduce([0, 1], mod, p):
        return False
    for ell in sorted({f for f in sympy.factorint(e)}):
        d = e // ell
        xd = _poly_powmod(x, p**d, mod, p)
        diff = [(a - b) % p for a, b in zip(xd, x)]
        if _poly_gcd_is_nontrivial(diff, mod, p):
            return False
    return True


def _poly_gcd_is_nontrivial(a, b, p):
    a = _trim(a)
    b = _trim(b)
    while b:
        a, b = b, _trim(_poly_mod(a, b, p))
    return len(a) > 1


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, b, p):
    a = list(a)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b) and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        c = (a[-1] * inv_lead) % p
        shift = len(a) - len(b)
        for j, bj in enumerate(b):
            a[shift + j] = (a[shift + j] - c * bj) % p
        a.pop()
    return a


def least_primitive_modulus(p, e):
    """Lexicographically least monic degree-e polynomial over F_p whose root
    generates the multiplicative group (coefficients ordered constant term
    upward, F_p ordered 0..p-1)."""
    n = p**e - 1
    factors = sorted(sympy.factorint(n))
    for packed in range(p**e):
        coeffs = []
        v = packed
        for i in range(e):              # constant term is the most significant
            unit = p**(e - 1 - i)
            coeffs.append(v // unit)
            v %= unit
        mod = coeffs + [1]
        if _x_has_full_order(mod, p, e, factors):
            return tuple(mod)
    raise ArithmeticError(f"no primitive polynomial of degree {e} over F_{p}")


# ---------------------------------------------------------------------------
# table-mode field
# ---------------------------------------------------------------------------

class FieldSpec:
    """F_{p^e} with discrete-log integer codes and (for small orders) dense
    numpy operation tables.

    ``base_q`` records the declared subfield size q for the Frobenius
    x -> x^q; by default q = p^(e//2) when e is even (the F_{q^2} reading).
    """

    def __init__(self, p, e, modulus=None, base_q=None):
        if not sympy.isprime(p):
            raise ValueError(f"p={p} is not prime")
        if e < 1:
            raise ValueError("extension degree must be >= 1")
        order = p**e
        if order > TABLE_LIMIT:
            raise ValueError(
                f"order {order} exceeds table mode limit {TABLE_LIMIT}; "
                "use GenericField")
        self.p = p
        self.e = e
        self.order = order
        self.modulus = tuple(modulus) if modulus else least_primitive_modulus(p, e)
        if len(self.modulus) != e + 1 or self.modulus[e] != 1:
            raise ValueError("modulus must be monic of degree e")
        if base_q is None and e % 2 == 0:
            base_q = p ** (e // 2)
        self.base_q = base_q
        self._build_tables()

    def _build_tables(self):
        p, e, n = self.p, self.e, self.order
        # exp table: coefficient vector of g^k
        vecs = [None] * (n - 1)
        cur = _poly_reduce([1], self.modulus, p)
        for k in range(n - 1):
            vecs[k] = tuple(cur)
            cur = _poly_mulmod(cur, [0, 1], self.modulus, p)
        if tuple(cur) != vecs[0]:
            raise ValueError("modulus is not primitive")
        if len(set(vecs)) != n - 1:
            raise ValueError("modulus is not primitive (repeated powers)")
        self._exp_vecs = vecs
        packed = {v: k for k, v in enumerate(vecs)}

        def pack(vec):
            acc = 0
            for c in reversed(vec):
                acc = acc * p + c
            return acc

        self._code_by_packed = {0: 0}
        for k, v in enumerate(vecs):
            self._code_by_packed[pack(v)] = k + 1
        self._pack = pack

        # Zech logarithm: zech[k] = log(1 + g^k), or -1 when 1 + g^k = 0
        zech = np.full(n - 1, -1, dtype=np.int64)
        one = vecs[0]
        for k, v in enumerate(vecs):
            s = tuple((a + b) % p for a, b in zip(one, v))
            code = self._code_by_packed[pack(s)]
            zech[k] = code - 1 if code else -1
        self._zech = zech

        # -1 as a code
        if p == 2:
            self._neg_one = 1  # code of 1
        else:
            self._neg_one = 1 + (n - 1) // 2

        if n <= DENSE_LIMIT:
            self._build_dense()
        else:
            self.ADD = self.MUL = self.INV = self.NEG = None
            self.FROBQ = None

    def _build_dense(self):
        n = self.order
        dtype = np.int16 if n < (1 << 15) else np.int32
        codes = np.arange(n, dtype=dtype)
        MUL = np.zeros((n, n), dtype=dtype)
        logs = np.arange(n - 1, dtype=np.int64)
        prod = 1 + (logs[:, None] + logs[None, :]) % (n - 1)
        MUL[1:, 1:] = prod.astype(dtype)
        self.MUL = MUL

        ADD = np.zeros((n, n), dtype=dtype)
        ADD[0, :] = codes
        ADD[:, 0] = codes
        z = self._zech
        for a in range(1, n):
            i = a - 1
            row = np.empty(n - 1, dtype=np.int64)
            d = (logs - i) % (n - 1)
            zd = z[d]
            row = np.where(zd < 0, 0, 1 + (i + zd) % (n - 1))
            ADD[a, 1:] = row.astype(dtype)
        self.ADD = ADD

        NEG = np.zeros(n, dtype=dtype)
        for a in range(1, n):
            NEG[a] = self.mul(a, self._neg_one)
        self.NEG = NEG

        INV = np.zeros(n, dtype=dtype)
        INV[1] = 1
        for a in range(2, n):
            INV[a] = 1 + (n - 1 - (a - 1)) % (n - 1)
        self.INV = INV

        if self.base_q:
            q = self.base_q
            FROBQ = np.zeros(n, dtype=dtype)
            for a in range(1, n):
                FROBQ[a] = 1 + ((a - 1) * q) % (n - 1)
            self.FROBQ = FROBQ
        else:
            self.FROBQ = None

    # -- scalar ops on integer codes ---------------------------------------

    def add(self, a, b):
        if a == 0:
            return b
        if b == 0:
            return a
        i, j = a - 1, b - 1
        d = (j - i) % (self.order - 1)
        zd = self._zech[d]
        if zd < 0:
            return 0
        return 1 + (i + zd) % (self.order - 1)

    def neg(self, a):
        if a == 0 or self.p == 2:
            return a
        return self.mul(a, self._neg_one)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return 1 + (a - 1 + b - 1) % (self.order - 1)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 + (self.order - 1 - (a - 1)) % (self.order - 1)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k):
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 0
        return 1 + ((a - 1) * k) % (self.order - 1)

    def frobenius_q(self, a):
        """x -> x^q for the declared base q."""
        if self.base_q is None:
            raise ValueError("spec has no declared base subfield")
        return self.pow(a, self.base_q)

    def norm_q(self, a):
        """x -> x^(q+1), the norm onto F_q inside F_{q^2}."""
        return self.pow(a, self.base_q + 1)

    @property
    def neg_one(self):
        return self._neg_one

    @property
    def generator(self):
        return 2 if self.order > 2 else 1

    # -- coefficient vectors ------------------------------------------------

    def to_vec(self, a):
        """Coefficient tuple over F_p (constant term first)."""
        if a == 0:
            return (0,) * self.e
        return self._exp_vecs[a - 1]

    def from_vec(self, vec):
        return self._code_by_packed[self._pack(tuple(c % self.p for c in vec))]

    def element_order(self, a):
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        n = self.order - 1
        k = a - 1
        import math
        return n // math.gcd(n, k)

    # -- misc ---------------------------------------------------------------

    def elements(self):
        return range(self.order)

    def to_json(self):
        return {"p": self.p, "e": self.e, "modulus": list(self.modulus)}

    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus))

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        return f"FieldSpec(p={self.p}, e={self.e}, order={self.order})"


@lru_cache(maxsize=None)
def build_field(p, e, base_q=None):
    """Field with the lexicographically least primitive modulus (cached)."""
    return FieldSpec(p, e, base_q=base_q)


@lru_cache(maxsize=None)
def quadratic_tower(q):
    """(F_q spec, F_{q^2} spec) for a prime power q, plus recorded embedding.

    The F_{q^2} spec declares q as its Frobenius base.
    """
    p, f = _prime_power(q)
    sub = build_field(p, f)
    sup = FieldSpec(p, 2 * f, base_q=q)
    return sub, sup


def _prime_power(q):
    fac = sympy.factorint(q)
    if len(fac) != 1:
        raise ValueError(f"q={q} is not a prime power")
    (p, f), = fac.items()
    return p, f


@lru_cache(maxsize=None)
def embedding(sub: FieldSpec, sup: FieldSpec):
    """Integer-code map realizing the canonical F_{p^a} -> F_{p^b} embedding.

    The generator of the subfield goes to the least-code root of the
    subfield modulus inside the superfield, which makes the map unique and
    reproducible.  Returns a numpy array of length sub.order.
    """
    if sub.p != sup.p or sup.e % sub.e:
        raise ValueError("no embedding: incompatible orders")
    if sub.order == sup.order:
        if sub.modulus != sup.modulus:
            raise ValueError("equal order, different modulus")
        return np.arange(sub.order, dtype=np.int64)
    root = None
    step = (sup.order - 1) // (sub.order - 1)
    for k in range(0, sup.order - 1, 1):
        if k % step:
            continue
        cand = 1 + k
        acc = 0
        # evaluate sub.modulus at cand inside sup
        powc = 1
        for coeff in sub.modulus:
            if coeff:
                term = sup.mul(_small_int(sup, coeff), powc)
                acc = sup.add(acc, term)
            powc = sup.mul(powc, cand)
        if acc == 0:
            root = cand
            break
    if root is None:
        raise ArithmeticError("modulus has no root in the superfield")
    table = np.zeros(sub.order, dtype=np.int64)
    for a in range(1, sub.order):
        table[a] = sup.pow(root, a - 1)
    return table


def _small_int(spec, m):
    """The image of the integer m (as an element of the prime field)."""
    acc = 0
    one = 1
    for _ in range(m % spec.p):
        acc = spec.add(acc, one)
    return acc


# ---------------------------------------------------------------------------
# rho with rho^(q+1) = -1  (used by the standard curve and line frames)
# ---------------------------------------------------------------------------

def find_rho(spec: FieldSpec):
    """Least-code solution of x^(q+1) = -1 in F_{q^2}."""
    q = spec.base_q
    if q is None:
        raise ValueError("find_rho needs an F_{q^2} spec with declared base")
    target = spec.neg_one
    for a in range(1, spec.order):
        if spec.pow(a, q + 1) == target:
            return a
    raise ArithmeticError("norm equation unsolvable (impossible)")


def find_rho_pair(spec: FieldSpec):
    """Two distinct solutions of x^(q+1) = -1 (there are q+1 of them)."""
    q = spec.base_q
    target = spec.neg_one
    found = []
    for a in range(1, spec.order):
        if spec.pow(a, q + 1) == target:
            found.append(a)
            if len(found) == 2:
                return tuple(found)
    raise ArithmeticError("fewer than two norm solutions (impossible for q >= 2)")


@lru_cache(maxsize=None)
def _norm_root_table(spec: FieldSpec):
    q = spec.base_q
    table = np.zeros(spec.order, dtype=np.int64)
    for c in range(spec.order - 1, 0, -1):
        table[spec.pow(c, q + 1)] = c
    return table


def norm_root(spec: FieldSpec, target):
    """Least-code c with c^(q+1) = target; 0 only for target 0."""
    if spec.base_q is None:
        raise ValueError("norm_root needs an F_{q^2} spec with declared base")
    c = int(_norm_root_table(spec)[target])
    if c == 0 and target != 0:
        raise ArithmeticError("target is not a norm (not in F_q)")
    return c


# ---------------------------------------------------------------------------
# element wrapper
# ---------------------------------------------------------------------------

class FieldElem:
    """Operator-sugar wrapper around (spec, integer code)."""

    __slots__ = ("spec", "code")

    def __init__(self, spec, code):
        self.spec = spec
        self.code = int(code)

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.spec is not self.spec and other.spec != self.spec:
                raise ValueError("elements from different fields")
            return other.code
        if isinstance(other, int):
            return _small_int(self.spec, other)
        return NotImplemented

    def __add__(self, other):
        c = self._coerce(other)
        return FieldElem(self.spec, self.spec.add(self.code, c))

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        return FieldElem(self.spec, self.spec.sub(self.code, c))

    def __mul__(self, other):
        c = self._coerce(other)
        return FieldElem(self.spec, self.spec.mul(self.code, c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = self._coerce(other)
        return FieldElem(self.spec, self.spec.div(self.code, c))

    def __neg__(self):
        return FieldElem(self.spec, self.spec.neg(self.code))

    def __pow__(self, k):
        return FieldElem(self.spec, self.spec.pow(self.code, k))

    def frobenius_q(self):
        return FieldElem(self.spec, self.spec.frobenius_q(self.code))

    def inverse(self):
        return FieldElem(self.spec, self.spec.inv(self.code))

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.spec == other.spec and self.code == other.code
        if isinstance(other, int):
            return self.code == _small_int(self.spec, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.spec.p, self.spec.e, self.code))

    def __repr__(self):
        if self.code == 0:
            return "0"
        if self.code == 1:
            return "1"
        return f"g^{self.code - 1}"


def frobenius_q(x: FieldElem):
    return x.frobenius_q()


def enumerate_field(spec):
    """All p^e elements, zero first then ascending powers of the generator."""
    return [FieldElem(spec, c) for c in range(spec.order)]


# ---------------------------------------------------------------------------
# generic (coefficient-vector) mode
# ---------------------------------------------------------------------------

class GenericField:
    """Coefficient-vector arithmetic in F_{p^e}; order capped at 2^24.

    Elements are tuples over F_p, constant term first.  Kept deliberately
    simple: this backend exists for oracle cross-checks and for extensions
    too large for Zech tables.
    """

    def __init__(self, p, e, modulus=None, base_q=None):
        if not sympy.isprime(p):
            raise ValueError(f"p={p} is not prime")
        if p**e > GENERIC_LIMIT:
            raise ValueError(f"order {p**e} exceeds generic-mode cap {GENERIC_LIMIT}")
        self.p = p
        self.e = e
        self.order = p**e
        self.modulus = tuple(modulus) if modulus else least_primitive_modulus(p, e)
        if base_q is None and e % 2 == 0:
            base_q = p ** (e // 2)
        self.base_q = base_q

    def zero(self):
        return (0,) * self.e

    def one(self):
        return (1,) + (0,) * (self.e - 1)

    def gen(self):
        if self.e == 1:
            return ((-self.modulus[0]) % self.p,)
        return (0, 1) + (0,) * (self.e - 2)

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        return tuple(_poly_mulmod(list(a), list(b), list(self.modulus), self.p))

    def pow(self, a, k):
        if not any(a):
            if k == 0:
                return self.one()
            if k < 0:
                raise ZeroDivisionError
            return self.zero()
        k %= self.order - 1
        return tuple(_poly_powmod(list(a), k, list(self.modulus), self.p))

    def inv(self, a):
        if not any(a):
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.order - 2)

    def frobenius_q(self, a):
        if self.base_q is None:
            raise ValueError("no declared base subfield")
        return self.pow(a, self.base_q)

    def elements(self):
        """All elements in the same order as table mode (zero, then g^k)."""
        out = [self.zero()]
        cur = self.one()
        g = self.gen()
        for _ in range(self.order - 1):
            out.append(cur)
            cur = self.mul(cur, g)
        return out
