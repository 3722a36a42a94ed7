"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are coordinate vectors of Fractions over the power basis
1, zeta, ..., zeta^(phi(N)-1) reduced by the N-th cyclotomic polynomial.
Square roots of rationals are constructed from Gauss sums, which is all the
eigenvalue work on association-scheme centers needs: every character table
here lives in a quadratic subfield, but nothing below assumes that.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import sympy


class CycField:
    """Q(zeta_N) with power-basis reduction tables."""

    def __init__(self, N):
        if N < 1:
            raise ValueError("N must be positive")
        self.N = N
        x = sympy.Symbol("x")
        self.phi = sympy.Poly(sympy.cyclotomic_poly(N, x), x).degree()

    # -- element constructors ------------------------------------------------

    def zero(self):
        return CycNum(self, (Fraction(0),) * self.phi)

    def one(self):
        return self.from_rational(1)

    def from_rational(self, r):
        coords = [Fraction(0)] * self.phi
        coords[0] = Fraction(r)
        return CycNum(self, tuple(coords))

    def zeta_power(self, k):
        """zeta_N^k as an element."""
        k %= self.N
        coords = [Fraction(0)] * self.N
        coords[k] = Fraction(1)
        return self._reduce(coords)

    def _reduce(self, coords):
        """Reduce coordinates over zeta^0..zeta^(m-1), m <= 2*phi-1."""
        coords = list(coords) + [Fraction(0)] * max(0, self.phi - len(coords))
        # first fold zeta^k for k >= N using zeta^N = 1 (inputs have k < 2N)
        if len(coords) > self.N:
            for k in range(self.N, len(coords)):
                coords[k - self.N] += coords[k]
            coords = coords[:self.N]
        # then reduce powers phi..N-1 via the cyclotomic relation, highest first
        for k in range(len(coords) - 1, self.phi - 1, -1):
            c = coords[k]
            if c:
                coords[k] = Fraction(0)
                row = self._power_row(k)
                for i, b in enumerate(row):
                    if b:
                        coords[i] += c * b
        return CycNum(self, tuple(coords[:self.phi]))

    @lru_cache(maxsize=None)
    def _power_row(self, k):
        """Coordinates of zeta^k over the power basis (phi <= k < N)."""
        if k < self.phi:
            row = [Fraction(0)] * self.phi
            row[k] = Fraction(1)
            return tuple(row)
        prev = self._power_row(k - 1)
        shifted = [Fraction(0)] + list(prev[:-1])
        overflow = prev[-1]
        if overflow:
            base = self._power_row_base()
            shifted = [s + overflow * b for s, b in zip(shifted, base)]
        return tuple(shifted)

    @lru_cache(maxsize=None)
    def _power_row_base(self):
        x = sympy.Symbol("x")
        poly = sympy.Poly(sympy.cyclotomic_poly(self.N, x), x)
        coeffs = [Fraction(int(c)) for c in reversed(poly.all_coeffs())]
        return tuple(-c for c in coeffs[:-1])

    # -- square roots of rationals -------------------------------------------

    def sqrt_rational(self, r):
        """An element whose square is the rational r, or None if Q(zeta_N)
        has no such element.  Built from Gauss sums: the quadratic Gauss sum
        for an odd prime p squares to p* = (-1)^((p-1)/2) p."""
        r = Fraction(r)
        if r == 0:
            return self.zero()
        num, den = r.numerator, r.denominator
        square, v = _squarefree_split(num * den)
        result = self.from_rational(Fraction(square, den))
        sign = -1 if v < 0 else 1
        v = abs(v)
        for p in sympy.factorint(v):
            if p == 2:
                continue
            g = self._gauss_sum(p)
            if g is None:
                return None
            result = result * g
            if p % 4 == 3:
                sign = -sign  # g^2 = -p, flip the outstanding sign
        if v % 2 == 0:
            if self.N % 8:
                return None
            z8 = self.zeta_power(self.N // 8)
            if sign < 0:
                result = result * (z8 - z8.conjugate())  # squares to -2
                sign = 1
            else:
                result = result * (z8 + z8.conjugate())  # squares to 2
        if sign < 0:
            if self.N % 4:
                return None
            result = result * self.zeta_power(self.N // 4)  # i
        if result * result != self.from_rational(r):
            return None
        return result

    def _gauss_sum(self, p):
        """sum_a (a|p) zeta_p^a; squares to (-1)^((p-1)/2) p."""
        if self.N % p:
            return None
        g = self.zero()
        for a in range(1, p):
            term = self.zeta_power((self.N // p) * a)
            if sympy.jacobi_symbol(a, p) == 1:
                g = g + term
            else:
                g = g - term
        return g

    def __repr__(self):
        return f"CycField({self.N})"


def _squarefree_split(n):
    """n = square * v with v squarefree (sign goes to v)."""
    sign = -1 if n < 0 else 1
    n = abs(n)
    square, v = 1, 1
    for p, e in sympy.factorint(n).items():
        square *= p ** (e // 2)
        if e % 2:
            v *= p
    return square, sign * v


class CycNum:
    """Element of a CycField; immutable, exact, hashable."""

    __slots__ = ("field", "coords", "_hash")

    def __init__(self, field, coords):
        self.field = field
        self.coords = tuple(Fraction(c) for c in coords)
        if len(self.coords) != field.phi:
            raise ValueError("coordinate length mismatch")
        self._hash = None

    def _coerce(self, other):
        if isinstance(other, CycNum):
            if other.field.N != self.field.N:
                raise ValueError("mixed cyclotomic orders")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycNum(self.field, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycNum(self.field, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return CycNum(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        phi = self.field.phi
        conv = [Fraction(0)] * (2 * phi - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(o.coords):
                    if b:
                        conv[i + j] += a * b
        return self.field._reduce(conv)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def inverse(self):
        """Solve self * x = 1 by linear algebra over Q."""
        if not any(self.coords):
            raise ZeroDivisionError("inverse of zero")
        phi = self.field.phi
        cols = []
        for k in range(phi):
            basis_vec = [Fraction(0)] * phi
            basis_vec[k] = Fraction(1)
            cols.append((self * CycNum(self.field, basis_vec)).coords)
        # matrix with columns cols; solve M x = e0
        m = [[cols[j][i] for j in range(phi)] for i in range(phi)]
        rhs = [Fraction(1)] + [Fraction(0)] * (phi - 1)
        x = _solve_fraction(m, rhs)
        if x is None:
            raise ZeroDivisionError("element is not invertible (impossible in a field)")
        return CycNum(self.field, tuple(x))

    def conjugate(self):
        """Complex conjugation zeta -> zeta^(N-1)."""
        out = self.field.zero()
        for k, c in enumerate(self.coords):
            if c:
                out = out + self.field.zeta_power(-k) * c
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coords == o.coords

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.N, self.coords))
        return self._hash

    def is_zero(self):
        return not any(self.coords)

    def is_rational(self):
        return not any(self.coords[1:])

    def as_rational(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def to_complex(self):
        import cmath
        z = cmath.exp(2j * cmath.pi / self.field.N)
        return sum(float(c) * z**k for k, c in enumerate(self.coords))

    def sort_key(self):
        return self.coords

    # -- rendering ------------------------------------------------------------

    def render(self):
        """Human-readable exact form: rational, a+b*sqrt(v), or a zeta poly."""
        if self.is_rational():
            return _frac_str(self.coords[0])
        for v in (-3, -1, -2, 3, 2, 5, -5, -7, 7):
            root = self.field.sqrt_rational(v)
            if root is None:
                continue
            ab = _express_in_plane(self, self.field.one(), root)
            if ab is not None:
                a, b = ab
                parts = []
                if a:
                    parts.append(_frac_str(a))
                if b:
                    bs = "" if b == 1 else ("-" if b == -1 else _frac_str(b))
                    term = f"{bs}√{v}"
                    if parts and not term.startswith("-"):
                        parts.append("+" + term)
                    else:
                        parts.append(term)
                return "".join(parts) or "0"
        terms = []
        for k, c in enumerate(self.coords):
            if not c:
                continue
            if k == 0:
                terms.append(_frac_str(c))
            else:
                zs = f"ζ{self.field.N}" + (f"^{k}" if k > 1 else "")
                cs = "" if c == 1 else ("-" if c == -1 else _frac_str(c) + "*")
                term = cs + zs
                if terms and not term.startswith("-"):
                    terms.append("+" + term)
                else:
                    terms.append(term)
        return "".join(terms) or "0"

    def to_json(self):
        return {"coeffs": [[c.numerator, c.denominator] for c in self.coords],
                "str": self.render()}

    def __repr__(self):
        return self.render()


def _frac_str(fr):
    return str(fr.numerator) if fr.denominator == 1 else f"{fr.numerator}/{fr.denominator}"


def _express_in_plane(x, u, v):
    """Rational (a, b) with x = a*u + b*v, or None."""
    phi = x.field.phi
    m = [[u.coords[i], v.coords[i]] for i in range(phi)]
    return _solve_overdetermined(m, list(x.coords))


def _solve_fraction(m, rhs):
    """Solve square fraction system by Gaussian elimination; None if singular."""
    n = len(m)
    a = [row[:] + [rhs[i]] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def _solve_overdetermined(m, rhs):
    """Least structure: solve m x = rhs exactly if consistent, else None."""
    rows = len(m)
    cols = len(m[0])
    a = [m[r][:] + [rhs[r]] for r in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    sol = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        sol[c] = a[i][cols]
    # consistency: rows beyond rank must have zero rhs
    for i in range(len(pivots), rows):
        if a[i][cols]:
            return None
    # verify (cheap, exact)
    for r0 in range(rows):
        acc = sum((m[r0][c] * sol[c] for c in range(cols)), Fraction(0))
        if acc != rhs[r0]:
            return None
    return sol
