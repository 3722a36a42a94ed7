"""Points and lines of P^3 (and P^1) over a finite field.

Canonical forms make equality O(1): a point is scaled so its first nonzero
coordinate is 1, a line frame is put in reduced column echelon form.  The
enumeration order is lexicographic in the serialized element integers so
that cache files and table orderings are reproducible.
"""

from __future__ import annotations

import itertools

import numpy as np

from . import gfmat


class ProjPoint:
    """Normalized point of projective space; coords are field codes."""

    __slots__ = ("spec", "coords", "_hash")

    def __init__(self, spec, coords):
        self.spec = spec
        self.coords = tuple(int(c) for c in coords)
        self._hash = hash(self.coords)

    def __eq__(self, other):
        return isinstance(other, ProjPoint) and self.coords == other.coords \
            and self.spec == other.spec

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"({':'.join(str(c) for c in self.coords)})"

    @property
    def packed(self):
        acc = 0
        for c in reversed(self.coords):
            acc = acc * self.spec.order + c
        return acc

    def to_json(self):
        return list(self.coords)


def normalize(spec, coords):
    """Scale so the first nonzero coordinate is 1; error on the zero vector."""
    coords = [int(c) for c in coords]
    lead = next((i for i, c in enumerate(coords) if c), None)
    if lead is None:
        raise ValueError("zero vector does not define a projective point")
    inv = spec.inv(coords[lead])
    if inv != 1:
        coords = [spec.mul(c, inv) for c in coords]
    return ProjPoint(spec, coords)


def enumerate_proj(spec, dim):
    """All points of P^dim in deterministic order: the canonical
    representative tuples sorted lexicographically by element code."""
    n = spec.order
    out = []
    for lead in range(dim, -1, -1):
        prefix = (0,) * lead + (1,)
        for tail in itertools.product(range(n), repeat=dim - lead):
            out.append(ProjPoint(spec, prefix + tail))
    expected = (n ** (dim + 1) - 1) // (n - 1)
    assert len(out) == expected
    return out


class LineFrame:
    """Rank-2 4x2 frame in reduced column echelon form (canonical)."""

    __slots__ = ("spec", "mat", "_key")

    def __init__(self, spec, mat):
        self.spec = spec
        m = np.asarray(mat, dtype=spec.ADD.dtype)
        m.setflags(write=False)
        self.mat = m
        self._key = m.tobytes()

    def __eq__(self, other):
        return isinstance(other, LineFrame) and self._key == other._key \
            and self.spec == other.spec

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"LineFrame({self.mat.tolist()})"

    @property
    def key(self):
        return self._key

    def to_json(self):
        return self.mat.tolist()


def canonical_line(spec, mat):
    """Canonical frame for the column space of a 4x2 rank-2 matrix."""
    mat = np.asarray(mat)
    R, piv = gfmat.rref(spec, mat.T)
    if len(piv) != 2:
        raise ValueError("frame is rank deficient")
    return LineFrame(spec, R.T)


def line_points(line: LineFrame):
    """The q^2+1 rational points {G (s,t)^T}."""
    spec = line.spec
    ADD, MUL = spec.ADD, spec.MUL
    g0 = line.mat[:, 0]
    g1 = line.mat[:, 1]
    pts = []
    for s, t in _p1_params(spec):
        vec = ADD[MUL[g0, s], MUL[g1, t]]
        pts.append(normalize(spec, vec))
    if len(set(pts)) != spec.order + 1:
        raise ValueError("frame is rank deficient (fewer distinct points)")
    return pts


def _p1_params(spec):
    """Canonical representatives of P^1: (0,1) then (1,t)."""
    yield (0, 1)
    for t in range(spec.order):
        yield (1, t)
