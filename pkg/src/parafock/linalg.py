"""Exact dense linear algebra over the rationals.

Everything here works on :class:`fractions.Fraction` entries; there is no
floating point anywhere on the path that decides a rank or a sign.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

PSD = "PSD"
INDEFINITE = "INDEFINITE"


class RationalMatrix:
    """Rectangular matrix of reduced fractions, stored row-major."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Sequence[Sequence]):
        rows = [[Fraction(x) for x in row] for row in data]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        self.rows = len(rows)
        self.cols = ncols
        self._data = rows

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[int(r == c) for c in range(n)] for r in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls([[0] * cols for _ in range(rows)])

    def __getitem__(self, rc):
        r, c = rc
        return self._data[r][c]

    def row(self, r: int) -> list:
        return list(self._data[r])

    def tolist(self) -> list:
        return [list(r) for r in self._data]

    @property
    def shape(self):
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self._data[r][c] == self._data[c][r]
            for r in range(self.rows) for c in range(r + 1, self.cols))

    def matvec(self, v: Sequence) -> list:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in self._data]

    def quadratic_form(self, v: Sequence) -> Fraction:
        return sum((a * b for a, b in zip(v, self.matvec(v))), Fraction(0))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix([[self._data[r][c] for c in cols] for r in rows])

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self._data == other._data

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self._data)
        return f"RationalMatrix([{body}])"


@dataclass(frozen=True)
class PsdVerdict:
    tag: str
    witness: tuple | None = None
    value: Fraction | None = None

    @property
    def is_psd(self) -> bool:
        return self.tag == PSD


def _as_matrix(A) -> RationalMatrix:
    return A if isinstance(A, RationalMatrix) else RationalMatrix(A)


def _integer_rows(A: RationalMatrix) -> list:
    out = []
    for row in A.tolist():
        scale = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * scale) for x in row])
    return out


def rank(A) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    A = _as_matrix(A)
    m = _integer_rows(A)
    nrows, ncols = A.rows, A.cols
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        prow = m[r]
        for i in range(r + 1, nrows):
            row = m[i]
            a = row[c]
            for k in range(c + 1, ncols):
                row[k] = (p * row[k] - a * prow[k]) // prev
            row[c] = 0
        prev = p
        r += 1
    return r


def rref(A) -> tuple:
    """Reduced row echelon form and the list of pivot columns."""
    m = _as_matrix(A).tolist()
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                a = m[i][c]
                m[i] = [x - a * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def null_basis(A) -> list:
    """Basis of the right kernel, one vector per free column of the RREF."""
    A = _as_matrix(A)
    m, pivots = rref(A)
    free = [c for c in range(A.cols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [Fraction(0)] * A.cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][fc]
        basis.append(v)
    return basis


def _simple_witness(A: RationalMatrix):
    """Most negative single state, else most negative pair e_a -/+ e_b."""
    n = A.rows
    best = None
    for k in range(n):
        d = A[k, k]
        if d < 0 and (best is None or d < best[1]):
            best = (k, d)
    if best is not None:
        w = [Fraction(0)] * n
        w[best[0]] = Fraction(1)
        return w, best[1]
    pair = None
    for a in range(n):
        daa = A[a, a]
        for b in range(a + 1, n):
            off = A[a, b]
            if not off:
                continue
            val = daa + A[b, b] - 2 * abs(off)
            if val < 0 and (pair is None or val < pair[2]):
                pair = (a, b, val, -1 if off > 0 else 1)
    if pair is not None:
        a, b, val, s = pair
        w = [Fraction(0)] * n
        w[a] = Fraction(1)
        w[b] = Fraction(s)
        return w, val
    return None


def _ldlt_witness(A: RationalMatrix):
    """Symmetric-pivoted LDLᵀ.  Returns None if PSD, else (vector, value)."""
    n = A.rows
    S = A.tolist()
    # T[k] is the original-coordinate vector whose Gram with T[l] equals S[k][l]
    T = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
    remaining = list(range(n))
    while remaining:
        p = max(remaining, key=lambda k: (S[k][k], -k))
        d = S[p][p]
        if d > 0:
            remaining.remove(p)
            for a in remaining:
                if not S[a][p]:
                    continue
                ratio = S[a][p] / d
                Ta, Tp = T[a], T[p]
                T[a] = [x - ratio * y for x, y in zip(Ta, Tp)]
                for b in remaining:
                    if S[p][b]:
                        S[a][b] -= ratio * S[p][b]
            continue
        negatives = [k for k in remaining if S[k][k] < 0]
        if negatives:
            k = min(negatives, key=lambda k: (S[k][k], k))
            return T[k], S[k][k]
        for a in remaining:
            for b in remaining:
                if a != b and S[a][b]:
                    off, dbb = S[a][b], S[b][b]
                    t = Fraction(-1 if off > 0 else 1)
                    w = [t * x + y for x, y in zip(T[a], T[b])]
                    return w, 2 * off * t + dbb
        return None
    return None


def psd_check(A) -> PsdVerdict:
    """Decide positive semidefiniteness exactly.

    The verdict comes from the pivoted LDLᵀ.  For an indefinite matrix the
    returned witness is the simplest available one: a single basis vector or a
    pair ``e_a ± e_b`` if either has negative norm, otherwise the vector
    produced by the elimination.
    """
    A = _as_matrix(A)
    if not A.is_square():
        raise ValueError("psd_check needs a square matrix")
    found = _ldlt_witness(A)
    if found is None:
        return PsdVerdict(PSD)
    simple = _simple_witness(A)
    w, value = simple if simple is not None else found
    assert value < 0 and A.quadratic_form(w) == value
    return PsdVerdict(INDEFINITE, tuple(w), value)
