"""Dense matrices over exact scalars or polynomials.

A matrix is *numeric* when its entries are scalars and *symbolic* when they
are :class:`MultiPoly` values over a common ring.  Numeric ranks use
fraction-free (Bareiss) elimination; kernels come from the reduced row
echelon form so they are canonical.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .poly import MultiPoly
from .scalar import Scalar, as_scalar

__all__ = [
    "Matrix",
    "rref",
    "rank",
    "rank_and_kernel",
    "row_space_basis",
    "minors",
    "determinant",
    "symbolic_rank",
]


class Matrix:
    """Immutable rectangular matrix.

    ``nvars`` is None for numeric matrices and the polynomial ring size for
    symbolic ones; it is needed to represent empty symbolic matrices.
    """

    __slots__ = ("rows", "nrows", "ncols", "nvars")

    def __init__(self, rows: Iterable[Sequence], ncols: int | None = None, nvars: int | None = None):
        rows = [tuple(r) for r in rows]
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise ValueError("matrix rows must all have the same length")
        symbolic = nvars is not None or any(isinstance(x, MultiPoly) for r in rows for x in r)
        if symbolic:
            if nvars is None:
                nvars = next(x.nvars for r in rows for x in r if isinstance(x, MultiPoly))
            conv = []
            for r in rows:
                out = []
                for x in r:
                    if isinstance(x, MultiPoly):
                        if x.nvars != nvars:
                            raise ValueError("symbolic entries must share a polynomial ring")
                        out.append(x)
                    else:
                        out.append(MultiPoly.constant(nvars, x))
                conv.append(tuple(out))
            rows = conv
        else:
            rows = [tuple(as_scalar(x) for x in r) for r in rows]
        self.rows = tuple(rows)
        self.nrows = len(rows)
        self.ncols = int(ncols)
        self.nvars = nvars

    @property
    def is_symbolic(self) -> bool:
        return self.nvars is not None

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.shape, self.nvars, self.rows) == (other.shape, other.nvars, other.rows)

    def __hash__(self):
        return hash((self.shape, self.nvars, self.rows))

    def __repr__(self):
        kind = f"symbolic[{self.nvars}]" if self.is_symbolic else "numeric"
        return f"Matrix({self.nrows}x{self.ncols}, {kind})"

    def tolist(self) -> list[list]:
        return [list(r) for r in self.rows]

    def zero_entry(self):
        return MultiPoly.zero(self.nvars) if self.is_symbolic else Fraction(0)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, nvars: int | None = None) -> "Matrix":
        z = MultiPoly.zero(nvars) if nvars is not None else Fraction(0)
        return cls([[z] * ncols for _ in range(nrows)], ncols, nvars)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)], n)

    def transpose(self) -> "Matrix":
        return Matrix(
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            self.nrows,
            self.nvars,
        )

    T = property(transpose)

    def map(self, fn: Callable, nvars: int | None = None) -> "Matrix":
        return Matrix([[fn(x) for x in r] for r in self.rows], self.ncols, nvars)

    def evaluate(self, point: Sequence) -> "Matrix":
        """Numeric matrix obtained by evaluating every entry at ``point``."""
        if not self.is_symbolic:
            raise ValueError("evaluate needs a symbolic matrix")
        return self.map(lambda p: p.evaluate(point))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix([[self.rows[i][j] for j in cols] for i in rows], len(cols), self.nvars)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        nv = self.nvars if self.nvars is not None else other.nvars
        out = []
        cols = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
        zero = MultiPoly.zero(nv) if nv is not None else Fraction(0)
        for r in self.rows:
            row = []
            for c in cols:
                acc = zero
                for a, b in zip(r, c):
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Matrix(out, other.ncols, nv)

    def apply(self, v: Sequence) -> list:
        if len(v) != self.ncols:
            raise ValueError("vector length does not match column count")
        zero = self.zero_entry()
        out = []
        for r in self.rows:
            acc = zero
            for a, b in zip(r, v):
                acc = acc + a * b
            out.append(acc)
        return out

    def is_zero(self) -> bool:
        return all(not x for r in self.rows for x in r)

    def rank(self) -> int:
        return symbolic_rank(self) if self.is_symbolic else rank(self)


def _rows_of(m) -> list[list]:
    if isinstance(m, Matrix):
        return [list(r) for r in m.rows]
    return [[as_scalar(x) for x in r] for r in m]


def rref(m: Matrix | Sequence[Sequence]) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form over the scalar field.

    Returns the nonzero rows and the pivot columns.
    """
    a = _rows_of(m)
    if isinstance(m, Matrix) and m.is_symbolic:
        raise ValueError("rref needs a numeric matrix")
    nrows = len(a)
    ncols = len(a[0]) if a else (m.ncols if isinstance(m, Matrix) else 0)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def row_space_basis(vectors: Sequence[Sequence]) -> list[list[Scalar]]:
    """Canonical (RREF) basis of the span of ``vectors``."""
    return rref(vectors)[0] if vectors else []


def rank(m: Matrix) -> int:
    """Rank of a numeric matrix by fraction-free elimination."""
    if m.is_symbolic:
        raise ValueError("rank needs a numeric matrix; use symbolic_rank")
    return _bareiss_rank(_rows_of(m), m.ncols, lambda x, d: x / d)


def _bareiss_rank(a: list[list], ncols: int, exact_div) -> int:
    nrows = len(a)
    prev = None
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        cands = [i for i in range(r, nrows) if a[i][c]]
        if not cands:
            continue
        # prefer short pivots; keeps symbolic intermediate sizes down
        p = min(cands, key=lambda i: len(a[i][c]) if isinstance(a[i][c], MultiPoly) else 0)
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(r + 1, nrows):
            lead = a[i][c]
            row = a[i]
            for j in range(c + 1, ncols):
                v = piv * row[j] - lead * a[r][j]
                row[j] = v if prev is None else exact_div(v, prev)
            row[c] = piv - piv  # exact zero of the right type
        prev = piv
        r += 1
    return r


def _poly_exact_div(v: MultiPoly, d: MultiPoly) -> MultiPoly:
    if not v:
        return v
    q = v.exact_quotient(d)
    if q is None:
        raise ArithmeticError("fraction-free elimination produced an inexact division")
    return q


def symbolic_rank(m: Matrix) -> int:
    """Rank over the fraction field of the polynomial ring (the generic rank).

    Laurent rows are first multiplied by monomials so all exponents are
    nonnegative; this does not change the rank.
    """
    if not m.is_symbolic:
        return rank(m)
    a = []
    for r in m.rows:
        lo = [0] * m.nvars
        for x in r:
            if x:
                lo = [min(u, v) for u, v in zip(lo, x.min_exponents())]
        shift = tuple(-v for v in lo)
        a.append([x.shift(shift) if any(shift) else x for x in r])
    return _bareiss_rank(a, m.ncols, _poly_exact_div)


def rank_and_kernel(m: Matrix) -> tuple[int, list[list[Scalar]]]:
    """Rank and a canonical kernel basis of a numeric matrix.

    The kernel basis is returned in reduced row echelon form.
    """
    if m.is_symbolic:
        raise ValueError("rank_and_kernel needs a numeric matrix")
    n = m.ncols
    reduced, pivots = rref(m)
    pivset = set(pivots)
    vecs = []
    for f in range(n):
        if f in pivset:
            continue
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[f]
        vecs.append(v)
    return len(pivots), row_space_basis(vecs)


def minors(m: Matrix, size: int) -> list:
    """All ``size x size`` minors in lexicographic (row set, column set) order."""
    if not isinstance(size, int) or size < 0 or size > min(m.nrows, m.ncols):
        raise ValueError(f"invalid minor size {size} for a {m.nrows}x{m.ncols} matrix")
    one = MultiPoly.one(m.nvars) if m.is_symbolic else Fraction(1)
    rows = m.rows

    @lru_cache(maxsize=None)
    def det(rs: tuple[int, ...], cs: tuple[int, ...]):
        if not rs:
            return one
        last = rows[rs[-1]]
        head = rs[:-1]
        total = one - one
        s = len(cs)
        for idx, c in enumerate(cs):
            x = last[c]
            if not x:
                continue
            sub = det(head, cs[:idx] + cs[idx + 1:])
            if not sub:
                continue
            term = x * sub
            total = total + term if (s - 1 + idx) % 2 == 0 else total - term
        return total

    return [
        det(rs, cs)
        for rs in combinations(range(m.nrows), size)
        for cs in combinations(range(m.ncols), size)
    ]


def determinant(m: Matrix):
    if m.nrows != m.ncols:
        raise ValueError("determinant of a non-square matrix")
    return minors(m, m.nrows)[0]
