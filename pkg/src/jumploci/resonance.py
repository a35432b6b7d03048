"""Aomoto complexes and resonance varieties in degree one.

For ``z`` in H^1 the Aomoto complex is ``H^0 -> H^1 -> H^2`` with
differential ``y -> z*y``.  Its middle cohomology jumps exactly on the
resonance varieties ``R_k``.  Off the origin, ``dim H^1 >= k`` iff the
``m x n`` matrix of ``y -> z*y`` has rank at most ``n-k-1``, i.e. iff all its
``(n-k)``-minors vanish.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .cupdata import CupData, LieRepData
from .errors import InputError
from .exact import Matrix, MultiPoly, minors, rank, symbolic_rank
from .exact.scalar import as_scalar
from .subspaces import Subspace

__all__ = [
    "aomoto_matrix",
    "aomoto_matrix_symbolic",
    "aomoto_h1_dim",
    "resonance_member",
    "resonance_contains_subspace",
    "resonance_minors",
    "quadratic_cone_member",
    "relative_aomoto_h1",
    "relative_aomoto_differentials",
]


def _point(c: CupData, z: Sequence) -> list:
    if len(z) != c.n:
        raise InputError(f"point has {len(z)} coordinates, expected {c.n}")
    return [as_scalar(x) for x in z]


def aomoto_matrix(c: CupData, z: Sequence) -> Matrix:
    """Numeric ``m x n`` matrix of ``y -> z*y``: entry ``(k, j) = sum_i z_i mu_ij^k``."""
    z = _point(c, z)
    rows = [[Fraction(0)] * c.n for _ in range(c.m)]
    for i, j, vec in c.mu:
        zi, zj = z[i], z[j]
        for k, x in enumerate(vec):
            if x:
                # mu(e_i ^ e_j) = x e_k: contributes z_i x to column j, -z_j x to column i
                if zi:
                    rows[k][j] += zi * x
                if zj:
                    rows[k][i] -= zj * x
    return Matrix(rows, c.n)


def aomoto_matrix_symbolic(c: CupData, images: Sequence[MultiPoly] | None = None) -> Matrix:
    """The same matrix with ``z_i`` replaced by ``images[i]`` (default: variables)."""
    if images is None:
        images = [MultiPoly.var(c.n, i) for i in range(c.n)]
    if len(images) != c.n:
        raise InputError("need one image per coordinate")
    nv = images[0].nvars if images else 0
    zero = MultiPoly.zero(nv)
    rows = [[zero] * c.n for _ in range(c.m)]
    for i, j, vec in c.mu:
        for k, x in enumerate(vec):
            if x:
                rows[k][j] = rows[k][j] + images[i].scale(x)
                rows[k][i] = rows[k][i] - images[j].scale(x)
    return Matrix(rows, c.n, nv)


def aomoto_h1_dim(c: CupData, z: Sequence) -> int:
    z = _point(c, z)
    if not any(z):
        return c.n
    return c.n - rank(aomoto_matrix(c, z)) - 1


def resonance_member(c: CupData, z: Sequence, k: int) -> bool:
    if k < 1:
        raise InputError("depth k must be at least 1")
    return aomoto_h1_dim(c, z) >= k


def resonance_minors(c: CupData, k: int) -> list[MultiPoly]:
    """All ``(n-k)``-minors of the symbolic Aomoto matrix.

    Their common zero set, away from the origin, is ``R_k``.  An empty list
    means no condition at all (fewer than ``n-k`` rows).
    """
    if not 1 <= k <= c.n - 1:
        raise InputError(f"depth k must satisfy 1 <= k <= n-1 = {c.n - 1}")
    size = c.n - k
    if c.m < size:
        return []
    return minors(aomoto_matrix_symbolic(c), size)


def resonance_contains_subspace(c: CupData, L: Subspace, k: int, method: str = "minors") -> bool:
    """True iff every point of ``L`` lies in ``R_k``.

    ``method="minors"`` substitutes a parametrization of ``L`` into every
    ``(n-k)``-minor and tests for identically zero polynomials;
    ``method="rank"`` compares the generic rank of the parametrized matrix
    with ``n-k-1``.  Both are exact and agree.
    """
    if k < 1:
        raise InputError("depth k must be at least 1")
    if L.n != c.n:
        raise InputError(f"subspace lives in dimension {L.n}, cup data in {c.n}")
    if L.dim == 0:
        return k <= c.n  # only the origin, where dim H^1 = n
    size = c.n - k
    if size <= 0:
        return False  # nonzero points have dim H^1 <= n-1
    params = [MultiPoly.var(L.dim, a) for a in range(L.dim)]
    z = [p if p is not None else MultiPoly.zero(L.dim) for p in L.parametrize(params)]
    mat = aomoto_matrix_symbolic(c, z)
    if method == "rank":
        return symbolic_rank(mat) <= size - 1
    if method != "minors":
        raise ValueError(f"unknown containment method {method!r}")
    if c.m < size:
        return True
    return all(not f for f in minors(mat, size))


def quadratic_cone_member(c: CupData, rep: LieRepData, x: Sequence[Sequence]) -> bool:
    """Exact test of ``sum t_i^a t_j^b mu_ij^k s_ab^c = 0`` for all ``k, c``."""
    t = _rep_point(c, rep, x)
    d = rep.dim_b
    s = rep.structure
    for k in range(c.m):
        for out in range(d):
            tot = Fraction(0)
            for i, j, vec in c.mu:
                mu = vec[k]
                if not mu:
                    continue
                # ordered pairs (i,j) and (j,i) combine via antisymmetry of s
                for a in range(d):
                    if not t[i][a]:
                        continue
                    for b in range(d):
                        if t[j][b] and s[a][b][out]:
                            tot += 2 * t[i][a] * t[j][b] * mu * s[a][b][out]
            if tot:
                return False
    return True


def _rep_point(c: CupData, rep: LieRepData, x: Sequence[Sequence]) -> list[list]:
    if len(x) != c.n or any(len(r) != rep.dim_b for r in x):
        raise InputError(f"x must be an {c.n} x {rep.dim_b} matrix")
    return [[as_scalar(v) for v in r] for r in x]


def relative_aomoto_differentials(c: CupData, rep: LieRepData, x: Sequence[Sequence]) -> tuple[Matrix, Matrix]:
    """Matrices of ``d0: V -> H^1 (x) V`` and ``d1: H^1 (x) V -> H^2 (x) V``.

    Block ``i`` of ``d0`` is ``theta(b_i)`` with ``b_i = sum_a t_i^a b_a``;
    block ``(k, j)`` of ``d1`` is ``sum_i mu_ij^k theta(b_i)``.
    """
    t = _rep_point(c, rep, x)
    dv = rep.dim_v
    acts = [rep.act(row) for row in t]
    d0 = Matrix([list(acts[i].rows[r]) for i in range(c.n) for r in range(dv)], dv)
    d1rows = []
    for k in range(c.m):
        blocks = []
        for j in range(c.n):
            blk = [[Fraction(0)] * dv for _ in range(dv)]
            for i in range(c.n):
                mu = c.coefficient(i, j, k)
                if mu:
                    for r in range(dv):
                        for s in range(dv):
                            blk[r][s] += mu * acts[i].rows[r][s]
            blocks.append(blk)
        for r in range(dv):
            d1rows.append([blocks[j][r][s] for j in range(c.n) for s in range(dv)])
    return d0, Matrix(d1rows, c.n * dv)


def relative_aomoto_h1(c: CupData, rep: LieRepData, x: Sequence[Sequence]) -> int:
    """``dim ker d1 - rank d0`` of the relative Aomoto complex at ``x``."""
    if not quadratic_cone_member(c, rep, x):
        raise InputError("x is not in the quadratic cone: [x, x] != 0")
    d0, d1 = relative_aomoto_differentials(c, rep, x)
    return c.n * rep.dim_v - rank(d1) - rank(d0)
