"""Cup-product data in degrees one and two, and builders for standard families.

A :class:`CupData` records ``n = dim H^1``, ``m = dim H^2`` and the map
``mu: Lambda^2 H^1 -> H^2`` by its values on basis pairs ``e_i ^ e_j``
(``i < j``).  Its transpose, one row per H^2 coordinate, is the boundary map
from the relator space into ``Lambda^2 H_1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Mapping, Sequence

from .errors import InputError
from .exact import Matrix, MultiPoly, rank, rank_and_kernel
from .exact.scalar import Scalar, as_scalar
from .words import Presentation, magnus_degree2

__all__ = [
    "CupData",
    "LieRepData",
    "cup_from_presentation",
    "cup_free",
    "cup_free_abelian",
    "cup_surface",
    "cup_raag",
    "cup_wedge",
    "cup_product_join",
    "cup_config_torus",
    "pair_index",
    "wedge2_basis",
    "wedge3_basis",
    "infinitesimal_alexander_matrix",
    "koszul_delta2",
    "koszul_delta3",
]


def wedge2_basis(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def wedge3_basis(n: int) -> list[tuple[int, int, int]]:
    return list(combinations(range(n), 3))


def pair_index(i: int, j: int, n: int) -> int:
    """Position of ``(i, j)`` (``i < j``) in the lexicographic list of pairs."""
    return i * n - i * (i + 1) // 2 + (j - i - 1)


@dataclass(frozen=True)
class CupData:
    """``n``, ``m`` and the nonzero products ``mu(e_i ^ e_j)``, ``i < j``."""

    n: int
    m: int
    mu: tuple[tuple[int, int, tuple[Scalar, ...]], ...] = ()

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise InputError("dimensions must be nonnegative")
        acc: dict[tuple[int, int], list[Scalar]] = {}
        for i, j, vec in self.mu:
            i, j = int(i), int(j)
            vec = [as_scalar(x) for x in vec]
            if len(vec) != self.m:
                raise InputError(f"product of e{i}^e{j} has {len(vec)} coordinates, expected {self.m}")
            if not (0 <= i < self.n and 0 <= j < self.n) or i == j:
                raise InputError(f"invalid basis pair ({i}, {j}) for n={self.n}")
            if i > j:
                i, j = j, i
                vec = [-x for x in vec]
            cur = acc.setdefault((i, j), [Fraction(0)] * self.m)
            for k, x in enumerate(vec):
                cur[k] = cur[k] + x
        items = tuple(
            (i, j, tuple(v)) for (i, j), v in sorted(acc.items()) if any(v)
        )
        object.__setattr__(self, "mu", items)

    @classmethod
    def from_products(cls, n: int, m: int, products: Mapping[tuple[int, int], Sequence]) -> "CupData":
        return cls(n, m, tuple((i, j, tuple(v)) for (i, j), v in products.items()))

    @classmethod
    def from_boundary(cls, n: int, rows: Sequence[Mapping[tuple[int, int], object]]) -> "CupData":
        """Build from the boundary rows: row ``k`` maps ``(i, j)`` to the
        coefficient of ``e_i ^ e_j``."""
        m = len(rows)
        prod: dict[tuple[int, int], list] = {}
        for k, row in enumerate(rows):
            for (i, j), x in row.items():
                if i > j:
                    i, j, x = j, i, -as_scalar(x)
                prod.setdefault((i, j), [0] * m)[k] += as_scalar(x)
        return cls.from_products(n, m, prod)

    @cached_property
    def _table(self) -> dict[tuple[int, int], tuple[Scalar, ...]]:
        return {(i, j): v for i, j, v in self.mu}

    def product(self, i: int, j: int) -> tuple[Scalar, ...]:
        """``mu(e_i ^ e_j)`` for any ``i, j`` (antisymmetric, zero on the diagonal)."""
        if i < j:
            v = self._table.get((i, j))
            return v if v is not None else (Fraction(0),) * self.m
        if i > j:
            v = self._table.get((j, i))
            return tuple(-x for x in v) if v is not None else (Fraction(0),) * self.m
        return (Fraction(0),) * self.m

    def coefficient(self, i: int, j: int, k: int) -> Scalar:
        return self.product(i, j)[k]

    def is_zero(self) -> bool:
        return not self.mu

    def boundary_rows(self) -> list[dict[tuple[int, int], Scalar]]:
        """Row ``k``: the ``Lambda^2`` class ``sum_{i<j} mu_ij^k e_i ^ e_j``."""
        rows: list[dict[tuple[int, int], Scalar]] = [dict() for _ in range(self.m)]
        for i, j, v in self.mu:
            for k, x in enumerate(v):
                if x:
                    rows[k][(i, j)] = x
        return rows

    def boundary_matrix(self) -> Matrix:
        """``m x C(n,2)`` matrix of the boundary rows in lexicographic pair order."""
        pairs = wedge2_basis(self.n)
        return Matrix(
            [[self.coefficient(i, j, k) for i, j in pairs] for k in range(self.m)], len(pairs)
        )

    def image_dim(self) -> int:
        return rank(self.boundary_matrix())

    def permute(self, perm: Sequence[int]) -> "CupData":
        """Relabel basis vector ``i`` as ``perm[i]``."""
        return CupData(self.n, self.m, tuple((perm[i], perm[j], v) for i, j, v in self.mu))


def cup_from_presentation(p: Presentation) -> CupData:
    """Dual of the degree-2 Magnus classes of a commutator-relator presentation."""
    n = p.n
    prod: dict[tuple[int, int], list[int]] = {}
    for k, w in enumerate(p.relators):
        eps, c = magnus_degree2(w, n)
        if any(eps):
            raise InputError(
                f"not a commutator-relator presentation: relator {k} has exponent sums {eps}"
            )
        for i in range(n):
            for j in range(i + 1, n):
                if c[i][j]:
                    prod.setdefault((i, j), [0] * p.r)[k] = c[i][j]
    return CupData.from_products(n, p.r, prod)


def cup_free(n: int) -> CupData:
    return CupData(n, 0)


def cup_free_abelian(n: int) -> CupData:
    pairs = wedge2_basis(n)
    m = len(pairs)
    return CupData.from_products(
        n, m, {(i, j): [int(k == idx) for k in range(m)] for idx, (i, j) in enumerate(pairs)}
    )


def cup_surface(genus: int, punctures: int = 0) -> CupData:
    """Surface of the given genus with punctures; basis ``a1, b1, ..., ag, bg``."""
    if genus < 0 or punctures < 0:
        raise InputError("genus and punctures must be nonnegative")
    if punctures > 0:
        return CupData(2 * genus + punctures - 1, 0)
    if genus == 0:
        raise InputError("the sphere has no degree-one cohomology; need genus >= 1 or punctures >= 1")
    return CupData.from_products(2 * genus, 1, {(2 * i, 2 * i + 1): [1] for i in range(genus)})


def cup_raag(graph) -> CupData:
    """Right-angled Artin data: one H^2 coordinate per edge, ``mu(v^w) = e_vw``
    for ``v < w`` in vertex order."""
    n = len(graph.vertices)
    edges = graph.edge_indices()
    m = len(edges)
    return CupData.from_products(n, m, {(i, j): [int(k == e) for k in range(m)] for e, (i, j) in enumerate(edges)})


def cup_wedge(u: CupData, v: CupData) -> CupData:
    """Block sum (free product of groups); mixed products vanish."""
    m = u.m + v.m
    items = [(i, j, tuple(x) + (Fraction(0),) * v.m) for i, j, x in u.mu]
    items += [(i + u.n, j + u.n, (Fraction(0),) * u.m + tuple(x)) for i, j, x in v.mu]
    return CupData(u.n + v.n, m, tuple(items))


def cup_product_join(u: CupData, v: CupData) -> CupData:
    """Direct product of groups: ``H^2 = U^2 + V^2 + U^1 (x) V^1``.

    Mixed product ``u_i ^ v_j`` is the basis vector at position
    ``u.m + v.m + i * v.n + j``.
    """
    m = u.m + v.m + u.n * v.n
    tail_u = (Fraction(0),) * (m - u.m)
    items = [(i, j, tuple(x) + tail_u) for i, j, x in u.mu]
    items += [
        (i + u.n, j + u.n, (Fraction(0),) * u.m + tuple(x) + (Fraction(0),) * (u.n * v.n))
        for i, j, x in v.mu
    ]
    base = u.m + v.m
    for i in range(u.n):
        for j in range(v.n):
            vec = [Fraction(0)] * m
            vec[base + i * v.n + j] = Fraction(1)
            items.append((i, u.n + j, tuple(vec)))
    return CupData(u.n + v.n, m, tuple(items))


def diagonal_classes(points: int) -> list[list[int]]:
    """Classes ``(a_i - a_j)(b_i - b_j)`` in lexicographic ``Lambda^2`` coordinates
    for the basis ``a1, b1, ..., an, bn``."""
    n = 2 * points
    rows = []
    for i, j in combinations(range(points), 2):
        row = [0] * comb(n, 2)
        a_i, b_i, a_j, b_j = 2 * i, 2 * i + 1, 2 * j, 2 * j + 1
        row[pair_index(a_i, b_i, n)] += 1
        row[pair_index(a_i, b_j, n)] -= 1
        row[pair_index(b_i, a_j, n)] += 1  # -a_j b_i = b_i a_j
        row[pair_index(a_j, b_j, n)] += 1
        rows.append(row)
    return rows


def cup_config_torus(points: int) -> CupData:
    """Ordered configuration space of ``points`` points on an elliptic curve.

    H^2 is ``Lambda^2 H^1`` modulo the diagonal classes; the projection is
    given by a canonical basis of functionals vanishing on them.
    """
    if points < 1:
        raise InputError("need at least one point")
    n = 2 * points
    npairs = comb(n, 2)
    diag = diagonal_classes(points)
    if diag:
        if rank(Matrix(diag, npairs)) != len(diag):
            raise ArithmeticError("diagonal classes are linearly dependent")
        _, quotient = rank_and_kernel(Matrix(diag, npairs))
    else:
        quotient = [[Fraction(int(i == j)) for j in range(npairs)] for i in range(npairs)]
    m = len(quotient)
    prod = {}
    for idx, (i, j) in enumerate(wedge2_basis(n)):
        vec = [q[idx] for q in quotient]
        if any(vec):
            prod[(i, j)] = vec
    return CupData.from_products(n, m, prod)


def koszul_delta3(n: int) -> Matrix:
    """Matrix of ``Lambda^3 -> S (x) Lambda^2`` (rows: pairs, columns: triples)."""
    pairs = wedge2_basis(n)
    triples = wedge3_basis(n)
    zero = MultiPoly.zero(n)
    cols = []
    for a, b, c in triples:
        col = [zero] * len(pairs)
        col[pair_index(b, c, n)] = MultiPoly.var(n, a)
        col[pair_index(a, c, n)] = -MultiPoly.var(n, b)
        col[pair_index(a, b, n)] = MultiPoly.var(n, c)
        cols.append(col)
    return Matrix([[col[r] for col in cols] for r in range(len(pairs))], len(triples), n)


def koszul_delta2(n: int) -> Matrix:
    """Matrix of ``S (x) Lambda^2 -> S (x) H_1``, ``x ^ y -> X_x e_y - X_y e_x``."""
    pairs = wedge2_basis(n)
    rows = [[MultiPoly.zero(n)] * len(pairs) for _ in range(n)]
    for idx, (x, y) in enumerate(pairs):
        rows[y][idx] = MultiPoly.var(n, x)
        rows[x][idx] = -MultiPoly.var(n, y)
    return Matrix(rows, len(pairs), n)


def infinitesimal_alexander_matrix(c: CupData) -> Matrix:
    """Presentation matrix of the infinitesimal Alexander invariant.

    Rows are ``Lambda^2`` pairs; the columns are the Koszul triples followed by
    one constant column per H^2 coordinate (the boundary rows).
    """
    n = c.n
    d3 = koszul_delta3(n)
    pairs = wedge2_basis(n)
    bd = c.boundary_rows()
    rows = []
    for r, (i, j) in enumerate(pairs):
        consts = [MultiPoly.constant(n, bd[k].get((i, j), 0)) for k in range(c.m)]
        rows.append(list(d3.rows[r]) + consts)
    return Matrix(rows, d3.ncols + c.m, n)


class LieRepData:
    """A finite-dimensional Lie algebra with a representation.

    ``structure[a][b]`` is the coefficient vector of ``[b_a, b_b]``;
    ``theta[a]`` is the ``dim_v x dim_v`` matrix of ``b_a`` acting on V.
    """

    __slots__ = ("dim_b", "structure", "dim_v", "theta")

    def __init__(self, structure: Sequence[Sequence[Sequence]], theta: Sequence[Sequence[Sequence]], validate: bool = True):
        self.dim_b = len(structure)
        self.structure = tuple(
            tuple(tuple(as_scalar(x) for x in vec) for vec in row) for row in structure
        )
        self.theta = tuple(Matrix(t, len(t[0]) if t else 0) for t in theta)
        self.dim_v = self.theta[0].nrows if self.theta else 0
        if validate:
            self.validate()

    def bracket_coeffs(self, a: int, b: int) -> tuple[Scalar, ...]:
        return self.structure[a][b]

    def validate(self) -> None:
        d = self.dim_b
        if len(self.theta) != d:
            raise InputError("need one representation matrix per Lie algebra basis element")
        for row in self.structure:
            if len(row) != d or any(len(v) != d for v in row):
                raise InputError("structure constants must form a dim x dim x dim array")
        for t in self.theta:
            if t.shape != (self.dim_v, self.dim_v):
                raise InputError("representation matrices must be square of a common size")
        s = self.structure
        for a in range(d):
            for b in range(d):
                if any(s[a][b][c] + s[b][a][c] for c in range(d)):
                    raise InputError(f"structure constants not antisymmetric at ({a}, {b})")
        for a, b, c in combinations(range(d), 3):
            # [[a,b],c] + [[b,c],a] + [[c,a],b] = 0
            for out in range(d):
                tot = Fraction(0)
                for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                    for e in range(d):
                        tot += s[x][y][e] * s[e][z][out]
                if tot:
                    raise InputError("structure constants violate the Jacobi identity")
        for a in range(d):
            for b in range(d):
                lhs = Matrix.zeros(self.dim_v, self.dim_v)
                for c in range(d):
                    if s[a][b][c]:
                        lhs = _add(lhs, _scale(self.theta[c], s[a][b][c]))
                rhs = _add(self.theta[a] @ self.theta[b], _scale(self.theta[b] @ self.theta[a], -1))
                if lhs != rhs:
                    raise InputError(f"theta is not a Lie homomorphism on ({a}, {b})")

    def act(self, coeffs: Sequence) -> Matrix:
        """Matrix of ``theta(sum coeffs[a] b_a)``."""
        out = Matrix.zeros(self.dim_v, self.dim_v)
        for a, x in enumerate(coeffs):
            if x:
                out = _add(out, _scale(self.theta[a], x))
        return out

    @classmethod
    def abelian_line(cls) -> "LieRepData":
        """One-dimensional abelian algebra acting on k by the identity."""
        return cls([[[0]]], [[[1]]])

    @classmethod
    def sl2_standard(cls) -> "LieRepData":
        """sl_2 with basis (e, f, h) on k^2."""
        s = [[[0, 0, 0] for _ in range(3)] for _ in range(3)]
        s[0][1] = [0, 0, 1]   # [e,f] = h
        s[1][0] = [0, 0, -1]
        s[2][0] = [2, 0, 0]   # [h,e] = 2e
        s[0][2] = [-2, 0, 0]
        s[2][1] = [0, -2, 0]  # [h,f] = -2f
        s[1][2] = [0, 2, 0]
        e = [[0, 1], [0, 0]]
        f = [[0, 0], [1, 0]]
        h = [[1, 0], [0, -1]]
        return cls(s, [e, f, h])


def _add(a: Matrix, b: Matrix) -> Matrix:
    return Matrix([[x + y for x, y in zip(r, t)] for r, t in zip(a.rows, b.rows)], a.ncols)


def _scale(a: Matrix, c) -> Matrix:
    return a.map(lambda x: x * c)
