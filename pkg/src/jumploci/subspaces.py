"""Linear subspaces of k^n in canonical echelon form, and finite unions of them."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .exact import Matrix, rank_and_kernel, row_space_basis
from .exact.scalar import Scalar, as_scalar, is_rational, scalar_sort_key

__all__ = ["Subspace", "SubspaceArrangement"]


class Subspace:
    """A linear subspace of k^n stored by its reduced row echelon basis."""

    __slots__ = ("n", "basis")

    def __init__(self, n: int, basis: Sequence[Sequence] = ()):
        self.n = int(n)
        vecs = [[as_scalar(x) for x in v] for v in basis]
        for v in vecs:
            if len(v) != self.n:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {self.n}")
        self.basis: tuple[tuple[Scalar, ...], ...] = tuple(tuple(v) for v in row_space_basis(vecs))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, [[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def coordinate(cls, n: int, indices: Iterable[int]) -> "Subspace":
        """Span of the standard basis vectors with the given (0-based) indices."""
        return cls(n, [[int(i == j) for j in range(n)] for i in sorted(set(indices))])

    @classmethod
    def from_equations(cls, n: int, equations: Sequence[Sequence]) -> "Subspace":
        """Common kernel of the given linear functionals."""
        if not equations:
            return cls.full(n)
        _, ker = rank_and_kernel(Matrix(equations, n))
        return cls(n, ker)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def equations(self) -> list[list[Scalar]]:
        """Canonical basis of the functionals vanishing on this subspace."""
        if not self.basis:
            return [[Fraction(int(i == j)) for j in range(self.n)] for i in range(self.n)]
        return rank_and_kernel(Matrix(self.basis, self.n))[1]

    def contains(self, other: "Subspace") -> bool:
        self._check(other)
        if other.dim > self.dim:
            return False
        if not other.basis:
            return True
        return len(row_space_basis(list(self.basis) + list(other.basis))) == self.dim

    def contains_point(self, v: Sequence) -> bool:
        v = [as_scalar(x) for x in v]
        if len(v) != self.n:
            raise ValueError("point has the wrong ambient dimension")
        if not any(v):
            return True
        return len(row_space_basis(list(self.basis) + [v])) == self.dim

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.from_equations(self.n, self.equations() + other.equations())

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.n, list(self.basis) + list(other.basis))

    def is_rational(self) -> bool:
        return all(is_rational(x) for v in self.basis for x in v)

    def parametrize(self, params: Sequence) -> list:
        """The point ``sum params[i] * basis[i]`` (params may be polynomials)."""
        if len(params) != self.dim:
            raise ValueError("need one parameter per basis vector")
        out = []
        for j in range(self.n):
            acc = None
            for s, v in zip(params, self.basis):
                if v[j]:
                    term = s * v[j]
                    acc = term if acc is None else acc + term
            out.append(acc)
        return out

    def random_point(self, rng: random.Random, bound: int = 9, nonzero: bool = True) -> list[Scalar]:
        """Integer combination of the basis with coefficients in [-bound, bound]."""
        if not self.basis:
            return [Fraction(0)] * self.n
        while True:
            coeffs = [rng.randint(-bound, bound) for _ in self.basis]
            if nonzero and not any(coeffs):
                continue
            return [
                sum((c * v[j] for c, v in zip(coeffs, self.basis)), Fraction(0)) for j in range(self.n)
            ]

    def sort_key(self) -> tuple:
        return (-self.dim, tuple(tuple(scalar_sort_key(x) for x in v) for v in self.basis))

    def _check(self, other: "Subspace"):
        if other.n != self.n:
            raise ValueError(f"ambient dimension mismatch: {self.n} vs {other.n}")

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and self.basis == other.basis

    def __hash__(self):
        return hash((self.n, self.basis))

    def __le__(self, other: "Subspace") -> bool:
        return other.contains(self)

    def __lt__(self, other: "Subspace") -> bool:
        return other.contains(self) and self != other

    def __repr__(self):
        from .exact.scalar import format_scalar

        vecs = ", ".join("(" + ",".join(format_scalar(x) for x in v) + ")" for v in self.basis)
        return f"Subspace(n={self.n}, dim={self.dim}, basis=[{vecs}])"


class SubspaceArrangement:
    """A finite union of subspaces with no containments, in canonical order.

    The empty arrangement is the empty set; it differs from ``{0}``.
    """

    __slots__ = ("n", "subspaces")

    def __init__(self, n: int, subspaces: Iterable[Subspace] = ()):
        self.n = int(n)
        uniq = []
        seen = set()
        for s in subspaces:
            if s.n != self.n:
                raise ValueError("subspace ambient dimension does not match arrangement")
            if s not in seen:
                seen.add(s)
                uniq.append(s)
        # drop anything contained in another member; larger ones first
        uniq.sort(key=Subspace.sort_key)
        kept: list[Subspace] = []
        for s in uniq:
            if not any(k.contains(s) for k in kept):
                kept.append(s)
        self.subspaces: tuple[Subspace, ...] = tuple(kept)

    def __iter__(self) -> Iterator[Subspace]:
        return iter(self.subspaces)

    def __len__(self):
        return len(self.subspaces)

    def __getitem__(self, i) -> Subspace:
        return self.subspaces[i]

    def __eq__(self, other):
        if not isinstance(other, SubspaceArrangement):
            return NotImplemented
        return self.n == other.n and self.subspaces == other.subspaces

    def __hash__(self):
        return hash((self.n, self.subspaces))

    def __repr__(self):
        return f"SubspaceArrangement(n={self.n}, {list(self.subspaces)})"

    def is_empty(self) -> bool:
        return not self.subspaces

    def contains_point(self, v: Sequence) -> bool:
        return any(s.contains_point(v) for s in self.subspaces)

    def contains_subspace(self, s: Subspace) -> bool:
        """True iff ``s`` lies in one member (a subspace in a finite union of
        subspaces lies in one of them)."""
        return any(t.contains(s) for t in self.subspaces)

    def issubset(self, other: "SubspaceArrangement") -> bool:
        return all(other.contains_subspace(s) for s in self.subspaces)

    def union(self, other: "SubspaceArrangement") -> "SubspaceArrangement":
        return SubspaceArrangement(self.n, list(self.subspaces) + list(other.subspaces))

    def intersect(self, other: "SubspaceArrangement") -> "SubspaceArrangement":
        return SubspaceArrangement(self.n, [a.intersect(b) for a in self.subspaces for b in other.subspaces])

    def dims(self) -> list[int]:
        return [s.dim for s in self.subspaces]
