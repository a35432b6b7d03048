"""Rank-one characteristic varieties through abelianized Fox calculus."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import InputError
from .exact import Matrix, MultiPoly, minors, rank
from .exact.scalar import Scalar, as_scalar, format_scalar
from .words import GroupWord, Presentation, fox_derivative_ab

__all__ = [
    "Character",
    "fox_jacobian",
    "twisted_b1",
    "charvar_member",
    "alexander_matrix",
    "charvar_minors",
]


class Character:
    """A homomorphism to the multiplicative group, given on generators."""

    __slots__ = ("t",)

    def __init__(self, values: Sequence):
        t = tuple(as_scalar(v) for v in values)
        for i, v in enumerate(t):
            if v == 0:
                raise InputError(f"character coordinate {i} is zero; characters take invertible values")
        self.t = t

    @classmethod
    def trivial(cls, n: int) -> "Character":
        return cls([1] * n)

    def __len__(self):
        return len(self.t)

    def is_trivial(self) -> bool:
        return all(v == 1 for v in self.t)

    def __call__(self, w: GroupWord) -> Scalar:
        out: Scalar = Fraction(1)
        for g, e in w.letters:
            out = out * self.t[g] if e > 0 else out / self.t[g]
        return out

    def __eq__(self, other):
        return isinstance(other, Character) and self.t == other.t

    def __hash__(self):
        return hash(self.t)

    def __repr__(self):
        return "Character(" + ", ".join(format_scalar(v) for v in self.t) + ")"


def _as_character(p: Presentation, rho) -> Character:
    rho = rho if isinstance(rho, Character) else Character(rho)
    if len(rho) != p.n:
        raise InputError(f"character has {len(rho)} coordinates, presentation has {p.n} generators")
    return rho


def alexander_matrix(p: Presentation) -> Matrix:
    """``r x n`` Laurent matrix of abelianized Fox derivatives."""
    n = p.n
    return Matrix([[fox_derivative_ab(w, i, n) for i in range(n)] for w in p.relators], n, n)


def fox_jacobian(p: Presentation, rho) -> Matrix:
    """The Alexander matrix evaluated at ``rho``."""
    rho = _as_character(p, rho)
    return Matrix(
        [[fox_derivative_ab(w, i, p.n).evaluate(rho.t) for i in range(p.n)] for w in p.relators], p.n
    )


def twisted_b1(p: Presentation, rho) -> int:
    """``dim H^1(G; C_rho) = dim ker d1 - rank d2``.

    ``d1`` is the row ``(rho_i - 1)`` and ``d2`` the transposed Fox Jacobian;
    ``rho`` must kill every relator, which is exactly ``d1 d2 = 0``.
    """
    rho = _as_character(p, rho)
    jac = fox_jacobian(p, rho)
    d1 = [v - 1 for v in rho.t]
    for j, row in enumerate(jac.rows):
        if sum((a * b for a, b in zip(row, d1)), Fraction(0)) != 0:
            raise InputError(
                f"not a character of the group: relator {j} evaluates to {format_scalar(rho(p.relators[j]))}"
            )
    rank_d1 = 1 if any(d1) else 0
    return p.n - rank_d1 - rank(jac)


def charvar_member(p: Presentation, rho, k: int) -> bool:
    if k < 1:
        raise InputError("depth k must be at least 1")
    return twisted_b1(p, rho) >= k


def charvar_minors(p: Presentation, k: int) -> list[MultiPoly]:
    """All ``(n-k)``-minors of the Alexander matrix; away from the trivial
    character their common zeros are ``V_k``.  Empty list: no condition."""
    if not 1 <= k <= p.n - 1:
        raise InputError(f"depth k must satisfy 1 <= k <= n-1 = {p.n - 1}")
    size = p.n - k
    if p.r < size:
        return []
    return minors(alexander_matrix(p), size)
