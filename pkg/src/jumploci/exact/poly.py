"""Sparse multivariate polynomials and Laurent polynomials with exact coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .scalar import Scalar, as_scalar, format_scalar

__all__ = ["MultiPoly", "poly_divides", "grlex_key"]

Exponent = tuple[int, ...]


def grlex_key(e: Exponent) -> tuple:
    return (sum(e), e)


class MultiPoly:
    """Immutable polynomial in ``nvars`` variables.

    Exponents may be negative (Laurent mode).  Only nonzero coefficients are
    stored, so equality is equality of coefficient maps.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, object] | Iterable = ()):
        self.nvars = int(nvars)
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, Scalar] = {}
        for e, c in items:
            e = tuple(int(v) for v in e)
            if len(e) != self.nvars:
                raise ValueError(f"exponent {e} has wrong length for {self.nvars} variables")
            c = as_scalar(c)
            if e in acc:
                c = acc[e] + c
            acc[e] = c
        self._terms = {e: c for e, c in acc.items() if c != 0}
        self._hash = None

    # construction

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "MultiPoly":
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> "MultiPoly":
        c = as_scalar(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c != 0 else {})

    @classmethod
    def one(cls, nvars: int) -> "MultiPoly":
        return cls.constant(nvars, 1)

    @classmethod
    def var(cls, nvars: int, i: int, power: int = 1) -> "MultiPoly":
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        e = [0] * nvars
        e[i] = power
        return cls._raw(nvars, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, exponent: Sequence[int], coeff=1) -> "MultiPoly":
        return cls(len(exponent), {tuple(exponent): coeff})

    @classmethod
    def linear_form(cls, coeffs: Sequence) -> "MultiPoly":
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            c = as_scalar(c)
            if c != 0:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        return cls._raw(n, terms)

    # inspection

    @property
    def terms(self) -> dict[Exponent, Scalar]:
        return dict(self._terms)

    def items(self):
        """Terms in canonical order: descending graded lex."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def support(self) -> list[Exponent]:
        return [e for e, _ in self.items()]

    def coefficient(self, e: Sequence[int]) -> Scalar:
        return self._terms.get(tuple(e), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def is_laurent(self) -> bool:
        return any(v < 0 for e in self._terms for v in e)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def leading(self) -> tuple[Exponent, Scalar]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._terms, key=grlex_key)
        return e, self._terms[e]

    # arithmetic

    def _check(self, other: "MultiPoly"):
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def _lift(self, other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        try:
            return MultiPoly.constant(self.nvars, other)
        except TypeError:
            return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            v = terms.get(e)
            v = c if v is None else v + c
            if v == 0:
                terms.pop(e, None)
            else:
                terms[e] = v
        return MultiPoly._raw(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms: dict[Exponent, Scalar] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = terms.get(e)
                terms[e] = c1 * c2 if v is None else v + c1 * c2
        return MultiPoly._raw(self.nvars, {e: c for e, c in terms.items() if c != 0})

    __rmul__ = __mul__

    def scale(self, c) -> "MultiPoly":
        c = as_scalar(c)
        if c == 0:
            return MultiPoly.zero(self.nvars)
        return MultiPoly._raw(self.nvars, {e: v * c for e, v in self._terms.items()})

    def shift(self, e: Sequence[int]) -> "MultiPoly":
        """Multiply by the monomial ``t^e``."""
        return MultiPoly._raw(
            self.nvars, {tuple(a + b for a, b in zip(k, e)): c for k, c in self._terms.items()}
        )

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("negative powers are defined only for monomials")
            (e, c), = self._terms.items()
            return MultiPoly._raw(self.nvars, {tuple(k * v for v in e): (1 / c) ** (-k)})
        result = MultiPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        try:
            return self == MultiPoly.constant(self.nvars, other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    # evaluation and substitution

    def evaluate(self, point: Sequence) -> Scalar:
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.nvars}")
        pt = [as_scalar(v) for v in point]
        total: Scalar = Fraction(0)
        for e, c in self._terms.items():
            term = c
            for v, k in zip(pt, e):
                if k:
                    if k < 0 and v == 0:
                        raise ZeroDivisionError("Laurent monomial evaluated at a zero coordinate")
                    term = term * v**k
            total = total + term
        return total

    def compose(self, images: Sequence["MultiPoly"]) -> "MultiPoly":
        """Substitute variable ``i`` by ``images[i]`` (all in a common ring).

        Negative exponents require the corresponding image to be a monomial.
        """
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        if not images:
            return MultiPoly.constant(0, self.coefficient(()))
        m = images[0].nvars
        cache: dict[tuple[int, int], MultiPoly] = {}

        def power(i: int, k: int) -> MultiPoly:
            key = (i, k)
            if key not in cache:
                cache[key] = images[i] ** k
            return cache[key]

        total = MultiPoly.zero(m)
        for e, c in self._terms.items():
            term = MultiPoly.constant(m, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            total = total + term
        return total

    def monomial_substitute(self, matrix: Sequence[Sequence[int]]) -> "MultiPoly":
        """Apply ``t_i -> prod_j s_j^{matrix[i][j]}`` (a map of tori)."""
        if len(matrix) != self.nvars:
            raise ValueError("need one row per variable")
        m = len(matrix[0]) if matrix else 0
        terms: dict[Exponent, Scalar] = {}
        for e, c in self._terms.items():
            new = tuple(sum(e[i] * matrix[i][j] for i in range(self.nvars)) for j in range(m))
            v = terms.get(new)
            terms[new] = c if v is None else v + c
        return MultiPoly._raw(m, {e: c for e, c in terms.items() if c != 0})

    # Laurent normalisation and division

    def min_exponents(self) -> Exponent:
        if not self._terms:
            return (0,) * self.nvars
        return tuple(min(e[i] for e in self._terms) for i in range(self.nvars))

    def laurent_normal(self) -> "MultiPoly":
        """Associate with no monomial factor: each variable's minimal exponent is 0."""
        lo = self.min_exponents()
        return self.shift(tuple(-v for v in lo))

    def monic_normal(self) -> "MultiPoly":
        """Laurent-normal associate with leading coefficient 1 (unit-free canonical form)."""
        if not self._terms:
            return self
        p = self.laurent_normal()
        return p.scale(1 / p.leading()[1])

    def is_associate(self, other: "MultiPoly") -> bool:
        """Equal up to a nonzero scalar times a Laurent monomial."""
        self._check(other)
        return self.monic_normal() == other.monic_normal()

    def exact_quotient(self, divisor: "MultiPoly") -> "MultiPoly | None":
        """``q`` with ``self == divisor * q`` in the polynomial ring, or None.

        Both operands must have nonnegative exponents.
        """
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_laurent() or divisor.is_laurent():
            raise ValueError("exact_quotient needs ordinary polynomials; normalise Laurent inputs first")
        lead_e, lead_c = divisor.leading()
        dterms = list(divisor._terms.items())
        rem = dict(self._terms)
        quot: dict[Exponent, Scalar] = {}
        while rem:
            e = max(rem, key=grlex_key)
            diff = tuple(a - b for a, b in zip(e, lead_e))
            if any(v < 0 for v in diff):
                return None
            c = rem[e] / lead_c
            quot[diff] = c
            for de, dc in dterms:
                k = tuple(a + b for a, b in zip(de, diff))
                v = rem.get(k, 0) - c * dc
                if v == 0:
                    rem.pop(k, None)
                else:
                    rem[k] = v
        return MultiPoly._raw(self.nvars, quot)

    # display

    def format(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k != 0
            )
            cs = format_scalar(c)
            if not mono:
                s = cs
            elif cs == "1":
                s = mono
            elif cs == "-1":
                s = "-" + mono
            elif "√" in cs and ("+" in cs[1:] or "-" in cs[1:]):
                s = f"({cs})*{mono}"
            else:
                s = f"{cs}*{mono}"
            parts.append(s)
        out = parts[0]
        for s in parts[1:]:
            out += " - " + s[1:] if s.startswith("-") else " + " + s
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {self.format()!r})"


def poly_divides(f: MultiPoly, g: MultiPoly) -> bool:
    """True iff ``g = f*h`` for a polynomial ``h``.

    With Laurent operands divisibility is taken in the Laurent ring, i.e. up
    to monomial units.
    """
    if f.is_zero():
        raise ZeroDivisionError("divisibility by the zero polynomial is undefined")
    if g.is_zero():
        return True
    if f.is_laurent() or g.is_laurent():
        return g.laurent_normal().exact_quotient(f.laurent_normal()) is not None
    return g.exact_quotient(f) is not None
