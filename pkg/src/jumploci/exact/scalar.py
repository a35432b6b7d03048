"""Exact scalars: rationals and elements of a quadratic field Q(sqrt d).

Rationals are plain :class:`fractions.Fraction` values.  Elements
``a + b*sqrt(d)`` with ``b != 0`` are :class:`QuadNumber`; any arithmetic
result whose irrational part cancels collapses back to a ``Fraction``, so a
rational value always has exactly one representation.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

__all__ = [
    "QuadNumber",
    "Scalar",
    "as_scalar",
    "sqrt",
    "is_rational",
    "parse_scalar",
    "format_scalar",
    "scalar_sort_key",
    "common_radicand",
]


def _is_squarefree(d: int) -> bool:
    if d in (0, 1):
        return False
    m = abs(d)
    f = 2
    while f * f <= m:
        if m % (f * f) == 0:
            return False
        f += 1
    return True


class QuadNumber:
    """An element ``a + b*sqrt(d)`` of Q(sqrt d) with ``b != 0``.

    Construct through :func:`sqrt` or :meth:`make`; the latter returns a
    ``Fraction`` when ``b == 0``.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        if not _is_squarefree(d):
            raise ValueError(f"radicand must be a squarefree integer other than 0, 1; got {d}")
        b = Fraction(b)
        if b == 0:
            raise ValueError("QuadNumber requires a nonzero irrational part; use QuadNumber.make")
        self.a = Fraction(a)
        self.b = b
        self.d = int(d)

    @staticmethod
    def make(a, b, d: int) -> "Scalar":
        b = Fraction(b)
        if b == 0:
            return Fraction(a)
        return QuadNumber(a, b, d)

    def _coerce(self, other):
        if isinstance(other, QuadNumber):
            if other.d != self.d:
                raise ValueError(f"cannot mix Q(sqrt {self.d}) and Q(sqrt {other.d})")
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    def __add__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return QuadNumber.make(self.a + c[0], self.b + c[1], self.d)

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return QuadNumber.make(self.a - c[0], self.b - c[1], self.d)

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return QuadNumber.make(c[0] - self.a, c[1] - self.b, self.d)

    def __mul__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        a, b = c
        return QuadNumber.make(self.a * a + self.d * self.b * b, self.a * b + self.b * a, self.d)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def conjugate(self) -> "QuadNumber":
        return QuadNumber(self.a, -self.b, self.d)

    def inverse(self) -> "QuadNumber":
        n = self.norm()
        return QuadNumber(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        if isinstance(other, QuadNumber):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return QuadNumber.make(self.a / other, self.b / other, self.d)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __neg__(self):
        return QuadNumber(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result: Scalar = Fraction(1)
        base: Scalar = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QuadNumber):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if isinstance(other, (int, Fraction)):
            return False  # b != 0 by construction
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return True

    def __repr__(self):
        return f"QuadNumber({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[Fraction, QuadNumber]


def as_scalar(x) -> Scalar:
    """Coerce ``int``/``Fraction``/``QuadNumber``/numeric string to a Scalar."""
    if isinstance(x, QuadNumber):
        return x
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"not an exact scalar: {x!r} ({type(x).__name__})")


def sqrt(d: int) -> QuadNumber:
    return QuadNumber(0, 1, d)


def is_rational(x) -> bool:
    return not isinstance(x, QuadNumber)


def common_radicand(values) -> int | None:
    """The single radicand used by ``values``, or None if all are rational."""
    found = None
    for v in values:
        if isinstance(v, QuadNumber):
            if found is None:
                found = v.d
            elif found != v.d:
                raise ValueError(f"cannot mix Q(sqrt {found}) and Q(sqrt {v.d})")
    return found


_RAT = r"[+-]?\d+(?:/\d+)?"
_QUAD_RE = re.compile(
    rf"^(?:(?P<a>{_RAT})(?=[+-]|$))?"
    rf"(?:(?P<sign>[+-])?(?P<b>\d+(?:/\d+)?)?\*?(?:√|sqrt)\(?(?P<d>-?\d+)\)?)?$"
)


def parse_scalar(text: str) -> Scalar:
    """Parse ``"3"``, ``"-3/7"``, ``"√2"``, ``"1+2√2"``, ``"1/2-3/4sqrt(5)"``."""
    s = text.strip().replace("−", "-").replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    try:
        return Fraction(s)
    except ValueError:
        pass
    m = _QUAD_RE.match(s)
    if not m or m.group("d") is None:
        raise ValueError(f"malformed scalar {text!r}")
    a = Fraction(m.group("a")) if m.group("a") else Fraction(0)
    b = Fraction(m.group("b")) if m.group("b") else Fraction(1)
    if m.group("sign") == "-":
        b = -b
    elif m.group("sign") is None and m.group("a"):
        raise ValueError(f"malformed scalar {text!r}")
    return QuadNumber.make(a, b, int(m.group("d")))


def _fmt_rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(x) -> str:
    """Canonical string: ``"-3/7"``, ``"1+2√2"``, ``"-√2"``."""
    x = as_scalar(x)
    if isinstance(x, Fraction):
        return _fmt_rat(x)
    rad = f"√{x.d}" if x.d > 0 else f"√({x.d})"
    b = x.b
    if b == 1:
        bpart = rad
    elif b == -1:
        bpart = "-" + rad
    else:
        bpart = _fmt_rat(b) + rad
    if x.a == 0:
        return bpart
    if not bpart.startswith("-"):
        bpart = "+" + bpart
    return _fmt_rat(x.a) + bpart


def scalar_sort_key(x) -> tuple:
    x = as_scalar(x)
    if isinstance(x, Fraction):
        return (x, Fraction(0), 0)
    return (x.a, x.b, x.d)
