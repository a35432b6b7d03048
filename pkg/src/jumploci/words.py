"""Free-group words, finite presentations, Fox calculus and Magnus expansion.

Word syntax: juxtaposition is the product, ``g^k`` (also ``g^{k}``, ``g^(k)``)
an integer power of a generator or bracketed word, ``(u,v)`` the commutator
``u v u^-1 v^-1`` and ``(u)`` plain grouping.  Whitespace and ``*`` are
ignored; ``1`` denotes the identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError
from .exact import MultiPoly

__all__ = [
    "GroupWord",
    "Presentation",
    "PresentationError",
    "parse_word",
    "fox_derivative_ab",
    "magnus_degree2",
]

Letter = tuple[int, int]


class PresentationError(InputError):
    """Unknown generator, malformed word syntax or inconsistent presentation."""


def _reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for g, e in letters:
        if e not in (1, -1):
            raise ValueError(f"letter exponent must be +1 or -1, got {e}")
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


class GroupWord:
    """A freely reduced word; letters are ``(generator index, +1 or -1)``."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Sequence[int]] = ()):
        self.letters = _reduce((int(g), int(e)) for g, e in letters)

    @classmethod
    def generator(cls, i: int, power: int = 1) -> "GroupWord":
        e = 1 if power > 0 else -1
        return cls([(i, e)] * abs(power))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.letters + other.letters)

    def inverse(self) -> "GroupWord":
        return GroupWord((g, -e) for g, e in reversed(self.letters))

    def __pow__(self, k: int) -> "GroupWord":
        base = self if k >= 0 else self.inverse()
        return GroupWord(base.letters * abs(k))

    def commutator(self, other: "GroupWord") -> "GroupWord":
        return self * other * self.inverse() * other.inverse()

    def max_generator(self) -> int:
        return max((g for g, _ in self.letters), default=-1)

    def exponent_sums(self, n: int) -> list[int]:
        out = [0] * n
        for g, e in self.letters:
            out[g] += e
        return out

    def format(self, names: Sequence[str]) -> str:
        if not self.letters:
            return "1"
        parts = []
        for g, e in self.letters:
            if parts and parts[-1][0] == g and (parts[-1][1] > 0) == (e > 0):
                parts[-1][1] += e
            else:
                parts.append([g, e])
        return " ".join(names[g] if e == 1 else f"{names[g]}^{e}" for g, e in parts)

    def __eq__(self, other):
        if not isinstance(other, GroupWord):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return f"GroupWord({list(self.letters)})"


class _Parser:
    def __init__(self, text: str, generators: Sequence[str]):
        self.s = "".join(ch for ch in text.replace("−", "-") if not ch.isspace() and ch != "*")
        self.text = text
        self.pos = 0
        self.names = sorted(((name, i) for i, name in enumerate(generators)), key=lambda t: -len(t[0]))

    def fail(self, msg: str):
        raise PresentationError(f"{msg} at position {self.pos} in {self.text!r}")

    def peek(self) -> str:
        return self.s[self.pos] if self.pos < len(self.s) else ""

    def parse(self) -> GroupWord:
        w = self.word()
        if self.pos != len(self.s):
            self.fail(f"unexpected {self.peek()!r}")
        return w

    def word(self) -> GroupWord:
        w = GroupWord()
        while self.peek() and self.peek() not in ",)":
            w = w * self.factor()
        return w

    def factor(self) -> GroupWord:
        w = self.primary()
        while self.peek() == "^":
            self.pos += 1
            w = w ** self.exponent()
        return w

    def exponent(self) -> int:
        close = {"{": "}", "(": ")"}.get(self.peek())
        if close:
            self.pos += 1
        start = self.pos
        if self.peek() in "+-":
            self.pos += 1
        while self.peek().isdigit():
            self.pos += 1
        digits = self.s[start:self.pos]
        if digits in ("", "+", "-"):
            self.fail("expected an integer exponent")
        if close:
            if self.peek() != close:
                self.fail(f"expected {close!r}")
            self.pos += 1
        return int(digits)

    def primary(self) -> GroupWord:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            u = self.word()
            if self.peek() == ",":
                self.pos += 1
                v = self.word()
                if self.peek() != ")":
                    self.fail("expected ')' closing commutator")
                self.pos += 1
                return u.commutator(v)
            if self.peek() != ")":
                self.fail("expected ')'")
            self.pos += 1
            return u
        for name, i in self.names:
            if self.s.startswith(name, self.pos):
                self.pos += len(name)
                return GroupWord.generator(i)
        if ch == "1":
            self.pos += 1
            return GroupWord()
        if not ch:
            self.fail("unexpected end of input")
        self.fail(f"unknown generator or symbol {ch!r}")


def parse_word(text: str, generators: Sequence[str]) -> GroupWord:
    """Parse ``text`` into a freely reduced word over ``generators``."""
    return _Parser(text, generators).parse()


@dataclass(frozen=True)
class Presentation:
    """Finite presentation: ordered generator names and relator words."""

    generators: tuple[str, ...]
    relators: tuple[GroupWord, ...]

    def __post_init__(self):
        gens = tuple(self.generators)
        if len(set(gens)) != len(gens):
            raise PresentationError("generator names must be unique")
        if any(not g for g in gens):
            raise PresentationError("generator names must be nonempty")
        rels = tuple(self.relators)
        for k, w in enumerate(rels):
            if w.max_generator() >= len(gens):
                raise PresentationError(f"relator {k} references an undefined generator")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", rels)

    @classmethod
    def from_strings(cls, generators: Sequence[str], relators: Sequence[str]) -> "Presentation":
        gens = tuple(generators)
        return cls(gens, tuple(parse_word(r, gens) for r in relators))

    @property
    def n(self) -> int:
        return len(self.generators)

    @property
    def r(self) -> int:
        return len(self.relators)

    def relator_strings(self) -> list[str]:
        return [w.format(self.generators) for w in self.relators]

    def exponent_sum_matrix(self) -> list[list[int]]:
        return [w.exponent_sums(self.n) for w in self.relators]

    def is_commutator_relator(self) -> bool:
        return all(not any(row) for row in self.exponent_sum_matrix())

    def free_product(self, other: "Presentation") -> "Presentation":
        """Presentation of the free product; generator names must be disjoint."""
        if set(self.generators) & set(other.generators):
            raise PresentationError("free product needs disjoint generator names")
        shift = self.n
        moved = tuple(GroupWord((g + shift, e) for g, e in w) for w in other.relators)
        return Presentation(self.generators + other.generators, self.relators + moved)


def fox_derivative_ab(w: GroupWord, i: int, n: int) -> MultiPoly:
    """Abelianized Fox derivative of ``w`` with respect to generator ``i``."""
    if not 0 <= i < n:
        raise IndexError(f"generator index {i} out of range for {n} generators")
    if w.max_generator() >= n:
        raise IndexError("word uses a generator beyond the stated count")
    prefix = [0] * n
    terms: dict[tuple[int, ...], int] = {}
    for g, e in w.letters:
        if e == 1:
            if g == i:
                key = tuple(prefix)
                terms[key] = terms.get(key, 0) + 1
            prefix[g] += 1
        else:
            prefix[g] -= 1
            if g == i:
                key = tuple(prefix)
                terms[key] = terms.get(key, 0) - 1
    return MultiPoly(n, terms)


def magnus_degree2(w: GroupWord, n: int) -> tuple[list[int], list[list[int]]]:
    """Degree <= 2 Magnus coefficients of ``w``.

    Returns ``(eps, c)`` where ``eps[i]`` is the coefficient of ``X_i`` and
    ``c[i][j]`` that of ``X_i X_j`` under ``x -> 1+X``, ``x^-1 -> 1-X+X^2``.
    """
    if w.max_generator() >= n:
        raise IndexError("word uses a generator beyond the stated count")
    eps = [0] * n
    c = [[0] * n for _ in range(n)]
    for g, e in w.letters:
        # (1 + a + C)(1 + eX_g + [e<0] X_g^2): new C gains a*eX_g and the X_g^2 term
        for i in range(n):
            if eps[i]:
                c[i][g] += eps[i] * e
        if e < 0:
            c[g][g] += 1
        eps[g] += e
    return eps, c
