import pytest
import sympy as sp

from jumploci.errors import InputError
from jumploci.exact import MultiPoly
from jumploci.words import (
    GroupWord,
    Presentation,
    PresentationError,
    fox_derivative_ab,
    magnus_degree2,
    parse_word,
)

from oracles import fox_naive, magnus_truncated, poly_to_sympy

X4 = ["x1", "x2", "x3", "x4"]


def gen(i, e=1):
    return (i, e)


class TestParser:
    def test_commutator(self):
        w = parse_word("(x1,x2)", ["x1", "x2"])
        assert w.letters == (gen(0), gen(1), gen(0, -1), gen(1, -1))

    def test_relator_with_powers(self):
        w = parse_word("(x1, x3^2 x4)", X4)
        assert len(w) == 8
        u = GroupWord([gen(2), gen(2), gen(3)])
        assert w == GroupWord.generator(0).commutator(u)

    def test_iterated_commutator(self):
        w = parse_word("((x1,x2),x1)", ["x1", "x2"])
        assert len(w) == 10

    @pytest.mark.parametrize("text", ["x1^-2", "x1^{-2}", "x1^(-2)", "x1^-1 * x1^-1"])
    def test_exponent_forms(self, text):
        assert parse_word(text, ["x1"]) == GroupWord.generator(0, -2)

    def test_identity_and_reduction(self):
        assert parse_word("1", ["a"]).letters == ()
        assert parse_word("a a^-1 b b^-1", ["a", "b"]).letters == ()

    def test_longest_name_wins(self):
        w = parse_word("x10 x1", ["x1", "x10"])
        assert w.letters == (gen(1), gen(0))

    @pytest.mark.parametrize("text", ["(x1,", "x9", "x1^", "(x1 x2)^2)"])
    def test_malformed(self, text):
        with pytest.raises(InputError):
            parse_word(text, ["x1", "x2"])


class TestPresentation:
    def test_duplicate_generators(self):
        with pytest.raises(PresentationError):
            Presentation.from_strings(["a", "a"], [])

    def test_exponent_sum_matrix(self):
        p = Presentation.from_strings(["x", "y"], ["x y x y^-1 x^-1 y^-1"])
        assert p.exponent_sum_matrix() == [[1, -1]]
        assert not p.is_commutator_relator()

    def test_free_product_disjoint_names(self):
        p = Presentation.from_strings(["a"], [])
        with pytest.raises(InputError):
            p.free_product(p)
        q = p.free_product(Presentation.from_strings(["b", "c"], ["(b,c)"]))
        assert q.generators == ("a", "b", "c") and q.r == 1


class TestFox:
    def test_single_letter(self):
        assert fox_derivative_ab(GroupWord.generator(0), 0, 1) == MultiPoly.one(1)

    def test_commutator(self):
        w = parse_word("(x,y)", ["x", "y"])
        tx, ty = MultiPoly.var(2, 0), MultiPoly.var(2, 1)
        assert fox_derivative_ab(w, 0, 2) == 1 - ty
        assert fox_derivative_ab(w, 1, 2) == tx - 1

    def test_trefoil(self):
        w = parse_word("x y x y^-1 x^-1 y^-1", ["x", "y"])
        tx, ty = MultiPoly.var(2, 0), MultiPoly.var(2, 1)
        assert fox_derivative_ab(w, 0, 2) == 1 + tx * ty - tx
        t = MultiPoly.var(1, 0)
        diag = fox_derivative_ab(w, 0, 2).compose([t, t])
        assert diag.is_associate(t * t - t + 1)

    @pytest.mark.parametrize("text", ["(x1,x3^2 x4)", "((x1,x2),x1)", "x1^-3 x2 x3^-1 x1 x4^2", "(x1^-1,x3)(x2,x4)"])
    def test_against_product_rule_oracle(self, text):
        w = parse_word(text, X4)
        syms = sp.symbols("t1:5")
        for i in range(4):
            ours = poly_to_sympy(fox_derivative_ab(w, i, 4), syms)
            assert sp.simplify(ours - fox_naive(w.letters, i, syms)) == 0


class TestMagnus:
    def test_commutator(self):
        eps, c = magnus_degree2(parse_word("(x1,x2)", ["x1", "x2"]), 2)
        assert eps == [0, 0] and c == [[0, 1], [-1, 0]]

    def test_irrational_resonance_relator(self):
        eps, c = magnus_degree2(parse_word("(x1,x4)(x2^-2,x3)", X4), 4)
        assert eps == [0] * 4
        assert c[0][3] == 1 and c[1][2] == -2
        assert sum(abs(c[i][j]) for i in range(4) for j in range(4)) == 6

    def test_heisenberg_relator_in_third_term(self):
        eps, c = magnus_degree2(parse_word("((x1,x2),x1)", ["x1", "x2"]), 2)
        assert eps == [0, 0] and c == [[0, 0], [0, 0]]

    @pytest.mark.parametrize("text", ["x1^3 x2^-2 x1", "(x1,x2^2)(x2,x3)^-1", "x3^-2 x1 x2^-1"])
    def test_against_series_oracle(self, text):
        w = parse_word(text, ["x1", "x2", "x3"])
        assert magnus_degree2(w, 3) == magnus_truncated(w.letters, 3)


def test_format_round_trip():
    w = parse_word("x1^2 (x2,x3)^-1 x1^-1", ["x1", "x2", "x3"])
    names = ["x1", "x2", "x3"]
    assert parse_word(w.format(names), names) == w
