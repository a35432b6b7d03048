from fractions import Fraction

import pytest
import sympy as sp

from jumploci.artin import Graph
from jumploci.cupdata import (
    CupData,
    LieRepData,
    cup_config_torus,
    cup_free,
    cup_free_abelian,
    cup_from_presentation,
    cup_product_join,
    cup_raag,
    cup_surface,
    cup_wedge,
    infinitesimal_alexander_matrix,
    koszul_delta2,
    koszul_delta3,
    pair_index,
    wedge2_basis,
)
from jumploci.errors import InputError
from jumploci.fixtures import fixture
from jumploci.resonance import aomoto_h1_dim
from jumploci.serialize import presentation_from_json
from jumploci.words import Presentation


def pres(name):
    return presentation_from_json(fixture(name)["presentation"])


def test_pair_index_is_lex_position():
    for n in range(2, 7):
        for pos, (i, j) in enumerate(wedge2_basis(n)):
            assert pair_index(i, j, n) == pos


class TestFromPresentation:
    def test_irrational_resonance_rows(self):
        c = cup_from_presentation(pres("irrational-resonance"))
        assert c.n == 4 and c.m == 3
        assert c.boundary_rows() == [
            {(0, 1): 1},
            {(0, 3): 1, (1, 2): -2},
            {(0, 2): -1, (1, 3): 1},
        ]

    def test_heisenberg_is_zero(self):
        assert cup_from_presentation(pres("heisenberg")).is_zero()

    def test_z2(self):
        c = cup_from_presentation(Presentation.from_strings(["x", "y"], ["(x,y)"]))
        assert (c.n, c.m) == (2, 1) and c.product(0, 1) == (1,) and c.product(1, 0) == (-1,)

    def test_mixed_relators_refused(self):
        with pytest.raises(InputError, match="commutator-relator"):
            cup_from_presentation(pres("trefoil"))


class TestBuilders:
    def test_torus(self):
        c = cup_surface(1)
        assert (c.n, c.m, c.product(0, 1)) == (2, 1, (1,))

    def test_punctured_sphere_is_free(self):
        c = cup_surface(0, 3)
        assert c.n == 2 and c.is_zero()

    def test_raag_discrete_and_k2(self):
        assert cup_raag(Graph.discrete(3)).is_zero()
        assert cup_raag(Graph.complete(2)) == cup_free_abelian(2)

    def test_raag_c4(self):
        c = cup_raag(Graph.cycle(4))
        assert (c.n, c.m) == (4, 4)
        assert sorted((i, j) for i, j, _ in c.mu) == sorted(Graph.cycle(4).edges)

    def test_wedge_of_tori(self):
        c = cup_wedge(cup_surface(1), cup_surface(1))
        assert (c.n, c.m) == (4, 2)
        assert c.product(0, 1) == (1, 0) and c.product(2, 3) == (0, 1)
        assert c.product(0, 2) == (0, 0)

    def test_wedge_of_free(self):
        c = cup_wedge(cup_free(1), cup_free(1))
        assert c.n == 2 and c.is_zero()

    def test_join_of_lines_is_torus(self):
        c = cup_product_join(cup_free(1), cup_free(1))
        assert (c.n, c.m) == (2, 1) and c.product(0, 1) != (0,)

    def test_join_torus_free(self):
        c = cup_product_join(cup_surface(1), cup_free(2))
        mixed = [(i, j) for i, j, _ in c.mu if i < 2 <= j]
        assert len(mixed) == 4 and c.m == 5

    def test_config_torus_dimensions(self):
        assert cup_config_torus(1) == cup_surface(1)
        assert (cup_config_torus(2).n, cup_config_torus(2).m) == (4, 5)
        assert (cup_config_torus(3).n, cup_config_torus(3).m) == (6, 12)

    def test_config_torus_2_kills_diagonal(self):
        c = cup_config_torus(2)
        # (a1 - a2) ^ (b1 - b2) maps to zero
        a = [1, 0, -1, 0]
        b = [0, 1, 0, -1]
        img = [sum(a[i] * b[j] * c.coefficient(i, j, k) for i in range(4) for j in range(4)) for k in range(c.m)]
        assert img == [0] * c.m

    def test_permute_preserves_resonance(self):
        c = cup_raag(Graph.path(4))
        d = c.permute([2, 0, 3, 1])
        z = [1, 0, 2, 0]
        zp = [0] * 4
        for i, p in enumerate([2, 0, 3, 1]):
            zp[p] = z[i]
        assert aomoto_h1_dim(c, z) == aomoto_h1_dim(d, zp)

    def test_bad_vectors(self):
        with pytest.raises(InputError):
            CupData(2, 1, ((0, 1, (1, 2)),))
        with pytest.raises(InputError):
            CupData(2, 1, ((0, 0, (1,)),))


class TestKoszul:
    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_chain_property(self, n):
        prod = koszul_delta2(n) @ koszul_delta3(n)
        assert prod.is_zero()

    def test_free_rank2_shape(self):
        m = infinitesimal_alexander_matrix(cup_free(2))
        assert m.shape == (1, 0)

    def test_z2_cokernel_vanishes(self):
        m = infinitesimal_alexander_matrix(cup_free_abelian(2))
        assert m.evaluate([3, 5]).rank() == 1

    def test_irrational_resonance_corank(self):
        c = cup_from_presentation(pres("irrational-resonance"))
        m = infinitesimal_alexander_matrix(c)
        assert m.shape == (6, 7)
        assert 6 - m.evaluate([0, 0, 1, 0]).rank() >= 1


class TestLieRep:
    def test_sl2_is_valid(self):
        rep = LieRepData.sl2_standard()
        assert rep.dim_b == 3 and rep.dim_v == 2

    def test_bad_homomorphism_rejected(self):
        s = LieRepData.sl2_standard()
        wrong = [[[0, 1], [0, 0]], [[0, 0], [1, 0]], [[2, 0], [0, -1]]]
        with pytest.raises(InputError):
            LieRepData([[list(v) for v in row] for row in s.structure], wrong)

    def test_act_matches_sympy(self):
        rep = LieRepData.sl2_standard()
        m = rep.act([1, 2, Fraction(1, 2)])
        e, f, h = sp.Matrix([[0, 1], [0, 0]]), sp.Matrix([[0, 0], [1, 0]]), sp.Matrix([[1, 0], [0, -1]])
        ref = e + 2 * f + sp.Rational(1, 2) * h
        assert [[sp.Rational(x.numerator, x.denominator) for x in r] for r in m.rows] == ref.tolist()
