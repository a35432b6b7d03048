from fractions import Fraction

import pytest
import sympy as sp

from jumploci.cupdata import (
    LieRepData,
    cup_free,
    cup_free_abelian,
    cup_from_presentation,
    cup_product_join,
    cup_surface,
    cup_wedge,
)
from jumploci.errors import InputError
from jumploci.exact import MultiPoly, poly_divides
from jumploci.exact.scalar import sqrt
from jumploci.fixtures import fixture
from jumploci.resonance import (
    aomoto_h1_dim,
    aomoto_matrix,
    quadratic_cone_member,
    relative_aomoto_differentials,
    relative_aomoto_h1,
    resonance_contains_subspace,
    resonance_member,
    resonance_minors,
)
from jumploci.serialize import presentation_from_json
from jumploci.subspaces import Subspace

from oracles import poly_to_sympy, sympy_divides, sympy_rank


def cup_of(name):
    return cup_from_presentation(presentation_from_json(fixture(name)["presentation"]))


@pytest.fixture(scope="module")
def quadric():
    return cup_of("irrational-resonance")


@pytest.fixture(scope="module")
def a2134():
    return cup_of("A2134")


class TestAomotoDim:
    def test_free(self):
        assert aomoto_h1_dim(cup_free(2), [1, 0]) == 1

    def test_origin(self, quadric):
        assert aomoto_h1_dim(quadric, [0, 0, 0, 0]) == 4

    def test_genus_two(self):
        c = cup_surface(2)
        for z in ([1, 0, 0, 0], [1, 2, -3, 5], [0, 0, 0, 7]):
            assert aomoto_h1_dim(c, z) == 2

    def test_matrix_rank_against_sympy(self, quadric):
        m = aomoto_matrix(quadric, [0, 0, 1, 0])
        assert m.rank() == sympy_rank(m.rows) == 2

    def test_dimension_mismatch(self, quadric):
        with pytest.raises(InputError):
            aomoto_h1_dim(quadric, [1, 2])


class TestMembership:
    def test_quadric_points(self, quadric):
        assert resonance_member(quadric, [0, 0, 1, 0], 1)
        assert not resonance_member(quadric, [1, 1, 0, 0], 1)
        assert resonance_member(quadric, [sqrt(2), 1, 3, -1], 1)

    def test_zero_cup_table(self):
        c = cup_free(4)
        for z in ([1, 0, 0, 0], [2, -1, 3, 1]):
            for k in (1, 2, 3):
                assert resonance_member(c, z, k)
            assert not resonance_member(c, z, 4)


class TestMinors:
    def test_z2(self):
        ms = resonance_minors(cup_free_abelian(2), 1)
        x1, x2 = MultiPoly.var(2, 0), MultiPoly.var(2, 1)
        assert ms == [-x2, x1]

    def test_free_has_none(self):
        assert resonance_minors(cup_free(2), 1) == []

    def test_quadric_minors_divisible(self, quadric):
        ms = resonance_minors(quadric, 1)
        f = MultiPoly.var(4, 0) ** 2 - 2 * MultiPoly.var(4, 1) ** 2
        assert len(ms) == 4
        syms = sp.symbols("x1:5")
        for g in ms:
            assert g.total_degree() == 3
            assert poly_divides(f, g)
            assert sympy_divides(poly_to_sympy(f, syms), poly_to_sympy(g, syms), syms)


class TestContainment:
    @pytest.mark.parametrize("method", ["minors", "rank"])
    def test_quadric_components(self, quadric, method):
        plane = Subspace.from_equations(4, [[1, 0, 0, 0], [0, 1, 0, 0]])
        assert resonance_contains_subspace(quadric, plane, 1, method)
        r2 = sqrt(2)
        hyper = Subspace.from_equations(4, [[1, -r2, 0, 0]])
        assert resonance_contains_subspace(quadric, hyper, 1, method)
        assert not resonance_contains_subspace(quadric, Subspace.full(4), 1, method)

    @pytest.mark.parametrize("method", ["minors", "rank"])
    def test_a2134(self, a2134, method):
        assert resonance_contains_subspace(a2134, Subspace.from_equations(4, [[0, 0, 0, 1]]), 1, method)
        assert resonance_contains_subspace(a2134, Subspace.from_equations(4, [[0, 0, 2, 1]]), 1, method)
        assert resonance_contains_subspace(a2134, Subspace.coordinate(4, [1]), 2, method)
        assert resonance_contains_subspace(a2134, Subspace(4, [[1, 0, 0, 0]]), 2, method)
        assert not resonance_contains_subspace(a2134, Subspace.full(4), 2, method)

    def test_zero_subspace(self, a2134):
        assert resonance_contains_subspace(a2134, Subspace.zero(4), 4)
        assert not resonance_contains_subspace(a2134, Subspace.zero(4), 5)


class TestFamilies:
    def test_wedge_of_surfaces_is_resonant_everywhere(self):
        c = cup_wedge(cup_surface(1), cup_surface(2))
        assert resonance_contains_subspace(c, Subspace.full(6), 1)

    def test_join_of_free_groups(self):
        c = cup_product_join(cup_free(2), cup_free(2))
        assert resonance_contains_subspace(c, Subspace.coordinate(4, [0, 1]), 1)
        assert resonance_contains_subspace(c, Subspace.coordinate(4, [2, 3]), 1)
        assert not resonance_member(c, [1, 0, 1, 0], 1)


class TestRelative:
    def test_abelian_line_matches_aomoto(self, quadric):
        rep = LieRepData.abelian_line()
        for z in ([0, 0, 1, 0], [1, 1, 0, 0], [2, -1, 3, 5]):
            x = [[v] for v in z]
            assert quadratic_cone_member(quadric, rep, x)
            assert relative_aomoto_h1(quadric, rep, x) == aomoto_h1_dim(quadric, z)

    def test_zero_point(self, quadric):
        rep = LieRepData.sl2_standard()
        assert relative_aomoto_h1(quadric, rep, [[0, 0, 0]] * 4) == 4 * 2

    def test_commuting_nilpotents(self):
        c = cup_free_abelian(2)
        rep = LieRepData.sl2_standard()
        x = [[1, 0, 0], [2, 0, 0]]
        assert quadratic_cone_member(c, rep, x)
        d0, d1 = relative_aomoto_differentials(c, rep, x)
        # independent build: d0 = (E; 2E), d1 = mu_10 * theta(2E) | mu_01 * theta(E)
        E = sp.Matrix([[0, 1], [0, 0]])
        d0_ref = sp.Matrix.vstack(E, 2 * E)
        d1_ref = sp.Matrix.hstack(-2 * E, E)
        assert d0.rank() == d0_ref.rank() and d1.rank() == d1_ref.rank()
        assert relative_aomoto_h1(c, rep, x) == 4 - d1_ref.rank() - d0_ref.rank() == 2

    def test_non_commuting_pair_outside_cone(self):
        c = cup_free_abelian(2)
        rep = LieRepData.sl2_standard()
        x = [[1, 0, 0], [0, 1, 0]]
        assert not quadratic_cone_member(c, rep, x)
        with pytest.raises(InputError):
            relative_aomoto_h1(c, rep, x)

    def test_chain_property_on_cone(self):
        c = cup_surface(2)
        rep = LieRepData.sl2_standard()
        x = [[1, 0, 0], [Fraction(3), 0, 0], [0, 0, 0], [-2, 0, 0]]
        d0, d1 = relative_aomoto_differentials(c, rep, x)
        assert (d1 @ d0).is_zero()
