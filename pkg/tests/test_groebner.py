"""Buchberger, normal forms, ideal membership."""

import pytest

from richmult.groebner import (
    PolyIdeal,
    normal_form,
    reduced_groebner_basis,
    s_polynomial,
    interreduce,
)
from richmult.hilbert import ideal_dimension, ideal_hilbert_data
from richmult.poly import PolyRing, parse_polynomial


@pytest.fixture
def xy():
    return PolyRing(("x", "y"))


def polys(ring, *texts):
    return [parse_polynomial(ring, t) for t in texts]


class TestBasics:
    def test_single_generator(self, xy):
        (g,) = reduced_groebner_basis(polys(xy, "x"))
        assert str(g) == "x"

    def test_unit_ideal(self, xy):
        basis = reduced_groebner_basis(polys(xy, "x", "x + 1"))
        assert len(basis) == 1 and basis[0].is_constant()

    def test_zero_input(self, xy):
        assert reduced_groebner_basis([]) == []

    def test_s_polynomial_cancels_leads(self, xy):
        f, g = polys(xy, "x^2*y - 1", "x*y^2 - x")
        s = s_polynomial(f, g)
        # Leading terms x^2y and xy^2 both divide into lcm x^2y^2 and cancel.
        assert s.total_degree() < 4


class TestEllipticExample:
    """x^2 - y and x*y - 1: three solutions counted with multiplicity."""

    def setup_method(self):
        self.ring = PolyRing(("x", "y"))
        self.ideal = PolyIdeal(self.ring, polys(self.ring, "x^2 - y", "x*y - 1"))

    def test_dimension_zero(self):
        assert ideal_dimension(self.ideal) == 0

    def test_quotient_length_three(self):
        # Hand oracle: y = x^2 forces x^3 = 1, three simple roots, and y is
        # determined by x, so the quotient has vector-space dimension 3.
        assert ideal_hilbert_data(self.ideal).degree == 3

    def test_membership_by_elimination(self):
        # x^3 - 1 = x*(x^2 - y) + (x*y - 1) lies in the ideal.
        f = parse_polynomial(self.ring, "x^3 - 1")
        assert self.ideal.contains(f)
        assert not self.ideal.contains(parse_polynomial(self.ring, "x - 1"))


class TestNormalForm:
    def test_generator_reduces_to_zero(self, xy):
        gens = polys(xy, "x^2 - y", "x*y - 1")
        basis = reduced_groebner_basis(gens)
        for g in gens:
            assert normal_form(g, basis).is_zero()

    def test_one_survives_proper_ideal(self, xy):
        basis = reduced_groebner_basis(polys(xy, "x^2 - y"))
        assert normal_form(xy.one(), basis) == xy.one()

    def test_no_leading_divisibility_in_remainder(self, xy):
        basis = reduced_groebner_basis(polys(xy, "x^2 - y", "x*y - 1"))
        f = parse_polynomial(xy, "x^5 + y^5 + x*y + 1")
        r = normal_form(f, basis)
        from richmult.poly import mono_divides

        for e in r.terms:
            assert not any(mono_divides(g.leading_exps(), e) for g in basis)


class TestReducedBasis:
    def test_idempotent(self, xy):
        gens = polys(xy, "x^2 - y", "x*y - 1")
        basis = reduced_groebner_basis(gens)
        again = reduced_groebner_basis(basis)
        assert [str(g) for g in basis] == [str(g) for g in again]

    def test_monic_and_autoreduced(self, xy):
        basis = reduced_groebner_basis(polys(xy, "2*x^2 - 2*y", "3*x*y - 3"))
        from richmult.poly import mono_divides

        for g in basis:
            assert g.leading_coeff() == 1
            for h in basis:
                if h is g:
                    continue
                for e in g.terms:
                    assert not mono_divides(h.leading_exps(), e)

    def test_katsura_like_system(self):
        ring = PolyRing(("a", "b", "c"))
        gens = polys(
            ring,
            "a + 2*b + 2*c - 1",
            "a^2 + 2*b^2 + 2*c^2 - a",
            "2*a*b + 2*b*c - b",
        )
        ideal = PolyIdeal(ring, gens)
        basis = ideal.groebner()
        for g in gens:
            assert normal_form(g, basis).is_zero()
        assert ideal_dimension(ideal) == 0


class TestInterreduce:
    def test_drops_redundant(self, xy):
        gens = polys(xy, "x", "x^2 + y", "y")
        reduced = interreduce(gens)
        assert sorted(str(g) for g in reduced) == ["x", "y"]

    def test_preserves_ideal(self, xy):
        gens = polys(xy, "x^2 - y", "x^2 + x*y")
        reduced = interreduce(gens)
        before = PolyIdeal(xy, gens)
        after = PolyIdeal(xy, reduced)
        for g in gens:
            assert after.contains(g)
        for g in reduced:
            assert before.contains(g)
