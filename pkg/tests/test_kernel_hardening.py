"""Adversarial checks of the Groebner kernel on randomized inputs.

Two independent certificates: every S-polynomial of a computed basis must
reduce to zero under plain long division (the defining criterion, checked
without the pair-pruning logic under test), and random ideal elements
assembled as explicit combinations of the generators must have normal form
zero.  When sympy is importable the reduced bases are compared against its
groebner implementation as a third opinion.
"""

import random
from fractions import Fraction

import pytest

from richmult.groebner import (
    PolyIdeal,
    normal_form,
    reduced_groebner_basis,
    s_polynomial,
)
from richmult.hilbert import ideal_hilbert_data
from richmult.localmult import multiplicity_at_origin
from richmult.poly import PolyRing


def random_poly(ring, rng, max_terms=4, max_exp=2, max_coeff=4):
    terms = {}
    for _ in range(rng.randrange(1, max_terms + 1)):
        exps = tuple(rng.randrange(0, max_exp + 1) for _ in range(ring.nvars))
        coeff = Fraction(rng.randrange(-max_coeff, max_coeff + 1))
        if coeff:
            terms[exps] = terms.get(exps, Fraction(0)) + coeff
    return ring.from_terms({e: c for e, c in terms.items() if c})


def random_ideal(ring, rng, max_gens=3):
    gens = []
    while len(gens) < rng.randrange(1, max_gens + 1):
        g = random_poly(ring, rng)
        if not g.is_zero():
            gens.append(g)
    return gens


class TestBuchbergerCertificate:
    def test_all_s_polynomials_reduce_to_zero(self):
        ring = PolyRing(("x", "y", "z"))
        rng = random.Random(4242)
        for _ in range(40):
            gens = random_ideal(ring, rng)
            basis = reduced_groebner_basis(gens)
            if not basis or basis[0].is_constant():
                continue
            for i in range(len(basis)):
                for j in range(i):
                    s = s_polynomial(basis[i], basis[j])
                    assert normal_form(s, basis).is_zero(), (gens, basis, i, j)

    def test_random_combinations_are_members(self):
        ring = PolyRing(("x", "y", "z"))
        rng = random.Random(777)
        for _ in range(40):
            gens = random_ideal(ring, rng)
            basis = reduced_groebner_basis(gens)
            combo = ring.zero()
            for g in gens:
                combo = combo + random_poly(ring, rng, max_terms=2) * g
            assert normal_form(combo, basis).is_zero()

    def test_homogenized_ring_bases_certify_too(self):
        base = PolyRing(("x", "y"))
        hring = base.homogenized()
        rng = random.Random(31)
        for _ in range(25):
            gens = [g.homogenize(hring) for g in random_ideal(base, rng) if not g.is_zero()]
            basis = reduced_groebner_basis(gens)
            if not basis or basis[0].is_constant():
                continue
            for i in range(len(basis)):
                for j in range(i):
                    s = s_polynomial(basis[i], basis[j])
                    assert normal_form(s, basis).is_zero()


class TestAgainstSympy:
    def test_reduced_bases_match(self):
        sympy = pytest.importorskip("sympy")
        names = ("x", "y", "z")
        ring = PolyRing(names)
        symbols = sympy.symbols(names)

        def to_sympy(poly):
            expr = sympy.Integer(0)
            for e, c in poly.terms.items():
                term = sympy.Rational(c.numerator, c.denominator)
                for s, k in zip(symbols, e):
                    term *= s**k
                expr += term
            return expr

        rng = random.Random(1009)
        compared = 0
        for _ in range(25):
            gens = random_ideal(ring, rng)
            ours = reduced_groebner_basis(gens)
            theirs = sympy.groebner(
                [to_sympy(g) for g in gens], *symbols, order="grevlex"
            )
            # Ours is monic, sympy's is integer content-free: compare the
            # content-free normalizations.
            ours_set = {to_sympy(g.primitive()).expand() for g in ours}
            theirs_set = {sympy.expand(e) for e in theirs.exprs}
            assert ours_set == theirs_set, gens
            compared += 1
        assert compared == 25

    def test_plane_curve_multiplicity_matches_lowest_form_degree(self):
        sympy = pytest.importorskip("sympy")
        # For a plane curve the multiplicity at the origin is the degree of
        # the lowest form; expand a clover-shaped quartic via sympy and
        # compare.
        x, y = sympy.symbols("x y")
        ring = PolyRing(("x", "y"))
        curve = sympy.expand((x**2 + y**2) ** 2 + 3 * x**2 * y - y**3)
        poly = sympy.Poly(curve, x, y)
        terms = {
            (int(mx), int(my)): Fraction(int(c)) for (mx, my), c in poly.terms()
        }
        target = PolyIdeal(ring, [ring.from_terms(terms)])
        lowest_degree = min(mx + my for mx, my in terms)
        assert multiplicity_at_origin(target) == lowest_degree == 3


class TestWiderShapeSpotChecks:
    def test_g26_instances_agree(self):
        """Eight-variable charts: fast path equals oracle on a handful of
        nested triples, including singular ones."""
        from richmult.engine import build_report
        from richmult.weyl import CosetRep, GrassShape

        shape = GrassShape(2, 6)
        cases = [
            ((3, 6), (1, 2), (1, 3)),
            ((4, 6), (1, 3), (2, 4)),
            ((2, 6), (1, 2), (1, 6)),
            ((4, 6), (1, 4), (1, 4)),
        ]
        for w_e, v_e, tau_e in cases:
            w, v, tau = (CosetRep(shape, e) for e in (w_e, v_e, tau_e))
            report = build_report(shape, w, v, tau)
            assert report.agreement, report
            assert report.degree_product_ok

    def test_hilbert_degree_matches_slicing_on_new_cone(self):
        """Degree of a fresh determinantal cone, double-checked by cutting
        with random affine hyperplanes and counting solutions."""
        ring = PolyRing(tuple(f"z{i}" for i in range(6)))
        # 2x2 minors of a 2x3 matrix of variables.
        z = [ring.var(i) for i in range(6)]
        gens = [
            z[0] * z[4] - z[1] * z[3],
            z[0] * z[5] - z[2] * z[3],
            z[1] * z[5] - z[2] * z[4],
        ]
        cone = PolyIdeal(ring, gens)
        data = ideal_hilbert_data(cone)
        rng = random.Random(55)
        cut = list(gens)
        for _ in range(data.dimension):
            coeffs = [Fraction(rng.randrange(-7, 8)) for _ in range(6)]
            cut.append(
                sum((c * ring.var(i) for i, c in enumerate(coeffs)), ring.const(rng.randrange(1, 7)))
            )
        sliced = PolyIdeal(ring, cut)
        assert ideal_hilbert_data(sliced).degree == data.degree == 3
