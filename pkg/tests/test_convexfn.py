import math
import random
from fractions import Fraction as F

import numpy as np
import pytest

from growthlab import convexfn as cf
from growthlab import polytope as pt
from growthlab.errors import (
    DimensionMismatch,
    EmptyInput,
    IncomparableFamilies,
    NonpositiveEpsilon,
    NotNormalized,
)

from _oracles import grid_conjugate_1d, grid_inf_radial

SIGMA = pt.standard_simplex(2)
SQUARE = pt.box([2, 2])
TRAP = pt.hull([(0, 0), (3, 0), (1, 1), (0, 1)])

h_sigma = cf.MaxAffineFunction.support_function(SIGMA)
h_square = cf.MaxAffineFunction.support_function(SQUARE)
h_trap = cf.MaxAffineFunction.support_function(TRAP)


def random_max_affine(rng, n, pieces=5, denom=3):
    ps = []
    for _ in range(pieces):
        slope = tuple(F(rng.randint(-4, 4), rng.randint(1, denom))
                      for _ in range(n))
        ps.append((slope, F(rng.randint(-6, 6), rng.randint(1, denom))))
    return cf.MaxAffineFunction(ps)


class TestEval:
    def test_support_function_example(self):
        assert h_sigma((3, -1)) == 3

    def test_logsumexp_at_origin(self):
        u2 = cf.logsumexp_from_polytope(SIGMA, 2)
        assert u2((0.0, 0.0)) == pytest.approx(math.log(6) / 2, abs=1e-12)

    def test_fubini_study_at_origin(self):
        fs = cf.SmoothToricPotential.fubini_study(2, dim=2)
        assert fs((0.0, 0.0)) == pytest.approx(2 * math.log(3), abs=1e-12)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            h_sigma((1, 2, 3))


class TestLegendre:
    def test_support_function_conjugate_is_indicator(self):
        conj = cf.legendre(h_sigma)
        assert conj((F(1, 3), F(1, 3))) == 0
        assert conj((0, 0)) == 0
        assert conj((2, 2)) == math.inf
        assert conj.domain == SIGMA

    def test_one_dimensional_ramp(self):
        f = cf.MaxAffineFunction([((0,), 0), ((1,), 0)])
        conj = cf.legendre(f)
        assert conj((F(1, 2),)) == 0 and conj((0,)) == 0 and conj((1,)) == 0
        assert conj((F(3, 2),)) == math.inf

    def test_roof_values_match_grid_oracle(self):
        f = cf.MaxAffineFunction([((0,), 0), ((1,), -1), ((2,), -3)])
        conj = cf.legendre(f)
        assert conj((1,)) == 1
        assert grid_conjugate_1d(f, 1) == pytest.approx(1, abs=1e-3)
        assert conj((2,)) == 3
        assert grid_conjugate_1d(f, 2) == pytest.approx(3, abs=1e-3)

    def test_involution_on_random_functions(self):
        rng = random.Random(11)
        for n in (1, 2, 3):
            for _ in range(4):
                f = random_max_affine(rng, n)
                g = cf.legendre(f).conjugate()
                assert g.same_function(f)
                for _ in range(85):
                    x = tuple(F(rng.randint(-40, 40), rng.randint(1, 5))
                              for _ in range(n))
                    assert f(x) == g(x)

    def test_fenchel_young_with_equality_witnesses(self):
        rng = random.Random(13)
        for _ in range(10):
            f = random_max_affine(rng, 2)
            conj = cf.legendre(f)
            for p in f.pruned().pieces:
                # active slopes achieve equality: f*(slope) = -offset
                assert conj(p.slope) == -p.offset
            for _ in range(30):
                x = tuple(F(rng.randint(-15, 15), rng.randint(1, 3))
                          for _ in range(2))
                y = rng.choice(f.pieces).slope
                assert f(x) + conj(y) >= sum(a * b for a, b in zip(x, y))


class TestLogSumExp:
    def test_two_sided_bound_at_levels(self):
        rng = np.random.default_rng(3)
        for P, h in ((SIGMA, h_sigma), (SQUARE, h_square), (TRAP, h_trap)):
            for k in (1, 2, 4, 8):
                u = cf.logsumexp_from_polytope(P, k)
                width = math.log(u.lattice_count) / k
                X = rng.uniform(-30, 30, (200, 2))
                gap = u.value_many(X) - h.eval_many(X)
                assert gap.min() >= -1e-10
                assert gap.max() <= width + 1e-10

    def test_limit_along_rays(self):
        for k in (1, 2, 4, 8):
            u = cf.logsumexp_from_polytope(SIGMA, k)
            val = u((10.0, 0.0))
            assert 10 <= val <= 10 + math.log(u.lattice_count) / k

    def test_one_dimensional_geometric_sum(self):
        P = pt.box([3])
        u = cf.logsumexp_from_polytope(P, 2)   # exponents 0..6 at k=2
        x = 0.7
        expected = math.log(sum(math.exp(j * x) for j in range(7))) / 2
        assert u((x,)) == pytest.approx(expected, abs=1e-12)
        assert u((0.0,)) == pytest.approx(math.log(7) / 2, abs=1e-12)

    def test_requires_normalized_lattice_polytope(self):
        with pytest.raises(NotNormalized):
            cf.logsumexp_from_polytope(pt.hull([(1, 1), (2, 1), (1, 2)]), 1)
        with pytest.raises(NotNormalized):
            cf.logsumexp_from_polytope(pt.hull([(0, 0), (F(1, 2), 0), (0, 1)]), 2)


class TestSupDifference:
    def test_constant_shift(self):
        cert = cf.sup_difference(h_sigma, h_sigma.shifted(1))
        assert cert.lower == -1 and cert.upper == -1 and cert.finite

    def test_different_polytopes_unbounded_with_witness(self):
        cert = cf.sup_difference(h_sigma, h_square)
        assert cert.lower == -math.inf and cert.upper == 0
        d = [float(x) for x in cert.witnesses["inf_recession_direction"]]
        # the difference h_square - h_sigma must diverge along the witness
        vals = [h_square(tuple(t * c for c in d)) - h_sigma(tuple(t * c for c in d))
                for t in (1, 10, 100)]
        assert vals[0] < vals[1] < vals[2] and vals[2] > 50

    def test_lse_certificate(self):
        u3 = cf.logsumexp_from_polytope(SIGMA, 3)
        cert = cf.sup_difference(u3, h_sigma)
        assert cert.lower == 0
        assert cert.upper == pytest.approx(math.log(10) / 3, abs=1e-12)
        assert cert.witnesses["lattice_count"] == 10

    def test_incomparable(self):
        fs = cf.SmoothToricPotential.fubini_study(1, dim=2)
        with pytest.raises(IncomparableFamilies):
            cf.sup_difference(fs, h_sigma)
        u = cf.logsumexp_from_polytope(SIGMA, 2)
        with pytest.raises(IncomparableFamilies):
            cf.sup_difference(u, h_square)


class TestRadialComponent:
    def test_simplex_levels(self):
        v1 = cf.radial_component(h_sigma, 1)
        assert v1.same_function(cf.MaxAffineFunction([((1, 0), 0), ((0, 1), 0)]))
        v0 = cf.radial_component(h_sigma, 0)
        assert v0.same_function(cf.MaxAffineFunction([((0, 0), 0)]))
        assert cf.radial_component(h_sigma, 2) is None

    def test_square_off_vertex_level(self):
        v3 = cf.radial_component(h_square, 3)
        assert v3.same_function(
            cf.MaxAffineFunction([((1, 2), 0), ((2, 1), 0)]))

    def test_grid_infimum_oracle(self):
        rng = random.Random(5)
        for lam in (0, 1):
            v = cf.radial_component(h_sigma, lam)
            for _ in range(10):
                x = (rng.uniform(-5, 5), rng.uniform(-5, 5))
                grid = grid_inf_radial(h_sigma, lam, x, -50, 50, 2001)
                exact = v(x)
                assert exact <= grid + 1e-9
                assert grid - exact <= 0.08  # grid resolution * Lipschitz

    def test_mixed_offsets_against_grid(self):
        f = cf.MaxAffineFunction([((0, 0), 0), ((1, 0), F(1, 2)),
                                  ((0, 1), -1), ((1, 1), 0)])
        rng = random.Random(6)
        for lam in (0, F(1, 2), 1, 2):
            v = cf.radial_component(f, lam)
            assert v is not None
            assert all(sum(p.slope) == lam for p in v.pieces)
            for _ in range(10):
                x = (rng.uniform(-4, 4), rng.uniform(-4, 4))
                grid = grid_inf_radial(f, lam, x, -60, 60, 4001)
                exact = v(x)
                assert exact <= grid + 1e-9
                assert grid - exact <= 0.15

    def test_slice_identity_on_random_delzant(self, rng):
        from conftest import random_delzant
        for n in (2, 3):
            for _ in range(10):
                P = random_delzant(rng, n)
                h = cf.MaxAffineFunction.support_function(P)
                for lam in sorted({sum(v) for v in P.vertices}):
                    comp = cf.radial_component(h, lam)
                    sl = pt.sum_slice(P, lam)
                    href = cf.MaxAffineFunction([(v, 0) for v in sl.vertices])
                    assert comp.same_function(href)
                    for _ in range(5):
                        x = tuple(F(rng.randint(-30, 30), rng.randint(1, 4))
                                  for _ in range(n))
                        assert comp(x) == href(x)


class TestReassemble:
    def test_single_component_identity(self):
        assert cf.reassemble({F(1): h_sigma}).same_function(h_sigma)

    def test_simplex_from_slices(self):
        comps = {lam: cf.radial_component(h_sigma, lam) for lam in (0, 1)}
        assert cf.reassemble(comps).same_function(h_sigma)

    def test_trapezoid_from_slices(self):
        comps = {lam: cf.radial_component(h_trap, lam) for lam in (0, 1, 2, 3)}
        assert cf.reassemble(comps).same_function(h_trap)

    def test_partial_reassembly_below_full(self, rng):
        from conftest import random_delzant
        for _ in range(5):
            P = random_delzant(rng, 2)
            h = cf.MaxAffineFunction.support_function(P)
            lams = sorted({sum(v) for v in P.vertices})
            partial = cf.reassemble(
                {lam: cf.radial_component(h, lam) for lam in lams[:-1]})
            full = cf.reassemble(
                {lam: cf.radial_component(h, lam) for lam in lams})
            assert full.same_function(h)
            for _ in range(20):
                x = tuple(F(rng.randint(-20, 20)) for _ in range(2))
                assert partial(x) <= h(x)

    def test_empty_input(self):
        with pytest.raises(EmptyInput):
            cf.reassemble({})


class TestGrowsSlower:
    def test_fubini_study_inside_square(self):
        ok, _ = cf.grows_slower(
            cf.SmoothToricPotential.fubini_study(F(3, 2), dim=2), h_square)
        assert ok

    def test_equal_support_functions_fail(self):
        ok, _ = cf.grows_slower(h_sigma, h_sigma)
        assert not ok

    def test_escaping_vertex_witness(self):
        ok, wit = cf.grows_slower(
            cf.SmoothToricPotential.fubini_study(F(5, 2), dim=2), h_square)
        assert not ok
        v = wit["vertex"]
        facet = wit["facet"]
        assert sum(v) == F(5, 2)
        assert facet.value(v) > facet.offset  # vertex really violates it

    def test_divergence_along_radial_rays(self, rng):
        # properness acts toward |z| -> infinity: x moves along +ones
        from conftest import random_normalized_delzant
        for _ in range(5):
            P = random_normalized_delzant(rng, 2)
            lam_star = pt.simplex_inclusion(P)
            lam = lam_star - F(1, 8)
            if lam <= 0:
                continue
            fs = cf.SmoothToricPotential.fubini_study(lam, dim=2)
            h = cf.MaxAffineFunction.support_function(P)
            ok, _ = cf.grows_slower(fs, h)
            assert ok
            for _ in range(20):
                x0 = (rng.uniform(-10, 10), rng.uniform(-10, 10))
                ts = [40.0, 80.0, 160.0, 320.0]
                vals = [h((x0[0] + t, x0[1] + t)) - fs((x0[0] + t, x0[1] + t))
                        for t in ts]
                assert all(b > a for a, b in zip(vals, vals[1:]))
                assert vals[-1] > float(lam_star - lam) * 320 / 2

    def test_incomparable_families(self):
        u = cf.logsumexp_from_polytope(SIGMA, 2)
        with pytest.raises(IncomparableFamilies):
            cf.grows_slower(u, h_sigma)


class TestRegularizedMax:
    def test_outside_band_exact(self):
        assert cf.regularized_max(0, 1, 0.25) == 1
        assert cf.regularized_max(F(0), F(0), F(1)) == F(1, 4)

    def test_tent_values(self):
        eps = 0.5
        assert cf.regularized_max(0.25, 0.0, eps) == pytest.approx(
            0.125 + (0.0625 + 0.25) / 2.0, abs=1e-15)

    def test_grid_dominates_max_and_matches_off_band(self):
        eps = 0.3
        xs = np.linspace(-2, 2, 100)
        A, B = np.meshgrid(xs, xs)
        M = cf.regularized_max_many(A.ravel(), B.ravel(), eps)
        mx = np.maximum(A.ravel(), B.ravel())
        assert (M >= mx - 1e-15).all()
        assert (M <= mx + eps / 4 + 1e-15).all()
        off = np.abs(A.ravel() - B.ravel()) >= eps
        assert (M[off] == mx[off]).all()

    def test_midpoint_convexity_randomized(self):
        rng = np.random.default_rng(12)
        eps = 0.25
        a, b = rng.uniform(-5, 5, (2, 10 ** 4))
        a2, b2 = rng.uniform(-5, 5, (2, 10 ** 4))
        t = rng.uniform(0, 1, 10 ** 4)
        lhs = cf.regularized_max_many(t * a + (1 - t) * a2, t * b + (1 - t) * b2, eps)
        rhs = t * cf.regularized_max_many(a, b, eps) \
            + (1 - t) * cf.regularized_max_many(a2, b2, eps)
        assert (lhs <= rhs + 1e-12).all()

    def test_nonpositive_epsilon(self):
        with pytest.raises(NonpositiveEpsilon):
            cf.regularized_max(0, 0, 0)


class TestSerialization:
    def test_max_affine_roundtrip(self):
        f = cf.MaxAffineFunction([((F(1, 2), 0), F(-1, 3)), ((0, 1), 2)])
        g = cf.MaxAffineFunction.from_json_dict(f.to_json_dict())
        assert g.same_function(f)

    def test_lse_json_carries_polytope(self):
        u = cf.logsumexp_from_polytope(SIGMA, 2)
        d = u.to_json_dict()
        assert d["family"] == "lse" and d["k"] == 2 and "polytope" in d
        v = cf.SmoothToricPotential.from_json_dict(d)
        assert v.exponents == u.exponents

    def test_fs_json_roundtrip(self):
        u = cf.SmoothToricPotential.fubini_study(F(3, 2))
        v = cf.SmoothToricPotential.from_json_dict(u.to_json_dict())
        assert v.family == "fs" and v.lam == F(3, 2)


class TestPruning:
    def test_collinear_piece_dropped(self):
        f = cf.MaxAffineFunction([((0,), 0), ((1,), 0), ((2,), 0)])
        assert f.piece_set() == {((F(0),), F(0)), ((F(2),), F(0))}

    def test_low_offset_piece_dropped(self):
        f = cf.MaxAffineFunction([((0, 0), 0), ((1, 0), 0), ((0, 1), 0),
                                  ((F(1, 2), F(1, 4)), F(-10))])
        g = cf.MaxAffineFunction([((0, 0), 0), ((1, 0), 0), ((0, 1), 0)])
        assert f.same_function(g)

    def test_high_offset_interior_piece_kept(self):
        f = cf.MaxAffineFunction([((0, 0), 0), ((1, 0), 0), ((0, 1), 0),
                                  ((F(1, 2), F(1, 4)), 5)])
        assert (((F(1, 2), F(1, 4)), F(5))) in f.piece_set()
