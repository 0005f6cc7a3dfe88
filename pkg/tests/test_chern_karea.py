import math

import numpy as np
import pytest

from almostflat.bundle import direct_sum, flatness_audit, identity_bundle, pullback
from almostflat.chern_karea import (
    KAreaProbe,
    ProbeTerm,
    c_flat_check,
    chern_number,
    clock_shift_probe,
    clock_shift_torus_bundle,
    face_fluxes,
    face_loops,
    probe_verdict
)
from almostflat.errors import ComplexError, ThresholdError
from almostflat.fixtures import monopole_bundle, sphere_complex, torus_double_cover
from almostflat.quasirep import clock_shift, defect
from almostflat.simplicial import SimplicialPath
from tests.conftest import conjugated, random_unitary


@pytest.fixture(scope="module")
def clock_shift_bundle():
    return clock_shift_torus_bundle(24, depth=3)


class TestChernNumber:

    def test_trivial_bundle(self, torus):
        assert chern_number(identity_bundle(torus, rank=2)) == 0

    @pytest.mark.parametrize("q", [-2, -1, 0, 1, 2])
    def test_monopole_charge(self, q):
        assert chern_number(monopole_bundle(sphere_complex(1), q, depth=2)) == q

    def test_monopole_fluxes_are_half_the_charge_times_the_area(self, octahedron):
        fluxes = face_fluxes(monopole_bundle(octahedron, 1, depth=2))
        assert len(fluxes) == 8
        assert all(flux == pytest.approx(math.pi / 4) for _, flux in fluxes)

    def test_flux_near_pi_is_refused(self, octahedron):
        with pytest.raises(ThresholdError):
            face_fluxes(monopole_bundle(octahedron, 4, depth=2))

    def test_surfaces_only(self, square):
        with pytest.raises(ComplexError):
            chern_number(identity_bundle(square))

    def test_clock_shift_torus_bundle(self, clock_shift_bundle):
        assert clock_shift_bundle.rank == 24
        assert chern_number(clock_shift_bundle) == 1

    def test_chern_numbers_add_under_direct_sums(self, octahedron):
        total = direct_sum(monopole_bundle(octahedron, 1, depth=2), monopole_bundle(octahedron, -2, depth=2))
        assert chern_number(total) == -1

    def test_double_cover_doubles_the_chern_number(self, clock_shift_bundle):
        assert chern_number(pullback(clock_shift_bundle, torus_double_cover())) == 2

    def test_clock_shift_pair_of_rank_two_is_refused(self):
        with pytest.raises(ThresholdError):
            clock_shift_torus_bundle(2, depth=2)

    def test_chern_number_is_gauge_invariant(self, clock_shift_bundle, octahedron, rng):
        assert chern_number(conjugated(clock_shift_bundle, random_unitary(24, rng))) == 1
        monopole = monopole_bundle(octahedron, -2, depth=2)
        assert chern_number(conjugated(monopole, random_unitary(1, rng))) == -2


class TestKArea:

    def test_face_loops_carry_the_one_triangle_constant(self, torus):
        loops = face_loops(torus)
        assert len(loops) == 14
        assert all(weight == pytest.approx(7 * math.sqrt(2)) for _, weight in loops)
        assert all(loop.is_closed and len(loop) == 4 for loop, _ in loops)

    def test_c_flat_check(self, clock_shift_bundle, torus):
        epsilon = flatness_audit(clock_shift_bundle).epsilon
        assert c_flat_check(clock_shift_bundle, face_loops(torus), epsilon).passed

        report = c_flat_check(clock_shift_bundle, face_loops(torus), 0.0)
        assert not report.passed
        assert report.failing is not None
        assert report.to_dict()["passed"] is False

    def test_identity_loop_passes_at_zero_flatness(self, torus):
        report = c_flat_check(identity_bundle(torus), [(SimplicialPath((0, 1, 3, 0)), 1.0)], 0.0)
        assert report.passed
        assert report.rows[0].defect == pytest.approx(0.0, abs=1e-12)

    def test_clock_shift_flatness_follows_the_defect(self):
        audits = {}
        for k in (6, 12, 24, 48):
            assert defect(clock_shift(k)) == pytest.approx(2 * math.sin(math.pi / k), abs=1e-10)
            bundle = clock_shift_torus_bundle(k, depth=2)
            assert chern_number(bundle) == 1
            audits[k] = flatness_audit(bundle).epsilon

        constants = [epsilon / (2 * math.sin(math.pi / k)) for k, epsilon in audits.items()]
        assert max(constants) <= 2 * min(constants)
        assert audits[48] <= 0.55 * audits[24]

    def test_clock_shift_probe_is_a_witness(self):
        verdict = probe_verdict(clock_shift_probe([12, 24], depth=3))
        assert verdict.witness
        assert verdict.depth == 2
        assert verdict.chern == 1
        assert verdict.rows[0]["epsilon"] > verdict.rows[1]["epsilon"]

    def test_constant_flatness_is_not_a_witness(self, clock_shift_bundle, torus):
        term = ProbeTerm(clock_shift_bundle, flatness_audit(clock_shift_bundle).epsilon, 1)
        verdict = probe_verdict(KAreaProbe(terms=[term, term], loops=face_loops(torus)))
        assert not verdict.witness
        assert verdict.depth == 0

    def test_trivial_bundles_are_not_a_witness(self, torus):
        terms = [ProbeTerm(identity_bundle(torus), eps, 0) for eps in (0.1, 0.05)]
        verdict = probe_verdict(KAreaProbe(terms=terms, loops=face_loops(torus)))
        assert not verdict.witness
        assert verdict.chern == 0
        assert np.all([row["pass"] for row in verdict.rows])
