import math

import numpy as np
import pytest

from almostflat.bundle import identity_bundle
from almostflat.chern_karea import TORUS_TREE
from almostflat.errors import ComplexError, MismatchError, PreconditionError
from almostflat.fixtures import torus_substitution
from almostflat.quasirep import (
    AlmostRep,
    RepSequence,
    bundle_to_rep,
    clock_shift,
    closeness,
    commutator_presentation,
    defect,
    embed,
    evaluate_word,
    reduce_word,
    relation_reports,
    rep_direct_sum,
    rep_to_bundle,
    substitute,
    substitution_closeness
)
from almostflat.simplicial import presentation_from_tree
from tests.conftest import random_unitary

IDENTITY = {"u": (("u", 1),), "v": (("v", 1),)}
SWAP = {"u": (("v", 1),), "v": (("u", 1),)}


class TestAlmostRep:

    @pytest.mark.parametrize("k", [2, 3, 4, 24])
    def test_clock_shift_defect(self, k):
        assert defect(clock_shift(k)) == pytest.approx(2 * math.sin(math.pi / k))

    def test_clock_shift_commutator_is_a_root_of_unity(self):
        phi = clock_shift(6)
        relation = commutator_presentation().relations[0]
        assert np.allclose(evaluate_word(phi, relation), np.exp(2j * np.pi / 6) * np.eye(6))

    def test_clock_shift_needs_two_dimensions(self):
        with pytest.raises(PreconditionError):
            clock_shift(1)

    def test_empty_word_is_the_identity(self):
        assert np.allclose(evaluate_word(clock_shift(3), ()), np.eye(3))

    def test_non_unitary_image_is_refused(self):
        with pytest.raises(PreconditionError):
            AlmostRep(presentation=commutator_presentation(), images={"u": 2 * np.eye(2), "v": np.eye(2)})

    def test_missing_image_is_refused(self):
        with pytest.raises(MismatchError):
            AlmostRep(presentation=commutator_presentation(), images={"u": np.eye(2)})

    def test_reduce_word(self):
        word = (("u", 1), ("v", 1), ("v", -1), ("u", -1), ("v", 1))
        assert reduce_word(word) == (("v", 1),)

    def test_closeness(self):
        phi = clock_shift(4)
        assert closeness(phi, phi) == 0.0
        with pytest.raises(MismatchError):
            closeness(phi, clock_shift(5))

    def test_direct_sum_and_embedding(self):
        total = rep_direct_sum(clock_shift(3), clock_shift(4))
        assert total.rank == 7
        assert defect(total) == pytest.approx(2 * math.sin(math.pi / 3))

        embedded = embed(clock_shift(3), 5)
        assert embedded.rank == 5
        assert defect(embedded) == pytest.approx(defect(clock_shift(3)))
        with pytest.raises(MismatchError):
            embed(clock_shift(3), 2)


class TestSubstitution:

    def test_identity_substitution_keeps_the_images(self):
        phi = clock_shift(5)
        report = substitute(phi, IDENTITY, commutator_presentation(), certificates={0: [((), 0, 1)]})
        assert closeness(report.rep, phi) == 0.0
        assert report.bound == pytest.approx(defect(phi))

    def test_swap_is_certified_by_the_inverse_relation(self):
        phi = clock_shift(5)
        report = substitute(phi, SWAP, commutator_presentation(), certificates={0: [((), 0, -1)]})
        assert report.defect == pytest.approx(defect(phi))
        assert report.defect <= report.bound + 1e-12

    def test_wrong_certificate_is_refused(self):
        with pytest.raises(PreconditionError):
            substitute(clock_shift(5), SWAP, commutator_presentation(), certificates={0: [((), 0, 1)]})

    def test_missing_generator_word_is_refused(self):
        with pytest.raises(MismatchError):
            substitute(clock_shift(5), {"u": (("u", 1),)}, commutator_presentation())

    def test_substitution_preserves_closeness(self, rng):
        phi = clock_shift(4)
        nearby = AlmostRep(
            presentation=phi.presentation,
            images={g: image @ random_unitary(4, rng, 1e-3) for g, image in phi.images.items()}
        )
        assert substitution_closeness(phi, nearby, SWAP, commutator_presentation()) == pytest.approx(
            closeness(phi, nearby)
        )


class TestConversion:

    def test_identity_bundle_gives_a_representation(self, torus):
        presentation = presentation_from_tree(torus)
        phi = bundle_to_rep(identity_bundle(torus, rank=2), presentation)
        assert defect(phi) == pytest.approx(0.0, abs=1e-12)
        assert all(np.allclose(image, np.eye(2)) for image in phi.images.values())

    def test_representation_to_bundle_and_back(self, torus, rng):
        presentation = presentation_from_tree(torus)
        phi = AlmostRep(
            presentation=presentation,
            images={g: random_unitary(2, rng, 0.005) for g in presentation.generators}
        )
        bundle = rep_to_bundle(phi, torus)
        assert bundle.base == torus
        assert closeness(bundle_to_rep(bundle, presentation), phi) < 1e-12

    def test_clock_shift_round_trip(self, torus):
        presentation = presentation_from_tree(torus, tree=frozenset(TORUS_TREE), basepoint=0)
        phi = substitute(clock_shift(24), torus_substitution(presentation), presentation).rep
        bundle = rep_to_bundle(phi, torus, TORUS_TREE, presentation, depth=2)
        recovered = bundle_to_rep(bundle, presentation)
        assert closeness(recovered, phi) <= defect(phi)
        assert closeness(recovered, phi) < 1e-9
        assert defect(recovered) == pytest.approx(defect(phi), abs=1e-9)

    def test_relation_reports_on_a_flat_torus_bundle(self, torus):
        presentation = presentation_from_tree(torus)
        reports = relation_reports(identity_bundle(torus), presentation)
        assert len(reports) == len(presentation.relations)
        assert all(r.passed and r.defect == pytest.approx(0.0, abs=1e-12) for r in reports)

    def test_presentation_without_edges_is_refused(self, torus):
        with pytest.raises(ComplexError):
            rep_to_bundle(clock_shift(3), torus)


class TestSequence:

    def test_clock_shift_sequence_is_asymptotic(self):
        sequence = RepSequence([clock_shift(k) for k in (6, 12, 24)])
        assert len(sequence) == 3
        assert sequence.is_asymptotic()
        table = sequence.cauchy_table()
        assert [row[:2] for row in table] == [(0, 1), (1, 2)]

    def test_constant_sequence_is_not_asymptotic(self):
        sequence = RepSequence([clock_shift(6)] * 3)
        assert not sequence.is_asymptotic()
        assert all(row[2] == 0.0 for row in sequence.cauchy_table())

    def test_decreasing_ranks_are_refused(self):
        with pytest.raises(MismatchError):
            RepSequence([clock_shift(6), clock_shift(3)])
