import numpy as np
import pytest

from almostflat.bundle import (
    CocycleBundle,
    cocycle_check,
    direct_sum,
    flatness_audit,
    from_subdivision,
    identity_bundle,
    pullback,
    to_subdivision
)
from almostflat.errors import ComplexError, MismatchError
from almostflat.fixtures import (
    circle_covering,
    circle_with_holonomy,
    monopole_bundle,
    random_flat_bundle,
    simplex_complex
)
from almostflat.sampled import SampledUnitaryMap, identity_map
from almostflat.simplicial import SimplicialPath, barycentric_subdivide, last_vertex_map
from almostflat.transport import edge_transport, path_transport
from almostflat.trivialize import iso_between
from tests.conftest import random_unitary


def test_identity_bundle_is_flat_and_a_cocycle(torus):
    bundle = identity_bundle(torus, rank=2)
    assert flatness_audit(bundle).epsilon == 0.0
    assert flatness_audit(bundle).worst is None
    assert cocycle_check(bundle).passed


def test_random_flat_bundle_respects_its_flatness_bound(square):
    bundle = random_flat_bundle(square, 2, 0.05)
    audit = flatness_audit(bundle)
    assert 0.0 < audit.epsilon <= 0.05 + 1e-12
    assert audit.per_pair[audit.worst] == audit.epsilon
    assert cocycle_check(bundle).passed


def test_missing_transition_is_refused(square):
    transitions = dict(identity_bundle(square).transitions)
    del transitions[((1,), (0, 1, 2))]
    with pytest.raises(ComplexError):
        CocycleBundle(base=square, rank=1, depth=4, transitions=transitions)


def test_transition_of_the_wrong_rank_is_refused(square):
    transitions = dict(identity_bundle(square).transitions)
    transitions[((1,), (0, 1))] = identity_map((1,), 4, 2)
    with pytest.raises(MismatchError):
        CocycleBundle(base=square, rank=1, depth=4, transitions=transitions)


def test_cocycle_check_reports_a_corrupted_transition(rng):
    triangle = simplex_complex(2)
    bundle = random_flat_bundle(triangle, 2, 0.05, depth=2)
    transitions = dict(bundle.transitions)
    corrupted = bundle.transitions[((0,), (0, 1, 2))].values @ random_unitary(2, rng)
    transitions[((0,), (0, 1, 2))] = SampledUnitaryMap((0,), 2, corrupted)

    report = cocycle_check(CocycleBundle(base=triangle, rank=2, depth=2, transitions=transitions))
    assert not report.passed
    assert report.violation.tau == (0,)
    assert report.violation.sigma == (0, 1, 2)
    assert report.max_residual > 1e-3


def test_restriction_shares_transitions(square):
    bundle = random_flat_bundle(square, 1, 0.05)
    edge = square.subcomplex([(0, 1)])
    restricted = bundle.restrict(edge)
    assert len(restricted.transitions) == 5
    assert restricted.transitions[((0,), (0, 1))] is bundle.transitions[((0,), (0, 1))]


def test_direct_sum_adds_ranks(square):
    first = random_flat_bundle(square, 1, 0.03)
    second = random_flat_bundle(square, 2, 0.05, rng=np.random.default_rng(1))
    total = direct_sum(first, second)
    assert total.rank == 3
    assert flatness_audit(total).epsilon == pytest.approx(
        max(flatness_audit(first).epsilon, flatness_audit(second).epsilon)
    )
    assert cocycle_check(total).passed


def test_direct_sum_needs_a_common_base(square, torus):
    with pytest.raises(MismatchError):
        direct_sum(identity_bundle(square), identity_bundle(torus))


def test_pullback_along_a_double_covering_squares_the_holonomy(rng):
    u = random_unitary(2, rng)
    bundle = circle_with_holonomy(u, n=6)
    lifted = pullback(bundle, circle_covering(6, 2))

    loop = SimplicialPath(tuple(range(12)) + (0,))
    assert np.allclose(path_transport(lifted, loop).matrix, u @ u)


def test_pullback_needs_the_right_target(square):
    with pytest.raises(MismatchError):
        pullback(identity_bundle(square), circle_covering(6, 2))


def test_subdivision_transfer_and_back():
    triangle = simplex_complex(2)
    bundle = random_flat_bundle(triangle, 2, 0.02, depth=2)

    subdivided = to_subdivision(bundle)
    assert subdivided.base == barycentric_subdivide(triangle)[0]
    assert cocycle_check(subdivided).passed

    back = from_subdivision(subdivided, triangle)
    assert back.base == triangle
    assert cocycle_check(back).passed
    iso = iso_between(bundle, back)
    assert iso.residual() < 1e-8


def test_subdivision_halves_the_edge_transitions():
    triangle = simplex_complex(2)
    bundle = random_flat_bundle(triangle, 2, 0.05, depth=4)
    subdivided = to_subdivision(bundle)

    half_edge = next(s for s in subdivided.base.simplices_of_dimension(1) if set(s) == {(0,), (0, 1)})
    chamber = next(s for s in subdivided.base.simplices_of_dimension(2) if set(half_edge) < set(s))
    halved = subdivided.transitions[(half_edge, chamber)].lipschitz_estimate()
    full = bundle.transitions[((0, 1), max(chamber, key=len))].lipschitz_estimate()
    assert 0.0 < halved <= 0.5 * full * (1 + 1e-3)


def test_monopole_survives_the_subdivision_round_trip(octahedron):
    bundle = monopole_bundle(octahedron, 1, depth=2)
    subdivided = to_subdivision(bundle)
    assert cocycle_check(subdivided).passed

    back = from_subdivision(subdivided, octahedron)
    assert cocycle_check(back).passed
    assert iso_between(bundle, back).residual() < 1e-7


def test_pullback_along_the_last_vertex_map():
    triangle = simplex_complex(2)
    bundle = random_flat_bundle(triangle, 2, 0.02, depth=2)

    pulled = pullback(bundle, last_vertex_map(triangle))
    assert pulled.base == barycentric_subdivide(triangle)[0]
    assert cocycle_check(pulled).passed
    assert np.allclose(edge_transport(pulled, (0,), (0, 1)), edge_transport(bundle, 0, 1))
    assert np.allclose(edge_transport(pulled, (1,), (0, 1)), np.eye(2))
