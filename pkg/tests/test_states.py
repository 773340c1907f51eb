import itertools

import numpy as np
import pytest

from upb3q.pauli import SQRT2, BadSubset, from_coherence, ket_from_string, to_coherence
from upb3q.states import (
    FAMILY_SYMBOLS,
    X,
    NotOrthogonal,
    WrongCount,
    check_upb,
    complement_map,
    expected_oq_tensor,
    expected_upb_tensor,
    family,
    family_mixture,
    in_set_C,
    partial_reflect,
    reflect,
    reflect_density,
    rho_oq,
    rho_sep,
    rho_upb,
)


def test_x_constant():
    assert abs(X - 1 / (8 * SQRT2)) < 1e-16


@pytest.mark.parametrize("name", sorted(FAMILY_SYMBOLS))
def test_families_are_orthonormal_product_sets(name):
    kets = family(name).kets
    assert len(kets) == 4
    for a, b in itertools.combinations(kets, 2):
        assert abs(np.vdot(a.amplitudes, b.amplitudes)) < 1e-14
    for k in kets:
        assert abs(np.vdot(k.amplitudes, k.amplitudes).real - 1) < 1e-14


@pytest.mark.parametrize("name", sorted(FAMILY_SYMBOLS))
def test_family_mixture_is_state(name):
    rho = family_mixture(name)
    assert abs(np.trace(rho).real - 1.0) < 1e-14
    assert np.abs(rho - rho.conj().T).max() < 1e-14
    assert np.linalg.eigvalsh(rho).min() > -1e-14


def test_rho_upb_matches_component_table():
    got = to_coherence(rho_upb()).components
    want = expected_upb_tensor().components
    assert np.abs(got - want).max() < 1e-14
    # sign census of the table itself
    vals = want[1:]
    assert np.sum(np.abs(vals - X) < 1e-15) == 10
    assert np.sum(np.abs(vals + X) < 1e-15) == 6
    assert np.sum(np.abs(vals) < 1e-15) == 47


def test_rho_oq_matches_component_table():
    got = to_coherence(rho_oq()).components
    assert np.abs(got - expected_oq_tensor().components).max() < 1e-14


def test_sep_and_upb_components_are_negatives():
    s = to_coherence(rho_sep()).components
    u = to_coherence(rho_upb()).components
    assert np.abs(s[1:] + u[1:]).max() < 1e-14
    assert abs(s[0] - u[0]) < 1e-15


def test_distance_between_partners():
    # 32 slots differ by 2x ... no: 16 slots flip sign, each contributing (2x)^2
    d = np.linalg.norm(rho_sep() - rho_upb())
    assert abs(d - np.sqrt(16 * (2 * X) ** 2)) < 1e-14
    assert abs(d - 1 / SQRT2) < 1e-14


def test_reflect_swaps_partners_and_is_involution():
    t_sep = to_coherence(rho_sep())
    assert np.abs(from_coherence(reflect(t_sep)) - rho_upb()).max() < 1e-14
    twice = reflect(reflect(t_sep))
    assert np.abs(twice.components - t_sep.components).max() == 0.0
    assert np.abs(reflect_density(rho_upb()) - rho_sep()).max() < 1e-14


@pytest.mark.parametrize("pair", [(1, 2), (1, 3), (2, 3)])
def test_partial_reflect_pairs_hit_upb(pair):
    t_sep = to_coherence(rho_sep())
    out = from_coherence(partial_reflect(t_sep, pair))
    assert np.abs(out - rho_upb()).max() < 1e-14


def test_partial_reflect_rejects_bad_pairs():
    t = to_coherence(rho_sep())
    for bad in ((1,), (1, 1), (0, 2), (1, 2, 3)):
        with pytest.raises(BadSubset):
            partial_reflect(t, bad)


def test_in_set_c():
    assert in_set_C(rho_sep())
    assert in_set_C(rho_upb())
    ghz = np.zeros(8, dtype=complex)
    ghz[0] = ghz[7] = 1 / SQRT2
    assert not in_set_C(np.outer(ghz, ghz.conj()))  # top eigenvalue 1 > 1/4


def test_complement_map_validation():
    kets = family("psi").kets
    rho = complement_map(kets)
    assert abs(np.trace(rho).real - 1.0) < 1e-14
    with pytest.raises(WrongCount):
        complement_map(kets[:3])
    overlapping = (kets[0], kets[1], kets[2], kets[2])
    with pytest.raises(NotOrthogonal):
        complement_map(overlapping)


def test_complement_annihilates_members():
    kets = family("psi").kets
    rho = rho_upb()
    for k in kets:
        assert np.abs(rho @ k.amplitudes).max() < 1e-14


@pytest.mark.parametrize("name", sorted(FAMILY_SYMBOLS))
def test_all_four_families_are_upbs(name):
    res = check_upb(family(name).kets)
    assert res.orthogonal
    assert res.all_product
    assert res.unextendable
    assert res.extension_witness is None


def test_weakened_set_is_extendable():
    kets = family("psi").kets[:3] + (ket_from_string("111"),)
    res = check_upb(kets)
    assert not res.unextendable
    w = res.extension_witness
    assert w is not None
    # deterministic first witness of the lexicographic assignment scan
    assert w.symbols == "1-0"
    for k in kets:
        assert abs(np.vdot(k.amplitudes, w.amplitudes)) < 1e-10


def test_extendable_detection_reports_orthogonality():
    # non-orthogonal input set: flag goes down, search still runs
    kets = (
        ket_from_string("000"),
        ket_from_string("00+"),
        ket_from_string("110"),
        ket_from_string("1-1"),
    )
    res = check_upb(kets)
    assert not res.orthogonal
