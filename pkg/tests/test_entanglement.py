import numpy as np
import pytest

from upb3q.entanglement import (
    Cut,
    ObservableTriple,
    builtin_triples,
    is_ppt,
    lhv_oracle,
    min_pt_eig,
    partial_transpose,
    partial_transpose_tensor,
    signed_triple,
    triple_value,
    verify_triple_structure,
)
from upb3q.pauli import SQRT2, from_coherence, ket_from_string, to_coherence
from upb3q.states import X, rho_oq, rho_sep, rho_upb

X3 = X**3


def ghz():
    v = np.zeros(8, dtype=complex)
    v[0] = v[7] = 1 / SQRT2
    return np.outer(v, v.conj())


def test_cut_enumeration():
    assert [c.qubit for c in Cut] == [1, 2, 3]
    assert Cut.Q2.value == "2|13"


@pytest.mark.parametrize("cut", list(Cut))
def test_partial_transpose_routes_agree(cut):
    rng = np.random.default_rng(7 + cut.qubit)
    m = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
    rho = m @ m.conj().T
    rho /= np.trace(rho).real
    via_matrix = partial_transpose(rho, cut)
    via_tensor = from_coherence(partial_transpose_tensor(to_coherence(rho), cut))
    assert np.abs(via_matrix - via_tensor).max() < 1e-13
    # PT is an involution and trace preserving
    assert np.abs(partial_transpose(via_matrix, cut) - rho).max() == 0.0
    assert abs(np.trace(via_matrix).real - 1.0) < 1e-13


def test_ghz_is_npt_with_minus_half():
    for cut in Cut:
        assert abs(min_pt_eig(ghz(), cut) + 0.5) < 1e-12
    assert not is_ppt(ghz())


def test_product_state_is_ppt():
    rho = ket_from_string("0+1").projector()
    assert is_ppt(rho)


def test_upb_state_is_ppt_everywhere():
    rho = rho_upb()
    for cut in Cut:
        assert min_pt_eig(rho, cut) > -1e-12
    assert is_ppt(rho)


def test_builtin_triples_structure():
    for which in ("upb", "oq"):
        triples = builtin_triples(which)
        assert len(triples) == 4
        for tr in triples:
            assert verify_triple_structure(tr)
    with pytest.raises(ValueError):
        builtin_triples("nope")


def test_structure_check_rejects_bad_triples():
    non_commuting = ObservableTriple.from_labels("100", "200", "300")
    assert not verify_triple_structure(non_commuting)
    # pairwise commuting but the matrix product is a *negative* multiple of
    # the identity; the sign argument needs the positive orientation
    negative = ObservableTriple.from_labels("110", "220", "330")
    assert not verify_triple_structure(negative)
    # product not proportional to the identity at all
    skew = ObservableTriple.from_labels("033", "303", "300")
    assert not verify_triple_structure(skew)


def test_triple_values_on_the_three_states():
    upb_t = to_coherence(rho_upb())
    sep_t = to_coherence(rho_sep())
    oq_t = to_coherence(rho_oq())
    for tr in builtin_triples("upb"):
        assert abs(triple_value(upb_t, tr) + X3) < 1e-15
        assert abs(triple_value(sep_t, tr) - X3) < 1e-15
    for tr in builtin_triples("oq"):
        assert abs(triple_value(oq_t, tr) + X3) < 1e-15
        assert abs(triple_value(upb_t, tr) - X3) < 1e-15


def test_signed_triple_thresholds():
    upb_t = to_coherence(rho_upb())
    tr = builtin_triples("upb")[0]
    filled = signed_triple(upb_t, tr)
    assert filled.expected_signs == (1, -1, 1)  # (031, 301, 330) on rho_upb
    # a huge threshold blanks every sign
    blank = signed_triple(upb_t, tr, sign_tol=1.0)
    assert blank.expected_signs == (None, None, None)


def test_oracle_counts_per_triple():
    upb_t = to_coherence(rho_upb())
    sep_t = to_coherence(rho_sep())
    for tr in builtin_triples("upb"):
        assert lhv_oracle([signed_triple(upb_t, tr)]) == 0
        assert lhv_oracle([signed_triple(sep_t, tr)]) == 2
    # unconstrained triple counts the full assignment space (3 variables)
    blank = signed_triple(upb_t, builtin_triples("upb")[0], sign_tol=1.0)
    assert lhv_oracle([blank]) == 8


def test_oracle_joint_family_is_contextual():
    # Across a whole four-triple family the six shared variables admit no
    # globally consistent assignment even for the sign-compatible state:
    # the per-triple counts are 2 each, the joint count is 0.  This is why
    # the violation claims run the oracle one triple at a time.
    sep_t = to_coherence(rho_sep())
    joint = [signed_triple(sep_t, tr) for tr in builtin_triples("upb")]
    assert lhv_oracle(joint) == 0


def test_oracle_cross_compatibility():
    upb_t = to_coherence(rho_upb())
    oq_t = to_coherence(rho_oq())
    for tr in builtin_triples("oq"):
        assert lhv_oracle([signed_triple(upb_t, tr)]) == 2
    for tr in builtin_triples("upb"):
        assert lhv_oracle([signed_triple(oq_t, tr)]) == 2
