"""Named states and bases: the UPB complement state, its separable partner,
reflection maps, the bounded-spectrum set C, and the unextendability check.

The central pair is
    rho_sep = (1/4) sum_j |psi_j><psi_j|       (separable)
    rho_upb = (I - sum_j |psi_j><psi_j|) / 4   (bound entangled complement)
with psi = {01+, 1+0, +01, ---} an unextendable product basis (UPB): no
product state is orthogonal to all four members.  In coherence components the
two states share one magnitude x = 1/(8 sqrt 2) on 16 homogeneous slots and
are exchanged by the reflection that negates every homogeneous component.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .pauli import (
    SQRT2,
    BadSubset,
    CoherenceTensor,
    ProductKet,
    ket_from_string,
    label_to_tuple,
    mix,
    product_ket_from_locals,
    to_coherence,
)

# Common magnitude of the nonzero homogeneous coherence components.
X = 1.0 / (8.0 * SQRT2)

FAMILY_SYMBOLS = {
    "psi": ("01+", "1+0", "+01", "---"),
    "mu": ("01-", "1-0", "-01", "+++"),
    "theta": ("+1-", "-+1", "1-+", "000"),
    "phi": ("10-", "0-1", "-10", "+++"),
}

# Coherence-component tables (labels of +x / -x slots; all other homogeneous
# components vanish).  rho_upb carries the first pair; the quarter-period
# orbit state rho_oq carries the second.
UPB_PLUS = ("031", "033", "103", "111", "133", "303", "310", "313", "330", "331")
UPB_MINUS = ("011", "013", "101", "110", "130", "301")
OQ_PLUS = ("011", "013", "101", "110", "130", "301")
OQ_MINUS = ("031", "033", "103", "113", "131", "303", "310", "311", "330", "333")


class NotOrthogonal(ValueError):
    """Kets supplied to complement_map are not pairwise orthogonal."""


class WrongCount(ValueError):
    """complement_map requires exactly 4 kets."""


@dataclass(frozen=True)
class KetFamily:
    """A named quadruple of mutually orthogonal product kets."""

    name: str
    kets: tuple


def family(name):
    """One of the four named ket families: psi, mu, theta, phi."""
    if name not in FAMILY_SYMBOLS:
        raise ValueError(f"unknown family {name!r}; choose from {sorted(FAMILY_SYMBOLS)}")
    return KetFamily(name, tuple(ket_from_string(s) for s in FAMILY_SYMBOLS[name]))


def family_mixture(name):
    """Equal-weight mixture of a named family's projectors."""
    kets = family(name).kets
    return mix([0.25] * 4, [k.projector() for k in kets])


def rho_sep():
    """The separable partner: equal-weight mixture of the psi projectors."""
    return family_mixture("psi")


def rho_upb():
    """The bound entangled complement of the psi basis, (I - sum proj)/4."""
    return complement_map(family("psi").kets)


def rho_oq():
    """The quarter-period orbit state: complement of the theta basis."""
    return complement_map(family("theta").kets)


def _table_tensor(plus, minus):
    arr = np.zeros(64)
    arr[0] = 1.0 / (2.0 * SQRT2)
    for label in plus:
        j, k, l = label_to_tuple(label)
        arr[16 * j + 4 * k + l] = X
    for label in minus:
        j, k, l = label_to_tuple(label)
        arr[16 * j + 4 * k + l] = -X
    return CoherenceTensor(arr)


def expected_upb_tensor():
    """The tabulated coherence components of rho_upb (independent of the kets)."""
    return _table_tensor(UPB_PLUS, UPB_MINUS)


def expected_oq_tensor():
    """The tabulated coherence components of rho_oq."""
    return _table_tensor(OQ_PLUS, OQ_MINUS)


def reflect(tensor):
    """Negate every homogeneous component (all but (0,0,0)); an involution.

    On trace-1 states this is rho -> I/4 - rho; it exchanges rho_sep and
    rho_upb and maps the set C = {0 <= eig <= 1/4} onto itself.
    """
    arr = tensor.components.copy()
    arr[1:] *= -1.0
    return CoherenceTensor(arr)


def partial_reflect(tensor, pair):
    """Negate every component whose index sub-tuple on the given qubit pair is not (0,0).

    Args:
        tensor: CoherenceTensor.
        pair: two distinct qubits from {1, 2, 3}.

    Raises:
        BadSubset: if pair is not a 2-element subset of {1,2,3}.
    """
    pair = sorted(set(pair))
    if len(pair) != 2 or any(q not in (1, 2, 3) for q in pair):
        raise BadSubset(f"pair must be a 2-element subset of {{1,2,3}}, got {pair}")
    arr = tensor.components.copy()
    for a in range(64):
        idx = (a // 16, (a // 4) % 4, a % 4)
        if idx[pair[0] - 1] != 0 or idx[pair[1] - 1] != 0:
            arr[a] *= -1.0
    return CoherenceTensor(arr)


def in_set_C(rho, tol=1e-10):
    """True iff every eigenvalue is at most 1/4 + tol (the reflection-stable set)."""
    from .linalg import hermitian_eigenvalues

    w = hermitian_eigenvalues(rho).eigenvalues
    return bool(w[-1] <= 0.25 + tol)


def complement_map(kets):
    """Normalized projector complement (I - sum_j |k_j><k_j|)/4 of 4 orthogonal kets.

    Raises:
        WrongCount: unless exactly 4 kets are given.
        NotOrthogonal: if any pairwise overlap exceeds 1e-12.
    """
    kets = tuple(kets)
    if len(kets) != 4:
        raise WrongCount(f"need exactly 4 kets, got {len(kets)}")
    for a, b in itertools.combinations(kets, 2):
        overlap = abs(np.vdot(a.amplitudes, b.amplitudes))
        if overlap > 1e-12:
            raise NotOrthogonal(f"overlap {overlap:.3e} between {a.symbols} and {b.symbols}")
    q = sum(k.projector() for k in kets)
    return (np.eye(8, dtype=complex) - q) / 4.0


@dataclass(frozen=True)
class UPBCheckResult:
    """Outcome of the product-basis extension search.

    extension_witness is a verified product ket orthogonal to all 4 members
    when one exists (unextendable is then False), else None.
    """

    orthogonal: bool
    all_product: bool
    unextendable: bool
    extension_witness: ProductKet | None


def _orthogonal_complement(v):
    """The unique (up to phase) qubit vector orthogonal to v."""
    return np.array([-np.conj(v[1]), np.conj(v[0])], dtype=complex)


def check_upb(kets, parallel_tol=1e-10):
    """Decide whether 4 orthogonal product kets form an unextendable product basis.

    A product witness orthogonal to all members must be orthogonal to each
    member's local vector on at least one party.  Enumerate all 3^4 = 81
    assignments of members to parties: an assignment is feasible iff, on every
    party, the local vectors of the members sent there are pairwise parallel
    (a qubit direction can be orthogonal to only one ray).  A feasible
    assignment yields a witness: the orthogonal complement of the assigned
    direction on each constrained party, |0> on unconstrained parties.  The
    first feasible assignment in lexicographic order is returned, verified.

    Returns:
        UPBCheckResult; unextendable is True iff no assignment is feasible.
    """
    kets = tuple(kets)
    orthogonal = all(
        abs(np.vdot(a.amplitudes, b.amplitudes)) <= 1e-12
        for a, b in itertools.combinations(kets, 2)
    )
    for assignment in itertools.product(range(3), repeat=len(kets)):
        per_party = [
            [kets[m].locals[p] for m in range(len(kets)) if assignment[m] == p]
            for p in range(3)
        ]
        feasible = all(
            all(abs(np.vdot(vs[0], w)) > 1.0 - parallel_tol for w in vs[1:])
            for vs in per_party
            if vs
        )
        if not feasible:
            continue
        locals_ = [
            _orthogonal_complement(vs[0]) if vs else np.array([1.0, 0.0], dtype=complex)
            for vs in per_party
        ]
        witness = product_ket_from_locals(locals_)
        overlaps = [abs(np.vdot(k.amplitudes, witness.amplitudes)) for k in kets]
        if max(overlaps) >= 1e-10:  # pragma: no cover - guards the search logic
            raise AssertionError(f"witness failed verification: overlaps {overlaps}")
        return UPBCheckResult(orthogonal, True, False, witness)
    return UPBCheckResult(orthogonal, True, True, None)


def reflect_density(rho):
    """Matrix-level reflection of a trace-1 state: to/from coherence round trip."""
    from .pauli import from_coherence

    return from_coherence(reflect(to_coherence(rho)))
