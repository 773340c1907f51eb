"""Partial transposes, PPT verdicts, observable-triple sign tests, and the
brute-force local-hidden-sign oracle.

The triple test: three pairwise-commuting basis observables whose matrix
product is a positive multiple of the identity direction force any
deterministic assignment of local signs to multiply to +1 across the triple.
A state whose three expectation signs multiply to -1 therefore admits no such
assignment; the oracle checks this by exhaustive enumeration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from enum import Enum

import numpy as np

from .linalg import frobenius_distance, jacobi_eigh
from .pauli import CoherenceTensor, label_to_tuple, lambda_tensor


class Cut(Enum):
    """The three bipartitions of 3 qubits, named by the singleton side."""

    Q1 = "1|23"
    Q2 = "2|13"
    Q3 = "3|12"

    @property
    def qubit(self):
        return int(self.value[0])


def partial_transpose(rho, cut):
    """Transpose the singleton-side qubit of the given cut (matrix route)."""
    t = np.asarray(rho, dtype=complex).reshape(2, 2, 2, 2, 2, 2)
    q = cut.qubit
    axes = list(range(6))
    axes[q - 1], axes[q + 2] = axes[q + 2], axes[q - 1]
    return t.transpose(axes).reshape(8, 8)


def partial_transpose_tensor(tensor, cut):
    """Partial transpose in coherence coordinates.

    Transposing one qubit negates exactly the components whose index on that
    qubit equals 2 (the only antisymmetric basis direction); agrees with the
    matrix route.
    """
    arr = tensor.components.copy()
    q = cut.qubit
    for a in range(64):
        idx = (a // 16, (a // 4) % 4, a % 4)
        if idx[q - 1] == 2:
            arr[a] *= -1.0
    return CoherenceTensor(arr)


def min_pt_eig(rho, cut):
    """Minimum eigenvalue of the partial transpose across the given cut."""
    w, _ = jacobi_eigh(partial_transpose(rho, cut), want_vectors=False)
    return float(w[0])


def is_ppt(rho, tol=1e-10):
    """True iff every cut's partial transpose has min eigenvalue >= -tol."""
    return all(min_pt_eig(rho, cut) >= -tol for cut in Cut)


@dataclass(frozen=True)
class ObservableTriple:
    """Three basis-observable index triples, optionally with expectation signs.

    indices holds three (j,k,l) tuples; expected_signs holds +1/-1 per
    observable once filled from a state (None = unconstrained, used for
    expectations below the sign threshold).
    """

    indices: tuple
    expected_signs: tuple = (None, None, None)

    @classmethod
    def from_labels(cls, *labels):
        return cls(tuple(label_to_tuple(s) for s in labels))

    def matrices(self):
        return [lambda_tensor(*idx) for idx in self.indices]


_UPB_TRIPLES = (("031", "301", "330"), ("013", "303", "310"),
                ("033", "103", "130"), ("011", "101", "110"))
_OQ_TRIPLES = (("031", "101", "130"), ("013", "103", "110"),
               ("011", "301", "310"), ("033", "303", "330"))


def builtin_triples(which):
    """The four observable triples probing rho_upb ("upb") or rho_oq ("oq").

    Each triple's observables pairwise commute and multiply to a positive
    multiple of the identity direction, so a state violating its sign product
    admits no deterministic local-sign assignment.
    """
    table = {"upb": _UPB_TRIPLES, "oq": _OQ_TRIPLES}
    if which not in table:
        raise ValueError(f"which must be 'upb' or 'oq', got {which!r}")
    return [ObservableTriple.from_labels(*labels) for labels in table[which]]


def verify_triple_structure(triple, tol=1e-12):
    """Check the algebra that powers the sign argument.

    Returns True iff the three observables pairwise commute (commutator norm
    < tol) and their product is c * Lambda_000 with c > 0.
    """
    a, b, c = triple.matrices()
    for m1, m2 in itertools.combinations((a, b, c), 2):
        if frobenius_distance(m1 @ m2, m2 @ m1) >= tol:
            return False
    prod = a @ b @ c
    ident = lambda_tensor(0, 0, 0)
    coeff = np.trace(prod @ ident).real  # orthonormal-basis projection
    residual = frobenius_distance(prod, coeff * ident)
    return bool(residual < tol and coeff > 0)


def triple_value(tensor, triple):
    """Product of the three coherence components addressed by the triple."""
    out = 1.0
    for j, k, l in triple.indices:
        out *= tensor.component((j, k, l))
    return float(out)


def signed_triple(tensor, triple, sign_tol=1e-8):
    """Fill a triple's expected signs from a state's coherence components.

    Components with |value| <= sign_tol get sign None (unconstrained).
    """
    signs = []
    for idx in triple.indices:
        val = tensor.component(idx)
        signs.append(None if abs(val) <= sign_tol else (1 if val > 0 else -1))
    return replace(triple, expected_signs=tuple(signs))


def lhv_oracle(triples, sign_tol=1e-8):
    """Count deterministic local-sign assignments consistent with the triples.

    Variables are the (qubit, axis) pairs with axis != 0 occurring anywhere in
    the supplied triples' indices.  An assignment maps each variable to +/-1;
    it is consistent iff for every observable with a filled sign, the product
    of its variables' values equals that sign.  Observables with sign None
    impose no constraint.  Returns the number of consistent assignments out of
    2^V (so a list with no filled signs counts all 2^V).

    The sign products are checked per observable, so passing a single triple
    realizes the commuting-context argument; passing several triples asks for
    one assignment consistent with all of them jointly.
    """
    del sign_tol  # signs are already filled by signed_triple
    variables = sorted(
        {
            (q, idx[q])
            for triple in triples
            for idx in triple.indices
            for q in range(3)
            if idx[q] != 0
        }
    )
    constraints = []
    for triple in triples:
        for idx, sign in zip(triple.indices, triple.expected_signs):
            if sign is None:
                continue
            vars_of_obs = [(q, idx[q]) for q in range(3) if idx[q] != 0]
            constraints.append((vars_of_obs, sign))
    count = 0
    for bits in itertools.product((1, -1), repeat=len(variables)):
        assign = dict(zip(variables, bits))
        if all(
            int(np.prod([assign[v] for v in vars_of_obs])) == sign
            for vars_of_obs, sign in constraints
        ):
            count += 1
    return count
