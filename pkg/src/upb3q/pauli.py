"""Normalized Pauli tensor basis and coherence-vector transforms for 3 qubits.

The single-qubit basis is lambda_mu = sigma_mu / sqrt(2), which makes the 64
three-qubit operators Lambda_{jkl} = lambda_j x lambda_k x lambda_l
trace-orthonormal: tr(Lambda_a Lambda_b) = delta_ab.  A density matrix is then
rho = sum_a c_a Lambda_a with real components c_a = tr(rho Lambda_a), the
"tensor of coherences".  Flat index convention: a = 16j + 4k + l, qubit 1 is
the leftmost (most significant) Kronecker factor.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

SQRT2 = np.sqrt(2.0)

# Unnormalized Pauli matrices, indexed 0..3 = identity, x, y, z.
SIGMA = (
    np.eye(2, dtype=complex),
    np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
)


class NonHermitianInput(ValueError):
    """Input matrix is not Hermitian within tolerance."""


class BadSymbol(ValueError):
    """Ket string contains a character outside {0, 1, +, -}."""


class BadLength(ValueError):
    """Ket string does not have exactly 3 symbols."""


class WeightError(ValueError):
    """Mixture weights are negative or do not sum to 1."""


class BadSubset(ValueError):
    """Qubit subset is not a nonempty strict subset of {1, 2, 3}."""


class BadAncilla(ValueError):
    """Ancilla coherence vector does not describe a trace-1 qubit."""


def lambda_matrix(mu):
    """Return the normalized single-qubit basis matrix lambda_mu = sigma_mu/sqrt(2).

    The four matrices are trace-orthonormal: tr(lambda_a lambda_b) = delta_ab.
    """
    if mu not in (0, 1, 2, 3):
        raise ValueError(f"Pauli index must be in {{0,1,2,3}}, got {mu!r}")
    return SIGMA[mu] / SQRT2


def lambda_tensor(j, k, l):
    """Return Lambda_{jkl} = lambda_j x lambda_k x lambda_l (8x8, trace-orthonormal)."""
    return np.kron(np.kron(lambda_matrix(j), lambda_matrix(k)), lambda_matrix(l))


def flat_index(j, k, l):
    """Flat index of component (j,k,l): 16j + 4k + l."""
    return 16 * j + 4 * k + l


def index_tuple(a):
    """Inverse of flat_index."""
    return a // 16, (a // 4) % 4, a % 4


def label_to_tuple(label):
    """Parse a 3-character component label like '031' into (0, 3, 1)."""
    if len(label) != 3 or any(ch not in "0123" for ch in label):
        raise ValueError(f"bad component label {label!r}")
    return int(label[0]), int(label[1]), int(label[2])


# The full 64-element tensor basis, flat-indexed; built once at import.
LAMBDA_BASIS = np.stack(
    [lambda_tensor(*index_tuple(a)) for a in range(64)]
)


@dataclass(frozen=True)
class CoherenceTensor:
    """The 64 real components of a 3-qubit Hermitian matrix in the Lambda basis.

    components[16j + 4k + l] = tr(rho Lambda_{jkl}).  For a trace-1 state the
    (0,0,0) component equals 1/(2 sqrt 2) and the squared components sum to
    tr(rho^2) <= 1 (equality iff pure).
    """

    components: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.components, dtype=float).copy()
        if arr.shape != (64,):
            raise ValueError(f"expected 64 components, got shape {arr.shape}")
        arr.setflags(write=False)
        object.__setattr__(self, "components", arr)

    def component(self, key):
        """Component by label '031', tuple (0,3,1), or flat index."""
        if isinstance(key, str):
            key = label_to_tuple(key)
        if isinstance(key, tuple):
            key = flat_index(*key)
        return float(self.components[key])

    @property
    def trace(self):
        """Trace of the reconstructed matrix: 2*sqrt(2) times the (0,0,0) component."""
        return 2.0 * SQRT2 * float(self.components[0])

    @classmethod
    def from_dict(cls, entries, trace_component=1.0 / (2.0 * SQRT2)):
        """Build a tensor from {label_or_tuple: value}, defaulting c000 to a unit trace."""
        arr = np.zeros(64)
        arr[0] = trace_component
        for key, val in entries.items():
            if isinstance(key, str):
                key = label_to_tuple(key)
            arr[flat_index(*key)] = val
        return cls(arr)


def to_coherence(rho, herm_tol=1e-12):
    """Expand a Hermitian 8x8 matrix in the Lambda basis.

    Args:
        rho: 8x8 complex Hermitian array.
        herm_tol: maximum allowed entrywise Hermiticity residue.

    Returns:
        CoherenceTensor with the 64 real components tr(rho Lambda_a).

    Raises:
        NonHermitianInput: if max|rho - rho^dagger| exceeds herm_tol.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (8, 8):
        raise ValueError(f"expected an 8x8 matrix, got shape {rho.shape}")
    residue = np.abs(rho - rho.conj().T).max()
    if residue > herm_tol:
        raise NonHermitianInput(f"Hermiticity residue {residue:.3e} > {herm_tol:.1e}")
    comps = np.einsum("aij,ji->a", LAMBDA_BASIS, rho)
    return CoherenceTensor(comps.real)


def from_coherence(tensor):
    """Reconstruct the 8x8 matrix sum_a c_a Lambda_a from a CoherenceTensor."""
    return np.einsum("a,aij->ij", tensor.components, LAMBDA_BASIS)


_KET_SYMBOLS = {
    "0": np.array([1.0, 0.0], dtype=complex),
    "1": np.array([0.0, 1.0], dtype=complex),
    "+": np.array([1.0, 1.0], dtype=complex) / SQRT2,
    "-": np.array([1.0, -1.0], dtype=complex) / SQRT2,
}


@dataclass(frozen=True)
class ProductKet:
    """A 3-qubit product state with per-qubit local vectors.

    symbols holds one character per qubit from {0,1,+,-} when the local state
    is one of those four directions (up to phase), else '?'.  amplitudes is the
    8-component Kronecker product of the locals, unit norm.
    """

    symbols: str
    amplitudes: np.ndarray
    locals: tuple

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex).copy()
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)
        locs = tuple(np.asarray(v, dtype=complex) for v in self.locals)
        for v in locs:
            v.setflags(write=False)
        object.__setattr__(self, "locals", locs)

    def projector(self):
        """The rank-1 density matrix |ket><ket|."""
        return np.outer(self.amplitudes, self.amplitudes.conj())


def product_ket_from_locals(locals_):
    """Build a ProductKet from three single-qubit vectors (normalizing each)."""
    if len(locals_) != 3:
        raise BadLength(f"need 3 local vectors, got {len(locals_)}")
    normed = []
    symbols = []
    for v in locals_:
        v = np.asarray(v, dtype=complex)
        n = np.sqrt(np.real(np.vdot(v, v)))
        if n == 0:
            raise ValueError("zero local vector")
        v = v / n
        normed.append(v)
        symbols.append(_symbol_for_local(v))
    amps = np.kron(np.kron(normed[0], normed[1]), normed[2])
    return ProductKet("".join(symbols), amps, tuple(normed))


def _symbol_for_local(v):
    """Name a unit qubit vector by its symbol if it matches one up to phase."""
    for sym, ref in _KET_SYMBOLS.items():
        if abs(np.vdot(ref, v)) > 1.0 - 1e-10:
            return sym
    return "?"


def ket_from_string(s):
    """Build the product ket named by a 3-symbol string over {0,1,+,-}.

    Qubit 1 is the leftmost symbol (most significant Kronecker factor), e.g.
    "01+" -> (e_010 + e_011)/sqrt(2).

    Raises:
        BadLength: if the string is not exactly 3 characters.
        BadSymbol: on any character outside the alphabet.
    """
    if len(s) != 3:
        raise BadLength(f"ket string must have length 3, got {s!r}")
    for ch in s:
        if ch not in _KET_SYMBOLS:
            raise BadSymbol(f"unknown ket symbol {ch!r} in {s!r}")
    locals_ = tuple(_KET_SYMBOLS[ch].copy() for ch in s)
    amps = np.kron(np.kron(locals_[0], locals_[1]), locals_[2])
    return ProductKet(s, amps, locals_)


def mix(weights, states):
    """Convex combination sum_i w_i rho_i of density matrices.

    Raises:
        WeightError: if weights are negative, do not sum to 1 (tol 1e-12),
            or the lists have different lengths.
    """
    weights = np.asarray(weights, dtype=float)
    if weights.ndim != 1 or len(weights) != len(states):
        raise WeightError("weights and states must be equal-length sequences")
    if np.any(weights < 0):
        raise WeightError(f"negative weight in {weights}")
    if abs(weights.sum() - 1.0) > 1e-12:
        raise WeightError(f"weights sum to {weights.sum()}, not 1")
    out = np.zeros((8, 8), dtype=complex)
    for w, st in zip(weights, states):
        out += w * np.asarray(st, dtype=complex)
    return out


def reduced_density(rho, keep):
    """Partial trace keeping the given qubits (1-based), in their original order.

    Args:
        rho: 8x8 density matrix.
        keep: nonempty strict subset of {1, 2, 3}.

    Returns:
        2x2 or 4x4 density matrix of the kept qubits.

    Raises:
        BadSubset: if keep is empty, not a strict subset, or has bad labels.
    """
    keep = sorted(set(keep))
    if not keep or len(keep) >= 3 or any(q not in (1, 2, 3) for q in keep):
        raise BadSubset(f"keep must be a nonempty strict subset of {{1,2,3}}, got {keep}")
    t = np.asarray(rho, dtype=complex).reshape(2, 2, 2, 2, 2, 2)
    traced = [q for q in (1, 2, 3) if q not in keep]
    # Row indices 0,1,2 and column indices 3,4,5 of the reshaped tensor.
    letters = "abcdef"
    out_rows = "".join(letters[q - 1] for q in keep)
    out_cols = "".join(letters[q + 2] for q in keep)
    spec = list(letters)
    for q in traced:
        spec[q + 2] = spec[q - 1]
    result = np.einsum("".join(spec) + "->" + out_rows + out_cols, t)
    d = 2 ** len(keep)
    return result.reshape(d, d)


def coherence_product(tensor, ancilla):
    """Coherence components of (3-qubit state) x (1-qubit ancilla).

    Args:
        tensor: CoherenceTensor of the 3-qubit state.
        ancilla: length-4 real coherence vector of the ancilla qubit,
            ancilla[m] = tr(rho_a lambda_m); ancilla[0] must equal 1/sqrt(2).

    Returns:
        Flat (256,) array with component (j,k,l,m) at index 4*(16j+4k+l) + m;
        equals the expansion of the Kronecker-product matrix in the
        Lambda_{jkl} x lambda_m basis.

    Raises:
        BadAncilla: if the ancilla trace component is wrong.
    """
    ancilla = np.asarray(ancilla, dtype=float)
    if ancilla.shape != (4,):
        raise BadAncilla(f"ancilla coherence vector must have 4 components, got {ancilla.shape}")
    if abs(ancilla[0] - 1.0 / SQRT2) > 1e-12:
        raise BadAncilla(f"ancilla trace component {ancilla[0]} != 1/sqrt(2)")
    return np.einsum("a,m->am", tensor.components, ancilla).reshape(-1)


def bloch_vector(rho_qubit):
    """Bloch vector (tr(rho sigma_x), tr(rho sigma_y), tr(rho sigma_z)) of a qubit state."""
    rho_qubit = np.asarray(rho_qubit, dtype=complex)
    return np.array([np.trace(rho_qubit @ SIGMA[i]).real for i in (1, 2, 3)])
