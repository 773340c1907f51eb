"""Adjoint flows, the two-stage preparation schedule, the 3-coherence orbit,
stationarity checks, and the quarter-period byproduct route.

Flow convention: U(t) = exp(-itH) with H built from the trace-orthonormal
Lambda basis.  The triple-index generators Lambda_{333} and Lambda_{222} have
eigenvalues +-1/(2 sqrt 2), so their conjugation flows are periodic with
period TAU_P = 2 sqrt(2) pi.  For those two axes the flow on coherence
components has the closed form

    exp(t R) = I + sqrt(2) sin(t/sqrt 2) R + 2 (1 - cos(t/sqrt 2)) R^2

where R is the real 64x64 adjoint generator assembled from sparse 4x4
single-qubit commutator/anticommutator blocks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .entanglement import Cut, builtin_triples, lhv_oracle, min_pt_eig, signed_triple, triple_value
from .linalg import conjugation_flow, frobenius_distance, jacobi_eigh
from .pauli import SQRT2, CoherenceTensor, from_coherence, lambda_tensor, to_coherence
from .states import expected_oq_tensor, family_mixture, reflect, rho_sep, rho_upb

# Common period of the Lambda_{333} and Lambda_{222} conjugation flows.
TAU_P = 2.0 * SQRT2 * np.pi

# The eight 3-coherence flat indices, split by their role along the orbit:
# SIN_SET components evolve as -x sin(t/sqrt2) from rho_sep, COS_SET as
# -x cos(t/sqrt2); everything of lower weight is conserved.
SIN_SET = (16 * 1 + 4 * 1 + 3, 16 * 1 + 4 * 3 + 1, 16 * 3 + 4 * 1 + 1, 16 * 3 + 4 * 3 + 3)
COS_SET = (16 * 1 + 4 * 1 + 1, 16 * 1 + 4 * 3 + 3, 16 * 3 + 4 * 1 + 3, 16 * 3 + 4 * 3 + 1)


class BadAxis(ValueError):
    """Closed-form flow requested for an axis other than 333 or 222."""


class NoMatch(RuntimeError):
    """No candidate byproduct evolution reached the target state."""


@dataclass(frozen=True)
class HamiltonianSpec:
    """A Hamiltonian as basis terms: tuple of ((j,k,l), coefficient)."""

    terms: tuple

    @classmethod
    def from_labels(cls, *labels, coefficients=None):
        if coefficients is None:
            coefficients = [1.0] * len(labels)
        terms = []
        for label, c in zip(labels, coefficients):
            j, k, l = int(label[0]), int(label[1]), int(label[2])
            terms.append(((j, k, l), float(c)))
        return cls(tuple(terms))

    def matrix(self):
        h = np.zeros((8, 8), dtype=complex)
        for (j, k, l), c in self.terms:
            h += c * lambda_tensor(j, k, l)
        return h


def stage1_generator():
    """First preparation stage: the triple-z generator."""
    return HamiltonianSpec.from_labels("333")


def stage2_generator():
    """Second preparation stage: six equal-index-pair 2-coherence terms."""
    return HamiltonianSpec.from_labels("011", "033", "101", "110", "303", "330")


def fixed_point_generator():
    """Nine-term generator that commutes with the complement state."""
    return HamiltonianSpec.from_labels(
        "011", "022", "033", "101", "110", "202", "220", "303", "330"
    )


def orbit_generator():
    """The triple-y generator whose orbit keeps the state PPT."""
    return HamiltonianSpec.from_labels("222")


def one_spin_generators():
    """The nine single-qubit generators, grouped by qubit then axis."""
    labels = [
        "100", "200", "300",
        "010", "020", "030",
        "001", "002", "003",
    ]
    return [HamiltonianSpec.from_labels(s) for s in labels]


def _as_matrix(h):
    return h.matrix() if isinstance(h, HamiltonianSpec) else np.asarray(h, dtype=complex)


def flow(h, t, rho):
    """Conjugation flow exp(-itH) rho exp(+itH); exact for any real t."""
    return conjugation_flow(_as_matrix(h), t, rho)


def _single_qubit_blocks(axis):
    """Sparse 4x4 commutator (ad) and anticommutator (aad) blocks of lambda_axis.

    ad[m, n] is the coefficient of lambda_m in [lambda_axis, lambda_n];
    aad[m, n] the coefficient in {lambda_axis, lambda_n}.
    """
    ad = np.zeros((4, 4), dtype=complex)
    aad = np.zeros((4, 4), dtype=complex)
    if axis == 3:
        ad[2, 1] = 1j * SQRT2
        ad[1, 2] = -1j * SQRT2
        aad[0, 3] = SQRT2
        aad[3, 0] = SQRT2
    elif axis == 2:
        ad[1, 3] = 1j * SQRT2
        ad[3, 1] = -1j * SQRT2
        aad[0, 2] = SQRT2
        aad[2, 0] = SQRT2
    else:
        raise BadAxis(f"blocks available for axes 2 and 3 only, got {axis}")
    return ad, aad


def adjoint_matrix(axis):
    """Real 64x64 generator R = -i ad_{Lambda_aaa} on coherence components.

    The commutator with a triple product expands into one single-qubit
    commutator block per slot (each paired with anticommutators on the other
    two slots) plus the all-commutator term:
        ad = (1/4) (A@B@B + B@A@B + B@B@A + A@A@A)   (Kronecker products)
    with A = ad block and B = aad block of the single-qubit factor.
    """
    if axis == 333:
        a, b = _single_qubit_blocks(3)
    elif axis == 222:
        a, b = _single_qubit_blocks(2)
    else:
        raise BadAxis(f"axis must be 333 or 222, got {axis}")

    def k3(x, y, z):
        return np.kron(np.kron(x, y), z)

    ad = 0.25 * (k3(a, b, b) + k3(b, a, b) + k3(b, b, a) + k3(a, a, a))
    return np.real(-1j * ad)


_R_CACHE = {}


def _generator_powers(axis):
    if axis not in _R_CACHE:
        r = adjoint_matrix(axis)
        _R_CACHE[axis] = (r, r @ r)
    return _R_CACHE[axis]


def rodrigues_flow(axis, t, tensor):
    """Closed-form coherence-space flow for axis 333 or 222, exact for all t."""
    r, r2 = _generator_powers(axis)
    expo = (
        np.eye(64)
        + SQRT2 * np.sin(t / SQRT2) * r
        + 2.0 * (1.0 - np.cos(t / SQRT2)) * r2
    )
    return CoherenceTensor(expo @ tensor.components)


@dataclass(frozen=True)
class InteriorSample:
    """PPT diagnostics at one stage-interior time (stage-local t)."""

    stage: int
    t: float
    min_pt_eigs: tuple


@dataclass(frozen=True)
class PreparationTrace:
    """Checkpoints and interior diagnostics of a two-stage schedule."""

    order: str
    schedule: tuple
    checkpoints: dict
    interior: tuple


def prepare_upb(order="standard", interior_samples=9):
    """Run the two-stage schedule from the separable mixture.

    standard: stage 1 = triple-z for TAU_P/2 (lands on the mu mixture),
    stage 2 = the six-term generator for TAU_P/4 (lands on the complement
    state).  swapped: same (generator, duration) pairs in reversed order; the
    intermediate is then the reflection of the standard one, and the endpoint
    is unchanged.  interior_samples equispaced interior times per stage are
    scored with min partial-transpose eigenvalues per cut.
    """
    if order not in ("standard", "swapped"):
        raise ValueError(f"order must be 'standard' or 'swapped', got {order!r}")
    if interior_samples < 0:
        raise ValueError("interior_samples must be >= 0")
    stages = [(stage1_generator(), TAU_P / 2.0), (stage2_generator(), TAU_P / 4.0)]
    if order == "swapped":
        stages = stages[::-1]

    state = rho_sep()
    checkpoints = {"initial": state}
    interior = []
    for num, (gen, duration) in enumerate(stages, start=1):
        h = gen.matrix()
        for k in range(1, interior_samples + 1):
            t = duration * k / (interior_samples + 1)
            probe = conjugation_flow(h, t, state)
            eigs = tuple(min_pt_eig(probe, cut) for cut in Cut)
            interior.append(InteriorSample(num, t, eigs))
        state = conjugation_flow(h, duration, state)
        checkpoints["intermediate" if num == 1 else "final"] = state
    return PreparationTrace(order, tuple(stages), checkpoints, tuple(interior))


@dataclass(frozen=True)
class OrbitSample:
    """One orbit time: tensors, PPT diagnostics, spectra, and ranks.

    min_pt_eigs / reflected_min_pt_eigs are ordered by cut (1|23, 2|13, 3|12);
    eigenvalues are ascending diagnostics of the reconstructed matrices.
    """

    t: float
    tensor: CoherenceTensor
    reflected_tensor: CoherenceTensor
    min_pt_eigs: tuple
    reflected_min_pt_eigs: tuple
    rank: int
    reflected_rank: int
    ppt: bool
    reflected_ppt: bool
    eigenvalues: np.ndarray
    reflected_eigenvalues: np.ndarray


def orbit(samples=64, ppt_tol=1e-10, rank_tol=1e-9):
    """Sample the triple-y orbit of the separable mixture over one period.

    Grid: t_k = k TAU_P / samples for k = 0..samples-1 (the endpoint TAU_P
    duplicates t=0).  With samples divisible by 4 the quarter and half period
    land exactly on grid points.
    """
    if samples < 2:
        raise ValueError("samples must be >= 2")
    base = to_coherence(rho_sep())
    out = []
    for k in range(samples):
        t = TAU_P * k / samples
        tens = rodrigues_flow(222, t, base)
        refl = reflect(tens)
        out.append(_orbit_sample(t, tens, refl, ppt_tol, rank_tol))
    return out


def _orbit_sample(t, tens, refl, ppt_tol, rank_tol):
    rows = []
    for tt in (tens, refl):
        m = from_coherence(tt)
        eigs = jacobi_eigh(m, want_vectors=False)[0]
        pts = tuple(min_pt_eig(m, cut) for cut in Cut)
        rows.append((pts, int(np.sum(np.abs(eigs) > rank_tol)), all(p >= -ppt_tol for p in pts), eigs))
    (pts, rank, ppt, eigs), (rpts, rrank, rppt, reigs) = rows
    return OrbitSample(t, tens, refl, pts, rpts, rank, rrank, ppt, rppt, eigs, reigs)


@dataclass(frozen=True)
class OrbitSwapReport:
    """How the separable/bound-entangled roles swap along the orbit.

    Distances are Frobenius; triple products are coherence-component products
    (negative = sign violation); oracle counts are consistent-assignment
    counts per triple.
    """

    start_vs_psi: float
    start_reflection_vs_upb: float
    quarter_vs_table: float
    quarter_vs_complement_theta: float
    quarter_reflection_vs_theta: float
    half_vs_phi: float
    upb_triple_products_on_start_reflection: tuple
    oq_triple_products_on_quarter: tuple
    oq_triple_counts_on_upb: tuple
    upb_triple_counts_on_quarter: tuple


def orbit_swap_report(sign_tol=1e-8):
    """Verify the role swap at t = 0, TAU_P/4 and TAU_P/2 along the orbit."""
    from .states import complement_map, family

    base = to_coherence(rho_sep())
    upb = rho_upb()
    upb_t = to_coherence(upb)

    quarter = rodrigues_flow(222, TAU_P / 4.0, base)
    quarter_m = from_coherence(quarter)
    half_m = from_coherence(rodrigues_flow(222, TAU_P / 2.0, base))

    upb_triples = builtin_triples("upb")
    oq_triples = builtin_triples("oq")

    def products(tensor, triples):
        return tuple(triple_value(tensor, tr) for tr in triples)

    def counts(tensor, triples):
        return tuple(lhv_oracle([signed_triple(tensor, tr, sign_tol)]) for tr in triples)

    return OrbitSwapReport(
        start_vs_psi=frobenius_distance(from_coherence(base), family_mixture("psi")),
        start_reflection_vs_upb=frobenius_distance(from_coherence(reflect(base)), upb),
        quarter_vs_table=float(
            np.abs(quarter.components - expected_oq_tensor().components).max()
        ),
        quarter_vs_complement_theta=frobenius_distance(
            quarter_m, complement_map(family("theta").kets)
        ),
        quarter_reflection_vs_theta=frobenius_distance(
            from_coherence(reflect(quarter)), family_mixture("theta")
        ),
        half_vs_phi=frobenius_distance(half_m, family_mixture("phi")),
        upb_triple_products_on_start_reflection=products(reflect(base), upb_triples),
        oq_triple_products_on_quarter=products(quarter, oq_triples),
        oq_triple_counts_on_upb=counts(upb_t, oq_triples),
        upb_triple_counts_on_quarter=counts(quarter, upb_triples),
    )


def stationarity(h, rho):
    """Frobenius norm of the commutator [H, rho]."""
    hm = _as_matrix(h)
    rho = np.asarray(rho, dtype=complex)
    return frobenius_distance(hm @ rho, rho @ hm)


@dataclass(frozen=True)
class ByproductResult:
    """Outcome of the quarter/three-quarter-period candidate search.

    candidates maps each signed label to its period-reduced parameter;
    evolutions holds (reduced parameter, distance to the complement state)
    for each distinct evolution; matched_parameter is the reduced parameter
    of the (unique) evolution that landed.
    """

    state: np.ndarray
    matched_parameter: float
    distance: float
    candidates: tuple
    evolutions: tuple


def byproduct_preparation(tol=1e-10):
    """Reach the complement state by flowing the theta mixture.

    The theta mixture equals the reflected orbit state at TAU_P/4, so exactly
    one distinct period-reduced evolution among the signed quarter and
    three-quarter candidates returns it to the complement state.  Candidates
    that differ by a full period are the same conjugation (U(TAU_P) = -I) and
    are deduplicated before matching.

    Raises:
        NoMatch: if no candidate lands within tol (implementation error).
    """
    theta_t = to_coherence(family_mixture("theta"))
    target = rho_upb()
    labels = (TAU_P / 4.0, -TAU_P / 4.0, 3.0 * TAU_P / 4.0, -3.0 * TAU_P / 4.0)
    candidates = tuple((t, float(t % TAU_P)) for t in labels)
    reduced = sorted({round(r, 12) for _, r in candidates})
    evolutions = []
    states = {}
    for r in reduced:
        evolved = from_coherence(rodrigues_flow(222, r, theta_t))
        states[r] = evolved
        evolutions.append((float(r), frobenius_distance(evolved, target)))
    matches = [(r, d) for r, d in evolutions if d < tol]
    if not matches:
        raise NoMatch(f"no candidate reached the target: {evolutions}")
    r, d = matches[0]
    return ByproductResult(states[r], r, d, candidates, tuple(evolutions))
