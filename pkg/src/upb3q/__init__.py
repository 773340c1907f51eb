"""Three-qubit bound entanglement in the tensor-of-coherences picture:
state tables, reflections, PPT and sign-oracle diagnostics, exact adjoint
flows, and a claim-grading command line tool."""

from .claims import (
    ClaimReport,
    RunConfig,
    claim_ids,
    emit_bloch_csv,
    emit_orbit_csv,
    exit_code,
    run_claims,
)
from .dynamics import (
    TAU_P,
    HamiltonianSpec,
    byproduct_preparation,
    fixed_point_generator,
    flow,
    one_spin_generators,
    orbit,
    orbit_generator,
    orbit_swap_report,
    prepare_upb,
    rodrigues_flow,
    stage1_generator,
    stage2_generator,
    stationarity,
)
from .entanglement import (
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
from .linalg import (
    Spectrum,
    conjugation_flow,
    frobenius_distance,
    hermitian_eig,
    hermitian_eigenvalues,
    jacobi_eigh,
    rank_with_tol,
)
from .pauli import (
    CoherenceTensor,
    ProductKet,
    bloch_vector,
    coherence_product,
    flat_index,
    from_coherence,
    index_tuple,
    ket_from_string,
    lambda_matrix,
    lambda_tensor,
    mix,
    reduced_density,
    to_coherence,
)
from .states import (
    X,
    KetFamily,
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

__version__ = "0.1.0"
