"""spinring: exact diagonalization and ground-state entanglement of spin
rings with noncollinear Ising exchange (radial and bond-aligned twisted
frames), including GHZ-like trial states, symmetry-adapted ground-state
reduction and field sweeps."""

from .eigensolver import (
    NumericalError,
    SectorDecomposition,
    SpectrumResult,
    compare_spectra,
    detect_sectors,
    diagonalize,
    ground_space,
)
from .entanglement import (
    EntanglementReport,
    block_purity_profile,
    concurrence,
    concurrence_matrix,
    entanglement_report,
    partial_trace,
    residual_tangle,
    ring_distance_concurrence,
)
from .ring_models import (
    FrameTensors,
    ModelVariant,
    RingConfig,
    a_to_b_frame,
    build_collinear,
    build_exchange,
    build_hamiltonian,
    build_model_a,
    build_model_b,
    build_zeeman,
    equivalence_unitary,
    general_frame_coefficients,
    reconstruct_from_frame,
    site_angles_a,
    site_angles_b,
    symmetry_generators,
)
from .scenario import (
    ConfigError,
    ResultTable,
    Scenario,
    list_presets,
    load_preset,
    load_scenario,
    parse_scenario,
    run_scenario,
    write_results,
)
from .symmetry_subspace import (
    FlipVector,
    ReducedProblem,
    build_component,
    coefficient_ratios,
    enumerate_flip_vectors,
    expected_table_ratio,
    nonzero_coefficient_count,
    paired_coefficient_count,
    reduced_ground_state,
)
from .trial_states import (
    alpha_state,
    beta_state,
    default_trial_params,
    gamma_state,
    ghz_trial,
    maximize_theta,
    order_vector,
    overlap_p,
    resolve_ground_with_trial,
    sector_ground_overlap,
    tilted_trial,
)

__version__ = "0.1.0"
