"""Exact state-vector toolkit for the three-pigeon, two-box pre/post-selection experiment.

The package covers the full chain: projector algebra on the three-qubit box
space, closed-form and series time evolution, transition amplitudes to the
circular readout basis, five-qubit ancilla circuits with an exact simulator
and a reproducible sampler, OpenQASM 2.0 export, and the exhaustive
hidden-variable enumeration that closes the classical loophole.
"""

from .amplitudes import (
    ALL_SAME_SIGN,
    ONE_MINORITY_SIGN,
    PHASE_CONVENTION,
    AmplitudeRecord,
    FinalStateLabel,
    all_labels,
    all_same_matrix_element,
    all_same_matrix_element_closed,
    amplitude_table,
    closed_form_probability,
    first_order_derivative,
    label_state,
    pair_count_matrix_element,
    pair_matrix_element,
    pair_matrix_element_closed,
    transition_probability,
)
from .circuits import (
    ALL_SAME_ANCILLA_CBITS,
    PAIR_CHECK_ANCILLA_CBITS,
    PIGEON_CBITS,
    Circuit,
    NoiseModel,
    OutcomeGroup,
    ShotHistogram,
    all_same_check_circuit,
    export_qasm,
    grouped_csv,
    grouped_expected,
    histogram_csv,
    histogram_json,
    pair_check_circuit,
    parse_qasm,
    postselect_group,
    sample_shots,
    simulate_ideal,
)
from .hiddenvars import (
    CONSTRAINT_NAMES,
    ValueAssignment,
    box_placement_values,
    enumerate_assignments,
    enumeration_report,
    pigeonhole_violation_exists,
    valid_assignments,
)
from .operators import (
    PAIRS,
    IdentityReport,
    LinearOperator,
    all_same_box_projector,
    apply_operator,
    evolution_closed_form,
    evolution_series,
    hermitian_eigenvalues,
    one_pair_projector,
    operator_rank,
    pair_only_projector,
    same_box_projector,
    shared_pair_count,
    verify_identities,
)
from .states import (
    MAX_QUBITS,
    Gate,
    StateVector,
    apply_gate,
    basis_state,
    inner_product,
    plus_i_state,
    plus_state,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_SAME_ANCILLA_CBITS",
    "ALL_SAME_SIGN",
    "AmplitudeRecord",
    "CONSTRAINT_NAMES",
    "Circuit",
    "FinalStateLabel",
    "Gate",
    "IdentityReport",
    "LinearOperator",
    "MAX_QUBITS",
    "NoiseModel",
    "ONE_MINORITY_SIGN",
    "OutcomeGroup",
    "PAIRS",
    "PAIR_CHECK_ANCILLA_CBITS",
    "PHASE_CONVENTION",
    "PIGEON_CBITS",
    "ShotHistogram",
    "StateVector",
    "ValueAssignment",
    "all_labels",
    "all_same_box_projector",
    "all_same_check_circuit",
    "all_same_matrix_element",
    "all_same_matrix_element_closed",
    "amplitude_table",
    "apply_gate",
    "apply_operator",
    "basis_state",
    "box_placement_values",
    "closed_form_probability",
    "enumerate_assignments",
    "enumeration_report",
    "evolution_closed_form",
    "evolution_series",
    "export_qasm",
    "first_order_derivative",
    "grouped_csv",
    "grouped_expected",
    "hermitian_eigenvalues",
    "histogram_csv",
    "histogram_json",
    "inner_product",
    "label_state",
    "one_pair_projector",
    "operator_rank",
    "pair_check_circuit",
    "pair_count_matrix_element",
    "pair_matrix_element",
    "pair_matrix_element_closed",
    "pair_only_projector",
    "parse_qasm",
    "pigeonhole_violation_exists",
    "plus_i_state",
    "plus_state",
    "postselect_group",
    "same_box_projector",
    "sample_shots",
    "shared_pair_count",
    "simulate_ideal",
    "transition_probability",
    "valid_assignments",
    "verify_identities",
]
