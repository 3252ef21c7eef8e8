"""Trotterized Hamiltonian simulation benchmarking.

Thin Python layer over the C++ core. The main operations (model generators,
Trotter circuit synthesis, mirror circuits, the noisy statevector simulator,
and the fidelity metrics) are re-exported from the compiled extension.
"""

from ._core import (  # noqa: F401
    Circuit,
    DepthMetrics,
    Gate,
    NoiseModel,
    PauliString,
    PauliSum,
    Timing,
    all_terms_commute,
    circuit_unitary,
    commutes,
    concat,
    conjugate_by_clifford,
    crossover_width,
    depth_metrics,
    exact_evolution_distribution,
    expected_mirror_distribution,
    fermi_hubbard_1d_jw,
    hamiltonian_matrix,
    heisenberg,
    hellinger_fidelity,
    invert,
    max3sat,
    mirror_rescale,
    neel_bits,
    neel_prep,
    parse_pauli_sum,
    parse_pauli_sum_file,
    pauli_exponential,
    polarization,
    quasi_inverse_mirror,
    random_pauli_layer,
    run_benchmark,
    run_ideal,
    run_ideal_distribution,
    run_noisy,
    simple_mirror,
    tfim,
    to_text,
    trotter_circuit,
)

__all__ = [name for name in dir() if not name.startswith("_")]
