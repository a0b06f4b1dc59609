"""Ergotropy-based correlation and entanglement analysis of two-mode CV states."""

from .correlations import (
    CorrelationReport,
    conditional_entropy,
    conditional_entropy_witness,
    correlation_report,
    entropy_h,
    jacobian_independence,
    monotone_map_f,
    mutual_information,
    tau_from_covariance,
    tau_of,
)
from .energetics import (
    EnergyReport,
    ModePair,
    ergotropy_report,
    mean_energy,
    passive_energies,
    reg_closed_form,
    tms_gap,
)
from .estimators import ErgotropyFeatures, REGWitness
from .fock_oracle import (
    gaussian_reg_bell_mixture,
    passive_energy,
    std_gap_bell_mixture,
    std_gap_fock_superposition,
)
from .phase_space import (
    BlochMessiahParams,
    StandardFormParams,
    SymplecticSpectrum,
    apply_symplectic,
    as_covariance,
    check_physical,
    optimal_local_squeezings,
    standard_form,
    symplectic_eigenvalues,
)
from .states import (
    SamplerRanges,
    SecondMoments,
    StateRecord,
    bell_mixture_cm,
    compose_bloch_messiah,
    fock_superposition_cm,
    load_state,
    moments_from_cm,
    photon_subtracted_tms,
    random_state,
    tms,
)
from .witnesses import (
    GridSpec,
    Verdict,
    WitnessVerdict,
    classify,
    ppt_separable,
    reg_threshold_search,
    sv_witness,
    theorem2_bounds,
)

__version__ = "0.1.0"

__all__ = [
    "ErgotropyFeatures",
    "REGWitness",
    "BlochMessiahParams",
    "CorrelationReport",
    "EnergyReport",
    "GridSpec",
    "ModePair",
    "SamplerRanges",
    "SecondMoments",
    "StandardFormParams",
    "StateRecord",
    "SymplecticSpectrum",
    "Verdict",
    "WitnessVerdict",
    "apply_symplectic",
    "as_covariance",
    "bell_mixture_cm",
    "check_physical",
    "classify",
    "compose_bloch_messiah",
    "conditional_entropy",
    "conditional_entropy_witness",
    "correlation_report",
    "entropy_h",
    "ergotropy_report",
    "fock_superposition_cm",
    "gaussian_reg_bell_mixture",
    "jacobian_independence",
    "load_state",
    "mean_energy",
    "moments_from_cm",
    "monotone_map_f",
    "mutual_information",
    "optimal_local_squeezings",
    "passive_energies",
    "passive_energy",
    "photon_subtracted_tms",
    "ppt_separable",
    "random_state",
    "reg_closed_form",
    "reg_threshold_search",
    "standard_form",
    "std_gap_bell_mixture",
    "std_gap_fock_superposition",
    "sv_witness",
    "symplectic_eigenvalues",
    "tau_from_covariance",
    "tau_of",
    "theorem2_bounds",
    "tms",
    "tms_gap",
]
