"""Sampled complete Nevanlinna-Pick checks for reproducing kernels.

Thin Python layer over the C++ core; see the README for the command line.
"""

from ._core import (
    DEFAULT_ORDER,
    DEFAULT_SEED,
    HbcnpError,
    Kernel,
    PowerSeries,
    SampleSet,
    SchurInterpolant,
    blaschke_product,
    closed_form_witness,
    cnp_basepoint_sweep,
    cnp_certify,
    cnp_defect_kernel,
    compose,
    compute_h,
    congruence,
    decomposition_check,
    div_factor,
    eigenvalues,
    evaluate_criterion,
    gram,
    injectivity_probe,
    pick_solvable,
    psd_verdict,
    pullback,
    reciprocal,
    revert,
    run_cli,
    schur_interpolant,
    symbol,
    witness_identity_check,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
