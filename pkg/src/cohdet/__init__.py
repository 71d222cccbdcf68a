"""Decide whether a faint optical scene contains one point source or two
partially coherent ones.

The package provides the closed-form state model for a Gaussian imaging
system, the minimum-error (Helstrom) probability bound and its advantage
over blind guessing, a practical binary mode-sorting strategy, a seeded
Monte Carlo validator, and an independent spatial-grid oracle that rebuilds
everything by brute force.
"""

from .errors import (
    CohdetError,
    DegenerateScenarioError,
    DomainError,
    GridAccuracyError,
    InvalidEventError,
)
from .helstrom import (
    BoundReport,
    bound_report,
    direct_error,
    eigenvalues_sym2,
    helstrom_bound,
    in_useless_region,
    qod_advantage,
    trace_norm,
    useless_boundary,
)
from .montecarlo import EmpiricalResult, TrialConfig, run_simulation, sample_trial
from .oracle import (
    GridState,
    SpatialGrid,
    VerificationReport,
    equivalence_report,
    grid_helstrom,
    grid_overlap,
    grid_rho2,
    psf_state,
)
from .spade import (
    GAUSSIAN_CLICK,
    NONGAUSSIAN_CLICK,
    DetectorEvent,
    Hypothesis,
    ProbTable,
    decide,
    event_probs,
    spade_advantage,
    spade_error,
)
from .states import (
    DensityMatrix2,
    Observable2,
    ScenarioParams,
    effective_coherence,
    lambda_matrix,
    normalization,
    overlap,
    rho1,
    rho2,
)
from .sweeps import (
    CSV_HEADER,
    SweepRow,
    SweepSpec,
    format_sig,
    render_csv,
    render_json,
    sweep_row,
    sweep_rows,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CSV_HEADER",
    "CohdetError",
    "DegenerateScenarioError",
    "DensityMatrix2",
    "DetectorEvent",
    "DomainError",
    "EmpiricalResult",
    "GAUSSIAN_CLICK",
    "GridAccuracyError",
    "GridState",
    "Hypothesis",
    "InvalidEventError",
    "NONGAUSSIAN_CLICK",
    "Observable2",
    "ProbTable",
    "ScenarioParams",
    "SpatialGrid",
    "SweepRow",
    "SweepSpec",
    "TrialConfig",
    "VerificationReport",
    "bound_report",
    "decide",
    "direct_error",
    "effective_coherence",
    "eigenvalues_sym2",
    "equivalence_report",
    "event_probs",
    "format_sig",
    "grid_helstrom",
    "grid_overlap",
    "grid_rho2",
    "helstrom_bound",
    "in_useless_region",
    "lambda_matrix",
    "normalization",
    "overlap",
    "psf_state",
    "qod_advantage",
    "render_csv",
    "render_json",
    "rho1",
    "rho2",
    "run_simulation",
    "sample_trial",
    "spade_advantage",
    "spade_error",
    "sweep_row",
    "sweep_rows",
    "trace_norm",
    "useless_boundary",
]
