"""Second-order-in-time Fourier pseudospectral solver for the good
Boussinesq equation, with exact solitary-wave references and the
convergence/stability experiment harness."""

from .spectral import (
    Grid,
    SymmetryError,
    derivative,
    evaluate_interpolant,
    forward,
    inner_product,
    inverse,
    norm2,
    project,
    sobolev_norm,
)
from .waves import (
    GBProblem,
    SolitaryWaveParams,
    nonlinearity,
    params_from_amplitude,
    sample_initial,
    solitary_problem,
    solitary_wave,
    solitary_wave_dt,
    solitary_wave_dtt,
)
from .stepping import (
    FrutosState,
    ProposedStepper,
    FrutosStepper,
    RunResult,
    SchemeState,
    bootstrap,
    bootstrap_frutos,
    build_implicit_diagonal,
    run,
    step_frutos,
    step_proposed,
)
from .diagnostics import ErrorRecord, crest_position, error_norms, mass, modified_energy
from .sweeps import (
    SweepResult,
    SweepRow,
    SweepSpec,
    fit_order,
    run_spatial_sweep,
    run_stability_experiment,
    run_temporal_sweep,
    single_run,
    spatial_spec,
    stability_spec,
    temporal_spec,
)
from .reporting import emit_plot_script, read_csv, write_csv
from .verification import run_checks

__version__ = "0.1.0"
