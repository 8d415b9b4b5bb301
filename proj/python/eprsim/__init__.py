"""Closed-form and Monte Carlo engines for two-channel polarization-correlation
experiments.

Everything lives in the compiled core; this package re-exports it.
"""

from ._eprsim import (
    ChshResult,
    ChshSettings,
    CoincidenceTable,
    CountRecord,
    ScanRow,
    Visibility,
    __version__,
    anticorrelated_state,
    born_table,
    chi,
    chi_of_table,
    chsh_statistic,
    classical_table,
    derive_seed,
    estimate_table,
    maximize_chsh,
    mc_scan,
    normalize_angle,
    quantum_table_closed,
    rows_to_csv,
    run_trials,
    scan,
    table_from_counts,
    visibility,
    visibility_scanned,
)

__all__ = [
    "ChshResult",
    "ChshSettings",
    "CoincidenceTable",
    "CountRecord",
    "ScanRow",
    "Visibility",
    "__version__",
    "anticorrelated_state",
    "born_table",
    "chi",
    "chi_of_table",
    "chsh_statistic",
    "classical_table",
    "derive_seed",
    "estimate_table",
    "maximize_chsh",
    "mc_scan",
    "normalize_angle",
    "quantum_table_closed",
    "rows_to_csv",
    "run_trials",
    "scan",
    "table_from_counts",
    "visibility",
    "visibility_scanned",
]
