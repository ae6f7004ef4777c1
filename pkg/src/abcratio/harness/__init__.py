"""Data ingestion, synthetic datasets and the ratio experiment pipeline."""

from abcratio.harness.datasets import gen_uniform_profile, uniform_dataset
from abcratio.harness.experiment import (
    CSV_HEADER,
    ExperimentConfig,
    ExperimentResult,
    ExperimentRow,
    compromise_filter,
    load_config,
    parse_config,
    run_experiment,
)
from abcratio.harness.preflib import (
    RankedBallot,
    format_preflib,
    parse_preflib,
    read_preflib,
    top_i_approvals,
)
from abcratio.harness.profile_io import (
    ParseError,
    UnsupportedFormatError,
    format_profile,
    parse_profile,
    read_profile,
    write_profile,
)

__all__ = [
    "CSV_HEADER",
    "ExperimentConfig",
    "ExperimentResult",
    "ExperimentRow",
    "ParseError",
    "RankedBallot",
    "UnsupportedFormatError",
    "compromise_filter",
    "format_preflib",
    "format_profile",
    "gen_uniform_profile",
    "load_config",
    "parse_config",
    "parse_preflib",
    "parse_profile",
    "read_preflib",
    "read_profile",
    "run_experiment",
    "top_i_approvals",
    "uniform_dataset",
    "write_profile",
]
