"""Experiment orchestration, statistics, reports and the command line."""

from planartest.harness.experiments import (
    CSV_COLUMNS,
    ExperimentConfig,
    ExperimentRow,
    emit_plot_script,
    parse_grid,
    rows_to_csv,
    run_detection_experiment,
)
from planartest.harness.report import LevelReport, PipelineReport, run_pipeline_report
from planartest.harness.stats import amplified, amplified_sigma, at_least, binomial_sigma, within_sigmas

__all__ = [
    "CSV_COLUMNS",
    "ExperimentConfig",
    "ExperimentRow",
    "LevelReport",
    "PipelineReport",
    "amplified",
    "amplified_sigma",
    "at_least",
    "binomial_sigma",
    "emit_plot_script",
    "parse_grid",
    "rows_to_csv",
    "run_detection_experiment",
    "run_pipeline_report",
    "within_sigmas",
]
