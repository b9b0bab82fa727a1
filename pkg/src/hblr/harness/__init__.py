"""Dataset ingestion, synthetic generation, pipeline orchestration, metrics,
and report/CLI surface."""

from .config import load_config, parse_config_text
from .dataset import (
    ChoiceOption,
    ProblemInstance,
    SchemaError,
    load_dataset,
    save_dataset,
)
from .report import (
    EmptyReportError,
    comparison_csv,
    comparison_markdown,
    emit_report,
    parse_records_csv,
    recompute_aggregates_from_csv,
    run_report_csv,
    run_report_markdown,
)
from .runner import (
    Aggregates,
    BackendUnavailableError,
    ComparisonReport,
    ConfigError,
    EmptyRunError,
    InstanceRecord,
    RunConfig,
    RunReport,
    Strategy,
    aggregates_from_records,
    build_pipeline,
    compare_modes,
    default_stub_oracle,
    prove_with_config,
    run_eval,
)
from .synthetic import InvalidParamsError, generate_synthetic

__all__ = [
    "Aggregates",
    "BackendUnavailableError",
    "ChoiceOption",
    "ComparisonReport",
    "ConfigError",
    "EmptyReportError",
    "EmptyRunError",
    "InstanceRecord",
    "InvalidParamsError",
    "ProblemInstance",
    "RunConfig",
    "RunReport",
    "SchemaError",
    "Strategy",
    "aggregates_from_records",
    "build_pipeline",
    "comparison_csv",
    "comparison_markdown",
    "compare_modes",
    "default_stub_oracle",
    "emit_report",
    "generate_synthetic",
    "prove_with_config",
    "load_config",
    "load_dataset",
    "parse_config_text",
    "parse_records_csv",
    "recompute_aggregates_from_csv",
    "run_eval",
    "run_report_csv",
    "run_report_markdown",
    "save_dataset",
]
