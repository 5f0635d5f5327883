"""Orchestration: configuration, the staged workflow, reports, simulation."""

from .config import PipelineConfig, load_pipeline_config
from .report import emit_report, parse_json, render_json, render_text, write_csv
from .run import REQUIRED_OUTPUTS, STAGES, ReportBundle, StageRecord, run_pipeline
from .simulate import SCENARIOS, simulate_dataset

__all__ = [
    "PipelineConfig",
    "REQUIRED_OUTPUTS",
    "ReportBundle",
    "SCENARIOS",
    "STAGES",
    "StageRecord",
    "emit_report",
    "load_pipeline_config",
    "parse_json",
    "render_json",
    "render_text",
    "run_pipeline",
    "simulate_dataset",
    "write_csv",
]
