"""Evaluation harness: endpoint client, runner, metrics, language ID."""

from .client import CompletionFn, ModelEndpointConfig, build_http_completer
from .langid import ConsistencyJudgment, classify_latin, judge, language_consistency
from .metrics import (
    CellMetrics,
    EvalReport,
    InstanceKey,
    RunRecord,
    compute_metrics,
    render_report,
)
from .runner import load_ledger, run_eval, run_eval_to_completion

__all__ = [
    "CellMetrics",
    "CompletionFn",
    "ConsistencyJudgment",
    "EvalReport",
    "InstanceKey",
    "ModelEndpointConfig",
    "RunRecord",
    "build_http_completer",
    "classify_latin",
    "compute_metrics",
    "judge",
    "language_consistency",
    "load_ledger",
    "render_report",
    "run_eval",
    "run_eval_to_completion",
]
