"""Cognition tasks: number_sequence (next term of a progression)."""

from __future__ import annotations

from typing import Any, Mapping

from ..curriculum import Curriculum, CurriculumParam
from ..registry import AnswerKind, Category, LocalizationFlag, TaskSpec
from ..rng import Rng


def _next_term(payload: Mapping[str, Any]) -> int:
    if payload["kind"] == "arithmetic":
        return payload["start"] + len(payload["terms"]) * payload["step"]
    return payload["start"] * payload["ratio"] ** len(payload["terms"])


def gen_number_sequence(rng: Rng, params: Mapping[str, Any]) -> tuple[dict[str, Any], int]:
    n = params["num_terms"]
    use_geometric = params["family"] == "arithmetic_geometric" and rng.random() < 0.5
    if use_geometric:
        start = rng.randint(1, 9)
        ratio = rng.randint(2, 4)
        terms = [start * ratio**i for i in range(n)]
        payload: dict[str, Any] = {"kind": "geometric", "start": start, "ratio": ratio, "terms": terms}
    else:
        start = rng.randint(1, 30)
        step = rng.randint(-9, 9)
        terms = [start + i * step for i in range(n)]
        payload = {"kind": "arithmetic", "start": start, "step": step, "terms": terms}
    return payload, _next_term(payload)


def check_number_sequence(payload: Mapping[str, Any], candidate: Any) -> bool:
    return candidate == _next_term(payload)


NUMBER_SEQUENCE = TaskSpec(
    task_id="number_sequence",
    category=Category.COGNITION,
    localization_flag=LocalizationFlag.FULLY_TRANSLATED,
    answer_kind=AnswerKind.INTEGER,
    curriculum=Curriculum((
        CurriculumParam("num_terms", (5, 7, 9), default_index=1),
        CurriculumParam("family", ("arithmetic", "arithmetic_geometric"), default_index=0),
    )),
    generate=gen_number_sequence,
    check=check_number_sequence,
    placeholders={"question": frozenset({"terms"})},
    complexity_proxy=lambda p: len(p["terms"]),
)

SPECS = (NUMBER_SEQUENCE,)
