"""Algebra tasks: simple linear equations with exact integer solutions."""

from __future__ import annotations

from typing import Any, Mapping

from ..curriculum import Curriculum, CurriculumParam
from ..registry import AnswerKind, Category, LocalizationFlag, TaskSpec
from ..rng import Rng


def _equation_text(a: int, b: int, c: int) -> str:
    left = "x" if a == 1 else f"{a}x"
    if b > 0:
        left += f" + {b}"
    elif b < 0:
        left += f" - {-b}"
    return f"{left} = {c}"


def gen_simple_equations(rng: Rng, params: Mapping[str, Any]) -> tuple[dict[str, Any], int]:
    m = params["magnitude"]
    # x is drawn first so the solution is always an exact integer.
    x = rng.randint(-m, m)
    a = rng.randint(1, m)
    b = rng.randint(-m, m)
    c = a * x + b
    payload = {"a": a, "b": b, "c": c, "equation": _equation_text(a, b, c)}
    return payload, x


def check_simple_equations(payload: Mapping[str, Any], candidate: Any) -> bool:
    # Substitute back rather than comparing to a stored root.
    return payload["a"] * candidate + payload["b"] == payload["c"]


SIMPLE_EQUATIONS = TaskSpec(
    task_id="simple_equations",
    category=Category.ALGEBRA,
    localization_flag=LocalizationFlag.FULLY_TRANSLATED,
    answer_kind=AnswerKind.INTEGER,
    curriculum=Curriculum((
        CurriculumParam("magnitude", (10, 100, 1000), default_index=0),
    )),
    generate=gen_simple_equations,
    check=check_simple_equations,
    placeholders={"question": frozenset({"equation"})},
    complexity_proxy=lambda p: max(abs(p["a"]), abs(p["b"]), abs(p["c"])),
)

SPECS = (SIMPLE_EQUATIONS,)
