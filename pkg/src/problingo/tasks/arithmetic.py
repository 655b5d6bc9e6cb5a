"""Arithmetic tasks: gcd, count_bits, chain_sum, leg_counting."""

from __future__ import annotations

import math
from typing import Any, Mapping

from ..curriculum import Curriculum, CurriculumParam
from ..packs import LanguagePack, render_question, RenderContext
from ..registry import AnswerKind, Category, LocalizationFlag, TaskSpec
from ..rng import Rng

# ---------------------------------------------------------------------------
# gcd
# ---------------------------------------------------------------------------

def gen_gcd(rng: Rng, params: Mapping[str, Any]) -> tuple[dict[str, Any], int]:
    numbers = [rng.randint(2, params["max_value"]) for _ in range(params["num_terms"])]
    answer = math.gcd(*numbers)
    return {"numbers": numbers}, answer


def check_gcd(payload: Mapping[str, Any], candidate: Any) -> bool:
    return candidate == math.gcd(*payload["numbers"])


GCD = TaskSpec(
    task_id="gcd",
    category=Category.ARITHMETIC,
    localization_flag=LocalizationFlag.FULLY_TRANSLATED,
    answer_kind=AnswerKind.INTEGER,
    curriculum=Curriculum((
        CurriculumParam("num_terms", (2, 3, 4), default_index=0),
        CurriculumParam("max_value", (100, 1000, 10000), default_index=1),
    )),
    generate=gen_gcd,
    check=check_gcd,
    placeholders={"question": frozenset({"numbers"})},
    complexity_proxy=lambda p: max(p["numbers"]),
)


# ---------------------------------------------------------------------------
# count_bits
# ---------------------------------------------------------------------------

def gen_count_bits(rng: Rng, params: Mapping[str, Any]) -> tuple[dict[str, Any], int]:
    number = rng.randint(1, (1 << params["bits"]) - 1)
    return {"number": number}, bin(number).count("1")


def check_count_bits(payload: Mapping[str, Any], candidate: Any) -> bool:
    return candidate == bin(payload["number"]).count("1")


COUNT_BITS = TaskSpec(
    task_id="count_bits",
    category=Category.ARITHMETIC,
    localization_flag=LocalizationFlag.FULLY_TRANSLATED,
    answer_kind=AnswerKind.INTEGER,
    curriculum=Curriculum((
        CurriculumParam("bits", (8, 16, 32, 48), default_index=2),
    )),
    generate=gen_count_bits,
    check=check_count_bits,
    placeholders={"question": frozenset({"number"})},
    complexity_proxy=lambda p: p["number"].bit_length(),
)


# ---------------------------------------------------------------------------
# chain_sum
# ---------------------------------------------------------------------------

def _chain_value(operands: list[int], ops: list[str]) -> int:
    total = operands[0]
    for op, operand in zip(ops, operands[1:]):
        total = total + operand if op == "+" else total - operand
    return total


def gen_chain_sum(rng: Rng, params: Mapping[str, Any]) -> tuple[dict[str, Any], int]:
    k = params["num_terms"]
    operands = [rng.randint(0, params["max_value"]) for _ in range(k)]
    ops = [rng.choice("+-") for _ in range(k - 1)]
    expression = str(operands[0])
    for op, operand in zip(ops, operands[1:]):
        expression += f" {op} {operand}"
    payload = {"operands": operands, "ops": ops, "expression": expression}
    return payload, _chain_value(operands, ops)


def check_chain_sum(payload: Mapping[str, Any], candidate: Any) -> bool:
    return candidate == _chain_value(payload["operands"], payload["ops"])


CHAIN_SUM = TaskSpec(
    task_id="chain_sum",
    category=Category.ARITHMETIC,
    localization_flag=LocalizationFlag.FULLY_TRANSLATED,
    answer_kind=AnswerKind.INTEGER,
    curriculum=Curriculum((
        CurriculumParam("num_terms", (2, 3, 4, 5, 6), default_index=1),
        CurriculumParam("max_value", (10, 100, 1000), default_index=1),
    )),
    generate=gen_chain_sum,
    check=check_chain_sum,
    placeholders={"question": frozenset({"expression"})},
    complexity_proxy=lambda p: len(p["operands"]) * (1 + max(p["operands"])),
)


# ---------------------------------------------------------------------------
# leg_counting
# ---------------------------------------------------------------------------

#: Canonical animal inventory. Localized names live in the packs under
#: template keys "animal_<id>"; prompts use the "<name>: <count>" format so
#: no language ever needs plural forms.
LEG_TABLE: dict[str, int] = {
    "spider": 8,
    "ant": 6,
    "bee": 6,
    "butterfly": 6,
    "cow": 4,
    "horse": 4,
    "dog": 4,
    "cat": 4,
    "tiger": 4,
    "sheep": 4,
    "duck": 2,
    "chicken": 2,
    "crow": 2,
    "human": 2,
}

_ANIMAL_IDS = tuple(sorted(LEG_TABLE))


def gen_leg_counting(rng: Rng, params: Mapping[str, Any]) -> tuple[dict[str, Any], int]:
    species = rng.sample(_ANIMAL_IDS, params["num_animals"])
    animals = [[animal, rng.randint(1, params["max_count"])] for animal in species]
    answer = sum(count * LEG_TABLE[animal] for animal, count in animals)
    return {"animals": animals}, answer


def check_leg_counting(payload: Mapping[str, Any], candidate: Any) -> bool:
    return candidate == sum(count * LEG_TABLE[a] for a, count in payload["animals"])


def bind_leg_counting(payload: Mapping[str, Any], pack: LanguagePack) -> dict[str, Any]:
    entries = []
    for animal, count in payload["animals"]:
        name = render_question(pack, f"animal_{animal}", RenderContext({}))
        entries.append(f"{name}: {count}")
    return {"animals": entries}


LEG_COUNTING = TaskSpec(
    task_id="leg_counting",
    category=Category.ARITHMETIC,
    localization_flag=LocalizationFlag.FULLY_TRANSLATED,
    answer_kind=AnswerKind.INTEGER,
    curriculum=Curriculum((
        CurriculumParam("num_animals", (2, 3, 5), default_index=1),
        CurriculumParam("max_count", (5, 20, 100), default_index=0),
    )),
    generate=gen_leg_counting,
    check=check_leg_counting,
    bind=bind_leg_counting,
    placeholders={
        "question": frozenset({"animals"}),
        **{f"animal_{animal}": frozenset() for animal in LEG_TABLE},
    },
    complexity_proxy=lambda p: sum(count for _, count in p["animals"]),
)

SPECS = (GCD, COUNT_BITS, CHAIN_SUM, LEG_COUNTING)
