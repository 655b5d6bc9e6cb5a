"""Task registry: the contract every task implements, plus lookup."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any, Callable, Mapping

from .curriculum import Curriculum
from .errors import RegistrationError, UnknownTaskError
from .rng import Rng

if TYPE_CHECKING:  # pragma: no cover
    from .packs import LanguagePack

#: Supported languages, in canonical column order.
LANGUAGES: tuple[str, ...] = (
    "en", "zh", "de", "es", "fr", "it", "pt", "ru", "ja", "ko", "th", "bn", "te", "sw",
)


class Category(str, enum.Enum):
    ALGEBRA = "algebra"
    ARITHMETIC = "arithmetic"
    ALGORITHMIC = "algorithmic"
    COGNITION = "cognition"
    GAMES = "games"
    LOGIC = "logic"


class LocalizationFlag(str, enum.Enum):
    FULLY_TRANSLATED = "fully_translated"
    #: Prompt is localized but embedded data (words, sentences) stays English;
    #: the prompt must say so.
    TRANSLATED_WITH_ENGLISH_DATA = "translated_with_english_data"
    ENGLISH_ONLY = "english_only"


class AnswerKind(str, enum.Enum):
    INTEGER = "integer"
    DECIMAL = "decimal"
    TEXT = "text"
    LOCALIZED_BOOLEAN = "localized_boolean"
    LIST_OF_LISTS = "list_of_lists"
    GRID = "grid"


#: generate(rng, params) -> (payload, canonical answer)
Generator = Callable[[Rng, Mapping[str, Any]], tuple[dict[str, Any], Any]]
#: check(payload, normalized candidate) -> correct?
Checker = Callable[[Mapping[str, Any], Any], bool]
#: bind(payload, pack) -> template bindings (may localize names/tokens)
Binder = Callable[[Mapping[str, Any], "LanguagePack"], dict[str, Any]]
#: complexity proxy used by difficulty-monotonicity checks
Proxy = Callable[[Mapping[str, Any]], float]


def _default_bind(payload: Mapping[str, Any], pack: "LanguagePack") -> dict[str, Any]:
    return dict(payload)


@dataclass(frozen=True)
class TaskSpec:
    """Everything the engine needs to generate, render, and verify one task.

    ``placeholders`` declares, per template key, the exact placeholder set
    every pack variant must use; packs are validated against it.
    ``canonical_tokens`` is the token vocabulary for localized answers
    (empty for numeric/text tasks).
    """

    task_id: str
    category: Category
    localization_flag: LocalizationFlag
    answer_kind: AnswerKind
    curriculum: Curriculum
    generate: Generator
    check: Checker
    placeholders: Mapping[str, frozenset[str]]
    complexity_proxy: Proxy
    bind: Binder = _default_bind
    question_key: str = "question"
    canonical_tokens: tuple[str, ...] = ()
    #: shipped data files the generator reads; their hashes go into metadata
    data_files: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.question_key not in self.placeholders:
            raise RegistrationError(
                f"{self.task_id}: question key {self.question_key!r} not declared in placeholders"
            )
        if self.answer_kind is AnswerKind.LOCALIZED_BOOLEAN and len(self.canonical_tokens) != 2:
            raise RegistrationError(
                f"{self.task_id}: localized_boolean tasks need exactly two canonical tokens"
            )


class TaskRegistry:
    """Mutable during setup, read-only afterwards. Enumeration is sorted."""

    def __init__(self) -> None:
        self._tasks: dict[str, TaskSpec] = {}

    def register(self, spec: TaskSpec) -> TaskSpec:
        if spec.task_id in self._tasks:
            raise RegistrationError(f"task {spec.task_id!r} already registered")
        self._tasks[spec.task_id] = spec
        return spec

    def get(self, task_id: str) -> TaskSpec:
        try:
            return self._tasks[task_id]
        except KeyError:
            raise UnknownTaskError(f"unknown task {task_id!r}") from None

    def __contains__(self, task_id: str) -> bool:
        return task_id in self._tasks

    def task_ids(self) -> list[str]:
        return sorted(self._tasks)

    def specs(self) -> list[TaskSpec]:
        return [self._tasks[t] for t in self.task_ids()]


_default_registry: TaskRegistry | None = None


def default_registry() -> TaskRegistry:
    """The registry with all built-in tasks, built once on first use."""
    global _default_registry
    if _default_registry is None:
        from .tasks import build_registry

        _default_registry = build_registry()
    return _default_registry
