"""Instance generation: request -> payload -> rendered question -> answer.

Guarantees, by construction:

* determinism — all randomness comes from ``derive_rng(dataset_seed, index,
  task_id)``; the language never feeds the stream;
* cross-lingual parallelism — payload and answer are computed before any
  pack is touched, and rendering draws exactly one variant word from the
  stream regardless of language;
* prefix stability — instance ``i`` depends only on its own stream, so the
  first ``n`` instances of a dataset never depend on ``count``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping

from . import corpus
from .errors import DataError, DifficultyError
from .packs import RenderContext, load_pack, render_question
from .registry import (
    LANGUAGES,
    AnswerKind,
    LocalizationFlag,
    TaskRegistry,
    TaskSpec,
    default_registry,
)
from .rng import derive_rng

MAX_SEED = (1 << 64) - 1


@dataclass(frozen=True)
class GenerationRequest:
    task_id: str
    language: str
    dataset_seed: int
    index: int
    difficulty: float | Mapping[str, int] | None = None

    def __post_init__(self) -> None:
        if self.language not in LANGUAGES:
            raise DataError(f"unsupported language {self.language!r}")
        if not 0 <= self.dataset_seed <= MAX_SEED:
            raise DataError(f"dataset_seed {self.dataset_seed} outside 64-bit range")
        if self.index < 0:
            raise DataError(f"index must be non-negative, got {self.index}")


@dataclass(frozen=True)
class ProblemInstance:
    task_id: str
    language: str
    dataset_seed: int
    index: int
    difficulty_resolved: dict[str, Any]
    payload: dict[str, Any]
    question: str
    answer: Any
    answer_kind: AnswerKind
    metadata: dict[str, Any] = field(default_factory=dict)

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "task": self.task_id,
            "language": self.language,
            "dataset_seed": self.dataset_seed,
            "index": self.index,
            "difficulty_resolved": self.difficulty_resolved,
            "payload": self.payload,
            "question": self.question,
            "answer": self.answer,
            "answer_kind": self.answer_kind.value,
            "metadata": self.metadata,
        }

    def to_dataset_line(self, difficulty_percentile: float | None) -> dict[str, Any]:
        """Line schema for exported JSONL datasets; payload travels inside
        metadata so a line is self-contained for verification."""
        metadata = dict(self.metadata)
        metadata["payload"] = self.payload
        metadata["difficulty_resolved"] = self.difficulty_resolved
        return {
            "task": self.task_id,
            "language": self.language,
            "dataset_seed": self.dataset_seed,
            "index": self.index,
            "difficulty_percentile": difficulty_percentile,
            "question": self.question,
            "answer": self.answer,
            "answer_kind": self.answer_kind.value,
            "metadata": metadata,
        }


def canonical_json(obj: Any) -> str:
    """Stable serialization used for byte-identity checks and JSONL export."""
    return json.dumps(obj, ensure_ascii=False, sort_keys=True, separators=(",", ":"))


def instance_from_json_dict(raw: Mapping[str, Any], registry: TaskRegistry | None = None) -> ProblemInstance:
    """Rebuild an instance from either the full shape or a dataset line."""
    reg = registry or default_registry()
    try:
        task_id = raw["task"]
        metadata = dict(raw.get("metadata", {}))
        payload = raw["payload"] if "payload" in raw else metadata["payload"]
        difficulty = (
            raw["difficulty_resolved"]
            if "difficulty_resolved" in raw
            else metadata.get("difficulty_resolved", {})
        )
        spec = reg.get(task_id)
        kind = AnswerKind(raw["answer_kind"]) if "answer_kind" in raw else spec.answer_kind
        return ProblemInstance(
            task_id=task_id,
            language=raw["language"],
            dataset_seed=int(raw["dataset_seed"]),
            index=int(raw["index"]),
            difficulty_resolved=dict(difficulty),
            payload=dict(payload),
            question=raw["question"],
            answer=raw["answer"],
            answer_kind=kind,
            metadata=metadata,
        )
    except KeyError as exc:
        raise DataError(f"instance record missing field {exc}") from None


def generate_instance(
    req: GenerationRequest,
    *,
    registry: TaskRegistry | None = None,
    packs_dir: Path | None = None,
    fallback: bool = True,
    resolved_difficulty: Mapping[str, Any] | None = None,
    forced: tuple[dict[str, Any], Any] | None = None,
) -> ProblemInstance:
    """Generate one instance.

    ``resolved_difficulty`` lets dataset generation resolve the curriculum
    once for all indices. ``forced`` injects a (payload, answer) pair and
    skips the generator — a fixture seam for reproducing known instances;
    rendering and verification still run the production path.
    """
    reg = registry or default_registry()
    spec = reg.get(req.task_id)
    resolved = (
        dict(resolved_difficulty)
        if resolved_difficulty is not None
        else spec.curriculum.resolve(req.difficulty)
    )

    rng = derive_rng(req.dataset_seed, req.index, req.task_id)
    if forced is None:
        payload, answer = spec.generate(rng, resolved)
    else:
        payload, answer = dict(forced[0]), forced[1]
    variant_index = rng.next_u64()

    render_language = (
        "en" if spec.localization_flag is LocalizationFlag.ENGLISH_ONLY else req.language
    )
    pack = load_pack(
        req.task_id,
        render_language,
        packs_dir=packs_dir,
        fallback=fallback,
        placeholders=spec.placeholders,
    )
    bindings = spec.bind(payload, pack)
    question = render_question(pack, spec.question_key, RenderContext(bindings, variant_index))

    metadata: dict[str, Any] = {
        "pack_quality": pack.quality.value,
        "rng_draws": rng.draw_count,
    }
    if spec.localization_flag is LocalizationFlag.TRANSLATED_WITH_ENGLISH_DATA:
        metadata["data_language"] = "en"
    for data_file in spec.data_files:
        metadata[f"sha256:{data_file}"] = corpus.data_sha256(data_file)

    return ProblemInstance(
        task_id=req.task_id,
        language=req.language,
        dataset_seed=req.dataset_seed,
        index=req.index,
        difficulty_resolved=resolved,
        payload=payload,
        question=question,
        answer=answer,
        answer_kind=spec.answer_kind,
        metadata=metadata,
    )


def generate_dataset(
    task_id: str,
    language: str,
    dataset_seed: int,
    count: int,
    difficulty: float | Mapping[str, int] | None = None,
    *,
    registry: TaskRegistry | None = None,
    packs_dir: Path | None = None,
    fallback: bool = True,
) -> list[ProblemInstance]:
    """Instances for indices 0..count-1, difficulty resolved once."""
    if count < 1:
        raise DataError(f"count must be >= 1, got {count}")
    reg = registry or default_registry()
    spec = reg.get(task_id)
    resolved = spec.curriculum.resolve(difficulty)
    return [
        generate_instance(
            GenerationRequest(task_id, language, dataset_seed, index, difficulty),
            registry=reg,
            packs_dir=packs_dir,
            fallback=fallback,
            resolved_difficulty=resolved,
        )
        for index in range(count)
    ]
