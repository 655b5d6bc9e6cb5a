"""Drive a completion endpoint over a dataset, k attempts per instance.

Records are appended to a JSONL ledger as they complete, one line per
(instance, attempt). A re-run with the same ledger issues requests only for
missing pairs, so an interrupted run resumes without re-querying anything.
"""

from __future__ import annotations

import json
import logging
import threading
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from pathlib import Path
from typing import Iterable, Iterator

from ..engine import ProblemInstance
from ..errors import ConfigError, DataError
from ..registry import TaskRegistry
from ..verification import NO_ANSWER_FOUND, verify
from .client import CompletionFn
from .langid import language_consistency
from .metrics import InstanceKey, RunRecord

log = logging.getLogger(__name__)


def instance_key(instance: ProblemInstance) -> InstanceKey:
    return InstanceKey(
        instance.task_id, instance.language, instance.dataset_seed, instance.index
    )


def load_ledger(path: Path) -> list[RunRecord]:
    records: list[RunRecord] = []
    if not path.exists():
        return records
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                records.append(RunRecord.from_json_dict(json.loads(line)))
            except (json.JSONDecodeError, DataError) as exc:
                raise DataError(f"{path}:{line_no}: bad ledger line ({exc})") from None
    return records


def run_eval(
    dataset: list[ProblemInstance],
    completer: CompletionFn,
    k: int,
    *,
    ledger_path: Path,
    model: str = "",
    max_concurrency: int = 4,
    registry: TaskRegistry | None = None,
    packs_dir: Path | None = None,
) -> Iterator[RunRecord]:
    """Yield one RunRecord per (instance, attempt) as requests complete.

    Requests that still fail after the completer's own retries are recorded
    with an empty transcript (verdict no_answer_found) — denominators stay
    fixed at |dataset| * k.
    """
    if k < 1:
        raise ConfigError(f"k must be >= 1, got {k}")
    if not dataset:
        raise ConfigError("dataset is empty")
    if max_concurrency < 1:
        raise ConfigError("max_concurrency must be >= 1")

    done = {
        (record.key, record.attempt)
        for record in load_ledger(ledger_path)
        if record.model == model or not model
    }
    todo = [
        (instance, attempt)
        for instance in dataset
        for attempt in range(k)
        if (instance_key(instance), attempt) not in done
    ]
    log.info("eval: %d records present, issuing %d new requests", len(done), len(todo))

    write_lock = threading.Lock()
    ledger_path.parent.mkdir(parents=True, exist_ok=True)

    def attempt_one(instance: ProblemInstance, attempt: int) -> RunRecord:
        started = time.monotonic()
        try:
            transcript = completer([{"role": "user", "content": instance.question}])
        except Exception as exc:
            log.warning("request failed permanently (%s); scoring empty transcript", exc)
            transcript = ""
        latency = time.monotonic() - started
        verdict = verify(instance, transcript, registry=registry, packs_dir=packs_dir)
        return RunRecord(
            key=instance_key(instance),
            attempt=attempt,
            transcript=transcript,
            correct=verdict.correct,
            failure_reason=verdict.failure_reason if not verdict.correct else None,
            latency_s=latency,
            model=model,
            language_consistent=language_consistency(
                transcript, instance.language, packs_dir=packs_dir
            ),
        )

    if not todo:
        return
    with ThreadPoolExecutor(max_workers=max_concurrency) as pool:
        futures = [pool.submit(attempt_one, inst, att) for inst, att in todo]
        for future in as_completed(futures):
            record = future.result()
            with write_lock, open(ledger_path, "a", encoding="utf-8") as fh:
                fh.write(json.dumps(record.to_json_dict(), ensure_ascii=False) + "\n")
            yield record


def run_eval_to_completion(
    dataset: list[ProblemInstance],
    completer: CompletionFn,
    k: int,
    *,
    ledger_path: Path,
    model: str = "",
    max_concurrency: int = 4,
    registry: TaskRegistry | None = None,
    packs_dir: Path | None = None,
) -> list[RunRecord]:
    """Drain run_eval, then return the full ledger (old + new records)."""
    for _ in run_eval(
        dataset,
        completer,
        k,
        ledger_path=ledger_path,
        model=model,
        max_concurrency=max_concurrency,
        registry=registry,
        packs_dir=packs_dir,
    ):
        pass
    wanted = {
        (instance_key(instance), attempt)
        for instance in dataset
        for attempt in range(k)
    }
    return [r for r in load_ledger(ledger_path) if (r.key, r.attempt) in wanted]
