"""Command-line entry points: generate, lint, verify, eval, report.

Exit codes: 0 success, 1 usage/config error, 2 data error, 3 endpoint
failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from . import corpus
from .engine import canonical_json, generate_dataset, instance_from_json_dict
from .errors import (
    ConfigError,
    DataError,
    EndpointError,
    PackMissingError,
    PackSchemaError,
    ProblingoError,
)
from .packs import ENGLISH, lint_pack, load_pack, default_packs_dir
from .registry import LANGUAGES, LocalizationFlag, default_registry
from .harness.client import ModelEndpointConfig, build_http_completer
from .harness.metrics import compute_metrics, render_report
from .harness.runner import load_ledger, run_eval_to_completion
from .verification import verify

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_ENDPOINT = 3


# ---------------------------------------------------------------------------
# Run configuration
# ---------------------------------------------------------------------------

_RUN_CONFIG_KEYS = {
    "tasks", "languages", "dataset_seed", "count", "difficulty_percentile",
    "output_dir", "k", "endpoint", "ledger", "report_json", "report_text",
    "fallback",
}


@dataclass
class RunConfig:
    tasks: list[str] = field(default_factory=lambda: ["all"])
    languages: list[str] = field(default_factory=lambda: ["all"])
    dataset_seed: int = 0
    count: int = 50
    difficulty_percentile: float | None = 25.0
    output_dir: str = "datasets"
    k: int = 8
    endpoint: dict[str, Any] = field(default_factory=dict)
    ledger: str = "eval_ledger.jsonl"
    report_json: str = "report.json"
    report_text: str = "report.txt"
    fallback: bool = True

    @classmethod
    def from_file(cls, path: Path) -> "RunConfig":
        try:
            with open(path, encoding="utf-8") as fh:
                raw = json.load(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from None
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config {path} is not valid JSON: {exc}") from None
        if not isinstance(raw, dict):
            raise ConfigError(f"config {path} must be a JSON object")
        unknown = set(raw) - _RUN_CONFIG_KEYS
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        return cls(**raw)

    def resolved_tasks(self) -> list[str]:
        registry = default_registry()
        if self.tasks == ["all"]:
            return registry.task_ids()
        for task in self.tasks:
            if task not in registry:
                raise ConfigError(f"unknown task {task!r}")
        return list(self.tasks)

    def resolved_languages(self) -> list[str]:
        if self.languages == ["all"]:
            return list(LANGUAGES)
        for lang in self.languages:
            if lang not in LANGUAGES:
                raise ConfigError(f"unsupported language {lang!r}")
        return list(self.languages)


def _apply_overrides(config: RunConfig, args: argparse.Namespace) -> RunConfig:
    for name in ("dataset_seed", "count", "k", "output_dir", "ledger"):
        value = getattr(args, name, None)
        if value is not None:
            setattr(config, name, value)
    if getattr(args, "tasks", None):
        config.tasks = args.tasks
    if getattr(args, "languages", None):
        config.languages = args.languages
    if getattr(args, "difficulty_percentile", None) is not None:
        config.difficulty_percentile = args.difficulty_percentile
    return config


# ---------------------------------------------------------------------------
# generate
# ---------------------------------------------------------------------------

def cmd_generate(args: argparse.Namespace) -> int:
    config = RunConfig.from_file(Path(args.config)) if args.config else RunConfig()
    config = _apply_overrides(config, args)
    if config.count < 1:
        raise ConfigError(f"count must be >= 1, got {config.count}")

    registry = default_registry()
    tasks = config.resolved_tasks()
    languages = config.resolved_languages()
    out_dir = Path(config.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    pack_qualities: dict[str, str] = {}
    written = []
    for task in tasks:
        for language in languages:
            dataset = generate_dataset(
                task,
                language,
                config.dataset_seed,
                config.count,
                config.difficulty_percentile,
                registry=registry,
                fallback=config.fallback,
            )
            path = out_dir / f"{task}_{language}.jsonl"
            with open(path, "w", encoding="utf-8") as fh:
                for instance in dataset:
                    fh.write(canonical_json(instance.to_dataset_line(config.difficulty_percentile)) + "\n")
            pack_qualities[f"{task}/{language}"] = dataset[0].metadata["pack_quality"]
            written.append(path.name)

    manifest = {
        "dataset_seed": config.dataset_seed,
        "count": config.count,
        "difficulty_percentile": config.difficulty_percentile,
        "tasks": tasks,
        "languages": languages,
        "files": sorted(written),
        "pack_qualities": pack_qualities,
        "data_hashes": {
            corpus.WORDS_FILE: corpus.data_sha256(corpus.WORDS_FILE),
            corpus.SENTENCES_FILE: corpus.data_sha256(corpus.SENTENCES_FILE),
        },
    }
    with open(out_dir / "manifest.json", "w", encoding="utf-8") as fh:
        fh.write(canonical_json(manifest) + "\n")
    print(f"wrote {len(written)} dataset files + manifest.json to {out_dir}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# lint
# ---------------------------------------------------------------------------

def _load_allowlist(packs_dir: Path) -> dict[tuple[str, str], frozenset[tuple[str, str]]]:
    path = packs_dir / "lint_allowlist.json"
    if not path.exists():
        return {}
    with open(path, encoding="utf-8") as fh:
        raw = json.load(fh)
    table: dict[tuple[str, str], set[tuple[str, str]]] = {}
    for entry in raw.get("entries", []):
        table.setdefault((entry["task"], entry["language"]), set()).add(
            (entry.get("key", ""), entry["code"])
        )
    return {key: frozenset(value) for key, value in table.items()}


def cmd_lint(args: argparse.Namespace) -> int:
    registry = default_registry()
    packs_dir = Path(args.packs_dir) if args.packs_dir else default_packs_dir()
    allowlist = _load_allowlist(packs_dir)

    if args.packs:
        targets = [Path(p) for p in args.packs]
    else:
        targets = sorted(packs_dir.glob("*/*.json"))
    if not targets:
        raise DataError("no pack files to lint")

    errors = 0
    warnings = 0
    for path in targets:
        task_id = path.parent.name
        language = path.stem
        if task_id not in registry:
            print(f"{path}: skipped (no registered task {task_id!r})")
            continue
        spec = registry.get(task_id)
        pack = load_pack(task_id, language, packs_dir=packs_dir, fallback=False)
        english = (
            load_pack(task_id, ENGLISH, packs_dir=packs_dir, fallback=False)
            if language != ENGLISH
            else None
        )
        findings = lint_pack(
            pack,
            declared=spec.placeholders,
            english=english,
            required_tokens=spec.canonical_tokens,
            english_data_task=spec.localization_flag
            is LocalizationFlag.TRANSLATED_WITH_ENGLISH_DATA,
            allowlist=allowlist.get((task_id, language), frozenset()),
        )
        for finding in findings:
            print(f"{path}: {finding.severity}: {finding.code}: {finding.message}")
            if finding.severity == "error":
                errors += 1
            else:
                warnings += 1
    print(f"lint: {errors} error(s), {warnings} warning(s) in {len(targets)} pack file(s)")
    return EXIT_DATA if errors else EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(args: argparse.Namespace) -> int:
    try:
        with open(args.instance, encoding="utf-8") as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DataError(f"cannot read instance file: {exc}") from None
    try:
        with open(args.transcript, encoding="utf-8") as fh:
            transcript = fh.read()
    except OSError as exc:
        raise DataError(f"cannot read transcript file: {exc}") from None

    instance = instance_from_json_dict(raw)
    verdict = verify(instance, transcript)
    print(json.dumps(verdict.to_json_dict(), ensure_ascii=False))
    return EXIT_OK


# ---------------------------------------------------------------------------
# eval / report
# ---------------------------------------------------------------------------

def _build_dataset(config: RunConfig):
    registry = default_registry()
    dataset = []
    for task in config.resolved_tasks():
        for language in config.resolved_languages():
            dataset.extend(
                generate_dataset(
                    task,
                    language,
                    config.dataset_seed,
                    config.count,
                    config.difficulty_percentile,
                    registry=registry,
                    fallback=config.fallback,
                )
            )
    return dataset


def _write_reports(records, k: int, config: RunConfig) -> None:
    report = compute_metrics(records, k)
    with open(config.report_json, "w", encoding="utf-8") as fh:
        fh.write(render_report(report, "json") + "\n")
    text = render_report(report, "text")
    with open(config.report_text, "w", encoding="utf-8") as fh:
        fh.write(text)
    print(text, end="")


def cmd_eval(args: argparse.Namespace) -> int:
    if not args.config:
        raise ConfigError("eval requires --config")
    config = RunConfig.from_file(Path(args.config))
    config = _apply_overrides(config, args)
    if not config.endpoint:
        raise ConfigError("config must define an endpoint for eval")
    endpoint = ModelEndpointConfig.from_dict(config.endpoint)
    completer = build_http_completer(endpoint)

    dataset = _build_dataset(config)
    records = run_eval_to_completion(
        dataset,
        completer,
        config.k,
        ledger_path=Path(config.ledger),
        model=endpoint.model,
        max_concurrency=endpoint.max_concurrency,
    )
    _write_reports(records, config.k, config)
    return EXIT_OK


def cmd_report(args: argparse.Namespace) -> int:
    config = RunConfig.from_file(Path(args.config)) if args.config else RunConfig()
    config = _apply_overrides(config, args)
    records = load_ledger(Path(config.ledger))
    if not records:
        raise DataError(f"ledger {config.ledger} has no records")
    _write_reports(records, config.k, config)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="problingo",
        description="Procedurally generated reasoning problems in 14 languages, "
        "with verification and an evaluation harness.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write JSONL datasets plus a manifest")
    gen.add_argument("--config", help="run config JSON (flags override file values)")
    gen.add_argument("--tasks", nargs="+", help="task ids, or 'all'")
    gen.add_argument("--languages", nargs="+", help="language codes, or 'all'")
    gen.add_argument("--dataset-seed", dest="dataset_seed", type=int)
    gen.add_argument("--count", type=int)
    gen.add_argument(
        "--difficulty-percentile", dest="difficulty_percentile", type=float
    )
    gen.add_argument("--output-dir", dest="output_dir")
    gen.set_defaults(func=cmd_generate)

    lint = sub.add_parser("lint", help="lint language packs")
    lint.add_argument("packs", nargs="*", help="pack files (default: all shipped)")
    lint.add_argument("--packs-dir", dest="packs_dir")
    lint.set_defaults(func=cmd_lint)

    ver = sub.add_parser("verify", help="verify one transcript against one instance")
    ver.add_argument("instance", help="instance JSON file (full or dataset-line shape)")
    ver.add_argument("transcript", help="raw transcript text file")
    ver.set_defaults(func=cmd_verify)

    ev = sub.add_parser("eval", help="query an endpoint over a dataset and report metrics")
    ev.add_argument("--config", required=True, help="run config JSON with an endpoint block")
    ev.add_argument("--tasks", nargs="+")
    ev.add_argument("--languages", nargs="+")
    ev.add_argument("--dataset-seed", dest="dataset_seed", type=int)
    ev.add_argument("--count", type=int)
    ev.add_argument("--difficulty-percentile", dest="difficulty_percentile", type=float)
    ev.add_argument("--k", type=int)
    ev.add_argument("--ledger")
    ev.set_defaults(func=cmd_eval)

    rep = sub.add_parser("report", help="recompute reports from an existing ledger")
    rep.add_argument("--config", help="run config JSON")
    rep.add_argument("--ledger")
    rep.add_argument("--k", type=int)
    rep.set_defaults(func=cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DataError, PackMissingError, PackSchemaError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except EndpointError as exc:
        print(f"endpoint error: {exc}", file=sys.stderr)
        return EXIT_ENDPOINT
    except ProblingoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
