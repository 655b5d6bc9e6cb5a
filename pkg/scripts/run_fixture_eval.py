#!/usr/bin/env python3
"""End-to-end harness demo against a built-in fixture 'model'.

The fixture answers correctly with a configurable probability, so the run
exercises the whole pipeline (generation -> requests -> verification ->
ledger -> report) without a real endpoint. Useful as a smoke test and as a
template for wiring a real model via `problingo eval --config`.
"""

import argparse
import random
import sys
from pathlib import Path

from problingo.engine import generate_dataset
from problingo.harness.metrics import compute_metrics, render_report
from problingo.harness.runner import run_eval_to_completion
from problingo.registry import default_registry
from problingo.verification import localized_answer_text


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--tasks", nargs="+", default=["gcd", "isomorphic_strings", "syllogism"])
    parser.add_argument("--languages", nargs="+", default=["en", "de", "ja"])
    parser.add_argument("--count", type=int, default=10)
    parser.add_argument("--k", type=int, default=8)
    parser.add_argument("--accuracy", type=float, default=0.6,
                        help="probability the fixture answers correctly")
    parser.add_argument("--out", default="fixture_eval")
    args = parser.parse_args()

    registry = default_registry()
    dataset = []
    for task in args.tasks:
        for language in args.languages:
            dataset.extend(generate_dataset(task, language, 7, args.count, 25.0, registry=registry))

    answers = {
        inst.question: localized_answer_text(inst, registry=registry) for inst in dataset
    }
    rng = random.Random(0)

    def fixture(messages):
        question = messages[0]["content"]
        if rng.random() < args.accuracy:
            return f"Worked through it.\nFinal answer: {answers[question]}"
        return "Worked through it.\nFinal answer: 424242"

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    records = run_eval_to_completion(
        dataset, fixture, args.k,
        ledger_path=out / "ledger.jsonl", model="fixture", registry=registry,
    )
    report = compute_metrics(records, args.k)
    (out / "report.json").write_text(render_report(report, "json") + "\n", "utf-8")
    text = render_report(report, "text")
    (out / "report.txt").write_text(text, "utf-8")
    print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
