import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from problingo.errors import DataError
from problingo.harness.metrics import (
    CellMetrics,
    EvalReport,
    InstanceKey,
    RunRecord,
    compute_metrics,
    render_report,
)


def record(task="gcd", language="en", index=0, attempt=0, correct=False, consistent=True):
    return RunRecord(
        key=InstanceKey(task, language, 0, index),
        attempt=attempt,
        transcript="x",
        correct=correct,
        failure_reason=None if correct else "wrong_answer",
        latency_s=0.01,
        model="fixture",
        language_consistent=consistent,
    )


def records_from_pattern(pattern: dict[int, list[bool]], task="gcd", language="en"):
    return [
        record(task, language, index, attempt, correct)
        for index, outcomes in pattern.items()
        for attempt, correct in enumerate(outcomes)
    ]


def test_hand_counted_example():
    # two instances, k=4: [1,0,0,0] and [1,1,1,0]
    report = compute_metrics(
        records_from_pattern({0: [True, False, False, False], 1: [True, True, True, False]}), 4
    )
    cell = report.cells[("gcd", "en")]
    assert cell.average_at_k == 0.5
    assert cell.pass_at_k == 1.0
    assert cell.instances == 2
    assert cell.attempts == 8


def test_all_incorrect():
    report = compute_metrics(records_from_pattern({0: [False] * 3, 1: [False] * 3}), 3)
    cell = report.cells[("gcd", "en")]
    assert cell.average_at_k == 0.0
    assert cell.pass_at_k == 0.0


def test_all_correct():
    report = compute_metrics(records_from_pattern({0: [True] * 3}), 3)
    cell = report.cells[("gcd", "en")]
    assert cell.average_at_k == 1.0
    assert cell.pass_at_k == 1.0


def test_k_equals_one_average_is_pass():
    report = compute_metrics(records_from_pattern({0: [True], 1: [False], 2: [True]}), 1)
    cell = report.cells[("gcd", "en")]
    assert cell.average_at_k == cell.pass_at_k == pytest.approx(2 / 3)


def test_ragged_attempts_rejected():
    records = records_from_pattern({0: [True, False], 1: [True]})
    with pytest.raises(DataError):
        compute_metrics(records, 2)


def test_duplicate_attempt_rejected():
    records = [record(attempt=0), record(attempt=0)]
    with pytest.raises(DataError):
        compute_metrics(records, 2)


def test_empty_rejected():
    with pytest.raises(DataError):
        compute_metrics([], 1)


def test_order_invariance():
    records = records_from_pattern({i: [bool(i % 2), True, False] for i in range(10)})
    shuffled = list(records)
    random.Random(5).shuffle(shuffled)
    assert compute_metrics(records, 3) == compute_metrics(shuffled, 3)


def test_pass_at_k_ge_average_at_k_randomized():
    rng = random.Random(1234)
    for _ in range(10_000):
        k = rng.randint(1, 8)
        instances = rng.randint(1, 5)
        pattern = {
            i: [rng.random() < rng.random() for _ in range(k)] for i in range(instances)
        }
        report = compute_metrics(records_from_pattern(pattern), k)
        cell = report.cells[("gcd", "en")]
        assert 0.0 <= cell.average_at_k <= cell.pass_at_k <= 1.0


@given(
    st.dictionaries(
        st.integers(0, 6),
        st.lists(st.booleans(), min_size=3, max_size=3),
        min_size=1,
        max_size=7,
    )
)
def test_pass_ge_average_property(pattern):
    report = compute_metrics(records_from_pattern(pattern), 3)
    cell = report.cells[("gcd", "en")]
    assert cell.average_at_k <= cell.pass_at_k


def test_language_rollups_and_overall():
    records = []
    records += records_from_pattern({0: [True, True]}, task="gcd", language="en")
    records += records_from_pattern({0: [True, False]}, task="count_bits", language="en")
    records += records_from_pattern({0: [False, False]}, task="gcd", language="de")
    records += records_from_pattern({0: [True, True]}, task="count_bits", language="de")
    report = compute_metrics(records, 2)
    assert report.language_rollup("average_at_k", "en") == pytest.approx(0.75)
    assert report.language_rollup("average_at_k", "de") == pytest.approx(0.5)
    assert report.overall("average_at_k") == pytest.approx(0.625)
    assert report.languages() == ["en", "de"]  # canonical column order


def test_render_single_cell_table():
    report = compute_metrics(records_from_pattern({0: [True]}), 1)
    text = render_report(report, "text")
    assert "Average@1" in text
    assert "1.000" in text
    # per-row Average equals the single cell
    line = [l for l in text.splitlines() if l.strip().startswith("gcd")][0]
    assert line.split()[-1] == "1.000"


def test_render_average_column_is_row_mean():
    records = []
    for lang, correct in (("en", True), ("de", False)):
        records += records_from_pattern({0: [correct]}, language=lang)
    report = compute_metrics(records, 1)
    text = render_report(report, "text")
    row = [l for l in text.splitlines() if l.strip().startswith("gcd")][0]
    assert row.split()[-1] == "0.500"


def test_render_empty_report_rejected():
    with pytest.raises(DataError):
        render_report(EvalReport(k=1), "text")


def test_json_report_roundtrips():
    report = compute_metrics(records_from_pattern({0: [True, False]}), 2)
    blob = json.loads(render_report(report, "json"))
    assert blob["k"] == 2
    assert blob["cells"][0]["average_at_k"] == 0.5
    assert blob["overall"]["pass_at_k"] == 1.0


def test_ledger_record_roundtrip():
    rec = record(correct=True)
    assert RunRecord.from_json_dict(rec.to_json_dict()) == rec
