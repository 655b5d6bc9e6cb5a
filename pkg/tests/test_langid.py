from problingo.engine import GenerationRequest, generate_instance
from problingo.harness.langid import (
    LATIN_LANGUAGES,
    NON_LATIN_SCRIPTS,
    classify_latin,
    judge,
    language_consistency,
    strip_quoted_spans,
)


def test_pure_japanese_is_consistent():
    assert language_consistency("これは完全に日本語の文章です。答えは五十です。", "ja")


def test_english_reasoning_for_german_query_is_inconsistent():
    text = "Let me think about this German question. The result should be forty-two."
    assert not language_consistency(text, "de")


def test_german_reasoning_is_consistent():
    assert language_consistency("Die Antwort auf diese Frage ist also zweiundvierzig.", "de")


def test_english_reasoning_for_japanese_query_is_inconsistent():
    text = "The sequence increases by six each time, so the next value is 50."
    assert not language_consistency(text, "ja")


def test_numeric_only_transcript_counts_as_consistent():
    # No letters at all: no language evidence either way.
    assert language_consistency("50", "ja")
    assert language_consistency("0110 0110", "zh")
    assert language_consistency("", "th")


def test_quoted_spans_are_ignored():
    text = 'テキスト「it into a watering place」の中に文字「w」は何回現れるか？'
    assert language_consistency(text, "ja")
    bare = strip_quoted_spans(text)
    assert "watering" not in bare


def test_strip_handles_straight_quotes_and_unpaired():
    assert "abc" not in strip_quoted_spans('say "abc" end')
    assert strip_quoted_spans("don't") == "don't"


def test_mixed_script_below_threshold_fails():
    text = "This is mostly English prose with a tiny 答え at the end."
    assert not language_consistency(text, "zh")


def test_cyrillic_for_russian():
    assert language_consistency("Ответ на этот вопрос равен пятидесяти.", "ru")
    assert not language_consistency("The answer is fifty.", "ru")


def test_classify_latin_picks_expected():
    assert classify_latin("la respuesta es cincuenta y dos para este problema") == "es"
    assert classify_latin("die antwort auf die folgende frage ist zweiundvierzig") == "de"
    assert classify_latin("jibu la swali hili ni hamsini na mbili kwa jumla") == "sw"
    assert classify_latin("12345 67890") is None


def test_generated_questions_self_identify_non_latin(registry):
    # Acceptance threshold lives in test_acceptance; this is a quick gate.
    for language in NON_LATIN_SCRIPTS:
        hits = 0
        total = 0
        for task in registry.task_ids():
            for index in range(3):
                inst = generate_instance(
                    GenerationRequest(task, language, 77, index), registry=registry
                )
                hits += judge(inst.question, language).consistent
                total += 1
        assert hits / total >= 0.95, language


def test_latin_confusion_is_measured_not_asserted(registry, capsys):
    rates = {}
    for language in LATIN_LANGUAGES:
        hits = 0
        total = 0
        for task in registry.task_ids():
            for index in range(3):
                inst = generate_instance(
                    GenerationRequest(task, language, 78, index), registry=registry
                )
                hits += judge(inst.question, language).consistent
                total += 1
        rates[language] = hits / total
    print("latin self-identification rates:", rates)
    assert set(rates) == set(LATIN_LANGUAGES)
