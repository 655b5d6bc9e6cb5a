import json

import pytest

from problingo.errors import PackMissingError, PackSchemaError, RenderError, TokenError
from problingo.packs import (
    Finding,
    LanguagePack,
    PackQuality,
    RenderContext,
    answer_markers,
    default_packs_dir,
    delocalize_token,
    lint_pack,
    load_pack,
    localize_token,
    placeholders_in,
    render_question,
    save_pack,
)
from problingo.registry import LANGUAGES, LocalizationFlag


def test_load_gcd_de_renders_attested_string(registry):
    pack = load_pack("gcd", "de")
    question = render_question(pack, "question", RenderContext({"numbers": [688, 716]}))
    assert question == (
        "Bestimme den größten gemeinsamen Teiler (ggT) von diesen Zahlen: 688, 716. "
        "Gib nur den ggT als Antwort an."
    )


def test_number_sequence_ja_renders_attested_string():
    pack = load_pack("number_sequence", "ja")
    question = render_question(
        pack, "question", RenderContext({"terms": [8, 14, 20, 26, 32, 38, 44]})
    )
    assert question == "8、14、20、26、32、38、44、？"


def test_missing_fallback_for_unknown_language_pack(caplog, tmp_path):
    # A pack dir with only an English file behaves like a half-translated task.
    src = load_pack("gcd", "en")
    save_pack(src, tmp_path / "gcd" / "en.json")
    with caplog.at_level("WARNING"):
        pack = load_pack("gcd", "de", packs_dir=tmp_path)
    assert pack.quality is PackQuality.ENGLISH_FALLBACK
    assert pack.language == "de"
    assert pack.templates == src.templates


def test_missing_pack_fallback_disabled(tmp_path):
    with pytest.raises(PackMissingError):
        load_pack("gcd", "de", packs_dir=tmp_path, fallback=False)


def test_placeholder_mismatch_is_schema_error(registry):
    spec = registry.get("gcd")
    with pytest.raises(PackSchemaError):
        load_pack("gcd", "en", placeholders={"question": frozenset({"numbers", "extra"})})
    # and the declared set passes
    load_pack("gcd", "en", placeholders=spec.placeholders)


def test_empty_list_binding_renders_empty():
    pack = load_pack("gcd", "en")
    question = render_question(pack, "question", RenderContext({"numbers": []}))
    assert "numbers: ." in question  # no separator emitted


def test_unknown_key_and_unbound_placeholder():
    pack = load_pack("gcd", "en")
    with pytest.raises(RenderError):
        render_question(pack, "nope", RenderContext({}))
    with pytest.raises(RenderError):
        render_question(pack, "question", RenderContext({}))


def test_variant_index_maps_modulo():
    pack = load_pack("chain_sum", "en")
    assert pack.variant_count("question") == 2
    first = render_question(pack, "question", RenderContext({"expression": "1 + 1"}, 0))
    second = render_question(pack, "question", RenderContext({"expression": "1 + 1"}, 1))
    wrapped = render_question(pack, "question", RenderContext({"expression": "1 + 1"}, 2))
    assert first != second
    assert wrapped == first
    # single-variant packs absorb any index
    de = load_pack("chain_sum", "de")
    assert render_question(de, "question", RenderContext({"expression": "1 + 1"}, 7)) == \
        render_question(de, "question", RenderContext({"expression": "1 + 1"}, 0))


def test_localize_token_examples():
    it = load_pack("isomorphic_strings", "it")
    assert localize_token(it, "True") == "Vero"
    en = load_pack("isomorphic_strings", "en")
    assert localize_token(en, "True") == "True"
    with pytest.raises(TokenError):
        localize_token(en, "Maybe")


def test_delocalize_examples():
    it = load_pack("isomorphic_strings", "it")
    assert delocalize_token(it, "vero") == "True"
    assert delocalize_token(it, "Vero ") == "True"
    assert delocalize_token(it, "blorp") is None


def test_token_bijection_all_shipped_packs(registry):
    for task in ("isomorphic_strings", "syllogism"):
        spec = registry.get(task)
        for language in LANGUAGES:
            pack = load_pack(task, language)
            for canonical in spec.canonical_tokens:
                localized = localize_token(pack, canonical)
                assert delocalize_token(pack, localized) == canonical, (task, language)


def test_all_shipped_packs_validate_and_fallbacks_never_needed(registry):
    for spec in registry.specs():
        for language in LANGUAGES:
            pack = load_pack(spec.task_id, language, placeholders=spec.placeholders, fallback=False)
            assert pack.quality is not PackQuality.ENGLISH_FALLBACK


def test_save_load_roundtrip(tmp_path):
    original = load_pack("syllogism", "th")
    save_pack(original, tmp_path / "syllogism" / "th.json")
    reloaded = load_pack("syllogism", "th", packs_dir=tmp_path)
    assert reloaded == original


def test_schema_rejects_unknown_keys(tmp_path):
    raw = json.loads((default_packs_dir() / "gcd" / "en.json").read_text("utf-8"))
    raw["surprise"] = 1
    target = tmp_path / "gcd" / "en.json"
    target.parent.mkdir(parents=True)
    target.write_text(json.dumps(raw), "utf-8")
    with pytest.raises(PackSchemaError):
        load_pack("gcd", "en", packs_dir=tmp_path)


def test_schema_rejects_colliding_tokens(tmp_path):
    raw = json.loads((default_packs_dir() / "isomorphic_strings" / "en.json").read_text("utf-8"))
    raw["answer_tokens"] = {"True": "same", "False": "Same"}
    target = tmp_path / "isomorphic_strings" / "en.json"
    target.parent.mkdir(parents=True)
    target.write_text(json.dumps(raw), "utf-8")
    with pytest.raises(PackSchemaError):
        load_pack("isomorphic_strings", "en", packs_dir=tmp_path)


# ---------------------------------------------------------------------------
# Linting
# ---------------------------------------------------------------------------

def _mini_pack(language="de", variants=("Anders {n}",), tokens=None, defaulted=frozenset()):
    return LanguagePack(
        task_id="t",
        language=language,
        quality=PackQuality.MACHINE_TRANSLATED,
        conventions=load_pack("gcd", "en").conventions,
        answer_tokens=tokens or {},
        templates={"question": tuple(variants)},
        defaulted_conventions=defaulted,
    )


def _english_pack():
    return _mini_pack(language="en", variants=("Same {n}",))


def codes(findings: list[Finding]) -> set[str]:
    return {f.code for f in findings}


def test_lint_untranslated_key():
    pack = _mini_pack(variants=("Same {n}",))
    findings = lint_pack(pack, english=_english_pack())
    assert "untranslated_key" in codes(findings)


def test_lint_untranslated_exempt_for_english_data_tasks():
    pack = _mini_pack(variants=("Same {n}",))
    findings = lint_pack(pack, english=_english_pack(), english_data_task=True)
    assert "untranslated_key" not in codes(findings)


def test_lint_missing_answer_token():
    findings = lint_pack(_mini_pack(tokens={"True": "Wahr"}), required_tokens=("True", "False"))
    assert "missing_answer_token" in codes(findings)


def test_lint_placeholder_mismatch():
    findings = lint_pack(_mini_pack(), declared={"question": frozenset({"n", "m"})})
    assert "placeholder_mismatch" in codes(findings)


def test_lint_defaulted_conventions_flagged():
    findings = lint_pack(_mini_pack(defaulted=frozenset({"question_mark"})))
    assert "defaulted_convention" in codes(findings)


def test_lint_allowlist_suppresses():
    pack = _mini_pack(variants=("Same {n}",))
    findings = lint_pack(
        pack, english=_english_pack(), allowlist=frozenset({("question", "untranslated_key")})
    )
    assert "untranslated_key" not in codes(findings)


def test_shipped_packs_lint_clean(registry):
    for spec in registry.specs():
        english = load_pack(spec.task_id, "en")
        for language in LANGUAGES:
            pack = load_pack(spec.task_id, language)
            findings = lint_pack(
                pack,
                declared=spec.placeholders,
                english=english if language != "en" else None,
                required_tokens=spec.canonical_tokens,
                english_data_task=spec.localization_flag
                is LocalizationFlag.TRANSLATED_WITH_ENGLISH_DATA,
            )
            assert findings == [], (spec.task_id, language, findings)


def test_placeholders_in_ignores_meta_token():
    assert placeholders_in("{a} and {b} {?}") == frozenset({"a", "b"})


def test_answer_markers_include_english_net():
    markers = answer_markers("de")
    assert "antwort:" in markers
    assert "final answer:" in markers
    assert answer_markers("en")[0] == "final answer:"
