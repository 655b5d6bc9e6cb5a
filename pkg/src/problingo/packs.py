"""Language packs: per-(task, language) templates, tokens, and conventions.

A pack is one UTF-8 JSON file::

    {
      "schema_version": 1,
      "task_id": "gcd",
      "language": "de",
      "quality": "machine_translated",
      "conventions": {"list_separator": ", ", "question_mark": "?",
                       "sentence_terminator": ".", "decimal_point": ",",
                       "placeholder_wrapping": "none"},
      "answer_tokens": {"True": "Wahr", "False": "Falsch"},
      "templates": {"question": ["... {numbers} ..."]}
    }

Placeholders are ``{name}``. The meta-token ``{?}`` renders as the pack's
question mark, so one template serves both "?" and "？" punctuation.
List-valued bindings are joined with the pack's list separator. Numbers are
always rendered as ASCII digits; only separators and punctuation localize.
"""

from __future__ import annotations

import enum
import json
import logging
import re
import unicodedata
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any, Iterable, Mapping

from .errors import PackMissingError, PackSchemaError, RenderError, TokenError

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
ENGLISH = "en"

_PLACEHOLDER_RE = re.compile(r"\{([a-z_][a-z0-9_]*|\?)\}")

_CONVENTION_DEFAULTS = {
    "list_separator": ", ",
    "question_mark": "?",
    "sentence_terminator": ".",
    "decimal_point": ".",
    "placeholder_wrapping": "none",
}


class PackQuality(str, enum.Enum):
    NATIVE_VALIDATED = "native_validated"
    MACHINE_TRANSLATED = "machine_translated"
    ENGLISH_FALLBACK = "english_fallback"


@dataclass(frozen=True)
class Conventions:
    list_separator: str = ", "
    question_mark: str = "?"
    sentence_terminator: str = "."
    decimal_point: str = "."
    placeholder_wrapping: str = "none"

    def __post_init__(self) -> None:
        for name in ("list_separator", "question_mark", "sentence_terminator", "decimal_point"):
            if not getattr(self, name):
                raise PackSchemaError(f"convention {name!r} must be non-empty")


@dataclass(frozen=True)
class LanguagePack:
    task_id: str
    language: str
    quality: PackQuality
    conventions: Conventions
    answer_tokens: Mapping[str, str]
    templates: Mapping[str, tuple[str, ...]]
    #: convention fields absent from the file and filled with defaults
    defaulted_conventions: frozenset[str] = frozenset()

    def variant_count(self, key: str) -> int:
        return len(self.templates[key])


@dataclass(frozen=True)
class RenderContext:
    """Bindings plus the single variant index drawn from the instance Rng.

    The index is drawn once, language-independently, and mapped modulo each
    pack's variant count, so rendering never perturbs payload parallelism.
    """

    bindings: Mapping[str, Any]
    variant_index: int = 0


def placeholders_in(template: str) -> frozenset[str]:
    """Placeholder names used by a template, excluding the {?} meta-token."""
    return frozenset(m for m in _PLACEHOLDER_RE.findall(template) if m != "?")


def normalize_token(text: str) -> str:
    """NFC-normalized, casefolded, trimmed comparison key for answer tokens."""
    return unicodedata.normalize("NFC", text).strip().casefold()


# ---------------------------------------------------------------------------
# Loading and saving
# ---------------------------------------------------------------------------

def default_packs_dir() -> Path:
    return Path(str(resources.files("problingo").joinpath("locales")))


_pack_cache: dict[tuple[str, str, str], LanguagePack | None] = {}


def clear_pack_cache() -> None:
    _pack_cache.clear()


def _parse_pack(raw: Mapping[str, Any], source: str) -> LanguagePack:
    required = {"schema_version", "task_id", "language", "quality", "conventions",
                "answer_tokens", "templates"}
    missing = required - set(raw)
    if missing:
        raise PackSchemaError(f"{source}: missing keys {sorted(missing)}")
    extra = set(raw) - required
    if extra:
        raise PackSchemaError(f"{source}: unknown keys {sorted(extra)}")
    if raw["schema_version"] != SCHEMA_VERSION:
        raise PackSchemaError(f"{source}: unsupported schema_version {raw['schema_version']!r}")
    try:
        quality = PackQuality(raw["quality"])
    except ValueError:
        raise PackSchemaError(f"{source}: bad quality {raw['quality']!r}") from None

    conv_raw = raw["conventions"]
    if not isinstance(conv_raw, dict):
        raise PackSchemaError(f"{source}: conventions must be an object")
    unknown_conv = set(conv_raw) - set(_CONVENTION_DEFAULTS)
    if unknown_conv:
        raise PackSchemaError(f"{source}: unknown convention fields {sorted(unknown_conv)}")
    defaulted = frozenset(set(_CONVENTION_DEFAULTS) - set(conv_raw))
    conventions = Conventions(**{**_CONVENTION_DEFAULTS, **conv_raw})

    tokens = raw["answer_tokens"]
    if not isinstance(tokens, dict) or not all(
        isinstance(k, str) and isinstance(v, str) and v for k, v in tokens.items()
    ):
        raise PackSchemaError(f"{source}: answer_tokens must map strings to non-empty strings")
    keys = [normalize_token(v) for v in tokens.values()]
    if len(set(keys)) != len(keys):
        raise PackSchemaError(f"{source}: answer_tokens values collide after normalization")

    templates_raw = raw["templates"]
    if not isinstance(templates_raw, dict):
        raise PackSchemaError(f"{source}: templates must be an object")
    templates: dict[str, tuple[str, ...]] = {}
    for key, variants in templates_raw.items():
        if not isinstance(variants, list) or not variants or not all(
            isinstance(v, str) and v for v in variants
        ):
            raise PackSchemaError(f"{source}: templates[{key!r}] must be a non-empty list of non-empty strings")
        templates[key] = tuple(variants)

    return LanguagePack(
        task_id=raw["task_id"],
        language=raw["language"],
        quality=quality,
        conventions=conventions,
        answer_tokens=dict(tokens),
        templates=templates,
        defaulted_conventions=defaulted,
    )


def _validate_placeholders(pack: LanguagePack, declared: Mapping[str, frozenset[str]]) -> None:
    for key, expected in declared.items():
        if key not in pack.templates:
            raise PackSchemaError(
                f"pack {pack.task_id}/{pack.language}: missing template key {key!r}"
            )
        for variant in pack.templates[key]:
            found = placeholders_in(variant)
            if found != expected:
                raise PackSchemaError(
                    f"pack {pack.task_id}/{pack.language} key {key!r}: placeholders "
                    f"{sorted(found)} != declared {sorted(expected)}"
                )


def _read_pack_file(packs_dir: Path, task_id: str, language: str) -> LanguagePack | None:
    cache_key = (str(packs_dir), task_id, language)
    if cache_key in _pack_cache:
        return _pack_cache[cache_key]
    path = packs_dir / task_id / f"{language}.json"
    if not path.is_file():
        _pack_cache[cache_key] = None
        return None
    with open(path, encoding="utf-8") as fh:
        raw = json.load(fh)
    pack = _parse_pack(raw, str(path))
    if pack.task_id != task_id or pack.language != language:
        raise PackSchemaError(
            f"{path}: pack identifies as {pack.task_id}/{pack.language}, "
            f"expected {task_id}/{language}"
        )
    _pack_cache[cache_key] = pack
    return pack


def load_pack(
    task_id: str,
    language: str,
    *,
    packs_dir: Path | None = None,
    fallback: bool = True,
    placeholders: Mapping[str, frozenset[str]] | None = None,
) -> LanguagePack:
    """Load and validate the pack for (task, language).

    A missing non-English pack falls back to the English one (re-labelled
    ``english_fallback``) when ``fallback`` is true; otherwise it is an
    error. A missing English pack is always an error.
    """
    directory = packs_dir if packs_dir is not None else default_packs_dir()
    pack = _read_pack_file(directory, task_id, language)
    if pack is None:
        if language == ENGLISH or not fallback:
            raise PackMissingError(f"no pack for task {task_id!r} language {language!r}")
        english = _read_pack_file(directory, task_id, ENGLISH)
        if english is None:
            raise PackMissingError(f"no pack for task {task_id!r} (tried {language!r} and en)")
        log.warning("no %s pack for task %r; falling back to English", language, task_id)
        pack = LanguagePack(
            task_id=task_id,
            language=language,
            quality=PackQuality.ENGLISH_FALLBACK,
            conventions=english.conventions,
            answer_tokens=english.answer_tokens,
            templates=english.templates,
            defaulted_conventions=english.defaulted_conventions,
        )
    if placeholders is not None:
        _validate_placeholders(pack, placeholders)
    return pack


def save_pack(pack: LanguagePack, path: Path) -> None:
    """Write a pack back to disk in the canonical file layout."""
    payload = {
        "schema_version": SCHEMA_VERSION,
        "task_id": pack.task_id,
        "language": pack.language,
        "quality": pack.quality.value,
        "conventions": {
            "list_separator": pack.conventions.list_separator,
            "question_mark": pack.conventions.question_mark,
            "sentence_terminator": pack.conventions.sentence_terminator,
            "decimal_point": pack.conventions.decimal_point,
            "placeholder_wrapping": pack.conventions.placeholder_wrapping,
        },
        "answer_tokens": dict(pack.answer_tokens),
        "templates": {k: list(v) for k, v in pack.templates.items()},
    }
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, ensure_ascii=False, indent=2, sort_keys=True)
        fh.write("\n")


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def _render_value(value: Any, conventions: Conventions) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, bool):
        return "True" if value else "False"
    if isinstance(value, (int, float)):
        return str(value)
    if isinstance(value, (list, tuple)):
        return conventions.list_separator.join(_render_value(v, conventions) for v in value)
    raise RenderError(f"cannot render value of type {type(value).__name__}")


def render_question(pack: LanguagePack, key: str, ctx: RenderContext) -> str:
    """Substitute bindings into one variant of ``templates[key]``."""
    if key not in pack.templates:
        raise RenderError(f"pack {pack.task_id}/{pack.language}: unknown template key {key!r}")
    variants = pack.templates[key]
    template = variants[ctx.variant_index % len(variants)]

    def substitute(match: re.Match[str]) -> str:
        name = match.group(1)
        if name == "?":
            return pack.conventions.question_mark
        if name not in ctx.bindings:
            raise RenderError(
                f"pack {pack.task_id}/{pack.language} key {key!r}: unbound placeholder {name!r}"
            )
        return _render_value(ctx.bindings[name], pack.conventions)

    return _PLACEHOLDER_RE.sub(substitute, template)


# ---------------------------------------------------------------------------
# Answer tokens
# ---------------------------------------------------------------------------

def localize_token(pack: LanguagePack, canonical: str) -> str:
    try:
        return pack.answer_tokens[canonical]
    except KeyError:
        raise TokenError(
            f"pack {pack.task_id}/{pack.language} has no token for {canonical!r}"
        ) from None


def delocalize_token(pack: LanguagePack, localized: str) -> str | None:
    """Inverse of localize_token; None when nothing matches."""
    needle = normalize_token(localized)
    for canonical, token in pack.answer_tokens.items():
        if normalize_token(token) == needle:
            return canonical
    return None


# ---------------------------------------------------------------------------
# Linting
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Finding:
    code: str
    severity: str  # "error" | "warning"
    key: str | None
    message: str


def lint_pack(
    pack: LanguagePack,
    *,
    declared: Mapping[str, frozenset[str]] | None = None,
    english: LanguagePack | None = None,
    required_tokens: Iterable[str] = (),
    english_data_task: bool = False,
    allowlist: frozenset[tuple[str, str]] = frozenset(),
) -> list[Finding]:
    """Mechanical pack checks.

    ``allowlist`` holds (key, code) pairs to suppress, mirroring the shipped
    allowlist for known-acceptable machine translations. ``english_data_task``
    exempts the pack from untranslated-key findings (the embedded data is
    English by design).
    """
    findings: list[Finding] = []

    def add(code: str, severity: str, key: str | None, message: str) -> None:
        if (key or "", code) in allowlist:
            return
        findings.append(Finding(code, severity, key, message))

    for key, variants in pack.templates.items():
        for i, variant in enumerate(variants):
            if not variant.strip():
                add("empty_variant", "error", key, f"variant {i} of {key!r} is empty")

    if declared is not None:
        for key, expected in declared.items():
            if key not in pack.templates:
                add("placeholder_mismatch", "error", key, f"missing template key {key!r}")
                continue
            for i, variant in enumerate(pack.templates[key]):
                found = placeholders_in(variant)
                if found != expected:
                    add(
                        "placeholder_mismatch", "error", key,
                        f"variant {i} of {key!r} uses {sorted(found)}, declared {sorted(expected)}",
                    )

    if english is not None and pack.language != ENGLISH and not english_data_task:
        for key, variants in pack.templates.items():
            en_variants = english.templates.get(key, ())
            for variant in variants:
                if variant in en_variants:
                    add(
                        "untranslated_key", "warning", key,
                        f"{key!r} variant is byte-identical to the English pack",
                    )
                    break

    for token in required_tokens:
        if token not in pack.answer_tokens:
            add("missing_answer_token", "error", None, f"no localized token for {token!r}")

    for name in sorted(pack.defaulted_conventions):
        if name == "placeholder_wrapping":
            continue  # constant by design, not worth a finding
        add(
            "defaulted_convention", "warning", None,
            f"convention {name!r} absent from file; default used silently",
        )

    return findings


# ---------------------------------------------------------------------------
# Language-level shared data (final-answer markers)
# ---------------------------------------------------------------------------

def _load_locale_json(name: str, packs_dir: Path | None = None) -> dict[str, Any]:
    directory = packs_dir if packs_dir is not None else default_packs_dir()
    path = directory / name
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


_markers_cache: dict[str, dict[str, list[str]]] = {}


def answer_markers(language: str, packs_dir: Path | None = None) -> list[str]:
    """Final-answer marker phrases for one language (lowercased), most
    specific first; English markers are appended as a universal net."""
    directory = str(packs_dir if packs_dir is not None else default_packs_dir())
    if directory not in _markers_cache:
        _markers_cache[directory] = _load_locale_json("answer_markers.json", Path(directory))
    table = _markers_cache[directory]
    markers = list(table.get(language, ()))
    if language != ENGLISH:
        markers += [m for m in table.get(ENGLISH, ()) if m not in markers]
    return markers
