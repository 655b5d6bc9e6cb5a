"""Turn a raw model transcript into a Verdict.

Pipeline: extract a final-answer span, normalize it to the task's answer
kind, then delegate to the task's check function. Total on arbitrary UTF-8:
every failure mode is encoded in the Verdict, never raised.

Extraction strategies, in order of precedence:

1. ``tagged`` — content of the last ``<answer>...</answer>`` pair;
2. ``marker`` — text after the last localized final-answer marker
   (per-language marker phrases shipped alongside the packs);
3. ``last_line`` — the last non-empty line.

Answer extraction rules here are this library's own convention; other
graders may extract differently on messy transcripts.
"""

from __future__ import annotations

import json
import re
import unicodedata
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .engine import ProblemInstance
from .errors import TokenError
from .packs import LanguagePack, answer_markers, delocalize_token, load_pack, normalize_token
from .registry import AnswerKind, TaskRegistry, default_registry

_TAG_RE = re.compile(r"<answer>(.*?)</answer>", re.DOTALL | re.IGNORECASE)
_INT_RE = re.compile(r"[-+]?\d+(?:[ ,.]\d{3})*")
_DECIMAL_RE = re.compile(r"[-+]?\d+(?:[.,]\d+)?")
_GRID_ROW_RE = re.compile(r"[01]+")

NO_ANSWER_FOUND = "no_answer_found"
PARSE_FAILURE = "parse_failure"
WRONG_ANSWER = "wrong_answer"
WRONG_LANGUAGE_TOKEN = "wrong_language_token"

#: English canonical token spellings, used to spot answers given in English
#: to non-English localized-token questions.
_ENGLISH_TOKENS = ("True", "False", "Valid", "Invalid")


@dataclass(frozen=True)
class ExtractedAnswer:
    text: str
    strategy: str  # "tagged" | "marker" | "last_line"
    start: int
    end: int


@dataclass(frozen=True)
class Verdict:
    correct: bool
    extracted: ExtractedAnswer | None = None
    failure_reason: str | None = None

    def to_json_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"correct": self.correct}
        if self.extracted is not None:
            out["extracted"] = {
                "text": self.extracted.text,
                "strategy": self.extracted.strategy,
                "span": [self.extracted.start, self.extracted.end],
            }
        if self.failure_reason is not None:
            out["failure_reason"] = self.failure_reason
        return out


class NormalizeFailure(Exception):
    def __init__(self, reason: str, span: str) -> None:
        super().__init__(f"{reason}: {span!r}")
        self.reason = reason
        self.span = span


def extract_answer(
    transcript: str, language: str = "en", packs_dir: Path | None = None
) -> ExtractedAnswer | None:
    """Best-effort final-answer span; None when the transcript is blank."""
    if not transcript or not transcript.strip():
        return None

    matches = list(_TAG_RE.finditer(transcript))
    if matches:
        m = matches[-1]
        text = m.group(1).strip()
        if text:
            return ExtractedAnswer(text, "tagged", m.start(1), m.end(1))

    lowered = transcript.casefold()
    best = -1
    best_len = 0
    for marker in answer_markers(language, packs_dir):
        pos = lowered.rfind(marker)
        if pos > best or (pos == best and len(marker) > best_len):
            best = pos
            best_len = len(marker)
    if best >= 0:
        start = best + best_len
        text = transcript[start:].strip()
        if text:
            return ExtractedAnswer(text, "marker", start, len(transcript))

    lines = [
        (line, offset)
        for line, offset in _iter_lines(transcript)
        if line.strip()
    ]
    line, offset = lines[-1]
    stripped = line.strip()
    start = offset + line.index(stripped)
    return ExtractedAnswer(stripped, "last_line", start, start + len(stripped))


def _iter_lines(text: str) -> list[tuple[str, int]]:
    out = []
    offset = 0
    for line in text.splitlines(keepends=True):
        out.append((line.rstrip("\r\n"), offset))
        offset += len(line)
    return out


# ---------------------------------------------------------------------------
# Normalization per answer kind
# ---------------------------------------------------------------------------

def _strip_grouping(token: str) -> str:
    return token.replace(" ", "").replace(",", "").replace(".", "")


def _normalize_integer(text: str) -> int:
    matches = _INT_RE.findall(text)
    if not matches:
        raise NormalizeFailure(PARSE_FAILURE, text)
    token = matches[-1]
    sign = -1 if token.lstrip().startswith("-") else 1
    return sign * int(_strip_grouping(token.lstrip("+- ")))


def _normalize_decimal(text: str, pack: LanguagePack) -> float:
    matches = _DECIMAL_RE.findall(text)
    if not matches:
        raise NormalizeFailure(PARSE_FAILURE, text)
    token = matches[-1]
    point = pack.conventions.decimal_point
    if point != "." and point in token:
        token = token.replace(point, ".")
    try:
        return float(token)
    except ValueError:
        raise NormalizeFailure(PARSE_FAILURE, token) from None


_UNSEGMENTED_RANGES = (
    (0x3040, 0x30FF),  # kana
    (0x3400, 0x9FFF),  # han
    (0xAC00, 0xD7AF),  # hangul
    (0x0E00, 0x0E7F),  # thai
)


def _needs_word_boundary(token: str) -> bool:
    """Scripts written without spaces cannot use \\b-style boundaries."""
    return not any(
        lo <= ord(ch) <= hi for ch in token for lo, hi in _UNSEGMENTED_RANGES
    )


def _scan_token(haystack: str, needle: str) -> tuple[int, int] | None:
    """Last occurrence of needle as (start, end), word-bounded where the
    script allows it."""
    if _needs_word_boundary(needle):
        last = None
        for m in re.finditer(rf"(?<!\w){re.escape(needle)}(?!\w)", haystack):
            last = (m.start(), m.end())
        return last
    pos = haystack.rfind(needle)
    return (pos, pos + len(needle)) if pos >= 0 else None


def _normalize_boolean(text: str, pack: LanguagePack, language: str) -> str:
    canonical = delocalize_token(pack, text)
    if canonical is not None:
        return canonical
    # Scan for the pack's tokens inside surrounding prose. The match ending
    # last wins; on a tie the longer token wins, so a token containing the
    # other ("non valido" vs "valido") is preferred over its substring.
    lowered = normalize_token(text)
    found: tuple[int, int, str] | None = None
    for token_canonical, localized in pack.answer_tokens.items():
        hit = _scan_token(lowered, normalize_token(localized))
        if hit is None:
            continue
        start, end = hit
        if found is None or (end, end - start) > (found[0], found[1]):
            found = (end, end - start, token_canonical)
    if found is not None:
        return found[2]
    if language != "en":
        for english in _ENGLISH_TOKENS:
            if re.search(rf"\b{english.casefold()}\b", lowered):
                raise NormalizeFailure(WRONG_LANGUAGE_TOKEN, text)
    raise NormalizeFailure(PARSE_FAILURE, text)


def _normalize_list_of_lists(text: str) -> list[list[str]]:
    start = text.find("[")
    end = text.rfind("]")
    if start < 0 or end <= start:
        raise NormalizeFailure(PARSE_FAILURE, text)
    block = text[start : end + 1]
    try:
        parsed = json.loads(block)
    except json.JSONDecodeError:
        parsed = None
    if isinstance(parsed, list) and all(isinstance(g, list) for g in parsed):
        return [[str(w).strip().casefold() for w in g] for g in parsed]
    # Permissive fallback: word tokens inside each inner bracket pair.
    inner = re.findall(r"\[([^\[\]]*)\]", block)
    if not inner:
        raise NormalizeFailure(PARSE_FAILURE, text)
    groups = []
    for chunk in inner:
        words = re.findall(r"[A-Za-z]+", chunk)
        if words:
            groups.append([w.casefold() for w in words])
    if not groups:
        raise NormalizeFailure(PARSE_FAILURE, text)
    return groups


def _normalize_grid(text: str) -> list[str]:
    rows = _GRID_ROW_RE.findall(text)
    if not rows:
        raise NormalizeFailure(PARSE_FAILURE, text)
    if all(len(r) == 1 for r in rows):
        # Cells listed one by one; reshape when they form a square board.
        n = int(len(rows) ** 0.5)
        if n * n != len(rows):
            raise NormalizeFailure(PARSE_FAILURE, text)
        rows = ["".join(rows[i * n : (i + 1) * n]) for i in range(n)]
    if len({len(r) for r in rows}) != 1:
        raise NormalizeFailure(PARSE_FAILURE, text)
    return rows


def normalize(
    answer_kind: AnswerKind, text: str, pack: LanguagePack, language: str = "en"
) -> Any:
    """Parse an extracted span into the typed value a checker expects.

    Raises NormalizeFailure with a reason on unusable input.
    """
    text = unicodedata.normalize("NFC", text).strip()
    if not text:
        raise NormalizeFailure(PARSE_FAILURE, text)
    if answer_kind is AnswerKind.INTEGER:
        return _normalize_integer(text)
    if answer_kind is AnswerKind.DECIMAL:
        return _normalize_decimal(text, pack)
    if answer_kind is AnswerKind.LOCALIZED_BOOLEAN:
        return _normalize_boolean(text, pack, language)
    if answer_kind is AnswerKind.LIST_OF_LISTS:
        return _normalize_list_of_lists(text)
    if answer_kind is AnswerKind.GRID:
        return _normalize_grid(text)
    return text.casefold()  # TEXT


def verify(
    instance: ProblemInstance,
    transcript: str,
    *,
    registry: TaskRegistry | None = None,
    packs_dir: Path | None = None,
    lenient_language: bool = False,
) -> Verdict:
    """Extract, normalize, and check one transcript against one instance.

    ``lenient_language`` accepts English tokens for localized answers in any
    language; it is off by default and excluded from acceptance runs.
    """
    reg = registry or default_registry()
    spec = reg.get(instance.task_id)
    pack = load_pack(
        instance.task_id, instance.language, packs_dir=packs_dir, fallback=True
    )

    extracted = extract_answer(transcript or "", instance.language, packs_dir)
    if extracted is None:
        return Verdict(correct=False, failure_reason=NO_ANSWER_FOUND)

    try:
        value = normalize(spec.answer_kind, extracted.text, pack, instance.language)
    except NormalizeFailure as failure:
        if failure.reason == WRONG_LANGUAGE_TOKEN and lenient_language:
            value = _english_token_value(extracted.text)
            if value is None:
                return Verdict(False, extracted, PARSE_FAILURE)
        else:
            return Verdict(False, extracted, failure.reason)

    try:
        correct = bool(spec.check(instance.payload, value))
    except Exception:
        return Verdict(False, extracted, PARSE_FAILURE)
    if correct:
        return Verdict(True, extracted)
    return Verdict(False, extracted, WRONG_ANSWER)


def _english_token_value(text: str) -> str | None:
    lowered = normalize_token(text)
    for english in _ENGLISH_TOKENS:
        if re.search(rf"\b{english.casefold()}\b", lowered):
            return english
    return None


def localized_answer_text(
    instance: ProblemInstance,
    *,
    registry: TaskRegistry | None = None,
    packs_dir: Path | None = None,
) -> str:
    """The canonical answer as it should be written in the instance's
    language (identity for everything except localized tokens)."""
    reg = registry or default_registry()
    spec = reg.get(instance.task_id)
    if spec.answer_kind is AnswerKind.LOCALIZED_BOOLEAN:
        pack = load_pack(
            instance.task_id, instance.language, packs_dir=packs_dir, fallback=True
        )
        try:
            return pack.answer_tokens[instance.answer]
        except KeyError:
            raise TokenError(
                f"pack {instance.task_id}/{instance.language} lacks token {instance.answer!r}"
            ) from None
    if spec.answer_kind is AnswerKind.LIST_OF_LISTS:
        return json.dumps(instance.answer)
    return str(instance.answer)
