"""Language-consistency heuristic: did the model answer in the query's
language?

Non-Latin-script languages are judged by script ratio: after removing quoted
spans (task data is quoted in prompts and often echoed in answers), digits,
punctuation, and symbols, at least ``threshold`` of the remaining letters
must belong to the language's script set. A transcript with no letters at
all (e.g. a bare number) carries no language evidence and counts as
consistent.

Latin-script languages are judged by a stopword-hit-rate classifier over the
shipped per-language stopword table: the transcript is consistent iff the
expected language wins the hit-rate comparison. This is deliberately cheap
and deterministic; confusion rates between close languages are measured by
the test suite, not asserted.
"""

from __future__ import annotations

import json
import re
import unicodedata
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from ..packs import default_packs_dir
from ..registry import LANGUAGES

DEFAULT_THRESHOLD = 0.5

_QUOTE_PAIRS = (
    ("「", "」"),  # 「 」
    ("『", "』"),  # 『 』
    ("«", "»"),  # « »
    ("“", "”"),  # “ ”
    ('"', '"'),
)

_SCRIPT_RANGES: dict[str, tuple[tuple[int, int], ...]] = {
    "latin": ((0x0041, 0x005A), (0x0061, 0x007A), (0x00C0, 0x024F)),
    "han": ((0x3400, 0x4DBF), (0x4E00, 0x9FFF), (0xF900, 0xFAFF)),
    "kana": ((0x3040, 0x309F), (0x30A0, 0x30FF), (0x31F0, 0x31FF)),
    "hangul": ((0x1100, 0x11FF), (0x3130, 0x318F), (0xAC00, 0xD7AF)),
    "thai": ((0x0E00, 0x0E7F),),
    "bengali": ((0x0980, 0x09FF),),
    "telugu": ((0x0C00, 0x0C7F),),
    "cyrillic": ((0x0400, 0x04FF), (0x0500, 0x052F)),
}

#: Script sets accepted for each non-Latin-script language.
NON_LATIN_SCRIPTS: dict[str, tuple[str, ...]] = {
    "zh": ("han",),
    "ja": ("kana", "han"),
    "ko": ("hangul",),
    "th": ("thai",),
    "bn": ("bengali",),
    "te": ("telugu",),
    "ru": ("cyrillic",),
}

LATIN_LANGUAGES: tuple[str, ...] = tuple(
    lang for lang in LANGUAGES if lang not in NON_LATIN_SCRIPTS
)

_TOKEN_RE = re.compile(r"[^\W\d_]+", re.UNICODE)


def strip_quoted_spans(text: str) -> str:
    """Remove quoted spans (paired quotes only); quoted content is data, not
    prose, and must not sway the script ratio."""
    for open_q, close_q in _QUOTE_PAIRS:
        if open_q == close_q:
            parts = text.split(open_q)
            if len(parts) >= 3:
                # Drop content between quote pairs; keep an unpaired trailer.
                kept = [parts[0]]
                i = 1
                while i < len(parts):
                    if i + 1 < len(parts):
                        kept.append(parts[i + 1])
                        i += 2
                    else:
                        kept.append(parts[i])
                        i += 1
                text = " ".join(kept)
        else:
            pattern = re.compile(
                re.escape(open_q) + r"[^" + re.escape(open_q + close_q) + r"]*" + re.escape(close_q)
            )
            text = pattern.sub(" ", text)
    return text


def _letters(text: str) -> list[str]:
    return [ch for ch in text if unicodedata.category(ch).startswith("L")]


def _in_script(ch: str, script: str) -> bool:
    code = ord(ch)
    return any(lo <= code <= hi for lo, hi in _SCRIPT_RANGES[script])


@lru_cache(maxsize=None)
def _stopwords(packs_dir: str) -> dict[str, frozenset[str]]:
    path = Path(packs_dir) / "stopwords.json"
    with open(path, encoding="utf-8") as fh:
        raw = json.load(fh)
    return {lang: frozenset(words) for lang, words in raw.items()}


@dataclass(frozen=True)
class ConsistencyJudgment:
    consistent: bool
    expected: str
    detail: str


def classify_latin(text: str, packs_dir: Path | None = None) -> str | None:
    """Best-guess Latin-script language by stopword hit rate; None without
    evidence."""
    directory = str(packs_dir if packs_dir is not None else default_packs_dir())
    tables = _stopwords(directory)
    tokens = [t.casefold() for t in _TOKEN_RE.findall(text)]
    if not tokens:
        return None
    best_lang = None
    best_hits = 0
    for lang in LATIN_LANGUAGES:
        hits = sum(1 for t in tokens if t in tables.get(lang, frozenset()))
        if hits > best_hits:
            best_hits = hits
            best_lang = lang
    return best_lang


def language_consistency(
    transcript: str,
    expected_language: str,
    *,
    threshold: float = DEFAULT_THRESHOLD,
    packs_dir: Path | None = None,
) -> bool:
    return judge(transcript, expected_language, threshold=threshold, packs_dir=packs_dir).consistent


def judge(
    transcript: str,
    expected_language: str,
    *,
    threshold: float = DEFAULT_THRESHOLD,
    packs_dir: Path | None = None,
) -> ConsistencyJudgment:
    stripped = strip_quoted_spans(transcript or "")
    letters = _letters(stripped)
    if not letters:
        return ConsistencyJudgment(True, expected_language, "no letters; no evidence")

    if expected_language in NON_LATIN_SCRIPTS:
        scripts = NON_LATIN_SCRIPTS[expected_language]
        matched = sum(1 for ch in letters if any(_in_script(ch, s) for s in scripts))
        ratio = matched / len(letters)
        return ConsistencyJudgment(
            ratio >= threshold,
            expected_language,
            f"script ratio {ratio:.3f} (threshold {threshold})",
        )

    # Latin-script language: most letters must be Latin, and the stopword
    # classifier must pick the expected language.
    latin = sum(1 for ch in letters if _in_script(ch, "latin"))
    if latin / len(letters) < threshold:
        return ConsistencyJudgment(
            False, expected_language, f"only {latin}/{len(letters)} letters are Latin"
        )
    predicted = classify_latin(stripped, packs_dir)
    if predicted is None:
        return ConsistencyJudgment(False, expected_language, "no stopword evidence")
    return ConsistencyJudgment(
        predicted == expected_language,
        expected_language,
        f"stopword classifier predicts {predicted}",
    )
