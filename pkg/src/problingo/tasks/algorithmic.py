"""Algorithmic tasks: string and matrix manipulation.

Four of these (spell_backward, letter_counting, group_anagrams,
word_sorting) draw their data from the shipped English corpus; their prompts
mark the data as English in every language, and the data bytes are identical
across languages.
"""

from __future__ import annotations

import json
import re
from typing import Any, Mapping

from .. import corpus
from ..curriculum import Curriculum, CurriculumParam
from ..packs import LanguagePack, localize_token
from ..registry import AnswerKind, Category, LocalizationFlag, TaskSpec
from ..rng import Rng

_ALPHABET = "abcdefghijklmnopqrstuvwxyz"


# ---------------------------------------------------------------------------
# isomorphic_strings
# ---------------------------------------------------------------------------

def is_isomorphic(s: str, t: str) -> bool:
    """Consistent bijective character mapping between two equal-length strings."""
    if len(s) != len(t):
        return False
    forward: dict[str, str] = {}
    backward: dict[str, str] = {}
    for a, b in zip(s, t):
        if forward.setdefault(a, b) != b or backward.setdefault(b, a) != a:
            return False
    return True


def gen_isomorphic_strings(rng: Rng, params: Mapping[str, Any]) -> tuple[dict[str, Any], str]:
    length = params["length"]
    s = "".join(rng.choice(_ALPHABET) for _ in range(length))
    make_positive = rng.random() < 0.5
    distinct = list(dict.fromkeys(s))  # first-appearance order
    if make_positive:
        targets = rng.sample(_ALPHABET, len(distinct))
        mapping = dict(zip(distinct, targets))
        t = "".join(mapping[ch] for ch in s)
    elif len(distinct) >= 2:
        # Map two different source characters onto one target: breaks the
        # bijection in the t -> s direction.
        targets = rng.sample(_ALPHABET, len(distinct))
        mapping = dict(zip(distinct, targets))
        mapping[distinct[1]] = mapping[distinct[0]]
        t = "".join(mapping[ch] for ch in s)
    else:
        # Single repeated character: send it to two different targets.
        a, b = rng.sample(_ALPHABET, 2)
        t = a * (length - 1) + b
    answer = "True" if is_isomorphic(s, t) else "False"
    return {"s": s, "t": t}, answer


def check_isomorphic_strings(payload: Mapping[str, Any], candidate: Any) -> bool:
    expected = "True" if is_isomorphic(payload["s"], payload["t"]) else "False"
    return candidate == expected


def bind_isomorphic_strings(payload: Mapping[str, Any], pack: LanguagePack) -> dict[str, Any]:
    return {
        "s1": payload["s"],
        "s2": payload["t"],
        "true_token": localize_token(pack, "True"),
        "false_token": localize_token(pack, "False"),
    }


ISOMORPHIC_STRINGS = TaskSpec(
    task_id="isomorphic_strings",
    category=Category.ALGORITHMIC,
    localization_flag=LocalizationFlag.FULLY_TRANSLATED,
    answer_kind=AnswerKind.LOCALIZED_BOOLEAN,
    curriculum=Curriculum((
        CurriculumParam("length", (2, 6, 12), default_index=1),
    )),
    generate=gen_isomorphic_strings,
    check=check_isomorphic_strings,
    bind=bind_isomorphic_strings,
    placeholders={"question": frozenset({"s1", "s2", "true_token", "false_token"})},
    complexity_proxy=lambda p: len(p["s"]),
    canonical_tokens=("True", "False"),
)


# ---------------------------------------------------------------------------
# spell_backward
# ---------------------------------------------------------------------------

def gen_spell_backward(rng: Rng, params: Mapping[str, Any]) -> tuple[dict[str, Any], str]:
    lo, hi = params["word_length"]
    word = rng.choice(corpus.words_with_length(lo, hi))
    return {"word": word}, word[::-1]


def check_spell_backward(payload: Mapping[str, Any], candidate: Any) -> bool:
    return candidate == payload["word"][::-1]


SPELL_BACKWARD = TaskSpec(
    task_id="spell_backward",
    category=Category.ALGORITHMIC,
    localization_flag=LocalizationFlag.TRANSLATED_WITH_ENGLISH_DATA,
    answer_kind=AnswerKind.TEXT,
    curriculum=Curriculum((
        CurriculumParam("word_length", ((3, 5), (6, 8), (9, 12)), default_index=1),
    )),
    generate=gen_spell_backward,
    check=check_spell_backward,
    placeholders={"question": frozenset({"word"})},
    complexity_proxy=lambda p: len(p["word"]),
    data_files=(corpus.WORDS_FILE,),
)


# ---------------------------------------------------------------------------
# letter_counting
# ---------------------------------------------------------------------------

def gen_letter_counting(rng: Rng, params: Mapping[str, Any]) -> tuple[dict[str, Any], int]:
    span_words = params["span_words"]
    sentence = rng.choice(corpus.sentences_with_min_words(span_words))
    start = rng.randint(0, len(sentence) - span_words)
    text = " ".join(sentence[start : start + span_words])
    letters = sorted(set(ch for ch in text if ch.isalpha()))
    letter = rng.choice(letters)
    return {"text": text, "letter": letter}, text.count(letter)


def check_letter_counting(payload: Mapping[str, Any], candidate: Any) -> bool:
    return candidate == payload["text"].count(payload["letter"])


LETTER_COUNTING = TaskSpec(
    task_id="letter_counting",
    category=Category.ALGORITHMIC,
    localization_flag=LocalizationFlag.TRANSLATED_WITH_ENGLISH_DATA,
    answer_kind=AnswerKind.INTEGER,
    curriculum=Curriculum((
        CurriculumParam("span_words", (3, 6, 10), default_index=1),
    )),
    generate=gen_letter_counting,
    check=check_letter_counting,
    placeholders={"question": frozenset({"text", "letter"})},
    complexity_proxy=lambda p: len(p["text"].split()),
    data_files=(corpus.SENTENCES_FILE,),
)


# ---------------------------------------------------------------------------
# group_anagrams
# ---------------------------------------------------------------------------

def anagram_answer(words: list[str]) -> list[list[str]]:
    """Group by letter signature; inner lists sorted, groups sorted by head."""
    groups: dict[str, list[str]] = {}
    for word in words:
        groups.setdefault("".join(sorted(word)), []).append(word)
    return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])


def gen_group_anagrams(rng: Rng, params: Mapping[str, Any]) -> tuple[dict[str, Any], list[list[str]]]:
    families = rng.sample(corpus.anagram_groups(), params["num_groups"])
    words = [word for family in families for word in family]
    rng.shuffle(words)
    return {"words": words}, anagram_answer(words)


def check_group_anagrams(payload: Mapping[str, Any], candidate: Any) -> bool:
    if not isinstance(candidate, list) or not all(isinstance(g, list) for g in candidate):
        return False
    expected = anagram_answer(payload["words"])
    return {frozenset(g) for g in candidate} == {frozenset(g) for g in expected}


def bind_group_anagrams(payload: Mapping[str, Any], pack: LanguagePack) -> dict[str, Any]:
    return {"words": json.dumps(payload["words"])}


GROUP_ANAGRAMS = TaskSpec(
    task_id="group_anagrams",
    category=Category.ALGORITHMIC,
    localization_flag=LocalizationFlag.TRANSLATED_WITH_ENGLISH_DATA,
    answer_kind=AnswerKind.LIST_OF_LISTS,
    curriculum=Curriculum((
        CurriculumParam("num_groups", (2, 3, 5), default_index=0),
    )),
    generate=gen_group_anagrams,
    check=check_group_anagrams,
    bind=bind_group_anagrams,
    placeholders={"question": frozenset({"words"})},
    complexity_proxy=lambda p: len(p["words"]),
    data_files=(corpus.WORDS_FILE,),
)


# ---------------------------------------------------------------------------
# word_sorting
# ---------------------------------------------------------------------------

def gen_word_sorting(rng: Rng, params: Mapping[str, Any]) -> tuple[dict[str, Any], str]:
    words = rng.sample(corpus.words_with_length(3, 10), params["num_words"])
    return {"words": words}, ", ".join(sorted(words, key=str.casefold))


def bind_word_sorting(payload: Mapping[str, Any], pack: LanguagePack) -> dict[str, Any]:
    return {"words": json.dumps(payload["words"])}


def check_word_sorting(payload: Mapping[str, Any], candidate: Any) -> bool:
    tokens = re.findall(r"[a-z]+", str(candidate).casefold())
    return tokens == sorted(payload["words"], key=str.casefold)


WORD_SORTING = TaskSpec(
    task_id="word_sorting",
    category=Category.ALGORITHMIC,
    localization_flag=LocalizationFlag.TRANSLATED_WITH_ENGLISH_DATA,
    answer_kind=AnswerKind.TEXT,
    curriculum=Curriculum((
        CurriculumParam("num_words", (4, 8, 14), default_index=1),
    )),
    generate=gen_word_sorting,
    check=check_word_sorting,
    bind=bind_word_sorting,
    placeholders={"question": frozenset({"words"})},
    complexity_proxy=lambda p: len(p["words"]),
    data_files=(corpus.WORDS_FILE,),
)


# ---------------------------------------------------------------------------
# spiral_matrix
# ---------------------------------------------------------------------------

def spiral_order(matrix: list[list[int]]) -> list[int]:
    """Clockwise spiral from the top-left corner, layer by layer."""
    out: list[int] = []
    top, bottom = 0, len(matrix) - 1
    left, right = 0, len(matrix[0]) - 1
    while top <= bottom and left <= right:
        out.extend(matrix[top][c] for c in range(left, right + 1))
        out.extend(matrix[r][right] for r in range(top + 1, bottom + 1))
        if top < bottom and left < right:
            out.extend(matrix[bottom][c] for c in range(right - 1, left - 1, -1))
            out.extend(matrix[r][left] for r in range(bottom - 1, top, -1))
        top += 1
        bottom -= 1
        left += 1
        right -= 1
    return out


def gen_spiral_matrix(rng: Rng, params: Mapping[str, Any]) -> tuple[dict[str, Any], str]:
    n = params["size"]
    matrix = [[rng.randint(0, 9) for _ in range(n)] for _ in range(n)]
    answer = " ".join(str(v) for v in spiral_order(matrix))
    return {"matrix": matrix}, answer


def check_spiral_matrix(payload: Mapping[str, Any], candidate: Any) -> bool:
    tokens = re.findall(r"-?\d+", str(candidate))
    return [int(t) for t in tokens] == spiral_order(payload["matrix"])


def bind_spiral_matrix(payload: Mapping[str, Any], pack: LanguagePack) -> dict[str, Any]:
    rows = "\n".join(" ".join(str(v) for v in row) for row in payload["matrix"])
    return {"matrix": rows}


SPIRAL_MATRIX = TaskSpec(
    task_id="spiral_matrix",
    category=Category.ALGORITHMIC,
    localization_flag=LocalizationFlag.FULLY_TRANSLATED,
    answer_kind=AnswerKind.TEXT,
    curriculum=Curriculum((
        CurriculumParam("size", (2, 3, 5, 7), default_index=1),
    )),
    generate=gen_spiral_matrix,
    check=check_spiral_matrix,
    bind=bind_spiral_matrix,
    placeholders={"question": frozenset({"matrix"})},
    complexity_proxy=lambda p: len(p["matrix"]) ** 2,
)

SPECS = (
    ISOMORPHIC_STRINGS,
    SPELL_BACKWARD,
    LETTER_COUNTING,
    GROUP_ANAGRAMS,
    WORD_SORTING,
    SPIRAL_MATRIX,
)
