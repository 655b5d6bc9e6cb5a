"""Shipped English data files: word list and sentence corpus.

Both files are versioned package data; their SHA-256 hashes are recorded in
instance metadata so generated datasets are provenance-complete. The word
list is a curated set of common words (plus the anagram stock some tasks
need); the sentence corpus is a fixed set of original English sentences.
"""

from __future__ import annotations

import hashlib
import re
from functools import lru_cache
from importlib import resources

WORDS_FILE = "words_en.txt"
SENTENCES_FILE = "sentences_en.txt"

_WORD_RE = re.compile(r"[a-z]+")


def _read_data(name: str) -> str:
    return resources.files("problingo").joinpath("data", name).read_text("utf-8")


@lru_cache(maxsize=None)
def data_sha256(name: str) -> str:
    return hashlib.sha256(_read_data(name).encode("utf-8")).hexdigest()


@lru_cache(maxsize=None)
def word_list() -> tuple[str, ...]:
    """All corpus words, lowercase, in file order (deduplicated)."""
    seen: dict[str, None] = {}
    for line in _read_data(WORDS_FILE).splitlines():
        word = line.strip().lower()
        if word and word not in seen:
            seen[word] = None
    return tuple(seen)


@lru_cache(maxsize=None)
def words_with_length(lo: int, hi: int) -> tuple[str, ...]:
    return tuple(w for w in word_list() if lo <= len(w) <= hi)


@lru_cache(maxsize=None)
def anagram_groups() -> tuple[tuple[str, ...], ...]:
    """Anagram families of size >= 2, each family sorted, families in
    first-appearance order of their letter signature."""
    by_signature: dict[str, list[str]] = {}
    for word in word_list():
        by_signature.setdefault("".join(sorted(word)), []).append(word)
    return tuple(
        tuple(sorted(group)) for group in by_signature.values() if len(group) >= 2
    )


@lru_cache(maxsize=None)
def sentence_words() -> tuple[tuple[str, ...], ...]:
    """Each corpus sentence as a tuple of lowercase words."""
    sentences = []
    for line in _read_data(SENTENCES_FILE).splitlines():
        words = tuple(_WORD_RE.findall(line.lower()))
        if words:
            sentences.append(words)
    return tuple(sentences)


@lru_cache(maxsize=None)
def sentences_with_min_words(n: int) -> tuple[tuple[str, ...], ...]:
    return tuple(s for s in sentence_words() if len(s) >= n)
