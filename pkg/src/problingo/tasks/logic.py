"""Logic tasks: two-premise syllogisms in mathematical predicate notation.

Premises and conclusion quantify over the set symbols A, B, C (B is always
the middle term), e.g. ``∀x ∈ A: x ∈ B``. Notation is language-independent;
only the surrounding instructions and the Valid/Invalid answer tokens
localize.

Semantics: sets are non-empty (existential import granted), so the 24
classically valid forms hold. The generator labels forms from the hardcoded
table below; ``enumerate_validity`` independently decides validity by
exhaustive model enumeration over a small universe, and the test suite keeps
the two in agreement. Three elements suffice: a statement's truth depends
only on which membership patterns over {A, B, C} are realized, and a
counterexample never needs more than three distinct patterns (at most one
witness per existential premise plus one for the conclusion, with
non-emptiness witnesses shareable).
"""

from __future__ import annotations

from itertools import product
from typing import Any, Iterable, Mapping

from ..curriculum import Curriculum, CurriculumParam
from ..packs import LanguagePack, localize_token
from ..registry import AnswerKind, Category, LocalizationFlag, TaskSpec
from ..rng import Rng

QUANTIFIERS = ("all", "no", "some", "some_not")

_MOOD_LETTER = {"A": "all", "E": "no", "I": "some", "O": "some_not"}

#: Premise term order per figure: (minor premise, major premise), with the
#: conclusion always about (A, C). Displayed minor-first.
FIGURES: dict[int, tuple[tuple[str, str], tuple[str, str]]] = {
    1: (("A", "B"), ("B", "C")),
    2: (("A", "B"), ("C", "B")),
    3: (("B", "A"), ("B", "C")),
    4: (("B", "A"), ("C", "B")),
}

_VALID_MOODS = {
    1: ("AAA", "EAE", "AII", "EIO", "AAI", "EAO"),
    2: ("EAE", "AEE", "EIO", "AOO", "EAO", "AEO"),
    3: ("AAI", "IAI", "AII", "EAO", "OAO", "EIO"),
    4: ("AAI", "AEE", "IAI", "EAO", "EIO", "AEO"),
}

#: (figure, major quantifier, minor quantifier, conclusion quantifier)
VALID_FORMS: frozenset[tuple[int, str, str, str]] = frozenset(
    (figure, _MOOD_LETTER[m[0]], _MOOD_LETTER[m[1]], _MOOD_LETTER[m[2]])
    for figure, moods in _VALID_MOODS.items()
    for m in moods
)

Form = tuple[int, str, str, str]


def statement_text(quantifier: str, subject: str, predicate: str) -> str:
    if quantifier == "all":
        return f"∀x ∈ {subject}: x ∈ {predicate}"
    if quantifier == "no":
        return f"∀x ∈ {subject}: x ∉ {predicate}"
    if quantifier == "some":
        return f"∃x ∈ {subject}: x ∈ {predicate}"
    if quantifier == "some_not":
        return f"∃x ∈ {subject}: x ∉ {predicate}"
    raise ValueError(f"unknown quantifier {quantifier!r}")


def _holds(quantifier: str, subject: frozenset[int], predicate: frozenset[int]) -> bool:
    if quantifier == "all":
        return subject <= predicate
    if quantifier == "no":
        return not (subject & predicate)
    if quantifier == "some":
        return bool(subject & predicate)
    return bool(subject - predicate)  # some_not


def enumerate_validity(form: Form, universe_size: int = 3) -> bool:
    """Exhaustive model check over all non-empty subset assignments."""
    figure, q_major, q_minor, q_conc = form
    (minor_terms, major_terms) = FIGURES[figure]
    universe = range(universe_size)
    nonempty = [
        frozenset(s)
        for s in (
            {i for i in universe if mask >> i & 1} for mask in range(1, 1 << universe_size)
        )
    ]
    for a, b, c in product(nonempty, repeat=3):
        sets = {"A": a, "B": b, "C": c}
        minor_ok = _holds(q_minor, sets[minor_terms[0]], sets[minor_terms[1]])
        major_ok = _holds(q_major, sets[major_terms[0]], sets[major_terms[1]])
        if minor_ok and major_ok and not _holds(q_conc, sets["A"], sets["C"]):
            return False
    return True


def form_pools(figures: Iterable[int], quantifiers: Iterable[str]) -> tuple[list[Form], list[Form]]:
    """(valid, invalid) form lists, in deterministic order."""
    quantifiers = tuple(quantifiers)
    valid: list[Form] = []
    invalid: list[Form] = []
    for figure in figures:
        for q_major in quantifiers:
            for q_minor in quantifiers:
                for q_conc in quantifiers:
                    form = (figure, q_major, q_minor, q_conc)
                    (valid if form in VALID_FORMS else invalid).append(form)
    return valid, invalid


_MOOD_SETS = {"universal": ("all", "no"), "all": QUANTIFIERS}


def gen_syllogism(rng: Rng, params: Mapping[str, Any]) -> tuple[dict[str, Any], str]:
    figures = tuple(params["figures"])
    quantifiers = _MOOD_SETS[params["moods"]]
    valid_pool, invalid_pool = form_pools(figures, quantifiers)
    want_valid = rng.random() < 0.5
    form = rng.choice(valid_pool if want_valid else invalid_pool)
    figure, q_major, q_minor, q_conc = form
    minor_terms, major_terms = FIGURES[figure]
    payload = {
        "figure": figure,
        "premises": [
            [q_minor, *minor_terms],
            [q_major, *major_terms],
        ],
        "conclusion": [q_conc, "A", "C"],
        "valid": form in VALID_FORMS,
        "form_space": len(figures) * len(quantifiers) ** 3,
    }
    return payload, "Valid" if payload["valid"] else "Invalid"


def check_syllogism(payload: Mapping[str, Any], candidate: Any) -> bool:
    return candidate == ("Valid" if payload["valid"] else "Invalid")


def bind_syllogism(payload: Mapping[str, Any], pack: LanguagePack) -> dict[str, Any]:
    p1, p2 = payload["premises"]
    conc = payload["conclusion"]
    return {
        "premise1": statement_text(*p1),
        "premise2": statement_text(*p2),
        "conclusion": statement_text(*conc),
        "valid_token": localize_token(pack, "Valid"),
        "invalid_token": localize_token(pack, "Invalid"),
    }


SYLLOGISM = TaskSpec(
    task_id="syllogism",
    category=Category.LOGIC,
    localization_flag=LocalizationFlag.FULLY_TRANSLATED,
    answer_kind=AnswerKind.LOCALIZED_BOOLEAN,
    curriculum=Curriculum((
        CurriculumParam("figures", ((1,), (1, 2), (1, 2, 3, 4)), default_index=1),
        CurriculumParam("moods", ("universal", "all"), default_index=1),
    )),
    generate=gen_syllogism,
    check=check_syllogism,
    bind=bind_syllogism,
    placeholders={
        "question": frozenset(
            {"premise1", "premise2", "conclusion", "valid_token", "invalid_token"}
        )
    },
    complexity_proxy=lambda p: p["form_space"],
    canonical_tokens=("Valid", "Invalid"),
)

SPECS = (SYLLOGISM,)
