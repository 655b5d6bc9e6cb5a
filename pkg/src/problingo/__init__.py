"""problingo: procedurally generated reasoning problems in 14 languages.

The same (dataset_seed, index) pair yields the same underlying problem and
answer in every language; only the question's surface text changes. Answers
are verified automatically, and an evaluation harness scores model
transcripts with average@k, pass@k, and language-consistency metrics.
"""

from .curriculum import Curriculum, CurriculumParam
from .engine import (
    GenerationRequest,
    ProblemInstance,
    canonical_json,
    generate_dataset,
    generate_instance,
    instance_from_json_dict,
)
from .packs import (
    Conventions,
    LanguagePack,
    PackQuality,
    RenderContext,
    delocalize_token,
    lint_pack,
    load_pack,
    localize_token,
    render_question,
    save_pack,
)
from .registry import (
    LANGUAGES,
    AnswerKind,
    Category,
    LocalizationFlag,
    TaskRegistry,
    TaskSpec,
    default_registry,
)
from .rng import Rng, derive_rng
from .verification import Verdict, extract_answer, normalize, verify

__version__ = "0.1.0"

__all__ = [
    "AnswerKind",
    "Category",
    "Conventions",
    "Curriculum",
    "CurriculumParam",
    "GenerationRequest",
    "LANGUAGES",
    "LanguagePack",
    "LocalizationFlag",
    "PackQuality",
    "ProblemInstance",
    "RenderContext",
    "Rng",
    "TaskRegistry",
    "TaskSpec",
    "Verdict",
    "canonical_json",
    "default_registry",
    "delocalize_token",
    "derive_rng",
    "extract_answer",
    "generate_dataset",
    "generate_instance",
    "instance_from_json_dict",
    "lint_pack",
    "load_pack",
    "localize_token",
    "normalize",
    "render_question",
    "save_pack",
    "verify",
]
