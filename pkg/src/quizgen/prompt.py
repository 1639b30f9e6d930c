"""Master prompt template handling and parameter substitution.

The default template ships as package data (``data/master_prompt.txt``) with
``{{placeholder}}`` markers.  Completed passages that the source prompt only
sketches are part of the shipped text; the template version is content-derived
so any edit is auditable.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Optional

from .context import DEFAULT_TOKEN_BUDGET, ContextBundle
from .graph import Granularity
from .questions import DIMENSIONS, QuestionType

PLACEHOLDER_NAMES = frozenset(
    {
        "concepts",
        "course",
        "course_description",
        "cognitive_dimension",
        "difficulty",
        "n_questions",
        "allowed_types",
        "learning_objects",
    }
)

_PLACEHOLDER_RE = re.compile(r"\{\{([A-Za-z_][A-Za-z0-9_]*)\}\}")

# Criteria added to the prompt over successive iterations; each must appear
# verbatim in the default template (greppable contract).
ITERATION_CRITERIA = (
    "We do not want students to rote-memorize definitions, examples, or other text",
    "Do not put any text in the LaTeX code that directly states which answer is",
    "Note that students are limited to replying to a question in the form the",
    "They can not provide any additional text.",
    "The correct answer must be unambiguous, particularly for",
    "automatically via string matching, so \\fillinsol can only contain plain",
)

_TYPE_LABELS = {
    QuestionType.MULTIPLE_CHOICE: "multiple choice",
    QuestionType.SINGLE_CHOICE: "single choice",
    QuestionType.FILL_IN_THE_BLANKS: "fill-in-the-blanks",
}


class Difficulty(str, Enum):
    EASY = "easy"
    MEDIUM = "medium"
    HARD = "hard"


class PromptError(ValueError):
    pass


class UnknownPlaceholder(PromptError):
    def __init__(self, name: str):
        super().__init__(f"template uses unknown placeholder '{name}'")
        self.name = name


class MissingPlaceholderValue(PromptError):
    def __init__(self, name: str):
        super().__init__(f"no value supplied for placeholder '{name}'")
        self.name = name


@dataclass(frozen=True)
class GenerationRequest:
    """Instructor parameters for one generation run."""

    concepts: tuple[str, ...]
    course_name: str
    course_description: str
    cognitive_dimension: str
    difficulty: Difficulty
    n_questions: int
    allowed_types: frozenset[QuestionType]
    granularity: Granularity = Granularity.SECTION
    token_budget: int = DEFAULT_TOKEN_BUDGET

    def __post_init__(self):
        if not self.concepts:
            raise ValueError("at least one concept is required")
        if not 1 <= self.n_questions <= 5:
            raise ValueError("n_questions must be between 1 and 5")
        if not self.allowed_types:
            raise ValueError("allowed_types must not be empty")
        if self.cognitive_dimension not in DIMENSIONS:
            raise ValueError(f"unknown cognitive dimension: {self.cognitive_dimension}")
        if self.token_budget <= 0:
            raise ValueError("token_budget must be positive")

    @property
    def primary_concept(self) -> str:
        return self.concepts[0]


@dataclass(frozen=True)
class MasterPromptTemplate:
    segments: tuple[tuple[str, str], ...]  # ("literal", text) | ("placeholder", name)
    version: str

    def placeholders(self) -> set[str]:
        return {value for kind, value in self.segments if kind == "placeholder"}

    @property
    def text(self) -> str:
        return "".join(
            value if kind == "literal" else "{{" + value + "}}"
            for kind, value in self.segments
        )


def parse_template(text: str) -> MasterPromptTemplate:
    segments: list[tuple[str, str]] = []
    cursor = 0
    for match in _PLACEHOLDER_RE.finditer(text):
        if match.start() > cursor:
            segments.append(("literal", text[cursor : match.start()]))
        segments.append(("placeholder", match.group(1)))
        cursor = match.end()
    if cursor < len(text):
        segments.append(("literal", text[cursor:]))
    version = "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()[:12]
    return MasterPromptTemplate(segments=tuple(segments), version=version)


def load_template(path: Optional[str | Path] = None) -> MasterPromptTemplate:
    """The template at ``path``, or the shipped default."""
    if path is not None:
        return parse_template(Path(path).read_text(encoding="utf-8"))
    data = resources.files("quizgen").joinpath("data/master_prompt.txt")
    return parse_template(data.read_text(encoding="utf-8"))


def list_placeholders(template: MasterPromptTemplate) -> set[str]:
    return template.placeholders()


def render(template: MasterPromptTemplate, values: dict[str, str]) -> str:
    """Substitute every placeholder; reject unknown names and missing values."""
    parts: list[str] = []
    for kind, value in template.segments:
        if kind == "literal":
            parts.append(value)
            continue
        if value not in PLACEHOLDER_NAMES:
            raise UnknownPlaceholder(value)
        if value not in values:
            raise MissingPlaceholderValue(value)
        parts.append(values[value])
    return "".join(parts)


def _concept_label(uri: str) -> str:
    name = uri.rsplit("?", 1)[-1]
    return f"{name} ({uri})" if "?" in uri else name


def substitution_values(request: GenerationRequest, context: ContextBundle) -> dict[str, str]:
    allowed = [t for t in _TYPE_LABELS if t in request.allowed_types]
    return {
        "concepts": ", ".join(_concept_label(c) for c in request.concepts),
        "course": request.course_name,
        "course_description": request.course_description,
        "cognitive_dimension": request.cognitive_dimension,
        "difficulty": request.difficulty.value,
        "n_questions": str(request.n_questions),
        "allowed_types": ", ".join(_TYPE_LABELS[t] for t in allowed),
        "learning_objects": context.rendered(),
    }


def assemble_prompt(
    template: MasterPromptTemplate, request: GenerationRequest, context: ContextBundle
) -> str:
    """Deterministic full prompt: byte-identical for identical inputs."""
    return render(template, substitution_values(request, context))
