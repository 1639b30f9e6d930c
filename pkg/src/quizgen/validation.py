"""Question quality checks: structural, relational, feedback, and leakage.

Issue codes form a closed, documented set (docs/defect-taxonomy.md).  Content
truthfulness is deliberately not checked here; that judgement stays with the
human reviewer.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .graph import AmbiguousSymbol, KnowledgeGraph, UnknownSymbol
from .questions import DIMENSIONS, QuestionType, QuizQuestion, _module_scopes
from .stex import NodeKind


class Category(str, Enum):
    STRUCTURAL = "Structural"
    RELATIONAL = "Relational"
    FEEDBACK = "Feedback"
    LEAKAGE = "Leakage"
    FORMAT = "Format"


class Severity(str, Enum):
    ERROR = "Error"
    WARNING = "Warning"


class Verdict(str, Enum):
    PASS = "Pass"
    PASS_WITH_WARNINGS = "PassWithWarnings"
    FAIL = "Fail"


# code -> (category, severity); the complete taxonomy.
TAXONOMY: dict[str, tuple[Category, Severity]] = {
    "MISSING_OBJECTIVE": (Category.STRUCTURAL, Severity.ERROR),
    "INVALID_DIMENSION": (Category.STRUCTURAL, Severity.ERROR),
    "SC_MULTIPLE_TRUE": (Category.STRUCTURAL, Severity.ERROR),
    "SC_NO_TRUE": (Category.STRUCTURAL, Severity.ERROR),
    "MC_NO_TRUE": (Category.STRUCTURAL, Severity.ERROR),
    "FIB_NOT_PLAINTEXT": (Category.STRUCTURAL, Severity.ERROR),
    "FIB_MISSING_SOLUTION": (Category.STRUCTURAL, Severity.ERROR),
    "WRONG_TYPE": (Category.FORMAT, Severity.ERROR),
    "HALLUCINATED_SYMBOL": (Category.RELATIONAL, Severity.ERROR),
    "DANGLING_USEMODULE": (Category.RELATIONAL, Severity.ERROR),
    "AMBIGUOUS_SYMBOL": (Category.RELATIONAL, Severity.WARNING),
    "UNANNOTATED_TERM": (Category.RELATIONAL, Severity.WARNING),
    "MISSING_FEEDBACK": (Category.FEEDBACK, Severity.WARNING),
    "UNINFORMATIVE_FEEDBACK": (Category.FEEDBACK, Severity.WARNING),
    "ANSWER_LEAK": (Category.LEAKAGE, Severity.ERROR),
}

ERROR_CODES = tuple(code for code, (_, sev) in TAXONOMY.items() if sev is Severity.ERROR)
WARNING_CODES = tuple(code for code, (_, sev) in TAXONOMY.items() if sev is Severity.WARNING)


@dataclass(frozen=True)
class ValidationIssue:
    code: str
    message: str
    span: Optional[tuple[int, int]] = None

    def __post_init__(self):
        if self.code not in TAXONOMY:
            raise ValueError(f"issue code outside the taxonomy: {self.code}")

    @property
    def category(self) -> Category:
        return TAXONOMY[self.code][0]

    @property
    def severity(self) -> Severity:
        return TAXONOMY[self.code][1]

    def to_dict(self) -> dict:
        return {
            "code": self.code,
            "category": self.category.value,
            "severity": self.severity.value,
            "message": self.message,
            "span": list(self.span) if self.span else None,
        }


@dataclass(frozen=True)
class ValidationReport:
    question_id: str
    issues: tuple[ValidationIssue, ...]

    @property
    def verdict(self) -> Verdict:
        if any(i.severity is Severity.ERROR for i in self.issues):
            return Verdict.FAIL
        if self.issues:
            return Verdict.PASS_WITH_WARNINGS
        return Verdict.PASS

    def to_dict(self) -> dict:
        return {
            "question_id": self.question_id,
            "verdict": self.verdict.value,
            "issues": [i.to_dict() for i in self.issues],
        }


ANSWER_LEAK_MARKERS = ("correct answer", "this is correct", "(correct)", "(true)", "(false)")

# Feedback similarity: tokens dropped before comparing feedback with its
# option ("no, it is not the case that X" should collapse onto X).
NEGATION_TOKENS = frozenset({"no", "not", "incorrect"})
FILLER_TOKENS = frozenset({"it", "is", "the", "that", "case"})
UNINFORMATIVE_JACCARD = 0.5

_WORD = re.compile(r"[a-z0-9]+(?:[-'][a-z0-9]+)*")


def _tokens(text: str) -> set[str]:
    return set(_WORD.findall(text.lower()))


def _normalized_tokens(text: str) -> set[str]:
    return _tokens(text) - NEGATION_TOKENS - FILLER_TOKENS


def feedback_similarity(option_text: str, feedback: str) -> float:
    """Token Jaccard between option and feedback after dropping negation/filler."""
    a = _normalized_tokens(option_text)
    b = _normalized_tokens(feedback)
    if not a or not b:
        return 0.0
    return len(a & b) / len(a | b)


# ---------------------------------------------------------------------------
# Individual checks
# ---------------------------------------------------------------------------


def validate_structural(q: QuizQuestion, allowed_types: Optional[set] = None) -> list[ValidationIssue]:
    issues: list[ValidationIssue] = []
    if not q.objectives:
        issues.append(ValidationIssue("MISSING_OBJECTIVE", "question declares no learning objective"))
    for dimension, symbol in q.objectives + q.preconditions:
        if dimension not in DIMENSIONS:
            issues.append(
                ValidationIssue(
                    "INVALID_DIMENSION",
                    f"'{dimension}' (on symbol '{symbol}') is not a cognitive dimension",
                )
            )
    true_count = sum(1 for o in q.options if o.correct)
    if q.qtype is QuestionType.SINGLE_CHOICE:
        if true_count > 1:
            issues.append(ValidationIssue("SC_MULTIPLE_TRUE", f"{true_count} options are marked true"))
        elif true_count == 0:
            issues.append(ValidationIssue("SC_NO_TRUE", "no option is marked true"))
    elif q.qtype is QuestionType.MULTIPLE_CHOICE and true_count == 0:
        issues.append(ValidationIssue("MC_NO_TRUE", "no option is marked true"))
    if q.qtype is QuestionType.FILL_IN_THE_BLANKS:
        if q.fib_solution is None:
            issues.append(ValidationIssue("FIB_MISSING_SOLUTION", "fill-in question has no solution"))
        elif any(ch in q.fib_solution for ch in "\\{}"):
            issues.append(
                ValidationIssue(
                    "FIB_NOT_PLAINTEXT",
                    "fill-in solutions are string matched and must be plain text",
                )
            )
    if allowed_types is not None and q.qtype not in allowed_types:
        issues.append(
            ValidationIssue("WRONG_TYPE", f"{q.qtype.value} was not among the requested types")
        )
    return issues


def validate_relational(q: QuizQuestion, graph: KnowledgeGraph) -> list[ValidationIssue]:
    issues: list[ValidationIssue] = []
    scopes = _module_scopes(q, graph)

    for raw in q.used_modules:
        if graph.resolve_module_ref(raw) is None:
            issues.append(
                ValidationIssue("DANGLING_USEMODULE", f"imported module '{raw}' is not in the graph")
            )

    def check_name(name: str, where: str) -> None:
        try:
            graph.resolve_in_modules(name, scopes)
        except UnknownSymbol:
            issues.append(
                ValidationIssue(
                    "HALLUCINATED_SYMBOL",
                    f"symbol '{name}' ({where}) does not resolve in the question's modules",
                )
            )
        except AmbiguousSymbol as err:
            issues.append(
                ValidationIssue(
                    "AMBIGUOUS_SYMBOL",
                    f"symbol '{name}' ({where}) is ambiguous: {', '.join(err.candidates)}",
                )
            )

    for dimension, name in q.objectives:
        check_name(name, "objective")
    for dimension, name in q.preconditions:
        check_name(name, "precondition")

    seen_body: set[str] = set()
    for node in _body_symbol_refs(q):
        name = node.attributes["name"]
        if name not in seen_body:
            seen_body.add(name)
            check_name(name, "body reference")

    issues.extend(_unannotated_terms(q, graph, scopes))
    return issues


def _body_symbol_refs(q: QuizQuestion):
    for node in q.stem:
        for sub in node.walk():
            if sub.kind is NodeKind.SYMBOL_REF:
                yield sub
    for option in q.options:
        for node in option.text:
            for sub in node.walk():
                if sub.kind is NodeKind.SYMBOL_REF:
                    yield sub


def _stem_plain_segments(q: QuizQuestion) -> list[str]:
    """Plain-text runs of the stem, excluding annotated and opaque regions."""
    segments: list[str] = []

    def visit(node) -> None:
        if node.kind is NodeKind.TEXT:
            segments.append(node.attributes["text"])
        elif node.kind in (NodeKind.MATH, NodeKind.SYMBOL_REF):
            return
        else:
            for child in node.children:
                visit(child)

    for node in q.stem:
        visit(node)
    return segments


def _unannotated_terms(q: QuizQuestion, graph: KnowledgeGraph, scopes: list[str]) -> list[ValidationIssue]:
    terms: dict[str, str] = {}
    for scope in scopes:
        for name, uris in graph.visible_symbols(scope).items():
            for uri in uris:
                info = graph.symbols[uri]
                for term in {info.name, *info.verbalizations}:
                    cleaned = term.strip().lower()
                    if cleaned:
                        terms.setdefault(cleaned, uri)

    issues = []
    stem_text = " ".join(_stem_plain_segments(q)).lower()
    reported: set[str] = set()
    for term in sorted(terms):
        if term in reported:
            continue
        if re.search(rf"(?<![a-z0-9-]){re.escape(term)}(?![a-z0-9-])", stem_text):
            issues.append(
                ValidationIssue(
                    "UNANNOTATED_TERM",
                    f"'{term}' appears in the stem as plain text without a symbol reference",
                )
            )
            reported.add(term)
    return issues


def check_feedback(q: QuizQuestion) -> list[ValidationIssue]:
    issues: list[ValidationIssue] = []
    for i, option in enumerate(q.options):
        if not option.correct and (option.feedback is None or not option.feedback.strip()):
            issues.append(
                ValidationIssue("MISSING_FEEDBACK", f"incorrect option {i + 1} has no feedback")
            )
        elif option.feedback:
            similarity = feedback_similarity(option.plain, option.feedback)
            if similarity >= UNINFORMATIVE_JACCARD:
                issues.append(
                    ValidationIssue(
                        "UNINFORMATIVE_FEEDBACK",
                        f"feedback of option {i + 1} merely restates the option "
                        f"(similarity {similarity:.2f})",
                    )
                )
    return issues


def check_leakage(q: QuizQuestion) -> list[ValidationIssue]:
    issues: list[ValidationIssue] = []
    for i, option in enumerate(q.options):
        visible = option.plain
        lowered = visible.lower()
        marker = next((m for m in ANSWER_LEAK_MARKERS if m in lowered), None)
        if marker is not None:
            issues.append(
                ValidationIssue("ANSWER_LEAK", f"option {i + 1} contains the marker '{marker}'")
            )
            continue
        if option.feedback and option.feedback.strip() and option.feedback.strip() in visible:
            issues.append(
                ValidationIssue("ANSWER_LEAK", f"option {i + 1} contains its feedback verbatim")
            )
    return issues


# ---------------------------------------------------------------------------
# Composition
# ---------------------------------------------------------------------------


def validate(
    q: QuizQuestion,
    graph: KnowledgeGraph,
    allowed_types: Optional[set] = None,
) -> ValidationReport:
    """Run all four check families and fold the verdict."""
    issues = (
        validate_structural(q, allowed_types)
        + validate_relational(q, graph)
        + check_feedback(q)
        + check_leakage(q)
    )
    issues.sort(key=lambda i: (i.span[0] if i.span else -1, i.code, i.message))
    return ValidationReport(question_id=q.id, issues=tuple(issues))
