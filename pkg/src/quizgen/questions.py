"""Typed quiz-question model: extraction from ASTs, prerequisites, grading, rendering."""

from __future__ import annotations

import html
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from .graph import AmbiguousSymbol, KnowledgeGraph, SymbolId, UnknownSymbol
from .stex import DocumentAst, NodeKind, StexNode, plain_text, serialize_nodes


class QuestionType(str, Enum):
    MULTIPLE_CHOICE = "MultipleChoice"
    SINGLE_CHOICE = "SingleChoice"
    FILL_IN_THE_BLANKS = "FillInTheBlanks"


class ReviewStatus(str, Enum):
    DRAFT = "Draft"
    ACCEPTED = "Accepted"
    REJECTED = "Rejected"
    EDITED = "Edited"


DIMENSIONS = ("remember", "understand", "apply", "analyze", "evaluate", "create")


class GradingKind(str, Enum):
    SET = "Set"
    ADD = "Add"
    DEDUCT = "Deduct"


_GRADING_BY_KEY = {"set": GradingKind.SET, "add": GradingKind.ADD, "deduct": GradingKind.DEDUCT}


@dataclass(frozen=True)
class GradingAction:
    kind: GradingKind
    points: Fraction

    def __post_init__(self):
        if self.points < 0:
            raise ValueError("grading points must be non-negative")


@dataclass
class AnswerOption:
    text: list[StexNode]
    correct: bool
    feedback: Optional[str] = None
    grading_action: Optional[GradingAction] = None

    @property
    def plain(self) -> str:
        return plain_text(self.text)

    @property
    def source(self) -> str:
        return serialize_nodes(self.text)


@dataclass
class QuizQuestion:
    id: str
    qtype: QuestionType
    stem: list[StexNode]
    options: list[AnswerOption] = field(default_factory=list)
    fib_solution: Optional[str] = None
    objectives: list[tuple[str, str]] = field(default_factory=list)  # (dimension, symbol name)
    preconditions: list[tuple[str, str]] = field(default_factory=list)
    used_modules: list[str] = field(default_factory=list)
    source: str = ""
    review_status: ReviewStatus = ReviewStatus.DRAFT

    @property
    def stem_plain(self) -> str:
        return plain_text(self.stem)

    def invariant_violations(self) -> list[str]:
        """Shape violations as reject reasons; empty for a well-formed question."""
        problems = []
        true_count = sum(1 for o in self.options if o.correct)
        if self.qtype is QuestionType.SINGLE_CHOICE:
            if true_count > 1:
                problems.append("SingleChoiceMultipleTrue")
            elif true_count == 0:
                problems.append("SingleChoiceNoTrue")
        elif self.qtype is QuestionType.MULTIPLE_CHOICE:
            if true_count == 0:
                problems.append("MultiChoiceNoTrue")
        else:
            if self.fib_solution is None:
                problems.append("FillInMissingSolution")
            elif "\\" in self.fib_solution or "{" in self.fib_solution or "}" in self.fib_solution:
                problems.append("FillInNotPlaintext")
            if self.options:
                problems.append("FillInWithOptions")
        for option in self.options:
            if option.feedback is not None and not option.feedback.strip():
                problems.append("EmptyFeedback")
                break
        return problems


@dataclass(frozen=True)
class QuestionReject:
    reason: str
    detail: str
    source: str


@dataclass(frozen=True)
class StudentResponse:
    """Either a set of selected option indices or the typed blank text."""

    selected: Optional[frozenset[int]] = None
    typed: Optional[str] = None

    @staticmethod
    def choice(*indices: int) -> "StudentResponse":
        return StudentResponse(selected=frozenset(indices))

    @staticmethod
    def fill_in(text: str) -> "StudentResponse":
        return StudentResponse(typed=text)


@dataclass(frozen=True)
class GradeResult:
    correct: bool
    points: Fraction
    triggered_feedback: tuple[tuple[int, str], ...]


class ShapeMismatch(ValueError):
    pass


# ---------------------------------------------------------------------------
# Extraction from ASTs
# ---------------------------------------------------------------------------

_STRUCTURAL_KINDS = (
    NodeKind.USE_MODULE,
    NodeKind.OBJECTIVE,
    NodeKind.MULTI_CHOICE_BLOCK,
    NodeKind.SINGLE_CHOICE_BLOCK,
)


def from_ast(ast: DocumentAst, source_text: Optional[str] = None) -> tuple[list[QuizQuestion], list[QuestionReject]]:
    """One QuizQuestion per well-formed ``sproblem``; malformed ones become rejects.

    ``source_text`` allows exact source slices; serialization is used when the
    original text is not supplied.
    """
    questions: list[QuizQuestion] = []
    rejects: list[QuestionReject] = []
    counter = 0

    def module_chain(node: StexNode, target: StexNode, chain: list[str]) -> Optional[list[str]]:
        if node is target:
            return list(chain)
        for child in node.children:
            if child.kind is NodeKind.MODULE_DECL:
                chain.append(child.attributes["name"])
                found = module_chain(child, target, chain)
                chain.pop()
            else:
                found = module_chain(child, target, chain)
            if found is not None:
                return found
        return None

    for node in ast.root.walk():
        if node.kind is not NodeKind.PROBLEM:
            continue
        counter += 1
        if source_text is not None:
            source = source_text[node.span[0] : node.span[1]]
        else:
            from .stex import serialize_node

            source = serialize_node(node)
        enclosing = module_chain(ast.root, node, []) or []
        result = _question_from_problem(node, f"{ast.doc_id}::q{counter}", source, enclosing)
        if isinstance(result, QuizQuestion):
            violations = result.invariant_violations()
            if violations:
                rejects.append(
                    QuestionReject(reason=violations[0], detail=", ".join(violations), source=source)
                )
            else:
                questions.append(result)
        else:
            rejects.append(result)
    return questions, rejects


def _question_from_problem(
    problem: StexNode, qid: str, source: str, enclosing_modules: list[str]
) -> Union[QuizQuestion, QuestionReject]:
    uses = [n.attributes["module"] for n in problem.walk() if n.kind is NodeKind.USE_MODULE]
    used_modules = enclosing_modules + uses

    objectives: list[tuple[str, str]] = []
    preconditions: list[tuple[str, str]] = []
    for n in problem.walk():
        if n.kind is NodeKind.OBJECTIVE:
            pair = (n.attributes["dimension"], n.attributes["symbol"])
            if n.attributes["macro"] == "objective":
                objectives.append(pair)
            else:
                preconditions.append(pair)

    blocks = [
        n
        for n in problem.walk()
        if n.kind in (NodeKind.MULTI_CHOICE_BLOCK, NodeKind.SINGLE_CHOICE_BLOCK)
    ]
    fills = [n for n in problem.walk() if n.kind is NodeKind.FILL_IN_SOL]

    if len(blocks) > 1:
        return QuestionReject(reason="MultipleChoiceBlocks", detail=qid, source=source)

    stem = [c for c in problem.children if c.kind not in _STRUCTURAL_KINDS]

    if blocks:
        block = blocks[0]
        qtype = (
            QuestionType.MULTIPLE_CHOICE
            if block.kind is NodeKind.MULTI_CHOICE_BLOCK
            else QuestionType.SINGLE_CHOICE
        )
        options = []
        for child in block.children:
            if child.kind is not NodeKind.CHOICE_OPTION:
                continue
            action = None
            if "grading_kind" in child.attributes:
                try:
                    action = GradingAction(
                        kind=_GRADING_BY_KEY[child.attributes["grading_kind"]],
                        points=Fraction(child.attributes["grading_points"]),
                    )
                except (ValueError, ZeroDivisionError):
                    return QuestionReject(reason="BadGradingAction", detail=qid, source=source)
            options.append(
                AnswerOption(
                    text=child.children,
                    correct=child.attributes.get("truth") == "T",
                    feedback=child.attributes.get("feedback"),
                    grading_action=action,
                )
            )
        if not options:
            return QuestionReject(reason="EmptyChoiceBlock", detail=qid, source=source)
        return QuizQuestion(
            id=qid,
            qtype=qtype,
            stem=stem,
            options=options,
            objectives=objectives,
            preconditions=preconditions,
            used_modules=used_modules,
            source=source,
        )

    if fills:
        if len(fills) > 1:
            return QuestionReject(reason="MultipleBlanks", detail=qid, source=source)
        return QuizQuestion(
            id=qid,
            qtype=QuestionType.FILL_IN_THE_BLANKS,
            stem=stem,
            fib_solution=fills[0].attributes["solution"],
            objectives=objectives,
            preconditions=preconditions,
            used_modules=used_modules,
            source=source,
        )

    return QuestionReject(reason="NoAnswerBlock", detail=qid, source=source)


# ---------------------------------------------------------------------------
# Prerequisites
# ---------------------------------------------------------------------------


def extract_prerequisites(
    q: QuizQuestion, graph: KnowledgeGraph
) -> tuple[list[tuple[str, str]], list[str]]:
    """Prerequisite pairs for a question, plus unresolved symbol names.

    Every symbol referenced in the question body contributes
    ``(remember, symbol)``; explicit precondition annotations are unioned in.
    Pairs are deduplicated and ordered by symbol URI, then dimension.
    Resolution happens under the question's used-modules scope; names that do
    not resolve are reported, never guessed.
    """
    scopes = _module_scopes(q, graph)
    pairs: set[tuple[str, str]] = set()
    unresolved: list[str] = []

    def resolve(name: str) -> Optional[SymbolId]:
        try:
            return graph.resolve_in_modules(name, scopes)
        except (UnknownSymbol, AmbiguousSymbol):
            if name not in unresolved:
                unresolved.append(name)
            return None

    for node in _body_nodes(q):
        if node.kind is NodeKind.SYMBOL_REF:
            sym = resolve(node.attributes["name"])
            if sym is not None:
                pairs.add(("remember", sym.uri))
    for dimension, name in q.preconditions:
        sym = resolve(name)
        if sym is not None:
            pairs.add((dimension, sym.uri))

    ordered = sorted(pairs, key=lambda p: (p[1], p[0]))
    return [(dim, uri) for dim, uri in ordered], unresolved


def _module_scopes(q: QuizQuestion, graph: KnowledgeGraph) -> list[str]:
    scopes = []
    for raw in q.used_modules:
        resolved = graph.resolve_module_ref(raw)
        if resolved is not None and resolved not in scopes:
            scopes.append(resolved)
    return scopes


def _body_nodes(q: QuizQuestion):
    for node in q.stem:
        yield from node.walk()
    for option in q.options:
        for node in option.text:
            yield from node.walk()


# ---------------------------------------------------------------------------
# Grading
# ---------------------------------------------------------------------------


def grade(
    q: QuizQuestion, response: StudentResponse, default_points: Fraction | int = 1
) -> GradeResult:
    """Autograde a response.

    Choice questions follow the exact-set rule: the selection must equal the
    set of correct options.  Fill-in answers are compared byte-for-byte after
    trimming surrounding whitespace (case-sensitive).  Points come from the
    chosen options' grading actions folded in option order (Set overwrites,
    Add adds, Deduct subtracts, floor at zero); a correct answer without any
    actions earns ``default_points``.
    """
    default_points = Fraction(default_points)
    if q.qtype is QuestionType.FILL_IN_THE_BLANKS:
        if response.typed is None:
            raise ShapeMismatch("fill-in question needs a typed answer")
        assert q.fib_solution is not None
        correct = response.typed.strip() == q.fib_solution
        points = default_points if correct else Fraction(0)
        return GradeResult(correct=correct, points=points, triggered_feedback=())

    if response.selected is None:
        raise ShapeMismatch("choice question needs selected option indices")
    selected = set(response.selected)
    if any(i < 0 or i >= len(q.options) for i in selected):
        raise ShapeMismatch("selected option index out of range")
    if q.qtype is QuestionType.SINGLE_CHOICE and len(selected) != 1:
        raise ShapeMismatch("single choice takes exactly one selected option")

    correct_set = {i for i, o in enumerate(q.options) if o.correct}
    correct = selected == correct_set

    chosen_actions = [
        (i, q.options[i].grading_action)
        for i in sorted(selected)
        if q.options[i].grading_action is not None
    ]
    if correct and not chosen_actions:
        points = default_points
    else:
        points = Fraction(0)
        for _, action in chosen_actions:
            assert action is not None
            if action.kind is GradingKind.SET:
                points = action.points
            elif action.kind is GradingKind.ADD:
                points += action.points
            else:
                points -= action.points
        points = max(points, Fraction(0))

    feedback = []
    for i, option in enumerate(q.options):
        if option.feedback is None:
            continue
        if i in selected or (option.correct and i not in selected):
            feedback.append((i, option.feedback))
    return GradeResult(correct=correct, points=points, triggered_feedback=tuple(feedback))


# ---------------------------------------------------------------------------
# Render model
# ---------------------------------------------------------------------------


def to_render_model(
    q: QuizQuestion, variant: str = "student", graph: Optional[KnowledgeGraph] = None
) -> dict:
    """JSON-safe render model (schema in docs/render-model.md).

    The student variant carries no correctness, feedback, grading, or solution
    fields; the instructor variant carries all of them.  Symbol references
    become nodes with the resolved URI (when a graph is supplied) and the
    verbalization as data attributes.
    """
    if variant not in ("student", "instructor"):
        raise ValueError(f"unknown render variant: {variant}")
    instructor = variant == "instructor"
    scopes = _module_scopes(q, graph) if graph is not None else []

    def uri_for(name: str) -> str:
        if graph is not None:
            try:
                return graph.resolve_in_modules(name, scopes).uri
            except (UnknownSymbol, AmbiguousSymbol):
                return name
        return name

    def render_nodes(nodes: list[StexNode]) -> list[dict]:
        rendered: list[dict] = []
        for node in nodes:
            if node.kind is NodeKind.TEXT:
                rendered.append({"type": "text", "html": html.escape(node.attributes["text"])})
            elif node.kind is NodeKind.MATH:
                rendered.append({"type": "math", "tex": node.attributes["body"]})
            elif node.kind is NodeKind.SYMBOL_REF:
                rendered.append(
                    {
                        "type": "symref",
                        "symbol": uri_for(node.attributes["name"]),
                        "verbalization": html.escape(node.attributes["verbalization"]),
                    }
                )
            elif node.kind is NodeKind.FILL_IN_SOL:
                rendered.append({"type": "blank"})
            elif node.children:
                rendered.append({"type": "group", "children": render_nodes(node.children)})
            # Declarations and markers carry no student-visible content.
        return rendered

    model: dict = {
        "id": q.id,
        "qtype": q.qtype.value,
        "variant": variant,
        "stem": render_nodes(q.stem),
        "options": [],
    }
    for option in q.options:
        entry: dict = {"text": render_nodes(option.text)}
        if instructor:
            entry["correct"] = option.correct
            if option.feedback is not None:
                entry["feedback"] = option.feedback
            if option.grading_action is not None:
                entry["grading_action"] = {
                    "kind": option.grading_action.kind.value,
                    "points": str(option.grading_action.points),
                }
        model["options"].append(entry)
    if instructor:
        model["objectives"] = [list(pair) for pair in q.objectives]
        model["preconditions"] = [list(pair) for pair in q.preconditions]
        model["used_modules"] = list(q.used_modules)
        model["review_status"] = q.review_status.value
        if q.fib_solution is not None:
            model["fib_solution"] = q.fib_solution
    return model


# ---------------------------------------------------------------------------
# Serialization helpers (persistence + API payloads)
# ---------------------------------------------------------------------------


def question_to_dict(q: QuizQuestion) -> dict:
    return {
        "id": q.id,
        "qtype": q.qtype.value,
        "source": q.source,
        "stem_plain": q.stem_plain,
        "options": [
            {
                "source": o.source,
                "plain": o.plain,
                "correct": o.correct,
                "feedback": o.feedback,
                "grading_action": (
                    {"kind": o.grading_action.kind.value, "points": str(o.grading_action.points)}
                    if o.grading_action
                    else None
                ),
            }
            for o in q.options
        ],
        "fib_solution": q.fib_solution,
        "objectives": [list(p) for p in q.objectives],
        "preconditions": [list(p) for p in q.preconditions],
        "used_modules": list(q.used_modules),
        "review_status": q.review_status.value,
    }


def with_status(q: QuizQuestion, status: ReviewStatus) -> QuizQuestion:
    return replace(q, review_status=status)
