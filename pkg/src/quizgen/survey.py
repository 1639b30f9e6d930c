"""Expert-survey instrument construction and response aggregation."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .graph import KnowledgeGraph
from .prompt import GenerationRequest
from .questions import QuestionType, QuizQuestion, to_render_model

# The six quality statements, in instrument order; the FIT statement leads.
STATEMENTS = (
    "The GQ has a good FIT in terms of teaching material.",
    "The GQ can be solved using the available teaching material.",
    "The task description of the GQ cannot be misinterpreted (is not ambiguous).",
    "The GQ is relevant for the achievement of the specified Learning Objective.",
    "The feedback provided for the answer options of the GQ is helpful.",
    "The structure of the task corresponds to the specified task format.",
)

DIFFICULTY_LABELS = ("Very Difficult", "Difficult", "Medium", "Easy", "Very Easy")
AGREEMENT_LABELS = (
    "Strongly Disagree",
    "Disagree",
    "Somewhat Disagree",
    "Neutral",
    "Somewhat Agree",
    "Agree",
    "Strongly Agree",
)

# A question counts as agreed on a statement when the expert median (ties
# resolved upward) reaches this rating.
AGREEMENT_THRESHOLD = 5


class UnknownQuestionId(KeyError):
    pass


@dataclass(frozen=True)
class SurveyInstrument:
    question_id: str
    context_block: dict
    content_error_field: str
    difficulty_scale: tuple[str, ...]
    statements: tuple[str, ...]
    closing_remarks_field: str

    def to_dict(self) -> dict:
        return {
            "question_id": self.question_id,
            "context_block": self.context_block,
            "content_error_field": self.content_error_field,
            "difficulty_scale": list(self.difficulty_scale),
            "statements": [
                {"text": s, "scale": list(AGREEMENT_LABELS)} for s in self.statements
            ],
            "closing_remarks_field": self.closing_remarks_field,
        }


@dataclass(frozen=True)
class ExpertResponse:
    question_id: str
    expert_id: str
    difficulty: int
    ratings: tuple[int, ...]
    content_errors: str = ""
    remarks: str = ""

    def __post_init__(self):
        if not 1 <= self.difficulty <= 5:
            raise ValueError("difficulty must be in 1..5")
        if len(self.ratings) != len(STATEMENTS):
            raise ValueError(f"exactly {len(STATEMENTS)} ratings are required")
        if any(not 1 <= r <= 7 for r in self.ratings):
            raise ValueError("ratings must be in 1..7")

    def to_dict(self) -> dict:
        return {
            "question_id": self.question_id,
            "expert_id": self.expert_id,
            "difficulty": self.difficulty,
            "ratings": list(self.ratings),
            "content_errors": self.content_errors,
            "remarks": self.remarks,
        }

    @staticmethod
    def from_dict(data: dict) -> "ExpertResponse":
        return ExpertResponse(
            question_id=data["question_id"],
            expert_id=data["expert_id"],
            difficulty=int(data["difficulty"]),
            ratings=tuple(int(r) for r in data["ratings"]),
            content_errors=data.get("content_errors", ""),
            remarks=data.get("remarks", ""),
        )


@dataclass
class AggregateReport:
    total_questions: int
    rated_questions: int
    statement_agreement: dict[str, tuple[int, int]]  # statement -> (agreed, rated)
    erroneous_questions: int
    errors_by_topic: dict[str, int]
    type_distribution: dict[str, int]

    def to_dict(self) -> dict:
        return {
            "total_questions": self.total_questions,
            "rated_questions": self.rated_questions,
            "statement_agreement": {
                s: {"agreed": a, "of": d} for s, (a, d) in self.statement_agreement.items()
            },
            "erroneous_questions": self.erroneous_questions,
            "errors_by_topic": dict(self.errors_by_topic),
            "type_distribution": dict(self.type_distribution),
        }

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer)
        writer.writerow(["metric", "key", "value", "of"])
        writer.writerow(["total_questions", "", self.total_questions, ""])
        writer.writerow(["rated_questions", "", self.rated_questions, ""])
        for statement, (agreed, rated) in self.statement_agreement.items():
            writer.writerow(["statement_agreement", statement, agreed, rated])
        writer.writerow(["erroneous_questions", "", self.erroneous_questions, self.rated_questions])
        for topic, count in sorted(self.errors_by_topic.items()):
            writer.writerow(["errors_by_topic", topic, count, ""])
        for qtype, count in self.type_distribution.items():
            writer.writerow(["type_distribution", qtype, count, self.total_questions])
        return buffer.getvalue()


def build_instrument(
    q: QuizQuestion,
    request: Optional[GenerationRequest] = None,
    graph: Optional[KnowledgeGraph] = None,
) -> SurveyInstrument:
    """Survey form for one generated question: parameters, rendering, scales."""
    parameters: dict = {}
    if request is not None:
        parameters = {
            "concepts": list(request.concepts),
            "course": request.course_name,
            "course_description": request.course_description,
            "cognitive_dimension": request.cognitive_dimension,
            "difficulty": request.difficulty.value,
            "n_questions": request.n_questions,
            "allowed_types": sorted(t.value for t in request.allowed_types),
        }
    return SurveyInstrument(
        question_id=q.id,
        context_block={
            "parameters": parameters,
            "question": to_render_model(q, variant="instructor", graph=graph),
        },
        content_error_field="Please note any content errors you can identify in the question.",
        difficulty_scale=DIFFICULTY_LABELS,
        statements=STATEMENTS,
        closing_remarks_field="Any further irregularities or remarks.",
    )


def _median_high(values: list[int]) -> int:
    ordered = sorted(values)
    return ordered[len(ordered) // 2]


def aggregate(
    responses: Iterable[ExpertResponse],
    questions: Iterable[QuizQuestion],
    topics: Optional[dict[str, str]] = None,
) -> AggregateReport:
    """Fold expert responses into the headline counts.

    A question is agreed on a statement when the expert median rating (ties
    resolved upward) is at least :data:`AGREEMENT_THRESHOLD`; it is erroneous
    when any expert reported content errors.  Denominators are the number of
    distinct rated questions.
    """
    question_list = list(questions)
    by_id = {q.id: q for q in question_list}
    topics = topics or {}

    ratings_by_question: dict[str, list[tuple[int, ...]]] = {}
    errors_by_question: dict[str, bool] = {}
    for response in responses:
        if response.question_id not in by_id:
            raise UnknownQuestionId(response.question_id)
        ratings_by_question.setdefault(response.question_id, []).append(response.ratings)
        has_error = bool(response.content_errors.strip())
        errors_by_question[response.question_id] = (
            errors_by_question.get(response.question_id, False) or has_error
        )

    rated = len(ratings_by_question)
    statement_agreement: dict[str, tuple[int, int]] = {}
    for index, statement in enumerate(STATEMENTS):
        agreed = 0
        for qid, rating_sets in ratings_by_question.items():
            median = _median_high([rs[index] for rs in rating_sets])
            if median >= AGREEMENT_THRESHOLD:
                agreed += 1
        statement_agreement[statement] = (agreed, rated)

    erroneous = sum(1 for flag in errors_by_question.values() if flag)
    errors_by_topic: dict[str, int] = {}
    for qid, flag in errors_by_question.items():
        if flag:
            topic = topics.get(qid, "untagged")
            errors_by_topic[topic] = errors_by_topic.get(topic, 0) + 1

    type_distribution = {t.value: 0 for t in QuestionType}
    for q in question_list:
        type_distribution[q.qtype.value] += 1

    return AggregateReport(
        total_questions=len(question_list),
        rated_questions=rated,
        statement_agreement=statement_agreement,
        erroneous_questions=erroneous,
        errors_by_topic=errors_by_topic,
        type_distribution=type_distribution,
    )


# -- line-delimited JSON interchange (docs/survey-format.md) -------------------


def dump_responses(responses: Iterable[ExpertResponse]) -> str:
    return "".join(json.dumps(r.to_dict(), ensure_ascii=False) + "\n" for r in responses)


def load_responses(text: str) -> list[ExpertResponse]:
    responses = []
    for line in text.splitlines():
        line = line.strip()
        if line:
            responses.append(ExpertResponse.from_dict(json.loads(line)))
    return responses
