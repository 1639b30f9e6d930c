"""HTTP JSON API over the application service.

Single-user, local-first: no authentication (an explicit non-goal), permissive
CORS so the browser console can run from a dev server.  Error responses carry
``{"error": {"code", "message"}}``; review rejections attach the validation
report so the console can show it inline.
"""

from __future__ import annotations

from typing import Optional

from fastapi import FastAPI, HTTPException, Query, Response
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from .graph import GraphError, UnknownSymbol
from .prompt import Difficulty, GenerationRequest
from .questions import QuestionType, ReviewStatus, StudentResponse
from .service import (
    AppService,
    EditRejected,
    EmptyOutput,
    QuestionDraft,
    ServiceError,
    UnknownCorpus,
    UnknownDraft,
    question_to_dict,
    request_to_dict,
)
from .gateway import GatewayError, ReplayMiss
from .graph import Granularity
from .survey import ExpertResponse
from .stex import StexSyntaxError


class CorpusBody(BaseModel):
    manifest_path: str


class GenerateBody(BaseModel):
    corpus_id: str
    concepts: list[str] = Field(min_length=1)
    course_name: str
    course_description: str = ""
    cognitive_dimension: str = "understand"
    difficulty: str = "medium"
    n_questions: int = 5
    allowed_types: list[str] = Field(
        default=["MultipleChoice", "SingleChoice", "FillInTheBlanks"]
    )
    granularity: str = "Section"
    token_budget: int = 100_000


class ReviewBody(BaseModel):
    status: str
    edited_source: Optional[str] = None


class GradeBody(BaseModel):
    selected: Optional[list[int]] = None
    typed: Optional[str] = None


class SurveyResponseBody(BaseModel):
    question_id: str
    expert_id: str
    difficulty: int
    ratings: list[int]
    content_errors: str = ""
    remarks: str = ""


def _error(status: int, code: str, message: str, **extra) -> HTTPException:
    return HTTPException(status_code=status, detail={"code": code, "message": message, **extra})


def draft_to_json(service: AppService, draft: QuestionDraft) -> dict:
    return {
        "draft_id": draft.draft_id,
        "corpus_id": draft.corpus_id,
        "topic_tag": draft.topic_tag,
        "transcript_ref": draft.transcript_ref,
        "revision": draft.revision,
        "status": draft.question.review_status.value,
        "verdict": draft.report.verdict.value,
        "report": draft.report.to_dict(),
        "prerequisites": [list(p) for p in draft.prerequisites],
        "unresolved": list(draft.unresolved),
        "question": question_to_dict(draft.question),
        "render": service.render_draft(draft.draft_id, variant="instructor"),
        "request": request_to_dict(draft.request),
    }


def create_app(service: AppService) -> FastAPI:
    app = FastAPI(title="quizgen", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.post("/corpora")
    def ingest_corpus(body: CorpusBody):
        try:
            summary = service.ingest_corpus(body.manifest_path)
        except FileNotFoundError as err:
            raise _error(404, "ManifestNotFound", str(err))
        except (StexSyntaxError, GraphError) as err:
            raise _error(422, type(err).__name__, str(err))
        return summary.to_dict()

    @app.get("/corpora")
    def list_corpora():
        return {"corpora": service.list_corpora()}

    @app.get("/corpora/{corpus_id}/symbols")
    def search_symbols(corpus_id: str, query: str = Query(default="")):
        try:
            return {"symbols": service.search_symbols(corpus_id, query)}
        except UnknownCorpus as err:
            raise _error(404, "UnknownCorpus", str(err))

    @app.post("/generate")
    def generate(body: GenerateBody):
        try:
            request = GenerationRequest(
                concepts=tuple(body.concepts),
                course_name=body.course_name,
                course_description=body.course_description,
                cognitive_dimension=body.cognitive_dimension,
                difficulty=Difficulty(body.difficulty),
                n_questions=body.n_questions,
                allowed_types=frozenset(QuestionType(t) for t in body.allowed_types),
                granularity=Granularity(body.granularity),
                token_budget=body.token_budget,
            )
        except ValueError as err:
            raise _error(422, "InvalidRequest", str(err))
        try:
            result = service.run_generation_pipeline(body.corpus_id, request)
        except UnknownCorpus as err:
            raise _error(404, "UnknownCorpus", str(err))
        except UnknownSymbol as err:
            raise _error(422, "UnknownSymbol", str(err))
        except EmptyOutput as err:
            raise _error(502, "EmptyOutput", str(err))
        except (ReplayMiss, GatewayError) as err:
            raise _error(502, type(err).__name__, str(err))
        return {
            "transcript_ref": result.transcript_ref,
            "drafts": [draft_to_json(service, d) for d in result.drafts],
            "rejects": [
                {"reason": r.reason, "detail": r.detail, "source": r.source}
                for r in result.rejects
            ],
        }

    @app.get("/drafts")
    def list_drafts(status: Optional[str] = Query(default=None)):
        wanted = None
        if status is not None:
            try:
                wanted = ReviewStatus(status)
            except ValueError:
                raise _error(422, "InvalidStatus", f"unknown review status {status!r}")
        drafts = service.list_drafts(status=wanted)
        return {"drafts": [draft_to_json(service, d) for d in drafts]}

    @app.get("/drafts/{draft_id}")
    def get_draft(draft_id: str):
        try:
            draft = service.get_draft(draft_id)
        except UnknownDraft as err:
            raise _error(404, "UnknownDraft", str(err))
        return draft_to_json(service, draft)

    @app.post("/drafts/{draft_id}/review")
    def review_draft(draft_id: str, body: ReviewBody):
        try:
            status = ReviewStatus(body.status)
        except ValueError:
            raise _error(422, "InvalidStatus", f"unknown review status {body.status!r}")
        try:
            draft = service.set_review_status(draft_id, status, edited_source=body.edited_source)
        except UnknownDraft as err:
            raise _error(404, "UnknownDraft", str(err))
        except EditRejected as err:
            raise _error(
                422,
                "EditRejected",
                str(err),
                report=err.report.to_dict() if err.report else None,
            )
        return draft_to_json(service, draft)

    @app.post("/drafts/{draft_id}/grade")
    def grade_draft(draft_id: str, body: GradeBody):
        if (body.selected is None) == (body.typed is None):
            raise _error(422, "ShapeMismatch", "provide exactly one of selected or typed")
        response = (
            StudentResponse(selected=frozenset(body.selected))
            if body.selected is not None
            else StudentResponse(typed=body.typed)
        )
        try:
            result = service.grade_draft(draft_id, response)
        except UnknownDraft as err:
            raise _error(404, "UnknownDraft", str(err))
        except ValueError as err:
            raise _error(422, "ShapeMismatch", str(err))
        return {
            "correct": result.correct,
            "points": str(result.points),
            "triggered_feedback": [
                {"option": index, "feedback": text} for index, text in result.triggered_feedback
            ],
        }

    @app.get("/drafts/{draft_id}/survey")
    def survey_instrument(draft_id: str):
        try:
            return service.survey_instrument(draft_id).to_dict()
        except UnknownDraft as err:
            raise _error(404, "UnknownDraft", str(err))

    @app.post("/survey-responses")
    def add_survey_response(body: SurveyResponseBody):
        try:
            response = ExpertResponse(
                question_id=body.question_id,
                expert_id=body.expert_id,
                difficulty=body.difficulty,
                ratings=tuple(body.ratings),
                content_errors=body.content_errors,
                remarks=body.remarks,
            )
        except ValueError as err:
            raise _error(422, "InvalidResponse", str(err))
        try:
            revision = service.add_survey_response(response)
        except UnknownDraft as err:
            raise _error(404, "UnknownDraft", str(err))
        return {"stored": True, "revision": revision}

    @app.get("/reports/aggregate")
    def aggregate_report(format: str = Query(default="json")):
        report = service.aggregate_report()
        if format == "csv":
            return Response(content=report.to_csv(), media_type="text/csv")
        return report.to_dict()

    return app
