"""End-to-end pipeline orchestration and persistence.

Wires the parser, graph, prompt, gateway, question model, and validator into
the generate -> validate -> review loop, with every artifact persisted through
the record store.  Draft and transcript ids are derived from the request
content, so replayed runs land on the same records.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Optional

from .gateway import Backend, CompletionParams, run_generation_session
from .graph import Granularity, KnowledgeGraph, UnknownSymbol, build_graph, read_manifest
from .prompt import Difficulty, GenerationRequest, MasterPromptTemplate, load_template
from .questions import (
    QuestionReject,
    QuestionType,
    QuizQuestion,
    ReviewStatus,
    StudentResponse,
    extract_prerequisites,
    from_ast,
    grade,
    question_to_dict,
    to_render_model,
)
from .stex import SourceDocument, StexSyntaxError, parse_text
from .store import Store, UnknownRecord
from .survey import ExpertResponse, aggregate, build_instrument
from .validation import TAXONOMY, ValidationIssue, ValidationReport, validate

_FENCE = re.compile(r"```[^\n]*\n(.*?)```", re.DOTALL)

# from_ast reject reasons that map onto validator codes for edit reports.
_REJECT_CODES = {
    "SingleChoiceMultipleTrue": "SC_MULTIPLE_TRUE",
    "SingleChoiceNoTrue": "SC_NO_TRUE",
    "MultiChoiceNoTrue": "MC_NO_TRUE",
    "FillInNotPlaintext": "FIB_NOT_PLAINTEXT",
    "FillInMissingSolution": "FIB_MISSING_SOLUTION",
}


class ServiceError(Exception):
    pass


class UnknownDraft(ServiceError):
    pass


class UnknownCorpus(ServiceError):
    pass


class EmptyOutput(ServiceError):
    """No code fence in the model output parsed to any question."""


class EditRejected(ServiceError):
    def __init__(self, message: str, report: Optional[ValidationReport] = None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class CorpusSummary:
    corpus_id: str
    documents: int
    modules: int
    symbols: int
    fragments: int
    top_level_sections: int

    def to_dict(self) -> dict:
        return {
            "corpus_id": self.corpus_id,
            "documents": self.documents,
            "modules": self.modules,
            "symbols": self.symbols,
            "fragments": self.fragments,
            "top_level_sections": self.top_level_sections,
        }


@dataclass
class QuestionDraft:
    draft_id: str
    corpus_id: str
    question: QuizQuestion
    report: ValidationReport
    prerequisites: list[tuple[str, str]]
    unresolved: list[str]
    transcript_ref: str
    topic_tag: str
    request: GenerationRequest
    revision: int = 1


@dataclass
class PipelineResult:
    drafts: list[QuestionDraft]
    rejects: list[QuestionReject]
    transcript_ref: str


def request_to_dict(request: GenerationRequest) -> dict:
    return {
        "concepts": list(request.concepts),
        "course_name": request.course_name,
        "course_description": request.course_description,
        "cognitive_dimension": request.cognitive_dimension,
        "difficulty": request.difficulty.value,
        "n_questions": request.n_questions,
        "allowed_types": sorted(t.value for t in request.allowed_types),
        "granularity": request.granularity.value,
        "token_budget": request.token_budget,
    }


def request_from_dict(data: dict) -> GenerationRequest:
    return GenerationRequest(
        concepts=tuple(data["concepts"]),
        course_name=data["course_name"],
        course_description=data["course_description"],
        cognitive_dimension=data["cognitive_dimension"],
        difficulty=Difficulty(data["difficulty"]),
        n_questions=int(data["n_questions"]),
        allowed_types=frozenset(QuestionType(t) for t in data["allowed_types"]),
        granularity=Granularity(data["granularity"]),
        token_budget=int(data["token_budget"]),
    )


def request_digest(corpus_id: str, request: GenerationRequest) -> str:
    canonical = json.dumps(
        {"corpus": corpus_id, "request": request_to_dict(request)}, sort_keys=True
    )
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:12]


def extract_fenced_blocks(output: str) -> list[str]:
    return [m.group(1) for m in _FENCE.finditer(output)]


def question_from_source(source: str, qid: str) -> QuizQuestion:
    """Re-hydrate a persisted question from its markup."""
    ast = parse_text(source, doc_id=qid)
    questions, rejects = from_ast(ast, source_text=source)
    if not questions:
        detail = rejects[0].reason if rejects else "no problem found"
        raise ServiceError(f"persisted source for {qid} no longer parses: {detail}")
    return replace(questions[0], id=qid)


class AppService:
    def __init__(
        self,
        data_dir: str | Path,
        backend: Optional[Backend] = None,
        template: Optional[MasterPromptTemplate] = None,
        params: CompletionParams = CompletionParams(),
        enable_search_tool: bool = True,
    ):
        self.store = Store(data_dir)
        self.backend = backend
        self.template = template or load_template()
        self.params = params
        self.enable_search_tool = enable_search_tool
        self._graphs: dict[str, KnowledgeGraph] = {}

    # -- corpora -------------------------------------------------------------

    def ingest_corpus(self, manifest_path: str | Path) -> CorpusSummary:
        docs = read_manifest(manifest_path)
        graph = build_graph(docs)
        digest = hashlib.sha256(
            json.dumps([[d.doc_id, d.text] for d in docs], sort_keys=True).encode("utf-8")
        ).hexdigest()[:12]
        summary = CorpusSummary(corpus_id=digest, **graph.summary())
        payload = {
            "manifest": [d.doc_id for d in docs],
            "documents": {d.doc_id: d.text for d in docs},
            "summary": summary.to_dict(),
        }
        self.store.put("corpora", digest, payload)
        self._graphs[digest] = graph
        return summary

    def list_corpora(self) -> list[str]:
        return self.store.list_ids("corpora")

    def get_graph(self, corpus_id: str) -> KnowledgeGraph:
        if corpus_id in self._graphs:
            return self._graphs[corpus_id]
        try:
            record = self.store.get("corpora", corpus_id)
        except UnknownRecord:
            raise UnknownCorpus(corpus_id) from None
        docs = [
            SourceDocument(doc_id=doc_id, text=record.payload["documents"][doc_id])
            for doc_id in record.payload["manifest"]
        ]
        graph = build_graph(docs)
        self._graphs[corpus_id] = graph
        return graph

    def search_symbols(self, corpus_id: str, query: str) -> list[dict]:
        graph = self.get_graph(corpus_id)
        return [
            {"uri": info.id.uri, "name": info.name, "module": info.module_uri}
            for info in graph.symbol_search(query)
        ]

    # -- generation pipeline ---------------------------------------------------

    def run_generation_pipeline(self, corpus_id: str, request: GenerationRequest) -> PipelineResult:
        """generate -> split -> parse -> extract -> validate -> persist."""
        if self.backend is None:
            raise ServiceError("no completion backend configured")
        graph = self.get_graph(corpus_id)
        for concept in request.concepts:
            if concept not in graph.symbols:
                raise UnknownSymbol(concept)

        session = run_generation_session(
            request,
            graph,
            self.backend,
            template=self.template,
            params=self.params,
            enable_search_tool=self.enable_search_tool,
        )

        digest = request_digest(corpus_id, request)
        transcript_ref = f"{digest}-session"
        topic_tag = request.primary_concept.rsplit("?", 1)[-1]

        drafts: list[QuestionDraft] = []
        rejects: list[QuestionReject] = []
        counter = 0
        for block in extract_fenced_blocks(session.output):
            try:
                ast = parse_text(block, doc_id=transcript_ref)
            except StexSyntaxError as err:
                rejects.append(
                    QuestionReject(reason="ParseError", detail=str(err), source=block)
                )
                continue
            questions, block_rejects = from_ast(ast, source_text=block)
            rejects.extend(block_rejects)
            for question in questions:
                counter += 1
                draft_id = f"{digest}-q{counter}"
                question = replace(question, id=draft_id)
                prerequisites, unresolved = extract_prerequisites(question, graph)
                report = validate(question, graph, allowed_types=set(request.allowed_types))
                report = ValidationReport(question_id=draft_id, issues=report.issues)
                drafts.append(
                    QuestionDraft(
                        draft_id=draft_id,
                        corpus_id=corpus_id,
                        question=question,
                        report=report,
                        prerequisites=prerequisites,
                        unresolved=unresolved,
                        transcript_ref=transcript_ref,
                        topic_tag=topic_tag,
                        request=request,
                    )
                )

        if not drafts:
            raise EmptyOutput("no code fence parsed to a question")

        self.store.put(
            "transcripts",
            transcript_ref,
            {
                "transcript": session.transcript,
                "prompt": session.prompt,
                "output": session.output,
                "rejects": [
                    {"reason": r.reason, "detail": r.detail, "source": r.source} for r in rejects
                ],
            },
        )
        for draft in drafts:
            draft.revision = self.store.put("drafts", draft.draft_id, self._draft_payload(draft))
        return PipelineResult(drafts=drafts, rejects=rejects, transcript_ref=transcript_ref)

    # -- drafts ----------------------------------------------------------------

    def _draft_payload(self, draft: QuestionDraft) -> dict:
        return {
            "draft_id": draft.draft_id,
            "corpus_id": draft.corpus_id,
            "topic_tag": draft.topic_tag,
            "transcript_ref": draft.transcript_ref,
            "question": question_to_dict(draft.question),
            "report": draft.report.to_dict(),
            "prerequisites": [list(p) for p in draft.prerequisites],
            "unresolved": list(draft.unresolved),
            "request": request_to_dict(draft.request),
        }

    def _draft_from_record(self, record) -> QuestionDraft:
        payload = record.payload
        question = question_from_source(payload["question"]["source"], payload["draft_id"])
        question = replace(
            question, review_status=ReviewStatus(payload["question"]["review_status"])
        )
        issues = tuple(
            ValidationIssue(
                code=i["code"],
                message=i["message"],
                span=tuple(i["span"]) if i.get("span") else None,
            )
            for i in payload["report"]["issues"]
        )
        return QuestionDraft(
            draft_id=payload["draft_id"],
            corpus_id=payload["corpus_id"],
            question=question,
            report=ValidationReport(question_id=payload["draft_id"], issues=issues),
            prerequisites=[tuple(p) for p in payload["prerequisites"]],
            unresolved=list(payload["unresolved"]),
            transcript_ref=payload["transcript_ref"],
            topic_tag=payload["topic_tag"],
            request=request_from_dict(payload["request"]),
            revision=record.revision,
        )

    def get_draft(self, draft_id: str) -> QuestionDraft:
        try:
            record = self.store.get("drafts", draft_id)
        except UnknownRecord:
            raise UnknownDraft(draft_id) from None
        return self._draft_from_record(record)

    def list_drafts(self, status: Optional[ReviewStatus] = None) -> list[QuestionDraft]:
        drafts = [self.get_draft(draft_id) for draft_id in self.store.list_ids("drafts")]
        if status is not None:
            drafts = [d for d in drafts if d.question.review_status is status]
        return drafts

    def set_review_status(
        self,
        draft_id: str,
        status: ReviewStatus,
        edited_source: Optional[str] = None,
    ) -> QuestionDraft:
        """Apply a review decision; Edited re-parses and re-validates the source.

        Raises :class:`EditRejected` when the edited source does not parse or
        fails structural validation; the stored draft is never deleted, each
        decision lands in a fresh revision.
        """
        draft = self.get_draft(draft_id)
        graph = self.get_graph(draft.corpus_id)

        if status is ReviewStatus.EDITED:
            if edited_source is None:
                raise EditRejected("Edited review requires edited_source")
            try:
                ast = parse_text(edited_source, doc_id=draft_id)
            except StexSyntaxError as err:
                raise EditRejected(f"edited source does not parse: {err}") from err
            questions, rejects = from_ast(ast, source_text=edited_source)
            if rejects:
                issues = []
                for reject in rejects:
                    code = _REJECT_CODES.get(reject.reason)
                    if code is not None:
                        issues.append(ValidationIssue(code=code, message=reject.detail))
                report = ValidationReport(question_id=draft_id, issues=tuple(issues))
                raise EditRejected(
                    f"edited source is malformed: {rejects[0].reason}", report=report
                )
            if len(questions) != 1:
                raise EditRejected(f"edited source must contain exactly one question, got {len(questions)}")
            question = replace(questions[0], id=draft_id, review_status=ReviewStatus.EDITED)
            from .validation import Severity, validate_structural

            structural = validate_structural(question, set(draft.request.allowed_types))
            structural_errors = [i for i in structural if i.severity is Severity.ERROR]
            if structural_errors:
                report = ValidationReport(question_id=draft_id, issues=tuple(structural_errors))
                raise EditRejected("edited source fails structural validation", report=report)
            prerequisites, unresolved = extract_prerequisites(question, graph)
            report = validate(question, graph, allowed_types=set(draft.request.allowed_types))
            report = ValidationReport(question_id=draft_id, issues=report.issues)
            draft.question = question
            draft.report = report
            draft.prerequisites = prerequisites
            draft.unresolved = unresolved
        else:
            draft.question = replace(draft.question, review_status=status)

        draft.revision = self.store.put("drafts", draft_id, self._draft_payload(draft))
        return draft

    # -- grading and survey ------------------------------------------------------

    def grade_draft(self, draft_id: str, response: StudentResponse):
        draft = self.get_draft(draft_id)
        return grade(draft.question, response)

    def survey_instrument(self, draft_id: str):
        draft = self.get_draft(draft_id)
        graph = self.get_graph(draft.corpus_id)
        return build_instrument(draft.question, draft.request, graph)

    def add_survey_response(self, response: ExpertResponse) -> int:
        if not self.store.exists("drafts", response.question_id):
            raise UnknownDraft(response.question_id)
        record_id = f"{response.question_id}@{response.expert_id}"
        return self.store.put("survey_responses", record_id, response.to_dict())

    def survey_responses(self) -> list[ExpertResponse]:
        responses = []
        for record_id in self.store.list_ids("survey_responses"):
            record = self.store.get("survey_responses", record_id)
            responses.append(ExpertResponse.from_dict(record.payload))
        return responses

    def aggregate_report(self):
        drafts = self.list_drafts()
        questions = [d.question for d in drafts]
        topics = {d.draft_id: d.topic_tag for d in drafts}
        return aggregate(self.survey_responses(), questions, topics)

    # -- rendering ----------------------------------------------------------------

    def render_draft(self, draft_id: str, variant: str = "instructor") -> dict:
        draft = self.get_draft(draft_id)
        graph = self.get_graph(draft.corpus_id)
        return to_render_model(draft.question, variant=variant, graph=graph)
