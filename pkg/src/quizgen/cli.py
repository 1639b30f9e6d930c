"""Command-line interface mirroring the HTTP API verbs.

Configuration precedence: command-line flags, then QUIZGEN_* environment
variables, then the JSON config file (--config, QUIZGEN_CONFIG, or
./quizgen.json), then built-in defaults.
"""

from __future__ import annotations

import json
import os
import sys
from pathlib import Path
from typing import Optional

import click

from .gateway import LiveBackend, RecordingBackend, ReplayBackend
from .graph import Granularity
from .prompt import Difficulty, GenerationRequest
from .questions import QuestionType, ReviewStatus, StudentResponse, from_ast
from .service import AppService, question_to_dict, request_to_dict
from .stex import StexSyntaxError, parse_text
from .survey import load_responses
from .validation import validate

_TYPE_ALIASES = {
    "mc": QuestionType.MULTIPLE_CHOICE,
    "sc": QuestionType.SINGLE_CHOICE,
    "fib": QuestionType.FILL_IN_THE_BLANKS,
    "multiplechoice": QuestionType.MULTIPLE_CHOICE,
    "singlechoice": QuestionType.SINGLE_CHOICE,
    "fillintheblanks": QuestionType.FILL_IN_THE_BLANKS,
}

DEFAULT_DATA_DIR = "./quizgen-data"


def _load_config(path: Optional[str]) -> dict:
    candidate = path or ("quizgen.json" if os.path.exists("quizgen.json") else None)
    if candidate is None:
        return {}
    return json.loads(Path(candidate).read_text(encoding="utf-8"))


@click.group()
@click.option("--config", envvar="QUIZGEN_CONFIG", default=None, help="JSON config file.")
@click.option("--data-dir", envvar="QUIZGEN_DATA_DIR", default=None, help="Record store root.")
@click.pass_context
def main(ctx: click.Context, config: Optional[str], data_dir: Optional[str]):
    """Course-grounded quiz generation toolkit."""
    cfg = _load_config(config)
    ctx.obj = {
        "config": cfg,
        "data_dir": data_dir or cfg.get("data_dir") or DEFAULT_DATA_DIR,
    }


def _service(ctx: click.Context, backend=None) -> AppService:
    return AppService(data_dir=ctx.obj["data_dir"], backend=backend)


@main.command()
@click.argument("manifest", type=click.Path(exists=True))
@click.pass_context
def ingest(ctx: click.Context, manifest: str):
    """Parse a corpus manifest and persist its knowledge graph."""
    summary = _service(ctx).ingest_corpus(manifest)
    click.echo(json.dumps(summary.to_dict(), indent=2))


@main.command()
@click.argument("corpus_id")
@click.argument("query", default="")
@click.pass_context
def symbols(ctx: click.Context, corpus_id: str, query: str):
    """Search symbols of an ingested corpus."""
    for row in _service(ctx).search_symbols(corpus_id, query):
        click.echo(f"{row['uri']}\t{row['name']}")


@main.command()
@click.option("--corpus", "corpus_id", required=True)
@click.option("--concept", "concepts", multiple=True, required=True, help="Symbol URI; repeatable.")
@click.option("--course", default="", help="Course name.")
@click.option("--description", default="", help="Short course description.")
@click.option(
    "--dimension",
    type=click.Choice(["remember", "understand", "apply", "analyze", "evaluate", "create"]),
    default="understand",
)
@click.option("--difficulty", type=click.Choice(["easy", "medium", "hard"]), default="medium")
@click.option("-n", "--n-questions", type=click.IntRange(1, 5), default=5)
@click.option("--types", default="mc,sc,fib", help="Comma list of mc, sc, fib.")
@click.option(
    "--granularity", type=click.Choice(["Chapter", "Section", "Subsection"]), default="Section"
)
@click.option("--budget", type=int, default=100_000, help="Context token budget.")
@click.option("--replay-dir", envvar="QUIZGEN_REPLAY_DIR", default=None, help="Replay store directory (offline).")
@click.option("--live", is_flag=True, help="Use the live HTTP backend (QUIZGEN_LLM_* env vars).")
@click.option("--record-dir", default=None, help="Record live outcomes into this replay store.")
@click.pass_context
def generate(
    ctx: click.Context,
    corpus_id: str,
    concepts: tuple[str, ...],
    course: str,
    description: str,
    dimension: str,
    difficulty: str,
    n_questions: int,
    types: str,
    granularity: str,
    budget: int,
    replay_dir: Optional[str],
    live: bool,
    record_dir: Optional[str],
):
    """Run the full generation pipeline and persist the drafts."""
    cfg = ctx.obj["config"]
    replay_dir = replay_dir or cfg.get("replay_dir")
    if live:
        backend = LiveBackend()
        if record_dir:
            backend = RecordingBackend(backend, record_dir)
    elif replay_dir:
        backend = ReplayBackend(replay_dir)
    else:
        raise click.UsageError("choose a backend: --replay-dir for offline, or --live to opt in")

    try:
        allowed = frozenset(_TYPE_ALIASES[t.strip().lower()] for t in types.split(",") if t.strip())
    except KeyError as err:
        raise click.UsageError(f"unknown question type {err.args[0]!r}")

    request = GenerationRequest(
        concepts=tuple(concepts),
        course_name=course,
        course_description=description,
        cognitive_dimension=dimension,
        difficulty=Difficulty(difficulty),
        n_questions=n_questions,
        allowed_types=allowed,
        granularity=Granularity(granularity),
        token_budget=budget,
    )
    result = _service(ctx, backend=backend).run_generation_pipeline(corpus_id, request)
    payload = {
        "transcript_ref": result.transcript_ref,
        "drafts": [
            {
                "draft_id": d.draft_id,
                "verdict": d.report.verdict.value,
                "qtype": d.question.qtype.value,
                "issues": [i.code for i in d.report.issues],
            }
            for d in result.drafts
        ],
        "rejects": [{"reason": r.reason, "detail": r.detail} for r in result.rejects],
    }
    click.echo(json.dumps(payload, indent=2))


@main.command("validate")
@click.argument("tex_file", type=click.Path(exists=True))
@click.option("--corpus", "corpus_id", required=True)
@click.pass_context
def validate_cmd(ctx: click.Context, tex_file: str, corpus_id: str):
    """Validate every question in a .tex file against a corpus graph."""
    service = _service(ctx)
    graph = service.get_graph(corpus_id)
    source = Path(tex_file).read_text(encoding="utf-8")
    try:
        ast = parse_text(source, doc_id=tex_file)
    except StexSyntaxError as err:
        click.echo(f"parse error: {err}", err=True)
        sys.exit(2)
    questions, rejects = from_ast(ast, source_text=source)
    failed = False
    for reject in rejects:
        failed = True
        click.echo(f"REJECT {reject.reason}: {reject.detail}")
    for question in questions:
        report = validate(question, graph)
        click.echo(f"{question.id}: {report.verdict.value}")
        for issue in report.issues:
            click.echo(f"  {issue.severity.value}: {issue.code} - {issue.message}")
        if report.verdict.value == "Fail":
            failed = True
    sys.exit(1 if failed else 0)


@main.command()
@click.argument("draft_id")
@click.option("--select", "selected", multiple=True, type=int, help="Chosen option index; repeatable.")
@click.option("--typed", default=None, help="Typed answer for fill-in questions.")
@click.pass_context
def grade(ctx: click.Context, draft_id: str, selected: tuple[int, ...], typed: Optional[str]):
    """Autograde a response against a persisted draft."""
    if (len(selected) > 0) == (typed is not None):
        raise click.UsageError("provide either --select indices or --typed text")
    response = (
        StudentResponse(selected=frozenset(selected)) if selected else StudentResponse(typed=typed)
    )
    result = _service(ctx).grade_draft(draft_id, response)
    click.echo(
        json.dumps(
            {
                "correct": result.correct,
                "points": str(result.points),
                "triggered_feedback": [
                    {"option": i, "feedback": t} for i, t in result.triggered_feedback
                ],
            },
            indent=2,
        )
    )


@main.group()
def survey():
    """Expert-survey import and export."""


@survey.command("export")
@click.option("--out", type=click.Path(), default=None, help="Write instruments to this file.")
@click.pass_context
def survey_export(ctx: click.Context, out: Optional[str]):
    """Export a survey instrument for every persisted draft."""
    service = _service(ctx)
    instruments = [
        service.survey_instrument(draft.draft_id).to_dict() for draft in service.list_drafts()
    ]
    text = json.dumps(instruments, indent=2, ensure_ascii=False)
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
        click.echo(f"wrote {len(instruments)} instruments to {out}")
    else:
        click.echo(text)


@survey.command("import")
@click.argument("jsonl_file", type=click.Path(exists=True))
@click.pass_context
def survey_import(ctx: click.Context, jsonl_file: str):
    """Import expert responses (line-delimited JSON, see docs/survey-format.md)."""
    service = _service(ctx)
    responses = load_responses(Path(jsonl_file).read_text(encoding="utf-8"))
    for response in responses:
        service.add_survey_response(response)
    click.echo(f"imported {len(responses)} responses")


@main.command()
@click.option("--csv", "as_csv", is_flag=True, help="Emit CSV instead of JSON.")
@click.pass_context
def report(ctx: click.Context, as_csv: bool):
    """Aggregate survey responses over all drafts."""
    aggregate_report = _service(ctx).aggregate_report()
    if as_csv:
        click.echo(aggregate_report.to_csv(), nl=False)
    else:
        click.echo(json.dumps(aggregate_report.to_dict(), indent=2))


@main.command()
@click.option("--host", envvar="QUIZGEN_HOST", default="127.0.0.1")
@click.option("--port", envvar="QUIZGEN_PORT", type=int, default=8321)
@click.option("--replay-dir", envvar="QUIZGEN_REPLAY_DIR", default=None)
@click.option("--live", is_flag=True, help="Serve with the live LLM backend.")
@click.pass_context
def serve(ctx: click.Context, host: str, port: int, replay_dir: Optional[str], live: bool):
    """Run the HTTP API for the instructor console."""
    import uvicorn

    from .api import create_app

    cfg = ctx.obj["config"]
    replay_dir = replay_dir or cfg.get("replay_dir")
    backend = None
    if live:
        backend = LiveBackend()
    elif replay_dir:
        backend = ReplayBackend(replay_dir)
    service = AppService(data_dir=ctx.obj["data_dir"], backend=backend)
    uvicorn.run(create_app(service), host=host, port=port)


if __name__ == "__main__":
    main()
