"""Acceptance gate: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines.  Every tolerance is pinned here; no tolerance is deferred.
"""

from __future__ import annotations

import itertools
import json
import time
from fractions import Fraction
from pathlib import Path

import pytest

from quizgen.context import build_context, estimate_tokens
from quizgen.gateway import ReplayBackend
from quizgen.graph import Granularity, build_graph, read_manifest
from quizgen.prompt import ITERATION_CRITERIA, assemble_prompt, load_template
from quizgen.questions import (
    QuestionType,
    StudentResponse,
    extract_prerequisites,
    from_ast,
    grade,
)
from quizgen.service import AppService, extract_fenced_blocks, request_from_dict
from quizgen.stex import parse_text
from quizgen.survey import STATEMENTS, aggregate, load_responses
from quizgen.validation import ERROR_CODES, Verdict, validate

from test_questions import oracle_grade
from test_validator import SEEDED_MUTANTS

TOPIC_SYMBOLS = {
    "Arc Consistency": "10-arc-consistency.tex?arc-consistency?arc-consistency",
    "Alpha-Beta Search": "20-alpha-beta.tex?game-search?alpha-beta-search",
    "Semantics of Propositional Logic": "30-propositional-semantics.tex?prop-semantics?valuation",
    "Syntax of First-Order Logic": "40-fol-syntax.tex?fol-syntax?term",
    "The STRIPS Model": "50-strips.tex?strips?strips-task",
    "The Delete Relaxation": "60-delete-relaxation.tex?delete-relaxation?delete-relaxation",
}


def report_pass(name: str) -> None:
    print(f"\nACCEPTANCE {name}: PASS")


@pytest.fixture(scope="module")
def graph(corpus_manifest):
    return build_graph(read_manifest(corpus_manifest))


@pytest.fixture(scope="module")
def all_fixture_tex(fixtures_dir) -> list[Path]:
    files = []
    for sub in ("corpus", "exemplars", "roundtrip", "known-bad"):
        files.extend(sorted((fixtures_dir / sub).glob("*.tex")))
    return files


@pytest.fixture(scope="module")
def canonical_request(fixtures_dir):
    data = json.loads((fixtures_dir / "replay" / "request.json").read_text(encoding="utf-8"))
    return request_from_dict(data)


def test_parser_round_trip(all_fixture_tex):
    """Every fixture file survives parse -> serialize -> parse, in under 10 s."""
    assert len(all_fixture_tex) >= 25, "fixture corpus must hold at least 25 files"
    started = time.monotonic()
    for path in all_fixture_tex:
        source = path.read_text(encoding="utf-8")
        first = parse_text(source, doc_id=path.name)
        from quizgen.stex import serialize

        rendered = serialize(first)
        second = parse_text(rendered, doc_id=path.name)
        assert first.root.structurally_equal(second.root), f"round-trip failed: {path.name}"
    elapsed = time.monotonic() - started
    assert elapsed < 10.0, f"round-trip suite took {elapsed:.2f}s"
    report_pass(f"parser-round-trip ({len(all_fixture_tex)} files, {elapsed:.2f}s)")


def test_prerequisite_rule(graph):
    """The two-plus-two question yields exactly (remember, plus)."""
    source = (
        "\\begin{sproblem}\\usemodule{arith}"
        "what is 2 \\symref{plus}{added to} 2?"
        "\\begin{scb}\\scc[T]{4}\\scc[F,feedback={count again}]{5}\\end{scb}"
        "\\end{sproblem}"
    )
    questions, rejects = from_ast(parse_text(source), source_text=source)
    assert rejects == []
    pairs, unresolved = extract_prerequisites(questions[0], graph)
    assert pairs == [("remember", "00-smglom.tex?arith?plus")]
    assert unresolved == []
    report_pass("prerequisite-rule")


def _fixture_questions(all_fixture_tex, fixtures_dir):
    sources = [p.read_text(encoding="utf-8") for p in all_fixture_tex]
    # Questions inside the frozen replay session are fixture questions too.
    for record in sorted((fixtures_dir / "replay" / "arc_session").glob("*.json")):
        outcome = json.loads(record.read_text(encoding="utf-8"))["outcome"]
        if outcome["type"] == "text":
            sources.extend(extract_fenced_blocks(outcome["text"]))
    questions = []
    for source in sources:
        try:
            parsed, _ = from_ast(parse_text(source), source_text=source)
        except Exception:
            continue
        questions.extend(parsed)
    return questions


def test_grading_oracle(all_fixture_tex, fixtures_dir):
    """Exhaustive response enumeration agrees with the brute-force oracle."""
    questions = _fixture_questions(all_fixture_tex, fixtures_dir)
    choice_questions = [
        q
        for q in questions
        if q.qtype in (QuestionType.MULTIPLE_CHOICE, QuestionType.SINGLE_CHOICE)
        and len(q.options) <= 4
    ]
    fib_questions = [q for q in questions if q.qtype is QuestionType.FILL_IN_THE_BLANKS]
    assert choice_questions, "fixtures must contain choice questions with <= 4 options"
    assert fib_questions, "fixtures must contain fill-in questions"

    disagreements = 0
    cases = 0
    for q in choice_questions:
        n = len(q.options)
        if q.qtype is QuestionType.MULTIPLE_CHOICE:
            selections = [
                set(combo)
                for r in range(n + 1)
                for combo in itertools.combinations(range(n), r)
            ]
        else:
            selections = [{i} for i in range(n)]
        for selected in selections:
            cases += 1
            got = grade(q, StudentResponse(selected=frozenset(selected)))
            expected = oracle_grade(q, selected, Fraction(1))
            if got != expected:
                disagreements += 1
    assert disagreements == 0, f"{disagreements} of {cases} graded cases disagree with the oracle"

    for q in fib_questions:
        solution = q.fib_solution
        assert grade(q, StudentResponse.fill_in(f"  {solution} ")).correct is True
        assert grade(q, StudentResponse.fill_in(solution)).correct is True
        assert grade(q, StudentResponse.fill_in(solution + ".")).correct is False
        assert grade(q, StudentResponse.fill_in("")).correct is False
    report_pass(
        f"grading-oracle ({len(choice_questions)} choice questions, {cases} cases, "
        f"{len(fib_questions)} fill-in questions)"
    )


def test_validator_seeded_defects(graph, mcq_exemplar_text, scq_exemplar_text, fib_exemplar_text):
    """Each seeded mutant triggers exactly its code; the exemplars pass clean."""
    assert len(SEEDED_MUTANTS) >= 18
    triggered = {}
    for name, factory, allowed, expected in SEEDED_MUTANTS:
        report = validate(factory(), graph, allowed_types=allowed)
        got = [issue.code for issue in report.issues]
        assert got == expected, f"mutant {name}: expected {expected}, got {got}"
        for code in expected:
            triggered.setdefault(code, []).append(name)
    missing = set(ERROR_CODES) - set(triggered)
    assert not missing, f"error codes without a seeded mutant: {missing}"

    for source in (mcq_exemplar_text, scq_exemplar_text, fib_exemplar_text):
        questions, rejects = from_ast(parse_text(source), source_text=source)
        assert not rejects
        report = validate(questions[0], graph)
        assert report.verdict is Verdict.PASS, report.to_dict()
    report_pass(
        f"validator-seeded-defects ({len(SEEDED_MUTANTS)} mutants, "
        f"{len(ERROR_CODES)} error codes, 3 exemplars Pass)"
    )


def test_pipeline_replay_determinism(tmp_path, fixtures_dir, corpus_manifest, canonical_request):
    """Two replayed runs persist byte-identical drafts and transcripts, fast."""
    service = AppService(
        data_dir=tmp_path / "data",
        backend=ReplayBackend(fixtures_dir / "replay" / "arc_session"),
    )
    summary = service.ingest_corpus(corpus_manifest)
    started = time.monotonic()
    first = service.run_generation_pipeline(summary.corpus_id, canonical_request)
    second = service.run_generation_pipeline(summary.corpus_id, canonical_request)
    elapsed = time.monotonic() - started
    assert [d.draft_id for d in first.drafts] == [d.draft_id for d in second.drafts]
    assert len(first.drafts) == 5
    for draft in first.drafts:
        rev1 = service.store.payload_bytes("drafts", draft.draft_id, revision=1)
        rev2 = service.store.payload_bytes("drafts", draft.draft_id, revision=2)
        assert rev1 == rev2, f"draft {draft.draft_id} differs between runs"
    t1 = service.store.payload_bytes("transcripts", first.transcript_ref, revision=1)
    t2 = service.store.payload_bytes("transcripts", second.transcript_ref, revision=2)
    assert t1 == t2, "transcripts differ between runs"
    assert elapsed < 5.0, f"two pipeline runs took {elapsed:.2f}s"
    report_pass(f"pipeline-replay-determinism (5 drafts x 2 runs, {elapsed:.2f}s)")


def test_retrieval_per_topic(graph):
    """Section-level context is exactly the topic section, each entry id-prefixed."""
    top_level = {node.title: node for node in graph.top_level_sections()}
    assert set(TOPIC_SYMBOLS) == set(top_level)
    for title, symbol in TOPIC_SYMBOLS.items():
        bundle = build_context(graph, symbol, Granularity.SECTION, budget=100_000)
        got_ids = [fid for fid, _ in bundle.entries]
        oracle_ids = [
            f.id for f in graph.fragments if f.id in top_level[title].subtree_fragment_ids()
        ]
        assert got_ids == oracle_ids, f"topic {title!r}: {got_ids} != {oracle_ids}"
        rendered = bundle.rendered()
        for fid, text in bundle.entries:
            assert f"{fid}\n{text}" in rendered
    report_pass(f"retrieval-per-topic ({len(TOPIC_SYMBOLS)} topics)")


def test_survey_aggregates(fixtures_dir):
    """The frozen 30-question response set reproduces its reference counts exactly."""
    questions_raw = json.loads(
        (fixtures_dir / "survey" / "expert_panel_questions.json").read_text(encoding="utf-8")
    )
    from quizgen.questions import QuizQuestion

    questions = [
        QuizQuestion(id=q["id"], qtype=QuestionType(q["qtype"]), stem=[]) for q in questions_raw
    ]
    topics = {q["id"]: q["topic"] for q in questions_raw}
    responses = load_responses(
        (fixtures_dir / "survey" / "expert_panel_responses.jsonl").read_text(encoding="utf-8")
    )
    report = aggregate(responses, questions, topics)
    assert report.statement_agreement[STATEMENTS[0]] == (28, 30)
    assert report.statement_agreement[STATEMENTS[1]] == (27, 30)
    assert report.erroneous_questions == 11
    assert report.rated_questions == 30
    assert report.type_distribution == {
        "SingleChoice": 12,
        "MultipleChoice": 18,
        "FillInTheBlanks": 0,
    }
    report_pass("survey-aggregates (FIT 28/30, solvable 27/30, erroneous 11/30, types 12/18/0)")


def test_prompt_snapshot(fixtures_dir, graph, canonical_request):
    """Canonical prompt matches the frozen snapshot byte for byte."""
    snapshot = (fixtures_dir / "prompt" / "canonical_prompt.txt").read_text(encoding="utf-8")
    bundle = build_context(
        graph,
        canonical_request.primary_concept,
        canonical_request.granularity,
        canonical_request.token_budget,
    )
    prompt = assemble_prompt(load_template(), canonical_request, bundle)
    assert prompt == snapshot, "assembled prompt deviates from the frozen snapshot"
    for criterion in ITERATION_CRITERIA:
        assert criterion in prompt, f"iteration criterion missing: {criterion!r}"
    # The embedded multiple-choice exemplar keeps more than one true option.
    assert prompt.count("\\mcc[T]") >= 2
    report_pass(
        f"prompt-snapshot ({len(prompt.encode('utf-8'))} bytes, "
        f"{len(ITERATION_CRITERIA)} iteration criteria)"
    )
