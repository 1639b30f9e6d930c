"""Defect taxonomy checks: each seeded mutant triggers exactly its code."""

from __future__ import annotations

import pytest

from quizgen.graph import build_graph, read_manifest
from quizgen.questions import QuestionType, QuizQuestion, from_ast
from quizgen.stex import parse_text
from quizgen.validation import (
    ERROR_CODES,
    TAXONOMY,
    Severity,
    Verdict,
    check_feedback,
    check_leakage,
    feedback_similarity,
    validate,
    validate_relational,
    validate_structural,
)


@pytest.fixture(scope="module")
def graph(corpus_manifest):
    return build_graph(read_manifest(corpus_manifest))


def question_from(source: str) -> QuizQuestion:
    questions, rejects = from_ast(parse_text(source), source_text=source)
    assert questions, f"fixture question did not parse: {rejects}"
    return questions[0]


def with_flags(source: str, flags: list[bool]) -> QuizQuestion:
    """Parse, then force the correctness flags (bypasses the from_ast gate)."""
    question = question_from(source)
    assert len(flags) == len(question.options)
    for option, flag in zip(question.options, flags):
        option.correct = flag
    return question


def sproblem(body: str) -> str:
    return "\\begin{sproblem}\n" + body + "\n\\end{sproblem}"


BASE_SCQ = sproblem(
    "\\usemodule{natarith}\n"
    "\\objective{understand}{plus}\n"
    "Which statement holds for \\sn{plus}?\n"
    "\\begin{scb}\n"
    "  \\scc[T,feedback={Right, swapping summands changes nothing here.}]"
    "{Swapping the summands keeps the value.}\n"
    "  \\scc[F,feedback={Think again: combining two counts never shrinks either "
    "of them.}]{The value can be smaller than both summands.}\n"
    "\\end{scb}"
)


def fib_question(solution, **overrides) -> QuizQuestion:
    params = dict(
        id="mutant-fib",
        qtype=QuestionType.FILL_IN_THE_BLANKS,
        stem=parse_text("What does combining a count of 2 with a count of 2 give?").root.children,
        fib_solution=solution,
        objectives=[("remember", "plus")],
        used_modules=["natarith"],
    )
    params.update(overrides)
    return QuizQuestion(**params)


# One entry per seeded mutant: (name, question factory, allowed_types, expected codes).
SEEDED_MUTANTS = [
    (
        "missing_objective",
        lambda: question_from(BASE_SCQ.replace("\\objective{understand}{plus}\n", "")),
        None,
        ["MISSING_OBJECTIVE"],
    ),
    (
        "invalid_dimension_objective",
        lambda: question_from(BASE_SCQ.replace("{understand}", "{memorise}")),
        None,
        ["INVALID_DIMENSION"],
    ),
    (
        "invalid_dimension_precondition",
        lambda: question_from(
            BASE_SCQ.replace(
                "\\objective{understand}{plus}",
                "\\objective{understand}{plus}\n\\precondition{recall}{plus}",
            )
        ),
        None,
        ["INVALID_DIMENSION"],
    ),
    (
        "sc_multiple_true",
        lambda: with_flags(BASE_SCQ, [True, True]),
        None,
        ["SC_MULTIPLE_TRUE"],
    ),
    (
        "sc_no_true",
        lambda: with_flags(BASE_SCQ, [False, False]),
        None,
        ["SC_NO_TRUE"],
    ),
    (
        "mc_no_true",
        lambda: with_flags(
            BASE_SCQ.replace("{scb}", "{mcb}").replace("\\scc[", "\\mcc["),
            [False, False],
        ),
        None,
        ["MC_NO_TRUE"],
    ),
    (
        "fib_not_plaintext_backslash",
        lambda: fib_question("\\compose{g,f}"),
        None,
        ["FIB_NOT_PLAINTEXT"],
    ),
    (
        "fib_not_plaintext_braces",
        lambda: fib_question("{4}"),
        None,
        ["FIB_NOT_PLAINTEXT"],
    ),
    (
        "fib_missing_solution",
        lambda: fib_question(None),
        None,
        ["FIB_MISSING_SOLUTION"],
    ),
    (
        "wrong_type",
        lambda: question_from(BASE_SCQ),
        {QuestionType.MULTIPLE_CHOICE},
        ["WRONG_TYPE"],
    ),
    (
        "hallucinated_symbol_objective",
        lambda: question_from(
            BASE_SCQ.replace(
                "\\objective{understand}{plus}", "\\objective{understand}{bijectivity-strength}"
            )
        ),
        None,
        ["HALLUCINATED_SYMBOL"],
    ),
    (
        "hallucinated_symbol_body",
        lambda: question_from(BASE_SCQ.replace("\\sn{plus}", "\\sn{ghost-count}")),
        None,
        ["HALLUCINATED_SYMBOL"],
    ),
    (
        "dangling_usemodule",
        lambda: question_from(
            BASE_SCQ.replace("\\usemodule{natarith}", "\\usemodule{natarith}\n\\usemodule{phantom-module}")
        ),
        None,
        ["DANGLING_USEMODULE"],
    ),
    (
        "answer_leak_marker_correct",
        lambda: question_from(
            BASE_SCQ.replace(
                "{Swapping the summands keeps the value.}",
                "{Swapping the summands keeps the value. (correct)}",
            )
        ),
        None,
        ["ANSWER_LEAK"],
    ),
    (
        "answer_leak_marker_true",
        lambda: question_from(
            BASE_SCQ.replace(
                "{The value can be smaller than both summands.}",
                "{The value can be smaller than both summands. (true)}",
            )
        ),
        None,
        ["ANSWER_LEAK"],
    ),
    (
        "answer_leak_feedback_verbatim",
        lambda: question_from(
            BASE_SCQ.replace(
                "\\scc[F,feedback={Think again: combining two counts never shrinks either "
                "of them.}]{The value can be smaller than both summands.}",
                "\\scc[F,feedback={see the margin note}]{The value can be smaller than "
                "both summands, see the margin note, whatever the counts were.}",
            )
        ),
        None,
        ["ANSWER_LEAK"],
    ),
    (
        "ambiguous_symbol",
        lambda: question_from(
            sproblem(
                "\\usemodule{natarith}\n\\usemodule{arith}\n\\usemodule{bijective}\n"
                "\\objective{understand}{injective}\n"
                "Is \\sn{plus} related to \\sn{injective} maps?\n"
                "\\begin{scb}\n"
                "  \\scc[T,feedback={Right, there is no direct relation.}]{Not directly.}\n"
                "  \\scc[F,feedback={Careful, one is an operation, one a property of maps.}]"
                "{They mean the same thing.}\n"
                "\\end{scb}"
            )
        ),
        None,
        ["AMBIGUOUS_SYMBOL"],
    ),
    (
        "unannotated_term",
        lambda: question_from(
            BASE_SCQ.replace(
                "Which statement holds for \\sn{plus}?",
                "Which statement holds for \\sn{plus}? Addition never shrinks a count.",
            )
        ),
        None,
        ["UNANNOTATED_TERM"],
    ),
    (
        "unannotated_term_spec_example",
        lambda: question_from(
            sproblem(
                "\\usemodule{bijective}\n"
                "\\objective{understand}{bijective}\n"
                "Is every surjective map between finite sets of equal size \\sn{bijective}?\n"
                "\\begin{scb}\n"
                "  \\scc[F,feedback={Careful: it also has to be one-to-one, which equal "
                "finite sizes do force here.}]{Never.}\n"
                "  \\scc[T,feedback={Right, equal finite sizes force one-to-one.}]{Always.}\n"
                "\\end{scb}"
            )
        ),
        None,
        ["UNANNOTATED_TERM"],
    ),
    (
        "missing_feedback",
        lambda: question_from(
            BASE_SCQ.replace(
                "\\scc[F,feedback={Think again: combining two counts never shrinks either "
                "of them.}]",
                "\\scc[F]",
            )
        ),
        None,
        ["MISSING_FEEDBACK"],
    ),
    (
        "uninformative_feedback",
        lambda: question_from(
            BASE_SCQ.replace(
                "\\scc[F,feedback={Think again: combining two counts never shrinks either "
                "of them.}]{The value can be smaller than both summands.}",
                "\\scc[F,feedback={No, it is not the case that the value equals the product "
                "of the summands.}]{The value equals the product of the summands.}",
            )
        ),
        None,
        ["UNINFORMATIVE_FEEDBACK"],
    ),
]


class TestSeededMutants:
    def test_at_least_eighteen_mutants(self):
        assert len(SEEDED_MUTANTS) >= 18

    def test_every_error_code_is_covered(self):
        covered = {code for _, _, _, expected in SEEDED_MUTANTS for code in expected}
        assert set(ERROR_CODES) <= covered

    @pytest.mark.parametrize("name,factory,allowed,expected", SEEDED_MUTANTS, ids=[m[0] for m in SEEDED_MUTANTS])
    def test_mutant_triggers_exactly_its_code(self, graph, name, factory, allowed, expected):
        question = factory()
        report = validate(question, graph, allowed_types=allowed)
        assert [i.code for i in report.issues] == expected

    def test_base_question_is_clean(self, graph):
        report = validate(question_from(BASE_SCQ), graph)
        assert report.verdict is Verdict.PASS
        assert report.issues == ()


class TestExemplarsPass:
    def test_all_three_prompt_exemplars(
        self, graph, mcq_exemplar_text, scq_exemplar_text, fib_exemplar_text
    ):
        for source in (mcq_exemplar_text, scq_exemplar_text, fib_exemplar_text):
            question = question_from(source)
            report = validate(question, graph)
            assert report.verdict is Verdict.PASS, report.to_dict()


class TestScopeLimit:
    def test_content_falsehood_is_not_machine_checked(self, graph, fixtures_dir):
        """A fluently wrong question (denies the antecedent) still passes.

        Every structural and relational check succeeds by design; catching the
        fallacy is the human reviewer's job.  The fixture documents exactly
        this gap.
        """
        source = (fixtures_dir / "known-bad" / "denying-antecedent.tex").read_text(
            encoding="utf-8"
        )
        report = validate(question_from(source), graph)
        assert report.verdict is Verdict.PASS


class TestStructural:
    def test_exemplar_clean(self, graph, mcq_exemplar_text):
        assert validate_structural(question_from(mcq_exemplar_text)) == []

    def test_wrong_type_only_with_request(self, graph):
        q = question_from(BASE_SCQ)
        assert validate_structural(q) == []
        issues = validate_structural(q, {QuestionType.FILL_IN_THE_BLANKS})
        assert [i.code for i in issues] == ["WRONG_TYPE"]


class TestFeedbackSimilarity:
    def test_spec_uninformative_pair(self):
        similarity = feedback_similarity(
            "X implies Y", "No, it is not the case that X implies Y"
        )
        assert similarity >= 0.5

    def test_spec_informative_pair(self):
        similarity = feedback_similarity(
            "If f is injective, so is g", "No, $f$ and $g$ are unrelated"
        )
        assert similarity < 0.5

    def test_missing_feedback_on_distractor(self, graph):
        q = question_from(BASE_SCQ.replace(
            "\\scc[F,feedback={Think again: combining two counts never shrinks either "
            "of them.}]",
            "\\scc[F]",
        ))
        issues = check_feedback(q)
        assert [i.code for i in issues] == ["MISSING_FEEDBACK"]


class TestLeakage:
    def test_marker_hit(self):
        q = question_from(
            sproblem(
                "\\objective{remember}{plus}capital?\n"
                "\\begin{scb}\\scc[T]{Paris (correct)}\\scc[F,feedback={x y z}]{Lyon}\\end{scb}"
            )
        )
        issues = check_leakage(q)
        assert [i.code for i in issues] == ["ANSWER_LEAK"]

    def test_exemplar_clean(self, mcq_exemplar_text):
        assert check_leakage(question_from(mcq_exemplar_text)) == []

    def test_option_equal_to_feedback(self):
        q = question_from(
            sproblem(
                "\\objective{remember}{plus}q?\n"
                "\\begin{scb}\\scc[T]{ok}\\scc[F,feedback={Lyon is not the capital}]"
                "{Lyon is not the capital}\\end{scb}"
            )
        )
        issues = check_leakage(q)
        assert [i.code for i in issues] == ["ANSWER_LEAK"]


class TestComposition:
    def test_error_plus_warning_fails_with_two_issues(self, graph):
        source = BASE_SCQ.replace(
            "\\scc[F,feedback={Think again: combining two counts never shrinks either "
            "of them.}]",
            "\\scc[F]",
        )
        report = validate(with_flags(source, [False, False]), graph)
        assert report.verdict is Verdict.FAIL
        assert len(report.issues) == 2
        assert {i.code for i in report.issues} == {"SC_NO_TRUE", "MISSING_FEEDBACK"}

    def test_warnings_only_pass_with_warnings(self, graph):
        source = BASE_SCQ.replace(
            "Which statement holds for \\sn{plus}?",
            "Which statement holds for \\sn{plus}? Addition never shrinks a count.",
        )
        report = validate(question_from(source), graph)
        assert report.verdict is Verdict.PASS_WITH_WARNINGS

    def test_issue_order_is_stable(self, graph):
        source = BASE_SCQ.replace("{understand}", "{memorise}")
        q = with_flags(source, [False, False])
        first = validate(q, graph)
        second = validate(q, graph)
        assert [i.code for i in first.issues] == [i.code for i in second.issues]
        assert {i.code for i in first.issues} == {"INVALID_DIMENSION", "SC_NO_TRUE"}

    def test_taxonomy_is_closed(self):
        with pytest.raises(ValueError):
            from quizgen.validation import ValidationIssue

            ValidationIssue(code="MADE_UP_CODE", message="nope")

    def test_report_serialization(self, graph):
        report = validate(question_from(BASE_SCQ), graph)
        data = report.to_dict()
        assert data["verdict"] == "Pass"
        assert data["issues"] == []
