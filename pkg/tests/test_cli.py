"""CLI verbs over a temp data dir, driven through the click runner."""

from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

from quizgen.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def invoke(runner, tmp_path, *args, **kwargs):
    result = runner.invoke(
        main, ["--data-dir", str(tmp_path / "data"), *args], catch_exceptions=False, **kwargs
    )
    return result


@pytest.fixture()
def ingested(runner, tmp_path, corpus_manifest):
    result = invoke(runner, tmp_path, "ingest", str(corpus_manifest))
    assert result.exit_code == 0, result.output
    return json.loads(result.output)["corpus_id"]


def generate(runner, tmp_path, fixtures_dir, corpus_id, request_data):
    return invoke(
        runner,
        tmp_path,
        "generate",
        "--corpus",
        corpus_id,
        "--concept",
        request_data["concepts"][0],
        "--course",
        request_data["course_name"],
        "--description",
        request_data["course_description"],
        "--dimension",
        request_data["cognitive_dimension"],
        "--difficulty",
        request_data["difficulty"],
        "-n",
        str(request_data["n_questions"]),
        "--types",
        "mc,sc,fib",
        "--granularity",
        request_data["granularity"],
        "--budget",
        str(request_data["token_budget"]),
        "--replay-dir",
        str(fixtures_dir / "replay" / "arc_session"),
    )


@pytest.fixture()
def request_data(fixtures_dir):
    return json.loads((fixtures_dir / "replay" / "request.json").read_text(encoding="utf-8"))


class TestCli:
    def test_ingest_prints_summary(self, runner, tmp_path, corpus_manifest):
        result = invoke(runner, tmp_path, "ingest", str(corpus_manifest))
        assert result.exit_code == 0
        summary = json.loads(result.output)
        assert summary["top_level_sections"] == 6

    def test_symbols(self, runner, tmp_path, ingested):
        result = invoke(runner, tmp_path, "symbols", ingested, "plus")
        assert result.exit_code == 0
        assert "00-smglom.tex?natarith?plus" in result.output

    def test_generate_via_replay(self, runner, tmp_path, fixtures_dir, ingested, request_data):
        result = generate(runner, tmp_path, fixtures_dir, ingested, request_data)
        assert result.exit_code == 0, result.output
        payload = json.loads(result.output)
        assert len(payload["drafts"]) == 5

    def test_generate_requires_backend_choice(self, runner, tmp_path, ingested, request_data):
        result = invoke(
            runner,
            tmp_path,
            "generate",
            "--corpus",
            ingested,
            "--concept",
            request_data["concepts"][0],
        )
        assert result.exit_code != 0
        assert "backend" in result.output

    def test_validate_exemplar(self, runner, tmp_path, fixtures_dir, ingested):
        result = invoke(
            runner,
            tmp_path,
            "validate",
            str(fixtures_dir / "exemplars" / "mcq.tex"),
            "--corpus",
            ingested,
        )
        assert result.exit_code == 0, result.output
        assert "Pass" in result.output

    def test_validate_flags_defects(self, runner, tmp_path, ingested):
        bad = tmp_path / "bad.tex"
        bad.write_text(
            "\\begin{sproblem}\\usemodule{natarith}\\objective{understand}{ghost}"
            "x\\begin{scb}\\scc[T]{a}\\scc[F,feedback={why not}]{b}\\end{scb}\\end{sproblem}",
            encoding="utf-8",
        )
        result = invoke(runner, tmp_path, "validate", str(bad), "--corpus", ingested)
        assert result.exit_code == 1
        assert "HALLUCINATED_SYMBOL" in result.output

    def test_grade_and_survey_and_report(
        self, runner, tmp_path, fixtures_dir, ingested, request_data
    ):
        generated = generate(runner, tmp_path, fixtures_dir, ingested, request_data)
        drafts = json.loads(generated.output)["drafts"]
        scq = next(d for d in drafts if d["qtype"] == "SingleChoice")

        graded = invoke(runner, tmp_path, "grade", scq["draft_id"], "--select", "0")
        assert graded.exit_code == 0
        assert json.loads(graded.output)["correct"] is True

        exported = invoke(runner, tmp_path, "survey", "export", "--out", str(tmp_path / "inst.json"))
        assert exported.exit_code == 0
        instruments = json.loads((tmp_path / "inst.json").read_text(encoding="utf-8"))
        assert len(instruments) == 5

        responses = tmp_path / "responses.jsonl"
        responses.write_text(
            json.dumps(
                {
                    "question_id": scq["draft_id"],
                    "expert_id": "e1",
                    "difficulty": 3,
                    "ratings": [6, 6, 6, 6, 6, 6],
                    "content_errors": "",
                    "remarks": "",
                }
            )
            + "\n",
            encoding="utf-8",
        )
        imported = invoke(runner, tmp_path, "survey", "import", str(responses))
        assert imported.exit_code == 0

        report = invoke(runner, tmp_path, "report")
        assert report.exit_code == 0
        assert json.loads(report.output)["rated_questions"] == 1

        csv_report = invoke(runner, tmp_path, "report", "--csv")
        assert csv_report.exit_code == 0
        assert csv_report.output.startswith("metric,")

    def test_config_file_supplies_data_dir(self, runner, tmp_path, corpus_manifest):
        config = tmp_path / "conf.json"
        config.write_text(json.dumps({"data_dir": str(tmp_path / "from-config")}), encoding="utf-8")
        result = runner.invoke(
            main,
            ["--config", str(config), "ingest", str(corpus_manifest)],
            catch_exceptions=False,
        )
        assert result.exit_code == 0
        assert (tmp_path / "from-config" / "corpora").is_dir()
