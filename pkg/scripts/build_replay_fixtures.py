#!/usr/bin/env python3
"""Regenerate the frozen replay stores and the canonical prompt snapshot.

Four stores cover the session shapes the suite needs: a plain text reply, a
one-round search-tool session, a reply with one corrupted code fence, and a
session that illegally asks for a second tool round.  The canonical request is
written next to the stores (request.json) so tests replay the exact same
exchange bytes.  Run from the repository root:

    python3 scripts/build_replay_fixtures.py
"""

from __future__ import annotations

import json
import shutil
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from quizgen.context import build_context
from quizgen.gateway import (
    ChatExchange,
    CompletionParams,
    Message,
    TOOL_INSTRUCTION,
    exchange_hash,
    render_search_results,
)
from quizgen.graph import Granularity, build_graph, read_manifest
from quizgen.prompt import Difficulty, GenerationRequest, assemble_prompt, load_template
from quizgen.questions import QuestionType
from quizgen.service import request_to_dict

FIXTURES = ROOT / "tests" / "fixtures"
REPLAY = FIXTURES / "replay"
ARC = "10-arc-consistency.tex?arc-consistency?arc-consistency"

SEARCH_QUERIES = ("arc consistency", "constraint network")

QUESTIONS = [
    """\\begin{sproblem}
  \\usemodule{arc-consistency}
  \\objective{understand}{arc-consistency}
  The variable $u$ has \\sn{domain} $\\{2,4\\}$ and $v$ has \\sn{domain}
  $\\{1,3\\}$, with the constraint $u < v$. Which values of $u$ survive a
  \\sn{revise} of $u$ against $v$?
  \\begin{scb}
    \\scc[T,feedback={Right: the partner value $3$ supports $2$, while $4$
      finds no partner above it.}]{Only $2$.}
    \\scc[F,feedback={Compare again: $4$ needs a partner strictly above it,
      and $\\{1,3\\}$ offers none.}]{Only $4$.}
    \\scc[F,feedback={One value does survive; test each against both partner
      values.}]{Both values.}
  \\end{scb}
\\end{sproblem}
""",
    """\\begin{sproblem}
  \\usemodule{arc-consistency}
  \\objective{understand}{arc-consistency}
  Which of the following statements about enforcing \\sr{arc-consistency}{arc
  consistency} hold?
  \\begin{mcb}
    \\mcc[T,feedback={Yes: removing unsupported values never removes a value
      that takes part in any full assignment satisfying the constraints.}]{It
      preserves the set of solutions.}
    \\mcc[F,feedback={Not in general: a network can be arc consistent and
      still have no solution at all.}]{It decides whether a solution exists.}
    \\mcc[T,feedback={Yes, propagation only ever deletes candidate values.}]{It
      never enlarges a \\sn{domain}.}
    \\mcc[F,feedback={Propagation is the cheap part: it runs in polynomial
      time.}]{It requires exponential time in the worst case.}
  \\end{mcb}
\\end{sproblem}
""",
    """\\begin{sproblem}
  \\usemodule{arc-consistency}
  \\objective{understand}{arc-consistency}
  The variable $u$ has \\sn{domain} $\\{1,2,3\\}$, $v$ has \\sn{domain}
  $\\{1,2,3\\}$, and the constraint is $u < v$. After a \\sn{revise} of $u$
  against $v$, how many values remain in the \\sn{domain} of $u$?
  \\fillinsol{2}
\\end{sproblem}
""",
    """\\begin{sproblem}
  \\usemodule{arc-consistency}
  \\objective{understand}{arc-connectivity}
  Suppose propagation shrinks every \\sn{domain} of a
  \\sr{constraint-network}{constraint network} to exactly one value. What
  does that imply?
  \\begin{scb}
    \\scc[T,feedback={Right: every arc keeps only supported values, so the
      unique surviving assignment satisfies every constraint.}]{The remaining
      values form a solution.}
    \\scc[F,feedback={There is nothing left to branch on: every variable
      already has a single candidate value.}]{Search must still branch on
      every variable.}
  \\end{scb}
\\end{sproblem}
""",
    """\\begin{sproblem}
  \\usemodule{arc-consistency}
  \\objective{understand}{revise}
  Which properties hold for the \\sn{revise} operation along a single arc?
  \\begin{mcb}
    \\mcc[T,feedback={Yes, it deletes exactly the values without a supporting
      partner.}]{It removes only unsupported values.}
    \\mcc[T,feedback={Yes: afterwards every remaining value has a partner,
      which is the defining condition.}]{Afterwards the revised variable is
      arc consistent relative to the other one.}
    \\mcc[F,feedback={Other arcs may lose support afterwards, so a queue of
      pending arcs has to be maintained.}]{No other arc ever needs revising
      again.}
  \\end{mcb}
\\end{sproblem}
""",
]

CORRUPT_FENCE = "\\begin{sproblem} this fence never closes its brace { \\end{sproblem}\n"


def fenced(blocks: list[str]) -> str:
    body = "\n\n".join("```\n" + block + "```" for block in blocks)
    return "Here are the requested questions.\n\n" + body + "\n"


def canonical_request() -> GenerationRequest:
    return GenerationRequest(
        concepts=(ARC,),
        course_name="Artificial Intelligence I",
        course_description="Symbolic AI: search, constraint networks, logic, and planning.",
        cognitive_dimension="understand",
        difficulty=Difficulty.MEDIUM,
        n_questions=5,
        allowed_types=frozenset(
            {
                QuestionType.MULTIPLE_CHOICE,
                QuestionType.SINGLE_CHOICE,
                QuestionType.FILL_IN_THE_BLANKS,
            }
        ),
        granularity=Granularity.SECTION,
        token_budget=100_000,
    )


def write_outcome(directory: Path, exchange: ChatExchange, outcome: dict) -> None:
    digest = exchange_hash(exchange)
    record = {"hash": digest, "outcome": outcome}
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"{digest}.json"
    path.write_text(
        json.dumps(record, indent=2, sort_keys=True, ensure_ascii=False) + "\n",
        encoding="utf-8",
    )


def main() -> None:
    graph = build_graph(read_manifest(FIXTURES / "corpus" / "manifest.txt"))
    request = canonical_request()
    template = load_template()
    params = CompletionParams()

    bundle = build_context(graph, ARC, request.granularity, request.token_budget)
    base_prompt = assemble_prompt(template, request, bundle)

    snapshot_dir = FIXTURES / "prompt"
    snapshot_dir.mkdir(parents=True, exist_ok=True)
    (snapshot_dir / "canonical_prompt.txt").write_text(base_prompt, encoding="utf-8")

    first = ChatExchange(
        messages=(Message("user", base_prompt + "\n\n" + TOOL_INSTRUCTION),),
        params=params,
        declare_search_tool=True,
    )
    results_section = render_search_results(graph, SEARCH_QUERIES)
    second = ChatExchange(
        messages=(Message("user", base_prompt + "\n\n" + results_section),),
        params=params,
        declare_search_tool=False,
    )

    if REPLAY.exists():
        shutil.rmtree(REPLAY)

    answer = {"type": "text", "text": fenced(QUESTIONS)}
    corrupted = {
        "type": "text",
        "text": fenced(QUESTIONS[:2] + [CORRUPT_FENCE] + QUESTIONS[3:]),
    }
    search_call = {"type": "call", "name": "search", "arguments": list(SEARCH_QUERIES)}

    write_outcome(REPLAY / "arc_session", first, answer)

    write_outcome(REPLAY / "arc_session_tool", first, search_call)
    write_outcome(REPLAY / "arc_session_tool", second, answer)

    write_outcome(REPLAY / "arc_session_corrupt", first, corrupted)

    write_outcome(REPLAY / "arc_session_loop", first, search_call)
    write_outcome(REPLAY / "arc_session_loop", second, search_call)

    (REPLAY / "request.json").write_text(
        json.dumps(request_to_dict(request), indent=2, sort_keys=True) + "\n",
        encoding="utf-8",
    )
    print(f"replay stores written under {REPLAY}")


if __name__ == "__main__":
    main()
