#!/usr/bin/env python3
"""Regenerate the frozen survey fixture (30 questions, 3 experts).

The response set is constructed so the aggregate report lands on fixed
reference counts: FIT 28/30, solvable 27/30, 11 erroneous questions, 12 single
choice / 18 multiple choice / 0 fill-in-the-blanks.  Output is deterministic;
run from the repository root:

    python3 scripts/build_survey_fixture.py
"""

from __future__ import annotations

import json
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "survey"

TOPICS = (
    "arc-consistency",
    "alpha-beta-search",
    "propositional-semantics",
    "fol-syntax",
    "strips",
    "delete-relaxation",
)

# Per-topic counts of questions whose content an expert flagged as erroneous
# (errors concentrate on arc consistency and propositional semantics).
ERRORS_BY_TOPIC = {
    "arc-consistency": 3,
    "alpha-beta-search": 1,
    "propositional-semantics": 3,
    "fol-syntax": 1,
    "strips": 2,
    "delete-relaxation": 1,
}

# Questions that failed to reach agreement, per statement index:
# 0 FIT, 1 solvable, 2 unambiguous, 3 relevant, 4 feedback helpful, 5 format.
DISAGREE = {
    0: {"arc-consistency-q2", "propositional-semantics-q4"},
    1: {"arc-consistency-q2", "strips-q1", "delete-relaxation-q3"},
    2: {"arc-consistency-q4", "propositional-semantics-q2", "fol-syntax-q3", "strips-q4"},
    3: {"alpha-beta-search-q5", "propositional-semantics-q4"},
    4: set(),  # filled below: feedback quality was mixed, 15 of 30 agree
    5: set(),
}

EXPERTS = ("expert-1", "expert-2", "expert-3")

AGREE_RATINGS = (6, 5, 6)  # median 6
DISAGREE_RATINGS = (3, 4, 2)  # median 3


def main() -> None:
    questions = []
    for topic in TOPICS:
        for i in range(1, 6):
            qtype = "SingleChoice" if i <= 2 else "MultipleChoice"
            questions.append({"id": f"{topic}-q{i}", "qtype": qtype, "topic": topic})

    # Feedback helpfulness: agree on q1/q2 of every topic plus q3 of the first
    # three topics (15 total), disagree elsewhere.
    feedback_agree = {f"{t}-q{i}" for t in TOPICS for i in (1, 2)}
    feedback_agree |= {f"{t}-q3" for t in TOPICS[:3]}
    DISAGREE[4] = {q["id"] for q in questions} - feedback_agree

    erroneous: set[str] = set()
    for topic, count in ERRORS_BY_TOPIC.items():
        for i in range(1, count + 1):
            erroneous.add(f"{topic}-q{i}")

    responses = []
    for q in questions:
        qid = q["id"]
        for expert_index, expert in enumerate(EXPERTS):
            ratings = []
            for statement_index in range(6):
                if qid in DISAGREE[statement_index]:
                    ratings.append(DISAGREE_RATINGS[expert_index])
                else:
                    ratings.append(AGREE_RATINGS[expert_index])
            content_errors = ""
            if expert == "expert-2" and qid in erroneous:
                content_errors = "Content error: one answer option misstates the concept."
            responses.append(
                {
                    "question_id": qid,
                    "expert_id": expert,
                    "difficulty": 3,
                    "ratings": ratings,
                    "content_errors": content_errors,
                    "remarks": "",
                }
            )

    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / "expert_panel_questions.json").write_text(
        json.dumps(questions, indent=2) + "\n", encoding="utf-8"
    )
    (OUT / "expert_panel_responses.jsonl").write_text(
        "".join(json.dumps(r) + "\n" for r in responses), encoding="utf-8"
    )
    print(f"wrote {len(questions)} questions, {len(responses)} responses to {OUT}")


if __name__ == "__main__":
    main()
