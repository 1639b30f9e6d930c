// Generated by scripts/build_frontend_fixture.py from the replayed
// arc-consistency session; payload shapes match the HTTP API exactly.
export const FIXTURES = {
  "corpus_id": "08bee5bb3678",
  "drafts": [
    {
      "corpus_id": "08bee5bb3678",
      "draft_id": "dcf5d30014dc-q1",
      "prerequisites": [
        [
          "remember",
          "10-arc-consistency.tex?arc-consistency?revise"
        ],
        [
          "remember",
          "10-arc-consistency.tex?csp?domain"
        ]
      ],
      "question": {
        "fib_solution": null,
        "id": "dcf5d30014dc-q1",
        "objectives": [
          [
            "understand",
            "arc-consistency"
          ]
        ],
        "options": [
          {
            "correct": true,
            "feedback": "Right: the partner value $3$ supports $2$, while $4$\n      finds no partner above it.",
            "grading_action": null,
            "plain": "Only 2.",
            "source": "Only $2$."
          },
          {
            "correct": false,
            "feedback": "Compare again: $4$ needs a partner strictly above it,\n      and $\\{1,3\\}$ offers none.",
            "grading_action": null,
            "plain": "Only 4.",
            "source": "Only $4$."
          },
          {
            "correct": false,
            "feedback": "One value does survive; test each against both partner\n      values.",
            "grading_action": null,
            "plain": "Both values.",
            "source": "Both values."
          }
        ],
        "preconditions": [],
        "qtype": "SingleChoice",
        "review_status": "Draft",
        "source": "\\begin{sproblem}\n  \\usemodule{arc-consistency}\n  \\objective{understand}{arc-consistency}\n  The variable $u$ has \\sn{domain} $\\{2,4\\}$ and $v$ has \\sn{domain}\n  $\\{1,3\\}$, with the constraint $u < v$. Which values of $u$ survive a\n  \\sn{revise} of $u$ against $v$?\n  \\begin{scb}\n    \\scc[T,feedback={Right: the partner value $3$ supports $2$, while $4$\n      finds no partner above it.}]{Only $2$.}\n    \\scc[F,feedback={Compare again: $4$ needs a partner strictly above it,\n      and $\\{1,3\\}$ offers none.}]{Only $4$.}\n    \\scc[F,feedback={One value does survive; test each against both partner\n      values.}]{Both values.}\n  \\end{scb}\n\\end{sproblem}",
        "stem_plain": "\n  \n  \n  The variable u has domain \\{2,4\\} and v has domain\n  \\{1,3\\}, with the constraint u < v. Which values of u survive a\n  revise of u against v?\n  \n",
        "used_modules": [
          "arc-consistency"
        ]
      },
      "render": {
        "id": "dcf5d30014dc-q1",
        "objectives": [
          [
            "understand",
            "arc-consistency"
          ]
        ],
        "options": [
          {
            "correct": true,
            "feedback": "Right: the partner value $3$ supports $2$, while $4$\n      finds no partner above it.",
            "text": [
              {
                "html": "Only ",
                "type": "text"
              },
              {
                "tex": "2",
                "type": "math"
              },
              {
                "html": ".",
                "type": "text"
              }
            ]
          },
          {
            "correct": false,
            "feedback": "Compare again: $4$ needs a partner strictly above it,\n      and $\\{1,3\\}$ offers none.",
            "text": [
              {
                "html": "Only ",
                "type": "text"
              },
              {
                "tex": "4",
                "type": "math"
              },
              {
                "html": ".",
                "type": "text"
              }
            ]
          },
          {
            "correct": false,
            "feedback": "One value does survive; test each against both partner\n      values.",
            "text": [
              {
                "html": "Both values.",
                "type": "text"
              }
            ]
          }
        ],
        "preconditions": [],
        "qtype": "SingleChoice",
        "review_status": "Draft",
        "stem": [
          {
            "html": "\n  ",
            "type": "text"
          },
          {
            "html": "\n  ",
            "type": "text"
          },
          {
            "html": "\n  The variable ",
            "type": "text"
          },
          {
            "tex": "u",
            "type": "math"
          },
          {
            "html": " has ",
            "type": "text"
          },
          {
            "symbol": "10-arc-consistency.tex?csp?domain",
            "type": "symref",
            "verbalization": "domain"
          },
          {
            "html": " ",
            "type": "text"
          },
          {
            "tex": "\\{2,4\\}",
            "type": "math"
          },
          {
            "html": " and ",
            "type": "text"
          },
          {
            "tex": "v",
            "type": "math"
          },
          {
            "html": " has ",
            "type": "text"
          },
          {
            "symbol": "10-arc-consistency.tex?csp?domain",
            "type": "symref",
            "verbalization": "domain"
          },
          {
            "html": "\n  ",
            "type": "text"
          },
          {
            "tex": "\\{1,3\\}",
            "type": "math"
          },
          {
            "html": ", with the constraint ",
            "type": "text"
          },
          {
            "tex": "u < v",
            "type": "math"
          },
          {
            "html": ". Which values of ",
            "type": "text"
          },
          {
            "tex": "u",
            "type": "math"
          },
          {
            "html": " survive a\n  ",
            "type": "text"
          },
          {
            "symbol": "10-arc-consistency.tex?arc-consistency?revise",
            "type": "symref",
            "verbalization": "revise"
          },
          {
            "html": " of ",
            "type": "text"
          },
          {
            "tex": "u",
            "type": "math"
          },
          {
            "html": " against ",
            "type": "text"
          },
          {
            "tex": "v",
            "type": "math"
          },
          {
            "html": "?\n  ",
            "type": "text"
          },
          {
            "html": "\n",
            "type": "text"
          }
        ],
        "used_modules": [
          "arc-consistency"
        ],
        "variant": "instructor"
      },
      "report": {
        "issues": [],
        "question_id": "dcf5d30014dc-q1",
        "verdict": "Pass"
      },
      "request": {
        "allowed_types": [
          "FillInTheBlanks",
          "MultipleChoice",
          "SingleChoice"
        ],
        "cognitive_dimension": "understand",
        "concepts": [
          "10-arc-consistency.tex?arc-consistency?arc-consistency"
        ],
        "course_description": "Symbolic AI: search, constraint networks, logic, and planning.",
        "course_name": "Artificial Intelligence I",
        "difficulty": "medium",
        "granularity": "Section",
        "n_questions": 5,
        "token_budget": 100000
      },
      "revision": 1,
      "status": "Draft",
      "topic_tag": "arc-consistency",
      "transcript_ref": "dcf5d30014dc-session",
      "unresolved": [],
      "verdict": "Pass"
    },
    {
      "corpus_id": "08bee5bb3678",
      "draft_id": "dcf5d30014dc-q2",
      "prerequisites": [
        [
          "remember",
          "10-arc-consistency.tex?arc-consistency?arc-consistency"
        ],
        [
          "remember",
          "10-arc-consistency.tex?csp?domain"
        ]
      ],
      "question": {
        "fib_solution": null,
        "id": "dcf5d30014dc-q2",
        "objectives": [
          [
            "understand",
            "arc-consistency"
          ]
        ],
        "options": [
          {
            "correct": true,
            "feedback": "Yes: removing unsupported values never removes a value\n      that takes part in any full assignment satisfying the constraints.",
            "grading_action": null,
            "plain": "It\n      preserves the set of solutions.",
            "source": "It\n      preserves the set of solutions."
          },
          {
            "correct": false,
            "feedback": "Not in general: a network can be arc consistent and\n      still have no solution at all.",
            "grading_action": null,
            "plain": "It decides whether a solution exists.",
            "source": "It decides whether a solution exists."
          },
          {
            "correct": true,
            "feedback": "Yes, propagation only ever deletes candidate values.",
            "grading_action": null,
            "plain": "It\n      never enlarges a domain.",
            "source": "It\n      never enlarges a \\sn{domain}."
          },
          {
            "correct": false,
            "feedback": "Propagation is the cheap part: it runs in polynomial\n      time.",
            "grading_action": null,
            "plain": "It requires exponential time in the worst case.",
            "source": "It requires exponential time in the worst case."
          }
        ],
        "preconditions": [],
        "qtype": "MultipleChoice",
        "review_status": "Draft",
        "source": "\\begin{sproblem}\n  \\usemodule{arc-consistency}\n  \\objective{understand}{arc-consistency}\n  Which of the following statements about enforcing \\sr{arc-consistency}{arc\n  consistency} hold?\n  \\begin{mcb}\n    \\mcc[T,feedback={Yes: removing unsupported values never removes a value\n      that takes part in any full assignment satisfying the constraints.}]{It\n      preserves the set of solutions.}\n    \\mcc[F,feedback={Not in general: a network can be arc consistent and\n      still have no solution at all.}]{It decides whether a solution exists.}\n    \\mcc[T,feedback={Yes, propagation only ever deletes candidate values.}]{It\n      never enlarges a \\sn{domain}.}\n    \\mcc[F,feedback={Propagation is the cheap part: it runs in polynomial\n      time.}]{It requires exponential time in the worst case.}\n  \\end{mcb}\n\\end{sproblem}",
        "stem_plain": "\n  \n  \n  Which of the following statements about enforcing arc\n  consistency hold?\n  \n",
        "used_modules": [
          "arc-consistency"
        ]
      },
      "render": {
        "id": "dcf5d30014dc-q2",
        "objectives": [
          [
            "understand",
            "arc-consistency"
          ]
        ],
        "options": [
          {
            "correct": true,
            "feedback": "Yes: removing unsupported values never removes a value\n      that takes part in any full assignment satisfying the constraints.",
            "text": [
              {
                "html": "It\n      preserves the set of solutions.",
                "type": "text"
              }
            ]
          },
          {
            "correct": false,
            "feedback": "Not in general: a network can be arc consistent and\n      still have no solution at all.",
            "text": [
              {
                "html": "It decides whether a solution exists.",
                "type": "text"
              }
            ]
          },
          {
            "correct": true,
            "feedback": "Yes, propagation only ever deletes candidate values.",
            "text": [
              {
                "html": "It\n      never enlarges a ",
                "type": "text"
              },
              {
                "symbol": "10-arc-consistency.tex?csp?domain",
                "type": "symref",
                "verbalization": "domain"
              },
              {
                "html": ".",
                "type": "text"
              }
            ]
          },
          {
            "correct": false,
            "feedback": "Propagation is the cheap part: it runs in polynomial\n      time.",
            "text": [
              {
                "html": "It requires exponential time in the worst case.",
                "type": "text"
              }
            ]
          }
        ],
        "preconditions": [],
        "qtype": "MultipleChoice",
        "review_status": "Draft",
        "stem": [
          {
            "html": "\n  ",
            "type": "text"
          },
          {
            "html": "\n  ",
            "type": "text"
          },
          {
            "html": "\n  Which of the following statements about enforcing ",
            "type": "text"
          },
          {
            "symbol": "10-arc-consistency.tex?arc-consistency?arc-consistency",
            "type": "symref",
            "verbalization": "arc\n  consistency"
          },
          {
            "html": " hold?\n  ",
            "type": "text"
          },
          {
            "html": "\n",
            "type": "text"
          }
        ],
        "used_modules": [
          "arc-consistency"
        ],
        "variant": "instructor"
      },
      "report": {
        "issues": [],
        "question_id": "dcf5d30014dc-q2",
        "verdict": "Pass"
      },
      "request": {
        "allowed_types": [
          "FillInTheBlanks",
          "MultipleChoice",
          "SingleChoice"
        ],
        "cognitive_dimension": "understand",
        "concepts": [
          "10-arc-consistency.tex?arc-consistency?arc-consistency"
        ],
        "course_description": "Symbolic AI: search, constraint networks, logic, and planning.",
        "course_name": "Artificial Intelligence I",
        "difficulty": "medium",
        "granularity": "Section",
        "n_questions": 5,
        "token_budget": 100000
      },
      "revision": 1,
      "status": "Draft",
      "topic_tag": "arc-consistency",
      "transcript_ref": "dcf5d30014dc-session",
      "unresolved": [],
      "verdict": "Pass"
    },
    {
      "corpus_id": "08bee5bb3678",
      "draft_id": "dcf5d30014dc-q3",
      "prerequisites": [
        [
          "remember",
          "10-arc-consistency.tex?arc-consistency?revise"
        ],
        [
          "remember",
          "10-arc-consistency.tex?csp?domain"
        ]
      ],
      "question": {
        "fib_solution": "2",
        "id": "dcf5d30014dc-q3",
        "objectives": [
          [
            "understand",
            "arc-consistency"
          ]
        ],
        "options": [],
        "preconditions": [],
        "qtype": "FillInTheBlanks",
        "review_status": "Draft",
        "source": "\\begin{sproblem}\n  \\usemodule{arc-consistency}\n  \\objective{understand}{arc-consistency}\n  The variable $u$ has \\sn{domain} $\\{1,2,3\\}$, $v$ has \\sn{domain}\n  $\\{1,2,3\\}$, and the constraint is $u < v$. After a \\sn{revise} of $u$\n  against $v$, how many values remain in the \\sn{domain} of $u$?\n  \\fillinsol{2}\n\\end{sproblem}",
        "stem_plain": "\n  \n  \n  The variable u has domain \\{1,2,3\\}, v has domain\n  \\{1,2,3\\}, and the constraint is u < v. After a revise of u\n  against v, how many values remain in the domain of u?\n  _____\n",
        "used_modules": [
          "arc-consistency"
        ]
      },
      "render": {
        "fib_solution": "2",
        "id": "dcf5d30014dc-q3",
        "objectives": [
          [
            "understand",
            "arc-consistency"
          ]
        ],
        "options": [],
        "preconditions": [],
        "qtype": "FillInTheBlanks",
        "review_status": "Draft",
        "stem": [
          {
            "html": "\n  ",
            "type": "text"
          },
          {
            "html": "\n  ",
            "type": "text"
          },
          {
            "html": "\n  The variable ",
            "type": "text"
          },
          {
            "tex": "u",
            "type": "math"
          },
          {
            "html": " has ",
            "type": "text"
          },
          {
            "symbol": "10-arc-consistency.tex?csp?domain",
            "type": "symref",
            "verbalization": "domain"
          },
          {
            "html": " ",
            "type": "text"
          },
          {
            "tex": "\\{1,2,3\\}",
            "type": "math"
          },
          {
            "html": ", ",
            "type": "text"
          },
          {
            "tex": "v",
            "type": "math"
          },
          {
            "html": " has ",
            "type": "text"
          },
          {
            "symbol": "10-arc-consistency.tex?csp?domain",
            "type": "symref",
            "verbalization": "domain"
          },
          {
            "html": "\n  ",
            "type": "text"
          },
          {
            "tex": "\\{1,2,3\\}",
            "type": "math"
          },
          {
            "html": ", and the constraint is ",
            "type": "text"
          },
          {
            "tex": "u < v",
            "type": "math"
          },
          {
            "html": ". After a ",
            "type": "text"
          },
          {
            "symbol": "10-arc-consistency.tex?arc-consistency?revise",
            "type": "symref",
            "verbalization": "revise"
          },
          {
            "html": " of ",
            "type": "text"
          },
          {
            "tex": "u",
            "type": "math"
          },
          {
            "html": "\n  against ",
            "type": "text"
          },
          {
            "tex": "v",
            "type": "math"
          },
          {
            "html": ", how many values remain in the ",
            "type": "text"
          },
          {
            "symbol": "10-arc-consistency.tex?csp?domain",
            "type": "symref",
            "verbalization": "domain"
          },
          {
            "html": " of ",
            "type": "text"
          },
          {
            "tex": "u",
            "type": "math"
          },
          {
            "html": "?\n  ",
            "type": "text"
          },
          {
            "type": "blank"
          },
          {
            "html": "\n",
            "type": "text"
          }
        ],
        "used_modules": [
          "arc-consistency"
        ],
        "variant": "instructor"
      },
      "report": {
        "issues": [],
        "question_id": "dcf5d30014dc-q3",
        "verdict": "Pass"
      },
      "request": {
        "allowed_types": [
          "FillInTheBlanks",
          "MultipleChoice",
          "SingleChoice"
        ],
        "cognitive_dimension": "understand",
        "concepts": [
          "10-arc-consistency.tex?arc-consistency?arc-consistency"
        ],
        "course_description": "Symbolic AI: search, constraint networks, logic, and planning.",
        "course_name": "Artificial Intelligence I",
        "difficulty": "medium",
        "granularity": "Section",
        "n_questions": 5,
        "token_budget": 100000
      },
      "revision": 1,
      "status": "Draft",
      "topic_tag": "arc-consistency",
      "transcript_ref": "dcf5d30014dc-session",
      "unresolved": [],
      "verdict": "Pass"
    },
    {
      "corpus_id": "08bee5bb3678",
      "draft_id": "dcf5d30014dc-q4",
      "prerequisites": [
        [
          "remember",
          "10-arc-consistency.tex?csp?constraint-network"
        ],
        [
          "remember",
          "10-arc-consistency.tex?csp?domain"
        ]
      ],
      "question": {
        "fib_solution": null,
        "id": "dcf5d30014dc-q4",
        "objectives": [
          [
            "understand",
            "arc-connectivity"
          ]
        ],
        "options": [
          {
            "correct": true,
            "feedback": "Right: every arc keeps only supported values, so the\n      unique surviving assignment satisfies every constraint.",
            "grading_action": null,
            "plain": "The remaining\n      values form a solution.",
            "source": "The remaining\n      values form a solution."
          },
          {
            "correct": false,
            "feedback": "There is nothing left to branch on: every variable\n      already has a single candidate value.",
            "grading_action": null,
            "plain": "Search must still branch on\n      every variable.",
            "source": "Search must still branch on\n      every variable."
          }
        ],
        "preconditions": [],
        "qtype": "SingleChoice",
        "review_status": "Draft",
        "source": "\\begin{sproblem}\n  \\usemodule{arc-consistency}\n  \\objective{understand}{arc-connectivity}\n  Suppose propagation shrinks every \\sn{domain} of a\n  \\sr{constraint-network}{constraint network} to exactly one value. What\n  does that imply?\n  \\begin{scb}\n    \\scc[T,feedback={Right: every arc keeps only supported values, so the\n      unique surviving assignment satisfies every constraint.}]{The remaining\n      values form a solution.}\n    \\scc[F,feedback={There is nothing left to branch on: every variable\n      already has a single candidate value.}]{Search must still branch on\n      every variable.}\n  \\end{scb}\n\\end{sproblem}",
        "stem_plain": "\n  \n  \n  Suppose propagation shrinks every domain of a\n  constraint network to exactly one value. What\n  does that imply?\n  \n",
        "used_modules": [
          "arc-consistency"
        ]
      },
      "render": {
        "id": "dcf5d30014dc-q4",
        "objectives": [
          [
            "understand",
            "arc-connectivity"
          ]
        ],
        "options": [
          {
            "correct": true,
            "feedback": "Right: every arc keeps only supported values, so the\n      unique surviving assignment satisfies every constraint.",
            "text": [
              {
                "html": "The remaining\n      values form a solution.",
                "type": "text"
              }
            ]
          },
          {
            "correct": false,
            "feedback": "There is nothing left to branch on: every variable\n      already has a single candidate value.",
            "text": [
              {
                "html": "Search must still branch on\n      every variable.",
                "type": "text"
              }
            ]
          }
        ],
        "preconditions": [],
        "qtype": "SingleChoice",
        "review_status": "Draft",
        "stem": [
          {
            "html": "\n  ",
            "type": "text"
          },
          {
            "html": "\n  ",
            "type": "text"
          },
          {
            "html": "\n  Suppose propagation shrinks every ",
            "type": "text"
          },
          {
            "symbol": "10-arc-consistency.tex?csp?domain",
            "type": "symref",
            "verbalization": "domain"
          },
          {
            "html": " of a\n  ",
            "type": "text"
          },
          {
            "symbol": "10-arc-consistency.tex?csp?constraint-network",
            "type": "symref",
            "verbalization": "constraint network"
          },
          {
            "html": " to exactly one value. What\n  does that imply?\n  ",
            "type": "text"
          },
          {
            "html": "\n",
            "type": "text"
          }
        ],
        "used_modules": [
          "arc-consistency"
        ],
        "variant": "instructor"
      },
      "report": {
        "issues": [
          {
            "category": "Relational",
            "code": "HALLUCINATED_SYMBOL",
            "message": "symbol 'arc-connectivity' (objective) does not resolve in the question's modules",
            "severity": "Error",
            "span": null
          }
        ],
        "question_id": "dcf5d30014dc-q4",
        "verdict": "Fail"
      },
      "request": {
        "allowed_types": [
          "FillInTheBlanks",
          "MultipleChoice",
          "SingleChoice"
        ],
        "cognitive_dimension": "understand",
        "concepts": [
          "10-arc-consistency.tex?arc-consistency?arc-consistency"
        ],
        "course_description": "Symbolic AI: search, constraint networks, logic, and planning.",
        "course_name": "Artificial Intelligence I",
        "difficulty": "medium",
        "granularity": "Section",
        "n_questions": 5,
        "token_budget": 100000
      },
      "revision": 1,
      "status": "Draft",
      "topic_tag": "arc-consistency",
      "transcript_ref": "dcf5d30014dc-session",
      "unresolved": [],
      "verdict": "Fail"
    },
    {
      "corpus_id": "08bee5bb3678",
      "draft_id": "dcf5d30014dc-q5",
      "prerequisites": [
        [
          "remember",
          "10-arc-consistency.tex?arc-consistency?revise"
        ]
      ],
      "question": {
        "fib_solution": null,
        "id": "dcf5d30014dc-q5",
        "objectives": [
          [
            "understand",
            "revise"
          ]
        ],
        "options": [
          {
            "correct": true,
            "feedback": "Yes, it deletes exactly the values without a supporting\n      partner.",
            "grading_action": null,
            "plain": "It removes only unsupported values.",
            "source": "It removes only unsupported values."
          },
          {
            "correct": true,
            "feedback": "Yes: afterwards every remaining value has a partner,\n      which is the defining condition.",
            "grading_action": null,
            "plain": "Afterwards the revised variable is\n      arc consistent relative to the other one.",
            "source": "Afterwards the revised variable is\n      arc consistent relative to the other one."
          },
          {
            "correct": false,
            "feedback": "Other arcs may lose support afterwards, so a queue of\n      pending arcs has to be maintained.",
            "grading_action": null,
            "plain": "No other arc ever needs revising\n      again.",
            "source": "No other arc ever needs revising\n      again."
          }
        ],
        "preconditions": [],
        "qtype": "MultipleChoice",
        "review_status": "Draft",
        "source": "\\begin{sproblem}\n  \\usemodule{arc-consistency}\n  \\objective{understand}{revise}\n  Which properties hold for the \\sn{revise} operation along a single arc?\n  \\begin{mcb}\n    \\mcc[T,feedback={Yes, it deletes exactly the values without a supporting\n      partner.}]{It removes only unsupported values.}\n    \\mcc[T,feedback={Yes: afterwards every remaining value has a partner,\n      which is the defining condition.}]{Afterwards the revised variable is\n      arc consistent relative to the other one.}\n    \\mcc[F,feedback={Other arcs may lose support afterwards, so a queue of\n      pending arcs has to be maintained.}]{No other arc ever needs revising\n      again.}\n  \\end{mcb}\n\\end{sproblem}",
        "stem_plain": "\n  \n  \n  Which properties hold for the revise operation along a single arc?\n  \n",
        "used_modules": [
          "arc-consistency"
        ]
      },
      "render": {
        "id": "dcf5d30014dc-q5",
        "objectives": [
          [
            "understand",
            "revise"
          ]
        ],
        "options": [
          {
            "correct": true,
            "feedback": "Yes, it deletes exactly the values without a supporting\n      partner.",
            "text": [
              {
                "html": "It removes only unsupported values.",
                "type": "text"
              }
            ]
          },
          {
            "correct": true,
            "feedback": "Yes: afterwards every remaining value has a partner,\n      which is the defining condition.",
            "text": [
              {
                "html": "Afterwards the revised variable is\n      arc consistent relative to the other one.",
                "type": "text"
              }
            ]
          },
          {
            "correct": false,
            "feedback": "Other arcs may lose support afterwards, so a queue of\n      pending arcs has to be maintained.",
            "text": [
              {
                "html": "No other arc ever needs revising\n      again.",
                "type": "text"
              }
            ]
          }
        ],
        "preconditions": [],
        "qtype": "MultipleChoice",
        "review_status": "Draft",
        "stem": [
          {
            "html": "\n  ",
            "type": "text"
          },
          {
            "html": "\n  ",
            "type": "text"
          },
          {
            "html": "\n  Which properties hold for the ",
            "type": "text"
          },
          {
            "symbol": "10-arc-consistency.tex?arc-consistency?revise",
            "type": "symref",
            "verbalization": "revise"
          },
          {
            "html": " operation along a single arc?\n  ",
            "type": "text"
          },
          {
            "html": "\n",
            "type": "text"
          }
        ],
        "used_modules": [
          "arc-consistency"
        ],
        "variant": "instructor"
      },
      "report": {
        "issues": [],
        "question_id": "dcf5d30014dc-q5",
        "verdict": "Pass"
      },
      "request": {
        "allowed_types": [
          "FillInTheBlanks",
          "MultipleChoice",
          "SingleChoice"
        ],
        "cognitive_dimension": "understand",
        "concepts": [
          "10-arc-consistency.tex?arc-consistency?arc-consistency"
        ],
        "course_description": "Symbolic AI: search, constraint networks, logic, and planning.",
        "course_name": "Artificial Intelligence I",
        "difficulty": "medium",
        "granularity": "Section",
        "n_questions": 5,
        "token_budget": 100000
      },
      "revision": 1,
      "status": "Draft",
      "topic_tag": "arc-consistency",
      "transcript_ref": "dcf5d30014dc-session",
      "unresolved": [],
      "verdict": "Pass"
    }
  ],
  "instrument": {
    "closing_remarks_field": "Any further irregularities or remarks.",
    "content_error_field": "Please note any content errors you can identify in the question.",
    "context_block": {
      "parameters": {
        "allowed_types": [
          "FillInTheBlanks",
          "MultipleChoice",
          "SingleChoice"
        ],
        "cognitive_dimension": "understand",
        "concepts": [
          "10-arc-consistency.tex?arc-consistency?arc-consistency"
        ],
        "course": "Artificial Intelligence I",
        "course_description": "Symbolic AI: search, constraint networks, logic, and planning.",
        "difficulty": "medium",
        "n_questions": 5
      },
      "question": {
        "id": "dcf5d30014dc-q1",
        "objectives": [
          [
            "understand",
            "arc-consistency"
          ]
        ],
        "options": [
          {
            "correct": true,
            "feedback": "Right: the partner value $3$ supports $2$, while $4$\n      finds no partner above it.",
            "text": [
              {
                "html": "Only ",
                "type": "text"
              },
              {
                "tex": "2",
                "type": "math"
              },
              {
                "html": ".",
                "type": "text"
              }
            ]
          },
          {
            "correct": false,
            "feedback": "Compare again: $4$ needs a partner strictly above it,\n      and $\\{1,3\\}$ offers none.",
            "text": [
              {
                "html": "Only ",
                "type": "text"
              },
              {
                "tex": "4",
                "type": "math"
              },
              {
                "html": ".",
                "type": "text"
              }
            ]
          },
          {
            "correct": false,
            "feedback": "One value does survive; test each against both partner\n      values.",
            "text": [
              {
                "html": "Both values.",
                "type": "text"
              }
            ]
          }
        ],
        "preconditions": [],
        "qtype": "SingleChoice",
        "review_status": "Draft",
        "stem": [
          {
            "html": "\n  ",
            "type": "text"
          },
          {
            "html": "\n  ",
            "type": "text"
          },
          {
            "html": "\n  The variable ",
            "type": "text"
          },
          {
            "tex": "u",
            "type": "math"
          },
          {
            "html": " has ",
            "type": "text"
          },
          {
            "symbol": "10-arc-consistency.tex?csp?domain",
            "type": "symref",
            "verbalization": "domain"
          },
          {
            "html": " ",
            "type": "text"
          },
          {
            "tex": "\\{2,4\\}",
            "type": "math"
          },
          {
            "html": " and ",
            "type": "text"
          },
          {
            "tex": "v",
            "type": "math"
          },
          {
            "html": " has ",
            "type": "text"
          },
          {
            "symbol": "10-arc-consistency.tex?csp?domain",
            "type": "symref",
            "verbalization": "domain"
          },
          {
            "html": "\n  ",
            "type": "text"
          },
          {
            "tex": "\\{1,3\\}",
            "type": "math"
          },
          {
            "html": ", with the constraint ",
            "type": "text"
          },
          {
            "tex": "u < v",
            "type": "math"
          },
          {
            "html": ". Which values of ",
            "type": "text"
          },
          {
            "tex": "u",
            "type": "math"
          },
          {
            "html": " survive a\n  ",
            "type": "text"
          },
          {
            "symbol": "10-arc-consistency.tex?arc-consistency?revise",
            "type": "symref",
            "verbalization": "revise"
          },
          {
            "html": " of ",
            "type": "text"
          },
          {
            "tex": "u",
            "type": "math"
          },
          {
            "html": " against ",
            "type": "text"
          },
          {
            "tex": "v",
            "type": "math"
          },
          {
            "html": "?\n  ",
            "type": "text"
          },
          {
            "html": "\n",
            "type": "text"
          }
        ],
        "used_modules": [
          "arc-consistency"
        ],
        "variant": "instructor"
      }
    },
    "difficulty_scale": [
      "Very Difficult",
      "Difficult",
      "Medium",
      "Easy",
      "Very Easy"
    ],
    "question_id": "dcf5d30014dc-q1",
    "statements": [
      {
        "scale": [
          "Strongly Disagree",
          "Disagree",
          "Somewhat Disagree",
          "Neutral",
          "Somewhat Agree",
          "Agree",
          "Strongly Agree"
        ],
        "text": "The GQ has a good FIT in terms of teaching material."
      },
      {
        "scale": [
          "Strongly Disagree",
          "Disagree",
          "Somewhat Disagree",
          "Neutral",
          "Somewhat Agree",
          "Agree",
          "Strongly Agree"
        ],
        "text": "The GQ can be solved using the available teaching material."
      },
      {
        "scale": [
          "Strongly Disagree",
          "Disagree",
          "Somewhat Disagree",
          "Neutral",
          "Somewhat Agree",
          "Agree",
          "Strongly Agree"
        ],
        "text": "The task description of the GQ cannot be misinterpreted (is not ambiguous)."
      },
      {
        "scale": [
          "Strongly Disagree",
          "Disagree",
          "Somewhat Disagree",
          "Neutral",
          "Somewhat Agree",
          "Agree",
          "Strongly Agree"
        ],
        "text": "The GQ is relevant for the achievement of the specified Learning Objective."
      },
      {
        "scale": [
          "Strongly Disagree",
          "Disagree",
          "Somewhat Disagree",
          "Neutral",
          "Somewhat Agree",
          "Agree",
          "Strongly Agree"
        ],
        "text": "The feedback provided for the answer options of the GQ is helpful."
      },
      {
        "scale": [
          "Strongly Disagree",
          "Disagree",
          "Somewhat Disagree",
          "Neutral",
          "Somewhat Agree",
          "Agree",
          "Strongly Agree"
        ],
        "text": "The structure of the task corresponds to the specified task format."
      }
    ]
  },
  "symbols": [
    {
      "module": "00-smglom.tex?bijective",
      "name": "injective",
      "uri": "00-smglom.tex?bijective?injective"
    },
    {
      "module": "00-smglom.tex?bijective",
      "name": "surjective",
      "uri": "00-smglom.tex?bijective?surjective"
    },
    {
      "module": "00-smglom.tex?bijective",
      "name": "bijective",
      "uri": "00-smglom.tex?bijective?bijective"
    },
    {
      "module": "00-smglom.tex?relation-composition",
      "name": "compose",
      "uri": "00-smglom.tex?relation-composition?compose"
    },
    {
      "module": "00-smglom.tex?natarith",
      "name": "plus",
      "uri": "00-smglom.tex?natarith?plus"
    },
    {
      "module": "00-smglom.tex?arith",
      "name": "plus",
      "uri": "00-smglom.tex?arith?plus"
    },
    {
      "module": "01-prelude.tex?logic-basics",
      "name": "formula",
      "uri": "01-prelude.tex?logic-basics?formula"
    },
    {
      "module": "01-prelude.tex?logic-basics",
      "name": "model",
      "uri": "01-prelude.tex?logic-basics?model"
    },
    {
      "module": "10-arc-consistency.tex?csp",
      "name": "constraint-network",
      "uri": "10-arc-consistency.tex?csp?constraint-network"
    },
    {
      "module": "10-arc-consistency.tex?csp",
      "name": "domain",
      "uri": "10-arc-consistency.tex?csp?domain"
    },
    {
      "module": "10-arc-consistency.tex?arc-consistency",
      "name": "arc-consistency",
      "uri": "10-arc-consistency.tex?arc-consistency?arc-consistency"
    },
    {
      "module": "10-arc-consistency.tex?arc-consistency",
      "name": "revise",
      "uri": "10-arc-consistency.tex?arc-consistency?revise"
    },
    {
      "module": "20-alpha-beta.tex?game-search",
      "name": "minimax",
      "uri": "20-alpha-beta.tex?game-search?minimax"
    },
    {
      "module": "20-alpha-beta.tex?game-search",
      "name": "alpha-beta-search",
      "uri": "20-alpha-beta.tex?game-search?alpha-beta-search"
    },
    {
      "module": "20-alpha-beta.tex?game-search",
      "name": "pruning",
      "uri": "20-alpha-beta.tex?game-search?pruning"
    },
    {
      "module": "30-propositional-semantics.tex?prop-semantics",
      "name": "valuation",
      "uri": "30-propositional-semantics.tex?prop-semantics?valuation"
    },
    {
      "module": "30-propositional-semantics.tex?prop-semantics",
      "name": "satisfies",
      "uri": "30-propositional-semantics.tex?prop-semantics?satisfies"
    },
    {
      "module": "40-fol-syntax.tex?fol-syntax",
      "name": "term",
      "uri": "40-fol-syntax.tex?fol-syntax?term"
    },
    {
      "module": "40-fol-syntax.tex?fol-syntax",
      "name": "quantifier",
      "uri": "40-fol-syntax.tex?fol-syntax?quantifier"
    },
    {
      "module": "50-strips.tex?strips",
      "name": "strips-task",
      "uri": "50-strips.tex?strips?strips-task"
    },
    {
      "module": "50-strips.tex?strips",
      "name": "action",
      "uri": "50-strips.tex?strips?action"
    },
    {
      "module": "60-delete-relaxation.tex?delete-relaxation",
      "name": "delete-relaxation",
      "uri": "60-delete-relaxation.tex?delete-relaxation?delete-relaxation"
    },
    {
      "module": "60-delete-relaxation.tex?delete-relaxation",
      "name": "relaxed-plan",
      "uri": "60-delete-relaxation.tex?delete-relaxation?relaxed-plan"
    }
  ],
  "transcript_ref": "dcf5d30014dc-session"
} as const;
