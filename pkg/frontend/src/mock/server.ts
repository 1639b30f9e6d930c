import { FIXTURES } from "./fixtures.js";
import type { Draft, Issue } from "../types.js";

// In-memory stand-in for the quizgen HTTP API. State survives console
// "reloads" (new app instances over the same server), mirroring server-side
// persistence. Review transitions are deterministic: fixing the seeded
// hallucinated objective turns the failing draft's verdict to Pass, and a
// fill-in solution containing markup is rejected with the matching report.

const HALLUCINATED_TOKEN = "arc-connectivity";

interface MockState {
  drafts: Map<string, Draft>;
  generateCalls: number;
}

function clone<T>(value: T): T {
  return JSON.parse(JSON.stringify(value)) as T;
}

function json(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

function errorBody(code: string, message: string, extra: Record<string, unknown> = {}): unknown {
  return { detail: { code, message, ...extra } };
}

export class MockServer {
  readonly state: MockState = { drafts: new Map(), generateCalls: 0 };
  readonly corpusId: string = FIXTURES.corpus_id;

  /** fetch-compatible entry point; bind or wrap when injecting. */
  fetch = async (input: string, init?: RequestInit): Promise<Response> => {
    const url = new URL(input, "http://mock.invalid");
    const method = (init?.method ?? "GET").toUpperCase();
    const path = url.pathname;
    const body = init?.body ? JSON.parse(String(init.body)) : null;

    const symbolsMatch = path.match(/^\/corpora\/([^/]+)\/symbols$/);
    if (symbolsMatch && method === "GET") {
      if (decodeURIComponent(symbolsMatch[1]) !== this.corpusId) {
        return json(404, errorBody("UnknownCorpus", symbolsMatch[1]));
      }
      const query = (url.searchParams.get("query") ?? "").toLowerCase();
      const symbols = FIXTURES.symbols.filter(
        (row) => row.uri.toLowerCase().includes(query) || row.name.toLowerCase().includes(query),
      );
      return json(200, { symbols });
    }

    if (path === "/generate" && method === "POST") {
      return this.handleGenerate(body);
    }

    if (path === "/drafts" && method === "GET") {
      let drafts = [...this.state.drafts.values()];
      const status = url.searchParams.get("status");
      if (status) drafts = drafts.filter((d) => d.status === status);
      return json(200, { drafts });
    }

    const draftMatch = path.match(/^\/drafts\/([^/]+)$/);
    if (draftMatch && method === "GET") {
      const draft = this.state.drafts.get(decodeURIComponent(draftMatch[1]));
      return draft ? json(200, draft) : json(404, errorBody("UnknownDraft", draftMatch[1]));
    }

    const reviewMatch = path.match(/^\/drafts\/([^/]+)\/review$/);
    if (reviewMatch && method === "POST") {
      return this.handleReview(decodeURIComponent(reviewMatch[1]), body);
    }

    if (path === "/reports/aggregate" && method === "GET") {
      return json(200, this.aggregate());
    }

    return json(404, errorBody("NotFound", `${method} ${path}`));
  };

  private handleGenerate(body: any): Response {
    this.state.generateCalls += 1;
    const count = body?.n_questions;
    if (typeof count !== "number" || count < 1 || count > 5) {
      return json(422, errorBody("InvalidRequest", "n_questions must be between 1 and 5"));
    }
    const concept = body?.concepts?.[0];
    if (!FIXTURES.symbols.some((row) => row.uri === concept)) {
      return json(422, errorBody("UnknownSymbol", String(concept)));
    }
    this.state.drafts.clear();
    for (const draft of clone(FIXTURES.drafts) as unknown as Draft[]) {
      this.state.drafts.set(draft.draft_id, draft);
    }
    return json(200, {
      transcript_ref: FIXTURES.transcript_ref,
      drafts: [...this.state.drafts.values()],
      rejects: [],
    });
  }

  private handleReview(draftId: string, body: any): Response {
    const draft = this.state.drafts.get(draftId);
    if (!draft) return json(404, errorBody("UnknownDraft", draftId));
    const status = body?.status;

    if (status === "Accepted" || status === "Rejected") {
      draft.status = status;
      draft.question.review_status = status;
      draft.revision += 1;
      return json(200, draft);
    }

    if (status === "Edited") {
      const source: string = body?.edited_source ?? "";
      if (!source) {
        return json(422, errorBody("EditRejected", "Edited review requires edited_source"));
      }
      if (source.includes("\\fillinsol{\\")) {
        const issue: Issue = {
          code: "FIB_NOT_PLAINTEXT",
          category: "Structural",
          severity: "Error",
          message: "fill-in solutions are string matched and must be plain text",
          span: null,
        };
        return json(
          422,
          errorBody("EditRejected", "edited source fails structural validation", {
            report: { question_id: draftId, verdict: "Fail", issues: [issue] },
          }),
        );
      }
      draft.question.source = source;
      draft.status = "Edited";
      draft.question.review_status = "Edited";
      draft.revision += 1;
      if (!source.includes(HALLUCINATED_TOKEN)) {
        draft.verdict = "Pass";
        draft.report = { question_id: draftId, verdict: "Pass", issues: [] };
      }
      return json(200, draft);
    }

    return json(422, errorBody("InvalidStatus", String(status)));
  }

  private aggregate() {
    const drafts = [...this.state.drafts.values()];
    const typeDistribution: Record<string, number> = {
      MultipleChoice: 0,
      SingleChoice: 0,
      FillInTheBlanks: 0,
    };
    for (const draft of drafts) {
      typeDistribution[draft.question.qtype as string] += 1;
    }
    return {
      total_questions: drafts.length,
      rated_questions: 0,
      statement_agreement: {
        "The GQ has a good FIT in terms of teaching material.": { agreed: 0, of: 0 },
      },
      erroneous_questions: 0,
      errors_by_topic: {},
      type_distribution: typeDistribution,
    };
  }
}
