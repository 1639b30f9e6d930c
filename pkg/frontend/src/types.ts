// Payload shapes of the quizgen HTTP API (see ../docs in the repository root:
// render-model.md, defect-taxonomy.md). The console renders these verbatim
// and performs no validation of its own beyond form bounds.

export interface RenderNode {
  type: "text" | "math" | "symref" | "blank" | "group";
  html?: string;
  tex?: string;
  symbol?: string;
  verbalization?: string;
  children?: RenderNode[];
}

export interface RenderOption {
  text: RenderNode[];
  correct?: boolean;
  feedback?: string;
  grading_action?: { kind: string; points: string };
}

export interface RenderModel {
  id: string;
  qtype: string;
  variant: string;
  stem: RenderNode[];
  options: RenderOption[];
  objectives?: [string, string][];
  preconditions?: [string, string][];
  used_modules?: string[];
  review_status?: string;
  fib_solution?: string;
}

export interface Issue {
  code: string;
  category: string;
  severity: "Error" | "Warning";
  message: string;
  span: [number, number] | null;
}

export interface Report {
  question_id: string;
  verdict: string;
  issues: Issue[];
}

export interface Draft {
  draft_id: string;
  corpus_id: string;
  topic_tag: string;
  transcript_ref: string;
  revision: number;
  status: string;
  verdict: string;
  report: Report;
  prerequisites: [string, string][];
  unresolved: string[];
  question: { qtype: string; source: string; [key: string]: unknown };
  render: RenderModel;
  request: Record<string, unknown>;
}

export interface GenerateResponse {
  transcript_ref: string;
  drafts: Draft[];
  rejects: { reason: string; detail: string; source: string }[];
}

export interface SymbolRow {
  uri: string;
  name: string;
  module: string;
}

export interface AggregateReport {
  total_questions: number;
  rated_questions: number;
  statement_agreement: Record<string, { agreed: number; of: number }>;
  erroneous_questions: number;
  errors_by_topic: Record<string, number>;
  type_distribution: Record<string, number>;
}

export interface GenerateParams {
  corpus_id: string;
  concepts: string[];
  course_name: string;
  course_description: string;
  cognitive_dimension: string;
  difficulty: string;
  n_questions: number;
  allowed_types: string[];
  granularity: string;
  token_budget: number;
}
