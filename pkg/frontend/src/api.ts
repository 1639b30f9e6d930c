import type {
  AggregateReport,
  Draft,
  GenerateParams,
  GenerateResponse,
  Report,
  SymbolRow,
} from "./types.js";

export class ApiError extends Error {
  readonly code: string;
  readonly report: Report | null;

  constructor(code: string, message: string, report: Report | null = null) {
    super(message);
    this.code = code;
    this.report = report;
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** Thin typed client; every verdict and issue it returns originates server-side. */
export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: FetchLike,
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(this.baseUrl + path, init);
    const body = await response.json().catch(() => null);
    if (!response.ok) {
      const detail = body?.detail;
      if (detail && typeof detail === "object") {
        throw new ApiError(detail.code ?? "Error", detail.message ?? "request failed", detail.report ?? null);
      }
      throw new ApiError(`HTTP${response.status}`, typeof detail === "string" ? detail : "request failed");
    }
    return body as T;
  }

  private post<T>(path: string, payload: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  async searchSymbols(corpusId: string, query: string): Promise<SymbolRow[]> {
    const encoded = encodeURIComponent(query);
    const body = await this.request<{ symbols: SymbolRow[] }>(
      `/corpora/${encodeURIComponent(corpusId)}/symbols?query=${encoded}`,
    );
    return body.symbols;
  }

  generate(params: GenerateParams): Promise<GenerateResponse> {
    return this.post<GenerateResponse>("/generate", params);
  }

  async listDrafts(status?: string): Promise<Draft[]> {
    const suffix = status ? `?status=${encodeURIComponent(status)}` : "";
    const body = await this.request<{ drafts: Draft[] }>(`/drafts${suffix}`);
    return body.drafts;
  }

  review(draftId: string, status: string, editedSource?: string): Promise<Draft> {
    return this.post<Draft>(`/drafts/${encodeURIComponent(draftId)}/review`, {
      status,
      edited_source: editedSource ?? null,
    });
  }

  aggregate(): Promise<AggregateReport> {
    return this.request<AggregateReport>("/reports/aggregate");
  }
}
