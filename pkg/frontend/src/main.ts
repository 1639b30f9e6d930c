import { ApiClient } from "./api.js";
import { ConsoleApp } from "./app.js";

// Browser bootstrap: point the console at a running quizgen API
// (quizgen serve ...). Base URL and corpus come from globals or query params.

declare global {
  interface Window {
    QUIZGEN_API_BASE?: string;
  }
}

async function boot(): Promise<void> {
  const params = new URLSearchParams(window.location.search);
  const base = params.get("api") ?? window.QUIZGEN_API_BASE ?? "http://127.0.0.1:8321";
  const client = new ApiClient(base, (input, init) => window.fetch(input, init));

  let corpusId = params.get("corpus");
  if (!corpusId) {
    const response = await window.fetch(`${base}/corpora`);
    const body = (await response.json()) as { corpora: string[] };
    corpusId = body.corpora[0] ?? "";
  }

  const root = document.getElementById("root");
  if (!root) throw new Error("missing #root element");
  if (!corpusId) {
    root.textContent = "No corpus ingested yet: run `quizgen ingest <manifest>` first.";
    return;
  }
  await new ConsoleApp(client, root, corpusId).mount();
}

void boot();
