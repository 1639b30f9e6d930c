// The review loop against the mock server only: generate, badge rendering,
// accept/edit/reject with persistence across reload, and the network
// intercept proving every displayed verdict came from an API payload.

import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { ConsoleApp } from "../src/app.js";
import { MockServer } from "../src/mock/server.js";
import type { Draft } from "../src/types.js";

const ARC = "10-arc-consistency.tex?arc-consistency?arc-consistency";

function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}

interface Recorded {
  url: string;
  method: string;
  body: unknown;
}

/** Wraps the mock's fetch, recording every request and response body. */
function intercept(server: MockServer) {
  const requests: Recorded[] = [];
  const responses: unknown[] = [];
  const fetchImpl = async (input: string, init?: RequestInit): Promise<Response> => {
    requests.push({
      url: input,
      method: (init?.method ?? "GET").toUpperCase(),
      body: init?.body ? JSON.parse(String(init.body)) : null,
    });
    const response = await server.fetch(input, init);
    responses.push(await response.clone().json());
    return response;
  };
  return { fetchImpl, requests, responses };
}

async function mountApp(server: MockServer, tap = intercept(server)) {
  document.body.innerHTML = '<div id="root"></div>';
  const root = document.getElementById("root")!;
  const client = new ApiClient("", tap.fetchImpl);
  const app = new ConsoleApp(client, root, server.corpusId);
  await app.mount();
  return { app, root, tap };
}

function setInput(form: HTMLElement, name: string, value: string): void {
  const field = form.querySelector<HTMLInputElement | HTMLSelectElement>(`[name="${name}"]`)!;
  field.value = value;
}

async function submitGeneration(root: HTMLElement, concept = ARC, count = "5"): Promise<void> {
  const form = root.querySelector<HTMLFormElement>("#generation-form")!;
  setInput(form, "concept", concept);
  setInput(form, "count", count);
  form.dispatchEvent(new Event("submit", { bubbles: true, cancelable: true }));
  await flush();
  await flush();
}

function cards(root: HTMLElement): HTMLElement[] {
  return [...root.querySelectorAll<HTMLElement>(".card")];
}

function cardById(root: HTMLElement, draftId: string): HTMLElement {
  const card = cards(root).find((c) => c.dataset.draftId === draftId);
  expect(card, `card ${draftId} should be rendered`).toBeDefined();
  return card!;
}

describe("generation form", () => {
  let server: MockServer;

  beforeEach(() => {
    server = new MockServer();
  });

  it("renders five cards with verdict badges in arrival order", async () => {
    const { root, tap } = await mountApp(server);
    await submitGeneration(root);

    const rendered = cards(root);
    expect(rendered).toHaveLength(5);

    const generateResponse = tap.responses.find(
      (body): body is { drafts: Draft[] } =>
        typeof body === "object" && body !== null && "drafts" in (body as object) &&
        Array.isArray((body as { drafts: unknown }).drafts) &&
        ((body as { drafts: Draft[] }).drafts.length === 5),
    );
    expect(generateResponse).toBeDefined();
    const served = generateResponse!.drafts;

    // Cards appear in the order the API delivered them, badges verbatim.
    expect(rendered.map((c) => c.dataset.draftId)).toEqual(served.map((d) => d.draft_id));
    rendered.forEach((card, index) => {
      expect(card.querySelector(".badge")!.textContent).toBe(served[index].verdict);
    });
    const verdicts = rendered.map((c) => c.querySelector(".badge")!.textContent);
    expect(verdicts.filter((v) => v === "Fail")).toHaveLength(1);
  });

  it("enforces the question-count bound client-side without calling the API", async () => {
    const { root, tap } = await mountApp(server);
    const before = tap.requests.filter((r) => r.url.endsWith("/generate")).length;
    await submitGeneration(root, ARC, "6");

    expect(root.querySelector(".form-error")!.textContent).toContain("between 1 and 5");
    const after = tap.requests.filter((r) => r.url.endsWith("/generate")).length;
    expect(after).toBe(before);
    expect(cards(root)).toHaveLength(0);
  });

  it("shows the server's error code verbatim for unknown concepts", async () => {
    const { root } = await mountApp(server);
    await submitGeneration(root, "no?such?symbol");
    expect(root.querySelector(".form-error")!.textContent).toContain("UnknownSymbol");
  });

  it("offers concepts from the symbol search endpoint", async () => {
    const { root, tap } = await mountApp(server);
    const concept = root.querySelector<HTMLInputElement>('[name="concept"]')!;
    concept.value = "arc";
    concept.dispatchEvent(new Event("input", { bubbles: true }));
    await flush();

    const options = [...root.querySelectorAll<HTMLOptionElement>("#concept-options option")];
    expect(options.map((o) => o.value)).toContain(ARC);
    expect(tap.requests.some((r) => r.url.includes("/symbols?query=arc"))).toBe(true);
  });

  it("regenerates on resubmit, replacing the cards", async () => {
    const { root } = await mountApp(server);
    await submitGeneration(root);
    const first = cards(root).map((c) => c.dataset.draftId);
    await submitGeneration(root);
    expect(cards(root).map((c) => c.dataset.draftId)).toEqual(first);
    expect(cards(root)).toHaveLength(5);
  });
});

describe("review loop", () => {
  let server: MockServer;

  beforeEach(async () => {
    server = new MockServer();
  });

  it("accept, edit (defect fixed -> Pass), reject; statuses persist across reload", async () => {
    const first = await mountApp(server);
    await submitGeneration(first.root);

    const all = cards(first.root);
    const failing = all.find((c) => c.querySelector(".badge")!.textContent === "Fail")!;
    const failingId = failing.dataset.draftId!;
    const passing = all.filter((c) => c !== failing);
    const acceptId = passing[0].dataset.draftId!;
    const rejectId = passing[1].dataset.draftId!;

    // Accept: badge area flips after the server acknowledges.
    passing[0].querySelector<HTMLButtonElement>("button.accept")!.click();
    await flush();
    expect(cardById(first.root, acceptId).querySelector(".status")!.textContent).toBe("Accepted");
    expect(cardById(first.root, acceptId).querySelector(".revision")!.textContent).toBe("rev 2");

    // Edit: fix the hallucinated objective; server re-validates to Pass.
    const failCard = cardById(first.root, failingId);
    failCard.querySelector<HTMLButtonElement>("button.edit")!.click();
    const editor = failCard.querySelector<HTMLTextAreaElement>(".edit-source")!;
    expect(editor.value).toContain("arc-connectivity"); // pre-filled with draft source
    editor.value = editor.value.replace("arc-connectivity", "arc-consistency");
    failCard.querySelector<HTMLButtonElement>("button.save-edit")!.click();
    await flush();
    const editedCard = cardById(first.root, failingId);
    expect(editedCard.querySelector(".badge")!.textContent).toBe("Pass");
    expect(editedCard.querySelector(".status")!.textContent).toBe("Edited");

    // Reject.
    cardById(first.root, rejectId).querySelector<HTMLButtonElement>("button.reject")!.click();
    await flush();
    expect(cardById(first.root, rejectId).querySelector(".status")!.textContent).toBe("Rejected");

    // Reload: a fresh app over the same server sees the same statuses.
    const second = await mountApp(server);
    expect(cards(second.root)).toHaveLength(5);
    expect(cardById(second.root, acceptId).querySelector(".status")!.textContent).toBe("Accepted");
    expect(cardById(second.root, failingId).querySelector(".status")!.textContent).toBe("Edited");
    expect(cardById(second.root, failingId).querySelector(".badge")!.textContent).toBe("Pass");
    expect(cardById(second.root, rejectId).querySelector(".status")!.textContent).toBe("Rejected");
  });

  it("renders the rejection report inline when an edit introduces a defect", async () => {
    const { root } = await mountApp(server);
    await submitGeneration(root);

    const card = cards(root)[0];
    card.querySelector<HTMLButtonElement>("button.edit")!.click();
    const editor = card.querySelector<HTMLTextAreaElement>(".edit-source")!;
    editor.value = "\\begin{sproblem}x \\fillinsol{\\compose{g,f}}\\end{sproblem}";
    card.querySelector<HTMLButtonElement>("button.save-edit")!.click();
    await flush();

    const editError = card.querySelector(".edit-error")!;
    expect(editError.textContent).toContain("FIB_NOT_PLAINTEXT");
    // The draft itself is untouched.
    expect(card.querySelector(".status")!.textContent).toBe("Draft");
  });

  it("groups issues by category and shows prerequisites as chips", async () => {
    const { root } = await mountApp(server);
    await submitGeneration(root);

    const failing = cards(root).find((c) => c.querySelector(".badge")!.textContent === "Fail")!;
    const group = failing.querySelector<HTMLElement>(".issue-group")!;
    expect(group.dataset.category).toBe("Relational");
    expect(group.querySelector(".issue")!.textContent).toContain("HALLUCINATED_SYMBOL");

    const chips = cards(root)[0].querySelectorAll(".chip");
    expect(chips.length).toBeGreaterThan(0);
    expect([...chips].some((chip) => chip.textContent!.startsWith("remember "))).toBe(true);
  });
});

describe("single source of truth", () => {
  it("displays whatever verdict the API serves, verbatim (no local judgement)", async () => {
    const server = new MockServer();
    // Tamper with the server payloads: a verdict string the UI cannot know.
    const original = server.fetch;
    server.fetch = async (input, init) => {
      const response = await original(input, init);
      const body = await response.clone().json();
      if (body && Array.isArray(body.drafts)) {
        for (const draft of body.drafts) draft.verdict = "Sparkling";
        return new Response(JSON.stringify(body), { status: response.status });
      }
      return response;
    };

    const { root } = await mountApp(server);
    await submitGeneration(root);
    const badges = cards(root).map((c) => c.querySelector(".badge")!.textContent);
    expect(badges).toEqual(["Sparkling", "Sparkling", "Sparkling", "Sparkling", "Sparkling"]);
  });

  it("every rendered verdict string occurs in an intercepted response payload", async () => {
    const server = new MockServer();
    const tap = intercept(server);
    const { root } = await mountApp(server, tap);
    await submitGeneration(root);

    const servedVerdicts = new Set<string>();
    for (const body of tap.responses) {
      const drafts = (body as { drafts?: Draft[] }).drafts;
      if (Array.isArray(drafts)) {
        for (const draft of drafts) servedVerdicts.add(draft.verdict);
      }
    }
    for (const card of cards(root)) {
      expect(servedVerdicts.has(card.querySelector(".badge")!.textContent!)).toBe(true);
    }
  });
});

describe("status filter", () => {
  it("moves a rejected card into the Rejected filter, backed by the server query", async () => {
    const server = new MockServer();
    const tap = intercept(server);
    const { root } = await mountApp(server, tap);
    await submitGeneration(root);

    const rejectedId = cards(root)[1].dataset.draftId!;
    cards(root)[1].querySelector<HTMLButtonElement>("button.reject")!.click();
    await flush();

    const filter = root.querySelector<HTMLSelectElement>(".status-filter")!;
    filter.value = "Rejected";
    filter.dispatchEvent(new Event("change", { bubbles: true }));
    await flush();

    expect(cards(root).map((c) => c.dataset.draftId)).toEqual([rejectedId]);
    expect(tap.requests.some((r) => r.url.includes("/drafts?status=Rejected"))).toBe(true);

    filter.value = "Draft";
    filter.dispatchEvent(new Event("change", { bubbles: true }));
    await flush();
    expect(cards(root).map((c) => c.dataset.draftId)).not.toContain(rejectedId);
  });
});

describe("aggregates view", () => {
  it("renders the aggregate report from the API", async () => {
    const server = new MockServer();
    const { root } = await mountApp(server);
    await submitGeneration(root);

    root.querySelector<HTMLButtonElement>("button.refresh-aggregates")!.click();
    await flush();

    const table = root.querySelector(".aggregates-table")!;
    expect(table.textContent).toContain("total questions");
    expect(table.textContent).toContain("SingleChoice");
  });
});
