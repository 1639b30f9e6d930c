import { ApiClient, ApiError } from "./api.js";
import { renderQuestion } from "./render.js";
import type { Draft, GenerateParams, Issue, Report } from "./types.js";

const DIMENSIONS = ["remember", "understand", "apply", "analyze", "evaluate", "create"];
const DIFFICULTIES = ["easy", "medium", "hard"];
const TYPE_CHOICES: [string, string][] = [
  ["MultipleChoice", "multiple choice"],
  ["SingleChoice", "single choice"],
  ["FillInTheBlanks", "fill-in-the-blanks"],
];
const MIN_QUESTIONS = 1;
const MAX_QUESTIONS = 5;

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function reportList(report: Report): HTMLElement {
  const wrap = el("div", "issues");
  const byCategory = new Map<string, Issue[]>();
  for (const issue of report.issues) {
    const bucket = byCategory.get(issue.category) ?? [];
    bucket.push(issue);
    byCategory.set(issue.category, bucket);
  }
  if (byCategory.size === 0) {
    wrap.appendChild(el("p", "issues-none", "no issues"));
    return wrap;
  }
  for (const [category, issues] of byCategory) {
    const group = el("section", "issue-group");
    group.dataset.category = category;
    group.appendChild(el("h4", "issue-category", category));
    const list = el("ul");
    for (const issue of issues) {
      const item = el("li", "issue", `${issue.code}: ${issue.message}`);
      item.dataset.code = issue.code;
      item.dataset.severity = issue.severity;
      list.appendChild(item);
    }
    group.appendChild(list);
    wrap.appendChild(group);
  }
  return wrap;
}

/** The instructor review console: generate, inspect, accept/edit/reject. */
export class ConsoleApp {
  private drafts: Draft[] = [];
  private cardsSection!: HTMLElement;
  private formError!: HTMLElement;
  private aggregatesBody!: HTMLElement;
  private form!: HTMLFormElement;
  private statusFilter = "";

  constructor(
    private readonly client: ApiClient,
    private readonly root: HTMLElement,
    private readonly corpusId: string,
    private readonly courseName = "Artificial Intelligence I",
  ) {}

  async mount(): Promise<void> {
    this.root.innerHTML = "";
    this.root.appendChild(el("h1", "app-title", "Question review console"));
    this.root.appendChild(this.buildForm());
    this.root.appendChild(this.buildFilter());
    this.cardsSection = el("section", "cards");
    this.root.appendChild(this.cardsSection);
    this.root.appendChild(this.buildAggregates());
    // Existing drafts (and their review states) come back from the server.
    this.drafts = await this.client.listDrafts();
    this.renderCards();
  }

  private buildFilter(): HTMLElement {
    const wrap = el("label", "status-filter-wrap", "show ");
    const filter = el("select", "status-filter");
    for (const [value, label] of [
      ["", "all"],
      ["Draft", "Draft"],
      ["Accepted", "Accepted"],
      ["Rejected", "Rejected"],
      ["Edited", "Edited"],
    ]) {
      filter.appendChild(new Option(label, value));
    }
    filter.addEventListener("change", () => {
      this.statusFilter = filter.value;
      void this.client
        .listDrafts(this.statusFilter || undefined)
        .then((drafts) => {
          this.drafts = drafts;
          this.renderCards();
        });
    });
    wrap.appendChild(filter);
    return wrap;
  }

  // -- generation form ---------------------------------------------------------

  private buildForm(): HTMLFormElement {
    this.form = el("form", "generation-form");
    this.form.id = "generation-form";

    const concept = el("input", "concept-input");
    concept.name = "concept";
    concept.placeholder = "concept symbol URI";
    concept.setAttribute("list", "concept-options");
    const datalist = document.createElement("datalist");
    datalist.id = "concept-options";
    concept.addEventListener("input", () => {
      void this.refreshConceptOptions(datalist, concept.value);
    });

    const dimension = el("select");
    dimension.name = "dimension";
    for (const value of DIMENSIONS) {
      dimension.appendChild(new Option(value, value, value === "understand", value === "understand"));
    }
    const difficulty = el("select");
    difficulty.name = "difficulty";
    for (const value of DIFFICULTIES) {
      difficulty.appendChild(new Option(value, value, value === "medium", value === "medium"));
    }

    const count = el("input");
    count.name = "count";
    count.type = "number";
    count.value = "5";

    const types = el("span", "type-choices");
    for (const [value, label] of TYPE_CHOICES) {
      const box = el("input");
      box.type = "checkbox";
      box.name = "types";
      box.value = value;
      box.checked = true;
      const wrap = el("label", "type-choice", label);
      wrap.prepend(box);
      types.appendChild(wrap);
    }

    const submit = el("button", "generate-button", "Generate");
    submit.type = "submit";
    this.formError = el("p", "form-error");

    for (const [label, field] of [
      ["concept", concept],
      ["dimension", dimension],
      ["difficulty", difficulty],
      ["questions", count],
    ] as const) {
      const wrap = el("label", "form-field", `${label} `);
      wrap.appendChild(field);
      this.form.appendChild(wrap);
    }
    this.form.appendChild(types);
    this.form.appendChild(submit);
    this.form.appendChild(this.formError);
    this.form.appendChild(datalist);

    this.form.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.handleSubmit();
    });
    return this.form;
  }

  private async refreshConceptOptions(datalist: HTMLElement, query: string): Promise<void> {
    try {
      const symbols = await this.client.searchSymbols(this.corpusId, query);
      datalist.innerHTML = "";
      for (const row of symbols.slice(0, 20)) {
        const option = document.createElement("option");
        option.value = row.uri;
        option.label = row.name;
        datalist.appendChild(option);
      }
    } catch {
      // Symbol lookup is assistive; failures surface on submit instead.
    }
  }

  private formParams(): GenerateParams | null {
    const data = new FormData(this.form);
    const concept = String(data.get("concept") ?? "").trim();
    const count = Number(data.get("count"));
    const types = data.getAll("types").map(String);
    if (!concept) {
      this.formError.textContent = "choose a concept first";
      return null;
    }
    // The only validation the console owns: form bounds.
    if (!Number.isInteger(count) || count < MIN_QUESTIONS || count > MAX_QUESTIONS) {
      this.formError.textContent = `questions must be between ${MIN_QUESTIONS} and ${MAX_QUESTIONS}`;
      return null;
    }
    if (types.length === 0) {
      this.formError.textContent = "pick at least one question type";
      return null;
    }
    return {
      corpus_id: this.corpusId,
      concepts: [concept],
      course_name: this.courseName,
      course_description: "",
      cognitive_dimension: String(data.get("dimension")),
      difficulty: String(data.get("difficulty")),
      n_questions: count,
      allowed_types: types,
      granularity: "Section",
      token_budget: 100_000,
    };
  }

  private async handleSubmit(): Promise<void> {
    this.formError.textContent = "";
    const params = this.formParams();
    if (params === null) return;
    try {
      const response = await this.client.generate(params);
      this.drafts = response.drafts; // arrival order
      this.renderCards();
    } catch (error) {
      if (error instanceof ApiError) {
        this.formError.textContent = `${error.code}: ${error.message}`;
      } else {
        this.formError.textContent = String(error);
      }
    }
  }

  // -- draft cards ---------------------------------------------------------------

  private renderCards(): void {
    this.cardsSection.innerHTML = "";
    const visible = this.statusFilter
      ? this.drafts.filter((d) => d.status === this.statusFilter)
      : this.drafts;
    for (const draft of visible) {
      this.cardsSection.appendChild(this.buildCard(draft));
    }
  }

  private replaceDraft(updated: Draft): void {
    this.drafts = this.drafts.map((d) => (d.draft_id === updated.draft_id ? updated : d));
    this.renderCards();
  }

  private buildCard(draft: Draft): HTMLElement {
    const card = el("article", "card");
    card.dataset.draftId = draft.draft_id;

    const header = el("header", "card-header");
    header.appendChild(el("span", "card-id", draft.draft_id));
    header.appendChild(el("span", "card-topic", draft.topic_tag));
    header.appendChild(el("span", "card-qtype", draft.question.qtype));
    // Verdict and status are displayed verbatim from the API payload.
    const badge = el("span", "badge", draft.verdict);
    badge.dataset.verdict = draft.verdict;
    header.appendChild(badge);
    const status = el("span", "status", draft.status);
    header.appendChild(status);
    header.appendChild(el("span", "revision", `rev ${draft.revision}`));
    card.appendChild(header);

    const prereqs = el("div", "prereqs");
    for (const [dimension, uri] of draft.prerequisites) {
      prereqs.appendChild(el("span", "chip", `${dimension} ${uri}`));
    }
    card.appendChild(prereqs);

    card.appendChild(renderQuestion(draft.render));
    card.appendChild(reportList(draft.report));

    const cardError = el("p", "card-error");
    const controls = el("div", "controls");
    const acceptButton = el("button", "accept", "Accept");
    const rejectButton = el("button", "reject", "Reject");
    const editButton = el("button", "edit", "Edit");
    controls.append(acceptButton, editButton, rejectButton);
    card.appendChild(controls);
    card.appendChild(cardError);

    const editPanel = el("div", "edit-panel");
    editPanel.hidden = true;
    const editor = el("textarea", "edit-source");
    editor.value = draft.question.source;
    const saveButton = el("button", "save-edit", "Save");
    const cancelButton = el("button", "cancel-edit", "Cancel");
    const editError = el("div", "edit-error");
    editPanel.append(editor, saveButton, cancelButton, editError);
    card.appendChild(editPanel);

    const applySimple = (target: string) => {
      // Optimistic flip, reconciled with the server's revision on response.
      const previous = status.textContent;
      status.textContent = target;
      status.classList.add("pending");
      this.client
        .review(draft.draft_id, target)
        .then((updated) => this.replaceDraft(updated))
        .catch((error) => {
          status.textContent = previous;
          status.classList.remove("pending");
          cardError.textContent =
            error instanceof ApiError ? `${error.code}: ${error.message}` : String(error);
        });
    };

    acceptButton.addEventListener("click", () => applySimple("Accepted"));
    rejectButton.addEventListener("click", () => applySimple("Rejected"));
    editButton.addEventListener("click", () => {
      editPanel.hidden = false;
    });
    cancelButton.addEventListener("click", () => {
      editPanel.hidden = true;
      editError.innerHTML = "";
      editor.value = draft.question.source;
    });
    saveButton.addEventListener("click", () => {
      editError.innerHTML = "";
      this.client
        .review(draft.draft_id, "Edited", editor.value)
        .then((updated) => this.replaceDraft(updated))
        .catch((error) => {
          if (error instanceof ApiError && error.report) {
            editError.appendChild(el("p", "edit-error-message", error.message));
            editError.appendChild(reportList(error.report));
          } else if (error instanceof ApiError) {
            editError.appendChild(el("p", "edit-error-message", `${error.code}: ${error.message}`));
          } else {
            editError.appendChild(el("p", "edit-error-message", String(error)));
          }
        });
    });

    return card;
  }

  // -- aggregates ------------------------------------------------------------------

  private buildAggregates(): HTMLElement {
    const section = el("section", "aggregates");
    const refresh = el("button", "refresh-aggregates", "Refresh survey aggregates");
    refresh.addEventListener("click", () => {
      void this.refreshAggregates();
    });
    this.aggregatesBody = el("div", "aggregates-body");
    section.append(refresh, this.aggregatesBody);
    return section;
  }

  private async refreshAggregates(): Promise<void> {
    const report = await this.client.aggregate();
    this.aggregatesBody.innerHTML = "";
    const table = el("table", "aggregates-table");
    const addRow = (metric: string, key: string, value: string) => {
      const row = el("tr");
      row.append(el("td", "", metric), el("td", "", key), el("td", "", value));
      table.appendChild(row);
    };
    addRow("total questions", "", String(report.total_questions));
    addRow("rated questions", "", String(report.rated_questions));
    for (const [statement, { agreed, of }] of Object.entries(report.statement_agreement)) {
      addRow("agreement", statement, `${agreed}/${of}`);
    }
    addRow("erroneous", "", `${report.erroneous_questions}/${report.rated_questions}`);
    for (const [qtype, count] of Object.entries(report.type_distribution)) {
      addRow("type", qtype, String(count));
    }
    this.aggregatesBody.appendChild(table);
  }
}
