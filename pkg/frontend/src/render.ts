import type { RenderModel, RenderNode } from "./types.js";

// DOM rendering of the server's question render model. The instructor
// variant shows correctness marks and feedback exactly as delivered.

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

export function renderNodes(nodes: readonly RenderNode[]): DocumentFragment {
  const fragment = document.createDocumentFragment();
  for (const node of nodes) {
    switch (node.type) {
      case "text": {
        const span = el("span", "rt-text");
        span.innerHTML = node.html ?? "";
        fragment.appendChild(span);
        break;
      }
      case "math": {
        const code = el("code", "rt-math", node.tex ?? "");
        fragment.appendChild(code);
        break;
      }
      case "symref": {
        const span = el("span", "rt-symref");
        span.innerHTML = node.verbalization ?? "";
        span.dataset.symbol = node.symbol ?? "";
        span.title = node.symbol ?? "";
        fragment.appendChild(span);
        break;
      }
      case "blank": {
        const input = el("input", "rt-blank");
        input.disabled = true;
        input.placeholder = "answer";
        fragment.appendChild(input);
        break;
      }
      case "group": {
        const span = el("span", "rt-group");
        span.appendChild(renderNodes(node.children ?? []));
        fragment.appendChild(span);
        break;
      }
    }
  }
  return fragment;
}

export function renderQuestion(model: RenderModel): HTMLElement {
  const root = el("div", "question");
  const stem = el("p", "question-stem");
  stem.appendChild(renderNodes(model.stem));
  root.appendChild(stem);

  if (model.options.length > 0) {
    const list = el("ol", "question-options");
    for (const option of model.options) {
      const item = el("li", "question-option");
      if (option.correct !== undefined) {
        const mark = el("span", "option-mark", option.correct ? "[T]" : "[F]");
        mark.dataset.correct = String(option.correct);
        item.appendChild(mark);
      }
      const body = el("span", "option-text");
      body.appendChild(renderNodes(option.text));
      item.appendChild(body);
      if (option.feedback) {
        item.appendChild(el("div", "option-feedback", option.feedback));
      }
      list.appendChild(item);
    }
    root.appendChild(list);
  }

  if (model.fib_solution !== undefined) {
    root.appendChild(el("div", "question-solution", `expected: ${model.fib_solution}`));
  }
  return root;
}
