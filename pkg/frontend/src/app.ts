// DOM layer: renders the whole page from Controller state on every
// change. No virtual DOM, no partial updates; the state is small enough
// that a full re-render keeps the "pure render of server truth" rule
// easy to see.

import { MethodView, baseUrl, setBaseUrl } from "./api.js";
import { Controller } from "./controller.js";
import { escapeHtml, renderSource, LineMark } from "./highlight.js";
import { badgeFor, currentIteration } from "./state.js";

const BADGE_LABEL: Record<string, string> = {
  "new": "new",
  "labeled-positive": "labeled +",
  "labeled-negative": "labeled -",
};

export class App {
  root: HTMLElement;
  ctl: Controller;
  methods: MethodView[] = [];
  filter = "";

  constructor(root: HTMLElement, ctl: Controller) {
    this.root = root;
    this.ctl = ctl;
    this.ctl.onChange = () => this.render();
    this.root.addEventListener("click", (ev) => this.onClick(ev));
    this.root.addEventListener("change", (ev) => this.onChange(ev));
  }

  async init(): Promise<void> {
    try {
      this.methods = await this.ctl.listMethods();
    } catch (err) {
      this.ctl.state.error = `cannot reach API at ${baseUrl() || "this origin"}: ${err}`;
    }
    this.render();
  }

  private onClick(ev: Event): void {
    const el = (ev.target as HTMLElement).closest<HTMLElement>("[data-action]");
    if (!el) return;
    const id = el.dataset.id ?? "";
    switch (el.dataset.action) {
      case "pick-method":
        void this.ctl.pickMethod(id);
        break;
      case "toggle-tag":
        this.ctl.toggleTag(id);
        break;
      case "start-session":
        void this.ctl.startSession();
        break;
      case "label-positive":
        this.ctl.label(id, "+");
        break;
      case "label-negative":
        this.ctl.label(id, "-");
        break;
      case "refine":
        void this.ctl.refine();
        break;
      case "export":
        void this.download();
        break;
      case "new-search":
        this.ctl.reset();
        break;
    }
  }

  private onChange(ev: Event): void {
    const el = ev.target as HTMLInputElement;
    switch (el.dataset.field) {
      case "base-url":
        setBaseUrl(el.value);
        window.location.reload();
        break;
      case "filter":
        this.filter = el.value;
        void this.ctl.listMethods(this.filter).then((m) => {
          this.methods = m;
          this.render();
        });
        break;
      case "first-line":
        if (this.ctl.draft) this.ctl.draft.firstLine = Number(el.value);
        break;
      case "last-line":
        if (this.ctl.draft) this.ctl.draft.lastLine = Number(el.value);
        break;
      case "bias":
        if (this.ctl.draft) this.ctl.draft.bias = el.value;
        break;
    }
  }

  private async download(): Promise<void> {
    for (const file of await this.ctl.exportFiles()) {
      const blob = new Blob([file.text], { type: "text/plain" });
      const a = document.createElement("a");
      a.href = URL.createObjectURL(blob);
      a.download = file.name;
      a.click();
      URL.revokeObjectURL(a.href);
    }
  }

  render(): void {
    const { session } = this.ctl.state;
    const parts = [this.renderHeader()];
    if (session) {
      parts.push(this.renderSession());
    } else if (this.ctl.draft) {
      parts.push(this.renderDraft());
    } else {
      parts.push(this.renderPicker());
    }
    if (this.ctl.state.error) {
      parts.push(`<div class="error">${escapeHtml(this.ctl.state.error)}</div>`);
    }
    this.root.innerHTML = parts.join("");
  }

  private renderHeader(): string {
    return (
      `<header><h1>facet</h1>` +
      `<label>server <input data-field="base-url" value="${escapeHtml(baseUrl())}"` +
      ` placeholder="same origin"></label></header>`
    );
  }

  private renderPicker(): string {
    const rows = this.methods
      .map(
        (m) =>
          `<li><a href="#" data-action="pick-method" data-id="${escapeHtml(m.id)}">` +
          `<code>${escapeHtml(m.signature)}</code></a> ` +
          `<span class="file">${escapeHtml(m.file)}:${m.span.startLine}</span>` +
          `<div class="snippet">${escapeHtml(m.snippet)}</div></li>`,
      )
      .join("");
    return (
      `<section class="picker"><h2>pick a seed method</h2>` +
      `<input data-field="filter" placeholder="filter by file or name"` +
      ` value="${escapeHtml(this.filter)}">` +
      `<ul class="methods">${rows}</ul></section>`
    );
  }

  private renderDraft(): string {
    const draft = this.ctl.draft!;
    const marks = new Map<number, LineMark>();
    for (const f of draft.features.features) {
      if (draft.tagged.has(f.id)) {
        marks.set(f.span.startLine, {
          cssClass: "tagged",
          title: `${f.kind}: ${f.value}`,
        });
      }
    }
    const featureRows = draft.features.features
      .map((f) => {
        const on = draft.tagged.has(f.id);
        return (
          `<li class="${on ? "tagged" : ""}">` +
          `<a href="#" data-action="toggle-tag" data-id="${escapeHtml(f.id)}">` +
          `${on ? "☑" : "☐"} <b>${f.kind}</b> line ${f.span.startLine}: ` +
          `<code>${escapeHtml(f.value)}</code></a></li>`
        );
      })
      .join("");
    const m = draft.features.method;
    return (
      `<section class="draft"><h2>tag must-have features</h2>` +
      `<div class="method-id"><code>${escapeHtml(m.id)}</code></div>` +
      `<div class="panes">` +
      `<div class="pane">${renderSource(
        draft.features.source, draft.features.sourceFirstLine, marks)}</div>` +
      `<div class="pane"><ul class="features">${featureRows}</ul>` +
      `<label>lines <input data-field="first-line" type="number"` +
      ` value="${draft.firstLine}"> to <input data-field="last-line"` +
      ` type="number" value="${draft.lastLine}"></label>` +
      `<label>bias <select data-field="bias">` +
      ["nested", "sequential", "feature-vector"]
        .map(
          (b) =>
            `<option value="${b}"${b === draft.bias ? " selected" : ""}>${b}</option>`,
        )
        .join("") +
      `</select></label>` +
      `<button data-action="start-session"${this.ctl.canStart() ? "" : " disabled"}>` +
      `start search</button></div></div></section>`
    );
  }

  private renderSession(): string {
    const state = this.ctl.state;
    const session = state.session!;
    const iteration = currentIteration(session);
    const queries = session.iterations
      .map(
        (it) =>
          `<li><span class="iter-no">iteration ${it.index}</span>` +
          `<code class="query">${escapeHtml(it.query)}</code></li>`,
      )
      .join("");
    const results = iteration.results
      .map((r) => {
        const badge = badgeFor(r.status);
        const pendingPlus = state.pendingPositives.has(r.id);
        const pendingMinus = state.pendingNegatives.has(r.id);
        const conflicted = state.conflictIds.includes(r.id);
        return (
          `<li class="result ${badge}${conflicted ? " conflicted" : ""}">` +
          `<span class="badge ${badge}">${BADGE_LABEL[badge]}</span>` +
          `<code>${escapeHtml(r.id)}</code>` +
          `<div class="snippet">${escapeHtml(r.snippet)}</div>` +
          `<span class="lines">${escapeHtml(r.file)}:${r.span.startLine}-${r.span.endLine}</span>` +
          `<button data-action="label-positive" data-id="${escapeHtml(r.id)}"` +
          `${pendingPlus ? ' class="picked"' : ""}>+</button>` +
          `<button data-action="label-negative" data-id="${escapeHtml(r.id)}"` +
          `${pendingMinus ? ' class="picked"' : ""}>&minus;</button></li>`
        );
      })
      .join("");
    const conflict = state.conflictReport
      ? `<div class="conflict"><h3>inconsistent labels</h3><ul>` +
        state.conflictReport
          .map((line) => `<li>${escapeHtml(line)}</li>`)
          .join("") +
        `</ul></div>`
      : "";
    return (
      `<section class="session">` +
      `<div class="status">session <code>${session.id}</code>` +
      ` &middot; bias ${escapeHtml(session.bias)}` +
      ` &middot; status <b class="st-${session.status}">${session.status}</b></div>` +
      conflict +
      `<div class="panes">` +
      `<div class="pane"><h3>query per iteration</h3><ol class="queries">${queries}</ol>` +
      `<button data-action="export">export session</button> ` +
      `<button data-action="new-search">new search</button></div>` +
      `<div class="pane"><h3>results (iteration ${iteration.index})</h3>` +
      `<ul class="results">${results}</ul>` +
      `<button data-action="refine"${this.ctl.refineEnabled() ? "" : " disabled"}>` +
      `refine</button></div></div></section>`
    );
  }
}
