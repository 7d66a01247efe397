// The flows behind the UI: seed selection, labeling, conflict handling,
// export. Every mutation waits for the server and re-renders from its
// response, so what the user sees is always a pure render of session
// state (optimistic updates would fake the monotonic-result guarantee).

import { ApiClient, ApiError, MethodFeatures, MethodView } from "./api.js";
import {
  ViewState,
  applySession,
  canRefine,
  emptyState,
  setConflict,
  toggleLabel,
} from "./state.js";

export interface SeedDraft {
  features: MethodFeatures;
  tagged: Set<string>;
  firstLine: number;
  lastLine: number;
  bias: string;
}

export class Controller {
  api: ApiClient;
  state: ViewState;
  draft: SeedDraft | null = null;
  onChange: () => void;
  private clock: () => number;

  constructor(api: ApiClient, onChange: () => void = () => {},
              clock: () => number = () => Date.now()) {
    this.api = api;
    this.state = emptyState();
    this.onChange = onChange;
    this.clock = clock;
  }

  listMethods(filter = ""): Promise<MethodView[]> {
    return this.api.methods(filter).then((r) => r.methods);
  }

  /** Back to the seed picker; the server keeps the old session. */
  reset(): void {
    this.state = emptyState();
    this.draft = null;
    this.onChange();
  }

  /** Seed-selection flow, step 1: load a method into the tagging pane. */
  async pickMethod(methodId: string): Promise<void> {
    const features = await this.api.features(methodId);
    this.draft = {
      features,
      tagged: new Set(),
      firstLine: features.method.span.startLine,
      lastLine: features.method.span.endLine,
      bias: "nested",
    };
    this.onChange();
  }

  toggleTag(nodeId: string): void {
    if (!this.draft) return;
    if (this.draft.tagged.has(nodeId)) {
      this.draft.tagged.delete(nodeId);
    } else {
      this.draft.tagged.add(nodeId);
    }
    this.onChange();
  }

  canStart(): boolean {
    return this.draft !== null && this.draft.tagged.size > 0;
  }

  /** Seed-selection flow, step 2: start the session from the draft. */
  async startSession(): Promise<void> {
    if (!this.draft || !this.canStart()) return;
    try {
      const view = await this.api.createSession({
        methodId: this.draft.features.method.id,
        annotatedNodeIds: [...this.draft.tagged],
        lineRange: [this.draft.firstLine, this.draft.lastLine],
        bias: this.draft.bias,
      });
      applySession(this.state, view, this.clock());
      this.draft = null;
    } catch (err) {
      this.state.error = err instanceof ApiError ? err.reason() : String(err);
    }
    this.onChange();
  }

  /** Resume a session the server already knows. */
  async openSession(sessionId: string): Promise<void> {
    const view = await this.api.session(sessionId);
    applySession(this.state, view, this.clock());
    this.onChange();
  }

  label(methodId: string, polarity: "+" | "-"): void {
    toggleLabel(this.state, methodId, polarity, this.clock());
    this.onChange();
  }

  refineEnabled(): boolean {
    return canRefine(this.state);
  }

  /** Labeling flow: submit pending labels, adopt the server's new truth. */
  async refine(): Promise<void> {
    if (!this.state.session || !canRefine(this.state)) return;
    const positives = [...this.state.pendingPositives];
    const negatives = [...this.state.pendingNegatives];
    try {
      const view = await this.api.submitLabels(
        this.state.session.id, positives, negatives);
      applySession(this.state, view, this.clock());
    } catch (err) {
      if (err instanceof ApiError) {
        const conflict = err.conflict();
        if (conflict) {
          setConflict(this.state, conflict.report, conflict.conflicts);
        } else {
          this.state.error = err.reason();
        }
      } else {
        this.state.error = String(err);
      }
    }
    this.onChange();
  }

  /** Export flow: the verbatim session file plus the timing sidecar. */
  async exportFiles(): Promise<{ name: string; text: string }[]> {
    if (!this.state.session) return [];
    const id = this.state.session.id;
    const text = await this.api.exportSession(id);
    return [
      { name: `${id}.session`, text },
      {
        name: `${id}.timing.json`,
        text: JSON.stringify(
          { sessionId: id, labelSeconds: this.state.labelSeconds },
          null,
          2,
        ),
      },
    ];
  }
}
