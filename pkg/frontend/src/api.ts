// Typed client for the facet HTTP API. Everything the UI shows comes
// from these responses; no query logic lives on this side.

export interface Span {
  startLine: number;
  startCol: number;
  endLine: number;
  endCol: number;
}

export interface MethodView {
  id: string;
  file: string;
  signature: string;
  span: Span;
  snippet: string;
}

export interface FeatureView {
  id: string;
  kind: string;
  value: string;
  span: Span;
}

export interface MethodFeatures {
  method: MethodView;
  source: string[];
  sourceFirstLine: number;
  features: FeatureView[];
}

export type ResultStatus =
  | "newly-returned"
  | "previously-positive"
  | "previously-negative";

export interface ResultView extends MethodView {
  status: ResultStatus;
}

export interface IterationView {
  index: number;
  query: string;
  results: ResultView[];
  positives: string[];
  negatives: string[];
  labelTimes: Record<string, string>;
}

export interface SessionView {
  id: string;
  status: string;
  bias: string;
  fingerprint: string;
  seed: {
    method: string;
    firstLine: number;
    lastLine: number;
    annotations: string[];
  };
  iterations: IterationView[];
  report: string[] | null;
}

export interface ConflictDetail {
  error: "inconsistent-labels";
  report: string[];
  conflicts: string[];
}

export class ApiError extends Error {
  status: number;
  detail: unknown;

  constructor(status: number, detail: unknown) {
    super(`api error ${status}`);
    this.status = status;
    this.detail = detail;
  }

  conflict(): ConflictDetail | null {
    const d = this.detail as ConflictDetail | undefined;
    if (this.status === 409 && d && d.error === "inconsistent-labels") {
      return d;
    }
    return null;
  }

  reason(): string {
    const d = this.detail as Record<string, unknown> | undefined;
    if (d && typeof d.reason === "string") return d.reason;
    if (d && Array.isArray(d.reasons)) return (d.reasons as string[]).join("; ");
    return `request failed (${this.status})`;
  }
}

const BASE_URL_KEY = "facet-base-url";

export function baseUrl(): string {
  try {
    return window.localStorage.getItem(BASE_URL_KEY) ?? "";
  } catch {
    return "";
  }
}

export function setBaseUrl(url: string): void {
  try {
    window.localStorage.setItem(BASE_URL_KEY, url.replace(/\/+$/, ""));
  } catch {
    // storage can be unavailable in private windows; same-origin still works
  }
}

export class ApiClient {
  base: string;

  constructor(base?: string) {
    this.base = (base ?? baseUrl()).replace(/\/+$/, "");
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const res = await fetch(this.base + path, {
      headers: { Accept: "application/json", ...(init?.headers ?? {}) },
      ...init,
    });
    if (!res.ok) {
      let detail: unknown = null;
      try {
        detail = (await res.json()).detail;
      } catch {
        detail = await res.text().catch(() => null);
      }
      throw new ApiError(res.status, detail);
    }
    return (await res.json()) as T;
  }

  health(): Promise<{ version: string; fingerprint: string; methods: number }> {
    return this.request("/health");
  }

  methods(pathFilter = ""): Promise<{ methods: MethodView[] }> {
    const q = pathFilter ? `?path=${encodeURIComponent(pathFilter)}` : "";
    return this.request(`/methods${q}`);
  }

  features(methodId: string): Promise<MethodFeatures> {
    return this.request(`/methods/${encodeURIComponent(methodId)}/features`);
  }

  createSession(body: {
    methodId: string;
    annotatedNodeIds: string[];
    lineRange?: [number, number];
    bias?: string;
  }): Promise<SessionView> {
    return this.request("/sessions", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  session(id: string): Promise<SessionView> {
    return this.request(`/sessions/${encodeURIComponent(id)}`);
  }

  submitLabels(
    id: string,
    positives: string[],
    negatives: string[],
  ): Promise<SessionView> {
    return this.request(`/sessions/${encodeURIComponent(id)}/labels`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ positives, negatives }),
    });
  }

  async exportSession(id: string): Promise<string> {
    const res = await fetch(
      `${this.base}/sessions/${encodeURIComponent(id)}/export`,
    );
    if (!res.ok) throw new ApiError(res.status, await res.text());
    return res.text();
  }
}
