// ViewState and the pure functions that derive it. The rule: everything
// rendered comes straight from API responses; the only client-side state
// is what the user has clicked but not yet submitted, plus timing.

import type { ResultStatus, SessionView } from "./api.js";

export type Badge = "new" | "labeled-positive" | "labeled-negative";

export interface ViewState {
  session: SessionView | null;
  // labels picked in the UI but not submitted yet
  pendingPositives: Set<string>;
  pendingNegatives: Set<string>;
  // last inconsistency report, shown until the next successful action
  conflictReport: string[] | null;
  conflictIds: string[];
  // per-label decision timing: when results appeared, seconds to decide
  resultsShownAt: number | null;
  labelSeconds: Record<string, number>;
  error: string | null;
}

export function emptyState(): ViewState {
  return {
    session: null,
    pendingPositives: new Set(),
    pendingNegatives: new Set(),
    conflictReport: null,
    conflictIds: [],
    resultsShownAt: null,
    labelSeconds: {},
    error: null,
  };
}

export function currentIteration(session: SessionView) {
  return session.iterations[session.iterations.length - 1];
}

export function badgeFor(status: ResultStatus): Badge {
  if (status === "previously-positive") return "labeled-positive";
  if (status === "previously-negative") return "labeled-negative";
  return "new";
}

/** Refine is possible only with at least one pending label on an active session. */
export function canRefine(state: ViewState): boolean {
  if (!state.session || state.session.status !== "active") return false;
  return state.pendingPositives.size + state.pendingNegatives.size > 0;
}

export function sessionActive(state: ViewState): boolean {
  return state.session?.status === "active";
}

/** Adopt a fresh server response; pending labels are gone either way. */
export function applySession(
  state: ViewState,
  view: SessionView,
  now: number,
): void {
  state.session = view;
  state.pendingPositives.clear();
  state.pendingNegatives.clear();
  state.conflictReport = null;
  state.conflictIds = [];
  state.error = null;
  state.resultsShownAt = now;
}

/**
 * Toggle a pending label. Clicking the same polarity again clears it;
 * clicking the other polarity moves it. The first decision on a result
 * records how long it sat on screen.
 */
export function toggleLabel(
  state: ViewState,
  methodId: string,
  polarity: "+" | "-",
  now: number,
): void {
  const mine = polarity === "+" ? state.pendingPositives : state.pendingNegatives;
  const other = polarity === "+" ? state.pendingNegatives : state.pendingPositives;
  if (mine.has(methodId)) {
    mine.delete(methodId);
    return;
  }
  other.delete(methodId);
  mine.add(methodId);
  if (!(methodId in state.labelSeconds) && state.resultsShownAt !== null) {
    state.labelSeconds[methodId] = (now - state.resultsShownAt) / 1000;
  }
}

export function setConflict(
  state: ViewState,
  report: string[],
  conflicts: string[],
): void {
  state.conflictReport = report;
  state.conflictIds = conflicts;
}

/**
 * Companion file for the export flow: the session file itself must stay
 * byte-identical to the server's (the CLI replays it), so client-side
 * decision timing goes in a JSON sidecar.
 */
export function timingSidecar(state: ViewState): string {
  return JSON.stringify(
    {
      sessionId: state.session?.id ?? null,
      labelSeconds: state.labelSeconds,
    },
    null,
    2,
  );
}
