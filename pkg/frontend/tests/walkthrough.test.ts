// @vitest-environment jsdom

// Scripted browser walkthrough against a real server: tag two if
// statements on the seed method, label one result wanted and one wrong,
// and watch the query tighten and converge. Also checks that the
// exported session replays through the CLI and that a contradictory
// label round renders the inconsistency report.

import { mkdtempSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import path from "node:path";

import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { App } from "../src/app.js";
import { Controller } from "../src/controller.js";
import {
  FIG3_METHOD,
  FIG4_METHOD,
  ITER1_QUERY,
  ITER2_QUERY,
  SEED_METHOD,
  Server,
  replayViaCli,
  startServer,
  waitFor,
} from "./harness.js";

let server: Server;

beforeAll(async () => {
  server = await startServer();
}, 30000);

afterAll(() => {
  server?.stop();
});

function click(root: HTMLElement, selector: string): void {
  const el = root.querySelector<HTMLElement>(selector);
  if (!el) throw new Error(`no element for ${selector}`);
  el.click();
}

function freshApp(): { root: HTMLElement; app: App; ctl: Controller } {
  document.body.innerHTML = "";
  const root = document.createElement("div");
  document.body.appendChild(root);
  const ctl = new Controller(new ApiClient(server.base));
  const app = new App(root, ctl);
  return { root, app, ctl };
}

async function startWalkthroughSession(
  root: HTMLElement,
  app: App,
  ctl: Controller,
  tags: string[],
): Promise<void> {
  await app.init();
  expect(root.querySelectorAll('[data-action="pick-method"]').length).toBe(3);

  click(root, `[data-action="pick-method"][data-id="${SEED_METHOD}"]`);
  await waitFor(() => ctl.draft !== null, "feature pane");
  expect(root.querySelector("table.source")).toBeTruthy();

  const start = () =>
    root.querySelector<HTMLButtonElement>('[data-action="start-session"]')!;
  expect(start().disabled).toBe(true);
  for (const tag of tags) {
    click(root, `[data-action="toggle-tag"][data-id="${tag}"]`);
  }
  expect(start().disabled).toBe(false);
  click(root, '[data-action="start-session"]');
  await waitFor(() => ctl.state.session !== null, "session start");
}

describe("reference walkthrough", () => {
  it("replays end to end and the export replays through the CLI", async () => {
    const { root, app, ctl } = freshApp();
    await startWalkthroughSession(root, app, ctl, [
      `${SEED_METHOD.replace("#method0", "#if0")}`,
      `${SEED_METHOD.replace("#method0", "#if2")}`,
    ]);

    // iteration 1: the generalized query matches all three methods
    let queries = [...root.querySelectorAll("code.query")];
    expect(queries.length).toBe(1);
    expect(queries[0].textContent).toBe(ITER1_QUERY);
    expect(root.querySelectorAll("li.result").length).toBe(3);
    const refine = () =>
      root.querySelector<HTMLButtonElement>('[data-action="refine"]')!;
    expect(refine().disabled).toBe(true);

    // label Figure 3's method wanted, Figure 4's wrong, refine
    click(root, `[data-action="label-positive"][data-id="${FIG3_METHOD}"]`);
    click(root, `[data-action="label-negative"][data-id="${FIG4_METHOD}"]`);
    expect(refine().disabled).toBe(false);
    click(root, '[data-action="refine"]');
    await waitFor(
      () => ctl.state.session?.status === "converged",
      "convergence",
    );

    // iteration 2: the tightened query, smaller result set, all labeled
    queries = [...root.querySelectorAll("code.query")];
    expect(queries.length).toBe(2);
    expect(queries[1].textContent).toBe(ITER2_QUERY);
    expect(queries[1].textContent).toContain("contains(IF0,IF2)");
    const results = [...root.querySelectorAll("li.result")];
    expect(results.length).toBe(2);
    for (const li of results) {
      expect(li.querySelector(".badge")!.textContent).toBe("labeled +");
    }
    expect(root.querySelector(".st-converged")).toBeTruthy();
    expect(refine().disabled).toBe(true);

    // export: session file replays byte-for-byte through the CLI
    const files = await ctl.exportFiles();
    expect(files.map((f) => f.name)).toEqual([
      `${ctl.state.session!.id}.session`,
      `${ctl.state.session!.id}.timing.json`,
    ]);
    expect(files[0].text.startsWith("facet-session v1")).toBe(true);
    const work = mkdtempSync(path.join(tmpdir(), "facet-export-"));
    const sessionPath = path.join(work, files[0].name);
    writeFileSync(sessionPath, files[0].text);
    const out = replayViaCli(server.factsPath, sessionPath);
    expect(out).toContain("replay ok: 2 iterations, status converged");
    expect(out).toContain("contains(IF0,IF2)");

    // the timing sidecar carries one decision time per labeled result
    const timing = JSON.parse(files[1].text);
    expect(timing.sessionId).toBe(ctl.state.session!.id);
    expect(timing.labelSeconds[FIG3_METHOD]).toBeGreaterThanOrEqual(0);
    expect(timing.labelSeconds[FIG4_METHOD]).toBeGreaterThanOrEqual(0);

    // server-side session file replays identically too
    const stored = path.join(
      server.sessionsDir,
      `${ctl.state.session!.id}.session`,
    );
    expect(replayViaCli(server.factsPath, stored)).toContain(
      "replay ok: 2 iterations, status converged",
    );
  }, 30000);

  it("renders the inconsistency report on contradictory labels", async () => {
    const { root, app, ctl } = freshApp();
    await startWalkthroughSession(root, app, ctl, [
      `${SEED_METHOD.replace("#method0", "#if0")}`,
    ]);

    // first call Figure 4's method wanted, then flip to wrong: conflict
    click(root, `[data-action="label-positive"][data-id="${FIG4_METHOD}"]`);
    click(root, '[data-action="refine"]');
    await waitFor(
      () =>
        ctl.state.session!.iterations[0].positives.includes(FIG4_METHOD) &&
        ctl.state.pendingPositives.size === 0,
      "positive recorded",
    );
    expect(
      root.querySelector(
        `li.result.labeled-positive code`,
      )!.textContent,
    ).toContain("CheckComment");

    click(root, `[data-action="label-negative"][data-id="${FIG4_METHOD}"]`);
    click(root, '[data-action="refine"]');
    await waitFor(() => ctl.state.conflictReport !== null, "conflict report");

    const panel = root.querySelector(".conflict")!;
    expect(panel.textContent).toContain("inconsistent labels");
    expect(panel.textContent).toContain(FIG4_METHOD);
    expect(root.querySelector("li.result.conflicted")).toBeTruthy();
    // the contested pick stays selected so the user can correct it
    expect(
      root.querySelector(
        `[data-action="label-negative"][data-id="${FIG4_METHOD}"].picked`,
      ),
    ).toBeTruthy();
    // the session itself is untouched on the server
    const fresh = await new ApiClient(server.base).session(
      ctl.state.session!.id,
    );
    expect(fresh.status).toBe("active");
  }, 30000);
});
