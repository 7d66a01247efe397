// @vitest-environment jsdom

// Rendering tests against canned API payloads; no server involved.

import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient, SessionView } from "../src/api.js";
import { App } from "../src/app.js";
import { Controller } from "../src/controller.js";
import { applySession, setConflict } from "../src/state.js";

function result(id: string, status: string) {
  return {
    id,
    file: id.split("#")[0],
    signature: id.split("#")[1],
    span: { startLine: 3, startCol: 1, endLine: 12, endCol: 2 },
    snippet: "public void m() {",
    status,
  };
}

function sessionView(): SessionView {
  return {
    id: "deadbeef0001",
    status: "active",
    bias: "nested",
    fingerprint: "f".repeat(16),
    seed: {
      method: "Seed.java#m()#method0",
      firstLine: 3,
      lastLine: 12,
      annotations: ["Seed.java#m()#if0"],
    },
    iterations: [
      {
        index: 1,
        query: 'query(X) :- methoddec(X), contains(X,IF0), iflike(IF0,"a<b").',
        results: [
          result("Seed.java#m()#method0", "previously-positive"),
          result("Other.java#x()#method0", "newly-returned"),
          result("Bad.java#y()#method0", "previously-negative"),
        ],
        positives: [],
        negatives: ["Bad.java#y()#method0"],
        labelTimes: {},
      },
    ],
    report: null,
  } as SessionView;
}

describe("App rendering", () => {
  let root: HTMLElement;
  let app: App;
  let ctl: Controller;

  beforeEach(() => {
    document.body.innerHTML = "";
    root = document.createElement("div");
    document.body.appendChild(root);
    ctl = new Controller(new ApiClient("http://unused.invalid"));
    app = new App(root, ctl);
  });

  it("shows the picker when nothing is selected", () => {
    app.methods = [
      {
        id: "A.java#f()#method0",
        file: "A.java",
        signature: "f()",
        span: { startLine: 1, startCol: 1, endLine: 2, endCol: 2 },
        snippet: "void f() {",
      },
    ];
    app.render();
    expect(root.querySelector("section.picker")).toBeTruthy();
    expect(root.textContent).toContain("f()");
  });

  it("renders result badges from server statuses only", () => {
    applySession(ctl.state, sessionView(), 0);
    app.render();
    const badges = [...root.querySelectorAll(".badge")].map(
      (b) => b.textContent,
    );
    expect(badges).toEqual(["labeled +", "new", "labeled -"]);
    const query = root.querySelector("code.query")!;
    expect(query.textContent).toBe(
      'query(X) :- methoddec(X), contains(X,IF0), iflike(IF0,"a<b").',
    );
  });

  it("disables refine until something is labeled", () => {
    applySession(ctl.state, sessionView(), 0);
    app.render();
    const refine = () =>
      root.querySelector<HTMLButtonElement>('[data-action="refine"]')!;
    expect(refine().disabled).toBe(true);
    root
      .querySelector<HTMLElement>(
        '[data-action="label-positive"][data-id="Other.java#x()#method0"]',
      )!
      .click();
    expect(refine().disabled).toBe(false);
    expect(refine().textContent).toBe("refine");
  });

  it("renders the inconsistency report prominently", () => {
    applySession(ctl.state, sessionView(), 0);
    setConflict(
      ctl.state,
      ["Other.java#x()#method0 labeled both positive and negative"],
      ["Other.java#x()#method0"],
    );
    app.render();
    const panel = root.querySelector(".conflict")!;
    expect(panel.textContent).toContain("inconsistent labels");
    expect(panel.textContent).toContain("Other.java#x()#method0");
    expect(root.querySelector("li.result.conflicted")).toBeTruthy();
  });

  it("escapes method ids and snippets", () => {
    const view = sessionView();
    view.iterations[0].results[1].snippet = "<script>alert(1)</script>";
    applySession(ctl.state, view, 0);
    app.render();
    expect(root.querySelector("script")).toBeNull();
    expect(root.textContent).toContain("<script>alert(1)</script>");
  });
});
