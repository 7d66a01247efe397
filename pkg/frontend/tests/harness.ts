// Shared plumbing for tests that need a real API server: build a fact
// file from the bundled figures corpus, start `facet serve` on a free
// port, wait for /health.

import { execFileSync, spawn, ChildProcess } from "node:child_process";
import { mkdtempSync } from "node:fs";
import { createServer } from "node:net";
import { tmpdir } from "node:os";
import path from "node:path";
import { fileURLToPath } from "node:url";

const HERE = path.dirname(fileURLToPath(import.meta.url));
export const FIGURES_REPO = path.resolve(HERE, "../../corpus/figures");

export const SEED_METHOD =
  "CommentMapper.java#getLeadingComments(ASTNode,int)#method0";
export const FIG3_METHOD =
  "ExtendedPosition.java#getExtendedStartPosition(ASTNode)#method0";
export const FIG4_METHOD = "CheckComment.java#checkComment()#method0";

export const ITER1_QUERY =
  'query(X) :- methoddec(X), contains(X,IF0), iflike(IF0,"this.*>=0"), ' +
  'contains(X,IF2), iflike(IF2,".*!=null").';
export const ITER2_QUERY =
  'query(X) :- methoddec(X), contains(X,IF0), iflike(IF0,"this.*>=0"), ' +
  'contains(IF0,IF2), iflike(IF2,".*!=null").';

export interface Server {
  base: string;
  factsPath: string;
  sessionsDir: string;
  stop: () => void;
}

function freePort(): Promise<number> {
  return new Promise((resolve, reject) => {
    const srv = createServer();
    srv.listen(0, "127.0.0.1", () => {
      const addr = srv.address();
      if (addr && typeof addr === "object") {
        const port = addr.port;
        srv.close(() => resolve(port));
      } else {
        srv.close(() => reject(new Error("no port")));
      }
    });
  });
}

export async function startServer(): Promise<Server> {
  const work = mkdtempSync(path.join(tmpdir(), "facet-ui-test-"));
  const factsPath = path.join(work, "figures.facts");
  const sessionsDir = path.join(work, "sessions");
  execFileSync("facet", ["extract", "--repo", FIGURES_REPO,
                         "--facts", factsPath]);
  const port = await freePort();
  const child: ChildProcess = spawn(
    "facet",
    ["serve", "--facts", factsPath, "--bind", `127.0.0.1:${port}`,
     "--sessions", sessionsDir],
    { stdio: "ignore" },
  );
  const base = `http://127.0.0.1:${port}`;
  const deadline = Date.now() + 20000;
  for (;;) {
    try {
      const res = await fetch(`${base}/health`);
      if (res.ok) break;
    } catch {
      // not up yet
    }
    if (Date.now() > deadline) {
      child.kill("SIGKILL");
      throw new Error("server did not come up");
    }
    await new Promise((r) => setTimeout(r, 100));
  }
  return { base, factsPath, sessionsDir, stop: () => child.kill("SIGKILL") };
}

export function replayViaCli(factsPath: string, sessionPath: string): string {
  return execFileSync(
    "facet",
    ["session", "--facts", factsPath, "--session", sessionPath, "--replay"],
    { encoding: "utf-8" },
  );
}

export async function waitFor(
  cond: () => boolean,
  what: string,
  ms = 8000,
): Promise<void> {
  const started = Date.now();
  while (!cond()) {
    if (Date.now() - started > ms) throw new Error(`timeout waiting for ${what}`);
    await new Promise((r) => setTimeout(r, 25));
  }
}
