/**
 * Spawns a real quiz server for the scripted-session tests: generates two
 * small banks with the engine CLI, starts `serve`, and waits for health.
 */

import { execFileSync, spawn, type ChildProcess } from "node:child_process";
import { mkdtempSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import type { GlobalSetupContext } from "vitest/node";

const PYTHON = process.env.GRAPHQUIZ_PYTHON ?? "python3";

let server: ChildProcess | undefined;
let bankDir: string | undefined;

async function waitForHealth(base: string): Promise<void> {
  const deadline = Date.now() + 30000;
  while (Date.now() < deadline) {
    try {
      const resp = await fetch(`${base}/healthz`);
      if (resp.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((r) => setTimeout(r, 200));
  }
  throw new Error("quiz server did not come up in time");
}

export default async function setup({ provide }: GlobalSetupContext) {
  bankDir = mkdtempSync(join(tmpdir(), "graphquiz-ui-"));
  const gen = (args: string[]) =>
    execFileSync(PYTHON, ["-m", "graphquiz.cli", "generate", ...args], { stdio: "pipe" });
  gen(["--kind", "topological-order", "--count", "3", "--seed", "9",
       "-o", join(bankDir, "topo.json")]);
  gen(["--kind", "dijkstra", "--count", "3", "--seed", "4",
       "--min-n", "5", "--max-n", "5", "-o", join(bankDir, "dijkstra.json")]);

  const port = 8473 + Math.floor(Math.random() * 500);
  const base = `http://127.0.0.1:${port}`;
  server = spawn(PYTHON, ["-m", "graphquiz.cli", "serve",
                          "--bank-dir", bankDir, "--port", String(port)],
                 { stdio: "ignore" });
  await waitForHealth(base);

  provide("baseUrl", base);
  provide("bankDir", bankDir);

  return () => {
    server?.kill();
    if (bankDir) rmSync(bankDir, { recursive: true, force: true });
  };
}

declare module "vitest" {
  export interface ProvidedContext {
    baseUrl: string;
    bankDir: string;
  }
}
