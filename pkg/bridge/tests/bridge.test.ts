import { execFileSync, spawnSync } from "node:child_process";
import { mkdtempSync, readdirSync, readFileSync } from "node:fs";
import { tmpdir } from "node:os";
import * as path from "node:path";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";

import { lintCorpus, lintFile, linterVersion } from "../src/runner.js";

const HERE = path.dirname(fileURLToPath(import.meta.url));
const FAKE_LINTER = ["python3", path.join(HERE, "fixtures", "fake-pylint.py")];
const SNIPPETS = path.join(HERE, "..", "..", "src", "psckit", "data", "golden", "snippets");
const GOLDENS = path.join(HERE, "..", "..", "src", "psckit", "data", "golden", "diagnostics");

function freshDir(): string {
  return mkdtempSync(path.join(tmpdir(), "bridge-"));
}

function pylintPinnedAvailable(): boolean {
  const probe = spawnSync("pylint", ["--version"], { encoding: "utf-8" });
  if (probe.error || probe.status !== 0) return false;
  return /pylint[^\d]*3\.3\.6/.test(probe.stdout);
}

describe("runner", () => {
  it("reports the fake linter version", async () => {
    await expect(linterVersion(FAKE_LINTER)).resolves.toBe("3.3.6");
  });

  it("rejects a version that does not match the pin", async () => {
    await expect(
      lintCorpus(SNIPPETS, freshDir(), {
        linterCommand: FAKE_LINTER,
        jobs: 2,
        expectedVersion: "3.2.0",
      }),
    ).rejects.toThrow(/does not match pinned/);
  });

  it("records a crash as a diagnostic-free record with an error note", async () => {
    const record = await lintFile(path.join(SNIPPETS, "s001.py"), "3.3.6", {
      linterCommand: ["python3", path.join(HERE, "fixtures", "crashing-linter.py")],
      jobs: 1,
    });
    expect(record.smells).toEqual([]);
    expect(record.error).toMatch(/crash/);
  });
});

describe("golden regeneration (criterion 8)", () => {
  it("reproduces every committed golden file byte-identically", async () => {
    const outDir = freshDir();
    const report = await lintCorpus(SNIPPETS, outDir, {
      linterCommand: FAKE_LINTER,
      jobs: 4,
      expectedVersion: "3.3.6",
    });
    expect(report.written).toBe(50);
    expect(report.errors).toEqual([]);

    const goldenFiles = readdirSync(GOLDENS).filter((f) => f.endsWith(".json")).sort();
    expect(goldenFiles.length).toBe(50);
    for (const name of goldenFiles) {
      const regenerated = readFileSync(path.join(outDir, name));
      const committed = readFileSync(path.join(GOLDENS, name));
      expect(regenerated.equals(committed), `${name} differs`).toBe(true);
    }
  });

  it("emits records the primary ingest accepts with zero schema errors", async () => {
    const outDir = freshDir();
    await lintCorpus(SNIPPETS, outDir, { linterCommand: FAKE_LINTER, jobs: 4 });
    const files = readdirSync(outDir)
      .filter((f) => f.endsWith(".json"))
      .map((f) => path.join(outDir, f));
    const merged = path.join(freshDir(), "merged.json");
    const result = spawnSync(
      "python3",
      ["-m", "psckit.cli", "ingest", "--diagnostics", ...files, "--out", merged, "--strict"],
      { encoding: "utf-8" },
    );
    expect(result.stderr).not.toMatch(/schema error/);
    expect(result.status).toBe(0);
  });
});

describe("command line", () => {
  it("runs end to end via the built entry point", () => {
    const outDir = freshDir();
    const stdout = execFileSync(
      "node",
      [
        path.join(HERE, "..", "dist", "cli.js"),
        "--in", SNIPPETS,
        "--out", outDir,
        "--linter", FAKE_LINTER.join(" "),
        "--jobs", "2",
      ],
      { encoding: "utf-8" },
    );
    expect(stdout).toMatch(/linted 50 snippets with linter 3\.3\.6/);
    expect(readdirSync(outDir).filter((f) => f.endsWith(".json")).length).toBe(50);
  });

  it("exits 2 on missing required flags", () => {
    const result = spawnSync("node", [path.join(HERE, "..", "dist", "cli.js")], {
      encoding: "utf-8",
    });
    expect(result.status).toBe(2);
  });

  it("exits 1 on a version mismatch against the lockfile", () => {
    const result = spawnSync(
      "node",
      [
        path.join(HERE, "..", "dist", "cli.js"),
        "--in", SNIPPETS,
        "--out", freshDir(),
        "--linter", FAKE_LINTER.join(" "),
      ],
      { encoding: "utf-8", env: { ...process.env, FAKE_PYLINT_MODE: "wrong-version" } },
    );
    expect(result.status).toBe(1);
    expect(result.stderr).toMatch(/does not match pinned/);
  });
});

describe.skipIf(!pylintPinnedAvailable())("live pinned linter", () => {
  it("reproduces the committed golden files from a real linter run", async () => {
    const outDir = freshDir();
    await lintCorpus(SNIPPETS, outDir, { linterCommand: ["pylint"], jobs: 4 });
    for (const name of readdirSync(GOLDENS).filter((f) => f.endsWith(".json"))) {
      const regenerated = readFileSync(path.join(outDir, name));
      const committed = readFileSync(path.join(GOLDENS, name));
      expect(regenerated.equals(committed), `${name} differs`).toBe(true);
    }
  });
});
