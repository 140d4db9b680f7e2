#!/usr/bin/env node
/**
 * bridge --in <dir> --out <dir> [--linter <cmd>] [--jobs N]
 *        [--expect-version X | --allow-version-drift]
 *
 * Runs the external linter over every .py file in the input directory and
 * writes one bridge-schema JSON per snippet. The pinned linter version
 * comes from linter.lock next to the package root unless overridden.
 */

import { parseArgs } from "node:util";
import * as path from "node:path";
import { fileURLToPath } from "node:url";

import { lintCorpus, readLockedVersion } from "./runner.js";

const HERE = path.dirname(fileURLToPath(import.meta.url));

export async function main(argv: string[]): Promise<number> {
  let parsed;
  try {
    parsed = parseArgs({
      args: argv,
      options: {
        in: { type: "string" },
        out: { type: "string" },
        linter: { type: "string", default: "pylint" },
        jobs: { type: "string", default: "4" },
        "expect-version": { type: "string" },
        "allow-version-drift": { type: "boolean", default: false },
        help: { type: "boolean", default: false },
      },
    });
  } catch (error) {
    console.error(String(error));
    return 2;
  }
  const values = parsed.values;
  if (values.help || !values.in || !values.out) {
    console.error(
      "usage: bridge --in <dir> --out <dir> [--linter <cmd>] [--jobs N] " +
        "[--expect-version X | --allow-version-drift]",
    );
    return values.help ? 0 : 2;
  }
  const jobs = Number.parseInt(values.jobs ?? "4", 10);
  if (!Number.isFinite(jobs) || jobs < 1) {
    console.error(`invalid --jobs value: ${values.jobs}`);
    return 2;
  }
  let expected = values["expect-version"];
  if (!expected && !values["allow-version-drift"]) {
    expected = await readLockedVersion(path.join(HERE, "..", "linter.lock"));
  }
  try {
    const report = await lintCorpus(values.in, values.out, {
      linterCommand: (values.linter ?? "pylint").split(/\s+/),
      jobs,
      expectedVersion: values["allow-version-drift"] ? undefined : expected,
    });
    console.log(
      `linted ${report.written} snippets with linter ${report.version}` +
        (report.errors.length ? `; ${report.errors.length} crash records` : ""),
    );
    for (const line of report.errors) {
      console.error(`  ${line}`);
    }
    return 0;
  } catch (error) {
    console.error(String(error instanceof Error ? error.message : error));
    return 1;
  }
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  path.resolve(process.argv[1]) === fileURLToPath(import.meta.url);

if (invokedDirectly) {
  main(process.argv.slice(2)).then((code) => {
    process.exitCode = code;
  });
}
