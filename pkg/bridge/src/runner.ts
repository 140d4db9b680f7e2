/**
 * Invoke the external linter per snippet with a bounded process pool and
 * convert its JSON output into bridge records.
 *
 * Linter exit codes follow the pylint convention of a status bitmask;
 * only the fatal (1) and usage (32) bits, or unreadable output, count as
 * a crash. A crash yields a diagnostic-free record with an error note
 * instead of aborting the corpus run.
 */

import { execFile } from "node:child_process";
import { readdir, readFile, writeFile, mkdir } from "node:fs/promises";
import * as path from "node:path";

import {
  BridgeRecord,
  buildRecord,
  errorRecord,
  isLinterMessage,
  LinterMessage,
  renderRecord,
} from "./schema.js";

const FATAL_BIT = 1;
const USAGE_BIT = 32;

export interface RunnerOptions {
  linterCommand: string[];
  jobs: number;
  expectedVersion?: string;
}

interface ExecResult {
  code: number;
  stdout: string;
  stderr: string;
}

function run(command: string[], args: string[]): Promise<ExecResult> {
  return new Promise((resolve, reject) => {
    const [bin, ...prefix] = command;
    execFile(
      bin,
      [...prefix, ...args],
      { maxBuffer: 64 * 1024 * 1024 },
      (error, stdout, stderr) => {
        if (error && error.code === undefined) {
          reject(error); // spawn failure (binary missing), not a lint status
          return;
        }
        const code = error && typeof error.code === "number" ? error.code : 0;
        resolve({ code, stdout: String(stdout), stderr: String(stderr) });
      },
    );
  });
}

export async function linterVersion(command: string[]): Promise<string> {
  const result = await run(command, ["--version"]);
  const match = /pylint[^\d]*(\d+\.\d+(?:\.\d+)?)/i.exec(result.stdout);
  if (!match) {
    throw new Error(`cannot parse linter version from: ${result.stdout.slice(0, 120)}`);
  }
  return match[1];
}

export async function lintFile(
  filePath: string,
  version: string,
  options: RunnerOptions,
): Promise<BridgeRecord> {
  const sampleId = path.basename(filePath).replace(/\.py$/, "");
  let result: ExecResult;
  try {
    result = await run(options.linterCommand, [
      "--output-format=json",
      "--score=n",
      filePath,
    ]);
  } catch (error) {
    return errorRecord(sampleId, version, `linter crash: ${String(error)}`);
  }
  if (result.code & USAGE_BIT) {
    return errorRecord(sampleId, version, `linter usage error: ${result.stderr.trim()}`);
  }
  let parsed: unknown;
  try {
    parsed = JSON.parse(result.stdout || "[]");
  } catch {
    return errorRecord(sampleId, version, "linter crash: unparseable JSON output");
  }
  if (!Array.isArray(parsed)) {
    return errorRecord(sampleId, version, "linter crash: output is not a JSON array");
  }
  const messages: LinterMessage[] = [];
  for (const item of parsed) {
    if (isLinterMessage(item)) {
      messages.push(item);
    }
  }
  if (result.code & FATAL_BIT && messages.length === 0) {
    return errorRecord(sampleId, version, `linter crash: ${result.stderr.trim()}`);
  }
  return buildRecord(sampleId, version, messages);
}

async function pooledMap<T, R>(
  items: T[],
  limit: number,
  worker: (item: T) => Promise<R>,
): Promise<R[]> {
  const results: R[] = new Array(items.length);
  let next = 0;
  async function drain(): Promise<void> {
    while (next < items.length) {
      const index = next++;
      results[index] = await worker(items[index]);
    }
  }
  const lanes = Array.from({ length: Math.max(1, Math.min(limit, items.length)) }, drain);
  await Promise.all(lanes);
  return results;
}

export interface CorpusReport {
  written: number;
  errors: string[];
  version: string;
}

export async function lintCorpus(
  inDir: string,
  outDir: string,
  options: RunnerOptions,
): Promise<CorpusReport> {
  const version = await linterVersion(options.linterCommand);
  if (options.expectedVersion && version !== options.expectedVersion) {
    throw new Error(
      `linter version ${version} does not match pinned ${options.expectedVersion}`,
    );
  }
  const entries = (await readdir(inDir))
    .filter((name) => name.endsWith(".py"))
    .sort();
  await mkdir(outDir, { recursive: true });
  const errors: string[] = [];
  await pooledMap(entries, options.jobs, async (name) => {
    const record = await lintFile(path.join(inDir, name), version, options);
    if (record.error) {
      errors.push(`${record.sample_id}: ${record.error}`);
    }
    const target = path.join(outDir, `${record.sample_id}.json`);
    await writeFile(target, renderRecord(record), "utf-8");
  });
  return { written: entries.length, errors, version };
}

export async function readLockedVersion(lockPath: string): Promise<string | undefined> {
  try {
    const text = await readFile(lockPath, "utf-8");
    const match = /pylint==(\S+)/.exec(text);
    return match ? match[1] : undefined;
  } catch {
    return undefined;
  }
}
