/**
 * Bridge JSON schema: conversion from raw linter messages and the exact
 * serialization contract.
 *
 * Output records must be byte-stable so regenerated golden files can be
 * compared to committed ones: fixed key order, 2-space indentation, one
 * trailing newline.
 */

export interface LinterMessage {
  type: string;
  module?: string;
  obj?: string;
  line: number;
  column: number;
  endLine: number | null;
  endColumn: number | null;
  path?: string;
  symbol: string;
  message: string;
  "message-id": string;
}

export interface BridgeSmell {
  rule_id: string;
  symbol: string;
  start_line: number;
  start_col: number;
  end_line: number | null;
  end_col: number | null;
  message: string;
}

export interface BridgeRecord {
  sample_id: string;
  linter_version: string;
  smells: BridgeSmell[];
  error?: string;
}

/** Message ids that mean the snippet could not be analyzed at all. */
const SYNTAX_ERROR_ID = "E0001";

export function isLinterMessage(value: unknown): value is LinterMessage {
  if (typeof value !== "object" || value === null) return false;
  const m = value as Record<string, unknown>;
  return (
    typeof m["message-id"] === "string" &&
    typeof m.symbol === "string" &&
    typeof m.message === "string" &&
    typeof m.line === "number" &&
    typeof m.column === "number"
  );
}

export function toSmell(message: LinterMessage): BridgeSmell {
  return {
    rule_id: message["message-id"],
    symbol: message.symbol,
    start_line: message.line,
    start_col: message.column,
    end_line: message.endLine ?? null,
    end_col: message.endColumn ?? null,
    message: message.message,
  };
}

export function compareSmells(a: BridgeSmell, b: BridgeSmell): number {
  if (a.start_line !== b.start_line) return a.start_line - b.start_line;
  if (a.start_col !== b.start_col) return a.start_col - b.start_col;
  return a.rule_id < b.rule_id ? -1 : a.rule_id > b.rule_id ? 1 : 0;
}

export function buildRecord(
  sampleId: string,
  linterVersion: string,
  messages: LinterMessage[],
): BridgeRecord {
  const syntax = messages.find((m) => m["message-id"] === SYNTAX_ERROR_ID);
  if (syntax) {
    return {
      sample_id: sampleId,
      linter_version: linterVersion,
      smells: [],
      error: `syntax-error: ${syntax.message}`,
    };
  }
  const smells = messages.map(toSmell).sort(compareSmells);
  return { sample_id: sampleId, linter_version: linterVersion, smells };
}

export function errorRecord(
  sampleId: string,
  linterVersion: string,
  note: string,
): BridgeRecord {
  return { sample_id: sampleId, linter_version: linterVersion, smells: [], error: note };
}

/** Serialize a record with the byte-stable layout. */
export function renderRecord(record: BridgeRecord): string {
  return JSON.stringify(record, null, 2) + "\n";
}
