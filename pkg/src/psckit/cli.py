"""Subcommand front end.

Subcommands read and write the file schemas owned by their modules:
ingest, score, detect, transform, robustness, infogain, causal, mitigate,
report. All randomness flows from --seed (per-task seeds are derived by
stable hashing), output files are written atomically, and identical
inputs produce byte-identical outputs.

Exit codes: 0 success, 1 per-sample failure under --strict, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
import tempfile
from pathlib import Path
from typing import Iterable, Sequence

from . import __version__
from .causal import REPORT_HEADER, causal_report, read_frame_csv, report_csv_rows
from .core import SmellDiagnostic
from .errors import PsckitError, SchemaError
from .infogain import DEFAULT_BINS, SeverityDataset, ig_report
from .inference import (
    CompletionsClient,
    DecodingConfig,
    EndpointConfig,
    read_traces,
)
from .mitigation import (
    DEFAULT_TEMPLATES,
    MitigationSample,
    PromptId,
    PromptTemplate,
    run_mitigation,
)
from .psc import BoundsScope, DEFAULT_EPSILON, DEFAULT_LAMBDA, align_and_score
from .smells import RULE_SYMBOLS, RuleSet, detect, parse_diagnostics
from .stats import robustness_csv_rows, robustness_report
from .svg import bar_chart_svg, boxplot_svg
from .transforms import SiteSelector, TransformKind, transform


def task_seed(seed: int, task_id: str) -> int:
    digest = hashlib.sha256(f"{seed}:{task_id}".encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def atomic_write(path: Path, content: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(content)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def csv_text(header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if v is None else _csv_value(v) for v in row])
    return buf.getvalue()


def _csv_value(v: object) -> object:
    if isinstance(v, float):
        return repr(v)
    return v


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 1


def _snippet_files(path: Path) -> list[Path]:
    if path.is_dir():
        return sorted(path.glob("*.py"))
    return [path]


def _diagnostic_record(sample_id: str, diags: Sequence[SmellDiagnostic]) -> dict:
    return {
        "sample_id": sample_id,
        "smells": [
            {
                "rule_id": d.rule_id,
                "symbol": d.symbol,
                "start_line": d.start_line,
                "start_col": d.start_col,
                "end_line": d.end_line,
                "end_col": d.end_col,
                "message": d.message,
            }
            for d in diags
        ],
    }


# -- subcommand implementations -------------------------------------------------


def cmd_ingest(args) -> int:
    records = []
    failures = 0
    for path in args.diagnostics:
        try:
            payload = json.loads(Path(path).read_text(encoding="utf-8"))
            raw_records = payload if isinstance(payload, list) else [payload]
            for raw in raw_records:
                diags = parse_diagnostics(raw)
                records.append(_diagnostic_record(raw["sample_id"], diags))
        except (SchemaError, ValueError, KeyError, TypeError) as exc:
            failures += 1
            print(f"schema error in {path}: {exc}", file=sys.stderr)
            continue
    records.sort(key=lambda r: r["sample_id"])
    atomic_write(Path(args.out), json.dumps(records, indent=2) + "\n")
    print(f"ingested {len(records)} records from {len(args.diagnostics)} files")
    return 1 if failures and args.strict else 0


def _parallel_map(fn, items: Sequence, jobs: int) -> list:
    """Order-preserving map with a bounded worker pool; exceptions surface
    in place of results."""
    if jobs <= 1 or len(items) <= 1:
        out = []
        for item in items:
            try:
                out.append(fn(item))
            except Exception as exc:  # noqa: BLE001 - per-item failures surface to caller
                out.append(exc)
        return out
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(fn, item) for item in items]
        out = []
        for future in futures:
            try:
                out.append(future.result())
            except Exception as exc:  # noqa: BLE001
                out.append(exc)
        return out


def cmd_detect(args) -> int:
    rules = RuleSet(
        rules=frozenset(args.rules.split(",")) if args.rules else frozenset(RULE_SYMBOLS),
        max_line_length=args.max_line_length,
    )

    def one(path: Path) -> dict:
        sample_id = path.stem
        diags = detect(path.read_text(encoding="utf-8"), rules, sample_id=sample_id)
        return _diagnostic_record(sample_id, diags)

    results = _parallel_map(one, _snippet_files(Path(args.snippets)), args.jobs)
    records = [r for r in results if not isinstance(r, Exception)]
    failures = len(results) - len(records)
    for r in results:
        if isinstance(r, Exception):
            print(f"detect failure: {r}", file=sys.stderr)
    atomic_write(Path(args.out), json.dumps(records, indent=2) + "\n")
    print(f"detected smells in {len(records)} snippets")
    return 1 if failures and args.strict else 0


def _load_diagnostic_records(path: Path) -> list[SmellDiagnostic]:
    payload = json.loads(path.read_text(encoding="utf-8"))
    records = payload if isinstance(payload, list) else [payload]
    out: list[SmellDiagnostic] = []
    for record in records:
        out.extend(parse_diagnostics(record))
    return out


SCORES_HEADER = (
    "sample_id",
    "rule_id",
    "span_i",
    "span_j",
    "psc_mean",
    "psc_median",
    "psc_relative",
    "propense",
)


def cmd_score(args) -> int:
    traces = {t.sample_id: t for t in read_traces(args.traces)}
    diagnostics = _load_diagnostic_records(Path(args.diagnostics))
    pairs = []
    missing = 0
    for diag in diagnostics:
        trace = traces.get(diag.sample_id)
        if trace is None:
            missing += 1
            print(f"no trace for sample {diag.sample_id!r}", file=sys.stderr)
            continue
        pairs.append((trace, diag))
    scores, skipped = align_and_score(
        pairs,
        epsilon=args.epsilon,
        scope=BoundsScope(args.scope),
        lam=getattr(args, "lambda"),
        decision_aggregate=args.aggregate,
    )
    for diag, why in skipped:
        print(f"unalignable {diag.rule_id} in {diag.sample_id}: {why}", file=sys.stderr)
    rows = [
        (
            s.sample_id,
            s.rule_id,
            s.span.i,
            s.span.j,
            s.psc_mean,
            s.psc_median,
            s.psc_relative,
            int(s.propense),
        )
        for s in scores
    ]
    atomic_write(Path(args.out), csv_text(SCORES_HEADER, rows))
    print(f"scored {len(rows)} spans ({len(skipped)} unalignable, {missing} without traces)")
    return 1 if (skipped or missing) and args.strict else 0


def cmd_transform(args) -> int:
    kinds = list(TransformKind) if args.kind == "all" else [TransformKind(args.kind)]
    out_dir = Path(args.out_dir)

    def one(path: Path) -> tuple[str, dict, list[str]]:
        sample_id = path.stem
        source = path.read_text(encoding="utf-8")
        sites: dict[str, list[list[int]]] = {}
        errors: list[str] = []
        for kind in kinds:
            try:
                out, record = transform(
                    source,
                    kind,
                    SiteSelector(args.selector),
                    seed=task_seed(args.seed, f"{sample_id}:{kind.value}"),
                )
            except PsckitError as exc:
                errors.append(f"{sample_id} {kind.value}: {exc}")
                continue
            atomic_write(out_dir / f"{sample_id}.{kind.value}.py", out)
            sites[kind.value] = [list(site) for site in record.applied_sites]
        return sample_id, sites, errors

    results = _parallel_map(one, _snippet_files(Path(args.snippets)), args.jobs)
    manifest: dict[str, dict[str, list[list[int]]]] = {}
    failures = 0
    for result in results:
        if isinstance(result, Exception):
            failures += 1
            print(f"transform failure: {result}", file=sys.stderr)
            continue
        sample_id, sites, errors = result
        manifest[sample_id] = sites
        failures += len(errors)
        for line in errors:
            print(line, file=sys.stderr)
    atomic_write(out_dir / "manifest.json", json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    print(f"transformed {len(manifest)} snippets x {len(kinds)} kinds")
    return 1 if failures and args.strict else 0


ROBUSTNESS_HEADER = ("rule_id", "F", "p", "eta2", "ci_mean", "ci_half_width", "robust_flag")


def cmd_robustness(args) -> int:
    scores: dict[str, dict[str, list[float]]] = {}
    with open(args.scores, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        required = {"rule_id", "variant", "psc_relative"}
        if not required.issubset(reader.fieldnames or ()):
            return _fail(f"scores CSV must carry columns {sorted(required)}")
        for row in reader:
            scores.setdefault(row["rule_id"], {}).setdefault(row["variant"], []).append(
                float(row["psc_relative"])
            )
    warnings: list[str] = []
    rows = robustness_report(
        scores, clamp_delta=args.clamp_delta, use_t_ci=args.t_ci, warn=warnings
    )
    for message in warnings:
        print(f"warning: {message}", file=sys.stderr)
    table = robustness_csv_rows(rows)
    atomic_write(
        Path(args.out),
        csv_text(ROBUSTNESS_HEADER, [[r[c] for c in ROBUSTNESS_HEADER] for r in table]),
    )
    flagged = sum(1 for r in rows if not r.robust)
    print(f"analyzed {len(rows)} rules ({flagged} non-robust)")
    return 1 if warnings and args.strict else 0


IG_HEADER = ("rule_id", "metric", "ig_bits", "h_s_bits", "n")


def cmd_infogain(args) -> int:
    severity: dict[tuple[str, str], tuple[int, int]] = {}
    with open(args.severity, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        required = {"sample_id", "rule_id", "n_s", "n_t"}
        if not required.issubset(reader.fieldnames or ()):
            return _fail(f"severity CSV must carry columns {sorted(required)}")
        for row in reader:
            severity[(row["sample_id"], row["rule_id"])] = (int(row["n_s"]), int(row["n_t"]))

    metric_values: dict[tuple[str, str], dict[str, float]] = {}
    for metrics_path in args.metrics:
        with open(metrics_path, newline="", encoding="utf-8") as fh:
            reader = csv.DictReader(fh)
            required = {"sample_id", "rule_id", "metric_name", "value"}
            if not required.issubset(reader.fieldnames or ()):
                return _fail(f"metrics CSV must carry columns {sorted(required)}")
            for row in reader:
                key = (row["sample_id"], row["rule_id"])
                metric_values.setdefault(key, {})[row["metric_name"]] = float(row["value"])

    dataset = SeverityDataset()
    for (sample_id, rule_id), (n_s, n_t) in sorted(severity.items()):
        dataset.add(sample_id, rule_id, n_s, n_t, metric_values.get((sample_id, rule_id), {}))
    metric_names = args.metric_names.split(",") if args.metric_names else sorted(
        {m for values in metric_values.values() for m in values}
    )
    warnings: list[str] = []
    try:
        rows = ig_report(dataset, metric_names, bins=args.bins, warn=warnings)
    except KeyError as exc:
        return _fail(str(exc))
    for message in warnings:
        print(f"warning: {message}", file=sys.stderr)
    atomic_write(
        Path(args.out),
        csv_text(IG_HEADER, [(r.rule_id, r.metric, r.ig_bits, r.h_s_bits, r.n) for r in rows]),
    )
    print(f"computed information gain for {len(rows)} (rule, metric) pairs")
    return 0


def cmd_causal(args) -> int:
    frame = read_frame_csv(args.frame, control=args.control)
    rows = causal_report(
        frame,
        outcome=args.outcome,
        seed=task_seed(args.seed, "causal"),
        per_rule=not args.pooled,
    )
    table = report_csv_rows(rows)
    atomic_write(
        Path(args.out),
        csv_text(REPORT_HEADER, [[r[c] for c in REPORT_HEADER] for r in table]),
    )
    skipped = sum(1 for r in rows if r.skipped_reason)
    print(f"estimated {len(rows) - skipped} effects ({skipped} skipped)")
    return 1 if skipped and args.strict else 0


PAIRED_HEADER = ("sample_id", "rule_id", "condition", "psc_median", "propense")


def _template(name: str, avoid: str | None) -> PromptTemplate:
    template = DEFAULT_TEMPLATES[PromptId(name)]
    if avoid and template.id is PromptId.P3_STRUCTURED:
        template = PromptTemplate(
            id=template.id, template=template.template, avoid_list=tuple(avoid.split(","))
        )
    return template


def cmd_mitigate(args) -> int:
    base = Path(args.corpus)
    manifest = json.loads(Path(args.manifest).read_text(encoding="utf-8"))
    samples = []
    for entry in manifest:
        snippet_path = base / f"{entry['sample_id']}.py"
        samples.append(
            MitigationSample(
                sample_id=entry["sample_id"],
                rule_id=entry["rule_id"],
                snippet=snippet_path.read_text(encoding="utf-8"),
            )
        )
    client = CompletionsClient(
        EndpointConfig(
            base_url=args.base_url,
            model=args.model,
            request_timeout=args.timeout,
            max_concurrent=args.max_concurrent,
        )
    )
    config = DecodingConfig(
        strategy=args.strategy,
        max_new_tokens=args.max_new_tokens,
        seed=task_seed(args.seed, "mitigate") if args.strategy == "sampling" else None,
    )
    result = run_mitigation(
        samples,
        _template(args.baseline, None),
        _template(args.treatment, args.avoid),
        config,
        client,
        lam=getattr(args, "lambda"),
    )
    for sample_id, condition, why in result.incomplete:
        print(f"incomplete {sample_id} [{condition}]: {why}", file=sys.stderr)
    rows = [
        (r.sample_id, r.rule_id, r.condition, r.psc_median, int(r.propense))
        for r in sorted(result.rows, key=lambda r: (r.sample_id, r.condition))
    ]
    atomic_write(Path(args.out_csv), csv_text(PAIRED_HEADER, rows))
    svg_dir = Path(args.svg_dir) if args.svg_dir else Path(args.out_csv).parent
    for summary in result.summaries(lam=getattr(args, "lambda")):
        groups = [(name, summary.boxes[name]) for name in sorted(summary.boxes)]
        svg = boxplot_svg(
            f"{summary.rule_id} propensity by prompt",
            groups,
            lam=getattr(args, "lambda"),
        )
        atomic_write(svg_dir / f"mitigation_{summary.rule_id}.svg", svg)
    print(f"paired rows: {len(rows)}; incomplete: {len(result.incomplete)}")
    return 1 if result.incomplete and args.strict else 0


def cmd_report(args) -> int:
    out_dir = Path(args.out_dir)
    sections = []
    if args.anova:
        with open(args.anova, newline="", encoding="utf-8") as fh:
            rows = list(csv.DictReader(fh))
        sections.append("## Robustness\n")
        sections.append("| rule | F | p | eta2 | CI | robust |")
        sections.append("|---|---|---|---|---|---|")
        for r in rows:
            ci = f"{float(r['ci_mean']):.4g} ± {float(r['ci_half_width']):.4g}"
            sections.append(
                f"| {r['rule_id']} | {float(r['F']):.4g} | {float(r['p']):.4g} "
                f"| {float(r['eta2']):.4g} | {ci} | {r['robust_flag']} |"
            )
        sections.append("")
    if args.ig:
        with open(args.ig, newline="", encoding="utf-8") as fh:
            rows = list(csv.DictReader(fh))
        sections.append("## Information gain\n")
        sections.append("| rule | metric | IG (bits) | H(S) | n |")
        sections.append("|---|---|---|---|---|")
        by_rule: dict[str, list[dict]] = {}
        for r in rows:
            by_rule.setdefault(r["rule_id"], []).append(r)
            sections.append(
                f"| {r['rule_id']} | {r['metric']} | {float(r['ig_bits']):.4g} "
                f"| {float(r['h_s_bits']):.4g} | {r['n']} |"
            )
        sections.append("")
        for rule_id in sorted(by_rule):
            bars = [(r["metric"], float(r["ig_bits"])) for r in by_rule[rule_id]]
            atomic_write(
                out_dir / f"ig_{rule_id}.svg",
                bar_chart_svg(f"{rule_id} information gain", bars),
            )
    if args.causal:
        with open(args.causal, newline="", encoding="utf-8") as fh:
            rows = list(csv.DictReader(fh))
        sections.append("## Causal effects\n")
        sections.append("| rule | level | rho | ATE | se | robust |")
        sections.append("|---|---|---|---|---|---|")
        for r in rows:
            if r["skipped"]:
                continue
            sections.append(
                f"| {r['rule_id']} | {r['treatment_level']} | {float(r['rho']):.3g} "
                f"| {float(r['ate']):.3g} | {float(r['se']):.3g} | {r['robust']} |"
            )
        sections.append("")
    if args.paired:
        from .mitigation import MitigationResult, PairedRow

        with open(args.paired, newline="", encoding="utf-8") as fh:
            rows = list(csv.DictReader(fh))
        result = MitigationResult(
            rows=[
                PairedRow(
                    sample_id=r["sample_id"],
                    rule_id=r["rule_id"],
                    condition=r["condition"],
                    psc_median=float(r["psc_median"]),
                    propense=r["propense"] == "1",
                )
                for r in rows
            ]
        )
        sections.append("## Mitigation\n")
        sections.append("| rule | condition | median | below threshold |")
        sections.append("|---|---|---|---|")
        for summary in result.summaries():
            for condition in sorted(summary.medians):
                sections.append(
                    f"| {summary.rule_id} | {condition} | {summary.medians[condition]:.4g} "
                    f"| {summary.below_lambda[condition]:.4g} |"
                )
        sections.append("")
    if not sections:
        return _fail("report needs at least one input (--anova/--ig/--causal/--paired)")
    body = "# psckit report\n\n" + "\n".join(sections)
    atomic_write(out_dir / "report.md", body)
    print(f"report written to {out_dir / 'report.md'}")
    return 0


# -- parser ------------------------------------------------------------------


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--seed", type=int, default=0, help="root seed for derived randomness")
    sub.add_argument("--jobs", type=int, default=1, help="parallelism bound")
    sub.add_argument("--strict", action="store_true", help="exit 1 on any per-sample failure")
    sub.add_argument("--config", default=None, help="key=value file mirroring flags")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="psckit",
        description="Measure, explain and mitigate code-smell propensity of code LLMs.",
    )
    parser.add_argument("--version", action="version", version=f"psckit {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("ingest", help="validate external-linter diagnostics files")
    p.add_argument("--diagnostics", nargs="+", required=True)
    p.add_argument("--out", required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_ingest)

    p = subs.add_parser("detect", help="run the native smell detector over snippets")
    p.add_argument("--snippets", required=True, help="snippet file or directory")
    p.add_argument("--out", required=True)
    p.add_argument("--rules", default=None, help="comma-separated rule ids (default: all)")
    p.add_argument("--max-line-length", type=int, default=100)
    _add_common(p)
    p.set_defaults(fn=cmd_detect)

    p = subs.add_parser("score", help="align diagnostics to traces and score spans")
    p.add_argument("--traces", required=True)
    p.add_argument("--diagnostics", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
    p.add_argument(
        "--scope",
        choices=[s.value for s in BoundsScope],
        default=BoundsScope.PER_SMELL_TYPE_BATCH.value,
    )
    p.add_argument("--lambda", type=float, default=DEFAULT_LAMBDA)
    p.add_argument("--aggregate", choices=["mean", "median", "relative"], default="median")
    _add_common(p)
    p.set_defaults(fn=cmd_score)

    p = subs.add_parser("transform", help="apply semantic-preserving transformations")
    p.add_argument("--snippets", required=True)
    p.add_argument("--out-dir", required=True)
    p.add_argument(
        "--kind", default="all", choices=["all"] + [k.value for k in TransformKind]
    )
    p.add_argument(
        "--selector", default="all", choices=[s.value for s in SiteSelector]
    )
    _add_common(p)
    p.set_defaults(fn=cmd_transform)

    p = subs.add_parser("robustness", help="ANOVA across transformation variants")
    p.add_argument("--scores", required=True, help="CSV: rule_id, variant, psc_relative")
    p.add_argument("--out", required=True)
    p.add_argument("--clamp-delta", type=float, default=1e-6)
    p.add_argument("--t-ci", action="store_true", help="t-based intervals instead of normal")
    _add_common(p)
    p.set_defaults(fn=cmd_robustness)

    p = subs.add_parser("infogain", help="information gain of metrics about severity")
    p.add_argument("--severity", required=True, help="CSV: sample_id, rule_id, n_s, n_t")
    p.add_argument(
        "--metrics",
        nargs="+",
        required=True,
        help="CSV(s): sample_id, rule_id, metric_name, value",
    )
    p.add_argument("--metric-names", default=None, help="comma-separated subset to report")
    p.add_argument("--bins", type=int, default=DEFAULT_BINS)
    p.add_argument("--out", required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_infogain)

    p = subs.add_parser("causal", help="treatment effects with refutation tests")
    p.add_argument("--frame", required=True)
    p.add_argument("--control", required=True)
    p.add_argument("--outcome", choices=["y1", "y0"], default="y1")
    p.add_argument("--pooled", action="store_true", help="estimate across rules pooled")
    p.add_argument("--out", required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_causal)

    p = subs.add_parser("mitigate", help="paired prompt-mitigation experiment")
    p.add_argument("--corpus", required=True, help="directory of snippet files")
    p.add_argument("--manifest", required=True, help="JSON list of {sample_id, rule_id}")
    p.add_argument("--base-url", required=True)
    p.add_argument("--model", default="stub-model")
    p.add_argument("--baseline", default=PromptId.P0_MINIMAL.value,
                   choices=[t.value for t in PromptId])
    p.add_argument("--treatment", default=PromptId.P3_STRUCTURED.value,
                   choices=[t.value for t in PromptId])
    p.add_argument("--avoid", default=None, help="comma-separated avoid list for p3")
    p.add_argument("--strategy", default="greedy")
    p.add_argument("--max-new-tokens", type=int, default=128)
    p.add_argument("--lambda", type=float, default=DEFAULT_LAMBDA)
    p.add_argument("--timeout", type=float, default=60.0)
    p.add_argument("--max-concurrent", type=int, default=4)
    p.add_argument("--out-csv", required=True)
    p.add_argument("--svg-dir", default=None)
    _add_common(p)
    p.set_defaults(fn=cmd_mitigate)

    p = subs.add_parser("report", help="compose CSV outputs into a markdown report")
    p.add_argument("--anova", default=None)
    p.add_argument("--ig", default=None)
    p.add_argument("--causal", default=None)
    p.add_argument("--paired", default=None)
    p.add_argument("--out-dir", required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_report)

    return parser


def _apply_config(argv: list[str]) -> list[str]:
    """Inject config-file values as defaults; explicit flags win."""
    if "--config" not in argv:
        return argv
    at = argv.index("--config")
    if at + 1 >= len(argv):
        return argv
    config_path = argv[at + 1]
    injected: list[str] = []
    for lineno, line in enumerate(
        Path(config_path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise SchemaError(f"config line {lineno}: expected key=value, got {line!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        flag = f"--{key.replace('_', '-')}"
        if flag in argv:
            continue  # explicit flag wins
        if value.lower() in ("true", "yes"):
            injected.append(flag)
        else:
            injected.extend([flag, value])
    head, tail = argv[:1], argv[1:]
    return head + injected + tail


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        argv = _apply_config(argv)
    except (OSError, SchemaError) as exc:
        parser.error(str(exc))
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except PsckitError as exc:
        return _fail(str(exc))
    except FileNotFoundError as exc:
        return _fail(f"{exc.filename}: not found")


if __name__ == "__main__":
    sys.exit(main())
