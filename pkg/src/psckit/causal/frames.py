"""Experiment frames: one row per (sample, treatment level) with outcomes
and confounders, plus CSV round-trip in the declared column order."""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from ..errors import SchemaError
from .features import FEATURE_COLUMNS, POS_CATEGORIES, FeatureVector


@dataclass(frozen=True)
class FrameRow:
    sample_id: str
    rule_id: str
    treatment_level: str
    outcome_y1: float  # median propensity score
    outcome_y0: float  # relative propensity score
    features: FeatureVector


@dataclass
class ExperimentFrame:
    """Rows for one treatment family with a declared control level."""

    treatment: str
    levels: tuple[str, ...]
    control: str
    rows: list[FrameRow] = field(default_factory=list)

    def __post_init__(self):
        if self.control not in self.levels:
            raise SchemaError(
                f"control level {self.control!r} not among declared levels {self.levels}"
            )

    def add(self, row: FrameRow) -> None:
        if row.treatment_level not in self.levels:
            raise SchemaError(
                f"row level {row.treatment_level!r} not among declared levels {self.levels}"
            )
        self.rows.append(row)

    def level_rows(self, level: str) -> list[FrameRow]:
        return [r for r in self.rows if r.treatment_level == level]

    def rules(self) -> list[str]:
        return sorted({r.rule_id for r in self.rows})

    def subset(self, rule_id: str) -> "ExperimentFrame":
        out = ExperimentFrame(treatment=self.treatment, levels=self.levels, control=self.control)
        out.rows = [r for r in self.rows if r.rule_id == rule_id]
        return out


FRAME_HEADER = ("sample_id", "rule_id", "treatment", "level", "y1", "y0") + FEATURE_COLUMNS


def write_frame_csv(frame: ExperimentFrame, path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(FRAME_HEADER)
        for row in frame.rows:
            feats = row.features.as_row()
            writer.writerow(
                [
                    row.sample_id,
                    row.rule_id,
                    frame.treatment,
                    row.treatment_level,
                    repr(row.outcome_y1),
                    repr(row.outcome_y0),
                ]
                + [feats[c] for c in FEATURE_COLUMNS]
            )


def read_frame_csv(path: str | Path, control: str) -> ExperimentFrame:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or tuple(header) != FRAME_HEADER:
            raise SchemaError(f"{path}: unexpected frame header {header}")
        raw_rows = list(reader)
    if not raw_rows:
        raise SchemaError(f"{path}: frame has no rows")
    treatments = {r[2] for r in raw_rows}
    if len(treatments) != 1:
        raise SchemaError(f"{path}: expected a single treatment family, got {sorted(treatments)}")
    levels = tuple(sorted({r[3] for r in raw_rows} | {control}))
    frame = ExperimentFrame(treatment=raw_rows[0][2], levels=levels, control=control)
    for k, r in enumerate(raw_rows, start=2):
        if len(r) != len(FRAME_HEADER):
            raise SchemaError(f"{path}: row {k} has {len(r)} fields")
        feats = dict(zip(FEATURE_COLUMNS, (int(float(v)) for v in r[6:])))
        pos = {cat: feats.pop(f"pos_{cat}") for cat in POS_CATEGORIES}
        frame.add(
            FrameRow(
                sample_id=r[0],
                rule_id=r[1],
                treatment_level=r[3],
                outcome_y1=float(r[4]),
                outcome_y0=float(r[5]),
                features=FeatureVector(pos_counts=pos, **feats),
            )
        )
    return frame


def feature_matrix(rows: Sequence[FrameRow]) -> list[list[float]]:
    return [[float(v) for v in row.features.as_row().values()] for row in rows]


def outcomes(rows: Iterable[FrameRow], outcome: str) -> list[float]:
    if outcome == "y1":
        return [r.outcome_y1 for r in rows]
    if outcome == "y0":
        return [r.outcome_y0 for r in rows]
    raise ValueError(f"unknown outcome {outcome!r}")
