"""Verification reports and their JSON/CSV serialization."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any

from . import __version__

FIELDS = ("claim_id", "p", "inputs", "condition_met", "measured", "bound",
          "pass", "witness", "seed", "details", "version")


@dataclass
class VerificationReport:
    """Outcome of checking one claim on one instance.

    ``passed`` is None when the claim's hypothesis is not met (the check is
    then informational only).
    """

    claim_id: str
    p: int
    inputs: dict
    condition_met: bool
    measured: Any
    bound: Any
    passed: bool | None
    witness: list | None = None
    seed: int | None = None
    details: dict = field(default_factory=dict)
    version: str = __version__

    @property
    def failed(self) -> bool:
        return self.passed is False

    def to_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "p": self.p,
            "inputs": self.inputs,
            "condition_met": self.condition_met,
            "measured": self.measured,
            "bound": self.bound,
            "pass": self.passed,
            "witness": None if self.witness is None else list(self.witness),
            "seed": self.seed,
            "details": self.details,
            "version": self.version,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        return cls(
            claim_id=d["claim_id"], p=d["p"], inputs=d["inputs"],
            condition_met=d["condition_met"], measured=d["measured"], bound=d["bound"],
            passed=d["pass"], witness=d.get("witness"), seed=d.get("seed"),
            details=d.get("details", {}), version=d.get("version", __version__),
        )


def to_json(reports, indent: int | None = 2) -> str:
    if isinstance(reports, VerificationReport):
        payload = reports.to_dict()
    else:
        payload = [r.to_dict() for r in reports]
    return json.dumps(payload, indent=indent, sort_keys=True)


def from_json(text: str):
    data = json.loads(text)
    if isinstance(data, list):
        return [VerificationReport.from_dict(d) for d in data]
    return VerificationReport.from_dict(data)


def to_csv(reports) -> str:
    """Scalar fields as columns; nested fields are JSON-encoded strings."""
    if isinstance(reports, VerificationReport):
        reports = [reports]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        row = r.to_dict()
        for key in ("inputs", "witness", "details"):
            row[key] = json.dumps(row[key], sort_keys=True)
        writer.writerow(row)
    return buf.getvalue()


def emit_report(reports, fmt: str = "json") -> str:
    if fmt == "json":
        return to_json(reports)
    if fmt == "csv":
        return to_csv(reports)
    raise ValueError(f"unknown format {fmt!r}")
