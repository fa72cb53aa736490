"""Machine- and human-readable verification reports.

A ReportDocument carries a list of checks (each numeric residual paired with
its tolerance), a derivation trace, and arbitrary JSON-safe payload data; the
overall verdict is the conjunction of the checks.  JSON serialization
round-trips exactly.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

ARTIFACT_NAME = "contextlab"
ARTIFACT_VERSION = "0.1.0"


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    residual: float | None = None
    tolerance: float | None = None
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "residual": self.residual,
            "tolerance": self.tolerance,
            "detail": self.detail,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CheckResult":
        return cls(
            name=data["name"],
            passed=bool(data["passed"]),
            residual=data.get("residual"),
            tolerance=data.get("tolerance"),
            detail=data.get("detail", ""),
        )


@dataclass
class ReportDocument:
    kind: str
    identifier: str
    inputs: dict = field(default_factory=dict)
    checks: list[CheckResult] = field(default_factory=list)
    trace: list[str] = field(default_factory=list)
    data: dict = field(default_factory=dict)
    artifact: str = ARTIFACT_NAME
    version: str = ARTIFACT_VERSION

    @property
    def verdict(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "artifact": self.artifact,
            "version": self.version,
            "kind": self.kind,
            "identifier": self.identifier,
            "inputs": self.inputs,
            "checks": [c.to_dict() for c in self.checks],
            "trace": list(self.trace),
            "data": self.data,
            "verdict": self.verdict,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ReportDocument":
        return cls(
            kind=data["kind"],
            identifier=data["identifier"],
            inputs=data.get("inputs", {}),
            checks=[CheckResult.from_dict(c) for c in data.get("checks", [])],
            trace=list(data.get("trace", [])),
            data=data.get("data", {}),
            artifact=data.get("artifact", ARTIFACT_NAME),
            version=data.get("version", ARTIFACT_VERSION),
        )

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=False)

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        return cls.from_dict(json.loads(text))

    def to_markdown(self) -> str:
        lines = [f"# {self.identifier}", ""]
        lines.append(f"kind: `{self.kind}` | artifact: {self.artifact} {self.version}")
        lines.append("")
        if self.inputs:
            lines.append("## Inputs")
            lines.append("")
            for key, val in self.inputs.items():
                lines.append(f"- {key}: `{val}`")
            lines.append("")
        lines.append("## Checks")
        lines.append("")
        lines.append("| check | status | residual | tolerance |")
        lines.append("|---|---|---|---|")
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            res = "" if c.residual is None else f"{c.residual:.3e}"
            tol = "" if c.tolerance is None else f"{c.tolerance:.0e}"
            lines.append(f"| {c.name} | {status} | {res} | {tol} |")
        lines.append("")
        if self.trace:
            lines.append("## Derivation")
            lines.append("")
            for step in self.trace:
                lines.append(f"- {step}")
            lines.append("")
        lines.append(f"**Verdict: {'PASS' if self.verdict else 'FAIL'}**")
        lines.append("")
        return "\n".join(lines)


def checks_to_csv(reports: list[ReportDocument]) -> str:
    """One row per check across a batch of reports (delimited summary)."""
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["report", "check", "passed", "residual", "tolerance", "detail"])
    for rep in reports:
        for c in rep.checks:
            writer.writerow(
                [
                    rep.identifier,
                    c.name,
                    "PASS" if c.passed else "FAIL",
                    "" if c.residual is None else repr(c.residual),
                    "" if c.tolerance is None else repr(c.tolerance),
                    c.detail,
                ]
            )
    return buf.getvalue()


def render(report: ReportDocument, fmt: str = "json") -> str:
    if fmt == "json":
        return report.to_json()
    if fmt == "md":
        return report.to_markdown()
    raise ValueError(f"unknown format {fmt!r}")
