"""Machine-readable verification reports.

Reports serialize deterministically: exact values render as strings
("p/q" or polynomials in z_m), never as floats, and no timing data is
part of the canonical JSON.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field


@dataclass
class CheckRecord:
    name: str
    law: str  # the identity being instantiated, as a formula string
    status: str  # "pass" | "fail" | "skip"
    witness: str | None = None

    def as_dict(self) -> dict:
        out = {"name": self.name, "law": self.law, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class ComputationRecord:
    quantity: str
    labels: dict
    value: str  # exact rational / cyclotomic value as string
    stable: bool | None = None

    def as_dict(self) -> dict:
        out = {"quantity": self.quantity, "labels": self.labels, "value": self.value}
        if self.stable is not None:
            out["stable"] = self.stable
        return out


@dataclass
class Report:
    tool: str = "hopfcyclic"
    version: str = "0.1.0"
    input_digest: str = ""
    checks: list[CheckRecord] = field(default_factory=list)
    computations: list[ComputationRecord] = field(default_factory=list)

    def add_check(self, name: str, law: str, ok: bool, witness: str | None = None):
        self.checks.append(
            CheckRecord(name, law, "pass" if ok else "fail", None if ok else witness)
        )

    def add_skip(self, name: str, law: str, reason: str):
        self.checks.append(CheckRecord(name, law, "skip", reason))

    def add_value(self, quantity: str, labels: dict, value: str, stable=None):
        self.computations.append(ComputationRecord(quantity, labels, value, stable))

    def extend(self, other: "Report", prefix: str = ""):
        for c in other.checks:
            self.checks.append(
                CheckRecord(prefix + c.name, c.law, c.status, c.witness)
            )
        self.computations.extend(other.computations)

    def all_passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def failures(self) -> list[CheckRecord]:
        return [c for c in self.checks if c.status == "fail"]

    def set_digest(self, payload: str):
        self.input_digest = hashlib.sha256(payload.encode()).hexdigest()[:16]

    def as_dict(self) -> dict:
        return {
            "tool": self.tool,
            "version": self.version,
            "input_digest": self.input_digest,
            "checks": [c.as_dict() for c in self.checks],
            "computations": [c.as_dict() for c in self.computations],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, separators=(",", ":")) + "\n"

    def summary(self) -> str:
        lines = []
        for c in self.checks:
            mark = {"pass": "ok", "fail": "FAIL", "skip": "skip"}[c.status]
            line = "%-6s %s  [%s]" % (mark, c.name, c.law)
            if c.witness:
                line += "  witness: %s" % c.witness
            lines.append(line)
        for v in self.computations:
            labels = " ".join("%s=%s" % kv for kv in sorted(v.labels.items()))
            extra = "" if v.stable is None else (" (stable)" if v.stable else " (unstable)")
            lines.append("value  %s %s = %s%s" % (v.quantity, labels, v.value, extra))
        return "\n".join(lines)
