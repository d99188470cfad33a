"""Run configuration and machine-readable check reports."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field, asdict

STATUSES = ("pass", "fail", "skipped-ambiguous")


@dataclass
class Config:
    degree_bound: int = 4
    term_cap: int = 200_000
    random_checks: int = 20
    seed: int = 0
    output: str = "text"
    timing: bool = False

    def __post_init__(self):
        if self.degree_bound < 1 or self.term_cap < 1 or self.random_checks < 0:
            raise ValueError("bounds must be positive")
        if self.output not in ("json", "csv", "text"):
            raise ValueError(f"unknown output format {self.output!r}")

    @classmethod
    def from_file(cls, path: str) -> "Config":
        with open(path) as fh:
            data = json.load(fh)
        allowed = {"degree_bound", "term_cap", "random_checks", "seed", "output", "timing"}
        unknown = set(data) - allowed
        if unknown:
            raise ValueError(f"unknown config keys {sorted(unknown)}")
        return cls(**data)


@dataclass
class CheckRecord:
    name: str
    status: str
    witness: str = ""
    ms: int = 0


@dataclass
class Report:
    suite: str
    checks: list[CheckRecord] = field(default_factory=list)

    def add(self, name: str, passed: bool, witness: str = "", ms: int = 0):
        self.checks.append(CheckRecord(name, "pass" if passed else "fail", witness, ms))

    def add_skipped(self, name: str, witness: str = ""):
        self.checks.append(CheckRecord(name, "skipped-ambiguous", witness, 0))

    def extend(self, other: "Report"):
        self.checks.extend(other.checks)

    @property
    def failed(self) -> list[CheckRecord]:
        return [c for c in self.checks if c.status == "fail"]

    @property
    def ok(self) -> bool:
        return not self.failed

    def to_json(self) -> str:
        return json.dumps(
            {
                "suite": self.suite,
                "checks": [asdict(c) for c in self.checks],
            },
            indent=2,
            sort_keys=False,
        )

    def to_text(self) -> str:
        lines = [f"suite: {self.suite}"]
        for c in self.checks:
            mark = {"pass": "PASS", "fail": "FAIL", "skipped-ambiguous": "SKIP"}[c.status]
            line = f"  [{mark}] {c.name}"
            if c.witness and c.status != "pass":
                line += f"  ({c.witness})"
            lines.append(line)
        npass = sum(1 for c in self.checks if c.status == "pass")
        nfail = len(self.failed)
        nskip = sum(1 for c in self.checks if c.status == "skipped-ambiguous")
        lines.append(f"  {npass} passed, {nfail} failed, {nskip} skipped-ambiguous")
        return "\n".join(lines)

    def to_csv(self) -> str:
        rows = ["suite,name,status,witness,ms"]
        for c in self.checks:
            witness = c.witness.replace('"', "'")
            rows.append(f'{self.suite},"{c.name}",{c.status},"{witness}",{c.ms}')
        return "\n".join(rows)

    def render(self, output: str) -> str:
        if output == "json":
            return self.to_json()
        if output == "csv":
            return self.to_csv()
        return self.to_text()


class Stopwatch:
    """Millisecond timer; reports zero unless timing was requested."""

    def __init__(self, enabled: bool):
        self.enabled = enabled
        self._start = time.monotonic()

    def lap(self) -> int:
        now = time.monotonic()
        ms = int(round((now - self._start) * 1000))
        self._start = now
        return ms if self.enabled else 0
