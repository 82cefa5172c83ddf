"""Record types shared by the verification suites and the CLI."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

SCHEMA_VERSION = 1

PASS = "pass"
FAIL = "fail"
SKIP = "skip"


@dataclass
class CheckRecord:
    """Outcome of one verified identity (or family slice of identities)."""

    check: str
    params: dict
    status: str
    witness: str | None = None
    ms: float = 0.0

    def as_dict(self, comparable=False):
        d = {
            "check": self.check,
            "params": {k: str(v) for k, v in sorted(self.params.items())},
            "status": self.status,
        }
        if self.witness is not None:
            d["witness"] = self.witness
        d["ms"] = 0.0 if comparable else round(self.ms, 3)
        return d


def passed(check, params, ms=0.0):
    return CheckRecord(check, params, PASS, None, ms)


def failed(check, params, witness, ms=0.0):
    return CheckRecord(check, params, FAIL, witness, ms)


@dataclass
class VerificationReport:
    """Full suite run: config echo plus per-check records, rendered as JSON/text."""

    version: str
    config: dict
    records: list = field(default_factory=list)
    timestamp: str = field(default_factory=lambda: time.strftime("%Y-%m-%dT%H:%M:%S"))

    def sorted_records(self):
        return sorted(self.records,
                      key=lambda r: (r.check, sorted((k, str(v)) for k, v in r.params.items())))

    @property
    def n_failed(self):
        return sum(1 for r in self.records if r.status == FAIL)

    @property
    def all_passed(self):
        return self.n_failed == 0

    def as_dict(self, comparable=False):
        d = {
            "schema": SCHEMA_VERSION,
            "version": self.version,
            "config": {k: str(v) for k, v in sorted(self.config.items())},
            "records": [r.as_dict(comparable) for r in self.sorted_records()],
            "summary": {
                "total": len(self.records),
                "passed": sum(1 for r in self.records if r.status == PASS),
                "failed": self.n_failed,
                "skipped": sum(1 for r in self.records if r.status == SKIP),
            },
        }
        if not comparable:
            d["timestamp"] = self.timestamp
        return d

    def to_json(self, comparable=False):
        return json.dumps(self.as_dict(comparable), indent=2, sort_keys=True)

    def to_text(self, comparable=False):
        # derived from the JSON form, never the other way around
        d = self.as_dict(comparable)
        lines = [f"qschur {d['version']} suite report (schema {d['schema']})"]
        for k, v in d["config"].items():
            lines.append(f"  config {k} = {v}")
        for r in d["records"]:
            params = " ".join(f"{k}={v}" for k, v in r["params"].items())
            line = f"[{r['status'].upper():4s}] {r['check']} {params}".rstrip()
            lines.append(line)
            if r.get("witness"):
                for wline in r["witness"].splitlines():
                    lines.append(f"         {wline}")
        s = d["summary"]
        lines.append(f"total {s['total']}  passed {s['passed']}  "
                     f"failed {s['failed']}  skipped {s['skipped']}")
        return "\n".join(lines)


class Stopwatch:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.ms = (time.perf_counter() - self.t0) * 1000.0
