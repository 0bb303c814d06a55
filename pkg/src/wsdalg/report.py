"""Check records and their text/JSON rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable


@dataclass
class Check:
    id: str
    anchor: str
    passed: bool
    witness: str | None = None

    def to_json(self) -> dict:
        out = {"id": self.id, "anchor": self.anchor, "pass": self.passed}
        if not self.passed and self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class VerificationReport:
    suite: str
    checks: list[Check] = field(default_factory=list)

    def add(self, id: str, anchor: str, passed: bool, witness: str | None = None) -> Check:
        c = Check(id, anchor, bool(passed), None if passed else witness)
        self.checks.append(c)
        return c

    def extend(self, checks: Iterable[Check]) -> None:
        self.checks.extend(checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def counts(self) -> dict[str, int]:
        n = len(self.checks)
        bad = len(self.failures)
        return {"checks": n, "passed": n - bad, "failed": bad}

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "checks": [c.to_json() for c in self.checks],
            "summary": self.counts(),
            "pass": self.passed,
        }

    def format(self, verbose: bool = True) -> str:
        lines = []
        for c in self.checks:
            if verbose or not c.passed:
                mark = "PASS" if c.passed else "FAIL"
                line = f"{mark}  {c.id}  [{c.anchor}]"
                if c.witness:
                    line += f"  -- {c.witness}"
                lines.append(line)
        k = self.counts()
        lines.append(f"{self.suite}: {k['passed']}/{k['checks']} passed, {k['failed']} failed")
        return "\n".join(lines)


def dumps(obj) -> str:
    """Stable JSON: insertion key order, two-space indent, trailing newline.

    ``dumps(json.loads(dumps(x))) == dumps(x)`` for every value produced here.
    """
    return json.dumps(obj, indent=2, ensure_ascii=True) + "\n"
