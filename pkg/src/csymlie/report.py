"""Machine-readable verification reports.

A report is an ordered list of named checks; ordering is deterministic so
that identical inputs produce byte-identical output.  Witnesses are small
JSON-serializable structures (usually basis labels or index pairs).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    id: str
    ok: bool
    witness: object | None = None
    detail: str | None = None
    convention: bool = False


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    def add(self, id: str, ok: bool, witness: object | None = None,
            detail: str | None = None, convention: bool = False) -> bool:
        self.checks.append(Check(id, bool(ok), witness, detail, convention))
        return bool(ok)

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(
                Check(prefix + c.id, c.ok, c.witness, c.detail, c.convention)
            )

    def ok(self, strict: bool = False) -> bool:
        return all(c.ok for c in self.checks if strict or not c.convention)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def __bool__(self) -> bool:
        return self.ok()

    def to_dict(self) -> dict:
        out = []
        for c in self.checks:
            entry: dict = {"id": c.id, "status": "pass" if c.ok else "fail"}
            if c.witness is not None:
                entry["witness"] = c.witness
            if c.detail:
                entry["detail"] = c.detail
            if c.convention:
                entry["convention"] = True
            out.append(entry)
        return {"ok": self.ok(), "checks": out}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            status = "PASS" if c.ok else "FAIL"
            line = f"{status} {c.id}"
            if c.witness is not None:
                line += f"  witness={c.witness}"
            if c.detail and not c.ok:
                line += f"  ({c.detail})"
            lines.append(line)
        lines.append(("OK" if self.ok() else "FAILED") + f" ({len(self.checks)} checks)")
        return "\n".join(lines)
