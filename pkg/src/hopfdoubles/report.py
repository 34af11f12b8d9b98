"""Pass/fail reports shared by all verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    ok: bool
    witness: str | None = None
    detail: str | None = None


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def add(self, name: str, ok: bool, witness=None, detail=None) -> bool:
        self.checks.append(Check(name, bool(ok), None if witness is None else str(witness), detail))
        return ok

    def note(self, text: str):
        self.notes.append(text)

    def merge(self, other: "Report", prefix: str = ""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.ok, c.witness, c.detail))
        self.notes.extend(other.notes)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def get(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def lines(self):
        out = [self.title]
        for c in self.checks:
            line = f"  [{'pass' if c.ok else 'FAIL'}] {c.name}"
            if c.detail:
                line += f": {c.detail}"
            if not c.ok and c.witness:
                line += f" (witness {c.witness})"
            out.append(line)
        out.extend("  note: " + n for n in self.notes)
        return out

    def __str__(self):
        return "\n".join(self.lines())

    def to_json(self):
        return {
            "title": self.title,
            "ok": self.ok,
            "checks": [{"name": c.name, "ok": c.ok, "witness": c.witness, "detail": c.detail}
                       for c in self.checks],
            "notes": list(self.notes),
        }
