"""Pass/fail reports returned by the verification routines."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class Report:
    """Outcome of one verification suite.

    A nonempty `skipped` means the suite's hypothesis did not hold and no
    checks were run (distinct from a failure).
    """

    title: str
    checks: tuple[Check, ...] = ()
    skipped: str = ""

    @property
    def ok(self) -> bool:
        return not self.skipped and all(c.ok for c in self.checks)

    @property
    def first_failure(self) -> Check | None:
        for c in self.checks:
            if not c.ok:
                return c
        return None

    def lines(self) -> list[str]:
        """Render one status line per check, CLI style."""
        if self.skipped:
            return [f"SKIPPED-HYPOTHESIS {self.title}: {self.skipped}"]
        out = []
        for c in self.checks:
            line = f"{'PASS' if c.ok else 'FAIL'} {self.title}:{c.name}"
            if not c.ok and c.detail:
                line += f": {c.detail}"
            out.append(line)
        return out
