"""Report object shared by every verification step."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List

import pandas as pd


@dataclass
class CheckReport:
    """
    Outcome of one check. A failed identity is data, not an exception:
    ``violations`` holds one dict per offending case and ``notes`` holds
    informational records that do not affect ``passed``.
    """

    name: str
    checked: int = 0
    violations: List[Dict[str, Any]] = field(default_factory=list)
    notes: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def record(self, ok: bool, **detail: Any) -> bool:
        self.checked += 1
        if not ok:
            self.violations.append(detail)
        return ok

    def note(self, **detail: Any) -> None:
        self.notes.append(detail)

    def summary(self) -> str:
        state = "PASS" if self.passed else "FAIL"
        return f"{self.name}: {state} ({self.checked} cases, {len(self.violations)} violations, {len(self.notes)} notes)"

    def to_json(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "violations": self.violations,
            "notes": self.notes,
        }

    def violations_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.violations)
