"""
JSON reporter — machine-readable suite results.
"""

from __future__ import annotations

import json
from pathlib import Path

from ..results import SuiteReport


class JSONReporter:
    """Exports suite reports as JSON; keys are sorted so output is reproducible."""

    def __init__(self, indent: int = 2, include_timing: bool = False):
        self._indent = indent
        self._include_timing = include_timing

    def to_json(self, result: SuiteReport) -> str:
        data = result.to_dict(include_timing=self._include_timing)
        return json.dumps(data, indent=self._indent, sort_keys=True, default=str) + "\n"

    def save(self, result: SuiteReport, path: Path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.to_json(result), encoding="utf-8")
        return path
