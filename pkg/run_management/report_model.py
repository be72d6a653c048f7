import json
from enum import Enum
from typing import Any, Dict, List, Optional

SCHEMA_VERSION = "1"


# Verdict carried by every computed report, exit status 0 for all of them
class Verdict(Enum):
    HOLDS = "holds"
    FAILS = "fails"
    PASS = "pass"
    FAIL = "fail"
    COMPUTED = "computed"
    DECOMPOSABLE = "decomposable"
    NONE = "NONE"


class Report:
    """Outcome of one command run on one problem spec."""

    def __init__(self, command: str, verdict: Verdict, result: Dict[str, Any], seed: Optional[int] = None):
        self.command = command
        self.verdict = verdict
        self.result = result
        self.seed = seed
        self.elapsed: Optional[float] = None

    def finish(self, elapsed: float):
        self.elapsed = elapsed

    def json_response_format(self, timing: bool = False) -> Dict:
        """Deterministic for equal spec and seed unless timing is asked for."""
        body = {
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "verdict": self.verdict.value,
            "seed": self.seed,
            "result": self.result,
        }
        if timing and self.elapsed is not None:
            body["timing_seconds"] = round(self.elapsed, 6)
        return body

    def render_json(self, timing: bool = False) -> str:
        return json.dumps(self.json_response_format(timing), indent=2, ensure_ascii=False, default=str) + "\n"

    def render_text(self, timing: bool = False) -> str:
        lines = [f"{self.command}: {self.verdict.value}"]
        if self.seed is not None:
            lines.append(f"  seed: {self.seed}")
        lines.extend(_flatten(self.result, "  "))
        if timing and self.elapsed is not None:
            lines.append(f"  time: {self.elapsed:.3f}s")
        return "\n".join(lines) + "\n"


class ErrorReport:
    """Engine or input failure, emitted in place of a report."""

    def __init__(self, command: Optional[str], detail: Dict[str, Any]):
        self.command = command
        self.detail = detail

    def json_response_format(self, timing: bool = False) -> Dict:
        return {"schema": SCHEMA_VERSION, "command": self.command, "error": self.detail}

    def render_json(self, timing: bool = False) -> str:
        return json.dumps(self.json_response_format(), indent=2, ensure_ascii=False, default=str) + "\n"

    def render_text(self, timing: bool = False) -> str:
        lines = [f"{self.command or 'feqn'}: error {self.detail.get('error')}", f"  {self.detail.get('message')}"]
        extra = {k: v for k, v in self.detail.items() if k not in ("error", "message")}
        lines.extend(_flatten(extra, "  "))
        return "\n".join(lines) + "\n"


def _scalar(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "null"
    return str(value)


def _flatten(value, indent: str, prefix: str = "") -> List[str]:
    """Dotted key paths with the same scalar values as the JSON rendering."""
    if isinstance(value, dict):
        lines = []
        for key, item in value.items():
            lines.extend(_flatten(item, indent, f"{prefix}.{key}" if prefix else str(key)))
        return lines
    if isinstance(value, list) and any(isinstance(item, (dict, list)) for item in value):
        lines = []
        for i, item in enumerate(value):
            lines.extend(_flatten(item, indent, f"{prefix}[{i}]"))
        return lines
    if isinstance(value, list):
        return [f"{indent}{prefix}: [{', '.join(_scalar(v) for v in value)}]"]
    return [f"{indent}{prefix}: {_scalar(value)}"]
