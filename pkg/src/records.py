"""
Output Records

Every CLI command produces OutputRecord values and `verify` also produces CheckResult
rows. Both are dataclass_json records so they serialize the same way everywhere.

JSON is canonical: keys sorted, no whitespace, UTF-8 kept as is. Exact quantities travel
as strings ("num/den" or "num/den*sqrt(n)"), and decimals are floats printed with Python's
shortest round-trip repr, so parsing a record and serializing it again is byte-identical.
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from dataclasses_json import dataclass_json


def canonical_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


@dataclass_json
@dataclass
class OutputRecord:
    """
    One command result.

    Attributes:
        command: subcommand name
        params: the inputs, stringified
        exact: exact value as a string
        decimal: float image of `exact`; None when there is none or it overflows a double
        extras: command-specific payload
    """

    command: str
    params: Dict[str, str] = field(default_factory=dict)
    exact: str = ""
    decimal: Optional[float] = None
    extras: Dict[str, Any] = field(default_factory=dict)

    def to_canonical_json(self) -> str:
        return canonical_json(self.to_dict())

    @classmethod
    def from_canonical_json(cls, text: str) -> "OutputRecord":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        head = " ".join(f"{key}={value}" for key, value in sorted(self.params.items()))
        lines = [f"{self.command} {head}".rstrip()]
        if self.exact:
            lines.append(f"  exact   = {self.exact}")
        if self.decimal is not None:
            lines.append(f"  decimal = {self.decimal!r}")
        for key, value in sorted(self.extras.items()):
            if isinstance(value, list):
                value = ", ".join(str(v) for v in value)
            lines.append(f"  {key} = {value}")
        return "\n".join(lines)


@dataclass_json
@dataclass
class CheckResult:
    """Pass/fail row of the verification pipeline."""

    name: str
    passed: bool
    detail: str = ""

    def to_text(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name:<24} {self.detail}".rstrip()


def all_passed(checks: List[CheckResult]) -> bool:
    return all(check.passed for check in checks)
