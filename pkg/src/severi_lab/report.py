from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .qseries import format_rational


def _jsonable(x):
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if hasattr(x, "item") and not isinstance(x, (int, str)):
        return x.item()
    return x


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one exact verification.

    ``first_discrepancy`` is ``(index, expected, got)`` where index is usually
    a q-exponent (or a norm / genus for lattice checks). It is None exactly
    when the check passed.
    """

    name: str
    precision: int
    passed: bool
    first_discrepancy: tuple[int, Any, Any] | None = None
    detail: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.passed != (self.first_discrepancy is None):
            raise ValueError("a report passes iff it has no discrepancy")

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    @classmethod
    def from_discrepancy(cls, name, precision, discrepancy, **detail):
        return cls(name, precision, discrepancy is None, discrepancy, dict(detail))

    def to_dict(self) -> dict:
        disc = None
        if self.first_discrepancy is not None:
            idx, expected, got = self.first_discrepancy
            disc = {
                "index": int(idx),
                "expected": _jsonable(expected),
                "got": _jsonable(got),
            }
        return {
            "name": self.name,
            "precision": self.precision,
            "status": self.status,
            "passed": self.passed,
            "first_discrepancy": disc,
            "detail": _jsonable(self.detail),
        }
