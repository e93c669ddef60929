"""Uniform result record for numeric verification checks."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckReport:
    name: str
    deviation: float
    tol: float
    passed: bool
    params: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        # numpy scalars must not leak into JSON reports
        object.__setattr__(self, "deviation", float(self.deviation))
        object.__setattr__(self, "tol", float(self.tol))
        object.__setattr__(self, "passed", bool(self.passed))
        object.__setattr__(
            self,
            "params",
            {k: v.item() if hasattr(v, "item") else v
             for k, v in self.params.items()},
        )

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "deviation": self.deviation,
            "tol": self.tol,
            "passed": self.passed,
            "params": self.params,
        }


def relative_deviation(lhs: complex, rhs: complex, scale: float = 0.0) -> float:
    """|lhs - rhs| over the largest available magnitude."""
    denom = max(abs(lhs), abs(rhs), scale, 1e-300)
    return abs(lhs - rhs) / denom
