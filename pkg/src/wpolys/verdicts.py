"""Outcome records for verification runs."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Verdict:
    """One checked statement instance.

    A failing verdict always carries a witness: the nonzero remainder, or a
    description of the coefficient that obstructed an exact division.
    """

    statement: str
    params: dict
    passed: bool
    witness: str | None = None
    elapsed_ms: int = 0
    status: str | None = None

    def __post_init__(self):
        if not self.passed and not self.witness:
            raise ValueError("failing verdict requires a witness")

    def to_json(self):
        out = {
            "statement": self.statement,
            "params": dict(self.params),
            "pass": self.passed,
            "witness": self.witness,
            "elapsed_ms": self.elapsed_ms,
        }
        if self.status is not None:
            out["status"] = self.status
        return out
