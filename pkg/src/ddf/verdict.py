"""Feasibility verdicts and their certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .digraph import Digraph


@dataclass
class FeasibilityVerdict:
    """Outcome of a characterization check.

    Every condition is normalised to the form ``lhs <= rhs``; an infeasible
    verdict carries the violated condition's name, the certificate sets that
    instantiate it, and both sides evaluated (``lhs > rhs``).
    """

    feasible: bool
    condition: str | None = None
    certificate: dict[str, Any] = field(default_factory=dict)
    lhs: int | None = None
    rhs: int | None = None
    witness: Digraph | None = None

    @classmethod
    def ok(cls, witness: Digraph | None = None) -> FeasibilityVerdict:
        return cls(True, witness=witness)

    @classmethod
    def violated(cls, condition: str, lhs: int, rhs: int, **certificate) -> FeasibilityVerdict:
        return cls(False, condition, certificate, lhs, rhs)

    def __bool__(self) -> bool:
        return self.feasible

    def to_json(self) -> dict:
        out: dict[str, Any] = {"feasible": self.feasible}
        if not self.feasible:
            out.update(
                condition=self.condition,
                certificate=self.certificate,
                lhs=self.lhs,
                rhs=self.rhs,
            )
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out

    @classmethod
    def from_json(cls, data: dict) -> FeasibilityVerdict:
        return cls(
            bool(data["feasible"]),
            data.get("condition"),
            dict(data.get("certificate") or {}),
            data.get("lhs"),
            data.get("rhs"),
        )
