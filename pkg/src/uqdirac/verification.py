"""Per-identity verification records."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Verification:
    name: str
    mode: str
    ok: bool
    difference: str = "0"

    def to_dict(self) -> dict:
        return {"name": self.name, "mode": self.mode, "ok": self.ok,
                "difference": self.difference}

    @classmethod
    def from_dict(cls, data: dict) -> "Verification":
        return cls(data["name"], data["mode"], bool(data["ok"]), data.get("difference", "0"))


def check_equal(name: str, mode, lhs, rhs) -> Verification:
    """Compare two algebra elements exactly and keep the rendered difference."""
    diff = lhs - rhs
    return Verification(name, str(mode), diff.is_zero(), "0" if diff.is_zero() else str(diff))
