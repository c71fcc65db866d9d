from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

# statuses that count as success for exit-code purposes
OK_STATUSES = frozenset({"pass", "holds", "yes", "vacuous"})


@dataclass(frozen=True)
class Verdict:
    """Outcome of a windowed property check.

    ``status`` is one of ``pass``/``fail``, ``holds``/``fails``/``unknown``,
    ``yes``/``no_within_window``, ``vacuous`` or ``precondition``, depending on
    the check. ``witness`` carries whatever object decided the outcome.
    """

    status: str
    witness: Any = None
    detail: str = ""
    data: dict = field(default_factory=dict, compare=False)

    @property
    def ok(self) -> bool:
        return self.status in OK_STATUSES

    def __str__(self) -> str:
        parts = [self.status]
        if self.witness is not None:
            parts.append(f"witness={self.witness}")
        if self.detail:
            parts.append(self.detail)
        return " ".join(parts)
