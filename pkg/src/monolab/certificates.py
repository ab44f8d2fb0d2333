"""Verdict-plus-witness values returned by the decision procedures."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Certificate:
    """A boolean verdict with replayable evidence.

    ``witness`` carries the positive evidence (a shedding tree, a splitting
    tree, an elimination order, a rational coefficient vector, ...);
    ``failure`` carries the counterexample or exhaustive failure record for
    negative verdicts.  Exactly which side is populated depends on the
    procedure.
    """

    verdict: bool
    witness: Any = None
    failure: Any = None

    def __bool__(self) -> bool:
        return self.verdict
