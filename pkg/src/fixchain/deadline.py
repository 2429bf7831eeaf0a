"""Cooperative per-task deadlines.

Long-running enumerations poll a :class:`Deadline` at safe points instead of
relying on signals, so the same code path works inline, under pytest, and in
worker processes.
"""

from __future__ import annotations

import time
from dataclasses import dataclass


class GraphTimeout(Exception):
    """Raised when a per-graph deadline expires mid-computation."""


@dataclass
class Deadline:
    """Wall-clock deadline with a cheap amortized check."""

    expires_at: float
    _countdown: int = 0

    # Number of check() calls between actual clock reads.
    STRIDE = 2048

    @classmethod
    def after_ms(cls, ms: float) -> "Deadline":
        return cls(expires_at=time.monotonic() + ms / 1000.0)

    def check(self) -> None:
        """Raise GraphTimeout once the deadline has passed.

        Reads the clock every STRIDE calls; callers may invoke this from
        tight loops.
        """
        self._countdown -= 1
        if self._countdown > 0:
            return
        self._countdown = self.STRIDE
        if time.monotonic() >= self.expires_at:
            raise GraphTimeout()

    def expired(self) -> bool:
        return time.monotonic() >= self.expires_at


def check(deadline: Deadline | None) -> None:
    """Poll an optional deadline."""
    if deadline is not None:
        deadline.check()
