"""Cooperative wall-clock budgets for the exponential oracles."""

from __future__ import annotations

import time

DEFAULT_BUDGET = 120.0


class BudgetExceeded(Exception):
    """Raised by an oracle that ran out of time.

    ``bounds`` carries whatever was proved before the deadline, as a
    ``(lower, upper)`` pair or ``None``.
    """

    def __init__(self, what: str = "", bounds: tuple | None = None):
        super().__init__(f"budget exceeded: {what}" if what else "budget exceeded")
        self.what = what
        self.bounds = bounds


class Budget:
    """Deadline checked at search-node granularity.

    ``tick()`` is cheap: the clock is only read every ``stride`` calls.
    """

    def __init__(self, seconds: float | None = DEFAULT_BUDGET, what: str = "", stride: int = 512):
        self.seconds = seconds
        self.what = what
        self.stride = stride
        self._deadline = None if seconds is None else time.monotonic() + seconds
        self._count = 0

    @classmethod
    def coerce(cls, budget: "Budget | float | None", what: str = "") -> "Budget":
        if isinstance(budget, Budget):
            return budget
        return cls(budget, what)

    def expired(self) -> bool:
        return self._deadline is not None and time.monotonic() > self._deadline

    def check(self, bounds: tuple | None = None) -> None:
        if self.expired():
            raise BudgetExceeded(self.what, bounds)

    def tick(self, bounds: tuple | None = None) -> None:
        self._count += 1
        if self._count % self.stride == 0:
            self.check(bounds)

