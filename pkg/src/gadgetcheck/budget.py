"""Node/wall-time limits shared by the coloring and induced-path searches."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class Budget:
    """Limits for one exact search; None means unlimited on that axis."""

    max_nodes: Optional[int] = None
    max_seconds: Optional[float] = None


UNLIMITED = Budget()


class BudgetClock:
    """Mutable per-run tracker. Time is polled every `stride` nodes to keep
    the per-node overhead negligible."""

    __slots__ = ("budget", "nodes", "start", "_stride", "_next_poll", "exhausted")

    def __init__(self, budget: Budget, stride: int = 2048):
        self.budget = budget
        self.nodes = 0
        self.start = time.perf_counter()
        self._stride = stride
        self._next_poll = stride
        self.exhausted = False

    def tick(self) -> bool:
        """Count one node; True once the budget is exhausted."""
        self.nodes += 1
        b = self.budget
        if b.max_nodes is not None and self.nodes > b.max_nodes:
            self.exhausted = True
            return True
        if b.max_seconds is not None and self.nodes >= self._next_poll:
            self._next_poll = self.nodes + self._stride
            if time.perf_counter() - self.start > b.max_seconds:
                self.exhausted = True
                return True
        return False

    def elapsed(self) -> float:
        return time.perf_counter() - self.start
