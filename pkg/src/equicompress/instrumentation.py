"""Exact invocation counting for the group and action subroutines."""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

SUBROUTINES = ("prod", "inv", "minrep", "orb", "stab", "trans")


class OpCounter:
    """Thread-safe exact counter for subroutine invocations."""

    def __init__(self):
        self._lock = threading.Lock()
        self.counts = {name: 0 for name in SUBROUTINES}

    def add(self, name, n=1):
        with self._lock:
            self.counts[name] += n

    def snapshot(self):
        with self._lock:
            return dict(self.counts)


@dataclass
class CompressStats:
    """Per-run accounting for the compression engine."""

    # quotient simplex id -> number of trans calls made for that orbit rep
    trans_calls_per_rep: dict = field(default_factory=dict)
    seconds: float = 0.0


@dataclass
class ReconstructStats:
    """Per-run accounting for the reconstruction engine."""

    # dimension -> number of minrep calls issued while building that dimension
    minrep_calls_per_dim: dict = field(default_factory=dict)
    seconds: float = 0.0
