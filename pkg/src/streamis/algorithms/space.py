"""Item-level space accounting for streaming algorithms."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class SpaceAccount:
    """Counts retained stream items; ``registers`` tracks constant-size sketch state separately."""

    current_items: int = 0
    peak_items: int = 0
    registers: int = 0

    def add(self, k: int = 1):
        self.current_items += k
        if self.current_items > self.peak_items:
            self.peak_items = self.current_items

    def discard(self, k: int = 1):
        if k > self.current_items:
            raise ValueError("discarding more items than are retained")
        self.current_items -= k

    def snapshot(self) -> dict:
        return {"current_items": self.current_items, "peak_items": self.peak_items,
                "registers": self.registers}
