"""Result records and the CSV report."""

from __future__ import annotations

import csv
import io
from dataclasses import asdict, dataclass, field

CSV_COLUMNS = ("alg", "input", "seed", "output", "exact", "ratio", "peak_items", "ms")


@dataclass
class RunRecord:
    """One algorithm run. ``output`` is a size, a weight, or an estimate.

    ``ratio`` is exact / output (at least 1 for a correct one-sided result).
    """

    alg: str
    input: str
    seed: int
    output: float
    peak_items: int
    ms: float
    exact: int | None = None
    ratio: float | None = None
    registers: int = 0
    consumed: int = 0
    selected: list[int] = field(default_factory=list)
    snapshots: list[dict] = field(default_factory=list)

    def set_exact(self, exact: int | None):
        self.exact = exact
        if exact is not None and self.output:
            self.ratio = exact / self.output
        else:
            self.ratio = None

    def as_dict(self) -> dict:
        return {"record": "run", **asdict(self)}

    @classmethod
    def from_dict(cls, d: dict) -> "RunRecord":
        d = {k: v for k, v in d.items() if k != "record"}
        return cls(**d)

    def csv_row(self) -> list:
        def fmt(v):
            if v is None:
                return ""
            if isinstance(v, float):
                return f"{v:.6g}"
            return v
        return [fmt(getattr(self, c)) for c in CSV_COLUMNS]


@dataclass
class TrialSummary:
    """Monte-Carlo outcome: ``successes`` counts runs with alpha / c <= output <= alpha."""

    alg: str
    input: str
    trials: int
    successes: int
    c: float
    exact: int | None

    def __post_init__(self):
        if not 0 <= self.successes <= self.trials:
            raise ValueError("successes must lie in [0, trials]")

    @property
    def success_rate(self) -> float:
        return self.successes / self.trials if self.trials else 0.0

    def as_dict(self) -> dict:
        return {"record": "trials", **asdict(self), "success_rate": self.success_rate}


def to_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in records:
        w.writerow(r.csv_row())
    return buf.getvalue()


def summary_table(records) -> str:
    """Per-algorithm count, mean ratio, worst ratio and peak space."""
    groups: dict[str, list[RunRecord]] = {}
    for r in records:
        groups.setdefault(r.alg, []).append(r)
    lines = [f"{'alg':<10} {'runs':>5} {'mean_ratio':>10} {'max_ratio':>10} {'max_peak':>9}"]
    for alg in sorted(groups):
        rs = groups[alg]
        ratios = [r.ratio for r in rs if r.ratio is not None]
        mean = f"{sum(ratios) / len(ratios):.4f}" if ratios else "-"
        worst = f"{max(ratios):.4f}" if ratios else "-"
        lines.append(f"{alg:<10} {len(rs):>5} {mean:>10} {worst:>10} {max(r.peak_items for r in rs):>9}")
    return "\n".join(lines)
