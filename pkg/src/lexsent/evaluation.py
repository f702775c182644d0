"""Confusion matrices, accuracy, per-class metrics and subjectivity splits."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import Iterable, Sequence

from .scorer import Polarity

LABELS = (Polarity.POSITIVE, Polarity.NEGATIVE, Polarity.NEUTRAL)


def round_half_up(value: float, digits: int = 2) -> Decimal:
    # via repr so 0.835 rounds like the printed decimal, not its binary value
    quantum = Decimal(1).scaleb(-digits)
    return Decimal(repr(value)).quantize(quantum, rounding=ROUND_HALF_UP)


@dataclass(frozen=True)
class ConfusionMatrix:
    """Counts indexed ``counts[system][actual]`` in ``LABELS`` order."""

    counts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.counts) != len(LABELS) or any(len(r) != len(LABELS) for r in self.counts):
            raise ValueError("confusion matrix must be 3x3")
        if any(c < 0 for row in self.counts for c in row):
            raise ValueError("counts must be non-negative")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "ConfusionMatrix":
        return cls(tuple(tuple(int(c) for c in row) for row in rows))

    def cell(self, system, actual) -> int:
        return self.counts[LABELS.index(Polarity.parse(system))][LABELS.index(Polarity.parse(actual))]

    @property
    def row_totals(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.counts)

    @property
    def col_totals(self) -> tuple[int, ...]:
        return tuple(sum(col) for col in zip(*self.counts))

    @property
    def total(self) -> int:
        return sum(self.row_totals)

    @property
    def trace(self) -> int:
        return sum(self.counts[i][i] for i in range(len(LABELS)))

    def to_dict(self) -> dict:
        return {
            "labels": [label.value for label in LABELS],
            "rows": "system",
            "columns": "actual",
            "counts": [list(row) for row in self.counts],
            "row_totals": list(self.row_totals),
            "col_totals": list(self.col_totals),
            "total": self.total,
        }


def confusion_matrix(pairs: Iterable[tuple]) -> ConfusionMatrix:
    """Count ``(system, actual)`` label pairs."""
    tally = Counter((Polarity.parse(s), Polarity.parse(a)) for s, a in pairs)
    if not tally:
        raise ValueError("cannot build a confusion matrix from no pairs")
    return ConfusionMatrix(tuple(tuple(tally[(s, a)] for a in LABELS) for s in LABELS))


def accuracy(m: ConfusionMatrix) -> float:
    if m.total <= 0:
        raise ValueError("empty confusion matrix")
    return m.trace / m.total


@dataclass(frozen=True)
class ClassMetrics:
    precision: float
    recall: float
    f1: float
    precision_undefined: bool = False
    recall_undefined: bool = False

    def to_dict(self) -> dict:
        return {
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "precision_undefined": self.precision_undefined,
            "recall_undefined": self.recall_undefined,
        }


def per_class_metrics(m: ConfusionMatrix) -> dict[Polarity, ClassMetrics]:
    """Precision over system rows, recall over actual columns.

    A zero denominator yields 0.0 with the matching ``*_undefined`` flag set.
    """
    if m.total <= 0:
        raise ValueError("empty confusion matrix")
    rows, cols = m.row_totals, m.col_totals
    metrics = {}
    for i, label in enumerate(LABELS):
        hit = m.counts[i][i]
        precision = hit / rows[i] if rows[i] else 0.0
        recall = hit / cols[i] if cols[i] else 0.0
        f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
        metrics[label] = ClassMetrics(precision, recall, f1,
                                      precision_undefined=not rows[i],
                                      recall_undefined=not cols[i])
    return metrics


def subjectivity_split(subjective: int, objective: int) -> str:
    """``"S/O"`` percentages, S rounded half-up and O = 100 - S."""
    total = subjective + objective
    if subjective < 0 or objective < 0 or total == 0:
        raise ValueError("need at least one sentence and non-negative counts")
    # exact integer half-up: floor((200*s + total) / (2*total))
    percent = (200 * subjective + total) // (2 * total)
    return f"{percent}/{100 - percent}"


def subjectivity_stats(analyses) -> tuple[int, int, str]:
    analyses = list(analyses)
    if not analyses:
        raise ValueError("no sentence analyses")
    subjective = sum(1 for a in analyses if a.subjective)
    objective = len(analyses) - subjective
    return subjective, objective, subjectivity_split(subjective, objective)


def evaluation_report(m: ConfusionMatrix) -> dict:
    acc = accuracy(m)
    return {
        "matrix": m.to_dict(),
        "accuracy": acc,
        "accuracy_display": str(round_half_up(acc, 2)),
        "per_class": {label.value: metrics.to_dict()
                      for label, metrics in per_class_metrics(m).items()},
    }
