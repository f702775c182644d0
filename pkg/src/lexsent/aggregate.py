"""Feedback-level polarity from sentence analyses."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .scorer import EPSILON, Polarity, SentenceAnalysis, band

STRATEGIES = ("sum", "majority")


@dataclass(frozen=True)
class FeedbackResult:
    feedback_id: Optional[str]
    sentences: tuple[SentenceAnalysis, ...]
    feedback_score: float
    polarity: Polarity
    subjective_count: int
    objective_count: int


def _feedback_id(analyses, feedback_id):
    ids = {a.sentence.feedback_id for a in analyses if a.sentence is not None}
    if feedback_id is not None:
        ids.add(feedback_id)
    if len(ids) > 1:
        raise ValueError(f"sentences belong to several feedbacks: {sorted(ids)}")
    return ids.pop() if ids else None


def aggregate_feedback(analyses: Sequence[SentenceAnalysis], feedback_id: Optional[str] = None,
                       strategy: str = "sum", epsilon: float = EPSILON) -> FeedbackResult:
    """Combine sentence results of one feedback.

    ``sum`` adds the raw scores of subjective sentences. ``majority`` scores
    the feedback as (#positive - #negative) sentences. Either score is then
    banded by ``epsilon``.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown aggregation strategy {strategy!r}")
    fid = _feedback_id(analyses, feedback_id)
    subjective = [a for a in analyses if a.subjective]
    if strategy == "sum":
        score = sum(a.raw_score for a in subjective)
    else:
        score = float(sum(a.polarity is Polarity.POSITIVE for a in subjective)
                      - sum(a.polarity is Polarity.NEGATIVE for a in subjective))
    if not subjective:
        score = 0.0
    return FeedbackResult(
        feedback_id=fid,
        sentences=tuple(analyses),
        feedback_score=score,
        polarity=band(score, epsilon),
        subjective_count=len(subjective),
        objective_count=len(analyses) - len(subjective),
    )
