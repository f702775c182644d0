"""Rule-based sentence scoring: negation window, intensifiers, subjectivity.

Scan rules, applied left to right:

* a Negation token raises the negation flag and records its position;
* an Intensifier token multiplies the pending multiplier by its weight;
* a sentiment-bearing token (resolved synset with non-zero net orientation,
  ``pos_score != neg_score``) contributes ``multiplier * score``, where the
  score is sign-flipped if the flag was raised at most ``neg_window`` tokens
  earlier. It consumes both the flag and the multiplier;
* a flag older than ``neg_window`` tokens expires unused.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Optional

from .knowledge_base import KnowledgeBase, Synset
from .preprocess import Sentence
from .tagger import CoarsePos, TaggedToken

TAU_SUBJ = 0.1
EPSILON = 0.05
NEG_WINDOW = 3


class Polarity(str, enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NEUTRAL = "neutral"

    @classmethod
    def parse(cls, value) -> "Polarity":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise ValueError(f"unknown polarity label {value!r}") from None


@dataclass(frozen=True)
class ScoringConfig:
    tau_subj: float = TAU_SUBJ
    epsilon: float = EPSILON
    neg_window: int = NEG_WINDOW

    def __post_init__(self):
        if self.tau_subj < 0 or self.epsilon < 0:
            raise ValueError("thresholds must be non-negative")
        if self.neg_window < 0:
            raise ValueError("negation window must be non-negative")


@dataclass(frozen=True)
class SentenceAnalysis:
    sentence: Optional[Sentence]
    tagged: tuple[TaggedToken, ...]
    subjective: bool
    raw_score: float
    polarity: Polarity


def token_signed_score(synset: Synset) -> float:
    return synset.pos_score - synset.neg_score


def is_sentiment_bearing(token: TaggedToken) -> bool:
    synset = token.synset
    return synset is not None and synset.pos_score != synset.neg_score


def classify_subjectivity(tagged, tau_subj: float = TAU_SUBJ) -> bool:
    return any(t.synset is not None
               and max(t.synset.pos_score, t.synset.neg_score) >= tau_subj
               for t in tagged)


def band(score: float, epsilon: float = EPSILON) -> Polarity:
    if score > epsilon:
        return Polarity.POSITIVE
    if score < -epsilon:
        return Polarity.NEGATIVE
    return Polarity.NEUTRAL


def score_tokens(tagged, kb: KnowledgeBase, neg_window: int = NEG_WINDOW):
    """Run the scan; returns (raw sum, tokens annotated with their scores)."""
    total = 0.0
    negated_at = None
    multiplier = 1.0
    annotated = []
    for i, token in enumerate(tagged):
        if negated_at is not None and i - negated_at > neg_window:
            negated_at = None
        if token.pos is CoarsePos.NEGATION:
            negated_at = i
        elif token.pos is CoarsePos.INTENSIFIER:
            multiplier *= kb.intensifiers[token.lemma]
        elif is_sentiment_bearing(token):
            score = token_signed_score(token.synset)
            if negated_at is not None:
                score = -score
            total += multiplier * score
            token = replace(token, signed_score=score, multiplier=multiplier)
            negated_at = None
            multiplier = 1.0
        annotated.append(token)
    return total, annotated


def score_sentence(tagged, kb: KnowledgeBase, config: ScoringConfig = ScoringConfig(),
                   sentence: Optional[Sentence] = None) -> SentenceAnalysis:
    raw, annotated = score_tokens(tagged, kb, config.neg_window)
    subjective = classify_subjectivity(annotated, config.tau_subj)
    if not subjective:
        raw = 0.0
    polarity = band(raw, config.epsilon) if subjective else Polarity.NEUTRAL
    return SentenceAnalysis(sentence, tuple(annotated), subjective, raw, polarity)
