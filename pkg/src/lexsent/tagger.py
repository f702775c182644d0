"""Coarse part-of-speech tagging from lexicon sense counts and suffixes."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .knowledge_base import POS_CODES, KnowledgeBase, Synset
from .preprocess import Token


class CoarsePos(str, enum.Enum):
    NOUN = "Noun"
    VERB = "Verb"
    ADJECTIVE = "Adjective"
    ADVERB = "Adverb"
    NEGATION = "Negation"
    INTENSIFIER = "Intensifier"
    OTHER = "Other"

    @property
    def lexicon_code(self) -> Optional[str]:
        return _TO_CODE.get(self)

    @property
    def is_open_class(self) -> bool:
        return self in _TO_CODE


_TO_CODE = {
    CoarsePos.ADJECTIVE: "a",
    CoarsePos.ADVERB: "r",
    CoarsePos.VERB: "v",
    CoarsePos.NOUN: "n",
}
FROM_CODE = {code: pos for pos, code in _TO_CODE.items()}

SUFFIX_TAGS = (
    ("ly", CoarsePos.ADVERB),
    ("ous", CoarsePos.ADJECTIVE),
    ("ful", CoarsePos.ADJECTIVE),
    ("ive", CoarsePos.ADJECTIVE),
    ("able", CoarsePos.ADJECTIVE),
)


@dataclass(frozen=True)
class TaggedToken:
    token: Token
    pos: CoarsePos
    synset: Optional[Synset] = None
    signed_score: float = 0.0
    multiplier: float = 1.0

    def __post_init__(self):
        if self.synset is not None:
            if self.synset.key.pos != self.pos.lexicon_code:
                raise ValueError(f"synset {self.synset.key} is incompatible "
                                 f"with tag {self.pos.value}")

    @property
    def lemma(self) -> str:
        return self.token.lemma


def majority_code(kb: KnowledgeBase, lemma: str) -> Optional[str]:
    """Lexicon POS code with the most senses for ``lemma`` (ties a > r > v > n)."""
    counts = kb.sense_counts(lemma)
    if not counts:
        return None
    # POS_CODES is already in priority order and max() keeps the first maximum
    return max(POS_CODES, key=lambda code: counts.get(code, 0))


def tag_token(token: Token, kb: KnowledgeBase) -> CoarsePos:
    lemma = token.lemma
    if lemma in kb.negations:
        return CoarsePos.NEGATION
    if lemma in kb.intensifiers:
        return CoarsePos.INTENSIFIER
    code = majority_code(kb, lemma)
    if code is not None:
        return FROM_CODE[code]
    for suffix, pos in SUFFIX_TAGS:
        if lemma.endswith(suffix) and len(lemma) > len(suffix):
            return pos
    return CoarsePos.OTHER


def tag_tokens(tokens: list[Token], kb: KnowledgeBase) -> list[TaggedToken]:
    return [TaggedToken(token, tag_token(token, kb)) for token in tokens]
