"""Simplified Lesk word-sense disambiguation over lexicon glosses."""

from __future__ import annotations

from dataclasses import replace
from importlib import resources
from typing import Iterable, Optional

from .knowledge_base import KnowledgeBase, Synset, lookup_senses
from .preprocess import lemmatize_word, tokenize
from .tagger import TaggedToken


def read_stopwords(lines: Iterable[str]) -> frozenset[str]:
    words = set()
    for line in lines:
        line = line.strip().lower()
        if line and not line.startswith("#"):
            words.add(line)
    return frozenset(words)


def _bundled_stopwords():
    text = resources.files("lexsent.data").joinpath("stopwords.txt").read_text("utf-8")
    return read_stopwords(text.splitlines())


STOPWORDS = _bundled_stopwords()


def gloss_lemmas(gloss: str, kb: Optional[KnowledgeBase] = None,
                 stopwords: frozenset[str] = STOPWORDS) -> set[str]:
    lemmas = set()
    for token in tokenize(gloss):
        if token.lemma in stopwords:
            continue
        lemma = lemmatize_word(token.lemma, kb) if kb is not None else token.lemma
        if lemma not in stopwords:
            lemmas.add(lemma)
    return lemmas


def gloss_overlap(gloss: str, context_lemmas: set[str],
                  kb: Optional[KnowledgeBase] = None,
                  stopwords: frozenset[str] = STOPWORDS) -> int:
    """Number of distinct non-stopword gloss lemmas found in the context."""
    return len(gloss_lemmas(gloss, kb, stopwords) & set(context_lemmas))


def context_lemmas(token: TaggedToken, sentence_tokens: list[TaggedToken]) -> set[str]:
    return {other.lemma for other in sentence_tokens
            if other.pos.is_open_class and other.token.position != token.token.position}


def disambiguate(token: TaggedToken, sentence_tokens: list[TaggedToken],
                 kb: KnowledgeBase, stopwords: frozenset[str] = STOPWORDS) -> Optional[Synset]:
    """Pick the sense whose gloss shares most lemmas with the sentence.

    Candidates arrive in sense-rank order and only a strictly larger overlap
    replaces the current best, so ties go to the lowest rank.
    """
    code = token.pos.lexicon_code
    if code is None:
        return None
    candidates = lookup_senses(kb, token.lemma, code)
    if not candidates:
        return None
    if len(candidates) == 1:
        return candidates[0]
    context = context_lemmas(token, sentence_tokens)
    best, best_overlap = candidates[0], -1
    if not context:
        return best
    for synset in candidates:
        overlap = gloss_overlap(synset.gloss, context, kb, stopwords)
        if overlap > best_overlap:
            best, best_overlap = synset, overlap
    return best


def disambiguate_sentence(tagged: list[TaggedToken], kb: KnowledgeBase,
                          stopwords: frozenset[str] = STOPWORDS) -> list[TaggedToken]:
    """Attach a resolved synset to every open-class token."""
    resolved = []
    for token in tagged:
        synset = disambiguate(token, tagged, kb, stopwords)
        resolved.append(replace(token, synset=synset) if synset is not None else token)
    return resolved
