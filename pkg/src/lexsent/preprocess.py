"""Noise removal, sentence splitting, tokenization and suffix lemmatization."""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, replace

URL_RE = re.compile(r"(?:https?://|ftp://|www\.)\S+", re.IGNORECASE)
TAG_RE = re.compile(r"<[^<>]*>")
LETTER_RUN_RE = re.compile(r"([^\W\d_])\1{2,}")
PUNCT_RUN_RE = re.compile(r"([^\w\s])\1+")
SPACE_RE = re.compile(r"\s+")

TERMINATORS = ".!?"
ABBREVIATIONS = frozenset({"mr", "mrs", "dr", "st", "vs", "etc", "e.g", "i.e", "no"})

WORD_RE = re.compile(r"[^\W_]+(?:['’][^\W_]+)*")

# (suffix, replacements) tried in order; the first candidate known to the
# lexicon wins.
SUFFIX_RULES = (
    ("ies", ("y",)),
    ("es", ("",)),
    ("s", ("",)),
    ("ing", ("", "e")),
    ("ed", ("", "e")),
    ("er", ("",)),
    ("est", ("",)),
)


@dataclass(frozen=True)
class RawFeedback:
    id: str
    text: str

    def __post_init__(self):
        if not self.id:
            raise ValueError("feedback id must be non-empty")


@dataclass(frozen=True)
class Sentence:
    feedback_id: str
    index: int
    text: str

    @property
    def id(self) -> str:
        return f"{self.feedback_id}#{self.index}"


@dataclass(frozen=True)
class Token:
    surface: str
    lemma: str
    position: int


def _drop_controls(text):
    return "".join(ch for ch in text
                   if ch.isspace() or unicodedata.category(ch) not in ("Cc", "Cf"))


def _clean_once(text):
    text = URL_RE.sub(" ", text)
    text = TAG_RE.sub(" ", text)
    text = _drop_controls(text)
    text = LETTER_RUN_RE.sub(r"\1\1", text)
    text = PUNCT_RUN_RE.sub(r"\1", text)
    return SPACE_RE.sub(" ", text).strip()


def clean_text(raw: str) -> str:
    """Strip URLs, markup and control characters; squeeze repeated characters.

    >>> clean_text("Sooooo goooood!!! http://x.co/a")
    'Soo good!'
    """
    # Every rule only deletes characters, so iterating to a fixed point
    # terminates and makes the function idempotent even when a deletion
    # exposes a new match (e.g. "<<b>b>").
    text = raw
    while True:
        cleaned = _clean_once(text)
        if cleaned == text:
            return cleaned
        text = cleaned


def _has_word_char(text):
    return any(ch.isalnum() for ch in text)


def _is_boundary(text, i):
    """True if the terminator at ``text[i]`` ends a sentence."""
    if i + 1 < len(text) and not text[i + 1].isspace():
        return False
    if text[i] == ".":
        start = i
        while start > 0 and not text[start - 1].isspace():
            start -= 1
        word = text[start:i].lstrip("\"'([{").lower()
        if word in ABBREVIATIONS:
            return False
    return True


def split_text(text: str) -> list[str]:
    """Split cleaned text into sentence strings, terminators kept.

    Fragments without any letter or digit are glued onto the neighbouring
    sentence instead of standing alone.
    """
    pieces = []
    start = 0
    for i, ch in enumerate(text):
        if ch in TERMINATORS and _is_boundary(text, i):
            pieces.append(text[start:i + 1])
            start = i + 1
    pieces.append(text[start:])

    sentences = []
    carry = ""
    for piece in pieces:
        piece = piece.strip()
        if not piece:
            continue
        if not _has_word_char(piece):
            if sentences:
                sentences[-1] = f"{sentences[-1]} {piece}"
            else:
                carry = f"{carry} {piece}".strip()
            continue
        sentences.append(f"{carry} {piece}".strip() if carry else piece)
        carry = ""
    return sentences


def split_sentences(feedback: RawFeedback) -> list[Sentence]:
    return [Sentence(feedback.id, i, text)
            for i, text in enumerate(split_text(feedback.text))]


def tokenize(sentence: Sentence | str) -> list[Token]:
    """Word tokens; internal apostrophes are kept, other punctuation dropped."""
    text = sentence.text if isinstance(sentence, Sentence) else sentence
    return [Token(m.group(), normalize_word(m.group()), i)
            for i, m in enumerate(WORD_RE.finditer(text))]


def normalize_word(surface: str) -> str:
    return surface.lower().replace("’", "'")


def lemma_candidates(word: str):
    """Suffix-stripped forms of ``word`` in rule order (excluding ``word``)."""
    for suffix, replacements in SUFFIX_RULES:
        if len(word) > len(suffix) and word.endswith(suffix):
            stem = word[:-len(suffix)]
            for extra in replacements:
                yield stem + extra


def lemmatize_word(word: str, kb) -> str:
    word = normalize_word(word)
    if kb.has_lemma(word):
        return word
    for candidate in lemma_candidates(word):
        if kb.has_lemma(candidate):
            return candidate
    return word


def lemmatize(token: Token, kb) -> Token:
    lemma = lemmatize_word(token.surface, kb)
    return token if lemma == token.lemma else replace(token, lemma=lemma)
