"""Sentiment lexicon, intensifier and negation dictionaries.

The lexicon uses the SentiWordNet 3.0 line format::

    POS<TAB>ID<TAB>PosScore<TAB>NegScore<TAB>lemma#rank lemma#rank<TAB>Gloss

Intensifiers are a two-column CSV (``word,multiplier``), negations one word
per line. ``#`` starts a comment line in all three files.
"""

from __future__ import annotations

import csv
import gzip
import io
import warnings
from dataclasses import dataclass
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping

POS_CODES = ("a", "r", "v", "n")  # also the tie-break priority order
POS_PRIORITY = {code: i for i, code in enumerate(POS_CODES)}

SCORE_TOLERANCE = 1e-9

FIELDS = ("POS", "ID", "PosScore", "NegScore", "SynsetTerms", "Gloss")


class LexiconError(ValueError):
    """A lexicon or dictionary line could not be parsed."""

    def __init__(self, message, lineno=None, field=None, source=None):
        self.reason = message
        self.lineno = lineno
        self.field = field
        self.source = source
        where = []
        if source is not None:
            where.append(str(source))
        if lineno is not None:
            where.append(f"line {lineno}")
        if field is not None:
            where.append(f"field {field}")
        prefix = ", ".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)


class DuplicateEntryWarning(UserWarning):
    pass


@dataclass(frozen=True, order=True)
class SynsetKey:
    pos: str
    offset: int

    def __post_init__(self):
        if self.pos not in POS_PRIORITY:
            raise ValueError(f"unknown POS code {self.pos!r}")
        if self.offset < 0:
            raise ValueError("synset offset must be non-negative")

    def __str__(self):
        return f"{self.pos}:{self.offset:08d}"


@dataclass(frozen=True)
class Synset:
    key: SynsetKey
    pos_score: float
    neg_score: float
    obj_score: float
    terms: tuple[tuple[str, int], ...]
    gloss: str = ""

    @property
    def lemmas(self) -> tuple[str, ...]:
        return tuple(lemma for lemma, _ in self.terms)

    def rank_of(self, lemma: str) -> int | None:
        for term, rank in self.terms:
            if term == lemma:
                return rank
        return None


def compute_obj_score(pos_score: float, neg_score: float) -> float:
    """Objectivity left over once positivity and negativity are accounted for.

    Sums exceeding 1 by no more than ``SCORE_TOLERANCE`` (decimal rounding in
    distributed files) are accepted and yield 0.
    """
    for name, value in (("pos_score", pos_score), ("neg_score", neg_score)):
        if not 0.0 <= value <= 1.0:
            raise ValueError(f"{name}={value!r} is outside [0, 1]")
    total = pos_score + neg_score
    if total > 1.0 + SCORE_TOLERANCE:
        raise ValueError(f"pos_score + neg_score = {total!r} exceeds 1")
    return max(0.0, 1.0 - total)


def _parse_score(text, lineno, field):
    try:
        value = float(text)
    except ValueError:
        raise LexiconError(f"non-numeric score {text!r}", lineno, field) from None
    if not 0.0 <= value <= 1.0:  # also rejects nan
        raise LexiconError(f"score {text!r} outside [0, 1]", lineno, field)
    return value


def _parse_terms(text, lineno):
    terms = []
    for item in text.split(" "):
        lemma, sep, rank_text = item.rpartition("#")
        if not sep or not lemma:
            raise LexiconError(f"malformed term {item!r}, expected lemma#rank",
                               lineno, "SynsetTerms")
        try:
            rank = int(rank_text)
        except ValueError:
            raise LexiconError(f"non-integer sense rank in {item!r}",
                               lineno, "SynsetTerms") from None
        if rank < 1:
            raise LexiconError(f"sense rank must be >= 1 in {item!r}",
                               lineno, "SynsetTerms")
        terms.append((lemma.lower(), rank))
    return tuple(terms)


def parse_lexicon_line(line: str, lineno: int | None = None,
                       source=None) -> Synset | None:
    """Parse one lexicon line; comments and blank lines return ``None``."""
    try:
        return _parse_lexicon_line(line, lineno)
    except LexiconError as exc:
        if source is None:
            raise
        raise LexiconError(exc.reason, lineno, exc.field, source) from None


def _parse_lexicon_line(line, lineno):
    line = line.rstrip("\r\n")
    stripped = line.strip()
    if not stripped or stripped.startswith("#"):
        return None
    parts = line.split("\t")
    if len(parts) != len(FIELDS):
        raise LexiconError(f"expected {len(FIELDS)} tab-separated fields, "
                           f"got {len(parts)}", lineno, "line")
    pos, ident, pos_text, neg_text, terms_text, gloss = parts
    pos = pos.strip()
    if pos not in POS_PRIORITY:
        raise LexiconError(f"unknown POS code {pos!r}", lineno, "POS")
    ident = ident.strip()
    if not ident.isdigit():
        raise LexiconError(f"synset ID {ident!r} is not a non-negative integer",
                           lineno, "ID")
    pos_score = _parse_score(pos_text.strip(), lineno, "PosScore")
    neg_score = _parse_score(neg_text.strip(), lineno, "NegScore")
    try:
        obj_score = compute_obj_score(pos_score, neg_score)
    except ValueError as exc:
        raise LexiconError(str(exc), lineno, "NegScore") from None
    terms_text = terms_text.strip()
    if not terms_text:
        raise LexiconError("empty SynsetTerms", lineno, "SynsetTerms")
    return Synset(
        key=SynsetKey(pos, int(ident)),
        pos_score=pos_score,
        neg_score=neg_score,
        obj_score=obj_score,
        terms=_parse_terms(terms_text, lineno),
        gloss=gloss.strip(),
    )


def _format_score(value):
    value = float(value)
    return str(int(value)) if value.is_integer() else repr(value)


def format_lexicon_line(synset: Synset) -> str:
    """Inverse of :func:`parse_lexicon_line` (without trailing newline)."""
    terms = " ".join(f"{lemma}#{rank}" for lemma, rank in synset.terms)
    return "\t".join([
        synset.key.pos,
        f"{synset.key.offset:08d}",
        _format_score(synset.pos_score),
        _format_score(synset.neg_score),
        terms,
        synset.gloss,
    ])


@dataclass(frozen=True)
class KnowledgeBase:
    """Immutable lexicon plus intensifier and negation dictionaries.

    ``sense_index`` maps ``(lemma, pos)`` to ``(key, rank)`` pairs sorted by
    ascending sense rank.
    """

    synsets: Mapping[SynsetKey, Synset]
    sense_index: Mapping[tuple[str, str], tuple[tuple[SynsetKey, int], ...]]
    intensifiers: Mapping[str, float]
    negations: frozenset[str]

    @classmethod
    def build(cls, synsets: Iterable[Synset], intensifiers=None, negations=()):
        table = {}
        index = {}
        for synset in synsets:
            if synset.key in table:
                raise LexiconError(f"duplicate synset key {synset.key}")
            table[synset.key] = synset
            for lemma, rank in synset.terms:
                index.setdefault((lemma, synset.key.pos), []).append((synset.key, rank))
        frozen_index = {k: tuple(sorted(v, key=lambda kr: (kr[1], kr[0])))
                        for k, v in index.items()}
        return cls(
            synsets=MappingProxyType(table),
            sense_index=MappingProxyType(frozen_index),
            intensifiers=MappingProxyType(dict(intensifiers or {})),
            negations=frozenset(negations),
        )

    def __eq__(self, other):
        if not isinstance(other, KnowledgeBase):
            return NotImplemented
        return (dict(self.synsets) == dict(other.synsets)
                and dict(self.sense_index) == dict(other.sense_index)
                and dict(self.intensifiers) == dict(other.intensifiers)
                and self.negations == other.negations)

    __hash__ = None

    # immutable, so copies can share; pickling rebuilds the read-only views
    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self

    def __reduce__(self):
        return (KnowledgeBase.build,
                (tuple(self.synsets.values()), dict(self.intensifiers), self.negations))

    def __len__(self):
        return len(self.synsets)

    def __repr__(self):
        return (f"KnowledgeBase(synsets={len(self.synsets)}, "
                f"intensifiers={len(self.intensifiers)}, "
                f"negations={len(self.negations)})")

    def has_lemma(self, lemma: str) -> bool:
        return any((lemma, pos) in self.sense_index for pos in POS_CODES)

    def sense_counts(self, lemma: str) -> dict[str, int]:
        return {pos: len(self.sense_index[(lemma, pos)])
                for pos in POS_CODES if (lemma, pos) in self.sense_index}

    def lexicon_lines(self):
        for key in sorted(self.synsets):
            yield format_lexicon_line(self.synsets[key])


def lookup_senses(kb: KnowledgeBase, lemma: str, pos: str | None = None) -> list[Synset]:
    """Candidate synsets for ``lemma``, most frequent sense first.

    ``pos=None`` is the wildcard: all four codes, ordered a > r > v > n and by
    rank within each code.
    """
    codes = POS_CODES if pos is None else (pos,)
    found = []
    for code in codes:
        for key, _ in kb.sense_index.get((lemma, code), ()):
            found.append(kb.synsets[key])
    return found


def _is_comment(line):
    stripped = line.strip()
    return not stripped or stripped.startswith("#")


def parse_lexicon(lines: Iterable[str], source=None) -> list[Synset]:
    synsets = []
    first_seen = {}
    for lineno, line in enumerate(lines, 1):
        synset = parse_lexicon_line(line, lineno, source)
        if synset is None:
            continue
        if synset.key in first_seen:
            raise LexiconError(f"duplicate synset key {synset.key} (first seen on "
                               f"line {first_seen[synset.key]})", lineno, "ID", source)
        first_seen[synset.key] = lineno
        synsets.append(synset)
    return synsets


def parse_intensifiers(lines: Iterable[str], source=None) -> dict[str, float]:
    table = {}
    numbered = ((n, line) for n, line in enumerate(lines, 1) if not _is_comment(line))
    for lineno, line in numbered:
        row = next(csv.reader([line]))
        if len(row) != 2:
            raise LexiconError(f"expected 2 CSV columns, got {len(row)}",
                               lineno, "row", source)
        word = row[0].strip().lower()
        if not word:
            raise LexiconError("empty intensifier word", lineno, "word", source)
        try:
            multiplier = float(row[1])
        except ValueError:
            raise LexiconError(f"non-numeric multiplier {row[1]!r}",
                               lineno, "multiplier", source) from None
        if not multiplier > 0:
            raise LexiconError(f"multiplier must be > 0, got {row[1]!r}",
                               lineno, "multiplier", source)
        if word in table:
            warnings.warn(f"{source or 'intensifiers'}, line {lineno}: duplicate "
                          f"intensifier {word!r}, keeping the last value",
                          DuplicateEntryWarning, stacklevel=2)
        table[word] = multiplier
    return table


def parse_negations(lines: Iterable[str], source=None) -> frozenset[str]:
    words = set()
    for lineno, line in enumerate(lines, 1):
        if _is_comment(line):
            continue
        word = line.strip().lower()
        if any(ch.isspace() for ch in word):
            raise LexiconError(f"negation entry {word!r} contains whitespace",
                               lineno, "word", source)
        words.add(word)
    return frozenset(words)


def load_knowledge_base(lexicon_source: Iterable[str],
                        intensifier_source: Iterable[str] = (),
                        negation_source: Iterable[str] = (),
                        names=(None, None, None)) -> KnowledgeBase:
    """Build a validated :class:`KnowledgeBase` from three line sources.

    ``names`` labels the sources in error messages.
    """
    lex_name, int_name, neg_name = names
    synsets = parse_lexicon(lexicon_source, lex_name)
    intensifiers = parse_intensifiers(intensifier_source, int_name)
    negations = parse_negations(negation_source, neg_name)
    return KnowledgeBase.build(synsets, intensifiers, negations)


def open_text(path) -> io.TextIOBase:
    """Open a UTF-8 text file, transparently decompressing ``.gz``."""
    path = Path(path)
    if path.suffix == ".gz":
        return gzip.open(path, "rt", encoding="utf-8")
    return open(path, encoding="utf-8")


def load_knowledge_base_from_paths(lexicon_path, intensifier_path=None,
                                   negation_path=None) -> KnowledgeBase:
    paths = (lexicon_path, intensifier_path, negation_path)
    sources = []
    try:
        for path in paths:
            sources.append(open_text(path) if path is not None else io.StringIO(""))
        return load_knowledge_base(*sources, names=tuple(
            str(p) if p is not None else None for p in paths))
    finally:
        for handle in sources:
            handle.close()
