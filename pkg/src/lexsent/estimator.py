"""scikit-learn compatible wrappers around the lexicon pipeline.

Nothing is learned: ``fit`` loads and validates the knowledge base, so the
classifier can sit in a :class:`sklearn.pipeline.Pipeline` or be passed to
``cross_val_score`` like any other estimator.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .aggregate import STRATEGIES, aggregate_feedback
from .knowledge_base import KnowledgeBase
from .pipeline import analyze_feedback, analyze_sentence, load_default_knowledge_base
from .preprocess import RawFeedback, Sentence, clean_text
from .scorer import EPSILON, NEG_WINDOW, TAU_SUBJ, Polarity, ScoringConfig
from .wsd import STOPWORDS

LEVELS = ("feedback", "sentence")


def check_texts(X, name="X") -> list[str]:
    """Validate a 1-D collection of strings and return it as a list.

    A single string is rejected rather than iterated character by character.
    """
    if isinstance(X, (str, bytes)):
        raise TypeError(f"{name} must be a sequence of strings, not a single string")
    if hasattr(X, "ndim") and X.ndim != 1:
        if X.ndim == 2 and X.shape[1] == 1:
            X = X[:, 0]
        else:
            raise ValueError(f"{name} must be 1-D, got shape {X.shape}")
    try:
        texts = list(X)
    except TypeError:
        raise TypeError(f"{name} must be an iterable of strings") from None
    for i, text in enumerate(texts):
        if not isinstance(text, str):
            raise TypeError(f"{name}[{i}] is {type(text).__name__}, expected str")
    return texts


def check_labels(y, n_samples: int) -> np.ndarray:
    labels = np.asarray([Polarity.parse(v).value for v in y], dtype=object)
    if len(labels) != n_samples:
        raise ValueError(f"got {n_samples} samples but {len(labels)} labels")
    return labels


class TextCleaner(TransformerMixin, BaseEstimator):
    """Stateless transformer applying :func:`~lexsent.preprocess.clean_text`."""

    def fit(self, X, y=None):
        check_texts(X)
        return self

    def transform(self, X):
        return np.asarray([clean_text(t) for t in check_texts(X)], dtype=object)


class LexiconSentimentClassifier(ClassifierMixin, BaseEstimator):
    """Positive / negative / neutral classifier backed by a sentiment lexicon.

    Parameters
    ----------
    lexicon, intensifiers, negations : path or None
        Dictionary files; ``None`` selects the bundled resource.
    knowledge_base : KnowledgeBase or None
        Pre-loaded knowledge base; overrides the three paths.
    tau_subj, epsilon, neg_window
        Subjectivity threshold, neutral band half-width and negation window.
    aggregate : {"sum", "majority"}
        How sentence results combine at feedback level.
    level : {"feedback", "sentence"}
        ``feedback`` splits each sample into sentences and aggregates;
        ``sentence`` treats each sample as one sentence.
    stopwords : frozenset or None
        Stopwords for gloss overlap; ``None`` uses the bundled list.
    """

    def __init__(self, lexicon=None, intensifiers=None, negations=None, knowledge_base=None,
                 tau_subj=TAU_SUBJ, epsilon=EPSILON, neg_window=NEG_WINDOW,
                 aggregate="sum", level="feedback", stopwords=None):
        self.lexicon = lexicon
        self.intensifiers = intensifiers
        self.negations = negations
        self.knowledge_base = knowledge_base
        self.tau_subj = tau_subj
        self.epsilon = epsilon
        self.neg_window = neg_window
        self.aggregate = aggregate
        self.level = level
        self.stopwords = stopwords

    def fit(self, X=None, y=None):
        if X is not None:
            texts = check_texts(X)
            if y is not None:
                check_labels(y, len(texts))
        if self.aggregate not in STRATEGIES:
            raise ValueError(f"aggregate must be one of {STRATEGIES}, got {self.aggregate!r}")
        if self.level not in LEVELS:
            raise ValueError(f"level must be one of {LEVELS}, got {self.level!r}")
        self.config_ = ScoringConfig(self.tau_subj, self.epsilon, self.neg_window)
        if self.knowledge_base is not None:
            if not isinstance(self.knowledge_base, KnowledgeBase):
                raise TypeError("knowledge_base must be a KnowledgeBase")
            self.kb_ = self.knowledge_base
        else:
            self.kb_ = load_default_knowledge_base(self.lexicon, self.intensifiers, self.negations)
        self.stopwords_ = STOPWORDS if self.stopwords is None else frozenset(self.stopwords)
        self.classes_ = np.asarray([p.value for p in Polarity], dtype=object)
        return self

    def analyze(self, X, ids=None):
        """Full :class:`~lexsent.aggregate.FeedbackResult` per sample."""
        check_is_fitted(self, "kb_")
        texts = check_texts(X)
        ids = [str(i) for i in range(len(texts))] if ids is None else [str(i) for i in ids]
        results = []
        for fid, text in zip(ids, texts):
            if self.level == "feedback":
                results.append(analyze_feedback(RawFeedback(fid, text), self.kb_, self.config_,
                                                self.aggregate, self.stopwords_))
            else:
                sentence = Sentence(fid, 0, clean_text(text))
                analysis = analyze_sentence(sentence, self.kb_, self.config_, self.stopwords_)
                results.append(aggregate_feedback([analysis], fid, self.aggregate,
                                                  self.config_.epsilon))
        return results

    def decision_function(self, X) -> np.ndarray:
        """Signed sentiment strength; the sentence raw score at sentence level."""
        results = self.analyze(X)
        if self.level == "sentence":
            return np.asarray([r.sentences[0].raw_score for r in results], dtype=float)
        return np.asarray([r.feedback_score for r in results], dtype=float)

    def predict(self, X) -> np.ndarray:
        results = self.analyze(X)
        if self.level == "sentence":
            return np.asarray([r.sentences[0].polarity.value for r in results], dtype=object)
        return np.asarray([r.polarity.value for r in results], dtype=object)

    def score(self, X, y, sample_weight=None):
        texts = check_texts(X)
        return super().score(texts, check_labels(y, len(texts)), sample_weight)
