"""Lexicon-based sentence and feedback level sentiment classification."""

__version__ = "0.1.0"

from .aggregate import FeedbackResult, aggregate_feedback
from .evaluation import ConfusionMatrix, accuracy, confusion_matrix, per_class_metrics, subjectivity_stats
from .knowledge_base import KnowledgeBase, Synset, SynsetKey, load_knowledge_base, lookup_senses
from .pipeline import analyze_feedback, analyze_sentence, load_default_knowledge_base
from .preprocess import RawFeedback, Sentence, Token, clean_text, split_sentences, tokenize
from .scorer import Polarity, ScoringConfig, SentenceAnalysis, score_sentence
from .estimator import LexiconSentimentClassifier, TextCleaner

__all__ = [
    "ConfusionMatrix", "FeedbackResult", "KnowledgeBase", "LexiconSentimentClassifier",
    "Polarity", "RawFeedback", "ScoringConfig", "Sentence", "SentenceAnalysis", "Synset",
    "SynsetKey", "TextCleaner", "Token", "accuracy", "aggregate_feedback", "analyze_feedback",
    "analyze_sentence", "clean_text", "confusion_matrix", "load_default_knowledge_base",
    "load_knowledge_base", "lookup_senses", "per_class_metrics", "score_sentence",
    "split_sentences", "subjectivity_stats", "tokenize",
]
