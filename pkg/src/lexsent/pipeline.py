"""End-to-end analysis of feedback text with a loaded knowledge base."""

from __future__ import annotations

from dataclasses import replace
from importlib import resources

from .aggregate import FeedbackResult, aggregate_feedback
from .knowledge_base import KnowledgeBase, load_knowledge_base_from_paths
from .preprocess import RawFeedback, Sentence, clean_text, lemmatize, split_sentences, tokenize
from .scorer import ScoringConfig, SentenceAnalysis, score_sentence
from .tagger import tag_tokens
from .wsd import STOPWORDS, disambiguate_sentence

BUNDLED_LEXICON = "SentiWordNet_3.0.0.txt.gz"
BUNDLED_INTENSIFIERS = "intensifiers.csv"
BUNDLED_NEGATIONS = "negations.txt"


def bundled_path(name: str):
    return resources.files("lexsent.data").joinpath(name)


def load_default_knowledge_base(lexicon=None, intensifiers=None, negations=None) -> KnowledgeBase:
    """Load a knowledge base, falling back to the bundled files for any path left as None."""
    return load_knowledge_base_from_paths(
        lexicon if lexicon is not None else bundled_path(BUNDLED_LEXICON),
        intensifiers if intensifiers is not None else bundled_path(BUNDLED_INTENSIFIERS),
        negations if negations is not None else bundled_path(BUNDLED_NEGATIONS),
    )


def prepare_tokens(sentence: Sentence | str, kb: KnowledgeBase):
    tokens = []
    for token in tokenize(sentence):
        # dictionary words are matched on their surface form
        if token.lemma not in kb.negations and token.lemma not in kb.intensifiers:
            token = lemmatize(token, kb)
        tokens.append(token)
    return tokens


def analyze_sentence(sentence: Sentence | str, kb: KnowledgeBase,
                     config: ScoringConfig = ScoringConfig(),
                     stopwords=STOPWORDS) -> SentenceAnalysis:
    tagged = tag_tokens(prepare_tokens(sentence, kb), kb)
    tagged = disambiguate_sentence(tagged, kb, stopwords)
    if not isinstance(sentence, Sentence):
        sentence = None
    return score_sentence(tagged, kb, config, sentence=sentence)


def analyze_feedback(feedback: RawFeedback, kb: KnowledgeBase,
                     config: ScoringConfig = ScoringConfig(), strategy: str = "sum",
                     stopwords=STOPWORDS) -> FeedbackResult:
    cleaned = replace(feedback, text=clean_text(feedback.text))
    analyses = [analyze_sentence(s, kb, config, stopwords) for s in split_sentences(cleaned)]
    return aggregate_feedback(analyses, feedback_id=feedback.id, strategy=strategy,
                              epsilon=config.epsilon)
