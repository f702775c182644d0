"""Command-line interface: ``lexsent classify | evaluate | lexicon-info``."""

from __future__ import annotations

import argparse
import csv
import json
import logging
import math
import sys
from collections import Counter
from pathlib import Path

from . import __version__
from .aggregate import STRATEGIES, FeedbackResult
from .evaluation import confusion_matrix, evaluation_report
from .knowledge_base import POS_CODES, SCORE_TOLERANCE, LexiconError, open_text, parse_lexicon
from .pipeline import analyze_feedback, bundled_path, load_default_knowledge_base, BUNDLED_LEXICON
from .preprocess import RawFeedback
from .scorer import EPSILON, NEG_WINDOW, TAU_SUBJ, Polarity, ScoringConfig
from .wsd import STOPWORDS, read_stopwords

log = logging.getLogger("lexsent")

EXIT_OK, EXIT_INPUT_ERROR, EXIT_EMPTY = 0, 1, 2
HIST_BINS = 10


class CliError(Exception):
    def __init__(self, message, code=EXIT_INPUT_ERROR):
        super().__init__(message)
        self.code = code


# -- output -----------------------------------------------------------------

def _fixed(value: float) -> str:
    text = f"{value:.4f}"
    return "0.0000" if text == "-0.0000" else text


def dumps(obj) -> str:
    """Compact JSON with every float printed with exactly four decimals."""
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError(f"cannot serialize {obj!r}")
        return _fixed(obj)
    if isinstance(obj, (int, str)):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def feedback_record(result: FeedbackResult, verbose: bool = False) -> dict:
    sentences = []
    for analysis in result.sentences:
        record = {
            "index": analysis.sentence.index,
            "text": analysis.sentence.text,
            "subjective": analysis.subjective,
            "raw_score": analysis.raw_score,
            "polarity": analysis.polarity.value,
        }
        if verbose:
            record["tokens"] = [{
                "surface": t.token.surface,
                "lemma": t.lemma,
                "pos": t.pos.value,
                "synset": str(t.synset.key) if t.synset is not None else None,
                "pos_score": t.synset.pos_score if t.synset is not None else None,
                "neg_score": t.synset.neg_score if t.synset is not None else None,
                "signed_score": t.signed_score,
                "multiplier": t.multiplier,
            } for t in analysis.tagged]
        sentences.append(record)
    return {
        "id": result.feedback_id,
        "polarity": result.polarity.value,
        "feedback_score": result.feedback_score,
        "subjective_count": result.subjective_count,
        "objective_count": result.objective_count,
        "sentences": sentences,
    }


# -- input ------------------------------------------------------------------

def read_corpus(path, fmt: str = "jsonl") -> list[RawFeedback]:
    path = Path(path)
    if not path.is_file():
        raise CliError(f"corpus file not found: {path}")
    feedbacks = []
    with open_text(path) as handle:
        for lineno, line in enumerate(handle, 1):
            if not line.strip():
                continue
            if fmt == "lines":
                feedbacks.append(RawFeedback(str(lineno), line.rstrip("\r\n")))
                continue
            try:
                obj = json.loads(line)
                feedbacks.append(RawFeedback(str(obj["id"]), str(obj["text"])))
            except (ValueError, KeyError, TypeError) as exc:
                raise CliError(f"{path}, line {lineno}: bad corpus record ({exc})") from None
    seen = Counter(f.id for f in feedbacks)
    dupes = sorted(i for i, n in seen.items() if n > 1)
    if dupes:
        raise CliError(f"{path}: duplicate feedback ids {dupes[:5]}")
    return feedbacks


def read_gold(path, level: str) -> dict[str, Polarity]:
    """``id,level,label`` rows for one level; an optional header is skipped."""
    labels = {}
    with open_text(path) as handle:
        for lineno, row in enumerate(csv.reader(handle), 1):
            if not row or row[0].startswith("#"):
                continue
            if lineno == 1 and [c.strip().lower() for c in row] == ["id", "level", "label"]:
                continue
            if len(row) != 3:
                raise CliError(f"{path}, line {lineno}: expected id,level,label")
            ident, row_level, label = (c.strip() for c in row)
            if row_level not in ("sentence", "feedback"):
                raise CliError(f"{path}, line {lineno}: unknown level {row_level!r}")
            try:
                polarity = Polarity.parse(label)
            except ValueError as exc:
                raise CliError(f"{path}, line {lineno}: {exc}") from None
            if row_level == level:
                labels[ident] = polarity
    return labels


def read_predictions(path, level: str) -> dict[str, Polarity]:
    """Predictions from ``classify`` JSON Lines, or a CSV in the gold format."""
    path = Path(path)
    if not path.is_file():
        raise CliError(f"predictions file not found: {path}")
    if path.suffix == ".csv":
        return read_gold(path, level)
    labels = {}
    with open_text(path) as handle:
        for lineno, line in enumerate(handle, 1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
                if level == "feedback":
                    labels[str(obj["id"])] = Polarity.parse(obj["polarity"])
                else:
                    for s in obj["sentences"]:
                        labels[f"{obj['id']}#{s['index']}"] = Polarity.parse(s["polarity"])
            except (ValueError, KeyError, TypeError) as exc:
                raise CliError(f"{path}, line {lineno}: bad prediction record ({exc})") from None
    return labels


def _load_kb(args):
    for name in ("lexicon", "intensifiers", "negations"):
        path = getattr(args, name)
        if path is not None and not Path(path).is_file():
            raise CliError(f"{name} file not found: {path}")
    try:
        return load_default_knowledge_base(args.lexicon, args.intensifiers, args.negations)
    except (LexiconError, UnicodeDecodeError, OSError) as exc:
        raise CliError(f"failed to load knowledge base: {exc}") from None


def _load_stopwords(path):
    if path is None:
        return STOPWORDS
    if not Path(path).is_file():
        raise CliError(f"stopwords file not found: {path}")
    with open_text(path) as handle:
        return read_stopwords(handle)


# -- commands ---------------------------------------------------------------

def cmd_classify(args, out) -> int:
    kb = _load_kb(args)
    stopwords = _load_stopwords(args.stopwords)
    try:
        config = ScoringConfig(args.tau_subj, args.epsilon, args.neg_window)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    feedbacks = read_corpus(args.corpus, args.format)
    if not feedbacks:
        raise CliError(f"corpus {args.corpus} contains no feedback", EXIT_EMPTY)
    for feedback in feedbacks:
        result = analyze_feedback(feedback, kb, config, args.aggregate, stopwords)
        out.write(dumps(feedback_record(result, args.verbose)) + "\n")
    return EXIT_OK


def evaluate_labels(predictions: dict, gold: dict, level: str) -> dict:
    matched = sorted(set(predictions) & set(gold))
    if not matched:
        raise CliError("no ids shared by predictions and gold labels", EXIT_EMPTY)
    only_pred = sorted(set(predictions) - set(gold))
    only_gold = sorted(set(gold) - set(predictions))
    if only_pred or only_gold:
        log.warning("%d unmatched ids excluded from evaluation", len(only_pred) + len(only_gold))
    m = confusion_matrix((predictions[i], gold[i]) for i in matched)
    report = {"level": level, "matched": len(matched)}
    report.update(evaluation_report(m))
    report["unmatched"] = {"predictions_only": only_pred, "gold_only": only_gold}
    report["warnings"] = len(only_pred) + len(only_gold)
    return report


def cmd_evaluate(args, out) -> int:
    if not Path(args.gold).is_file():
        raise CliError(f"gold file not found: {args.gold}")
    predictions = read_predictions(args.predictions, args.level)
    gold = read_gold(args.gold, args.level)
    out.write(dumps(evaluate_labels(predictions, gold, args.level)) + "\n")
    return EXIT_OK


def _histogram(values):
    counts = [0] * HIST_BINS
    for v in values:
        counts[min(int(v * HIST_BINS), HIST_BINS - 1)] += 1
    return counts


def lexicon_summary(synsets) -> dict:
    residuals = [abs(s.pos_score + s.neg_score + s.obj_score - 1.0) for s in synsets]
    violations = sum(r > SCORE_TOLERANCE for r in residuals)
    per_pos = Counter(s.key.pos for s in synsets)
    return {
        "synsets": len(synsets),
        "per_pos": {code: per_pos.get(code, 0) for code in POS_CODES},
        "histogram": {
            "bins": [[i / HIST_BINS, (i + 1) / HIST_BINS] for i in range(HIST_BINS)],
            "pos_score": _histogram(s.pos_score for s in synsets),
            "neg_score": _histogram(s.neg_score for s in synsets),
        },
        "score_sum_check": {
            "passed": violations == 0,
            "violations": violations,
            "max_residual": max(residuals, default=0.0),
            "tolerance": SCORE_TOLERANCE,
        },
    }


def cmd_lexicon_info(args, out) -> int:
    path = args.lexicon if args.lexicon is not None else bundled_path(BUNDLED_LEXICON)
    if not Path(path).is_file():
        raise CliError(f"lexicon file not found: {path}")
    try:
        with open_text(path) as handle:
            synsets = parse_lexicon(handle, str(path))
    except (LexiconError, UnicodeDecodeError) as exc:
        raise CliError(f"failed to parse lexicon: {exc}") from None
    summary = {"lexicon": str(path)}
    summary.update(lexicon_summary(synsets))
    out.write(dumps(summary) + "\n")
    return EXIT_OK


# -- parser -----------------------------------------------------------------

def _dictionary_flags(p):
    p.add_argument("--lexicon", help="SentiWordNet-format lexicon (.txt or .gz); "
                   "defaults to the bundled SentiWordNet 3.0")
    p.add_argument("--intensifiers", help="CSV of word,multiplier (default: bundled list)")
    p.add_argument("--negations", help="one negation word per line (default: bundled list)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lexsent", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a corpus, JSON Lines to stdout")
    p.add_argument("--corpus", required=True)
    p.add_argument("--format", choices=("jsonl", "lines"), default="jsonl")
    _dictionary_flags(p)
    p.add_argument("--stopwords", help="stopword list used for gloss overlap")
    p.add_argument("--tau-subj", type=float, default=TAU_SUBJ)
    p.add_argument("--epsilon", type=float, default=EPSILON)
    p.add_argument("--neg-window", type=int, default=NEG_WINDOW)
    p.add_argument("--aggregate", choices=STRATEGIES, default="sum")
    p.add_argument("--verbose", action="store_true", help="include per-token diagnostics")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("evaluate", help="score predictions against gold labels")
    p.add_argument("--predictions", required=True,
                   help="classify output (.jsonl) or id,level,label CSV")
    p.add_argument("--gold", required=True, help="CSV id,level,label")
    p.add_argument("--level", choices=("sentence", "feedback"), default="sentence")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("lexicon-info", help="summarize and validate a lexicon")
    p.add_argument("--lexicon")
    p.set_defaults(func=cmd_lexicon_info)
    return parser


def main(argv=None, out=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    out = out if out is not None else sys.stdout
    try:
        return args.func(args, out)
    except CliError as exc:
        log.error("%s", exc)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
