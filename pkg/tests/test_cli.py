import io
import json
import subprocess
import sys

import pytest

from lexsent.cli import dumps, main
from lexsent.scorer import Polarity

from test_evaluation import SENTENCE_COUNTS


@pytest.fixture
def mini_args(fixtures_dir):
    return ["--lexicon", str(fixtures_dir / "mini_lexicon.txt"),
            "--intensifiers", str(fixtures_dir / "mini_intensifiers.csv"),
            "--negations", str(fixtures_dir / "mini_negations.txt")]


def run(argv):
    out = io.StringIO()
    code = main(argv, out)
    return code, out.getvalue()


def write_corpus(path, records):
    path.write_text("".join(json.dumps(r) + "\n" for r in records), encoding="utf-8")
    return path


def test_classify_single_sentence(tmp_path, mini_args):
    corpus = write_corpus(tmp_path / "c.jsonl", [{"id": "a", "text": "good."}])
    code, out = run(["classify", "--corpus", str(corpus)] + mini_args)
    assert code == 0
    record = json.loads(out)
    assert record["id"] == "a" and record["polarity"] == "positive"
    assert record["sentences"][0]["polarity"] == "positive"
    assert record["sentences"][0]["raw_score"] == 0.75
    assert '"feedback_score": 0.7500' in out


def test_classify_empty_corpus_exits_2(tmp_path, mini_args):
    corpus = tmp_path / "empty.jsonl"
    corpus.write_text("", encoding="utf-8")
    assert run(["classify", "--corpus", str(corpus)] + mini_args)[0] == 2


def test_classify_missing_lexicon_exits_1(tmp_path, caplog):
    corpus = write_corpus(tmp_path / "c.jsonl", [{"id": "a", "text": "good."}])
    missing = tmp_path / "nope.txt"
    code, out = run(["classify", "--corpus", str(corpus), "--lexicon", str(missing)])
    assert code == 1 and out == ""
    assert str(missing) in caplog.text


def test_classify_bad_record_exits_1(tmp_path, mini_args, caplog):
    corpus = tmp_path / "c.jsonl"
    corpus.write_text('{"id": "a"}\n', encoding="utf-8")
    assert run(["classify", "--corpus", str(corpus)] + mini_args)[0] == 1
    assert "line 1" in caplog.text


def test_classify_duplicate_ids(tmp_path, mini_args):
    corpus = write_corpus(tmp_path / "c.jsonl", [{"id": "a", "text": "x"}, {"id": "a", "text": "y"}])
    assert run(["classify", "--corpus", str(corpus)] + mini_args)[0] == 1


def test_classify_verbose_tokens(tmp_path, mini_args):
    corpus = write_corpus(tmp_path / "c.jsonl", [{"id": "a", "text": "not very good"}])
    code, out = run(["classify", "--corpus", str(corpus), "--verbose"] + mini_args)
    tokens = json.loads(out)["sentences"][0]["tokens"]
    assert [t["pos"] for t in tokens] == ["Negation", "Intensifier", "Adjective"]
    assert tokens[2]["synset"] == "a:00000001"
    assert tokens[2]["signed_score"] == -0.75 and tokens[2]["multiplier"] == 1.5


def test_classify_lines_format_and_majority(tmp_path, mini_args):
    corpus = tmp_path / "c.txt"
    corpus.write_text("good. good. bad bad bad bad.\n\nmatch\n", encoding="utf-8")
    code, out = run(["classify", "--corpus", str(corpus), "--format", "lines",
                     "--aggregate", "majority"] + mini_args)
    records = [json.loads(line) for line in out.splitlines()]
    assert [r["id"] for r in records] == ["1", "3"]
    assert records[0]["polarity"] == "positive" and records[0]["feedback_score"] == 1.0
    assert records[1]["polarity"] == "neutral" and records[1]["objective_count"] == 1
    code, out = run(["classify", "--corpus", str(corpus), "--format", "lines"] + mini_args)
    assert json.loads(out.splitlines()[0])["polarity"] == "negative"


def test_classify_rejects_bad_config(tmp_path, mini_args):
    corpus = write_corpus(tmp_path / "c.jsonl", [{"id": "a", "text": "good"}])
    assert run(["classify", "--corpus", str(corpus), "--neg-window", "-2"] + mini_args)[0] == 1


def _gold(path, rows):
    path.write_text("id,level,label\n" + "".join(f"{i},{lvl},{lab}\n" for i, lvl, lab in rows),
                    encoding="utf-8")
    return path


def test_evaluate_round_trip_perfect(tmp_path, mini_args):
    corpus = write_corpus(tmp_path / "c.jsonl", [{"id": "a", "text": "good. bad."},
                                                 {"id": "b", "text": "match"}])
    _, out = run(["classify", "--corpus", str(corpus)] + mini_args)
    preds = tmp_path / "p.jsonl"
    preds.write_text(out, encoding="utf-8")
    gold = _gold(tmp_path / "g.csv", [("a#0", "sentence", "positive"), ("a#1", "sentence", "negative"),
                                      ("b#0", "sentence", "neutral"), ("a", "feedback", "positive"),
                                      ("b", "feedback", "neutral")])
    for level in ("sentence", "feedback"):
        code, out = run(["evaluate", "--predictions", str(preds), "--gold", str(gold),
                         "--level", level])
        report = json.loads(out)
        assert code == 0 and report["accuracy"] == 1.0 and report["warnings"] == 0


def test_evaluate_reference_counts_from_csv(tmp_path):
    labels = [p.value for p in (Polarity.POSITIVE, Polarity.NEGATIVE, Polarity.NEUTRAL)]
    pred_rows, gold_rows, n = [], [], 0
    for i, sys_label in enumerate(labels):
        for j, gold_label in enumerate(labels):
            for _ in range(SENTENCE_COUNTS[i][j]):
                pred_rows.append((f"s{n}", "sentence", sys_label))
                gold_rows.append((f"s{n}", "sentence", gold_label))
                n += 1
    code, out = run(["evaluate", "--predictions", str(_gold(tmp_path / "p.csv", pred_rows)),
                     "--gold", str(_gold(tmp_path / "g.csv", gold_rows))])
    report = json.loads(out)
    assert code == 0 and report["accuracy_display"] == "0.83"
    assert report["matrix"]["counts"] == [list(r) for r in SENTENCE_COUNTS]


def test_evaluate_disjoint_ids_exits_2(tmp_path):
    preds = _gold(tmp_path / "p.csv", [("x", "sentence", "positive")])
    gold = _gold(tmp_path / "g.csv", [("y", "sentence", "positive")])
    assert run(["evaluate", "--predictions", str(preds), "--gold", str(gold)])[0] == 2


def test_evaluate_reports_unmatched(tmp_path, caplog):
    preds = _gold(tmp_path / "p.csv", [("x", "sentence", "positive"), ("z", "sentence", "neutral")])
    gold = _gold(tmp_path / "g.csv", [("x", "sentence", "positive"), ("y", "sentence", "negative")])
    code, out = run(["evaluate", "--predictions", str(preds), "--gold", str(gold)])
    report = json.loads(out)
    assert code == 0 and report["matched"] == 1 and report["warnings"] == 2
    assert report["unmatched"] == {"predictions_only": ["z"], "gold_only": ["y"]}
    assert "unmatched" in caplog.text


def test_evaluate_bad_label(tmp_path):
    preds = _gold(tmp_path / "p.csv", [("x", "sentence", "great")])
    gold = _gold(tmp_path / "g.csv", [("x", "sentence", "positive")])
    assert run(["evaluate", "--predictions", str(preds), "--gold", str(gold)])[0] == 1


def test_lexicon_info_tiny(fixtures_dir):
    code, out = run(["lexicon-info", "--lexicon", str(fixtures_dir / "tiny_lexicon.txt")])
    info = json.loads(out)
    assert code == 0 and info["synsets"] == 2
    assert info["per_pos"] == {"a": 1, "r": 0, "v": 1, "n": 0}
    assert info["score_sum_check"]["passed"]
    assert sum(info["histogram"]["pos_score"]) == 2


def test_lexicon_info_corrupt(tmp_path, caplog):
    bad = tmp_path / "bad.txt"
    bad.write_text("a\t1\t0.9\t0.9\tx#1\tgloss\n", encoding="utf-8")
    assert run(["lexicon-info", "--lexicon", str(bad)])[0] == 1
    assert "line 1" in caplog.text


def test_dumps_fixed_precision():
    assert dumps({"a": 0.5, "b": -0.0, "c": [1, True, None], "d": 1 / 3}) == \
        '{"a": 0.5000, "b": 0.0000, "c": [1, true, null], "d": 0.3333}'
    with pytest.raises(ValueError):
        dumps(float("nan"))


def test_module_entry_point(fixtures_dir):
    proc = subprocess.run([sys.executable, "-m", "lexsent", "lexicon-info", "--lexicon",
                           str(fixtures_dir / "tiny_lexicon.txt")],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["synsets"] == 2
