import pytest

from lexsent.knowledge_base import SynsetKey, load_knowledge_base, lookup_senses
from lexsent.pipeline import prepare_tokens
from lexsent.preprocess import Token
from lexsent.tagger import CoarsePos, TaggedToken, majority_code, tag_tokens
from lexsent.wsd import disambiguate, disambiguate_sentence, gloss_overlap


def toks(*lemmas):
    return [Token(w, w, i) for i, w in enumerate(lemmas)]


@pytest.mark.parametrize("lemma, expected", [
    ("not", CoarsePos.NEGATION),
    ("very", CoarsePos.INTENSIFIER),
    ("good", CoarsePos.ADJECTIVE),
    ("match", CoarsePos.NOUN),
    ("play", CoarsePos.VERB),
    ("qwkly", CoarsePos.ADVERB),
    ("glorious", CoarsePos.ADJECTIVE),
    ("hopeful", CoarsePos.ADJECTIVE),
    ("massive", CoarsePos.ADJECTIVE),
    ("bearable", CoarsePos.ADJECTIVE),
    ("the", CoarsePos.OTHER),
])
def test_tag_rules(mini_kb, lemma, expected):
    assert tag_tokens(toks(lemma), mini_kb)[0].pos is expected


def test_majority_pos_and_tie_priority():
    kb = load_knowledge_base([
        "n\t1\t0\t0\tfine#1\tg", "n\t2\t0\t0\tfine#2\tg", "a\t3\t0\t0\tfine#1\tg",
        "v\t4\t0\t0\ttie#1\tg", "n\t5\t0\t0\ttie#1\tg",
        "r\t6\t0\t0\tfast#1\tg", "a\t7\t0\t0\tfast#1\tg",
    ])
    assert majority_code(kb, "fine") == "n"
    assert majority_code(kb, "tie") == "v"
    assert majority_code(kb, "fast") == "a"
    assert majority_code(kb, "missing") is None


def test_dictionary_rules_win_over_lexicon():
    kb = load_knowledge_base(["r\t1\t0\t0.625\tnot#1\tnegation", "r\t2\t0.25\t0\tvery#1\tg"],
                             ["very,1.5"], ["not"])
    assert [t.pos for t in tag_tokens(toks("not", "very"), kb)] == [
        CoarsePos.NEGATION, CoarsePos.INTENSIFIER]


def test_tagging_preserves_length_order_and_is_deterministic(mini_kb):
    tokens = toks("not", "very", "good", "match", "zzz", "never")
    first = tag_tokens(tokens, mini_kb)
    assert [t.token for t in first] == tokens
    assert first == tag_tokens(tokens, mini_kb)
    for t in first:
        if t.pos is CoarsePos.NEGATION:
            assert t.lemma in mini_kb.negations
        if t.pos is CoarsePos.INTENSIFIER:
            assert t.lemma in mini_kb.intensifiers


def test_tagged_token_rejects_cross_pos_synset(mini_kb):
    good = mini_kb.synsets[SynsetKey("a", 1)]
    with pytest.raises(ValueError):
        TaggedToken(Token("good", "good", 0), CoarsePos.NOUN, good)
    with pytest.raises(ValueError):
        TaggedToken(Token("good", "good", 0), CoarsePos.OTHER, good)


@pytest.mark.parametrize("gloss, context, expected", [
    ("morally admirable", {"morally", "team"}, 1),
    ("", {"morally"}, 0),
    ("the of and", {"the", "of", "and"}, 0),
    ("water water river", {"water", "river"}, 2),
])
def test_gloss_overlap(gloss, context, expected):
    assert gloss_overlap(gloss, context) == expected


def test_gloss_overlap_lemmatizes_with_kb(wsd_kb):
    assert gloss_overlap("many rivers and banks", {"river", "bank"}) == 0
    assert gloss_overlap("many rivers and banks", {"river", "bank"}, wsd_kb) == 2


def _sentence(kb, *words):
    return tag_tokens(prepare_tokens(" ".join(words), kb), kb)


def test_disambiguate_single_candidate(mini_kb):
    tagged = _sentence(mini_kb, "good", "match")
    assert disambiguate(tagged[0], tagged, mini_kb).key == SynsetKey("a", 1)


def test_disambiguate_picks_max_overlap(wsd_kb):
    tagged = _sentence(wsd_kb, "money", "bank")
    assert disambiguate(tagged[1], tagged, wsd_kb).key == SynsetKey("n", 11)
    tagged = _sentence(wsd_kb, "river", "bank")
    assert disambiguate(tagged[1], tagged, wsd_kb).key == SynsetKey("n", 10)


def test_disambiguate_two_vs_zero_overlap(wsd_kb):
    # bank#2 gloss shares "money" and "deposit"; bank#1 and bank#3 share nothing
    tagged = _sentence(wsd_kb, "bank", "money", "deposits")
    context = {"money", "deposit"}
    overlaps = [gloss_overlap(s.gloss, context, wsd_kb) for s in lookup_senses(wsd_kb, "bank", "n")]
    assert overlaps == [0, 2, 0]
    assert disambiguate(tagged[0], tagged, wsd_kb).key == SynsetKey("n", 11)


def test_disambiguate_one_vs_zero_overlap(wsd_kb):
    tagged = _sentence(wsd_kb, "cold", "money")
    assert disambiguate(tagged[0], tagged, wsd_kb).key == SynsetKey("a", 19)


def test_disambiguate_zero_overlap_tie_goes_to_rank_one(wsd_kb):
    tagged = _sentence(wsd_kb, "bank", "depository")
    # depository shares no gloss lemma with any bank sense
    assert disambiguate(tagged[0], tagged, wsd_kb).key == SynsetKey("n", 10)


def test_disambiguate_equal_positive_overlap_tie_goes_to_lower_rank(wsd_kb):
    # both calm glosses mention wind
    tagged = _sentence(wsd_kb, "calm", "wind")
    assert [gloss_overlap(s.gloss, {"wind"}, wsd_kb)
            for s in lookup_senses(wsd_kb, "calm", "a")] == [1, 1]
    assert disambiguate(tagged[0], tagged, wsd_kb).key == SynsetKey("a", 16)


def test_disambiguate_absent_and_closed_class(mini_kb, wsd_kb):
    tagged = _sentence(mini_kb, "not", "qwkly")
    assert disambiguate(tagged[0], tagged, mini_kb) is None
    assert disambiguate(tagged[1], tagged, mini_kb) is None


def test_context_is_rest_of_sentence(wsd_kb):
    tagged = _sentence(wsd_kb, "snow", "bank")
    assert disambiguate(tagged[1], tagged, wsd_kb).key == SynsetKey("n", 12)
    alone = _sentence(wsd_kb, "bank")
    assert disambiguate(alone[0], alone, wsd_kb).key == SynsetKey("n", 10)


@pytest.mark.parametrize("kb_name", ["mini_kb", "wsd_kb", "tiny_kb"])
def test_empty_context_gives_rank_one_sense(request, kb_name):
    kb = request.getfixturevalue(kb_name)
    for (lemma, pos) in kb.sense_index:
        token = TaggedToken(Token(lemma, lemma, 0), {"a": CoarsePos.ADJECTIVE,
                            "r": CoarsePos.ADVERB, "v": CoarsePos.VERB,
                            "n": CoarsePos.NOUN}[pos])
        chosen = disambiguate(token, [token], kb)
        assert chosen == lookup_senses(kb, lemma, pos)[0]
        assert chosen.key.pos == pos


def test_disambiguate_sentence_only_fills_open_class(mini_kb):
    tagged = disambiguate_sentence(_sentence(mini_kb, "not", "very", "good", "zzz"), mini_kb)
    assert [t.synset is not None for t in tagged] == [False, False, True, False]
