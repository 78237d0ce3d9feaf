import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import make_xccy, random_disjoint_span_document
from wordcoref.documents import Document, MentionSpan
from wordcoref.errors import ValidationError
from wordcoref.fixtures import demo_docs, playing_siblings_doc
from wordcoref.headwords import HeadwordRule
from wordcoref.wordlevel import build_wl, corpus_stats, reconstruct_spans


def cluster_sets(clusters):
    return {frozenset(c) for c in clusters}


def test_playing_siblings_baseline_collision_at_tom():
    wl, report = build_wl(playing_siblings_doc(), HeadwordRule.BASELINE)
    assert len(report.collisions) == 1
    collision = report.collisions[0]
    assert collision.token == 0
    assert collision.entries == ((0, MentionSpan(0, 1)),
                                 (1, MentionSpan(0, 3)))
    # the narrower span keeps the word-to-span entry
    assert wl.word_to_span[0] == MentionSpan(0, 1)


def test_playing_siblings_caw_collision_free_distinct_heads():
    wl, report = build_wl(playing_siblings_doc(), HeadwordRule.CAW)
    assert report.collisions == []
    assert wl.word_clusters == ((0, 6), (1, 12), (2,))
    heads = {wl.word_to_span[h]: h for h in (0, 1, 2)}
    assert heads == {MentionSpan(0, 1): 0, MentionSpan(0, 3): 1,
                     MentionSpan(2, 3): 2}


def test_document_without_clusters_yields_empty_decomposition():
    doc = Document("t", 0, playing_siblings_doc().tokens, ())
    wl, report = build_wl(doc, HeadwordRule.BASELINE)
    assert wl.word_clusters == ()
    assert wl.word_to_span == {}
    assert report.total_span_count == 0
    assert report.collisions == []


def test_same_cluster_shared_head_collapses_silently():
    doc = Document("t", 0, playing_siblings_doc().tokens,
                   ((MentionSpan(0, 1), MentionSpan(0, 3)),))
    wl, report = build_wl(doc, HeadwordRule.BASELINE)
    assert wl.word_clusters == ((0,),)
    assert report.collisions == []
    assert wl.word_to_span[0] == MentionSpan(0, 1)


def test_conjunction_statistics_count_all_gold_spans():
    _, report = build_wl(playing_siblings_doc(), HeadwordRule.BASELINE)
    assert report.total_span_count == 5
    assert report.conjoined_span_count == 1    # only "Tom and Mary"
    assert report.sequential_count == 0
    assert report.punctuation_coordination_count == 0


def test_corpus_stats_hand_count_over_demo_corpus():
    report = corpus_stats(demo_docs())
    assert report.document_count == 3
    assert report.total_span_count == 8
    assert report.conjoined_span_count == 3
    assert report.conjoined_ratio == pytest.approx(3 / 8)
    assert report.sequential_count == 0
    assert report.punctuation_coordination_count == 0


def test_empty_corpus_has_undefined_ratio():
    report = corpus_stats([])
    assert report.total_span_count == 0
    assert report.conjoined_ratio is None


def test_reconstruct_playing_siblings_caw_clusters():
    wl, _ = build_wl(playing_siblings_doc(), HeadwordRule.CAW)
    spans = reconstruct_spans(wl, [(0, 6), (1, 12)])
    assert spans == [[MentionSpan(0, 1), MentionSpan(6, 7)],
                     [MentionSpan(0, 3), MentionSpan(12, 13)]]


def test_reconstruct_empty_clusters():
    wl, _ = build_wl(playing_siblings_doc(), HeadwordRule.CAW)
    assert reconstruct_spans(wl, []) == []


def test_reconstruct_unknown_token_names_index():
    wl, _ = build_wl(playing_siblings_doc(), HeadwordRule.CAW)
    with pytest.raises(ValidationError, match="token 9"):
        reconstruct_spans(wl, [(9,)])


@settings(max_examples=200)
@given(st.integers(0, 2**32 - 1),
       st.sampled_from([HeadwordRule.BASELINE, HeadwordRule.CAW]))
def test_collision_free_round_trip(seed, rule):
    doc = random_disjoint_span_document(random.Random(seed))
    wl, report = build_wl(doc, rule)
    assert report.collisions == []
    assert len(wl.word_clusters) == len(doc.clusters)
    rebuilt = reconstruct_spans(wl, wl.word_clusters)
    assert cluster_sets(rebuilt) == cluster_sets(doc.clusters)


def test_xccy_family_baseline_collides_caw_does_not():
    rng = random.Random(99)
    for _ in range(200):
        doc, x, xccy, y = make_xccy(rng)
        nested = [[x], [xccy]]
        if rng.random() < 0.5:
            nested.append([y])
        doc = Document(doc.doc_id, doc.part, doc.tokens,
                       tuple(tuple(c) for c in nested))
        _, base_report = build_wl(doc, HeadwordRule.BASELINE)
        _, caw_report = build_wl(doc, HeadwordRule.CAW)
        assert len(base_report.collisions) >= 1
        assert caw_report.collisions == []


def test_cluster_count_never_grows():
    rng = random.Random(3)
    for _ in range(100):
        doc = random_disjoint_span_document(rng)
        for rule in HeadwordRule:
            wl, _ = build_wl(doc, rule)
            assert len(wl.word_clusters) <= len(doc.clusters)
