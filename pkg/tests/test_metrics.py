import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_partition
from wordcoref.errors import ValidationError
from wordcoref.metrics import (CorpusScorer, ScoreTriple, b_cubed, ceaf_phi4,
                               conll_average, muc, phi4)


# --- independent oracles -------------------------------------------------

def prf(p_num, p_den, r_num, r_den):
    p = p_num / p_den if p_den else 0.0
    r = r_num / r_den if r_den else 0.0
    f1 = 2 * p * r / (p + r) if p + r else 0.0
    return p, r, f1


def muc_side_oracle(key, response):
    """Literal set partitioning: split each key cluster by the response."""
    num = den = 0
    for kc in key:
        remaining = set(kc)
        blocks = []
        for rc in response:
            inter = remaining & rc
            if inter:
                blocks.append(inter)
                remaining -= inter
        blocks.extend({m} for m in remaining)
        num += len(kc) - len(blocks)
        den += len(kc) - 1
    return num, den


def b3_side_oracle(key, response):
    """Per-mention pair counting instead of intersection sizes."""
    cluster_of = {}
    for ci, rc in enumerate(response):
        for m in rc:
            cluster_of[m] = ci
    num = 0.0
    den = 0
    for kc in key:
        for m in kc:
            den += 1
            if m in cluster_of:
                agree = sum(1 for other in kc
                            if cluster_of.get(other) == cluster_of[m])
                num += agree / len(kc)
    return num, den


def ceaf_oracle(key, response):
    """Exhaustive alignment over all injective cluster mappings."""
    if not key or not response:
        return 0.0
    small, large = (key, response) if len(key) <= len(response) \
        else (response, key)
    best = 0.0
    for perm in itertools.permutations(range(len(large)), len(small)):
        best = max(best, sum(phi4(small[i], large[perm[i]])
                             for i in range(len(small))))
    return best


def muc_oracle(key, response):
    return prf(*muc_side_oracle(response, key), *muc_side_oracle(key, response))


def b3_oracle(key, response):
    return prf(*b3_side_oracle(response, key), *b3_side_oracle(key, response))


# --- frozen hand examples -------------------------------------------------

def test_muc_perfect_response():
    key = [{"a", "b"}, {"c", "d"}]
    assert muc(key, key) == ScoreTriple(1.0, 1.0, 1.0)


def test_muc_split_cluster():
    key = [{"a", "b", "c"}]
    response = [{"a", "b"}, {"c"}]
    triple = muc(key, response)
    assert triple.recall == pytest.approx(0.5)     # (3 - 2) / (3 - 1)
    assert triple.precision == pytest.approx(1.0)
    assert triple.f1 == pytest.approx(2 / 3)


def test_muc_empty_response():
    triple = muc([{"a", "b"}], [])
    assert triple == ScoreTriple(0.0, 0.0, 0.0)


def test_muc_singletons_contribute_nothing():
    triple = muc([{"a"}, {"b"}], [{"a"}, {"b"}])
    assert triple == ScoreTriple(0.0, 0.0, 0.0)


def test_b3_identical():
    key = [{"a", "b"}, {"c"}]
    assert b_cubed(key, key) == ScoreTriple(1.0, 1.0, 1.0)


def test_b3_merged_response():
    key = [{"a", "b"}, {"c", "d"}]
    response = [{"a", "b", "c", "d"}]
    triple = b_cubed(key, response)
    assert triple.recall == pytest.approx(1.0)
    assert triple.precision == pytest.approx(0.5)  # (4 * 2/4) / 4


def test_b3_disjoint_mention_sets():
    triple = b_cubed([{"a", "b"}], [{"x", "y"}])
    assert triple == ScoreTriple(0.0, 0.0, 0.0)


def test_ceaf_identical():
    key = [{"a", "b"}, {"c"}]
    assert ceaf_phi4(key, key) == ScoreTriple(1.0, 1.0, 1.0)


def test_ceaf_hand_alignment():
    key = [{"a", "b"}, {"c"}]
    response = [{"a", "b", "c"}]
    triple = ceaf_phi4(key, response)
    assert triple.recall == pytest.approx(0.4)     # (4/5) / 2
    assert triple.precision == pytest.approx(0.8)  # (4/5) / 1


def test_ceaf_empty_side():
    triple = ceaf_phi4([], [{"a"}])
    assert triple.recall == 0.0
    assert triple.precision == 0.0


def test_average_is_mean_of_f1s():
    key = [{"a", "b", "c"}, {"d", "e"}]
    response = [{"a", "b"}, {"c", "d"}, {"e", "f"}]
    score = conll_average(key, response)
    assert score.avg_f1 == pytest.approx(
        (score.muc.f1 + score.b3.f1 + score.ceaf_phi4.f1) / 3)


def test_average_arithmetic_of_reported_row():
    # 86.6 / 77.5 / 80.6 averages to 81.6 at one decimal.
    avg = (0.866 + 0.775 + 0.806) / 3
    assert avg == pytest.approx(0.8156667, abs=5e-7)
    assert f"{avg * 100:.1f}" == "81.6"


def test_perfect_response_scores_hundred_everywhere():
    key = [{"a", "b"}, {"c", "d", "e"}]
    score = conll_average(key, key)
    for triple in (score.muc, score.b3, score.ceaf_phi4):
        assert triple.as_percent() == ("100.00", "100.00", "100.00")
    assert score.avg_f1 == pytest.approx(1.0)


def test_non_disjoint_partition_rejected():
    with pytest.raises(ValidationError, match="disjoint"):
        muc([{"a", "b"}, {"b", "c"}], [{"a"}])
    with pytest.raises(ValidationError, match="empty"):
        b_cubed([set()], [{"a"}])


def test_cluster_order_invariance():
    key = [{"a", "b"}, {"c", "d"}]
    response = [{"a", "c"}, {"b", "d"}]
    for metric in (muc, b_cubed, ceaf_phi4):
        assert metric(key, response) == metric(key[::-1], response[::-1])


def test_corpus_accumulation_differs_from_mean_of_documents():
    # Numerators/denominators add up across documents before the ratio.
    scorer = CorpusScorer()
    scorer.update([{"a", "b", "c"}], [{"a", "b"}, {"c"}])
    scorer.update([{"x", "y"}], [{"x", "y"}])
    score = scorer.score()
    assert score.muc.recall == pytest.approx((1 + 1) / (2 + 1))


# --- randomized oracle comparisons ---------------------------------------

@settings(max_examples=200)
@given(st.integers(0, 2**32 - 1))
def test_muc_and_b3_match_hand_formula(seed):
    rng = random.Random(seed)
    key = random_partition(rng)
    response = random_partition(rng)
    for triple, oracle in ((muc(key, response), muc_oracle(key, response)),
                           (b_cubed(key, response),
                            b3_oracle(key, response))):
        assert triple.precision == pytest.approx(oracle[0], abs=1e-9)
        assert triple.recall == pytest.approx(oracle[1], abs=1e-9)
        assert triple.f1 == pytest.approx(oracle[2], abs=1e-9)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_ceaf_matches_exhaustive_alignment(seed):
    rng = random.Random(seed)
    key = random_partition(rng)
    response = random_partition(rng)
    triple = ceaf_phi4(key, response)
    best = ceaf_oracle(key, response)
    assert triple.recall * max(len(key), 1) == pytest.approx(best, abs=1e-9)
    assert triple.precision * max(len(response), 1) == \
        pytest.approx(best, abs=1e-9)


@settings(max_examples=200)
@given(st.integers(0, 2**32 - 1))
def test_role_swap_duality(seed):
    rng = random.Random(seed)
    key = random_partition(rng)
    response = random_partition(rng)
    for metric in (muc, b_cubed, ceaf_phi4):
        forward = metric(key, response)
        backward = metric(response, key)
        assert forward.precision == pytest.approx(backward.recall, abs=1e-12)
        assert forward.recall == pytest.approx(backward.precision, abs=1e-12)


@settings(max_examples=200)
@given(st.integers(0, 2**32 - 1))
def test_components_bounded_and_f1_between(seed):
    rng = random.Random(seed)
    key = random_partition(rng)
    response = random_partition(rng)
    for metric in (muc, b_cubed, ceaf_phi4):
        t = metric(key, response)
        assert 0.0 <= t.precision <= 1.0
        assert 0.0 <= t.recall <= 1.0
        assert 0.0 <= t.f1 <= 1.0
        assert min(t.precision, t.recall) - 1e-12 <= t.f1 \
            <= max(t.precision, t.recall) + 1e-12


@settings(max_examples=200)
@given(st.integers(0, 2**32 - 1))
def test_relabeling_invariance(seed):
    rng = random.Random(seed)
    key = random_partition(rng)
    response = random_partition(rng)
    mentions = sorted({m for c in key + response for m in c})
    shuffled = mentions[:]
    rng.shuffle(shuffled)
    rename = dict(zip(mentions, shuffled))
    key2 = [frozenset(rename[m] for m in c) for c in key]
    response2 = [frozenset(rename[m] for m in c) for c in response]
    for metric in (muc, b_cubed, ceaf_phi4):
        assert metric(key, response) == metric(key2, response2)
