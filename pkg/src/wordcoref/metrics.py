"""Coreference evaluation: MUC, B-cubed, CEAF (phi-4 entity similarity).

Matches the reference scorer's semantics: mentions align by exact
identity, unaligned mentions earn zero credit, and corpus scores
accumulate numerators and denominators across documents before the
final ratio.  Cluster alignment for CEAF is exactly optimal (solved as
a linear assignment problem, not greedily).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import ValidationError

Clusters = list[frozenset[Hashable]]


@dataclass(frozen=True)
class ScoreTriple:
    precision: float
    recall: float
    f1: float

    def as_percent(self) -> tuple[str, str, str]:
        return (f"{self.precision * 100:.2f}", f"{self.recall * 100:.2f}",
                f"{self.f1 * 100:.2f}")


@dataclass(frozen=True)
class CorefScore:
    muc: ScoreTriple
    b3: ScoreTriple
    ceaf_phi4: ScoreTriple
    avg_f1: float


def _as_clusters(partition) -> Clusters:
    clusters = [frozenset(c) for c in partition]
    seen: set[Hashable] = set()
    for c in clusters:
        if not c:
            raise ValidationError("partition contains an empty cluster")
        if seen & c:
            raise ValidationError("partition clusters are not disjoint")
        seen |= c
    return clusters


def _mention_map(clusters: Clusters) -> dict[Hashable, int]:
    return {m: ci for ci, c in enumerate(clusters) for m in c}


def _ratio(num: float, den: float) -> float:
    return num / den if den > 0 else 0.0


def _f1(p: float, r: float) -> float:
    return 2 * p * r / (p + r) if p + r > 0 else 0.0


def _triple(p_num, p_den, r_num, r_den) -> ScoreTriple:
    p, r = _ratio(p_num, p_den), _ratio(r_num, r_den)
    return ScoreTriple(precision=p, recall=r, f1=_f1(p, r))


def muc_counts(key: Clusters, response: Clusters) -> tuple[float, float]:
    """Recall-side MUC numerator/denominator.

    Each key cluster contributes |K| - p(K), where p(K) counts the
    response blocks K splits into; response-less mentions are blocks of
    their own.
    """
    response_of = _mention_map(response)
    num = den = 0
    for cluster in key:
        blocks = {response_of[m] for m in cluster if m in response_of}
        orphans = sum(1 for m in cluster if m not in response_of)
        num += len(cluster) - (len(blocks) + orphans)
        den += len(cluster) - 1
    return num, den


def b_cubed_counts(key: Clusters, response: Clusters) -> tuple[float, float]:
    """Recall-side B-cubed numerator (sum over key mentions) and count."""
    response_of = _mention_map(response)
    num = 0.0
    total = 0
    for cluster in key:
        total += len(cluster)
        for m in cluster:
            if m not in response_of:
                continue
            overlap = len(cluster & response[response_of[m]])
            num += overlap / len(cluster)
    return num, total


def phi4(key_cluster: frozenset, response_cluster: frozenset) -> float:
    return 2 * len(key_cluster & response_cluster) / (
        len(key_cluster) + len(response_cluster))


def ceaf_phi4_counts(key: Clusters, response: Clusters,
                     ) -> tuple[float, int, int]:
    """Optimal one-to-one cluster alignment value and cluster counts."""
    if not key or not response:
        return 0.0, len(key), len(response)
    sim = np.zeros((len(key), len(response)))
    for i, kc in enumerate(key):
        for j, rc in enumerate(response):
            sim[i, j] = phi4(kc, rc)
    rows, cols = linear_sum_assignment(sim, maximize=True)
    return float(sim[rows, cols].sum()), len(key), len(response)


def muc(key, response) -> ScoreTriple:
    key, response = _as_clusters(key), _as_clusters(response)
    r_num, r_den = muc_counts(key, response)
    p_num, p_den = muc_counts(response, key)
    return _triple(p_num, p_den, r_num, r_den)


def b_cubed(key, response) -> ScoreTriple:
    key, response = _as_clusters(key), _as_clusters(response)
    r_num, r_den = b_cubed_counts(key, response)
    p_num, p_den = b_cubed_counts(response, key)
    return _triple(p_num, p_den, r_num, r_den)


def ceaf_phi4(key, response) -> ScoreTriple:
    key, response = _as_clusters(key), _as_clusters(response)
    phi_sum, n_key, n_response = ceaf_phi4_counts(key, response)
    return _triple(phi_sum, n_response, phi_sum, n_key)


def conll_average(key, response) -> CorefScore:
    """All three metrics plus their F1 mean (the headline number)."""
    scorer = CorpusScorer()
    scorer.update(key, response)
    return scorer.score()


class CorpusScorer:
    """Accumulates counts over documents; call score() for the ratios."""

    def __init__(self) -> None:
        self._muc = [0.0, 0.0, 0.0, 0.0]         # p_num, p_den, r_num, r_den
        self._b3 = [0.0, 0.0, 0.0, 0.0]
        self._ceaf = [0.0, 0, 0]                 # phi_sum, n_key, n_response

    def update(self, key, response) -> None:
        key, response = _as_clusters(key), _as_clusters(response)
        for counts, fn in ((self._muc, muc_counts),
                           (self._b3, b_cubed_counts)):
            p_num, p_den = fn(response, key)
            r_num, r_den = fn(key, response)
            counts[0] += p_num
            counts[1] += p_den
            counts[2] += r_num
            counts[3] += r_den
        phi_sum, n_key, n_response = ceaf_phi4_counts(key, response)
        self._ceaf[0] += phi_sum
        self._ceaf[1] += n_key
        self._ceaf[2] += n_response

    def score(self) -> CorefScore:
        muc_t = _triple(*self._muc)
        b3_t = _triple(*self._b3)
        phi_sum, n_key, n_response = self._ceaf
        ceaf_t = _triple(phi_sum, n_response, phi_sum, n_key)
        avg = (muc_t.f1 + b3_t.f1 + ceaf_t.f1) / 3
        return CorefScore(muc=muc_t, b3=b3_t, ceaf_phi4=ceaf_t, avg_f1=avg)
