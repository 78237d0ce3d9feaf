"""Decompose span-level coreference annotation into word-level clusters.

Each gold span is reduced to one head-word under the chosen rule.  The
word clusters mirror the gold cluster structure; the word-to-span map
inverts the reduction.  When spans from different clusters share a
head-word no unique inversion exists: the narrower span keeps the map
entry and the conflict is recorded instead of silently dropped.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .documents import Document, MentionSpan
from .errors import ValidationError
from .headwords import DEFAULT_CC_TAGS, HeadwordRule, analyze_conjunction, select_headword


@dataclass(frozen=True)
class WordLevelDoc:
    doc_id: str
    part: int
    word_clusters: tuple[tuple[int, ...], ...]
    word_to_span: dict[int, MentionSpan]
    rule_used: HeadwordRule


@dataclass(frozen=True)
class Collision:
    """One head-word claimed by spans from at least two distinct clusters."""

    doc_id: str
    part: int
    token: int
    entries: tuple[tuple[int, MentionSpan], ...]   # (cluster id, span)


@dataclass
class ConflictReport:
    collisions: list[Collision] = field(default_factory=list)
    conjoined_span_count: int = 0
    total_span_count: int = 0
    sequential_count: int = 0
    punctuation_coordination_count: int = 0
    document_count: int = 0

    @property
    def conjoined_ratio(self) -> float | None:
        if self.total_span_count == 0:
            return None
        return self.conjoined_span_count / self.total_span_count

    def merge(self, other: "ConflictReport") -> None:
        self.collisions.extend(other.collisions)
        self.conjoined_span_count += other.conjoined_span_count
        self.total_span_count += other.total_span_count
        self.sequential_count += other.sequential_count
        self.punctuation_coordination_count += \
            other.punctuation_coordination_count
        self.document_count += other.document_count


def _span_order(span: MentionSpan) -> tuple[int, int, int]:
    return (span.width, span.start, span.end)


def build_wl(doc: Document, rule: HeadwordRule,
             cc_tags: frozenset[str] = DEFAULT_CC_TAGS,
             ) -> tuple[WordLevelDoc, ConflictReport]:
    """Reduce gold clusters to head-word clusters and report conflicts."""
    report = ConflictReport(document_count=1)
    claims: dict[int, list[tuple[int, MentionSpan]]] = {}
    word_clusters = []
    for cid, cluster in enumerate(doc.clusters):
        heads = []
        for span in cluster:
            head = select_headword(doc, span, rule, cc_tags).head_index
            claims.setdefault(head, []).append((cid, span))
            if head not in heads:   # same-cluster duplicates collapse
                heads.append(head)
            conj = analyze_conjunction(doc, span, cc_tags)
            report.total_span_count += 1
            report.conjoined_span_count += conj.is_conjoined
            report.sequential_count += conj.is_sequential
            report.punctuation_coordination_count += \
                conj.is_punctuation_coordination
        word_clusters.append(tuple(sorted(heads)))

    word_to_span = {}
    for head, entries in claims.items():
        word_to_span[head] = min((s for _, s in entries), key=_span_order)
        if len({cid for cid, _ in entries}) >= 2:
            report.collisions.append(Collision(
                doc_id=doc.doc_id, part=doc.part, token=head,
                entries=tuple(sorted(entries,
                                     key=lambda e: (e[0], _span_order(e[1])))),
            ))
    report.collisions.sort(key=lambda c: c.token)

    wl = WordLevelDoc(
        doc_id=doc.doc_id,
        part=doc.part,
        word_clusters=tuple(word_clusters),
        word_to_span=word_to_span,
        rule_used=rule,
    )
    return wl, report


def corpus_stats(docs: Iterable[Document],
                 rule: HeadwordRule = HeadwordRule.BASELINE,
                 cc_tags: frozenset[str] = DEFAULT_CC_TAGS) -> ConflictReport:
    """Sum per-document conflict reports over a corpus."""
    total = ConflictReport()
    for doc in docs:
        _, report = build_wl(doc, rule, cc_tags)
        total.merge(report)
    return total


def reconstruct_spans(wl: WordLevelDoc,
                      coreferent_words: Sequence[Sequence[int]],
                      ) -> list[list[MentionSpan]]:
    """Map word clusters back to span clusters through word_to_span."""
    out = []
    for cluster in coreferent_words:
        spans: list[MentionSpan] = []
        for word in cluster:
            if word not in wl.word_to_span:
                raise ValidationError(
                    f"{wl.doc_id}/part {wl.part}: token {word} has no "
                    f"span mapping")
            span = wl.word_to_span[word]
            if span not in spans:
                spans.append(span)
        out.append(spans)
    return out
