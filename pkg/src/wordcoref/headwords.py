"""Head-word selection for mention spans.

Two rules are provided.  The baseline rule picks the token whose
dependency head lies outside the span, falling back to the right-most
token when that pick is not unique.  The conjunction-aware rule
additionally promotes a coordinating conjunction to head-word when it
sits within one dependency step of the baseline head, which gives
conjoined mentions like "Tom and Mary" a head-word that cannot collide
with the heads of the nested mentions "Tom" and "Mary".
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .documents import Document, MentionSpan

DEFAULT_CC_TAGS = frozenset({"CC"})

# Comma/hyphen coordination ("Tom , Mary") is reported, never applied:
# detecting it reliably from POS and heads alone is not possible.
PUNCT_COORD_WORDS = frozenset({",", "-"})


class HeadwordRule(str, Enum):
    """Which selector to run over a corpus."""

    BASELINE = "baseline"
    CAW = "caw"


class AppliedRule(str, Enum):
    """What actually chose the head of one span."""

    BASELINE = "baseline"
    CAW_CONJUNCTION = "caw-conjunction"
    CAW_FALLBACK_BASELINE = "caw-fallback-baseline"


class FallbackReason(str, Enum):
    NO_EXTERNAL_DEPENDENT = "no-external-dependent"
    MULTIPLE_EXTERNAL_DEPENDENTS = "multiple-external-dependents"


@dataclass(frozen=True)
class HeadwordAssignment:
    span: MentionSpan
    head_index: int
    rule: AppliedRule
    fallback_reason: FallbackReason | None = None


@dataclass(frozen=True)
class ConjunctionReport:
    """Coordination structure of one span relative to its baseline head."""

    span: MentionSpan
    cc_positions: tuple[int, ...]
    depths: tuple[int | None, ...]   # None: upward chain exits the span
    is_conjoined: bool
    is_sequential: bool
    is_punctuation_coordination: bool


def baseline_headword(doc: Document, span: MentionSpan) -> HeadwordAssignment:
    """Token depending on a word outside the span; right-most on ties."""
    external = [
        t.index for t in doc.tokens[span.start:span.end]
        if t.head is None or t.head not in span
    ]
    if len(external) == 1:
        return HeadwordAssignment(span, external[0], AppliedRule.BASELINE)
    reason = (FallbackReason.NO_EXTERNAL_DEPENDENT if not external
              else FallbackReason.MULTIPLE_EXTERNAL_DEPENDENTS)
    return HeadwordAssignment(span, span.end - 1, AppliedRule.BASELINE,
                              fallback_reason=reason)


def _depth_to(doc: Document, span: MentionSpan, start: int,
              target: int) -> int | None:
    """Head-link steps from `start` up to `target`, staying inside the span."""
    cur = start
    depth = 0
    while cur != target:
        head = doc.tokens[cur].head
        if head is None or head not in span:
            return None
        cur = head
        depth += 1
        if depth > span.width:   # cycle guard for unvalidated input
            return None
    return depth


def analyze_conjunction(doc: Document, span: MentionSpan,
                        cc_tags: frozenset[str] = DEFAULT_CC_TAGS,
                        ) -> ConjunctionReport:
    """Locate coordinating conjunctions and their depth below the span head."""
    base = baseline_headword(doc, span).head_index
    cc_positions = tuple(
        t.index for t in doc.tokens[span.start:span.end] if t.pos in cc_tags)
    depths = tuple(
        _depth_to(doc, span, cc, base) for cc in cc_positions)
    qualifying = sum(1 for d in depths if d is not None and d < 2)
    is_conjoined = qualifying >= 1
    is_punct = False
    if not is_conjoined:
        for t in doc.tokens[span.start:span.end]:
            if (t.word in PUNCT_COORD_WORDS and t.head == base
                    and span.start < t.index < span.end - 1):
                is_punct = True
                break
    return ConjunctionReport(
        span=span,
        cc_positions=cc_positions,
        depths=depths,
        is_conjoined=is_conjoined,
        is_sequential=qualifying >= 2,
        is_punctuation_coordination=is_punct,
    )


def caw_headword(doc: Document, span: MentionSpan,
                 cc_tags: frozenset[str] = DEFAULT_CC_TAGS,
                 ) -> HeadwordAssignment:
    """Conjunction-aware head: a qualifying conjunction, else the baseline."""
    report = analyze_conjunction(doc, span, cc_tags)
    if report.is_conjoined:
        # Minimal depth wins; left-most breaks depth ties.
        best = min(
            (depth, cc)
            for cc, depth in zip(report.cc_positions, report.depths)
            if depth is not None and depth < 2)
        return HeadwordAssignment(span, best[1], AppliedRule.CAW_CONJUNCTION)
    base = baseline_headword(doc, span)
    return HeadwordAssignment(span, base.head_index,
                              AppliedRule.CAW_FALLBACK_BASELINE,
                              fallback_reason=base.fallback_reason)


def select_headword(doc: Document, span: MentionSpan, rule: HeadwordRule,
                    cc_tags: frozenset[str] = DEFAULT_CC_TAGS,
                    ) -> HeadwordAssignment:
    if rule is HeadwordRule.BASELINE:
        return baseline_headword(doc, span)
    return caw_headword(doc, span, cc_tags)
