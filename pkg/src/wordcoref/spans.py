"""Span reconstruction around a coreferent head-word.

Given additive start/end boundary scores over the head's sentence, the
selected span maximizes start + end score subject to containing the
head.  Scoring is deliberately local to one head: the selector never
sees the clustering, so ambiguity between nested candidates (e.g. "Tom"
vs "Tom and Mary" around the head "Tom") is resolved by scores alone.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable

from .documents import Document, MentionSpan
from .errors import ParseError, ValidationError
from .wordlevel import WordLevelDoc


@dataclass(frozen=True)
class BoundaryScores:
    """Candidate boundary scores for one head-word.

    ``start_scores[i]`` scores span start ``sent_start + i`` for starts
    in [sent_start, head]; ``end_scores[i]`` scores exclusive span end
    ``head + 1 + i`` for ends in (head, sent_end].  ``sent_end`` is the
    exclusive bound of the head's sentence.
    """

    head: int
    sent_start: int
    sent_end: int
    start_scores: tuple[float, ...]
    end_scores: tuple[float, ...]
    doc_id: str = ""
    part: int = 0


def validate_boundaries(b: BoundaryScores) -> None:
    if not b.sent_start <= b.head < b.sent_end:
        raise ValidationError(
            f"head {b.head} outside sentence [{b.sent_start}, {b.sent_end})")
    n_starts = b.head - b.sent_start + 1
    n_ends = b.sent_end - b.head
    if len(b.start_scores) != n_starts:
        raise ValidationError(
            f"start_scores must cover [{b.sent_start}, {b.head}]: "
            f"expected {n_starts} scores, got {len(b.start_scores)}")
    if len(b.end_scores) != n_ends:
        raise ValidationError(
            f"end_scores must cover ({b.head}, {b.sent_end}]: "
            f"expected {n_ends} scores, got {len(b.end_scores)}")


def select_span(b: BoundaryScores) -> MentionSpan:
    """Maximize start + end score; ties resolve to the narrowest span.

    The boundary closest to the head wins each tied side, so uniform
    scores yield the single-token span [head, head + 1).
    """
    if b.sent_start > b.head or b.sent_end <= b.head:
        raise ValueError(
            f"empty candidate range for head {b.head} in sentence "
            f"[{b.sent_start}, {b.sent_end})")
    validate_boundaries(b)
    best_start = b.sent_start + max(
        range(len(b.start_scores)), key=lambda i: (b.start_scores[i], i))
    best_end = b.head + 1 + min(
        range(len(b.end_scores)), key=lambda i: (-b.end_scores[i], i))
    return MentionSpan(best_start, best_end)


def oracle_boundaries(doc: Document, wl: WordLevelDoc,
                      head: int) -> BoundaryScores:
    """One-hot scores at the gold boundaries of the span headed by `head`."""
    if head not in wl.word_to_span:
        raise ValidationError(
            f"{wl.doc_id}/part {wl.part}: token {head} has no span mapping")
    span = wl.word_to_span[head]
    sent_start, sent_end = doc.sentence_bounds(head)
    if not (sent_start <= span.start and span.end <= sent_end):
        raise ValidationError(
            f"gold span {span} for head {head} crosses its sentence "
            f"[{sent_start}, {sent_end})")
    starts = tuple(1.0 if sent_start + i == span.start else 0.0
                   for i in range(head - sent_start + 1))
    ends = tuple(1.0 if head + 1 + i == span.end else 0.0
                 for i in range(sent_end - head))
    return BoundaryScores(head=head, sent_start=sent_start,
                          sent_end=sent_end, start_scores=starts,
                          end_scores=ends, doc_id=doc.doc_id, part=doc.part)


def boundaries_to_json(b: BoundaryScores) -> dict:
    return {
        "doc_id": b.doc_id,
        "part": b.part,
        "head": b.head,
        "sent_start": b.sent_start,
        "sent_end": b.sent_end,
        "start_scores": list(b.start_scores),
        "end_scores": list(b.end_scores),
    }


def boundaries_from_json(obj: dict, lineno: int = 0) -> BoundaryScores:
    for key in ("doc_id", "part", "head", "sent_start", "sent_end",
                "start_scores", "end_scores"):
        if key not in obj:
            raise ParseError(f"boundary record missing field {key!r}",
                             line=lineno)
    for key in ("start_scores", "end_scores"):
        for s in obj[key]:
            if isinstance(s, bool) or not isinstance(s, (int, float)) \
                    or not math.isfinite(s):
                raise ParseError(f"non-finite value in {key}", line=lineno)
    b = BoundaryScores(
        head=obj["head"],
        sent_start=obj["sent_start"],
        sent_end=obj["sent_end"],
        start_scores=tuple(float(s) for s in obj["start_scores"]),
        end_scores=tuple(float(s) for s in obj["end_scores"]),
        doc_id=obj["doc_id"],
        part=obj["part"],
    )
    try:
        validate_boundaries(b)
    except ValidationError as exc:
        raise ParseError(str(exc), line=lineno) from None
    return b


def parse_boundaries(text: str | Iterable[str]) -> list[BoundaryScores]:
    """Parse the jsonlines boundary-score wire format."""
    lines = text.splitlines() if isinstance(text, str) else text
    out = []
    for lineno, raw in enumerate(lines, 1):
        if not raw.strip():
            continue
        try:
            obj = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", line=lineno) from None
        out.append(boundaries_from_json(obj, lineno))
    return out


def emit_boundaries(records: Iterable[BoundaryScores]) -> str:
    return "".join(json.dumps(boundaries_to_json(b)) + "\n" for b in records)
