"""Core document model: tokens, mention spans, and gold clusters.

Spans are half-open token intervals [start, end) over document-wide,
0-based token positions.  Dependency heads are document-wide indices as
well, with ``None`` marking a root.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ValidationError


@dataclass(frozen=True, order=True)
class MentionSpan:
    """Half-open token interval [start, end) within one document part."""

    start: int
    end: int

    @property
    def width(self) -> int:
        return self.end - self.start

    def __contains__(self, index: int) -> bool:
        return self.start <= index < self.end

    def __repr__(self) -> str:
        return f"[{self.start},{self.end})"


@dataclass(frozen=True)
class Token:
    index: int
    word: str
    pos: str
    sent_id: int
    head: int | None = None
    deprel: str | None = None  # accepted and preserved, never consulted


@dataclass(frozen=True)
class Document:
    """One document part: tokens plus gold coreference clusters."""

    doc_id: str
    part: int
    tokens: tuple[Token, ...]
    clusters: tuple[tuple[MentionSpan, ...], ...] = field(default_factory=tuple)

    @property
    def n(self) -> int:
        """Number of tokens in the document."""
        return len(self.tokens)

    def words(self) -> list[str]:
        return [t.word for t in self.tokens]

    def sentence_bounds(self, index: int) -> tuple[int, int]:
        """[start, end) token range of the sentence containing `index`."""
        sid = self.tokens[index].sent_id
        lo = index
        while lo > 0 and self.tokens[lo - 1].sent_id == sid:
            lo -= 1
        hi = index + 1
        while hi < self.n and self.tokens[hi].sent_id == sid:
            hi += 1
        return lo, hi


def make_document(doc_id: str, part: int, tokens, clusters=()) -> Document:
    """Build and validate a Document from any iterables."""
    doc = Document(
        doc_id=doc_id,
        part=part,
        tokens=tuple(tokens),
        clusters=tuple(tuple(c) for c in clusters),
    )
    validate_document(doc)
    return doc


def _find_head_cycle(tokens: tuple[Token, ...]) -> list[int] | None:
    # Colors: 0 unvisited, 1 on current path, 2 finished.
    color = [0] * len(tokens)
    for start in range(len(tokens)):
        if color[start] != 0:
            continue
        path = []
        cur: int | None = start
        while cur is not None and color[cur] == 0:
            color[cur] = 1
            path.append(cur)
            cur = tokens[cur].head
        if cur is not None and color[cur] == 1:
            return path[path.index(cur):]
        for i in path:
            color[i] = 2
    return None


def validate_document(doc: Document) -> None:
    """Check every Token/Document invariant; raise ValidationError if broken."""
    name = f"{doc.doc_id}/part {doc.part}"
    if doc.n < 1:
        raise ValidationError(f"{name}: document has no tokens")
    prev_sent = 0
    for pos, tok in enumerate(doc.tokens):
        if tok.index != pos:
            raise ValidationError(
                f"{name}: token at position {pos} carries index {tok.index}")
        if pos == 0:
            if tok.sent_id != 0:
                raise ValidationError(f"{name}: first sent_id must be 0")
        elif tok.sent_id not in (prev_sent, prev_sent + 1):
            raise ValidationError(
                f"{name}: sent_id jumps from {prev_sent} to {tok.sent_id} "
                f"at token {pos}")
        prev_sent = tok.sent_id
        if tok.head is not None:
            if not 0 <= tok.head < doc.n:
                raise ValidationError(
                    f"{name}: token {pos} has out-of-range head {tok.head}")
            if tok.head == pos:
                raise ValidationError(
                    f"{name}: token {pos} is its own dependency head")
    cycle = _find_head_cycle(doc.tokens)
    if cycle is not None:
        raise ValidationError(
            f"{name}: dependency heads form a cycle: "
            + " -> ".join(str(i) for i in cycle + [cycle[0]]))
    for ci, cluster in enumerate(doc.clusters):
        if not cluster:
            raise ValidationError(f"{name}: cluster {ci} is empty")
        if len(set(cluster)) != len(cluster):
            raise ValidationError(
                f"{name}: cluster {ci} repeats a mention span")
        for span in cluster:
            if not (0 <= span.start < span.end <= doc.n):
                raise ValidationError(
                    f"{name}: span {span} in cluster {ci} is out of bounds "
                    f"for {doc.n} tokens")


def has_singleton_cluster(doc: Document) -> bool:
    return any(len(c) == 1 for c in doc.clusters)
