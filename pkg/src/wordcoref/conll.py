"""CoNLL-2012 coreference column parsing and emission.

The coreference column encodes mention spans with bracket markers:
``(12`` opens a mention of cluster 12 at this token, ``12)`` closes the
most recent unmatched open for cluster 12, and ``(12)`` is a one-token
mention.  Multiple entries at one token are joined by ``|``; ``-`` means
no entry.  All other columns except document id, part, word and POS are
ignored on input and regenerated minimally on output.

The bracket encoding cannot distinguish partially overlapping spans of
the same cluster: matching a close to the most recent open always reads
them as nested.  Round-trip identity therefore holds on documents whose
same-cluster spans nest or are disjoint, which is all the annotation
scheme produces.
"""
from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from typing import Iterable

from .documents import Document, MentionSpan, Token, has_singleton_cluster, validate_document
from .errors import ParseError, SingletonClusterWarning, ValidationError

_COREF_ENTRY = re.compile(r"^\((\d+)\)$|^\((\d+)$|^(\d+)\)$")
_BEGIN = "#begin document"
_END = "#end document"


@dataclass(frozen=True)
class ColumnConfig:
    """Positions of the columns the toolkit interprets.

    OntoNotes variants shuffle the middle columns, but these five are
    stable.  Negative indices count from the end of the row.
    """

    doc_col: int = 0
    part_col: int = 1
    wordnum_col: int = 2
    word_col: int = 3
    pos_col: int = 4
    coref_col: int = -1

    def min_columns(self) -> int:
        positive = [c for c in self.all_columns() if c >= 0]
        negative = [c for c in self.all_columns() if c < 0]
        need = max(positive) + 1 if positive else 0
        if negative:
            need += max(-c for c in negative)
        return need

    def all_columns(self) -> tuple[int, ...]:
        return (self.doc_col, self.part_col, self.wordnum_col,
                self.word_col, self.pos_col, self.coref_col)


def _iter_lines(text: str | Iterable[str]) -> Iterable[str]:
    if isinstance(text, str):
        return text.splitlines()
    return text


class _DocBuilder:
    def __init__(self, doc_id: str, part: int, lineno: int):
        self.doc_id = doc_id
        self.part = part
        self.first_line = lineno
        self.tokens: list[Token] = []
        self.sent_id = 0
        self.sent_open = False        # tokens seen since last sentence break
        self.sent_columns: int | None = None
        self.open_stacks: dict[int, list[tuple[int, int]]] = {}
        self.spans: dict[int, list[MentionSpan]] = {}

    def break_sentence(self) -> None:
        if self.sent_open:
            self.sent_id += 1
            self.sent_open = False
            self.sent_columns = None

    def add_token(self, fields: list[str], config: ColumnConfig,
                  lineno: int) -> None:
        if self.sent_columns is None:
            self.sent_columns = len(fields)
        elif len(fields) != self.sent_columns:
            raise ParseError(
                f"ragged row: {len(fields)} columns where the sentence "
                f"started with {self.sent_columns}", line=lineno)
        index = len(self.tokens)
        self.tokens.append(Token(
            index=index,
            word=fields[config.word_col],
            pos=fields[config.pos_col],
            sent_id=self.sent_id,
        ))
        self.sent_open = True
        cell = fields[config.coref_col]
        if cell == "-":
            return
        for entry in cell.split("|"):
            m = _COREF_ENTRY.match(entry)
            if m is None:
                raise ParseError(
                    f"cannot parse coreference entry {entry!r}", line=lineno)
            unit, opened, closed = m.groups()
            if unit is not None:
                self.spans.setdefault(int(unit), []).append(
                    MentionSpan(index, index + 1))
            elif opened is not None:
                self.open_stacks.setdefault(int(opened), []).append(
                    (index, lineno))
            else:
                cid = int(closed)
                stack = self.open_stacks.get(cid)
                if not stack:
                    raise ParseError(
                        f"close bracket for cluster {cid} without a "
                        f"matching open", line=lineno)
                start, _ = stack.pop()
                self.spans.setdefault(cid, []).append(
                    MentionSpan(start, index + 1))

    def finish(self) -> Document:
        dangling = [(lineno, cid)
                    for cid, stack in self.open_stacks.items()
                    for _, lineno in stack]
        if dangling:
            lineno, cid = min(dangling)
            raise ParseError(
                f"unclosed bracket for cluster {cid} at end of document "
                f"{self.doc_id}/part {self.part}", line=lineno)
        clusters = tuple(
            tuple(sorted(self.spans[cid])) for cid in sorted(self.spans))
        doc = Document(doc_id=self.doc_id, part=self.part,
                       tokens=tuple(self.tokens), clusters=clusters)
        try:
            validate_document(doc)
        except ValidationError as exc:
            raise ParseError(str(exc), line=self.first_line) from None
        return doc


def parse_conll(text: str | Iterable[str],
                config: ColumnConfig = ColumnConfig()) -> list[Document]:
    """Parse CoNLL-2012 text into one Document per (doc id, part)."""
    docs: list[Document] = []
    seen: set[tuple[str, int]] = set()
    current: _DocBuilder | None = None
    min_cols = config.min_columns()

    def flush() -> None:
        nonlocal current
        if current is not None:
            doc = current.finish()
            docs.append(doc)
            current = None

    for lineno, raw in enumerate(_iter_lines(text), 1):
        line = raw.strip()
        if line.startswith(_BEGIN) or line.startswith(_END):
            flush()
            continue
        if not line:
            if current is not None:
                current.break_sentence()
            continue
        fields = line.split()
        if len(fields) < min_cols:
            raise ParseError(
                f"row has {len(fields)} columns, need at least {min_cols}",
                line=lineno)
        doc_id = fields[config.doc_col]
        try:
            part = int(fields[config.part_col])
        except ValueError:
            raise ParseError(
                f"part column is not an integer: "
                f"{fields[config.part_col]!r}", line=lineno) from None
        if current is not None and (doc_id, part) != (current.doc_id,
                                                      current.part):
            flush()
        if current is None:
            if (doc_id, part) in seen:
                raise ParseError(
                    f"duplicate document block for {doc_id}/part {part}",
                    line=lineno)
            seen.add((doc_id, part))
            current = _DocBuilder(doc_id, part, lineno)
        current.add_token(fields, config, lineno)
    flush()

    for doc in docs:
        if has_singleton_cluster(doc):
            warnings.warn(
                f"{doc.doc_id}/part {doc.part} contains singleton clusters",
                SingletonClusterWarning, stacklevel=2)
    return docs


def coref_cells(doc: Document) -> list[str]:
    """Coreference column cells for each token, in canonical order.

    At one token: closes first, then one-token mentions, then opens,
    each group sorted by cluster id.  Opens of the same cluster are
    ordered widest first so that a later close matches the innermost.
    """
    closes: list[list[int]] = [[] for _ in range(doc.n)]
    units: list[list[int]] = [[] for _ in range(doc.n)]
    opens: list[list[tuple[int, int]]] = [[] for _ in range(doc.n)]
    for cid, cluster in enumerate(doc.clusters):
        for span in cluster:
            if not (0 <= span.start < span.end <= doc.n):
                raise ValidationError(
                    f"{doc.doc_id}/part {doc.part}: span {span} exceeds "
                    f"document bounds")
            if span.width == 1:
                units[span.start].append(cid)
            else:
                opens[span.start].append((cid, span.end))
                closes[span.end - 1].append(cid)
    cells = []
    for t in range(doc.n):
        parts = [f"{cid})" for cid in sorted(closes[t])]
        parts += [f"({cid})" for cid in sorted(units[t])]
        parts += [f"({cid}" for cid, _end in
                  sorted(opens[t], key=lambda pair: (pair[0], -pair[1]))]
        cells.append("|".join(parts) if parts else "-")
    return cells


def emit_conll(docs: list[Document],
               config: ColumnConfig = ColumnConfig()) -> str:
    """Render Documents back to CoNLL-2012 text (inverse of parse_conll)."""
    width = max(config.min_columns(), 1)
    out: list[str] = []
    for doc in docs:
        validate_document(doc)
        cells = coref_cells(doc)
        out.append(f"{_BEGIN} ({doc.doc_id}); part {doc.part:03d}")
        wordnum = 0
        prev_sent = 0
        for tok in doc.tokens:
            if tok.sent_id != prev_sent:
                out.append("")
                wordnum = 0
                prev_sent = tok.sent_id
            row = ["-"] * width
            row[config.doc_col] = doc.doc_id
            row[config.part_col] = str(doc.part)
            row[config.wordnum_col] = str(wordnum)
            row[config.word_col] = tok.word
            row[config.pos_col] = tok.pos
            row[config.coref_col] = cells[tok.index]
            out.append(" ".join(row))
            wordnum += 1
        out.append("")
        out.append(_END)
    return "\n".join(out) + "\n" if out else ""
