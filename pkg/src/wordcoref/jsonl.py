"""Jsonlines document format: one JSON object per line, UTF-8.

Schema per line::

    {"doc_id": str, "part": int, "words": [str], "pos": [str],
     "sent_id": [int], "head": [int|null], "clusters": [[[start, end], ...]],
     "deprel": [str|null]}   # optional, preserved but never consulted

All per-token arrays are parallel; ``head`` is null for roots; cluster
spans are half-open [start, end) pairs.
"""
from __future__ import annotations

import json
import warnings
from typing import Iterable

from .documents import Document, MentionSpan, Token, has_singleton_cluster, validate_document
from .errors import ParseError, SingletonClusterWarning, ValidationError

_TOKEN_ARRAYS = ("words", "pos", "sent_id", "head")


def _iter_lines(text: str | Iterable[str]) -> Iterable[str]:
    if isinstance(text, str):
        return text.splitlines()
    return text


def _require(obj: dict, key: str, lineno: int):
    if key not in obj:
        raise ParseError(f"missing field {key!r}", line=lineno)
    return obj[key]


def document_from_json(obj: dict, lineno: int = 0) -> Document:
    """Build a validated Document from one decoded jsonlines object."""
    doc_id = _require(obj, "doc_id", lineno)
    part = _require(obj, "part", lineno)
    if not isinstance(doc_id, str) or not isinstance(part, int) \
            or isinstance(part, bool):
        raise ParseError("doc_id must be a string and part an integer",
                         line=lineno)
    arrays = {key: _require(obj, key, lineno) for key in _TOKEN_ARRAYS}
    deprel = obj.get("deprel")
    if deprel is not None:
        arrays["deprel"] = deprel
    for key, arr in arrays.items():
        if not isinstance(arr, list):
            raise ParseError(f"field {key!r} must be an array", line=lineno)
    lengths = {key: len(arr) for key, arr in arrays.items()}
    if len(set(lengths.values())) > 1:
        raise ValidationError(
            f"line {lineno}: per-token arrays disagree in length: {lengths}")
    n = lengths["words"]
    tokens = []
    for i in range(n):
        head = arrays["head"][i]
        if head is not None and (not isinstance(head, int)
                                 or isinstance(head, bool)):
            raise ParseError(f"head[{i}] must be an integer or null",
                             line=lineno)
        tokens.append(Token(
            index=i,
            word=arrays["words"][i],
            pos=arrays["pos"][i],
            sent_id=arrays["sent_id"][i],
            head=head,
            deprel=arrays["deprel"][i] if deprel is not None else None,
        ))
    raw_clusters = _require(obj, "clusters", lineno)
    clusters = []
    for cluster in raw_clusters:
        spans = []
        for pair in cluster:
            if not (isinstance(pair, list) and len(pair) == 2
                    and all(isinstance(x, int) and not isinstance(x, bool)
                            for x in pair)):
                raise ParseError(
                    f"cluster span must be a two-element [start, end] "
                    f"array, got {pair!r}", line=lineno)
            spans.append(MentionSpan(pair[0], pair[1]))
        clusters.append(tuple(spans))
    doc = Document(doc_id=doc_id, part=part, tokens=tuple(tokens),
                   clusters=tuple(clusters))
    try:
        validate_document(doc)
    except ValidationError as exc:
        raise ValidationError(f"line {lineno}: {exc}") from None
    return doc


def parse_jsonlines(text: str | Iterable[str]) -> list[Document]:
    """Parse jsonlines text into validated Documents."""
    docs = []
    for lineno, raw in enumerate(_iter_lines(text), 1):
        if not raw.strip():
            continue
        try:
            obj = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", line=lineno) from None
        if not isinstance(obj, dict):
            raise ParseError("each line must hold a JSON object", line=lineno)
        doc = document_from_json(obj, lineno)
        if has_singleton_cluster(doc):
            warnings.warn(
                f"{doc.doc_id}/part {doc.part} contains singleton clusters",
                SingletonClusterWarning, stacklevel=2)
        docs.append(doc)
    return docs


def document_to_json(doc: Document) -> dict:
    """Encode a Document as a JSON-ready dict with stable field order."""
    validate_document(doc)
    obj = {
        "doc_id": doc.doc_id,
        "part": doc.part,
        "words": [t.word for t in doc.tokens],
        "pos": [t.pos for t in doc.tokens],
        "sent_id": [t.sent_id for t in doc.tokens],
        "head": [t.head for t in doc.tokens],
        "clusters": [[[s.start, s.end] for s in cluster]
                     for cluster in doc.clusters],
    }
    if any(t.deprel is not None for t in doc.tokens):
        obj["deprel"] = [t.deprel for t in doc.tokens]
    return obj


def emit_jsonlines(docs: list[Document]) -> str:
    """Render Documents as jsonlines (inverse of parse_jsonlines)."""
    return "".join(json.dumps(document_to_json(doc), ensure_ascii=False) + "\n"
                   for doc in docs)
