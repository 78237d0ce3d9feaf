"""End-to-end qualitative demo over the bundled example sentences.

For each demo document and each head-word rule, the word-level linking
and span-extraction steps run on the bundled oracle scores; each step's
prediction is rendered with bracketed mentions and judged against gold.
"""
from __future__ import annotations

from dataclasses import dataclass

from .clustering import infer_links, links_to_partition
from .documents import Document, MentionSpan
from .fixtures import demo_boundaries, demo_docs, demo_score_matrix
from .headwords import HeadwordRule
from .spans import select_span
from .wordlevel import build_wl

_COLORS = ("\x1b[46m", "\x1b[45m", "\x1b[43m", "\x1b[42m")
_RESET = "\x1b[0m"


@dataclass(frozen=True)
class DemoRow:
    example: int
    doc_id: str
    rule: HeadwordRule
    step: str                  # "word" or "span"
    rendered: str
    correct: bool


def render_clusters(doc: Document,
                    clusters: list[list[MentionSpan]],
                    color: bool = False) -> str:
    """Bracket every mention, tagging (or coloring) it by cluster."""
    opens: dict[int, list[tuple[int, int]]] = {}
    closes: dict[int, list[tuple[int, int]]] = {}
    for ci, cluster in enumerate(clusters):
        for span in sorted(cluster):
            opens.setdefault(span.start, []).append((ci, span.end))
            closes.setdefault(span.end, []).append((ci, span.start))
    pieces: list[tuple[str, str]] = []
    for i, tok in enumerate(doc.tokens):
        for ci, _start in sorted(closes.get(i, []), key=lambda e: -e[1]):
            pieces.append(("close", _close(ci, color)))
        for ci, _end in sorted(opens.get(i, []), key=lambda e: (-e[1], e[0])):
            pieces.append(("open", _open(ci, color)))
        pieces.append(("word", tok.word))
        if i + 1 == doc.n:
            for ci, _start in sorted(closes.get(doc.n, []),
                                     key=lambda e: -e[1]):
                pieces.append(("close", _close(ci, color)))
    return _join(pieces)


def _open(ci: int, color: bool) -> str:
    if color:
        return _COLORS[ci % len(_COLORS)] + "[" + _RESET
    return "["


def _close(ci: int, color: bool) -> str:
    if color:
        return _COLORS[ci % len(_COLORS)] + "]" + _RESET + f"#{ci}"
    return f"]#{ci}"


def _join(pieces: list[tuple[str, str]]) -> str:
    out = []
    prev_kind = None
    for kind, text in pieces:
        if out and kind != "close" and prev_kind != "open":
            out.append(" ")
        out.append(text)
        prev_kind = kind
    return "".join(out)


def _partition_sets(clusters) -> set[frozenset]:
    return {frozenset(c) for c in clusters}


def run_demo(color: bool = False, dummy: float = 0.0) -> list[DemoRow]:
    """Run both rules over the bundled examples; 4 rows per example."""
    rows = []
    for idx, doc in enumerate(demo_docs()):
        for rule in (HeadwordRule.BASELINE, HeadwordRule.CAW):
            wl, _ = build_wl(doc, rule)
            gold_words = _partition_sets(wl.word_clusters)
            gold_spans = _partition_sets(doc.clusters)

            links = infer_links(demo_score_matrix(idx, rule), dummy)
            predicted = links_to_partition(doc.n, links)
            word_clusters = [sorted(c) for c in predicted]
            word_rendered = render_clusters(
                doc, [[MentionSpan(w, w + 1) for w in c]
                      for c in word_clusters], color)
            rows.append(DemoRow(idx, doc.doc_id, rule, "word", word_rendered,
                                predicted.as_sets() == gold_words))

            boundaries = demo_boundaries(idx, rule)
            span_clusters = [[select_span(boundaries[w]) for w in c]
                             for c in word_clusters]
            span_rendered = render_clusters(doc, span_clusters, color)
            rows.append(DemoRow(idx, doc.doc_id, rule, "span", span_rendered,
                                _partition_sets(span_clusters) == gold_spans))
    return rows


def format_demo(rows: list[DemoRow]) -> str:
    """Human-readable table of demo rows with verdicts."""
    out = []
    names = {HeadwordRule.BASELINE: "word-level baseline",
             HeadwordRule.CAW: "conjunction-aware"}
    current = None
    for row in rows:
        if row.example != current:
            current = row.example
            out.append(f"--- example {row.example + 1}: {row.doc_id} ---")
        verdict = "Correct" if row.correct else "Incorrect"
        out.append(f"{names[row.rule]:<19} | {row.step:<4} | "
                   f"{row.rendered}  => {verdict}")
    correct = sum(r.correct for r in rows)
    out.append(f"{correct}/{len(rows)} steps correct "
               f"(baseline {sum(r.correct for r in rows if r.rule is HeadwordRule.BASELINE)}/6, "
               f"conjunction-aware {sum(r.correct for r in rows if r.rule is HeadwordRule.CAW)}/6)")
    return "\n".join(out)
