"""Command-line interface.

Subcommands: ingest, headwords, build-wl, analyze-conflicts, cluster,
score, demo.  Exit codes: 0 success, 2 usage, 3 parse/validation, 4 I/O.
Options may come from a JSON config file (--config); explicit flags win.
"""
from __future__ import annotations

import argparse
import functools
import json
import sys
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import __version__, SCHEMA_VERSION
from .clustering import (MatrixKind, ScoreMatrix, infer_links,
                         links_to_partition, parse_score_matrices, prune_topk)
from .conll import ColumnConfig, emit_conll, parse_conll
from .demo import format_demo, run_demo
from .documents import Document, MentionSpan
from .errors import SingletonClusterWarning, ToolkitError, ValidationError
from .headwords import (DEFAULT_CC_TAGS, HeadwordRule, analyze_conjunction,
                        baseline_headword, caw_headword)
from .jsonl import document_to_json, emit_jsonlines, parse_jsonlines
from .metrics import CorpusScorer
from .spans import parse_boundaries, select_span
from .wordlevel import ConflictReport, build_wl

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VALIDATION = 3
EXIT_IO = 4

_CONFIG_KEYS = ("rule", "cc_tags", "dummy", "top_k", "jobs", "doc_col",
                "part_col", "wordnum_col", "word_col", "pos_col", "coref_col")


@dataclass(frozen=True)
class PipelineConfig:
    headword_rule: HeadwordRule = HeadwordRule.BASELINE
    cc_tags: frozenset[str] = DEFAULT_CC_TAGS
    dummy: float = 0.0
    top_k: int | None = None
    columns: ColumnConfig = ColumnConfig()
    jobs: int = 1

    def __post_init__(self):
        if self.top_k is not None and self.top_k < 1:
            raise ValidationError(f"top_k must be >= 1, got {self.top_k}")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as f:
        return f.read()


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)


def _add_io_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", default="-",
                   help="input file ('-' for stdin)")
    p.add_argument("-o", "--output", default="-",
                   help="output file ('-' for stdout)")


def _add_common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", metavar="FILE",
                   help="JSON config file; explicit flags win")
    p.add_argument("--jobs", type=int, default=None, metavar="N",
                   help="process documents with N worker processes")


def _add_column_flags(p: argparse.ArgumentParser) -> None:
    for name in ("doc-col", "part-col", "wordnum-col", "word-col",
                 "pos-col", "coref-col"):
        p.add_argument(f"--{name}", type=int, default=None,
                       help=f"CoNLL column index for {name[:-4]}")


def _add_rule_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--rule", choices=["baseline", "caw"], default=None,
                   help="head-word rule (default baseline)")
    p.add_argument("--cc-tags", default=None, metavar="TAGS",
                   help="comma-separated coordinating-conjunction POS tags")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wordcoref",
        description="Word-level coreference corpus processing, inference, "
                    "and evaluation toolkit")
    parser.add_argument(
        "--version", action="version",
        version=f"wordcoref {__version__} (format schema {SCHEMA_VERSION})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="convert between CoNLL and jsonlines")
    _add_io_flags(p)
    p.add_argument("--from", dest="src_format", required=True,
                   choices=["conll", "jsonlines"])
    p.add_argument("--to", dest="dst_format", required=True,
                   choices=["conll", "jsonlines"])
    _add_column_flags(p)
    _add_common_flags(p)

    p = sub.add_parser("headwords",
                       help="annotate gold spans with head-word choices "
                            "under both rules")
    _add_io_flags(p)
    _add_rule_flags(p)
    _add_common_flags(p)

    p = sub.add_parser("build-wl",
                       help="decompose span clusters into word-level "
                            "clusters and a word-to-span map")
    _add_io_flags(p)
    _add_rule_flags(p)
    _add_common_flags(p)

    p = sub.add_parser("analyze-conflicts",
                       help="count conjoined spans and head-word collisions")
    _add_io_flags(p)
    _add_rule_flags(p)
    p.add_argument("--json", metavar="FILE", default=None,
                   help="also write a machine-readable report")
    _add_common_flags(p)

    p = sub.add_parser("cluster",
                       help="infer coreference from a score-matrix file "
                            "and emit a CoNLL response")
    p.add_argument("scores", help="score-matrix jsonlines file")
    p.add_argument("--docs", required=True,
                   help="jsonlines documents the scores refer to")
    p.add_argument("--spans", metavar="FILE", default=None,
                   help="boundary-score jsonlines file; without it, "
                        "responses use one-token spans")
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--dummy", type=float, default=None,
                   help="no-antecedent threshold (default 0)")
    p.add_argument("--top-k", type=int, default=None,
                   help="prune coarse rows to their k best antecedents")
    _add_column_flags(p)
    _add_common_flags(p)

    p = sub.add_parser("score", help="score a response against a key")
    p.add_argument("--key", required=True, help="gold CoNLL file")
    p.add_argument("--response", required=True, help="system CoNLL file")
    p.add_argument("--json", metavar="FILE", default=None,
                   help="also write a machine-readable report")
    _add_column_flags(p)
    _add_common_flags(p)

    p = sub.add_parser("demo",
                       help="run the bundled examples end-to-end under "
                            "both rules")
    p.add_argument("--color", choices=["auto", "always", "never"],
                   default="auto")
    _add_common_flags(p)
    return parser


class _Options:
    """Flag values with config-file fallback (flags win)."""

    def __init__(self, ns: argparse.Namespace):
        self.ns = ns
        self.config = {}
        path = getattr(ns, "config", None)
        if path:
            loaded = json.loads(_read(path))
            if not isinstance(loaded, dict):
                raise ValidationError(f"{path}: config must be a JSON object")
            unknown = set(loaded) - set(_CONFIG_KEYS)
            if unknown:
                raise ValidationError(
                    f"{path}: unknown config keys {sorted(unknown)}")
            self.config = loaded

    def get(self, key: str, fallback):
        value = getattr(self.ns, key, None)
        if value is None:
            value = self.config.get(key)
        return fallback if value is None else value

    def pipeline(self) -> PipelineConfig:
        cc = self.get("cc_tags", None)
        if isinstance(cc, str):
            cc = [t for t in cc.split(",") if t]
        return PipelineConfig(
            headword_rule=HeadwordRule(self.get("rule", "baseline")),
            cc_tags=frozenset(cc) if cc is not None else DEFAULT_CC_TAGS,
            dummy=float(self.get("dummy", 0.0)),
            top_k=self.get("top_k", None),
            columns=self.columns(),
            jobs=int(self.get("jobs", 1)),
        )

    def columns(self) -> ColumnConfig:
        base = ColumnConfig()
        return ColumnConfig(
            doc_col=self.get("doc_col", base.doc_col),
            part_col=self.get("part_col", base.part_col),
            wordnum_col=self.get("wordnum_col", base.wordnum_col),
            word_col=self.get("word_col", base.word_col),
            pos_col=self.get("pos_col", base.pos_col),
            coref_col=self.get("coref_col", base.coref_col),
        )


def _pmap(fn, items, jobs: int) -> list:
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _span_heads(doc: Document, cc_tags: frozenset[str]) -> dict:
    obj = document_to_json(doc)
    records = []
    for ci, cluster in enumerate(doc.clusters):
        for span in cluster:
            base = baseline_headword(doc, span)
            caw = caw_headword(doc, span, cc_tags)
            conj = analyze_conjunction(doc, span, cc_tags)
            records.append({
                "cluster": ci,
                "start": span.start,
                "end": span.end,
                "baseline_head": base.head_index,
                "baseline_fallback":
                    base.fallback_reason.value if base.fallback_reason else None,
                "caw_head": caw.head_index,
                "caw_rule": caw.rule.value,
                "cc_positions": list(conj.cc_positions),
                "depths": list(conj.depths),
                "is_conjoined": conj.is_conjoined,
                "is_sequential": conj.is_sequential,
                "is_punctuation_coordination":
                    conj.is_punctuation_coordination,
            })
    obj["span_heads"] = records
    return obj


def _wl_record(doc: Document, rule: HeadwordRule,
               cc_tags: frozenset[str]) -> dict:
    wl, report = build_wl(doc, rule, cc_tags)
    obj = document_to_json(doc)
    obj["rule_used"] = rule.value
    obj["word_clusters"] = [list(c) for c in wl.word_clusters]
    obj["word_to_span"] = {str(t): [s.start, s.end]
                           for t, s in sorted(wl.word_to_span.items())}
    obj["collisions"] = [
        {"token": c.token,
         "entries": [[cid, [s.start, s.end]] for cid, s in c.entries]}
        for c in report.collisions]
    return obj


def _doc_report(doc: Document, rule: HeadwordRule,
                cc_tags: frozenset[str]) -> ConflictReport:
    return build_wl(doc, rule, cc_tags)[1]


def _format_conflicts(report: ConflictReport) -> str:
    ratio = report.conjoined_ratio
    lines = [
        f"documents                      {report.document_count}",
        f"gold spans                     {report.total_span_count}",
        f"conjoined spans                {report.conjoined_span_count} "
        f"({'n/a' if ratio is None else format(ratio * 100, '.2f') + '%'})",
        f"sequential conjunctions        {report.sequential_count}",
        f"punctuation coordination       "
        f"{report.punctuation_coordination_count}",
        f"cross-cluster head collisions  {len(report.collisions)}",
    ]
    for c in report.collisions:
        spans = ", ".join(f"cluster {cid} span [{s.start},{s.end})"
                          for cid, s in c.entries)
        lines.append(f"  {c.doc_id}/part {c.part} token {c.token}: {spans}")
    return "\n".join(lines) + "\n"


def _conflicts_json(report: ConflictReport) -> dict:
    return {
        "documents": report.document_count,
        "total_spans": report.total_span_count,
        "conjoined_spans": report.conjoined_span_count,
        "conjoined_ratio": report.conjoined_ratio,
        "sequential": report.sequential_count,
        "punctuation_coordination": report.punctuation_coordination_count,
        "collisions": [
            {"doc_id": c.doc_id, "part": c.part, "token": c.token,
             "entries": [[cid, [s.start, s.end]] for cid, s in c.entries]}
            for c in report.collisions],
    }


def _cluster_doc(item: tuple[Document, ScoreMatrix | None, dict | None],
                 dummy: float, top_k: int | None) -> Document:
    doc, matrix, boundaries = item
    if matrix is None:
        return Document(doc.doc_id, doc.part, doc.tokens, ())
    if matrix.n != doc.n:
        raise ValidationError(
            f"{doc.doc_id}/part {doc.part}: matrix n={matrix.n} but the "
            f"document has {doc.n} tokens")
    if top_k is not None:
        if matrix.kind is not MatrixKind.COARSE:
            raise ValidationError(
                f"{doc.doc_id}/part {doc.part}: --top-k prunes coarse "
                f"matrices, got kind {matrix.kind.value!r}")
        matrix = prune_topk(matrix, top_k)
    partition = links_to_partition(doc.n, infer_links(matrix, dummy))
    clusters = []
    for words in partition:
        spans = []
        for w in sorted(words):
            if boundaries is None:
                span = MentionSpan(w, w + 1)
            else:
                if w not in boundaries:
                    raise ValidationError(
                        f"{doc.doc_id}/part {doc.part}: no boundary scores "
                        f"for coreferent word {w}")
                span = select_span(boundaries[w])
            if span not in spans:
                spans.append(span)
        clusters.append(tuple(sorted(spans)))
    clusters.sort(key=lambda c: c[0])
    return Document(doc.doc_id, doc.part, doc.tokens, tuple(clusters))


def _spans_key(doc: Document) -> tuple[str, int]:
    return (doc.doc_id, doc.part)


def _cmd_ingest(opts: _Options) -> int:
    ns = opts.ns
    text = _read(ns.input)
    columns = opts.columns()
    docs = (parse_conll(text, columns) if ns.src_format == "conll"
            else parse_jsonlines(text))
    out = (emit_conll(docs, columns) if ns.dst_format == "conll"
           else emit_jsonlines(docs))
    _write(ns.output, out)
    return EXIT_OK


def _cmd_headwords(opts: _Options) -> int:
    cfg = opts.pipeline()
    docs = parse_jsonlines(_read(opts.ns.input))
    worker = functools.partial(_span_heads, cc_tags=cfg.cc_tags)
    records = _pmap(worker, docs, cfg.jobs)
    _write(opts.ns.output,
           "".join(json.dumps(r, ensure_ascii=False) + "\n" for r in records))
    return EXIT_OK


def _cmd_build_wl(opts: _Options) -> int:
    cfg = opts.pipeline()
    docs = parse_jsonlines(_read(opts.ns.input))
    worker = functools.partial(_wl_record, rule=cfg.headword_rule,
                               cc_tags=cfg.cc_tags)
    records = _pmap(worker, docs, cfg.jobs)
    _write(opts.ns.output,
           "".join(json.dumps(r, ensure_ascii=False) + "\n" for r in records))
    return EXIT_OK


def _cmd_analyze_conflicts(opts: _Options) -> int:
    cfg = opts.pipeline()
    docs = parse_jsonlines(_read(opts.ns.input))
    worker = functools.partial(_doc_report, rule=cfg.headword_rule,
                               cc_tags=cfg.cc_tags)
    total = ConflictReport()
    for report in _pmap(worker, docs, cfg.jobs):
        total.merge(report)
    _write(opts.ns.output, _format_conflicts(total))
    if opts.ns.json:
        _write(opts.ns.json, json.dumps(_conflicts_json(total), indent=2)
               + "\n")
    return EXIT_OK


def _cmd_cluster(opts: _Options) -> int:
    cfg = opts.pipeline()
    docs = parse_jsonlines(_read(opts.ns.docs))
    matrices = {(m.doc_id, m.part): m
                for m in parse_score_matrices(_read(opts.ns.scores))}
    doc_keys = {_spans_key(d) for d in docs}
    for key in matrices:
        if key not in doc_keys:
            raise ValidationError(
                f"score matrix for unknown document {key[0]}/part {key[1]}")
    boundaries = None
    if opts.ns.spans is not None:
        boundaries = {}
        for b in parse_boundaries(_read(opts.ns.spans)):
            per_doc = boundaries.setdefault((b.doc_id, b.part), {})
            if b.head in per_doc:
                raise ValidationError(
                    f"duplicate boundary record for {b.doc_id}/part "
                    f"{b.part} head {b.head}")
            per_doc[b.head] = b
    items = [(doc, matrices.get(_spans_key(doc)),
              boundaries.get(_spans_key(doc)) if boundaries else None)
             for doc in docs]
    worker = functools.partial(_cluster_doc, dummy=cfg.dummy,
                               top_k=cfg.top_k)
    responses = _pmap(worker, items, cfg.jobs)
    _write(opts.ns.output, emit_conll(responses, cfg.columns))
    return EXIT_OK


def _cmd_score(opts: _Options) -> int:
    columns = opts.columns()
    key_docs = parse_conll(_read(opts.ns.key), columns)
    response_docs = parse_conll(_read(opts.ns.response), columns)
    key_map = {_spans_key(d): d for d in key_docs}
    response_map = {_spans_key(d): d for d in response_docs}
    if set(key_map) != set(response_map):
        missing = set(key_map) ^ set(response_map)
        raise ValidationError(
            f"key and response cover different documents: "
            f"{sorted(missing)}")
    scorer = CorpusScorer()
    for k in key_map:
        key_clusters = [frozenset(c) for c in key_map[k].clusters]
        response_clusters = [frozenset(c) for c in response_map[k].clusters]
        scorer.update(key_clusters, response_clusters)
    score = scorer.score()
    rows = [("muc", score.muc), ("b3", score.b3),
            ("ceaf_phi4", score.ceaf_phi4)]
    lines = [f"{'metric':<10} {'P':>7} {'R':>7} {'F1':>7}"]
    for name, triple in rows:
        p, r, f1 = triple.as_percent()
        lines.append(f"{name:<10} {p:>7} {r:>7} {f1:>7}")
    lines.append(f"{'avg':<10} {'':>7} {'':>7} {score.avg_f1 * 100:>7.2f}")
    sys.stdout.write("\n".join(lines) + "\n")
    if opts.ns.json:
        payload = {name: {"p": round(t.precision * 100, 2),
                          "r": round(t.recall * 100, 2),
                          "f1": round(t.f1 * 100, 2)}
                   for name, t in rows}
        payload["avg_f1"] = round(score.avg_f1 * 100, 2)
        _write(opts.ns.json, json.dumps(payload, indent=2) + "\n")
    return EXIT_OK


def _cmd_demo(opts: _Options) -> int:
    mode = opts.ns.color
    color = (mode == "always" or
             (mode == "auto" and sys.stdout.isatty()))
    sys.stdout.write(format_demo(run_demo(color=color)) + "\n")
    return EXIT_OK


_COMMANDS = {
    "ingest": _cmd_ingest,
    "headwords": _cmd_headwords,
    "build-wl": _cmd_build_wl,
    "analyze-conflicts": _cmd_analyze_conflicts,
    "cluster": _cmd_cluster,
    "score": _cmd_score,
    "demo": _cmd_demo,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        opts = _Options(ns)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            status = _COMMANDS[ns.command](opts)
        singleton_docs = {str(w.message) for w in caught
                          if issubclass(w.category, SingletonClusterWarning)}
        if singleton_docs:
            print(f"wordcoref: note: {len(singleton_docs)} document(s) "
                  f"contain singleton clusters (passed through)",
                  file=sys.stderr)
        for w in caught:
            if not issubclass(w.category, SingletonClusterWarning):
                print(f"wordcoref: warning: {w.message}", file=sys.stderr)
        return status
    except (ToolkitError, ValueError) as exc:
        print(f"wordcoref: error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"wordcoref: i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
