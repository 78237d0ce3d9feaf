"""Run an encoder over documents and write the score wire formats."""
from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field

import numpy as np

from .config import BridgeConfig
from .encoders import EncoderError, get_encoder


class InputError(Exception):
    """The document file does not match the jsonlines schema."""


@dataclass
class ExportReport:
    model: str
    pooling: str
    documents: int = 0
    matrices: int = 0
    boundary_records: int = 0
    errors: list[dict] = field(default_factory=list)

    def meta(self, config: BridgeConfig) -> dict:
        return {
            "model": self.model,
            "pooling": self.pooling,
            "top_k": config.top_k,
            "documents": self.documents,
            "matrices": self.matrices,
            "boundary_records": self.boundary_records,
            "errors": self.errors,
        }


def _load_documents(path: str) -> list[dict]:
    docs = []
    with open(path, encoding="utf-8") as f:
        for lineno, raw in enumerate(f, 1):
            if not raw.strip():
                continue
            try:
                obj = json.loads(raw)
            except json.JSONDecodeError as exc:
                raise InputError(f"{path}:{lineno}: invalid JSON: {exc.msg}")
            for key in ("doc_id", "part", "words", "sent_id"):
                if key not in obj:
                    raise InputError(f"{path}:{lineno}: missing {key!r}")
            if len(obj["words"]) != len(obj["sent_id"]):
                raise InputError(
                    f"{path}:{lineno}: words and sent_id lengths differ")
            docs.append(obj)
    return docs


def _sentence_bounds(sent_ids: list[int]) -> list[tuple[int, int]]:
    """Per-token [start, end) bounds of the surrounding sentence run."""
    bounds = []
    start = 0
    for i in range(1, len(sent_ids) + 1):
        if i == len(sent_ids) or sent_ids[i] != sent_ids[i - 1]:
            bounds.extend([(start, i)] * (i - start))
            start = i
    return bounds


def _score_rows(sim: np.ndarray, top_k: int) -> list:
    rows = []
    n = sim.shape[0]
    for i in range(1, n):
        candidates = sorted(range(i), key=lambda j: (-sim[i, j], j))[:top_k]
        row = [[j, round(float(sim[i, j]), 6)] for j in sorted(candidates)]
        rows.append([i, row])
    return rows


def _boundary_records(obj: dict, sim: np.ndarray) -> list[dict]:
    bounds = _sentence_bounds(obj["sent_id"])
    records = []
    for head in range(len(obj["words"])):
        lo, hi = bounds[head]
        starts = [round(float(sim[head, s]), 6) for s in range(lo, head + 1)]
        ends = [round(float(sim[head, e - 1]), 6)
                for e in range(head + 1, hi + 1)]
        records.append({
            "doc_id": obj["doc_id"],
            "part": obj["part"],
            "head": head,
            "sent_start": lo,
            "sent_end": hi,
            "start_scores": starts,
            "end_scores": ends,
        })
    return records


def _atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def export_scores(docs_path: str, config: BridgeConfig,
                  encoder=None) -> ExportReport:
    """Write score-matrix, boundary-score, and metadata files.

    Per-document encoder failures are recorded in the metadata and skip
    only that document.  File writes are atomic per file.
    """
    if encoder is None:
        encoder = get_encoder(config.model, config.device)
    report = ExportReport(model=encoder.name, pooling=encoder.pooling)
    matrix_lines = []
    boundary_lines = []
    for obj in _load_documents(docs_path):
        report.documents += 1
        try:
            embeddings = encoder.encode(obj["words"])
            sim = embeddings @ embeddings.T
            if not np.isfinite(sim).all():
                raise EncoderError("encoder produced non-finite scores")
        except EncoderError as exc:
            report.errors.append({"doc_id": obj["doc_id"],
                                  "part": obj["part"], "error": str(exc)})
            continue
        matrix_lines.append(json.dumps({
            "doc_id": obj["doc_id"],
            "part": obj["part"],
            "n": len(obj["words"]),
            "kind": "coarse",
            "rows": _score_rows(sim, config.top_k),
        }))
        report.matrices += 1
        for record in _boundary_records(obj, sim):
            boundary_lines.append(json.dumps(record))
            report.boundary_records += 1
    _atomic_write(config.scores_path,
                  "".join(line + "\n" for line in matrix_lines))
    _atomic_write(config.boundaries_path,
                  "".join(line + "\n" for line in boundary_lines))
    _atomic_write(config.meta_path,
                  json.dumps(report.meta(config), indent=2) + "\n")
    return report
