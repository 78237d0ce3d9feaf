"""Word-level coreference inference over antecedent score matrices.

Scores live in sparse per-word rows: row i lists candidate antecedents
j < i.  Inference picks each word's best-scoring antecedent, keeps the
link only when it beats the dummy (no-antecedent) threshold, and closes
the links into connected components.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from typing import Hashable, Iterable, Sequence

from .errors import ParseError, ValidationError


class MatrixKind(str, Enum):
    COARSE = "coarse"
    FINE = "fine"
    COMBINED = "combined"


Row = tuple[tuple[int, float], ...]


@dataclass(frozen=True)
class ScoreMatrix:
    """Sparse pairwise antecedent scores over the words of one document."""

    n: int
    rows: dict[int, Row]
    kind: MatrixKind
    k: int | None = None
    doc_id: str = ""
    part: int = 0

    def row(self, i: int) -> Row:
        return self.rows.get(i, ())


def make_matrix(n: int, rows: dict[int, Iterable[tuple[int, float]]],
                kind: MatrixKind, k: int | None = None,
                doc_id: str = "", part: int = 0) -> ScoreMatrix:
    """Build a validated ScoreMatrix; rows are stored sorted by antecedent."""
    if k is not None and k < 1:
        raise ValidationError(f"top-k bound must be >= 1, got {k}")
    canon: dict[int, Row] = {}
    for i, entries in rows.items():
        entries = tuple(sorted(entries))
        if not entries:
            continue
        if not 0 <= i < n:
            raise ValidationError(f"row index {i} outside 0..{n - 1}")
        seen = set()
        for j, score in entries:
            if not 0 <= j < i:
                raise ValidationError(
                    f"antecedent {j} in row {i} must satisfy 0 <= j < i")
            if j in seen:
                raise ValidationError(f"row {i} repeats antecedent {j}")
            seen.add(j)
            if not math.isfinite(score):
                raise ValidationError(f"non-finite score at ({i}, {j})")
        if k is not None and kind is not MatrixKind.COARSE \
                and len(entries) > k:
            raise ValidationError(
                f"row {i} holds {len(entries)} entries, over top-k bound {k}")
        canon[i] = entries
    return ScoreMatrix(n=n, rows=canon, kind=kind, k=k,
                       doc_id=doc_id, part=part)


def prune_topk(coarse: ScoreMatrix, k: int) -> ScoreMatrix:
    """Keep each row's k highest-scoring antecedents (ties keep smaller j)."""
    if k <= 0:
        raise ValueError(f"k must be positive, got {k}")
    if coarse.kind is not MatrixKind.COARSE:
        raise ValidationError(
            f"prune_topk expects a coarse matrix, got {coarse.kind.value}")
    rows = {}
    for i, entries in coarse.rows.items():
        best = sorted(entries, key=lambda e: (-e[1], e[0]))[:k]
        rows[i] = tuple(sorted(best))
    return ScoreMatrix(n=coarse.n, rows=rows, kind=coarse.kind, k=k,
                       doc_id=coarse.doc_id, part=coarse.part)


def combine(coarse: ScoreMatrix, fine: ScoreMatrix) -> ScoreMatrix:
    """Entrywise sum over fine's support; requires support containment."""
    if coarse.n != fine.n:
        raise ValidationError(
            f"word counts differ: coarse n={coarse.n}, fine n={fine.n}")
    rows = {}
    for i, entries in fine.rows.items():
        coarse_row = dict(coarse.row(i))
        summed = []
        for j, score in entries:
            if j not in coarse_row:
                raise ValidationError(
                    f"fine entry ({i}, {j}) missing from coarse support")
            summed.append((j, coarse_row[j] + score))
        rows[i] = tuple(summed)
    return ScoreMatrix(n=fine.n, rows=rows, kind=MatrixKind.COMBINED,
                       k=fine.k, doc_id=fine.doc_id, part=fine.part)


def infer_links(scores: ScoreMatrix, dummy: float = 0.0,
                ) -> list[tuple[int, int]]:
    """Best antecedent per word, kept only when it beats the dummy score.

    Ties go to the smaller antecedent index; words with empty rows stay
    unlinked.
    """
    links = []
    for i in sorted(scores.rows):
        best_j, best_score = min(scores.rows[i],
                                 key=lambda e: (-e[1], e[0]))
        if best_score > dummy:
            links.append((i, best_j))
    return links


class UnionFind:
    """Disjoint sets with path compression and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]


@dataclass(frozen=True)
class ClusterPartition:
    """Disjoint, nonempty clusters of hashable item ids."""

    clusters: tuple[frozenset[Hashable], ...]

    def __iter__(self):
        return iter(self.clusters)

    def __len__(self) -> int:
        return len(self.clusters)

    def items(self) -> frozenset[Hashable]:
        return frozenset(x for c in self.clusters for x in c)

    def as_sets(self) -> set[frozenset[Hashable]]:
        return set(self.clusters)


def make_partition(clusters: Iterable[Iterable[Hashable]]) -> ClusterPartition:
    frozen = tuple(frozenset(c) for c in clusters)
    seen: set[Hashable] = set()
    for c in frozen:
        if not c:
            raise ValidationError("partition contains an empty cluster")
        if seen & c:
            raise ValidationError(
                f"clusters are not disjoint: {sorted(seen & c)!r} repeats")
        seen |= c
    return ClusterPartition(frozen)


def links_to_partition(n: int, links: Sequence[tuple[int, int]],
                       ) -> ClusterPartition:
    """Connected components of the link graph; singletons are omitted."""
    uf = UnionFind(n)
    for i, j in links:
        if not (0 <= j < i < n):
            raise ValueError(f"malformed link ({i}, {j}): need 0 <= j < i < n")
        uf.union(i, j)
    members: dict[int, list[int]] = {}
    for x in range(n):
        members.setdefault(uf.find(x), []).append(x)
    clusters = [frozenset(c) for c in members.values() if len(c) > 1]
    clusters.sort(key=min)
    return ClusterPartition(tuple(clusters))


_KINDS = {k.value: k for k in MatrixKind}


def matrix_to_json(m: ScoreMatrix) -> dict:
    return {
        "doc_id": m.doc_id,
        "part": m.part,
        "n": m.n,
        "kind": m.kind.value,
        "rows": [[i, [[j, s] for j, s in m.rows[i]]]
                 for i in sorted(m.rows)],
    }


def matrix_from_json(obj: dict, lineno: int = 0) -> ScoreMatrix:
    for key in ("doc_id", "part", "n", "kind", "rows"):
        if key not in obj:
            raise ParseError(f"score matrix missing field {key!r}",
                             line=lineno)
    kind = _KINDS.get(obj["kind"])
    if kind is None:
        raise ParseError(f"unknown matrix kind {obj['kind']!r}", line=lineno)
    rows = {}
    for row in obj["rows"]:
        if not (isinstance(row, list) and len(row) == 2):
            raise ParseError(f"malformed row {row!r}", line=lineno)
        i, entries = row
        if i in rows:
            raise ParseError(f"row index {i} appears twice", line=lineno)
        pairs = []
        for pair in entries:
            if not (isinstance(pair, list) and len(pair) == 2):
                raise ParseError(f"malformed entry {pair!r} in row {i}",
                                 line=lineno)
            j, score = pair
            if isinstance(score, bool) or not isinstance(score, (int, float)):
                raise ParseError(f"score at ({i}, {j}) is not a number",
                                 line=lineno)
            if not math.isfinite(score):
                raise ParseError(f"non-finite score at ({i}, {j})",
                                 line=lineno)
            pairs.append((j, float(score)))
        rows[i] = pairs
    try:
        return make_matrix(obj["n"], rows, kind,
                           doc_id=obj["doc_id"], part=obj["part"])
    except ValidationError as exc:
        raise ParseError(str(exc), line=lineno) from None


def parse_score_matrices(text: str | Iterable[str]) -> list[ScoreMatrix]:
    """Parse the jsonlines score-matrix wire format."""
    lines = text.splitlines() if isinstance(text, str) else text
    out = []
    for lineno, raw in enumerate(lines, 1):
        if not raw.strip():
            continue
        try:
            obj = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", line=lineno) from None
        out.append(matrix_from_json(obj, lineno))
    return out


def emit_score_matrices(matrices: Iterable[ScoreMatrix]) -> str:
    return "".join(json.dumps(matrix_to_json(m)) + "\n" for m in matrices)
