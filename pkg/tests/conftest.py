"""Shared random-document generators for property and acceptance tests."""
from __future__ import annotations

import random

from hypothesis import strategies as st

from wordcoref.clustering import MatrixKind, ScoreMatrix, make_matrix
from wordcoref.documents import Document, MentionSpan, Token

WORDS = ["tom", "mary", "david", "ann", "dog", "sees", "runs", "big",
         "old", "the", "a", "and", "or", ",", "-"]
POS_TAGS = ["NNP", "NN", "VB", "DT", "JJ", "PRP", "CC", ","]


def random_tokens(rng: random.Random, n: int, with_heads: bool = True,
                  cc_bias: float = 0.0) -> list[Token]:
    """Random tokens over a random dependency forest (always acyclic)."""
    heads: list[int | None] = [None] * n
    if with_heads:
        order = list(range(n))
        rng.shuffle(order)
        for k in range(1, n):
            if rng.random() < 0.85:
                heads[order[k]] = order[rng.randrange(k)]
    sent_ids = []
    sid = 0
    for i in range(n):
        sent_ids.append(sid)
        if i < n - 1 and rng.random() < 0.2:
            sid += 1
    tokens = []
    for i in range(n):
        pos = "CC" if rng.random() < cc_bias else rng.choice(POS_TAGS)
        tokens.append(Token(index=i, word=rng.choice(WORDS), pos=pos,
                            sent_id=sent_ids[i], head=heads[i]))
    return tokens


def random_clusters(rng: random.Random, n: int, max_clusters: int = 4,
                    min_size: int = 1) -> tuple[tuple[MentionSpan, ...], ...]:
    spans = [MentionSpan(s, e)
             for s in range(n) for e in range(s + 1, min(s + 6, n) + 1)]
    rng.shuffle(spans)
    clusters = []
    for _ in range(rng.randrange(max_clusters + 1)):
        size = rng.randint(min_size, 4)
        if len(spans) < size:
            break
        cluster, spans = spans[:size], spans[size:]
        clusters.append(tuple(sorted(cluster)))
    return tuple(clusters)


def crosses(a: MentionSpan, b: MentionSpan) -> bool:
    return (a.start < b.start < a.end < b.end
            or b.start < a.start < b.end < a.end)


def random_nested_clusters(rng: random.Random, n: int,
                           max_clusters: int = 3,
                           ) -> tuple[tuple[MentionSpan, ...], ...]:
    """Clusters whose spans never partially overlap within one cluster.

    The CoNLL bracket encoding cannot represent same-cluster crossing
    spans, so round-trip generators stay inside the nested fragment.
    """
    spans = [MentionSpan(s, e)
             for s in range(n) for e in range(s + 1, min(s + 6, n) + 1)]
    rng.shuffle(spans)
    clusters: list[list[MentionSpan]] = [[] for _ in
                                         range(rng.randrange(max_clusters + 1))]
    for span in spans:
        candidates = [c for c in clusters
                      if len(c) < 4 and not any(crosses(span, s) for s in c)]
        if candidates and rng.random() < 0.6:
            rng.choice(candidates).append(span)
    return tuple(tuple(sorted(c)) for c in clusters if len(c) >= 2)


def random_document(rng: random.Random, max_tokens: int = 16,
                    with_heads: bool = True, doc_id: str = "rand/doc",
                    part: int = 0, max_clusters: int = 4,
                    cc_bias: float = 0.0) -> Document:
    n = rng.randint(1, max_tokens)
    return Document(
        doc_id=doc_id, part=part,
        tokens=tuple(random_tokens(rng, n, with_heads, cc_bias)),
        clusters=random_clusters(rng, n, max_clusters),
    )


def random_disjoint_span_document(rng: random.Random,
                                  max_tokens: int = 20,
                                  doc_id: str = "rand/doc",
                                  part: int = 0) -> Document:
    """Clusters over pairwise-disjoint spans: head-words cannot collide."""
    n = rng.randint(1, max_tokens)
    tokens = random_tokens(rng, n, with_heads=True)
    spans = []
    pos = 0
    while pos < n:
        width = rng.randint(1, 3)
        end = min(pos + width, n)
        if rng.random() < 0.6:
            spans.append(MentionSpan(pos, end))
        pos = end
    rng.shuffle(spans)
    clusters = []
    while spans:
        size = rng.randint(1, min(3, len(spans)))
        clusters.append(tuple(sorted(spans[:size])))
        spans = spans[size:]
    return Document(doc_id=doc_id, part=part, tokens=tuple(tokens),
                    clusters=tuple(clusters))


def random_partition(rng: random.Random, max_clusters: int = 6,
                     max_mentions: int = 12, min_cluster: int = 1,
                     universe: int = 40) -> list[frozenset[int]]:
    mentions = rng.sample(range(universe), rng.randint(0, max_mentions))
    rng.shuffle(mentions)
    clusters = []
    while mentions and len(clusters) < max_clusters:
        size = rng.randint(min_cluster, max(min_cluster, 4))
        if len(mentions) < size:
            break
        clusters.append(frozenset(mentions[:size]))
        mentions = mentions[size:]
    return clusters


def random_links(rng: random.Random, n: int,
                 density: float = 0.3) -> list[tuple[int, int]]:
    links = []
    for i in range(1, n):
        if rng.random() < density:
            links.append((i, rng.randrange(i)))
    return links


def random_matrix(rng: random.Random, n: int | None = None,
                  kind: MatrixKind = MatrixKind.COARSE,
                  density: float = 0.6) -> ScoreMatrix:
    if n is None:
        n = rng.randint(1, 12)
    rows = {}
    for i in range(1, n):
        entries = [(j, round(rng.uniform(-3, 3), 3))
                   for j in range(i) if rng.random() < density]
        if entries:
            rows[i] = entries
    return make_matrix(n, rows, kind, doc_id="rand/doc", part=0)


NON_CC_POS = [p for p in POS_TAGS if p != "CC"]


def make_xccy(rng: random.Random):
    """Random "X cc Y" document where X, Y, and "X cc Y" are all mentions.

    The conjunction and Y's head attach to X's head, which attaches to a
    verb outside the pattern.  Returns (doc, x_span, xccy_span, y_span).
    """
    prefix = rng.randrange(3)
    lx = rng.randint(1, 4)
    ly = rng.randint(1, 4)
    suffix = rng.randrange(2)
    a = prefix
    cc = a + lx
    c = cc + 1 + ly
    verb = c + suffix
    n = verb + 1

    def block_heads(indices, root):
        order = [root] + rng.sample([i for i in indices if i != root],
                                    len(indices) - 1)
        return {order[k]: order[rng.randrange(k)]
                for k in range(1, len(order))}

    xh = rng.randrange(a, cc)
    yh = rng.randrange(cc + 1, c)
    heads: dict[int, int | None] = {verb: None, cc: xh, xh: verb, yh: xh}
    heads.update({i: verb for i in range(prefix)})
    heads.update({i: verb for i in range(c, verb)})
    x_internal = block_heads(list(range(a, cc)), xh)
    y_internal = block_heads(list(range(cc + 1, c)), yh)
    heads.update(x_internal)
    heads.update(y_internal)

    tokens = []
    for i in range(n):
        pos = "CC" if i == cc else rng.choice(NON_CC_POS)
        tokens.append(Token(index=i, word=rng.choice(WORDS), pos=pos,
                            sent_id=0, head=heads[i]))
    doc = Document(doc_id="rand/xccy", part=0, tokens=tuple(tokens))
    return (doc, MentionSpan(a, cc), MentionSpan(a, c),
            MentionSpan(cc + 1, c))


@st.composite
def documents(draw, max_tokens: int = 12, with_heads: bool = True,
              cc_bias: float = 0.0):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_document(random.Random(seed), max_tokens=max_tokens,
                           with_heads=with_heads, cc_bias=cc_bias)


@st.composite
def documents_with_spans(draw, max_tokens: int = 12, cc_bias: float = 0.3):
    doc = draw(documents(max_tokens=max_tokens, cc_bias=cc_bias))
    start = draw(st.integers(0, doc.n - 1))
    end = draw(st.integers(start + 1, doc.n))
    return doc, MentionSpan(start, end)
