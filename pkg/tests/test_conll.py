import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_nested_clusters, random_tokens
from wordcoref.conll import ColumnConfig, coref_cells, emit_conll, parse_conll
from wordcoref.documents import Document, MentionSpan
from wordcoref.errors import ParseError, SingletonClusterWarning, ValidationError


def lines(*rows: str) -> str:
    return "\n".join(rows) + "\n"


def doc_lines(cells, doc_id="d", part=0):
    return [f"{doc_id} {part} {i} w{i} NN {cell}"
            for i, cell in enumerate(cells)]


def conll_doc(rng: random.Random, doc_id: str, part: int = 0) -> Document:
    n = rng.randint(1, 14)
    tokens = random_tokens(rng, n, with_heads=False)
    return Document(doc_id=doc_id, part=part, tokens=tuple(tokens),
                    clusters=random_nested_clusters(rng, n))


def coref_column(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(line.split()[-1])
    return out


def test_open_close_pair_makes_one_span():
    docs = parse_conll(lines(*doc_lines(["(0", "-", "0)"])))
    assert len(docs) == 1
    assert docs[0].clusters == ((MentionSpan(0, 3),),)


def test_unit_and_open_at_same_token():
    docs = parse_conll(lines(*doc_lines(["(0)|(1", "1)"])))
    assert docs[0].clusters == ((MentionSpan(0, 1),), (MentionSpan(0, 2),))


def test_nested_same_cluster_matches_most_recent_open():
    docs = parse_conll(lines(*doc_lines(["(0", "(0", "0)", "-", "0)"])))
    assert docs[0].clusters == ((MentionSpan(0, 5), MentionSpan(1, 3)),)


def test_begin_end_markers_tolerated_and_regenerated():
    text = lines("#begin document (d); part 000",
                 *doc_lines(["(0", "0)"]),
                 "",
                 "#end document")
    docs = parse_conll(text)
    assert docs[0].doc_id == "d" and docs[0].part == 0
    emitted = emit_conll(docs)
    assert emitted.startswith("#begin document (d); part 000\n")
    assert emitted.rstrip().endswith("#end document")


def test_sentence_breaks_increment_sent_id():
    text = lines("d 0 0 a NN -", "", "d 0 0 b NN -")
    (doc,) = parse_conll(text)
    assert [t.sent_id for t in doc.tokens] == [0, 1]


def test_tokens_have_word_and_pos():
    (doc,) = parse_conll(lines("d 0 0 Tom NNP -"))
    assert doc.tokens[0].word == "Tom"
    assert doc.tokens[0].pos == "NNP"
    assert doc.tokens[0].head is None


def test_multiple_documents_split_on_id_and_part():
    text = lines("a 0 0 x NN (0)", "a 1 0 x NN -", "b 0 0 x NN -")
    docs = parse_conll(text)
    assert [(d.doc_id, d.part) for d in docs] == [("a", 0), ("a", 1),
                                                  ("b", 0)]


def test_unbalanced_open_names_line():
    with pytest.raises(ParseError, match="line 1"):
        parse_conll(lines(*doc_lines(["(3", "-"])))


def test_close_without_open_names_line():
    with pytest.raises(ParseError, match="line 2"):
        parse_conll(lines(*doc_lines(["-", "7)"])))


def test_non_integer_cluster_id_rejected():
    with pytest.raises(ParseError, match="coreference entry"):
        parse_conll(lines(*doc_lines(["(x)"])))


def test_ragged_columns_rejected():
    text = lines("d 0 0 w NN extra -", "d 0 1 w NN -")
    with pytest.raises(ParseError, match="ragged"):
        parse_conll(text)


def test_too_few_columns_rejected():
    with pytest.raises(ParseError, match="columns"):
        parse_conll(lines("d 0 0 w -"))


def test_duplicate_document_block_rejected():
    text = lines("a 0 0 x NN -", "b 0 0 x NN -", "a 0 0 x NN -")
    with pytest.raises(ParseError, match="duplicate"):
        parse_conll(text)


def test_custom_column_layout():
    config = ColumnConfig(doc_col=1, part_col=0, wordnum_col=2, word_col=4,
                          pos_col=3, coref_col=5)
    (doc,) = parse_conll(lines("0 d 0 NN word (0)"), config)
    assert doc.doc_id == "d"
    assert doc.tokens[0].word == "word"
    assert parse_conll(emit_conll([doc], config), config) == [doc]


def test_emit_no_clusters_is_all_dashes():
    doc = Document("d", 0, tuple(random_tokens(random.Random(0), 4,
                                               with_heads=False)))
    assert coref_cells(doc) == ["-", "-", "-", "-"]


def test_emit_unit_mention():
    doc = Document("d", 0, tuple(random_tokens(random.Random(0), 3,
                                               with_heads=False)),
                   ((MentionSpan(1, 2),),))
    assert coref_cells(doc) == ["-", "(0)", "-"]


def test_emit_orders_closes_units_opens():
    doc = Document("d", 0, tuple(random_tokens(random.Random(0), 4,
                                               with_heads=False)),
                   ((MentionSpan(0, 2),), (MentionSpan(1, 2),),
                    (MentionSpan(1, 4),)))
    assert coref_cells(doc)[1] == "0)|(1)|(2"


def test_emit_same_cluster_same_start_wider_first():
    doc = Document("d", 0, tuple(random_tokens(random.Random(0), 4,
                                               with_heads=False)),
                   ((MentionSpan(0, 2), MentionSpan(0, 4)),))
    assert coref_cells(doc)[0] == "(0|(0"
    assert parse_conll(emit_conll([doc])) == [doc]


def test_emit_out_of_bounds_span_rejected():
    doc = Document("d", 0, tuple(random_tokens(random.Random(0), 2,
                                               with_heads=False)),
                   ((MentionSpan(0, 5), MentionSpan(1, 2)),))
    with pytest.raises(ValidationError, match="out of bounds"):
        emit_conll([doc])


def test_singleton_cluster_warns_on_parse():
    with pytest.warns(SingletonClusterWarning):
        parse_conll(lines(*doc_lines(["(0)", "-"])))


def test_parse_never_yields_empty_cluster():
    rng = random.Random(7)
    for _ in range(50):
        doc = conll_doc(rng, "d")
        for parsed in parse_conll(emit_conll([doc])):
            assert all(len(c) >= 1 for c in parsed.clusters)


@settings(max_examples=150)
@given(st.integers(0, 2**32 - 1))
def test_round_trip_identity_and_byte_stability(seed):
    rng = random.Random(seed)
    docs = [conll_doc(rng, f"doc/{i}", part=rng.randrange(2))
            for i in range(rng.randint(1, 3))]
    seen = set()
    docs = [d for d in docs
            if (key := (d.doc_id, d.part)) not in seen and not seen.add(key)]
    text = emit_conll(docs)
    parsed = parse_conll(text)
    assert parsed == docs
    again = emit_conll(parsed)
    assert again == text
    assert coref_column(again) == coref_column(text)
