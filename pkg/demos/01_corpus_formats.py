"""Corpus formats: CoNLL-2012 coreference columns and jsonlines.

Build a small annotated document, render it in both formats, and parse
each rendering back to show the round trip.
"""
from wordcoref import (MentionSpan, Token, emit_conll, emit_jsonlines,
                       make_document, parse_conll, parse_jsonlines)

doc = make_document(
    "demo/intro", 0,
    tokens=[
        Token(0, "Tom", "NNP", 0, head=2),
        Token(1, "also", "RB", 0, head=2),
        Token(2, "sees", "VBZ", 0, head=None),
        Token(3, "him", "PRP", 0, head=2),
        Token(4, ".", ".", 0, head=2),
    ],
    clusters=[[MentionSpan(0, 1), MentionSpan(3, 4)]],
)

print("CoNLL rendering (last column carries the mention brackets):\n")
conll_text = emit_conll([doc])
print(conll_text)

print("jsonlines rendering (one document per line):\n")
jsonl_text = emit_jsonlines([doc])
print(jsonl_text)

assert parse_conll(conll_text)[0].clusters == doc.clusters
assert parse_jsonlines(jsonl_text) == [doc]
print("both renderings parse back to the same clusters")

# The coreference column survives a parse/emit cycle byte for byte.
assert emit_conll(parse_conll(conll_text)) == conll_text
print("parse -> emit is byte-stable on well-formed input")
