"""Rebuilding mention spans around coreferent head-words.

Each coreferent word gets start/end boundary scores over its sentence;
the selected span maximizes their sum and must contain the head.  The
selector is local to one head -- it never sees the clustering -- so
nested candidates with close scores stay genuinely ambiguous.
"""
from wordcoref import BoundaryScores, HeadwordRule, build_wl, oracle_boundaries, select_span
from wordcoref.fixtures import demo_docs

doc = demo_docs()[0]           # Tom and Anna are talking . They are ...
print(" ".join(doc.words()), "\n")

# Ambiguity around "Tom": the ends of "Tom" and "Tom and Anna" are near
# ties.  Whichever is scored higher wins; nothing else breaks the tie.
for narrow, wide in ((1.0, 0.9), (0.9, 1.0)):
    b = BoundaryScores(head=0, sent_start=0, sent_end=6,
                       start_scores=(1.0,),
                       end_scores=(narrow, 0.0, wide, 0.0, 0.0, 0.0))
    span = select_span(b)
    print(f"end scores narrow={narrow} wide={wide} -> "
          f"{' '.join(doc.words()[span.start:span.end])!r}")

# With uniform scores the tie-break collapses to the head token alone.
uniform = BoundaryScores(head=2, sent_start=0, sent_end=6,
                         start_scores=(1.0, 1.0, 1.0),
                         end_scores=(1.0, 1.0, 1.0, 1.0))
print(f"uniform scores -> {select_span(uniform)}")

# Gold boundaries reconstruct the annotated span exactly.
wl, _ = build_wl(doc, HeadwordRule.CAW)
for head in sorted(wl.word_to_span):
    b = oracle_boundaries(doc, wl, head)
    span = select_span(b)
    assert span == wl.word_to_span[head]
    print(f"oracle boundaries for head {doc.words()[head]!r} -> "
          f"{' '.join(doc.words()[span.start:span.end])!r}")
