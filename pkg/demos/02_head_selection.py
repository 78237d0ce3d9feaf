"""Head-word selection: the baseline rule vs the conjunction-aware rule.

The baseline picks the one token that depends on a word outside the
span.  For a conjoined mention like "Tom and Mary" that token is the
first conjunct, which is also the head of the nested mention "Tom" --
two different entities, one head-word.  The conjunction-aware rule
promotes the coordinating conjunction instead whenever it sits within
one dependency step of the baseline head.
"""
from wordcoref import MentionSpan, analyze_conjunction, baseline_headword, caw_headword
from wordcoref.fixtures import (NESTED_INNER_SPAN, NESTED_OUTER_SPAN,
                                SEQUENTIAL_SPAN, playing_siblings_doc,
                                nested_conjunction_doc,
                                sequential_conjunction_doc)


def show(doc, span, label):
    words = doc.words()
    base = baseline_headword(doc, span)
    caw = caw_headword(doc, span)
    report = analyze_conjunction(doc, span)
    print(f"{label}: {' '.join(words[span.start:span.end])!r}")
    print(f"  baseline head          {words[base.head_index]!r}")
    print(f"  conjunction-aware head {words[caw.head_index]!r} "
          f"({caw.rule.value})")
    print(f"  conjunctions at {list(report.cc_positions)}, "
          f"depths {list(report.depths)}, "
          f"conjoined={report.is_conjoined}, "
          f"sequential={report.is_sequential}")
    print()


fig = playing_siblings_doc()
print(" ".join(fig.words()), "\n")
show(fig, MentionSpan(0, 3), "conjoined mention")
show(fig, MentionSpan(0, 1), "nested mention")

david = nested_conjunction_doc()
print(" ".join(david.words()), "\n")
# Depth 3 disqualifies the conjunction: the outer span keeps "David".
show(david, NESTED_OUTER_SPAN, "relative clause")
show(david, NESTED_INNER_SPAN, "inner conjunction")

seq = sequential_conjunction_doc()
print(" ".join(seq.words()), "\n")
# Two qualifying conjunctions: flagged sequential, left-most one wins.
show(seq, SEQUENTIAL_SPAN, "sequential conjunction")
