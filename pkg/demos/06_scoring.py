"""Coreference evaluation: MUC, B-cubed, CEAF, and their average F1.

Mentions align by exact identity.  Corpus scores accumulate numerators
and denominators across documents before taking the final ratios, which
is not the same thing as averaging per-document scores.
"""
from wordcoref import CorpusScorer, b_cubed, ceaf_phi4, conll_average, muc

key = [{"a", "b", "c"}, {"d", "e"}]
response = [{"a", "b"}, {"c", "d", "e"}]

for name, metric in (("MUC", muc), ("B3", b_cubed), ("CEAF_phi4", ceaf_phi4)):
    t = metric(key, response)
    p, r, f1 = t.as_percent()
    print(f"{name:<10} P={p} R={r} F1={f1}")

score = conll_average(key, response)
print(f"average F1 = {score.avg_f1 * 100:.2f}\n")

# A split cluster: {a,b,c} answered as {a,b} + {c}.
t = muc([{"a", "b", "c"}], [{"a", "b"}, {"c"}])
print(f"split cluster: MUC recall {t.recall:.2f} "
      f"(one of two key links recovered)")

# CEAF aligns clusters one-to-one, so over-merging costs precision.
t = ceaf_phi4([{"a", "b"}, {"c"}], [{"a", "b", "c"}])
print(f"over-merge:    CEAF P={t.precision:.2f} R={t.recall:.2f}\n")

# Corpus-level accumulation across two documents.
scorer = CorpusScorer()
scorer.update([{"a", "b", "c"}], [{"a", "b"}, {"c"}])
scorer.update([{"x", "y"}], [{"x", "y"}])
total = scorer.score()
print(f"two-document corpus: MUC recall {total.muc.recall:.4f} "
      f"(= (1 + 1) / (2 + 1), counts added before the ratio)")
print(f"two-document average F1 = {total.avg_f1 * 100:.2f}")
