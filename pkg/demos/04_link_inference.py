"""Antecedent-score inference: prune, combine, link, cluster.

Scores arrive as sparse rows of (antecedent, score) pairs.  Coarse
scores are pruned to each word's top-k candidates, fine scores are added
on that support, and each word links to its best antecedent when the
score beats the no-antecedent threshold.  Links close into clusters.
"""
from wordcoref import (MatrixKind, combine, infer_links, links_to_partition,
                       make_matrix, prune_topk)

n = 8
coarse = make_matrix(n, {
    3: [(0, 1.2), (1, 0.4), (2, -0.3)],
    5: [(0, 0.2), (3, 0.9), (4, 0.1)],
    7: [(2, 0.5), (5, 0.8), (6, -1.0)],
}, MatrixKind.COARSE)

pruned = prune_topk(coarse, 2)
print("top-2 pruned rows:")
for i in sorted(pruned.rows):
    print(f"  word {i}: {list(pruned.row(i))}")

fine = make_matrix(n, {
    3: [(0, 0.3), (1, 1.5)],
    5: [(3, 0.4)],
    7: [(5, -2.0), (2, 0.1)],
}, MatrixKind.FINE, k=2)
total = combine(pruned, fine)
print("\ncombined (coarse + fine) rows:")
for i in sorted(total.rows):
    print(f"  word {i}: {list(total.row(i))}")

links = infer_links(total, dummy=0.0)
print(f"\nlinks above the dummy threshold: {links}")
partition = links_to_partition(n, links)
print(f"clusters: {[sorted(c) for c in partition]}")

# A head-word collision at inference time: two words pick the same
# antecedent and transitive closure merges their entities.
collided = make_matrix(4, {2: [(0, 5.0)], 3: [(0, 5.0)]},
                       MatrixKind.COMBINED)
merged = links_to_partition(4, infer_links(collided, 0.0))
print(f"\ncolliding links {infer_links(collided, 0.0)} "
      f"merge into {[sorted(c) for c in merged]}")
