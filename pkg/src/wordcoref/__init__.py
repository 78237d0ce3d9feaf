"""Word-level coreference toolkit.

Corpus formats (CoNLL-2012 coreference columns and a jsonlines document
schema), head-word selection (baseline and conjunction-aware rules),
span-to-word decomposition with collision reporting, antecedent-score
clustering inference, span reconstruction, and the standard coreference
metrics (MUC, B-cubed, CEAF with phi-4).
"""

__version__ = "0.1.0"
SCHEMA_VERSION = "1"

from .clustering import (ClusterPartition, MatrixKind, ScoreMatrix, combine,
                         emit_score_matrices, infer_links, links_to_partition,
                         make_matrix, make_partition, parse_score_matrices,
                         prune_topk)
from .conll import ColumnConfig, emit_conll, parse_conll
from .documents import Document, MentionSpan, Token, make_document, validate_document
from .errors import ParseError, SingletonClusterWarning, ToolkitError, ValidationError
from .headwords import (AppliedRule, ConjunctionReport, FallbackReason,
                        HeadwordAssignment, HeadwordRule, analyze_conjunction,
                        baseline_headword, caw_headword, select_headword)
from .jsonl import emit_jsonlines, parse_jsonlines
from .metrics import (CorefScore, CorpusScorer, ScoreTriple, b_cubed,
                      ceaf_phi4, conll_average, muc)
from .spans import (BoundaryScores, emit_boundaries, oracle_boundaries,
                    parse_boundaries, select_span)
from .wordlevel import (Collision, ConflictReport, WordLevelDoc, build_wl,
                        corpus_stats, reconstruct_spans)

__all__ = [
    "__version__", "SCHEMA_VERSION",
    "AppliedRule", "BoundaryScores", "ClusterPartition", "Collision",
    "ColumnConfig", "ConflictReport", "ConjunctionReport", "CorefScore",
    "CorpusScorer", "Document", "FallbackReason", "HeadwordAssignment",
    "HeadwordRule", "MatrixKind", "MentionSpan", "ParseError", "ScoreMatrix",
    "ScoreTriple", "SingletonClusterWarning", "Token", "ToolkitError",
    "ValidationError", "WordLevelDoc",
    "analyze_conjunction", "b_cubed", "baseline_headword", "build_wl",
    "caw_headword", "ceaf_phi4", "combine", "conll_average", "corpus_stats",
    "emit_boundaries", "emit_conll", "emit_jsonlines", "emit_score_matrices",
    "infer_links", "links_to_partition", "make_document", "make_matrix",
    "make_partition", "muc", "oracle_boundaries", "parse_boundaries",
    "parse_conll", "parse_jsonlines", "parse_score_matrices", "prune_topk",
    "reconstruct_spans", "select_headword", "select_span",
    "validate_document",
]
