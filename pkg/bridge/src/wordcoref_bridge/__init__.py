"""Offline exporter of antecedent scores for the wordcoref toolkit.

Runs an encoder over jsonlines documents and writes score-matrix and
boundary-score files in the toolkit's wire formats.  The bridge is
write-only glue: clustering, span selection, and scoring all stay in
the consuming toolkit.
"""

__version__ = "0.1.0"

from .config import BridgeConfig
from .encoders import EncoderError, HashedEncoder, get_encoder
from .export import ExportReport, export_scores

__all__ = ["BridgeConfig", "EncoderError", "ExportReport", "HashedEncoder",
           "export_scores", "get_encoder", "__version__"]
