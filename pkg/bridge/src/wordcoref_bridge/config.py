from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class BridgeConfig:
    """What to run and where to write.

    ``model`` is either ``hash:<dim>`` for the deterministic offline
    encoder or a Hugging Face model identifier (requires the ``hf``
    extra).  A JSON sidecar with pooling/model metadata and per-document
    error records is written next to the score file.
    """

    model: str = "hash:64"
    device: str = "cpu"
    top_k: int = 50
    scores_path: str = "scores.jsonl"
    boundaries_path: str = "boundaries.jsonl"

    def __post_init__(self):
        if self.top_k < 1:
            raise ValueError(f"top_k must be >= 1, got {self.top_k}")

    @property
    def meta_path(self) -> str:
        return self.scores_path + ".meta.json"
