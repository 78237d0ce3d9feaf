"""Word encoders: one vector per word of a document."""
from __future__ import annotations

import hashlib

import numpy as np


class EncoderError(Exception):
    """Model loading or encoding failed."""


class HashedEncoder:
    """Deterministic lexical embeddings derived from word hashes.

    Needs no downloads or weights, so it serves as the offline stand-in
    whenever no pretrained checkpoint is available.  Identical words get
    identical vectors, which is exactly the ambiguity a real encoder
    shows for repeated mentions.
    """

    pooling = "none"

    def __init__(self, dim: int = 64, seed: int = 0):
        if dim < 1:
            raise EncoderError(f"embedding dim must be >= 1, got {dim}")
        self.dim = dim
        self.seed = seed

    @property
    def name(self) -> str:
        return f"hash:{self.dim}"

    def _word_vector(self, word: str) -> np.ndarray:
        digest = hashlib.blake2b(word.encode("utf-8"),
                                 person=str(self.seed).encode()).digest()
        rng = np.random.default_rng(int.from_bytes(digest[:8], "little"))
        vec = rng.standard_normal(self.dim)
        return vec / (np.linalg.norm(vec) + 1e-12)

    def encode(self, words: list[str]) -> np.ndarray:
        if not words:
            raise EncoderError("cannot encode an empty document")
        return np.stack([self._word_vector(w) for w in words])


class TransformerEncoder:
    """Contextual embeddings from a pretrained Hugging Face encoder.

    Subtoken vectors are pooled per word by uniform averaging (no
    learned pooling weights are available outside a trained coreference
    checkpoint); the export metadata records that.
    """

    pooling = "uniform"

    def __init__(self, model_name: str, device: str = "cpu"):
        try:
            import torch
            from transformers import AutoModel, AutoTokenizer
        except ImportError as exc:
            raise EncoderError(
                f"transformers/torch not installed ({exc}); install the "
                f"'hf' extra or use a hash:<dim> model") from None
        try:
            self.tokenizer = AutoTokenizer.from_pretrained(model_name)
            self.model = AutoModel.from_pretrained(model_name)
        except Exception as exc:
            raise EncoderError(
                f"cannot load model {model_name!r}: {exc}") from None
        self._torch = torch
        self.device = device
        self.model.to(device)
        self.model.eval()
        self._name = model_name

    @property
    def name(self) -> str:
        return self._name

    def encode(self, words: list[str]) -> np.ndarray:
        if not words:
            raise EncoderError("cannot encode an empty document")
        torch = self._torch
        batch = self.tokenizer(words, is_split_into_words=True,
                               return_tensors="pt", truncation=True)
        word_ids = batch.word_ids(0)
        with torch.no_grad():
            hidden = self.model(
                **{k: v.to(self.device) for k, v in batch.items()}
            ).last_hidden_state[0].cpu().numpy()
        dim = hidden.shape[1]
        sums = np.zeros((len(words), dim))
        counts = np.zeros(len(words))
        for position, word_id in enumerate(word_ids):
            if word_id is not None:
                sums[word_id] += hidden[position]
                counts[word_id] += 1
        if (counts == 0).any():
            missing = [words[i] for i in np.flatnonzero(counts == 0)]
            raise EncoderError(
                f"tokenizer produced no subtokens for {missing!r}")
        vectors = sums / counts[:, None]
        norms = np.linalg.norm(vectors, axis=1, keepdims=True)
        return vectors / (norms + 1e-12)


def get_encoder(model: str, device: str = "cpu"):
    if model.startswith("hash:"):
        try:
            dim = int(model.split(":", 1)[1])
        except ValueError:
            raise EncoderError(f"bad hash encoder spec {model!r}") from None
        return HashedEncoder(dim)
    return TransformerEncoder(model, device)
