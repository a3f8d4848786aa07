"""Radical vocabulary, per-character target sequences, and loss weights.

Targets are the preorder token sequence of a character's tree, turned into
vocabulary indices, terminated with EOS, and padded with PAD up to a fixed
length.  Weights come in two modes: "naive" gives every data position
weight 1; "treesim" gives position i weight 1 + lambda * w_i where w_i is
the node's tree weight (so per character the data weights sum to
rssl + lambda).  The EOS slot always carries weight 1 and PAD slots 0, so
exported records need no extra masking downstream.

weighted_ce is a reference implementation for validating a trainer's loss:
the standard negative log-likelihood, non-negative and zero exactly when
every positively weighted position is predicted one-hot correct.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DuplicateEntry,
    InvalidDistribution,
    MalformedLine,
    SequenceTooLong,
    ShapeMismatch,
    UnknownToken,
)
from .table import DecompositionTable
from .tree import rssl, to_preorder
from .treesim import tree_weights

PAD_TOKEN = "<pad>"
EOS_TOKEN = "<eos>"
PAD_INDEX = 0
EOS_INDEX = 1


class RadicalVocab:
    """Token-to-index map with PAD=0 and EOS=1 reserved.

    Data tokens occupy indices 2 upward in sorted order, so rebuilding from
    the same table always gives the identical mapping.
    """

    def __init__(self, data_tokens: Iterable[str]):
        ordered = sorted(set(data_tokens))
        for reserved in (PAD_TOKEN, EOS_TOKEN):
            if reserved in ordered:
                raise ValueError(f"data token collides with reserved {reserved!r}")
        self._tokens: tuple[str, ...] = (PAD_TOKEN, EOS_TOKEN, *ordered)
        self._index = {token: i for i, token in enumerate(self._tokens)}

    @property
    def tokens(self) -> tuple[str, ...]:
        return self._tokens

    def index(self, token: str) -> int:
        try:
            return self._index[token]
        except KeyError:
            raise UnknownToken(f"token {token!r} is not in the vocabulary") from None

    def token(self, index: int) -> str:
        return self._tokens[index]

    def encode(self, tokens: Iterable[str]) -> list[int]:
        return [self.index(t) for t in tokens]

    def save(self, path) -> None:
        """Write ``<token><TAB><index>`` lines in index order."""
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            for i, token in enumerate(self._tokens):
                fh.write(f"{token}\t{i}\n")

    @classmethod
    def load(cls, path) -> RadicalVocab:
        pairs: dict[int, str] = {}
        with open(path, encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.rstrip("\n")
                if not line:
                    continue
                fields = line.split("\t")
                if len(fields) != 2:
                    raise MalformedLine(f"{path}:{lineno}: expected <token><TAB><index>")
                token, idx_text = fields
                try:
                    idx = int(idx_text)
                except ValueError:
                    raise MalformedLine(f"{path}:{lineno}: index {idx_text!r} is not an integer") from None
                if idx in pairs:
                    raise DuplicateEntry(f"{path}:{lineno}: duplicate index {idx}")
                pairs[idx] = token
        if sorted(pairs) != list(range(len(pairs))) or len(pairs) < 2:
            raise MalformedLine(f"{path}: indices must be contiguous from 0 and include PAD/EOS")
        if pairs[PAD_INDEX] != PAD_TOKEN or pairs[EOS_INDEX] != EOS_TOKEN:
            raise MalformedLine(f"{path}: index 0 must be {PAD_TOKEN} and index 1 {EOS_TOKEN}")
        vocab = cls.__new__(cls)
        vocab._tokens = tuple(pairs[i] for i in range(len(pairs)))
        vocab._index = {token: i for i, token in enumerate(vocab._tokens)}
        return vocab

    def __contains__(self, token: str) -> bool:
        return token in self._index

    def __len__(self) -> int:
        return len(self._tokens)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RadicalVocab):
            return NotImplemented
        return self._tokens == other._tokens

    def __repr__(self) -> str:
        return f"RadicalVocab({len(self._tokens)} tokens)"


def build_vocab(table: DecompositionTable, extra_tokens: Iterable[str] = ()) -> RadicalVocab:
    """Vocabulary over the table's token inventory plus PAD/EOS.

    ``extra_tokens`` admits tokens outside the table, e.g. the fallback
    leaf symbols of untabulated characters in an export charset.
    """
    return RadicalVocab(table.radical_inventory() | set(extra_tokens))


def radical_weights(char: str, table: DecompositionTable, mode: str,
                    lam=1) -> list[Fraction]:
    """Per-position loss weights for a character's preorder sequence.

    No EOS or PAD entries; exact rationals (lam is converted exactly, so
    float inputs like 0.5 keep the identities w_treesim - w_naive =
    lam * tree_weights and sum = rssl + lam).
    """
    if mode not in ("naive", "treesim"):
        raise ValueError(f"mode must be 'naive' or 'treesim', got {mode!r}")
    lam = Fraction(lam)
    if lam < 0:
        raise ValueError("lambda must be >= 0")
    tree = table.lookup(char)
    if mode == "naive":
        return [Fraction(1)] * rssl(tree)
    return [1 + lam * w for w in tree_weights(tree)]


@dataclass(frozen=True)
class TargetRecord:
    """One exported character: raw tokens plus fixed-length index/weight rows."""

    char: str
    tokens: tuple[str, ...]
    indices: tuple[int, ...]
    weights: tuple[float, ...]

    def to_json_dict(self) -> dict:
        return {
            "char": self.char,
            "tokens": list(self.tokens),
            "indices": list(self.indices),
            "weights": list(self.weights),
        }


def export_targets(charset: Iterable[str], table: DecompositionTable,
                   max_len: int, mode: str, lam=1,
                   vocab: RadicalVocab | None = None) -> list[TargetRecord]:
    """Build one TargetRecord per character, in charset order.

    Every record's index and weight rows have length ``max_len``: data
    positions, one EOS (weight 1), then PAD (weight 0).  A character whose
    sequence plus EOS exceeds ``max_len`` raises SequenceTooLong.  With no
    explicit ``vocab``, one is built from the table plus the fallback leaf
    tokens the charset needs.
    """
    chars = list(charset)
    if vocab is None:
        vocab = build_vocab(table, extra_tokens=(c for c in chars if c not in table))
    records = []
    for char in chars:
        tokens = to_preorder(table.lookup(char))
        need = len(tokens) + 1
        if need > max_len:
            raise SequenceTooLong(
                f"character {char!r} needs length {need} (rssl {len(tokens)} + EOS) "
                f"but max_len is {max_len}"
            )
        pad = max_len - need
        indices = (*vocab.encode(tokens), EOS_INDEX, *([PAD_INDEX] * pad))
        data_weights = radical_weights(char, table, mode, lam)
        weights = (*(float(w) for w in data_weights), 1.0, *([0.0] * pad))
        records.append(TargetRecord(char, tuple(tokens), indices, weights))
    return records


def write_targets_jsonl(records: Sequence[TargetRecord], path) -> None:
    """One JSON object per line; floats use shortest round-trip decimals,
    so identical inputs always produce identical bytes."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for record in records:
            fh.write(json.dumps(record.to_json_dict(), ensure_ascii=False) + "\n")


def weighted_ce(prob_rows, targets, weights, reduction: str = "sum") -> float:
    """Weighted cross-entropy (negative log-likelihood) of target indices.

    ``prob_rows`` is an (n, vocab) array of per-position distributions,
    each summing to 1 within 1e-6.  Positions with zero weight cost
    nothing, so PAD rows are excluded by their weight alone.  ``reduction``
    "sum" adds the weighted terms; "mean" divides by the number of
    positions with positive weight.
    """
    if reduction not in ("sum", "mean"):
        raise ValueError(f"reduction must be 'sum' or 'mean', got {reduction!r}")
    p = np.asarray(prob_rows, dtype=np.float64)
    t = np.asarray(targets, dtype=np.int64)
    w = np.asarray(weights, dtype=np.float64)
    if t.ndim != 1 or w.ndim != 1:
        raise ShapeMismatch("targets and weights must be 1-D")
    if p.size == 0 and t.size == 0 and w.size == 0:
        return 0.0
    if p.ndim != 2:
        raise ShapeMismatch("prob_rows must be a 2-D array")
    if not (p.shape[0] == t.shape[0] == w.shape[0]):
        raise ShapeMismatch(
            f"lengths disagree: {p.shape[0]} rows, {t.shape[0]} targets, {w.shape[0]} weights"
        )
    if t.size and (t.min() < 0 or t.max() >= p.shape[1]):
        raise ShapeMismatch("target index out of range for the vocabulary axis")
    if np.any(p < 0) or np.any(np.abs(p.sum(axis=1) - 1.0) > 1e-6):
        raise InvalidDistribution("every row must be a probability distribution (sum 1 within 1e-6)")
    if np.any(w < 0):
        raise ValueError("weights must be >= 0")
    mask = w > 0
    if not mask.any():
        return 0.0
    picked = p[np.nonzero(mask)[0], t[mask]]
    with np.errstate(divide="ignore"):
        nll = -np.log(picked)
    total = float(np.dot(w[mask], nll))
    if reduction == "mean":
        total /= int(mask.sum())
    return total
