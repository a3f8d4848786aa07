"""Sequence- and character-level evaluation of recognition output.

Line metrics are exact-match accuracy and 1-NED (one minus the Levenshtein
distance normalized by the longer string).  Character metrics pair ground
truth and prediction through an optimal edit alignment: a ground-truth
character is correct iff its aligned op is a match, and its tree-similarity
contribution is char_sim for matches/substitutions and 0 for deletions.
Insertions only affect the line metrics.  Character results are bucketed by
decomposition-tree size (rssl) and, when a frequency map is supplied, by
training-corpus occurrence count (occn).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from . import _kernels
from .errors import DuplicateEntry, EmptyCorpus, MalformedLine, MissingId
from .table import DecompositionTable
from .tree import rssl
from .treesim import char_sim

MATCH = "match"
SUBSTITUTE = "substitute"
DELETE = "delete"
INSERT = "insert"

RSSL_BUCKETS = ("simple", "sub_complex", "complex")
OCCN_BUCKETS = ("head", "mid", "low", "tail")


@dataclass(frozen=True)
class EditOp:
    """One alignment step; indices refer to the ground truth and prediction."""

    kind: str
    gt_index: int | None = None
    pred_index: int | None = None


def levenshtein(a: str, b: str) -> int:
    """Unit-cost edit distance over Unicode scalar values."""
    return _kernels.distance(_kernels.encode(a), _kernels.encode(b))


def _ned_similarity(gt: str, pred: str) -> Fraction:
    if not gt and not pred:
        return Fraction(1)
    return 1 - Fraction(levenshtein(gt, pred), max(len(gt), len(pred)))


def one_minus_ned(gt: str, pred: str) -> float:
    """1 - distance/max(len); two empty strings score 1."""
    return float(_ned_similarity(gt, pred))


def align(gt: str, pred: str) -> list[EditOp]:
    """One optimal-cost alignment via traceback.

    Ties at equal cost resolve match/substitute first, then delete, then
    insert, so the result is deterministic.
    """
    d = _kernels.matrix(_kernels.encode(gt), _kernels.encode(pred))
    i, j = len(gt), len(pred)
    ops: list[EditOp] = []
    while i > 0 or j > 0:
        if i > 0 and j > 0:
            cost = 0 if gt[i - 1] == pred[j - 1] else 1
            if d[i, j] == d[i - 1, j - 1] + cost:
                ops.append(EditOp(MATCH if cost == 0 else SUBSTITUTE, i - 1, j - 1))
                i -= 1
                j -= 1
                continue
        if i > 0 and d[i, j] == d[i - 1, j] + 1:
            ops.append(EditOp(DELETE, i - 1, None))
            i -= 1
            continue
        ops.append(EditOp(INSERT, None, j - 1))
        j -= 1
    ops.reverse()
    return ops


@dataclass(frozen=True)
class BucketSpec:
    """Boundaries for the complexity (rssl) and frequency (occn) breakdowns.

    rssl: simple <= rssl_simple_max < sub_complex < rssl_complex_min <= complex.
    occn: head >= occn_head_min > mid >= occn_mid_min > low >= occn_low_min > tail.
    """

    rssl_simple_max: int = 4
    rssl_complex_min: int = 7
    occn_head_min: int = 100
    occn_mid_min: int = 50
    occn_low_min: int = 20

    def __post_init__(self):
        if not 1 <= self.rssl_simple_max < self.rssl_complex_min:
            raise ValueError("need 1 <= rssl_simple_max < rssl_complex_min")
        if not 0 < self.occn_low_min < self.occn_mid_min < self.occn_head_min:
            raise ValueError("need 0 < occn_low_min < occn_mid_min < occn_head_min")


DEFAULT_BUCKETS = BucketSpec()


def bucket_rssl(length: int, spec: BucketSpec = DEFAULT_BUCKETS) -> str:
    """Complexity bucket for a tree of ``length`` nodes."""
    if length < 1:
        raise ValueError("rssl is at least 1")
    if length <= spec.rssl_simple_max:
        return "simple"
    if length < spec.rssl_complex_min:
        return "sub_complex"
    return "complex"


def bucket_occn(count: int, spec: BucketSpec = DEFAULT_BUCKETS) -> str:
    """Frequency bucket for a character seen ``count`` times in training."""
    if count < 0:
        raise ValueError("occurrence count is non-negative")
    if count >= spec.occn_head_min:
        return "head"
    if count >= spec.occn_mid_min:
        return "mid"
    if count >= spec.occn_low_min:
        return "low"
    return "tail"


class _BucketAcc:
    __slots__ = ("count", "correct", "sim_sum", "sim_count")

    def __init__(self):
        self.count = 0
        self.correct = 0
        self.sim_sum = Fraction(0)
        self.sim_count = 0

    def add(self, correct: bool, sim: Fraction | None) -> None:
        self.count += 1
        self.correct += correct
        if sim is not None:
            self.sim_sum += sim
            self.sim_count += 1

    def as_dict(self) -> dict:
        return {
            "count": self.count,
            "correct": self.correct,
            "accuracy": self.correct / self.count if self.count else None,
            "mean_treesim": float(self.sim_sum / self.sim_count) if self.sim_count else None,
        }


@dataclass
class EvalReport:
    """Aggregate evaluation results; to_dict() gives the JSON layout."""

    line_count: int
    line_correct: int
    line_accuracy: float
    mean_one_minus_ned: float
    char_count: int
    char_correct: int
    char_accuracy: float | None
    mean_treesim: float | None
    treesim_scope: str
    rssl_buckets: dict[str, dict]
    occn_buckets: dict[str, dict] | None
    missing_ids: list[str]

    def to_dict(self) -> dict:
        return {
            "line_count": self.line_count,
            "line_correct": self.line_correct,
            "line_accuracy": self.line_accuracy,
            "mean_one_minus_ned": self.mean_one_minus_ned,
            "char_count": self.char_count,
            "char_correct": self.char_correct,
            "char_accuracy": self.char_accuracy,
            "mean_treesim": self.mean_treesim,
            "treesim_scope": self.treesim_scope,
            "rssl_buckets": self.rssl_buckets,
            "occn_buckets": self.occn_buckets,
            "missing_ids": self.missing_ids,
        }


def evaluate(gt: Mapping[str, str], pred: Mapping[str, str],
             table: DecompositionTable | None = None, *,
             occn: Mapping[str, int] | None = None,
             buckets: BucketSpec = DEFAULT_BUCKETS,
             strict: bool = False,
             treesim_scope: str = "all") -> EvalReport:
    """Score predictions against ground truth, both keyed by sample id.

    Ground-truth ids missing from ``pred`` count as empty predictions and
    are listed in the report, unless ``strict`` is set, in which case
    MissingId is raised.  ``treesim_scope`` picks the mean-similarity
    denominator: "all" covers every ground-truth character (deletions
    score 0), "aligned" restricts to matched/substituted pairs.

    Samples are processed in sorted id order, so the report is identical
    for identical inputs.
    """
    if treesim_scope not in ("all", "aligned"):
        raise ValueError(f"treesim_scope must be 'all' or 'aligned', got {treesim_scope!r}")
    if table is None:
        table = DecompositionTable()
    ids = sorted(gt)
    if not ids:
        raise EmptyCorpus("no ground-truth samples")
    missing = sorted(k for k in ids if k not in pred)
    if missing and strict:
        shown = ", ".join(repr(m) for m in missing[:5])
        raise MissingId(f"{len(missing)} sample id(s) have no prediction: {shown}")

    line_correct = 0
    ned_sum = Fraction(0)
    total = _BucketAcc()
    rssl_acc = {name: _BucketAcc() for name in RSSL_BUCKETS}
    occn_acc = {name: _BucketAcc() for name in OCCN_BUCKETS} if occn is not None else None
    rssl_cache: dict[str, int] = {}
    sim_cache: dict[tuple[str, str], Fraction] = {}

    for sid in ids:
        gt_text = gt[sid]
        pred_text = pred.get(sid, "")
        line_correct += gt_text == pred_text
        ned_sum += _ned_similarity(gt_text, pred_text)
        for op in align(gt_text, pred_text):
            if op.kind == INSERT:
                continue
            gt_char = gt_text[op.gt_index]
            correct = op.kind == MATCH
            if correct:
                sim = Fraction(1)
            elif op.kind == SUBSTITUTE:
                pair = (gt_char, pred_text[op.pred_index])
                sim = sim_cache.get(pair)
                if sim is None:
                    sim = char_sim(*pair, table)
                    sim_cache[pair] = sim
            else:  # deletion: no aligned prediction
                sim = Fraction(0) if treesim_scope == "all" else None

            length = rssl_cache.get(gt_char)
            if length is None:
                length = rssl(table.lookup(gt_char))
                rssl_cache[gt_char] = length
            total.add(correct, sim)
            rssl_acc[bucket_rssl(length, buckets)].add(correct, sim)
            if occn_acc is not None:
                occn_acc[bucket_occn(occn.get(gt_char, 0), buckets)].add(correct, sim)

    n = len(ids)
    return EvalReport(
        line_count=n,
        line_correct=line_correct,
        line_accuracy=line_correct / n,
        mean_one_minus_ned=float(ned_sum / n),
        char_count=total.count,
        char_correct=total.correct,
        char_accuracy=total.correct / total.count if total.count else None,
        mean_treesim=float(total.sim_sum / total.sim_count) if total.sim_count else None,
        treesim_scope=treesim_scope,
        rssl_buckets={name: acc.as_dict() for name, acc in rssl_acc.items()},
        occn_buckets=(
            {name: acc.as_dict() for name, acc in occn_acc.items()}
            if occn_acc is not None else None
        ),
        missing_ids=missing,
    )


def read_corpus_tsv(path) -> dict[str, str]:
    """Read ``<id><TAB><text>`` lines into an id -> text mapping.

    Only the first tab separates the fields, so text may contain tabs.
    Blank lines are skipped; duplicate ids are an error.
    """
    out: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.rstrip("\n")
            if not line:
                continue
            fields = line.split("\t", 1)
            if len(fields) != 2:
                raise MalformedLine(f"{path}:{lineno}: expected <id><TAB><text>")
            sid, text = fields
            if sid in out:
                raise DuplicateEntry(f"{path}:{lineno}: duplicate sample id {sid!r}")
            out[sid] = text
    return out
