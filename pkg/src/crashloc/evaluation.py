"""Evaluation harness: bucketing, k-fold cross-validation, Recall@k, MRR.

Each fold trains the vocabulary, feature selection, and categorizer on the
training split, then localizes every test crash twice: once end to end
(Phase 1 prediction picks the locator) and once under perfect
categorization (the true label picks the locator, isolating Phase 2).
Metrics are pooled over all folds. Per-case failures are recorded in the
report, never dropped.

Shuffling uses an explicitly specified PRNG so splits replicate across
implementations: xorshift64* with shift triple (12, 25, 27) and output
multiplier 0x2545F4914F6CDD1D, state seeded as ``seed XOR
0x9E3779B97F4A7C15`` (the constant itself when that is zero), driving a
Fisher-Yates shuffle where ``j = next() mod (i + 1)`` for i from n-1 down
to 1.
"""
from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .appmodel import load_app_model
from .config import Config
from .corpus import LabeledCrash
from .errors import CorpusTooSmall, CrashLocError, EmptySet, LocateError
from .features import build_vocabulary, chi_square_select, vectorize
from .localizer import (
    LocalizationResult,
    locate_category_a,
    locate_category_b,
    locate_category_c,
)
from .nb import CATEGORIES, Category, predict
from .nb import train as train_nb
from .similarity import frame_seq

PROTOCOLS = ("end_to_end", "perfect_categorization")
RECALL_KS = (1, 5, 10)

_SEED_MIX = 0x9E3779B97F4A7C15
_OUT_MULT = 0x2545F4914F6CDD1D
_MASK64 = (1 << 64) - 1


class XorShift64Star:
    """xorshift64* generator; parameters documented in the module docstring."""

    def __init__(self, seed: int):
        self.state = (seed ^ _SEED_MIX) & _MASK64
        if self.state == 0:
            self.state = _SEED_MIX

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x = (x ^ (x << 25)) & _MASK64
        x ^= x >> 27
        self.state = x
        return (x * _OUT_MULT) & _MASK64


def shuffled_indices(n: int, seed: int) -> list[int]:
    """Fisher-Yates permutation of range(n) driven by xorshift64*."""
    rng = XorShift64Star(seed)
    indices = list(range(n))
    for i in range(n - 1, 0, -1):
        j = rng.next_u64() % (i + 1)
        indices[i], indices[j] = indices[j], indices[i]
    return indices


def kfold_indices(n: int, k: int, seed: int) -> list[tuple[list[int], list[int]]]:
    """Seeded shuffle, then k near-equal contiguous test slices."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if n < k:
        raise CorpusTooSmall(f"corpus of {n} cannot be split into {k} folds")
    order = shuffled_indices(n, seed)
    base, extra = divmod(n, k)
    folds = []
    start = 0
    for f in range(k):
        size = base + (1 if f < extra else 0)
        test = order[start : start + size]
        train = order[:start] + order[start + size :]
        folds.append((train, test))
        start += size
    return folds


def kfold_split(items: Sequence, k: int, seed: int) -> list[tuple[list, list]]:
    return [
        ([items[i] for i in train], [items[i] for i in test])
        for train, test in kfold_indices(len(items), k, seed)
    ]


# ---------------------------------------------------------------------------
# Rank metrics
# ---------------------------------------------------------------------------

def recall_at_k(results: Sequence[int | None], k: int) -> float:
    """Fraction of cases whose true location ranks within the top k."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if not results:
        return 0.0
    return sum(1 for r in results if r is not None and r <= k) / len(results)


def mrr(results: Sequence[int | None]) -> float:
    """Mean reciprocal rank; a case with no rank contributes 0."""
    if not results:
        raise EmptySet("MRR of an empty result set is undefined")
    return sum(1.0 / r for r in results if r is not None) / len(results)


# ---------------------------------------------------------------------------
# Bucketing
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Bucket:
    """Crashes sharing an identical framework sub-trace."""

    key: tuple[str, ...]
    members: tuple[LabeledCrash, ...]


def bucketize(corpus: Sequence[LabeledCrash]) -> list[Bucket]:
    groups: dict[tuple[str, ...], list[LabeledCrash]] = {}
    for crash in corpus:
        groups.setdefault(frame_seq(crash.report), []).append(crash)
    return [Bucket(key=key, members=tuple(members)) for key, members in groups.items()]


def score_summary_by_bucket(
    corpus: Sequence[LabeledCrash], results: Sequence[int | None]
) -> dict:
    """Rank metrics treating each bucket as one unit (first member represents)."""
    if len(results) != len(corpus):
        raise ValueError("results must align with the corpus, one rank per crash")
    position = {id(crash): i for i, crash in enumerate(corpus)}
    bucket_ranks = [results[position[id(b.members[0])]] for b in bucketize(corpus)]
    return {
        "buckets": len(bucket_ranks),
        "recall_at": {str(k): recall_at_k(bucket_ranks, k) for k in RECALL_KS},
        "mrr": mrr(bucket_ranks) if bucket_ranks else 0.0,
    }


# ---------------------------------------------------------------------------
# Cross-validated evaluation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EvalReport:
    fold_count: int
    seed: int
    protocol: str
    corpus_size: int
    confusion: dict  # predicted -> actual -> count
    per_category: dict  # category -> {"precision", "recall"}
    accuracy: float
    recall_at: dict  # str(k) -> fraction, for the selected protocol
    mrr: float
    localization: dict  # protocol -> {"per_category": ..., "total": ...}
    case_ranks: dict  # protocol -> per-case rank (or None), corpus order
    failures: tuple

    def to_json_obj(self) -> dict:
        return {
            "fold_count": self.fold_count,
            "seed": self.seed,
            "protocol": self.protocol,
            "corpus_size": self.corpus_size,
            "confusion": self.confusion,
            "per_category": self.per_category,
            "accuracy": self.accuracy,
            "recall_at": self.recall_at,
            "mrr": self.mrr,
            "localization": self.localization,
            "case_ranks": self.case_ranks,
            "failures": list(self.failures),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)


def _locate_for_category(
    category: Category,
    crash: LabeledCrash,
    training_b: list[LabeledCrash],
    training_c: list[LabeledCrash],
    model_cache: dict,
    config: Config,
    fallback_model: Path | None,
) -> LocalizationResult:
    if category is Category.A:
        return locate_category_a(crash.report)
    if category is Category.B:
        model_path = crash.app_model or fallback_model
        if model_path is None:
            raise LocateError("locate", "crash requires an app model but none is available")
        if model_path not in model_cache:
            model_cache[model_path] = load_app_model(model_path)
        return locate_category_b(
            crash.report, model_cache[model_path], training_b, config.links_depth
        )
    return locate_category_c(crash.report, training_c)


def _run_fold(
    corpus: Sequence[LabeledCrash],
    train_idx: list[int],
    test_idx: list[int],
    config: Config,
    fallback_model: Path | None,
) -> list[dict]:
    train = [corpus[i] for i in train_idx]
    vocab = build_vocabulary(train)
    selected = chi_square_select(vocab, train, config.chi2_ratio)
    pairs = [(vectorize(c.report, selected), c.category) for c in train]
    nb_model = train_nb(pairs, config.nb_smoothing, selected)
    training_b = [c for c in train if c.category is Category.B]
    training_c = [c for c in train if c.category is Category.C]
    model_cache: dict = {}

    records = []
    for idx in test_idx:
        crash = corpus[idx]
        predicted, _ = predict(nb_model, vectorize(crash.report, selected))
        record: dict = {"index": idx, "predicted": predicted, "actual": crash.category}
        for protocol, category in (
            ("end_to_end", predicted),
            ("perfect_categorization", crash.category),
        ):
            try:
                result = _locate_for_category(
                    category, crash, training_b, training_c, model_cache, config,
                    fallback_model,
                )
                record[protocol] = {"rank": result.rank_of(crash.true_location)}
            except CrashLocError as exc:
                record[protocol] = {
                    "rank": None,
                    "error": {
                        "phase": getattr(exc, "phase", "locate"),
                        "error": type(exc).__name__,
                        "message": str(exc),
                    },
                }
        records.append(record)
    return records


def _rank_block(ranks_by_category: dict) -> dict:
    all_ranks = [r for ranks in ranks_by_category.values() for r in ranks]
    per_category = {}
    for category in CATEGORIES:
        ranks = ranks_by_category.get(category, [])
        per_category[category.value] = {
            "cases": len(ranks),
            "recall_at": {str(k): recall_at_k(ranks, k) for k in RECALL_KS},
            "mrr": mrr(ranks) if ranks else 0.0,
        }
    return {
        "per_category": per_category,
        "total": {
            "cases": len(all_ranks),
            "recall_at": {str(k): recall_at_k(all_ranks, k) for k in RECALL_KS},
            "mrr": mrr(all_ranks) if all_ranks else 0.0,
        },
    }


def evaluate(
    corpus: Sequence[LabeledCrash],
    config: Config,
    fallback_model: str | Path | None = None,
    jobs: int = 1,
    protocol: str = "end_to_end",
) -> EvalReport:
    """k-fold cross-validated evaluation of the whole pipeline.

    ``protocol`` selects which localization variant feeds the top-level
    recall/MRR fields; both variants are always present in the report.
    ``fallback_model`` is used for crashes that carry no app-model path.
    """
    if protocol not in PROTOCOLS:
        raise ValueError(f"protocol must be one of {PROTOCOLS}, got {protocol!r}")
    fallback = Path(fallback_model) if fallback_model else None
    folds = kfold_indices(len(corpus), config.kfold_k, config.seed)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_run_fold, corpus, train, test, config, fallback)
                for train, test in folds
            ]
            fold_records = [f.result() for f in futures]
    else:
        fold_records = [
            _run_fold(corpus, train, test, config, fallback) for train, test in folds
        ]

    records = sorted((r for fold in fold_records for r in fold), key=lambda r: r["index"])

    confusion = {p.value: {a.value: 0 for a in CATEGORIES} for p in CATEGORIES}
    for record in records:
        confusion[record["predicted"].value][record["actual"].value] += 1

    per_category = {}
    for category in CATEGORIES:
        c = category.value
        row_total = sum(confusion[c].values())
        col_total = sum(confusion[p.value][c] for p in CATEGORIES)
        diag = confusion[c][c]
        per_category[c] = {
            "precision": diag / row_total if row_total else 0.0,
            "recall": diag / col_total if col_total else 0.0,
        }
    accuracy = (
        sum(confusion[c.value][c.value] for c in CATEGORIES) / len(records)
        if records
        else 0.0
    )

    localization = {}
    case_ranks = {}
    failures = []
    for proto in PROTOCOLS:
        ranks_by_category: dict = {}
        for record in records:
            ranks_by_category.setdefault(record["actual"], []).append(
                record[proto]["rank"]
            )
            if "error" in record[proto]:
                failures.append({"index": record["index"], "protocol": proto,
                                 **record[proto]["error"]})
        localization[proto] = _rank_block(ranks_by_category)
        case_ranks[proto] = [record[proto]["rank"] for record in records]

    selected_block = localization[protocol]["total"]
    return EvalReport(
        fold_count=config.kfold_k,
        seed=config.seed,
        protocol=protocol,
        corpus_size=len(corpus),
        confusion=confusion,
        per_category=per_category,
        accuracy=accuracy,
        recall_at=selected_block["recall_at"],
        mrr=selected_block["mrr"],
        localization=localization,
        case_ranks=case_ranks,
        failures=tuple(sorted(failures, key=lambda f: (f["index"], f["protocol"]))),
    )


# ---------------------------------------------------------------------------
# Plain-text tables
# ---------------------------------------------------------------------------

def _format_rank_row(label: str, block: dict) -> str:
    cells = [f"{label:<9}"]
    cases = block["cases"]
    for k in RECALL_KS:
        frac = block["recall_at"][str(k)]
        hits = round(frac * cases) if cases else 0
        cells.append(f"{frac:.2f} ({hits}/{cases})".ljust(16))
    cells.append(f"{block['mrr']:.2f}")
    return "  ".join(cells)


def render_text(report: EvalReport) -> str:
    lines = [
        "Crash localization evaluation",
        f"corpus: {report.corpus_size} crashes | folds: {report.fold_count} | "
        f"seed: {report.seed} | protocol: {report.protocol}",
        "",
        "Categorization (rows = predicted, columns = actual)",
        "             " + "".join(f"{'actual ' + c.value:>10}" for c in CATEGORIES) + f"{'total':>10}",
    ]
    for p in CATEGORIES:
        row = report.confusion[p.value]
        lines.append(
            f"predicted {p.value}  "
            + "".join(f"{row[a.value]:>10}" for a in CATEGORIES)
            + f"{sum(row.values()):>10}"
        )
    lines.append(
        "total        "
        + "".join(
            f"{sum(report.confusion[p.value][a.value] for p in CATEGORIES):>10}"
            for a in CATEGORIES
        )
        + f"{report.corpus_size:>10}"
    )
    lines.append("")
    lines.append("Category   Precision   Recall")
    for c in CATEGORIES:
        stats = report.per_category[c.value]
        lines.append(f"{c.value:<10} {stats['precision']:<11.2f} {stats['recall']:.2f}")
    lines.append(f"accuracy: {report.accuracy:.3f}")

    titles = {
        "perfect_categorization": "Localization under perfect categorization",
        "end_to_end": "Localization end to end",
    }
    for proto in ("perfect_categorization", "end_to_end"):
        block = report.localization[proto]
        lines.append("")
        lines.append(titles[proto])
        header = ["Category "] + [f"Recall@{k}".ljust(16) for k in RECALL_KS] + ["MRR"]
        lines.append("  ".join(header))
        for c in CATEGORIES:
            lines.append(_format_rank_row(c.value, block["per_category"][c.value]))
        lines.append(_format_rank_row("Total", block["total"]))
    lines.append("")
    lines.append(f"failures: {len(report.failures)}")
    for failure in report.failures:
        lines.append(
            f"  case {failure['index']} [{failure['protocol']}] "
            f"{failure['error']}: {failure['message']}"
        )
    return "\n".join(lines) + "\n"
