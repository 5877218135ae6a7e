"""Crash-to-crash similarity over framework sub-trace frame sequences.

Distance is token-level Levenshtein (whole frames are the tokens, compared
for equality only), normalized to a similarity in [0, 1] by the longer
sequence length.
"""
from __future__ import annotations

from typing import TYPE_CHECKING, Sequence

from .errors import EmptyPool
from .trace import CrashReport

if TYPE_CHECKING:
    from .corpus import LabeledCrash


def frame_seq(report: CrashReport) -> tuple[str, ...]:
    """Qualified frame names of the framework sub-trace, topmost first."""
    if report.framework_subtrace is None:
        raise ValueError("report is not split; run split_frames first")
    return tuple(f.qualified_name for f in report.framework_subtrace)


def edit_distance(a: Sequence, b: Sequence) -> int:
    """Levenshtein distance with unit-cost insert/delete/substitute."""
    if len(a) < len(b):
        a, b = b, a
    prev = list(range(len(b) + 1))
    for i, tok_a in enumerate(a, 1):
        cur = [i] + [0] * len(b)
        for j, tok_b in enumerate(b, 1):
            if tok_a == tok_b:
                cur[j] = prev[j - 1]
            else:
                cur[j] = 1 + min(prev[j - 1], prev[j], cur[j - 1])
        prev = cur
    return prev[-1]


def seq_similarity(a: Sequence, b: Sequence) -> float:
    """1 - distance / max length; two empty sequences count as identical."""
    longest = max(len(a), len(b))
    if longest == 0:
        return 1.0
    return 1.0 - edit_distance(a, b) / longest


def crash_similarity(c1: CrashReport, c2: CrashReport) -> float:
    return seq_similarity(frame_seq(c1), frame_seq(c2))


def most_similar(query: CrashReport, pool: Sequence["LabeledCrash"]) -> tuple["LabeledCrash", float]:
    """Pool element with the highest similarity; ties keep the earliest."""
    if not pool:
        raise EmptyPool("cannot pick the most similar crash from an empty pool")
    best, best_score = pool[0], crash_similarity(query, pool[0].report)
    for candidate in pool[1:]:
        score = crash_similarity(query, candidate.report)
        if score > best_score:
            best, best_score = candidate, score
    return best, best_score
