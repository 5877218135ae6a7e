"""Phase-2 localization: one ranking algorithm per crash category.

Category A ranks the developer frames in stack order. Category B infers
the wrongly handled API from the most similar labeled crash and then walks
the app model: for call-in APIs every invoker is scored by its linkage to
the active methods of each stack-frame class, weighted by 1/d where d is
the frame's 1-based distance from the crash method; for callback APIs the
matching non-overridden callbacks of each stack-frame class are appended
in frame order. Category C averages crash similarity per sub-category.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Sequence, Union

from .appmodel import (
    API_KIND_CALL_IN,
    ApiRef,
    AppModel,
    MethodRef,
    active_methods,
    inherits_from,
    invokers_of,
    links,
    non_overridden_callbacks,
)
from .errors import CrashLocError, EmptyPool, LocateError, NoDeveloperFrame, UnknownClass
from .nb import Category, NBModel, predict
from .features import vectorize
from .similarity import crash_similarity, most_similar
from .trace import CrashReport

if TYPE_CHECKING:
    from .corpus import LabeledCrash

logger = logging.getLogger(__name__)


class SubCategory(str, Enum):
    """Fault locations outside the code."""

    MANIFEST = "Manifest"
    HARDWARE = "Hardware"
    ASSET = "Asset"
    RESOURCE = "Resource"
    FIRMWARE = "Firmware"


SUB_CATEGORIES = tuple(SubCategory)

# A ranked location is a developer method (Categories A and B) or a
# sub-category (Category C).
Location = Union[MethodRef, SubCategory]


def location_label(location: Location) -> str:
    if isinstance(location, SubCategory):
        return location.value
    return location.canonical()


@dataclass(frozen=True)
class LocalizationResult:
    predicted_category: Category
    ranked: tuple[tuple[Location, float], ...]
    provenance: dict

    def to_json_obj(self) -> dict:
        return {
            "predicted_category": self.predicted_category.value,
            "ranked": [
                {"location": location_label(loc), "score": score}
                for loc, score in self.ranked
            ],
            "provenance": self.provenance,
        }

    def rank_of(self, true_location: str) -> int | None:
        """1-based rank of the true location, or None when absent."""
        target_method = None
        if "#" in true_location:
            from .appmodel import parse_method_ref

            target_method = parse_method_ref(true_location)
        for position, (loc, _) in enumerate(self.ranked, 1):
            if isinstance(loc, SubCategory):
                if loc.value == true_location:
                    return position
            elif target_method is not None and loc.same_method(target_method):
                return position
        return None


def _require_split(report: CrashReport) -> None:
    if not report.is_split:
        raise ValueError("report is not split; run split_frames first")


def locate_category_a(report: CrashReport) -> LocalizationResult:
    """Developer frames in stack order, scored 1/position."""
    _require_split(report)
    if not report.developer_frames:
        raise NoDeveloperFrame("Category-A localization needs a developer frame")
    ranked = []
    seen = set()
    for position, frame in enumerate(report.developer_frames, 1):
        ref = MethodRef(frame.class_name, frame.method_name)
        if ref.canonical() in seen:
            continue
        seen.add(ref.canonical())
        ranked.append((ref, 1.0 / position))
    return LocalizationResult(
        predicted_category=Category.A,
        ranked=tuple(ranked),
        provenance={"strategy": "stack_order"},
    )


def infer_handled_api(
    report: CrashReport, training_b: Sequence["LabeledCrash"]
) -> tuple[ApiRef, dict]:
    """Wrongly handled API of the most similar Category-B training crash."""
    if not training_b:
        raise EmptyPool("no Category-B training crashes to infer the handled API from")
    for i, crash in enumerate(training_b):
        if crash.api_h is None:
            raise ValueError(f"training crash {i} carries no handled-API label")
    nearest, score = most_similar(report, training_b)
    provenance = {
        "strategy": "nearest_crash",
        "api_h": nearest.api_h.to_json_obj(),
        "similarity": score,
        "training_index": training_b.index(nearest),
        "low_confidence": score == 0.0,
    }
    return nearest.api_h, provenance


def locate_category_b(
    report: CrashReport,
    model: AppModel,
    training_b: Sequence["LabeledCrash"],
    depth: int = 5,
) -> LocalizationResult:
    """Rank out-of-trace developer methods for the inferred handled API.

    Stack-frame classes missing from the app model are skipped with a
    warning rather than failing the whole localization.
    """
    _require_split(report)
    if not report.developer_frames:
        raise NoDeveloperFrame("Category-B localization needs a developer frame")
    api, provenance = infer_handled_api(report, training_b)

    ranked: list[tuple[Location, float]]
    if api.kind == API_KIND_CALL_IN:
        invokers = invokers_of(model, api)
        scores = {s.canonical(): 0.0 for s in invokers}
        for d, frame in enumerate(report.developer_frames, 1):
            try:
                frame_methods = active_methods(model, frame.class_name)
            except UnknownClass:
                logger.warning("skipping frame %s: class not in app model",
                               frame.qualified_name)
                continue
            for s in invokers:
                for am in frame_methods:
                    if links(model, s, am, depth):
                        scores[s.canonical()] += 1.0 / d
        ranked = sorted(
            ((s, scores[s.canonical()]) for s in invokers if scores[s.canonical()] > 0),
            key=lambda pair: -pair[1],
        )
    else:
        ranked = []
        seen = set()
        for d, frame in enumerate(report.developer_frames, 1):
            try:
                callbacks = non_overridden_callbacks(model, frame.class_name)
            except UnknownClass:
                logger.warning("skipping frame %s: class not in app model",
                               frame.qualified_name)
                continue
            for nc in callbacks:
                if not inherits_from(model, nc, api):
                    continue
                suggestion = MethodRef(
                    class_name=frame.class_name,
                    method_name=nc.method_name,
                    signature=nc.signature,
                )
                if suggestion.canonical() in seen:
                    continue
                seen.add(suggestion.canonical())
                ranked.append((suggestion, 1.0 / d))

    return LocalizationResult(
        predicted_category=Category.B,
        ranked=tuple(ranked),
        provenance=provenance,
    )


def locate_category_c(
    report: CrashReport, training_c: Sequence["LabeledCrash"]
) -> LocalizationResult:
    """Rank sub-categories by mean similarity to their training crashes."""
    _require_split(report)
    if not training_c:
        raise EmptyPool("no Category-C training crashes to compare against")
    sums: dict[SubCategory, float] = {}
    counts: dict[SubCategory, int] = {}
    for i, crash in enumerate(training_c):
        if crash.sub_category is None:
            raise ValueError(f"training crash {i} carries no sub-category label")
        score = crash_similarity(report, crash.report)
        sums[crash.sub_category] = sums.get(crash.sub_category, 0.0) + score
        counts[crash.sub_category] = counts.get(crash.sub_category, 0) + 1
    means = {sub: sums[sub] / counts[sub] for sub in sums}
    ranked = tuple(
        (sub, means[sub])
        for sub in sorted(means, key=lambda s: (-means[s], SUB_CATEGORIES.index(s)))
    )
    return LocalizationResult(
        predicted_category=Category.C,
        ranked=ranked,
        provenance={
            "strategy": "subcategory_mean",
            "means": {sub.value: means[sub] for sub in SUB_CATEGORIES if sub in means},
        },
    )


def locate(
    report: CrashReport,
    model: AppModel | None,
    corpus: Sequence["LabeledCrash"],
    nb: NBModel,
    depth: int = 5,
) -> LocalizationResult:
    """Full pipeline for one crash: categorize, then dispatch the locator."""
    _require_split(report)
    if nb.selected_vocab is None:
        raise LocateError("categorize", "model bundle carries no vocabulary")
    try:
        category, _ = predict(nb, vectorize(report, nb.selected_vocab))
    except CrashLocError as exc:
        raise LocateError("categorize", str(exc)) from exc
    try:
        if category is Category.A:
            result = locate_category_a(report)
        elif category is Category.B:
            if model is None:
                raise LocateError("locate", "crash categorized as B but no app model given")
            training_b = [c for c in corpus if c.category is Category.B]
            result = locate_category_b(report, model, training_b, depth)
        else:
            training_c = [c for c in corpus if c.category is Category.C]
            result = locate_category_c(report, training_c)
    except LocateError:
        raise
    except CrashLocError as exc:
        raise LocateError("locate", str(exc)) from exc
    return result
