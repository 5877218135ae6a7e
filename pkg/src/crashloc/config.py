"""Run configuration shared by the CLI, the pipeline, and the evaluation harness."""
from __future__ import annotations

import json
from dataclasses import dataclass, fields
from pathlib import Path

from .errors import SchemaError

# Package prefixes treated as Android framework code when splitting traces.
DEFAULT_FRAMEWORK_PREFIXES = (
    "android.",
    "androidx.",
    "java.",
    "javax.",
    "kotlin.",
    "kotlinx.",
    "com.android.",
    "dalvik.",
)


@dataclass(frozen=True)
class Config:
    """Tunables for the whole pipeline.

    ``chi2_ratio`` is the fraction of vocabulary words kept after feature
    selection, ``nb_smoothing`` the additive smoothing of the categorizer,
    ``links_depth`` the call-chain depth for the linkage check, ``kfold_k``
    and ``seed`` the cross-validation split parameters.
    """

    framework_prefixes: tuple[str, ...] = DEFAULT_FRAMEWORK_PREFIXES
    chi2_ratio: float = 0.5
    nb_smoothing: float = 1.0
    links_depth: int = 5
    kfold_k: int = 5
    seed: int = 0

    def __post_init__(self):
        if not (0.0 < self.chi2_ratio <= 1.0):
            raise ValueError(f"chi2_ratio must be in (0, 1], got {self.chi2_ratio}")
        if self.nb_smoothing <= 0:
            raise ValueError(f"nb_smoothing must be > 0, got {self.nb_smoothing}")
        if self.links_depth < 1:
            raise ValueError(f"links_depth must be >= 1, got {self.links_depth}")
        if self.kfold_k < 2:
            raise ValueError(f"kfold_k must be >= 2, got {self.kfold_k}")

    def to_json_obj(self) -> dict:
        return {
            "framework_prefixes": list(self.framework_prefixes),
            "chi2_ratio": self.chi2_ratio,
            "nb_smoothing": self.nb_smoothing,
            "links_depth": self.links_depth,
            "kfold_k": self.kfold_k,
            "seed": self.seed,
        }


def load_config(path: str | Path) -> Config:
    """Read a JSON config file; unknown keys are rejected."""
    try:
        obj = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"config file is not valid JSON: {exc}", "/") from exc
    if not isinstance(obj, dict):
        raise SchemaError("config file must hold a JSON object", "/")
    known = {f.name for f in fields(Config)}
    for key in obj:
        if key not in known:
            raise SchemaError(f"unknown config key {key!r}", f"/{key}")
    if "framework_prefixes" in obj:
        obj["framework_prefixes"] = tuple(obj["framework_prefixes"])
    try:
        return Config(**obj)
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"bad config value: {exc}", "/") from exc
