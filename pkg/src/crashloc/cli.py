"""Command-line front end: train models, locate crashes, evaluate, inspect.

Usage:
    crashloc train    --corpus corpus.jsonl --model bundle.json
    crashloc locate   crash.log --model bundle.json --corpus corpus.jsonl \
                      [--app-model model.json] [--pretty]
    crashloc evaluate --corpus corpus.jsonl [--folds 5] [--seed 0] \
                      [--perfect-categorization] [--pretty] [--jobs N]
    crashloc inspect  path

Results go to stdout; diagnostics and machine-readable error JSON go to
stderr. Exit codes: 2 for unusable inputs (missing files, schema errors,
malformed logs), 3 for localization failures. The environment variable
CRASHLOC_CONFIG may point at a JSON config file; flags override it.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from pathlib import Path

from .appmodel import load_app_model
from .config import Config, load_config
from .corpus import load_corpus
from .errors import CrashLocError, LocateError, SchemaError
from .evaluation import bucketize, evaluate, render_text
from .features import SelectedVocabulary, build_vocabulary, chi_square_select, vectorize
from .localizer import locate
from .nb import CATEGORIES, NBModel
from .nb import train as train_nb
from .trace import FrameworkMatcher, parse_and_split

BUNDLE_KIND = "crashloc-model-bundle"

EXIT_INPUT_ERROR = 2
EXIT_LOCATE_ERROR = 3


def _emit_error(exc: Exception) -> None:
    payload = {"error": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, LocateError):
        payload["phase"] = exc.phase
    pointer = getattr(exc, "pointer", "")
    if pointer:
        payload["pointer"] = pointer
    print(json.dumps(payload), file=sys.stderr)


def _resolve_config(args: argparse.Namespace) -> Config:
    config = Config()
    env_path = os.environ.get("CRASHLOC_CONFIG")
    if env_path:
        config = load_config(env_path)
    overrides = {}
    for flag, field in (
        ("chi2_ratio", "chi2_ratio"),
        ("smoothing", "nb_smoothing"),
        ("links_depth", "links_depth"),
        ("folds", "kfold_k"),
        ("seed", "seed"),
    ):
        value = getattr(args, flag, None)
        if value is not None:
            overrides[field] = value
    if overrides:
        config = dataclasses.replace(config, **overrides)
    return config


def _matcher(config: Config) -> FrameworkMatcher:
    return FrameworkMatcher(prefixes=config.framework_prefixes)


def _load_bundle(path: str) -> tuple[NBModel, Config]:
    try:
        obj = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise SchemaError(f"cannot read model bundle: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"model bundle is not valid JSON: {exc}", "/") from exc
    for key in ("selected_vocab", "nb"):
        if key not in obj:
            raise SchemaError(f"model bundle is missing {key!r}", f"/{key}")
    selected = SelectedVocabulary.from_json_obj(obj["selected_vocab"])
    nb_model = NBModel.from_json_obj(obj["nb"], selected)
    config = Config()
    if "config" in obj:
        prefixes = obj["config"].get("framework_prefixes")
        if prefixes:
            config = dataclasses.replace(config, framework_prefixes=tuple(prefixes))
    return nb_model, config


def cmd_train(args: argparse.Namespace) -> int:
    config = _resolve_config(args)
    corpus = load_corpus(args.corpus, _matcher(config))
    vocab = build_vocabulary(corpus)
    selected = chi_square_select(vocab, corpus, config.chi2_ratio)
    pairs = [(vectorize(c.report, selected), c.category) for c in corpus]
    nb_model = train_nb(pairs, config.nb_smoothing, selected)
    bundle = {
        "kind": BUNDLE_KIND,
        "config": config.to_json_obj(),
        "selected_vocab": selected.to_json_obj(),
        "nb": nb_model.to_json_obj(),
    }
    out_path = Path(args.model)
    out_path.write_text(json.dumps(bundle, indent=2) + "\n", encoding="utf-8")
    summary = {
        "documents": len(corpus),
        "vocabulary_size": len(vocab),
        "selected_features": len(selected),
        "priors": {c.value: nb_model.prior(c) for c in CATEGORIES},
        "model": str(out_path),
    }
    print(json.dumps(summary, indent=2))
    return 0


def cmd_locate(args: argparse.Namespace) -> int:
    config = _resolve_config(args)
    nb_model, bundle_config = _load_bundle(args.model)
    # Frames must split the same way they did at training time, so the
    # bundle's prefixes win unless an explicit config file overrides them.
    matcher = _matcher(config) if os.environ.get("CRASHLOC_CONFIG") else _matcher(bundle_config)
    corpus = load_corpus(args.corpus, matcher)
    app_model = load_app_model(args.app_model) if args.app_model else None
    try:
        crash_text = Path(args.crash_log).read_text(encoding="utf-8")
    except OSError as exc:
        raise SchemaError(f"cannot read crash log: {exc}") from exc
    try:
        report = parse_and_split(crash_text, matcher)
    except CrashLocError as exc:
        raise LocateError("parse", str(exc)) from exc
    result = locate(report, app_model, corpus, nb_model, config.links_depth)
    if args.pretty:
        print(f"predicted category: {result.predicted_category.value}")
        if result.ranked:
            width = max(len(_label(loc)) for loc, _ in result.ranked)
            for position, (loc, score) in enumerate(result.ranked, 1):
                print(f"{position:>4}  {_label(loc):<{width}}  {score:.4f}")
        else:
            print("(empty rank)")
    else:
        print(json.dumps(result.to_json_obj(), indent=2))
    return 0


def _label(location) -> str:
    from .localizer import location_label

    return location_label(location)


def cmd_evaluate(args: argparse.Namespace) -> int:
    config = _resolve_config(args)
    corpus = load_corpus(args.corpus, _matcher(config))
    protocol = "perfect_categorization" if args.perfect_categorization else "end_to_end"
    report = evaluate(
        corpus,
        config,
        fallback_model=args.app_model,
        jobs=args.jobs,
        protocol=protocol,
    )
    if args.pretty:
        print(render_text(report), end="")
    else:
        print(report.to_json())
    return 0


def cmd_inspect(args: argparse.Namespace) -> int:
    path = Path(args.path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc

    summary = None
    stripped = text.lstrip()
    if stripped.startswith("{"):
        first_line = stripped.splitlines()[0].strip()
        looks_jsonl = False
        try:
            json.loads(first_line)
            looks_jsonl = "crash_log" in json.loads(first_line)
        except json.JSONDecodeError:
            pass
        if not looks_jsonl:
            try:
                obj = json.loads(text)
            except json.JSONDecodeError as exc:
                raise SchemaError(f"not valid JSON: {exc}", "/") from exc
            summary = _inspect_json_object(obj)
    if summary is None:
        config = _resolve_config(args)
        corpus = load_corpus(path, _matcher(config))
        categories: dict = {}
        subs: dict = {}
        for crash in corpus:
            categories[crash.category.value] = categories.get(crash.category.value, 0) + 1
            if crash.sub_category:
                subs[crash.sub_category.value] = subs.get(crash.sub_category.value, 0) + 1
        summary = {
            "kind": "corpus",
            "crashes": len(corpus),
            "categories": {c.value: categories.get(c.value, 0) for c in CATEGORIES},
            "sub_categories": subs,
            "buckets": len(bucketize(corpus)),
        }
    print(json.dumps(summary, indent=2))
    return 0


def _inspect_json_object(obj: dict) -> dict:
    if obj.get("kind") == BUNDLE_KIND or ("nb" in obj and "selected_vocab" in obj):
        selected = SelectedVocabulary.from_json_obj(obj["selected_vocab"])
        nb_obj = obj["nb"]
        return {
            "kind": "model_bundle",
            "vocabulary_size": len(selected.base),
            "selected_features": len(selected),
            "ratio": selected.ratio,
            "smoothing": nb_obj["smoothing"],
            "priors": nb_obj["priors"],
        }
    if "classes" in obj:
        model = load_app_model_obj(obj)
        return {
            "kind": "app_model",
            "classes": len(model.classes),
            "active_methods": sum(len(c.active_methods) for c in model.classes.values()),
            "non_overridden_callbacks": sum(
                len(c.non_overridden_callbacks) for c in model.classes.values()
            ),
            "invocations": len(model.invocations),
            "param_flows": len(model.param_flows),
            "apis": len(model.apis),
        }
    raise SchemaError("file is neither a corpus, a model bundle, nor an app model", "/")


def load_app_model_obj(obj: dict):
    from .appmodel import app_model_from_json

    return app_model_from_json(obj)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crashloc",
        description="Locate Android framework-specific crashing faults.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_config_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--chi2-ratio", dest="chi2_ratio", type=float, default=None,
                       help="fraction of vocabulary kept after feature selection")
        p.add_argument("--smoothing", dest="smoothing", type=float, default=None,
                       help="additive smoothing of the categorizer")
        p.add_argument("--links-depth", dest="links_depth", type=int, default=None,
                       help="max call-chain depth for the linkage check")
        p.add_argument("--seed", dest="seed", type=int, default=None,
                       help="shuffle seed for cross-validation")

    p_train = sub.add_parser("train", help="train and write a model bundle")
    p_train.add_argument("--corpus", required=True, help="labeled corpus (JSON lines)")
    p_train.add_argument("--model", required=True, help="output bundle path")
    add_config_flags(p_train)
    p_train.set_defaults(func=cmd_train)

    p_locate = sub.add_parser("locate", help="locate one crash")
    p_locate.add_argument("crash_log", help="crash log file")
    p_locate.add_argument("--model", required=True, help="trained model bundle")
    p_locate.add_argument("--corpus", required=True, help="labeled corpus (JSON lines)")
    p_locate.add_argument("--app-model", dest="app_model", default=None,
                          help="static app model JSON for Category-B localization")
    p_locate.add_argument("--pretty", action="store_true",
                          help="print a rank table instead of JSON")
    add_config_flags(p_locate)
    p_locate.set_defaults(func=cmd_locate)

    p_eval = sub.add_parser("evaluate", help="k-fold cross-validated evaluation")
    p_eval.add_argument("--corpus", required=True, help="labeled corpus (JSON lines)")
    p_eval.add_argument("--app-model", dest="app_model", default=None,
                        help="fallback app model for crashes without one")
    p_eval.add_argument("--folds", dest="folds", type=int, default=None,
                        help="number of cross-validation folds")
    p_eval.add_argument("--jobs", dest="jobs", type=int, default=1,
                        help="fold-level parallelism")
    p_eval.add_argument("--pretty", action="store_true",
                        help="print text tables instead of JSON")
    p_eval.add_argument("--perfect-categorization", dest="perfect_categorization",
                        action="store_true",
                        help="score localization under the true categories")
    add_config_flags(p_eval)
    p_eval.set_defaults(func=cmd_evaluate)

    p_inspect = sub.add_parser("inspect", help="summarize a corpus, bundle, or app model")
    p_inspect.add_argument("path", help="file to inspect")
    add_config_flags(p_inspect)
    p_inspect.set_defaults(func=cmd_inspect)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LocateError as exc:
        _emit_error(exc)
        return EXIT_LOCATE_ERROR
    except CrashLocError as exc:
        _emit_error(exc)
        return EXIT_INPUT_ERROR
    except ValueError as exc:
        _emit_error(exc)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
