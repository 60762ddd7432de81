"""Command-line front end: generate, train, describe, eval, curves.

Exit codes: 0 success, 1 usage error, 2 data/model error.  All randomness
flows from --seed; identical invocations produce byte-identical outputs.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import dataset as ds
from . import linguistics, rulebase, training
from .membership import InvalidParameters
from .rulebase import SystemKind

USAGE_ERROR = 1
DATA_ERROR = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="fuzzyverb", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="generate the four-gausses surface as CSV")
    gen.add_argument("--m", type=float, default=10.0)
    gen.add_argument("--sigma", type=float, default=2.0)
    gen.add_argument("--grid-n", type=int, default=21)
    gen.add_argument("--out", required=True)

    tr = sub.add_parser("train", help="train a rule base from a CSV dataset")
    tr.add_argument("--data", required=True)
    tr.add_argument("--kind", choices=["ma", "tsk", "annbfis"])
    tr.add_argument("--rules", type=int)
    tr.add_argument("--epochs", type=int)
    tr.add_argument("--learning-rate", type=float)
    tr.add_argument("--seed", type=int)
    tr.add_argument("--model-out", required=True)
    tr.add_argument("--report-out", help="write per-epoch RMSE as CSV")
    tr.add_argument("--config", help="JSON file with default training options")

    de = sub.add_parser("describe", help="verbalize a trained model")
    de.add_argument("--model", required=True)
    de.add_argument("--data", required=True)
    de.add_argument("--format", choices=["text", "json"], default="text")
    de.add_argument("--out", help="write to a file instead of stdout")

    ev = sub.add_parser("eval", help="RMSE of a model against a dataset")
    ev.add_argument("--model", required=True)
    ev.add_argument("--data", required=True)

    cu = sub.add_parser("curves", help="CSV of premise membership curves")
    cu.add_argument("--model", required=True)
    cu.add_argument("--attr", type=int, default=0, help="attribute index")
    cu.add_argument("--n-points", type=int, default=201)
    cu.add_argument("--out", help="write to a file instead of stdout")
    return parser


_TRAIN_DEFAULTS = {
    "kind": "tsk",
    "rules": 4,
    "epochs": 100,
    "learning_rate": 0.01,
    "seed": 0,
}


def _load_model(path) -> rulebase.RuleBase:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise ds.CsvFormatError(f"cannot read model {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise rulebase.SchemaError(f"{path}: invalid JSON: {exc}") from exc
    return rulebase.from_dict(obj)


def _write_or_print(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_generate(args) -> int:
    data = ds.four_gausses(args.m, args.sigma, args.grid_n)
    ds.save_csv(data, args.out)
    print(f"wrote {data.n_rows} rows to {args.out}")
    print(f"plot hint: gnuplot -e \"set dgrid3d; splot '{args.out}' "
          "using 1:2:3 with lines\"")
    return 0


def _merge_train_options(args) -> dict:
    options = dict(_TRAIN_DEFAULTS)
    if args.config:
        try:
            with open(args.config, "r", encoding="utf-8") as fh:
                loaded = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ds.CsvFormatError(f"cannot read config {args.config}: {exc}") from exc
        if not isinstance(loaded, dict):
            raise ds.CsvFormatError(f"{args.config}: config must be a JSON object")
        unknown = set(loaded) - set(options)
        if unknown:
            raise _UsageError(
                f"unknown config keys: {', '.join(sorted(unknown))}"
            )
        options.update(loaded)
    for key in options:
        flag = getattr(args, key)
        if flag is not None:
            options[key] = flag
    return options


def _cmd_train(args) -> int:
    options = _merge_train_options(args)
    data = ds.load_csv(args.data)
    try:
        cfg = training.TrainConfig(
            kind=SystemKind(str(options["kind"]).upper()),
            n_rules=int(options["rules"]),
            epochs=int(options["epochs"]),
            learning_rate=float(options["learning_rate"]),
            seed=int(options["seed"]),
        )
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    report = training.train(data, cfg)
    for epoch, value in enumerate(report.rmse_per_epoch):
        print(f"epoch {epoch} rmse {value:.12g}")
    with open(args.model_out, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(report.final_rulebase.to_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")
    if args.report_out:
        lines = ["epoch,rmse"]
        lines += [
            f"{epoch},{value!r}"
            for epoch, value in enumerate(report.rmse_per_epoch)
        ]
        with open(args.report_out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")
    return 0


def _cmd_describe(args) -> int:
    rb = _load_model(args.model)
    data = ds.load_csv(args.data)
    if data.n_attributes != rb.input_width:
        raise ds.CsvFormatError(
            f"model expects {rb.input_width} inputs, dataset has {data.n_attributes}"
        )
    st = ds.stats(data)
    input_stats = [st[name] for name in data.attribute_names]
    desc = linguistics.describe_rulebase(rb, input_stats, st[data.output_name])
    if args.format == "text":
        text = linguistics.render_text(desc)
    else:
        text = json.dumps(desc.to_dict(), indent=2, sort_keys=True) + "\n"
    _write_or_print(text, args.out)
    return 0


def _cmd_eval(args) -> int:
    rb = _load_model(args.model)
    data = ds.load_csv(args.data)
    if data.n_attributes != rb.input_width:
        raise ds.CsvFormatError(
            f"model expects {rb.input_width} inputs, dataset has {data.n_attributes}"
        )
    resid = [rb.infer(x) - t for x, t in zip(data.rows, data.outputs)]
    print(f"rmse {float(np.sqrt(np.mean(np.square(resid)))):.12g}")
    return 0


def _curve_domain(rb: rulebase.RuleBase, attr: int) -> tuple[float, float]:
    lo, hi = [], []
    for rule in rb.rules:
        for idx, mf in rule.premise.clauses:
            if idx != attr:
                continue
            params = list(mf.params().values())
            center = sum(params) / len(params)
            span = max(max(abs(p - center) for p in params), 1.0)
            if mf.kind == "gaussian":
                center, span = mf.m, 4.0 * mf.sigma
            lo.append(center - span)
            hi.append(center + span)
    if not lo:
        raise ds.CsvFormatError(f"no premise descriptor uses attribute {attr}")
    return min(lo), max(hi)


def _cmd_curves(args) -> int:
    if args.n_points < 2:
        raise _UsageError("--n-points must be at least 2")
    rb = _load_model(args.model)
    if not 0 <= args.attr < rb.input_width:
        raise _UsageError(
            f"--attr must be in [0, {rb.input_width - 1}], got {args.attr}"
        )
    lo, hi = _curve_domain(rb, args.attr)
    grid = np.linspace(lo, hi, args.n_points)
    descriptors = []
    for r, rule in enumerate(rb.rules, start=1):
        for idx, mf in rule.premise.clauses:
            if idx == args.attr:
                descriptors.append((f"rule_{r}", mf))
    lines = [",".join(["x"] + [name for name, _ in descriptors])]
    for x in grid:
        cells = [repr(float(x))]
        cells += [repr(float(mf.evaluate(float(x)))) for _, mf in descriptors]
        lines.append(",".join(cells))
    _write_or_print("\n".join(lines) + "\n", args.out)
    return 0


_COMMANDS = {
    "generate": _cmd_generate,
    "train": _cmd_train,
    "describe": _cmd_describe,
    "eval": _cmd_eval,
    "curves": _cmd_curves,
}


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    try:
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (
        ds.CsvFormatError,
        rulebase.SchemaError,
        InvalidParameters,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_ERROR


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
