"""Command-line front end.

Exit codes: 0 pass, 1 violation found, 2 parse or schema error,
3 inconclusive (a search cap was hit).
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import pathlib
import sys
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import __version__
from .algebras import StrictThreeCategory, validate_strict3
from .base import DEFAULT_CAP, FiniteCategory, validate_category
from .counterexample import (
    BraidingError,
    SymmetricInputError,
    WitnessBounds,
    build_bicharacter_category,
    enumerate_strict_doubly_degenerate,
    parse_bicharacter,
    parse_cyclic,
    parse_group,
    witness_counterexample,
)
from .freecat import check_monad_laws_free
from .pasting import check_beck_axioms
from .pseudo import (
    FiniteBicategory,
    IconicTricategory,
    biased_to_unbiased,
    check_bicategory,
    check_iconic_tricategory,
    check_unbiased,
    check_unbiased_icon,
    compare_pastings,
    round_trip_icon,
    strictify,
)
from .report import SearchTooLarge, ValidationReport
from .wgraph import TwoGraph, WGraph

EXIT_PASS, EXIT_VIOLATION, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2, 3
CAP_ENV = "ICONIC_CAP"
KINDS = ("category", "strict3", "bicat", "tricat-iconic", "unbiased")


class InputError(ValueError):
    """The input file or arguments do not parse against the schema."""


@dataclass
class RunConfig:
    command: str
    inputs: list[str] = field(default_factory=list)
    kind: str | None = None
    max_cells: int | None = None
    max_len: int | None = None
    cap: int = DEFAULT_CAP
    fmt: str = "json"
    seed: int = 0
    options: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        for name in ("max_cells", "max_len", "cap"):
            v = getattr(self, name)
            if v is not None and v <= 0:
                raise InputError(f"--{name.replace('_', '-')} must be positive, got {v}")

    def bounds(self, **defaults) -> dict:
        out = {"cap": self.cap}
        for k, v in defaults.items():
            out[k] = getattr(self, k, None) if getattr(self, k, None) is not None else v
        return out


@dataclass
class Outcome:
    code: int
    document: dict
    text: str


def _named(cls):
    return lambda path: (lambda doc: cls.from_json(doc, name=pathlib.Path(path).stem))


def _load(path: str, parse: Callable[[dict], object]):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from exc
    try:
        return parse(doc)
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise InputError(f"{path}: does not match schema ({type(exc).__name__}: {exc})") from exc


def _status(reports: Sequence[ValidationReport]) -> int:
    return EXIT_PASS if all(r.ok for r in reports) else EXIT_VIOLATION


def _envelope(cfg: RunConfig, bounds: dict, code: int, reports: Sequence[ValidationReport] = (),
              extra: dict | None = None) -> dict:
    doc = {
        "tool": "iconic",
        "version": __version__,
        "command": cfg.command,
        "inputs": list(cfg.inputs),
        "bounds": bounds,
        "seed": cfg.seed,
        "status": {EXIT_PASS: "pass", EXIT_VIOLATION: "violation", EXIT_INCONCLUSIVE: "inconclusive"}[code],
        "checked": sum(r.checked for r in reports),
        "reports": [r.to_json() for r in reports],
    }
    if cfg.kind:
        doc["kind"] = cfg.kind
    if extra:
        doc.update(extra)
    return doc


def _text(doc: dict, reports: Sequence[ValidationReport]) -> str:
    bounds = ", ".join(f"{k}={v}" for k, v in doc["bounds"].items())
    lines = [f"iconic {doc['version']} {doc['command']}: {doc['status'].upper()}",
             f"bounds: {bounds}; seed {doc['seed']}; {doc['checked']} instances checked"]
    lines += [str(r) for r in reports]
    return "\n".join(lines)


def _finish(cfg: RunConfig, bounds: dict, reports: list[ValidationReport], extra: dict | None = None) -> Outcome:
    code = _status(reports)
    doc = _envelope(cfg, bounds, code, reports, extra)
    return Outcome(code, doc, _text(doc, reports))


# ---------------------------------------------------------------------------
# commands


def _one_input(cfg: RunConfig) -> str:
    if len(cfg.inputs) != 1:
        raise InputError(f"{cfg.command} expects exactly one input file")
    return cfg.inputs[0]


def run_validate(cfg: RunConfig) -> Outcome:
    path = _one_input(cfg)
    kind = cfg.kind or "category"
    if kind == "category":
        C = _load(path, FiniteCategory.from_json)
        return _finish(cfg, {"cap": cfg.cap}, [validate_category(C)])
    if kind == "strict3":
        S = _load(path, StrictThreeCategory.from_json)
        return _finish(cfg, {"cap": cfg.cap}, [validate_strict3(S)])
    if kind == "bicat":
        B = _load(path, _named(FiniteBicategory)(path))
        return _finish(cfg, {"cap": cfg.cap}, [check_bicategory(B)])
    if kind == "tricat-iconic":
        T = _load(path, _named(IconicTricategory)(path))
        return _finish(cfg, {"cap": cfg.cap}, [check_iconic_tricategory(T)])
    if kind == "unbiased":
        # input is a biased bicategory; its unbiased form up to arity max_len is checked
        B = _load(path, _named(FiniteBicategory)(path))
        bounds = cfg.bounds(max_len=3)
        bracketing = cfg.options.get("bracketing", "left")
        try:
            U = biased_to_unbiased(B, bounds["max_len"], bracketing)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        reports = [check_unbiased(U, max_len=2)]
        if bounds["max_len"] >= 3 and reports[0].ok:
            reports.append(check_unbiased_icon(round_trip_icon(U)))
        return _finish(cfg, {**bounds, "bracketing": bracketing}, reports)
    raise InputError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")


def run_free(cfg: RunConfig) -> Outcome:
    A = _load(_one_input(cfg), WGraph.from_json)
    bounds = cfg.bounds(max_cells=4, max_len=2)
    rep = check_monad_laws_free(A, bounds["max_cells"], max_len=bounds["max_len"])
    return _finish(cfg, bounds, [rep])


def run_distributive(cfg: RunConfig) -> Outcome:
    A = _load(_one_input(cfg), TwoGraph.from_json)
    bounds = cfg.bounds(max_cells=4, max_len=2)
    rep = check_beck_axioms(A, bounds["max_cells"], bounds["max_len"], cap=cfg.cap)
    return _finish(cfg, bounds, [rep])


def run_strictify(cfg: RunConfig) -> Outcome:
    B = _load(_one_input(cfg), _named(FiniteBicategory)(_one_input(cfg)))
    bounds = cfg.bounds(max_len=1)
    samples = cfg.options.get("samples", 50)
    bounds["samples"] = samples
    S = strictify(B, bounds["max_len"])
    reports = [check_bicategory(S, strict=True), compare_pastings(S, samples=samples, seed=cfg.seed)]
    return _finish(cfg, bounds, reports)


def _witness_input(cfg: RunConfig):
    o = cfg.options
    try:
        G = parse_group(o.get("group", "Z3"))
        m = parse_cyclic(o.get("scalars", "Z3"))
        table = parse_bicharacter(o.get("bicharacter", "omega^{ab}"), G, m)
    except (ValueError, KeyError) as exc:
        raise InputError(str(exc)) from exc
    return build_bicharacter_category(G, m, table)


def _witness_bounds(cfg: RunConfig) -> WitnessBounds:
    o = cfg.options
    try:
        return WitnessBounds(cfg.max_cells or 3, o.get("max_three_cells") or 9,
                             o.get("exhaustive_three_cells") or 5, cfg.cap)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def run_witness(cfg: RunConfig) -> Outcome:
    try:
        B = _witness_input(cfg)
        report = witness_counterexample(B, _witness_bounds(cfg))
    except SymmetricInputError as exc:
        raise InputError(str(exc)) from exc
    except BraidingError as exc:
        # the table parses but is not a braiding
        doc = _envelope(cfg, {"cap": cfg.cap}, EXIT_VIOLATION, [exc.report], {"error": str(exc)})
        return Outcome(EXIT_VIOLATION, doc, f"axiom failure: {exc}")
    code = {"conclusive": EXIT_PASS, "inconclusive": EXIT_INCONCLUSIVE}.get(report.status, EXIT_VIOLATION)
    wr = report.to_json()
    doc = _envelope(cfg, dict(wr["bounds"]), code, extra={"witness_report": wr})
    doc["checked"] = wr["axioms"]["checked"] + report.enumeration.candidates
    return Outcome(code, doc, report.to_text())


def run_enumerate(cfg: RunConfig) -> Outcome:
    b = _witness_bounds(cfg)
    s = enumerate_strict_doubly_degenerate(b.max_two_cells, b.max_three_cells, b.exhaustive_three_cells, b.cap)
    if s.non_symmetric or s.validator_disagreements:
        code = EXIT_VIOLATION
    else:
        code = EXIT_PASS if s.complete else EXIT_INCONCLUSIVE
    doc = _envelope(cfg, dataclasses.asdict(b), code, extra={"enumeration": s.to_json()})
    doc["checked"] = s.candidates
    text = "\n".join([
        f"iconic {__version__} enumerate: {doc['status'].upper()}",
        f"bounds: 2-cells <= {b.max_two_cells}, 3-cells <= {b.max_three_cells} "
        f"(exhaustive <= {b.exhaustive_three_cells}), cap {b.cap}",
        f"hom categories: {s.hom_categories} ({s.hom_categories_exhaustive} exhaustive)",
        f"candidate pairs: {s.candidates}; accepted {s.accepted}; symmetric {s.symmetric}",
        "rejected: " + ", ".join(f"{k} {v}" for k, v in sorted(s.rejected.items())),
    ])
    return Outcome(code, doc, text)


COMMANDS: dict[str, Callable[[RunConfig], Outcome]] = {
    "validate": run_validate,
    "free": run_free,
    "distributive-check": run_distributive,
    "strictify": run_strictify,
    "witness": run_witness,
    "enumerate": run_enumerate,
}


def run(cfg: RunConfig) -> Outcome:
    """Dispatch one invocation; never raises for bad input or capped searches."""
    try:
        return COMMANDS[cfg.command](cfg)
    except InputError as exc:
        return Outcome(EXIT_INPUT, {"tool": "iconic", "version": __version__, "command": cfg.command,
                                    "status": "input error", "error": str(exc)}, f"error: {exc}")
    except SearchTooLarge as exc:
        doc = _envelope(cfg, {"cap": cfg.cap}, EXIT_INCONCLUSIVE, extra={"error": str(exc)})
        return Outcome(EXIT_INCONCLUSIVE, doc, f"inconclusive: {exc}")


# ---------------------------------------------------------------------------
# argument parsing


def _positive(s: str) -> int:
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-cells", type=_positive)
    common.add_argument("--max-len", type=_positive)
    common.add_argument("--cap", type=_positive, help=f"search cap (env {CAP_ENV} overrides the default)")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="iconic", description="Finite checks for enriched and iconic structures.")
    p.add_argument("--version", action="version", version=f"iconic {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", parents=[common], help="validate a JSON structure")
    v.add_argument("--kind", choices=KINDS, default="category")
    v.add_argument("--bracketing", choices=("left", "right"), default="left")
    v.add_argument("input")

    for name, helptext in (("free", "free-category monad laws on a W-graph"),
                           ("distributive-check", "Beck axioms for the distributive law on a 2-graph"),
                           ("strictify", "strictify a bicategory and compare pastings")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        if name == "strictify":
            s.add_argument("--samples", type=_positive, default=50)
        s.add_argument("input")

    for name, helptext in (("witness", "run the non-strictifiability witness pipeline"),
                           ("enumerate", "enumerate strict doubly degenerate structures")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("--max-three-cells", type=_positive)
        s.add_argument("--exhaustive-three-cells", type=_positive)
        if name == "witness":
            s.add_argument("--group", default="Z3")
            s.add_argument("--scalars", default="Z3")
            s.add_argument("--bicharacter", default="omega^{ab}")
    return p


def config_from_args(args: argparse.Namespace, env: dict | None = None) -> RunConfig:
    env = os.environ if env is None else env
    cap = args.cap
    if cap is None:
        raw = env.get(CAP_ENV)
        try:
            cap = int(raw) if raw else DEFAULT_CAP
        except ValueError:
            raise InputError(f"{CAP_ENV} must be an integer, got {raw!r}") from None
    options = {k: getattr(args, k) for k in ("bracketing", "samples", "group", "scalars", "bicharacter",
                                             "max_three_cells", "exhaustive_three_cells") if hasattr(args, k)}
    return RunConfig(
        command=args.command,
        inputs=[args.input] if getattr(args, "input", None) else [],
        kind=getattr(args, "kind", None),
        max_cells=args.max_cells,
        max_len=args.max_len,
        cap=cap,
        fmt=args.format,
        seed=args.seed,
        options=options,
    )


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_PASS
    try:
        cfg = config_from_args(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    out = run(cfg)
    if cfg.fmt == "json":
        print(json.dumps(out.document, indent=2, sort_keys=True))
    else:
        print(out.text)
    return out.code


if __name__ == "__main__":
    sys.exit(main())
