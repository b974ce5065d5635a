"""Command-line front end: ``cellschur verify | lambda0 | witness``.

Exit codes: 0 success, 1 a check was falsified, 2 usage or bound error.
Every integer in the JSON output is written as a decimal string.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from .cells import all_gram_reports, verify_cell_axioms
from .linalg import ZZ, RingSpec, is_prime
from .monoid import KINDS, MAX_RANK, BoundError, MonoidSpec, SubsetOrdering
from .monoid_cells import MonoidCells, predicted_monoid_lambda0
from .schur import SIDES, SchurCells
from .theory import (
    WITNESS_KINDS,
    InadmissibleError,
    predicted_lambda0,
    witness_bracket,
    witness_partitions,
    witness_sides,
)

OUTPUT_DIR_ENV = "CELLSCHUR_OUTPUT_DIR"
SCHUR_MAX_RANK = 4
EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    mode: str = "monoid"  # monoid | schur
    kind: str = "full"
    r: int = 2
    n: int | None = None
    side: str | None = None
    char: int = 0
    ordering: str = "default"
    witness_kind: str | None = None
    fmt: str = "json"
    output: str | None = None
    max_rank: int | None = None
    jobs: int = 1

    def validate(self):
        if self.r < 1:
            raise UsageError("--r must be positive")
        if self.kind not in KINDS:
            raise UsageError(f"unknown monoid kind {self.kind!r}")
        bound = self.max_rank or (SCHUR_MAX_RANK if self.mode == "schur" else MAX_RANK)
        if bound < 1:
            raise UsageError("bounds must be positive")
        if self.r > min(bound, MAX_RANK):
            raise UsageError(f"r = {self.r} exceeds the size bound {min(bound, MAX_RANK)}")
        if self.n is not None and self.n < self.r:
            raise UsageError(f"n = {self.n} must be at least r = {self.r}")
        if self.char and not is_prime(self.char):
            raise UsageError(f"characteristic {self.char} is neither 0 nor a prime")
        if self.mode == "schur" and self.command != "witness" and self.side is None:
            raise UsageError("--schur needs --side left|right")
        if self.mode == "monoid" and self.side is not None and self.command != "witness":
            raise UsageError("--side only applies to Schur algebras")
        if self.jobs < 1:
            raise UsageError("--jobs must be positive")

    def echo(self) -> dict:
        out = {}
        for k, v in asdict(self).items():
            if k in ("output", "jobs"):
                continue  # must not change the report
            out[k] = str(v) if isinstance(v, int) and not isinstance(v, bool) else v
        return out


def _lam(lam) -> list[str]:
    return [str(x) for x in lam]


def _lam_label(lam) -> str:
    return "(" + ",".join(str(x) for x in lam) + ")"


def _rule(cfg: RunConfig) -> str:
    return "alternate" if cfg.ordering == "alternate" else "paper"


def build_structure(cfg: RunConfig):
    spec = MonoidSpec(cfg.kind, cfg.r)
    if cfg.mode == "schur":
        return SchurCells(spec, cfg.side, cfg.n, ZZ, rule=_rule(cfg))
    # the second monoid ordering groups all points into one nu-block
    ordering = SubsetOrdering(cfg.r, (cfg.r,)) if cfg.ordering == "alternate" else SubsetOrdering(cfg.r)
    return MonoidCells(spec, ZZ, ordering)


def _layers(cs, reports=None, field: RingSpec | None = None) -> list[dict]:
    layers = []
    for lam in cs.poset:
        row = {
            "lambda": _lam(lam),
            "L_size": str(len(cs.left_index(lam))),
            "R_size": str(len(cs.right_index(lam))),
        }
        if reports is not None:
            rep = reports[lam]
            row["gram_rank"] = str(rep.rank(field))
            row["in_lambda0"] = rep.member_of_lambda0(field)
        layers.append(row)
    return layers


def _report(cfg, basis_size, layers, axioms="not-applicable", theorem="not-applicable",
            witnesses="not-applicable", **extra) -> dict:
    rep = {
        "config": cfg.echo(),
        "basis_size": str(basis_size),
        "layers": layers,
        "verdicts": {"axioms": axioms, "theorem": theorem, "witnesses": witnesses},
    }
    rep.update(extra)
    return rep


def cmd_verify(cfg: RunConfig) -> tuple[int, dict]:
    cs = build_structure(cfg)
    result = verify_cell_axioms(cs)
    extra = {"checked": str(result.checked)}
    if result.counterexample is not None:
        extra["counterexample"] = {k: repr(v) for k, v in result.counterexample.items()}
    rep = _report(cfg, cs.dimension, _layers(cs), axioms="pass" if result.passed else "fail", **extra)
    return (EXIT_OK if result.passed else EXIT_MISMATCH), rep


def cmd_lambda0(cfg: RunConfig) -> tuple[int, dict]:
    field = RingSpec.from_char(cfg.char)
    cs = build_structure(cfg)
    reports = all_gram_reports(cs, cfg.jobs)
    computed = [lam for lam in cs.poset if reports[lam].member_of_lambda0(field)]
    if cfg.mode == "schur":
        pred = predicted_lambda0(cfg.kind, cfg.side, cfg.char, cfg.r)
        predicted = list(pred.predicted) if pred.applicable else None
    else:
        predicted = predicted_monoid_lambda0(MonoidSpec(cfg.kind, cfg.r), field)
    if predicted is None:
        theorem, code = "not-applicable", EXIT_OK
    else:
        ok = sorted(predicted) == sorted(computed)
        theorem, code = ("pass" if ok else "fail"), (EXIT_OK if ok else EXIT_MISMATCH)
    rep = _report(
        cfg,
        cs.dimension,
        _layers(cs, reports, field),
        theorem=theorem,
        field=field.label(),
        lambda0=[_lam(lam) for lam in computed],
        predicted=None if predicted is None else [_lam(lam) for lam in cs.poset if lam in set(predicted)],
        dimensions={_lam_label(lam): str(reports[lam].rank(field)) for lam in computed},
        quasi_hereditary_sufficient=len(computed) == len(cs.poset),
    )
    return code, rep


def cmd_witness(cfg: RunConfig) -> tuple[int, dict]:
    kind = cfg.witness_kind
    p = cfg.char or None
    if kind in ("right-p", "left-p") and p is None:
        raise UsageError(f"--kind {kind} needs --p PRIME")
    sides = witness_sides(kind)
    if cfg.side is not None:
        if cfg.side not in sides:
            raise UsageError(f"{kind} witnesses live on the {'/'.join(sides)} side")
        sides = (cfg.side,)
    results = []
    for lam in witness_partitions(kind, cfg.r, p):
        for side in sides:
            try:
                results.append(witness_bracket(kind, lam, cfg.r, p, side, rule=_rule(cfg)))
            except InadmissibleError as exc:
                raise UsageError(str(exc)) from exc
    ok = all(w.agree for w in results)
    rep = _report(
        cfg,
        len(results),
        [],
        witnesses="pass" if ok else "fail",
        results=[w.to_json() for w in results],
    )
    return (EXIT_OK if ok else EXIT_MISMATCH), rep


COMMANDS = {"verify": cmd_verify, "lambda0": cmd_lambda0, "witness": cmd_witness}


# -- output --------------------------------------------------------------------


def render(rep: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rep, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if "results" in rep:
        writer.writerow(["kind", "lambda", "side", "expected", "computed", "field", "agree"])
        for w in rep["results"]:
            writer.writerow([w["kind"], _lam_label(w["lambda"]), w["side"], w["expected"], w["computed"],
                             w["field"], w["agree"]])
    else:
        cols = ["lambda", "L_size", "R_size", "gram_rank", "in_lambda0"]
        writer.writerow(cols)
        for layer in rep["layers"]:
            writer.writerow([_lam_label(layer["lambda"])] + [layer.get(c, "") for c in cols[1:]])
    return buf.getvalue()


def _default_name(cfg: RunConfig) -> str:
    parts = [cfg.command, cfg.mode, cfg.witness_kind or cfg.kind, f"r{cfg.r}"]
    if cfg.side:
        parts.append(cfg.side)
    parts.append(f"char{cfg.char}")
    return "-".join(parts) + "." + cfg.fmt


def write_output(text: str, cfg: RunConfig):
    target = cfg.output
    if target is None and os.environ.get(OUTPUT_DIR_ENV):
        target = str(Path(os.environ[OUTPUT_DIR_ENV]) / _default_name(cfg))
    if target is None or target == "-":
        sys.stdout.write(text)
        return
    path = Path(target)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


# -- argument parsing ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cellschur", description="Cell structures on monoid and Schur algebras.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        if name != "witness":
            algebra = p.add_mutually_exclusive_group(required=True)
            algebra.add_argument("--monoid", choices=KINDS, metavar="KIND", help="monoid algebra Z[M]")
            algebra.add_argument("--schur", choices=KINDS, metavar="KIND", help="generalized Schur algebra of M")
            p.add_argument("--n", type=int, default=None, help="number of parts (Schur only, default r)")
        else:
            p.add_argument("--kind", required=True, choices=WITNESS_KINDS)
        p.add_argument("--r", type=int, required=True)
        p.add_argument("--side", choices=SIDES, default=None)
        field = p.add_mutually_exclusive_group()
        field.add_argument("--char", type=int, default=None, help="0 for QQ, a prime p for GF(p)")
        field.add_argument("--p", type=int, default=None, help="alias for --char p")
        p.add_argument("--ordering", choices=("default", "alternate"), default="default")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--output", default=None, help=f"file to write (default: ${OUTPUT_DIR_ENV} or stdout)")
        p.add_argument("--max-rank", type=int, default=None, help="size bound on r")
        p.add_argument("--jobs", type=int, default=1)
    return parser


def config_from_args(args) -> RunConfig:
    char = args.p if args.p is not None else (args.char or 0)
    if args.command == "witness":
        mode, kind = "schur", "rook" if args.kind == "rook" else "full"
        n = None
    else:
        mode = "schur" if args.schur else "monoid"
        kind = args.schur or args.monoid
        n = args.n
        if mode == "monoid" and n is not None:
            raise UsageError("--n only applies to Schur algebras")
    return RunConfig(
        command=args.command,
        mode=mode,
        kind=kind,
        r=args.r,
        n=n,
        side=args.side,
        char=char,
        ordering=args.ordering,
        witness_kind=getattr(args, "kind", None) if args.command == "witness" else None,
        fmt=args.format,
        output=args.output,
        max_rank=args.max_rank,
        jobs=args.jobs,
    )


def run(cfg: RunConfig) -> tuple[int, dict]:
    cfg.validate()
    start = time.perf_counter()
    try:
        code, rep = COMMANDS[cfg.command](cfg)
    except (BoundError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    rep["timing_ms"] = str(round(1000 * (time.perf_counter() - start)))
    return code, rep


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with 2 on malformed flags
    try:
        cfg = config_from_args(args)
        code, rep = run(cfg)
    except UsageError as exc:
        print(f"cellschur: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    write_output(render(rep, cfg.fmt), cfg)
    return code


if __name__ == "__main__":
    sys.exit(main())
