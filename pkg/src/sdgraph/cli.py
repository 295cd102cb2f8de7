"""Command-line front end.

Exit codes: 0 success, 1 a verification mismatch, 2 usage or input errors.
Settings resolve as flags > SDGRAPH_* environment > ``--config`` JSON file > defaults.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .budget import DEFAULT_BUDGET
from .formulas import DegenerateCaseWarning, predict
from .graphs import commuting_graph
from .groups import GroupTableError, ingest_cayley_table, sd8n_construct
from .laws import check_laws
from .report import ALL_INVARIANTS, compute_report, dumps, sd_vertex_classes, to_jsonable
from .verify import RunConfig, verify_n


class UsageError(Exception):
    pass


def _positive_n(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text}")
    if n < 1:
        raise argparse.ArgumentTypeError("n must be at least 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sdgraph", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=float, help="seconds per oracle (default 120)")
    common.add_argument("--invariants", help="comma-separated invariant names")
    common.add_argument("--config", type=Path, help="JSON file with budget/jobs/invariants")
    common.add_argument("--no-timing", action="store_true", help="omit elapsed times from output")
    common.add_argument("--out", type=Path, help="write output here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", parents=[common], help="write the group table or commuting graph")
    g.add_argument("--n", type=_positive_n, required=True)
    g.add_argument("--format", choices=("json", "dimacs", "cayley"), default="json")

    pr = sub.add_parser("predict", parents=[common], help="closed-form predictions for one n")
    pr.add_argument("--n", type=_positive_n, required=True)

    c = sub.add_parser("compute", parents=[common], help="run the oracles on Δ(SD_8n) or a graph file")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--n", type=_positive_n)
    src.add_argument("--graph", type=Path, help="JSON graph or DIMACS edge list")

    v = sub.add_parser("verify", parents=[common], help="diff predictions against oracles over a range of n")
    v.add_argument("--n-min", type=_positive_n, required=True)
    v.add_argument("--n-max", type=_positive_n, required=True)
    v.add_argument("--report", type=Path, help="JSON-lines report path")
    v.add_argument("--jobs", type=int, help="worker processes across n")

    gr = sub.add_parser("group", parents=[common], help="invariants and generic laws for a Cayley table")
    gr.add_argument("table", type=Path)
    return p


def resolve_config(args: argparse.Namespace, env=None) -> RunConfig:
    env = os.environ if env is None else env
    file_cfg = {}
    if args.config is not None:
        try:
            file_cfg = json.loads(args.config.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config file: {exc}")

    def pick(flag, env_key, file_key, default, cast):
        if flag is not None:
            return flag
        if env_key in env:
            try:
                return cast(env[env_key])
            except ValueError:
                raise UsageError(f"bad value for {env_key}: {env[env_key]!r}")
        if file_key in file_cfg:
            return cast(file_cfg[file_key])
        return default

    budget = pick(args.budget, "SDGRAPH_BUDGET", "budget", DEFAULT_BUDGET, float)
    jobs = pick(getattr(args, "jobs", None), "SDGRAPH_JOBS", "jobs", 1, int)
    inv = args.invariants if args.invariants is not None else file_cfg.get("invariants")
    if isinstance(inv, str):
        inv = [s.strip() for s in inv.split(",") if s.strip()]
    if inv is not None:
        unknown = sorted(set(inv) - set(ALL_INVARIANTS))
        if unknown:
            raise UsageError(f"unknown invariants: {', '.join(unknown)}")
        inv = tuple(inv)
    if budget <= 0 or jobs < 1:
        raise UsageError("budget must be positive and jobs at least 1")
    return RunConfig(budget=budget, jobs=jobs, invariants=inv, timing=not args.no_timing)


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        try:
            out.write_text(text)
        except OSError as exc:
            raise UsageError(f"cannot write {out}: {exc}")


def cmd_generate(args, cfg: RunConfig) -> int:
    g = sd8n_construct(args.n)
    if args.format == "cayley":
        text = dumps(g.to_document()) + "\n"
    else:
        graph = commuting_graph(g)
        text = graph.to_dimacs() if args.format == "dimacs" else dumps(graph.to_json()) + "\n"
    _emit(text, args.out)
    return 0


def prediction_document(n: int) -> dict:
    pred = predict(n)
    return {
        "n": pred.n,
        "parity": pred.parity,
        "applicable": pred.applicable,
        "notes": list(pred.notes),
        "skipped": dict(sorted(pred.skipped.items())),
        **{k: to_jsonable(v, k) for k, v in pred.values.items()},
    }


def cmd_predict(args, cfg: RunConfig) -> int:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", DegenerateCaseWarning)
        doc = prediction_document(args.n)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    _emit(dumps(doc) + "\n", args.out)
    return 0


def _load_graph(path: Path):
    from .graphs import SimpleGraph

    try:
        text = path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}")
    if text.lstrip().startswith("{"):
        return SimpleGraph.from_json(text)
    return SimpleGraph.from_dimacs(text)


def cmd_compute(args, cfg: RunConfig) -> int:
    if args.n is not None:
        g = sd8n_construct(args.n)
        graph = commuting_graph(g)
        classes = sd_vertex_classes(g) if args.n >= 2 else None
        report = compute_report(graph, g, cfg.budget, cfg.invariants, classes)
    else:
        graph = _load_graph(args.graph)
        inv = cfg.invariants or tuple(
            k for k in ALL_INVARIANTS if k not in ("center_size", "interior_equals_center")
            and k not in ("detour_ecc", "detour_degree", "detour_dds")
        )
        report = compute_report(graph, None, cfg.budget, inv)
    _emit(dumps(report.to_json(cfg.timing)) + "\n", args.out)
    return 0


def cmd_group(args, cfg: RunConfig) -> int:
    try:
        g = ingest_cayley_table(args.table)
    except (GroupTableError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    graph = commuting_graph(g)
    default = tuple(k for k in ALL_INVARIANTS if k not in ("detour_ecc", "detour_degree", "detour_dds"))
    report = compute_report(graph, g, cfg.budget, cfg.invariants or default)
    laws = check_laws(g, graph)
    doc = {
        "group": {"order": g.order, "name": g.name, "abelian": g.is_abelian,
                  "center_size": len(g.center), "associativity": g.associativity},
        "report": report.to_json(cfg.timing),
        "laws": {c.name: {"expected": to_jsonable(c.expected), "computed": to_jsonable(c.computed),
                          "holds": c.holds, "detail": c.detail} for c in laws},
    }
    _emit(dumps(doc) + "\n", args.out)
    return 0


def _verify_worker(item: tuple[int, RunConfig]) -> dict:
    n, cfg = item
    rec = verify_n(n, cfg)
    return {"doc": rec.to_json(cfg.timing), "first_mismatch": rec.first_mismatch}


def cmd_verify(args, cfg: RunConfig) -> int:
    if args.n_min > args.n_max:
        raise UsageError("--n-min must not exceed --n-max")
    items = [(n, cfg) for n in range(args.n_min, args.n_max + 1)]
    if cfg.jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_verify_worker, items))  # map keeps n order
    else:
        results = [_verify_worker(it) for it in items]
    lines = "".join(dumps(r["doc"]) + "\n" for r in results)
    if args.report is not None:
        try:
            args.report.write_text(lines)
        except OSError as exc:
            raise UsageError(f"cannot write {args.report}: {exc}")
    if args.out is not None or args.report is None:
        _emit(lines, args.out)
    for r in results:
        if r["first_mismatch"]:
            print(f"mismatch: n={r['doc']['n']} field {r['first_mismatch']}", file=sys.stderr)
            return 1
    return 0


COMMANDS = {
    "generate": cmd_generate,
    "predict": cmd_predict,
    "compute": cmd_compute,
    "verify": cmd_verify,
    "group": cmd_group,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = resolve_config(args)
        return COMMANDS[args.command](args, cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
