"""Command line interface: detect, lfr-gen, sweep, metrics.

Reports are written as CSV or JSON; unless figures are disabled, the report
path also gets matplotlib renderings (PNG) of the same results next to the
delimited output.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .experiment import (
    DEFAULT_C_GRID,
    DEFAULT_MU_GRID,
    ExperimentConfig,
    emit_report,
    run_detect,
    run_sweep,
    write_ccdf_csv,
)
from .graph import cc_distribution, parse_edge_list, summary, write_edge_list
from .lfr import LfrParams, generate, realized_mixing, write_truth
from .lpa import extract_communities, write_labeling
from .metrics import score_partition, size_ccdf


def _parse_floats(text: str) -> tuple[float, ...]:
    return tuple(float(tok) for tok in text.split(",") if tok.strip())


def _figure_base(out: str) -> Path:
    p = Path(out)
    return p.with_suffix("") if p.suffix else p


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--seed", type=int, default=0, help="seed base for all runs")
    sub.add_argument("--out", help="report file path")
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--no-figures", action="store_true",
                     help="skip PNG figures next to the report")


def _add_lfr_params(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--n", type=int, default=1000)
    sub.add_argument("--avg-k", type=float, default=5.0)
    sub.add_argument("--max-k", type=int, default=50)
    sub.add_argument("--size-min", type=int, default=10)
    sub.add_argument("--size-max", type=int, default=50)
    sub.add_argument("--degree-exp", type=float, default=2.0)
    sub.add_argument("--size-exp", type=float, default=1.0)


def cmd_detect(args) -> int:
    cfg = ExperimentConfig(
        input_path=args.input,
        algorithm=args.algorithm,
        c_values=_parse_floats(args.c),
        runs=args.runs,
        seed_base=args.seed,
        use_lcc=not args.no_lcc,
    )
    report, g, best_labels = run_detect(cfg)
    print(json.dumps(report.meta, sort_keys=True))
    if args.labels and best_labels is not None:
        with open(args.labels, "w", encoding="utf-8") as fh:
            write_labeling(g, best_labels, fh)
    if args.out:
        emit_report(report, args.out, args.format)
        if not args.no_figures:
            from . import plots

            base = _figure_base(args.out)
            plots.plot_quality_vs_c(report.c_rows, f"{base}_quality.png")
            plots.plot_cc_distribution(cc_distribution(g), f"{base}_cc.png")
            if best_labels is not None:
                part = extract_communities(g, best_labels)
                plots.plot_size_ccdf(size_ccdf(part), f"{base}_sizes.png")
    return 0


def cmd_lfr_gen(args) -> int:
    params = LfrParams(mu=args.mu, n=args.n, avg_k=args.avg_k, max_k=args.max_k,
                       size_min=args.size_min, size_max=args.size_max,
                       degree_exp=args.degree_exp, size_exp=args.size_exp,
                       seed=args.seed)
    net = generate(params)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "network.edges", "w", encoding="utf-8") as fh:
        write_edge_list(net.graph, fh)
    with open(out / "community.truth", "w", encoding="utf-8") as fh:
        write_truth(net.truth, fh)
    with open(out / "params.json", "w", encoding="utf-8") as fh:
        json.dump(params.to_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")
    info = summary(net.graph)
    info["realized_mu"] = realized_mixing(net)
    info["communities"] = len(net.truth)
    print(json.dumps(info, sort_keys=True))
    return 0


def cmd_sweep(args) -> int:
    if args.preset == "lfr-10x10":
        mus = _parse_floats(args.mu) if args.mu else DEFAULT_MU_GRID
        networks, runs = 10, 10
    else:
        if not args.mu:
            raise ValueError("--mu is required without a preset")
        mus = _parse_floats(args.mu)
        networks, runs = args.networks, args.runs
    cfg = ExperimentConfig(
        lfr=LfrParams(mu=mus[0], n=args.n, avg_k=args.avg_k, max_k=args.max_k,
                      size_min=args.size_min, size_max=args.size_max,
                      degree_exp=args.degree_exp, size_exp=args.size_exp),
        mus=mus,
        algorithm=args.algorithm,
        c_values=_parse_floats(args.c),
        runs=runs,
        networks=networks,
        seed_base=args.seed,
    )
    report = run_sweep(cfg)
    print(json.dumps(report.meta, sort_keys=True))
    if args.out:
        emit_report(report, args.out, args.format)
        if not args.no_figures:
            from . import plots

            base = _figure_base(args.out)
            plots.plot_similarity_vs_mu(report.mu_rows, f"{base}_similarity.png")
    return 0


def _read_assignment(path: str) -> dict[str, int]:
    out: dict[str, int] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line[0] in "#%":
                continue
            toks = line.split()
            if len(toks) != 2:
                raise ValueError(f"{path}: line {lineno}: expected 'node label'")
            out[toks[0]] = int(toks[1])
    return out


def _groups_for(g, assignment: dict[str, int], what: str) -> list[frozenset[int]]:
    groups: dict[int, set[int]] = {}
    for i, name in enumerate(g.names):
        if name not in assignment:
            raise ValueError(f"{what} is missing node {name!r}")
        groups.setdefault(assignment[name], set()).add(i)
    return [frozenset(s) for _, s in sorted(groups.items())]


def cmd_metrics(args) -> int:
    with open(args.input, "r", encoding="utf-8") as fh:
        g = parse_edge_list(fh)
    found = _groups_for(g, _read_assignment(args.labels), "labels file")
    truth = None
    if args.truth:
        truth = _groups_for(g, _read_assignment(args.truth), "truth file")
    report = score_partition(g, found, truth)
    text = json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        base = _figure_base(args.out)
        ccdf = size_ccdf(found)
        write_ccdf_csv(ccdf, f"{base}_size_ccdf.csv")
        if not args.no_figures:
            from . import plots

            plots.plot_cc_distribution(cc_distribution(g), f"{base}_cc.png")
            plots.plot_size_ccdf(ccdf, f"{base}_sizes.png")
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lpakit",
        description="Label propagation community detection toolkit")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("detect", help="run detection batches on an edge list")
    p.add_argument("--input", required=True, help="edge-list file")
    p.add_argument("--algorithm", choices=("speedup", "original"), default="speedup")
    p.add_argument("--c", default=",".join(str(c) for c in DEFAULT_C_GRID),
                   help="comma-separated score weights")
    p.add_argument("--runs", type=int, default=100)
    p.add_argument("--labels", help="write the best-modularity labeling here")
    p.add_argument("--no-lcc", action="store_true",
                   help="keep the full graph instead of the largest component")
    _add_common(p)
    p.set_defaults(func=cmd_detect)

    p = subs.add_parser("lfr-gen", help="generate a planted-community benchmark")
    p.add_argument("--mu", type=float, required=True, help="mixing parameter")
    _add_lfr_params(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=cmd_lfr_gen)

    p = subs.add_parser("sweep", help="similarity sweep over benchmark mixing values")
    p.add_argument("--mu", help="comma-separated mixing values")
    p.add_argument("--c", default=",".join(str(c) for c in DEFAULT_C_GRID))
    p.add_argument("--algorithm", choices=("speedup", "original"), default="speedup")
    p.add_argument("--networks", type=int, default=10)
    p.add_argument("--runs", type=int, default=10)
    p.add_argument("--preset", choices=("lfr-10x10",),
                   help="10 networks x best-of-10 runs on the default grid")
    _add_lfr_params(p)
    _add_common(p)
    p.set_defaults(func=cmd_sweep)

    p = subs.add_parser("metrics", help="score an existing labeling")
    p.add_argument("--input", required=True, help="edge-list file")
    p.add_argument("--labels", required=True, help="'node label' lines")
    p.add_argument("--truth", help="'node community' lines for NMI/ARI")
    p.add_argument("--out", help="metric report JSON path")
    p.add_argument("--no-figures", action="store_true")
    p.set_defaults(func=cmd_metrics)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.INFO, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
