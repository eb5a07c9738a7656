"""Command line front end: ``sample``, ``export`` and ``bench``.

Exit codes: 0 success, 1 usage error, 2 cross-backend verification failure.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .dot import graph_dot, junction_tree_dot, set_digraph_dot
from .representation import BACKENDS
from .sampler import BackendDisagreement, Sampler, SamplerConfig

log = logging.getLogger("decosample")

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2
BENCH_COLUMNS = ("backend", "n", "iterations", "seconds", "final_edges", "acceptance")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_chain_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, required=True, help="number of vertices")
    p.add_argument("--iters", type=int, default=100_000, help="number of proposals")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--model", choices=("uniform", "max-clique", "edge-penalty"), default="uniform")
    p.add_argument("--k", type=int, default=None, help="maximum clique size (max-clique model)")
    p.add_argument("--alpha", type=float, default=None, help="edge penalty (edge-penalty model)")
    p.add_argument("--restricted-search", action="store_true",
                   help="confine the graph backend's separation search to vertices adjacent to all of S_xy")
    p.add_argument("--out-dir", type=Path, default=Path("."))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="decosample", description="Metropolis sampling of decomposable graphs.")
    common = _Parser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("sample", parents=[common], help="run one chain, write trace CSV and report JSON")
    _add_chain_flags(p)
    p.add_argument("--backend", choices=BACKENDS + ("all",), default="graph")
    p.add_argument("--thin", type=int, default=1, help="record every k-th iteration")
    p.add_argument("--window", type=int, default=10_000, help="acceptance window length")
    p.add_argument("--verify-every", type=int, default=1000,
                   help="with --backend all, compare exported graphs every k iterations (0 = never)")

    p = sub.add_parser("export", parents=[common], help="run one chain and write DOT files for all representations")
    _add_chain_flags(p)

    p = sub.add_parser("bench", parents=[common], help="time a sweep of vertex counts and backends")
    p.add_argument("--ns", required=True, help="comma-separated vertex counts")
    p.add_argument("--backends", default="all", help="comma-separated backends, or 'all'")
    p.add_argument("--iters", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--model", choices=("uniform", "max-clique", "edge-penalty"), default="uniform")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--restricted-search", action="store_true")
    p.add_argument("--parallel-cells", action="store_true", help="run cells on separate threads")
    p.add_argument("--out", type=Path, default=Path("bench.csv"))
    return parser


def _model_args(args) -> dict:
    if args.k is not None and args.model != "max-clique":
        raise UsageError("--k only applies to --model max-clique")
    if args.alpha is not None and args.model != "edge-penalty":
        raise UsageError("--alpha only applies to --model edge-penalty")
    if args.k is not None and args.k < 1:
        raise UsageError("--k must be >= 1")
    out = {"model": args.model}
    if args.k is not None:
        out["k"] = args.k
    if args.alpha is not None:
        out["alpha"] = args.alpha
    return out


def _config(args, backend: str, **extra) -> SamplerConfig:
    if args.iters < 0:
        raise UsageError("--iters must be >= 0")
    if args.restricted_search and backend not in ("graph", "all"):
        raise UsageError("--restricted-search needs the graph backend")
    try:
        return SamplerConfig(
            n=args.n, iterations=args.iters, seed=args.seed, backend=backend,
            restricted_search=args.restricted_search, **_model_args(args), **extra,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_sample(args) -> int:
    cfg = _config(
        args, args.backend, trace_thin=args.thin, window=args.window,
        verify_every=args.verify_every if args.backend == "all" else 0,
    )
    out = args.out_dir
    out.mkdir(parents=True, exist_ok=True)
    sampler = Sampler(cfg)
    report = {"config": cfg.as_dict(), "verified": None}
    t0 = time.perf_counter()
    try:
        trace = sampler.run()
        if cfg.backend == "all":
            sampler.verify_agreement()
            report["verified"] = True
    except BackendDisagreement as exc:
        log.error("%s", exc)
        report["verified"] = False
        report["failure"] = {"iteration": exc.iteration, "pair": list(exc.pair), "detail": exc.detail}
        (out / "report.json").write_text(json.dumps(report, indent=2) + "\n", encoding="utf-8")
        return EXIT_VERIFY
    seconds = time.perf_counter() - t0
    trace_path = out / "trace.csv"
    trace.to_csv(trace_path)
    report.update(
        seconds=seconds,
        iterations_per_sec=cfg.iterations / seconds if seconds > 0 else None,
        final_edges=sampler.edges,
        final_log_pi=sampler.logpi,
        acceptance_rate=trace.acceptance_rate,
        mean_window_acceptance=trace.mean_window_acceptance(),
        trace_path=str(trace_path),
    )
    (out / "report.json").write_text(json.dumps(report, indent=2) + "\n", encoding="utf-8")
    log.info("n=%d iters=%d edges=%d acceptance=%.4f in %.2fs",
             cfg.n, cfg.iterations, sampler.edges, trace.acceptance_rate, seconds)
    return EXIT_OK


def export_structures(sampler: Sampler, out: Path) -> list[Path]:
    """Write graph / junction / almond / ibarra DOT files for the sampler's final state."""
    out.mkdir(parents=True, exist_ok=True)
    b = sampler.backends
    files = {
        "graph.dot": graph_dot(sampler.g),
        "junction.dot": junction_tree_dot(b["junction"].tree, "junction"),
        "almond.dot": set_digraph_dot(b["almond"].dag, "almond"),
        "ibarra.dot": set_digraph_dot(b["ibarra"].dag, "ibarra"),
    }
    paths = []
    for name, text in files.items():
        path = out / name
        path.write_text(text, encoding="utf-8")
        paths.append(path)
    return paths


def cmd_export(args) -> int:
    cfg = _config(args, "all", trace_thin=max(1, args.iters))
    sampler = Sampler(cfg)
    try:
        sampler.run()
        sampler.verify_agreement()
    except BackendDisagreement as exc:
        log.error("%s", exc)
        return EXIT_VERIFY
    for path in export_structures(sampler, args.out_dir):
        log.info("wrote %s", path)
    return EXIT_OK


def _bench_cell(cfg: SamplerConfig) -> dict:
    sampler = Sampler(cfg)
    t0 = time.perf_counter()
    trace = sampler.run()
    seconds = time.perf_counter() - t0
    return {
        "backend": cfg.backend, "n": cfg.n, "iterations": cfg.iterations,
        "seconds": f"{seconds:.6f}", "final_edges": sampler.edges,
        "acceptance": f"{trace.acceptance_rate:.6f}",
    }


def cmd_bench(args) -> int:
    try:
        ns = [int(v) for v in args.ns.split(",") if v.strip()]
    except ValueError:
        raise UsageError("--ns must be a comma-separated list of integers") from None
    backends = list(BACKENDS) if args.backends == "all" else [b.strip() for b in args.backends.split(",")]
    for b in backends:
        if b not in BACKENDS:
            raise UsageError(f"unknown backend {b!r}")
    if not ns or min(ns) < 2:
        raise UsageError("--ns needs vertex counts >= 2")
    cells = []
    for n in ns:
        args.n = n
        for b in backends:
            cells.append(_config(args, b, trace_thin=max(1, args.iters)))
    if args.parallel_cells:
        with ThreadPoolExecutor() as pool:
            rows = list(pool.map(_bench_cell, cells))
    else:
        rows = [_bench_cell(c) for c in cells]
    args.out.parent.mkdir(parents=True, exist_ok=True)
    with open(args.out, "w", newline="", encoding="utf-8") as fh:
        w = csv.DictWriter(fh, fieldnames=BENCH_COLUMNS, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    log.info("wrote %d rows to %s", len(rows), args.out)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    handler = {"sample": cmd_sample, "export": cmd_export, "bench": cmd_bench}[args.command]
    try:
        return handler(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"decosample: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
