"""Command line interface: gen, stats, cut, sweep, verify."""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .geometry import GeometrySpec
from .graphio import export_graph, import_graph
from .graphstats import clustering_coefficient, connected_components, degree_report
from .harness import ExperimentConfig, emit_plot_data, run_sweep
from .sampler import ModelParams, sample_direct


def parse_seed(text: str) -> int:
    """Seeds are accepted as decimal or 0x-prefixed hex."""
    return int(text, 0)


def _model_args(p: argparse.ArgumentParser, multi_n: bool = False):
    p.add_argument("--geometry", choices=["euclidean_max", "mcd"], default="mcd")
    p.add_argument("--dim", type=int, default=2, help="torus dimension d")
    if multi_n:
        p.add_argument("--n", type=int, action="append", required=True, help="vertex count (repeatable)")
    else:
        p.add_argument("--n", type=int, required=True, help="vertex count")
    p.add_argument("--alpha", type=float, default=1.5)
    p.add_argument("--beta", type=float, default=2.5)
    p.add_argument("--prefactor", type=float, default=1.0, help="edge-probability prefactor c")
    p.add_argument("--volume-mode", choices=["exact", "linearized"], default=None)


def _params(args, n: int, seed: int) -> ModelParams:
    return ModelParams(
        d=args.dim,
        n=n,
        alpha=args.alpha,
        beta=args.beta,
        prefactor_c=args.prefactor,
        geometry=GeometrySpec(args.geometry, args.dim, args.volume_mode),
        seed=seed,
    )


def cmd_gen(args) -> int:
    g = sample_direct(_params(args, args.n, args.seed))
    vp, ep = export_graph(g, args.out)
    print(f"n={g.n} edges={g.edge_count} -> {vp} {ep}")
    return 0


def cmd_stats(args) -> int:
    g = import_graph(args.graph)
    lab = connected_components(g)
    cc = clustering_coefficient(g)
    rep = degree_report(g, cutoff=args.degree_cutoff)
    print(f"n={g.n} edges={g.edge_count}")
    print(f"components={lab.sizes.size} giant_size={lab.giant_size} giant_fraction={lab.giant_size / g.n:.6f}")
    print(f"mean_cc={cc.mean:.6f} low_degree={cc.low_degree_count}")
    if rep.tail_exponent is None:
        print(f"max_degree={rep.max_degree} tail_exponent=rejected")
    else:
        print(
            f"max_degree={rep.max_degree} tail_exponent={rep.tail_exponent:.4f}"
            f"±{rep.tail_half_width:.4f} (cutoff {rep.cutoff:g})"
        )
    return 0


def cmd_cut(args) -> int:
    from .cuts import geometric_halfspace_cut, local_search_cut

    g = import_graph(args.graph)
    lab = connected_components(g)
    giant = np.flatnonzero(lab.labels == lab.giant_label).astype(np.int64)
    print("method,delta,side0,side1,cross_edges,eta_achieved,feasible")
    results = []
    for axis in range(g.dimension):
        try:
            results.append(geometric_halfspace_cut(g, giant, axis, args.delta))
        except ValueError:
            continue
    results.append(local_search_cut(g, giant, args.delta, restarts=args.restarts, seed=args.seed))
    for r in results:
        s0, s1 = r.bipartition.sizes
        print(
            f"{r.method},{r.delta:g},{s0},{s1},{r.cross_edge_count},"
            f"{r.eta_achieved:.6g},{int(r.feasible)}"
        )
    return 0


def cmd_sweep(args) -> int:
    config = ExperimentConfig(
        geometry_kind=args.geometry,
        d=args.dim,
        n_values=tuple(args.n),
        alpha=args.alpha,
        beta=args.beta,
        prefactor_c=args.prefactor,
        deltas=tuple(args.delta or [0.1]),
        f=args.f,
        seeds=tuple(args.seed or [1]),
        restarts=args.restarts,
        volume_mode=args.volume_mode,
        output_dir=args.out,
    )
    records = run_sweep(config)  # writes {out}/sweep.csv when --out is given
    if args.out:
        emit_plot_data(records, args.out)
        print(f"{len(records)} records -> {args.out}/sweep.csv")
    else:
        for r in records:
            print(r)
    return 0


def cmd_verify(args) -> int:
    from .acceptance import run_all

    results = run_all(out_dir=args.out)
    failed = [r for r in results if not r.passed]
    if failed:
        print(f"{len(failed)} criterion(s) failed: {', '.join(r.key for r in failed)}")
        return 1
    print(f"all {len(results)} criteria passed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="girglab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="sample a graph and export it")
    _model_args(p)
    p.add_argument("--seed", type=parse_seed, default=0)
    p.add_argument("--out", required=True, help="output path base (two .tsv files)")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("stats", help="components, clustering and degree stats")
    p.add_argument("graph", help="graph path base as written by gen")
    p.add_argument("--degree-cutoff", type=float, default=8.0)
    p.set_defaults(fn=cmd_stats)

    p = sub.add_parser("cut", help="run all separator searchers on the giant")
    p.add_argument("graph", help="graph path base as written by gen")
    p.add_argument("--delta", type=float, default=0.1)
    p.add_argument("--restarts", type=int, default=10)
    p.add_argument("--seed", type=parse_seed, default=0)
    p.set_defaults(fn=cmd_cut)

    p = sub.add_parser("sweep", help="full scaling experiment")
    _model_args(p, multi_n=True)
    p.add_argument("--delta", type=float, action="append", help="balance floor (repeatable)")
    p.add_argument("--f", type=float, default=0.0, help="phase-2 selection constant")
    p.add_argument("--seed", type=parse_seed, action="append", help="seed (repeatable)")
    p.add_argument("--restarts", type=int, default=10)
    p.add_argument("--out", default=None, help="output directory for CSV and plots")
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("verify", help="run the acceptance suite")
    p.add_argument("--out", default=None, help="directory for sweep CSV and plots")
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
