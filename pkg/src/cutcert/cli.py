"""Command-line front end.

Subcommands:
  certify   minimal smallness constant of a graph (or a no-finite-c witness)
  validate  audit a blocks file against the 2-partition conditions
  verify    check the cut lower bound over all (or sampled) cuts
  report    identity residuals, sparsity profile, or Fiedler value

Exit codes: 0 success / bound holds, 2 input error, 3 negative finding
(violation, invalid partition, not small), 4 bound inapplicable.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import bounds, cuts, graphs, partitions, smallness

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NEGATIVE = 3
EXIT_INAPPLICABLE = 4


class CliInputError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Sources


def _parse_gen(spec: str) -> graphs.Graph:
    name, _, argstr = spec.partition(":")
    args = [a for a in argstr.split(",") if a] if argstr else []
    try:
        if name == "star":
            (k,) = map(int, args)
            return graphs.star(k)
        if name == "complete":
            (n,) = map(int, args)
            return graphs.complete(n)
        if name == "path":
            (n,) = map(int, args)
            return graphs.path(n)
        if name == "empty":
            (n,) = map(int, args)
            return graphs.empty(n)
        if name in ("bipartite", "complete-bipartite"):
            a, b = map(int, args)
            return graphs.complete_bipartite(a, b)
        if name == "multipartite":
            return graphs.complete_multipartite([int(a) for a in args])
        if name == "gnp":
            n, prob, seed = int(args[0]), float(args[1]), int(args[2])
            return graphs.random_gnp(n, prob, seed)
    except (ValueError, IndexError) as exc:
        if isinstance(exc, graphs.GraphInputError):
            raise
        raise CliInputError(f"bad generator spec {spec!r}: {exc}")
    raise CliInputError(f"unknown generator {name!r} in spec {spec!r}")


def _resolve_graph(args) -> graphs.Graph:
    if args.graph:
        return graphs.load_edge_list(args.graph)
    return _parse_gen(args.gen)


def _resolve_partition(spec: str, n: int) -> partitions.PairPartition:
    if spec == "trivial":
        return partitions.trivial_partition(n)
    if spec == "all-pairs":
        return partitions.all_pairs_partition(n)
    if spec == "near-pencil":
        return partitions.near_pencil(n)
    if spec.startswith("affine:"):
        q = int(spec.split(":", 1)[1])
        part = partitions.affine_plane(q)
        if part.n != n:
            raise CliInputError(
                f"affine plane of order {q} has {part.n} points, graph has {n} vertices"
            )
        return part
    return partitions.load_blocks(spec, n)


# ---------------------------------------------------------------------------
# Output


def _emit(payload: dict, fmt: str, csv_rows=None, csv_header=None):
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, allow_nan=False))
        return
    if fmt == "csv":
        if csv_rows is not None:
            print(csv_header)
            for row in csv_rows:
                print(",".join(str(x) for x in row))
        else:
            print("key,value")
            for key, value in _flatten(payload):
                print(f"{key},{value}")
        return
    for key, value in _flatten(payload):
        print(f"{key} = {_round6(value)}")


def _flatten(payload, prefix=""):
    items = []
    for key, value in payload.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            items.extend(_flatten(value, f"{name}."))
        else:
            items.append((name, value))
    return items


def _round6(value):
    if isinstance(value, float):
        return f"{value:.6f}"
    if isinstance(value, list):
        return "[" + ", ".join(str(_round6(v)) for v in value) + "]"
    return value


# ---------------------------------------------------------------------------
# Subcommands


def cmd_certify(args) -> int:
    graph = _resolve_graph(args)
    cert = smallness.minimal_c(graph, args.tol_c, args.tol)
    if cert.small:
        payload = {"verdict": "small", "c_min": cert.c_min}
        _emit(payload, args.format)
        return EXIT_OK
    payload = {"verdict": "not-small-for-any-c", "witness": [float(w) for w in cert.witness]}
    _emit(payload, args.format)
    return EXIT_NEGATIVE


def cmd_validate(args) -> int:
    with open(args.partition) as fh:
        blocks = partitions.parse_block_lines(fh.read())
    report = partitions.validate(args.n, blocks)
    payload = {
        "valid": report.valid,
        "undersized_blocks": [list(b) for b in report.undersized_blocks],
        "uncovered_pairs": [list(p) for p in report.uncovered_pairs],
        "multiply_covered_pairs": [list(p) for p in report.multiply_covered_pairs],
    }
    _emit(payload, args.format)
    return EXIT_OK if report.valid else EXIT_NEGATIVE


def cmd_verify(args) -> int:
    graph = _resolve_graph(args)
    partition = _resolve_partition(args.partition, graph.n)
    keep_rows = args.format == "csv"
    if args.mode == "sample":
        report = cuts.sample_cuts_verify(
            graph, partition, kind=args.bound, trials=args.trials, seed=args.seed,
            variant=args.variant, tol_c=args.tol_c, tol_psd=args.tol,
            keep_rows=keep_rows,
        )
    else:
        report = cuts.verify_bound(
            graph, partition, kind=args.bound, variant=args.variant,
            tol_c=args.tol_c, tol_psd=args.tol, keep_rows=keep_rows,
        )
    _emit(
        report.to_dict(), args.format,
        csv_rows=[(m, ei, eo, cr, repr(b), "pass" if ok else "fail")
                  for m, ei, eo, cr, b, ok in report.rows],
        csv_header="cut_bitmask,e_in,e_out,crossing,bound,pass",
    )
    if not report.applicable:
        return EXIT_INAPPLICABLE
    return EXIT_OK if not report.violations else EXIT_NEGATIVE


def cmd_report(args) -> int:
    graph = _resolve_graph(args)
    if args.mode == "fiedler":
        _emit({"fiedler_value": cuts.fiedler_value(graph)}, args.format)
        return EXIT_OK
    if args.mode == "sparsity":
        profile = cuts.sparsity_profile(graph)
        payload = {
            "min_ratio": profile.ratio,
            "argmin_cut": sorted(profile.argmin) if profile.argmin is not None else None,
            "argmin_bitmask": (
                sum(1 << v for v in profile.argmin) if profile.argmin is not None else None
            ),
        }
        _emit(payload, args.format)
        return EXIT_OK
    # identities over all cuts
    worst = {name: 0.0 for name in bounds.IDENTITY_NAMES}
    examined = 0
    for S in cuts.enumerate_cuts(graph):
        if len(S) == graph.n:
            continue
        residuals = bounds.identity_suite(graph, S)
        for name, value in residuals.items():
            worst[name] = max(worst[name], value)
        examined += 1
    payload = {"cuts_examined": examined, "max_residuals": worst}
    _emit(payload, args.format)
    return EXIT_OK


# ---------------------------------------------------------------------------


def _add_graph_source(parser):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--graph", help="edge-list file ('n m' header, 'u v' lines)")
    group.add_argument("--gen", help="generator spec, e.g. star:5 or gnp:10,0.5,42")


def _add_common(parser):
    parser.add_argument("--format", choices=("human", "json", "csv"), default="human")
    parser.add_argument("--tol", type=float, default=1e-9,
                        help="PSD / residual tolerance")
    parser.add_argument("--tol-c", type=float, default=smallness.DEFAULT_TOL_C,
                        help="bisection tolerance for minimal c")
    parser.add_argument("--jobs", type=int, default=1,
                        help="worker count for cut evaluation (result-invariant)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cutcert", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("certify", help="minimal smallness constant of a graph")
    _add_graph_source(p)
    _add_common(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("validate", help="audit a blocks file")
    p.add_argument("--partition", required=True, help="blocks file")
    p.add_argument("--n", type=int, required=True, help="ground-set size")
    _add_common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("verify", help="check the cut lower bound")
    _add_graph_source(p)
    p.add_argument("--partition", required=True,
                   help="blocks file or trivial|all-pairs|near-pencil|affine:q")
    p.add_argument("--bound", choices=(cuts.KIND_BASE, cuts.KIND_REFINED),
                   default=cuts.KIND_BASE)
    p.add_argument("--variant", choices=(bounds.AS_STATED, bounds.TIGHT),
                   default=bounds.AS_STATED)
    p.add_argument("--mode", choices=("exhaustive", "sample"), default="exhaustive")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", help="identity residuals / sparsity / Fiedler value")
    _add_graph_source(p)
    p.add_argument("--mode", choices=("identities", "sparsity", "fiedler"),
                   default="identities")
    p.add_argument("--all-cuts", action="store_true",
                   help="identities mode always audits all cuts; flag kept for clarity")
    _add_common(p)
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (graphs.GraphInputError, partitions.PartitionError, CliInputError,
            cuts.CutCapError, bounds.BoundDomainError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
