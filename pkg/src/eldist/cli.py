"""
Command-line interface.

Subcommands: ``dist``, ``matrix``, ``gen``, ``bench``, ``embed``. Inputs are
edge-list files or generator specs such as ``cycle:30`` or
``er:100,0.8,seed=7,exp=20``.

Exit codes: 0 success, 2 usage error, 3 input or parse error, 4 numerical
failure.
"""

import argparse
import os
import sys

from . import fileio
from .bench import time_pairwise
from .eld import EldParams, EmbeddingStore, distance_matrix, eld_distance
from .errors import (
    CacheFormatError,
    ConvergenceFailure,
    GeneratorError,
    GraphError,
    InvalidOrder,
    KTooLarge,
    ParseError,
)
from .generators import parse_spec
from .graph_core import DEFAULT_SPARSE_THRESHOLD
from .spectral import embed

EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_NUMERIC = 4

_MODES = {"comb": "combinatorial", "norm": "normalized"}


class UsageError(Exception):
    pass


def _params(args):
    return EldParams(
        k=args.k,
        p=args.p,
        mode=_MODES[args.mode],
        skip_first=args.skip_first,
        sparse_threshold=args.sparse_threshold,
    )


def _store(args):
    directory = args.cache or os.environ.get("ELD_CACHE_DIR") or None
    return EmbeddingStore(directory)


def load_input(text, seed=0):
    """Return ``(label, Graph)`` for a file path or a generator spec."""
    if os.path.exists(text):
        return os.path.basename(text), fileio.read_edge_list(text)
    try:
        spec = parse_spec(text, default_seed=seed)
    except ParseError:
        raise ParseError(f"{text!r} is neither an existing file nor a generator spec") from None
    return str(spec), spec.build()


def _emit(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_dist(args):
    _, g1 = load_input(args.graph_a, args.seed)
    _, g2 = load_input(args.graph_b, args.seed)
    d = eld_distance(g1, g2, _params(args), _store(args))
    print(f"{d:.12g}")


def cmd_matrix(args):
    loaded = [load_input(x, args.seed) for x in args.inputs]
    labels = [lab for lab, _ in loaded]
    dm = distance_matrix([g for _, g in loaded], _params(args), _store(args), labels, args.threads)
    if args.output in (None, "-"):
        sys.stdout.write(fileio.format_distance_matrix(dm, args.format))
    else:
        fileio.write_distance_matrix(dm, args.format, args.output)
    if args.heatmap:
        fileio.write_heatmap(dm, args.heatmap)


def cmd_gen(args):
    spec = parse_spec(args.spec, default_seed=args.seed)
    _emit(fileio.format_edge_list(spec.build()), args.output)


def cmd_bench(args):
    try:
        sizes = [int(s) for s in args.sizes.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"bad size list {args.sizes!r}") from None
    if not sizes:
        raise UsageError("bench needs at least one size")
    rows = time_pairwise(
        args.model, sizes, _params(args), args.samples, args.seed, args.prob, args.m, args.threads
    )
    lines = ["size,seconds"] + [f"{n},{t:.6f}" for n, t in rows]
    _emit("\n".join(lines) + "\n", args.output)


def cmd_embed(args):
    _, g = load_input(args.graph, args.seed)
    emb = embed(g, args.k, _MODES[args.mode], sparse_threshold=args.sparse_threshold)
    fileio.write_embedding(emb, args.output)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-k", type=int, default=5, help="embedding dimension (default 5)")
    common.add_argument("-p", type=float, default=1.0, help="Wasserstein order (default 1)")
    common.add_argument("--mode", choices=sorted(_MODES), default="comb", help="Laplacian variant")
    common.add_argument("--skip-first", action="store_true", help="drop the first eigenvector")
    common.add_argument("--sparse-threshold", type=int, default=DEFAULT_SPARSE_THRESHOLD, metavar="N")
    common.add_argument("--seed", type=int, default=0, help="seed for random generator specs")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--threads", type=int, default=1, metavar="T")
    common.add_argument("--cache", metavar="DIR", help="embedding cache directory (default $ELD_CACHE_DIR)")
    common.add_argument("--heatmap", metavar="PATH", help="also write 'row col value' triples")

    parser = argparse.ArgumentParser(prog="eld", description="Embedded Laplacian distance between graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", parents=[common], help="distance between two graphs")
    p.add_argument("graph_a")
    p.add_argument("graph_b")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("matrix", parents=[common], help="pairwise distance matrix")
    p.add_argument("inputs", nargs="+")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("gen", parents=[common], help="write a generated graph as an edge list")
    p.add_argument("spec")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", parents=[common], help="time pairwise distances on random graphs")
    p.add_argument("model", choices=("er", "ba"))
    p.add_argument("--sizes", required=True, help="comma-separated vertex counts")
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--prob", type=float, default=0.03, help="ER edge probability")
    p.add_argument("--m", type=int, default=3, help="BA edges per arrival")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("embed", parents=[common], help="write a graph's embedding cache file")
    p.add_argument("graph")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_embed)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (UsageError, KTooLarge, InvalidOrder) as exc:
        print(f"eld: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, GraphError, GeneratorError, CacheFormatError, OSError) as exc:
        print(f"eld: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConvergenceFailure as exc:
        print(f"eld: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        print(f"eld: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return 0


if __name__ == "__main__":
    sys.exit(main())
