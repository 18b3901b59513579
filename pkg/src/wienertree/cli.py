"""Command-line entry point: ``wienertree <subcommand> ...``.

Exit codes: 0 success, 2 invalid input, 3 size cap exceeded, 4 infeasible.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Optional, Sequence

from . import instances, oracle, paths, render, serialize
from .dp_convex import dp_tables, solve_convex
from .errors import Infeasible, InvalidInput, LimitExceeded
from .geometry import PointSet
from .tree import SpanningTree, wiener_edge_contribution, wiener_pairwise

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_LIMIT = 3
EXIT_INFEASIBLE = 4


class _Usage(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _read_json(path: Optional[str]) -> Any:
    try:
        if path is None or path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidInput(f"cannot read JSON from {path or 'stdin'}: {exc}") from exc


def _write(args, text: str) -> None:
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text, encoding="utf-8")


def _load_points(args) -> PointSet:
    return serialize.pointset_from_json(_read_json(args.input))


def _load_tree(args, doc_path: Optional[str]) -> SpanningTree:
    if doc_path is not None:
        obj = _read_json(doc_path)
    else:
        obj = _read_json(args.input)
        obj = obj.get("tree", obj)
    if "edges" not in obj:
        raise InvalidInput("no tree given (use --tree or embed 'edges' in the input)")
    return serialize.tree_from_json(obj)


def cmd_gen(args) -> int:
    doc: dict[str, Any]
    if args.kind == "convex":
        doc = serialize.pointset_to_json(instances.gen_random_convex(args.n, args.seed))
    elif args.kind == "grid":
        doc = serialize.pointset_to_json(instances.gen_grid(args.w, args.h))
    elif args.kind == "partition":
        try:
            X = [int(v) for v in args.x.split(",") if v.strip()]
        except ValueError as exc:
            raise InvalidInput(f"--x must be comma-separated integers: {exc}") from exc
        inst = instances.gen_partition_instance(X)
        doc = serialize.pointset_to_json(inst.points)
        sidecar = {"X": list(inst.X), "R": inst.R, "B": inst.B, "W": inst.W, "roles": inst.roles()}
        if args.output in (None, "-"):
            doc["sidecar"] = sidecar
        else:
            target = args.sidecar or str(Path(args.output).with_suffix(".sidecar.json"))
            Path(target).write_text(serialize.dumps(sidecar), encoding="utf-8")
    else:
        inst = instances.gen_path_counterexample(args.m, args.epsilon)
        doc = serialize.pointset_to_json(inst.points)
    _write(args, serialize.dumps(doc))
    return EXIT_OK


def cmd_solve(args) -> int:
    ps = _load_points(args)
    sol = solve_convex(ps)
    doc = serialize.solution_to_json(sol)
    if args.tables:
        doc["tables"] = serialize.tables_to_json(dp_tables(ps))
    _write(args, serialize.dumps(doc))
    return EXIT_OK


def cmd_wiener(args) -> int:
    ps = _load_points(args)
    tree = _load_tree(args, args.tree)
    report = wiener_edge_contribution(tree, ps)
    pairwise = wiener_pairwise(tree, ps)
    doc = serialize.report_to_json(report)
    doc["wiener_pairwise"] = pairwise
    doc["difference"] = report.wiener - pairwise
    _write(args, serialize.dumps(doc))
    return EXIT_OK


def cmd_oracle(args) -> int:
    ps = _load_points(args)
    opts = {"force": args.force, "threads": args.threads}
    if args.mode == "tree":
        res = oracle.min_wiener_tree_bruteforce(ps, **opts)
    elif args.mode == "path":
        res = oracle.min_wiener_path_bruteforce(ps, **opts)
    else:
        if args.budget is None:
            raise InvalidInput("--budget is required in budgeted mode")
        try:
            res = oracle.budgeted_min_wiener(ps, args.budget, rel_tol=args.tolerance, **opts)
        except Infeasible as exc:
            _write(args, serialize.dumps({"infeasible": True, "budget": args.budget}))
            print(f"infeasible: {exc}", file=sys.stderr)
            return EXIT_INFEASIBLE
    _write(args, serialize.dumps(serialize.oracle_to_json(res)))
    return EXIT_OK


def cmd_paths(args) -> int:
    rows: list[dict[str, Any]] = []
    svg_points: Optional[PointSet] = None
    svg_path = None
    if args.twelve_config is not None:
        for config, value in paths.twelve_config_wiener(args.twelve_config):
            rows.append(
                {
                    "m": args.twelve_config,
                    "config": paths.config_name(config),
                    "wiener": value,
                    "planar": paths.is_config_planar(config),
                }
            )
        best = paths.twelve_config_wiener(args.twelve_config)[0][0]
        svg_points = PointSet(tuple(s.anchor for s in best))
        svg_path = paths.HamiltonianPath(range(4))
    if args.sweep is not None:
        rows.append({"sweep_max_m": args.sweep, "threshold": paths.nonplanar_threshold(args.sweep)})
    if args.oracle:
        ps = _load_points(args)
        res = oracle.min_wiener_path_bruteforce(ps, force=args.force, threads=args.threads)
        row = serialize.oracle_to_json(res)
        row["planar"] = paths.is_path_planar(res.best_witness, ps)
        rows.append(row)
        svg_points, svg_path = ps, res.best_witness
    if args.bound_check:
        ps = _load_points(args)
        if args.path is not None:
            path = serialize.path_from_json(_read_json(args.path))
        else:
            path = oracle.min_wiener_path_bruteforce(ps, force=args.force).best_witness
        check = paths.grid_path_bound_check(ps, path, tol=args.tolerance)
        rows.append({"order": list(path.order), **check._asdict()})
        svg_points, svg_path = ps, path
    if not rows:
        raise InvalidInput("choose at least one of --twelve-config, --sweep, --oracle, --bound-check")
    if args.svg:
        if svg_points is None:
            raise InvalidInput("--svg needs a path to draw")
        Path(args.svg).write_text(render.render_svg(svg_points, svg_path.edges()), encoding="utf-8")
    _write(args, serialize.dumps(rows))
    return EXIT_OK


def cmd_render(args) -> int:
    ps = _load_points(args)
    edges = None
    if args.tree:
        tree = serialize.tree_from_json(_read_json(args.tree))
        if tree.n != len(ps):
            raise InvalidInput(f"tree has {tree.n} nodes but there are {len(ps)} points")
        edges = tree.edges
    elif args.path:
        path = serialize.path_from_json(_read_json(args.path))
        if not path.is_valid(len(ps)):
            raise InvalidInput("path is not a permutation of the points")
        edges = path.edges()
    _write(args, render.render_svg(ps, edges))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-i", "--input", help="input JSON file (default: stdin)")
    common.add_argument("-o", "--output", help="output file (default: stdout)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--tolerance", type=float, default=1e-9)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--force", action="store_true",
                        help="run exhaustive searches above their size caps")

    parser = _Usage(prog="wienertree", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Usage)

    gen = sub.add_parser("gen", parents=[common], help="generate a point set")
    gen.add_argument("kind", choices=["convex", "grid", "partition", "path-counterexample"])
    gen.add_argument("--n", type=int, default=8)
    gen.add_argument("--w", type=int, default=3)
    gen.add_argument("--h", type=int, default=3)
    gen.add_argument("--x", default="1,1", help="Partition numbers, comma-separated")
    gen.add_argument("--sidecar", help="where to write B/W/roles (partition, with -o)")
    gen.add_argument("--m", type=int, default=1)
    gen.add_argument("--epsilon", type=float, default=0.0)
    gen.set_defaults(func=cmd_gen)

    solve = sub.add_parser("solve", parents=[common], help="exact DP for convex position")
    solve.add_argument("--tables", action="store_true", help="also dump both DP tables")
    solve.set_defaults(func=cmd_solve)

    wien = sub.add_parser("wiener", parents=[common], help="Wiener index of a given tree")
    wien.add_argument("--tree", help="tree JSON (default: 'edges' inside the input)")
    wien.set_defaults(func=cmd_wiener)

    orc = sub.add_parser("oracle", parents=[common], help="exhaustive minimisation")
    orc.add_argument("--mode", choices=["tree", "path", "budgeted"], default="tree")
    orc.add_argument("--budget", type=float)
    orc.set_defaults(func=cmd_oracle)

    pth = sub.add_parser("paths", parents=[common], help="Hamiltonian-path experiments")
    pth.add_argument("--twelve-config", type=int, metavar="M")
    pth.add_argument("--sweep", type=int, metavar="M_MAX")
    pth.add_argument("--oracle", action="store_true")
    pth.add_argument("--bound-check", action="store_true")
    pth.add_argument("--path", help="path JSON for --bound-check (default: oracle optimum)")
    pth.add_argument("--svg", help="also write an SVG of the path")
    pth.set_defaults(func=cmd_paths)

    rnd = sub.add_parser("render", parents=[common], help="draw points and edges as SVG")
    rnd.add_argument("--tree")
    rnd.add_argument("--path")
    rnd.set_defaults(func=cmd_render)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.tolerance <= 0:
        parser.error("--tolerance must be positive")
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    try:
        return args.func(args)
    except LimitExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except Infeasible as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
