"""Deterministic command-line interface: JSON-lines (or TSV) on stdout.

Every record is a single JSON object with the fields ``kind, m, n, tau``
followed by any record-specific fields and a ``payload``.  Output contains
integers, strings and nulls only; never floating point.  Identical
arguments always produce byte-identical output.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 admissibility violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .orbits import normalize_partition
from .parking import enumerate_dyck_paths, enumerate_parking_functions, fuss_catalan, lattice_to_parking
from .scalars import parse_scalar
from .tilting import color_blocks, t_grid, tilting_weights
from .treecount import build_graph, contract, regular_orbit_count_mobius, spanning_tree_count
from .verify import DEFAULT_SEED, run_checks
from .zonotope import NotAdmissibleError, ZonotopeSpec, enumerate_lattice_points, is_admissible


class UsageError(ValueError):
    pass


def _record(kind: str, m, n, tau, payload, **extra) -> dict:
    record = {"kind": kind, "m": m, "n": n, "tau": tau}
    record.update(extra)
    record["payload"] = payload
    return record


def _parse_tau(text: str):
    try:
        return parse_scalar(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _require_admissible(m: int, n: int, tau):
    if not is_admissible(m, n, tau):
        raise NotAdmissibleError(f"tau = {tau} is not admissible for m={m}, n={n}")


def _parse_partition(text: str, n: int):
    try:
        blocks = [
            [int(piece) for piece in chunk.split(",") if piece != ""]
            for chunk in text.split("|")
        ]
        return normalize_partition(blocks, n)
    except ValueError as exc:
        raise UsageError(f"bad partition {text!r}: {exc}") from None


def _partition_text(blocks) -> str:
    return "|".join(",".join(str(i) for i in block) for block in blocks)


# -- command handlers -------------------------------------------------------


def _cmd_enumerate(args):
    tau = _parse_tau(args.tau)
    _require_admissible(args.m, args.n, tau)
    spec = ZonotopeSpec(args.m, args.n, tau)
    tau_text = str(spec.tau)
    records = [
        _record("point", args.m, args.n, tau_text, list(point))
        for point in enumerate_lattice_points(spec)
    ]
    records.append(_record("summary", args.m, args.n, tau_text, {"count": len(records)}))
    return records, 0


def _cmd_bijection(args):
    tau = _parse_tau(args.tau)
    _require_admissible(args.m, args.n, tau)
    spec = ZonotopeSpec(args.m, args.n, tau)
    tau_text = str(spec.tau)
    records = []
    for point in enumerate_lattice_points(spec):
        pf = lattice_to_parking(point, spec)
        payload = {"lattice": list(point), "parking": list(pf)}
        records.append(_record("pair", args.m, args.n, tau_text, payload))
    records.append(_record("summary", args.m, args.n, tau_text, {"count": len(records)}))
    return records, 0


def _cmd_parking(args):
    functions = enumerate_parking_functions(args.m, args.n)
    records = [_record("parking", args.m, args.n, None, list(a)) for a in functions]
    records.append(_record("summary", args.m, args.n, None, {"count": len(functions)}))
    return records, 0


def _cmd_dyck(args):
    paths = enumerate_dyck_paths(args.m, args.n)
    records = [_record("dyck", args.m, args.n, None, list(a)) for a in paths]
    records.append(_record("summary", args.m, args.n, None, {"count": len(paths)}))
    return records, 0


def _cmd_catalan(args):
    return [_record("catalan", args.m, args.n, None, fuss_catalan(args.m, args.n))], 0


def _cmd_trees(args):
    graph = build_graph(args.m, args.n)
    if args.partition is None:
        return [_record("trees", args.m, args.n, None, spanning_tree_count(graph))], 0
    blocks = _parse_partition(args.partition, args.n)
    count = spanning_tree_count(contract(graph, blocks))
    record = _record(
        "trees", args.m, args.n, None, count, partition=_partition_text(blocks)
    )
    return [record], 0


def _cmd_mobius_count(args):
    return [
        _record("mobius_count", args.m, args.n, None, regular_orbit_count_mobius(args.m, args.n))
    ], 0


def _cmd_tilting(args):
    try:
        t = Fraction(args.t)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad t value {args.t!r}: {exc}") from None
    if t not in t_grid(args.n):
        raise UsageError(f"t = {t} is not on the grid for n = {args.n}")
    table = tilting_weights(args.m, args.n, t, window=args.window)
    tau_text = str(table.tau)
    records = []
    histogram = {}
    for block in color_blocks(table):
        histogram[str(block.color)] = len(block.weights)
        for xi in block.weights:
            records.append(
                _record("weight", args.m, args.n, tau_text, list(xi), color=block.color)
            )
    summary = {"t": str(t), "count": len(table.weights), "colors": histogram}
    records.append(_record("summary", args.m, args.n, tau_text, summary))
    return records, 0


def _cmd_verify(args):
    results = run_checks(max_m=args.max_m, max_n=args.max_n, seed=args.seed)
    records = []
    failures = 0
    for result in results:
        failures += 0 if result.ok else 1
        payload = {"name": result.name, "ok": result.ok}
        if result.detail:
            payload["detail"] = result.detail
        records.append(
            _record("check", result.params.get("m"), result.params.get("n"), None, payload)
        )
    records.append(
        _record("summary", None, None, None, {"checks": len(results), "failures": failures})
    )
    return records, 0 if failures == 0 else 1


# -- output -----------------------------------------------------------------


def _flatten(value, nested: bool = False) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ",".join(str(item) for item in value)
    if isinstance(value, dict):
        if nested:
            return ",".join(f"{k}:{_flatten(v, True)}" for k, v in value.items())
        return ";".join(f"{k}={_flatten(v, True)}" for k, v in value.items())
    return str(value)


def _emit(records, fmt: str, out) -> None:
    if fmt == "json":
        for record in records:
            out.write(json.dumps(record, separators=(",", ":")) + "\n")
    else:
        for record in records:
            out.write("\t".join(_flatten(v) for v in record.values()) + "\n")


# -- parser -----------------------------------------------------------------


def _add_mn(parser: argparse.ArgumentParser):
    parser.add_argument("--m", type=int, required=True, help="edge multiplicity m >= 1")
    parser.add_argument("--n", type=int, required=True, help="dimension n >= 1")
    parser.add_argument(
        "--format", choices=("json", "tsv"), default="json", help="output format"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zonopark",
        description="Exact lattice-point combinatorics of the shifted zonotope.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list the lattice points of the zonotope")
    _add_mn(p)
    p.add_argument("--tau", required=True, help="shift, e.g. 11/6 or 1-eps")
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("bijection", help="emit lattice point / parking function pairs")
    _add_mn(p)
    p.add_argument("--tau", required=True, help="shift, e.g. 11/6 or 1-eps")
    p.set_defaults(handler=_cmd_bijection)

    p = sub.add_parser("parking", help="list all (m, n)-parking functions")
    _add_mn(p)
    p.set_defaults(handler=_cmd_parking)

    p = sub.add_parser("dyck", help="list all (m, n)-Dyck paths")
    _add_mn(p)
    p.set_defaults(handler=_cmd_dyck)

    p = sub.add_parser("catalan", help="print the Fuss-Catalan number A_n(m, 1)")
    _add_mn(p)
    p.set_defaults(handler=_cmd_catalan)

    p = sub.add_parser("trees", help="count spanning trees of the companion graph")
    _add_mn(p)
    p.add_argument(
        "--partition",
        default=None,
        help="contract blocks first; blocks joined by '|', elements by ',' (e.g. 1,2|3)",
    )
    p.set_defaults(handler=_cmd_trees)

    p = sub.add_parser(
        "mobius-count", help="count regular orbits via Mobius inversion over tree counts"
    )
    _add_mn(p)
    p.set_defaults(handler=_cmd_mobius_count)

    p = sub.add_parser("tilting", help="print the weight table for a grid value t")
    _add_mn(p)
    p.add_argument("--t", required=True, help="grid value, e.g. 0 or -2/3")
    p.add_argument(
        "--window",
        choices=("low", "high"),
        default="low",
        help="shift convention; 'high' selects the alternative window",
    )
    p.set_defaults(handler=_cmd_tilting)

    p = sub.add_parser("verify", help="run the invariant suite")
    p.add_argument("--max-n", dest="max_n", type=int, default=4)
    p.add_argument("--max-m", dest="max_m", type=int, default=3)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument(
        "--format", choices=("json", "tsv"), default="json", help="output format"
    )
    p.set_defaults(handler=_cmd_verify)

    return parser


def _fuse_flag_values(argv: list[str]) -> list[str]:
    """Join value-taking flags with their argument so '-2/3' is not read as a flag."""
    fused = []
    i = 0
    while i < len(argv):
        if argv[i] in ("--t", "--tau") and i + 1 < len(argv):
            fused.append(argv[i] + "=" + argv[i + 1])
            i += 2
        else:
            fused.append(argv[i])
            i += 1
    return fused


def main(argv=None) -> int:
    raw = list(sys.argv[1:]) if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(_fuse_flag_values(raw))
    try:
        records, code = args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NotAdmissibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(records, args.format, sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
