"""Command-line interface.

Exit codes: 0 success or positive verdict, 1 negative verdict, 2 usage
error, 3 indeterminate (a state, size, or time budget ran out), 4
internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import os
import signal
import sys

from . import __version__
from .blocks import block_decomposition
from .bounds import bound_report, p_block
from .errors import (
    BudgetExceeded,
    GraphFormatError,
    SizeLimitError,
    StepError,
    TimeBudgetExceeded,
)
from .families import FAMILIES, generate, minimality_check, universal_p
from .multigraph import parse_graph, serialize_graph
from .reduction import (
    BisectionInstance,
    min_bisection_exact,
    reduce_bisection_to_etw,
    verify_reduction,
)
from .treelayout import (
    layout_to_tree_layout,
    parse_tree_layout,
    serialize_tree_layout,
    tree_layout_to_layout,
)
from .widths import PARAM_KINDS, CostKind, cost_profile, width_exact

EXIT_OK = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_INDETERMINATE = 3
EXIT_INTERNAL = 4


def _env_default(name: str, cast, fallback):
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return cast(raw)
    except ValueError:
        raise ValueError(f"bad value for {name}: {raw!r}") from None


def _read_graph(path: str):
    with open(path, "rb") as fh:
        return parse_graph(fh.read())


def _parse_layout_arg(raw: str) -> tuple[int, ...]:
    fields = raw.replace(",", " ").split()
    if fields and fields[0] == "layout":
        fields = fields[1:]
    try:
        return tuple(int(x) for x in fields)
    except ValueError:
        raise GraphFormatError(f"bad layout {raw!r}") from None


def _emit(args, text_lines, payload):
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="etw",
        description="Exact layout widths, containment relations, obstruction "
        "families and the bisection reduction on loop-free multigraphs.",
    )
    p.add_argument("--version", action="version", version=f"etw {__version__}")
    p.add_argument("--exact-limit", type=int,
                   default=_env_default("ETW_EXACT_LIMIT", int, 22),
                   help="largest vertex count solved exactly (default 22)")
    p.add_argument("--iso-limit", type=int,
                   default=_env_default("ETW_ISO_LIMIT", int, 10),
                   help="largest vertex count canonicalized (default 10)")
    p.add_argument("--bfs-budget", type=int,
                   default=_env_default("ETW_BFS_BUDGET", int, 2_000_000),
                   help="containment search state budget (default 2e6)")
    p.add_argument("--timeout", type=float,
                   default=_env_default("ETW_TIMEOUT", float, 0.0),
                   help="wall-clock budget in seconds, 0 = none")
    p.add_argument("--threads", type=int,
                   default=_env_default("ETW_THREADS", int, 0),
                   help="accepted for compatibility; evaluation is "
                   "deterministic and single-threaded")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="exact width with witness")
    c.add_argument("--param", choices=[*PARAM_KINDS, "p-block"], required=True)
    c.add_argument("--root", type=int, default=None)
    c.add_argument("--json", action="store_true")
    c.add_argument("file")

    c = sub.add_parser("profile", help="evaluate a layout's cost profile")
    c.add_argument("--kind", choices=[k.value for k in CostKind], required=True)
    c.add_argument("--layout", required=True)
    c.add_argument("--json", action="store_true")
    c.add_argument("file")

    c = sub.add_parser("generate", help="emit a named family member")
    c.add_argument("--family", choices=sorted(FAMILIES), required=True)
    c.add_argument("--index", type=int, required=True)
    c.add_argument("--dot", action="store_true")
    c.add_argument("-o", "--output", default=None)

    c = sub.add_parser("contain", help="decide H <= G under a relation")
    c.add_argument("--relation", choices=["mn", "tp", "im", "wtp"], required=True)
    c.add_argument("pattern", help="file holding H")
    c.add_argument("host", help="file holding G")

    c = sub.add_parser("obstruction-check", help="one-step minimality at a width threshold")
    c.add_argument("--k", type=int, choices=[1, 2], required=True)
    c.add_argument("file")

    c = sub.add_parser("universal-p", help="layered antichain containment parameter")
    c.add_argument("--max-layer", type=int, required=True)
    c.add_argument("file")

    c = sub.add_parser("bounds", help="width quantities and inequality verdicts")
    c.add_argument("--json", action="store_true")
    c.add_argument("file")

    c = sub.add_parser("blocks", help="block decomposition and block tree")
    c.add_argument("--json", action="store_true")
    c.add_argument("file")

    c = sub.add_parser("convert", help="layout/tree-layout/dot conversions")
    c.add_argument("--to", choices=["treelayout", "layout", "dot"], required=True)
    c.add_argument("--layout", default=None, help="layout ids (for --to treelayout)")
    c.add_argument("--tree-layout", default=None,
                   help="tree-layout file (for --to layout)")
    c.add_argument("-o", "--output", default=None)
    c.add_argument("file")

    c = sub.add_parser("np-reduce", help="emit the width instance of a bisection instance")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("-o", "--output", default=None)
    c.add_argument("file")

    c = sub.add_parser("verify-reduction", help="check both reduction directions exactly")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("file")

    c = sub.add_parser("min-bisection", help="exact balanced bisection")
    c.add_argument("--k", type=int, default=None)
    c.add_argument("file")
    return p


def _cmd_compute(args) -> int:
    g = _read_graph(args.file)
    if args.param == "p-block":
        if args.root is not None:
            raise ValueError("--root does not apply to p-block")
        value = p_block(g, exact_limit=args.exact_limit)
        dec = block_decomposition(g)
        lines = [f"p-block {value}"]
        blocks_payload = []
        for i, blk in enumerate(dec.blocks):
            tw = width_exact(blk.graph, CostKind.VC, exact_limit=args.exact_limit).value
            edeg = max((blk.graph.edeg(v) for v in blk.graph.vertices()), default=0)
            lines.append(
                "block %d vertices %s tw %d max-edeg %d"
                % (i, " ".join(map(str, blk.vertex_map)), tw, edeg)
            )
            blocks_payload.append({"vertices": list(blk.vertex_map), "tw": tw, "max_edeg": edeg})
        _emit(args, lines, {"param": "p-block", "value": value, "blocks": blocks_payload})
        return EXIT_OK
    kind = PARAM_KINDS[args.param]
    cert = width_exact(g, kind, root=args.root, exact_limit=args.exact_limit)
    lines = [f"{args.param} {cert.value}", "layout " + " ".join(map(str, cert.witness))]
    _emit(args, lines, {"param": args.param, "value": cert.value,
                        "layout": list(cert.witness), "root": cert.rooted_at})
    return EXIT_OK


def _cmd_profile(args) -> int:
    g = _read_graph(args.file)
    layout = _parse_layout_arg(args.layout)
    profile = cost_profile(g, layout, CostKind(args.kind))
    lines = ["profile " + " ".join(map(str, profile)),
             f"max {max(profile, default=0)}"]
    _emit(args, lines, {"kind": args.kind, "profile": list(profile),
                        "max": max(profile, default=0)})
    return EXIT_OK


def _cmd_generate(args) -> int:
    g = generate(args.family, args.index)
    data = serialize_graph(g, "dot" if args.dot else "native")
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(data + b"\n")
    else:
        sys.stdout.write(data.decode() + "\n")
    return EXIT_OK


def _cmd_contain(args) -> int:
    from .rewrites import Relation, contains

    h = _read_graph(args.pattern)
    g = _read_graph(args.host)
    rel = Relation(args.relation)
    verdict = contains(h, g, rel, bfs_budget=args.bfs_budget, iso_limit=args.iso_limit)
    print("true" if verdict else "false")
    return EXIT_OK if verdict else EXIT_NO


def _cmd_obstruction_check(args) -> int:
    g = _read_graph(args.file)
    verdict = minimality_check(g, args.k, exact_limit=args.exact_limit)
    print("true" if verdict else "false")
    return EXIT_OK if verdict else EXIT_NO


def _cmd_universal_p(args) -> int:
    g = _read_graph(args.file)
    value = universal_p(g, args.max_layer,
                        bfs_budget=args.bfs_budget, iso_limit=args.iso_limit)
    print(value)
    return EXIT_OK


def _cmd_bounds(args) -> int:
    g = _read_graph(args.file)
    report = bound_report(g, exact_limit=args.exact_limit)
    lines = [
        f"tw      {report.tw}",
        f"pw      {report.pw}",
        f"cw      {report.cw}",
        f"etw     {report.etw}",
        f"p-block {report.p_block}",
        f"max-edeg {report.max_edeg}",
    ]
    for name, ok in report.verdicts.items():
        lines.append(f"verdict {name} {'true' if ok else 'false'}")
    payload = {
        "tw": report.tw, "pw": report.pw, "cw": report.cw, "etw": report.etw,
        "p_block": report.p_block, "max_edeg": report.max_edeg,
        "verdicts": report.verdicts,
        "witnesses": {k: list(c.witness) for k, c in report.witnesses.items()},
    }
    _emit(args, lines, payload)
    if not all(report.verdicts.values()):
        print("etw: a proved inequality failed; this is a bug", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def _cmd_blocks(args) -> int:
    g = _read_graph(args.file)
    dec = block_decomposition(g)
    lines = ["cut-vertices " + " ".join(map(str, sorted(dec.cut_vertices)))]
    payload_blocks = []
    for i, blk in enumerate(dec.blocks):
        kind = "bridge" if blk.is_bridge else "2-connected"
        lines.append(
            "block %d %s vertices %s copies %d"
            % (i, kind, " ".join(map(str, blk.vertex_map)), blk.graph.num_edge_copies())
        )
        payload_blocks.append({
            "vertices": list(blk.vertex_map),
            "bridge": blk.is_bridge,
            "copies": blk.graph.num_edge_copies(),
        })
    for (a, b) in dec.tree_edges:
        lines.append(f"tree-edge {a[0]}:{a[1]} {b[0]}:{b[1]}")
    _emit(args, lines, {
        "cut_vertices": sorted(dec.cut_vertices),
        "blocks": payload_blocks,
        "tree_edges": [[list(a), list(b)] for (a, b) in dec.tree_edges],
    })
    return EXIT_OK


def _cmd_convert(args) -> int:
    g = _read_graph(args.file)
    if args.to == "dot":
        data = serialize_graph(g, "dot")
    elif args.to == "treelayout":
        if args.layout is None:
            raise ValueError("--to treelayout needs --layout")
        t = layout_to_tree_layout(g, _parse_layout_arg(args.layout))
        data = serialize_tree_layout(t)
    else:
        if args.tree_layout is None:
            raise ValueError("--to layout needs --tree-layout FILE")
        with open(args.tree_layout, "rb") as fh:
            t = parse_tree_layout(fh.read())
        layout = tree_layout_to_layout(g, t)
        data = ("layout " + " ".join(map(str, layout))).encode()
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(data + b"\n")
    else:
        sys.stdout.write(data.decode() + "\n")
    return EXIT_OK


def _cmd_np_reduce(args) -> int:
    g = _read_graph(args.file)
    inst = reduce_bisection_to_etw(BisectionInstance(graph=g, k=args.k))
    header = f"# w {inst.threshold}\n".encode()
    data = header + serialize_graph(inst.graph) + b"\n"
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.write(data.decode())
    return EXIT_OK


def _cmd_verify_reduction(args) -> int:
    g = _read_graph(args.file)
    verdict = verify_reduction(BisectionInstance(graph=g, k=args.k),
                               exact_limit=args.exact_limit)
    print(f"min-bisection {verdict.bisection_value} "
          f"{'yes' if verdict.bisection_yes else 'no'}")
    print(f"etw {verdict.etw_value} threshold {verdict.threshold} "
          f"{'yes' if verdict.etw_yes else 'no'}")
    if verdict.witness_profile_max is not None:
        print(f"witness-profile-max {verdict.witness_profile_max} "
              f"{'ok' if verdict.witness_ok else 'too-high'}")
    print(f"agreement {'true' if verdict.agree else 'false'}")
    return EXIT_OK if verdict.agree and verdict.witness_ok is not False else EXIT_NO


def _cmd_min_bisection(args) -> int:
    g = _read_graph(args.file)
    res = min_bisection_exact(g)
    print(f"value {res.value}")
    print("side1 " + " ".join(map(str, res.side1)))
    print("side2 " + " ".join(map(str, res.side2)))
    if args.k is not None:
        return EXIT_OK if res.value <= args.k else EXIT_NO
    return EXIT_OK


_COMMANDS = {
    "compute": _cmd_compute,
    "profile": _cmd_profile,
    "generate": _cmd_generate,
    "contain": _cmd_contain,
    "obstruction-check": _cmd_obstruction_check,
    "universal-p": _cmd_universal_p,
    "bounds": _cmd_bounds,
    "blocks": _cmd_blocks,
    "convert": _cmd_convert,
    "np-reduce": _cmd_np_reduce,
    "verify-reduction": _cmd_verify_reduction,
    "min-bisection": _cmd_min_bisection,
}


def main(argv=None) -> int:
    try:
        parser = build_parser()
        args = parser.parse_args(argv)
    except ValueError as exc:
        print(f"etw: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.timeout and args.timeout > 0 and hasattr(signal, "SIGALRM"):
        def _on_alarm(signum, frame):
            raise TimeBudgetExceeded(f"wall clock exceeded {args.timeout}s")

        signal.signal(signal.SIGALRM, _on_alarm)
        signal.setitimer(signal.ITIMER_REAL, args.timeout)
    try:
        return _COMMANDS[args.command](args)
    except BudgetExceeded as exc:
        print(f"indeterminate: {exc}", file=sys.stderr)
        return EXIT_INDETERMINATE
    except (GraphFormatError, StepError, SizeLimitError, ValueError, OSError) as exc:
        print(f"etw: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"etw: internal invariant failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    finally:
        if args.timeout and args.timeout > 0 and hasattr(signal, "SIGALRM"):
            signal.setitimer(signal.ITIMER_REAL, 0.0)


if __name__ == "__main__":
    sys.exit(main())
