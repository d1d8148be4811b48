"""Command line driver: ``python3 -m centralfiring <command> ...``."""
from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Sequence

from centralfiring import chips as chipmod
from centralfiring.central import (
    BudgetExceeded,
    conjecture_prediction,
    default_budget,
    explore_graph,
    start_weights,
    sweep,
)
from centralfiring.folding import fold, parse_sigma
from centralfiring.rootsys import RootSystemType, build, format_weight, parse_weight
from centralfiring.span import firing_span, interior_witness, is_connected
from centralfiring.ucf import format_move, game_tree, ucf_move
from centralfiring.unlabeled import OrbitWeight, orbit_normal_form

SCHEMA = 1
LONG_RANK = 6

# the small-rank table rows
TABLE_TYPES = (["A%d" % n for n in range(1, 7)] + ["B%d" % n for n in range(2, 6)]
               + ["C%d" % n for n in range(2, 6)] + ["D%d" % n for n in range(3, 6)] + ["G2", "F4"])


@dataclass
class Row:
    type: str
    start: str
    predicted: bool
    computed: bool | None
    agree: bool
    nodes_explored: int
    elapsed_ms: int
    normal_forms: int | None
    skipped: bool = False


def _run_row(args: tuple[str, str, tuple[int, ...], int]) -> Row:
    tname, label, w, budget = args
    rs = build(tname)
    pred = conjecture_prediction(rs, w)
    t0 = time.perf_counter()
    try:
        res = sweep(rs, w, budget)
    except BudgetExceeded as e:
        ms = int((time.perf_counter() - t0) * 1000)
        return Row(tname, label, pred, None, False, e.explored, ms, None, skipped=True)
    ms = int((time.perf_counter() - t0) * 1000)
    return Row(tname, label, pred, res.confluent, pred == res.confluent, res.nodes_explored, ms,
               len(res.stable))


def cmd_verify(types: Sequence[str], budget: int, threads: int = 1) -> list[Row]:
    jobs = []
    for t in types:
        rs = build(t)
        jobs.extend((str(rs.type), label, w, budget) for label, w in start_weights(rs))
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            return list(ex.map(_run_row, jobs))
    return [_run_row(j) for j in jobs]


def _expand_types(names: Sequence[str]) -> list[str]:
    out = []
    for name in names:
        out.extend(TABLE_TYPES if name.lower() == "table" else [str(RootSystemType.parse(name))])
    return out


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps({"schema": SCHEMA, **payload}, indent=1, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text)


def _mark(b: bool | None) -> str:
    return "-" if b is None else ("T" if b else "F")


def _verify(args) -> int:
    types = _expand_types(args.types)
    # A6 belongs to the small table and runs in milliseconds
    too_big = [t for t in types if build(t).rank >= LONG_RANK and t not in TABLE_TYPES]
    if too_big and not args.long:
        print(f"rank >= {LONG_RANK} needs --long: {', '.join(too_big)}", file=sys.stderr)
        return 2
    rows = cmd_verify(types, args.budget, args.threads)
    ok = all(r.agree and not r.skipped for r in rows)
    payload_rows = []
    for r in rows:
        d = asdict(r)
        if not args.timing:
            d.pop("elapsed_ms")
        payload_rows.append(d)
    lines = []
    for r in rows:
        extra = f" {r.elapsed_ms:>7}ms" if args.timing else ""
        status = "SKIP" if r.skipped else ("ok" if r.agree else "MISMATCH")
        lines.append(f"{r.type:<4} {r.start:<4} predicted={_mark(r.predicted)} "
                     f"computed={_mark(r.computed)} nodes={r.nodes_explored:>9}{extra} {status}")
    lines.append(f"all agree: {ok}")
    _emit(args, {"command": "verify", "rows": payload_rows, "all_agree": ok}, "\n".join(lines) + "\n")
    return 0 if ok else 1


def _stabilize(args) -> int:
    rs = build(args.type)
    if args.chips is not None:
        if rs.type.family != "A":
            print("unlabeled chip stabilization is implemented for Type A", file=sys.stderr)
            return 2
        xs = [int(x) for x in args.chips.replace("−", "-").split(",")]
        if len(xs) != rs.rank + 1:
            print(f"{rs.type} needs {rs.rank + 1} chips", file=sys.stderr)
            return 2
        v = chipmod.UnlabeledConfig.of(xs)
        out = chipmod.stabilize_unlabeled_typeA(v)
        p = chipmod.pseudo_stabilization(v)
        _emit(args, {"command": "stabilize", "mode": "unlabeled", "chips": list(v.positions),
                     "stable": list(out.positions), "pseudo": list(p.positions)},
              f"{format_weight(out.positions)}\n")
        return 0
    lam = parse_weight(rs, args.weight)
    if args.mode == "unlabeled":
        nf = orbit_normal_form(rs, OrbitWeight.of(rs, lam))
        _emit(args, {"command": "stabilize", "mode": "unlabeled", "weight": list(lam), **nf.to_json()},
              f"W({format_weight(nf.rep)})\n")
        return 0
    res = sweep(rs, lam, args.budget)
    text = "".join(f"{format_weight(v)}\n" for v in res.stable)
    if rs.type.family in "ABCD" and args.format == "text":
        text += "".join(chipmod.render(chipmod.weight_to_chips(rs, v)) for v in res.stable)
    _emit(args, {"command": "stabilize", "mode": "labeled", "weight": list(lam),
                 "normal_forms": [list(v) for v in res.stable], "confluent": res.confluent}, text)
    return 0


def _ucf(args) -> int:
    rs = build(args.type)
    if not rs.type.simply_laced:
        print(f"the number game needs a simply laced type, got {rs.type}", file=sys.stderr)
        return 2
    f = parse_weight(rs, args.weight)
    if any(x < 0 for x in f):
        print("UCF states are nonnegative", file=sys.stderr)
        return 2
    moves = []
    if args.script:
        cur = f
        for chunk in args.script.split(";"):
            comp = tuple(sorted(int(x) for x in chunk.split(",") if x.strip()))
            nxt = ucf_move(rs, cur, comp)
            moves.append((cur, comp, nxt))
            cur = nxt
    else:
        moves = game_tree(rs, f, args.depth)
    lines = [format_weight(f)]
    lines += [f"{format_weight(a)} : {format_move(c, b)}" for a, c, b in moves]
    _emit(args, {"command": "ucf", "start": list(f),
                 "moves": [{"from": list(a), "component": list(c), "to": list(b)} for a, c, b in moves]},
          "\n".join(lines) + "\n")
    return 0


def _span(args) -> int:
    rs = build(args.type)
    lam = parse_weight(rs, args.weight)
    fs = firing_span(rs, lam, args.budget)
    text = f"dim {fs.dim}\n" + "".join(" ".join(str(x) for x in row) + "\n" for row in fs.basis)
    _emit(args, {"command": "span", "weight": list(lam), **fs.to_json()}, text)
    return 0


def _connected(args) -> int:
    rs = build(args.type)
    lam = parse_weight(rs, args.weight)
    conn = is_connected(rs, lam, args.budget)
    payload = {"command": "connected", "weight": list(lam), "connected": conn}
    text = f"{conn}\n"
    if rs.type.family == "A":
        w = interior_witness(rs, lam)
        payload["witness"] = {"omega": list(w.omega), "coefficients": [str(c) for c in w.coeffs],
                              "inside": w.inside}
        text += f"rho+omega = {format_weight(w.top)}; coefficients {' '.join(map(str, w.coeffs))}\n"
    _emit(args, payload, text)
    return 0


def _chips(args) -> int:
    rs = build(args.type)
    lam = parse_weight(rs, args.weight)
    cfg = chipmod.weight_to_chips(rs, lam)
    moves = chipmod.legal_moves(rs.type.family, cfg)
    text = chipmod.render(cfg) + "moves: " + (" ".join(map(str, moves)) or "none") + "\n"
    _emit(args, {"command": "chips", "weight": list(lam), **cfg.to_json(),
                 "moves": [str(m) for m in moves]}, text)
    return 0


def _fold(args) -> int:
    rs = build(args.source)
    fo = fold(rs, parse_sigma(args.sigma, rs.rank))
    lines = [f"{fo.source} -> {fo.target}"]
    lines += [f"  node {a}: {{{','.join(map(str, orb))}}}" for a, orb in fo.relabeling().items()]
    lines += ["  cartan " + " ".join(f"{x:>2}" for x in row) for row in fo.folded_cartan]
    _emit(args, {"command": "fold", "source": str(fo.source), "target": str(fo.target),
                 "orbits": [list(o) for o in fo.orbits],
                 "cartan": [list(r) for r in fo.folded_cartan]}, "\n".join(lines) + "\n")
    return 0


def _export(args) -> int:
    rs = build(args.type)
    lam = parse_weight(rs, args.weight)
    g = explore_graph(rs, lam, args.budget)
    data = g.to_dot() if args.graph_format == "dot" else g.dumps_json()
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(data)
    except OSError as e:
        print(f"cannot write {args.out}: {e}", file=sys.stderr)
        return 3
    return 0 if g.complete else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=None,
                        help="node budget (default from CENTRALFIRING_BUDGET or 50M)")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--long", action="store_true", help="allow rank >= 6 verification")
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = argparse.ArgumentParser(prog="centralfiring", description="Central-firing on root systems.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", parents=[common], help="compare confluence with the prediction")
    s.add_argument("types", nargs="+", help="types such as A3, or 'table' for the small-rank set")
    s.add_argument("--timing", action="store_true", help="include wall-clock times (non-deterministic)")
    s.set_defaults(func=_verify)

    s = sub.add_parser("stabilize", parents=[common], help="normal forms of a weight")
    s.add_argument("type")
    s.add_argument("weight", nargs="?", default="0")
    s.add_argument("--mode", choices=("labeled", "unlabeled"), default="labeled")
    s.add_argument("--chips", help="Type-A unlabeled chip positions, e.g. 0,0,0,0")
    s.set_defaults(func=_stabilize)

    s = sub.add_parser("ucf", parents=[common], help="play the number game")
    s.add_argument("type")
    s.add_argument("weight", nargs="?", default="0")
    s.add_argument("--script", help="components to fire, e.g. '1,2,3,4,5;2'")
    s.add_argument("--depth", type=int, default=1000)
    s.set_defaults(func=_ucf)

    for name, fn, hlp in (("span", _span, "firing span"), ("connected", _connected, "is the span full"),
                          ("chips", _chips, "chip configuration of a weight")):
        s = sub.add_parser(name, parents=[common], help=hlp)
        s.add_argument("type")
        s.add_argument("weight")
        s.set_defaults(func=fn)

    s = sub.add_parser("fold", parents=[common], help="fold along a diagram automorphism")
    s.add_argument("source")
    s.add_argument("sigma", help="cycles, e.g. '(1 3)' or '(1 3 4)'")
    s.set_defaults(func=_fold)

    s = sub.add_parser("export", parents=[common], help="write the firing graph")
    s.add_argument("type")
    s.add_argument("weight")
    s.add_argument("--graph-format", choices=("dot", "json"), default="json")
    s.add_argument("-o", "--out", required=True)
    s.set_defaults(func=_export)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.budget is None:
        args.budget = default_budget()
    try:
        return args.func(args)
    except (ValueError, BudgetExceeded) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
