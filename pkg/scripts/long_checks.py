"""Rank 6 to 8 confluence rows.  Slow: B8 and C8 take about a minute each
and the E8 rows (pass --types E8) take about 50 minutes and 4 GB.

    python3 scripts/long_checks.py --types B7 E7 --budget 50000000
"""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

from centralfiring import build
from centralfiring.central import BudgetExceeded, conjecture_prediction, start_weights, sweep

DEFAULT_TYPES = ["B6", "C6", "D6", "E6", "A7", "B7", "C7", "D7", "E7", "A8", "B8", "C8", "D8"]


@dataclass
class LongConfig:
    types: list[str] = field(default_factory=lambda: list(DEFAULT_TYPES))
    budget: int = 50_000_000


def run(cfg: LongConfig) -> bool:
    ok = True
    for t in cfg.types:
        rs = build(t)
        t0 = time.perf_counter()
        nodes = 0
        mismatches = []
        for label, w in start_weights(rs):
            pred = conjecture_prediction(rs, w)
            try:
                s = sweep(rs, w, cfg.budget)
            except (BudgetExceeded, MemoryError) as e:
                mismatches.append(f"{label}:{type(e).__name__}")
                continue
            nodes += s.nodes_explored
            if s.confluent != pred:
                mismatches.append(label)
        ok &= not mismatches
        status = "ok" if not mismatches else "FAIL " + ",".join(mismatches)
        print(f"{t:3} nodes={nodes:>10} {time.perf_counter() - t0:7.1f}s {status}", flush=True)
    return ok


if __name__ == "__main__":
    p = argparse.ArgumentParser()
    p.add_argument("--types", nargs="*")
    p.add_argument("--budget", type=int, default=50_000_000)
    a = p.parse_args()
    cfg = LongConfig(budget=a.budget)
    if a.types:
        cfg.types = a.types
    raise SystemExit(0 if run(cfg) else 1)
