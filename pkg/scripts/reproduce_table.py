"""Recompute the small-rank confluence table and compare with the prediction.

    python3 scripts/reproduce_table.py            # all small types
    python3 scripts/reproduce_table.py --types A4 G2 --json
"""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass, field

from centralfiring.central import default_budget
from centralfiring.cli import TABLE_TYPES, cmd_verify


@dataclass
class TableConfig:
    types: list[str] = field(default_factory=lambda: list(TABLE_TYPES))
    budget: int = field(default_factory=default_budget)
    as_json: bool = False


def run(cfg: TableConfig) -> bool:
    t0 = time.perf_counter()
    rows = cmd_verify(cfg.types, cfg.budget)
    if cfg.as_json:
        print(json.dumps([asdict(r) for r in rows], indent=1))
    else:
        by_type: dict[str, list] = {}
        for r in rows:
            by_type.setdefault(r.type, []).append(r)
        for t, rs in by_type.items():
            conf = [r.start for r in rs if r.computed]
            bad = [r.start for r in rs if not r.agree]
            print(f"{t:4} confluent from {{{', '.join(conf)}}}" + (f"  MISMATCH {bad}" if bad else ""))
        print(f"{len(rows)} rows, {time.perf_counter() - t0:.1f}s")
    return all(r.agree for r in rows)


if __name__ == "__main__":
    p = argparse.ArgumentParser()
    p.add_argument("--types", nargs="*")
    p.add_argument("--json", action="store_true")
    a = p.parse_args()
    cfg = TableConfig(as_json=a.json)
    if a.types:
        cfg.types = a.types
    raise SystemExit(0 if run(cfg) else 1)
