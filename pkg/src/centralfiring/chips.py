"""Labeled chip-firing for the classical types, and Type-A unlabeled stabilization.

Positions are stored doubled so that configurations on ``Z`` (all even) and
on ``Z + 1/2`` (all odd) share integer arithmetic.  Chip ``i`` sits at
coordinate ``i`` of the standard realization of the weight.

Moves, in position units:

* (a) ``i < j`` on the same spot: chip ``i`` steps right, chip ``j`` left;
* (b) a chip at ``0`` steps right;
* (c) a chip at ``0`` jumps two steps right;
* (d) ``i < j`` at opposite spots: both step right.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from typing import Iterable, Sequence

from centralfiring.central import explore_graph
from centralfiring.rootsys import (
    RootSystem,
    Weight,
    classical_coords,
    from_classical_coords,
)

MOVES_BY_FAMILY = {"A": "A", "B": "ABD", "C": "ACD", "D": "AD"}
SUM_DELTA = {"A": 0, "B": 1, "C": 2, "D": 2}  # position-sum change per move kind


class ChipMoveError(ValueError):
    def __init__(self, msg: str, indices: tuple[int, ...]):
        super().__init__(f"{msg} (chips {', '.join(map(str, indices))})")
        self.indices = indices


@dataclass(frozen=True)
class ChipConfig:
    """``positions[k]`` is twice the position of chip ``k + 1``."""
    positions: tuple[int, ...]

    def __post_init__(self):
        if len({p % 2 for p in self.positions}) > 1:
            raise ValueError(f"mixed integer and half-integer chips: {self.positions}")

    @classmethod
    def from_positions(cls, xs: Iterable) -> "ChipConfig":
        doubled = []
        for x in xs:
            d = Fraction(x) * 2
            if d.denominator != 1:
                raise ValueError(f"{x} is not a half-integer")
            doubled.append(int(d))
        return cls(tuple(doubled))

    @property
    def half(self) -> bool:
        return bool(self.positions) and self.positions[0] % 2 == 1

    @property
    def n(self) -> int:
        return len(self.positions)

    def real_positions(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(p, 2) for p in self.positions)

    def to_json(self) -> dict:
        return {"positions": [p / 2 if p % 2 else p // 2 for p in self.positions], "half": self.half}

    def dumps(self) -> str:
        return json.dumps(self.to_json())


@dataclass(frozen=True, order=True)
class Move:
    kind: str
    i: int
    j: int | None = None

    def __str__(self):
        return f"{self.kind}({self.i})" if self.j is None else f"{self.kind}({self.i},{self.j})"


def apply_move(cfg: ChipConfig, move: Move) -> ChipConfig:
    v = list(cfg.positions)
    n = len(v)
    i, j = move.i, move.j
    idx = (i,) if j is None else (i, j)
    if any(not 1 <= k <= n for k in idx):
        raise ChipMoveError("chip index out of range", idx)
    if move.kind in "AD":
        if j is None or not i < j:
            raise ChipMoveError(f"move {move.kind} needs two chips i < j", idx)
        a, b = v[i - 1], v[j - 1]
        if move.kind == "A":
            if a != b:
                raise ChipMoveError("move A needs the chips on the same spot", idx)
            v[i - 1], v[j - 1] = a + 2, b - 2
        else:
            if a != -b:
                raise ChipMoveError("move D needs the chips on opposite spots", idx)
            v[i - 1], v[j - 1] = a + 2, b + 2
    elif move.kind in "BC":
        if j is not None:
            raise ChipMoveError(f"move {move.kind} takes one chip", idx)
        if v[i - 1] != 0:
            raise ChipMoveError(f"move {move.kind} needs the chip at 0", idx)
        v[i - 1] += 2 if move.kind == "B" else 4
    else:
        raise ValueError(f"unknown move kind {move.kind!r}")
    return ChipConfig(tuple(v))


def legal_moves(family: str, cfg: ChipConfig) -> list[Move]:
    if family not in MOVES_BY_FAMILY:
        raise ValueError(f"no chip model for family {family!r}")
    kinds = MOVES_BY_FAMILY[family]
    v = cfg.positions
    n = len(v)
    out = []
    for i in range(1, n + 1):
        if v[i - 1] == 0:
            out.extend(Move(k, i) for k in "BC" if k in kinds)
        for j in range(i + 1, n + 1):
            if "A" in kinds and v[i - 1] == v[j - 1]:
                out.append(Move("A", i, j))
            if "D" in kinds and v[i - 1] == -v[j - 1]:
                out.append(Move("D", i, j))
    return out


def reachable_configs(family: str, cfg: ChipConfig, budget: int = 1_000_000) -> set[ChipConfig]:
    seen = {cfg}
    stack = [cfg]
    while stack:
        c = stack.pop()
        for m in legal_moves(family, c):
            d = apply_move(c, m)
            if d not in seen:
                if len(seen) >= budget:
                    raise RuntimeError(f"more than {budget} configurations")
                seen.add(d)
                stack.append(d)
    return seen


# ---- weights <-> configurations ---------------------------------------------

def _typeA_translate(xs: Sequence[Fraction]) -> list[Fraction]:
    """Integer translate whose sum is closest to 0 (ties toward negative)."""
    n = len(xs)
    s = sum(xs)
    lo = (-s) // n  # floor of the exact centring shift
    best = min((lo, lo + 1), key=lambda t: (abs(s + n * t), s + n * t))
    return [x + best for x in xs]


def weight_to_chips(rs: RootSystem, lam: Sequence[int]) -> ChipConfig:
    fam, n = rs.type.family, rs.rank
    if fam == "A":
        tail = [Fraction(sum(lam[k:])) for k in range(n)] + [Fraction(0)]
        return ChipConfig.from_positions(_typeA_translate(tail))
    if fam in "BCD":
        return ChipConfig.from_positions(classical_coords(rs, lam))
    raise ValueError(f"no chip model for {rs.type}")


def chips_to_weight(rs: RootSystem, cfg: ChipConfig) -> Weight:
    fam = rs.type.family
    expected = rs.rank + 1 if fam == "A" else rs.rank
    if fam not in "ABCD":
        raise ValueError(f"no chip model for {rs.type}")
    if cfg.n != expected:
        raise ValueError(f"{rs.type} needs {expected} chips, got {cfg.n}")
    return from_classical_coords(rs, cfg.real_positions())


def chip_firing_matches_central(rs: RootSystem, lam: Sequence[int], budget: int = 1_000_000) -> bool:
    """The chip game and central-firing reach the same set of weights."""
    fam = rs.type.family
    configs = reachable_configs(fam, weight_to_chips(rs, lam), budget)
    graph = explore_graph(rs, lam, budget)
    if not graph.complete:
        raise RuntimeError("central-firing graph exceeded the budget")
    return {chips_to_weight(rs, c) for c in configs} == graph.nodes


# ---- rendering --------------------------------------------------------------

def render(cfg: ChipConfig) -> str:
    """Chip diagram: one column per position, labels stacked upwards."""
    if not cfg.n:
        return "(no chips)\n"
    v = cfg.positions
    lo, hi = min(v), max(v)
    cols = list(range(lo, hi + 1, 2))
    stacks = {p: [k + 1 for k, q in enumerate(v) if q == p] for p in cols}
    width = max(len(str(cfg.n)), max(len(_fmt(p)) for p in cols)) + 1
    height = max(len(s) for s in stacks.values())
    lines = []
    for level in range(height - 1, -1, -1):
        row = "".join((str(stacks[p][level]) if level < len(stacks[p]) else "").rjust(width) for p in cols)
        lines.append(row.rstrip())
    lines.append("".join("-" * width for _ in cols))
    lines.append("".join(_fmt(p).rjust(width) for p in cols))
    return "\n".join(lines) + "\n"


def _fmt(doubled: int) -> str:
    return str(doubled // 2) if doubled % 2 == 0 else f"{doubled}/2"


# ---- Type-A unlabeled configurations ----------------------------------------

@dataclass(frozen=True)
class UnlabeledConfig:
    """Weakly decreasing integer positions of indistinguishable chips."""
    positions: tuple[int, ...]

    def __post_init__(self):
        p = self.positions
        if any(a < b for a, b in zip(p, p[1:])):
            raise ValueError(f"positions must be weakly decreasing: {p}")

    @classmethod
    def of(cls, xs: Iterable[int]) -> "UnlabeledConfig":
        return cls(tuple(sorted((int(x) for x in xs), reverse=True)))

    @property
    def n(self) -> int:
        return len(self.positions)

    @property
    def total(self) -> int:
        return sum(self.positions)

    def partial_sums(self) -> tuple[int, ...]:
        return tuple(accumulate(self.positions))

    def is_stable(self) -> bool:
        p = self.positions
        return all(a > b for a, b in zip(p, p[1:]))


def unlabeled_moves(v: UnlabeledConfig) -> list[UnlabeledConfig]:
    """Fire two chips sharing a spot; one result per crowded spot."""
    p = v.positions
    out = []
    for x in sorted(set(p), reverse=True):
        if p.count(x) >= 2:
            q = list(p)
            q[q.index(x)] += 1
            q[len(q) - 1 - q[::-1].index(x)] -= 1
            out.append(UnlabeledConfig.of(q))
    return out


def pseudo_stabilization(v: UnlabeledConfig) -> UnlabeledConfig:
    """The stable configuration with at most one internal gap and the same sum."""
    n = v.n
    if n == 0:
        return v
    lo, hi = min(v.positions) - n, max(v.positions) + n
    found = []
    for top in range(lo, hi + 1):
        run = [top - k for k in range(n)]
        candidates = [run]
        # gap after chip k: chips k+1..n move one further left
        candidates += [run[:k] + [x - 1 for x in run[k:]] for k in range(1, n)]
        found.extend(c for c in candidates if sum(c) == v.total)
    if len(found) != 1:
        raise AssertionError(f"{len(found)} pseudo-stabilizations for {v.positions}")
    return UnlabeledConfig(tuple(found[0]))


def dominance_compare(u: UnlabeledConfig, v: UnlabeledConfig) -> str:
    """``"strictly_below"``, ``"below"`` or ``"neither"`` for ``u`` against ``v``."""
    if u.n != v.n:
        raise ValueError("configurations have different chip counts")
    if u.total != v.total:
        raise ValueError(f"sums differ: {u.total} vs {v.total}")
    fu, fv = u.partial_sums(), v.partial_sums()
    if any(a > b for a, b in zip(fu, fv)):
        return "neither"
    if all(a < b for a, b in zip(fu[:-1], fv[:-1])):
        return "strictly_below"
    return "below"


def split_index(v: UnlabeledConfig, p: UnlabeledConfig) -> int:
    """Smallest ``j`` in ``1..N-1`` maximizing ``f_v(j) - f_p(j)``."""
    diffs = [a - b for a, b in zip(v.partial_sums()[:-1], p.partial_sums()[:-1])]
    return diffs.index(max(diffs)) + 1


def stabilize_unlabeled_typeA(v: UnlabeledConfig) -> UnlabeledConfig:
    if v.n <= 1:
        return v
    p = pseudo_stabilization(v)
    if dominance_compare(v, p) == "strictly_below":
        return p
    j = split_index(v, p)
    left = stabilize_unlabeled_typeA(UnlabeledConfig(v.positions[:j]))
    right = stabilize_unlabeled_typeA(UnlabeledConfig(v.positions[j:]))
    return UnlabeledConfig(left.positions + right.positions)


def typeA_weight_of(v: UnlabeledConfig) -> Weight:
    """Dominant ``A_{N-1}`` weight of a configuration (translation forgotten)."""
    p = v.positions
    return tuple(a - b for a, b in zip(p, p[1:]))


def typeA_config_of(mu: Sequence[int], total: int) -> UnlabeledConfig:
    """The configuration with weight ``mu`` (dominant) and the given sum."""
    n = len(mu) + 1
    tail = [sum(mu[k:]) for k in range(n - 1)] + [0]
    shift, rem = divmod(total - sum(tail), n)
    if rem:
        raise ValueError(f"no configuration of weight {tuple(mu)} has sum {total}")
    return UnlabeledConfig(tuple(x + shift for x in tail))


def split_never_crossed(v: UnlabeledConfig, budget: int = 1_000_000) -> bool:
    """No configuration reachable from ``v`` puts ranks ``j`` and ``j + 1`` on one spot.

    ``j`` is the split index; when two chips never share a spot they can
    never fire together.  Only meaningful when ``v`` is not strictly below
    its pseudo-stabilization.
    """
    p = pseudo_stabilization(v)
    j = split_index(v, p)
    seen = {v}
    stack = [v]
    while stack:
        c = stack.pop()
        if c.positions[j - 1] == c.positions[j]:
            return False
        for d in unlabeled_moves(c):
            if d not in seen:
                if len(seen) >= budget:
                    raise RuntimeError(f"more than {budget} configurations")
                seen.add(d)
                stack.append(d)
    return True
