"""Central-firing on the weight lattice.

A move replaces ``lam`` by ``lam + alpha`` for a positive root ``alpha``
with ``<lam, alpha^vee> = 0``.  The relation terminates, so a weight has a
unique normal form exactly when the relation is confluent from it: every
normal form of a descendant is a normal form of ``lam``.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from centralfiring.rootsys import (
    Root,
    RootSystem,
    Weight,
    WeightOverflowError,
    add_root,
    format_weight,
    in_root_lattice,
    pairing,
)

DEFAULT_BUDGET = 50_000_000
BUDGET_ENV = "CENTRALFIRING_BUDGET"


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


class BudgetExceeded(RuntimeError):
    def __init__(self, explored: int, budget: int):
        super().__init__(f"node budget {budget} exceeded after exploring {explored} weights")
        self.explored = explored
        self.budget = budget


def available_moves(rs: RootSystem, lam: Sequence[int]) -> list[Root]:
    return [a for a in rs.positive_roots if pairing(rs, lam, a) == 0]


def is_stable(rs: RootSystem, lam: Sequence[int]) -> bool:
    return not any(pairing(rs, lam, a) == 0 for a in rs.positive_roots)


def potential(rs: RootSystem, lam: Sequence[int]) -> Fraction:
    """``2 <2 rho - lam, 2 rho - lam>``; strictly decreasing along moves.

    Short roots have squared length 2, so the value is a nonnegative
    rational whose decrease along any move is an integer.
    """
    v = [2 - x for x in lam]
    return 2 * rs.inner(v, v)


def min_root_norm(rs: RootSystem) -> int:
    return min(a.length2 for a in rs.positive_roots)


def potential_drop_bound(rs: RootSystem) -> int:
    """Lower bound ``2 * min <alpha, alpha>`` for the potential drop of a move."""
    return 2 * min_root_norm(rs)


def fire(rs: RootSystem, lam: Sequence[int], alpha: Root) -> Weight:
    if not alpha.positive:
        raise ValueError(f"{alpha} is not a positive root")
    if pairing(rs, lam, alpha) != 0:
        raise ValueError(f"{alpha} is not orthogonal to {tuple(lam)}")
    return add_root(rs, lam, alpha)


# ---- explicit graphs ----------------------------------------------------------

@dataclass
class FiringGraph:
    origin: Weight
    nodes: set[Weight] = field(default_factory=set)
    edges: dict[Weight, list[tuple[Root, Weight]]] = field(default_factory=dict)
    normal_forms: dict[Weight, frozenset[Weight]] = field(default_factory=dict)
    complete: bool = True

    def stable_nodes(self) -> list[Weight]:
        return sorted(v for v in self.nodes if not self.edges.get(v))

    def edge_list(self) -> list[tuple[Weight, Root, Weight]]:
        return sorted(((u, a, v) for u, out in self.edges.items() for a, v in out),
                      key=lambda e: (e[0], e[1].simple_coords, e[2]))

    def to_json(self) -> dict:
        return {
            "origin": list(self.origin),
            "complete": self.complete,
            "nodes": [list(v) for v in sorted(self.nodes)],
            "edges": [{"from": list(u), "root": list(a.simple_coords), "to": list(v)}
                      for u, a, v in self.edge_list()],
            "normal_forms": [list(v) for v in sorted(self.normal_forms.get(self.origin, ()))],
        }

    def dumps_json(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=True) + "\n"

    def to_dot(self) -> str:
        lines = ["digraph firing {"]
        stable = set(self.stable_nodes()) if self.complete else set()
        for v in sorted(self.nodes):
            shape = ", shape=box" if v in stable else ""
            lines.append(f'  "{format_weight(v)}" [label="({format_weight(v)})"{shape}];')
        for u, a, v in self.edge_list():
            lines.append(f'  "{format_weight(u)}" -> "{format_weight(v)}" '
                         f'[label="{format_weight(a.simple_coords)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def explore_graph(rs: RootSystem, lam: Sequence[int], budget: int | None = None) -> FiringGraph:
    """Depth-first exploration of everything reachable from ``lam``.

    Nodes are expanded in discovery order with moves tried smallest root
    first.  If more than ``budget`` nodes would be expanded the partial graph
    is returned with ``complete=False`` and no normal-form table.
    """
    if budget is None:
        budget = default_budget()
    if budget <= 0:
        raise ValueError("budget must be positive")
    start = tuple(lam)
    g = FiringGraph(origin=start, nodes={start})
    stack = [start]
    expanded = 0
    while stack:
        if expanded >= budget:
            g.complete = False
            return g
        u = stack.pop()
        out = [(a, add_root(rs, u, a)) for a in available_moves(rs, u)]
        g.edges[u] = out
        expanded += 1
        for _, v in reversed(out):
            if v not in g.nodes:
                g.nodes.add(v)
                stack.append(v)
    _fill_normal_forms(rs, g)
    return g


def _fill_normal_forms(rs: RootSystem, g: FiringGraph) -> None:
    # potential strictly decreases along edges: increasing potential is a
    # reverse topological order
    for v in sorted(g.nodes, key=lambda w: (potential(rs, w), w)):
        out = g.edges.get(v, [])
        if not out:
            g.normal_forms[v] = frozenset([v])
        else:
            acc = set()
            for _, w in out:
                acc |= g.normal_forms[w]
            g.normal_forms[v] = frozenset(acc)


# ---- vectorized reachability sweep -------------------------------------------

@dataclass
class Sweep:
    """Outcome of an exhaustive sweep from one weight."""
    origin: Weight
    stable: list[Weight]
    nodes_explored: int
    edges: int
    min_potential_drop: int | None

    @property
    def confluent(self) -> bool:
        return len(self.stable) == 1


class _OutOfRange(Exception):
    pass


def _packer(n: int):
    """Return a function packing int64 rows into uint64 keys, or ``None``."""
    bits = 64 // n
    if bits < 4:
        return None
    limit = (1 << (bits - 1)) - 1
    shifts = np.arange(n, dtype=np.uint64) * np.uint64(bits)

    def pack(rows: np.ndarray) -> np.ndarray:
        if len(rows) and int(np.abs(rows).max()) > limit:
            raise _OutOfRange
        return np.bitwise_or.reduce((rows + limit).astype(np.uint64) << shifts, axis=1)

    return pack


def sweep(rs: RootSystem, lam: Sequence[int], budget: int | None = None,
          track_potential: bool = False) -> Sweep:
    """Enumerate all weights reachable from ``lam``.

    Returns the sorted stable weights among them, which are exactly the
    normal forms of ``lam``.  When ``track_potential`` is set, the exact
    potential drop is evaluated on every traversed edge and the minimum is
    reported.
    """
    if budget is None:
        budget = default_budget()
    pack = _packer(rs.rank)
    if pack is not None:
        try:
            return _sweep(rs, lam, budget, track_potential, pack)
        except _OutOfRange:
            pass
    return _sweep(rs, lam, budget, track_potential, None)


def _unique_rows(rows: np.ndarray, pack) -> np.ndarray:
    if pack is None:
        if len(rows) and int(np.abs(rows).max()) > 2**61:
            raise WeightOverflowError("weight coordinates left the supported 64-bit range")
        return np.unique(rows, axis=0)
    _, idx = np.unique(pack(rows), return_index=True)
    return rows[np.sort(idx)]


def _sweep(rs, lam, budget, track_potential, pack) -> Sweep:
    # Every move adds a positive root, so the height of mu - lam grows
    # strictly along edges and is a function of mu.  Processing one height
    # at a time, a bucket is complete when it is reached and only buckets
    # ahead of the current height need to be kept for deduplication.
    P = rs.coroot_matrix
    A = rs.image_matrix
    heights = np.array([a.height for a in rs.positive_roots], dtype=np.int64)
    if track_potential:
        # <lam, alpha> = lam . (c_i d_i); drop = 2 (4<rho,alpha> - 2<lam,alpha> - <alpha,alpha>)
        dvec = np.array([[c * d for c, d in zip(a.simple_coords, rs.sym)]
                         for a in rs.positive_roots], dtype=np.int64).T
        rho_dot = dvec.sum(axis=0)
        norms = np.array([a.length2 for a in rs.positive_roots], dtype=np.int64)
    buckets: dict[int, list[np.ndarray]] = {0: [np.array([tuple(lam)], dtype=np.int64)]}
    explored = 0
    edges = 0
    stable: list[np.ndarray] = []
    min_drop = None
    while buckets:
        h = min(buckets)
        parts = buckets.pop(h)
        frontier = _unique_rows(np.concatenate(parts) if len(parts) > 1 else parts[0], pack)
        explored += len(frontier)
        if explored > budget:
            raise BudgetExceeded(explored, budget)
        zero = (frontier @ P) == 0
        has_move = zero.any(axis=1)
        if not has_move.all():
            stable.append(frontier[~has_move])
        k, r = np.nonzero(zero)
        edges += len(k)
        if not len(k):
            continue
        if track_potential:
            lam_dot = np.einsum("ij,ji->i", frontier[k], dvec[:, r])
            drops = 2 * (4 * rho_dot[r] - 2 * lam_dot - norms[r])
            m = int(drops.min())
            min_drop = m if min_drop is None else min(min_drop, m)
        succ = frontier[k] + A[r]
        hs = heights[r]
        for dh in np.unique(hs).tolist():
            lst = buckets.setdefault(h + dh, [])
            lst.append(succ[hs == dh])
            if len(lst) > 16:
                buckets[h + dh] = [_unique_rows(np.concatenate(lst), pack)]
    found = sorted(tuple(int(x) for x in row) for block in stable for row in block)
    return Sweep(origin=tuple(lam), stable=found, nodes_explored=explored, edges=edges,
                 min_potential_drop=min_drop)


def normal_forms(rs: RootSystem, lam: Sequence[int], budget: int | None = None) -> list[Weight]:
    """All stable weights reachable from ``lam``, sorted lexicographically."""
    return sweep(rs, lam, budget).stable


def is_confluent_from(rs: RootSystem, lam: Sequence[int], budget: int | None = None) -> bool:
    return len(normal_forms(rs, lam, budget)) == 1


# ---- the conjectured classification ------------------------------------------

def start_weights(rs: RootSystem) -> list[tuple[str, Weight]]:
    """``0`` and the fundamental weights, labelled ``"0"``, ``"w1"``, ..."""
    n = rs.rank
    return [("0", (0,) * n)] + [(f"w{i + 1}", rs.fundamental_weights[i]) for i in range(n)]


def conjecture_prediction(rs: RootSystem, omega: Sequence[int]) -> bool:
    """Predicted confluence from ``omega``, which must be 0 or a fundamental weight."""
    omega = tuple(omega)
    n = rs.rank
    fam = rs.type.family
    if omega == (0,) * n:
        node = 0
    elif sorted(omega) == [0] * (n - 1) + [1]:
        node = omega.index(1) + 1
    else:
        raise ValueError(f"{omega} is neither 0 nor a fundamental weight")

    if fam == "A":
        if n % 2:
            return node in (0, 1, n)
        return node in (n // 2, n // 2 + 1)
    if fam == "B" and node == n:
        return True
    if fam == "C" and n == 2 and node == 1:
        # C2 is B2 with the nodes swapped; this is the B_n exception at omega_n
        return True
    if fam == "D" and node == 0 and n % 4 == 2:
        return False
    if fam == "G" and node in (1, 2):
        return True
    return not in_root_lattice(rs, [x - 1 for x in omega])


def weights_from(items: Iterable[Sequence[int]]) -> list[Weight]:
    return [tuple(int(x) for x in v) for v in items]
