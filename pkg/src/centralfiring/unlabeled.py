"""Central-firing on Weyl orbits (unlabeled central-firing).

An orbit is stored through its dominant representative.  Every orbit move
can be read off the representative: fire any available root there and
re-dominantize the result.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from centralfiring.central import available_moves
from centralfiring.rootsys import (
    RootSystem,
    Weight,
    add_root,
    dominant,
    is_dominant,
    minuscule_rep_of_class,
    permutohedron_contains,
)


@dataclass(frozen=True, order=True)
class OrbitWeight:
    rep: Weight

    def __post_init__(self):
        if not is_dominant(self.rep):
            raise ValueError(f"orbit representative {self.rep} is not dominant")

    @classmethod
    def of(cls, rs: RootSystem, lam: Sequence[int]) -> "OrbitWeight":
        return cls(dominant(rs, lam))

    def to_json(self) -> dict:
        return {"orbit": list(self.rep)}


def orbit_moves(rs: RootSystem, o: OrbitWeight) -> list[OrbitWeight]:
    """Distinct orbits reachable by one move, sorted by representative."""
    lam = o.rep
    return sorted({OrbitWeight(dominant(rs, add_root(rs, lam, a))) for a in available_moves(rs, lam)})


def orbit_moves_all_roots(rs: RootSystem, o: OrbitWeight, orbit_points: Sequence[Weight]) -> list[OrbitWeight]:
    """Orbit moves computed the slow way: every orbit element, every root.

    ``orbit_points`` must be the full Weyl orbit of ``o.rep``.
    """
    out = set()
    for lam in orbit_points:
        for a in rs.all_roots:
            if rs.root_to_weight_inner(a, lam) == 0:
                out.add(OrbitWeight(dominant(rs, add_root(rs, lam, a))))
    return sorted(out)


def is_orbit_stable(rs: RootSystem, o: OrbitWeight) -> bool:
    return all(x > 0 for x in o.rep)


def orbit_normal_form(rs: RootSystem, o: OrbitWeight) -> OrbitWeight:
    """Fire the lexicographically least orbit move until nothing is left."""
    while True:
        succ = orbit_moves(rs, o)
        if not succ:
            return o
        o = succ[0]


def orbit_trajectory(rs: RootSystem, o: OrbitWeight) -> dict[OrbitWeight, list[OrbitWeight]]:
    """The whole orbit graph reachable from ``o`` (adjacency lists)."""
    graph: dict[OrbitWeight, list[OrbitWeight]] = {}
    stack = [o]
    while stack:
        u = stack.pop()
        if u in graph:
            continue
        graph[u] = orbit_moves(rs, u)
        stack.extend(v for v in graph[u] if v not in graph)
    return graph


def orbit_terminals(rs: RootSystem, o: OrbitWeight) -> set[OrbitWeight]:
    """Terminal orbits of all maximal orbit-firing sequences from ``o``."""
    graph = orbit_trajectory(rs, o)
    memo: dict[OrbitWeight, frozenset[OrbitWeight]] = {}
    # iterative post-order; the orbit graph is acyclic
    stack = [(o, False)]
    while stack:
        u, done = stack.pop()
        if u in memo:
            continue
        if done or not graph[u]:
            acc = frozenset([u]) if not graph[u] else frozenset().union(*(memo[v] for v in graph[u]))
            memo[u] = acc
            continue
        stack.append((u, True))
        stack.extend((v, False) for v in graph[u] if v not in memo)
    return set(memo[o])


def stabilization_prediction(rs: RootSystem, lam: Sequence[int]) -> OrbitWeight | None:
    """``W(rho + omega)`` when ``lam`` lies in ``Pi^Q(rho + omega)``, else ``None``.

    ``omega`` is the zero-or-minuscule weight with ``lam - rho - omega`` in
    the root lattice.
    """
    n = rs.rank
    omega = minuscule_rep_of_class(rs, [x - 1 for x in lam])
    top = tuple(1 + w for w in omega)
    if permutohedron_contains(rs, top, lam):
        return OrbitWeight(top)
    return None


def lift_consistent(rs: RootSystem, labeled_normal_forms: Sequence[Weight], o: OrbitWeight) -> bool:
    """All labeled normal forms lie in the single stable orbit reached from ``o``."""
    target = orbit_normal_form(rs, o).rep
    return {dominant(rs, v) for v in labeled_normal_forms} <= {target}
