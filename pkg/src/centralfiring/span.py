"""Firing spans and connected weights.

``FS(lam)`` is the real span of every displacement ``lam - mu`` with
``lam ->* mu``.  It satisfies

    FS(lam) = Span( {alpha : alpha ⊥ lam}  ∪  FS(lam + alpha) ),

so it is the span of every root fired anywhere in the reachable graph.  We
evaluate the recurrence bottom up with root-index bitmasks and only row
reduce once at the end.  Vectors are written in the simple-root basis.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from centralfiring.central import BudgetExceeded, available_moves, default_budget, potential
from centralfiring.linalg import rref
from centralfiring.rootsys import (
    Root,
    RootSystem,
    Weight,
    add_root,
    containment_coeffs,
    is_dominant,
    minuscule_rep_of_class,
    pairing,
)


@dataclass(frozen=True)
class SubspaceBasis:
    """A subspace of the simple-root coordinate space in canonical RREF."""
    basis: tuple[tuple[Fraction, ...], ...]
    ambient: int

    @property
    def dim(self) -> int:
        return len(self.basis)

    @classmethod
    def spanned_by(cls, vectors, ambient: int) -> "SubspaceBasis":
        return cls(rref(vectors), ambient)

    def contains(self, v: Sequence) -> bool:
        return rref(list(self.basis) + [tuple(v)]) == self.basis

    def to_json(self) -> dict:
        return {"dim": self.dim, "basis": [[str(x) for x in row] for row in self.basis]}


# insert-only caches: (type, weight) -> bitmask over the root list used
_FS_CACHE: dict[tuple, int] = {}
_FS_ALL_CACHE: dict[tuple, int] = {}


def _mask_to_space(roots: Sequence[Root], mask: int, n: int) -> SubspaceBasis:
    vecs = [roots[k].simple_coords for k in range(len(roots)) if mask >> k & 1]
    return SubspaceBasis.spanned_by(vecs, n)


def _span_masks(rs: RootSystem, lam: Weight, roots: Sequence[Root], cache: dict,
                budget: int) -> int:
    key = (rs.type, lam)
    if key in cache:
        return cache[key]
    # collect the uncached part of the reachable graph
    graph: dict[Weight, list[tuple[int, Weight]]] = {}
    stack = [lam]
    while stack:
        u = stack.pop()
        if u in graph or (rs.type, u) in cache:
            continue
        if len(graph) >= budget:
            raise BudgetExceeded(len(graph), budget)
        out = [(k, add_root(rs, u, a)) for k, a in enumerate(roots) if pairing(rs, u, a) == 0]
        graph[u] = out
        stack.extend(v for _, v in out)
    # children before parents: positive-root firing lowers the potential,
    # all-roots firing raises the norm; both orders are topological
    positive_only = all(a.positive for a in roots)
    order = sorted(graph, key=(lambda w: potential(rs, w)) if positive_only
                   else (lambda w: -rs.inner(w, w)))
    for u in order:
        m = 0
        for k, v in graph[u]:
            m |= (1 << k) | cache[(rs.type, v)]
        cache[(rs.type, u)] = m
    return cache[key]


def firing_span(rs: RootSystem, lam: Sequence[int], budget: int | None = None,
                all_roots: bool = False) -> SubspaceBasis:
    """``FS(lam)``; with ``all_roots`` the moves may use negative roots too."""
    if budget is None:
        budget = default_budget()
    roots = rs.all_roots if all_roots else rs.positive_roots
    cache = _FS_ALL_CACHE if all_roots else _FS_CACHE
    mask = _span_masks(rs, tuple(lam), roots, cache, budget)
    return _mask_to_space(roots, mask, rs.rank)


def is_connected(rs: RootSystem, lam: Sequence[int], budget: int | None = None) -> bool:
    return firing_span(rs, lam, budget).dim == rs.rank


def reflect_subspace(rs: RootSystem, space: SubspaceBasis, i: int) -> SubspaceBasis:
    """Image of a subspace (simple-root coordinates) under ``s_i``."""
    C = rs.cartan
    k = i - 1
    out = []
    for row in space.basis:
        # s_i(sum c_j alpha_j) changes only the alpha_i coefficient
        shift = sum(c * C[k][j] for j, c in enumerate(row))
        v = list(row)
        v[k] -= shift
        out.append(v)
    return SubspaceBasis.spanned_by(out, space.ambient)


# ---- permutohedron tests ----------------------------------------------------

def in_real_permutohedron(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> bool:
    """``mu`` in the convex hull ``Pi(lam)`` (no lattice-class condition)."""
    return all(c >= 0 for c in containment_coeffs(rs, lam, mu))


def in_pi_2rho(rs: RootSystem, mu: Sequence[int]) -> bool:
    return in_real_permutohedron(rs, tuple(2 for _ in range(rs.rank)), mu)


@dataclass(frozen=True)
class InteriorWitness:
    omega: Weight
    top: Weight
    coeffs: tuple[Fraction, ...]

    @property
    def inside(self) -> bool:
        return all(c.denominator == 1 and c >= 1 for c in self.coeffs)


def interior_witness(rs: RootSystem, lam: Sequence[int]) -> InteriorWitness:
    """Coefficients of ``rho + omega - lam^+`` for the class-matching ``omega``.

    ``lam`` lies in the interior ``Pi^{o,Q}(rho + omega)`` iff every
    coefficient is an integer ``>= 1``.
    """
    omega = minuscule_rep_of_class(rs, [x - 1 for x in lam])
    top = tuple(1 + w for w in omega)
    return InteriorWitness(omega, top, containment_coeffs(rs, top, lam))


def typeA_connected(rs: RootSystem, lam: Sequence[int]) -> bool:
    if rs.type.family != "A":
        raise ValueError(f"the closed-form classification is only known in Type A, got {rs.type}")
    return interior_witness(rs, lam).inside


# ---- dominant-path span (simply laced) --------------------------------------

_DOM_CACHE: dict[tuple, frozenset[int]] = {}


def simply_laced_span_dominant(rs: RootSystem, lam: Sequence[int]) -> SubspaceBasis:
    """Span of the simple roots orthogonal to some dominant weight on a
    dominant firing path from ``lam``.

    Only moves ``lam -> lam + theta`` that land on dominant weights are
    followed.
    """
    if not rs.type.simply_laced:
        raise ValueError(f"{rs.type} is not simply laced")
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    nodes = _dominant_subgraph(rs, lam)
    for u in sorted(nodes, key=lambda w: potential(rs, w)):
        if (rs.type, u) in _DOM_CACHE:
            continue
        acc = {i for i, x in enumerate(u) if x == 0}
        for v in nodes[u]:
            acc |= _DOM_CACHE[(rs.type, v)]
        _DOM_CACHE[(rs.type, u)] = frozenset(acc)
    simple = [tuple(int(i == k) for k in range(rs.rank)) for i in sorted(_DOM_CACHE[(rs.type, lam)])]
    return SubspaceBasis.spanned_by(simple, rs.rank)


def _dominant_subgraph(rs: RootSystem, lam: Weight) -> dict[Weight, list[Weight]]:
    graph: dict[Weight, list[Weight]] = {}
    stack = [lam]
    while stack:
        u = stack.pop()
        if u in graph or (rs.type, u) in _DOM_CACHE:
            continue
        out = [v for v in (add_root(rs, u, a) for a in available_moves(rs, u)) if is_dominant(v)]
        graph[u] = out
        stack.extend(out)
    return graph
