"""The number game on simply laced Dynkin diagrams (UCF moves).

An assignment of nonnegative integers to the nodes is the same thing as a
dominant weight.  A move picks a connected component of zero-valued nodes,
completes it to its affine diagram, adds the edge multiplicities to the
affine node and subtracts one from every outside neighbour.

Two independent implementations of a move are kept: the affine rule above
and adding the highest root of the parabolic sub-root system on the
component.  :func:`ucf_move` insists that they agree.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from centralfiring.rootsys import RootSystem, Weight, is_dominant

Component = tuple[int, ...]


class NotSimplyLaced(ValueError):
    pass


def _require_simply_laced(rs: RootSystem) -> None:
    if not rs.type.simply_laced:
        raise NotSimplyLaced(f"the number game needs a simply laced type, got {rs.type}")


def zero_components(rs: RootSystem, f: Sequence[int]) -> list[Component]:
    """Connected components of the zero nodes, each sorted, ordered by least node."""
    _require_simply_laced(rs)
    zeros = {i + 1 for i, x in enumerate(f) if x == 0}
    comps = []
    while zeros:
        seed = min(zeros)
        comp = {seed}
        stack = [seed]
        while stack:
            u = stack.pop()
            for v in rs.adjacency[u]:
                if v in zeros and v not in comp:
                    comp.add(v)
                    stack.append(v)
        zeros -= comp
        comps.append(tuple(sorted(comp)))
    return sorted(comps)


# ---- affine rule --------------------------------------------------------------

@dataclass(frozen=True)
class Classified:
    family: str
    rank: int
    marks: dict  # node -> number of edges to the affine node


def classify(rs: RootSystem, comp: Sequence[int]) -> Classified:
    """Identify the Dynkin type of the induced subgraph and its affine marks."""
    nodes = set(comp)
    nbr = {u: [v for v in rs.adjacency[u] if v in nodes] for u in nodes}
    k = len(nodes)
    if k == 1:
        (u,) = nodes
        return Classified("A", 1, {u: 2})
    branch = [u for u in nodes if len(nbr[u]) >= 3]
    if not branch:
        ends = sorted(u for u in nodes if len(nbr[u]) == 1)
        if len(ends) != 2:
            raise ValueError(f"component {sorted(nodes)} is not a path")
        return Classified("A", k, {ends[0]: 1, ends[1]: 1})
    if len(branch) != 1 or len(nbr[branch[0]]) != 3:
        raise ValueError(f"component {sorted(nodes)} is not a Dynkin diagram")
    centre = branch[0]
    arms = []
    for start in nbr[centre]:
        arm = [start]
        prev, cur = centre, start
        while True:
            nxt = [v for v in nbr[cur] if v != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            arm.append(cur)
        arms.append(arm)
    arms.sort(key=len)
    lens = tuple(len(a) for a in arms)
    if lens[:2] == (1, 1):
        # D_k: the affine node hangs off the neighbour of the long arm's end
        long_arm = arms[2]
        attach = long_arm[-2] if len(long_arm) >= 2 else centre
        return Classified("D", k, {attach: 1})
    e_attach = {(1, 2, 2): (6, 0), (1, 2, 3): (7, 1), (1, 2, 4): (8, 2)}
    if lens not in e_attach:
        raise ValueError(f"component {sorted(nodes)} with arms {lens} is not of finite type")
    rank, which = e_attach[lens]
    return Classified("E", rank, {arms[which][-1]: 1})


def affine_rule(rs: RootSystem, f: Sequence[int], comp: Sequence[int]) -> Weight:
    info = classify(rs, comp)
    out = list(f)
    for node, mult in info.marks.items():
        out[node - 1] += mult
    inside = set(comp)
    outside_nbrs = {v for u in comp for v in rs.adjacency[u] if v not in inside}
    for v in outside_nbrs:
        out[v - 1] -= 1
    return tuple(out)


# ---- highest-root rule --------------------------------------------------------

def parabolic_highest_root(rs: RootSystem, comp: Sequence[int]):
    """Highest root of the sub-root system spanned by the simple roots in ``comp``."""
    inside = {i - 1 for i in comp}
    sub = [a for a in rs.positive_roots
           if all(c == 0 for k, c in enumerate(a.simple_coords) if k not in inside)]
    top = max(sub, key=lambda a: a.height)
    # simply laced: the highest root is the unique dominant root of the parabolic
    dom = [a for a in sub if all(a.weight_image[k] >= 0 for k in inside)]
    assert dom == [top], (comp, dom, top)
    return top


def highest_root_rule(rs: RootSystem, f: Sequence[int], comp: Sequence[int]) -> Weight:
    theta = parabolic_highest_root(rs, comp)
    return tuple(x + y for x, y in zip(f, theta.weight_image))


def ucf_move(rs: RootSystem, f: Sequence[int], comp: Sequence[int]) -> Weight:
    _require_simply_laced(rs)
    f = tuple(f)
    comp = tuple(sorted(comp))
    if comp not in zero_components(rs, f):
        raise ValueError(f"{comp} is not a zero component of {f}")
    a = affine_rule(rs, f, comp)
    b = highest_root_rule(rs, f, comp)
    if a != b:
        raise AssertionError(f"affine rule {a} and highest-root rule {b} disagree on {f}, {comp}")
    if not is_dominant(a):
        raise AssertionError(f"UCF move produced a negative value: {a}")
    return a


def ucf_successors(rs: RootSystem, f: Sequence[int]) -> list[tuple[Component, Weight]]:
    return [(c, ucf_move(rs, f, c)) for c in zero_components(rs, f)]


def ucf_relation_equals_orbit_relation(rs: RootSystem, f: Sequence[int]) -> bool:
    from centralfiring.unlabeled import OrbitWeight, orbit_moves

    _require_simply_laced(rs)
    ucf = {g for _, g in ucf_successors(rs, f)}
    orb = {o.rep for o in orbit_moves(rs, OrbitWeight(tuple(f)))}
    return ucf == orb


def check_abelian(rs: RootSystem, f: Sequence[int]) -> bool:
    """Every pair of zero components can be fired in either order with the same result."""
    _require_simply_laced(rs)
    f = tuple(f)
    comps = zero_components(rs, f)
    for i, c1 in enumerate(comps):
        for c2 in comps[i + 1:]:
            g1, g2 = ucf_move(rs, f, c1), ucf_move(rs, f, c2)
            c2p = _containing(rs, g1, c2)
            c1p = _containing(rs, g2, c1)
            if c2p is None or c1p is None:
                return False
            if ucf_move(rs, g1, c2p) != ucf_move(rs, g2, c1p):
                return False
    return True


def _containing(rs: RootSystem, g: Sequence[int], comp: Sequence[int]) -> Component | None:
    for c in zero_components(rs, g):
        if set(comp) <= set(c):
            return c
    return None


def game_tree(rs: RootSystem, f: Sequence[int], depth: int = 1000) -> list[tuple[Weight, Component, Weight]]:
    """All UCF moves reachable from ``f`` as ``(before, component, after)``,
    breadth first, each state expanded once."""
    _require_simply_laced(rs)
    f = tuple(f)
    out = []
    level = [f]
    seen = {f}
    for _ in range(depth):
        nxt = []
        for g in level:
            for c, h in ucf_successors(rs, g):
                out.append((g, c, h))
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        if not nxt:
            break
        level = nxt
    return out


def format_move(comp: Sequence[int], after: Sequence[int]) -> str:
    return "{" + ",".join(map(str, comp)) + "} fired -> " + " ".join(map(str, after))
