"""Folding a simply laced root system along a diagram automorphism.

For an automorphism ``sigma`` that never maps a node to a neighbour, the
orbit sums ``alpha_J = sum_{i in J} alpha_i`` are the simple roots of a
smaller root system living inside the source weight space.  Its weights
are the sigma-fixed source weights, with ``lam'_J = lam_i`` for any
``i`` in ``J``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from centralfiring.central import normal_forms
from centralfiring.rootsys import (
    Root,
    RootSystem,
    RootSystemType,
    Weight,
    add_root,
    build,
    pairing,
)
from centralfiring.span import is_connected


class InvalidFolding(ValueError):
    pass


@dataclass(frozen=True)
class Folding:
    source: RootSystemType
    sigma: tuple[int, ...]  # sigma[i-1] is the image of node i
    orbits: tuple[tuple[int, ...], ...]  # orbits[a-1] is target node a
    target: RootSystemType
    folded_cartan: tuple[tuple[int, ...], ...] = field(compare=False)

    def relabeling(self) -> dict[int, tuple[int, ...]]:
        return {a + 1: orb for a, orb in enumerate(self.orbits)}

    def to_target(self, lam: Sequence[int]) -> Weight:
        return tuple(lam[orb[0] - 1] for orb in self.orbits)

    def to_source(self, lam_t: Sequence[int]) -> Weight:
        out = [0] * len(self.sigma)
        for x, orb in zip(lam_t, self.orbits):
            for i in orb:
                out[i - 1] = x
        return tuple(out)

    def source_vector(self, target_coords: Sequence[int]) -> tuple[int, ...]:
        """Simple-root coordinates in the source of ``sum c_a alpha_{J_a}``."""
        out = [0] * len(self.sigma)
        for c, orb in zip(target_coords, self.orbits):
            for i in orb:
                out[i - 1] += c
        return tuple(out)


def parse_sigma(text: str, n: int) -> tuple[int, ...]:
    """Cycle notation such as ``"(1 3)"`` or ``"(1,3,4)(2)"``; ``"id"`` for the identity."""
    perm = list(range(1, n + 1))
    text = text.strip()
    if text in ("", "id", "()"):
        return tuple(perm)
    cycles = re.findall(r"\(([^()]*)\)", text)
    if not cycles or re.sub(r"\([^()]*\)", "", text).strip():
        raise InvalidFolding(f"cannot parse permutation {text!r}")
    used = set()
    for cyc in cycles:
        nodes = [int(x) for x in re.split(r"[,\s]+", cyc.strip()) if x]
        if used & set(nodes) or len(set(nodes)) != len(nodes):
            raise InvalidFolding(f"cycles in {text!r} overlap")
        used |= set(nodes)
        for a, b in zip(nodes, nodes[1:] + nodes[:1]):
            if not 1 <= a <= n:
                raise InvalidFolding(f"node {a} out of range 1..{n}")
            perm[a - 1] = b
    return tuple(perm)


def _orbits(sigma: Sequence[int]) -> list[tuple[int, ...]]:
    seen, out = set(), []
    for i in range(1, len(sigma) + 1):
        if i in seen:
            continue
        orb, j = [], i
        while j not in orb:
            orb.append(j)
            j = sigma[j - 1]
        seen |= set(orb)
        out.append(tuple(sorted(orb)))
    return out


def _identify(cartan: list[list[int]]) -> tuple[RootSystemType, tuple[int, ...]]:
    m = len(cartan)
    for fam in "ABCDEFG":
        try:
            t = RootSystemType(fam, m)
        except ValueError:
            continue
        ref = build(t).cartan
        for perm in permutations(range(m)):
            if all(ref[a][b] == cartan[perm[a]][perm[b]] for a in range(m) for b in range(m)):
                return t, perm
    raise InvalidFolding(f"folded Cartan matrix {cartan} is not of finite type")


def fold(rs: RootSystem, sigma: Sequence[int]) -> Folding:
    n = rs.rank
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise InvalidFolding(f"{sigma} is not a permutation of 1..{n}")
    if not rs.type.simply_laced:
        raise InvalidFolding(f"folding needs a simply laced source, got {rs.type}")
    C = rs.cartan
    for i in range(n):
        for j in range(n):
            if C[sigma[i] - 1][sigma[j] - 1] != C[i][j]:
                raise InvalidFolding(f"{sigma} is not a diagram automorphism of {rs.type}")
    for i in range(1, n + 1):
        if sigma[i - 1] in rs.adjacency[i]:
            raise InvalidFolding(f"sigma sends node {i} to its neighbour {sigma[i - 1]}")
    orbits = _orbits(sigma)
    d = rs.sym

    def ip(a, b):  # (alpha_A, alpha_B) of orbit sums
        return sum(d[i - 1] * C[i - 1][j - 1] for i in a for j in b)

    for orb in orbits:
        for i in orb:
            for j in orb:
                if i != j and C[i - 1][j - 1] != 0:
                    raise InvalidFolding(f"orbit {orb} is not pairwise orthogonal")
    m = len(orbits)
    folded = [[Fraction(2 * ip(orbits[b], orbits[a]), ip(orbits[a], orbits[a])) for b in range(m)]
              for a in range(m)]
    if any(x.denominator != 1 for row in folded for x in row):
        raise InvalidFolding("folded Cartan matrix is not integral")
    folded = [[int(x) for x in row] for row in folded]
    target, perm = _identify(folded)
    ordered = tuple(orbits[perm[a]] for a in range(m))
    fc = tuple(tuple(folded[perm[a]][perm[b]] for b in range(m)) for a in range(m))
    return Folding(rs.type, sigma, ordered, target, fc)


def sigma_fixed(rs: RootSystem, sigma: Sequence[int], lam: Sequence[int]) -> bool:
    return all(lam[i] == lam[sigma[i] - 1] for i in range(rs.rank))


def fundamental_weights_pair_kronecker(rs: RootSystem, folding: Folding) -> bool:
    """``sum_{i in J} omega_i`` pairs to ``delta`` with each folded coroot.

    With pairwise orthogonal orbits, ``<omega, alpha_J^vee> =
    sum_{i in J} d_i omega_i / sum_{i in J} d_i``.
    """
    m = len(folding.orbits)
    d = rs.sym
    for a in range(m):
        omega = folding.to_source([int(k == a) for k in range(m)])
        for b, orb in enumerate(folding.orbits):
            val = Fraction(sum(d[i - 1] * omega[i - 1] for i in orb), sum(d[i - 1] for i in orb))
            if val != (a == b):
                return False
    return True


def folded_positive_roots(rs: RootSystem, folding: Folding) -> list[tuple[Root, tuple[int, ...]]]:
    """Target positive roots with their source-space vectors."""
    tgt = build(folding.target)
    return [(b, folding.source_vector(b.simple_coords)) for b in tgt.positive_roots]


def _source_orbit_for(rs: RootSystem, folding: Folding, vec: Sequence[int]) -> list[Root]:
    sig = folding.sigma
    for beta in rs.positive_roots:
        orb, cur = [], beta.simple_coords
        while True:
            r = rs.root(cur)
            if r in orb:
                break
            orb.append(r)
            moved = [0] * rs.rank
            for i, c in enumerate(cur):
                moved[sig[i] - 1] = c
            cur = tuple(moved)
        total = tuple(sum(r.simple_coords[k] for r in orb) for k in range(rs.rank))
        if total == tuple(vec):
            return orb
    raise InvalidFolding(f"no sigma-orbit of source roots sums to {tuple(vec)}")


def folded_fire_decomposes(rs: RootSystem, folding: Folding, lam: Sequence[int],
                           beta_t: Root) -> bool:
    """Fire the source orbit of ``beta_t`` in every order; all must reach ``lam + beta_t``."""
    lam = tuple(lam)
    if not sigma_fixed(rs, folding.sigma, lam):
        raise ValueError(f"{lam} is not sigma-fixed")
    tgt = build(folding.target)
    if pairing(tgt, folding.to_target(lam), beta_t) != 0:
        raise ValueError(f"{beta_t} is not orthogonal to {lam} in {folding.target}")
    vec = folding.source_vector(beta_t.simple_coords)
    goal = tuple(x + y for x, y in zip(lam, _weight_of(rs, vec)))
    batch = _source_orbit_for(rs, folding, vec)
    for order in permutations(batch):
        cur = lam
        for b in order:
            if pairing(rs, cur, b) != 0:
                return False
            cur = add_root(rs, cur, b)
        if cur != goal:
            return False
    return True


def _weight_of(rs: RootSystem, vec: Sequence[int]) -> Weight:
    return tuple(sum(rs.cartan[i][j] * vec[j] for j in range(rs.rank)) for i in range(rs.rank))


@dataclass
class PropagationReport:
    source: str
    target: str
    weight: Weight
    target_weight: Weight
    source_confluent: bool
    target_confluent: bool
    source_stable: list[Weight]
    target_stable: list[Weight]

    @property
    def implication_holds(self) -> bool:
        return self.target_confluent or not self.source_confluent

    @property
    def converse_fails(self) -> bool:
        return self.target_confluent and not self.source_confluent

    def to_json(self) -> dict:
        return {
            "source": self.source, "target": self.target,
            "weight": list(self.weight), "target_weight": list(self.target_weight),
            "source_confluent": self.source_confluent, "target_confluent": self.target_confluent,
            "source_stable": [list(v) for v in self.source_stable],
            "target_stable": [list(v) for v in self.target_stable],
            "implication_holds": self.implication_holds,
        }


def confluence_propagation_check(rs: RootSystem, folding: Folding, lam: Sequence[int],
                                 budget: int | None = None) -> PropagationReport:
    lam = tuple(lam)
    if not sigma_fixed(rs, folding.sigma, lam):
        raise ValueError(f"{lam} is not sigma-fixed")
    lam_t = folding.to_target(lam)
    src = normal_forms(rs, lam, budget)
    tgt = normal_forms(build(folding.target), lam_t, budget)
    return PropagationReport(str(folding.source), str(folding.target), lam, lam_t,
                             len(src) == 1, len(tgt) == 1, src, tgt)


def connectedness_propagation(rs: RootSystem, folding: Folding, lam: Sequence[int]) -> tuple[bool, bool]:
    """``(target connected, source connected)`` for a sigma-fixed weight."""
    lam = tuple(lam)
    if not sigma_fixed(rs, folding.sigma, lam):
        raise ValueError(f"{lam} is not sigma-fixed")
    return is_connected(build(folding.target), folding.to_target(lam)), is_connected(rs, lam)
