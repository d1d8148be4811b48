"""Irreducible crystallographic root systems in Bourbaki numbering.

Weights are integer tuples in the fundamental-weight basis
(``coords[i] = <lam, alpha_i^vee>``); roots are integer tuples in the
simple-root basis.  Nodes are numbered from 1 in the public API, as in
Bourbaki's tables; coordinate tuples are of course indexed from 0.

Length normalization: ``d_i = <alpha_i, alpha_i> / 2`` with short roots
having ``d = 1``.  With this choice ``<alpha_i, alpha_j> = d_i * C[i][j]``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from centralfiring import linalg

Weight = tuple[int, ...]

INT64_MAX = 2**63 - 1

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


class WeightOverflowError(ArithmeticError):
    """A coordinate left the signed 64-bit range."""


@dataclass(frozen=True, order=True)
class RootSystemType:
    family: str
    rank: int

    def __post_init__(self):
        fam, n = self.family, self.rank
        if fam in _MIN_RANK:
            if n < _MIN_RANK[fam]:
                raise ValueError(f"{fam}{n}: rank must be >= {_MIN_RANK[fam]}")
        elif fam in _FIXED_RANKS:
            if n not in _FIXED_RANKS[fam]:
                raise ValueError(f"{fam}{n}: invalid rank for family {fam}")
        else:
            raise ValueError(f"unknown family {fam!r}")

    @classmethod
    def parse(cls, text: str) -> "RootSystemType":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*_?\s*(\d+)\s*", text)
        if not m:
            raise ValueError(f"cannot parse root system type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"

    @property
    def simply_laced(self) -> bool:
        return self.family in "ADE"

    @property
    def classical(self) -> bool:
        return self.family in "ABCD"


@dataclass(frozen=True)
class Root:
    simple_coords: tuple[int, ...]
    weight_image: tuple[int, ...]
    length2: int

    def __post_init__(self):
        c = self.simple_coords
        if not any(c):
            raise ValueError("the zero vector is not a root")
        if any(x > 0 for x in c) and any(x < 0 for x in c):
            raise ValueError(f"root coordinates of mixed sign: {c}")

    @property
    def positive(self) -> bool:
        return any(x > 0 for x in self.simple_coords)

    @property
    def height(self) -> int:
        return sum(self.simple_coords)

    def __neg__(self) -> "Root":
        return Root(tuple(-x for x in self.simple_coords),
                    tuple(-x for x in self.weight_image), self.length2)

    def __str__(self):
        terms = []
        for i, c in enumerate(self.simple_coords, 1):
            if c:
                terms.append(f"{'' if abs(c) == 1 else abs(c)}a{i}")
                if c < 0:
                    terms[-1] = "-" + terms[-1]
        return "+".join(terms).replace("+-", "-")


def _cartan(t: RootSystemType) -> list[list[int]]:
    n = t.rank
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, cij=-1, cji=-1):
        # 1-based nodes; C[i][j] = <alpha_j, alpha_i^vee>
        C[i - 1][j - 1] = cij
        C[j - 1][i - 1] = cji

    fam = t.family
    if fam in "ABC":
        for i in range(1, n):
            link(i, i + 1)
        if fam == "B":
            link(n - 1, n, -1, -2)
        elif fam == "C":
            link(n - 1, n, -2, -1)
    elif fam == "D":
        for i in range(1, n - 1):
            link(i, i + 1)
        link(n - 2, n)
    elif fam == "E":
        link(1, 3)
        link(2, 4)
        for i in range(3, n):
            link(i, i + 1)
    elif fam == "F":
        link(1, 2)
        link(2, 3, -1, -2)
        link(3, 4)
    elif fam == "G":
        link(1, 2, -3, -1)
    return C


def _symmetrizer(t: RootSystemType) -> tuple[int, ...]:
    n = t.rank
    if t.family == "B":
        return (2,) * (n - 1) + (1,)
    if t.family == "C":
        return (1,) * (n - 1) + (2,)
    if t.family == "F":
        return (2, 2, 1, 1)
    if t.family == "G":
        return (1, 3)
    return (1,) * n


@dataclass(frozen=True, eq=False)
class RootSystem:
    type: RootSystemType
    cartan: tuple[tuple[int, ...], ...]
    sym: tuple[int, ...]
    positive_roots: tuple[Root, ...]
    highest_root: Root
    minuscule: frozenset[int]
    _coroots: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    def __repr__(self):
        return f"RootSystem({self.type})"

    # ---- cached numeric tables -------------------------------------------

    @cached_property
    def coroot_matrix(self) -> np.ndarray:
        """(n, m) int64 array; column k holds the simple-coroot coordinates of
        the k-th positive coroot, so ``lam @ coroot_matrix`` are pairings."""
        return np.array(self._coroots, dtype=np.int64).T.copy()

    @cached_property
    def image_matrix(self) -> np.ndarray:
        """(m, n) int64 array of positive-root weight images."""
        return np.array([a.weight_image for a in self.positive_roots], dtype=np.int64)

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        n = self.rank
        return {i + 1: frozenset(j + 1 for j in range(n) if j != i and self.cartan[i][j])
                for i in range(n)}

    @cached_property
    def det(self) -> int:
        d = linalg.determinant(self.cartan)
        assert d.denominator == 1
        return int(d)

    @cached_property
    def weight_gram(self) -> tuple[tuple[Fraction, ...], ...]:
        """Inner products ``<omega_i, omega_j>`` under the module normalization."""
        inv = linalg.inverse(self.cartan)
        n = self.rank
        # omega_i = sum_k inv[k][i] alpha_k and <alpha_k, omega_j> = d_j delta_kj
        return tuple(tuple(inv[j][i] * self.sym[j] for j in range(n)) for i in range(n))

    @cached_property
    def fundamental_weights(self) -> tuple[Weight, ...]:
        n = self.rank
        return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))

    def root(self, simple_coords: Sequence[int]) -> Root:
        """Look up the (positive or negative) root with these coordinates."""
        key = tuple(simple_coords)
        idx = self._root_index.get(key)
        if idx is not None:
            return self.positive_roots[idx]
        idx = self._root_index.get(tuple(-x for x in key))
        if idx is not None:
            return -self.positive_roots[idx]
        raise ValueError(f"{key} is not a root of {self.type}")

    @cached_property
    def _root_index(self) -> dict[tuple[int, ...], int]:
        return {a.simple_coords: k for k, a in enumerate(self.positive_roots)}

    def index_of(self, alpha: Root) -> int:
        return self._root_index[alpha.simple_coords]

    def simple_root(self, i: int) -> Root:
        return self.positive_roots[self._root_index[tuple(int(j == i - 1) for j in range(self.rank))]]

    @cached_property
    def all_roots(self) -> tuple[Root, ...]:
        return self.positive_roots + tuple(-a for a in self.positive_roots)

    def coroot(self, alpha: Root) -> tuple[int, ...]:
        """Simple-coroot coordinates of ``alpha^vee``."""
        if alpha.positive:
            return self._coroots[self.index_of(alpha)]
        return tuple(-x for x in self._coroots[self.index_of(-alpha)])

    def inner(self, lam: Sequence, mu: Sequence) -> Fraction:
        """``<lam, mu>`` for two weights given in the fundamental-weight basis."""
        g = self.weight_gram
        n = self.rank
        return sum((Fraction(lam[i]) * mu[j] * g[i][j]
                    for i in range(n) for j in range(n) if lam[i] and mu[j]), Fraction(0))

    def root_to_weight_inner(self, alpha: Root, lam: Sequence[int]) -> int:
        """``<alpha, lam>``; an integer for weights."""
        return sum(c * d * x for c, d, x in zip(alpha.simple_coords, self.sym, lam))


@lru_cache(maxsize=None)
def _build(t: RootSystemType) -> RootSystem:
    n = t.rank
    C = _cartan(t)
    d = _symmetrizer(t)
    for i in range(n):
        for j in range(n):
            if d[i] * C[i][j] != d[j] * C[j][i]:
                raise AssertionError(f"bad symmetrizer for {t}")

    def image(c):
        return tuple(sum(C[j][i] * c[i] for i in range(n)) for j in range(n))

    # closure of the simple roots under simple reflections inside Phi+
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    half_len = {s: d[i] for i, s in enumerate(simple)}
    queue = list(simple)
    while queue:
        beta = queue.pop()
        img = image(beta)
        for i in range(n):
            if img[i] == 0:
                continue
            gamma = tuple(b - img[i] * int(k == i) for k, b in enumerate(beta))
            if all(x >= 0 for x in gamma) and any(gamma) and gamma not in half_len:
                half_len[gamma] = half_len[beta]
                queue.append(gamma)

    ordered = sorted(half_len, key=lambda c: (sum(c), tuple(-x for x in c)))
    roots = []
    coroots = []
    for c in ordered:
        da = half_len[c]
        num = [ci * di for ci, di in zip(c, d)]
        if any(x % da for x in num):
            raise AssertionError(f"non-integral coroot for {c} in {t}")
        coroots.append(tuple(x // da for x in num))
        roots.append(Root(c, image(c), 2 * da))
    # sanity: <alpha, alpha> computed from the Cartan data agrees with 2 d_alpha
    for a in roots:
        norm = sum(a.simple_coords[i] * a.simple_coords[j] * d[i] * C[i][j]
                   for i in range(n) for j in range(n))
        assert norm == a.length2, (t, a)

    highest = max(roots, key=lambda a: a.height)
    rs_partial = dict(cartan=tuple(map(tuple, C)), sym=d, positive_roots=tuple(roots),
                      highest_root=highest, _coroots=tuple(coroots))
    minus = frozenset(i + 1 for i in range(n) if all(cr[i] <= 1 for cr in coroots))
    return RootSystem(type=t, minuscule=minus, **rs_partial)


def build(t: RootSystemType | str) -> RootSystem:
    """Construct the root system of the given type (cached)."""
    if isinstance(t, str):
        t = RootSystemType.parse(t)
    return _build(t)


def supported_types(max_rank: int = 8) -> list[RootSystemType]:
    out = []
    for fam in "ABCD":
        for n in range(_MIN_RANK[fam], max_rank + 1):
            out.append(RootSystemType(fam, n))
    for fam, ranks in _FIXED_RANKS.items():
        out.extend(RootSystemType(fam, n) for n in ranks if n <= max_rank)
    return out


# ---- weight arithmetic ------------------------------------------------------

def _check(v: tuple[int, ...]) -> tuple[int, ...]:
    if any(x > INT64_MAX or x < -INT64_MAX for x in v):
        raise WeightOverflowError(f"weight {v} left the supported 64-bit range")
    return v


def pairing(rs: RootSystem, lam: Sequence[int], alpha: Root) -> int:
    """``<lam, alpha^vee>``."""
    num = rs.root_to_weight_inner(alpha, lam)
    da = alpha.length2 // 2
    q, r = divmod(num, da)
    if r:
        raise AssertionError(f"inexact pairing of {tuple(lam)} with {alpha}: corrupted root data")
    return q


def add_root(rs: RootSystem, lam: Sequence[int], alpha: Root) -> Weight:
    return _check(tuple(x + y for x, y in zip(lam, alpha.weight_image)))


def reflect_simple(rs: RootSystem, lam: Sequence[int], i: int) -> Weight:
    """Apply the simple reflection ``s_i`` (1-based node)."""
    if not 1 <= i <= rs.rank:
        raise ValueError(f"node {i} out of range for {rs.type}")
    k = lam[i - 1]
    C = rs.cartan
    return _check(tuple(x - k * C[j][i - 1] for j, x in enumerate(lam)))


def reflect(rs: RootSystem, lam: Sequence[int], alpha: Root) -> Weight:
    """Apply ``s_alpha`` for an arbitrary root."""
    k = pairing(rs, lam, alpha)
    return _check(tuple(x - k * y for x, y in zip(lam, alpha.weight_image)))


def is_dominant(lam: Sequence[int]) -> bool:
    return all(x >= 0 for x in lam)


def is_strictly_dominant(lam: Sequence[int]) -> bool:
    return all(x > 0 for x in lam)


def dominant_rep(rs: RootSystem, lam: Sequence[int]) -> tuple[Weight, list[int]]:
    """Dominant element of the Weyl orbit of ``lam`` and the word used.

    Always reflects in the smallest node with a negative coordinate, so the
    result (including the word) is deterministic.
    """
    lam = tuple(lam)
    word = []
    C = rs.cartan
    while True:
        i = next((k for k, x in enumerate(lam) if x < 0), None)
        if i is None:
            return lam, word
        k = lam[i]
        lam = tuple(x - k * C[j][i] for j, x in enumerate(lam))
        word.append(i + 1)


def dominant(rs: RootSystem, lam: Sequence[int]) -> Weight:
    return dominant_rep(rs, lam)[0]


def root_coords(rs: RootSystem, lam: Sequence[int]) -> tuple[Fraction, ...]:
    """Coordinates of ``lam`` over the simple roots (rational in general)."""
    return linalg.solve(rs.cartan, list(lam))


def in_root_lattice(rs: RootSystem, lam: Sequence[int]) -> bool:
    return all(c.denominator == 1 for c in root_coords(rs, lam))


def permutohedron_contains(rs: RootSystem, lam: Sequence[int], mu: Sequence[int],
                           strict: bool = False) -> bool:
    """Whether ``mu`` lies in ``Pi^Q(lam)`` (or its interior when ``strict``).

    ``lam`` must be dominant.  Both tests are made on the dominant
    representative of ``mu``: ``lam - mu+`` must be a combination of simple
    roots with integer coefficients all ``>= 0`` (``>= 1`` when strict).
    """
    if not is_dominant(lam):
        raise ValueError(f"{tuple(lam)} is not dominant")
    coeffs = containment_coeffs(rs, lam, mu)
    if any(c.denominator != 1 for c in coeffs):
        return False
    bound = 1 if strict else 0
    return all(c >= bound for c in coeffs)


def containment_coeffs(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> tuple[Fraction, ...]:
    """Simple-root coefficients of ``lam - dominant_rep(mu)``."""
    mu_plus = dominant(rs, mu)
    return root_coords(rs, [a - b for a, b in zip(lam, mu_plus)])


def minuscule_reps(rs: RootSystem) -> list[Weight]:
    """``0`` followed by the minuscule fundamental weights in node order."""
    n = rs.rank
    return [(0,) * n] + [rs.fundamental_weights[i - 1] for i in sorted(rs.minuscule)]


def minuscule_rep_of_class(rs: RootSystem, lam: Sequence[int]) -> Weight:
    """The unique element of ``Omega_m + {0}`` congruent to ``lam`` modulo ``Q``."""
    hits = [w for w in minuscule_reps(rs)
            if in_root_lattice(rs, [a - b for a, b in zip(lam, w)])]
    if len(hits) != 1:
        raise AssertionError(f"class of {tuple(lam)} has {len(hits)} minuscule representatives")
    return hits[0]


# ---- classical realizations -------------------------------------------------

def classical_coords(rs: RootSystem, lam: Sequence[int]) -> tuple[Fraction, ...]:
    """Coordinates in the standard realization of a classical root system.

    Type ``A_n`` returns the sum-zero representative in ``R^{n+1}``.
    """
    fam, n = rs.type.family, rs.rank
    lam = [Fraction(x) for x in lam]
    if fam == "A":
        tail = [sum(lam[k:], Fraction(0)) for k in range(n)] + [Fraction(0)]
        shift = sum(tail) / (n + 1)
        return tuple(x - shift for x in tail)
    if fam == "B":
        return tuple(sum(lam[k:n - 1], Fraction(0)) + lam[n - 1] / 2 for k in range(n))
    if fam == "C":
        return tuple(sum(lam[k:], Fraction(0)) for k in range(n))
    if fam == "D":
        a, b = lam[n - 2], lam[n - 1]
        x = [sum(lam[k:n - 2], Fraction(0)) + (a + b) / 2 for k in range(n - 1)]
        x.append((b - a) / 2)
        return tuple(x)
    raise ValueError(f"{rs.type} has no classical realization")


def from_classical_coords(rs: RootSystem, x: Sequence) -> Weight:
    """Inverse of :func:`classical_coords` (Type A accepts any representative)."""
    fam, n = rs.type.family, rs.rank
    x = [Fraction(v) for v in x]
    if fam in "ABC":
        lam = [x[i] - x[i + 1] for i in range(n - 1)]
        if fam == "A":
            lam.append(x[n - 1] - x[n])
        elif fam == "B":
            lam.append(2 * x[n - 1])
        else:
            lam.append(x[n - 1])
    elif fam == "D":
        lam = [x[i] - x[i + 1] for i in range(n - 1)] + [x[n - 2] + x[n - 1]]
    else:
        raise ValueError(f"{rs.type} has no classical realization")
    if any(v.denominator != 1 for v in lam):
        raise ValueError(f"{tuple(x)} is not a weight of {rs.type}")
    return tuple(int(v) for v in lam)


def classical_root(rs: RootSystem, alpha: Root) -> tuple[Fraction, ...]:
    """Realization coordinates of a root (sum of the simple-root vectors)."""
    fam, n = rs.type.family, rs.rank
    dim = n + 1 if fam == "A" else n
    out = [Fraction(0)] * dim
    for i, c in enumerate(alpha.simple_coords):
        if not c:
            continue
        vec = [Fraction(0)] * dim
        if i < n - 1 or fam == "A":
            vec[i], vec[i + 1] = Fraction(1), Fraction(-1)
        elif fam == "B":
            vec[n - 1] = Fraction(1)
        elif fam == "C":
            vec[n - 1] = Fraction(2)
        elif fam == "D":
            vec[n - 2], vec[n - 1] = Fraction(1), Fraction(1)
        out = [o + c * v for o, v in zip(out, vec)]
    return tuple(out)


# ---- enumeration helpers ----------------------------------------------------

def dominant_weights_below(rs: RootSystem, lam: Sequence[int]) -> list[Weight]:
    """All dominant weights of ``Pi^Q(lam)`` for dominant ``lam``, sorted.

    Walks down from ``lam`` by subtracting positive roots and keeping
    dominant results; every dominant weight below ``lam`` in the dominance
    order is reached this way (Stembridge's covering theorem).
    """
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError("lam must be dominant")
    seen = {lam}
    stack = [lam]
    while stack:
        mu = stack.pop()
        for a in rs.positive_roots:
            nu = tuple(x - y for x, y in zip(mu, a.weight_image))
            if is_dominant(nu) and nu not in seen:
                seen.add(nu)
                stack.append(nu)
    return sorted(seen)


def orbit(rs: RootSystem, lam: Sequence[int]) -> list[Weight]:
    """Full Weyl orbit of ``lam`` (sorted)."""
    start = tuple(lam)
    seen = {start}
    stack = [start]
    while stack:
        mu = stack.pop()
        for i in range(1, rs.rank + 1):
            nu = reflect_simple(rs, mu, i)
            if nu not in seen:
                seen.add(nu)
                stack.append(nu)
    return sorted(seen)


def lattice_points(rs: RootSystem, lam: Sequence[int]) -> list[Weight]:
    """All of ``Pi^Q(lam)`` for dominant ``lam``: orbits of the dominant weights below."""
    pts = []
    for mu in dominant_weights_below(rs, lam):
        pts.extend(orbit(rs, mu))
    return sorted(pts)


def parse_weight(rs: RootSystem, text: str) -> Weight:
    """Parse ``"0"``, ``"w3"`` or ``"1,0,2"``."""
    text = text.strip()
    n = rs.rank
    if text == "0":
        return (0,) * n
    m = re.fullmatch(r"[wW](\d+)", text)
    if m:
        i = int(m.group(1))
        if not 1 <= i <= n:
            raise ValueError(f"no fundamental weight w{i} in {rs.type}")
        return rs.fundamental_weights[i - 1]
    parts = [p for p in re.split(r"[,\s]+", text.strip("()[] ")) if p]
    coords = tuple(int(p.replace("−", "-")) for p in parts)
    if len(coords) != n:
        raise ValueError(f"expected {n} coordinates for {rs.type}, got {len(coords)}")
    return coords


def format_weight(lam: Sequence[int]) -> str:
    return ",".join(str(x) for x in lam)
