"""Cartan data and weight-lattice arithmetic for the simple Lie algebras.

Weights are integer tuples in fundamental-weight (omega) coordinates and
root vectors are integer tuples in simple-root (alpha) coordinates.  Nodes
are numbered as in Bourbaki: E-types use 1-3-4-5-6-7-8 for the long chain
with node 2 attached to node 4; for B_n node n is short, for C_n node n is
long, for F_4 nodes 3 and 4 are short, for G_2 node 1 is short.

The Cartan matrix convention is ``c[i][j] = 2 (a_i, a_j) / (a_j, a_j)``,
so row ``j`` of the matrix is the omega-coordinate vector of ``a_j``.
Everything is exact: Python ints and ``fractions.Fraction``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod

import sympy

Weight = tuple[int, ...]
RootVector = tuple[int, ...]

_RANK_RULES = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 2,
    "C": lambda r: r >= 2,
    "D": lambda r: r >= 3,
    "E": lambda r: r in (6, 7, 8),
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
}

_POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


class InvalidAlgebra(ValueError):
    """Unknown family or a rank the family does not admit."""


@dataclass(frozen=True, order=True)
class AlgebraSpec:
    family: str
    rank: int

    def __post_init__(self) -> None:
        rule = _RANK_RULES.get(self.family)
        if rule is None or not isinstance(self.rank, int) or not rule(self.rank):
            raise InvalidAlgebra(f"no simple Lie algebra of type {self.family}{self.rank}")

    @classmethod
    def parse(cls, text: str) -> "AlgebraSpec":
        """Parse strings such as ``"E6"`` or ``"d4"``."""
        m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", text)
        if m is None:
            raise InvalidAlgebra(f"malformed algebra string {text!r}; expected e.g. 'E6'")
        return cls(m.group(1).upper(), int(m.group(2)))

    @property
    def simply_laced(self) -> bool:
        return self.family in "ADE"

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _edges(spec: AlgebraSpec) -> list[tuple[int, int]]:
    """Dynkin edges as 0-based node pairs."""
    f, n = spec.family, spec.rank
    if f in "ABCFG":
        return [(i, i + 1) for i in range(n - 1)]
    if f == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    # E_n: chain 1-3-4-...-n, node 2 hangs off node 4
    chain = [0] + list(range(2, n))
    return [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)] + [(1, 3)]


def _root_lengths(spec: AlgebraSpec) -> tuple[Fraction, ...]:
    f, n = spec.family, spec.rank
    two, one = Fraction(2), Fraction(1)
    if f == "B":
        return (two,) * (n - 1) + (one,)
    if f == "C":
        return (one,) * (n - 1) + (two,)
    if f == "F":
        return (two, two, one, one)
    if f == "G":
        return (Fraction(2, 3), two)
    return (two,) * n


@dataclass(frozen=True)
class CartanData:
    spec: AlgebraSpec
    cartan: tuple[tuple[int, ...], ...]
    inner: tuple[tuple[Fraction, ...], ...]  # (a_i, a_j), long roots of length 2
    inverse_cartan: tuple[tuple[Fraction, ...], ...]
    positive_roots: tuple[RootVector, ...]
    rho: Weight
    # integer form of the inverse: weight_to_root(w) = (w . inv_num) / inv_den
    inv_num: tuple[tuple[int, ...], ...]
    inv_den: int

    @property
    def rank(self) -> int:
        return self.spec.rank

    @property
    def symmetrized(self) -> tuple[tuple[Fraction, ...], ...]:
        """``b_ij = (a_i, a_j) / 2``."""
        return tuple(tuple(x / 2 for x in row) for row in self.inner)

    @property
    def root_lengths(self) -> tuple[Fraction, ...]:
        return tuple(self.inner[i][i] for i in range(self.rank))

    def neighbours(self, node: int) -> list[int]:
        """1-based Dynkin neighbours of a 1-based node."""
        i = node - 1
        return [j + 1 for j in range(self.rank) if j != i and self.cartan[i][j] != 0]


@lru_cache(maxsize=None)
def cartan_data(spec: AlgebraSpec) -> CartanData:
    n = spec.rank
    lengths = _root_lengths(spec)
    inner = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        inner[i][i] = lengths[i]
    for i, j in _edges(spec):
        # adjacent simple roots: (a_i, a_j) = -max(|a_i|^2, |a_j|^2) / 2
        inner[i][j] = inner[j][i] = -max(lengths[i], lengths[j]) / 2
    cartan = tuple(
        tuple(int(2 * inner[i][j] / inner[j][j]) for j in range(n)) for i in range(n)
    )
    m = sympy.Matrix(cartan)
    det = int(m.det())
    adj = m.adjugate()
    inv_num = tuple(tuple(int(adj[i, j]) for j in range(n)) for i in range(n))
    inverse = tuple(tuple(Fraction(inv_num[i][j], det) for j in range(n)) for i in range(n))
    data = CartanData(
        spec=spec,
        cartan=cartan,
        inner=tuple(tuple(r) for r in inner),
        inverse_cartan=inverse,
        positive_roots=(),
        rho=(1,) * n,
        inv_num=inv_num,
        inv_den=det,
    )
    roots = _positive_roots(data)
    expected = _POSITIVE_ROOT_COUNT[spec.family](n)
    if len(roots) != expected:  # pragma: no cover - table sanity
        raise AssertionError(f"{spec}: found {len(roots)} positive roots, expected {expected}")
    return CartanData(**{**data.__dict__, "positive_roots": roots})


def _positive_roots(data: CartanData) -> tuple[RootVector, ...]:
    n = data.rank
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        beta = queue.popleft()
        w = _alpha_to_omega(data.cartan, beta)
        for i in range(n):
            if w[i] == 0:
                continue
            image = tuple(b - w[i] * (j == i) for j, b in enumerate(beta))
            if all(c >= 0 for c in image) and image not in seen:
                seen.add(image)
                queue.append(image)
    return tuple(sorted(seen, key=lambda r: (sum(r), r)))


def _alpha_to_omega(cartan, v) -> Weight:
    n = len(cartan)
    return tuple(sum(v[j] * cartan[j][i] for j in range(n) if v[j]) for i in range(n))


def root_to_weight(spec: AlgebraSpec, v: RootVector) -> Weight:
    """omega-coordinates of ``sum v_j a_j``."""
    return _alpha_to_omega(cartan_data(spec).cartan, v)


def weight_to_root(spec: AlgebraSpec, w: Weight) -> tuple[Fraction, ...]:
    """Exact alpha-coordinates of a weight."""
    data = cartan_data(spec)
    return tuple(Fraction(x, data.inv_den) for x in _scaled_alpha(data, w))


def _scaled_alpha(data: CartanData, w: Weight) -> tuple[int, ...]:
    n = data.rank
    num = data.inv_num
    return tuple(sum(w[i] * num[i][k] for i in range(n) if w[i]) for k in range(n))


def root_coordinates(spec: AlgebraSpec, w: Weight) -> RootVector | None:
    """Integer alpha-coordinates of ``w``, or None when ``w`` is off the root lattice."""
    data = cartan_data(spec)
    out = []
    for x in _scaled_alpha(data, w):
        q, r = divmod(x, data.inv_den)
        if r:
            return None
        out.append(q)
    return tuple(out)


def fundamental_weight(spec: AlgebraSpec, node: int) -> Weight:
    """omega_node; node 0 gives the zero weight."""
    if not 0 <= node <= spec.rank:
        raise ValueError(f"node {node} out of range for {spec}")
    return tuple(int(i == node - 1) for i in range(spec.rank))


def dominates(spec: AlgebraSpec, mu: Weight, lam: Weight) -> bool:
    """True iff ``mu - lam`` is a nonnegative integer combination of simple roots."""
    diff = root_coordinates(spec, tuple(a - b for a, b in zip(mu, lam)))
    return diff is not None and all(c >= 0 for c in diff)


def is_dominant(w: Weight) -> bool:
    return all(c >= 0 for c in w)


def height(spec: AlgebraSpec, w: Weight) -> Fraction:
    """Sum of the alpha-coordinates."""
    return sum(weight_to_root(spec, w), Fraction(0))


def pairing(spec: AlgebraSpec, w: Weight, root: RootVector) -> Fraction:
    """Invariant form ``(w, root)`` with ``w`` in omega- and ``root`` in alpha-coordinates."""
    inner = cartan_data(spec).inner
    return sum((Fraction(root[j] * w[j]) * inner[j][j] / 2 for j in range(len(w)) if root[j]),
               Fraction(0))


def form(spec: AlgebraSpec, x: Weight, y: Weight) -> Fraction:
    """Invariant form on two weights given in omega-coordinates."""
    a = weight_to_root(spec, x)
    inner = cartan_data(spec).inner
    return sum((a[k] * y[k] * inner[k][k] / 2 for k in range(len(x)) if y[k]), Fraction(0))


def reflect(spec: AlgebraSpec, w: Weight, node: int) -> Weight:
    """Simple reflection s_node (0-based) of an omega-coordinate weight."""
    row = cartan_data(spec).cartan[node]
    c = w[node]
    return tuple(x - c * r for x, r in zip(w, row))


def dominant_conjugate(spec: AlgebraSpec, w: Weight) -> tuple[Weight, int]:
    """Reflect ``w`` into the dominant chamber; returns (weight, reflection count)."""
    cartan = cartan_data(spec).cartan
    w = list(w)
    count = 0
    while True:
        for i, c in enumerate(w):
            if c < 0:
                row = cartan[i]
                for j in range(len(w)):
                    w[j] -= c * row[j]
                count += 1
                break
        else:
            return tuple(w), count


@lru_cache(maxsize=4096)
def weyl_orbit(spec: AlgebraSpec, w: Weight) -> frozenset[Weight]:
    """The Weyl orbit of ``w`` (found by closing under simple reflections)."""
    seen = {w}
    queue = deque([w])
    while queue:
        x = queue.popleft()
        for i in range(spec.rank):
            if x[i]:
                y = reflect(spec, x, i)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    return frozenset(seen)


def weyl_dim(spec: AlgebraSpec, lam: Weight) -> int:
    """Weyl dimension formula."""
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    data = cartan_data(spec)
    shifted = tuple(x + 1 for x in lam)
    num = den = Fraction(1)
    for root in data.positive_roots:
        num *= pairing(spec, shifted, root)
        den *= pairing(spec, data.rho, root)
    value = num / den
    assert value.denominator == 1
    return int(value)


def dominant_weights_below(
    spec: AlgebraSpec, top: Weight, bound: RootVector | None = None
) -> list[tuple[Weight, RootVector]]:
    """Dominant weights ``nu`` with ``top - nu`` in the positive root cone.

    Returns pairs ``(nu, top - nu in alpha-coordinates)`` in breadth-first order,
    ``top`` itself first.  If ``bound`` is given only those with ``top - nu <= bound``
    componentwise are returned.  Walks down by positive roots through dominant
    weights only; any dominant weight below ``top`` is reachable this way.
    """
    data = cartan_data(spec)
    roots = [(r, _alpha_to_omega(data.cartan, r)) for r in data.positive_roots]
    start = (tuple(top), (0,) * spec.rank)
    seen = {start[0]}
    out = [start]
    queue = deque([start])
    while queue:
        w, diff = queue.popleft()
        for r, rw in roots:
            nd = tuple(a + b for a, b in zip(diff, r))
            if bound is not None and any(a > b for a, b in zip(nd, bound)):
                continue
            nw = tuple(a - b for a, b in zip(w, rw))
            if nw in seen or any(c < 0 for c in nw):
                continue
            seen.add(nw)
            item = (nw, nd)
            out.append(item)
            queue.append(item)
    return out


@lru_cache(maxsize=2048)
def weight_multiplicities(spec: AlgebraSpec, lam: Weight) -> dict[Weight, int]:
    """Freudenthal multiplicities of the dominant weights of V(lam)."""
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    data = cartan_data(spec)
    dominant = dominant_weights_below(spec, lam)
    dominant.sort(key=lambda item: sum(item[1]))
    mult: dict[Weight, int] = {}
    roots = [(r, _alpha_to_omega(data.cartan, r)) for r in data.positive_roots]
    lam_rho = tuple(x + 1 for x in lam)
    norm_top = form(spec, lam_rho, lam_rho)
    for mu, _ in dominant:
        if mu == tuple(lam):
            mult[mu] = 1
            continue
        total = Fraction(0)
        for r, rw in roots:
            k = 1
            while True:
                nu = tuple(a + k * b for a, b in zip(mu, rw))
                conj, _ = dominant_conjugate(spec, nu)
                m = mult.get(conj)
                if m is None:
                    break
                total += m * pairing(spec, nu, r)
                k += 1
        mu_rho = tuple(x + 1 for x in mu)
        value = 2 * total / (norm_top - form(spec, mu_rho, mu_rho))
        assert value.denominator == 1
        if value:
            mult[mu] = int(value)
    return mult


@lru_cache(maxsize=512)
def all_weights(spec: AlgebraSpec, lam: Weight) -> tuple[tuple[Weight, int], ...]:
    """Every weight of V(lam) with its multiplicity."""
    out = []
    for mu, m in weight_multiplicities(spec, lam).items():
        out.extend((nu, m) for nu in weyl_orbit(spec, mu))
    return tuple(sorted(out))


def orbit_size(spec: AlgebraSpec, w: Weight) -> int:
    return len(weyl_orbit(spec, w))


def product_of_dims(spec: AlgebraSpec, weights) -> int:
    return prod(weyl_dim(spec, w) for w in weights)
