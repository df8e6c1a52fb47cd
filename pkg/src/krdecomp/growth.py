"""Path-types of the tree T(ell) and the polynomial growth of dim W_m(ell).

A path-type is a strictly decreasing chain Delta_1 > ... > Delta_t of nonzero
root-lattice vectors below omega_ell.  Delta provides omega_k when the k-th
omega-coordinate of omega_ell - Delta is positive and requires it when that
coordinate is negative.  A path-type occurs in the tree iff every requirement
is provided strictly earlier, and its contribution to the growth is

    g = t + sum_k (alpha_k-coordinate of the first Delta providing omega_k).

The search only ever extends a chain by an element that is maximal among the
admissible candidates below the previous one: inserting any larger admissible
element would add one to t without lowering the sum, so a g-maximal chain never
skips one.
"""

from __future__ import annotations

import sys
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .lie import (
    AlgebraSpec,
    RootVector,
    Weight,
    cartan_data,
    fundamental_weight,
    pairing,
    root_coordinates,
    root_to_weight,
    weight_to_root,
    weyl_dim,
)
from .tree import aggregate, build_tree

# Maximal g-values for W_m(ell), node by node; the full E7/E8 searches are far
# beyond desk scale, so these are reference values only.
REFERENCE_G = {
    "E6": (0, 1, 1, 6, 1, 0),
    "E7": (1, 1, 6, 33, 12, 2, 0),
    "E8": (2, 16, 62, 150, 100, 48, 6, 1),
}


class BudgetExhausted(RuntimeError):
    def __init__(self, best: "GrowthResult | None", states: int) -> None:
        self.best = best
        self.states = states
        super().__init__(f"search budget exhausted after {states} states")


class NotSimplyLacedGrowth(ValueError):
    pass


@dataclass(frozen=True)
class GrowthResult:
    g: int
    witness: tuple[RootVector, ...]
    degree: int
    states: int


def provides_requires(spec: AlgebraSpec, ell: int, delta: RootVector) -> tuple[frozenset[int], frozenset[int]]:
    """1-based node sets provided and required by ``delta``."""
    diff = np.subtract(fundamental_weight(spec, ell), root_to_weight(spec, delta))
    return (
        frozenset(int(k) + 1 for k in np.flatnonzero(diff > 0)),
        frozenset(int(k) + 1 for k in np.flatnonzero(diff < 0)),
    )


def _strictly_decreasing(deltas: Sequence[RootVector]) -> bool:
    for a, b in zip(deltas, deltas[1:]):
        if any(x < y for x, y in zip(a, b)) or tuple(a) == tuple(b):
            return False
    return True


def _check_shape(spec: AlgebraSpec, ell: int, deltas: Sequence[RootVector]) -> None:
    top = weight_to_root(spec, fundamental_weight(spec, ell))
    if not deltas:
        raise ValueError("a path-type has at least one element")
    for d in deltas:
        if len(d) != spec.rank or not any(d) or any(x < 0 or x > t for x, t in zip(d, top)):
            raise ValueError(f"{d} is not between 0 and omega_{ell}")
    if not _strictly_decreasing(deltas):
        raise ValueError("path-type must be strictly decreasing")


def is_admissible(spec: AlgebraSpec, ell: int, deltas: Sequence[RootVector]) -> bool:
    _check_shape(spec, ell, deltas)
    provided: set[int] = set()
    for d in deltas:
        prov, req = provides_requires(spec, ell, tuple(d))
        if not req <= provided:
            return False
        provided |= prov
    return True


def g_value(spec: AlgebraSpec, ell: int, deltas: Sequence[RootVector]) -> int:
    """t plus the alpha_k-coordinate of the first Delta providing omega_k, summed over k."""
    if not is_admissible(spec, ell, deltas):
        raise ValueError("path-type is not admissible")
    first: dict[int, RootVector] = {}
    for d in deltas:
        for k in provides_requires(spec, ell, tuple(d))[0]:
            first.setdefault(k, tuple(d))
    return len(deltas) + sum(d[k - 1] for k, d in first.items())


def nonorthogonal_roots(spec: AlgebraSpec, ell: int, deltas: Sequence[RootVector]) -> int:
    """Positive roots not orthogonal to every one of omega_ell, Delta_1, ..., Delta_t."""
    gens = [fundamental_weight(spec, ell)] + [root_to_weight(spec, d) for d in deltas]
    return sum(
        1 for beta in cartan_data(spec).positive_roots if any(pairing(spec, w, beta) != 0 for w in gens)
    )


def growth_degree(spec: AlgebraSpec, ell: int, deltas: Sequence[RootVector]) -> int:
    """Degree in m of dim W_m(ell) predicted by a g-maximal path-type."""
    return nonorthogonal_roots(spec, ell, deltas) + (g_value(spec, ell, deltas) if deltas else 0)


class _Search:
    def __init__(self, spec: AlgebraSpec, ell: int, budget: int | None) -> None:
        self.spec = spec
        self.ell = ell
        self.budget = budget
        self.states = 0
        top = [int(x) for x in weight_to_root(spec, fundamental_weight(spec, ell))]
        grids = np.meshgrid(*[np.arange(t + 1) for t in top], indexing="ij")
        box = np.stack([g.ravel() for g in grids], axis=1).astype(np.int64)
        box = box[box.any(axis=1)]
        cartan = np.array(cartan_data(spec).cartan, dtype=np.int64)
        diff = np.array(fundamental_weight(spec, ell), dtype=np.int64) - box @ cartan
        bits = 1 << np.arange(spec.rank, dtype=np.int64)
        order = np.argsort(-box.sum(axis=1), kind="stable")
        self.cands = box[order]
        self.provides = ((diff[order] > 0) * bits).sum(axis=1)
        self.requires = ((diff[order] < 0) * bits).sum(axis=1)
        self.memo: dict[tuple[int, int], tuple[int, tuple[int, ...]]] = {}

    def _gain(self, idx: int, provided: int) -> int:
        new = int(self.provides[idx]) & ~provided
        vec = self.cands[idx]
        return 1 + sum(int(vec[k]) for k in range(self.spec.rank) if new >> k & 1)

    def successors(self, last: int | None, provided: int) -> list[int]:
        mask = (self.requires & ~provided) == 0
        if last is not None:
            cur = self.cands[last]
            mask &= (self.cands <= cur).all(axis=1) & (self.cands != cur).any(axis=1)
        idx = np.flatnonzero(mask)
        maximal: list[int] = []
        kept = np.empty((0, self.spec.rank), dtype=np.int64)
        # candidates are sorted by decreasing height, so anything dominated
        # is dominated by an element already kept
        for i in idx:
            v = self.cands[i]
            if kept.size and (kept >= v).all(axis=1).any():
                continue
            maximal.append(int(i))
            kept = np.vstack([kept, v])
        return maximal

    def best(self, last: int | None, provided: int) -> tuple[int, tuple[int, ...]]:
        key = (-1 if last is None else last, provided)
        if key in self.memo:
            return self.memo[key]
        self.states += 1
        if self.budget is not None and self.states > self.budget:
            raise BudgetExhausted(None, self.states)
        value, path = 0, ()
        for nxt in self.successors(last, provided):
            sub, tail = self.best(nxt, provided | int(self.provides[nxt]))
            total = self._gain(nxt, provided) + sub
            if total > value:
                value, path = total, (nxt,) + tail
        self.memo[key] = (value, path)
        return value, path


def max_growth(spec: AlgebraSpec, ell: int, search_budget: int | None = None) -> GrowthResult:
    """Largest g over admissible path-types, a witness, and the resulting degree.

    Raises:
        BudgetExhausted: more than ``search_budget`` search states were needed.
    """
    if not spec.simply_laced:
        raise NotSimplyLacedGrowth(f"growth analysis needs a simply-laced algebra, got {spec}")
    if not 1 <= ell <= spec.rank:
        raise ValueError(f"node {ell} out of range for {spec}")
    search = _Search(spec, ell, search_budget)
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 10_000))
    try:
        g, path = search.best(None, 0)
    finally:
        sys.setrecursionlimit(limit)
    witness = tuple(tuple(int(x) for x in search.cands[i]) for i in path)
    return GrowthResult(g, witness, growth_degree(spec, ell, witness), search.states)


def delta_from_weight(spec: AlgebraSpec, w: Weight) -> RootVector:
    """A Delta written as a weight (e.g. omega_4 - omega_2), in alpha-coordinates."""
    out = root_coordinates(spec, tuple(w))
    if out is None:
        raise ValueError(f"{list(w)} is not in the root lattice")
    return out


def tree_dimension(spec: AlgebraSpec, ell: int, m: int) -> int:
    """dim W_m(ell) summed over the decomposition tree."""
    return sum(c * weyl_dim(spec, w) for w, c in aggregate(build_tree(spec, [(ell, m)])).items())


def fit_degree(ms: Sequence[int], dims: Sequence[int], corrections: int = 4) -> float:
    """Least-squares degree of a polynomial sequence on log-log axes.

    Fits log dim = d log m + c + sum_{j<=corrections} b_j / m^j, which is the
    asymptotic expansion of the log of a degree-d polynomial; a plain straight-line
    fit is badly biased by lower-order terms at small m.
    """
    m = np.asarray(ms, dtype=float)
    cols = [np.log(m), np.ones_like(m)] + [m ** -j for j in range(1, corrections + 1)]
    coef, *_ = np.linalg.lstsq(np.column_stack(cols), np.log(np.asarray(dims, dtype=float)), rcond=None)
    return float(coef[0])
