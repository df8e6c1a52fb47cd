"""Brute-force Kirillov-Reshetikhin multiplicity sum over tuples of partitions.

This is the slow reference implementation used to cross-check the tree
algorithm.  It works for every simple type.

For a factor list ``[(ell_a, m_a)]`` and a dominant weight
``lam = omega_max - sum_k n_k alpha_k``, a configuration assigns to every node
``k`` a partition of ``n_k``, stored as part counts ``nu[k][n-1]``.  Vacancy numbers are

    P^(k)_n = sum_a min(n, m_a) [ell_a = k]
              - 2 sum_h min(n, h) nu^(k)_h
              + sum_{j != k} sum_h min(-c_kj n, -c_jk h) nu^(j)_h

and the multiplicity of V(lam) is the sum over configurations with every
``P^(k)_n >= 0`` of ``prod binom(P^(k)_n + nu^(k)_n, nu^(k)_n)``.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from math import comb
from typing import Literal

from .factors import Factor, Factors, normalize_factors, omega_max
from .lie import AlgebraSpec, RootVector, Weight, cartan_data, dominant_weights_below, root_coordinates


class NotUnderHighestWeight(ValueError):
    """``omega_max - lam`` is not a nonnegative integer combination of simple roots."""


@dataclass(frozen=True)
class Config:
    """One partition per node, stored as part counts: ``counts[k][n-1] = nu^(k)_n``."""

    counts: tuple[tuple[int, ...], ...]

    def parts(self, node: int) -> list[int]:
        """Parts of the partition at a 0-based node, largest first."""
        row = self.counts[node]
        return [n for n in range(len(row), 0, -1) for _ in range(row[n - 1])]

    def size(self, node: int) -> int:
        return sum(n * c for n, c in enumerate(self.counts[node], start=1))

    def largest_part(self) -> int:
        return max((len(row) for row in self.counts), default=0)

    def nu(self, node: int, n: int) -> int:
        row = self.counts[node]
        return row[n - 1] if 1 <= n <= len(row) else 0

    def __str__(self) -> str:
        return "(" + "; ".join(",".join(map(str, self.parts(k))) or "-" for k in range(len(self.counts))) + ")"


@dataclass(frozen=True)
class OracleResult:
    status: Literal["ok", "outside-support"]
    multiplicity: int
    configs: tuple[Config, ...]


def _trim(counts: Iterable[int]) -> tuple[int, ...]:
    counts = list(counts)
    while counts and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


def _partitions(total: int, max_part: int) -> Iterator[tuple[int, ...]]:
    """Partitions of ``total`` as count vectors, in reverse-lexicographic order."""

    def rec(remaining: int, cap: int, acc: list[int]) -> Iterator[list[int]]:
        if remaining == 0:
            yield acc
            return
        for part in range(min(cap, remaining), 0, -1):
            acc.append(part)
            yield from rec(remaining - part, part, acc)
            acc.pop()

    for parts in rec(total, max_part, []):
        counts = [0] * (parts[0] if parts else 0)
        for p in parts:
            counts[p - 1] += 1
        yield tuple(counts)


def _check_horizon(spec: AlgebraSpec, factors: Factors, counts) -> int:
    """An n beyond which every P^(k)_n is constant."""
    largest = max((len(row) for row in counts if row), default=0)
    scale = max(-c for row in cartan_data(spec).cartan for c in row)
    return max([1, largest * max(scale, 1)] + [m for _, m in factors])


def _vacancy(spec: AlgebraSpec, factors: Factors, counts, k: int, n: int) -> int:
    cartan = cartan_data(spec).cartan
    value = sum(min(n, m) for ell, m in factors if ell - 1 == k)
    own = counts[k]
    value -= 2 * sum(min(n, h) * c for h, c in enumerate(own, start=1) if c)
    for j in range(spec.rank):
        if j == k or cartan[k][j] == 0 or j >= len(counts):
            continue
        a, b = -cartan[k][j], -cartan[j][k]
        value += sum(min(a * n, b * h) * c for h, c in enumerate(counts[j], start=1) if c)
    return value


def vacancy_numbers(
    spec: AlgebraSpec, factors: Iterable[Factor], cfg: Config, upto_n: int
) -> tuple[tuple[int, ...], ...]:
    """Table ``P[k][n-1]`` for every node k and 1 <= n <= upto_n."""
    factors = normalize_factors(spec, factors)
    if upto_n < cfg.largest_part():
        raise ValueError("upto_n must be at least the largest part")
    return tuple(
        tuple(_vacancy(spec, factors, cfg.counts, k, n) for n in range(1, upto_n + 1))
        for k in range(spec.rank)
    )


def _root_deficit(spec: AlgebraSpec, factors: Factors, lam: Weight) -> RootVector:
    if len(lam) != spec.rank:
        raise ValueError(f"weight {lam} has wrong length for {spec}")
    diff = root_coordinates(spec, tuple(a - b for a, b in zip(omega_max(spec, factors), lam)))
    if diff is None or any(c < 0 for c in diff):
        raise NotUnderHighestWeight(f"{lam} is not under omega_max={omega_max(spec, factors)}")
    return diff


def _node_ok(spec: AlgebraSpec, factors: Factors, counts, k: int) -> bool:
    horizon = _check_horizon(spec, factors, counts)
    return all(_vacancy(spec, factors, counts, k, n) >= 0 for n in range(1, horizon + 1))


def _brute_configs(spec: AlgebraSpec, factors: Factors, lam: Weight) -> list[Config]:
    sizes = _root_deficit(spec, factors, lam)
    r = spec.rank
    cartan = cartan_data(spec).cartan
    # node j can be checked once it and all its neighbours are assigned
    ready_at = [max([j] + [i for i in range(r) if cartan[j][i] != 0]) for j in range(r)]
    out: list[Config] = []
    counts: list[tuple[int, ...]] = []

    def rec(k: int) -> None:
        if k == r:
            out.append(Config(tuple(counts)))
            return
        for part_counts in _partitions(sizes[k], sizes[k]):
            counts.append(part_counts)
            padded = counts + [()] * (r - len(counts))
            if all(_node_ok(spec, factors, padded, j) for j in range(r) if ready_at[j] == k):
                rec(k + 1)
            counts.pop()

    rec(0)
    return out


def admissible_configs(
    spec: AlgebraSpec,
    factors: Iterable[Factor],
    lam: Weight,
    backend: Literal["brute", "tree"] = "brute",
) -> list[Config]:
    """Every configuration whose vacancy numbers are all nonnegative.

    ``backend="tree"`` (simply-laced only) reads the configurations off the
    decomposition tree labels instead of enumerating partitions, which is the
    only practical route for large E-type cases.

    Raises:
        NotUnderHighestWeight: ``lam`` lies outside the support.
    """
    factors = normalize_factors(spec, factors)
    lam = tuple(lam)
    _root_deficit(spec, factors, lam)
    if backend == "tree":
        from .tree import build_tree, configs_for_weight

        return configs_for_weight(build_tree(spec, factors), lam)
    return _brute_configs(spec, factors, lam)


def config_term(spec: AlgebraSpec, factors: Iterable[Factor], cfg: Config) -> int:
    """``prod binom(P + nu, nu)`` for one configuration (0 if any P is negative)."""
    factors = normalize_factors(spec, factors)
    horizon = _check_horizon(spec, factors, cfg.counts)
    total = 1
    for k in range(spec.rank):
        for n in range(1, horizon + 1):
            p = _vacancy(spec, factors, cfg.counts, k, n)
            if p < 0:
                return 0
            total *= comb(p + cfg.nu(k, n), cfg.nu(k, n))
    return total


def kr_query(
    spec: AlgebraSpec,
    factors: Iterable[Factor],
    lam: Weight,
    backend: Literal["brute", "tree"] = "brute",
) -> OracleResult:
    """Multiplicity with an explicit status distinguishing 'outside the support'."""
    factors = normalize_factors(spec, factors)
    try:
        configs = admissible_configs(spec, factors, lam, backend=backend)
    except NotUnderHighestWeight:
        return OracleResult("outside-support", 0, ())
    total = sum(config_term(spec, factors, c) for c in configs)
    return OracleResult("ok", total, tuple(configs))


def kr_multiplicity(spec: AlgebraSpec, factors: Iterable[Factor], lam: Weight) -> int:
    """Multiplicity of V(lam); 0 when lam lies outside the support."""
    return kr_query(spec, factors, lam).multiplicity


def kr_character(spec: AlgebraSpec, factors: Iterable[Factor]) -> dict[Weight, int]:
    """All nonzero multiplicities, scanning every dominant weight under omega_max."""
    factors = normalize_factors(spec, factors)
    out = {}
    for lam, _ in dominant_weights_below(spec, omega_max(spec, factors)):
        m = kr_multiplicity(spec, factors, lam)
        if m:
            out[lam] = m
    return out
