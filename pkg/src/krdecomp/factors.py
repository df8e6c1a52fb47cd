"""Factor lists ``[(ell, m), ...]`` describing a product of KR modules W_m(ell)."""

from __future__ import annotations

from collections.abc import Iterable

from .lie import AlgebraSpec, Weight

Factor = tuple[int, int]
Factors = tuple[Factor, ...]


def normalize_factors(spec: AlgebraSpec, factors: Iterable[Factor]) -> Factors:
    """Validate and freeze a factor list.  Node 0 is not allowed; m may be 0."""
    out = []
    for ell, m in factors:
        ell, m = int(ell), int(m)
        if not 1 <= ell <= spec.rank:
            raise ValueError(f"node {ell} out of range 1..{spec.rank} for {spec}")
        if m < 0:
            raise ValueError(f"negative m={m} for node {ell}")
        out.append((ell, m))
    return tuple(out)


def omega_max(spec: AlgebraSpec, factors: Factors) -> Weight:
    w = [0] * spec.rank
    for ell, m in factors:
        w[ell - 1] += m
    return tuple(w)


def partial_weight(spec: AlgebraSpec, factors: Factors, n: int) -> Weight:
    """``sum_a min(n, m_a) omega_{ell_a}``."""
    w = [0] * spec.rank
    for ell, m in factors:
        w[ell - 1] += min(n, m)
    return tuple(w)


def increment(spec: AlgebraSpec, factors: Factors, n: int) -> Weight:
    """``sum over a with n <= m_a of omega_{ell_a}``: the step from row n-1 to row n."""
    w = [0] * spec.rank
    for ell, m in factors:
        if n <= m:
            w[ell - 1] += 1
    return tuple(w)
