"""Q-system relations among characters Q_m(ell).

For m >= 1 and every node ell,

    Q_m(ell)^2 = Q_{m+1}(ell) Q_{m-1}(ell) + prod_{ell' ~ ell} Qc(m, ell, ell'),

where Qc(m, ell, ell') is Q_m(ell') for equal root lengths, Q_{km}(ell') when
|a_ell|^2 = k |a_ell'|^2, and prod_{i<k} Q_{floor((m+i)/k)}(ell') when
k |a_ell|^2 = |a_ell'|^2.  Solving for Q_{m+1} gives the recurrence used by
``QTable``; Q_0 is the trivial character and Q_1 comes from the initial data.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Literal

from .characters import Character, InexactDivision, divide_exact
from .lie import AlgebraSpec, Weight, cartan_data, fundamental_weight


class UnsupportedType(ValueError):
    pass


def omega(spec: AlgebraSpec, *nodes: int) -> Weight:
    """Sum of fundamental weights; node 0 stands for the zero weight."""
    w = [0] * spec.rank
    for i in nodes:
        if i:
            w[i - 1] += 1
    return tuple(w)


def kr_initial_data(spec: AlgebraSpec) -> dict[int, Character]:
    """Q_1(ell) for the classical types A-D."""
    n = spec.rank
    alternating = {"B": n - 1, "D": n - 2}.get(spec.family, 0)
    if spec.family not in "ABCD":
        raise UnsupportedType(f"no classical initial data for {spec}; supply Q_1 explicitly")
    out = {}
    for ell in range(1, n + 1):
        if ell <= alternating:
            out[ell] = Character(spec, {omega(spec, b): 1 for b in range(ell, -1, -2)})
        else:
            out[ell] = Character.irreducible(spec, fundamental_weight(spec, ell))
    return out


@dataclass
class QTable:
    spec: AlgebraSpec
    initial: dict[int, Character]
    chars: dict[tuple[int, int], Character] = field(default_factory=dict)

    def __post_init__(self) -> None:
        missing = set(range(1, self.spec.rank + 1)) - set(self.initial)
        if missing:
            raise ValueError(f"initial data missing for nodes {sorted(missing)}")
        for ell, ch in self.initial.items():
            if ch.spec != self.spec:
                raise ValueError(f"initial data for node {ell} belongs to {ch.spec}")
            self.chars[(0, ell)] = Character.trivial(self.spec)
            self.chars[(1, ell)] = ch

    def q(self, m: int, ell: int) -> Character:
        """Q_m(ell), evaluated on demand with exact division."""
        if m < 0:
            raise ValueError("m must be nonnegative")
        key = (m, ell)
        if key not in self.chars:
            # fill lower levels first so recursion depth stays small
            for j in range(2, m):
                self.q(j, ell)
            prev = self.q(m - 1, ell)
            num = prev * prev - neighbour_product(m - 1, ell, self)
            self.chars[key] = divide_exact(num, self.q(m - 2, ell))
        return self.chars[key]


def curly_q(m: int, ell: int, ell2: int, table: QTable) -> Character:
    data = cartan_data(table.spec)
    if ell == ell2 or data.cartan[ell - 1][ell2 - 1] == 0:
        raise ValueError(f"nodes {ell} and {ell2} are not adjacent")
    a, b = data.inner[ell - 1][ell - 1], data.inner[ell2 - 1][ell2 - 1]
    if a == b:
        return table.q(m, ell2)
    if a > b:
        return table.q(int(a / b) * m, ell2)
    k = int(b / a)
    out = Character.trivial(table.spec)
    for i in range(k):
        out = out * table.q((m + i) // k, ell2)
    return out


def neighbour_product(m: int, ell: int, table: QTable) -> Character:
    out = Character.trivial(table.spec)
    for other in cartan_data(table.spec).neighbours(ell):
        out = out * curly_q(m, ell, other, table)
    return out


def q_character(m: int, ell: int, initial: Mapping[int, Character] | QTable) -> Character:
    table = initial if isinstance(initial, QTable) else QTable(next(iter(initial.values())).spec, dict(initial))
    return table.q(m, ell)


def check_relations(table: QTable, max_m: int) -> dict[tuple[int, int], Character]:
    """Residual Q_m^2 - Q_{m+1} Q_{m-1} - prod Qc for 1 <= m <= max_m, every node."""
    out = {}
    for m in range(1, max_m + 1):
        for ell in range(1, table.spec.rank + 1):
            qm = table.q(m, ell)
            out[(m, ell)] = qm * qm - table.q(m + 1, ell) * table.q(m - 1, ell) - neighbour_product(m, ell, table)
    return out


@dataclass(frozen=True)
class Witness:
    kind: Literal["negative", "inexact"]
    m: int
    ell: int
    weight: Weight
    coefficient: int


def negative_witness(spec: AlgebraSpec, initial: Mapping[int, Character], max_m: int) -> Witness | None:
    """First negative coefficient (or failed division) scanning m = 1.., then ell = 1.."""
    table = QTable(spec, dict(initial))
    for m in range(1, max_m + 1):
        for ell in range(1, spec.rank + 1):
            try:
                ch = table.q(m, ell)
            except InexactDivision as exc:
                w, c = exc.term
                return Witness("inexact", m, ell, w, c)
            negatives = [(w, c) for w, c in ch if c < 0]
            if negatives:
                w, c = max(negatives, key=lambda t: sum(t[0]))
                return Witness("negative", m, ell, w, c)
    return None


# --- single-multiplicity perturbations of the classical initial data ----------


def initial_multiplicities(spec: AlgebraSpec) -> dict[tuple[int, int], int]:
    """The free multiplicities M_{a,b} of V_b in Q_1(a), at their KR values."""
    n = spec.rank
    out = {}
    if spec.family == "B":
        for a in range(1, n):
            for b in range(a):
                out[(a, b)] = 1 if (a - b) % 2 == 0 else 0
    elif spec.family in "CD":
        top = n if spec.family == "C" else n - 2
        for a in range(1, top + 1):
            for b in range(a - 2, -1, -2):
                out[(a, b)] = 0 if spec.family == "C" else 1
    elif spec.family != "A":
        raise UnsupportedType(f"no parametrized initial data for {spec}")
    return out


def perturbed_initial_data(spec: AlgebraSpec, overrides: Mapping[tuple[int, int], int]) -> dict[int, Character]:
    """KR initial data with some M_{a,b} replaced."""
    free = initial_multiplicities(spec)
    for key, value in overrides.items():
        if key not in free:
            raise ValueError(f"M_{key} is not a free multiplicity for {spec}")
        if value < 0:
            raise ValueError("multiplicities must be nonnegative")
    data = kr_initial_data(spec)
    for (a, b), value in overrides.items():
        data[a] = data[a] + Character(spec, {omega(spec, b): value - free[(a, b)]})
    return data


def single_perturbations(spec: AlgebraSpec) -> list[tuple[tuple[int, int], int]]:
    """Every (M_{a,b}, new value) obtained by moving one multiplicity by +-1."""
    out = []
    for key, value in sorted(initial_multiplicities(spec).items()):
        for new in (value - 1, value + 1):
            if new >= 0:
                out.append((key, new))
    return out


@dataclass(frozen=True)
class PredictedWitness:
    m: int
    ell: int
    weight: Weight
    coefficient: int  # value for the perturbed M
    case: str


def predicted_witnesses(spec: AlgebraSpec, a: int, b: int, value: int) -> list[PredictedWitness]:
    """Coefficients the uniqueness argument predicts when M_{a,b} = value.

    Weight conventions: for B_n, omega_n inside V_n means 2 omega_n; for D_n,
    V_{n-1} stands for V(omega_{n-1} + omega_n).
    """
    n = spec.rank
    M = value
    f = spec.family

    def w(*parts: tuple[int, int]) -> Weight:
        out = [0] * n
        for node, coeff in parts:
            if node:
                out[node - 1] += coeff
        return tuple(out)

    out = []
    if f == "B":
        def v(i: int) -> tuple[int, int]:
            return (i, 2) if i == n else (i, 1)

        if a == n - 1 and (n - 1 - b) % 2 == 1:
            out.append(PredictedWitness(3, n, w((b, 1), (n, 1)), 1 - 2 * M, "B1"))
        if (a - b) % 2 == 1 and a <= n - 2:
            out.append(PredictedWitness(2, a + 1, w(v(a + 2), (b, 1)), -M, "B2"))
        if (a - b) % 2 == 0:
            out.append(PredictedWitness(2, a, w((a, 1), (b, 1)), 2 * M - 1, "B3a"))
            if a + 1 <= n - 1:
                out.append(PredictedWitness(2, a + 1, w(v(a + 2), (b, 1)), 1 - M, "B3b"))
    elif f == "C":
        if a - b == 2:
            out.append(PredictedWitness(3, a - 1, w((a - 1, 1), (a - 2, 2)), 1 - 2 * M, "C1"))
        if a - b >= 4:
            out.append(PredictedWitness(2, a - 1, w((a - 2, 1), (b, 1)), -M, "C2"))
    elif f == "D":
        out.append(PredictedWitness(2, a - 1, w((b, 2)), 1 - M, "D1"))
        out.append(PredictedWitness(2, a, w((a, 1), (b, 1)), 2 * M - 1, "D2"))
    return out
