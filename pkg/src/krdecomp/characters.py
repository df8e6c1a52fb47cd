"""The representation ring: integer combinations of irreducible characters.

``Character`` stores ``{dominant weight: coefficient}`` with no zero entries.
Products of irreducibles use the Klimyk (Racah-Speiser) scheme over the weights
of the smaller factor; exact division peels leading terms.  ``cn_column_tensor``
is an independent crystal-column rule for type C.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .lie import (
    AlgebraSpec,
    Weight,
    all_weights,
    dominates,
    is_dominant,
    weight_to_root,
    weyl_dim,
)


class SpecMismatch(ValueError):
    pass


class InexactDivision(ArithmeticError):
    """Leading-term division got stuck; ``term`` is the remainder's leading (weight, coefficient)."""

    def __init__(self, term: tuple[Weight, int], message: str | None = None) -> None:
        self.term = term
        super().__init__(message or f"division is not exact at term {term[1]}·V{list(term[0])}")


class Character:
    __slots__ = ("spec", "_terms", "_hash")

    def __init__(self, spec: AlgebraSpec, terms: Mapping[Weight, int] | Iterable[tuple[Weight, int]] = ()) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Weight, int] = {}
        for w, c in items:
            w = tuple(int(x) for x in w)
            if len(w) != spec.rank or not is_dominant(w):
                raise ValueError(f"{list(w)} is not a dominant weight of {spec}")
            acc[w] = acc.get(w, 0) + int(c)
        self.spec = spec
        self._terms = {w: acc[w] for w in sorted(acc) if acc[w]}
        self._hash: int | None = None

    @classmethod
    def irreducible(cls, spec: AlgebraSpec, w: Weight, coeff: int = 1) -> "Character":
        return cls(spec, {tuple(w): coeff})

    @classmethod
    def trivial(cls, spec: AlgebraSpec) -> "Character":
        return cls(spec, {(0,) * spec.rank: 1})

    @classmethod
    def zero(cls, spec: AlgebraSpec) -> "Character":
        return cls(spec)

    @property
    def terms(self) -> dict[Weight, int]:
        return dict(self._terms)

    def __getitem__(self, w: Weight) -> int:
        return self._terms.get(tuple(w), 0)

    def __iter__(self):
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        return isinstance(other, Character) and self.spec == other.spec and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.spec, tuple(self._terms.items())))
        return self._hash

    def _check(self, other: "Character") -> None:
        if self.spec != other.spec:
            raise SpecMismatch(f"{self.spec} vs {other.spec}")

    def __add__(self, other: "Character") -> "Character":
        self._check(other)
        return Character(self.spec, list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "Character":
        return Character(self.spec, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "Character") -> "Character":
        return self + (-other)

    def __mul__(self, other: "Character | int") -> "Character":
        if isinstance(other, int):
            return Character(self.spec, {w: c * other for w, c in self._terms.items()})
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Character":
        out = Character.trivial(self.spec)
        for _ in range(k):
            out = out * self
        return out

    def dimension(self) -> int:
        return sum(c * weyl_dim(self.spec, w) for w, c in self._terms.items())

    def leading(self) -> tuple[Weight, int]:
        w = max(self._terms, key=lambda x: _order_key(self.spec, x))
        return w, self._terms[w]

    def __repr__(self) -> str:
        if not self._terms:
            return f"Character({self.spec}, 0)"
        body = " + ".join(f"{c}·V{list(w)}" for w, c in self._terms.items())
        return f"Character({self.spec}, {body})"


def _order_key(spec: AlgebraSpec, w: Weight) -> tuple[Fraction, Weight]:
    """Total order extending dominance: height, then omega-coordinates."""
    return sum(weight_to_root(spec, w), Fraction(0)), tuple(w)


def _reflect_to_chamber(cartan, w: list[int]) -> tuple[tuple[int, ...], int] | None:
    """Dominant conjugate of a rho-shifted weight with its sign; None if it lies on a wall."""
    sign = 1
    while True:
        for i, c in enumerate(w):
            if c == 0:
                return None
            if c < 0:
                row = cartan[i]
                for j in range(len(w)):
                    w[j] -= c * row[j]
                sign = -sign
                break
        else:
            return tuple(w), sign


@lru_cache(maxsize=200_000)
def _tensor_pair(spec: AlgebraSpec, lam: Weight, mu: Weight) -> tuple[tuple[Weight, int], ...]:
    from .lie import cartan_data

    cartan = cartan_data(spec).cartan
    out: dict[Weight, int] = {}
    for nu, m in all_weights(spec, mu):
        hit = _reflect_to_chamber(cartan, [a + b + 1 for a, b in zip(lam, nu)])
        if hit is None:
            continue
        w, sign = hit
        key = tuple(x - 1 for x in w)
        out[key] = out.get(key, 0) + sign * m
    return tuple(sorted((w, c) for w, c in out.items() if c))


def tensor_irreducibles(spec: AlgebraSpec, lam: Weight, mu: Weight) -> Character:
    """Decompose V(lam) ⊗ V(mu)."""
    lam, mu = tuple(lam), tuple(mu)
    for w in (lam, mu):
        if len(w) != spec.rank or not is_dominant(w):
            raise ValueError(f"{list(w)} is not a dominant weight of {spec}")
    # iterate over the weights of the smaller factor
    if (weyl_dim(spec, lam), lam) < (weyl_dim(spec, mu), mu):
        lam, mu = mu, lam
    return Character(spec, _tensor_pair(spec, lam, mu))


def multiply(a: Character, b: Character) -> Character:
    a._check(b)
    acc: dict[Weight, int] = {}
    for wa, ca in a:
        for wb, cb in b:
            for w, c in tensor_irreducibles(a.spec, wa, wb):
                acc[w] = acc.get(w, 0) + ca * cb * c
    return Character(a.spec, acc)


def divide_exact(num: Character, den: Character) -> Character:
    """The quotient q with q·den = num.

    Raises:
        ZeroDivisionError: den is zero.
        InexactDivision: no such q exists.
    """
    num._check(den)
    if not den:
        raise ZeroDivisionError("division by the zero character")
    spec = num.spec
    top, top_coeff = den.leading()
    remainder = num
    quotient: dict[Weight, int] = {}
    while remainder:
        w, c = remainder.leading()
        shift = tuple(a - b for a, b in zip(w, top))
        if not is_dominant(shift) or c % top_coeff:
            raise InexactDivision((w, c))
        term = Character(spec, {shift: c // top_coeff})
        quotient[shift] = c // top_coeff
        remainder = remainder - term * den
    return Character(spec, quotient)


def is_true_character(a: Character, bound: Weight) -> bool:
    """Nonnegative, V(bound) with coefficient exactly 1, all other terms under bound."""
    bound = tuple(bound)
    if a[bound] != 1:
        return False
    return all(c > 0 and dominates(a.spec, bound, w) for w, c in a)


# --- type C column rule ------------------------------------------------------


def _kn_columns(n: int, k: int) -> list[tuple[int, ...]]:
    """Admissible columns of height k; letters 1..n are p and -1..-n are p-bar.

    Letters are ordered 1 < ... < n < n-bar < ... < 1-bar.  A column with
    i_a = p and i_b = p-bar (1-based positions) needs a + (k - b + 1) <= p.
    """
    alphabet = list(range(1, n + 1)) + list(range(-n, 0))
    out = []
    for col in combinations(alphabet, k):
        pos = {v: i + 1 for i, v in enumerate(col)}
        if all(a + (k - pos[-p] + 1) <= p for p, a in pos.items() if p > 0 and -p in pos):
            out.append(col)
    return out


def _rows_of(w: Weight) -> list[int]:
    n = len(w)
    return [sum(w[j] for j in range(i, n)) for i in range(n)]


def _weight_of(rows: list[int]) -> Weight:
    return tuple(rows[i] - (rows[i + 1] if i + 1 < len(rows) else 0) for i in range(len(rows)))


def _act(rows: list[int], column: Iterable[int]) -> list[int] | None:
    rows = list(rows)
    for letter in column:
        p = abs(letter) - 1
        rows[p] += 1 if letter > 0 else -1
        if rows[p] < 0 or (p > 0 and rows[p] > rows[p - 1]) or (p + 1 < len(rows) and rows[p] < rows[p + 1]):
            return None
    return rows


def cn_column_tensor(spec: AlgebraSpec, base: Character, k: int) -> Character:
    """base ⊗ V(omega_k) in type C_n by applying admissible columns letter by letter.

    Each column acts on the Young diagram of every term of ``base``: letter p adds
    a box to row p, p-bar removes one; a column is discarded as soon as an
    intermediate shape is not a partition.
    """
    if spec.family != "C":
        raise ValueError(f"column rule is for type C, got {spec}")
    if base.spec != spec:
        raise SpecMismatch(f"{base.spec} vs {spec}")
    n = spec.rank
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range 0..{n}")
    if any(c < 0 for _, c in base):
        raise ValueError("base must be a true character")
    columns = _kn_columns(n, k)
    acc: dict[Weight, int] = {}
    for w, c in base:
        start = _rows_of(w)
        for col in columns:
            rows = _act(start, col)
            if rows is not None:
                key = _weight_of(rows)
                acc[key] = acc.get(key, 0) + c
    return Character(spec, acc)
