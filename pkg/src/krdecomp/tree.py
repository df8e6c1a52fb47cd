"""Decomposition tree for products of KR modules in simply-laced types.

A label is a chain ``0 = d_0 < d_1 < ... < d_s`` of root-lattice vectors such that

* ``mu_n = sum_a min(n, m_a) omega_{ell_a} - d_n`` is dominant for every n, and
* the increments ``delta_n = d_n - d_{n-1}`` weakly decrease componentwise.

Each label is a node of a rooted tree (its parent drops ``d_s``) and contributes
``V(omega_max - d_s)`` with multiplicity

    prod_{n=1..s} prod_k binom(P^(k)_n + D^(k)_n, D^(k)_n),

where ``P_n`` is ``mu_n`` in omega-coordinates and ``D_n = delta_n - delta_{n+1}``
(with ``delta_{s+1} = 0``).  Children of a node are ordered by the height of
their increment, ties broken colexicographically on its alpha-coordinates
(compare the last coordinate first); this reproduces the reference listings.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from math import comb

from .factors import Factor, Factors, increment, normalize_factors, omega_max, partial_weight
from .kr_formula import Config
from .lie import AlgebraSpec, RootVector, Weight, dominant_weights_below, root_to_weight, weight_to_root

Label = tuple[RootVector, ...]  # d_1, ..., d_s (d_0 = 0 implicit)


class NotSimplyLaced(ValueError):
    """The tree algorithm is only valid for types A, D and E."""


class InvalidLabel(ValueError):
    pass


def _binom_product(p: Weight, d: RootVector) -> int:
    out = 1
    for a, b in zip(p, d):
        if b:
            out *= comb(a + b, b)
    return out


@dataclass
class TreeNode:
    label: Label
    highest_weight: Weight
    multiplicity: int
    children: list["TreeNode"] = field(default_factory=list)
    # bookkeeping for extension: mu_s and the product over n < s
    mu: Weight = ()
    prefix: int = 1

    @property
    def depth(self) -> int:
        return len(self.label)

    @property
    def delta(self) -> RootVector | None:
        """Last increment delta_s, or None at the root."""
        if not self.label:
            return None
        prev = self.label[-2] if len(self.label) > 1 else (0,) * len(self.label[-1])
        return tuple(a - b for a, b in zip(self.label[-1], prev))

    def walk(self) -> Iterator["TreeNode"]:
        """Depth-first, parents before children."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))


@dataclass
class DecompositionTree:
    spec: AlgebraSpec
    factors: Factors
    root: TreeNode

    def nodes(self) -> Iterator[TreeNode]:
        return self.root.walk()

    def __len__(self) -> int:
        return sum(1 for _ in self.nodes())

    def rows(self) -> list[list[TreeNode]]:
        out: list[list[TreeNode]] = []
        for node in self.nodes():
            while len(out) <= node.depth:
                out.append([])
            out[node.depth].append(node)
        return out


def _require_simply_laced(spec: AlgebraSpec) -> None:
    if not spec.simply_laced:
        raise NotSimplyLaced(
            f"the tree algorithm needs a simply-laced algebra, got {spec}; use the oracle instead"
        )


def _child_key(item: tuple[Weight, RootVector]) -> tuple:
    e = item[1]
    return sum(e), e[::-1]


def _children_of(spec: AlgebraSpec, factors: Factors, node: TreeNode) -> list[TreeNode]:
    s = node.depth
    top = tuple(a + b for a, b in zip(node.mu, increment(spec, factors, s + 1)))
    bound = node.delta
    base = node.label[-1] if node.label else (0,) * spec.rank
    found = dominant_weights_below(spec, top, bound)
    out = []
    for mu, e in sorted(found[1:], key=_child_key):
        d_next = tuple(a + b for a, b in zip(base, e))
        if bound is None:
            prefix = 1
        else:
            prefix = node.prefix * _binom_product(node.mu, tuple(a - b for a, b in zip(bound, e)))
        out.append(
            TreeNode(
                label=node.label + (d_next,),
                highest_weight=tuple(a - b for a, b in zip(omega_max(spec, factors), root_to_weight(spec, d_next))),
                multiplicity=prefix * _binom_product(mu, e),
                mu=mu,
                prefix=prefix,
            )
        )
    return out


def _root(spec: AlgebraSpec, factors: Factors) -> TreeNode:
    return TreeNode(label=(), highest_weight=omega_max(spec, factors), multiplicity=1,
                    mu=(0,) * spec.rank)


def _node_from_label(spec: AlgebraSpec, factors: Factors, label: Label) -> TreeNode:
    validate_label(spec, factors, label)
    node = _root(spec, factors)
    for d in label:
        match = [c for c in _children_of(spec, factors, node) if c.label[-1] == tuple(d)]
        node = match[0]
    return node


def validate_label(spec: AlgebraSpec, factors: Iterable[Factor], label: Iterable[RootVector]) -> None:
    """Raise InvalidLabel unless the three label conditions hold."""
    factors = normalize_factors(spec, factors)
    prev = (0,) * spec.rank
    prev_delta = None
    for n, d in enumerate(label, start=1):
        d = tuple(d)
        delta = tuple(a - b for a, b in zip(d, prev))
        if len(d) != spec.rank or any(c < 0 for c in delta) or not any(delta):
            raise InvalidLabel(f"d_{n} = {d} does not strictly dominate d_{n - 1}")
        if prev_delta is not None and any(a > b for a, b in zip(delta, prev_delta)):
            raise InvalidLabel(f"delta_{n} exceeds delta_{n - 1}")
        mu = tuple(a - b for a, b in zip(partial_weight(spec, factors, n), root_to_weight(spec, d)))
        if any(c < 0 for c in mu):
            raise InvalidLabel(f"mu_{n} = {mu} is not dominant")
        prev, prev_delta = d, delta


def extend_label(spec: AlgebraSpec, factors: Iterable[Factor], label: Iterable[RootVector]) -> list[Label]:
    """All valid one-step extensions of a valid label, in canonical child order."""
    _require_simply_laced(spec)
    factors = normalize_factors(spec, factors)
    node = _node_from_label(spec, factors, tuple(tuple(d) for d in label))
    return [c.label for c in _children_of(spec, factors, node)]


def node_multiplicity(spec: AlgebraSpec, factors: Iterable[Factor], label: Iterable[RootVector]) -> int:
    _require_simply_laced(spec)
    factors = normalize_factors(spec, factors)
    return _node_from_label(spec, factors, tuple(tuple(d) for d in label)).multiplicity


def build_tree(spec: AlgebraSpec, factors: Iterable[Factor], max_depth: int | None = None) -> DecompositionTree:
    """Grow the full tree (or its first ``max_depth`` rows)."""
    _require_simply_laced(spec)
    factors = normalize_factors(spec, factors)
    if max_depth is None:
        # depth never exceeds the largest alpha-coordinate of omega_max
        max_depth = max(int(x) for x in weight_to_root(spec, omega_max(spec, factors)))
    root = _root(spec, factors)
    stack = [root]
    while stack:
        node = stack.pop()
        if node.depth >= max_depth:
            continue
        node.children = _children_of(spec, factors, node)
        stack.extend(node.children)
    return DecompositionTree(spec, factors, root)


def aggregate(tree: DecompositionTree) -> dict[Weight, int]:
    """Sum node multiplicities by highest weight."""
    out: dict[Weight, int] = {}
    for node in tree.nodes():
        out[node.highest_weight] = out.get(node.highest_weight, 0) + node.multiplicity
    return dict(sorted(out.items()))


def label_config(tree: DecompositionTree, node: TreeNode) -> Config:
    """Partition data of the configuration attached to a label: nu^(k)_n = D^(k)_n."""
    s = node.depth
    deltas = []
    prev = (0,) * tree.spec.rank
    for d in node.label:
        deltas.append(tuple(a - b for a, b in zip(d, prev)))
        prev = d
    deltas.append((0,) * tree.spec.rank)
    counts = [[deltas[n][k] - deltas[n + 1][k] for n in range(s)] for k in range(tree.spec.rank)]
    return Config(tuple(_trimmed(row) for row in counts))


def _trimmed(row: list[int]) -> tuple[int, ...]:
    while row and row[-1] == 0:
        row = row[:-1]
    return tuple(row)


def configs_for_weight(tree: DecompositionTree, lam: Weight) -> list[Config]:
    return [label_config(tree, node) for node in tree.nodes() if node.highest_weight == tuple(lam)]
