"""Tensor products of rectangular sl_n representations on Young diagrams.

A rectangle ``rows x cols`` is V(cols * omega_rows).  At step n the first column
of every rectangle that still has one is added to the current diagram, giving
Y'_n; then boxes may be moved to lower rows.  The dominance numbers of a move
count, for each row k, how many boxes cross the bottom edge of row k:

    e_k = (boxes in the top k rows of Y'_n) - (boxes in the top k rows of Y_n).

Every e_k must be at most the previous move's e_k (no constraint on the first
move).  Stopping after Y_s gives the diagram Y_s with all remaining columns
appended, with multiplicity

    prod_n prod_k binom(P^(k)_n + D^(k)_n, D^(k)_n),

where P^(k)_n counts columns of height k in Y_n and D_n = e_n - e_{n+1}
(with e_{s+1} = 0).  Shapes are row lengths; ``None`` as the bound n means
"n large enough", otherwise diagrams never exceed n rows and columns of
height n are dropped when converting to sl_n weights.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from itertools import accumulate
from math import comb

Shape = tuple[int, ...]


@dataclass(frozen=True)
class Rectangle:
    rows: int
    cols: int

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 0:
            raise ValueError(f"bad rectangle {self.rows}x{self.cols}")

    @classmethod
    def parse_list(cls, text: str) -> list["Rectangle"]:
        """Parse ``"3x2,2x1,1x1"`` (rows x cols)."""
        out = []
        for item in text.split(","):
            m = re.fullmatch(r"\s*(\d+)\s*[xX]\s*(\d+)\s*", item)
            if m is None:
                raise ValueError(f"malformed rectangle {item!r}; expected ROWSxCOLS")
            out.append(cls(int(m.group(1)), int(m.group(2))))
        return out


@dataclass(frozen=True)
class DiagramState:
    shape: Shape
    dominance_numbers: tuple[int, ...] | None  # None before the first move


@dataclass
class RectNode:
    moves: tuple[Shape, ...]  # Y_1 .. Y_s
    state: DiagramState
    final_shape: Shape
    multiplicity: int
    children: list["RectNode"] = field(default_factory=list)
    prefix: int = 1

    @property
    def depth(self) -> int:
        return len(self.moves)

    def walk(self) -> Iterator["RectNode"]:
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))


@dataclass
class RectDecomposition:
    n_bound: int | None
    rects: tuple[Rectangle, ...]
    root: RectNode

    def nodes(self) -> Iterator[RectNode]:
        return self.root.walk()

    def aggregate(self) -> dict[Shape, int]:
        out: dict[Shape, int] = {}
        for node in self.nodes():
            shape = reduce_shape(node.final_shape, self.n_bound)
            out[shape] = out.get(shape, 0) + node.multiplicity
        return dict(sorted(out.items(), reverse=True))


def _clean(shape: Iterable[int]) -> Shape:
    rows = [r for r in shape if r > 0]
    return tuple(rows)


def columns_of(shape: Shape) -> tuple[int, ...]:
    """Column heights (the conjugate partition)."""
    shape = _clean(shape)
    return tuple(sum(1 for r in shape if r > j) for j in range(shape[0] if shape else 0))


def shape_from_columns(cols: Iterable[int]) -> Shape:
    cols = sorted((c for c in cols if c > 0), reverse=True)
    return columns_of(tuple(cols)) if cols else ()


def add_columns(shape: Shape, heights: Iterable[int]) -> Shape:
    """Add full columns, keeping the diagram a partition (adds 1 to rows 1..h)."""
    return shape_from_columns(list(columns_of(shape)) + list(heights))


def reduce_shape(shape: Shape, n_bound: int | None) -> Shape:
    """Drop full columns of height n (trivial for sl_n)."""
    shape = _clean(shape)
    if n_bound is None or len(shape) < n_bound:
        return shape
    full = shape[n_bound - 1]
    return _clean(r - full for r in shape)


def shape_to_weight(shape: Shape, n: int) -> tuple[int, ...]:
    """omega-coordinates of an sl_n diagram (n-1 entries)."""
    shape = _clean(shape)
    if len(shape) > n:
        raise ValueError(f"shape {shape} has more than {n} rows")
    rows = list(shape) + [0] * (n + 1 - len(shape))
    return tuple(rows[i] - rows[i + 1] for i in range(n - 1))


def weight_to_shape(w: Sequence[int]) -> Shape:
    return _clean(sum(w[i:]) for i in range(len(w)))


def dominance_numbers(upper: Shape, lower: Shape) -> tuple[int, ...]:
    """Boxes crossing the bottom of each row when moving from ``upper`` down to ``lower``.

    Raises ValueError when ``lower`` is not dominated by ``upper``.
    """
    if sum(upper) != sum(lower):
        raise ValueError("shapes of different sizes")
    rows = max(len(upper), len(lower))
    pu = list(accumulate(list(upper) + [0] * (rows - len(upper))))
    pl = list(accumulate(list(lower) + [0] * (rows - len(lower))))
    e = [a - b for a, b in zip(pu, pl)]
    if any(x < 0 for x in e):
        raise ValueError(f"{lower} is not dominated by {upper}")
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


def _moves(shape: Shape, bound: tuple[int, ...] | None, max_rows: int) -> Iterator[tuple[Shape, tuple[int, ...]]]:
    """All Y below ``shape`` whose dominance numbers respect ``bound`` (identity included)."""
    total = sum(shape)
    target = list(accumulate(shape))

    def upper_prefix(i: int) -> int:
        return target[i] if i < len(target) else total

    def cap(i: int) -> int:
        if bound is None:
            return total
        return bound[i] if i < len(bound) else 0

    rows: list[int] = []

    def rec(i: int, prefix: int, prev: int) -> Iterator[Shape]:
        if prefix == total:
            yield tuple(rows)
            return
        if i >= max_rows:
            return
        hi = min(prev, upper_prefix(i) - prefix)
        lo = max(1, upper_prefix(i) - cap(i) - prefix)
        for y in range(hi, lo - 1, -1):
            rest = total - prefix - y
            if rest > y * (max_rows - i - 1):
                break
            rows.append(y)
            yield from rec(i + 1, prefix + y, y)
            rows.pop()

    for y in rec(0, 0, total):
        yield y, dominance_numbers(shape, y)


def advance(
    state: DiagramState, columns: Iterable[int], n_bound: int | None = None
) -> list[DiagramState]:
    """Add the columns, then list every allowed move (the identity move first)."""
    grown = add_columns(state.shape, columns)
    max_rows = n_bound if n_bound is not None else max(sum(grown), 1)
    if len(grown) > max_rows:
        return []
    return [DiagramState(y, e) for y, e in _moves(grown, state.dominance_numbers, max_rows)]


def _binoms(shape: Shape, diff: Sequence[int]) -> int:
    cols = columns_of(shape)
    out = 1
    for k, d in enumerate(diff, start=1):
        if d:
            p = sum(1 for c in cols if c == k)
            out *= comb(p + d, d)
    return out


def _columns_at(rects: Sequence[Rectangle], n: int) -> list[int]:
    return [r.rows for r in rects if r.cols >= n]


def _remaining(rects: Sequence[Rectangle], n: int) -> list[int]:
    return [r.rows for r in rects for _ in range(max(r.cols - n, 0))]


def _diff(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    size = max(len(a), len(b))
    a = a + (0,) * (size - len(a))
    b = b + (0,) * (size - len(b))
    return tuple(x - y for x, y in zip(a, b))


def rect_decompose(n_bound: int | None, rects: Iterable[Rectangle]) -> RectDecomposition:
    """Full tree of the rectangle algorithm; siblings ordered by their column heights."""
    rects = tuple(rects)
    if n_bound is not None and any(r.rows > n_bound for r in rects):
        raise ValueError(f"a rectangle has more than {n_bound} rows")
    depth = max((r.cols for r in rects), default=0)
    root = RectNode((), DiagramState((), None), shape_from_columns(_remaining(rects, 0)), 1)
    stack = [root]
    while stack:
        node = stack.pop()
        s = node.depth
        if s >= depth:
            continue
        for nxt in advance(node.state, _columns_at(rects, s + 1), n_bound):
            e = nxt.dominance_numbers
            if not any(e):
                continue
            prev_e = node.state.dominance_numbers
            prefix = 1 if prev_e is None else node.prefix * _binoms(node.state.shape, _diff(prev_e, e))
            node.children.append(
                RectNode(
                    moves=node.moves + (nxt.shape,),
                    state=nxt,
                    final_shape=add_columns(nxt.shape, _remaining(rects, s + 1)),
                    multiplicity=prefix * _binoms(nxt.shape, e),
                    prefix=prefix,
                )
            )
        node.children.sort(key=lambda c: columns_of(c.state.shape))
        stack.extend(node.children)
    return RectDecomposition(n_bound, rects, root)


def rect_node_multiplicity(rects: Iterable[Rectangle], diagrams: Sequence[Shape], n_bound: int | None = None) -> int:
    """Multiplicity of the node reached through Y_1, ..., Y_s.

    Raises ValueError when the sequence is not a legal run of the algorithm.
    """
    rects = tuple(rects)
    shape: Shape = ()
    prev_e: tuple[int, ...] | None = None
    total = 1
    history = []
    for n, target in enumerate(diagrams, start=1):
        target = _clean(target)
        options = {st.shape: st.dominance_numbers for st in advance(DiagramState(shape, prev_e), _columns_at(rects, n), n_bound)}
        if target not in options or not any(options[target]):
            raise ValueError(f"Y_{n} = {target} is not a legal move")
        history.append((shape, prev_e, options[target]))
        shape, prev_e = target, options[target]
    for i, (_, _, e) in enumerate(history):
        nxt = history[i + 1][2] if i + 1 < len(history) else ()
        total *= _binoms(diagrams[i], _diff(e, nxt))
    return total


def kostka(lam_shape: Shape, mu_columns: Sequence[int]) -> int:
    """K_{lam' mu'}: multiplicity of ``lam_shape`` in the tensor of single columns."""
    lam_shape = _clean(lam_shape)
    if sum(lam_shape) != sum(mu_columns):
        raise ValueError("size mismatch")
    result = rect_decompose(None, [Rectangle(h, 1) for h in mu_columns])
    return result.aggregate().get(lam_shape, 0)
