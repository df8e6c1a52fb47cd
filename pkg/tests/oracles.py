"""Independent expected values shared by the unit and acceptance tests."""

from itertools import product

from krdecomp.growth import delta_from_weight
from krdecomp.lie import AlgebraSpec

# column heights -> multiplicity for V(2 omega_3) x V(omega_2) x V(omega_1),
# the root (the plain column union) is one of the eight shapes
THREE_RECT_COLUMNS = {
    (3, 3, 2, 1): 1,
    (3, 3, 3): 1,
    (4, 3, 2): 2,
    (4, 3, 1, 1): 1,
    (5, 3, 1): 2,
    (6, 3): 1,
    (4, 4, 1): 1,
    (5, 4): 1,
}

# maximal E6 path-type for node 4, each Delta as (node, coefficient) pairs
E6_DISPLAY = [
    ((4, 1),),
    ((4, 1), (2, -1)),
    ((4, 1), (1, -1), (6, -1)),
    ((2, 1), (4, 1), (3, -1), (5, -1)),
    ((2, 2), (4, -1)),
]


def om(s: AlgebraSpec, *pairs: tuple[int, int]) -> tuple[int, ...]:
    w = [0] * s.rank
    for node, c in pairs:
        if node:
            w[node - 1] += c
    return tuple(w)


def e6_display() -> list[tuple[int, ...]]:
    e6 = AlgebraSpec.parse("E6")
    return [delta_from_weight(e6, om(e6, *p)) for p in E6_DISPLAY]


def dn_display(s: AlgebraSpec, ell: int) -> list[tuple[int, ...]]:
    """Maximal D_n path-type: omega_ell > omega_ell - omega_2 > ... (even), omega_ell - omega_1 > ... (odd)."""
    if ell % 2 == 0:
        ws = [om(s, (ell, 1))] + [om(s, (ell, 1), (j, -1)) for j in range(2, ell - 1, 2)]
    else:
        ws = [om(s, (ell, 1), (j, -1)) for j in range(1, ell - 1, 2)]
    return [delta_from_weight(s, w) for w in ws]


def dn_closed_form(s: AlgebraSpec, ell: int, m: int) -> dict[tuple[int, ...], int]:
    """W_m(ell) for D_n, ell <= n-2: sum over k_j (j < ell, parity of ell) of V(sum k_j omega_j + (m-k) omega_ell).

    For ell even one extra free index stands for the trivial weight; k is the total.
    """
    lower = list(range(2 - ell % 2, ell - 1, 2))
    if ell % 2 == 0:
        lower.append(0)
    out: dict[tuple[int, ...], int] = {}
    for ks in product(range(m + 1), repeat=len(lower)):
        k = sum(ks)
        if k > m:
            continue
        w = om(s, *zip(lower, ks), (ell, m - k))
        out[w] = out.get(w, 0) + 1
    return out
