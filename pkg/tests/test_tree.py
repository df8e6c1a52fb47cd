import pytest

from conftest import GOLDEN
from oracles import dn_closed_form
from krdecomp.growth import delta_from_weight
from krdecomp.lie import AlgebraSpec, fundamental_weight, root_coordinates
from krdecomp.render import tree_text
from krdecomp.tree import (
    InvalidLabel,
    NotSimplyLaced,
    aggregate,
    build_tree,
    extend_label,
    node_multiplicity,
    validate_label,
)

E6 = AlgebraSpec.parse("E6")


def omega(spec, *pairs):
    w = [0] * spec.rank
    for node, c in pairs:
        w[node - 1] += c
    return tuple(w)


def golden_cases():
    for path in sorted(GOLDEN.glob("*.txt")):
        name, w, ell = path.stem.split("_")
        yield pytest.param(name, int(w[1:]), int(ell), path, id=path.stem)


@pytest.mark.parametrize("name,m,ell,path", list(golden_cases()))
def test_golden_listing(name, m, ell, path):
    tree = build_tree(AlgebraSpec.parse(name), [(ell, m)])
    assert tree_text(tree) == path.read_text()


@pytest.mark.parametrize("name,ell,ms", [("E6", 1, range(1, 4)), ("E6", 6, range(1, 4)), ("E7", 7, range(1, 3))])
def test_minuscule_nodes_irreducible(name, ell, ms):
    spec = AlgebraSpec.parse(name)
    for m in ms:
        tree = build_tree(spec, [(ell, m)])
        assert len(tree) == 1
        assert aggregate(tree) == {tuple(m * x for x in fundamental_weight(spec, ell)): 1}


def test_small_examples():
    tree = build_tree(E6, [(2, 1)])
    assert tree_text(tree) == "⊕(0) 1·V[0,1,0,0,0,0]\n⊕(1) 1·V[0,0,0,0,0,0]\n"
    assert len(build_tree(E6, [(3, 0)])) == 1
    assert aggregate(build_tree(E6, [(3, 0)])) == {(0,) * 6: 1}
    assert aggregate(build_tree(E6, [])) == {(0,) * 6: 1}


def test_e6_w2_4_tree():
    tree = build_tree(E6, [(4, 2)])
    assert len(tree) == 12
    assert [len(r) for r in tree.rows()] == [1, 3, 7, 1]
    agg = aggregate(tree)
    assert agg[omega(E6, (2, 2))] == 3
    assert agg[omega(E6, (4, 1))] == 2
    deltas = {c.delta for c in tree.root.children}
    assert deltas == {(0, 1, 1, 2, 1, 0), (1, 1, 2, 3, 2, 1), (2, 3, 4, 6, 4, 2)}
    children = extend_label(E6, [(4, 2)], [])
    assert {c[-1] for c in children} == deltas
    two = [c for c in tree.root.children if c.highest_weight == omega(E6, (2, 1), (4, 1))]
    assert len(two) == 1 and two[0].multiplicity == 2
    assert node_multiplicity(E6, [(4, 2)], two[0].label) == 2
    assert node_multiplicity(E6, [(4, 2)], []) == 1


def test_d6_root_children():
    d6 = AlgebraSpec.parse("D6")
    expected = {delta_from_weight(d6, omega(d6, (4, 1), (2, -1))), delta_from_weight(d6, omega(d6, (4, 1)))}
    assert {c[-1] for c in extend_label(d6, [(4, 1)], [])} == expected
    assert aggregate(build_tree(d6, [(4, 1)])) == {omega(d6, (4, 1)): 1, omega(d6, (2, 1)): 1, (0,) * 6: 1}


def test_pinned_label_has_no_children():
    # in W_1(1) of E6 nothing lies under omega_1, so the root is a leaf
    assert extend_label(E6, [(1, 1)], []) == []


def test_invalid_labels():
    with pytest.raises(InvalidLabel):
        validate_label(E6, [(4, 2)], [(0, 0, 0, 0, 0, 0)])
    with pytest.raises(InvalidLabel):
        validate_label(E6, [(4, 2)], [(0, 0, 0, 1, 0, 0)])  # mu_1 = omega_4 - alpha_4 not dominant
    with pytest.raises(InvalidLabel):
        # increments must weakly decrease
        validate_label(E6, [(4, 2)], [(0, 1, 1, 2, 1, 0), (2, 4, 5, 8, 5, 2)])
    with pytest.raises(InvalidLabel):
        node_multiplicity(E6, [(4, 2)], [(0, 0, 0, 1, 0, 0)])


def test_non_simply_laced_rejected():
    for name in ["B3", "C2", "G2", "F4"]:
        with pytest.raises(NotSimplyLaced, match="oracle"):
            build_tree(AlgebraSpec.parse(name), [(1, 1)])


@pytest.mark.parametrize("name,factors", [("E6", [(4, 2)]), ("D5", [(3, 3)]), ("E7", [(1, 2), (7, 1)]), ("A4", [(2, 2), (3, 1)])])
def test_prefix_closure_and_root(name, factors):
    spec = AlgebraSpec.parse(name)
    tree = build_tree(spec, factors)
    root_row = tree.rows()[0]
    assert len(root_row) == 1 and root_row[0].multiplicity == 1
    for node in tree.nodes():
        assert node.multiplicity >= 1
        for s in range(node.depth + 1):
            validate_label(spec, factors, node.label[:s])
        for child in node.children:
            assert child.label[:-1] == node.label


@pytest.mark.parametrize("name,ell", [("E6", 2), ("E6", 4), ("D5", 3), ("D6", 4), ("E7", 1)])
def test_lifting(name, ell):
    spec = AlgebraSpec.parse(name)
    shift = fundamental_weight(spec, ell)
    for m in (1, 2):
        small = {n.label: n for n in build_tree(spec, [(ell, m)], max_depth=m).nodes()}
        big = {n.label: n for n in build_tree(spec, [(ell, m + 1)], max_depth=m).nodes()}
        assert small.keys() == big.keys()
        for label, node in small.items():
            other = big[label]
            assert other.multiplicity == node.multiplicity
            assert other.highest_weight == tuple(a + b for a, b in zip(node.highest_weight, shift))
            assert other.delta == node.delta


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_dn_closed_form(n):
    spec = AlgebraSpec.parse(f"D{n}")
    for ell in range(1, n - 1):
        for m in range(1, 4):
            tree = build_tree(spec, [(ell, m)])
            expected = dn_closed_form(spec, ell, m)
            assert all(c == 1 for c in expected.values())
            assert aggregate(tree) == expected
            assert all(node.multiplicity == 1 for node in tree.nodes())
            # level in the tree equals k = m - (omega_ell coefficient)
            for node in tree.nodes():
                assert node.depth == m - node.highest_weight[ell - 1]


def test_dn_spinor_nodes_irreducible():
    for n in (4, 5, 6):
        spec = AlgebraSpec.parse(f"D{n}")
        for ell in (n - 1, n):
            assert len(build_tree(spec, [(ell, 2)])) == 1


def test_depth_bound():
    spec = AlgebraSpec.parse("E7")
    tree = build_tree(spec, [(4, 1)])
    bound = max(root_coordinates(spec, fundamental_weight(spec, 4)))
    assert max(n.depth for n in tree.nodes()) <= bound
