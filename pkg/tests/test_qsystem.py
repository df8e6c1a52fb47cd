import pytest

from krdecomp.characters import Character, is_true_character
from krdecomp.lie import AlgebraSpec, fundamental_weight
from krdecomp.qsystem import (
    QTable,
    UnsupportedType,
    check_relations,
    curly_q,
    initial_multiplicities,
    kr_initial_data,
    negative_witness,
    omega,
    perturbed_initial_data,
    predicted_witnesses,
    q_character,
    single_perturbations,
)
from krdecomp.tree import aggregate, build_tree


def spec(name):
    return AlgebraSpec.parse(name)


def irr(s, *nodes):
    return Character.irreducible(s, omega(s, *nodes))


def test_initial_data():
    a3, b3, d4 = spec("A3"), spec("B3"), spec("D4")
    assert kr_initial_data(a3)[2] == irr(a3, 2)
    assert kr_initial_data(b3)[2] == irr(b3, 2) + irr(b3, 0)
    assert kr_initial_data(b3)[3] == irr(b3, 3)
    data = kr_initial_data(d4)
    assert data[2] == irr(d4, 2) + irr(d4, 0)
    assert data[3] == irr(d4, 3) and data[4] == irr(d4, 4)
    assert kr_initial_data(spec("B5"))[4] == irr(spec("B5"), 4) + irr(spec("B5"), 2) + irr(spec("B5"), 0)
    with pytest.raises(UnsupportedType):
        kr_initial_data(spec("E6"))


def test_table_rules():
    d4 = spec("D4")
    with pytest.raises(ValueError):
        QTable(d4, {1: irr(d4, 1)})
    table = QTable(d4, kr_initial_data(d4))
    assert table.q(0, 3) == Character.trivial(d4)
    with pytest.raises(ValueError):
        table.q(-1, 1)


def test_curly_q():
    d4 = spec("D4")
    t = QTable(d4, kr_initial_data(d4))
    assert curly_q(2, 2, 3, t) == t.q(2, 3)
    b4 = spec("B4")
    t = QTable(b4, kr_initial_data(b4))
    assert curly_q(2, 3, 4, t) == t.q(4, 4)
    assert curly_q(3, 4, 3, t) == t.q(1, 3) * t.q(2, 3)
    with pytest.raises(ValueError):
        curly_q(1, 1, 3, t)


def test_q_character_examples():
    a1 = spec("A1")
    assert q_character(2, 1, {1: irr(a1, 1)}) == Character.irreducible(a1, (2,))
    d4 = spec("D4")
    w = lambda *c: Character.irreducible(d4, c)
    assert q_character(2, 2, kr_initial_data(d4)) == w(0, 2, 0, 0) + w(0, 1, 0, 0) + w(0, 0, 0, 0)
    a2 = spec("A2")
    assert q_character(3, 1, kr_initial_data(a2)) == Character.irreducible(a2, (3, 0))


@pytest.mark.parametrize("name", ["A1", "A2", "A3"])
def test_type_a_irreducible(name):
    s = spec(name)
    t = QTable(s, kr_initial_data(s))
    for ell in range(1, s.rank + 1):
        for m in range(5):
            assert t.q(m, ell) == Character.irreducible(s, tuple(m * x for x in fundamental_weight(s, ell)))


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "B3", "C2", "C3", "D4"])
def test_relations_and_positivity(name):
    s = spec(name)
    table = QTable(s, kr_initial_data(s))
    report = check_relations(table, 3)
    assert len(report) == 3 * s.rank
    assert all(r == 0 for r in report.values())
    for (m, ell) in report:
        assert is_true_character(table.q(m, ell), tuple(m * x for x in fundamental_weight(s, ell)))
    assert negative_witness(s, kr_initial_data(s), 3) is None


def test_corrupted_table_has_residual():
    s = spec("B2")
    table = QTable(s, kr_initial_data(s))
    table.q(2, 1)
    table.chars[(2, 1)] = table.chars[(2, 1)] + Character.trivial(s)
    report = check_relations(table, 1)
    assert report[(1, 1)] != 0


@pytest.mark.parametrize("name,ell", [("D4", 1), ("D4", 2), ("D4", 3), ("E6", 1), ("E6", 2), ("E6", 4)])
def test_matches_tree(name, ell):
    s = spec(name)
    initial = {k: Character(s, aggregate(build_tree(s, [(k, 1)]))) for k in range(1, s.rank + 1)}
    table = QTable(s, initial)
    for m in (1, 2):
        assert table.q(m, ell) == Character(s, aggregate(build_tree(s, [(ell, m)])))


def test_free_multiplicities():
    assert initial_multiplicities(spec("B3")) == {(1, 0): 0, (2, 0): 1, (2, 1): 0}
    assert initial_multiplicities(spec("C3")) == {(2, 0): 0, (3, 1): 0}
    assert initial_multiplicities(spec("D4")) == {(2, 0): 1}
    assert initial_multiplicities(spec("A3")) == {}
    with pytest.raises(ValueError):
        perturbed_initial_data(spec("B3"), {(3, 1): 1})
    with pytest.raises(ValueError):
        perturbed_initial_data(spec("B3"), {(2, 0): -1})


def test_witness_examples():
    b3 = spec("B3")
    w = negative_witness(b3, perturbed_initial_data(b3, {(2, 0): 0}), 3)
    assert (w.kind, w.m, w.ell, w.weight, w.coefficient) == ("negative", 2, 2, omega(b3, 2), -1)

    table = QTable(b3, perturbed_initial_data(b3, {(2, 1): 1}))
    assert table.q(3, 3)[omega(b3, 1, 3)] == -1

    c3 = spec("C3")
    table = QTable(c3, perturbed_initial_data(c3, {(3, 1): 1}))
    assert table.q(3, 2)[omega(c3, 2, 1, 1)] == -1
    # the first negative coefficient already shows up in Q_2(2), at V(omega_2)
    assert table.q(2, 2) == irr(c3, 2, 2) - irr(c3, 2)


@pytest.mark.parametrize("name", ["B3", "C3", "D4"])
def test_every_perturbation_is_caught(name):
    s = spec(name)
    perturbations = single_perturbations(s)
    assert perturbations
    for (key, value) in perturbations:
        assert negative_witness(s, perturbed_initial_data(s, {key: value}), 3) is not None, (key, value)


@pytest.mark.parametrize("name", ["B3", "C3", "D4", "B4", "C4", "D5"])
def test_predicted_coefficients(name):
    s = spec(name)
    for (a, b), kr_value in initial_multiplicities(s).items():
        for value in {kr_value, kr_value + 1, max(kr_value - 1, 0)}:
            table = QTable(s, perturbed_initial_data(s, {(a, b): value}))
            predictions = predicted_witnesses(s, a, b, value)
            assert predictions
            for p in predictions:
                assert table.q(p.m, p.ell)[p.weight] == p.coefficient, (a, b, value, p)
