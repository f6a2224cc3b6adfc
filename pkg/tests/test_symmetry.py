"""Permutation actions: cycle parsing, composition, group generation."""

import pytest

from idealdec.symmetry import (
    SymmetryAction,
    SymmetryError,
    UnionFind,
    generate_group,
)


def test_identity_and_is_identity(rxyz):
    e = SymmetryAction.identity(3)
    assert e.is_identity()
    assert e.cycles(rxyz.names) == "()"
    f = rxyz.parse("x^2*y - z")
    assert e(f) == f


def test_from_cycles_round_trip(rxyz):
    sigma = SymmetryAction.from_cycles(rxyz, "(x y)")
    assert sigma.image == (1, 0, 2)
    assert sigma.cycles(rxyz.names) == "(x y)"
    tau = SymmetryAction.from_cycles(rxyz, "(x y z)")
    assert tau.image == (1, 2, 0)
    assert tau.cycles(rxyz.names) == "(x y z)"


def test_from_cycles_rejects_malformed_text(rxyz):
    for bad in ["(x", "x y)", "(x y)(y z)", "(x x)", "(w y)", "(z)"]:
        with pytest.raises(SymmetryError):
            SymmetryAction.from_cycles(rxyz, bad)
    # "()" is the identity, matching what cycles() prints for it
    assert SymmetryAction.from_cycles(rxyz, "()").is_identity()


def test_compose_and_inverse(rxyz):
    sigma = SymmetryAction.from_cycles(rxyz, "(x y)")
    tau = SymmetryAction.from_cycles(rxyz, "(y z)")
    # (sigma . tau) applies tau first
    st = sigma.compose(tau)
    f = rxyz.parse("y")
    assert st(f) == sigma(tau(f))
    assert sigma.compose(sigma).is_identity()
    assert tau.compose(tau.inverse()).is_identity()


def test_action_on_polynomials(rxyz):
    sigma = SymmetryAction.from_cycles(rxyz, "(x y z)")
    f = rxyz.parse("x^2*y + 3*z")
    assert sigma(f) == rxyz.parse("y^2*z + 3*x")
    with pytest.raises(SymmetryError):
        e = SymmetryAction.identity(2)
        e(f)


def test_validation_of_images():
    with pytest.raises(SymmetryError):
        SymmetryAction((0, 0))
    with pytest.raises(SymmetryError):
        SymmetryAction((0, 2))


def test_label_does_not_affect_equality():
    a = SymmetryAction((1, 0), label="swap")
    b = SymmetryAction((1, 0), label="other")
    assert a == b


def test_generate_group_symmetric_group(rxyz):
    s1 = SymmetryAction.from_cycles(rxyz, "(x y)")
    s2 = SymmetryAction.from_cycles(rxyz, "(y z)")
    group = generate_group([s1, s2])
    assert len(group) == 6
    assert any(g.is_identity() for g in group)


def test_generate_group_of_nothing_is_identity_only():
    group = generate_group([SymmetryAction.identity(4)])
    assert len(group) == 1


def test_generate_group_cap(rxyz):
    s1 = SymmetryAction.from_cycles(rxyz, "(x y z)")
    with pytest.raises(SymmetryError):
        generate_group([s1], cap=2)


def test_union_find():
    uf = UnionFind(5)
    uf.union(0, 1)
    uf.union(3, 4)
    assert uf.find(1) == uf.find(0)
    assert uf.find(2) == 2
    assert uf.classes() == [[0, 1], [2], [3, 4]]
    uf.union(1, 4)
    assert uf.classes() == [[0, 1, 3, 4], [2]]
