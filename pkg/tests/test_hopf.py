import itertools
import json

import pytest
from hypothesis import given, strategies as st

from hopfdoubles.errors import ConfigurationError
from hopfdoubles.hopf import (FiniteDimHopf, GroupCocycle3, GroupData, cyclic_cocycle, cyclic_group,
                              drinfeld_double_group, dual_hopf, function_algebra, group_algebra, named_group,
                              twisted_function_algebra, verify_hopf_axioms, verify_quasi_axioms,
                              verify_rmatrix, with_R)


def test_named_groups():
    for name, order, abelian in [("C1", 1, True), ("C4", 4, True), ("C2xC2", 4, True), ("S3", 6, False)]:
        G = named_group(name)
        assert G.order == order and G.is_abelian() == abelian
        assert len(set(G.labels)) == order
    S3 = named_group("S3")
    # three transpositions, two 3-cycles
    orders = sorted(min(k for k in range(1, 7) if S3.mul(*[g] * k) == S3.identity) for g in S3.elements())
    assert orders == [1, 2, 2, 2, 3, 3]


def test_bad_group_tables():
    with pytest.raises(ConfigurationError):
        GroupData([[0, 1], [1, 1]])
    with pytest.raises(ConfigurationError):
        GroupData([[0, 1, 2], [1, 0, 0], [2, 0, 1]])


@pytest.mark.parametrize("gname", ["C3", "C2xC2", "S3"])
def test_dual_of_group_algebra_is_function_algebra(gname):
    # the dual coproduct is read off the opposite product
    G = named_group(gname)
    D = dual_hopf(group_algebra(G))
    assert D.structure_equal(function_algebra(G.opposite()))
    assert D.structure_equal(function_algebra(G)) == G.is_abelian()
    assert verify_hopf_axioms(D).ok


def test_drinfeld_double_shape():
    D = drinfeld_double_group(named_group("S3"))
    assert D.dim == 36
    assert not D.is_commutative() and not D.is_cocommutative()
    assert verify_quasi_axioms(D).ok


def test_perturbed_structure_is_caught():
    H = group_algebra(cyclic_group(3))
    bad = FiniteDimHopf(H.field, H.basis, dict(H.m), H.delta, H.unit, H.counit, H.antipode)
    bad.m[(1, 1)] = {1: 1}
    rep = verify_hopf_axioms(bad)
    assert not rep.ok
    assert rep.failures()[0].witness


def test_flipped_r_matrix_fails():
    D = drinfeld_double_group(named_group("S3"))
    assert verify_rmatrix(D).ok
    flipped = with_R(D, D.permute(D.R, (2, 1)))
    assert not verify_rmatrix(flipped).ok


def test_cocycle_validation():
    C2 = cyclic_group(2)
    with pytest.raises(ConfigurationError):
        GroupCocycle3(C2, {(1, 1, 1): 2})
    with pytest.raises(ConfigurationError):
        GroupCocycle3(C2, {(0, 1, 1): -1})
    with pytest.raises(ConfigurationError):
        cyclic_cocycle(3, 1, C2)


@given(st.integers(2, 5), st.integers(0, 4), st.integers(0, 4))
def test_cyclic_cocycles_multiply(n, s, t):
    w, u, v = cyclic_cocycle(n, s), cyclic_cocycle(n, t), cyclic_cocycle(n, s + t)
    for k in itertools.product(range(n), repeat=3):
        assert w(*k) * u(*k) == v(*k)


def test_coboundary_twist_stays_a_cocycle():
    G = named_group("S3")
    w = GroupCocycle3(G, lambda a, b, c: 1)
    beta = {(g, h): (2 if g != G.identity and h != G.identity else 1) for g in G.elements() for h in G.elements()}
    w2 = w.times_coboundary(lambda g, h: beta[(g, h)])
    assert w2.is_cocycle()
    assert verify_quasi_axioms(twisted_function_algebra(G, w2)).ok


def test_wrong_quasi_antipode_is_caught():
    C2 = cyclic_group(2)
    H = twisted_function_algebra(C2, cyclic_cocycle(2, 1, C2))
    assert verify_quasi_axioms(H).ok
    bad = FiniteDimHopf(H.field, H.basis, H.m, H.delta, H.unit, H.counit, H.antipode,
                        H.phi, H.phi_inv, {0: 1, 1: 1}, H.b)
    assert not verify_quasi_axioms(bad).ok


@pytest.mark.parametrize("build", [
    lambda: drinfeld_double_group(named_group("S3")),
    lambda: twisted_function_algebra(cyclic_group(3), cyclic_cocycle(3, 1)),
], ids=["drin-s3", "twisted-c3"])
def test_json_round_trip(build):
    H = build()
    back = FiniteDimHopf.from_json(json.loads(json.dumps(H.to_json())))
    assert back.structure_equal(H)
    assert back.R == H.R
