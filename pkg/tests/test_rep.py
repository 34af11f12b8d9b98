import pytest
from hypothesis import given, settings, strategies as st

from hopfdoubles.doubles import example
from hopfdoubles.errors import ConfigurationError
from hopfdoubles.hopf import cyclic_group, group_algebra, named_group
from hopfdoubles.rep import (ModComod, category_o_predicate, double_regular_yd, graded_module,
                             highest_weight_vectors, hopf_ind, hopf_module_check, idempotent_report,
                             jordan_module, no_finite_dim_certificate, q_exponent, regular_hopf_module,
                             simple_uq, verma, weight_decomposition, yd_check)
from hopfdoubles.scalar import inverse, q_power

q = q_power(1)


def _apply(M, name, vec):
    return M.act(name, vec)


@given(st.integers(0, 6))
@settings(max_examples=7)
def test_simple_module_satisfies_commutator_on_every_vector(n):
    # [E, F] = (K - K^-1)/(q - q^-1), applied vector by vector
    L = simple_uq(n)
    c = inverse(q - inverse(q))
    for j in range(n + 1):
        v = {j: 1}
        lhs = dict(_apply(L, "E", _apply(L, "F", v)))
        for k, x in _apply(L, "F", _apply(L, "E", v)).items():
            lhs[k] = lhs.get(k, 0) - x
        lhs = {k: x for k, x in lhs.items() if x}
        w = q_power(n - 2 * j)
        want = {j: (w - inverse(w)) * c} if w != 1 else {}
        assert lhs == want


def test_simple_module_weights():
    L = simple_uq(4)
    assert sorted(q_exponent(w) for w in weight_decomposition(L)) == [-4, -2, 0, 2, 4]
    assert [q_exponent(w) for w, _ in highest_weight_vectors(L)] == [4]
    with pytest.raises(ConfigurationError):
        simple_uq(-1)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_uq_verma_has_a_singular_vector(n):
    # M(q^n) over U_q(sl2) contains F^(n+1) v of weight q^(-n-2)
    M = verma(example("uq-sl2"), q_power(n), n + 4)
    assert M.check_relations().ok
    hw = sorted((q_exponent(w), v) for w, v in highest_weight_vectors(M))
    assert hw == [(-n - 2, {n + 1: 1}), (n, {0: 1})]


@pytest.mark.parametrize("n", [-2, 0, 1, 3])
def test_dq_verma_is_irreducible_in_the_window(n):
    M = verma(example("dq-sl2"), q_power(n), 8)
    assert M.check_relations().ok
    assert [(q_exponent(w), v) for w, v in highest_weight_vectors(M)] == [(n, {0: 1})]


def test_verma_rejects_zero_weight():
    with pytest.raises(ConfigurationError):
        verma(example("dq-sl2"), 0, 3)


def test_category_o():
    assert category_o_predicate(verma(example("dq-sl2"), q, 5)).ok
    assert category_o_predicate(simple_uq(2)).ok
    rep = category_o_predicate(jordan_module())
    assert not rep.get("(II) group-likes act semisimply").ok


def test_certificate_and_control():
    assert no_finite_dim_certificate(example("dq-sl2"), 20).ok
    rep = no_finite_dim_certificate(example("uq-sl2"), 6)
    assert not rep.ok


# ---------------------------------------------------------------- finite Hopf modules

@pytest.mark.parametrize("gname", ["C2", "C3", "S3"])
def test_double_regular_is_yetter_drinfeld(gname):
    M = double_regular_yd(named_group(gname))
    assert yd_check(M).ok


def test_swap_module_is_not_yetter_drinfeld():
    G = cyclic_group(2)
    B = group_algebra(G)
    s = G.element("s")
    action = [[{0: 1}, {1: 1}], [{1: 1}, {0: 1}]]
    M = graded_module(G, B, [G.identity, s], action)
    rep = yd_check(M)
    assert rep.get("coassociative and counital coaction").ok
    assert not rep.get("Yetter-Drinfeld compatibility").ok


def test_trivial_action_with_nontrivial_degree():
    G = cyclic_group(2)
    B = group_algebra(G)
    M = graded_module(G, B, [G.element("s")], [[{0: 1}], [{0: 1}]])
    # a central degree makes it Yetter-Drinfeld, but the Hopf module rule moves degrees
    assert yd_check(M).ok
    assert not hopf_module_check(M).ok


@pytest.mark.parametrize("gname,d", [("C2", 2), ("C3", 1), ("S3", 2)])
def test_induced_hopf_modules(gname, d):
    B = group_algebra(named_group(gname))
    M = hopf_ind(B, d)
    assert hopf_module_check(M).ok
    assert idempotent_report(M, expected_rank=d).ok


def test_regular_hopf_module():
    B = group_algebra(named_group("S3"))
    M = regular_hopf_module(B)
    assert hopf_module_check(M).ok
    assert idempotent_report(M, expected_rank=1).ok


def test_broken_coaction_is_caught():
    B = group_algebra(cyclic_group(2))
    M = ModComod(B, 1, [[{0: 1}], [{0: 1}]], [{(0, 0): 2}])
    assert not hopf_module_check(M).get("coassociative and counital coaction").ok
