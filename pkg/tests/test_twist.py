import itertools

import pytest

from hopfdoubles.doubles import example, twist_pair
from hopfdoubles.errors import ConfigurationError
from hopfdoubles.hopf import (cyclic_cocycle, cyclic_group, group_algebra, named_group, trivial_cocycle,
                              verify_quasi_axioms, verify_rmatrix, with_R)
from hopfdoubles.rep import highest_weight_vectors, q_exponent, simple_uq, trivial_module, verma
from hopfdoubles.scalar import inverse, q_power
from hopfdoubles.twist import (_PresOps, drinfeld_twist, heis_cocycle, is_dual_2cocycle, is_right_2cocycle,
                               tensor_action, transgress, twist_from_labels, twisted_product,
                               verify_heis_is_twist)

from helpers import small_group_cocycles


def test_heis_cocycle_is_a_right_2cocycle_and_perturbation_is_caught():
    drin, _ = twist_pair("drin-group(C2)")
    sigma = heis_cocycle(drin)
    assert is_right_2cocycle(drin, sigma, 2).ok
    ops = _PresOps(drin, 2)
    pick = {ops.label(m): m for m in ops.basis}
    bad = sigma.perturbed(pick["s"], pick["d_s"], 2)
    rep = is_right_2cocycle(drin, bad, 2)
    assert not rep.ok and rep.get("2-cocycle identity").witness
    with pytest.raises(ConfigurationError):
        twisted_product(drin, bad, 2)


def test_twisted_product_certificates():
    drin, _ = twist_pair("weyl(1)")
    T = twisted_product(drin, heis_cocycle(drin), 2)
    assert T.report.ok
    names = [c.name for c in T.report.checks]
    assert "m_sigma is associative" in names


@pytest.mark.parametrize("name,deg", [("dq-sl2", 5), ("super-sym(1)", 4), ("super-ext(1)", 4),
                                      ("drin-group(S3)", 3), ("weyl(2)", 3)])
def test_heisenberg_is_twist(name, deg):
    drin, heis = twist_pair(name)
    assert verify_heis_is_twist(drin, heis, deg).ok


# ---------------------------------------------------------------- Drinfeld twists

def idempotents_c2xc2(H):
    labels = ["1", "s", "t", "st"]
    degs = {"1": (0, 0), "s": (1, 0), "t": (0, 1), "st": (1, 1)}
    out = {}
    for chi in itertools.product(range(2), repeat=2):
        out[chi] = {H.index[l]: (-1) ** (chi[0] * degs[l][0] + chi[1] * degs[l][1]) * inverse(4)
                    for l in labels}
    return out


def test_twist_by_one_is_identity():
    H = group_algebra(named_group("S3"))
    F = twist_from_labels(H, [(1, "1", "1")])
    assert drinfeld_twist(H, F).structure_equal(H)


def test_abelian_bicharacter_twist():
    H = with_R(group_algebra(named_group("C2xC2")), None)
    H = with_R(H, H.tensor_one(2))
    e = idempotents_c2xc2(H)
    F = {}
    for x, y in itertools.product(e, repeat=2):
        sign = (-1) ** (x[0] * y[1])
        for (i, a), (j, b) in itertools.product(e[x].items(), e[y].items()):
            F[(i, j)] = F.get((i, j), 0) + sign * a * b
    F = {k: v for k, v in F.items() if v}
    assert is_dual_2cocycle(H, F)
    HF = drinfeld_twist(H, F)
    # kG is commutative, so conjugating Delta changes nothing
    assert HF.is_cocommutative()
    assert HF.is_trivial_phi()
    assert HF.R != H.R
    assert verify_rmatrix(HF).ok


def test_s3_twist_is_genuinely_quasi():
    H = group_algebra(named_group("S3"))
    half = inverse(2)
    F = twist_from_labels(H, [(1, "1", "1"), (half, "(12)", "(123)"), (-half, "(12)", "1"),
                              (-half, "1", "(123)"), (half, "1", "1")])
    assert not is_dual_2cocycle(H, F)
    HF = drinfeld_twist(H, F)
    assert not HF.is_cocommutative()
    assert not HF.is_trivial_phi()
    assert verify_quasi_axioms(HF).ok


def test_bad_twists_are_rejected():
    H = group_algebra(cyclic_group(2))
    with pytest.raises(ConfigurationError):
        drinfeld_twist(H, twist_from_labels(H, [(1, "1", "1"), (1, "s", "1")]))
    with pytest.raises(ConfigurationError):
        drinfeld_twist(H, twist_from_labels(H, [(2, "1", "1")]))


# ---------------------------------------------------------------- transgression

def test_trivial_cocycle_transgresses_to_one():
    G = named_group("S3")
    tau = transgress(G, trivial_cocycle(G))
    assert set(tau.table.values()) == {1}
    C2 = cyclic_group(2)
    assert transgress(C2, cyclic_cocycle(2, 1, C2))("s", "s", "1") == 1


def test_cyclic_transgressions_are_symmetric():
    # H^2 of a cyclic group with coefficients in an algebraically closed field vanishes,
    # so every 2-cocycle is symmetric
    for n in range(2, 6):
        G = cyclic_group(n)
        for s in range(n):
            tau = transgress(G, cyclic_cocycle(n, s, G))
            for g, h, k in itertools.product(range(n), repeat=3):
                assert tau(g, h, k) == tau(h, g, k)


def test_regular_mode():
    for G, w in small_group_cocycles():
        trivial = all(v == 1 for v in w.table.values())
        rep = transgress(G, w, "regular").composition_report()
        if trivial:
            assert rep.ok
    C2 = cyclic_group(2)
    assert not transgress(C2, cyclic_cocycle(2, 1, C2), "regular").composition_report().ok
    with pytest.raises(ConfigurationError):
        transgress(C2, cyclic_cocycle(2, 1, C2), "left")


# ---------------------------------------------------------------- tensor action

def test_trivial_tensor_verma_is_verma():
    dq = example("dq-sl2")
    N = verma(dq, q_power(2), 6)
    T = tensor_action(dq.partner, dq, trivial_module(dq.partner), N)
    assert T.weights == N.weights
    for letter in ("E", "F"):
        assert T.action[letter] == N.action[letter]
    assert [w for w, _ in highest_weight_vectors(T)] == [q_power(2)]


def test_simple_tensor_verma_highest_weights():
    dq = example("dq-sl2")
    T = tensor_action(dq.partner, dq, simple_uq(1, dq.partner), verma(dq, q_power(0), 6))
    assert sorted(q_exponent(w) for w, _ in highest_weight_vectors(T)) == [-1, 1]
