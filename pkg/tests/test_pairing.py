import itertools

import pytest
from hypothesis import given, strategies as st

from hopfdoubles.cartan import B2, SL2, SL3, CartanDatum
from hopfdoubles.errors import ConfigurationError, DegeneratePairingError
from hopfdoubles.linalg import rank
from hopfdoubles.pairing import GradedPair, primitive_pair, serre_degrees
from hopfdoubles.scalar import QQ, inverse, q_power

POSITIVE_ROOTS = {
    "sl3": [(1, 0), (0, 1), (1, 1)],
    "b2": [(1, 0), (0, 1), (1, 1), (2, 1)],
}


def kostant(roots, deg):
    """Number of ways to write deg as a sum of positive roots."""
    if not any(deg):
        return 1
    if not roots:
        return 0
    r, rest = roots[0], roots[1:]
    total, k = 0, 0
    while all(d - k * x >= 0 for d, x in zip(deg, r)):
        total += kostant(rest, tuple(d - k * x for d, x in zip(deg, r)))
        k += 1
    return total


@pytest.mark.parametrize("datum", [SL3, B2], ids=["sl3", "b2"])
def test_gram_rank_is_kostant_partition_count(datum):
    pair = GradedPair.from_cartan(datum)
    roots = POSITIVE_ROOTS[datum.name]
    for deg in itertools.product(range(4), repeat=2):
        if sum(deg) > 4:
            continue
        G = pair.gram_matrix(deg)
        r = rank(G) if G and G[0] else 0
        assert r == kostant(roots, deg), deg
        assert len(pair.radical_basis(deg)) == len(pair.words_b(deg)) - r


def test_serre_degrees():
    assert sorted(serre_degrees(SL3)) == [(1, 2), (2, 1)]
    assert sorted(serre_degrees(B2)) == [(1, 2), (3, 1)]


def test_generator_pairing_and_braiding():
    pair = GradedPair.from_cartan(SL3)
    q = q_power(1)
    c = inverse(inverse(q) - q)
    assert pair.pair(("E1",), ("F1",)) == c
    assert pair.pair(("E1",), ("F2",)) == 0
    # swapping the two letters of a word costs the braiding q^(-i.j) = q
    assert pair.pair(("E1", "E2"), ("F2", "F1")) == c * c
    assert pair.pair(("E1", "E2"), ("F1", "F2")) == c * c * q


@given(st.integers(0, 5))
def test_sl2_gram_is_one_by_one(n):
    pair = GradedPair.from_cartan(SL2)
    assert pair.gram_matrix((n,)) == [[pair.pair((0,) * n, (0,) * n)]]


def test_truncated_coev_fails_in_a_singular_degree():
    with pytest.raises(DegeneratePairingError):
        GradedPair.from_cartan(SL3).truncated_coev(3)


def test_primitive_pair_is_shuffle_pairing():
    p = primitive_pair(QQ, ["x"], ["d"], {(0, 0): 1})
    for n in range(6):
        f = 1
        for k in range(2, n + 1):
            f *= k
        assert p.pair((0,) * n, (0,) * n) == f
    assert p.snake_check(p.truncated_coev(4), 4).ok


def test_datum_validation():
    with pytest.raises(ConfigurationError):
        CartanDatum(((2, -1), (-2, 2)))
    with pytest.raises(ConfigurationError):
        CartanDatum(((3,),))
