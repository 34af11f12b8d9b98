from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from hopfdoubles.doubles import example
from hopfdoubles.errors import ConfigurationError, InputError, ResourceError
from hopfdoubles.ncalg import Generator, PresentedAlgebra, free_algebra
from hopfdoubles.scalar import QQ


def weyl1():
    return example("weyl(1)").algebra


@given(st.integers(0, 6), st.integers(0, 6))
def test_weyl_normal_form_matches_leibniz(n, m):
    # d^n x^m = sum_k C(n,k) m!/(m-k)! x^(m-k) d^(n-k)
    A = weyl1()
    x, d = A.letter_index["x"], A.letter_index["d"]
    got = A.nf_terms({((), (d,) * n + (x,) * m): 1})
    want = {}
    for k in range(min(n, m) + 1):
        want[((), (x,) * (m - k) + (d,) * (n - k))] = comb(n, k) * factorial(m) // factorial(m - k)
    assert got == want


words = st.lists(st.sampled_from(["F", "E", "K", "K^-1"]), min_size=0, max_size=4)


def _poly(A, names):
    p = A.one()
    for nm in names:
        p = p * (A.h((-1,)) if nm == "K^-1" else A.gen(nm))
    return p


@given(words, words, words)
def test_uq_product_is_associative(a, b, c):
    A = example("uq-sl2").algebra
    x, y, z = _poly(A, a), _poly(A, b), _poly(A, c)
    assert (x * y) * z == x * (y * z)


@given(words)
def test_normal_form_is_idempotent(a):
    A = example("dq-sl2").algebra
    p = _poly(A, a)
    assert A.normal_form(p) == p
    for (_, w) in p.terms:
        assert A.is_normal(w)


def test_parse_and_format():
    A = example("dq-sl2").algebra
    p = A.parse("E*F - q^2*F*E + 3")
    assert A.format(A.normal_form(p).terms) == "(1 - q^2)*F*E + 3 + (1/(q^-1 - q))*K^-1"
    assert A.parse("K^-1*K") == A.one()
    with pytest.raises(InputError):
        A.parse("E*G")


def test_normal_words_of_weyl_are_pbw():
    A = weyl1()
    ws = A.normal_words(3)
    x, d = A.letter_index["x"], A.letter_index["d"]
    assert len(ws) == 10
    assert all(w == tuple(sorted(w, key=lambda t: (t != x))) for w in ws)


def test_rule_must_decrease():
    A = free_algebra([Generator("a", "B"), Generator("b", "C")], QQ)
    a, b = A.letter_index["a"], A.letter_index["b"]
    with pytest.raises(ConfigurationError):
        A.add_rule((a,), {((), (b, a)): 1})
    A.add_rule((b, a), {((), (a, b)): 1})
    with pytest.raises(ConfigurationError):
        A.add_rule((b, a), {((), (a, b)): 2})


def test_confluence_detects_inconsistent_system():
    A = free_algebra([Generator("a", "B"), Generator("b", "C")], QQ)
    a, b = A.letter_index["a"], A.letter_index["b"]
    # b a = 2 a b and b^2 = a force 4 a^2 = a^2
    A.add_rule((b, a), {((), (a, b)): 2})
    A.add_rule((b, b), {((), (a,)): 1})
    assert not A.check_local_confluence(3).ok


def test_json_round_trip_of_relations():
    for nm in ("uq-sl3", "super-ext(1)", "drin-group(S3)", "weyl(2)"):
        A = example(nm).algebra
        assert PresentedAlgebra.from_json(A.to_json()) == A


def test_step_budget(monkeypatch):
    monkeypatch.setenv("HOPFDOUBLES_STEP_BUDGET", "5")
    A = example("weyl(1)").algebra
    with pytest.raises(ResourceError):
        A.normal_form(A.parse("d^4*x^4"))
