"""End-to-end acceptance checks, one test per criterion.

Each test records a pass/fail line that is printed in the terminal summary.
"""

import contextlib
import time

import pytest

from conftest import ACCEPTANCE
from hopfdoubles.cartan import SL2, SL3
from hopfdoubles.cli import main
from hopfdoubles.doubles import (build_quasi_double, example, install_relations, presentation_to_hopf,
                                 twist_pair, uq)
from hopfdoubles.hopf import (cyclic_cocycle, cyclic_group, drinfeld_double_group, function_algebra,
                              group_algebra, named_group, twisted_function_algebra, verify_hopf_axioms,
                              verify_quasi_axioms, verify_rmatrix)
from hopfdoubles.pairing import GradedPair
from hopfdoubles.rep import clebsch_gordan, no_finite_dim_certificate, verma
from hopfdoubles.scalar import Cyclo, QFunc, inverse, q_factorial, q_int, q_power
from hopfdoubles.twist import TwistedModule, transgress, verify_heis_is_twist, verify_twisted_rep

from helpers import small_group_cocycles

q = q_power(1)


_failed = set()


@contextlib.contextmanager
def criterion(n, text):
    # parametrized criteria pass only if every case passes
    ACCEPTANCE[n] = (False, text)
    try:
        yield
    except BaseException:
        _failed.add(n)
        raise
    ACCEPTANCE[n] = (n not in _failed, text)


def test_cross_relations(capsys):
    with criterion(1, "cross relations of dq-sl2 and uq-sl2"):
        t0 = time.perf_counter()
        dq = example("dq-sl2").algebra
        got = dq.normal_form(dq.parse("E*F - F*E"))
        assert got == dq.h((-1,)).scale(inverse(inverse(q) - q))
        uqa = example("uq-sl2").algebra
        got = uqa.normal_form(uqa.parse("E*F - F*E"))
        assert got == (uqa.h((1,)) - uqa.h((-1,))).scale(inverse(q - inverse(q)))
        assert main(["normal-form", "dq-sl2", "E*F"]) == 0
        assert capsys.readouterr().out.strip() == "F*E + (1/(q^-1 - q))*K^-1"
        assert time.perf_counter() - t0 < 1.0


def test_commutator_lemma():
    with criterion(2, "[E, F^m] in dq-sl2 for m <= 10"):
        t0 = time.perf_counter()
        A = example("dq-sl2").algebra
        E, F = A.gen("E"), A.gen("F")
        c = inverse(inverse(q) - q)
        for m in range(1, 11):
            lhs = A.commutator(E, F ** m)
            rhs = A.monomial((-1,), (A.letter_index["F"],) * (m - 1)).scale(q_int(m) * c)
            assert lhs == rhs, m
        assert time.perf_counter() - t0 < 5.0


def test_verma_actions():
    with criterion(3, "Verma actions for m <= 20, lambda in {1, q, q^3}"):
        D = example("dq-sl2")
        c = inverse(inverse(q) - q)
        for lam in (q_power(0), q, q_power(3)):
            M = verma(D, lam, 21)
            for m in range(21):
                assert M.act("K", {m: 1}) == {m: lam * q_power(-2 * m)}
                want = {} if m == 0 else {m - 1: inverse(lam) * QFunc.from_laurent(
                    {2 * j: 1 for j in range(m)}) * c}
                assert M.act("E", {m: 1}) == want, (lam, m)


def test_clebsch_gordan():
    with criterion(4, "Clebsch-Gordan for 0 <= n, m <= 5"):
        t0 = time.perf_counter()
        for n in range(6):
            for m in range(6):
                assert clebsch_gordan(n, m) == [m + n - 2 * k for k in range(n + 1)], (n, m)
        assert time.perf_counter() - t0 < 30.0


@pytest.mark.parametrize("deg", [(2, 1), (1, 2)])
def test_quantum_serre(deg):
    with criterion(5, "quantum Serre radicals at (2,1) and (1,2)"):
        pair = GradedPair.from_cartan(SL3)
        for side in ("right", "left"):
            rad = pair.radical_basis(deg, side)
            assert len(rad) == 1
            D = uq(SL3, None)
            A = D.algebra
            p = rad[0]
            image = {}
            for (g, w), c in p.terms.items():
                word = tuple(A.letter_index[p.algebra.letters[x].name] for x in w)
                if side == "right":
                    word = tuple(reversed(word))
                image[(A.zero_h, word)] = c
            assert A.nf_terms(image)
            install_relations(D, rad)
            assert A.nf_terms(image) == {}
            assert A.check_local_confluence(4).ok


def test_twist_theorem():
    with criterion(6, "Heisenberg product = cocycle twist of the Drinfeld product"):
        drin, heis = twist_pair("drin-group(C2)")
        rep = verify_heis_is_twist(drin, heis, 6)
        assert rep.ok and "exhaustive on the finite PBW basis" in rep.notes
        drin, heis = twist_pair("weyl(1)")
        assert verify_heis_is_twist(drin, heis, 3).ok
        drin, heis = twist_pair("dq-sl2")
        assert verify_heis_is_twist(drin, heis, 3).ok


def test_pairing_values():
    with criterion(7, "ev(E^n, F^n) for n <= 8 and the snake identity to degree 5"):
        pair = GradedPair.from_cartan(SL2)
        c = inverse(q) - q
        for n in range(9):
            assert pair.pair((0,) * n, (0,) * n) == q_factorial(n) * inverse(c ** n if n else QFunc(1))
        assert pair.snake_check(pair.truncated_coev(5), 5).ok


@pytest.mark.parametrize("gname", ["C2", "C3", "C4", "S3"])
def test_axiom_suites(gname):
    with criterion(8, "Hopf, quasi-Hopf and R-matrix axiom suites"):
        G = named_group(gname)
        for H in (group_algebra(G), function_algebra(G), drinfeld_double_group(G)):
            t0 = time.perf_counter()
            assert verify_hopf_axioms(H).ok, H.name
            assert time.perf_counter() - t0 < 60
        if gname in ("C2", "S3"):
            assert verify_rmatrix(drinfeld_double_group(G)).ok
        if gname.startswith("C"):
            n = int(gname[1:])
            for s in range(n):
                assert verify_quasi_axioms(twisted_function_algebra(G, cyclic_cocycle(n, s, G))).ok


def test_twisted_doubles():
    with criterion(9, "twisted doubles and transgression"):
        C2 = cyclic_group(2)
        omega = cyclic_cocycle(2, 1, C2)
        D = build_quasi_double(twisted_function_algebra(C2, omega), kind="drinfeld")
        assert verify_quasi_axioms(presentation_to_hopf(D)).ok
        tau = transgress(C2, omega)
        assert tau("s", "s", "s") == -1
        i = Cyclo.zeta(4, 1)
        good = TwistedModule([1], {0: [{0: 1}], 1: [{0: i}]})
        assert verify_twisted_rep(C2, omega, good).ok
        bad = TwistedModule([1], {0: [{0: 1}], 1: [{0: 1}]})
        assert not verify_twisted_rep(C2, omega, bad).ok
        seen = set()
        for G, w in small_group_cocycles():
            seen.add(G.order)
            assert transgress(G, w).composition_report().ok, G.name
        assert seen == {1, 2, 3, 4, 5, 6}


def test_no_finite_dimensional_modules():
    with criterion(10, "certificate: dq-sl2 has no finite-dimensional modules"):
        assert no_finite_dim_certificate(example("dq-sl2")).ok
        assert not no_finite_dim_certificate(example("uq-sl2")).ok


def test_confluence():
    with criterion(11, "confluence to degree 4 and detection of a perturbed system"):
        for nm in ("weyl(2)", "uq-sl2", "dq-sl2", "super-sym(1)", "super-ext(1)"):
            assert example(nm).algebra.check_local_confluence(4).ok, nm
        A = example("weyl(2)").algebra.copy("weyl(2)~")
        x1, x2 = A.letter_index["x1"], A.letter_index["x2"]
        A.rules.pop((x2, x1))
        A.add_rule((x2, x1), {((), (x1, x2)): 2})
        assert not A.check_local_confluence(4).ok
