"""Drinfeld and Heisenberg doubles as rewriting systems.

Every constructor returns a ``DoublePresentation``: a ``PresentedAlgebra``
together with coproduct, counit and (for Drinfeld kinds) antipode tables on
the generators.  Two letter orders are supported.  ``"BC"`` puts B-letters
first, so normal words read ``h*b*c`` (this is the default and what the CLI
prints).  ``"CB"`` produces ``h*c*b``, the form in which the cocycle twist
is evaluated.

Heisenberg kinds carry no coproduct of their own; their table is a
coaction into the Drinfeld double built from the same data (``partner``).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field

from .cartan import CartanDatum, SL2, SL3, load_datum
from .errors import ConfigurationError, InputError, KindError
from .hopf import (
    FiniteDimHopf,
    GroupCocycle3,
    GroupData,
    cyclic_cocycle,
    dual_hopf,
    function_algebra,
    group_algebra,
    named_group,
    twisted_function_algebra,
)
from .linalg import solve
from .ncalg import Generator, HGenerator, NCPoly, PresentedAlgebra, _add
from .pairing import GradedPair, primitive_pair, serre_degrees
from .report import Report
from .scalar import QQ, QQ_q, FieldSpec, QFunc, format_scalar, inverse

DRIN_KINDS = ("drinfeld", "quasi-drinfeld")
HEIS_KINDS = ("heisenberg", "restricted-heisenberg", "quasi-heisenberg")
KINDS = DRIN_KINDS + HEIS_KINDS


# ---------------------------------------------------------------- tensors

class TensorAlgebra:
    """Tensor product of presented algebras with legwise multiplication.

    Elements are dicts from tuples of monomials to scalars.  Over Vect_k the
    legs commute past each other with the trivial flip, so normal forms are
    computed leg by leg.
    """

    def __init__(self, *legs: PresentedAlgebra):
        self.legs = legs

    def one(self) -> dict:
        return {tuple((A.zero_h, ()) for A in self.legs): 1}

    def mul(self, X: dict, Y: dict) -> dict:
        out = {}
        for kx, cx in X.items():
            for ky, cy in Y.items():
                parts = [A.mono_mul(a, b) for A, a, b in zip(self.legs, kx, ky)]
                if not all(parts):
                    continue
                c0 = cx * cy
                for combo in itertools.product(*(p.items() for p in parts)):
                    c = c0
                    for _, v in combo:
                        c = c * v
                    _add(out, tuple(m for m, _ in combo), c)
        return out

    def from_polys(self, *ps) -> dict:
        out = {(): 1}
        for p in ps:
            terms = p.terms if isinstance(p, NCPoly) else p
            out = {k + (m,): c * d for k, c in out.items() for m, d in terms.items()}
        return {k: v for k, v in out.items() if v}

    def format(self, X: dict) -> str:
        if not X:
            return "0"
        pieces = []
        for k in sorted(X, key=lambda k: tuple((len(m[1]), m[1], m[0]) for m in k), reverse=True):
            legs = [A.format_monomial(m) or "1" for A, m in zip(self.legs, k)]
            c = X[k]
            s = format_scalar(c)
            body = " ⊗ ".join(legs)
            if c == 1:
                pieces.append(body)
            elif c == -1:
                pieces.append("-" + body)
            else:
                pieces.append(f"({s})*{body}")
        return " + ".join(pieces).replace("+ -", "- ")


def _mono(A, gamma=None, word=()):
    return (A.norm_h(tuple(gamma)) if gamma is not None else A.zero_h, tuple(word))


# ---------------------------------------------------------------- presentations

@dataclass
class DoublePresentation:
    algebra: PresentedAlgebra
    kind: str
    coproduct: dict
    counit: dict
    antipode: dict | None = None
    antipode_inv: dict | None = None
    pairing: object = None
    meta: dict = field(default_factory=dict)
    partner: "DoublePresentation | None" = None
    phi: dict | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConfigurationError(f"unknown kind {self.kind!r}")
        if self.antipode is not None and self.kind not in DRIN_KINDS:
            raise ConfigurationError("antipode tables exist only for Drinfeld kinds")
        self._dcache = {}
        self._scache = {}

    @property
    def name(self):
        return self.algebra.name

    @property
    def target(self) -> "DoublePresentation":
        return self if self.kind in DRIN_KINDS else self.partner

    def tensor(self) -> TensorAlgebra:
        left = self.algebra if self.kind in DRIN_KINDS else self.partner.algebra
        return TensorAlgebra(left, self.algebra)

    def parse(self, text):
        return self.algebra.parse(text)

    def gen(self, name):
        return self.algebra.gen(name)

    def normal_form(self, p):
        return self.algebra.normal_form(p)

    # counit
    def counit_mono(self, m):
        _, w = m
        c = 1
        for x in w:
            e = self.counit.get(x, 0)
            if not e:
                return 0
            c = c * e
        return c

    def counit_of(self, p):
        s = 0
        for m, c in p.terms.items():
            e = self.counit_mono(m)
            if e:
                s = s + c * e
        return s

    # coproduct
    def _delta_word(self, w):
        r = self._dcache.get(w)
        if r is not None:
            return r
        T = self.tensor()
        if not w:
            r = T.one()
        else:
            r = T.mul(self._delta_word(w[:-1]), self.coproduct[w[-1]])
        self._dcache[w] = r
        return r

    def delta_terms(self, terms: dict) -> dict:
        T = self.tensor()
        L, Rt = T.legs
        out = {}
        for (g, w), c in terms.items():
            for (m1, m2), d in self._delta_word(w).items():
                n1 = (L.add_h(g, m1[0]), m1[1])
                n2 = (Rt.add_h(g, m2[0]), m2[1])
                _add(out, (n1, n2), c * d)
        return out

    # antipode
    def _antipode_word(self, w, inv=False):
        key = (w, inv)
        r = self._scache.get(key)
        if r is not None:
            return r
        A = self.algebra
        table = self.antipode_inv if inv else self.antipode
        if not w:
            r = {(A.zero_h, ()): 1}
        elif inv:
            # S^-1 is also anti-multiplicative
            r = A.mul_terms(table[w[-1]], self._antipode_word(w[:-1], inv))
        else:
            r = A.mul_terms(table[w[-1]], self._antipode_word(w[:-1], inv))
        self._scache[key] = r
        return r

    def antipode_terms(self, terms: dict, inv=False) -> dict:
        A = self.algebra
        out = {}
        for (g, w), c in terms.items():
            sw = self._antipode_word(w, inv)
            hinv = {(A.neg_h(g), ()): 1}
            for m, d in A.mul_terms(sw, hinv).items():
                _add(out, m, c * d)
        return out

    def letter_names(self):
        return [g.name for g in self.algebra.letters]

    def __repr__(self):
        return f"DoublePresentation({self.name!r}, {self.kind})"


def coproduct_of(D: DoublePresentation, p: NCPoly) -> dict:
    """Multiplicative extension of the coproduct table (Drinfeld kinds)."""
    if D.kind not in DRIN_KINDS:
        raise KindError(f"{D.name} is a {D.kind} double; use coaction_of for its coaction")
    return D.delta_terms(p.terms)


def coaction_of(D: DoublePresentation, p: NCPoly) -> dict:
    """Coaction Heis -> Drin (x) Heis, or the coproduct for Drinfeld kinds."""
    if D.kind in HEIS_KINDS and D.partner is None:
        raise KindError(f"{D.name} has no coaction partner")
    return D.delta_terms(p.terms)


def antipode_of(D: DoublePresentation, p: NCPoly, inverse_map=False) -> NCPoly:
    if D.kind not in DRIN_KINDS or D.antipode is None:
        raise KindError(f"{D.name} ({D.kind}) has no antipode table")
    return NCPoly(D.algebra, D.antipode_terms(p.terms, inverse_map))


def counit_of(D: DoublePresentation, p: NCPoly):
    return D.counit_of(p)


# ---------------------------------------------------------------- group algebra helpers

def _h_elements(moduli):
    return list(itertools.product(*(range(m) for m in moduli)))


def group_algebra_inverse(X: dict, moduli, nlegs: int):
    """Inverse of X in k[Gamma]^(tensor nlegs) for a finite abelian Gamma.

    Keys of X are tuples of exponent vectors, one per leg.
    """
    if any(m == 0 for m in moduli):
        if len(X) == 1:
            (k, c), = X.items()
            return {tuple(tuple(-a for a in g) for g in k): inverse(c)}
        raise ConfigurationError("only monomials can be inverted over a lattice")
    elems = list(itertools.product(_h_elements(moduli), repeat=nlegs))
    pos = {e: i for i, e in enumerate(elems)}

    def add(k1, k2):
        return tuple(tuple((a + b) % m for a, b, m in zip(g1, g2, moduli)) for g1, g2 in zip(k1, k2))

    M = [[0] * len(elems) for _ in elems]
    for j, e in enumerate(elems):
        for k, c in X.items():
            M[pos[add(k, e)]][j] = M[pos[add(k, e)]][j] + c
    one = tuple(tuple(0 for _ in moduli) for _ in range(nlegs))
    rhs = [1 if e == one else 0 for e in elems]
    y = solve(M, rhs)
    if y is None:
        raise ConfigurationError("R-matrix is not invertible")
    return {e: v for e, v in zip(elems, y) if v}


# ---------------------------------------------------------------- primitive doubles

def _add_internal(A, letters, mode, sign_name):
    """Commutation rules inside one family of letters."""
    idx = [A.letter_index[n] for n in letters]
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            lo, hi = sorted((idx[a], idx[b]))
            if mode == "symmetric":
                A.add_rule((hi, lo), {(A.zero_h, (lo, hi)): 1})
            elif mode == "exterior":
                A.add_rule((hi, lo), {(A.zero_h, (lo, hi)): -1})
            elif mode != "free":
                raise ConfigurationError(f"unknown internal relation mode {mode!r} for {sign_name}")
        if mode == "exterior":
            A.add_rule((idx[a], idx[a]), {})


def build_primitive_double(kind, name, field, hgens, R, b_letters, c_letters, chars, ev,
                           b_mode="free", c_mode="free", order="BC", coaction_degrees=None,
                           partner=None, degrees=None):
    """Double of primitively generated B, C over a group algebra H.

    ``R`` maps pairs of exponent vectors to coefficients (an element of
    H (x) H).  ``chars[x]`` lists chi_x(h_i).  ``ev`` maps (c, b) name pairs
    to scalars.  ``coaction_degrees`` gives the grouplike b^(-1) of each
    B-letter for the restricted Heisenberg double.
    """
    if kind not in ("drinfeld", "heisenberg", "restricted-heisenberg"):
        raise ConfigurationError(f"unsupported kind {kind!r}")
    hgens = list(hgens)
    nh = len(hgens)
    moduli = tuple(h.modulus for h in hgens)
    zero = (0,) * nh
    if R is None:
        if nh:
            raise ConfigurationError("an R-matrix is required when H is nontrivial")
        R = {(zero, zero): 1}
    R = {(tuple(a), tuple(b)): c for (a, b), c in R.items() if c}
    Rinv_t = group_algebra_inverse({k: c for k, c in R.items()}, moduli, 2) if nh else {(zero, zero): 1}
    Rinv = {(k[0], k[1]): c for k, c in Rinv_t.items()}
    bl = [Generator(n, "B", i) for i, n in enumerate(b_letters)]
    cl = [Generator(n, "C", i) for i, n in enumerate(c_letters)]
    letters = bl + cl if order == "BC" else cl + bl
    A = PresentedAlgebra(name, field, hgens, letters, dict(chars),
                         meta={"kind": kind, "order": order})
    ch = {n: tuple(chars.get(n, (1,) * nh)) for n in list(b_letters) + list(c_letters)}
    for n, row in ch.items():
        for c, m in zip(row, moduli):
            if m and c ** m != 1:
                raise ConfigurationError(f"character of {n} is not a character of H")

    def chi(n, g):
        v = 1
        for c, e in zip(ch[n], g):
            if e:
                v = v * c ** e
        return v

    _add_internal(A, b_letters, b_mode, "B")
    _add_internal(A, c_letters, c_mode, "C")

    for cn in c_letters:
        for bn in b_letters:
            e = ev.get((cn, bn), 0)
            b, c = A.letter_index[bn], A.letter_index[cn]
            extra = {}
            if e:
                if kind == "drinfeld":
                    # b c - c b = R^(2) ev(R^(1) > c, b) - R^-(1) ev(R^-(2) > c, b)
                    for (g1, g2), r in R.items():
                        _add(extra, (A.norm_h(g2), ()), r * chi(cn, g1) * e)
                    for (g1, g2), r in Rinv.items():
                        _add(extra, (A.norm_h(g1), ()), -r * chi(cn, g2) * e)
                    sign = 1  # extra = bc - cb
                elif kind == "heisenberg":
                    # c b - b c = R^(1) ev(c, R^(2) > b)
                    for (g1, g2), r in R.items():
                        _add(extra, (A.norm_h(g1), ()), r * chi(bn, g2) * e)
                    sign = -1
                else:
                    g = tuple(coaction_degrees[bn]) if coaction_degrees else zero
                    _add(extra, (A.norm_h(g), ()), e)
                    sign = -1
            else:
                sign = 1
            # relation: (b c - c b) - sign*extra = 0
            rel = {(zero, (b, c)): 1, (zero, (c, b)): -1}
            for k, v in extra.items():
                _add(rel, k, -v if sign == 1 else v)
            A.add_relation(rel)

    # coproducts: Delta(b) = 1 (x) b + (R^(2) > b) (x) R^(1); Delta(c) = c (x) 1 + R^(2) (x) (R^(1) > c)
    src = A if kind == "drinfeld" else (partner.algebra if partner is not None else None)
    cop, counit = {}, {}
    for bn in (b_letters if src is not None else ()):
        x = A.letter_index[bn]
        X = {((src.zero_h, ()), (zero, (x,))): 1}
        for (g1, g2), r in R.items():
            _add(X, ((src.zero_h, (src.letter_index[bn],)), (A.norm_h(g1), ())), r * chi(bn, g2))
        cop[x] = X
        counit[x] = 0
    for cn in (c_letters if src is not None else ()):
        x = A.letter_index[cn]
        X = {((src.zero_h, (src.letter_index[cn],)), (zero, ())): 1}
        for (g1, g2), r in R.items():
            _add(X, ((src.norm_h(g2), ()), (zero, (x,))), r * chi(cn, g1))
        cop[x] = X
        counit[x] = 0

    S = Sinv = None
    if kind == "drinfeld":
        # Delta(b) = 1 (x) b + b (x) w_b and Delta(c) = c (x) 1 + u_c (x) c with w, u grouplike sums
        S, Sinv = {}, {}
        for names, leg in ((b_letters, 1), (c_letters, 0)):
            for nm in names:
                x = A.letter_index[nm]
                u = {}
                for (g1, g2), r in Rinv.items():
                    gk, gc = (g1, g2) if leg == 1 else (g2, g1)
                    _add(u, (A.norm_h(gk), ()), r * chi(nm, gc))
                gen = {(zero, (x,)): -1}
                if leg == 1:
                    S[x], Sinv[x] = A.mul_terms(gen, u), A.mul_terms(u, gen)
                else:
                    S[x], Sinv[x] = A.mul_terms(u, gen), A.mul_terms(gen, u)

    def beta(x, y):
        v = 0
        for (g1, g2), r in R.items():
            v = v + r * chi(x, g1) * chi(y, g2)
        return v

    braid_b = [[beta(x, y) for y in b_letters] for x in b_letters]
    braid_c = [[beta(x, y) for y in c_letters] for x in c_letters]
    degs = degrees or [tuple(1 if k == i else 0 for k in range(len(b_letters))) for i in range(len(b_letters))]
    ev_idx = {(c_letters.index(cn), b_letters.index(bn)): v for (cn, bn), v in ev.items() if v}
    if len(c_letters) != len(b_letters):
        degs_c = [tuple(0 for _ in degs[0])] * len(c_letters)
    else:
        degs_c = degs
    pair = GradedPair(field, b_letters, c_letters, degs, degs_c, ev_idx, braid_b, braid_c, name)
    D = DoublePresentation(A, kind, cop, counit, S, Sinv, PairingContext(A, pair), {"R": R, "order": order},
                           partner)
    return D


# ---------------------------------------------------------------- pairing contexts

class PairingContext:
    """What the cocycle twist needs: counits and ev(S^-1 c, b) on letter words."""

    def __init__(self, A: PresentedAlgebra, pair: GradedPair):
        self.A = A
        self.pair = pair
        self._bmap = {A.letter_index[n]: i for i, n in enumerate(pair.b_names)}
        self._cmap = {A.letter_index[n]: i for i, n in enumerate(pair.c_names)}

    def is_b(self, x):
        return x in self._bmap

    def split(self, word):
        """Split a normal word into its C-part and B-part (either order)."""
        c = tuple(x for x in word if x in self._cmap)
        b = tuple(x for x in word if x in self._bmap)
        return c, b

    def counit_c(self, cw):
        return 0 if cw else 1

    def counit_b(self, bw):
        return 0 if bw else 1

    def ev_Sinv(self, cw, bw):
        return self.pair.ev_Sinv(tuple(self._cmap[x] for x in cw), tuple(self._bmap[x] for x in bw))

    def ev(self, cw, bw):
        return self.pair.pair(tuple(self._cmap[x] for x in cw), tuple(self._bmap[x] for x in bw))


class FinitePairingContext(PairingContext):
    """Pairing of finite-dimensional B, C through their structure constants."""

    def __init__(self, A, Bh: FiniteDimHopf, Ch: FiniteDimHopf, ev, bmap, cmap, Sinv_c):
        self.A = A
        self.Bh, self.Ch = Bh, Ch
        self.evm = ev
        self._bmap = bmap  # letter index -> basis index of B
        self._cmap = cmap
        self.Sinv_c = Sinv_c

    def _bvec(self, bw):
        v = self.Bh.one()
        for x in bw:
            # juxtaposition in the double is the opposite product of B
            v = self.Bh.mul({self._bmap[x]: 1}, v)
        return v

    def _cvec(self, cw):
        v = self.Ch.one()
        for x in cw:
            v = self.Ch.mul(v, {self._cmap[x]: 1})
        return v

    def counit_c(self, cw):
        return self.Ch.eps(self._cvec(cw))

    def counit_b(self, bw):
        return self.Bh.eps(self._bvec(bw))

    def _ev_vec(self, cv, bv):
        s = 0
        for i, a in cv.items():
            for j, b in bv.items():
                e = self.evm.get((i, j), 0)
                if e:
                    s = s + a * b * e
        return s

    def ev(self, cw, bw):
        return self._ev_vec(self._cvec(cw), self._bvec(bw))

    def ev_Sinv(self, cw, bw):
        cv = self._cvec(cw)
        sv = {}
        for i, a in cv.items():
            for k, d in self.Sinv_c[i].items():
                _add(sv, k, a * d)
        return self._ev_vec(sv, self._bvec(bw))


# ---------------------------------------------------------------- classical examples

def weyl(n: int = 1, kind="heisenberg", order="BC", partner=None) -> DoublePresentation:
    """Heis(k[d], k[x]) = Weyl algebra (kind heisenberg) or Drin = k[x, d] commutative."""
    if n < 1:
        raise ConfigurationError("n must be positive")
    xs = ["x"] if n == 1 else [f"x{i + 1}" for i in range(n)]
    ds = ["d"] if n == 1 else [f"d{i + 1}" for i in range(n)]
    ev = {(ds[i], xs[i]): 1 for i in range(n)}
    nm = (f"weyl({n})" if kind == "heisenberg" else f"drin-weyl({n})") + ("" if order == "BC" else "-cb")
    if kind == "heisenberg" and partner is None:
        partner = weyl(n, "drinfeld", order)
    return build_primitive_double(kind, nm, QQ, [], None, xs, ds, {}, ev, "symmetric", "symmetric",
                                  order, partner=partner)


def _super_data(n, mode):
    vs = ["v"] if n == 1 else [f"v{i + 1}" for i in range(n)]
    fs = ["f"] if n == 1 else [f"f{i + 1}" for i in range(n)]
    return vs, fs, {(fs[i], vs[i]): 1 for i in range(n)}


def super_double(n: int = 1, mode="symmetric", kind="drinfeld", order="BC", partner=None):
    """S(V) or Lambda(V) with dual, over H = Drin(C2) (kind drinfeld/heisenberg)
    or over kC2 (restricted-heisenberg).

    Drin(C2) is commutative with grouplikes s and t = d_1 - d_s; R = sum_g g (x) d_g.
    """
    if mode not in ("symmetric", "exterior"):
        raise ConfigurationError("mode must be symmetric or exterior")
    vs, fs, ev = _super_data(n, mode)
    tag = "sym" if mode == "symmetric" else "ext"
    suffix = {"drinfeld": "", "heisenberg": "-heis", "restricted-heisenberg": "-restricted"}[kind]
    nm = f"super-{tag}{suffix}({n})" + ("" if order == "BC" else "-cb")
    if kind == "restricted-heisenberg":
        hgens = [HGenerator("s", 2)]
        chars = {x: (-1,) for x in vs + fs}
        R = {((0,), (0,)): 1}
        # restricted double lives inside Heis over Drin(C2); its coaction partner is the super Drinfeld double
        return build_primitive_double(kind, nm, QQ, hgens, R, vs, fs, chars, ev, mode, mode, order,
                                      coaction_degrees={v: (1,) for v in vs}, partner=partner)
    hgens = [HGenerator("s", 2), HGenerator("t", 2)]
    chi_s = 1 if mode == "symmetric" else -1
    chars = {x: (chi_s, -1) for x in vs + fs}
    half = QQ(1) / 2
    R = {((0, 0), (0, 0)): half, ((0, 0), (0, 1)): half, ((1, 0), (0, 0)): half, ((1, 0), (0, 1)): -half}
    if kind == "heisenberg" and partner is None:
        partner = super_double(n, mode, "drinfeld", order)
    return build_primitive_double(kind, nm, QQ, hgens, R, vs, fs, chars, ev, mode, mode, order,
                                  partner=partner)


# ---------------------------------------------------------------- quantum groups

def _cartan_double(datum: CartanDatum, kind, serre=None, order="BC", name=None, partner=None):
    n = datum.rank
    Fs, Es, Ks = datum.names("F"), datum.names("E"), datum.k_names()
    hgens = [HGenerator(k, 0) for k in Ks]
    qq = QFunc.q_power
    chars = {}
    for j in range(n):
        chars[Es[j]] = tuple(qq(datum.a(i, j)) for i in range(n))
        chars[Fs[j]] = tuple(qq(-datum.a(i, j)) for i in range(n))
    bl = [Generator(f, "B", i, tuple(1 if k == i else 0 for k in range(n))) for i, f in enumerate(Fs)]
    cl = [Generator(e, "C", i, tuple(1 if k == i else 0 for k in range(n))) for i, e in enumerate(Es)]
    letters = bl + cl if order == "BC" else cl + bl
    label = name or ("uq" if kind == "drinfeld" else "dq") + "-" + (datum.name or "datum")
    if order != "BC":
        label += "-cb"
    A = PresentedAlgebra(label, QQ_q, hgens, letters, chars,
                         meta={"kind": kind, "order": order, "datum": datum.to_json()})
    zero = (0,) * n

    def kvec(i, e):
        return tuple(e if k == i else 0 for k in range(n))

    for i in range(n):
        for j in range(n):
            e, f = A.letter_index[Es[i]], A.letter_index[Fs[j]]
            rel = {(zero, (e, f)): 1, (zero, (f, e)): -1}
            if i == j:
                d, qi = datum.d(i), datum.q_i(i)
                if kind == "drinfeld":
                    c = inverse(qi - inverse(qi))
                    _add(rel, (kvec(i, d), ()), -c)
                    _add(rel, (kvec(i, -d), ()), c)
                else:
                    _add(rel, (kvec(i, -d), ()), -inverse(inverse(qi) - qi))
            A.add_relation(rel)
    src = A if kind == "drinfeld" else partner.algebra
    cop, counit, S, Sinv = {}, {}, {}, {}
    for i in range(n):
        d = datum.d(i)
        e, f = A.letter_index[Es[i]], A.letter_index[Fs[i]]
        se, sf = src.letter_index[Es[i]], src.letter_index[Fs[i]]
        cop[e] = {((src.zero_h, (se,)), (zero, ())): 1, ((kvec(i, d), ()), (zero, (e,))): 1}
        cop[f] = {((src.zero_h, (sf,)), (kvec(i, -d), ())): 1, ((src.zero_h, ()), (zero, (f,))): 1}
        counit[e] = counit[f] = 0
        if kind == "drinfeld":
            ce = A.chars[e][i] ** d
            S[e] = {(kvec(i, -d), (e,)): -1}
            S[f] = {(kvec(i, d), (f,)): -ce}  # -F K^d = -chi_F(K^d)^-1 K^d F
            Sinv[e] = {(kvec(i, -d), (e,)): -ce}  # -E K^-d
            Sinv[f] = {(kvec(i, d), (f,)): -1}
    D = DoublePresentation(A, kind, cop, counit, S if kind == "drinfeld" else None,
                           Sinv if kind == "drinfeld" else None,
                           PairingContext(A, GradedPair.from_cartan(datum)),
                           {"datum": datum, "order": order}, partner)
    if serre:
        install_relations(D, serre)
    return D


def install_relations(D: DoublePresentation, polys, b_side_reversed=True):
    """Install extra relations given as polynomials in letter names.

    B-side relations are given in B's own product; since B enters the double
    with the opposite product, their words are reversed on installation.
    """
    A = D.algebra
    for p in polys:
        terms = {}
        is_b = None
        for (g, w), c in p.terms.items():
            names = [p.algebra.letters[x].name for x in w]
            try:
                idx = tuple(A.letter_index[nm] for nm in names)
            except KeyError as exc:
                raise InputError(f"relation uses unknown letter {exc}") from None
            side = {A.letters[x].sort for x in idx}
            if is_b is None and side:
                is_b = side == {"B"}
            if b_side_reversed and side == {"B"}:
                idx = tuple(reversed(idx))
            _add(terms, (A.zero_h, idx), c)
        A.add_relation(terms)
    D._dcache.clear()
    D._scache.clear()
    return D


def serre_relations(datum: CartanDatum):
    """Radicals of the pairing in the Serre degrees, both sides."""
    pair = GradedPair.from_cartan(datum)
    out = []
    for deg in serre_degrees(datum):
        out.extend(pair.radical_basis(deg, "right"))
        out.extend(pair.radical_basis(deg, "left"))
    return out


def uq(datum: CartanDatum = SL2, serre=None, order="BC") -> DoublePresentation:
    if serre == "auto":
        serre = serre_relations(datum)
    return _cartan_double(datum, "drinfeld", serre, order)


def dq(datum: CartanDatum = SL2, serre=None, order="BC", partner=None) -> DoublePresentation:
    if serre == "auto":
        serre = serre_relations(datum)
    if partner is None:
        partner = uq(datum, serre, order)
    return _cartan_double(datum, "heisenberg", serre, order, partner=partner)


# ---------------------------------------------------------------- finite doubles

def _safe(label: str) -> str:
    s = re.sub(r"[^A-Za-z0-9_]", "", label)
    return s if re.match(r"[A-Za-z_]", s) else "g" + s


def _lift_data(H: FiniteDimHopf, prefix, sort, offset):
    """Letters for the non-pivot basis elements and the pivot elimination."""
    piv = None
    for i, c in H.unit.items():
        if H.unit == {i: c}:
            piv = i
    if piv is None:
        piv = min(i for i, c in H.unit.items() if c)
    letters = []
    for i in range(H.dim):
        if i == piv:
            continue
        letters.append((i, _safe(prefix + H.basis[i])))
    return piv, letters


def build_finite_double(Bh: FiniteDimHopf, Ch: FiniteDimHopf, ev: dict, kind="drinfeld", order="BC",
                        name=None, b_prefix="", c_prefix="", partner=None, c_product=None):
    """Double of finite-dimensional B, C over H = k via the closed cross-relation formulas.

    ``ev`` maps (C basis index, B basis index) to scalars.  ``c_product``
    optionally overrides the C-C rules (used by the quasi construction).
    """
    if kind not in ("drinfeld", "heisenberg"):
        raise ConfigurationError("finite doubles are of kind drinfeld or heisenberg")
    pb, bls = _lift_data(Bh, b_prefix, "B", 0)
    pc, cls = _lift_data(Ch, c_prefix, "C", 0)
    bnames = [n for _, n in bls]
    cnames = [n for _, n in cls]
    if len(set(bnames + cnames)) != len(bnames + cnames):
        cnames = [f"c_{n}" for n in cnames]
        cls = [(i, n) for (i, _), n in zip(cls, cnames)]
    gb = [Generator(n, "B", i) for i, (n) in enumerate(bnames)]
    gc = [Generator(n, "C", i) for i, (n) in enumerate(cnames)]
    letters = gb + gc if order == "BC" else gc + gb
    nm = name or f"{'Drin' if kind == 'drinfeld' else 'Heis'}({Ch.name},{Bh.name})"
    A = PresentedAlgebra(nm, Bh.field, [], letters, {}, meta={"kind": kind, "order": order})
    z = ()
    bmap = {A.letter_index[n]: i for i, n in bls}
    cmap = {A.letter_index[n]: i for i, n in cls}
    bletter = {i: A.letter_index[n] for i, n in bls}
    cletter = {i: A.letter_index[n] for i, n in cls}

    def lift(H, piv, table, v):
        out = {}
        up = H.unit[piv]
        for i, c in v.items():
            if i == piv:
                _add(out, (z, ()), c * inverse(up))
                for j, u in H.unit.items():
                    if j != piv:
                        _add(out, (z, (table[j],)), -c * u * inverse(up))
            else:
                _add(out, (z, (table[i],)), c)
        return out

    def liftB(v):
        return lift(Bh, pb, bletter, v)

    def liftC(v):
        return lift(Ch, pc, cletter, v)

    def raw(*ts):
        out = {(z, ()): 1}
        for t in ts:
            nxt = {}
            for (g1, w1), c1 in out.items():
                for (g2, w2), c2 in t.items():
                    _add(nxt, (z, w1 + w2), c1 * c2)
            out = nxt
        return out

    # B-internal: juxtaposition x y is the product y *_B x
    for i, x in bls:
        for j, y in bls:
            A.add_rule((A.letter_index[x], A.letter_index[y]), liftB(Bh.mul({j: 1}, {i: 1})))
    # C-internal
    if c_product is None:
        for i, x in cls:
            for j, y in cls:
                A.add_rule((A.letter_index[x], A.letter_index[y]), liftC(Ch.mul({i: 1}, {j: 1})))
    else:
        for (i, j), v in c_product.items():
            A.add_rule((cletter[i], cletter[j]), v)

    def ev_vec(cv, bv):
        s = 0
        for i, a in cv.items():
            for j, b in bv.items():
                e = ev.get((i, j), 0)
                if e:
                    s = s + a * b * e
        return s

    SinvB = _inverse_antipode(Bh)
    SinvC = _inverse_antipode(Ch)
    d2B = {i: Bh.delta_leg(Bh.delta[i], 1) for i in range(Bh.dim)}
    d2C = {i: Ch.delta_leg(Ch.delta[i], 1) for i in range(Ch.dim)}
    for i, cn in cls:
        for j, bn in bls:
            rhs = {}
            for (c1, c2, c3), x in d2C[i].items():
                for (b1, b2, b3), y in d2B[j].items():
                    if order == "BC":
                        f = ev.get((c1, b1), 0)
                        if not f:
                            continue
                        if kind == "drinfeld":
                            f = f * ev_vec({c3: 1}, SinvB[b3])
                        else:
                            f = f * Ch.counit[c3] * Bh.counit[b3]
                        if not f:
                            continue
                        for k, v in raw(liftB({b2: 1}), liftC({c2: 1})).items():
                            _add(rhs, k, v * f * x * y)
                    else:
                        f = ev_vec(SinvC[c1], {b1: 1})
                        if not f:
                            continue
                        if kind == "drinfeld":
                            f = f * ev.get((c3, b3), 0)
                        else:
                            f = f * Ch.counit[c3] * Bh.counit[b3]
                        if not f:
                            continue
                        for k, v in raw(liftC({c2: 1}), liftB({b2: 1})).items():
                            _add(rhs, k, v * f * x * y)
            c, b = A.letter_index[cn], A.letter_index[bn]
            A.add_rule((c, b) if order == "BC" else (b, c), rhs)

    src = A if kind == "drinfeld" else (partner.algebra if partner is not None else None)
    cop, counit = {}, {}
    if src is None:
        bls_c, cls_c = (), ()
    else:
        bls_c, cls_c = bls, cls
        sb = {i: src.letter_index[n] for i, n in bls}
        sc = {i: src.letter_index[n] for i, n in cls}
        T = TensorAlgebra(src, A)

    def lift_src(H, piv, table, v):
        return lift(H, piv, table, v)

    for i, n in bls_c:
        x = A.letter_index[n]
        X = {}
        for (a, b), c in Bh.delta[i].items():
            for k, v in T.from_polys(lift_src(Bh, pb, sb, {a: 1}), liftB({b: 1})).items():
                _add(X, k, c * v)
        cop[x] = X
        counit[x] = Bh.counit[i]
    for i, n in cls_c:
        x = A.letter_index[n]
        X = {}
        for (a, b), c in Ch.delta[i].items():
            for k, v in T.from_polys(lift_src(Ch, pc, sc, {a: 1}), liftC({b: 1})).items():
                _add(X, k, c * v)
        cop[x] = X
        counit[x] = Ch.counit[i]
    S = Sinv = None
    if kind == "drinfeld" and Bh.antipode is not None and Ch.antipode is not None:
        S, Sinv = {}, {}
        for i, n in bls:
            x = A.letter_index[n]
            S[x] = liftB(SinvB[i])
            Sinv[x] = liftB(Bh.antipode[i])
        for i, n in cls:
            x = A.letter_index[n]
            S[x] = liftC(Ch.antipode[i])
            Sinv[x] = liftC(SinvC[i])
    ctx = FinitePairingContext(A, Bh, Ch, ev, bmap, cmap, SinvC)
    D = DoublePresentation(A, kind, cop, counit, S, Sinv, ctx,
                           {"order": order, "B": Bh, "C": Ch, "ev": ev, "liftB": liftB, "liftC": liftC,
                            "bletter": bletter, "cletter": cletter}, partner)
    return D


def _inverse_antipode(H: FiniteDimHopf):
    from .linalg import inverse_matrix
    n = H.dim
    if H.antipode is None:
        return [{i: 1} for i in range(n)]
    M = [[H.antipode[j].get(i, 0) for j in range(n)] for i in range(n)]
    Mi = inverse_matrix(M)
    if Mi is None:
        raise ConfigurationError(f"antipode of {H.name} is not invertible")
    return [{i: Mi[i][j] for i in range(n) if Mi[i][j]} for j in range(n)]


def group_double(G: GroupData, kind="drinfeld", order="BC", partner=None) -> DoublePresentation:
    """Drin(G^op) (or its Heisenberg analogue) from B = kG^op and C = k[G]."""
    Bh = group_algebra(G.opposite())
    Bh.name = f"k{G.name}^op"
    Ch = function_algebra(G)
    ev = {(h, g): 1 for h in G.elements() for g in G.elements() if h == g}
    tag = "drin-group" if kind == "drinfeld" else "heis-group"
    nm = f"{tag}({G.name})" + ("" if order == "BC" else "-cb")
    if kind == "heisenberg" and partner is None:
        partner = group_double(G, "drinfeld", order)
    D = build_finite_double(Bh, Ch, ev, kind, order, nm, partner=partner)
    D.meta["group"] = G
    return D


def build_drinfeld(Bh, Ch, ev, order="BC", name=None):
    return build_finite_double(Bh, Ch, ev, "drinfeld", order, name)


def build_heisenberg(Bh, Ch, ev, order="BC", name=None, partner=None):
    if partner is None:
        partner = build_finite_double(Bh, Ch, ev, "drinfeld", order)
    return build_finite_double(Bh, Ch, ev, "heisenberg", order, name, partner=partner)


# ---------------------------------------------------------------- quasi doubles

# (d-leg, c-leg) of the three coassociator factors in the C-C product; the
# remaining leg of each factor is the B-element inserted into the product.
C_PRODUCT_LEGS = ((0, 1), (0, 2), (1, 2))


def build_quasi_double(Bh: FiniteDimHopf, Ch: FiniteDimHopf | None = None, kind="drinfeld",
                       order="BC", name=None, legs=C_PRODUCT_LEGS) -> DoublePresentation:
    """Double of a finite-dimensional quasi-Hopf algebra B (over Vect_k).

    C defaults to the dual of B with the coassociator dropped, paired by the
    dual basis.  The C-C product and the coproduct of C-letters carry the
    coassociator corrections.
    """
    if Bh.phi is None:
        raise ConfigurationError("B has no coassociator; use build_drinfeld / build_heisenberg")
    if kind not in ("drinfeld", "heisenberg"):
        raise ConfigurationError("kind must be drinfeld or heisenberg")
    strict = FiniteDimHopf(Bh.field, Bh.basis, Bh.m, Bh.delta, Bh.unit, Bh.counit, Bh.antipode,
                           name=Bh.name)
    if Ch is None:
        Ch = dual_hopf(strict)
        if all(b.startswith("d_") for b in Bh.basis):
            Ch.basis = [b[2:] for b in Bh.basis]
    ev = {(i, i): 1 for i in range(Bh.dim)}
    phi, phinv = Bh.phi, Bh.get_phi_inv()
    pre = build_finite_double(strict, Ch, ev, kind, order, name="preliminary")
    liftB, A0 = pre.meta["liftB"], pre.algebra
    d3 = {i: Ch.delta_leg(Ch.delta_leg(Ch.delta[i], 1), 2) for i in range(Ch.dim)}
    cletter = pre.meta["cletter"]
    n = Bh.dim

    def ev1(c, b):
        return ev.get((c, b), 0)

    def leg_vec(X, c_by_leg):
        """Contract a B^3 tensor with C-basis elements on two legs; return the free leg vector."""
        out = {}
        for k, v in X.items():
            f = v
            free = None
            for leg in range(3):
                if leg in c_by_leg:
                    e = ev1(c_by_leg[leg], k[leg])
                    if not e:
                        f = 0
                        break
                    f = f * e
                else:
                    free = k[leg]
            if f:
                _add(out, free, f)
        return out

    c_product = {}
    for i, _ in cletter.items():
        for j, _ in cletter.items():
            total = {}
            for (c1, c2, c3, c4), x in d3[i].items():
                for (d1, d2, d3_, d4), y in d3[j].items():
                    X = leg_vec(phi, {legs[0][0]: d1, legs[0][1]: c1})
                    if not X:
                        continue
                    Y = leg_vec(phinv, {legs[1][0]: d2, legs[1][1]: c3})
                    if not Y:
                        continue
                    Z = leg_vec(phi, {legs[2][0]: d4, legs[2][1]: c4})
                    if not Z:
                        continue
                    word = A0.mul_terms(A0.mul_terms(A0.mul_terms(A0.mul_terms(
                        liftB(X), _liftC_pre(pre, c2)), liftB(Y)), _liftC_pre(pre, d3_)), liftB(Z))
                    for k, v in word.items():
                        _add(total, k, v * x * y)
            c_product[(i, j)] = total
    nm = name or f"{'Drin' if kind == 'drinfeld' else 'Heis'}^w({Bh.name})"
    partner = None
    if kind == "heisenberg":
        partner = build_quasi_double(Bh, Ch, "drinfeld", order, legs=legs)
    D = build_finite_double(strict, Ch, ev, kind, order, nm, partner=partner, c_product=c_product)
    D.kind = "quasi-" + kind
    D.meta["B_quasi"] = Bh
    A = D.algebra
    liftB = D.meta["liftB"]
    # the coassociator sits inside B
    D.phi = _lift_tensor(D, phi, 3)
    if kind == "heisenberg":
        # the strict coaction table does not apply; no quasi-coaction is tabulated
        D.coproduct = {}
    else:
        T = D.tensor()
        d4 = {i: Ch.delta_leg(d3[i], 3) for i in range(Ch.dim)}
        for i, let in D.meta["cletter"].items():
            X = {}
            for (c1, c2, c3, c4, c5), x in d4[i].items():
                P = _two_free(phinv, 0, c1, ev1)
                Q = _two_free(phi, 1, c3, ev1)
                Rr = _two_free(phinv, 2, c5, ev1)
                for (p2, p3), a in P.items():
                    for (q1, q3), b in Q.items():
                        for (r1, r2), c in Rr.items():
                            left = A.mul_terms(A.mul_terms(A.mul_terms(
                                liftB({p2: 1}), D.meta["liftC"]({c2: 1})), liftB({q1: 1})), liftB({r1: 1}))
                            right = A.mul_terms(A.mul_terms(A.mul_terms(
                                liftB({p3: 1}), liftB({q3: 1})), D.meta["liftC"]({c4: 1})), liftB({r2: 1}))
                            for k, v in T.from_polys(left, right).items():
                                _add(X, k, v * a * b * c * x)
            D.coproduct[let] = X
        D.antipode = None
        D.antipode_inv = None
    D._dcache.clear()
    return D


def _liftC_pre(pre, c):
    return pre.meta["liftC"]({c: 1})


def _two_free(X, leg, c, ev1):
    out = {}
    for k, v in X.items():
        e = ev1(c, k[leg])
        if e:
            rest = tuple(k[l] for l in range(3) if l != leg)
            _add(out, rest, v * e)
    return out


def _lift_tensor(D, X, nlegs):
    liftB = D.meta["liftB"]
    out = {}
    for k, v in X.items():
        acc = {(): v}
        for i in k:
            li = liftB({i: 1})
            acc = {t + (m,): c * d for t, c in acc.items() for m, d in li.items()}
        for t, c in acc.items():
            _add(out, t, c)
    return out


# ---------------------------------------------------------------- conversion to structure constants

def presentation_basis(D: DoublePresentation, maxlen: int = 12):
    A = D.algebra
    if any(m == 0 for m in A.moduli):
        raise ConfigurationError("presentation has a lattice part; it is infinite-dimensional")
    words = A.normal_words(maxlen + 1)
    if any(len(w) > maxlen for w in words):
        raise ConfigurationError("presentation is infinite-dimensional or exceeds the word bound")
    hs = list(itertools.product(*(range(m) for m in A.moduli)))
    return [(g, w) for w in words for g in hs]


def presentation_to_hopf(D: DoublePresentation, name=None, solve_antipode=True) -> FiniteDimHopf:
    """Structure constants on the basis of normal monomials."""
    A = D.algebra
    basis = presentation_basis(D)
    pos = {m: i for i, m in enumerate(basis)}
    n = len(basis)

    def vec(terms):
        out = {}
        for m, c in terms.items():
            _add(out, pos[m], c)
        return out

    m = {}
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            v = vec(A.mono_mul(a, b))
            if v:
                m[(i, j)] = v
    labels = [A.format_monomial(b) or "1" for b in basis]
    unit = {pos[(A.zero_h, ())]: 1}
    counit = [D.counit_mono(b) for b in basis]
    delta = None
    antipode = None
    meta = {"presentation": D}
    H = None
    if D.kind in DRIN_KINDS:
        delta = []
        for b in basis:
            X = D.delta_terms({b: 1})
            delta.append({(pos[k1], pos[k2]): c for (k1, k2), c in X.items()})
        if D.antipode is not None:
            antipode = [vec(D.antipode_terms({b: 1})) for b in basis]
    else:
        delta = [{} for _ in basis]
    phi = phi_inv = a = bb = None
    if D.phi is not None:
        phi = {tuple(pos[x] for x in k): c for k, c in D.phi.items()}
        Bq = D.meta["B_quasi"]
        phi_inv = {tuple(pos[x] for x in k): c for k, c in _lift_tensor(D, Bq.get_phi_inv(), 3).items()}
        liftB = D.meta["liftB"]
        a = vec(liftB(Bq.a)) if Bq.a is not None else dict(unit)
        bb = vec(liftB(Bq.b)) if Bq.b is not None else dict(unit)
    H = FiniteDimHopf(A.field, labels, m, delta, unit, counit, antipode, phi, phi_inv, a, bb,
                      name=name or A.name, meta=meta)
    if D.kind == "quasi-drinfeld" and solve_antipode:
        S = solve_quasi_antipode(H)
        if S is not None:
            H.antipode = S
    return H


def solve_quasi_antipode(H: FiniteDimHopf):
    """Solve S(x_(1)) a x_(2) = eps(x) a and x_(1) b S(x_(2)) = eps(x) b for S."""
    n = H.dim
    a = H.a or H.one()
    b = H.b or H.one()
    unknowns = [(k, i) for k in range(n) for i in range(n)]  # coeff of e_k in S(e_i)
    upos = {u: t for t, u in enumerate(unknowns)}
    rows, rhs = [], []
    for x in range(n):
        eq1 = {}
        eq2 = {}
        for (i, j), c in H.delta[x].items():
            for k in range(n):
                for r, v in H.mul_many({k: 1}, a, {j: 1}).items():
                    eq1.setdefault(r, {})
                    _add(eq1[r], upos[(k, i)], c * v)
                for r, v in H.mul_many({i: 1}, b, {k: 1}).items():
                    eq2.setdefault(r, {})
                    _add(eq2[r], upos[(k, j)], c * v)
        for r in range(n):
            rows.append([eq1.get(r, {}).get(t, 0) for t in range(len(unknowns))])
            rhs.append(H.counit[x] * a.get(r, 0))
            rows.append([eq2.get(r, {}).get(t, 0) for t in range(len(unknowns))])
            rhs.append(H.counit[x] * b.get(r, 0))
    sol = solve(rows, rhs)
    if sol is None:
        return None
    S = [{} for _ in range(n)]
    for (k, i), v in zip(unknowns, sol):
        if v:
            S[i][k] = v
    return S


# ---------------------------------------------------------------- verification

def verify_presentation(D: DoublePresentation, coassoc=True) -> Report:
    """Generator-level checks of the coproduct/coaction, counit and antipode tables."""
    A = D.algebra
    rep = Report(f"structure tables of {D.name} ({D.kind})")
    names = [g.name for g in A.letters]
    if D.kind in DRIN_KINDS:
        # counit kills both sides of every rule
        bad = None
        for lhs, rhs in A.rules.items():
            if D.counit_mono((A.zero_h, lhs)) != sum((D.counit_mono(m) * c for m, c in rhs.items()), 0):
                bad = A.format_word(lhs)
                break
        rep.add("counit respects relations", bad is None, bad)
    if D.kind in HEIS_KINDS and (D.partner is None or not D.coproduct):
        return rep
    # counitality on generators
    bad = None
    for x in range(len(A.letters)):
        X = D.coproduct[x]
        left, right = {}, {}
        for (m1, m2), c in X.items():
            e1 = D.target.counit_mono(m1)
            if e1:
                _add(left, m2, c * e1)
            if D.kind in DRIN_KINDS:
                e2 = D.counit_mono(m2)
                if e2:
                    _add(right, m1, c * e2)
        ok = left == {(A.zero_h, (x,)): 1}
        if D.kind in DRIN_KINDS:
            ok = ok and right == {(A.zero_h, (x,)): 1}
        if not ok:
            bad = names[x]
            break
    rep.add("counitality on generators", bad is None, bad)
    # Delta is an algebra map: it respects every rule
    bad = None
    for lhs, rhs in A.rules.items():
        if D.delta_terms({(A.zero_h, lhs): 1}) != D.delta_terms(rhs):
            bad = A.format_word(lhs)
            break
    label = "coproduct" if D.kind in DRIN_KINDS else "coaction"
    rep.add(f"{label} respects relations", bad is None, bad)
    if D.kind == "drinfeld" and coassoc:
        bad = None
        for x in range(len(A.letters)):
            X = D.coproduct[x]
            l3, r3 = {}, {}
            for (m1, m2), c in X.items():
                for (a1, a2), d in D.delta_terms({m1: 1}).items():
                    _add(l3, (a1, a2, m2), c * d)
                for (a1, a2), d in D.delta_terms({m2: 1}).items():
                    _add(r3, (m1, a1, a2), c * d)
            if l3 != r3:
                bad = names[x]
                break
        rep.add("coassociativity on generators", bad is None, bad)
    if D.kind in HEIS_KINDS and D.partner is not None:
        bad = None
        for x in range(len(A.letters)):
            X = D.coproduct[x]
            l3, r3 = {}, {}
            for (m1, m2), c in X.items():
                for (a1, a2), d in D.partner.delta_terms({m1: 1}).items():
                    _add(l3, (a1, a2, m2), c * d)
                for (a1, a2), d in D.delta_terms({m2: 1}).items():
                    _add(r3, (m1, a1, a2), c * d)
            if l3 != r3:
                bad = names[x]
                break
        rep.add("coaction is coassociative on generators", bad is None, bad)
    if D.kind == "drinfeld" and D.antipode is not None:
        bad = None
        for x in list(range(len(A.letters))) + [("h", i) for i in range(A.nh)]:
            if isinstance(x, tuple):
                g = tuple(1 if k == x[1] else 0 for k in range(A.nh))
                mono = (A.norm_h(g), ())
                nm = A.hgens[x[1]].name
            else:
                mono = (A.zero_h, (x,))
                nm = names[x]
            X = D.delta_terms({mono: 1})
            e = D.counit_mono(mono)
            target = {(A.zero_h, ()): e} if e else {}
            s1, s2 = {}, {}
            for (m1, m2), c in X.items():
                for k, v in A.mul_terms(D.antipode_terms({m1: 1}), {m2: 1}).items():
                    _add(s1, k, c * v)
                for k, v in A.mul_terms({m1: 1}, D.antipode_terms({m2: 1})).items():
                    _add(s2, k, c * v)
            if s1 != target or s2 != target:
                bad = nm
                break
        rep.add("antipode axioms on generators", bad is None, bad)
        bad = None
        for x in range(len(A.letters)):
            mono = {(A.zero_h, (x,)): 1}
            if D.antipode_terms(D.antipode_terms(mono), inv=True) != mono or \
                    D.antipode_terms(D.antipode_terms(mono, inv=True)) != mono:
                bad = names[x]
                break
        rep.add("S and S^-1 are mutually inverse on generators", bad is None, bad)
        bad = None
        for lhs, rhs in A.rules.items():
            if D.antipode_terms({(A.zero_h, lhs): 1}) != D.antipode_terms(rhs):
                bad = A.format_word(lhs)
                break
        rep.add("antipode respects relations", bad is None, bad)
    return rep


# ---------------------------------------------------------------- registry

EXAMPLES = {
    "weyl(n)": "Weyl algebra = Heis(k[d1..dn], k[x1..xn])",
    "drin-weyl(n)": "Drin(k[d], k[x]) = functions on T*X, commutative",
    "uq-sl2, uq-sl3": "U_q(g) as a Drinfeld double (sl3 with Serre relations)",
    "dq-sl2, dq-sl3": "D_q(g) as a Heisenberg double",
    "uq(file.json), dq(file.json)": "quantum groups of a Cartan datum file",
    "drin-group(G), heis-group(G)": "doubles of kG^op and k[G]; G = C<n>, S3, C2xC2, ...",
    "super-sym(n), super-ext(n)": "S(V) / Lambda(V) doubles over Drin(C2); add -heis or -restricted",
    "quasi-group-double(G,s,kind)": "Drin^w / Heis^w of k^w[C_n] with cyclic cocycle index s",
}

_NAME = re.compile(r"^([a-z0-9-]+)(?:\((.*)\))?$")


def example(name: str, order: str = "BC") -> DoublePresentation:
    """Look up a named example; ``order`` selects the letter order."""
    m = _NAME.match(name.strip())
    if not m:
        raise InputError(f"unknown example {name!r}")
    base, arg = m.group(1), m.group(2)
    args = [a.strip() for a in arg.split(",")] if arg else []

    def intarg(default=1):
        if not args:
            return default
        try:
            return int(args[0])
        except ValueError:
            raise InputError(f"expected an integer argument in {name!r}") from None

    if base == "weyl":
        return weyl(intarg(), "heisenberg", order)
    if base == "drin-weyl":
        return weyl(intarg(), "drinfeld", order)
    if base in ("uq-sl2", "dq-sl2", "uq-sl3", "dq-sl3"):
        datum = SL2 if base.endswith("sl2") else SL3
        serre = "auto" if base.endswith("sl3") else None
        return uq(datum, serre, order) if base.startswith("uq") else dq(datum, serre, order)
    if base in ("uq", "dq"):
        if not args:
            raise InputError(f"{base} needs a datum file")
        datum = load_datum(args[0])
        serre = "auto" if datum.rank > 1 else None
        return uq(datum, serre, order) if base == "uq" else dq(datum, serre, order)
    if base in ("drin-group", "heis-group"):
        if not args:
            raise InputError(f"{base} needs a group")
        G = named_group(args[0])
        return group_double(G, "drinfeld" if base == "drin-group" else "heisenberg", order)
    sm = re.match(r"^super-(sym|ext)(-heis|-restricted)?$", base)
    if sm:
        mode = "symmetric" if sm.group(1) == "sym" else "exterior"
        kind = {None: "drinfeld", "-heis": "heisenberg", "-restricted": "restricted-heisenberg"}[sm.group(2)]
        return super_double(intarg(), mode, kind, order)
    if base == "quasi-group-double":
        if not args:
            raise InputError("quasi-group-double needs a group")
        G = named_group(args[0])
        s = int(args[1]) if len(args) > 1 else 1
        kind = args[2] if len(args) > 2 else "drin"
        kind = {"drin": "drinfeld", "heis": "heisenberg"}.get(kind, kind)
        omega = cyclic_cocycle(G.order, s, G)
        return build_quasi_double(twisted_function_algebra(G, omega), kind=kind, order=order)
    raise InputError(f"unknown example {name!r}")


def twist_pair(name: str):
    """(Drinfeld, Heisenberg) presentations in C<B order for the twist check."""
    n = name.strip()
    if n.startswith("weyl") or n.startswith("drin-weyl"):
        k = int(n[n.index("(") + 1:-1]) if "(" in n else 1
        drin = weyl(k, "drinfeld", "CB")
        return drin, weyl(k, "heisenberg", "CB", partner=drin)
    if n in ("dq-sl2", "uq-sl2"):
        drin = uq(SL2, None, "CB")
        return drin, dq(SL2, None, "CB", partner=drin)
    if n in ("dq-sl3", "uq-sl3"):
        drin = uq(SL3, "auto", "CB")
        return drin, dq(SL3, "auto", "CB", partner=drin)
    m = re.match(r"^(?:drin|heis)-group\((.+)\)$", n)
    if m:
        G = named_group(m.group(1))
        drin = group_double(G, "drinfeld", "CB")
        return drin, group_double(G, "heisenberg", "CB", partner=drin)
    sm = re.match(r"^super-(sym|ext)(?:-heis)?(?:\((\d+)\))?$", n)
    if sm:
        mode = "symmetric" if sm.group(1) == "sym" else "exterior"
        k = int(sm.group(2) or 1)
        drin = super_double(k, mode, "drinfeld", "CB")
        return drin, super_double(k, mode, "heisenberg", "CB", partner=drin)
    raise InputError(f"no twist pair for {name!r}")
