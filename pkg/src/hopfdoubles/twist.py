"""Cocycle twists: right 2-cocycles, Heis as a twist of Drin, Drinfeld twists
and transgression of group 3-cocycles."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .doubles import DRIN_KINDS, DoublePresentation, TensorAlgebra, presentation_basis
from .errors import ConfigurationError, InputError, KindError, RepresentationError
from .hopf import FiniteDimHopf, GroupCocycle3, GroupData, vec_add
from .ncalg import _add
from .report import Report
from .scalar import inverse


# ---------------------------------------------------------------- 2-cocycles

@dataclass
class TwoCocycle:
    """sigma on pairs of spanning elements (PBW monomials or basis indices)."""

    fn: object
    name: str = "sigma"
    overrides: dict = field(default_factory=dict)

    def __call__(self, x, y):
        if (x, y) in self.overrides:
            return self.overrides[(x, y)]
        return self.fn(x, y)

    def perturbed(self, x, y, value) -> "TwoCocycle":
        ov = dict(self.overrides)
        ov[(x, y)] = value
        return TwoCocycle(self.fn, self.name + "~", ov)


def heis_cocycle(drin: DoublePresentation) -> TwoCocycle:
    """sigma(h c b, h' c' b') = eps(c) eps(h) eps(b') chi_{c'}(h') ev(S^-1 c', b).

    Monomials are stored h-first; moving h' past c' produces the character.
    """
    if drin.kind != "drinfeld":
        raise KindError("the twisting cocycle lives on a Drinfeld double")
    ctx = drin.pairing
    A = drin.algebra

    def sigma(m1, m2):
        (g1, w1), (g2, w2) = m1, m2
        c1, b1 = ctx.split(w1)
        c2, b2 = ctx.split(w2)
        e = ctx.counit_c(c1)
        if not e:
            return 0
        e = e * ctx.counit_b(b2)
        if not e:
            return 0
        v = ctx.ev_Sinv(c2, b1)
        if not v:
            return 0
        return e * v * A.char(c2, g2)

    return TwoCocycle(sigma, f"sigma[{drin.name}]")


def counit_cocycle(D: DoublePresentation) -> TwoCocycle:
    return TwoCocycle(lambda a, b: D.counit_mono(a) * D.counit_mono(b), "eps(x)eps")


class _PresOps:
    """Uniform access to a Drinfeld presentation for the cocycle checks."""

    def __init__(self, D: DoublePresentation, maxdeg: int, hrange: int = 1):
        if D.kind != "drinfeld":
            raise KindError("cocycle checks need a Drinfeld-kind presentation")
        self.D = D
        A = self.A = D.algebra
        self.label = A.format_monomial
        hs = []
        for m in A.moduli:
            hs.append(range(m) if m else range(-hrange, hrange + 1))
        gammas = [A.norm_h(g) for g in itertools.product(*hs)]
        self.basis = [(g, w) for w in A.normal_words(maxdeg) for g in gammas]
        self.one = (A.zero_h, ())

    def mul(self, x: dict, y: dict) -> dict:
        return self.A.mul_terms(x, y)

    def delta(self, m) -> dict:
        return self.D.delta_terms({m: 1})

    def eps(self, m):
        return self.D.counit_mono(m)


class _HopfOps:
    def __init__(self, H: FiniteDimHopf):
        self.H = H
        self.basis = list(range(H.dim))
        self.label = lambda i: H.basis[i]
        self.one = None
        if len(H.unit) == 1:
            (u, c), = H.unit.items()
            if c == 1:
                self.one = u

    def mul(self, x: dict, y: dict) -> dict:
        return self.H.mul(x, y)

    def delta(self, i) -> dict:
        return self.H.delta[i]

    def eps(self, i):
        return self.H.counit[i]


def _ops(obj, maxdeg):
    if isinstance(obj, DoublePresentation):
        return _PresOps(obj, maxdeg)
    if isinstance(obj, FiniteDimHopf):
        return _HopfOps(obj)
    raise InputError("expected a DoublePresentation or a FiniteDimHopf")


def _sigma_on(ops, sigma, x: dict, y: dict):
    s = 0
    for a, c in x.items():
        for b, d in y.items():
            v = sigma(a, b)
            if v:
                s = s + c * d * v
    return s


def twisted_mul(ops, sigma, a, b) -> dict:
    """m_sigma(a, b) = a_(1) b_(1) sigma(a_(2), b_(2))."""
    out = {}
    da, db = ops.delta(a), ops.delta(b)
    for (a1, a2), c in da.items():
        for (b1, b2), d in db.items():
            s = sigma(a2, b2)
            if not s:
                continue
            for k, v in ops.mul({a1: 1}, {b1: 1}).items():
                _add(out, k, c * d * s * v)
    return out


def is_right_2cocycle(obj, sigma: TwoCocycle, maxdeg: int = 2) -> Report:
    """sigma(x1 y1, z) sigma(x2, y2) = sigma(x, y1 z1) sigma(y2, z2) and normalization."""
    ops = _ops(obj, maxdeg)
    scope = f" up to degree {maxdeg}" if isinstance(ops, _PresOps) else ""
    rep = Report(f"right 2-cocycle condition for {sigma.name}{scope}")
    if isinstance(ops, _PresOps):
        rep.note(f"checked on PBW monomials of word length <= {maxdeg}")
    bad = None
    one = ops.one
    for x in ops.basis:
        if one is None:
            break
        if sigma(one, x) != ops.eps(x) or sigma(x, one) != ops.eps(x):
            bad = ops.label(x) or "1"
            break
    rep.add("normalization sigma(1, x) = sigma(x, 1) = eps(x)", bad is None, bad)
    bad = None
    for x, y, z in itertools.product(ops.basis, repeat=3):
        lhs = 0
        for (x1, x2), c in ops.delta(x).items():
            for (y1, y2), d in ops.delta(y).items():
                s2 = sigma(x2, y2)
                if not s2:
                    continue
                s1 = _sigma_on(ops, sigma, ops.mul({x1: 1}, {y1: 1}), {z: 1})
                if s1:
                    lhs = lhs + c * d * s1 * s2
        rhs = 0
        for (y1, y2), c in ops.delta(y).items():
            for (z1, z2), d in ops.delta(z).items():
                s2 = sigma(y2, z2)
                if not s2:
                    continue
                s1 = _sigma_on(ops, sigma, {x: 1}, ops.mul({y1: 1}, {z1: 1}))
                if s1:
                    rhs = rhs + c * d * s1 * s2
        if lhs != rhs:
            bad = ", ".join(ops.label(t) or "1" for t in (x, y, z))
            break
    rep.add("2-cocycle identity", bad is None, bad)
    return rep


@dataclass
class TwistedAlgebra:
    """B_sigma on the spanning set of B with product m_sigma."""

    base: object
    sigma: TwoCocycle
    ops: object
    report: Report

    def mul(self, x: dict, y: dict) -> dict:
        out = {}
        for a, c in x.items():
            for b, d in y.items():
                for k, v in twisted_mul(self.ops, self.sigma, a, b).items():
                    _add(out, k, c * d * v)
        return out


def twisted_product(obj, sigma: TwoCocycle, maxdeg: int = 2, check=True) -> TwistedAlgebra:
    """Right cocycle twist of B by sigma, with certificates.

    The report records associativity of m_sigma and that the coproduct is an
    algebra map B_sigma -> B (x) B_sigma.  A sigma failing the cocycle
    condition is rejected.
    """
    ops = _ops(obj, maxdeg)
    rep = Report(f"cocycle twist by {sigma.name}")
    if check:
        cyc = is_right_2cocycle(obj, sigma, maxdeg)
        rep.merge(cyc)
        if not cyc.ok:
            raise ConfigurationError(f"{sigma.name} is not a right 2-cocycle: {cyc.failures()[0]}")
    T = TwistedAlgebra(obj, sigma, ops, rep)
    basis = ops.basis if isinstance(ops, _HopfOps) else [m for m in ops.basis if len(m[1]) <= max(1, maxdeg // 2)]
    bad = None
    for x, y, z in itertools.product(basis, repeat=3):
        l = T.mul(T.mul({x: 1}, {y: 1}), {z: 1})
        r = T.mul({x: 1}, T.mul({y: 1}, {z: 1}))
        if l != r:
            bad = ", ".join(ops.label(t) or "1" for t in (x, y, z))
            break
    rep.add("m_sigma is associative", bad is None, bad)
    bad = None
    for x, y in itertools.product(basis, repeat=2):
        # Delta(m_sigma(x, y)) against (m (x) m_sigma)(Delta x, Delta y)
        lhs = {}
        for k, c in T.mul({x: 1}, {y: 1}).items():
            for kk, d in ops.delta(k).items():
                _add(lhs, kk, c * d)
        rhs = {}
        for (x1, x2), c in ops.delta(x).items():
            for (y1, y2), d in ops.delta(y).items():
                left = ops.mul({x1: 1}, {y1: 1})
                right = T.mul({x2: 1}, {y2: 1})
                for a, u in left.items():
                    for b, v in right.items():
                        _add(rhs, (a, b), c * d * u * v)
        if lhs != rhs:
            bad = f"{ops.label(x) or '1'}, {ops.label(y) or '1'}"
            break
    rep.add("coproduct is an algebra map B_sigma -> B (x) B_sigma", bad is None, bad)
    return T


def verify_heis_is_twist(drin: DoublePresentation, heis: DoublePresentation, maxdeg: int = 3,
                         hrange: int = 1) -> Report:
    """Compare m_sigma in the Drinfeld double with the Heisenberg product.

    Both presentations must use the same letters in the C < B order.  Every
    pair of PBW monomials whose word lengths add up to at most ``maxdeg`` is
    checked.
    """
    if drin.kind != "drinfeld" or heis.kind not in ("heisenberg",):
        raise KindError("need a (drinfeld, heisenberg) pair")
    Ad, Ah = drin.algebra, heis.algebra
    if [g.name for g in Ad.letters] != [g.name for g in Ah.letters] or Ad.hgens != Ah.hgens:
        raise InputError("the two presentations have different generators")
    if drin.meta.get("order") != "CB" or heis.meta.get("order") != "CB":
        raise ConfigurationError("the twist is evaluated in C < B order; build both with order='CB'")
    ops = _PresOps(drin, maxdeg, hrange)
    sigma = heis_cocycle(drin)
    rep = Report(f"{heis.name} = twist of {drin.name} (monomial pairs up to total degree {maxdeg})")
    finite = all(Ad.moduli) and all(len(w) <= maxdeg for w in Ad.normal_words(maxdeg + 1))
    rep.note("exhaustive on the finite PBW basis" if finite else f"degree-truncated check (total degree <= {maxdeg})")
    count = 0
    bad = None
    for x in ops.basis:
        for y in ops.basis:
            if len(x[1]) + len(y[1]) > maxdeg:
                continue
            count += 1
            tw = twisted_mul(ops, sigma, x, y)
            hp = Ah.mono_mul(x, y)
            if tw != hp:
                bad = f"({Ad.format_monomial(x) or '1'}, {Ad.format_monomial(y) or '1'}): " \
                      f"twist {Ad.format(tw)} vs {Ah.format(hp)}"
                break
        if bad:
            break
    rep.add(f"m_sigma agrees with the Heisenberg product on {count} monomial pairs", bad is None, bad)
    return rep


# ---------------------------------------------------------------- module action

def tensor_action(drin: DoublePresentation, heis: DoublePresentation, M, N):
    """The Heis-module M (x) N for a Drin-module M and a Heis-module N.

    Generators act through the coaction Heis -> Drin (x) Heis.  The result is
    checked against the Heisenberg relations (up to truncation).
    """
    from .rep import RepModule, _Outside
    if heis.partner is None or heis.kind not in ("heisenberg",):
        raise KindError("the second presentation must be a Heisenberg double with coaction")
    if M.algebra is not drin.algebra or N.algebra is not heis.algebra:
        raise InputError("module algebras do not match the presentations")
    A = heis.algebra
    dm, dn = M.dim, N.dim
    labels = [f"{a}⊗{b}" for a in M.labels for b in N.labels]

    def vec_pair(u, v):
        return {i * dn + j: a * b for i, a in u.items() for j, b in v.items() if a * b}

    action = {}
    for x, g in enumerate(A.letters):
        cols = []
        for i in range(dm):
            for j in range(dn):
                out = {}
                try:
                    for (m1, m2), c in heis.coproduct[x].items():
                        u = M.act_mono(m1, {i: 1})
                        if not u:
                            continue
                        v = N.act_mono(m2, {j: 1})
                        if not v:
                            continue
                        for k, d in vec_pair(u, v).items():
                            _add(out, k, c * d)
                except _Outside:
                    out = None
                cols.append(out)
        action[g.name] = cols
    hact = {}
    for k, h in enumerate(A.hgens):
        e = tuple(1 if t == k else 0 for t in range(A.nh))
        cols = []
        for i in range(dm):
            for j in range(dn):
                u = M.act_mono((e, ()), {i: 1})
                v = N.act_mono((e, ()), {j: 1})
                cols.append(vec_pair(u, v))
        hact[h.name] = cols
    trunc = None
    if M.truncation is not None or N.truncation is not None:
        trunc = "product"
    weights = None
    if M.weights is not None and N.weights is not None:
        weights = [a * b for a in M.weights for b in N.weights]
    T = RepModule(A, labels, action, hact, weights=weights, name=f"{M.name}⊗{N.name}",
                  truncation=trunc, valid=_product_valid(M, N, dn), check=False)
    rep = T.check_relations()
    if not rep.ok:
        raise RepresentationError(f"tensor action violates relations: {rep.failures()[0]}")
    return T


def _product_valid(M, N, dn):
    vm, vn = M.valid_indices(), N.valid_indices()
    return [i * dn + j for i in vm for j in vn]


# ---------------------------------------------------------------- Drinfeld twists

def _tensor_invert(H, X, n):
    inv = H.tensor_inverse(X, n)
    if inv is None:
        raise ConfigurationError("twist element is not invertible")
    return inv


def drinfeld_twist(H: FiniteDimHopf, F: dict) -> FiniteDimHopf:
    """H_F: Delta_F = F Delta F^-1, phi_F, a_F, b_F and R_F = F_21 R F^-1.

    F must be invertible and counital, (eps (x) id)F = (id (x) eps)F = 1.
    """
    Finv = _tensor_invert(H, F, 2)
    one = {(k,): c for k, c in H.one().items()}
    if H.eps_leg(F, 0) != one or H.eps_leg(F, 1) != one:
        raise ConfigurationError("twist element is not counital")
    delta = [H.tmul_many(F, H.delta[i], Finv) for i in range(H.dim)]
    phi = H.phi if H.phi is not None else H.tensor_one(3)
    phinv = H.get_phi_inv()
    F23, F12 = H.embed(F, (1, 2), 3), H.embed(F, (0, 1), 3)
    Fi23, Fi12 = H.embed(Finv, (1, 2), 3), H.embed(Finv, (0, 1), 3)
    phiF = H.tmul_many(F23, H.delta_leg(F, 1), phi, H.delta_leg(Finv, 0), Fi12)
    phiF_inv = H.tmul_many(F12, H.delta_leg(F, 0), phinv, H.delta_leg(Finv, 1), Fi23)
    a = H.a if H.a is not None else H.one()
    b = H.b if H.b is not None else H.one()
    aF, bF = None, None
    if H.antipode is not None:
        aF, bF = {}, {}
        for (i, j), c in Finv.items():
            for k, v in H.mul_many(H.S({i: 1}), a, {j: 1}).items():
                _add(aF, k, c * v)
        for (i, j), c in F.items():
            for k, v in H.mul_many({i: 1}, b, H.S({j: 1})).items():
                _add(bF, k, c * v)
    RF = None
    if H.R is not None:
        RF = H.tmul_many(H.permute(F, (2, 1)), H.R, Finv)
    return FiniteDimHopf(H.field, H.basis, H.m, delta, H.unit, H.counit, H.antipode, phiF, phiF_inv,
                         aF, bF, RF, name=f"{H.name}_F", meta={"twist": F})


def twist_from_labels(H: FiniteDimHopf, terms) -> dict:
    """Build an element of H (x) H from [(coef, label1, label2), ...]."""
    out = {}
    for c, l1, l2 in terms:
        _add(out, (H.index[l1], H.index[l2]), c)
    return out


def is_dual_2cocycle(H: FiniteDimHopf, F: dict) -> bool:
    """F_12 (Delta (x) id)(F) = F_23 (id (x) Delta)(F)."""
    l = H.tmul(H.embed(F, (0, 1), 3), H.delta_leg(F, 0))
    r = H.tmul(H.embed(F, (1, 2), 3), H.delta_leg(F, 1))
    return l == r


# ---------------------------------------------------------------- transgression

class Transgressed2Cocycle:
    """tau(omega)(g, h)(k) with degree transport by conjugation or left multiplication."""

    def __init__(self, G: GroupData, omega: GroupCocycle3, mode="adjoint"):
        if mode not in ("adjoint", "regular"):
            raise ConfigurationError("mode must be adjoint or regular")
        self.G, self.omega, self.mode = G, omega, mode
        n = G.order
        self.table = {}
        for g, h, k in itertools.product(range(n), repeat=3):
            gh = G.mul(g, h)
            v = omega(g, h, self.pull(gh, k)) * omega(k, g, h) * inverse(omega(g, self.pull(g, k), h))
            self.table[(g, h, k)] = v

    def transport(self, g, d):
        G = self.G
        return G.mul(g, d, G.inv[g]) if self.mode == "adjoint" else G.mul(g, d)

    def pull(self, g, k):
        G = self.G
        return G.mul(G.inv[g], k, g) if self.mode == "adjoint" else G.mul(G.inv[g], k)

    def __call__(self, g, h, k):
        G = self.G
        return self.table[(G.element(g), G.element(h), G.element(k))]

    def composition_report(self) -> Report:
        """k|>(g|>(h|>v)) computed both ways agrees for v of every degree."""
        G = self.G
        rep = Report(f"composition law for tau({self.omega_name()}) [{self.mode}] on {G.name}")
        bad = None
        for k, g, h, d in itertools.product(G.elements(), repeat=4):
            lhs = self.table[(g, h, d)] * self.table[(k, G.mul(g, h), d)]
            rhs = self.table[(k, g, self.transport(h, d))] * self.table[(G.mul(k, g), h, d)]
            if lhs != rhs:
                bad = ", ".join(G.labels[t] for t in (k, g, h, d))
                break
        rep.add("twisted composition is associative", bad is None, bad)
        bad = None
        for g, d in itertools.product(G.elements(), repeat=2):
            if self.table[(G.identity, g, d)] != 1 or self.table[(g, G.identity, d)] != 1:
                bad = f"{G.labels[g]}, {G.labels[d]}"
                break
        rep.add("normalized on the identity", bad is None, bad)
        return rep

    def omega_name(self):
        return "omega"

    def to_json(self):
        G = self.G
        return {"group": G.name, "mode": self.mode,
                "values": [[G.labels[g], G.labels[h], G.labels[k], str(v)]
                           for (g, h, k), v in self.table.items()]}


def transgress(G: GroupData, omega: GroupCocycle3, mode="adjoint") -> Transgressed2Cocycle:
    return Transgressed2Cocycle(G, omega, mode)


@dataclass
class TwistedModule:
    """G-graded space with operators g|> given as column lists (dict per basis vector)."""

    degrees: list
    action: dict
    field: object = None

    @property
    def dim(self):
        return len(self.degrees)

    def act(self, g, vec: dict) -> dict:
        out = {}
        cols = self.action[g]
        for j, c in vec.items():
            for i, d in cols[j].items():
                _add(out, i, c * d)
        return out


def verify_twisted_rep(G: GroupData, omega: GroupCocycle3, module: TwistedModule, mode="adjoint") -> Report:
    """g|>(h|>v) = tau(g, h)(d) gh|>v for v of degree d, and the grading rule."""
    tau = transgress(G, omega, mode)
    rep = Report(f"tau-twisted {mode} representation of {G.name}")
    missing = [G.labels[g] for g in G.elements() if g not in module.action]
    if missing:
        rep.add("operators given for every group element", False, ", ".join(missing))
        return rep
    bad = None
    for j in range(module.dim):
        if module.act(G.identity, {j: 1}) != {j: 1}:
            bad = str(j)
            break
    rep.add("identity acts trivially", bad is None, bad)
    bad = None
    for g in G.elements():
        for j in range(module.dim):
            for i in module.act(g, {j: 1}):
                if module.degrees[i] != tau.transport(g, module.degrees[j]):
                    bad = f"{G.labels[g]} on basis vector {j}"
                    break
            if bad:
                break
        if bad:
            break
    rep.add("degree of g|>v is " + ("g d g^-1" if mode == "adjoint" else "g d"), bad is None, bad)
    bad = None
    for g, h in itertools.product(G.elements(), repeat=2):
        for j in range(module.dim):
            d = module.degrees[j]
            lhs = module.act(g, module.act(h, {j: 1}))
            t = tau.table[(g, h, d)]
            rhs = {i: t * c for i, c in module.act(G.mul(g, h), {j: 1}).items()}
            if lhs != rhs:
                bad = f"g={G.labels[g]}, h={G.labels[h]}, v{j}"
                break
        if bad:
            break
    rep.add("twisted composition law", bad is None, bad)
    return rep
