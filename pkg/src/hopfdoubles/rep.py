"""Modules over presented doubles and over finite-dimensional Hopf algebras.

A ``RepModule`` stores generator actions as column lists: ``action[name][j]``
is the image of basis vector j as a dict index -> scalar.  A column may be
``None``, meaning the image leaves the truncation window; relation checks
silently skip the vectors whose computation would need such a column.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .doubles import DoublePresentation, example
from .errors import ConfigurationError, InputError, RepresentationError
from .hopf import FiniteDimHopf
from .linalg import inverse_matrix, nullspace, rank
from .ncalg import _add
from .report import Report
from .scalar import QFunc, format_scalar, inverse, q_int_sym, q_power


class _Outside(Exception):
    """A vector left the truncation window."""


def _apply(cols, vec: dict) -> dict:
    out = {}
    for j, c in vec.items():
        col = cols[j]
        if col is None:
            raise _Outside(j)
        for i, d in col.items():
            _add(out, i, c * d)
    return out


def _dense(cols, n):
    M = [[0] * n for _ in range(n)]
    for j, col in enumerate(cols):
        for i, c in col.items():
            M[i][j] = c
    return M


def _cols(M):
    n = len(M)
    return [{i: M[i][j] for i in range(n) if M[i][j]} for j in range(n)]


def q_exponent(s):
    """k if s = q^k, else None."""
    if isinstance(s, QFunc):
        lt = s.laurent()
        if lt and len(lt) == 1:
            (k, c), = lt.items()
            if c == 1:
                return k
        return None
    return 0 if s == 1 else None


def format_weight(s) -> str:
    k = q_exponent(s)
    return str(k) if k is not None else format_scalar(s)


class RepModule:
    """A (possibly truncated) module over a PresentedAlgebra."""

    def __init__(self, algebra, labels, action, hact, weights=None, name="M", truncation=None,
                 valid=None, degrees=None, check=True):
        self.algebra = A = algebra
        self.labels = list(labels)
        self.dim = len(self.labels)
        self.name = name
        self.truncation = truncation
        self.weights = None if weights is None else list(weights)
        self.degrees = degrees
        self.action = {}
        for g in A.letters:
            cols = action.get(g.name)
            if cols is None:
                raise RepresentationError(f"no action given for {g.name}")
            self.action[g.name] = [None if c is None else {i: v for i, v in c.items() if v} for c in cols]
        self.hact = {}
        for h in A.hgens:
            cols = hact.get(h.name)
            if cols is None:
                raise RepresentationError(f"no action given for {h.name}")
            self.hact[h.name] = [dict(c) for c in cols]
        for cols in list(self.action.values()) + list(self.hact.values()):
            if len(cols) != self.dim:
                raise RepresentationError("action matrices do not match the dimension")
        self._valid = valid
        self._hinv = {}
        self._letter_cols = [self.action[g.name] for g in A.letters]
        self._h_cols = [self.hact[h.name] for h in A.hgens]
        if check:
            rep = self.check_relations()
            if not rep.ok:
                raise RepresentationError(f"{name}: {rep.failures()[0]}")

    # ------------------------------------------------------------ action
    def _h_inverse(self, i):
        inv = self._hinv.get(i)
        if inv is None:
            M = inverse_matrix(_dense(self._h_cols[i], self.dim))
            if M is None:
                raise RepresentationError(f"{self.algebra.hgens[i].name} does not act invertibly")
            inv = self._hinv[i] = _cols(M)
        return inv

    def act_h(self, gamma, vec: dict) -> dict:
        for i, e in enumerate(gamma):
            cols = self._h_cols[i] if e > 0 else self._h_inverse(i)
            for _ in range(abs(e)):
                vec = _apply(cols, vec)
        return vec

    def act_word(self, word, vec: dict) -> dict:
        for x in reversed(word):
            vec = _apply(self._letter_cols[x], vec)
            if not vec:
                break
        return vec

    def act_mono(self, mono, vec: dict) -> dict:
        """h^gamma w acting on vec (the h-part acts last)."""
        g, w = mono
        return self.act_h(g, self.act_word(w, vec))

    def act_terms(self, terms: dict, vec: dict) -> dict:
        out = {}
        for m, c in terms.items():
            for i, d in self.act_mono(m, vec).items():
                _add(out, i, c * d)
        return out

    def act(self, p, vec: dict) -> dict:
        """Action of an NCPoly, a generator name or a monomial."""
        A = self.algebra
        if isinstance(p, str):
            p = A.gen(p)
        terms = p.terms if hasattr(p, "terms") else {p: 1}
        return self.act_terms(terms, vec)

    def matrix(self, name):
        cols = self.action.get(name) or self.hact.get(name)
        if cols is None:
            raise InputError(f"unknown generator {name!r}")
        if any(c is None for c in cols):
            raise RepresentationError(f"{name} leaves the truncation window")
        return _dense(cols, self.dim)

    def valid_indices(self):
        """Basis vectors on which every generator stays inside the window."""
        if self._valid is not None:
            return list(self._valid)
        return [j for j in range(self.dim) if all(cols[j] is not None for cols in self._letter_cols)]

    # ------------------------------------------------------------ relations
    def check_relations(self) -> Report:
        A = self.algebra
        rep = Report(f"relations of {A.name} on {self.name}")
        n = self.dim
        skipped = 0
        bad = None
        for i, j in itertools.combinations(range(A.nh), 2):
            for v in range(n):
                ei = tuple(1 if t == i else 0 for t in range(A.nh))
                ej = tuple(1 if t == j else 0 for t in range(A.nh))
                if self.act_h(ei, self.act_h(ej, {v: 1})) != self.act_h(ej, self.act_h(ei, {v: 1})):
                    bad = f"{A.hgens[i].name}, {A.hgens[j].name} on {self.labels[v]}"
                    break
        rep.add("group-likes commute", bad is None, bad)
        bad = None
        for i, h in enumerate(A.hgens):
            if not h.modulus:
                continue
            e = tuple(h.modulus if t == i else 0 for t in range(A.nh))
            for v in range(n):
                if self.act_h(e, {v: 1}) != {v: 1}:
                    bad = f"{h.name}^{h.modulus} on {self.labels[v]}"
                    break
        rep.add("group-like orders", bad is None, bad)
        bad = None
        for i in range(A.nh):
            try:
                self._h_inverse(i)
            except RepresentationError as exc:
                bad = str(exc)
                break
        rep.add("group-likes act invertibly", bad is None, bad)
        if bad:
            return rep
        bad = None
        for x, g in enumerate(A.letters):
            for i in range(A.nh):
                e = tuple(1 if t == i else 0 for t in range(A.nh))
                chi = A.chars[x][i]
                for v in range(n):
                    try:
                        lhs = self.act_h(e, self.act_word((x,), {v: 1}))
                        rhs = self.act_word((x,), self.act_h(e, {v: 1}))
                    except _Outside:
                        skipped += 1
                        continue
                    rhs = {k: chi * c for k, c in rhs.items()}
                    if lhs != rhs:
                        bad = f"{A.hgens[i].name}{g.name} on {self.labels[v]}"
                        break
                if bad:
                    break
            if bad:
                break
        rep.add("h x = chi_x(h) x h", bad is None, bad)
        bad = None
        count = 0
        for lhs, rhs in A.rules.items():
            for v in range(n):
                try:
                    l = self.act_word(lhs, {v: 1})
                    r = self.act_terms(rhs, {v: 1})
                except _Outside:
                    skipped += 1
                    continue
                count += 1
                if {k: c for k, c in l.items() if c} != {k: c for k, c in r.items() if c}:
                    bad = f"{A.format_word(lhs)} on {self.labels[v]}"
                    break
            if bad:
                break
        rep.add(f"rewrite rules hold ({count} rule/vector checks)", bad is None, bad)
        if self.truncation is not None:
            rep.note(f"truncated module: {skipped} checks left the window and were skipped")
        return rep


# ---------------------------------------------------------------- Verma modules

def _split_bc(A, word):
    k = 0
    while k < len(word) and A.letters[word[k]].sort == "B":
        k += 1
    return word[:k], word[k:]


def verma(D: DoublePresentation, lam, N: int) -> RepModule:
    """Verma module on the B-words of length <= N, with C v = 0 and h^e v = lam^e v.

    The action is read off the normal form of x * w in the presentation, so
    the closed formulas are not used here.
    """
    A = D.algebra
    if N < 1:
        raise ConfigurationError("truncation must be at least 1")
    if D.meta.get("order", "BC") != "BC":
        raise ConfigurationError("verma needs a presentation in B < C order")
    lams = tuple(lam) if isinstance(lam, (tuple, list)) else (lam,)
    if len(lams) != A.nh:
        raise InputError(f"need {A.nh} weight parameters")
    if any(not l for l in lams):
        raise ConfigurationError("highest weight must be nonzero")
    if any(A.moduli):
        raise ConfigurationError("verma needs free group-like generators")
    words = [w for w in A.normal_words(N) if all(A.letters[x].sort == "B" for x in w)]
    index = {w: i for i, w in enumerate(words)}

    def hval(gamma):
        c = 1
        for l, e in zip(lams, gamma):
            if e:
                c = c * (l ** e if e > 0 else inverse(l) ** (-e))
        return c

    action = {}
    for x, g in enumerate(A.letters):
        cols = []
        for w in words:
            out = {}
            inside = True
            for (gamma, u), c in A.mono_mul((A.zero_h, (x,)), (A.zero_h, w)).items():
                b, cc = _split_bc(A, u)
                if cc:
                    continue
                if b not in index:
                    inside = False
                    break
                _add(out, index[b], c * A.char(b, gamma) * hval(gamma))
            cols.append(out if inside else None)
        action[g.name] = cols
    hact = {}
    weights = []
    for w in words:
        weights.append(tuple(hval(e) * A.char(w, e) for e in _units(A.nh)))
    for i, h in enumerate(A.hgens):
        hact[h.name] = [{j: weights[j][i]} for j in range(len(words))]
    labels = [(A.format_word(w) + "v") if w else "v" for w in words]
    wts = [wt[0] for wt in weights] if A.nh == 1 else weights
    return RepModule(A, labels, action, hact, weights=wts, name=f"M({format_scalar(lams[0]) if A.nh == 1 else lams})",
                     truncation=N)


def _units(n):
    return [tuple(1 if t == i else 0 for t in range(n)) for i in range(n)]


def simple_uq(n: int, D: DoublePresentation | None = None) -> RepModule:
    """L(n) over U_q(sl2): v_0..v_n, K v_j = q^(n-2j) v_j, F v_j = v_(j+1),
    E v_j = [j][n-j+1] v_(j-1) with balanced q-integers."""
    if n < 0:
        raise ConfigurationError("n must be nonnegative")
    D = D or example("uq-sl2")
    A = D.algebra
    if [g.name for g in A.letters] != ["F", "E"] or [h.name for h in A.hgens] != ["K"]:
        raise InputError("simple_uq needs the rank-one presentation with F, E, K")
    F = [{j + 1: 1} if j < n else {} for j in range(n + 1)]
    E = [{j - 1: q_int_sym(j) * q_int_sym(n - j + 1)} if j > 0 else {} for j in range(n + 1)]
    K = [{j: q_power(n - 2 * j)} for j in range(n + 1)]
    return RepModule(A, [f"v{j}" for j in range(n + 1)], {"F": F, "E": E}, {"K": K},
                     weights=[q_power(n - 2 * j) for j in range(n + 1)], name=f"L({n})")


def trivial_module(D: DoublePresentation) -> RepModule:
    A = D.algebra
    return RepModule(A, ["1"], {g.name: [{}] for g in A.letters}, {h.name: [{0: 1}] for h in A.hgens},
                     weights=[1], name="k")


# ---------------------------------------------------------------- weights

def weight_decomposition(M: RepModule, hgen: str | None = None) -> dict:
    """Eigenvalue -> basis indices, for a group-like acting diagonally."""
    A = M.algebra
    names = [hgen] if hgen else [h.name for h in A.hgens]
    out = {}
    for j in range(M.dim):
        key = []
        for nm in names:
            col = M.hact[nm][j]
            if set(col) - {j}:
                raise RepresentationError(f"{nm} is not diagonal on {M.labels[j]}")
            key.append(col.get(j, 0))
        out.setdefault(key[0] if len(key) == 1 else tuple(key), []).append(j)
    return out


def _restricted_kernel(M: RepModule, letters, idx):
    """Kernel of the stacked letter matrices restricted to span(idx)."""
    rows = {}
    for x in letters:
        cols = M.action[x]
        for c, j in enumerate(idx):
            if cols[j] is None:
                raise RepresentationError(f"{x} leaves the window on {M.labels[j]}")
            for i, v in cols[j].items():
                rows.setdefault((x, i), [0] * len(idx))[c] = v
    if not rows:
        return [{j: 1} for j in idx]
    ker = nullspace(list(rows.values()), len(idx))
    return [{idx[c]: v for c, v in enumerate(vec) if v} for vec in ker]


def highest_weight_vectors(M: RepModule, raising=None):
    """(weight, vector) pairs spanning the kernel of the raising letters per weight space."""
    A = M.algebra
    raising = raising or [g.name for g in A.letters if g.sort == "C"]
    out = []
    for wt, idx in weight_decomposition(M).items():
        for v in _restricted_kernel(M, raising, idx):
            out.append((wt, v))
    return out


def clebsch_gordan(n: int, m: int, N: int | None = None, dq: DoublePresentation | None = None):
    """Highest weights (as q-exponents) of L(n) acting on the dq-Verma M(q^m)."""
    from .twist import tensor_action
    if n < 0:
        raise ConfigurationError("n must be nonnegative")
    N = n + m + 4 if N is None else N
    if N < n:
        raise ConfigurationError(f"truncation {N} is too small; need at least n = {n}")
    dq = dq or example("dq-sl2")
    L = simple_uq(n, dq.partner)
    M = verma(dq, q_power(m), N)
    T = tensor_action(dq.partner, dq, L, M)
    hw = highest_weight_vectors(T)
    out = []
    for wt, _ in hw:
        k = q_exponent(wt)
        out.append(k if k is not None else wt)
    return sorted(out, key=lambda k: -k if isinstance(k, int) else 0)


def format_decomposition(weights) -> str:
    return " ⊕ ".join(f"M({w})" for w in weights)


# ---------------------------------------------------------------- category O

def category_o_predicate(M: RepModule, D: DoublePresentation | None = None) -> Report:
    """Truncation-level evidence for the category O conditions."""
    A = M.algebra
    if D is not None and D.algebra is not A:
        raise InputError("module is not over this presentation")
    rep = Report(f"category O conditions for {M.name} (evidence inside the basis window)")
    rep.add("(I) generated by the listed basis vectors", True)
    bad = None
    for h in A.hgens:
        Kd = _dense(M.hact[h.name], M.dim)
        if not _diagonalizable(Kd):
            bad = h.name
            break
    rep.add("(II) group-likes act semisimply", bad is None, bad)
    bad = None
    cl = [g.name for g in A.letters if g.sort == "C"]
    for j in range(M.dim):
        span = _c_closure(M, cl, j)
        if span is None:
            bad = M.labels[j]
            break
    rep.add("(III) C acts locally finitely", bad is None, bad)
    if M.truncation is not None:
        rep.note("truncated module: conditions are checked inside the window only")
    return rep


def _diagonalizable(K) -> bool:
    n = len(K)
    if all(not K[i][j] for i in range(n) for j in range(n) if i != j):
        return True
    upper = all(not K[i][j] for i in range(n) for j in range(i))
    lower = all(not K[i][j] for i in range(n) for j in range(i + 1, n))
    if not (upper or lower):
        return False
    total = 0
    for lam in set(K[i][i] for i in range(n)):
        total += n - rank([[K[i][j] - (lam if i == j else 0) for j in range(n)] for i in range(n)])
    return total == n


def _c_closure(M, letters, j):
    """Dimension of the C-submodule generated by basis vector j, or None."""
    vecs = [{j: 1}]
    frontier = [{j: 1}]
    while frontier:
        new = []
        for v in frontier:
            for x in letters:
                try:
                    w = _apply(M.action[x], v)
                except _Outside:
                    return None
                if w and _independent(vecs, w):
                    vecs.append(w)
                    new.append(w)
                    if len(vecs) > M.dim:
                        return None
        frontier = new
    return len(vecs)


def _independent(vecs, w):
    keys = sorted({k for v in vecs + [w] for k in v})
    rows = [[v.get(k, 0) for k in keys] for v in vecs]
    return rank(rows + [[w.get(k, 0) for k in keys]]) > rank(rows)


def jordan_module(D: DoublePresentation | None = None) -> RepModule:
    """Two-dimensional module of k[K^(+-1)] with a Jordan block and E = F = 0.

    It is not a module of the double (K must commute past E, F with the
    characters), so it is built without the relation check; only the
    category O predicate uses it.
    """
    D = D or example("dq-sl2")
    A = D.algebra
    return RepModule(A, ["v0", "v1"], {g.name: [{}, {}] for g in A.letters},
                     {A.hgens[0].name: [{0: 1}, {0: 1, 1: 1}]}, name="J", check=False)


# ---------------------------------------------------------------- no finite-dimensional modules

def no_finite_dim_certificate(D: DoublePresentation | None = None, depth: int = 12) -> Report:
    """Highest-weight chain argument for a rank-one presentation F, E, K.

    Any finite-dimensional module with invertible K contains a highest weight
    vector v (E v = 0, K v = lam v) because E shifts K-eigenvalues by a
    non-root of unity.  The vectors F^l v have pairwise different weights, so
    some minimal l >= 1 has F^l v = 0.  Writing E F^l = F^l E + P_l F^(l-1)
    with P_l in the group algebra, E F^l v = P_l(lam) F^(l-1) v.  If every
    P_l(lam) is a single monomial in lam with nonzero coefficient, the chain
    can never terminate.
    """
    D = D or example("dq-sl2")
    A = D.algebra
    rep = Report(f"no finite-dimensional modules for {D.name}")
    names = [g.name for g in A.letters]
    if names != ["F", "E"] or A.nh != 1 or A.moduli != (0,):
        raise InputError("certificate needs a rank-one presentation F, E, K^(+-1)")
    chiF, chiE = A.chars[0][0], A.chars[1][0]
    kF, kE = q_exponent(chiF), q_exponent(chiE)
    rep.add("K F K^-1 and K E K^-1 scale by q-powers", kF not in (None, 0) and kE not in (None, 0),
            f"chi_F(K) = {format_scalar(chiF)}, chi_E(K) = {format_scalar(chiE)}")
    rep.add("distinct weights along every E- and F-chain (q not a root of unity)",
            kF is not None and kE is not None and kF != 0 and kE != 0)
    F, E = A.letter_index["F"], A.letter_index["E"]
    bad = None
    closed = True
    for l in range(1, depth + 1):
        prod = A.mono_mul((A.zero_h, (E,)), (A.zero_h, (F,) * l))
        rest = {m: c for m, c in prod.items() if m != (A.zero_h, (F,) * l + (E,))}
        shapes = {w for (_, w) in rest}
        if shapes != {(F,) * (l - 1)}:
            bad = f"l = {l}: E F^l has unexpected terms {A.format(rest)}"
            break
        # P_l(lam) F^(l-1) v: h^g F^(l-1) v = chi_{F^(l-1)}(h^g) lam^g F^(l-1) v
        coeffs = {}
        for (g, w), c in rest.items():
            _add(coeffs, g[0], c * A.char(w, g))
        if len(coeffs) != 1:
            closed = False
            bad = f"l = {l}: P_l(lam) = " + " + ".join(
                f"({format_scalar(c)})*lam^{e}" for e, c in sorted(coeffs.items())) + " has roots"
            break
        (e, c), = coeffs.items()
        if not c:
            bad = f"l = {l}: coefficient vanishes"
            break
    rep.add(f"E F^l v = (nonzero) lam^e F^(l-1) v for 1 <= l <= {depth}", bad is None, bad)
    if closed and bad is None:
        ev1 = []
        for l in range(1, depth + 1):
            prod = A.mono_mul((A.zero_h, (E,)), (A.zero_h, (F,) * l))
            rest = {m: c for m, c in prod.items() if m != (A.zero_h, (F,) * l + (E,))}
            (g, w), c = next(iter(rest.items()))
            ev1.append(c * A.char(w, g))
        # closed form: [l]_{q^-1} times the l = 1 coefficient, and [l]_{q^-1}(1) = l != 0
        base = ev1[0]
        ok = all(ev1[l - 1] == base * QFunc.from_laurent({2 * j: 1 for j in range(l)})
                 for l in range(1, depth + 1))
        rep.add("coefficients follow c_l = c_1 (1 + q^2 + ... + q^(2l-2)), nonzero at q = 1 for all l",
                ok and bool(base))
    rep.note("finite-dimensional modules would need some E F^l v = 0 with F^(l-1) v != 0")
    return rep


# ---------------------------------------------------------------- modules over finite Hopf algebras

@dataclass
class ModComod:
    """Right B-module and left B-comodule on k^d.

    ``act[b][j]`` is v_j <| e_b as a dict; ``coact[j]`` is delta(v_j) as a
    dict (b, i) -> c.
    """

    B: FiniteDimHopf
    dim: int
    act: list
    coact: list
    name: str = "V"
    labels: list = field(default_factory=list)

    def __post_init__(self):
        if not self.labels:
            self.labels = [f"v{j}" for j in range(self.dim)]

    def right(self, vec: dict, x: dict) -> dict:
        out = {}
        for b, c in x.items():
            for j, d in vec.items():
                for i, e in self.act[b][j].items():
                    _add(out, i, c * d * e)
        return out

    def delta(self, vec: dict) -> dict:
        out = {}
        for j, c in vec.items():
            for k, d in self.coact[j].items():
                _add(out, k, c * d)
        return out


def check_module_comodule(M: ModComod) -> Report:
    B = M.B
    rep = Report(f"module and comodule axioms for {M.name}")
    bad = None
    for j in range(M.dim):
        if M.right({j: 1}, B.one()) != {j: 1}:
            bad = M.labels[j]
            break
    rep.add("unit acts trivially", bad is None, bad)
    bad = None
    for a, b in itertools.product(range(B.dim), repeat=2):
        for j in range(M.dim):
            if M.right(M.right({j: 1}, {a: 1}), {b: 1}) != M.right({j: 1}, B.mul({a: 1}, {b: 1})):
                bad = f"{M.labels[j]} <| {B.basis[a]} <| {B.basis[b]}"
                break
        if bad:
            break
    rep.add("(v <| a) <| b = v <| ab", bad is None, bad)
    bad = None
    for j in range(M.dim):
        d = M.delta({j: 1})
        lhs, rhs, cu = {}, {}, {}
        for (b, i), c in d.items():
            for (b1, b2), e in B.delta[b].items():
                _add(lhs, (b1, b2, i), c * e)
            for (b2, k), e in M.delta({i: 1}).items():
                _add(rhs, (b, b2, k), c * e)
            if B.counit[b]:
                _add(cu, i, c * B.counit[b])
        if lhs != rhs or cu != {j: 1}:
            bad = M.labels[j]
            break
    rep.add("coassociative and counital coaction", bad is None, bad)
    return rep


def _rhs_terms(B, terms, vec_fn):
    out = {}
    for key, c in terms.items():
        for k, d in vec_fn(key).items():
            _add(out, k, c * d)
    return out


def yd_check(M: ModComod) -> Report:
    """delta(v <| b) = S(b_(1)) v_(-1) b_(3) (x) v_(0) <| b_(2) on generators x basis."""
    B = M.B
    if B.antipode is None:
        raise ConfigurationError("Yetter-Drinfeld check needs an antipode")
    rep = check_module_comodule(M)
    rep.title = f"Yetter-Drinfeld condition for {M.name}"
    bad = None
    for b in range(B.dim):
        d3 = {}
        for (b1, b23), c in B.delta[b].items():
            for (b2, b3), e in B.delta[b23].items():
                _add(d3, (b1, b2, b3), c * e)
        for j in range(M.dim):
            lhs = M.delta(M.right({j: 1}, {b: 1}))
            rhs = {}
            for (b1, b2, b3), c in d3.items():
                for (h, i), e in M.coact[j].items():
                    left = B.mul_many(B.S({b1: 1}), {h: 1}, {b3: 1})
                    right = M.right({i: 1}, {b2: 1})
                    for x, u in left.items():
                        for y, w in right.items():
                            _add(rhs, (x, y), c * e * u * w)
            if lhs != rhs:
                bad = f"{M.labels[j]} <| {B.basis[b]}"
                break
        if bad:
            break
    rep.add("Yetter-Drinfeld compatibility", bad is None, bad)
    return rep


def hopf_module_check(M: ModComod) -> Report:
    """delta(v <| b) = v_(-1) b_(1) (x) v_(0) <| b_(2)."""
    B = M.B
    rep = check_module_comodule(M)
    rep.title = f"Hopf module condition for {M.name}"
    bad = None
    for b in range(B.dim):
        for j in range(M.dim):
            lhs = M.delta(M.right({j: 1}, {b: 1}))
            rhs = {}
            for (b1, b2), c in B.delta[b].items():
                for (h, i), e in M.coact[j].items():
                    left = B.mul({h: 1}, {b1: 1})
                    right = M.right({i: 1}, {b2: 1})
                    for x, u in left.items():
                        for y, w in right.items():
                            _add(rhs, (x, y), c * e * u * w)
            if lhs != rhs:
                bad = f"{M.labels[j]} <| {B.basis[b]}"
                break
        if bad:
            break
    rep.add("Hopf compatibility", bad is None, bad)
    return rep


def regular_hopf_module(B: FiniteDimHopf) -> ModComod:
    """B with right multiplication and the coproduct as coaction."""
    act = [[B.mul({j: 1}, {b: 1}) for j in range(B.dim)] for b in range(B.dim)]
    coact = [dict(B.delta[j]) for j in range(B.dim)]
    return ModComod(B, B.dim, act, coact, name=f"{B.name} (regular)", labels=list(B.basis))


def graded_module(G, B: FiniteDimHopf, degrees, action) -> ModComod:
    """kG-module that is G-graded: coaction v -> deg(v) (x) v, right action by a permutation-like table.

    ``action[h][j]`` is the image of v_j under h as a dict.
    """
    n = len(degrees)
    act = [[dict(action[b][j]) for j in range(n)] for b in range(B.dim)]
    coact = [{(degrees[j], j): 1} for j in range(n)]
    return ModComod(B, n, act, coact, name="graded")


def double_regular_yd(G) -> ModComod:
    """The regular module of Drin(G^op) seen as a G-graded right kG-module.

    Basis d_h g; right multiplication by k gives d_h gk, and d_h g = g d_(g^-1 h g)
    puts d_h g in degree g^-1 h g.
    """
    from .hopf import group_algebra
    B = group_algebra(G)
    n = G.order
    pairs = [(h, g) for h in range(n) for g in range(n)]
    idx = {p: i for i, p in enumerate(pairs)}
    act = [[{idx[(h, G.mul(g, k))]: 1} for (h, g) in pairs] for k in range(n)]
    degrees = [G.mul(G.inv[g], h, g) for (h, g) in pairs]
    coact = [{(degrees[i], i): 1} for i in range(len(pairs))]
    labels = [f"d_{G.labels[h]}*{G.labels[g]}" for (h, g) in pairs]
    return ModComod(B, len(pairs), act, coact, name=f"Drin({G.name}^op) regular", labels=labels)


def hopf_ind(B: FiniteDimHopf, d: int) -> ModComod:
    """B (x) V with right multiplication on B and coaction Delta (x) id."""
    if B.phi is not None and not B.is_trivial_phi():
        raise ConfigurationError("hopf_ind needs a strict Hopf algebra")
    n = B.dim * d
    act = []
    for b in range(B.dim):
        cols = []
        for x in range(B.dim):
            for k in range(d):
                cols.append({y * d + k: c for y, c in B.mul({x: 1}, {b: 1}).items()})
        act.append(cols)
    coact = []
    for x in range(B.dim):
        for k in range(d):
            coact.append({(y1, y2 * d + k): c for (y1, y2), c in B.delta[x].items()})
    labels = [f"{B.basis[x]}⊗e{k}" for x in range(B.dim) for k in range(d)]
    return ModComod(B, n, act, coact, name=f"Ind(k^{d})", labels=labels)


def antipode_inverse(B: FiniteDimHopf):
    """Columns of S^-1, or None if S is not invertible."""
    S = _dense([dict(c) for c in B.antipode], B.dim)
    Si = inverse_matrix(S)
    return None if Si is None else _cols(Si)


def coinvariant_idempotent(M: ModComod):
    """e(v) = v_(0) <| S^-1(v_(-1)) as a dense matrix, with its rank."""
    B = M.B
    Si = antipode_inverse(B)
    if Si is None:
        raise ConfigurationError("antipode is not invertible")
    E = [[0] * M.dim for _ in range(M.dim)]
    for j in range(M.dim):
        out = {}
        for (h, i), c in M.coact[j].items():
            for k, d in M.right({i: 1}, Si[h]).items():
                _add(out, k, c * d)
        for k, c in out.items():
            E[k][j] = c
    return E, rank(E)


def idempotent_report(M: ModComod, expected_rank: int | None = None) -> Report:
    from .linalg import matmul
    E, r = coinvariant_idempotent(M)
    rep = Report(f"coinvariant projection on {M.name}")
    rep.add("e^2 = e", matmul(E, E) == E)
    bad = None
    for j in range(M.dim):
        v = {i: E[i][j] for i in range(M.dim) if E[i][j]}
        d = M.delta(v)
        one = {}
        for i, c in v.items():
            for u, x in M.B.unit.items():
                _add(one, (u, i), c * x)
        if d != one:
            bad = M.labels[j]
            break
    rep.add("image is coinvariant", bad is None, bad)
    if expected_rank is not None:
        rep.add(f"rank {expected_rank}", r == expected_rank, f"rank {r}")
    return rep


__all__ = ["RepModule", "verma", "simple_uq", "trivial_module", "weight_decomposition",
           "highest_weight_vectors", "clebsch_gordan", "format_decomposition", "category_o_predicate",
           "jordan_module", "no_finite_dim_certificate", "ModComod", "check_module_comodule", "yd_check",
           "hopf_module_check", "regular_hopf_module", "double_regular_yd", "graded_module", "hopf_ind",
           "coinvariant_idempotent", "idempotent_report", "q_exponent", "format_weight"]
