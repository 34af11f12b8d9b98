"""Finite-dimensional (quasi-)Hopf algebras given by structure constants.

Vectors are dicts ``index -> scalar``; an element of the n-fold tensor power
is a dict ``(i1, ..., in) -> scalar``.  All constructors here are
group-derived; arbitrary algebras can be loaded from JSON.
"""

from __future__ import annotations

import itertools
import json

from .errors import ConfigurationError, InputError
from .linalg import solve
from .ncalg import _add
from .report import Report
from .scalar import QQ, Cyclo, FieldSpec, cyclotomic, field_of, inverse, scalar_from_json, scalar_to_json


# ---------------------------------------------------------------- groups

class GroupData:
    """A finite group as a multiplication table on 0..n-1."""

    def __init__(self, table, labels=None, name="G"):
        self.table = [list(r) for r in table]
        self.order = len(self.table)
        self.name = name
        self.labels = list(labels) if labels else [str(i) for i in range(self.order)]
        n = self.order
        if n == 0 or any(len(r) != n for r in self.table):
            raise ConfigurationError("multiplication table must be square and nonempty")
        if any(not 0 <= x < n for r in self.table for x in r):
            raise ConfigurationError("table entries out of range")
        ids = [e for e in range(n) if all(self.table[e][g] == g and self.table[g][e] == g for g in range(n))]
        if not ids:
            raise ConfigurationError("no identity element")
        self.identity = ids[0]
        self.inv = []
        for g in range(n):
            hs = [h for h in range(n) if self.table[g][h] == self.identity]
            if len(hs) != 1 or self.table[hs[0]][g] != self.identity:
                raise ConfigurationError(f"element {self.labels[g]} has no two-sided inverse")
            self.inv.append(hs[0])
        for a, b, c in itertools.product(range(n), repeat=3):
            if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                raise ConfigurationError("multiplication is not associative")
        self.index = {l: i for i, l in enumerate(self.labels)}

    def mul(self, *gs):
        out = self.identity
        for g in gs:
            out = self.table[out][g]
        return out

    def conj(self, g, h):
        """g h g^-1"""
        return self.mul(g, h, self.inv[g])

    def elements(self):
        return range(self.order)

    def is_abelian(self) -> bool:
        return all(self.table[a][b] == self.table[b][a] for a in self.elements() for b in self.elements())

    def opposite(self) -> "GroupData":
        n = self.order
        return GroupData([[self.table[b][a] for b in range(n)] for a in range(n)], self.labels, self.name + "^op")

    def element(self, label):
        if isinstance(label, int):
            return label
        try:
            return self.index[label]
        except KeyError:
            raise InputError(f"unknown group element {label!r}") from None

    def __repr__(self):
        return f"GroupData({self.name}, order {self.order})"


def cyclic_group(n: int, gen: str | None = None) -> GroupData:
    if n < 1:
        raise ConfigurationError("cyclic group order must be positive")
    g = gen or ("s" if n == 2 else "g")
    labels = ["1"] + [g if k == 1 else f"{g}^{k}" for k in range(1, n)]
    return GroupData([[(a + b) % n for b in range(n)] for a in range(n)], labels, f"C{n}")


def trivial_group() -> GroupData:
    return GroupData([[0]], ["1"], "C1")


def _cycle_label(p) -> str:
    seen, parts = set(), []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(str(j + 1))
            j = p[j]
        parts.append("(" + "".join(cyc) + ")")
    return "".join(parts) or "1"


def symmetric_group(n: int) -> GroupData:
    perms = sorted(itertools.permutations(range(n)), key=lambda p: (_cycle_label(p) != "1", p))
    idx = {p: i for i, p in enumerate(perms)}
    # (s t)(x) = s(t(x))
    table = [[idx[tuple(s[t[x]] for x in range(n))] for t in perms] for s in perms]
    return GroupData(table, [_cycle_label(p) for p in perms], f"S{n}")


def product_group(G: GroupData, K: GroupData) -> GroupData:
    pairs = [(a, b) for a in G.elements() for b in K.elements()]
    idx = {p: i for i, p in enumerate(pairs)}
    table = [[idx[(G.table[a][c], K.table[b][d])] for (c, d) in pairs] for (a, b) in pairs]
    labels = []
    for a, b in pairs:
        la, lb = G.labels[a], K.labels[b]
        labels.append("1" if la == lb == "1" else (lb if la == "1" else (la if lb == "1" else f"{la}{lb}")))
    return GroupData(table, labels, f"{G.name}x{K.name}")


def named_group(name: str) -> GroupData:
    """C<n>, S3, or a product such as C2xC2."""
    name = name.strip()
    if "x" in name:
        gens = iter("stuvabcdef")
        parts = []
        for p in name.split("x"):
            p = p.strip()
            if p.startswith("C") and p[1:].isdigit():
                parts.append(cyclic_group(int(p[1:]), next(gens)))
            else:
                parts.append(named_group(p))
        G = parts[0]
        for P in parts[1:]:
            G = product_group(G, P)
        return G
    if name.startswith("C") and name[1:].isdigit():
        return cyclic_group(int(name[1:]))
    if name.startswith("S") and name[1:].isdigit():
        return symmetric_group(int(name[1:]))
    raise InputError(f"unknown group {name!r}")


class GroupCocycle3:
    """A normalized k^x-valued 3-cocycle on a finite group."""

    def __init__(self, G: GroupData, values, field: FieldSpec | None = None, check=True):
        self.G = G
        n = G.order
        if callable(values):
            self.table = {(a, b, c): values(a, b, c) for a in range(n) for b in range(n) for c in range(n)}
        else:
            self.table = {tuple(k): v for k, v in values.items()}
            for k in itertools.product(range(n), repeat=3):
                self.table.setdefault(k, 1)
        self.field = field or field_of(*self.table.values())
        if any(not v for v in self.table.values()):
            raise ConfigurationError("cocycle values must be nonzero")
        if check:
            bad = self.failures()
            if bad:
                raise ConfigurationError(f"not a normalized 3-cocycle: {bad[0]}")

    def __call__(self, g, h, k):
        return self.table[(g, h, k)]

    def failures(self, limit=5):
        G, w, out = self.G, self.table, []
        e = G.identity
        for g, h in itertools.product(G.elements(), repeat=2):
            for t in ((e, g, h), (g, e, h), (g, h, e)):
                if w[t] != 1:
                    out.append("normalization fails at " + ",".join(G.labels[x] for x in t))
                    if len(out) >= limit:
                        return out
        for g, h, k, l in itertools.product(G.elements(), repeat=4):
            lhs = w[(h, k, l)] * w[(g, G.mul(h, k), l)] * w[(g, h, k)]
            rhs = w[(g, h, G.mul(k, l))] * w[(G.mul(g, h), k, l)]
            if lhs != rhs:
                out.append("cocycle identity fails at " + ",".join(G.labels[x] for x in (g, h, k, l)))
                if len(out) >= limit:
                    return out
        return out

    def is_cocycle(self) -> bool:
        return not self.failures(1)

    def times_coboundary(self, beta) -> "GroupCocycle3":
        """omega * d(beta) for a normalized 2-cochain beta(g, h)."""
        G = self.G

        def val(g, h, k):
            return (self.table[(g, h, k)] * beta(h, k) * beta(g, G.mul(h, k))
                    * inverse(beta(G.mul(g, h), k) * beta(g, h)))
        return GroupCocycle3(G, val, self.field)

    def pullback(self, H: GroupData, hom) -> "GroupCocycle3":
        """Pull back along a homomorphism hom: H -> G (given as a list)."""
        return GroupCocycle3(H, lambda a, b, c: self.table[(hom[a], hom[b], hom[c])], self.field)

    def to_json(self):
        G = self.G
        return {"group": G.name, "values": [[G.labels[a], G.labels[b], G.labels[c], scalar_to_json(v)]
                                            for (a, b, c), v in sorted(self.table.items()) if v != 1]}

    @staticmethod
    def from_json(G: GroupData, obj, check=True) -> "GroupCocycle3":
        try:
            vals = {(G.element(a), G.element(b), G.element(c)): scalar_from_json(v)
                    for a, b, c, v in obj["values"]}
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed cocycle table: {exc}") from exc
        return GroupCocycle3(G, vals, check=check)


def trivial_cocycle(G: GroupData) -> GroupCocycle3:
    return GroupCocycle3(G, lambda a, b, c: 1, QQ)


def cyclic_cocycle(n: int, s: int = 1, G: GroupData | None = None) -> GroupCocycle3:
    """omega_s(g^a, g^b, g^c) = zeta_n^(s a floor((b+c)/n))."""
    G = G or cyclic_group(n)
    if G.order != n:
        raise ConfigurationError("group order does not match n")
    if n <= 2:
        fld = QQ
        def z(e):
            return (-1) ** (e % 2)
    else:
        fld = cyclotomic(n)
        def z(e):
            return Cyclo.zeta(n, e % n)
    return GroupCocycle3(G, lambda a, b, c: z(s * a * ((b + c) // n)), fld)


# ---------------------------------------------------------------- tensor helpers

def _tensor_add(d, key, c):
    _add(d, key, c)


def vec_scale(v: dict, c) -> dict:
    return {k: x * c for k, x in v.items()} if c else {}


def vec_add(*vs) -> dict:
    out = {}
    for v in vs:
        for k, c in v.items():
            _add(out, k, c)
    return out


class FiniteDimHopf:
    """Structure constants of a finite-dimensional (quasi-)Hopf algebra."""

    def __init__(self, field, basis, m, delta, unit, counit, antipode=None,
                 phi=None, phi_inv=None, a=None, b=None, R=None, name="H", meta=None):
        self.field = field
        self.basis = list(basis)
        self.dim = len(self.basis)
        if self.dim < 1:
            raise ConfigurationError("dimension must be at least 1")
        self.m = {k: dict(v) for k, v in m.items() if v}
        self.delta = [dict(v) for v in delta]
        self.unit = dict(unit)
        self.counit = list(counit)
        self.antipode = None if antipode is None else [dict(v) for v in antipode]
        self.phi = None if phi is None else dict(phi)
        self.phi_inv = None if phi_inv is None else dict(phi_inv)
        self.a = None if a is None else dict(a)
        self.b = None if b is None else dict(b)
        self.R = None if R is None else dict(R)
        self.name = name
        self.meta = dict(meta or {})
        if len(self.delta) != self.dim or len(self.counit) != self.dim:
            raise ConfigurationError("coproduct/counit tables do not match the dimension")
        self.index = {l: i for i, l in enumerate(self.basis)}

    # ------------------------------------------------------------ algebra
    def e(self, i) -> dict:
        if not isinstance(i, int):
            i = self.index[i]
        return {i: 1}

    def one(self) -> dict:
        return dict(self.unit)

    def mul(self, x: dict, y: dict) -> dict:
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.m.get((i, j), {}).items():
                    _add(out, k, a * b * c)
        return out

    def mul_many(self, *xs) -> dict:
        out = self.one()
        for x in xs:
            out = self.mul(out, x)
        return out

    def eps(self, x: dict):
        s = 0
        for i, c in x.items():
            if self.counit[i]:
                s = s + c * self.counit[i]
        return s

    def S(self, x: dict) -> dict:
        out = {}
        for i, c in x.items():
            for k, d in self.antipode[i].items():
                _add(out, k, c * d)
        return out

    def Delta(self, x: dict) -> dict:
        out = {}
        for i, c in x.items():
            for k, d in self.delta[i].items():
                _add(out, k, c * d)
        return out

    def is_trivial_phi(self) -> bool:
        if self.phi is None:
            return True
        return self.phi == self.tensor_one(3)

    # ------------------------------------------------------------ tensors
    def tensor_one(self, n: int) -> dict:
        out = {(): 1}
        for _ in range(n):
            out = {k + (i,): c * d for k, c in out.items() for i, d in self.unit.items()}
        return out

    def tmul(self, X: dict, Y: dict) -> dict:
        out = {}
        for kx, cx in X.items():
            for ky, cy in Y.items():
                parts = [self.m.get((i, j), {}) for i, j in zip(kx, ky)]
                if not all(parts):
                    continue
                c0 = cx * cy
                for combo in itertools.product(*(p.items() for p in parts)):
                    c = c0
                    for _, v in combo:
                        c = c * v
                    _add(out, tuple(k for k, _ in combo), c)
        return out

    def tmul_many(self, *Xs) -> dict:
        out = Xs[0]
        for X in Xs[1:]:
            out = self.tmul(out, X)
        return out

    def apply_leg(self, X: dict, leg: int, f) -> dict:
        """Replace leg ``leg`` by f(index), a dict tuple -> scalar."""
        out = {}
        cache = {}
        for k, c in X.items():
            i = k[leg]
            img = cache.get(i)
            if img is None:
                img = cache[i] = f(i)
            for t, d in img.items():
                _add(out, k[:leg] + t + k[leg + 1:], c * d)
        return out

    def delta_leg(self, X, leg):
        return self.apply_leg(X, leg, lambda i: self.delta[i])

    def eps_leg(self, X, leg):
        return self.apply_leg(X, leg, lambda i: {(): self.counit[i]} if self.counit[i] else {})

    def S_leg(self, X, leg):
        return self.apply_leg(X, leg, lambda i: {(k,): c for k, c in self.antipode[i].items()})

    def embed(self, X: dict, legs, n: int) -> dict:
        """Place a k-leg tensor on the given legs of an n-fold tensor, 1 elsewhere."""
        out = {}
        others = [l for l in range(n) if l not in legs]
        units = list(self.unit.items())
        for k, c in X.items():
            for combo in itertools.product(units, repeat=len(others)):
                key = [None] * n
                cc = c
                for l, v in zip(legs, k):
                    key[l] = v
                for l, (u, d) in zip(others, combo):
                    key[l] = u
                    cc = cc * d
                _add(out, tuple(key), cc)
        return out

    def permute(self, X: dict, slots) -> dict:
        """Leg-number notation X_{slots}: leg j of X goes to slot slots[j]."""
        out = {}
        for k, c in X.items():
            key = [None] * len(k)
            for j, s in enumerate(slots):
                key[s - 1] = k[j]
            out[tuple(key)] = c
        return out

    def contract(self, X: dict) -> dict:
        """Multiply all legs together in order."""
        out = {}
        for k, c in X.items():
            v = {k[0]: c}
            for i in k[1:]:
                v = self.mul(v, {i: 1})
            for j, d in v.items():
                _add(out, j, d)
        return out

    def tensor_inverse(self, X: dict, n: int, candidate=None):
        """Two-sided inverse of X in H^(tensor n), or None."""
        one = self.tensor_one(n)
        if candidate is not None and self.tmul(X, candidate) == one and self.tmul(candidate, X) == one:
            return candidate
        keys = list(itertools.product(range(self.dim), repeat=n))
        pos = {k: i for i, k in enumerate(keys)}
        cols = [self.tmul(X, {k: 1}) for k in keys]
        M = [[0] * len(keys) for _ in keys]
        for j, col in enumerate(cols):
            for k, c in col.items():
                M[pos[k]][j] = c
        rhs = [one.get(k, 0) for k in keys]
        y = solve(M, rhs)
        if y is None:
            return None
        Y = {k: v for k, v in zip(keys, y) if v}
        if self.tmul(Y, X) != one:
            return None
        return Y

    def get_phi_inv(self):
        if self.phi is None:
            return self.tensor_one(3)
        if self.phi_inv is None:
            self.phi_inv = self.tensor_inverse(self.phi, 3)
        return self.phi_inv

    # ------------------------------------------------------------ misc
    def fmt(self, x: dict) -> str:
        from .scalar import format_scalar
        if not x:
            return "0"
        parts = []
        for k in sorted(x, key=lambda k: k if isinstance(k, int) else tuple(k)):
            lab = self.basis[k] if isinstance(k, int) else "⊗".join(self.basis[i] for i in k)
            c = x[k]
            parts.append(lab if c == 1 else f"({format_scalar(c)})*{lab}")
        return " + ".join(parts)

    def structure_equal(self, other: "FiniteDimHopf") -> bool:
        """Equal structure tensors; a missing phi, a or b counts as the trivial one."""
        if self.dim != other.dim:
            return False

        def q(H):
            one = H.one()
            return (H.phi if H.phi is not None else H.tensor_one(3),
                    H.a if H.a is not None else one, H.b if H.b is not None else one)
        return (self.m == other.m and self.delta == other.delta
                and self.unit == other.unit and self.counit == other.counit
                and self.antipode == other.antipode and q(self) == q(other))

    def is_commutative(self) -> bool:
        return all(self.m.get((i, j), {}) == self.m.get((j, i), {})
                   for i in range(self.dim) for j in range(i + 1, self.dim))

    def is_cocommutative(self) -> bool:
        return all(d == {(k[1], k[0]): c for k, c in d.items()} for d in self.delta)

    def __repr__(self):
        return f"FiniteDimHopf({self.name!r}, dim {self.dim})"

    # ------------------------------------------------------------ json
    def to_json(self) -> dict:
        n = self.dim
        J = scalar_to_json

        def dense(v, shape):
            if len(shape) == 1:
                return [J(v.get(i, 0)) for i in range(shape[0])]
            out = []
            for i in range(shape[0]):
                sub = {k[1:] if len(k) > 2 else k[1]: c for k, c in v.items() if k[0] == i}
                out.append(dense(sub, shape[1:]))
            return out

        obj = {
            "name": self.name,
            "field": str(self.field),
            "dim": n,
            "basis": self.basis,
            "m": [[dense(self.m.get((i, j), {}), (n,)) for j in range(n)] for i in range(n)],
            "delta": [dense(self.delta[i], (n, n)) for i in range(n)],
            "unit": dense(self.unit, (n,)),
            "counit": [J(c) for c in self.counit],
        }
        if self.antipode is not None:
            obj["antipode"] = [dense(self.antipode[i], (n,)) for i in range(n)]
        if self.phi is not None:
            obj["phi"] = dense(self.phi, (n, n, n))
        for key in ("a", "b"):
            v = getattr(self, key)
            if v is not None:
                obj[key] = dense(v, (n,))
        if self.R is not None:
            obj["R"] = dense(self.R, (n, n))
        return obj

    @staticmethod
    def from_json(obj: dict) -> "FiniteDimHopf":
        try:
            n = int(obj["dim"])
            basis = obj.get("basis") or [f"e{i}" for i in range(n)]
            P = scalar_from_json

            def sparse(arr, depth):
                out = {}
                if depth == 1:
                    for i, c in enumerate(arr):
                        v = P(c)
                        if v:
                            out[i] = v
                    return out
                for i, sub in enumerate(arr):
                    for k, v in sparse(sub, depth - 1).items():
                        out[(i,) + (k if isinstance(k, tuple) else (k,))] = v
                return out

            m = {(i, j): sparse(obj["m"][i][j], 1) for i in range(n) for j in range(n)}
            delta = [sparse(obj["delta"][i], 2) for i in range(n)]
            unit = sparse(obj["unit"], 1)
            counit = [P(c) for c in obj["counit"]]
            antipode = [sparse(r, 1) for r in obj["antipode"]] if "antipode" in obj else None
            phi = sparse(obj["phi"], 3) if "phi" in obj else None
            a = sparse(obj["a"], 1) if "a" in obj else None
            b = sparse(obj["b"], 1) if "b" in obj else None
            R = sparse(obj["R"], 2) if "R" in obj else None
            if len(basis) != n or len(obj["m"]) != n or len(delta) != n or len(counit) != n:
                raise ValueError("table sizes do not match dim")
            vals = [c for d in m.values() for c in d.values()] + [c for d in delta for c in d.values()]
            fld = FieldSpec.parse(obj["field"]) if "field" in obj else field_of(*vals)
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise InputError(f"malformed Hopf algebra description: {exc}") from exc
        return FiniteDimHopf(fld, basis, m, delta, unit, counit, antipode, phi, None, a, b, R,
                             obj.get("name", "H"))


def load_hopf(path) -> FiniteDimHopf:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    if not isinstance(obj, dict):
        raise InputError(f"{path}: expected a JSON object")
    return FiniteDimHopf.from_json(obj)


# ---------------------------------------------------------------- constructors

def group_algebra(G: GroupData, field: FieldSpec = QQ) -> FiniteDimHopf:
    n = G.order
    m = {(a, b): {G.table[a][b]: 1} for a in range(n) for b in range(n)}
    delta = [{(g, g): 1} for g in range(n)]
    return FiniteDimHopf(field, G.labels, m, delta, {G.identity: 1}, [1] * n,
                         [{G.inv[g]: 1} for g in range(n)], name=f"k{G.name}",
                         meta={"group": G, "type": "group_algebra"})


def function_algebra(G: GroupData, field: FieldSpec = QQ) -> FiniteDimHopf:
    n = G.order
    m = {(a, a): {a: 1} for a in range(n)}
    delta = [{} for _ in range(n)]
    for a in range(n):
        for b in range(n):
            delta[G.table[a][b]][(a, b)] = 1
    counit = [1 if g == G.identity else 0 for g in range(n)]
    return FiniteDimHopf(field, [f"d_{l}" for l in G.labels], m, delta, {g: 1 for g in range(n)}, counit,
                         [{G.inv[g]: 1} for g in range(n)], name=f"k[{G.name}]",
                         meta={"group": G, "type": "function_algebra"})


def twisted_function_algebra(G: GroupData, omega: GroupCocycle3, check=True) -> FiniteDimHopf:
    """k^omega[G]: the algebra k[G] with coassociator sum omega d(x)d(x)d."""
    if check and not omega.is_cocycle():
        raise ConfigurationError("omega is not a normalized 3-cocycle: " + omega.failures(1)[0])
    H = function_algebra(G, omega.field)
    n = G.order
    phi = {(a, b, c): omega(a, b, c) for a in range(n) for b in range(n) for c in range(n)}
    phi_inv = {k: inverse(v) for k, v in phi.items()}
    a = {g: inverse(omega(g, G.inv[g], g)) for g in range(n)}
    b = {g: 1 for g in range(n)}
    return FiniteDimHopf(omega.field, H.basis, H.m, H.delta, H.unit, H.counit, H.antipode,
                         phi, phi_inv, a, b, name=f"k^w[{G.name}]",
                         meta={"group": G, "omega": omega, "type": "twisted_function_algebra"})


def drinfeld_double_group(G: GroupData, field: FieldSpec = QQ) -> FiniteDimHopf:
    """Drin(G^op) on the basis d_h g with g d_k = d_{g k g^-1} g.

    Basis index h*n + g stands for d_h g.  R = sum_h d_h (x) h.
    """
    n = G.order

    def ix(h, g):
        return h * n + g

    labels = [f"d_{G.labels[h]}*{G.labels[g]}" for h in range(n) for g in range(n)]
    m, delta = {}, []
    for h in range(n):
        for g in range(n):
            for k in range(n):
                if G.conj(g, k) != h:
                    continue
                for g2 in range(n):
                    m[(ix(h, g), ix(k, g2))] = {ix(h, G.table[g][g2]): 1}
    for h in range(n):
        for g in range(n):
            d = {}
            for a in range(n):
                d[(ix(a, g), ix(G.table[G.inv[a]][h], g))] = 1
            delta.append(d)
    unit = {ix(h, G.identity): 1 for h in range(n)}
    counit = [1 if h == G.identity else 0 for h in range(n) for g in range(n)]
    antipode = [{ix(G.conj(G.inv[g], G.inv[h]), G.inv[g]): 1} for h in range(n) for g in range(n)]
    R = {}
    for h in range(n):
        for k in range(n):
            R[(ix(h, G.identity), ix(k, h))] = 1
    return FiniteDimHopf(field, labels, m, delta, unit, counit, antipode, R=R,
                         name=f"Drin({G.name}^op)", meta={"group": G, "type": "drinfeld_double_group"})


def with_R(H: FiniteDimHopf, R: dict) -> FiniteDimHopf:
    return FiniteDimHopf(H.field, H.basis, H.m, H.delta, H.unit, H.counit, H.antipode,
                         H.phi, H.phi_inv, H.a, H.b, R, H.name, H.meta)


def with_antipode(H: FiniteDimHopf, S) -> FiniteDimHopf:
    return FiniteDimHopf(H.field, H.basis, H.m, H.delta, H.unit, H.counit, S,
                         H.phi, H.phi_inv, H.a, H.b, H.R, H.name, H.meta)


def dual_hopf(H: FiniteDimHopf) -> FiniteDimHopf:
    """H^* on the dual basis with ev(f f', x) = f'(x_(1)) f(x_(2)) and
    ev(f, x x') = f_(1)(x') f_(2)(x)."""
    if not H.is_trivial_phi():
        raise ConfigurationError("duals of quasi-Hopf algebras are not associative; not supported")
    n = H.dim
    m = {}
    for k in range(n):
        for (j, i), c in H.delta[k].items():
            m.setdefault((i, j), {})[k] = c
    delta = [{} for _ in range(n)]
    for (j, i), prod in H.m.items():
        for k, c in prod.items():
            delta[k][(i, j)] = c
    unit = {i: c for i, c in enumerate(H.counit) if c}
    counit = [H.unit.get(i, 0) for i in range(n)]
    antipode = None
    if H.antipode is not None:
        antipode = [dict() for _ in range(n)]
        for j in range(n):
            for i, c in H.antipode[j].items():
                antipode[i][j] = c
    basis = [f"{b}*" for b in H.basis]
    return FiniteDimHopf(H.field, basis, m, delta, unit, counit, antipode, name=f"{H.name}*",
                         meta={"dual_of": H})


# ---------------------------------------------------------------- verifiers

def _first_failure(items, pred):
    for it in items:
        if not pred(it):
            return it
    return None


def _check_algebra(H: FiniteDimHopf, rep: Report):
    n = H.dim
    R = range(n)
    lab = H.basis
    w = None
    prods = {}
    for i in R:
        for j in R:
            prods[(i, j)] = H.m.get((i, j), {})
    for i, j, k in itertools.product(R, R, R):
        if H.mul(prods[(i, j)], {k: 1}) != H.mul({i: 1}, prods[(j, k)]):
            w = (lab[i], lab[j], lab[k])
            break
    rep.add("associativity", w is None, w)
    one = H.one()
    w = _first_failure(R, lambda i: H.mul(one, {i: 1}) == {i: 1} and H.mul({i: 1}, one) == {i: 1})
    rep.add("unit", w is None, None if w is None else lab[w])


def _check_coalgebra_strict(H: FiniteDimHopf, rep: Report):
    lab = H.basis
    w = _first_failure(range(H.dim), lambda i: H.delta_leg(H.delta[i], 0) == H.delta_leg(H.delta[i], 1))
    rep.add("coassociativity", w is None, None if w is None else lab[w])


def _check_counit(H, rep):
    R = range(H.dim)
    lab = H.basis
    w = _first_failure(R, lambda i: H.eps_leg(H.delta[i], 0) == {(i,): 1}
                       and H.eps_leg(H.delta[i], 1) == {(i,): 1})
    rep.add("counit", w is None, None if w is None else lab[w])


def _check_bialgebra(H, rep):
    R = range(H.dim)
    lab = H.basis
    w = None
    for i, j in itertools.product(R, R):
        if H.Delta(H.m.get((i, j), {})) != H.tmul(H.delta[i], H.delta[j]):
            w = (lab[i], lab[j])
            break
    rep.add("coproduct is multiplicative", w is None, w)
    w = None
    for i, j in itertools.product(R, R):
        if H.eps(H.m.get((i, j), {})) != H.counit[i] * H.counit[j]:
            w = (lab[i], lab[j])
            break
    rep.add("counit is multiplicative", w is None, w)
    ok = H.Delta(H.one()) == H.tensor_one(2) and H.eps(H.one()) == 1
    rep.add("unit is grouplike", ok)


def verify_hopf_axioms(H: FiniteDimHopf) -> Report:
    rep = Report(f"Hopf axioms for {H.name} (dim {H.dim})")
    if not H.is_trivial_phi():
        rep.add("coassociator is trivial", False, detail="use verify_quasi_axioms")
        return rep
    _check_algebra(H, rep)
    _check_coalgebra_strict(H, rep)
    _check_counit(H, rep)
    _check_bialgebra(H, rep)
    if H.antipode is None:
        rep.add("antipode", False, detail="no antipode table")
        return rep
    lab = H.basis
    w = None
    for i in range(H.dim):
        e1 = H.contract(H.S_leg(H.delta[i], 0))
        e2 = H.contract(H.S_leg(H.delta[i], 1))
        target = vec_scale(H.one(), H.counit[i])
        if e1 != target or e2 != target:
            w = lab[i]
            break
    rep.add("antipode", w is None, w)
    return rep


def _contract_with(H, X, inserts):
    """Multiply the legs of X in order, inserting fixed elements.

    ``inserts`` maps a position (0..len) to an element placed before leg
    number position (len = after the last leg).
    """
    out = {}
    for k, c in X.items():
        cur = None
        for p in range(len(k) + 1):
            if p in inserts:
                cur = inserts[p] if cur is None else H.mul(cur, inserts[p])
            if p < len(k):
                cur = {k[p]: 1} if cur is None else H.mul(cur, {k[p]: 1})
        for j, d in cur.items():
            _add(out, j, c * d)
    return out


def verify_quasi_axioms(H: FiniteDimHopf) -> Report:
    rep = Report(f"quasi-Hopf axioms for {H.name} (dim {H.dim})")
    phi = H.phi if H.phi is not None else H.tensor_one(3)
    a = H.a if H.a is not None else H.one()
    b = H.b if H.b is not None else H.one()
    lab = H.basis
    _check_algebra(H, rep)
    _check_counit(H, rep)
    _check_bialgebra(H, rep)
    phi_inv = H.get_phi_inv()
    rep.add("coassociator is invertible", phi_inv is not None)
    if phi_inv is None:
        return rep
    w = None
    for i in range(H.dim):
        left = H.tmul(H.delta_leg(H.delta[i], 1), phi)
        right = H.tmul(phi, H.delta_leg(H.delta[i], 0))
        if left != right:
            w = lab[i]
            break
    rep.add("quasi-coassociativity", w is None, w)
    lhs = H.tmul_many(H.embed(phi, (1, 2, 3), 4), H.delta_leg(phi, 1), H.embed(phi, (0, 1, 2), 4))
    rhs = H.tmul(H.delta_leg(phi, 2), H.delta_leg(phi, 0))
    rep.add("3-cycle identity", lhs == rhs)
    rep.add("counitality of coassociator", H.eps_leg(phi, 1) == H.tensor_one(2))
    if H.antipode is None:
        rep.add("quasi-antipode", False, detail="no antipode table")
        return rep
    w = None
    for i in range(H.dim):
        d = H.delta[i]
        left = _contract_with(H, H.S_leg(d, 0), {1: a})
        right = _contract_with(H, H.S_leg(d, 1), {1: b})
        if left != vec_scale(a, H.counit[i]) or right != vec_scale(b, H.counit[i]):
            w = lab[i]
            break
    rep.add("quasi-antipode", w is None, w)
    w = None
    for i, j in itertools.product(range(H.dim), repeat=2):
        if H.S(H.m.get((i, j), {})) != H.mul(H.S({j: 1}), H.S({i: 1})):
            w = (lab[i], lab[j])
            break
    rep.add("antipode is anti-multiplicative", w is None, w)
    c1 = _contract_with(H, H.S_leg(phi, 1), {1: b, 2: a})
    rep.add("phi compatibility with a, b", c1 == H.one())
    c2 = _contract_with(H, H.S_leg(H.S_leg(phi_inv, 0), 2), {1: a, 2: b})
    rep.add("phi^-1 compatibility with a, b", c2 == H.one())
    return rep


def verify_rmatrix(H: FiniteDimHopf) -> Report:
    rep = Report(f"R-matrix axioms for {H.name}")
    if H.R is None:
        rep.add("R present", False)
        return rep
    R = H.R
    cand = H.S_leg(R, 0) if H.antipode is not None and H.is_trivial_phi() else None
    Rinv = H.tensor_inverse(R, 2, cand)
    rep.add("R is invertible", Rinv is not None)
    w = None
    for i in range(H.dim):
        op = {(k[1], k[0]): c for k, c in H.delta[i].items()}
        if H.tmul(R, H.delta[i]) != H.tmul(op, R):
            w = H.basis[i]
            break
    rep.add("R intertwines coproduct and opposite coproduct", w is None, w)
    R13 = H.embed(R, (0, 2), 3)
    R23 = H.embed(R, (1, 2), 3)
    R12 = H.embed(R, (0, 1), 3)
    if H.is_trivial_phi():
        rep.add("hexagon (Delta x id)R = R13 R23", H.delta_leg(R, 0) == H.tmul(R13, R23))
        rep.add("hexagon (id x Delta)R = R13 R12", H.delta_leg(R, 1) == H.tmul(R13, R12))
    else:
        phi, pinv = H.phi, H.get_phi_inv()
        lhs = H.delta_leg(R, 0)
        rhs = H.tmul_many(H.permute(phi, (3, 1, 2)), R13, H.permute(pinv, (1, 3, 2)), R23, phi)
        rep.add("hexagon (Delta x id)R", lhs == rhs)
        lhs = H.delta_leg(R, 1)
        rhs = H.tmul_many(H.permute(pinv, (2, 3, 1)), R13, H.permute(phi, (2, 1, 3)), R12, pinv)
        rep.add("hexagon (id x Delta)R", lhs == rhs)
    return rep
