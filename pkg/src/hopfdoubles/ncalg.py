"""Presented algebras over an abelian group algebra with a PBW rewriting engine.

An element is a finite sum of monomials ``h^gamma * w`` where ``gamma`` is an
exponent vector for the group-like generators (the H part, always kept
leftmost) and ``w`` is a word in the B- and C-letters.  Letters commute with
H up to a character, ``h x = chi_x(h) x h``, so moving H to the left only
produces scalars.  Rewrite rules act on words only.

Internally a monomial is the pair ``(gamma, word)`` of integer tuples and a
polynomial is a plain dict from monomials to nonzero scalars.
"""

from __future__ import annotations

import os
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ConfigurationError, InputError, ResourceError
from .scalar import (
    QQ,
    Cyclo,
    FieldSpec,
    QFunc,
    format_scalar,
    inverse,
    scalar_from_json,
    scalar_to_json,
)

DEFAULT_STEP_BUDGET = 10 ** 6
STEP_BUDGET_ENV = "HOPFDOUBLES_STEP_BUDGET"

SORT_RANK = {"B": 0, "C": 1}

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


@dataclass(frozen=True)
class Generator:
    name: str
    sort: str
    index: int = 0
    degree: tuple = ()


@dataclass(frozen=True)
class HGenerator:
    name: str
    modulus: int = 0  # 0 means infinite cyclic


@dataclass
class ConfluenceReport:
    maxdeg: int
    checked: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self):
        out = [f"overlap ambiguities up to degree {self.maxdeg}: {self.checked} checked, "
               f"{len(self.failures)} unresolved"]
        for f in self.failures:
            out.append("  unresolved: " + f)
        out.extend("  " + n for n in self.notes)
        return out


def _add(d: dict, key, c):
    if not c:
        return
    s = d.get(key)
    if s is None:
        d[key] = c
    else:
        s = s + c
        if s:
            d[key] = s
        else:
            del d[key]


class PresentedAlgebra:
    """Generators, characters, letter order and rewrite rules.

    ``letters`` are given in increasing order; the monomial order on words is
    degree-lexicographic with respect to that order.  ``chars[x][i]`` is the
    scalar by which the i-th group-like generator commutes past letter x.
    """

    def __init__(self, name, field: FieldSpec, hgens, letters, chars, rules=(), meta=None):
        self.name = name
        self.field = field
        self.hgens = list(hgens)
        self.letters = list(letters)
        self.nh = len(self.hgens)
        self.moduli = tuple(h.modulus for h in self.hgens)
        self.zero_h = (0,) * self.nh
        self.letter_index = {g.name: i for i, g in enumerate(self.letters)}
        self.h_index = {h.name: i for i, h in enumerate(self.hgens)}
        names = [g.name for g in self.letters] + [h.name for h in self.hgens]
        if len(set(names)) != len(names):
            raise ConfigurationError("generator names must be unique")
        self.chars = [tuple(chars[g.name][i] if g.name in chars else 1 for i in range(self.nh))
                      if isinstance(chars, dict) else tuple(chars[j])
                      for j, g in enumerate(self.letters)]
        self.chars_inv = [tuple(inverse(c) if c != 1 else 1 for c in row) for row in self.chars]
        self._pow_cache = {}
        self.rules = {}
        self.rule_lengths = []
        self.meta = dict(meta or {})
        self._memo = {}
        self._mm = {}
        self._steps = 0
        self._budget = self._budget_from_env()
        for lhs, rhs in rules:
            self.add_rule(lhs, rhs)

    # ------------------------------------------------------------ basics
    def word_key(self, w):
        return (len(w), w)

    def add_h(self, g1, g2):
        return tuple((a + b) % m if m else a + b for a, b, m in zip(g1, g2, self.moduli))

    def neg_h(self, g):
        return tuple((-a) % m if m else -a for a, m in zip(g, self.moduli))

    def norm_h(self, g):
        return tuple(a % m if m else a for a, m in zip(g, self.moduli))

    def _char_pow(self, x, i, e, inv):
        key = (x, i, e, inv)
        v = self._pow_cache.get(key)
        if v is None:
            base = (self.chars_inv if inv else self.chars)[x][i]
            v = 1 if base == 1 else base ** e
            self._pow_cache[key] = v
        return v

    def char(self, word, gamma, inv=False):
        """chi_word(h^gamma), or its inverse."""
        c = 1
        for i, e in enumerate(gamma):
            if e:
                for x in word:
                    f = self._char_pow(x, i, e, inv)
                    if f != 1:
                        c = c * f
        return c

    def add_rule(self, lhs, rhs: dict):
        lhs = tuple(lhs)
        if not lhs:
            raise ConfigurationError("empty left-hand side")
        if lhs in self.rules:
            raise ConfigurationError(f"duplicate rule for {self.format_word(lhs)}")
        key = self.word_key(lhs)
        clean = {}
        for (g, w), c in rhs.items():
            if not c:
                continue
            w = tuple(w)
            if self.word_key(w) >= key:
                raise ConfigurationError(
                    f"rule {self.format_word(lhs)} -> {self.format_word(w)} does not decrease the order")
            clean[(self.norm_h(g), w)] = c
        self.rules[lhs] = clean
        self.rule_lengths = sorted({len(l) for l in self.rules})
        self._memo.clear()
        self._mm.clear()

    def copy(self, name=None):
        A = PresentedAlgebra(name or self.name, self.field, self.hgens, self.letters,
                             self.chars, meta=self.meta)
        for lhs, rhs in self.rules.items():
            A.rules[lhs] = dict(rhs)
        A.rule_lengths = list(self.rule_lengths)
        A._memo.clear()
        return A

    def add_relation(self, p: "NCPoly | dict"):
        """Orient a relation p = 0 by its leading word and install it."""
        terms = p.terms if isinstance(p, NCPoly) else p
        if not terms:
            return None
        lead = max((w for (_, w) in terms), key=self.word_key)
        lead_terms = [(g, c) for (g, w), c in terms.items() if w == lead]
        if len(lead_terms) != 1:
            raise ConfigurationError("leading word occurs with several H-parts")
        g0, c0 = lead_terms[0]
        # h^g0 lead = -(rest)/c0  =>  lead = -h^-g0 rest / c0
        ng = self.neg_h(g0)
        scale = -inverse(c0)
        rhs = {}
        for (g, w), c in terms.items():
            if w == lead:
                continue
            _add(rhs, (self.add_h(ng, g), w), c * scale)
        self.add_rule(lead, rhs)
        return lead

    # ------------------------------------------------------------ rewriting
    def _budget_from_env(self):
        v = os.environ.get(STEP_BUDGET_ENV)
        return int(v) if v else DEFAULT_STEP_BUDGET

    def _find_rule(self, w):
        for L in self.rule_lengths:
            if L > len(w):
                break
            key = w[-L:]
            r = self.rules.get(key)
            if r is not None:
                return L, r
        return None

    def _nf_word(self, w):
        """Normal form of a word as a tuple of ((gamma, word), coeff)."""
        res = self._memo.get(w)
        if res is not None:
            return res
        if len(w) <= 1:
            hit = self._find_rule(w) if w else None
            res = self._reduce_at_end(w, hit) if hit else (((self.zero_h, w), 1),)
            self._memo[w] = res
            return res
        prefix = self._nf_word(w[:-1])
        x = w[-1:]
        out = {}
        for (g, u), c in prefix:
            for (g2, u2), c2 in self._nf_append(u + x):
                _add(out, (self.add_h(g, g2), u2), c * c2)
        res = tuple(out.items())
        self._memo[w] = res
        return res

    def _nf_append(self, w):
        # w = u x with u irreducible: any redex is a suffix of w
        res = self._memo.get(w)
        if res is not None:
            return res
        hit = self._find_rule(w)
        if hit is None:
            res = (((self.zero_h, w), 1),)
        else:
            res = self._reduce_at_end(w, hit)
        self._memo[w] = res
        return res

    def _reduce_at_end(self, w, hit):
        L, rhs = hit
        self._steps += 1
        if self._steps > self._budget:
            raise ResourceError(f"rewriting exceeded the step budget of {self._budget}")
        u = w[:-L]
        out = {}
        for (d, v), c in rhs.items():
            cc = c
            if u and any(d):
                f = self.char(u, d, inv=True)
                if f != 1:
                    cc = cc * f
            for (g2, u2), c2 in self._nf_word(u + v):
                _add(out, (self.add_h(d, g2), u2), cc * c2)
        return tuple(out.items())

    def nf_terms(self, terms: dict) -> dict:
        self._steps = 0
        self._budget = self._budget_from_env()
        out = {}
        for (g, w), c in terms.items():
            for (g2, u), c2 in self._nf_word(w):
                _add(out, (self.add_h(g, g2), u), c * c2)
        return out

    def mul_terms(self, a: dict, b: dict) -> dict:
        """Normal form of the product of two term dicts."""
        raw = {}
        for (g1, w1), c1 in a.items():
            for (g2, w2), c2 in b.items():
                c = c1 * c2
                if w1 and any(g2):
                    f = self.char(w1, g2, inv=True)
                    if f != 1:
                        c = c * f
                _add(raw, (self.add_h(g1, g2), w1 + w2), c)
        return self.nf_terms(raw)

    def mono_mul(self, m1, m2) -> dict:
        """Normal form of the product of two monomials (cached)."""
        key = (m1, m2)
        r = self._mm.get(key)
        if r is None:
            r = self._mm[key] = self.mul_terms({m1: 1}, {m2: 1})
        return r

    def mono_times(self, m1, m2):
        """Raw (unreduced) product of two monomials: (coeff, monomial)."""
        (g1, w1), (g2, w2) = m1, m2
        c = 1
        if w1 and any(g2):
            c = self.char(w1, g2, inv=True)
        return c, (self.add_h(g1, g2), w1 + w2)

    # ------------------------------------------------------------ elements
    def element(self, terms: dict) -> "NCPoly":
        return NCPoly(self, {k: v for k, v in terms.items() if v})

    def zero(self) -> "NCPoly":
        return NCPoly(self, {})

    def one(self) -> "NCPoly":
        return NCPoly(self, {(self.zero_h, ()): 1})

    def scalar(self, c) -> "NCPoly":
        return NCPoly(self, {(self.zero_h, ()): c} if c else {})

    def gen(self, name: str) -> "NCPoly":
        if name in self.letter_index:
            return NCPoly(self, {(self.zero_h, (self.letter_index[name],)): 1})
        if name in self.h_index:
            g = [0] * self.nh
            g[self.h_index[name]] = 1
            return NCPoly(self, {(self.norm_h(tuple(g)), ()): 1})
        raise InputError(f"unknown generator {name!r}")

    def h(self, gamma) -> "NCPoly":
        return NCPoly(self, {(self.norm_h(tuple(gamma)), ()): 1})

    def word(self, names) -> "NCPoly":
        return NCPoly(self, {(self.zero_h, tuple(self.letter_index[n] for n in names)): 1})

    def monomial(self, gamma, word) -> "NCPoly":
        return NCPoly(self, {(self.norm_h(tuple(gamma)), tuple(word)): 1})

    def normal_form(self, p: "NCPoly") -> "NCPoly":
        self._check_owner(p)
        return NCPoly(self, self.nf_terms(p.terms))

    def multiply(self, p: "NCPoly", r: "NCPoly") -> "NCPoly":
        self._check_owner(p)
        self._check_owner(r)
        return NCPoly(self, self.mul_terms(p.terms, r.terms))

    def commutator(self, p: "NCPoly", r: "NCPoly") -> "NCPoly":
        return self.multiply(p, r) - self.multiply(r, p)

    def _check_owner(self, p):
        if p.algebra is not self and p.algebra.signature() != self.signature():
            raise InputError("polynomial belongs to a different algebra")

    def signature(self):
        return (tuple(g.name for g in self.letters), tuple(h.name for h in self.hgens))

    def is_normal(self, word) -> bool:
        w = tuple(word)
        for L in self.rule_lengths:
            for i in range(len(w) - L + 1):
                if w[i:i + L] in self.rules:
                    return False
        return True

    def normal_words(self, maxlen: int):
        """All irreducible words of length <= maxlen (breadth first)."""
        out = [()]
        layer = [()]
        for _ in range(maxlen):
            nxt = []
            for u in layer:
                for x in range(len(self.letters)):
                    w = u + (x,)
                    if self._find_rule(w) is None:
                        nxt.append(w)
            out.extend(nxt)
            layer = nxt
            if not layer:
                break
        return out

    # ------------------------------------------------------------ printing
    def format_word(self, w) -> str:
        parts = []
        i = 0
        while i < len(w):
            j = i
            while j < len(w) and w[j] == w[i]:
                j += 1
            nm = self.letters[w[i]].name
            parts.append(nm if j - i == 1 else f"{nm}^{j - i}")
            i = j
        return "*".join(parts)

    def format_monomial(self, m) -> str:
        g, w = m
        parts = []
        for h, e in zip(self.hgens, g):
            if e:
                parts.append(h.name if e == 1 else f"{h.name}^{e}")
        if w:
            parts.append(self.format_word(w))
        return "*".join(parts)

    def sort_terms(self, terms: dict):
        return sorted(terms.items(), key=lambda kv: (len(kv[0][1]), kv[0][1], kv[0][0]), reverse=True)

    def format(self, terms: dict) -> str:
        if not terms:
            return "0"
        pieces = []
        for m, c in self.sort_terms(terms):
            neg = format_scalar(c).startswith("-")
            body = _format_term(self.format_monomial(m), -c if neg else c)
            pieces.append((neg, body))
        out = ("-" if pieces[0][0] else "") + pieces[0][1]
        for neg, body in pieces[1:]:
            out += (" - " if neg else " + ") + body
        return out

    # ------------------------------------------------------------ parsing
    def parse(self, text: str) -> "NCPoly":
        return _Parser(self, text).parse()

    # ------------------------------------------------------------ confluence
    def check_local_confluence(self, maxdeg: int) -> ConfluenceReport:
        if maxdeg < 2:
            raise InputError("maxdeg must be at least 2")
        rep = ConfluenceReport(maxdeg)
        self._check_h_compatibility(rep)
        lhss = sorted(self.rules, key=self.word_key)
        for l1 in lhss:
            for l2 in lhss:
                # proper overlaps: suffix of l1 equals prefix of l2
                for k in range(1, min(len(l1), len(l2))):
                    if l1[-k:] != l2[:k] or len(l1) + len(l2) - k > maxdeg:
                        continue
                    word = l1 + l2[k:]
                    left = self._context(None, self.rules[l1], l2[k:])
                    right = self._context(l1[:-k], self.rules[l2], ())
                    self._compare(rep, word, left, right)
                # inclusions: l2 strictly inside l1
                if l1 != l2 and len(l2) < len(l1) and len(l1) <= maxdeg:
                    for p in range(len(l1) - len(l2) + 1):
                        if l1[p:p + len(l2)] == l2:
                            left = self._context(None, self.rules[l1], ())
                            right = self._context(l1[:p], self.rules[l2], l1[p + len(l2):])
                            self._compare(rep, l1, left, right)
        return rep

    def _context(self, prefix, rhs, suffix):
        raw = {}
        prefix = prefix or ()
        for (d, v), c in rhs.items():
            cc = c
            if prefix and any(d):
                cc = cc * self.char(prefix, d, inv=True)
            _add(raw, (d, prefix + v + tuple(suffix)), cc)
        return self.nf_terms(raw)

    def _compare(self, rep, word, left, right):
        rep.checked += 1
        diff = dict(left)
        for k, c in right.items():
            _add(diff, k, -c)
        if diff:
            rep.failures.append(f"{self.format_word(word)}: difference {self.format(diff)}")

    def _check_h_compatibility(self, rep):
        for x, row in enumerate(self.chars):
            for i, (c, m) in enumerate(zip(row, self.moduli)):
                if m and c ** m != 1:
                    rep.failures.append(
                        f"character of {self.letters[x].name} at {self.hgens[i].name} has order not dividing {m}")
        for lhs, rhs in self.rules.items():
            for (_, v), _c in rhs.items():
                for i in range(self.nh):
                    e = tuple(1 if j == i else 0 for j in range(self.nh))
                    if self.char(lhs, e) != self.char(v, e):
                        rep.failures.append(
                            f"rule {self.format_word(lhs)} is not homogeneous for {self.hgens[i].name}")
                        break

    # ------------------------------------------------------------ json
    def to_json(self) -> dict:
        return {
            "name": self.name,
            "field": str(self.field),
            "hgens": [{"name": h.name, "modulus": h.modulus} for h in self.hgens],
            "generators": [{"name": g.name, "sort": g.sort, "index": g.index,
                            "degree": list(g.degree),
                            "chars": [scalar_to_json(c) for c in self.chars[i]]}
                           for i, g in enumerate(self.letters)],
            "rules": [{"lhs": [self.letters[x].name for x in lhs],
                       "rhs": terms_to_json(self, rhs)}
                      for lhs, rhs in sorted(self.rules.items(), key=lambda kv: self.word_key(kv[0]))],
        }

    @staticmethod
    def from_json(obj: dict) -> "PresentedAlgebra":
        try:
            fld = FieldSpec.parse(obj.get("field", "rationals"))
            hgens = [HGenerator(h["name"], int(h.get("modulus", 0))) for h in obj.get("hgens", [])]
            letters = [Generator(g["name"], g["sort"], int(g.get("index", 0)), tuple(g.get("degree", ())))
                       for g in obj["generators"]]
            chars = [tuple(scalar_from_json(c) for c in g.get("chars", [1] * len(hgens)))
                     for g in obj["generators"]]
            A = PresentedAlgebra(obj.get("name", "algebra"), fld, hgens, letters, chars)
            for r in obj.get("rules", []):
                lhs = tuple(A.letter_index[n] for n in r["lhs"])
                A.add_rule(lhs, terms_from_json(A, r["rhs"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed algebra description: {exc}") from exc
        return A

    def __eq__(self, other):
        if not isinstance(other, PresentedAlgebra):
            return NotImplemented
        return (self.field == other.field and self.hgens == other.hgens and self.letters == other.letters
                and self.chars == other.chars and self.rules == other.rules)

    __hash__ = object.__hash__

    def __repr__(self):
        return f"PresentedAlgebra({self.name!r}, {len(self.letters)} letters, {len(self.rules)} rules)"

    def rule_lines(self):
        out = []
        for lhs, rhs in sorted(self.rules.items(), key=lambda kv: self.word_key(kv[0])):
            out.append(f"{self.format_word(lhs)} -> {self.format(rhs)}")
        return out


def _format_term(mono: str, c) -> str:
    if not mono:
        return format_scalar(c)
    if c == 1:
        return mono
    s = format_scalar(c)
    if re.fullmatch(r"\d+", s):
        return f"{s}*{mono}"
    return f"({s})*{mono}"


def terms_to_json(A: PresentedAlgebra, terms: dict):
    return [{"h": list(g), "word": [A.letters[x].name for x in w], "coeff": scalar_to_json(c)}
            for (g, w), c in A.sort_terms(terms)]


def terms_from_json(A: PresentedAlgebra, items) -> dict:
    out = {}
    for it in items:
        g = A.norm_h(tuple(it.get("h", [0] * A.nh)))
        w = tuple(A.letter_index[n] for n in it["word"])
        _add(out, (g, w), scalar_from_json(it["coeff"]))
    return out


class NCPoly:
    """A finite linear combination of monomials of a presented algebra."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: PresentedAlgebra, terms: dict):
        self.algebra = algebra
        self.terms = terms

    def _lift(self, other):
        if isinstance(other, NCPoly):
            return other
        return self.algebra.scalar(other)

    def __add__(self, other):
        o = self._lift(other)
        d = dict(self.terms)
        for k, c in o.terms.items():
            _add(d, k, c)
        return NCPoly(self.algebra, d)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly(self.algebra, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c):
        if not c:
            return NCPoly(self.algebra, {})
        return NCPoly(self.algebra, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            return self.algebra.multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, c):
        return self.scale(inverse(c))

    def __pow__(self, n: int):
        if n < 0:
            if len(self.terms) == 1:
                (g, w), c = next(iter(self.terms.items()))
                if not w:
                    A = self.algebra
                    return NCPoly(A, {(A.norm_h(tuple(n * a for a in g)), ()): inverse(c) ** (-n)})
            raise InputError("negative powers are only defined for H-monomials")
        out = self.algebra.one()
        for _ in range(n):
            out = out * self
        return out

    def normal_form(self):
        return self.algebra.normal_form(self)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, gamma, word):
        return self.terms.get((tuple(gamma), tuple(word)), 0)

    def __eq__(self, other):
        if isinstance(other, NCPoly):
            return self.terms == other.terms
        if not self.terms:
            return not other
        return self.terms == {(self.algebra.zero_h, ()): other}

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        return self.algebra.format(self.terms)

    __repr__ = __str__

    def degree(self) -> int:
        return max((len(w) + sum(abs(a) for a in g) for (g, w) in self.terms), default=0)


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\^)|(\*)|(\+)|(-)|(/)|(\()|(\)))")


class _Parser:
    def __init__(self, A: PresentedAlgebra, text: str):
        self.A = A
        self.text = text
        self.toks = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise InputError(f"syntax error at position {pos}: {text[pos:pos + 10]!r}")
            kind = m.lastindex
            self.toks.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None, len(self.text))

    def take(self, kind=None):
        t = self.peek()
        if kind is not None and t[0] != kind:
            raise InputError(f"syntax error at position {t[2]}: unexpected {t[1]!r}")
        self.i += 1
        return t

    def parse(self) -> NCPoly:
        if not self.toks:
            raise InputError("empty expression")
        p = self.expr()
        t = self.peek()
        if t[0] is not None:
            raise InputError(f"syntax error at position {t[2]}: unexpected {t[1]!r}")
        return p

    def expr(self):
        sign = 1
        if self.peek()[0] in (5, 6):
            sign = -1 if self.take()[0] == 6 else 1
        p = self.term() if sign == 1 else -self.term()
        while self.peek()[0] in (5, 6):
            op = self.take()[0]
            t = self.term()
            p = p + t if op == 5 else p - t
        return p

    def term(self):
        p = self.power()
        while self.peek()[0] in (4, 7):
            op = self.take()[0]
            r = self.power()
            if op == 4:
                p = _raw_product(p, r)
            else:
                c = _as_scalar(r)
                if c is None:
                    raise InputError("division only by scalars")
                p = p.scale(inverse(c))
        return p

    def power(self):
        base = self.atom()
        if self.peek()[0] == 3:
            self.take()
            neg = False
            if self.peek()[0] == 6:
                self.take()
                neg = True
            t = self.take(1)
            n = int(t[1])
            if neg:
                n = -n
            if n < 0:
                c = _as_scalar(base)
                if c is not None:
                    return self.A.scalar(inverse(c) ** (-n))
                if len(base.terms) == 1:
                    (g, w), c = next(iter(base.terms.items()))
                    if not w:
                        return base ** n
                raise InputError(f"negative power outside H at position {t[2]}")
            out = self.A.one()
            for _ in range(n):
                out = _raw_product(out, base)
            return out
        return base

    def atom(self):
        kind, val, pos = self.take()
        A = self.A
        if kind == 1:
            return A.scalar(Fraction(int(val)))
        if kind == 2:
            if val in A.letter_index or val in A.h_index:
                return A.gen(val)
            if val == "q" and A.field.kind == "q":
                return A.scalar(QFunc.q_power(1))
            if val in ("zeta", "z") and A.field.kind == "cyclotomic":
                return A.scalar(Cyclo.zeta(A.field.order))
            raise InputError(f"unknown identifier {val!r} at position {pos}")
        if kind == 8:
            p = self.expr()
            self.take(9)
            return p
        if kind == 6:
            return -self.power()
        raise InputError(f"syntax error at position {pos}: unexpected {val!r}")


def _as_scalar(p: NCPoly):
    if not p.terms:
        return 0
    if len(p.terms) == 1:
        (g, w), c = next(iter(p.terms.items()))
        if not w and not any(g):
            return c
    return None


def _raw_product(p: NCPoly, r: NCPoly) -> NCPoly:
    """Concatenation product without rewriting (H still moved left)."""
    A = p.algebra
    out = {}
    for m1, c1 in p.terms.items():
        for m2, c2 in r.terms.items():
            f, m = A.mono_times(m1, m2)
            _add(out, m, c1 * c2 * f)
    return NCPoly(A, out)


def raw_product(p: NCPoly, r: NCPoly) -> NCPoly:
    return _raw_product(p, r)


def free_algebra(letters, field: FieldSpec = QQ, name="free") -> PresentedAlgebra:
    gens = [l if isinstance(l, Generator) else Generator(l, "B", i) for i, l in enumerate(letters)]
    return PresentedAlgebra(name, field, [], gens, {})
