"""Graded pairings between word algebras, Gram matrices and their radicals.

``ev`` on generators extends to words by

    ev(c c', b) = ev(c', b_(1)) ev(c, b_(2))

where the coproduct of a B-word is the braided-multiplicative extension of
``x -> x (x) 1 + 1 (x) x``.  Splitting off the first C-letter gives the
recursion used in ``pair``.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .cartan import CartanDatum
from .errors import DegeneratePairingError, InputError
from .linalg import inverse_matrix, left_nullspace, nullspace
from .ncalg import Generator, NCPoly, PresentedAlgebra, free_algebra
from .report import Report
from .scalar import QQ, QQ_q, QFunc, FieldSpec, inverse


class GradedPair:
    """Two families of primitive letters, a generator pairing and braidings.

    ``braid_b[i][j]`` is the scalar in Psi(b_i (x) b_j) = beta b_j (x) b_i, and
    likewise ``braid_c``.  ``degrees`` are shared multidegrees: b_i and c_i
    both have degree ``degrees_b[i]`` resp. ``degrees_c[i]``.
    """

    def __init__(self, field: FieldSpec, b_names, c_names, degrees_b, degrees_c, ev, braid_b, braid_c,
                 name="pair"):
        self.field = field
        self.b_names = list(b_names)
        self.c_names = list(c_names)
        self.degrees_b = [tuple(d) for d in degrees_b]
        self.degrees_c = [tuple(d) for d in degrees_c]
        self.ev_gen = dict(ev)
        self.braid_b = [list(r) for r in braid_b]
        self.braid_c = [list(r) for r in braid_c]
        self.name = name
        self.rank = len(self.degrees_b[0]) if self.degrees_b else 0
        self._memo = {}

    @staticmethod
    def from_cartan(datum: CartanDatum) -> "GradedPair":
        n = datum.rank
        qq = QFunc.q_power
        B = [[qq(-datum.dot(i, j)) for j in range(n)] for i in range(n)]
        ev = {(i, i): inverse(inverse(datum.q_i(i)) - datum.q_i(i)) for i in range(n)}
        degs = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
        p = GradedPair(QQ_q, datum.names("F"), datum.names("E"), degs, degs, ev, B, B,
                       name=datum.name or "cartan")
        p.datum = datum
        return p

    # ------------------------------------------------------------ words
    def _b(self, w):
        return tuple(self.b_names.index(x) if isinstance(x, str) else x for x in w)

    def _c(self, w):
        return tuple(self.c_names.index(x) if isinstance(x, str) else x for x in w)

    def degree_b(self, w):
        d = [0] * self.rank
        for x in self._b(w):
            for k, v in enumerate(self.degrees_b[x]):
                d[k] += v
        return tuple(d)

    def degree_c(self, w):
        d = [0] * self.rank
        for x in self._c(w):
            for k, v in enumerate(self.degrees_c[x]):
                d[k] += v
        return tuple(d)

    def words_b(self, degree):
        return _words_of_degree(tuple(map(tuple, self.degrees_b)), tuple(degree))

    def words_c(self, degree):
        return _words_of_degree(tuple(map(tuple, self.degrees_c)), tuple(degree))

    # ------------------------------------------------------------ pairing
    def pair(self, cword, bword):
        c, b = self._c(cword), self._b(bword)
        if len(c) != len(b):
            return 0
        return self._pair(c, b)

    def _pair(self, c, b):
        if not c:
            return 0 if b else 1
        key = (c, b)
        v = self._memo.get(key)
        if v is not None:
            return v
        total = 0
        c1, rest = c[0], c[1:]
        for p, x in enumerate(b):
            e = self.ev_gen.get((c1, x), 0)
            if not e:
                continue
            f = e
            for y in b[p + 1:]:
                f = f * self.braid_b[x][y]
            sub = self._pair(rest, b[:p] + b[p + 1:])
            if sub:
                total = total + f * sub
        self._memo[key] = total
        return total

    def braided_antipode_inv_c(self, cword):
        """S^-1 of a C-word as seen by ``pair``: (-1)^n times the reversed word.

        The braiding scalars of the braided antipode cancel against the ones
        picked up by the recursion in ``pair``, so only the sign survives.
        """
        c = self._c(cword)
        return (1 if len(c) % 2 == 0 else -1), tuple(reversed(c))

    def ev_Sinv(self, cword, bword):
        f, rc = self.braided_antipode_inv_c(cword)
        return f * self.pair(rc, bword)

    # ------------------------------------------------------------ gram
    def gram_matrix(self, degree):
        cs, bs = self.words_c(degree), self.words_b(degree)
        return [[self.pair(c, b) for b in bs] for c in cs]

    def radical_basis(self, degree, side="right", algebra: PresentedAlgebra | None = None):
        """Kernel of the Gram matrix as polynomials (B-side for 'right')."""
        degree = tuple(degree)
        G = self.gram_matrix(degree)
        if side == "right":
            words, names = self.words_b(degree), self.b_names
            vecs = nullspace(G, len(words)) if G else []
        elif side == "left":
            words, names = self.words_c(degree), self.c_names
            vecs = left_nullspace(G) if G else []
        else:
            raise InputError("side must be 'right' or 'left'")
        if not words:
            return []
        A = algebra or free_algebra([Generator(n, "B" if side == "right" else "C", i)
                                     for i, n in enumerate(names)], self.field,
                                    name=f"{self.name}-{side}")
        out = []
        for v in vecs:
            terms = {}
            for c, w in zip(v, words):
                if c:
                    terms[(A.zero_h, tuple(A.letter_index[names[x]] for x in w))] = c
            out.append(NCPoly(A, terms))
        return out

    def truncated_coev(self, maxdeg: int):
        """dict (b-word, c-word) -> coefficient, summed over degrees <= maxdeg."""
        out = {}
        for deg in self.degrees_up_to(maxdeg):
            bs, cs = self.words_b(deg), self.words_c(deg)
            if not bs and not cs:
                continue
            G = self.gram_matrix(deg)
            X = inverse_matrix(G) if len(bs) == len(cs) else None
            if X is None:
                raise DegeneratePairingError(f"Gram matrix in degree {deg} is singular")
            for j, b in enumerate(bs):
                for a, c in enumerate(cs):
                    if X[j][a]:
                        out[(b, c)] = X[j][a]
        return out

    def degrees_up_to(self, maxdeg: int):
        out = []
        for t in range(maxdeg + 1):
            for comp in itertools.product(range(t + 1), repeat=self.rank):
                if sum(comp) == t:
                    out.append(comp)
        return out

    def snake_check(self, coev, maxdeg: int) -> Report:
        rep = Report(f"coevaluation snake identities up to degree {maxdeg}")
        bad = None
        for deg in self.degrees_up_to(maxdeg):
            for w in self.words_b(deg):
                img = {}
                for (b, c), x in coev.items():
                    v = self.pair(c, w)
                    if v:
                        img[b] = img.get(b, 0) + x * v
                img = {k: v for k, v in img.items() if v}
                if img != {w: 1}:
                    bad = w
                    break
            if bad:
                break
        rep.add("(ev x Id)(Id x coev) = Id on B", bad is None, bad)
        bad = None
        for deg in self.degrees_up_to(maxdeg):
            for w in self.words_c(deg):
                img = {}
                for (b, c), x in coev.items():
                    v = self.pair(w, b)
                    if v:
                        img[c] = img.get(c, 0) + x * v
                img = {k: v for k, v in img.items() if v}
                if img != {w: 1}:
                    bad = w
                    break
            if bad:
                break
        rep.add("(Id x ev)(coev x Id) = Id on C", bad is None, bad)
        return rep

    def format_word(self, w, side="b"):
        names = self.b_names if side == "b" else self.c_names
        return "*".join(names[x] for x in w) or "1"


@lru_cache(maxsize=None)
def _words_of_degree(degrees, degree):
    """Words (tuples of letter indices) whose letter degrees sum to degree."""
    if not any(degree):
        return [()] if all(d >= 0 for d in degree) else []
    if any(d < 0 for d in degree):
        return []
    out = []
    for x, dx in enumerate(degrees):
        if not any(dx):
            continue
        rest = tuple(a - b for a, b in zip(degree, dx))
        if any(r < 0 for r in rest):
            continue
        for w in _words_of_degree(degrees, rest):
            out.append((x,) + w)
    return sorted(out)


def serre_degrees(datum: CartanDatum):
    """Degrees (1 - a_ij) e_i + e_j for i != j."""
    n = datum.rank
    out = []
    for i in range(n):
        for j in range(n):
            if i != j:
                d = [0] * n
                d[i] = 1 - datum.a(i, j)
                d[j] += 1
                out.append(tuple(d))
    return out


def primitive_pair(field, b_names, c_names, ev, braid=None, degrees=None, name="pair") -> GradedPair:
    """Pairing of tensor algebras on primitive letters, one degree per letter pair."""
    n = len(b_names)
    degs = degrees or [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    beta = braid or [[1] * n for _ in range(n)]
    return GradedPair(field, b_names, c_names, degs, degs, ev, beta, beta, name)


__all__ = ["GradedPair", "serre_degrees", "primitive_pair", "QQ"]
