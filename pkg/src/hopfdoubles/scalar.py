"""Exact scalars: rationals, rational functions in q, cyclotomic numbers.

Rationals are plain ``fractions.Fraction`` values (ints are accepted wherever a
scalar is expected).  Elements of Q(q) are :class:`QFunc`, stored as a coprime
pair of polynomials with monic denominator.  Elements of Q(zeta_N) are
:class:`Cyclo`, stored as a coefficient vector reduced modulo Phi_N.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from flint import fmpq, fmpq_poly

from .errors import ConfigurationError, EvaluationError, InputError

Rational = (int, Fraction)


def _frac(c) -> Fraction:
    if isinstance(c, fmpq):
        return Fraction(int(c.p), int(c.q))
    return Fraction(c)


def _poly_key(p: fmpq_poly) -> tuple:
    return tuple(_frac(c) for c in p.coeffs())


_X = fmpq_poly([0, 1])
_ONE = fmpq_poly([1])


class QFunc:
    """Element of Q(q) in canonical form num/den, gcd 1, den monic."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, _canonical=False):
        if not isinstance(num, fmpq_poly):
            num = fmpq_poly([_to_fmpq(num)])
        if den is None:
            den = _ONE
        elif not isinstance(den, fmpq_poly):
            den = fmpq_poly([_to_fmpq(den)])
        if not _canonical:
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            if num == 0:
                den = _ONE
            else:
                g = num.gcd(den)
                if g != 1:
                    num = num // g
                    den = den // g
                lead = den.coeffs()[-1]
                if lead != 1:
                    num = num / lead
                    den = den / lead
        self.num = num
        self.den = den
        self._hash = None

    # constructors
    @staticmethod
    def q_power(k: int) -> "QFunc":
        if k >= 0:
            return QFunc(_X ** k, _ONE, _canonical=True)
        return QFunc(_ONE, _X ** (-k), _canonical=True)

    @staticmethod
    def from_laurent(coeffs: dict) -> "QFunc":
        """Build sum c_k q^k from a mapping k -> c."""
        if not coeffs:
            return QFunc(0)
        lo = min(coeffs)
        shift = min(lo, 0)
        top = max(coeffs) - shift
        cs = [0] * (top + 1)
        for k, c in coeffs.items():
            cs[k - shift] = _to_fmpq(c)
        return QFunc(fmpq_poly(cs), _X ** (-shift))

    def is_zero(self) -> bool:
        return self.num == 0

    def is_constant(self) -> bool:
        return self.num.degree() <= 0 and self.den.degree() == 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant")
        return _frac(self.num[0])

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, QFunc):
            return other
        if isinstance(other, Rational) or isinstance(other, fmpq):
            return QFunc(other)
        if isinstance(other, Cyclo):
            raise ConfigurationError("cannot mix Q(q) and cyclotomic scalars")
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return QFunc(self.num + o.num, self.den)
        return QFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return QFunc(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "QFunc":
        if self.num == 0:
            raise ZeroDivisionError("inverse of zero")
        return QFunc(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return QFunc(self.num ** n, self.den ** n, _canonical=True)

    def __eq__(self, other):
        if isinstance(other, QFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, Rational):
            return self.den == 1 and self.num == fmpq_poly([_to_fmpq(other)])
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.den == 1 and self.num.degree() <= 0:
                self._hash = hash(_frac(self.num[0]))
            else:
                self._hash = hash((_poly_key(self.num), _poly_key(self.den)))
        return self._hash

    def __bool__(self):
        return self.num != 0

    def evaluate(self, q0) -> Fraction:
        q0 = _to_fmpq(q0)
        d = self.den(q0)
        if d == 0:
            raise EvaluationError(f"pole at q = {q0}")
        return _frac(self.num(q0) / d)

    def laurent(self):
        """Return {k: c} if self is a Laurent polynomial, else None."""
        dc = self.den.coeffs()
        if any(c != 0 for c in dc[:-1]):
            return None
        s = len(dc) - 1
        return {i - s: _frac(c) for i, c in enumerate(self.num.coeffs()) if c != 0}

    def __repr__(self):
        return format_scalar(self)

    __str__ = __repr__


def _to_fmpq(c):
    if isinstance(c, fmpq):
        return c
    if isinstance(c, Fraction):
        return fmpq(c.numerator, c.denominator)
    if isinstance(c, int):
        return fmpq(c)
    raise TypeError(f"not a rational: {c!r}")


# ---------------------------------------------------------------- cyclotomic

def _mobius(n: int) -> int:
    res, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            res = -res
        p += 1
    if m > 1:
        res = -res
    return res


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> fmpq_poly:
    """Phi_n as the Moebius product of (x^d - 1)^mu(n/d)."""
    if n < 1:
        raise ConfigurationError("cyclotomic order must be positive")
    num, den = _ONE, _ONE
    for d in range(1, n + 1):
        if n % d:
            continue
        mu = _mobius(n // d)
        f = _X ** d - 1
        if mu == 1:
            num = num * f
        elif mu == -1:
            den = den * f
    quo, rem = divmod(num, den)
    assert rem == 0
    return quo


class Cyclo:
    """Element of Q(zeta_N) as a polynomial in zeta reduced mod Phi_N."""

    __slots__ = ("N", "poly", "_hash")

    def __init__(self, N: int, poly, _reduced=False):
        if not isinstance(poly, fmpq_poly):
            if isinstance(poly, (list, tuple)):
                poly = fmpq_poly([_to_fmpq(c) for c in poly])
            else:
                poly = fmpq_poly([_to_fmpq(poly)])
        if not _reduced:
            poly = poly % cyclotomic_polynomial(N)
        self.N = N
        self.poly = poly
        self._hash = None

    @staticmethod
    def zeta(N: int, k: int = 1) -> "Cyclo":
        return Cyclo(N, _X ** (k % N))

    def _coerce(self, other):
        if isinstance(other, Cyclo):
            if other.N != self.N:
                raise ConfigurationError(f"cyclotomic orders differ: {self.N} vs {other.N}")
            return other
        if isinstance(other, Rational):
            return Cyclo(self.N, fmpq_poly([_to_fmpq(other)]), _reduced=True)
        if isinstance(other, QFunc):
            raise ConfigurationError("cannot mix Q(q) and cyclotomic scalars")
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Cyclo(self.N, self.poly + o.poly, _reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.N, -self.poly, _reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Cyclo(self.N, self.poly - o.poly, _reduced=True)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Cyclo(self.N, o.poly - self.poly, _reduced=True)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Cyclo(self.N, self.poly * o.poly)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclo":
        if self.poly == 0:
            raise ZeroDivisionError("inverse of zero")
        g, s, _ = self.poly.xgcd(cyclotomic_polynomial(self.N))
        # g is a nonzero constant since Phi_N is irreducible
        return Cyclo(self.N, s / g[0])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = Cyclo(self.N, _ONE, _reduced=True)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Cyclo):
            return self.N == other.N and self.poly == other.poly
        if isinstance(other, Rational):
            return self.poly == fmpq_poly([_to_fmpq(other)])
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.poly.degree() <= 0:
                self._hash = hash(_frac(self.poly[0]))
            else:
                self._hash = hash((self.N, _poly_key(self.poly)))
        return self._hash

    def __bool__(self):
        return self.poly != 0

    def is_zero(self) -> bool:
        return self.poly == 0

    def coefficients(self) -> list:
        return [_frac(c) for c in self.poly.coeffs()]

    def __repr__(self):
        return format_scalar(self)

    __str__ = __repr__


# ---------------------------------------------------------------- fields

KINDS = ("rationals", "q", "cyclotomic")


@dataclass(frozen=True)
class FieldSpec:
    kind: str = "rationals"
    order: int = 1

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConfigurationError(f"unknown field kind {self.kind!r}")
        if self.kind == "cyclotomic" and self.order < 1:
            raise ConfigurationError("cyclotomic order must be >= 1")

    @staticmethod
    def parse(text: str) -> "FieldSpec":
        text = text.strip()
        if text in ("rationals", "Q", "QQ"):
            return QQ
        if text in ("q", "Q(q)", "rational-functions"):
            return QQ_q
        m = re.fullmatch(r"cyclotomic:(\d+)", text)
        if m:
            return FieldSpec("cyclotomic", int(m.group(1)))
        raise ConfigurationError(f"cannot parse field {text!r}")

    def __str__(self):
        if self.kind == "cyclotomic":
            return f"cyclotomic:{self.order}"
        return self.kind

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def __call__(self, x):
        """Coerce x into this field."""
        if self.kind == "rationals":
            if isinstance(x, Rational):
                return Fraction(x)
            raise ConfigurationError(f"{x!r} is not rational")
        if self.kind == "q":
            if isinstance(x, QFunc):
                return x
            if isinstance(x, Rational):
                return QFunc(x)
            raise ConfigurationError(f"{x!r} is not in Q(q)")
        if isinstance(x, Cyclo):
            if x.N != self.order:
                raise ConfigurationError("cyclotomic order mismatch")
            return x
        if isinstance(x, Rational):
            return Cyclo(self.order, fmpq_poly([_to_fmpq(x)]), _reduced=True)
        raise ConfigurationError(f"{x!r} is not in Q(zeta_{self.order})")

    @property
    def q(self) -> QFunc:
        if self.kind != "q":
            raise ConfigurationError("q is only available in Q(q)")
        return QFunc.q_power(1)

    def zeta(self, k: int = 1) -> Cyclo:
        if self.kind != "cyclotomic":
            raise ConfigurationError("zeta is only available in cyclotomic fields")
        return Cyclo.zeta(self.order, k)

    def contains(self, x) -> bool:
        if isinstance(x, Rational):
            return True
        if self.kind == "q":
            return isinstance(x, QFunc)
        if self.kind == "cyclotomic":
            return isinstance(x, Cyclo) and x.N == self.order
        return False

    # JSON
    def to_json(self, x):
        return scalar_to_json(x)

    def from_json(self, obj):
        return self(scalar_from_json(obj))


QQ = FieldSpec("rationals")
QQ_q = FieldSpec("q")


def cyclotomic(N: int) -> FieldSpec:
    return FieldSpec("cyclotomic", N)


def field_of(*xs) -> FieldSpec:
    """Smallest built-in field containing all the given scalars."""
    found = QQ
    for x in xs:
        if isinstance(x, QFunc):
            f = QQ_q
        elif isinstance(x, Cyclo):
            f = cyclotomic(x.N)
        else:
            continue
        if found is QQ:
            found = f
        elif found != f:
            raise ConfigurationError(f"mixed fields {found} and {f}")
    return found


def is_zero(x) -> bool:
    return not x


def canonicalize(x):
    """Return the canonical representative (scalars are canonical on creation)."""
    if isinstance(x, QFunc):
        if x.is_constant():
            return x
        return QFunc(x.num, x.den)
    if isinstance(x, Cyclo):
        return Cyclo(x.N, x.poly)
    return Fraction(x)


def inverse(x):
    if isinstance(x, (QFunc, Cyclo)):
        return x.inverse()
    return 1 / Fraction(x)


# ---------------------------------------------------------------- q-numbers

q = QFunc.q_power(1)


def q_power(k: int) -> QFunc:
    return QFunc.q_power(k)


def q_int(n: int, field: FieldSpec = QQ_q) -> QFunc:
    """[n]_q = 1 + q^-2 + ... + q^(-2(n-1))."""
    if field.kind != "q":
        raise ConfigurationError("q-integers need the field Q(q)")
    if n < 0:
        raise InputError("q_int needs n >= 0")
    return QFunc.from_laurent({-2 * j: 1 for j in range(n)})


def q_factorial(n: int, field: FieldSpec = QQ_q) -> QFunc:
    if field.kind != "q":
        raise ConfigurationError("q-factorials need the field Q(q)")
    if n < 0:
        raise InputError("q_factorial needs n >= 0")
    out = QFunc(1)
    for k in range(1, n + 1):
        out = out * q_int(k)
    return out


def q_int_sym(n: int) -> QFunc:
    """Balanced quantum integer (q^n - q^-n)/(q - q^-1)."""
    return QFunc.from_laurent({n - 1 - 2 * j: 1 for j in range(n)}) if n >= 0 else -q_int_sym(-n)


def evaluate_at(s, q0) -> Fraction:
    if isinstance(s, QFunc):
        return s.evaluate(q0)
    if isinstance(s, Rational):
        return Fraction(s)
    raise ConfigurationError("evaluate_at needs a scalar in Q(q)")


# ---------------------------------------------------------------- printing

def _fmt_frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _fmt_laurent(terms: dict, var: str = "q") -> str:
    parts = []
    for k in sorted(terms):
        c = terms[k]
        if c == 0:
            continue
        neg = c < 0
        a = -c if neg else c
        if k == 0:
            body = _fmt_frac(a)
        else:
            pw = var if k == 1 else f"{var}^{k}"
            body = pw if a == 1 else f"{_fmt_frac(a)}*{pw}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts) if parts else "0"


def _coeff_dict(p: fmpq_poly, shift: int = 0) -> dict:
    return {i + shift: _frac(c) for i, c in enumerate(p.coeffs()) if c != 0}


def format_scalar(x) -> str:
    if isinstance(x, QFunc):
        lt = x.laurent()
        if lt is not None:
            return _fmt_laurent(lt)
        # balance the denominator as a Laurent polynomial centred at q^0
        dd = _coeff_dict(x.den)
        lo, hi = min(dd), max(dd)
        shift = (lo + hi) // 2
        sign = 1 if dd[lo] > 0 else -1
        den = {k - shift: sign * c for k, c in dd.items()}
        num = {k - shift: sign * c for k, c in _coeff_dict(x.num).items()}
        ns = _fmt_laurent(num)
        if len(num) > 1:
            ns = f"({ns})"
        return f"{ns}/({_fmt_laurent(den)})"
    if isinstance(x, Cyclo):
        return _fmt_laurent(_coeff_dict(x.poly), var=f"z{x.N}")
    return _fmt_frac(Fraction(x))


# ---------------------------------------------------------------- JSON

def scalar_to_json(x):
    if isinstance(x, QFunc):
        nd = _coeff_dict(x.num)
        dd = _coeff_dict(x.den)
        # pull the common power of q out of numerator and denominator
        shift = (min(nd) if nd else 0) - min(dd)
        n0 = min(nd) if nd else 0
        d0 = min(dd)
        num = [_fmt_frac(_frac(c)) for c in x.num.coeffs()[n0:]] if nd else ["0"]
        den = [_fmt_frac(_frac(c)) for c in x.den.coeffs()[d0:]]
        return {"num": num, "den": den, "qshift": shift}
    if isinstance(x, Cyclo):
        return {"N": x.N, "coeffs": [_fmt_frac(c) for c in x.coefficients()]}
    return _fmt_frac(Fraction(x))


def _parse_rational(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        try:
            return Fraction(s.strip())
        except ValueError as exc:
            raise InputError(f"bad rational {s!r}") from exc
    raise InputError(f"bad rational {s!r}")


def scalar_from_json(obj):
    if isinstance(obj, (str, int)):
        return _parse_rational(obj)
    if isinstance(obj, dict):
        if "N" in obj:
            return Cyclo(int(obj["N"]), [_parse_rational(c) for c in obj["coeffs"]])
        if "num" in obj:
            num = fmpq_poly([_to_fmpq(_parse_rational(c)) for c in obj["num"]])
            den = fmpq_poly([_to_fmpq(_parse_rational(c)) for c in obj["den"]])
            value = QFunc(num, den)
            return value * QFunc.q_power(int(obj.get("qshift", 0)))
    raise InputError(f"cannot decode scalar {obj!r}")
