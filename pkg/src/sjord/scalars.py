"""Exact coefficient rings.

Three rings are used throughout the package:

* ``HPoly``  -- polynomials in the deformation parameter ``h`` over Q,
* ``QRat``   -- the rational-function field Q(q), kept as a reduced ratio of
  polynomials in ``q`` (``QPoly``),
* ``HQPoly`` -- polynomials in ``h`` whose coefficients live in Q(q); this is
  the bookkeeping ring for the contraction, where ``h`` and ``q`` mix.

Rationals are ``fractions.Fraction``.  Everything is immutable.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _Rational

Rational = Fraction

__all__ = [
    "Rational",
    "DivisionByZero",
    "PoleAtOne",
    "DivisibilityFailure",
    "Poly",
    "HPoly",
    "QPoly",
    "QRat",
    "HQPoly",
    "hpoly_arith",
    "hpoly_eval_h0",
    "qrat_arith",
    "qrat_limit_q1",
    "q_number",
    "q_factorial",
]


class DivisionByZero(ZeroDivisionError):
    pass


class PoleAtOne(ArithmeticError):
    """A rational function in q has a genuine pole at q = 1."""


class DivisibilityFailure(ArithmeticError):
    """Exact division by a power of h left a remainder."""


def _format_rational(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


class Poly:
    """Dense univariate polynomial with immutable coefficient tuple.

    ``coeffs[k]`` is the coefficient of ``var**k``.  Subclasses fix the
    variable name and the coefficient ring.
    """

    __slots__ = ("coeffs", "_hash")
    var = "x"

    def __init__(self, coeffs=()):
        coeffs = tuple(self._coef(c) for c in coeffs)
        n = len(coeffs)
        while n and not coeffs[n - 1]:
            n -= 1
        self.coeffs = coeffs[:n]
        self._hash = None

    # -- coefficient ring hooks -------------------------------------------
    @staticmethod
    def _coef(c):
        return Fraction(c)

    @classmethod
    def _coef_zero(cls):
        return Fraction(0)

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, cls):
            return other
        if isinstance(other, (int, _Rational)):
            return cls((other,))
        return NotImplemented

    @classmethod
    def _raw(cls, coeffs):
        # trusted constructor: coefficients already in the ring
        obj = object.__new__(cls)
        n = len(coeffs)
        while n and not coeffs[n - 1]:
            n -= 1
        obj.coeffs = tuple(coeffs[:n])
        obj._hash = None
        return obj

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls):
        return cls._raw(())

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def gen(cls):
        return cls((0, 1))

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1):
        return cls((0,) * k + (c,))

    # -- basic queries ----------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self._coef_zero()

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else self._coef_zero()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, self.coeffs))
        return self._hash

    # -- ring operations --------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return self._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return self._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self._raw(())
        out = [self._coef_zero()] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
        return self._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = self.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        return self._raw([c * x for x in self.coeffs])

    def shift_down(self, k: int = 1):
        """Exact division by ``var**k``."""
        if any(self.coeff(i) for i in range(min(k, len(self.coeffs)))):
            raise DivisibilityFailure(f"{self} is not divisible by {self.var}^{k}")
        return self._raw(self.coeffs[k:])

    def __call__(self, x):
        acc = self._coef_zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def map_coeffs(self, fn, cls=None):
        cls = cls or type(self)
        return cls._raw([fn(c) for c in self.coeffs])

    # -- Euclidean structure (field coefficients) --------------------------
    def __divmod__(self, other):
        other = self._coerce(other)
        if not other:
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return self.zero(), self
        quot = [self._coef_zero()] * (dq + 1)
        lead = other.lead
        for k in range(dq, -1, -1):
            c = rem[k + len(other.coeffs) - 1] / lead
            quot[k] = c
            if c:
                for j, y in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * y
        return self._raw(quot), self._raw(rem[: len(other.coeffs) - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if not self.coeffs:
            return self
        lead = self.lead
        return self._raw([c / lead for c in self.coeffs])

    @classmethod
    def gcd(cls, a, b):
        while b:
            a, b = b, a % b
        return a.monic()

    # -- rendering --------------------------------------------------------
    def _terms(self):
        """(exponent, coefficient) pairs in descending exponent order."""
        return [(k, c) for k, c in reversed(list(enumerate(self.coeffs))) if c]

    def __str__(self):
        return _render_terms(self._terms(), self.var)

    def __repr__(self):
        return f"{type(self).__name__}({self})"


def _render_terms(terms, var) -> str:
    if not terms:
        return "0"
    parts = []
    for k, c in terms:
        neg = c < 0
        mag = -c if neg else c
        if k == 0:
            body = _format_rational(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{_format_rational(mag)}*{mono}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


class HPoly(Poly):
    """Polynomial in the deformation parameter h with rational coefficients."""

    __slots__ = ()
    var = "h"

    def eval_h0(self) -> Fraction:
        return self.coeff(0)


class QPoly(Poly):
    __slots__ = ()
    var = "q"


class QRat:
    """Reduced element of Q(q): ``num/den`` with gcd 1 and monic ``den``."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, *, _reduced=False):
        num = num if isinstance(num, QPoly) else QPoly._coerce(num)
        if num is NotImplemented:
            raise TypeError("QRat numerator must be a QPoly or rational")
        if den is None:
            den = QPoly.one()
        elif not isinstance(den, QPoly):
            den = QPoly._coerce(den)
        if not den:
            raise DivisionByZero("zero denominator")
        if not _reduced:
            if not num:
                den = QPoly.one()
            else:
                g = QPoly.gcd(num, den)
                if g.degree > 0:
                    num, den = num // g, den // g
                lead = den.lead
                if lead != 1:
                    num, den = num.scale(1 / lead), den.scale(1 / lead)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def q(cls):
        return cls(QPoly.gen())

    @classmethod
    def one(cls):
        return cls(QPoly.one(), _reduced=True)

    @classmethod
    def zero(cls):
        return cls(QPoly.zero(), _reduced=True)

    @classmethod
    def q_power(cls, k: int):
        """q**k for any integer k."""
        if k >= 0:
            return cls(QPoly.monomial(k), _reduced=True)
        return cls(QPoly.one(), QPoly.monomial(-k), _reduced=True)

    @classmethod
    def coerce(cls, other):
        if isinstance(other, QRat):
            return other
        if isinstance(other, QPoly):
            return cls(other, _reduced=True)
        if isinstance(other, (int, _Rational)):
            return cls(QPoly((other,)), _reduced=True)
        return NotImplemented

    def __bool__(self):
        return bool(self.num)

    def is_zero(self):
        return not self.num

    def __eq__(self, other):
        other = self.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("QRat", self.num.coeffs, self.den.coeffs))
        return self._hash

    def __add__(self, other):
        other = self.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return QRat(self.num + other.num, self.den)
        return QRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QRat(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = self.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num or not other.num:
            return QRat(QPoly.zero(), _reduced=True)
        return QRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise DivisionByZero("division by the zero rational function")
        return QRat(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if n < 0:
            return QRat.coerce(1) / (self ** (-n))
        return QRat(self.num**n, self.den**n, _reduced=True)

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise DivisionByZero(f"denominator vanishes at q={x}")
        return self.num(x) / d

    def limit_q1(self) -> Fraction:
        d = self.den(1)
        if d == 0:
            raise PoleAtOne(f"{self} has a pole at q=1")
        return self.num(1) / d

    def __str__(self):
        if not self.num:
            return "0"
        den_terms = [(k, c) for k, c in enumerate(self.den.coeffs) if c]
        if len(den_terms) == 1:
            # monomial denominator (monic): render as a Laurent polynomial
            shift = den_terms[0][0]
            return _render_terms([(k - shift, c) for k, c in self.num._terms()], "q")
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"QRat({self})"


class HQPoly(Poly):
    """Polynomial in h with coefficients in Q(q)."""

    __slots__ = ()
    var = "h"

    @staticmethod
    def _coef(c):
        out = QRat.coerce(c)
        if out is NotImplemented:
            raise TypeError(f"cannot use {c!r} as a Q(q) coefficient")
        return out

    @classmethod
    def _coef_zero(cls):
        return QRat.coerce(0)

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, cls):
            return other
        if isinstance(other, (int, _Rational, QRat, QPoly)):
            return cls((other,))
        if isinstance(other, HPoly):
            return cls(other.coeffs)
        return NotImplemented

    def limit_q1(self) -> HPoly:
        """Coefficientwise q -> 1 limit, landing in Q[h]."""
        return HPoly([c.limit_q1() for c in self.coeffs])

    def __str__(self):
        terms = self._terms()
        if not terms:
            return "0"
        out = []
        for k, c in terms:
            mono = "" if k == 0 else ("*h" if k == 1 else f"*h^{k}")
            out.append(f"({c}){mono}")
        return " + ".join(out)


# -- operation-level API ----------------------------------------------------

def hpoly_arith(a: HPoly, b: HPoly, op: str):
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "eq":
        return a == b
    raise ValueError(f"unknown op {op!r}")


def hpoly_eval_h0(a: HPoly) -> Fraction:
    return a.coeff(0)


def qrat_arith(a: QRat, b: QRat, op: str):
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "eq":
        return a == b
    raise ValueError(f"unknown op {op!r}")


def qrat_limit_q1(a: QRat) -> Fraction:
    return a.limit_q1()


def q_number(n: int, base: QRat | None = None) -> QRat:
    """[n]_b = (b^n - b^-n)/(b - b^-1); ``base`` defaults to q."""
    b = QRat.q() if base is None else base
    one = QRat.coerce(1)
    return (b**n - (one / b) ** n) / (b - one / b)


def q_factorial(n: int, base: QRat | None = None) -> QRat:
    out = QRat.coerce(1)
    for k in range(1, n + 1):
        out = out * q_number(k, base)
    return out
