"""Noncommutative expression trees over generator labels.

Relations, coproduct legs, antipode images and L-operator entries are all
written as :class:`Expr` trees and folded into matrices by a
:class:`Representation`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Callable, Mapping, Optional

from .labels import GeneratorLabel, label_parity
from .scalars import HPoly
from .superlinalg import GradedMatrix, SuperSpace, graded_commutator

__all__ = ["Expr", "Gen", "Scal", "Add", "Mul", "Pow", "Scaled", "DivH", "ParityOp",
           "scalar", "comm", "Representation", "UnknownGenerator", "generators_for"]


class UnknownGenerator(KeyError):
    pass


def _as_hpoly(c) -> HPoly:
    if isinstance(c, HPoly):
        return c
    if isinstance(c, (int, Rational)):
        return HPoly.const(Fraction(c))
    raise TypeError(f"not a scalar: {c!r}")


def _is_scalar(c) -> bool:
    return isinstance(c, (int, Rational, HPoly))


class Expr:
    __slots__ = ()

    @property
    def parity(self) -> int:  # pragma: no cover - overridden
        raise NotImplementedError

    def __add__(self, other):
        if _is_scalar(other):
            other = Scal(_as_hpoly(other))
        if not isinstance(other, Expr):
            return NotImplemented
        left = self.terms if isinstance(self, Add) else (self,)
        right = other.terms if isinstance(other, Add) else (other,)
        return Add(left + right)

    def __radd__(self, other):
        if _is_scalar(other):
            return Scal(_as_hpoly(other)) + self
        return NotImplemented

    def __neg__(self):
        return Scaled(HPoly.const(-1), self)

    def __sub__(self, other):
        if _is_scalar(other):
            other = Scal(_as_hpoly(other))
        return self + (-other)

    def __rsub__(self, other):
        return Scal(_as_hpoly(other)) + (-self)

    def __mul__(self, other):
        if _is_scalar(other):
            return Scaled(_as_hpoly(other), self)
        if not isinstance(other, Expr):
            return NotImplemented
        left = self.factors if isinstance(self, Mul) else (self,)
        right = other.factors if isinstance(other, Mul) else (other,)
        return Mul(left + right)

    def __rmul__(self, other):
        if _is_scalar(other):
            return Scaled(_as_hpoly(other), self)
        return NotImplemented

    def __truediv__(self, c):
        if isinstance(c, (int, Rational)):
            return Scaled(HPoly.const(Fraction(1) / Fraction(c)), self)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are spelled with inverse generators")
        return Pow(self, n)


@dataclass(frozen=True)
class Gen(Expr):
    label: GeneratorLabel
    par: int = 0

    @property
    def parity(self):
        return self.par

    def __str__(self):
        return str(self.label)


@dataclass(frozen=True)
class Scal(Expr):
    value: HPoly

    @property
    def parity(self):
        return 0

    def __str__(self):
        return f"({self.value})"


@dataclass(frozen=True)
class Add(Expr):
    terms: tuple

    @property
    def parity(self):
        return self.terms[0].parity if self.terms else 0

    def __str__(self):
        return "(" + " + ".join(str(t) for t in self.terms) + ")"


@dataclass(frozen=True)
class Mul(Expr):
    factors: tuple

    @property
    def parity(self):
        return sum(f.parity for f in self.factors) % 2

    def __str__(self):
        return "*".join(str(f) for f in self.factors)


@dataclass(frozen=True)
class Pow(Expr):
    base: Expr
    n: int

    @property
    def parity(self):
        return (self.base.parity * self.n) % 2

    def __str__(self):
        return f"{self.base}^{self.n}"


@dataclass(frozen=True)
class Scaled(Expr):
    coeff: HPoly
    expr: Expr

    @property
    def parity(self):
        return self.expr.parity

    def __str__(self):
        return f"({self.coeff})*{self.expr}"


@dataclass(frozen=True)
class DivH(Expr):
    """expr / h**k, evaluated by exact polynomial division."""

    expr: Expr
    k: int = 1

    @property
    def parity(self):
        return self.expr.parity

    def __str__(self):
        return f"({self.expr})/h^{self.k}"


@dataclass(frozen=True)
class ParityOp(Expr):
    """The grading operator (-1)^F of whatever space the expression acts on."""

    @property
    def parity(self):
        return 0

    def __str__(self):
        return "(-1)^F"


def scalar(c) -> Scal:
    return Scal(_as_hpoly(c))


def comm(a: Expr, b: Expr) -> Expr:
    """Graded commutator ab - (-1)^{|a||b|} ba."""
    if a.parity and b.parity:
        return a * b + b * a
    return a * b - b * a


def generators_for(n: int) -> Callable[[GeneratorLabel], Gen]:
    """Factory producing parity-tagged generator leaves for sl(n|1)."""
    def make(label: GeneratorLabel) -> Gen:
        return Gen(label, label_parity(label, n))
    return make


class Representation:
    """A map from generator labels to matrices, folded over expressions.

    Evaluation results are memoised per expression; the cache is only ever
    filled with values that are a pure function of the key, so concurrent
    readers at worst recompute an entry.
    """

    def __init__(self, space: SuperSpace, matrices: Mapping[GeneratorLabel, GradedMatrix],
                 name: str = "", one=None):
        self.space = space
        self.matrices = dict(matrices)
        self.name = name
        self.one = HPoly.one() if one is None else one
        self._cache: dict = {}
        self._identity = GradedMatrix.identity(space, self.one)

    def __contains__(self, label):
        return label in self.matrices

    def matrix(self, label: GeneratorLabel) -> GradedMatrix:
        try:
            return self.matrices[label]
        except KeyError:
            raise UnknownGenerator(f"{label} not in representation {self.name!r}") from None

    @property
    def identity(self) -> GradedMatrix:
        return self._identity

    def eval(self, expr: Expr) -> GradedMatrix:
        hit = self._cache.get(expr)
        if hit is not None:
            return hit
        out = self._eval(expr)
        self._cache[expr] = out
        return out

    def _eval(self, expr: Expr) -> GradedMatrix:
        if isinstance(expr, Gen):
            return self.matrix(expr.label)
        if isinstance(expr, Scal):
            return self._identity.scale(expr.value)
        if isinstance(expr, Scaled):
            return self.eval(expr.expr).scale(expr.coeff)
        if isinstance(expr, Add):
            out: Optional[GradedMatrix] = None
            for t in expr.terms:
                m = self.eval(t)
                out = m if out is None else out + m
            return out if out is not None else GradedMatrix.zero(self.space, 0)
        if isinstance(expr, Mul):
            out = None
            for f in expr.factors:
                m = self.eval(f)
                out = m if out is None else out @ m
            return out if out is not None else self._identity
        if isinstance(expr, Pow):
            return self.eval(expr.base) ** expr.n if expr.n else self._identity
        if isinstance(expr, DivH):
            return self.eval(expr.expr).div_h(expr.k)
        if isinstance(expr, ParityOp):
            return self.space.parity_operator(self.one)
        raise TypeError(f"cannot evaluate {expr!r}")

    def commutator(self, a: GeneratorLabel, b: GeneratorLabel) -> GradedMatrix:
        return graded_commutator(self.matrix(a), self.matrix(b))

    def substituted(self, images: Mapping[GeneratorLabel, Expr], name: str = "") -> "Representation":
        """Representation sending each label to the matrix of its image expression."""
        mats = {lab: self.eval(img).with_parity(img.parity) for lab, img in images.items()}
        return Representation(self.space, mats, name or f"{self.name}|subst", self.one)
