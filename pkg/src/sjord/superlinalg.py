"""Graded linear algebra over the exact rings of :mod:`sjord.scalars`.

Matrices are stored as a dict of nonzero entries keyed by ``(row, col)``;
semantically they are dense square matrices on a :class:`SuperSpace`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Optional

from .scalars import HPoly, DivisibilityFailure

__all__ = [
    "SuperSpace",
    "GradedMatrix",
    "UndeclaredParity",
    "NotNilpotent",
    "graded_kron",
    "plain_kron",
    "graded_flip",
    "plain_flip",
    "graded_commutator",
    "unipotent_series",
    "nilpotency_index",
]


class UndeclaredParity(ValueError):
    pass


class NotNilpotent(ArithmeticError):
    pass


@dataclass(frozen=True)
class SuperSpace:
    parity: tuple

    @property
    def dim(self) -> int:
        return len(self.parity)

    @classmethod
    def fundamental(cls, n: int) -> "SuperSpace":
        """C^{n|1}: n even basis vectors followed by one odd one."""
        return cls((0,) * n + (1,))

    @classmethod
    def even(cls, dim: int) -> "SuperSpace":
        return cls((0,) * dim)

    def tensor(self, other: "SuperSpace") -> "SuperSpace":
        # row-major: self index outer
        return SuperSpace(tuple((a + b) % 2 for a in self.parity for b in other.parity))

    def power(self, k: int) -> "SuperSpace":
        out = self
        for _ in range(k - 1):
            out = out.tensor(self)
        return out

    def parity_operator(self, one=None) -> "GradedMatrix":
        """(-1)^F: +1 on even basis vectors, -1 on odd ones."""
        one = HPoly.one() if one is None else one
        return GradedMatrix(
            self, {(i, i): (-one if p else one) for i, p in enumerate(self.parity)}, 0
        )


class GradedMatrix:
    """Square matrix on a super space, with an optional declared parity.

    ``cols`` is the column (domain) space; ``rows`` defaults to it.  Only
    flips between different spaces are ever rectangular.
    """

    __slots__ = ("cols", "rows", "entries", "parity")

    def __init__(self, space: SuperSpace, entries: dict, parity: Optional[int] = None,
                 rows: Optional[SuperSpace] = None):
        self.cols = space
        self.rows = rows if rows is not None else space
        self.entries = {k: v for k, v in entries.items() if v}
        self.parity = parity

    # -- constructors -------------------------------------------------------
    @classmethod
    def identity(cls, space: SuperSpace, one=None) -> "GradedMatrix":
        one = HPoly.one() if one is None else one
        return cls(space, {(i, i): one for i in range(space.dim)}, 0)

    @classmethod
    def zero(cls, space: SuperSpace, parity: Optional[int] = None) -> "GradedMatrix":
        return cls(space, {}, parity)

    @classmethod
    def unit(cls, space: SuperSpace, i: int, j: int, one=None) -> "GradedMatrix":
        """Matrix unit e_ij (0-based indices)."""
        one = HPoly.one() if one is None else one
        return cls(space, {(i, j): one}, (space.parity[i] + space.parity[j]) % 2)

    @classmethod
    def from_rows(cls, space: SuperSpace, rows, parity=None, convert=HPoly.const):
        entries = {}
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                if v:
                    entries[(i, j)] = convert(v) if convert else v
        return cls(space, entries, parity)

    # -- properties ---------------------------------------------------------
    @property
    def space(self) -> SuperSpace:
        return self.cols

    @property
    def dim(self) -> int:
        return self.cols.dim

    @property
    def shape(self):
        return (self.rows.dim, self.cols.dim)

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def is_zero(self) -> bool:
        return not self.entries

    def homogeneous_parity(self) -> Optional[int]:
        """Parity read off the nonzero entries; None if inhomogeneous."""
        seen = {(self.rows.parity[i] + self.cols.parity[j]) % 2 for i, j in self.entries}
        if len(seen) > 1:
            return None
        return seen.pop() if seen else 0

    def parity_consistent(self) -> bool:
        if self.parity is None:
            return True
        return all((self.rows.parity[i] + self.cols.parity[j]) % 2 == self.parity
                   for i, j in self.entries)

    def with_parity(self, parity: Optional[int]) -> "GradedMatrix":
        return GradedMatrix(self.cols, self.entries, parity, self.rows)

    # -- arithmetic ---------------------------------------------------------
    def _check_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    @staticmethod
    def _sum_parity(a, b):
        if a.is_zero():
            return b.parity
        if b.is_zero():
            return a.parity
        return a.parity if a.parity == b.parity else None

    def __add__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        self._check_shape(other)
        out = dict(self.entries)
        for k, v in other.entries.items():
            if k in out:
                out[k] = out[k] + v
            else:
                out[k] = v
        return GradedMatrix(self.cols, out, self._sum_parity(self, other), self.rows)

    def __neg__(self):
        return GradedMatrix(self.cols, {k: -v for k, v in self.entries.items()},
                            self.parity, self.rows)

    def __sub__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "GradedMatrix":
        if not c:
            return GradedMatrix(self.cols, {}, self.parity, self.rows)
        return GradedMatrix(self.cols, {k: v * c for k, v in self.entries.items()},
                            self.parity, self.rows)

    def __mul__(self, c):
        if isinstance(c, GradedMatrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        if self.cols.dim != other.rows.dim:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        by_row = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        out = {}
        for (i, k), a in self.entries.items():
            row = by_row.get(k)
            if not row:
                continue
            for j, b in row:
                key = (i, j)
                if key in out:
                    out[key] = out[key] + a * b
                else:
                    out[key] = a * b
        if self.parity is not None and other.parity is not None:
            parity = (self.parity + other.parity) % 2
        else:
            parity = None
        return GradedMatrix(other.cols, out, parity, self.rows)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative matrix power")
        result = GradedMatrix.identity(self.cols, self._one())
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    __hash__ = None

    def _one(self):
        for v in self.entries.values():
            return type(v).one() if hasattr(type(v), "one") else 1
        return HPoly.one()

    def map(self, fn: Callable) -> "GradedMatrix":
        return GradedMatrix(self.cols, {k: fn(v) for k, v in self.entries.items()},
                            self.parity, self.rows)

    def eval_h0(self) -> "GradedMatrix":
        """Constant term of every HPoly entry (as an HPoly matrix)."""
        return self.map(lambda v: HPoly.const(v.coeff(0)))

    def div_h(self, k: int = 1) -> "GradedMatrix":
        """Exact division of every entry by h**k."""
        try:
            return self.map(lambda v: v.shift_down(k))
        except DivisibilityFailure as exc:
            raise DivisibilityFailure(f"matrix not divisible by h^{k}: {exc}") from None

    def first_difference(self, other: "GradedMatrix"):
        """(row, col, lhs, rhs) of the first differing entry, 1-based, or None."""
        keys = sorted(set(self.entries) | set(other.entries))
        for key in keys:
            a, b = self.entries.get(key, 0), other.entries.get(key, 0)
            if a != b:
                return key[0] + 1, key[1] + 1, a, b
        return None

    def to_rows(self):
        rows = [[0] * self.cols.dim for _ in range(self.rows.dim)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    def __repr__(self):
        return f"GradedMatrix(dim={self.shape}, nnz={len(self.entries)}, parity={self.parity})"


def _sign_kron(a: GradedMatrix, b: GradedMatrix, graded: bool) -> GradedMatrix:
    m_rows, m_cols = b.rows.dim, b.cols.dim
    bp_rows, bp_cols = b.rows.parity, b.cols.parity
    ap_cols = a.cols.parity
    out = {}
    for (i, j), x in a.entries.items():
        pj = ap_cols[j] if graded else 0
        for (k, l), y in b.entries.items():
            v = x * y
            if pj and (bp_rows[k] + bp_cols[l]) % 2:
                v = -v
            out[(i * m_rows + k, j * m_cols + l)] = v
    if a.parity is not None and b.parity is not None:
        parity = (a.parity + b.parity) % 2
    else:
        parity = None
    return GradedMatrix(a.cols.tensor(b.cols), out, parity, a.rows.tensor(b.rows))


def graded_kron(a: GradedMatrix, b: GradedMatrix) -> GradedMatrix:
    """a (x) b with the Koszul sign (-1)^{(p(k)+p(l)) p(j)} on entry ((i,k),(j,l))."""
    return _sign_kron(a, b, graded=True)


def plain_kron(a: GradedMatrix, b: GradedMatrix) -> GradedMatrix:
    return _sign_kron(a, b, graded=False)


def _flip(v: SuperSpace, w: SuperSpace, graded: bool, one) -> GradedMatrix:
    one = HPoly.one() if one is None else one
    out = {}
    for i, pi in enumerate(v.parity):
        for k, pk in enumerate(w.parity):
            src = i * w.dim + k
            dst = k * v.dim + i
            out[(dst, src)] = -one if (graded and pi and pk) else one
    return GradedMatrix(v.tensor(w), out, 0, w.tensor(v))


def graded_flip(v: SuperSpace, w: SuperSpace, one=None) -> GradedMatrix:
    """tau(x (x) y) = (-1)^{p(x)p(y)} y (x) x, as a map V(x)W -> W(x)V."""
    return _flip(v, w, True, one)


def plain_flip(v: SuperSpace, w: SuperSpace, one=None) -> GradedMatrix:
    return _flip(v, w, False, one)


def graded_commutator(a: GradedMatrix, b: GradedMatrix) -> GradedMatrix:
    if a.parity is None or b.parity is None:
        raise UndeclaredParity("graded commutator needs homogeneous operands")
    ab, ba = a @ b, b @ a
    if a.parity and b.parity:
        return ab + ba
    return ab - ba


def nilpotency_index(m: GradedMatrix) -> int:
    """Smallest k with m**k = 0; raises NotNilpotent past ``dim`` steps."""
    if m.is_zero():
        return 1
    power = m
    for k in range(2, m.dim + 2):
        power = power @ m
        if power.is_zero():
            return k
    raise NotNilpotent(f"matrix of dim {m.dim} is not nilpotent")


def _binom_half(k: int) -> Fraction:
    # binomial(1/2, k)
    out = Fraction(1)
    for i in range(k):
        out *= (Fraction(1, 2) - i) / (i + 1)
    return out


def _series(x: GradedMatrix, coeff: Callable[[int], Fraction], one) -> GradedMatrix:
    idx = nilpotency_index(x)
    total = GradedMatrix.identity(x.cols, one).scale(coeff(0)) if coeff(0) else \
        GradedMatrix.zero(x.cols, 0)
    power = GradedMatrix.identity(x.cols, one)
    for k in range(1, idx):
        power = power @ x
        c = coeff(k)
        if c:
            total = total + power.scale(c)
    return total.with_parity(x.parity if x.parity is not None else total.homogeneous_parity())


def unipotent_series(m: GradedMatrix, fn: str, one=None) -> GradedMatrix:
    """Exact truncated Taylor series.

    ``sqrt_one_plus(x)`` = sqrt(1 + x) and ``exp(x)`` need x nilpotent;
    ``log(m)`` needs m - 1 nilpotent.
    """
    one = one if one is not None else m._one()
    if fn == "sqrt_one_plus":
        return _series(m, _binom_half, one).with_parity(0)
    if fn == "exp":
        return _series(m, lambda k: Fraction(1, factorial(k)), one).with_parity(0)
    if fn == "log":
        x = m - GradedMatrix.identity(m.cols, one)
        out = _series(x, lambda k: Fraction((-1) ** (k + 1), k) if k else Fraction(0), one)
        return out.with_parity(0)
    raise ValueError(f"unknown series {fn!r}")

