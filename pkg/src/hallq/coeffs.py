"""The exact coefficient field Q(sqrt(q)) for a fixed prime power q.

Elements are a + b*sqrt(q) with rational a, b.  When q is a perfect
square sqrt(q) is an integer and the field degenerates to Q (b is
folded into a at construction).  No floating point anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction


class QSqrt:
    __slots__ = ("q", "a", "b")

    def __init__(self, q: int, a=0, b=0):
        a = Fraction(a)
        b = Fraction(b)
        r = math.isqrt(q)
        if r * r == q and b:
            a, b = a + b * r, Fraction(0)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, *args):
        raise AttributeError("QSqrt is immutable")

    # -- constructors --

    @classmethod
    def of(cls, q: int, value) -> "QSqrt":
        if isinstance(value, QSqrt):
            assert value.q == q
            return value
        return cls(q, value)

    @classmethod
    def v_power(cls, q: int, k: int) -> "QSqrt":
        """v**k with v = sqrt(q); exact for any integer k."""
        half, odd = divmod(k, 2)
        base = Fraction(q) ** half
        if not odd:
            return cls(q, base)
        return cls(q, 0, base)

    # -- ring/field ops --

    def _coerce(self, other) -> "QSqrt":
        if isinstance(other, QSqrt):
            if other.q != self.q:
                raise ValueError("mixing coefficient fields with different q")
            return other
        return QSqrt(self.q, other)

    def __add__(self, other):
        o = self._coerce(other)
        return QSqrt(self.q, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QSqrt(self.q, -self.a, -self.b)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        return QSqrt(
            self.q,
            self.a * o.a + self.q * self.b * o.b,
            self.a * o.b + self.b * o.a,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QSqrt":
        den = self.a * self.a - self.q * self.b * self.b
        if den == 0:
            if self.a == self.b == 0:
                raise ZeroDivisionError("inverse of zero")
            # only possible when sqrt(q) is rational, handled at init
            raise AssertionError("unreachable: norm zero for nonzero element")
        return QSqrt(self.q, self.a / den, -self.b / den)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = QSqrt(self.q, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- predicates --

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.a == other and self.b == 0
        return (
            isinstance(other, QSqrt)
            and self.q == other.q
            and self.a == other.a
            and self.b == other.b
        )

    def __hash__(self):
        return hash((self.q, self.a, self.b))

    def __repr__(self):
        if self.b == 0:
            return f"{self.a}"
        if self.a == 0:
            return f"{self.b}*v"
        return f"({self.a}+{self.b}*v)"

    def to_pair(self) -> tuple[str, str]:
        return (str(self.a), str(self.b))


def qint(q: int, n) -> QSqrt:
    return QSqrt(q, n)


def v_bracket(q: int, p: int) -> QSqrt:
    """The quantum integer [p] = (v**p - v**-p) / (v - v**-1)."""
    v1 = QSqrt.v_power(q, 1)
    return (QSqrt.v_power(q, p) - QSqrt.v_power(q, -p)) / (v1 - QSqrt.v_power(q, -1))


def v_factorial(q: int, p: int) -> QSqrt:
    out = QSqrt(q, 1)
    for i in range(1, p + 1):
        out = out * v_bracket(q, i)
    return out


def row_reduce(rows: list[list[QSqrt]]) -> tuple[list[list[QSqrt]], list[int]]:
    """Exact Gaussian elimination; returns (reduced rows, pivot columns)."""
    M = [row[:] for row in rows]
    nrows = len(M)
    ncols = len(M[0]) if M else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if M[i][c]), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        inv = M[r][c].inverse()
        M[r] = [x * inv for x in M[r]]
        for i in range(nrows):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return M, pivots


def matrix_rank(rows: list[list[QSqrt]]) -> int:
    return len(row_reduce(rows)[1])


def nullspace(rows: list[list[QSqrt]], q: int) -> list[list[QSqrt]]:
    """Basis of {x : rows @ x == 0}, free variables set canonically."""
    ncols = len(rows[0]) if rows else 0
    R, pivots = row_reduce(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [QSqrt(q, 0)] * ncols
        vec[fc] = QSqrt(q, 1)
        for r, pc in enumerate(pivots):
            vec[pc] = -R[r][fc]
        basis.append(vec)
    return basis
