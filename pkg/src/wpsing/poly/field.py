"""The cyclotomic field Q(zeta), zeta a primitive cube root of unity."""
from __future__ import annotations

from fractions import Fraction

from ..errors import ArgumentError
from ..exactmath import as_rational, format_rational


class QZ3:
    """``a + b*zeta`` with rational ``a, b`` and ``zeta^2 = -zeta - 1``."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = as_rational(a)
        self.b = as_rational(b)

    @classmethod
    def coerce(cls, x) -> "QZ3":
        if isinstance(x, QZ3):
            return x
        return cls(x, 0)

    # arithmetic ------------------------------------------------------------

    def __add__(self, other):
        try:
            o = QZ3.coerce(other)
        except ArgumentError:
            return NotImplemented
        return QZ3(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QZ3(-self.a, -self.b)

    def __sub__(self, other):
        try:
            o = QZ3.coerce(other)
        except ArgumentError:
            return NotImplemented
        return QZ3(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return QZ3.coerce(other) - self

    def __mul__(self, other):
        try:
            o = QZ3.coerce(other)
        except ArgumentError:
            return NotImplemented
        a, b, c, d = self.a, self.b, o.a, o.b
        # (a + b z)(c + d z) = ac + (ad + bc) z + bd z^2,  z^2 = -z - 1
        return QZ3(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def conjugate(self) -> "QZ3":
        # zeta -> zeta^2 = -1 - zeta
        return QZ3(self.a - self.b, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def inverse(self) -> "QZ3":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(zeta)")
        c = self.conjugate()
        return QZ3(c.a / n, c.b / n)

    def __truediv__(self, other):
        return self * QZ3.coerce(other).inverse()

    def __rtruediv__(self, other):
        return QZ3.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = QZ3(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # comparisons -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.b == 0 and self.a == other
        if isinstance(other, QZ3):
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b)) if self.b else hash(self.a)

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    # printing --------------------------------------------------------------

    def __str__(self):
        if not self.b:
            return format_rational(self.a)
        if self.b == 1:
            zpart = "zeta"
        elif self.b == -1:
            zpart = "-zeta"
        else:
            zpart = format_rational(self.b) + "*zeta"
        if not self.a:
            return zpart
        if zpart.startswith("-"):
            return f"{format_rational(self.a)}-{zpart[1:]}"
        return f"{format_rational(self.a)}+{zpart}"

    def __repr__(self):
        return f"QZ3({self})"


ZETA = QZ3(0, 1)
ONE = QZ3(1)
ZERO = QZ3(0)


def cube_root_of_unity(name) -> QZ3:
    """``1``, ``zeta`` or ``zeta2`` (also accepts the QZ3 value itself)."""
    if isinstance(name, QZ3):
        value = name
    else:
        table = {"1": ONE, "zeta": ZETA, "zeta2": ZETA * ZETA, "zeta^2": ZETA * ZETA}
        if str(name) not in table:
            raise ArgumentError(f"expected 1, zeta or zeta2, got {name!r}")
        value = table[str(name)]
    if value ** 3 != 1:
        raise ArgumentError(f"{value} is not a cube root of unity")
    return value
