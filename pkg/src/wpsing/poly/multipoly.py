"""Sparse polynomials in 3 or 4 variables with coefficients in Q(zeta)."""
from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from ..errors import ArgumentError
from .field import QZ3

VAR_NAMES = ("x", "y", "z", "w")
MAX_EXPONENT = 2 ** 63 - 1


def _add_exps(e, f):
    out = tuple(a + b for a, b in zip(e, f))
    if any(x > MAX_EXPONENT for x in out):
        raise OverflowError("exponent exceeds 64 bits")
    return out


class MultiPoly:
    """Immutable sparse polynomial.  ``terms`` maps exponent tuples to QZ3."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int = 3, terms: Mapping | None = None):
        if nvars not in (3, 4):
            raise ArgumentError(f"polynomials have 3 or 4 variables, not {nvars}")
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(x) for x in exps)
            if len(exps) != nvars:
                raise ArgumentError(f"exponent {exps} does not match {nvars} variables")
            if any(x < 0 for x in exps):
                raise ArgumentError(f"negative exponent in {exps}")
            if any(x > MAX_EXPONENT for x in exps):
                raise OverflowError("exponent exceeds 64 bits")
            c = QZ3.coerce(c)
            if c:
                clean[exps] = c
        self.nvars = nvars
        self.terms = clean
        self._hash = None

    # construction helpers -------------------------------------------------

    @classmethod
    def constant(cls, c, nvars: int = 3) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, i: int, nvars: int = 3) -> "MultiPoly":
        exps = [0] * nvars
        exps[i] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1) -> "MultiPoly":
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def gens(cls, nvars: int = 3):
        return tuple(cls.var(i, nvars) for i in range(nvars))

    # arithmetic ------------------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                # lift the 3-variable one into 4 variables
                if {self.nvars, other.nvars} == {3, 4}:
                    return other.lift(max(self.nvars, other.nvars))
                raise ArgumentError("variable count mismatch")
            return other
        return MultiPoly.constant(other, self.nvars)

    def lift(self, nvars: int) -> "MultiPoly":
        if nvars == self.nvars:
            return self
        if nvars < self.nvars:
            raise ArgumentError("cannot drop variables")
        pad = (0,) * (nvars - self.nvars)
        return MultiPoly(nvars, {e + pad: c for e, c in self.terms.items()})

    def _pair(self, other):
        o = self._coerce(other)
        s = self
        if o.nvars != s.nvars:
            s = s.lift(o.nvars)
        return s, o

    def __add__(self, other):
        s, o = self._pair(other)
        out = dict(s.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, QZ3(0)) + c
        return MultiPoly(s.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        s, o = self._pair(other)
        return s + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        s, o = self._pair(other)
        out: dict = {}
        for e1, c1 in s.terms.items():
            for e2, c2 in o.terms.items():
                e = _add_exps(e1, e2)
                out[e] = out.get(e, QZ3(0)) + c1 * c2
        return MultiPoly(s.nvars, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        c = o.constant_value()
        if c is None:
            raise ArgumentError("can only divide by a constant")
        if not c:
            raise ZeroDivisionError("division by zero polynomial")
        inv = c.inverse()
        return MultiPoly(self.nvars, {e: v * inv for e, v in self.terms.items()})

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ArgumentError("polynomial powers must be nonnegative integers")
        result = MultiPoly.constant(1, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            if self.nvars != other.nvars:
                n = max(self.nvars, other.nvars)
                return self.lift(n).terms == other.lift(n).terms
            return self.terms == other.terms
        try:
            return self == MultiPoly.constant(other, self.nvars)
        except ArgumentError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # inspection ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def constant_value(self):
        if not self.terms:
            return QZ3(0)
        if set(self.terms) == {(0,) * self.nvars}:
            return self.terms[(0,) * self.nvars]
        return None

    def total_degree(self) -> int:
        if not self.terms:
            raise ArgumentError("degree of the zero polynomial")
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def wdegree(self, weights: Sequence[int]) -> int:
        """Weighted degree; raises if the polynomial is not weighted homogeneous."""
        degs = self.wdegrees(weights)
        if len(degs) != 1:
            raise ArgumentError("polynomial is not weighted homogeneous" if degs else "zero polynomial")
        return degs.pop()

    def wdegrees(self, weights: Sequence[int]) -> set:
        w = tuple(weights)
        if len(w) != self.nvars:
            raise ArgumentError(f"need {self.nvars} weights, got {len(w)}")
        return {sum(a * b for a, b in zip(e, w)) for e in self.terms}

    def is_whomogeneous(self, weights: Sequence[int]) -> bool:
        return len(self.wdegrees(weights)) <= 1

    def is_rational(self) -> bool:
        return all(c.is_rational for c in self.terms.values())

    def evaluate(self, point: Sequence) -> QZ3:
        if len(point) != self.nvars:
            raise ArgumentError(f"need {self.nvars} coordinates")
        pt = [QZ3.coerce(p) for p in point]
        total = QZ3(0)
        for e, c in self.terms.items():
            term = c
            for v, k in zip(pt, e):
                if k:
                    term = term * v ** k
            total = total + term
        return total

    __call__ = evaluate

    def substitute(self, images: Sequence["MultiPoly"]) -> "MultiPoly":
        """Replace variable ``i`` by ``images[i]`` (all images in one ring)."""
        if len(images) != self.nvars:
            raise ArgumentError(f"need {self.nvars} images")
        images = list(images)
        target = images[0].nvars if isinstance(images[0], MultiPoly) else self.nvars
        powers: list[dict] = [dict() for _ in images]

        def power(i, k):
            if k not in powers[i]:
                img = images[i]
                if not isinstance(img, MultiPoly):
                    img = MultiPoly.constant(img, target)
                powers[i][k] = img ** k
            return powers[i][k]

        total = MultiPoly(target)
        for e, c in self.terms.items():
            term = MultiPoly.constant(c, target)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            total = total + term
        return total

    def map_exponents(self, fn) -> "MultiPoly":
        out: dict = {}
        for e, c in self.terms.items():
            ne = tuple(fn(e))
            out[ne] = out.get(ne, QZ3(0)) + c
        return MultiPoly(len(next(iter(out))) if out else self.nvars, out)

    def sorted_terms(self) -> list:
        """Terms in graded-lex order, highest first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    # printing --------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            mono = "*".join(VAR_NAMES[i] + (f"^{k}" if k > 1 else "")
                            for i, k in enumerate(exps) if k)
            neg = False
            if c.is_rational:
                if c.a < 0:
                    neg, c = True, -c
                cs = str(c)
            else:
                cs = f"({c})"
            if mono:
                body = mono if cs == "1" else f"{cs}*{mono}"
            else:
                body = cs
            pieces.append((neg, body))
        out = ("-" if pieces[0][0] else "") + pieces[0][1]
        for neg, body in pieces[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __repr__(self):
        return f"MultiPoly({self})"


def poly_sum(polys: Iterable[MultiPoly], nvars: int = 3) -> MultiPoly:
    total = MultiPoly(nvars)
    for p in polys:
        total = total + p
    return total
