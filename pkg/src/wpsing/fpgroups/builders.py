"""Presentations of the complement groups and their quotients."""
from __future__ import annotations

import inspect
import math

from ..errors import ArgumentError
from ..exactmath import ext_gcd, pairwise_coprime
from ..wproj import validate_cremona
from .words import GroupPresentation, commutator, conjugate, gen, word_inverse, word_mul, word_power


def _pos(name, value) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ArgumentError(f"{name} must be a positive integer, got {value!r}")
    return value


def cyclic(n: int) -> GroupPresentation:
    n = _pos("n", n)
    return GroupPresentation(("a",), ((gen(0, n)),))


def triangle(p: int, q: int, r: int) -> GroupPresentation:
    """``< m1, m2, m3 | m1^p, m2^q, m3^r, m3 m2 m1 >``."""
    p, q, r = _pos("p", p), _pos("q", q), _pos("r", r)
    m1, m2, m3 = gen(0), gen(1), gen(2)
    return GroupPresentation(("m1", "m2", "m3"), (
        word_power(m1, p), word_power(m2, q), word_power(m3, r), word_mul(m3, m2, m1)))


def sextic() -> GroupPresentation:
    """Complement of a smooth cubic and its three aligned inflectional tangents."""
    c, lx, ly, lz = (gen(i) for i in range(4))
    return GroupPresentation(("c", "lx", "ly", "lz"), (
        commutator(lx, ly), commutator(ly, lz), commutator(lz, lx),
        commutator(c, word_mul(word_inverse(lx), lz)),
        commutator(c, word_mul(word_inverse(ly), lz)),
        word_mul(c, lx, c, ly, c, lz),
    ))


def cubic_quotient(alpha, beta) -> GroupPresentation:
    """The sextic group with the meridians of the three exceptional curves killed."""
    (a1, a2, _), (b1, b2) = validate_cremona(alpha, beta)
    P = sextic()
    _, lx, ly, lz = (gen(i) for i in range(4))
    return P.with_relators((
        word_mul(lx, ly),
        word_mul(word_power(lx, a1), word_power(lz, b2)),
        word_mul(word_power(ly, a2), word_power(lz, b1)),
    ))


def pres_odd(A: int) -> GroupPresentation:
    """``< l, u | l^A, u^3 l^-2 >``."""
    A = _pos("A", A)
    l, u = gen(0), gen(1)
    return GroupPresentation(("l", "u"), (word_power(l, A), word_mul(word_power(u, 3), word_power(l, -2))))


def pres1_exponent(alpha, beta) -> int:
    """``h = ah1 b2 + ah2 b1`` for the Bezout pair ``a2 ah1 - a1 ah2 = 1``."""
    (a1, a2, _), (b1, b2) = validate_cremona(alpha, beta)
    _, s, t = ext_gcd(a2, a1)          # s a2 + t a1 = 1
    return s * b2 + (-t) * b1


def pres1(alpha, beta) -> GroupPresentation:
    """``< l, u | l^A, [u, l^(h-1)], u^3 l^-2 >`` with ``A = a1 a2 + a3``."""
    (a1, a2, a3), _ = validate_cremona(alpha, beta)
    h = pres1_exponent(alpha, beta)
    l, u = gen(0), gen(1)
    return GroupPresentation(("l", "u"), (
        word_power(l, a1 * a2 + a3),
        commutator(u, word_power(l, h - 1)),
        word_mul(word_power(u, 3), word_power(l, -2)),
    ))


def conic_base() -> GroupPresentation:
    """Complement of the tritangent conic and the three lines, with ``u = c lz``."""
    u, lx, ly, lz = (gen(i) for i in range(4))
    return GroupPresentation(("u", "lx", "ly", "lz"), (
        commutator(lx, ly), commutator(lx, lz),
        commutator(conjugate(ly, u), lz),
        word_mul(u, ly, u, lx, word_inverse(lz)),
    ))


def conic_quotient(alpha, beta) -> GroupPresentation:
    (a1, a2, _), (b1, b2) = validate_cremona(alpha, beta)
    u, lx, ly, lz = (gen(i) for i in range(4))
    return conic_base().with_relators((
        word_mul(lx, ly),
        word_mul(word_power(lx, a1), word_power(lz, b2)),
        word_mul(conjugate(word_power(ly, a2), u), word_power(lz, b1)),
    ))


def conic_simplified(alpha, beta) -> GroupPresentation:
    """Two-generator form of :func:`conic_quotient` after eliminating ``ly, lz``."""
    (a1, a2, _), (b1, b2) = validate_cremona(alpha, beta)
    u, lx = gen(0), gen(1)
    lz = word_mul(u, word_inverse(lx), u, lx)
    return GroupPresentation(("u", "lx"), (
        commutator(lx, word_mul(u, word_inverse(lx), u)),
        commutator(conjugate(lx, u), lz),
        word_mul(word_power(lx, a1), word_power(lz, b2)),
        word_mul(conjugate(word_power(lx, -a2), u), word_power(lz, b1)),
    ))


def orbifold(d1: int, d2: int, d3: int) -> GroupPresentation:
    """Conic-and-lines group with ``lx^d1 = ly^d2 = lz^d3 = 1``."""
    d = (_pos("d1", d1), _pos("d2", d2), _pos("d3", d3))
    if not pairwise_coprime(d):
        raise ArgumentError(f"orbifold indices {d} must be pairwise coprime")
    return conic_base().with_relators(tuple(gen(i + 1, k) for i, k in enumerate(d)))


def quartic() -> GroupPresentation:
    """``< s, t, u | sts=tst, sus=usu, tut=utu, (stu)^2 >``."""
    s, t, u = gen(0), gen(1), gen(2)

    def braid(x, y):
        return word_mul(x, y, x, word_inverse(word_mul(y, x, y)))

    return GroupPresentation(("s", "t", "u"), (
        braid(s, t), braid(s, u), braid(t, u), word_power(word_mul(s, t, u), 2)))


def milnor_fiber_order(alpha, beta) -> int:
    """``gcd(a1 + 2 b2, a2 + 2 b1)``."""
    (a1, a2, _), (b1, b2) = validate_cremona(alpha, beta)
    return math.gcd(a1 + 2 * b2, a2 + 2 * b1)


def conic_quotient_order(alpha, beta) -> int:
    (a1, a2, a3), _ = validate_cremona(alpha, beta)
    return 2 * milnor_fiber_order(alpha, beta) * (a1 * a2 + a3)


BUILDERS = {
    "cyclic": cyclic,
    "triangle": triangle,
    "sextic": sextic,
    "cubic_quotient": cubic_quotient,
    "pres_odd": pres_odd,
    "pres1": pres1,
    "conic": conic_base,
    "conic_quotient": conic_quotient,
    "conic_simplified": conic_simplified,
    "orbifold": orbifold,
    "quartic": quartic,
}


def builder_params(name: str) -> list[str]:
    if name not in BUILDERS:
        raise ArgumentError(f"unknown builder {name!r}; known: {sorted(BUILDERS)}")
    return list(inspect.signature(BUILDERS[name]).parameters)


def build(name: str, **params) -> GroupPresentation:
    needed = builder_params(name)
    missing = [p for p in needed if p not in params]
    extra = [p for p in params if p not in needed]
    if missing or extra:
        raise ArgumentError(f"builder {name} takes parameters {needed}; missing {missing}, unexpected {extra}")
    return BUILDERS[name](**params)
