"""Exhaustive search for epimorphisms onto the symmetric group S3."""
from __future__ import annotations

from itertools import permutations, product

from ..errors import ArgumentError
from .words import GroupPresentation

MAX_GENERATORS = 6

S3 = tuple(permutations(range(3)))
_IDENTITY = (0, 1, 2)


def _compose(p, q):
    """``p`` then ``q`` (right action, matching left-to-right words)."""
    return tuple(q[p[i]] for i in range(3))


def _inverse(p):
    out = [0, 0, 0]
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def _power(p, n):
    if n < 0:
        p, n = _inverse(p), -n
    out = _IDENTITY
    for _ in range(n % 6):      # exponent of S3 is 6
        out = _compose(out, p)
    return out


def _evaluate(word, images):
    out = _IDENTITY
    for g, e in word:
        out = _compose(out, _power(images[g], e))
    return out


def _generates_s3(images) -> bool:
    seen = {_IDENTITY}
    frontier = [_IDENTITY]
    while frontier:
        nxt = []
        for p in frontier:
            for g in images:
                q = _compose(p, g)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return len(seen) == 6


def count_epimorphisms_to_S3(P: GroupPresentation) -> int:
    """Number of surjective homomorphisms ``P -> S3``."""
    if P.ngens > MAX_GENERATORS:
        raise ArgumentError(f"S3 search supports at most {MAX_GENERATORS} generators, got {P.ngens}")
    count = 0
    for images in product(S3, repeat=P.ngens):
        if all(_evaluate(r, images) == _IDENTITY for r in P.relators) and _generates_s3(images):
            count += 1
    return count
