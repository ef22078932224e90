"""Coset enumeration, HLT strategy.

Column ``2g`` of the coset table holds the action of generator ``g`` and
column ``2g+1`` the action of its inverse.  Cosets are processed strictly in
order of definition, so the outcome is deterministic.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Sequence

from ..errors import ArgumentError
from .words import GroupPresentation, Word, letters

DEFAULT_MAX_COSETS = 100_000


def default_budget() -> int:
    raw = os.environ.get("WPSING_MAX_COSETS")
    if raw is None:
        return DEFAULT_MAX_COSETS
    try:
        value = int(raw)
    except ValueError:
        raise ArgumentError(f"WPSING_MAX_COSETS={raw!r} is not an integer") from None
    if value < 1:
        raise ArgumentError("WPSING_MAX_COSETS must be positive")
    return value


def word_columns(w: Word) -> list[int]:
    return [2 * g + (0 if s > 0 else 1) for g, s in letters(w)]


@dataclass(frozen=True)
class EnumerationResult:
    finished: bool
    index: int | None          # subgroup index when finished
    cosets_used: int           # cosets defined in total
    table: tuple = field(default=(), repr=False)   # compact table when finished

    @property
    def outcome(self) -> str:
        return "Finished" if self.finished else "BudgetExceeded"

    def as_dict(self):
        return {"outcome": self.outcome, "index": self.index, "cosets_used": self.cosets_used}


class _BudgetExceeded(Exception):
    pass


class _Enumerator:
    def __init__(self, ncols: int, max_cosets: int):
        self.ncols = ncols
        self.max = max_cosets
        self.table: list[list] = [[None] * ncols]
        self.parent = [0]
        self.live = 1

    def rep(self, c):
        p = self.parent
        root = c
        while p[root] != root:
            root = p[root]
        while p[c] != root:
            p[c], c = root, p[c]
        return root

    def define(self, c, x):
        if len(self.table) >= self.max:
            raise _BudgetExceeded
        n = len(self.table)
        self.table.append([None] * self.ncols)
        self.parent.append(n)
        self.live += 1
        self.table[c][x] = n
        self.table[n][x ^ 1] = c

    def merge(self, k, l, queue):
        k, l = self.rep(k), self.rep(l)
        if k != l:
            k, l = min(k, l), max(k, l)
            self.parent[l] = k
            self.live -= 1
            queue.append(l)

    def coincidence(self, a, b):
        queue: list[int] = []
        self.merge(a, b, queue)
        T = self.table
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for x in range(self.ncols):
                f = T[e][x]
                if f is None:
                    continue
                T[f][x ^ 1] = None
                e1, f1 = self.rep(e), self.rep(f)
                if T[e1][x] is not None:
                    self.merge(f1, T[e1][x], queue)
                elif T[f1][x ^ 1] is not None:
                    self.merge(e1, T[f1][x ^ 1], queue)
                else:
                    T[e1][x] = f1
                    T[f1][x ^ 1] = e1

    def scan(self, c, w, fill):
        """Scan relator ``w`` (column list) at coset ``c``; define cosets when ``fill``."""
        T = self.table
        f, b = c, c
        i, j = 0, len(w) - 1
        while True:
            while i <= j and T[f][w[i]] is not None:
                f = T[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and T[b][w[j] ^ 1] is not None:
                b = T[b][w[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                T[f][w[i]] = b
                T[b][w[i] ^ 1] = f
                return
            if not fill:
                return
            self.define(f, w[i])

    def alive(self, c):
        return self.parent[c] == c

    def compact(self):
        order = [c for c in range(len(self.table)) if self.alive(c)]
        index = {c: k for k, c in enumerate(order)}
        return tuple(tuple(index[self.rep(t)] for t in self.table[c]) for c in order)


def todd_coxeter(P: GroupPresentation, subgroup_words: Sequence[Word] = (),
                 max_cosets: int | None = None) -> EnumerationResult:
    """Enumerate the cosets of the subgroup generated by ``subgroup_words``.

    With no subgroup words the index is the group order.  Running out of
    budget is reported as ``finished=False``, never raised.
    """
    if max_cosets is None:
        max_cosets = default_budget()
    if isinstance(max_cosets, bool) or not isinstance(max_cosets, int) or max_cosets < 1:
        raise ArgumentError("max_cosets must be a positive integer")
    ncols = 2 * P.ngens
    rels = [word_columns(r) for r in P.relators if r]
    subs = [word_columns(h) for h in subgroup_words if h]
    E = _Enumerator(ncols, max_cosets)
    try:
        for h in subs:
            E.scan(0, h, True)
        c = 0
        while c < len(E.table):
            for r in rels:
                if not E.alive(c):
                    break
                E.scan(c, r, True)
            if E.alive(c):
                for x in range(ncols):
                    if E.table[c][x] is None:
                        E.define(c, x)
            c += 1
    except _BudgetExceeded:
        return EnumerationResult(False, None, len(E.table))
    return EnumerationResult(True, E.live, len(E.table), E.compact())


def group_order(P: GroupPresentation, max_cosets: int | None = None) -> int | None:
    res = todd_coxeter(P, (), max_cosets)
    return res.index if res.finished else None
