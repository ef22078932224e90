"""Reidemeister-Schreier rewriting for finite-index subgroups."""
from __future__ import annotations

from collections import deque
from typing import Sequence

from ..errors import ArgumentError, StateError
from .todd_coxeter import EnumerationResult
from .words import GroupPresentation, exponent_sums, letters, reduce_word


def _check_table(P: GroupPresentation, table) -> tuple:
    if isinstance(table, EnumerationResult):
        if not table.finished:
            raise StateError("coset enumeration did not close; no table to rewrite with")
        table = table.table
    table = tuple(tuple(row) for row in table)
    if not table:
        raise StateError("empty coset table")
    n, ncols = len(table), 2 * P.ngens
    for c, row in enumerate(table):
        if len(row) != ncols or any(t is None for t in row):
            raise StateError(f"coset table row {c} is not closed")
        for x, t in enumerate(row):
            if not 0 <= t < n or table[t][x ^ 1] != c:
                raise StateError(f"coset table is inconsistent at ({c}, {x})")
    return table


def _spanning_tree(table, strategy: str):
    """Tree edges as a set of ``(coset, generator)`` pairs ``c --g--> c.g``."""
    tree = set()
    seen = {0}
    if strategy == "bfs":
        todo = deque([0])
        pop = todo.popleft
    elif strategy == "dfs":
        todo = [0]
        pop = todo.pop
    else:
        raise ArgumentError(f"unknown transversal strategy {strategy!r}")
    while todo:
        c = pop()
        for x, d in enumerate(table[c]):
            if d in seen:
                continue
            seen.add(d)
            todo.append(d)
            # an edge followed backwards along g^-1 is the edge d --g--> c
            tree.add((c, x // 2) if x % 2 == 0 else (d, x // 2))
    return tree


def reidemeister_schreier(P: GroupPresentation, table, transversal: str = "bfs") -> GroupPresentation:
    """Presentation of the subgroup whose cosets are described by ``table``.

    ``table`` is a closed coset table (or a finished enumeration) with coset
    0 the subgroup itself.  Generators are the Schreier generators
    ``s_c_g = rep(c) g rep(c.g)^-1`` for non-tree edges; relators are all
    relators conjugated to every coset and rewritten.
    """
    table = _check_table(P, table)
    tree = _spanning_tree(table, transversal)
    gens = {}
    names = []
    for c in range(len(table)):
        for g in range(P.ngens):
            if (c, g) not in tree:
                gens[(c, g)] = len(names)
                names.append(f"s{c}_{P.generators[g]}")
    rels = []
    for r in P.relators:
        lets = letters(r)
        for start in range(len(table)):
            k, out = start, []
            for g, s in lets:
                if s > 0:
                    if (k, g) in gens:
                        out.append((gens[(k, g)], 1))
                    k = table[k][2 * g]
                else:
                    j = table[k][2 * g + 1]
                    if (j, g) in gens:
                        out.append((gens[(j, g)], -1))
                    k = j
            w = reduce_word(out)
            if w:
                rels.append(w)
    return GroupPresentation(tuple(names), tuple(rels))


def homomorphism_coset_table(P: GroupPresentation, images: Sequence[int], n: int) -> tuple:
    """Coset table of the kernel of ``P -> Z/n`` sending generator ``i`` to ``images[i]``."""
    images = [int(v) % n for v in images]
    if len(images) != P.ngens:
        raise ArgumentError(f"need {P.ngens} images, got {len(images)}")
    for r in P.relators:
        if sum(a * b for a, b in zip(exponent_sums(r, P.ngens), images)) % n:
            raise ArgumentError("the assignment does not respect the relators")
    return tuple(tuple(v for g in range(P.ngens) for v in ((k + images[g]) % n, (k - images[g]) % n))
                 for k in range(n))


def parity_coset_table(P: GroupPresentation, odd: Sequence[str]) -> tuple:
    """Index-2 kernel sending the named generators to 1 and the rest to 0."""
    unknown = set(odd) - set(P.generators)
    if unknown:
        raise ArgumentError(f"unknown generators {sorted(unknown)}")
    return homomorphism_coset_table(P, [int(g in odd) for g in P.generators], 2)
