"""Abelianization through the Smith normal form of exponent sums."""
from __future__ import annotations

from dataclasses import dataclass

from ..exactmath import smith_normal_form
from .words import GroupPresentation, exponent_sums


@dataclass(frozen=True)
class AbelianInvariants:
    torsion: tuple      # invariant factors > 1, each dividing the next
    free_rank: int

    @property
    def order(self) -> int | None:
        """Order of the group, ``None`` when infinite."""
        if self.free_rank:
            return None
        out = 1
        for t in self.torsion:
            out *= t
        return out

    @property
    def is_cyclic(self) -> bool:
        return len(self.torsion) + self.free_rank <= 1

    def __str__(self):
        parts = [f"Z/{t}" for t in self.torsion]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " x ".join(parts) if parts else "1"

    def as_dict(self):
        return {"torsion": list(self.torsion), "free_rank": self.free_rank,
                "order": self.order, "structure": str(self)}


def relation_matrix(P: GroupPresentation) -> list[list[int]]:
    return [exponent_sums(r, P.ngens) for r in P.relators]


def abelianization(P: GroupPresentation) -> AbelianInvariants:
    M = relation_matrix(P)
    if not M or P.ngens == 0:
        return AbelianInvariants((), P.ngens)
    factors = smith_normal_form(M)
    nonzero = [abs(f) for f in factors if f]
    return AbelianInvariants(tuple(f for f in nonzero if f != 1), P.ngens - len(nonzero))
