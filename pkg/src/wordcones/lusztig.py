"""The Lusztig cone of a reduced word.

Coordinates a_1,...,a_k are indexed by word positions.  For every pair of
consecutive occurrences t < t' of the same letter, the sum of the entries at
the intervening positions whose letter does not commute with it (Dynkin
neighbours, |i_p - i_t| = 1) must be at least a_t + a_{t'}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polyhedra import (HCone, VCone, Vector, extreme_rays, hcone, intersect,
                        nonneg_orthant)
from .words import BRAID, Move, ReducedWord


@dataclass(frozen=True)
class LusztigCone:
    """Consecutive-occurrence inequality system of a reduced word.

    ``cone`` holds exactly the k - n pair inequalities; the lattice points of
    the object itself live in N^k, so predicates about the *set* (membership,
    rays, full-dimensionality) go through ``with_nonneg``.
    """

    word: ReducedWord
    cone: HCone

    def with_nonneg(self) -> HCone:
        return intersect(self.cone, nonneg_orthant(self.cone.dim))

    def contains(self, point) -> bool:
        return all(x >= 0 for x in point) and self.cone.contains(point)


def lusztig_cone(word: ReducedWord) -> LusztigCone:
    """Inequalities of the cone attached to a reduced word.

    >>> from .words import parse_word
    >>> [sum(c for c in a if c > 0) for a in lusztig_cone(parse_word("121")).cone.ineqs]
    [1]
    """
    letters = word.letters
    k = len(letters)
    ineqs: list[Vector] = []
    last_seen: dict[int, int] = {}
    for t2, g in enumerate(letters):
        if g in last_seen:
            t1 = last_seen[g]
            row = [0] * k
            row[t1] = -1
            row[t2] = -1
            for p in range(t1 + 1, t2):
                if abs(letters[p] - g) == 1:
                    row[p] = 1
            ineqs.append(tuple(row))
        last_seen[g] = t2
    result = LusztigCone(word, HCone(k, tuple(ineqs)))
    assert len(ineqs) == k - word.rank
    return result


def spanning_rays(word: ReducedWord) -> VCone:
    """Extreme rays of the Lusztig cone as a subset of the orthant."""
    return extreme_rays(lusztig_cone(word).with_nonneg())


def transport_under_commutation(word: ReducedWord, move: Move) -> tuple[int, ...]:
    """Coordinate permutation relating the cones of word and its commutation.

    Returned as a 0-based mapping new_index -> old_index (a transposition of
    the two swapped positions); the cone of the moved word equals the cone of
    the original with coordinates permuted accordingly.
    """
    if move.kind == BRAID:
        raise ValueError("braid moves do not transport Lusztig cones coordinatewise")
    t = move.position - 1
    k = len(word.letters)
    if t + 1 >= k:
        raise ValueError(f"commutation at {move.position} out of range")
    perm = list(range(k))
    perm[t], perm[t + 1] = perm[t + 1], perm[t]
    return tuple(perm)


def permute_cone(cone: HCone, perm: tuple[int, ...]) -> HCone:
    """Apply a coordinate permutation (new_index -> old_index) to an HCone."""
    return hcone([tuple(a[perm[i]] for i in range(cone.dim)) for a in cone.ineqs],
                 cone.dim)
