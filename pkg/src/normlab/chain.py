"""Stabilizer chains: deterministic Schreier-Sims with explicit transversals.

Base points are chosen as the first moved points in natural order unless a
hint is supplied. Transversal entries are never overwritten once created,
which keeps earlier sift verdicts valid while the chain grows and makes the
whole construction deterministic.
"""

from __future__ import annotations

from math import prod
from typing import Iterable, Iterator

from .errors import PointOutOfRange
from .perm import Perm, identity

__all__ = ["StabilizerChain", "build_chain"]


class _Level:
    __slots__ = ("base", "gens", "transversal", "verified_points", "verified_gens")

    def __init__(self, base: int, ident: Perm):
        self.base = base
        self.gens: list[Perm] = []
        # point -> (u, u^-1) with base^u == point
        self.transversal: dict[int, tuple[Perm, Perm]] = {base: (ident, ident)}
        # watermark of Schreier pairs already sifted successfully
        self.verified_points = 0
        self.verified_gens = 0

    def copy(self) -> "_Level":
        other = _Level.__new__(_Level)
        other.base = self.base
        other.gens = list(self.gens)
        other.transversal = dict(self.transversal)
        other.verified_points = self.verified_points
        other.verified_gens = self.verified_gens
        return other


def _extend_transversal(lvl: _Level) -> None:
    frontier = list(lvl.transversal)
    while frontier:
        nxt = []
        for pt in frontier:
            t = lvl.transversal[pt][0]
            for g in lvl.gens:
                img = g.apply(pt)
                if img not in lvl.transversal:
                    u = t * g
                    lvl.transversal[img] = (u, u.inverse())
                    nxt.append(img)
        frontier = nxt


def _sift_from(levels: list[_Level], p: Perm, i: int) -> tuple[Perm, int]:
    while i < len(levels):
        lvl = levels[i]
        entry = lvl.transversal.get(p.apply(lvl.base))
        if entry is None:
            return p, i
        p = p * entry[1]
        i += 1
    return p, len(levels)


def _add_strong_generator(levels: list[_Level], ident: Perm, degree: int, r: Perm, j: int) -> None:
    # r fixes the bases of levels 0..j-1, so it is a valid generator there too
    if j == len(levels):
        base = min(pt for pt in range(1, degree + 1) if r.apply(pt) != pt)
        levels.append(_Level(base, ident))
    for m in range(j + 1):
        lvl = levels[m]
        if r not in lvl.gens:
            lvl.gens.append(r)


def _verify_level(levels: list[_Level], ident: Perm, degree: int, i: int) -> int | None:
    """Sift the unchecked Schreier generators of level i.

    Returns the deepest modified level on the first failure, or None once
    every Schreier generator of this level sifts to the identity.
    """
    lvl = levels[i]
    _extend_transversal(lvl)
    points = list(lvl.transversal)
    gens = lvl.gens
    n_points, n_gens = len(points), len(gens)
    vp, vg = lvl.verified_points, lvl.verified_gens
    for pi in range(n_points):
        pt = points[pi]
        t = lvl.transversal[pt][0]
        for gi in range(n_gens):
            if pi < vp and gi < vg:
                continue
            g = gens[gi]
            img = g.apply(pt)
            sg = t * g * lvl.transversal[img][1]
            if sg.is_identity():
                continue
            r, j = _sift_from(levels, sg, i + 1)
            if not r.is_identity():
                _add_strong_generator(levels, ident, degree, r, j)
                return j
    lvl.verified_points = n_points
    lvl.verified_gens = n_gens
    return None


def _complete(levels: list[_Level], ident: Perm, degree: int) -> None:
    i = len(levels) - 1
    while i >= 0:
        stuck = _verify_level(levels, ident, degree, i)
        i = i - 1 if stuck is None else stuck


class StabilizerChain:
    """Base, strong generators, and transversals for a permutation group."""

    __slots__ = ("degree", "levels", "ident")

    def __init__(self, degree: int, levels: list[_Level], ident: Perm):
        self.degree = degree
        self.levels = levels
        self.ident = ident

    def order(self) -> int:
        return prod(len(lvl.transversal) for lvl in self.levels)

    def base(self) -> tuple[int, ...]:
        return tuple(lvl.base for lvl in self.levels)

    def sift(self, p: Perm) -> Perm:
        residue, _ = _sift_from(self.levels, p, 0)
        return residue

    def contains(self, p: Perm) -> bool:
        return self.sift(p).is_identity()

    def stabilizer_generators(self) -> list[Perm]:
        """Generators of the stabilizer of the first base point."""
        if len(self.levels) < 2:
            return []
        return list(self.levels[1].gens)

    def iter_elements(self) -> Iterator[Perm]:
        """Each element exactly once, as a product of transversal entries."""
        if not self.levels:
            yield self.ident
            return

        def rec(idx: int, acc: Perm) -> Iterator[Perm]:
            if idx < 0:
                yield acc
                return
            lvl = self.levels[idx]
            for pt in sorted(lvl.transversal):
                yield from rec(idx - 1, acc * lvl.transversal[pt][0])

        yield from rec(len(self.levels) - 1, self.ident)

    def extended(self, new_gens: Iterable[Perm]) -> "StabilizerChain":
        """A new chain for the group generated by this one plus new_gens."""
        levels = [lvl.copy() for lvl in self.levels]
        changed = False
        for g in new_gens:
            if g.is_identity():
                continue
            r, j = _sift_from(levels, g, 0)
            if not r.is_identity():
                _add_strong_generator(levels, self.ident, self.degree, r, j)
                changed = True
        if not changed:
            return self
        _complete(levels, self.ident, self.degree)
        return StabilizerChain(self.degree, levels, self.ident)


def build_chain(degree: int, generators: Iterable[Perm], base_hint: tuple[int, ...] = ()) -> StabilizerChain:
    ident = identity(degree)
    for b in base_hint:
        if not 1 <= b <= degree:
            raise PointOutOfRange(f"base point {b} outside 1..{degree}")
    if len(set(base_hint)) != len(base_hint):
        raise PointOutOfRange("base hint points must be distinct")
    levels = [_Level(b, ident) for b in base_hint]
    for g in generators:
        if g.is_identity():
            continue
        r, j = _sift_from(levels, g, 0)
        if not r.is_identity():
            _add_strong_generator(levels, ident, degree, r, j)
    _complete(levels, ident, degree)
    chain = StabilizerChain(degree, levels, ident)
    assert all(chain.contains(g) for g in generators)
    return chain
