"""Permutation groups backed by a lazily built stabilizer chain.

A Group is immutable once constructed; the chain is built on first demand
under a lock, so first use from concurrent workers is safe. Derived data
(element sets, conjugacy classes, structural subgroups) is memoized on the
instance.
"""

from __future__ import annotations

import threading
from typing import Callable, Iterable, Iterator, Sequence

from .chain import StabilizerChain, build_chain
from .errors import DegreeMismatch, EmptyDegree, OrderTooLarge, PointOutOfRange
from .limits import get_limits
from .perm import Perm, _t_conjugate

__all__ = ["Group", "group_from_generators", "trivial_group"]


class Group:
    """A finite permutation group on the points 1..degree."""

    __slots__ = ("degree", "generators", "_chain", "_stab_chains", "_lock", "_cache")

    def __init__(self, degree: int, generators: Sequence[Perm]):
        if degree < 1:
            raise EmptyDegree("group degree must be >= 1")
        gens = tuple(generators)
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatch(
                    f"generator of degree {g.degree} in group of degree {degree}"
                )
        self.degree = degree
        self.generators = gens
        self._chain: StabilizerChain | None = None
        self._stab_chains: dict[int, StabilizerChain] = {}
        self._lock = threading.Lock()
        self._cache: dict = {}

    # -- chain plumbing ----------------------------------------------------

    @property
    def chain(self) -> StabilizerChain:
        chain = self._chain
        if chain is None:
            with self._lock:
                chain = self._chain
                if chain is None:
                    chain = build_chain(self.degree, self.generators)
                    self._chain = chain
        return chain

    def chain_with_base(self, base_hint: tuple[int, ...]) -> StabilizerChain:
        """A fresh chain whose base starts with the given points."""
        return build_chain(self.degree, self.generators, base_hint=base_hint)

    def cached(self, key, thunk: Callable):
        try:
            return self._cache[key]
        except KeyError:
            value = thunk()
            self._cache[key] = value
            return value

    # -- core queries --------------------------------------------------------

    def order(self) -> int:
        cached = self._cache.get("order")
        if cached is None:
            elems = self._cache.get("elements")
            cached = len(elems) if elems is not None else self.chain.order()
            self._cache["order"] = cached
        return cached

    def contains(self, p: Perm) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatch(
                f"element of degree {p.degree} vs group of degree {self.degree}"
            )
        elems = self._cache.get("elements")
        if elems is not None:
            return p.images in elems
        return self.chain.contains(p)

    def __contains__(self, p: Perm) -> bool:
        return self.contains(p)

    def is_trivial(self) -> bool:
        return all(g.is_identity() for g in self.generators)

    def elements(self, limit: int | None = None) -> Iterator[Perm]:
        """Every element exactly once, in sorted image-tuple order."""
        for t in sorted(self.element_tuples(limit)):
            yield Perm(t, _checked=True)

    def element_tuples(self, limit: int | None = None) -> frozenset[tuple[int, ...]]:
        """The set of all elements as raw image tuples (cached)."""
        cached = self._cache.get("elements")
        if cached is not None:
            return cached
        bound = limit if limit is not None else get_limits().enum_bound
        if self.order() > bound:
            raise OrderTooLarge(f"group order {self.order()} exceeds bound {bound}")
        elems = frozenset(p.images for p in self.chain.iter_elements())
        self._cache["elements"] = elems
        return elems

    def sorted_elements(self, limit: int | None = None) -> list[Perm]:
        return [Perm(t, _checked=True) for t in sorted(self.element_tuples(limit))]

    def orbit(self, point: int) -> set[int]:
        """Orbit of a point under the generator closure."""
        if not 1 <= point <= self.degree:
            raise PointOutOfRange(f"point {point} outside 1..{self.degree}")
        seen = {point}
        frontier = [point]
        while frontier:
            nxt = []
            for pt in frontier:
                for g in self.generators:
                    img = g.apply(pt)
                    if img not in seen:
                        seen.add(img)
                        nxt.append(img)
            frontier = nxt
        return seen

    def is_transitive(self) -> bool:
        return len(self.orbit(1)) == self.degree

    def point_stabilizer(self, point: int) -> Group:
        """The subgroup fixing the given point, via a chain based there."""
        if not 1 <= point <= self.degree:
            raise PointOutOfRange(f"point {point} outside 1..{self.degree}")
        chain = self._stab_chains.get(point)
        if chain is None:
            chain = self.chain_with_base((point,))
            self._stab_chains[point] = chain
        return Group(self.degree, chain.stabilizer_generators())

    def conjugacy_class_reps(self) -> list[Perm]:
        """One representative per conjugacy class, smallest tuple first."""

        def compute():
            gens = [g.images for g in self.generators]
            seen: set[tuple[int, ...]] = set()
            reps: list[Perm] = []
            for t in sorted(self.element_tuples()):
                if t in seen:
                    continue
                reps.append(Perm(t, _checked=True))
                frontier = [t]
                seen.add(t)
                while frontier:
                    nxt = []
                    for x in frontier:
                        for g in gens:
                            y = _t_conjugate(x, g)
                            if y not in seen:
                                seen.add(y)
                                nxt.append(y)
                    frontier = nxt
            return reps

        return self.cached("class_reps", compute)

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_element_tuples(cls, degree: int, elems: Iterable[tuple[int, ...]]) -> Group:
        """Build a group from its full element set, with small canonical generators."""
        elem_set = frozenset(elems)
        gens, closed = _canonical_generators(degree, elem_set)
        assert len(closed) == len(elem_set)
        group = cls(degree, gens)
        group._cache["elements"] = elem_set
        group._cache["order"] = len(elem_set)
        return group

    def canonical_generators(self) -> tuple[Perm, ...]:
        """A deterministic small generating sequence (greedy over sorted elements)."""

        def compute():
            gens, _ = _canonical_generators(self.degree, self.element_tuples())
            return gens

        return self.cached("canonical_gens", compute)

    def __repr__(self) -> str:
        shown = ", ".join(str(g) for g in self.generators[:4])
        if len(self.generators) > 4:
            shown += ", ..."
        return f"Group(degree={self.degree}, gens=[{shown}])"


def _canonical_generators(
    degree: int, elem_set: frozenset[tuple[int, ...]]
) -> tuple[tuple[Perm, ...], set[tuple[int, ...]]]:
    from .closure import dimino_extend  # local import to avoid a cycle

    ident = tuple(range(1, degree + 1))
    closed: set[tuple[int, ...]] = {ident}
    gens: list[tuple[int, ...]] = []
    for t in sorted(elem_set):
        if t in closed:
            continue
        gens.append(t)
        closed = dimino_extend(closed, gens, [t])
        if len(closed) == len(elem_set):
            break
    return tuple(Perm(t, _checked=True) for t in gens), closed


def group_from_generators(degree: int, gens: Sequence[Perm]) -> Group:
    """Group generated by the given permutations of a shared degree."""
    return Group(degree, gens)


def trivial_group(degree: int) -> Group:
    return Group(degree, ())
