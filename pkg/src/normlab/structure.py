"""Structural invariants: series, solvability, nilpotency, p-cores, the
Fitting subgroup and Fitting length, Sylow and Hall subgroups, quotients,
p-nilpotence, the Thompson subgroup, and cyclic/quaternion recognition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Callable

from .arith import is_prime, is_prime_power, p_part, p_valuation, primes_dividing
from .closure import mulclose
from .errors import (
    IndexTooLarge,
    InvalidPrime,
    NotASubgroup,
    NotNilpotent,
    NotNormal,
    NotPGroup,
    NotSolvable,
)
from .group import Group, trivial_group
from .limits import get_limits
from .perm import Perm, commutator, _t_compose
from .subgroups import (
    Subgroup,
    _check_ambient,
    core,
    enumerate_subgroups,
    is_normal,
    join,
    normal_closure,
    normalizer,
    subgroup,
    trivial_subgroup,
    whole,
)

__all__ = [
    "SeriesReport",
    "QuotientGroup",
    "derived_series",
    "is_solvable",
    "lower_central_series",
    "is_nilpotent",
    "nilpotency_class",
    "is_abelian",
    "p_core",
    "fitting_subgroup",
    "fitting_length",
    "sylow_subgroup",
    "is_hall",
    "quotient",
    "is_p_nilpotent",
    "thompson_subgroup",
    "is_cyclic",
    "is_generalized_quaternion",
]

# full-commutator element sets are cheap below this order; larger groups go
# through generator commutators plus normal closure
_COMMUTATOR_SET_MAX = 360


@dataclass
class SeriesReport:
    """A descending subgroup series; terminated means it reached the trivial group."""

    terms: list[Subgroup]
    kind: str
    terminated: bool


def _commutator_subgroup(G: Group, H: Group, inside: Group) -> Group:
    """[G, H] as a subgroup of `inside` (which must contain it and normalize it)."""
    if G.order() <= _COMMUTATOR_SET_MAX and H.order() <= _COMMUTATOR_SET_MAX:
        gt = G.element_tuples()
        ht = H.element_tuples()
        from .perm import _t_inverse

        comms = set()
        for x in gt:
            xi = _t_inverse(x)
            for y in ht:
                # x^-1 * y^-1 * x * y
                comms.add(_t_compose(_t_compose(xi, _t_inverse(y)), _t_compose(x, y)))
        closed = mulclose(G.degree, comms)
        return Group.from_element_tuples(G.degree, closed)
    gens = []
    for x in G.generators:
        for y in H.generators:
            c = commutator(x, y)
            if not c.is_identity():
                gens.append(c)
    if not gens:
        return trivial_group(G.degree)
    return normal_closure(inside, subgroup(inside, gens, check=False)).carrier


def derived_series(G: Group) -> SeriesReport:
    """Successive commutator subgroups until trivial or stable."""

    def compute():
        terms = [whole(G)]
        current = G
        if current.order() == 1:
            return SeriesReport(terms, "derived", terminated=True)
        while True:
            D = _commutator_subgroup(current, current, current)
            if D.order() == current.order():
                return SeriesReport(terms, "derived", terminated=False)
            terms.append(Subgroup(G, D))
            if D.order() == 1:
                return SeriesReport(terms, "derived", terminated=True)
            current = D

    return G.cached("derived_series", compute)


def is_solvable(G: Group) -> bool:
    return derived_series(G).terminated


def lower_central_series(G: Group) -> SeriesReport:
    """Terms [G, [G,G], [[G,G],G], ..] until trivial or stable."""

    def compute():
        terms = [whole(G)]
        current = G
        if current.order() == 1:
            return SeriesReport(terms, "lower-central", terminated=True)
        while True:
            nxt = _commutator_subgroup(current, G, G)
            if nxt.order() == current.order():
                return SeriesReport(terms, "lower-central", terminated=False)
            terms.append(Subgroup(G, nxt))
            if nxt.order() == 1:
                return SeriesReport(terms, "lower-central", terminated=True)
            current = nxt

    return G.cached("lower_central_series", compute)


def is_nilpotent(G: Group) -> bool:
    return lower_central_series(G).terminated


def nilpotency_class(G: Group) -> int:
    series = lower_central_series(G)
    if not series.terminated:
        raise NotNilpotent("nilpotency class is defined only for nilpotent groups")
    return len(series.terms) - 1


def is_abelian(G: Group) -> bool:
    gens = G.generators
    return all(
        (gens[i] * gens[j]) == (gens[j] * gens[i])
        for i in range(len(gens))
        for j in range(i + 1, len(gens))
    )


def p_core(G: Group, p: int) -> Subgroup:
    """Largest normal p-subgroup: the core of a Sylow p-subgroup."""
    if not is_prime(p):
        raise InvalidPrime(f"{p} is not prime")

    def compute():
        P = sylow_subgroup(G, p)
        if P.order() == 1:
            return trivial_subgroup(G)
        return core(G, P)

    return G.cached(("p_core", p), compute)


def fitting_subgroup(G: Group) -> Subgroup:
    """Largest nilpotent normal subgroup, as the join of all p-cores."""

    def compute():
        result = trivial_subgroup(G)
        for p in primes_dividing(G.order()):
            result = join(G, result, p_core(G, p))
        assert is_normal(G, result)
        assert is_nilpotent(result.carrier)
        return result

    return G.cached("fitting", compute)


def fitting_length(G: Group) -> int:
    """Length of the ascending Fitting series of a solvable group."""
    if not is_solvable(G):
        raise NotSolvable("Fitting length is defined only for solvable groups")
    length = 0
    current = G
    while current.order() > 1:
        F = fitting_subgroup(current)
        length += 1
        current = quotient(current, F).image
    return length


def sylow_subgroup(G: Group, p: int) -> Subgroup:
    """A subgroup whose order is the full p-part of the group order.

    Grows a p-subgroup P by locating an element of its normalizer whose
    p-part falls outside P and adjoining a suitable power, until the full
    p-part is reached. Trivial when p does not divide the order.
    """
    if not is_prime(p):
        raise InvalidPrime(f"{p} is not prime")

    def compute():
        target = p_part(G.order(), p)
        if target == 1:
            return trivial_subgroup(G)
        seed = None
        for x in G.elements():
            m = x.order()
            v = p_valuation(m, p)
            if v:
                seed = x ** (m // p**v)
                break
        assert seed is not None
        P = Group(G.degree, (seed,))
        rounds = 0
        max_rounds = p_valuation(target, p) + 1
        while P.order() < target:
            rounds += 1
            if rounds > max_rounds:
                raise AssertionError("Sylow growth failed to terminate")
            N = normalizer(G, Subgroup(G, P)).carrier
            z = None
            for y in N.elements():
                m = y.order()
                v = p_valuation(m, p)
                if v == 0:
                    continue
                yp = y ** (m // p**v)
                if not P.contains(yp):
                    z = yp
                    break
            assert z is not None, "normalizer of a non-Sylow p-subgroup must grow it"
            # reduce z so that z^p lands in P (image of order exactly p)
            w = z
            while not P.contains(w**p):
                w = w**p
            P = Group(G.degree, P.generators + (w,))
        return Subgroup(G, P)

    return G.cached(("sylow", p), compute)


def is_hall(G: Group, H: Subgroup) -> bool:
    """True when the order and index of H in G are coprime."""
    from .subgroups import _same_group

    if not _same_group(G, H.ambient):
        raise NotASubgroup("subgroup has a different ambient group")
    h = H.order()
    return gcd(h, G.order() // h) == 1


# -- quotients -----------------------------------------------------------------


@dataclass
class QuotientGroup:
    """Faithful image of a group on the right cosets of a normal subgroup."""

    source: Group
    modulus: Subgroup
    image: Group
    _project: Callable[[Perm], Perm] = field(repr=False)

    def project(self, p: Perm) -> Perm:
        """Image of a source element."""
        return self._project(p)

    def project_subgroup(self, S: Subgroup) -> Subgroup:
        """Image of a subgroup of the source, via its generators."""
        gens = [self._project(g) for g in S.generators]
        return subgroup(self.image, gens, check=False)


def quotient(G: Group, N: Subgroup) -> QuotientGroup:
    """The quotient of G by a normal subgroup N, as a coset action.

    The image acts on the right cosets of N (degree = index). The trivial
    modulus short-circuits to an identity projection and N == G to the
    trivial image, so callers can quotient unconditionally.
    """
    _check_ambient(G, N)
    if not is_normal(G, N):
        raise NotNormal("quotient modulus must be normal")
    n_order = N.order()
    index = G.order() // n_order
    if n_order == 1:
        return QuotientGroup(G, N, G, lambda p: p)
    if index == 1:
        ident1 = Perm((1,), _checked=True)
        return QuotientGroup(G, N, trivial_group(1), lambda p: ident1)
    if index > get_limits().index_bound:
        raise IndexTooLarge(f"coset action degree {index} exceeds bound")

    n_sorted = sorted(N.carrier.element_tuples())

    def coset_key(t: tuple[int, ...]) -> tuple[int, ...]:
        return min(_t_compose(x, t) for x in n_sorted)

    ident = tuple(range(1, G.degree + 1))
    reps: list[tuple[int, ...]] = [ident]
    index_of: dict[tuple[int, ...], int] = {coset_key(ident): 0}
    gen_tuples = [g.images for g in G.generators]
    edges: dict[tuple[int, int], int] = {}
    qi = 0
    while qi < len(reps):
        r = reps[qi]
        for gi, g in enumerate(gen_tuples):
            t = _t_compose(r, g)
            key = coset_key(t)
            j = index_of.get(key)
            if j is None:
                j = len(reps)
                index_of[key] = j
                reps.append(t)
            edges[(qi, gi)] = j
        qi += 1
    assert len(reps) == index

    image_gens = [
        Perm(tuple(edges[(i, gi)] + 1 for i in range(index)), _checked=True)
        for gi in range(len(gen_tuples))
    ]
    image = Group(index, image_gens)

    def project(p: Perm) -> Perm:
        images = tuple(index_of[coset_key(_t_compose(r, p.images))] + 1 for r in reps)
        return Perm(images, _checked=True)

    return QuotientGroup(G, N, image, project)


# -- p-nilpotence and p-group recognition ---------------------------------------


def is_p_nilpotent(G: Group, p: int) -> bool:
    """True when the subgroup generated by all p'-elements misses p entirely.

    That subgroup is the would-be normal p-complement: the p'-part g^(p^k)
    of every element g is collected and the generated subgroup N must have
    order prime to p.
    """
    if not is_prime(p):
        raise InvalidPrime(f"{p} is not prime")

    def compute():
        from .chain import build_chain

        chain = None
        gens: list[Perm] = []
        for g in G.elements():
            m = g.order()
            part = g ** p_part(m, p)
            if part.is_identity():
                continue
            if chain is None:
                gens = [part]
                chain = build_chain(G.degree, gens)
            elif not chain.contains(part):
                gens.append(part)
                chain = chain.extended([part])
        n_order = 1 if chain is None else chain.order()
        N = Group(G.degree, gens)
        if chain is not None:
            N._chain = chain
        assert is_normal(G, Subgroup(G, N))
        return n_order % p != 0

    return G.cached(("p_nilpotent", p), compute)


def thompson_subgroup(P: Group) -> Subgroup:
    """Join of all abelian subgroups of maximal order in a p-group."""
    if not is_prime_power(P.order()):
        raise NotPGroup("the Thompson subgroup is defined for non-trivial p-groups")

    def compute():
        abelians = [S for S in enumerate_subgroups(P) if is_abelian(S.carrier)]
        best = max(S.order() for S in abelians)
        gens: list[Perm] = []
        for S in abelians:
            if S.order() == best:
                gens.extend(S.generators)
        return subgroup(P, gens, check=False)

    return P.cached("thompson", compute)


def is_cyclic(G: Group) -> bool:
    n = G.order()
    return any(g.order() == n for g in G.elements())


def is_generalized_quaternion(P: Group) -> bool:
    """Non-abelian 2-group of order >= 8 with a unique involution."""
    n = P.order()
    if n == 1 or p_part(n, 2) != n:
        raise NotPGroup("generalized quaternion recognition needs a 2-group")
    if n < 8 or is_abelian(P):
        return False
    involutions = sum(1 for g in P.elements() if g.order() == 2)
    return involutions == 1
