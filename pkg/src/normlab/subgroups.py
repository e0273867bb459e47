"""Relative subgroup operations inside an ambient group.

Generation, intersection, normal closure, core, centralizer, normalizer,
full subgroup enumeration, minimal normal subgroups, and simplicity.
All functions are pure over immutable inputs.
"""

from __future__ import annotations

from typing import Sequence

from .arith import is_prime_power
from .closure import dimino_extend
from .errors import AmbientMismatch, NotASubgroup, OrderTooLarge
from .group import Group, trivial_group
from .limits import get_limits
from .perm import Perm, conjugate, format_perm, _t_compose, _t_conjugate, _t_inverse

__all__ = [
    "Subgroup",
    "subgroup",
    "whole",
    "trivial_subgroup",
    "conjugate_subgroup",
    "join",
    "intersection",
    "normal_closure",
    "core",
    "centralizer",
    "center",
    "normalizer",
    "is_normal",
    "enumerate_subgroups",
    "minimal_normal_subgroups",
    "is_simple",
    "subgroup_le",
    "subgroups_equal",
    "fingerprint",
]


class Subgroup:
    """A group tagged with the ambient group it lives in."""

    __slots__ = ("ambient", "carrier")

    def __init__(self, ambient: Group, carrier: Group):
        self.ambient = ambient
        self.carrier = carrier

    def order(self) -> int:
        return self.carrier.order()

    @property
    def generators(self) -> tuple[Perm, ...]:
        return self.carrier.generators

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order()} of order-{self.ambient.order()} ambient)"


def _same_group(a: Group, b: Group) -> bool:
    return a is b or (a.degree == b.degree and a.generators == b.generators)


def _check_ambient(ambient: Group, *subs: Subgroup) -> None:
    for s in subs:
        if not _same_group(ambient, s.ambient):
            raise AmbientMismatch("subgroup belongs to a different ambient group")


def subgroup(ambient: Group, gens: Sequence[Perm], check: bool = True) -> Subgroup:
    """Subgroup of the ambient group generated by the given permutations."""
    if check:
        for g in gens:
            if not ambient.contains(g):
                raise NotASubgroup(f"generator {format_perm(g)} not in the ambient group")
    return Subgroup(ambient, Group(ambient.degree, gens))


def whole(G: Group) -> Subgroup:
    return Subgroup(G, G)


def trivial_subgroup(G: Group) -> Subgroup:
    return Subgroup(G, trivial_group(G.degree))


def conjugate_subgroup(H: Subgroup, g: Perm) -> Subgroup:
    return Subgroup(H.ambient, Group(H.ambient.degree, [conjugate(h, g) for h in H.generators]))


def subgroup_le(A: Subgroup, B: Subgroup) -> bool:
    """True when A is contained in B (same ambient assumed)."""
    return all(B.carrier.contains(g) for g in A.generators)


def subgroups_equal(A: Subgroup, B: Subgroup) -> bool:
    return A.order() == B.order() and subgroup_le(A, B)


def fingerprint(S: Subgroup) -> str:
    """Deterministic short description: order plus a canonical generator list."""
    limits = get_limits()
    if S.order() <= limits.enum_bound:
        gens = S.carrier.canonical_generators()
    else:
        gens = S.generators
    if not gens:
        return "1:()"
    return f"{S.order()}:" + ",".join(format_perm(g) for g in gens)


def _subgroup_sort_key(S: Subgroup):
    return (S.order(), tuple(sorted(S.carrier.element_tuples())))


# -- generation and intersection ---------------------------------------------


def join(ambient: Group, A: Subgroup, B: Subgroup) -> Subgroup:
    """Subgroup generated by the union of the two generator sets."""
    _check_ambient(ambient, A, B)
    gens = list(A.generators)
    for g in B.generators:
        if g not in gens:
            gens.append(g)
    return Subgroup(ambient, Group(ambient.degree, gens))


def intersection(ambient: Group, A: Subgroup, B: Subgroup) -> Subgroup:
    """Exact intersection, by enumerating the smaller factor."""
    _check_ambient(ambient, A, B)
    bound = get_limits().enum_bound
    small, big = (A, B) if A.order() <= B.order() else (B, A)
    if small.order() > bound:
        raise OrderTooLarge(
            f"both intersection factors exceed the enumeration bound {bound}"
        )
    big_set = big.carrier.element_tuples() if big.order() <= bound else None
    common = set()
    for t in small.carrier.element_tuples():
        if big_set is not None:
            ok = t in big_set
        else:
            ok = big.carrier.chain.contains(Perm(t, _checked=True))
        if ok:
            common.add(t)
    return Subgroup(ambient, Group.from_element_tuples(ambient.degree, common))


def normal_closure(ambient: Group, A: Subgroup) -> Subgroup:
    """Smallest normal subgroup of the ambient group containing A."""
    _check_ambient(ambient, A)
    gens = [g for g in A.generators if not g.is_identity()]
    if not gens:
        return trivial_subgroup(ambient)
    from .chain import build_chain

    chain = build_chain(ambient.degree, gens)
    queue = list(gens)
    qi = 0
    while qi < len(queue):
        h = queue[qi]
        qi += 1
        for g in ambient.generators:
            c = conjugate(h, g)
            if not chain.contains(c):
                gens.append(c)
                queue.append(c)
                chain = chain.extended([c])
    carrier = Group(ambient.degree, gens)
    carrier._chain = chain
    return Subgroup(ambient, carrier)


def core(ambient: Group, H: Subgroup) -> Subgroup:
    """Largest normal subgroup of the ambient group contained in H."""
    _check_ambient(ambient, H)
    K = set(H.carrier.element_tuples())
    gen_invs = [_t_inverse(g.images) for g in ambient.generators]
    changed = True
    while changed and len(K) > 1:
        changed = False
        for ginv in gen_invs:
            K2 = {x for x in K if _t_conjugate(x, ginv) in K}
            if len(K2) != len(K):
                K = K2
                changed = True
    return Subgroup(ambient, Group.from_element_tuples(ambient.degree, K))


def centralizer(ambient: Group, A: Subgroup) -> Subgroup:
    """Elements of the ambient group commuting with every element of A."""
    _check_ambient(ambient, A)
    bound = get_limits().enum_bound
    if ambient.order() > bound:
        raise OrderTooLarge(f"centralizer search needs order <= {bound}")
    targets = [g.images for g in A.generators if not g.is_identity()]
    if not targets:
        return whole(ambient)
    cent = {
        t
        for t in ambient.element_tuples()
        if all(_t_compose(t, h) == _t_compose(h, t) for h in targets)
    }
    return Subgroup(ambient, Group.from_element_tuples(ambient.degree, cent))


def center(G: Group) -> Subgroup:
    return G.cached("center", lambda: centralizer(G, whole(G)))


def is_normal(ambient: Group, H: Subgroup) -> bool:
    """True when conjugation by every ambient generator preserves H."""
    _check_ambient(ambient, H)
    return all(
        H.carrier.contains(conjugate(h, g))
        for h in H.generators
        for g in ambient.generators
    )


# -- normalizer ---------------------------------------------------------------


def normalizer(ambient: Group, H: Subgroup, method: str = "auto") -> Subgroup:
    """The set of ambient elements g with H^g == H.

    The default path is a pruned backtrack over the stabilizer chain;
    method="exhaustive" filters the full element list instead (both paths
    agree and are cross-checked in the test suite).
    """
    _check_ambient(ambient, H)
    bound = get_limits().enum_bound
    if ambient.order() > bound:
        raise OrderTooLarge(f"normalizer search needs ambient order <= {bound}")
    if H.order() == 1:
        return whole(ambient)
    if is_normal(ambient, H):
        return whole(ambient)
    if method == "exhaustive":
        H_set = H.carrier.element_tuples()
        h_gens = [g.images for g in H.generators if not g.is_identity()]
        elems = {
            t
            for t in ambient.element_tuples()
            if all(_t_conjugate(h, t) in H_set for h in h_gens)
        }
        return Subgroup(ambient, Group.from_element_tuples(ambient.degree, elems))
    found = _normalizer_backtrack(ambient, H)
    return Subgroup(ambient, Group.from_element_tuples(ambient.degree, found))


def _normalizer_backtrack(ambient: Group, H: Subgroup) -> set[tuple[int, ...]]:
    chain = ambient.chain
    levels = chain.levels
    degree = ambient.degree
    ident = tuple(range(1, degree + 1))
    if not levels:
        return {ident}

    # H-orbit structure on points: a normalizing element must map orbits to
    # orbits of equal size, injectively
    h_gens = [g.images for g in H.generators if not g.is_identity()]
    orbit_id = [0] * (degree + 1)
    orbit_sizes: list[int] = []
    assigned = [False] * (degree + 1)
    for pt in range(1, degree + 1):
        if assigned[pt]:
            continue
        oid = len(orbit_sizes)
        orb = [pt]
        assigned[pt] = True
        orbit_id[pt] = oid
        i = 0
        while i < len(orb):
            x = orb[i]
            i += 1
            for g in h_gens:
                y = g[x - 1]
                if not assigned[y]:
                    assigned[y] = True
                    orbit_id[y] = oid
                    orb.append(y)
        orbit_sizes.append(len(orb))

    H_set = H.carrier.element_tuples()
    found: list[tuple[int, ...]] = []
    n_levels = len(levels)
    transversals = [
        [(pt, lvl.transversal[pt][0].images) for pt in sorted(lvl.transversal)]
        for lvl in levels
    ]

    def dfs(idx: int, m: tuple[int, ...], omap: dict[int, int], used: set[int]) -> None:
        if idx == n_levels:
            if all(_t_conjugate(h, m) in H_set for h in h_gens):
                found.append(m)
            return
        base = levels[idx].base
        o_src = orbit_id[base]
        for _, t in transversals[idx]:
            m2 = _t_compose(t, m)
            o_dst = orbit_id[m2[base - 1]]
            if orbit_sizes[o_src] != orbit_sizes[o_dst]:
                continue
            committed = omap.get(o_src)
            if committed is not None:
                if committed != o_dst:
                    continue
                dfs(idx + 1, m2, omap, used)
            else:
                if o_dst in used:
                    continue
                omap2 = dict(omap)
                omap2[o_src] = o_dst
                dfs(idx + 1, m2, omap2, used | {o_dst})

    dfs(0, ident, {}, set())
    return set(found)


# -- subgroup enumeration ------------------------------------------------------


def enumerate_subgroups(G: Group) -> list[Subgroup]:
    """All subgroups, each exactly once, sorted by (order, element set).

    Seeds with every cyclic subgroup and closes under joins with cyclic
    subgroups of prime-power order (the same fixed point as closing under
    all pairwise joins, since every subgroup is generated by its elements
    of prime-power order). Work happens once per conjugacy class of
    subgroups; classes are then expanded by conjugation.
    """

    def compute():
        limits = get_limits()
        n = G.order()
        if n > limits.subgroup_bound:
            raise OrderTooLarge(
                f"subgroup enumeration needs order <= {limits.subgroup_bound}"
            )
        degree = G.degree
        ident = tuple(range(1, degree + 1))
        full = G.element_tuples()
        half_cap = n // 2
        gen_tuples = [g.images for g in G.generators if not g.is_identity()]

        subs: dict[frozenset, tuple] = {frozenset([ident]): ()}
        cyclics: list[tuple[frozenset, tuple[int, ...]]] = []
        for t in sorted(full):
            if t == ident:
                continue
            powers = [ident]
            x = t
            while x != ident:
                powers.append(x)
                x = _t_compose(x, t)
            key = frozenset(powers)
            if key not in subs:
                subs[key] = (t,)
                cyclics.append((key, t))
        pp_cyclics = [(s, g) for (s, g) in cyclics if is_prime_power(len(s))]

        def expand_orbit(key: frozenset) -> frozenset:
            orbit_keys = [key]
            seen = {key}
            i = 0
            while i < len(orbit_keys):
                k = orbit_keys[i]
                i += 1
                k_gens = subs[k]
                for g in gen_tuples:
                    ck = frozenset(_t_conjugate(x, g) for x in k)
                    if ck not in seen:
                        seen.add(ck)
                        orbit_keys.append(ck)
                        if ck not in subs:
                            subs[ck] = tuple(_t_conjugate(x, g) for x in k_gens)
            return min(orbit_keys, key=lambda s: tuple(sorted(s)))

        pending: list[frozenset] = []
        rep_seen: set[frozenset] = set()
        for key, _ in [(frozenset([ident]), None)] + cyclics:
            rep = expand_orbit(key)
            if rep not in rep_seen:
                rep_seen.add(rep)
                pending.append(rep)
        qi = 0
        while qi < len(pending):
            X = pending[qi]
            qi += 1
            X_gens = list(subs[X])
            for cset, cgen in pp_cyclics:
                if cgen in X:
                    continue
                J = dimino_extend(X, X_gens, [cgen], cap=half_cap, full_set=full)
                Jkey = J if isinstance(J, frozenset) else frozenset(J)
                if Jkey not in subs:
                    subs[Jkey] = tuple(X_gens) + (cgen,)
                    rep = expand_orbit(Jkey)
                    if rep not in rep_seen:
                        rep_seen.add(rep)
                        pending.append(rep)
        return [
            Subgroup(G, Group.from_element_tuples(degree, key))
            for key in sorted(subs, key=lambda s: (len(s), tuple(sorted(s))))
        ]

    return G.cached("subgroup_list", compute)


# -- normal structure -----------------------------------------------------------


def minimal_normal_subgroups(G: Group) -> list[Subgroup]:
    """Inclusion-minimal non-trivial normal subgroups.

    Candidates are normal closures of single elements, one per conjugacy
    class (the closure only depends on the class).
    """

    def compute():
        closures: list[Subgroup] = []
        for rep in G.conjugacy_class_reps():
            if rep.is_identity():
                continue
            N = normal_closure(G, subgroup(G, [rep], check=False))
            if not any(subgroups_equal(N, M) for M in closures):
                closures.append(N)
        minimal = [
            N
            for N in closures
            if not any(
                M.order() < N.order() and subgroup_le(M, N) for M in closures
            )
        ]
        return sorted(minimal, key=_subgroup_sort_key)

    return G.cached("minimal_normals", compute)


def is_simple(G: Group) -> bool:
    """True when |G| > 1 and every non-identity element generates G normally."""

    def compute():
        if G.order() == 1:
            return False
        for rep in G.conjugacy_class_reps():
            if rep.is_identity():
                continue
            N = normal_closure(G, subgroup(G, [rep], check=False))
            if N.order() != G.order():
                return False
        return True

    return G.cached("is_simple", compute)
