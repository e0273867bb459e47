"""Catalog scanner: hunt for maximal-normalizer pairs, run the requested
verifiers on every hit, exercise Frobenius decompositions, and run the
classical p-nilpotence / factorization property suite on small groups.

Scan items are independent; with jobs > 1 they run in worker processes and
the merged output is sorted, so reports do not depend on the worker count.
"""

from __future__ import annotations

import multiprocessing

from .arith import is_prime, p_part, primes_dividing
from .catalog import GroupSpec, build, parse_spec
from .errors import NormlabError, OrderTooLarge
from .group import Group
from .limits import Limits, get_limits, set_limits
from .structure import (
    fitting_length,
    is_nilpotent,
    is_p_nilpotent,
    is_solvable,
    nilpotency_class,
    sylow_subgroup,
    thompson_subgroup,
)
from .subgroups import (
    Subgroup,
    center,
    centralizer,
    enumerate_subgroups,
    fingerprint,
    is_normal,
    normalizer,
)
from .theorems import (
    MODES,
    frobenius_decomposition,
    maximal_normalizer_context,
    verify_burnside_complement,
    verify_comp22,
    verify_hall_lemma,
    verify_rem23,
    verify_simp,
    verify_thompson,
)
from .verdict import STATUS_SKIPPED, Check, VerdictReport

__all__ = ["scan", "scan_group", "intro_suite", "THEOREM_NAMES"]

VERIFIERS = {
    "comp22": verify_comp22,
    "hall": verify_hall_lemma,
    "rem23": verify_rem23,
    "simp": verify_simp,
}
THEOREM_NAMES = tuple(VERIFIERS)
INTRO_THEOREMS = (
    "intro-burnside",
    "intro-thompson64",
    "intro-frobenius",
    "intro-kegel-wielandt",
    "intro-gross",
)


def _skip_report(theorem: str, subject: dict, reason: str, mode: str | None = None) -> VerdictReport:
    return VerdictReport(
        theorem,
        subject,
        status=STATUS_SKIPPED,
        mode=mode,
        metadata={"reason": reason},
    )


def scan_group(
    spec: GroupSpec,
    theorems: tuple[str, ...] = THEOREM_NAMES,
    modes: tuple[str, ...] = MODES,
    intro: bool = True,
) -> tuple[list[VerdictReport], dict]:
    """Scan one catalog group; returns its reports plus counters."""
    G, _ = build(spec)
    gname = str(spec)
    stats = {"groups": 1, "pairs": 0, "hits": 0, "skipped_groups": 0}
    reports: list[VerdictReport] = []
    base_subject = {"group": gname, "group_order": G.order()}
    try:
        subs = enumerate_subgroups(G)
    except OrderTooLarge as exc:
        stats["skipped_groups"] = 1
        return [_skip_report("scan", dict(base_subject), str(exc))], stats

    candidates = [
        H for H in subs if H.order() < G.order() and not is_normal(G, H)
    ]
    for H in candidates:
        stats["pairs"] += 1
        subject = dict(base_subject)
        subject["subgroup"] = fingerprint(H)
        subject["subgroup_order"] = H.order()
        try:
            ctx = maximal_normalizer_context(G, H)
            hit_modes = [m for m in modes if ctx.result(m).passed]
        except NormlabError as exc:
            reports.append(_skip_report("maximal-normalizer", subject, str(exc)))
            continue
        if not hit_modes:
            continue
        stats["hits"] += 1
        for mode in hit_modes:
            for thm in theorems:
                try:
                    rep = VERIFIERS[thm](G, H, mode, ctx)
                except NormlabError as exc:
                    rep = _skip_report(thm, dict(subject), str(exc), mode)
                rep.subject.update(subject)
                reports.append(rep)

    # Frobenius decompositions feed the complement-structure checks
    try:
        dec = frobenius_decomposition(G)
    except NormlabError:
        dec = None
    if dec is not None:
        rb = verify_burnside_complement(
            dec.complement, attestation=f"frobenius decomposition of {gname}"
        )
        rb.subject["group"] = gname
        rb.subject["group_order"] = G.order()
        reports.append(rb)
        if is_prime(dec.complement.order()):
            rt = verify_thompson(dec.kernel, dec.complement, G)
            rt.subject["group"] = gname
            reports.append(rt)

    if intro and G.order() <= get_limits().intro_bound:
        reports.extend(intro_suite(G, gname, subs))

    reports.sort(key=VerdictReport.sort_key)
    return reports, stats


# -- intro property suite ----------------------------------------------------------


def intro_suite(G: Group, gname: str, subs: list[Subgroup] | None = None) -> list[VerdictReport]:
    """Classical criteria checked per group: central-Sylow p-nilpotence,
    the Thompson J(P)/Z(P) criterion, the normalizer/centralizer p-group
    criterion, solvability of nilpotent-by-nilpotent factorizations, and the
    Fitting-length bound by the sum of the factors' nilpotency classes.
    """
    if subs is None:
        subs = enumerate_subgroups(G)
    out: list[VerdictReport] = []
    subject = {"group": gname, "group_order": G.order()}
    primes = primes_dividing(G.order())

    # central Sylow subgroups force p-nilpotence
    checks = []
    for p in primes:
        P = sylow_subgroup(G, p)
        N = normalizer(G, P)
        central = all(
            (pg * ng) == (ng * pg) for pg in P.generators for ng in N.generators
        )
        if not central:
            checks.append(Check(f"p={p}", True, "Sylow not central in its normalizer"))
        else:
            ok = is_p_nilpotent(G, p)
            checks.append(
                Check(f"p={p}", ok, "" if ok else "central Sylow without a normal complement")
            )
    out.append(VerdictReport("intro-burnside", dict(subject), [], checks).finalize())

    # Thompson's normal p-complement criterion (odd primes)
    checks = []
    for p in primes:
        if p == 2:
            continue
        P = sylow_subgroup(G, p)
        J = thompson_subgroup(P.carrier)
        NJ = normalizer(G, Subgroup(G, J.carrier))
        CZ = centralizer(G, Subgroup(G, center(P.carrier).carrier))
        if is_p_nilpotent(NJ.carrier, p) and is_p_nilpotent(CZ.carrier, p):
            ok = is_p_nilpotent(G, p)
            checks.append(
                Check(f"p={p}", ok, "" if ok else "local complements without a global one")
            )
        else:
            checks.append(Check(f"p={p}", True, "antecedent not satisfied"))
    out.append(VerdictReport("intro-thompson64", dict(subject), [], checks).finalize())

    # p-nilpotent iff N(Q)/C(Q) is a p-group for every non-trivial p-subgroup Q
    checks = []
    for p in primes:
        lhs = is_p_nilpotent(G, p)
        rhs = True
        witness = ""
        for Q in subs:
            q_order = Q.order()
            if q_order == 1 or q_order != p_part(q_order, p):
                continue
            N = normalizer(G, Q)
            C = centralizer(G, Q)
            ratio = N.order() // C.order()
            if ratio != p_part(ratio, p):
                rhs = False
                witness = f"|N/C| = {ratio} for {fingerprint(Q)}"
                break
        checks.append(
            Check(
                f"p={p}",
                lhs == rhs,
                witness or f"{p}-nilpotent={lhs}, criterion={rhs}",
            )
        )
    out.append(VerdictReport("intro-frobenius", dict(subject), [], checks).finalize())

    # nilpotent-by-nilpotent factorizations: solvability and Fitting length
    nilpotent_flags = [is_nilpotent(S.carrier) for S in subs]
    elem_sets = [S.carrier.element_tuples() for S in subs]
    n = G.order()
    factorizations: list[tuple[int, int]] = []
    for i in range(len(subs)):
        if not nilpotent_flags[i]:
            continue
        a = subs[i].order()
        for j in range(i, len(subs)):
            if not nilpotent_flags[j]:
                continue
            if a * subs[j].order() == n * len(elem_sets[i] & elem_sets[j]):
                factorizations.append((i, j))
    kw_ok = True
    kw_witness = ""
    if factorizations and not is_solvable(G):
        kw_ok = False
        i, j = factorizations[0]
        kw_witness = f"{fingerprint(subs[i])} * {fingerprint(subs[j])} = G, G non-solvable"
    out.append(
        VerdictReport(
            "intro-kegel-wielandt",
            dict(subject),
            [],
            [Check("factorizations-solvable", kw_ok, kw_witness or f"{len(factorizations)} factorization(s)")],
        ).finalize()
    )

    gross_ok = True
    gross_witness = ""
    if kw_ok and factorizations:
        fl = fitting_length(G)
        for i, j in factorizations:
            bound = nilpotency_class(subs[i].carrier) + nilpotency_class(subs[j].carrier)
            if fl > bound:
                gross_ok = False
                gross_witness = (
                    f"Fitting length {fl} > {bound} for "
                    f"{fingerprint(subs[i])} * {fingerprint(subs[j])}"
                )
                break
    out.append(
        VerdictReport(
            "intro-gross",
            dict(subject),
            [],
            [
                Check(
                    "fitting-length-bounded",
                    gross_ok,
                    gross_witness or f"{len(factorizations)} factorization(s)",
                )
            ],
        ).finalize()
    )
    return out


# -- the scan driver ---------------------------------------------------------------


def _scan_worker(args) -> tuple[list[dict], dict]:
    spec_str, theorems, modes, intro, limits = args
    set_limits(Limits(*limits))
    reports, stats = scan_group(parse_spec(spec_str), theorems, modes, intro)
    return [r.to_dict() for r in reports], stats


def summarize(reports: list[VerdictReport], stats: dict) -> dict:
    status_counts = {s: 0 for s in ("confirmed", "hypotheses-not-met", "counterexample", "skipped-too-large")}
    per_theorem: dict[str, dict[str, int]] = {}
    for r in reports:
        status_counts[r.status] = status_counts.get(r.status, 0) + 1
        per_theorem.setdefault(r.theorem, {})
        per_theorem[r.theorem][r.status] = per_theorem[r.theorem].get(r.status, 0) + 1
    return {
        "status_counts": status_counts,
        "per_theorem": per_theorem,
        "groups_scanned": stats.get("groups", 0),
        "groups_skipped": stats.get("skipped_groups", 0),
        "pairs_scanned": stats.get("pairs", 0),
        "maximal_normalizer_hits": stats.get("hits", 0),
    }


def scan(
    specs: list[GroupSpec],
    max_order: int | None = None,
    theorems: tuple[str, ...] = THEOREM_NAMES,
    modes: tuple[str, ...] = MODES,
    intro: bool = True,
    jobs: int = 1,
) -> tuple[list[VerdictReport], dict]:
    """Run the scan over the given specs; returns (reports, summary)."""
    selected: list[GroupSpec] = []
    for spec in specs:
        G, _ = build(spec)
        if max_order is None or G.order() <= max_order:
            selected.append(spec)

    all_reports: list[VerdictReport] = []
    totals = {"groups": 0, "pairs": 0, "hits": 0, "skipped_groups": 0}
    if jobs <= 1 or len(selected) <= 1:
        for spec in selected:
            reports, stats = scan_group(spec, theorems, modes, intro)
            all_reports.extend(reports)
            for k in totals:
                totals[k] += stats.get(k, 0)
    else:
        lim = get_limits()
        args = [
            (str(spec), theorems, modes, intro,
             (lim.enum_bound, lim.subgroup_bound, lim.index_bound, lim.intro_bound))
            for spec in selected
        ]
        with multiprocessing.get_context("fork").Pool(jobs) as pool:
            for dicts, stats in pool.map(_scan_worker, args):
                all_reports.extend(VerdictReport.from_dict(d) for d in dicts)
                for k in totals:
                    totals[k] += stats.get(k, 0)

    all_reports.sort(key=VerdictReport.sort_key)
    return all_reports, summarize(all_reports, totals)
