"""Command-line interface: analyze a group, verify a named theorem on a
(group, subgroup) pair, or scan the catalog.

Exit codes: 0 success (including hypotheses-not-met), 2 usage or parse
errors, 3 when a counterexample was verified, 4 when everything relevant
was skipped as too large.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import replace

from . import __version__
from .catalog import GroupSpec, build, default_sweep, parse_spec
from .errors import NormlabError, OrderTooLarge, UnknownTheorem
from .limits import limits_from_env, set_limits
from .scan import THEOREM_NAMES, scan
from .structure import (
    fitting_length,
    fitting_subgroup,
    is_nilpotent,
    is_solvable,
)
from .subgroups import (
    Subgroup,
    center,
    fingerprint,
    is_simple,
    minimal_normal_subgroups,
)
from .theorems import (
    MODE_FIT_NORMAL,
    MODES,
    frobenius_decomposition,
    is_frobenius_product,
    maximal_normalizer_context,
    verify_burnside_complement,
    verify_comp22,
    verify_hall_lemma,
    verify_rem23,
    verify_simp,
    verify_thompson,
)
from .verdict import STATUS_COUNTEREXAMPLE, STATUS_SKIPPED, VerdictReport

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_COUNTEREXAMPLE = 3
EXIT_SKIPPED = 4

VERIFY_THEOREMS = ("comp22", "hall", "rem23", "simp", "thompson", "burnside")


def report_document(invocation: list[str], reports: list[VerdictReport], summary: dict,
                    elapsed_s: float, analysis: dict | None = None) -> dict:
    status_counts = {}
    for r in reports:
        status_counts[r.status] = status_counts.get(r.status, 0) + 1
    doc = {
        "tool": "normlab",
        "version": __version__,
        "invocation": list(invocation),
        "reports": [r.to_dict() for r in reports],
        "summary": summary if summary else {"status_counts": status_counts},
        "elapsed_s": elapsed_s,
    }
    if analysis is not None:
        doc["analysis"] = analysis
    return doc


def _render_check(c) -> str:
    mark = "ok" if c.passed else "FAIL"
    witness = f" ({c.witness})" if c.witness else ""
    return f"    [{mark}] {c.name}{witness}"


def _render_report(r: VerdictReport) -> str:
    head = f"{r.subject.get('group', '?')}"
    if "subgroup" in r.subject:
        head += f" / {r.subject['subgroup']}"
    mode = f" [{r.mode}]" if r.mode else ""
    lines = [f"{r.theorem}{mode} on {head}: {r.status} ({r.elapsed_s:.3f}s)"]
    if r.hypothesis_checks:
        lines.append("  hypotheses:")
        lines.extend(_render_check(c) for c in r.hypothesis_checks)
    if r.conclusion_checks:
        lines.append("  conclusions:")
        lines.extend(_render_check(c) for c in r.conclusion_checks)
    return "\n".join(lines)


def _emit(doc: dict, fmt: str, out_path: str | None, human_text: str) -> None:
    payload = json.dumps(doc, indent=2, sort_keys=False)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    if fmt == "json":
        print(payload)
    else:
        print(human_text)


def _build_pair(args) -> tuple[GroupSpec, object, Subgroup | None]:
    spec = parse_spec(args.group, selector=getattr(args, "subgroup", "") or "")
    G, H = build(spec)
    return spec, G, H


def _exit_code_for(reports: list[VerdictReport]) -> int:
    if any(r.status == STATUS_COUNTEREXAMPLE for r in reports):
        return EXIT_COUNTEREXAMPLE
    if reports and all(r.status == STATUS_SKIPPED for r in reports):
        return EXIT_SKIPPED
    return EXIT_OK


# -- commands -------------------------------------------------------------------


def cmd_analyze(args) -> int:
    started = time.perf_counter()
    spec, G, H = _build_pair(args)
    analysis: dict = {"group": str(spec), "order": G.order(), "degree": G.degree}
    solvable = is_solvable(G)
    analysis["solvable"] = solvable
    analysis["nilpotent"] = is_nilpotent(G)
    analysis["fitting_order"] = fitting_subgroup(G).order()
    analysis["fitting_length"] = fitting_length(G) if solvable else None
    analysis["center_order"] = center(G).order()
    try:
        analysis["minimal_normal_orders"] = [m.order() for m in minimal_normal_subgroups(G)]
        analysis["simple"] = is_simple(G)
    except OrderTooLarge:
        analysis["minimal_normal_orders"] = None
        analysis["simple"] = None
    try:
        dec = frobenius_decomposition(G)
        analysis["frobenius"] = (
            {"kernel_order": dec.kernel.order(), "complement_order": dec.complement.order()}
            if dec
            else None
        )
    except OrderTooLarge:
        analysis["frobenius"] = "skipped-too-large"
    if H is not None:
        analysis["subgroup"] = fingerprint(H)
        analysis["subgroup_order"] = H.order()
    elapsed = time.perf_counter() - started
    doc = report_document(list(sys.argv[1:]), [], {}, elapsed, analysis=analysis)
    lines = [f"analyze {analysis['group']}:"]
    for key in (
        "order",
        "degree",
        "solvable",
        "nilpotent",
        "fitting_order",
        "fitting_length",
        "center_order",
        "minimal_normal_orders",
        "simple",
        "frobenius",
        "subgroup",
        "subgroup_order",
    ):
        if key in analysis:
            lines.append(f"  {key}: {analysis[key]}")
    _emit(doc, args.format, args.out, "\n".join(lines))
    return EXIT_OK


def _parse_mode(raw: str) -> str:
    value = raw
    if raw.startswith("def21="):
        value = raw.split("=", 1)[1]
    if value not in MODES:
        raise NormlabError(f"unknown mode {raw!r}; expected def21=fit-normal or def21=h-normal")
    return value


def cmd_verify(args) -> int:
    started = time.perf_counter()
    theorem = args.theorem
    if theorem not in VERIFY_THEOREMS:
        raise UnknownTheorem(f"unknown theorem {theorem!r}; pick from {', '.join(VERIFY_THEOREMS)}")
    mode = _parse_mode(args.mode) if args.mode else MODE_FIT_NORMAL
    spec, G, H = _build_pair(args)
    if H is None:
        raise NormlabError("this theorem needs --subgroup")

    try:
        if theorem in ("comp22", "hall", "rem23", "simp"):
            ctx = maximal_normalizer_context(G, H)
            fn = {
                "comp22": verify_comp22,
                "hall": verify_hall_lemma,
                "rem23": verify_rem23,
                "simp": verify_simp,
            }[theorem]
            report = fn(G, H, mode, ctx)
        elif theorem == "thompson":
            # the acted-on group is the Fitting subgroup; the actor is the
            # selected subgroup
            K = fitting_subgroup(G)
            report = verify_thompson(K, H, G)
        else:  # burnside
            K = fitting_subgroup(G)
            frob = is_frobenius_product(G, K, H)
            attestation = (
                f"verified complement of kernel of order {K.order()}"
                if frob.passed
                else f"attested by invocation (frobenius check: {frob.reason or 'failed'})"
            )
            report = verify_burnside_complement(H, attestation)
    except OrderTooLarge as exc:
        report = VerdictReport(
            theorem,
            {"group": str(spec), "group_order": G.order()},
            status=STATUS_SKIPPED,
            mode=mode,
            metadata={"reason": str(exc)},
        )
    report.subject.setdefault("group", str(spec))
    elapsed = time.perf_counter() - started
    doc = report_document(list(sys.argv[1:]), [report], {}, elapsed)
    _emit(doc, args.format, args.out, _render_report(report))
    return _exit_code_for([report])


def cmd_scan(args) -> int:
    started = time.perf_counter()
    if args.group and not args.sweep:
        specs = [parse_spec(g) for g in args.group]
    else:
        specs = default_sweep(args.max_order)
    theorems = tuple(t.strip() for t in args.theorems.split(",")) if args.theorems else THEOREM_NAMES
    for t in theorems:
        if t not in THEOREM_NAMES:
            raise UnknownTheorem(f"unknown theorem {t!r} in --theorems")
    modes = (_parse_mode(args.mode),) if args.mode else MODES
    reports, summary = scan(
        specs,
        max_order=args.max_order,
        theorems=theorems,
        modes=modes,
        intro=not args.no_intro,
        jobs=args.jobs,
    )
    elapsed = time.perf_counter() - started
    doc = report_document(list(sys.argv[1:]), reports, summary, elapsed)
    out_path = args.out or "normlab-scan.json"
    with open(out_path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(doc, indent=2) + "\n")
    for r in reports:
        subgroup_part = f" {r.subject['subgroup']}" if "subgroup" in r.subject else ""
        mode_part = f" [{r.mode}]" if r.mode else ""
        print(f"{r.subject.get('group', '?')}{subgroup_part} {r.theorem}{mode_part}: {r.status}")
    print(
        f"scan complete: {summary['groups_scanned']} group(s), "
        f"{summary['pairs_scanned']} pair(s), {summary['maximal_normalizer_hits']} hit(s); "
        f"statuses {summary['status_counts']}; report written to {out_path}"
    )
    if summary["status_counts"].get(STATUS_COUNTEREXAMPLE, 0):
        return EXIT_COUNTEREXAMPLE
    relevant = [r for r in reports if r.theorem != "scan"]
    if reports and not relevant:
        return EXIT_SKIPPED
    if relevant and all(r.status == STATUS_SKIPPED for r in relevant):
        return EXIT_SKIPPED
    return EXIT_OK


# -- argument parsing --------------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="normlab",
        description="Finite-group computation engine and theorem verification lab",
    )
    parser.add_argument("--version", action="version", version=f"normlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("human", "json"), default="human")
        p.add_argument("--out", help="write the JSON report document to this path")
        p.add_argument("--enum-bound", type=int, default=None,
                       help="max group order for element enumeration")

    p_an = sub.add_parser("analyze", help="structural invariants of one group")
    p_an.add_argument("--group", required=True, help="group spec, e.g. S:4 or PSL2:17")
    p_an.add_argument("--subgroup", default="", help="subgroup selector (syl:p, stab:k, gens:..)")
    common(p_an)
    p_an.set_defaults(func=cmd_analyze)

    p_ver = sub.add_parser("verify", help="run one theorem verifier on a (group, subgroup) pair")
    p_ver.add_argument("theorem", help="one of " + ", ".join(VERIFY_THEOREMS))
    p_ver.add_argument("--group", required=True)
    p_ver.add_argument("--subgroup", default="", help="subgroup selector (syl:p, stab:k, gens:..)")
    p_ver.add_argument("--mode", default="", help="def21=fit-normal (default) or def21=h-normal")
    common(p_ver)
    p_ver.set_defaults(func=cmd_verify)

    p_scan = sub.add_parser("scan", help="scan catalog groups for theorem verdicts")
    p_scan.add_argument("--sweep", choices=("default",), default=None,
                        help="use the built-in sweep (implied when no --group is given)")
    p_scan.add_argument("--group", action="append", default=[],
                        help="group spec; repeatable")
    p_scan.add_argument("--max-order", type=int, default=2500)
    p_scan.add_argument("--theorems", default="",
                        help="comma list from: " + ", ".join(THEOREM_NAMES))
    p_scan.add_argument("--mode", default="", help="def21 mode; default runs both")
    p_scan.add_argument("--jobs", type=int, default=1)
    p_scan.add_argument("--no-intro", action="store_true",
                        help="skip the classical property suite")
    common(p_scan)
    p_scan.set_defaults(func=cmd_scan)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    limits = limits_from_env()
    if getattr(args, "enum_bound", None):
        limits = replace(limits, enum_bound=args.enum_bound)
    set_limits(limits)
    try:
        return args.func(args)
    except NormlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
