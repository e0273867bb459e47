from __future__ import annotations

from normlab.catalog import build, parse_spec
from normlab.scan import intro_suite, scan, scan_group
from normlab.subgroups import enumerate_subgroups
from normlab.verdict import VerdictReport


def _scrub(reports: list[VerdictReport]) -> list[dict]:
    out = []
    for r in reports:
        d = r.to_dict()
        d.pop("elapsed_s", None)
        out.append(d)
    return out


def test_scan_empty():
    reports, summary = scan([])
    assert reports == []
    assert summary["status_counts"]["confirmed"] == 0
    assert summary["pairs_scanned"] == 0


def test_scan_s4_comp22_hits():
    reports, summary = scan([parse_spec("S:4")], theorems=("comp22",), intro=False)
    # 4 point stabilizers and 3 Sylow 2-subgroups hit, in both modes
    assert summary["maximal_normalizer_hits"] == 7
    comp = [r for r in reports if r.theorem == "comp22"]
    assert len(comp) == 14
    assert all(r.status == "confirmed" for r in comp)


def test_scan_emits_one_report_per_pair_theorem_mode():
    reports, _ = scan([parse_spec("S:4")], theorems=("comp22", "hall"), intro=False)
    keys = [(r.subject["subgroup"], r.theorem, r.mode) for r in reports if r.mode]
    assert len(keys) == len(set(keys))


def test_scan_skips_oversized_group():
    reports, summary = scan([parse_spec("PSL2:17")], intro=False)
    assert summary["groups_skipped"] == 1
    assert all(r.status == "skipped-too-large" for r in reports)


def test_scan_max_order_filters_everything():
    reports, summary = scan([parse_spec("S:4")], max_order=1)
    assert reports == []
    assert summary["groups_scanned"] == 0


def test_scan_deterministic_across_workers():
    specs = [parse_spec(s) for s in ("S:4", "D:6", "A:4", "AGL1:5")]
    seq, sum1 = scan(specs, jobs=1)
    par, sum2 = scan(specs, jobs=2)
    assert _scrub(seq) == _scrub(par)
    assert sum1 == sum2


def test_scan_reports_sorted():
    reports, _ = scan([parse_spec(s) for s in ("S:4", "A:4")])
    keys = [r.sort_key() for r in reports]
    assert keys == sorted(keys)


def test_intro_suite_small_groups():
    for name in ("S:4", "D:6", "AGL1:5", "C:12", "PROD(S:3,C:2)", "A:5", "PSL2:7"):
        G, _ = build(parse_spec(name))
        reports = intro_suite(G, name)
        assert {r.theorem for r in reports} == {
            "intro-burnside",
            "intro-thompson64",
            "intro-frobenius",
            "intro-kegel-wielandt",
            "intro-gross",
        }
        bad = [r for r in reports if r.status != "confirmed"]
        assert not bad, (name, [r.theorem for r in bad])


def test_intro_suite_skipped_above_bound(psl2_17):
    reports, _ = scan_group(parse_spec("S:5"))
    intro = [r for r in reports if r.theorem.startswith("intro-")]
    assert intro  # order 120 <= 200, so it runs
    reports13, _ = scan_group(parse_spec("PSL2:13"))
    intro13 = [r for r in reports13 if r.theorem.startswith("intro-")]
    assert not intro13  # order 1092 > 200


def test_frobenius_followups_in_scan():
    reports, _ = scan_group(parse_spec("A:4"))
    assert any(r.theorem == "burnside" and r.status == "confirmed" for r in reports)
    assert any(r.theorem == "thompson" and r.status == "confirmed" for r in reports)


def test_scan_group_counts_pairs():
    G, _ = build(parse_spec("S:4"))
    proper_non_normal = [
        H
        for H in enumerate_subgroups(G)
        if H.order() < 24
        and not all(
            H.carrier.contains(g.inverse() * h * g)
            for h in H.generators
            for g in G.generators
        )
    ]
    _, stats = scan_group(parse_spec("S:4"))
    assert stats["pairs"] == len(proper_non_normal) == 26
