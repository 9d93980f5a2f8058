import pytest

from specfun.errors import UnknownIdentity
from specfun.verify import (
    MANIFEST,
    UNLABELLED,
    case,
    format_report,
    format_reports,
    registry,
    run_identity,
    run_suite,
    uncovered,
    unexpected,
)

TYPO_PAIRS = [
    ("ch5.eq20.assoc-orthogonality.as-printed", "ch5.eq20.assoc-orthogonality"),
    ("ch5.eq41.assoc-series.as-printed", "ch5.eq41.assoc-series"),
    ("ch5.y20.table-entry", "ch5.y20.corrected"),
    ("ch5.eq55.generating-u.as-printed", "ch5.eq55.generating-u"),
]


def test_every_case_behaves_as_expected(suite_reports):
    bad = unexpected(list(suite_reports.values()))
    assert not bad, "\n".join(format_report(r) for r in bad)


def test_non_typo_cases_all_pass(suite_reports):
    assert all(r.passed for r in suite_reports.values() if not r.expected_fail)


@pytest.mark.parametrize("printed, corrected", TYPO_PAIRS)
def test_typo_pairs(suite_reports, printed, corrected):
    assert suite_reports[printed].expected_fail and not suite_reports[printed].passed
    assert not suite_reports[corrected].expected_fail and suite_reports[corrected].passed


def test_every_expected_fail_has_a_passing_partner(suite_reports):
    ids = set(suite_reports)
    for i, r in suite_reports.items():
        if r.expected_fail:
            stem = i.rsplit(".", 1)[0]
            assert any(j != i and j.startswith(stem) and not suite_reports[j].expected_fail for j in ids), i


def test_manifest_is_complete():
    reg = registry()
    assert uncovered(reg) == []
    for key, target in MANIFEST.items():
        if isinstance(target, str):
            assert target.startswith("out-of-scope")
        else:
            assert target and all(t in reg for t in target), key
    assert all(any(k.startswith(p.rstrip("*")) for k in reg) for p in UNLABELLED)


def test_ids_are_unique_and_chaptered():
    reg = registry()
    for k, c in reg.items():
        assert c.id == k and k.startswith(f"ch{c.chapter}.")
        assert c.sample_points and c.tolerance > 0


def test_determinism(suite_reports, suite_rerun_text):
    again = suite_rerun_text
    assert again == format_reports(suite_reports.values())
    assert again.endswith("\n") and "\r" not in again


def test_chapter_selector():
    reports = run_suite(6)
    assert reports and all(r.id.startswith("ch6.") for r in reports)
    assert run_suite(99) == []


def test_unknown_identity():
    with pytest.raises(UnknownIdentity):
        run_identity("nosuch")


def test_report_format():
    line = format_report(run_identity("ch5.y20.table-entry"))
    fields = line.split("\t")
    assert fields[0] == "ch5.y20.table-entry" and fields[1] == "false"
    assert fields[4].startswith("expected-fail")
    float(fields[2]), float(fields[3])


def test_case_validation():
    with pytest.raises(ValueError):
        case("ch1.bad", "zero tolerance", lambda x: x, lambda x: x, [(1.0,)], tol=0.0)
