import pytest

from gcluster.cartan import parse_type
from gcluster.quiver import parse_orientation
from gcluster.verify import Check, categorical_checks, hom_support_ok, run_verify


@pytest.mark.parametrize("spec, d", [("A1", 3), ("A2", 3), ("A3", 2), ("D4", 2), ("A1xA1", 2),
                                     ("B3", 2), ("C3", 1), ("G2", 3), ("F4", 1)])
def test_run_verify_all_green(spec, d):
    results = run_verify(parse_type(spec), d)
    assert results and all(chk.ok for _, chk in results), [c.line() for _, c in results if not c.ok]
    simply_laced = parse_type(spec).simply_laced
    # skips: everything categorical on valued types, the projective window at d = 1
    has_skip = any(chk.status == "skip" for _, chk in results)
    assert has_skip == (not simply_laced or d == 1)


def test_sweep_covers_each_d():
    results = run_verify(parse_type("A2"), 3, all_d=True)
    assert {d for d, _ in results} == {1, 2, 3}


def test_non_alternating_orientation_skips_comparison():
    q = parse_orientation(parse_type("A3"), "linear")
    checks = {c.name: c for c in categorical_checks(q, 2)}
    assert checks["categorical = combinatorial"].status == "skip"
    assert all(c.ok for c in checks.values())


def test_hom_support_window():
    from gcluster.repcat import CdObject
    r = (1,)
    assert hom_support_ok(3, CdObject(r, 2), CdObject(r, 2), 1)
    assert hom_support_ok(3, CdObject(r, 1), CdObject(r, 2), 1)
    assert not hom_support_ok(3, CdObject(r, 0), CdObject(r, 2), 1)
    assert hom_support_ok(3, CdObject(r, 3), CdObject(r, 0), 1)
    assert not hom_support_ok(3, CdObject(r, 1), CdObject(r, 0), 1)


def test_check_line_format():
    assert Check("purity", "fail", "2 bad").line() == "FAIL  purity  (2 bad)"
    assert not Check("x", "fail").ok and Check("x", "skip").ok
