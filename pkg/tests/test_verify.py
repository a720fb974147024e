from wyskew.verify import SUITES, SuiteResult, run_suites


def test_all_suites_pass_default_seed():
    results = run_suites(cases=60)
    assert len(results) == len(SUITES)
    failed = [r.line() for r in results if not r.passed]
    assert not failed, failed


def test_seed_changes_inputs_not_verdict():
    a = run_suites(seed=1, cases=3)
    b = run_suites(seed=2, cases=3)
    assert all(r.passed for r in a + b)
    assert [r.worst for r in a] != [r.worst for r in b]


def test_reproducible():
    assert run_suites(seed=5, cases=2) == run_suites(seed=5, cases=2)


def test_line_format():
    ok = SuiteResult("m", "s", 1e-12, 1e-10, 3)
    bad = SuiteResult("m", "s", 1e-8, 1e-10, 3)
    assert ok.line().startswith("PASS  m.s")
    assert bad.line().startswith("FAIL") and not bad.passed
