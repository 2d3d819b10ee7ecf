from slidecx.verify import SUITES, Check, permutations_up_to, run_suite


def test_permutation_counts():
    assert len(permutations_up_to(4)) == 33
    assert len(permutations_up_to(5, start=5)) == 120


def test_all_suites_pass_at_rank_3():
    checks = run_suite("all", 3)
    assert len(checks) == sum(len(v) for v in SUITES.values())
    assert all(c.passed for c in checks), [c.failures for c in checks if not c.passed]


def test_check_failure_log_is_capped():
    c = Check("demo")
    for k in range(30):
        c.fail(f"case {k}")
    assert not c.passed
    assert len(c.failures) == 20
    assert "seconds" not in c.to_json(timing=False)
