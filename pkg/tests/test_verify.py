from addtriples.verify import PRIME_ONLY_CHECKS, run_verification


def test_primes_pass_cleanly():
    report = run_verification([5, 7, 11], 150, seed=42)
    assert report.ok
    for summary in report.moduli:
        assert summary.prime
        assert not summary.skipped
        assert summary.checks["four-way-agreement"] == 150
        assert summary.checks["bound-sandwich"] == 150


def test_composite_gates_prime_only_checks():
    report = run_verification([9], 150, seed=42)
    assert report.ok
    summary = report.moduli[0]
    assert not summary.prime
    assert summary.skipped == PRIME_ONLY_CHECKS
    assert summary.checks["four-way-agreement"] == 150
    assert "bound-sandwich" not in summary.checks
    assert "sumset-inequality" not in summary.checks


def test_seed_determinism():
    first = run_verification([7, 9], 60, seed=13)
    second = run_verification([7, 9], 60, seed=13)
    for lhs, rhs in zip(first.moduli, second.moduli):
        assert lhs.checks == rhs.checks
        assert lhs.violations == rhs.violations


def test_zero_trials_vacuous_pass():
    report = run_verification([5], 0, seed=1)
    assert report.ok
    assert report.moduli[0].checks == {}
    assert report.first_violation() is None
