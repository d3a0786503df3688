"""The self-check suites must pass on the real code and fail on broken code."""

import pytest

from walshdsp import transforms, verification


def test_run_all_passes():
    results = verification.run_all(n_max=6)
    assert [r.name for r in results] == ["sequency-map", "circuit-vs-matrix", "path-equivalence"]
    for r in results:
        assert r.ok, f"{r.name}: {r.detail}"
        assert r.detail


def _broken_map(s, n):
    # one transposed output pair at n=3
    g = transforms.sequency_of(s, n)
    if n == 3 and s in (5, 6):
        return transforms.sequency_of(11 - s, n)
    return g


@pytest.mark.parametrize(
    "check",
    [verification.check_sequency_map, verification.check_circuit_vs_matrix],
    ids=["map", "matrix"],
)
def test_injected_fault_is_detected(check):
    result = check(4, _broken_map)
    assert not result.ok
    assert result.detail


def test_checks_pass_with_explicit_real_map():
    assert verification.check_sequency_map(5, transforms.sequency_of).ok
    assert verification.check_circuit_vs_matrix(4, transforms.sequency_of).ok


def test_path_equivalence_standalone():
    result = verification.check_path_equivalence(5)
    assert result.ok, result.detail
