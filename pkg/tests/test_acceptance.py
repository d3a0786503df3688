"""End-to-end acceptance checks.

One test per shipped guarantee, each asserting the stated tolerance and
printing a single summary line (visible with pytest -s; pytest -v shows the
per-test verdict either way). Timed criteria assert their own budgets.
"""

import time

import numpy as np
import pytest

from walshdsp import (
    FilterSpec,
    basis_state,
    build_sequency_wht,
    build_uz,
    compare,
    dc_remove_oracle,
    discretize,
    filter_classical_oracle,
    filter_quantum,
    fwht_natural,
    natural_to_sequency_perm,
    run_circuit,
    sequency_matrix,
    sequency_of,
    sequency_recursion_trace,
    time_series,
    wht_sequency,
    zero_crossings_bruteforce,
)
from walshdsp.cli import main
from walshdsp.signals import Waveform

SEQ_MAP_N3 = [0, 7, 3, 4, 1, 6, 2, 5]

H8S_SIGNS = np.array(
    [
        [1, 1, 1, 1, 1, 1, 1, 1],
        [1, 1, 1, 1, -1, -1, -1, -1],
        [1, 1, -1, -1, -1, -1, 1, 1],
        [1, 1, -1, -1, 1, 1, -1, -1],
        [1, -1, -1, 1, 1, -1, -1, 1],
        [1, -1, -1, 1, -1, 1, 1, -1],
        [1, -1, 1, -1, -1, 1, -1, 1],
        [1, -1, 1, -1, 1, -1, 1, -1],
    ],
    dtype=np.float64,
)

N_SAMPLES = 128
N_QUBITS = 7

WAVEFORMS = [
    ("sine", Waveform("sine", cycles=1.0)),
    ("triangular", Waveform("triangular", cycles=1.0)),
    ("rectangular_pulse", Waveform("rectangular_pulse", offset=0.25, width=0.375)),
    ("square", Waveform("square", cycles=2.0)),
]

FILTER_SPECS = [
    FilterSpec.low_pass(N_SAMPLES // 4),
    FilterSpec.low_pass(N_SAMPLES // 2),
    FilterSpec.low_pass(3 * N_SAMPLES // 4),
    FilterSpec.high_pass(N_SAMPLES // 4),
    FilterSpec.high_pass(N_SAMPLES // 2),
    FilterSpec.high_pass(3 * N_SAMPLES // 4),
    FilterSpec.band_pass(N_SAMPLES // 4, 3 * N_SAMPLES // 4),
]


def test_criterion_1_sequency_map():
    start = time.perf_counter()
    got = [sequency_of(s, 3) for s in range(8)]
    assert got == SEQ_MAP_N3
    for n in range(1, 13):
        for s in range(1 << n):
            assert sequency_of(s, n) == zero_crossings_bruteforce(s, n)
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0
    print(f"PASS criterion 1: map matches brute force for n <= 12 in {elapsed:.2f}s")


def test_criterion_2_recursion_fixture():
    assert sequency_of(5, 3) == 6
    trace = sequency_recursion_trace(5, 3)
    assert trace == [1, 3, 6]
    assert trace[-1] == zero_crossings_bruteforce(5, 3)
    print("PASS criterion 2: Z_3(5) = 6 by formula and by recursion trace [1, 3, 6]")


def test_criterion_3_circuit_matches_matrix():
    start = time.perf_counter()
    worst = 0.0
    for n in range(1, 9):
        mat = sequency_matrix(n)
        circuit = build_sequency_wht(n)
        for j in range(1 << n):
            out = run_circuit(basis_state(n, j), circuit)
            worst = max(worst, float(np.max(np.abs(out.amplitudes - mat[:, j]))))
    assert worst <= 1e-12
    signs = sequency_matrix(3) * np.sqrt(8.0)
    assert np.array_equal(np.sign(signs), H8S_SIGNS)
    np.testing.assert_allclose(signs, H8S_SIGNS, rtol=0, atol=1e-12)
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0
    print(f"PASS criterion 3: circuit = matrix (max dev {worst:.2e}) for n <= 8 in {elapsed:.2f}s")


def test_criterion_4_uz_inventory_and_action():
    for n in range(1, 13):
        circuit = build_uz(n)
        kinds = [g.kind for g in circuit.gates]
        assert kinds.count("CNOT") == n - 1
        assert kinds.count("SWAP") == n // 2
        assert len(kinds) == (n - 1) + n // 2
    for n in range(1, 9):
        circuit = build_uz(n)
        forward, _ = natural_to_sequency_perm(n)
        for s in range(1 << n):
            out = run_circuit(basis_state(n, s), circuit)
            assert out.amplitudes[forward[s]] == 1.0
    print("PASS criterion 4: U_Z has n-1 CNOT + floor(n/2) SWAP and realizes the map")


def test_criterion_5_path_equivalence():
    start = time.perf_counter()
    worst_branch, worst_prob, worst_recon = 0.0, 0.0, 0.0
    for _, waveform in WAVEFORMS:
        signal = discretize(waveform, N_QUBITS)
        norm = float(np.linalg.norm(signal.values))
        for spec in FILTER_SPECS:
            result = filter_quantum(signal, spec)
            o_pass, o_stop = filter_classical_oracle(signal, spec)
            for got, want in ((result.pass_branch, o_pass), (result.stop_branch, o_stop)):
                metrics = compare(got, want)
                # branch error relative to the input, so empty branches stay defined
                worst_branch = max(worst_branch, metrics["l2_abs"] / norm)
                if np.linalg.norm(want.values) >= 1e-8 * norm:
                    worst_branch = max(worst_branch, metrics["l2_rel"])
            worst_prob = max(worst_prob, abs(result.p_pass + result.p_stop - 1.0))
            recon = result.pass_branch.values + result.stop_branch.values
            worst_recon = max(worst_recon, float(np.linalg.norm(recon - signal.values)) / norm)
    assert worst_branch <= 1e-10
    assert worst_prob <= 1e-12
    assert worst_recon <= 1e-10
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0
    print(
        "PASS criterion 5: 4 waveforms x 7 filters at N=128, "
        f"branch {worst_branch:.2e}, prob {worst_prob:.2e}, recon {worst_recon:.2e}, {elapsed:.2f}s"
    )


def test_criterion_6_dc_filtering():
    worst = 0.0
    for _, waveform in WAVEFORMS:
        signal = discretize(waveform, N_QUBITS)
        result = filter_quantum(signal, FilterSpec.dc())
        expected = dc_remove_oracle(signal)
        worst = max(worst, float(np.max(np.abs(result.pass_branch.values - expected.values))))
    assert worst <= 1e-10
    print(f"PASS criterion 6: DC pass branch = mean-subtracted input (max dev {worst:.2e})")


def test_criterion_7_spectral_support():
    worst = 0.0
    for _, waveform in WAVEFORMS:
        signal = discretize(waveform, N_QUBITS)
        for spec in FILTER_SPECS + [FilterSpec.dc()]:
            result = filter_quantum(signal, spec)
            # spectrum of the unit-norm branch, so the bound is scale-free
            spectrum = wht_sequency(result.pass_branch).values / result.scale
            for lo, hi in spec.stop_intervals(N_SAMPLES):
                leak = float(np.max(np.abs(spectrum[lo:hi])))
                worst = max(worst, leak)
    assert worst <= 1e-12
    print(f"PASS criterion 7: pass-branch stop-band leakage <= {worst:.2e}")


def test_criterion_8_gate_budget(tmp_path, capsys):
    from walshdsp import build_filter_circuit, gate_stats

    for r in (1, 2, 3):
        for n in range(3, 13):
            spec = FilterSpec.low_pass((1 << n) >> r)
            stats = gate_stats(build_filter_circuit(n, spec))
            assert stats.total == 2 * n + 2 * (n - 1) + 2 * (n // 2) + 2
            assert stats.counts["MCX"] == 1
            assert stats.mcx_arities == (r,)

    sweep = tmp_path / "sweep.csv"
    assert main(["gates", "--kind", "low", "--cutoff", "N/2", "--sweep", "3:12", "--output", str(sweep)]) == 0
    capsys.readouterr()
    lines = sweep.read_text().strip().splitlines()
    header = lines[0].split(",")
    rows = [dict(zip(header, line.split(","))) for line in lines[1:]]
    totals = []
    for row in rows:
        n = int(row["n"])
        total = int(row["total"])
        assert total == 2 * n + 2 * (n - 1) + 2 * (n // 2) + 2
        assert row["mcx"] == "1" and row["arities"] == "1"
        totals.append(total)
    diffs = np.diff(totals)
    assert np.all(diffs > 0) and np.all(diffs <= 6)  # linear growth, slope 4..6
    print("PASS criterion 8: gate totals follow 2n + 2(n-1) + 2*floor(n/2) + 2 for n = 3..12")


def test_criterion_9_transform_properties():
    rng = np.random.default_rng(20260819)
    worst_inv, worst_norm = 0.0, 0.0
    for trial in range(100):
        n = 1 + trial % 10
        v = time_series(rng.standard_normal(1 << n))
        for fn in (fwht_natural, wht_sequency):
            twice = fn(time_series(fn(v).values))
            worst_inv = max(worst_inv, float(np.max(np.abs(twice.values - v.values))))
            worst_norm = max(
                worst_norm,
                abs(float(np.linalg.norm(fn(v).values)) - float(np.linalg.norm(v.values))),
            )
    assert worst_inv <= 1e-12
    assert worst_norm <= 1e-12
    print(
        "PASS criterion 9: self-inverse and Parseval within 1e-12 over 100 random vectors, "
        f"dev {worst_inv:.2e} / {worst_norm:.2e}"
    )


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v", "-s"]))
