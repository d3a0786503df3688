"""Dense statevector simulator for the small gate set the circuits need.

Amplitude indexing is little-endian: bit b of an amplitude's index is the
state of qubit b, so qubit 0 is the least significant bit and an ancilla
added "on top" of n data qubits is qubit n, the most significant bit.

The gate set is H, X, CNOT, SWAP and MCX. MCX is a primitive here, not a
decomposition: it flips the target amplitude exactly on basis states where
every open control reads 0 and every closed control reads 1. A CNOT is the
single-closed-control case; an MCX with no controls degenerates to X. All
five kinds are real involutions, which the tests lean on heavily.

Gate application is specialized per kind with vectorized index arithmetic
rather than generic matrix embedding, keeping the ±1/sqrt(2) arithmetic exact
for the permutation-like gates.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from walshdsp.transforms import Coefficients, SizingError, TIME

OPEN = "open"
CLOSED = "closed"

_GATE_KINDS = ("H", "X", "CNOT", "SWAP", "MCX")
_NORM_TOL = 1e-10
_RSQRT2 = 1.0 / np.sqrt(2.0)


class NormalizationError(ValueError):
    """Raised when a signal cannot be scaled to a unit-norm state."""


@dataclass(frozen=True)
class Gate:
    """One gate: a kind, the qubits it touches, and control polarities.

    qubits layout per kind: H/X -> (qubit,); CNOT -> (control, target);
    SWAP -> (a, b); MCX -> (*controls, target) with polarities aligned to the
    controls. Use the factory functions below rather than the constructor.
    """

    kind: str
    qubits: tuple[int, ...]
    polarities: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.kind not in _GATE_KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        arity = {"H": 1, "X": 1, "CNOT": 2, "SWAP": 2}.get(self.kind)
        if arity is not None and len(self.qubits) != arity:
            raise ValueError(f"{self.kind} takes {arity} qubit(s), got {self.qubits}")
        if self.kind == "MCX":
            if len(self.qubits) < 1:
                raise ValueError("MCX needs a target qubit")
            if len(self.polarities) != len(self.qubits) - 1:
                raise ValueError("one polarity per control is required")
            bad = [p for p in self.polarities if p not in (OPEN, CLOSED)]
            if bad:
                raise ValueError(f"unknown control polarity {bad[0]!r}")
        elif self.polarities:
            raise ValueError(f"{self.kind} takes no polarities")
        if any(q < 0 for q in self.qubits):
            raise ValueError(f"negative qubit index in {self.qubits}")
        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError(f"repeated qubit index in {self.qubits}")

    @property
    def target(self) -> int:
        if self.kind in ("CNOT", "MCX"):
            return self.qubits[-1]
        raise AttributeError(f"{self.kind} has no target")

    @property
    def controls(self) -> tuple[tuple[int, str], ...]:
        if self.kind == "CNOT":
            return ((self.qubits[0], CLOSED),)
        if self.kind == "MCX":
            return tuple(zip(self.qubits[:-1], self.polarities))
        raise AttributeError(f"{self.kind} has no controls")


def h(qubit: int) -> Gate:
    return Gate("H", (qubit,))


def x(qubit: int) -> Gate:
    return Gate("X", (qubit,))


def cnot(control: int, target: int) -> Gate:
    return Gate("CNOT", (control, target))


def swap(a: int, b: int) -> Gate:
    return Gate("SWAP", (a, b))


def mcx(controls, target: int) -> Gate:
    """Multi-controlled X from (qubit, polarity) pairs onto a target qubit."""
    pairs = tuple((int(q), p) for q, p in controls)
    return Gate("MCX", tuple(q for q, _ in pairs) + (target,), tuple(p for _, p in pairs))


@dataclass(frozen=True, eq=False)
class Statevector:
    """Unit-norm complex amplitudes over 2**n_qubits little-endian indices."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if amps.ndim != 1 or amps.size != 1 << self.n_qubits:
            raise ValueError(
                f"expected 2**{self.n_qubits} amplitudes, got shape {amps.shape}"
            )
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > _NORM_TOL:
            raise NormalizationError(f"state norm {norm} is not 1")
        object.__setattr__(self, "amplitudes", amps)


def basis_state(n_qubits: int, index: int = 0) -> Statevector:
    """The computational basis state |index> on n_qubits qubits."""
    if not 0 <= index < (1 << n_qubits):
        raise ValueError(f"basis index {index} out of range for {n_qubits} qubits")
    amps = np.zeros(1 << n_qubits, dtype=np.complex128)
    amps[index] = 1.0
    return Statevector(n_qubits, amps)


def _check_gate_fits(gate: Gate, n_qubits: int) -> None:
    high = max(gate.qubits)
    if high >= n_qubits:
        raise ValueError(f"gate {gate.kind} touches qubit {high}, state has {n_qubits}")


def _apply_inplace(amps: np.ndarray, gate: Gate) -> None:
    if gate.kind == "H":
        q = gate.qubits[0]
        view = amps.reshape(-1, 2, 1 << q)
        top = view[:, 0, :].copy()
        bottom = view[:, 1, :].copy()
        view[:, 0, :] = (top + bottom) * _RSQRT2
        view[:, 1, :] = (top - bottom) * _RSQRT2
        return
    idx = np.arange(amps.size)
    if gate.kind == "X":
        source = idx ^ (1 << gate.qubits[0])
    elif gate.kind == "SWAP":
        a, b = gate.qubits
        differ = ((idx >> a) & 1) != ((idx >> b) & 1)
        source = np.where(differ, idx ^ ((1 << a) | (1 << b)), idx)
    else:  # CNOT or MCX: flip target where the control predicate holds
        fire = np.ones(amps.size, dtype=bool)
        for q, polarity in gate.controls:
            bit = (idx >> q) & 1
            fire &= (bit == 1) if polarity == CLOSED else (bit == 0)
        source = np.where(fire, idx ^ (1 << gate.target), idx)
    amps[:] = amps[source]


def apply_gate(state: Statevector, gate: Gate) -> Statevector:
    """Apply one gate, returning a new state; the input is untouched."""
    _check_gate_fits(gate, state.n_qubits)
    amps = state.amplitudes.copy()
    _apply_inplace(amps, gate)
    return Statevector(state.n_qubits, amps)


def run_circuit(state: Statevector, circuit) -> Statevector:
    """Left-fold apply_gate over a circuit's gate list."""
    if circuit.n_qubits != state.n_qubits:
        raise ValueError(
            f"circuit on {circuit.n_qubits} qubits, state on {state.n_qubits}"
        )
    amps = state.amplitudes.copy()
    for gate in circuit.gates:
        _apply_inplace(amps, gate)
    return Statevector(state.n_qubits, amps)


def amplitude_encode(signal) -> tuple[Statevector, float]:
    """Normalize a signal into state amplitudes; returns (state, scale).

    scale is the signal's 2-norm, kept so callers can restore physical units
    after measurement-style projections. Ancilla prepending is the caller's
    job: a 2**n-sample signal encodes into exactly n qubits.
    """
    if isinstance(signal, Coefficients):
        if signal.order_tag != TIME:
            raise ValueError(f"need a time-ordered signal, got {signal.order_tag!r}")
        values = signal.values
    else:
        values = np.asarray(signal, dtype=np.float64)
    size = values.size
    if size < 1 or size & (size - 1):
        raise SizingError(f"length {size} is not a power of two")
    scale = float(np.linalg.norm(values))
    if scale == 0.0:
        raise NormalizationError("cannot amplitude-encode an all-zero signal")
    n = size.bit_length() - 1
    return Statevector(n, values / scale), scale


def project_ancilla(state: Statevector, qubit: int, outcome: int) -> tuple[np.ndarray, float]:
    """Sub-vector of amplitudes whose given qubit equals outcome, unnormalized.

    Returns (branch, probability) where probability is the branch's squared
    norm; the two outcomes' probabilities sum to 1. Renormalizing is left to
    the caller on purpose, so branch amplitudes stay directly comparable to
    classically computed components.
    """
    if not 0 <= qubit < state.n_qubits:
        raise ValueError(f"qubit {qubit} out of range for {state.n_qubits}")
    if outcome not in (0, 1):
        raise ValueError(f"outcome must be 0 or 1, got {outcome}")
    half = 1 << (state.n_qubits - 1)
    k = np.arange(half)
    low = k & ((1 << qubit) - 1)
    pos = ((k >> qubit) << (qubit + 1)) | (outcome << qubit) | low
    branch = state.amplitudes[pos].copy()
    probability = float(np.sum(np.abs(branch) ** 2))
    return branch, probability
