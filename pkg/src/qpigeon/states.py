"""Exact complex state vectors and the small gate set used by the box-parity circuits.

Qubit q[0] is the least significant bit of the basis index and is written
rightmost in ket labels, so |q2 q1 q0> maps to index 4*q2 + 2*q1 + q0.
States and gates are immutable values; every operation returns a new state
and never mutates its inputs, so they are safe to share between threads.
Gates are applied by strided iteration over the amplitude array; the full
2^n x 2^n matrix of a gate is never materialised here.
"""

import math
from dataclasses import dataclass, field

import numpy as np

MAX_QUBITS = 24

H = "H"
X = "X"
RX = "RX"
CX = "CX"
BARRIER = "BARRIER"
MEASURE = "MEASURE"

UNITARY_KINDS = frozenset({H, X, RX, CX})
GATE_KINDS = UNITARY_KINDS | {BARRIER, MEASURE}

_SQRT_HALF = math.sqrt(0.5)
_H_MATRIX = np.array([[_SQRT_HALF, _SQRT_HALF], [_SQRT_HALF, -_SQRT_HALF]], dtype=complex)
_X_MATRIX = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)


def _rx_matrix(theta: float) -> np.ndarray:
    # exp(-i*theta*sigma_x/2); theta = pi/2 maps the circular basis onto {|0>, |1>}
    c = math.cos(theta / 2.0)
    s = math.sin(theta / 2.0)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)


@dataclass(frozen=True)
class Gate:
    """One instruction: a unitary from {H, X, RX, CX}, a BARRIER, or a MEASURE.

    ``qubit`` is the control for CX and the measured qubit for MEASURE.
    ``target`` is only set for CX, ``theta`` only for RX, ``cbit`` only for
    MEASURE.  A BARRIER carries no indices and acts on the whole register.
    """

    kind: str
    qubit: int | None = None
    target: int | None = None
    theta: float | None = None
    cbit: int | None = None

    def __post_init__(self):
        if self.kind not in GATE_KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if self.kind == BARRIER:
            if (self.qubit, self.target, self.theta, self.cbit) != (None, None, None, None):
                raise ValueError("BARRIER takes no operands")
            return
        if self.qubit is None or self.qubit < 0:
            raise ValueError(f"{self.kind} needs a nonnegative qubit index")
        if self.kind == CX:
            if self.target is None or self.target < 0:
                raise ValueError("CX needs a nonnegative target index")
            if self.target == self.qubit:
                raise ValueError("CX control and target must differ")
        elif self.target is not None:
            raise ValueError(f"{self.kind} takes no target")
        if self.kind == RX:
            if self.theta is None or not math.isfinite(self.theta):
                raise ValueError("RX needs a finite angle")
        elif self.theta is not None:
            raise ValueError(f"{self.kind} takes no angle")
        if self.kind == MEASURE:
            if self.cbit is None or self.cbit < 0:
                raise ValueError("MEASURE needs a nonnegative classical bit index")
        elif self.cbit is not None:
            raise ValueError(f"{self.kind} takes no classical bit")

    @classmethod
    def h(cls, qubit: int) -> "Gate":
        return cls(H, qubit=qubit)

    @classmethod
    def x(cls, qubit: int) -> "Gate":
        return cls(X, qubit=qubit)

    @classmethod
    def rx(cls, qubit: int, theta: float) -> "Gate":
        return cls(RX, qubit=qubit, theta=theta)

    @classmethod
    def cx(cls, control: int, target: int) -> "Gate":
        return cls(CX, qubit=control, target=target)

    @classmethod
    def barrier(cls) -> "Gate":
        return cls(BARRIER)

    @classmethod
    def measure(cls, qubit: int, cbit: int) -> "Gate":
        return cls(MEASURE, qubit=qubit, cbit=cbit)


@dataclass(frozen=True)
class StateVector:
    """Dense amplitude vector over ``2**n_qubits`` computational basis states.

    The amplitude array is copied on construction and frozen, and ``norm_sq``
    is always the exact sum of |amps|^2 at construction time.  Projected
    states may carry ``norm_sq`` < 1; nothing here renormalises implicitly.
    """

    n_qubits: int
    amps: np.ndarray
    norm_sq: float = field(init=False)

    def __post_init__(self):
        if not 1 <= self.n_qubits <= MAX_QUBITS:
            raise ValueError(f"n_qubits must be in 1..{MAX_QUBITS}, got {self.n_qubits}")
        amps = np.array(self.amps, dtype=np.complex128, copy=True)
        if amps.shape != (2**self.n_qubits,):
            raise ValueError(f"expected {2**self.n_qubits} amplitudes, got shape {amps.shape}")
        if not np.all(np.isfinite(amps.view(np.float64))):
            raise ValueError("amplitudes must be finite")
        amps.flags.writeable = False
        object.__setattr__(self, "amps", amps)
        object.__setattr__(self, "norm_sq", float(np.vdot(amps, amps).real))


def basis_state(n_qubits: int, index: int) -> StateVector:
    """Computational basis state |index> on ``n_qubits`` qubits."""
    if not 1 <= n_qubits <= MAX_QUBITS:
        raise ValueError(f"n_qubits must be in 1..{MAX_QUBITS}, got {n_qubits}")
    if not 0 <= index < 2**n_qubits:
        raise ValueError(f"basis index {index} out of range for {n_qubits} qubits")
    amps = np.zeros(2**n_qubits, dtype=complex)
    amps[index] = 1.0
    return StateVector(n_qubits, amps)


def plus_state(n_qubits: int) -> StateVector:
    """Uniform superposition, built as H on every qubit of |0...0>.

    Built gate by gate rather than filled with 2**(-n/2) so that it is
    bit-for-bit identical to n sequential Hadamard applications.
    """
    state = basis_state(n_qubits, 0)
    for q in range(n_qubits):
        state = apply_gate(state, Gate.h(q))
    return state


def plus_i_state(signs: tuple[int, ...]) -> StateVector:
    """Product of circular-basis states (|0> + i*s|1>)/sqrt(2), s = signs[k] on qubit k.

    ``signs`` entries must be +1 or -1.  Flipping every sign conjugates all
    amplitudes.
    """
    n = len(signs)
    if not 1 <= n <= MAX_QUBITS:
        raise ValueError(f"need 1..{MAX_QUBITS} signs, got {n}")
    if any(s not in (1, -1) for s in signs):
        raise ValueError(f"signs must be +1 or -1, got {signs!r}")
    factors = [np.array([_SQRT_HALF, 1j * s * _SQRT_HALF], dtype=complex) for s in signs]
    amps = factors[n - 1]
    for k in range(n - 2, -1, -1):
        amps = np.kron(amps, factors[k])
    return StateVector(n, amps)


def _apply_single(amps: np.ndarray, matrix: np.ndarray, qubit: int, n: int) -> np.ndarray:
    # view as (high bits, target bit, low bits); qubit q has stride 2**q
    psi = amps.reshape(2 ** (n - 1 - qubit), 2, 2**qubit)
    a0 = psi[:, 0, :]
    a1 = psi[:, 1, :]
    out = np.empty_like(psi)
    out[:, 0, :] = matrix[0, 0] * a0 + matrix[0, 1] * a1
    out[:, 1, :] = matrix[1, 0] * a0 + matrix[1, 1] * a1
    return out.reshape(-1)


def apply_gate(state: StateVector, gate: Gate) -> StateVector:
    """Apply one unitary gate (or a no-op BARRIER) and return the new state."""
    if gate.kind == MEASURE:
        raise ValueError("apply_gate handles unitaries only; measurement lives in the circuit layer")
    if gate.kind == BARRIER:
        return state
    n = state.n_qubits
    if gate.qubit >= n:
        raise ValueError(f"qubit {gate.qubit} out of range for {n}-qubit state")
    if gate.kind == CX:
        if gate.target >= n:
            raise ValueError(f"target {gate.target} out of range for {n}-qubit state")
        idx = np.arange(2**n)
        controlled = (idx >> gate.qubit) & 1
        new_amps = state.amps[idx ^ (controlled << gate.target)]
        return StateVector(n, new_amps)
    if gate.kind == H:
        matrix = _H_MATRIX
    elif gate.kind == X:
        matrix = _X_MATRIX
    else:
        matrix = _rx_matrix(gate.theta)
    return StateVector(n, _apply_single(state.amps, matrix, gate.qubit, n))


def inner_product(bra: StateVector, ket: StateVector) -> complex:
    """<bra|ket> with the left argument conjugated."""
    if bra.n_qubits != ket.n_qubits:
        raise ValueError(f"qubit counts differ: {bra.n_qubits} vs {ket.n_qubits}")
    return complex(np.vdot(bra.amps, ket.amps))
