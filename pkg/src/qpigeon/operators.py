"""Projector algebra for three pigeons in two boxes, plus the induced time evolution.

Everything acts on the 8-dimensional space of three qubits, where basis state
|z2 z1 z0> says pigeon k sits in box z_k.  The building blocks:

* same_box_projector(a, b): rank-4 projector onto states with pigeons a and b
  in one box.
* all_same_box_projector(): rank-2 projector onto |000> and |111>.
* pair_only_projector(a, b): rank-3 projector onto "a and b together, the
  third pigeon apart".
* shared_pair_count(): sum of the three same-box projectors.  Hermitian but
  not a projector; on a basis state it counts the pairs sharing a box, so
  its eigenvalues are 1 (some pair splits off) and 3 (all together).

The exact relations tying these together are checked by verify_identities,
and two independent routes compute exp(-i * epsilon_t * shared_pair_count):
a closed form and a scaled-and-squared power series.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .states import StateVector

DIM = 8
N_PIGEONS = 3
PAIRS = ((0, 1), (0, 2), (1, 2))

_FLAG_TOL = 1e-12


@dataclass(frozen=True)
class LinearOperator:
    """A dense complex matrix with optional hermitian/projector guarantees.

    The flags are validated on construction to within 1e-12, so a flagged
    operator really is what it claims.  ``is_projector`` implies hermitian.
    """

    matrix: np.ndarray
    is_hermitian: bool = False
    is_projector: bool = False

    def __post_init__(self):
        m = np.array(self.matrix, dtype=np.complex128, copy=True)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"operator matrix must be square, got shape {m.shape}")
        if not np.all(np.isfinite(m.view(np.float64))):
            raise ValueError("operator entries must be finite")
        if self.is_projector and not self.is_hermitian:
            raise ValueError("a projector must also be flagged hermitian")
        if self.is_hermitian and np.max(np.abs(m - m.conj().T)) > _FLAG_TOL:
            raise ValueError("matrix flagged hermitian is not hermitian")
        if self.is_projector and np.max(np.abs(m @ m - m)) > _FLAG_TOL:
            raise ValueError("matrix flagged projector is not idempotent")
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def _bit(index: np.ndarray, k: int) -> np.ndarray:
    return (index >> k) & 1


def _pair_indices(a: int, b: int) -> tuple[int, int]:
    if a == b or not (0 <= a < N_PIGEONS and 0 <= b < N_PIGEONS):
        raise ValueError(f"need two distinct pigeon indices in 0..2, got {(a, b)}")
    return (a, b) if a < b else (b, a)


def same_box_projector(a: int, b: int) -> LinearOperator:
    """Projector onto the span of basis states where pigeons a and b share a box."""
    a, b = _pair_indices(a, b)
    idx = np.arange(DIM)
    diag = (_bit(idx, a) == _bit(idx, b)).astype(complex)
    return LinearOperator(np.diag(diag), is_hermitian=True, is_projector=True)


def all_same_box_projector() -> LinearOperator:
    """Projector onto |000> and |111>: all three pigeons in one box."""
    diag = np.zeros(DIM, dtype=complex)
    diag[0] = 1.0
    diag[DIM - 1] = 1.0
    return LinearOperator(np.diag(diag), is_hermitian=True, is_projector=True)


def pair_only_projector(a: int, b: int) -> LinearOperator:
    """Projector onto states where exactly pigeons a and b share a box.

    Equal to same_box_projector(a, b) minus all_same_box_projector(); the
    difference of nested projectors is again a projector.
    """
    m = same_box_projector(a, b).matrix - all_same_box_projector().matrix
    return LinearOperator(m, is_hermitian=True, is_projector=True)


def one_pair_projector() -> LinearOperator:
    """Projector onto states where exactly one pair shares a box (rank 6).

    The three pair_only_projector terms have disjoint ranges, so their sum
    stays a projector and together with all_same_box_projector resolves the
    identity.
    """
    m = sum(pair_only_projector(a, b).matrix for a, b in PAIRS)
    return LinearOperator(m, is_hermitian=True, is_projector=True)


def shared_pair_count() -> LinearOperator:
    """Sum of the three same-box projectors; counts same-box pairs per basis state."""
    m = sum(same_box_projector(a, b).matrix for a, b in PAIRS)
    return LinearOperator(m, is_hermitian=True)


def apply_operator(op: LinearOperator, state: StateVector) -> StateVector:
    """Matrix-vector product; the result keeps its true (possibly < 1) norm_sq."""
    if op.dim != state.amps.shape[0]:
        raise ValueError(f"operator dim {op.dim} does not match state dim {state.amps.shape[0]}")
    return StateVector(state.n_qubits, op.matrix @ state.amps)


def hermitian_eigenvalues(matrix: np.ndarray, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a complex hermitian matrix by cyclic Jacobi rotations.

    Sweeps the upper triangle in a fixed row-major order, so the result is
    deterministic.  Returns the eigenvalues sorted ascending.  Raises
    ValueError for non-hermitian input and ArithmeticError if the
    off-diagonal mass has not dropped below ``tol`` after ``max_sweeps``.
    """
    a = np.array(matrix, dtype=np.complex128, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    n = a.shape[0]
    if np.max(np.abs(a - a.conj().T)) > 1e-10:
        raise ValueError("matrix is not hermitian")
    for _ in range(max_sweeps):
        off_sq = np.abs(a) ** 2
        np.fill_diagonal(off_sq, 0.0)
        off = math.sqrt(float(np.sum(off_sq)))
        if off <= tol:
            return np.sort(np.diag(a).real)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                beta = abs(apq)
                if beta <= tol / (n * n):
                    continue
                tau = (a[p, p].real - a[q, q].real) / (2.0 * beta)
                if tau == 0.0:
                    t = 1.0
                else:
                    # smaller root of t^2 - 2*tau*t - 1 = 0, for a rotation angle <= pi/4
                    t = -math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c * (apq / beta)
                g = np.eye(n, dtype=complex)
                g[p, p] = c
                g[p, q] = s
                g[q, p] = -s.conjugate()
                g[q, q] = c
                a = g.conj().T @ a @ g
    raise ArithmeticError(f"Jacobi sweep did not converge in {max_sweeps} sweeps")


def operator_rank(op: LinearOperator, tol: float = 1e-8) -> int:
    """Rank of a projector: how many eigenvalues sit within ``tol`` of 1."""
    if not op.is_projector:
        raise ValueError("operator_rank expects a projector-flagged operator")
    eigs = hermitian_eigenvalues(op.matrix)
    return int(np.sum(np.abs(eigs - 1.0) <= tol))


@dataclass(frozen=True)
class IdentityReport:
    """Max elementwise deviation for every algebraic relation among the projectors.

    ``checks`` maps a relation name to its deviation; ``spectrum`` holds the
    sorted eigenvalues of shared_pair_count.  ``passed`` is True when every
    deviation (including the spectrum's distance from six 1s and two 3s) is
    within ``tolerance``.
    """

    tolerance: float
    checks: dict[str, float]
    spectrum: tuple[float, ...]
    passed: bool

    def to_dict(self) -> dict:
        return {
            "tolerance": self.tolerance,
            "checks": dict(self.checks),
            "spectrum": list(self.spectrum),
            "passed": self.passed,
        }


def _max_abs(m: np.ndarray) -> float:
    return float(np.max(np.abs(m)))


def verify_identities(tolerance: float = 1e-12) -> IdentityReport:
    """Check every operator relation the construction relies on.

    Covered: the two resolutions of the identity (one-pair + all-same, and
    pair-count minus twice all-same), the product of any two distinct
    same-box projectors collapsing to all-same, idempotency of every
    projector, mutual commutators, and the {1 x 6, 3 x 2} spectrum of
    shared_pair_count.
    """
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    eye = np.eye(DIM, dtype=complex)
    same = {pair: same_box_projector(*pair).matrix for pair in PAIRS}
    big_p = all_same_box_projector().matrix
    pair_only = {pair: pair_only_projector(*pair).matrix for pair in PAIRS}
    small_p = one_pair_projector().matrix
    count = shared_pair_count().matrix

    checks: dict[str, float] = {}
    checks["one_pair_plus_all_same_is_identity"] = _max_abs(eye - (small_p + big_p))
    checks["pair_count_minus_two_all_same_is_identity"] = _max_abs(eye - (count - 2.0 * big_p))
    for (pa, pb) in ((PAIRS[0], PAIRS[1]), (PAIRS[0], PAIRS[2]), (PAIRS[1], PAIRS[2])):
        name = f"product_same{pa[0]}{pa[1]}_same{pb[0]}{pb[1]}_is_all_same"
        checks[name] = _max_abs(same[pa] @ same[pb] - big_p)
        checks[f"commutator_same{pa[0]}{pa[1]}_same{pb[0]}{pb[1]}"] = _max_abs(
            same[pa] @ same[pb] - same[pb] @ same[pa]
        )
    for pair in PAIRS:
        checks[f"idempotent_same{pair[0]}{pair[1]}"] = _max_abs(same[pair] @ same[pair] - same[pair])
        checks[f"idempotent_pair_only{pair[0]}{pair[1]}"] = _max_abs(
            pair_only[pair] @ pair_only[pair] - pair_only[pair]
        )
    checks["idempotent_all_same"] = _max_abs(big_p @ big_p - big_p)
    checks["idempotent_one_pair"] = _max_abs(small_p @ small_p - small_p)

    spectrum = hermitian_eigenvalues(count)
    expected = np.array([1.0] * 6 + [3.0] * 2)
    checks["pair_count_spectrum"] = float(np.max(np.abs(spectrum - expected)))

    passed = all(dev <= tolerance for dev in checks.values())
    return IdentityReport(
        tolerance=tolerance,
        checks=checks,
        spectrum=tuple(float(x) for x in spectrum),
        passed=passed,
    )


def evolution_closed_form(epsilon_t: float) -> LinearOperator:
    """exp(-i * epsilon_t * shared_pair_count) assembled from two projector terms.

    Because shared_pair_count = 3*all_same + 1*(identity - all_same) on its
    eigenspaces, the exponential is
    exp(-i*et)*count_matrix + (exp(-3i*et) - 3*exp(-i*et))*all_same_matrix,
    which also equals exp(-i*et) * (identity + (exp(-2i*et) - 1)*all_same).
    """
    if not math.isfinite(epsilon_t):
        raise ValueError("epsilon_t must be finite")
    count = shared_pair_count().matrix
    big_p = all_same_box_projector().matrix
    phase = cmath.exp(-1j * epsilon_t)
    phase3 = cmath.exp(-3j * epsilon_t)
    return LinearOperator(phase * count + (phase3 - 3.0 * phase) * big_p)


def evolution_series(epsilon_t: float) -> LinearOperator:
    """Same unitary as evolution_closed_form, by scaled-and-squared Taylor series.

    The generator is scaled by 2**s until its 1-norm is below 1/2, the series
    is summed until terms vanish at double precision, and the result is
    squared s times.  Shares no code path with the closed form, so agreement
    between the two is a real check.
    """
    if not math.isfinite(epsilon_t):
        raise ValueError("epsilon_t must be finite")
    gen = -1j * epsilon_t * shared_pair_count().matrix
    norm1 = float(np.max(np.sum(np.abs(gen), axis=0)))
    scale = 0 if norm1 < 0.5 else int(math.ceil(math.log2(norm1 / 0.5)))
    small = gen / (2.0**scale)
    total = np.eye(DIM, dtype=complex)
    term = np.eye(DIM, dtype=complex)
    for k in range(1, 64):
        term = term @ small / k
        total = total + term
        if np.max(np.abs(term)) < 1e-18:
            break
    for _ in range(scale):
        total = total @ total
    return LinearOperator(total)
