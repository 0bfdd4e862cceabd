"""Dense few-qubit linear algebra over labeled subsystems.

States live on named qubit subsystems ("a", "b", "A", ...).  Internally every
state is stored in canonical label order (sorted), so two states over the same
label set are directly comparable no matter how they were assembled.  Only
qubits (dimension 2) are supported and the subsystem count is capped at 12,
which keeps everything exact in dense double-precision arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

ATOL = 1e-12
MAX_QUBITS = 12

_SQ2 = 1.0 / np.sqrt(2.0)


class HilbertError(ValueError):
    """Base class for state/operator construction and composition errors."""


class CompositionError(HilbertError):
    """Tensor composition over overlapping label sets."""


class LabelError(HilbertError):
    """A referenced subsystem label is absent."""


def _check_labels(labels: Sequence[str]) -> tuple[str, ...]:
    labels = tuple(str(l) for l in labels)
    if len(set(labels)) != len(labels):
        raise HilbertError(f"duplicate subsystem labels: {labels}")
    if len(labels) > MAX_QUBITS:
        raise HilbertError(f"{len(labels)} subsystems exceed the cap of {MAX_QUBITS}")
    return labels


def _permutation_to_canonical(labels: tuple[str, ...]) -> tuple[tuple[str, ...], list[int]]:
    order = sorted(range(len(labels)), key=lambda i: labels[i])
    return tuple(labels[i] for i in order), order


class StateVector:
    """Normalized complex amplitude vector over labeled qubit subsystems.

    Amplitude index bits follow canonical (sorted) label order, first label
    most significant.
    """

    __slots__ = ("labels", "amplitudes")

    def __init__(self, labels: Sequence[str], amplitudes: Iterable[complex]):
        labels = _check_labels(labels)
        amps = np.array(list(amplitudes) if not isinstance(amplitudes, np.ndarray)
                        else amplitudes, dtype=np.complex128).reshape(-1)
        n = len(labels)
        if amps.shape != (2 ** n,):
            raise HilbertError(f"amplitude vector of length {amps.shape[0]} does not fit {n} qubits")
        norm_sq = float(np.sum(np.abs(amps) ** 2))
        if abs(norm_sq - 1.0) > ATOL:
            raise HilbertError(f"state not normalized: |psi|^2 = {norm_sq!r}")
        canonical, order = _permutation_to_canonical(labels)
        if list(order) != list(range(n)):
            amps = amps.reshape((2,) * n).transpose(order).reshape(-1)
        self.labels = canonical
        self.amplitudes = amps
        self.amplitudes.setflags(write=False)

    @property
    def n_qubits(self) -> int:
        return len(self.labels)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def tensor(self, other: "StateVector") -> "StateVector":
        return tensor(self, other)

    def amplitude(self, bits: Mapping[str, int]) -> complex:
        """Amplitude of the computational basis state selected per label (0 = up_z)."""
        if set(bits) != set(self.labels):
            raise LabelError(f"bits must cover exactly {self.labels}")
        idx = 0
        for l in self.labels:
            idx = (idx << 1) | (bits[l] & 1)
        return complex(self.amplitudes[idx])

    def allclose(self, other: "StateVector", atol: float = ATOL) -> bool:
        return self.labels == other.labels and np.allclose(
            self.amplitudes, other.amplitudes, atol=atol, rtol=0.0)

    def __repr__(self) -> str:
        return f"StateVector(labels={self.labels}, dim={len(self.amplitudes)})"


class Operator:
    """Complex 2^n x 2^n matrix acting on an ordered label tuple.

    Label order is kept as given: matrix axes are tied to it.  Flag
    ``unitary=True`` or ``hermitian=True`` to validate at construction.
    """

    __slots__ = ("labels", "matrix")

    def __init__(self, labels: Sequence[str], matrix, *, unitary: bool = False,
                 hermitian: bool = False):
        labels = _check_labels(labels)
        mat = np.array(matrix, dtype=np.complex128)
        dim = 2 ** len(labels)
        if mat.shape != (dim, dim):
            raise HilbertError(f"matrix shape {mat.shape} does not fit labels {labels}")
        if unitary and not np.allclose(mat.conj().T @ mat, np.eye(dim), atol=ATOL, rtol=0.0):
            raise HilbertError("operator flagged unitary fails U^dag U = I")
        if hermitian and not np.allclose(mat, mat.conj().T, atol=ATOL, rtol=0.0):
            raise HilbertError("operator flagged hermitian fails M = M^dag")
        self.labels = labels
        self.matrix = mat
        self.matrix.setflags(write=False)

    def __repr__(self) -> str:
        return f"Operator(labels={self.labels}, dim={self.matrix.shape[0]})"


class DensityOperator:
    """Positive semidefinite, trace-one matrix over canonical label order."""

    __slots__ = ("labels", "matrix")

    def __init__(self, labels: Sequence[str], matrix):
        labels = _check_labels(labels)
        mat = np.array(matrix, dtype=np.complex128)
        n = len(labels)
        if mat.shape != (2 ** n, 2 ** n):
            raise HilbertError(f"matrix shape {mat.shape} does not fit {n} qubits")
        canonical, order = _permutation_to_canonical(labels)
        if list(order) != list(range(n)):
            t = mat.reshape((2,) * (2 * n))
            perm = list(order) + [n + i for i in order]
            mat = t.transpose(perm).reshape(2 ** n, 2 ** n)
        tr = complex(np.trace(mat))
        if abs(tr - 1.0) > ATOL:
            raise HilbertError(f"density operator trace {tr!r} != 1")
        if not np.allclose(mat, mat.conj().T, atol=ATOL, rtol=0.0):
            raise HilbertError("density operator not Hermitian")
        eigs = np.linalg.eigvalsh(mat)
        if eigs.min() < -1e-10:
            raise HilbertError(f"density operator has negative eigenvalue {eigs.min()}")
        self.labels = canonical
        self.matrix = mat
        self.matrix.setflags(write=False)

    @classmethod
    def from_state(cls, psi: StateVector) -> "DensityOperator":
        return cls(psi.labels, np.outer(psi.amplitudes, psi.amplitudes.conj()))

    def __repr__(self) -> str:
        return f"DensityOperator(labels={self.labels})"


@dataclass(frozen=True, eq=False)
class Observable:
    """Two-outcome spin observable: eigenvalues +1/-1 with rank-1 projectors.

    ``basis`` holds the +1 eigenvector in column 0 and the -1 eigenvector in
    column 1, fixing the phase convention used for measurement records.
    Equality is identity: compare matrices explicitly when needed.
    """

    name: str
    matrix: np.ndarray
    basis: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=np.complex128)
        b = np.asarray(self.basis, dtype=np.complex128)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "basis", b)
        if not np.allclose(m, m.conj().T, atol=ATOL, rtol=0.0):
            raise HilbertError(f"observable {self.name} not Hermitian")
        if not np.allclose(b.conj().T @ b, np.eye(2), atol=ATOL, rtol=0.0):
            raise HilbertError(f"observable {self.name} eigenbasis not orthonormal")
        recon = b @ np.diag([1.0, -1.0]) @ b.conj().T
        if not np.allclose(m, recon, atol=1e-11, rtol=0.0):
            raise HilbertError(f"observable {self.name} eigendecomposition inconsistent")

    def eigenvector(self, value: int) -> np.ndarray:
        return self.basis[:, 0 if value == +1 else 1].copy()

    def projector(self, value: int) -> np.ndarray:
        v = self.eigenvector(value)
        return np.outer(v, v.conj())

    @property
    def outcomes(self) -> tuple[int, int]:
        return (+1, -1)


def _pauli_observables() -> dict[str, Observable]:
    x = np.array([[0, 1], [1, 0]], dtype=np.complex128)
    y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
    z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
    bx = np.array([[_SQ2, _SQ2], [_SQ2, -_SQ2]], dtype=np.complex128)
    by = np.array([[_SQ2, _SQ2], [1j * _SQ2, -1j * _SQ2]], dtype=np.complex128)
    bz = np.eye(2, dtype=np.complex128)
    return {
        "X": Observable("X", x, bx),
        "Y": Observable("Y", y, by),
        "Z": Observable("Z", z, bz),
    }


PAULI = _pauli_observables()
X, Y, Z = PAULI["X"], PAULI["Y"], PAULI["Z"]


def observable(name: str) -> Observable:
    try:
        return PAULI[name.upper()]
    except KeyError:
        raise LabelError(f"unknown observable {name!r}; expected one of X, Y, Z") from None


def spin_direction(theta: float, phi: float = 0.0) -> Observable:
    """Spin observable along the Bloch direction (theta, phi): n . sigma."""
    nx, ny, nz = np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)
    mat = np.array([[nz, nx - 1j * ny], [nx + 1j * ny, -nz]], dtype=np.complex128)
    c, s = np.cos(theta / 2.0), np.sin(theta / 2.0)
    plus = np.array([c, s * np.exp(1j * phi)], dtype=np.complex128)
    minus = np.array([-s * np.exp(-1j * phi), c], dtype=np.complex128)
    return Observable(f"n({theta:.6g},{phi:.6g})", mat, np.column_stack([plus, minus]))


# Named single-qubit kets, z computational basis: index 0 is up_z.
KET_UP_Z = np.array([1.0, 0.0], dtype=np.complex128)
KET_DOWN_Z = np.array([0.0, 1.0], dtype=np.complex128)
KET_UP_X = np.array([_SQ2, _SQ2], dtype=np.complex128)
KET_DOWN_X = np.array([_SQ2, -_SQ2], dtype=np.complex128)


def basis_state(label: str, ket: np.ndarray | Sequence[complex] = KET_UP_Z) -> StateVector:
    return StateVector([label], np.asarray(ket, dtype=np.complex128))


def tensor(a, b):
    """Tensor product of two states or two operators with disjoint labels."""
    if isinstance(a, StateVector) and isinstance(b, StateVector):
        overlap = set(a.labels) & set(b.labels)
        if overlap:
            raise CompositionError(f"tensor over shared labels {sorted(overlap)}")
        return StateVector(a.labels + b.labels, np.kron(a.amplitudes, b.amplitudes))
    if isinstance(a, Operator) and isinstance(b, Operator):
        overlap = set(a.labels) & set(b.labels)
        if overlap:
            raise CompositionError(f"tensor over shared labels {sorted(overlap)}")
        return Operator(a.labels + b.labels, np.kron(a.matrix, b.matrix))
    raise CompositionError(f"cannot tensor {type(a).__name__} with {type(b).__name__}")


def raw_apply(op: Operator, psi: StateVector) -> np.ndarray:
    """Amplitudes of (op psi) without normalization checks (projectors etc.)."""
    missing = set(op.labels) - set(psi.labels)
    if missing:
        raise LabelError(f"operator labels {sorted(missing)} not present in state")
    n, k = psi.n_qubits, len(op.labels)
    axes = [psi.labels.index(l) for l in op.labels]
    t = psi.amplitudes.reshape((2,) * n)
    m = op.matrix.reshape((2,) * (2 * k))
    out = np.tensordot(m, t, axes=(list(range(k, 2 * k)), axes))
    # tensordot leaves operator output axes in front; restore original layout
    rest = [i for i in range(n) if i not in axes]
    order = [0] * n
    for pos, ax in enumerate(axes):
        order[ax] = pos
    for pos, ax in enumerate(rest):
        order[ax] = k + pos
    return out.transpose(order).reshape(-1)


def apply(op: Operator, psi: StateVector) -> StateVector:
    """Apply an operator to a state, lifting by identity on unlisted labels."""
    return StateVector(psi.labels, raw_apply(op, psi))


def _rotate_to_eigenbasis(psi: StateVector, settings: Mapping[str, Observable]) -> np.ndarray:
    """Express psi with each measured axis in its observable's eigenbasis."""
    amps = psi
    for label, obs in settings.items():
        if label not in psi.labels:
            raise LabelError(f"no subsystem labeled {label!r} in state over {psi.labels}")
        amps = apply(Operator([label], obs.basis.conj().T), amps)
    return amps.amplitudes.reshape((2,) * psi.n_qubits)


def born_distribution(psi: StateVector, settings: Mapping[str, Observable]) -> dict[tuple[int, ...], float]:
    """Joint outcome distribution for measuring each listed label's observable.

    Returns a dict over full outcome tuples (ordered as the settings mapping),
    values +1/-1, including zero-probability tuples.
    """
    t = _rotate_to_eigenbasis(psi, settings)
    measured = [psi.labels.index(l) for l in settings]
    other = tuple(i for i in range(psi.n_qubits) if i not in measured)
    probs = np.abs(t) ** 2
    if other:
        probs = probs.sum(axis=other)
    # remaining axes are the measured ones in canonical state order; permute
    # them into settings order
    kept_order = [i for i in range(psi.n_qubits) if i in measured]
    perm = [kept_order.index(ax) for ax in measured]
    probs = probs.transpose(perm)
    dist = {}
    k = len(measured)
    for idx in np.ndindex(*(2,) * k):
        outcome = tuple(+1 if b == 0 else -1 for b in idx)
        dist[outcome] = float(probs[idx])
    return dist


def expectation(psi: StateVector, product: Sequence[tuple[str, Observable]]) -> float:
    """Expectation of a product of single-subsystem +1/-1 observables."""
    dist = born_distribution(psi, dict(product))
    total = 0.0
    for outcome, p in dist.items():
        sign = 1
        for v in outcome:
            sign *= v
        total += sign * p
    return total


def partial_trace(state, keep: Iterable[str]) -> DensityOperator:
    """Reduced density operator on ``keep``, tracing out every other label."""
    keep = sorted(set(keep))
    if not keep:
        raise HilbertError("cannot trace out every subsystem: keep set is empty")
    if isinstance(state, StateVector):
        labels = state.labels
        missing = set(keep) - set(labels)
        if missing:
            raise LabelError(f"labels {sorted(missing)} not in state over {labels}")
        n = len(labels)
        t = state.amplitudes.reshape((2,) * n)
        traced = [i for i, l in enumerate(labels) if l not in keep]
        rho = np.tensordot(t, t.conj(), axes=(traced, traced))
        k = len(keep)
        return DensityOperator(keep, rho.reshape(2 ** k, 2 ** k))
    if isinstance(state, DensityOperator):
        labels = state.labels
        missing = set(keep) - set(labels)
        if missing:
            raise LabelError(f"labels {sorted(missing)} not in operator over {labels}")
        n = len(labels)
        t = state.matrix.reshape((2,) * (2 * n))
        # trace axes pairwise, highest first so indices stay valid
        traced = [i for i, l in enumerate(labels) if l not in keep]
        for i in reversed(traced):
            m = t.ndim // 2
            t = np.trace(t, axis1=i, axis2=m + i)
        k = len(keep)
        return DensityOperator(keep, t.reshape(2 ** k, 2 ** k))
    raise HilbertError(f"cannot partial-trace a {type(state).__name__}")


def coupling_unitary(obs: Observable, system_label: str, register_label: str) -> Operator:
    """Measurement coupling: copy the observable eigenbasis onto a ready register.

    Maps |w_i>_s |up_z>_r  ->  |w_i>_s |w_i>_r for both eigenvectors w_i, so a
    ready register ends up recording the outcome in the measured basis.
    """
    if system_label == register_label:
        raise CompositionError("system and register labels must differ")
    p_plus, p_minus = obs.projector(+1), obs.projector(-1)
    eye = np.eye(2, dtype=np.complex128)
    flip = np.array([[0, 1], [1, 0]], dtype=np.complex128)
    controlled_copy = np.kron(p_plus, eye) + np.kron(p_minus, flip)
    u = np.kron(eye, obs.basis) @ controlled_copy
    return Operator([system_label, register_label], u, unitary=True)


def project(psi: StateVector, label: str, obs: Observable, value: int) -> tuple[StateVector | None, float]:
    """Project onto one outcome of a single-subsystem observable and renormalize.

    Returns (post_state, probability); post_state is None for probability 0.
    """
    if label not in psi.labels:
        raise LabelError(f"no subsystem labeled {label!r} in state over {psi.labels}")
    out = raw_apply(Operator([label], obs.projector(value)), psi)
    p = float(np.sum(np.abs(out) ** 2))
    if p <= ATOL:
        return None, 0.0
    return StateVector(psi.labels, out / np.sqrt(p)), p
