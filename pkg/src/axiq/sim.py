"""Statevector execution, dense reference unitaries, and verification helpers.

run() walks the amplitude array in place with stride arithmetic (reshape for
single-qubit gates, index masks for CX/MCZ/MCX). unitary() is the slow
reference path: it embeds every instruction as a dense 2^n x 2^n matrix and
multiplies them out, so the two routes cross-check each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .circuit import Circuit, Gate, Instruction, gate_matrix
from .errors import (
    AllZeroMatrixError,
    DimensionMismatchError,
    EmptyDistributionError,
    NotSingleQubitError,
    QubitCountMismatchError,
    SizeCapExceededError,
)

RUN_QUBIT_CAP = 20
UNITARY_QUBIT_CAP = 10

# Construction guard only; unitarity keeps run() outputs far tighter.
_NORM_TOL = 1e-9


@dataclass(frozen=True)
class Statevector:
    """Unit-norm amplitude vector; index bit i is qubit i."""

    n: int
    amps: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amps, dtype=complex)
        if amps.shape != (1 << self.n,):
            raise DimensionMismatchError(
                f"expected {1 << self.n} amplitudes for n={self.n}, got {amps.shape}"
            )
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > _NORM_TOL:
            raise DimensionMismatchError(f"state norm {norm} is not 1")
        amps = amps.copy()
        amps.flags.writeable = False
        object.__setattr__(self, "amps", amps)

    @classmethod
    def zero(cls, n: int) -> "Statevector":
        amps = np.zeros(1 << n, dtype=complex)
        amps[0] = 1.0
        return cls(n, amps)


class EquivalenceReport(NamedTuple):
    equal: bool
    phase: float
    residual: float


class BlochVector(NamedTuple):
    x: float
    y: float
    z: float


def _apply_1q(amps: np.ndarray, n: int, u: np.ndarray, q: int) -> np.ndarray:
    view = amps.reshape(1 << (n - 1 - q), 2, 1 << q)
    return np.einsum("ab,hbl->hal", u, view).reshape(-1)


def _apply(amps: np.ndarray, n: int, instr: Instruction) -> np.ndarray:
    gate = instr.gate
    if gate is Gate.I:
        return amps
    if len(instr.qubits) == 1:
        return _apply_1q(amps, n, gate_matrix(gate, instr.theta), instr.qubits[0])
    idx = np.arange(1 << n)
    if gate is Gate.MCZ:
        mask = np.ones(1 << n, dtype=bool)
        for q in instr.qubits:
            mask &= (idx >> q) & 1 == 1
        out = amps.copy()
        out[mask] = -out[mask]
        return out
    # CX and MCX: flip the target bit wherever every control bit is set.
    controls, target = instr.qubits[:-1], instr.qubits[-1]
    mask = np.ones(1 << n, dtype=bool)
    for q in controls:
        mask &= (idx >> q) & 1 == 1
    out = amps.copy()
    out[mask] = amps[idx[mask] ^ (1 << target)]
    return out


def run(circuit: Circuit, initial: Statevector | None = None) -> Statevector:
    """Apply the circuit to the initial state (|0...0> by default)."""
    if circuit.n > RUN_QUBIT_CAP:
        raise SizeCapExceededError(f"run is capped at {RUN_QUBIT_CAP} qubits, got {circuit.n}")
    if initial is None:
        amps = np.zeros(1 << circuit.n, dtype=complex)
        amps[0] = 1.0
    else:
        if initial.n != circuit.n:
            raise DimensionMismatchError(
                f"initial state has {initial.n} qubits, circuit has {circuit.n}"
            )
        amps = initial.amps.astype(complex, copy=True)
    for instr in circuit.ops:
        amps = _apply(amps, circuit.n, instr)
    return Statevector(circuit.n, amps)


def _dense(instr: Instruction, n: int) -> np.ndarray:
    dim = 1 << n
    if len(instr.qubits) == 1:
        q = instr.qubits[0]
        u = gate_matrix(instr.gate, instr.theta)
        return np.kron(np.eye(1 << (n - 1 - q), dtype=complex),
                       np.kron(u, np.eye(1 << q, dtype=complex)))
    src = np.arange(dim)
    if instr.gate is Gate.MCZ:
        signs = np.ones(dim, dtype=complex)
        mask = np.ones(dim, dtype=bool)
        for q in instr.qubits:
            mask &= (src >> q) & 1 == 1
        signs[mask] = -1.0
        return np.diag(signs)
    controls, target = instr.qubits[:-1], instr.qubits[-1]
    mask = np.ones(dim, dtype=bool)
    for q in controls:
        mask &= (src >> q) & 1 == 1
    dst = np.where(mask, src ^ (1 << target), src)
    m = np.zeros((dim, dim), dtype=complex)
    m[dst, src] = 1.0
    return m


def unitary(circuit: Circuit) -> np.ndarray:
    """Dense circuit unitary; columns are the images of the basis states."""
    if circuit.n > UNITARY_QUBIT_CAP:
        raise SizeCapExceededError(
            f"unitary is capped at {UNITARY_QUBIT_CAP} qubits, got {circuit.n}"
        )
    u = np.eye(1 << circuit.n, dtype=complex)
    for instr in circuit.ops:
        if instr.gate is Gate.I:
            continue
        u = _dense(instr, circuit.n) @ u
    return u


def equiv_global_phase(a: np.ndarray, b: np.ndarray, tol: float = 1e-9) -> EquivalenceReport:
    """Check a == exp(i*phase) * b, aligning on b's largest-magnitude entry."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise DimensionMismatchError(f"shape mismatch {a.shape} vs {b.shape}")
    flat = np.argmax(np.abs(b))
    ref = b.reshape(-1)[flat]
    if ref == 0:
        raise AllZeroMatrixError("reference matrix is all zeros")
    phase = float(np.angle(a.reshape(-1)[flat] / ref))
    residual = float(np.max(np.abs(a - np.exp(1j * phase) * b)))
    return EquivalenceReport(residual <= tol, phase, residual)


def probabilities(state: Statevector) -> dict[str, float]:
    """Outcome table keyed by bitstrings with qubit n-1 printed first."""
    probs = np.abs(state.amps) ** 2
    width = state.n
    return {format(i, f"0{width}b"): float(p) for i, p in enumerate(probs)}


def sample(dist: dict[str, float], shots: int, seed: int) -> dict[str, int]:
    """Draw a seeded multinomial sample; zero-count outcomes are omitted."""
    if not dist:
        raise EmptyDistributionError("cannot sample from an empty distribution")
    if shots < 1:
        raise EmptyDistributionError(f"shots must be >= 1, got {shots}")
    keys = sorted(dist)
    p = np.array([dist[k] for k in keys], dtype=float)
    total = p.sum()
    if total <= 0:
        raise EmptyDistributionError("distribution has no probability mass")
    counts = np.random.default_rng(seed).multinomial(shots, p / total)
    return {k: int(c) for k, c in zip(keys, counts) if c > 0}


def tvd(a: dict[str, float], b: dict[str, float]) -> float:
    """Total variation distance; missing outcomes count as probability 0."""
    widths = {len(k) for k in a} | {len(k) for k in b}
    if len(widths) > 1:
        raise QubitCountMismatchError(f"mixed bitstring lengths {sorted(widths)}")
    keys = set(a) | set(b)
    return 0.5 * sum(abs(a.get(k, 0.0) - b.get(k, 0.0)) for k in keys)


def bloch(state: Statevector) -> BlochVector:
    """Bloch coordinates (x, y, z) of a single-qubit state."""
    if state.n != 1:
        raise NotSingleQubitError(f"bloch needs 1 qubit, got {state.n}")
    a, b = state.amps
    cross = a.conjugate() * b
    return BlochVector(2.0 * cross.real, 2.0 * cross.imag, abs(a) ** 2 - abs(b) ** 2)
