"""Gate vocabulary, instructions, and immutable circuit values.

The native set mirrors sqrt(X)-based hardware: I, SX, X, RZ, CX. H and Z stay
in the vocabulary as non-native gates so circuits can be written the textbook
way and lowered later. MCZ and MCX are opaque multi-qubit cores: MCZ flips the
sign of the all-ones operand pattern, MCX flips its last operand when every
control reads 1.

Conventions pinned here and relied on everywhere else:
  - RZ(theta) = diag(exp(-i*theta/2), exp(+i*theta/2)), canonical theta in (-pi, pi].
  - SX is the principal square root of X, so SX @ SX == X exactly.
  - Basis index bit i is qubit i; outcome strings print qubit n-1 first.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    ArityMismatchError,
    DuplicateQubitError,
    InvalidAngleError,
    OutOfRangeQubitError,
)


class Gate(Enum):
    I = "id"
    X = "x"
    SX = "sx"
    SXDG = "sxdg"
    RZ = "rz"
    H = "h"
    Z = "z"
    CX = "cx"
    MCZ = "mcz"
    MCX = "mcx"

    @property
    def mnemonic(self) -> str:
        return self.value


SINGLE_QUBIT_GATES = frozenset(
    {Gate.I, Gate.X, Gate.SX, Gate.SXDG, Gate.RZ, Gate.H, Gate.Z}
)

# Gates a sqrt(X)-native machine runs directly; H, Z, MCZ, MCX need lowering.
NATIVE_GATES = frozenset({Gate.I, Gate.SX, Gate.X, Gate.RZ, Gate.CX})


class Tag(Enum):
    """Structural role of an instruction inside a search circuit."""

    SUPERPOSITION = "superposition"
    ORACLE_CORE = "oraclecore"
    DIFFUSION_FORMER = "difformer"
    DIFFUSION_X = "difx"
    DIFFUSION_CORE = "difcore"
    DIFFUSION_LATTER = "diflatter"
    UNTAGGED = "untagged"


CORE_TAGS = frozenset({Tag.ORACLE_CORE, Tag.DIFFUSION_CORE})


def canonical_angle(theta: float) -> float:
    """Map an angle onto the canonical branch (-pi, pi].

    Values already inside the open interval pass through bit-exact. A 2*pi
    shift flips the RZ matrix sign, which is only a global phase.
    """
    if not math.isfinite(theta):
        raise InvalidAngleError(f"rz angle must be finite, got {theta!r}")
    theta = math.remainder(theta, math.tau)
    return math.pi if theta == -math.pi else theta


@dataclass(frozen=True)
class Instruction:
    """One gate application: kind, operand qubits, RZ angle, layer tag."""

    gate: Gate
    qubits: tuple[int, ...]
    theta: float | None = None
    tag: Tag = Tag.UNTAGGED

    def __post_init__(self):
        object.__setattr__(self, "qubits", tuple(self.qubits))
        arity = len(self.qubits)
        if self.gate in SINGLE_QUBIT_GATES:
            if arity != 1:
                raise ArityMismatchError(f"{self.gate.mnemonic} takes 1 qubit, got {arity}")
        elif self.gate is Gate.CX:
            if arity != 2:
                raise ArityMismatchError(f"cx takes 2 qubits, got {arity}")
        elif self.gate is Gate.MCZ:
            if arity < 2:
                raise ArityMismatchError(f"mcz takes at least 2 qubits, got {arity}")
        elif self.gate is Gate.MCX:
            if arity < 3:
                raise ArityMismatchError(f"mcx takes at least 3 qubits, got {arity}")
        if len(set(self.qubits)) != arity:
            raise DuplicateQubitError(f"repeated qubit in {self.gate.mnemonic} {self.qubits}")
        if any(not isinstance(q, int) or q < 0 for q in self.qubits):
            raise OutOfRangeQubitError(
                f"qubit indices must be non-negative integers, got {self.qubits}"
            )
        if self.gate is Gate.RZ:
            if self.theta is None:
                raise ArityMismatchError("rz needs an angle")
            object.__setattr__(self, "theta", canonical_angle(float(self.theta)))
        elif self.theta is not None:
            raise ArityMismatchError(f"{self.gate.mnemonic} takes no angle")


def ident(q: int, tag: Tag = Tag.UNTAGGED) -> Instruction:
    return Instruction(Gate.I, (q,), tag=tag)


def x(q: int, tag: Tag = Tag.UNTAGGED) -> Instruction:
    return Instruction(Gate.X, (q,), tag=tag)


def sx(q: int, tag: Tag = Tag.UNTAGGED) -> Instruction:
    return Instruction(Gate.SX, (q,), tag=tag)


def sxdg(q: int, tag: Tag = Tag.UNTAGGED) -> Instruction:
    return Instruction(Gate.SXDG, (q,), tag=tag)


def rz(theta: float, q: int, tag: Tag = Tag.UNTAGGED) -> Instruction:
    return Instruction(Gate.RZ, (q,), theta, tag)


def h(q: int, tag: Tag = Tag.UNTAGGED) -> Instruction:
    return Instruction(Gate.H, (q,), tag=tag)


def z(q: int, tag: Tag = Tag.UNTAGGED) -> Instruction:
    return Instruction(Gate.Z, (q,), tag=tag)


def cx(control: int, target: int, tag: Tag = Tag.UNTAGGED) -> Instruction:
    return Instruction(Gate.CX, (control, target), tag=tag)


def mcz(*qubits: int, tag: Tag = Tag.UNTAGGED) -> Instruction:
    return Instruction(Gate.MCZ, qubits, tag=tag)


def mcx(*qubits: int, tag: Tag = Tag.UNTAGGED) -> Instruction:
    return Instruction(Gate.MCX, qubits, tag=tag)


@dataclass(frozen=True)
class Circuit:
    """Ordered instruction list over n qubits; all methods return new values.

    measure_all is an export-only marker for a terminal full-register
    measurement; simulation always works with exact amplitudes.
    """

    n: int
    ops: tuple[Instruction, ...] = ()
    measure_all: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise OutOfRangeQubitError(f"circuit needs at least 1 qubit, got {self.n}")
        object.__setattr__(self, "ops", tuple(self.ops))
        for instr in self.ops:
            for q in instr.qubits:
                if q >= self.n:
                    raise OutOfRangeQubitError(
                        f"qubit q{q} out of range for {self.n}-qubit circuit"
                    )

    def append(self, instr: Instruction) -> "Circuit":
        return Circuit(self.n, self.ops + (instr,), self.measure_all)

    def extend(self, instrs) -> "Circuit":
        return Circuit(self.n, self.ops + tuple(instrs), self.measure_all)

    def with_measure(self, flag: bool = True) -> "Circuit":
        return Circuit(self.n, self.ops, flag)

    def depth(self) -> int:
        """Greedy layering depth: each instruction sits one layer after the
        busiest of its operands."""
        level: dict[int, int] = {}
        deepest = 0
        for instr in self.ops:
            layer = 1 + max((level.get(q, 0) for q in instr.qubits), default=0)
            for q in instr.qubits:
                level[q] = layer
            deepest = max(deepest, layer)
        return deepest

    def count(self, gate: Gate) -> int:
        return sum(1 for instr in self.ops if instr.gate is gate)


def structurally_equal(a: Circuit, b: Circuit, angle_tol: float = 0.0) -> bool:
    """Instruction-for-instruction equality; RZ angles may differ by angle_tol."""
    if a.n != b.n or a.measure_all != b.measure_all or len(a.ops) != len(b.ops):
        return False
    for ia, ib in zip(a.ops, b.ops):
        if ia.gate is not ib.gate or ia.qubits != ib.qubits or ia.tag is not ib.tag:
            return False
        if ia.gate is Gate.RZ and abs(ia.theta - ib.theta) > angle_tol:
            return False
    return True


_SQRT_HALF = 1.0 / math.sqrt(2.0)

_MATRICES = {
    Gate.I: np.eye(2, dtype=complex),
    Gate.X: np.array([[0, 1], [1, 0]], dtype=complex),
    Gate.SX: np.array(
        [[0.5 + 0.5j, 0.5 - 0.5j], [0.5 - 0.5j, 0.5 + 0.5j]], dtype=complex
    ),
    Gate.SXDG: np.array(
        [[0.5 - 0.5j, 0.5 + 0.5j], [0.5 + 0.5j, 0.5 - 0.5j]], dtype=complex
    ),
    Gate.H: np.array([[_SQRT_HALF, _SQRT_HALF], [_SQRT_HALF, -_SQRT_HALF]], dtype=complex),
    Gate.Z: np.array([[1, 0], [0, -1]], dtype=complex),
    # Local basis order puts the first operand in the low bit, so this is
    # CX with control = operand 0, target = operand 1.
    Gate.CX: np.array(
        [[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]], dtype=complex
    ),
}


def gate_matrix(gate: Gate, theta: float | None = None) -> np.ndarray:
    """Dense matrix of a fixed-arity gate (2x2, or 4x4 for CX).

    MCZ and MCX have no fixed-size matrix; the simulator applies them by
    rule (sign flip / target flip on the all-ones control pattern).
    """
    if gate is Gate.RZ:
        if theta is None:
            raise ArityMismatchError("rz needs an angle")
        theta = canonical_angle(float(theta))
        return np.array(
            [[cmath.exp(-0.5j * theta), 0], [0, cmath.exp(0.5j * theta)]], dtype=complex
        )
    if gate in (Gate.MCZ, Gate.MCX):
        raise ArityMismatchError(f"{gate.mnemonic} has no fixed-size matrix")
    if theta is not None:
        raise ArityMismatchError(f"{gate.mnemonic} takes no angle")
    return _MATRICES[gate].copy()
