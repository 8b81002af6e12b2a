"""Tagged Grover search circuits and their closed-form outcome distribution.

The builder emits the same structure for both superposition axes:

    superposition layer
    k times: [ phase oracle | diffusion ]

X axis uses H for the superposition and diffusion wrapper layers. Y axis
prepares the superposition along the Bloch Y axis instead: SX for the
superposition, SXDG for the leading diffusion wrapper, SX for the trailing
one. Both reflect about the same initial state, so measurement statistics
agree exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .circuit import Circuit, Gate, Instruction, Tag
from .errors import BadMarkedLengthError, InvalidIterationCountError, TooFewQubitsError


class Axis(Enum):
    X = "x"
    Y = "y"


@dataclass(frozen=True)
class GroverSpec:
    """Search parameters: width, marked bitstring (qubit n-1 first),
    iteration count, superposition axis, optional terminal measure marker."""

    n: int
    marked: str
    iterations: int = 1
    axis: Axis = Axis.X
    include_measure: bool = False

    def __post_init__(self):
        if self.n < 2:
            raise TooFewQubitsError(f"search needs at least 2 qubits, got {self.n}")
        if len(self.marked) != self.n:
            raise BadMarkedLengthError(
                f"marked string {self.marked!r} does not have length {self.n}"
            )
        if set(self.marked) - {"0", "1"}:
            raise BadMarkedLengthError(f"marked string {self.marked!r} is not binary")
        if not isinstance(self.iterations, int) or self.iterations < 1:
            raise InvalidIterationCountError(
                f"iterations must be a positive integer, got {self.iterations!r}"
            )


def build_grover(spec: GroverSpec) -> Circuit:
    """Construct the tagged search circuit for the requested axis.

    The phase oracle conjugates an all-qubit MCZ with X on every qubit whose
    marked bit is 0. The diffusion is wrapper / X layer / MCZ / X layer /
    wrapper, a reflection about the superposition state.
    """
    n, k = spec.n, spec.iterations
    former, latter = (Gate.H, Gate.H) if spec.axis is Axis.X else (Gate.SXDG, Gate.SX)
    superpose = Gate.H if spec.axis is Axis.X else Gate.SX
    zeros = [q for q in range(n) if spec.marked[n - 1 - q] == "0"]
    everyone = tuple(range(n))

    ops: list[Instruction] = []
    ops += [Instruction(superpose, (q,), tag=Tag.SUPERPOSITION) for q in range(n)]
    for _ in range(k):
        ops += [Instruction(Gate.X, (q,), tag=Tag.ORACLE_CORE) for q in zeros]
        ops.append(Instruction(Gate.MCZ, everyone, tag=Tag.ORACLE_CORE))
        ops += [Instruction(Gate.X, (q,), tag=Tag.ORACLE_CORE) for q in zeros]
        ops += [Instruction(former, (q,), tag=Tag.DIFFUSION_FORMER) for q in range(n)]
        ops += [Instruction(Gate.X, (q,), tag=Tag.DIFFUSION_X) for q in range(n)]
        ops.append(Instruction(Gate.MCZ, everyone, tag=Tag.DIFFUSION_CORE))
        ops += [Instruction(Gate.X, (q,), tag=Tag.DIFFUSION_X) for q in range(n)]
        ops += [Instruction(latter, (q,), tag=Tag.DIFFUSION_LATTER) for q in range(n)]
    return Circuit(n, tuple(ops), measure_all=spec.include_measure)


def reference_distribution(spec: GroverSpec) -> dict[str, float]:
    """Closed-form outcome table: the marked state carries
    sin((2k+1) * asin(2^(-n/2)))^2 and the rest split the remainder evenly."""
    theta = math.asin(2.0 ** (-spec.n / 2.0))
    hit = math.sin((2 * spec.iterations + 1) * theta) ** 2
    miss = (1.0 - hit) / (2**spec.n - 1)
    table = {
        format(i, f"0{spec.n}b"): miss for i in range(2**spec.n)
    }
    table[spec.marked] = hit
    return table


def optimal_iterations(n: int) -> int:
    """Iteration count that maximizes the hit probability for one marked
    state; never applied implicitly by the builder."""
    return max(1, math.floor((math.pi / 4.0) * 2.0 ** (n / 2.0)))
