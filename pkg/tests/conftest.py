"""Shared helpers for the test suite."""

import random
from math import pi

from axiq.circuit import Circuit, Gate, Instruction

# Gate pool for randomized pass testing: single-qubit vocabulary plus CX.
PASS_GATE_POOL = (Gate.H, Gate.X, Gate.SX, Gate.SXDG, Gate.RZ, Gate.CX, Gate.Z)

FULL_GATE_POOL = PASS_GATE_POOL + (Gate.I, Gate.MCZ, Gate.MCX)


def random_circuit(
    rng: random.Random,
    n: int,
    length: int,
    pool=PASS_GATE_POOL,
) -> Circuit:
    ops = []
    while len(ops) < length:
        gate = rng.choice(pool)
        if gate is Gate.CX:
            if n < 2:
                continue
            qubits = tuple(rng.sample(range(n), 2))
        elif gate is Gate.MCZ:
            if n < 2:
                continue
            qubits = tuple(rng.sample(range(n), rng.randint(2, n)))
        elif gate is Gate.MCX:
            if n < 3:
                continue
            qubits = tuple(rng.sample(range(n), rng.randint(3, n)))
        else:
            qubits = (rng.randrange(n),)
        theta = rng.uniform(-pi, pi) if gate is Gate.RZ else None
        ops.append(Instruction(gate, qubits, theta))
    return Circuit(n, tuple(ops))
