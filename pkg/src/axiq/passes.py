"""Circuit rewrite passes.

decompose_h     H -> [RZ, SX, RZ] sequences (two modes, see DecomposeMode)
substitute_axis tag-directed H -> SX/SXDG swap of the superposition axis
expand_x        X -> [SX, SX], an exact identity
cancel          peephole fixpoint: inverse pairs, RZ merging, identity drop
realize_mcz     MCZ -> [H, MCX, H] on the last operand (arity 2 uses CX)

All passes are pure functions returning new circuits; tags ride along with
the rewritten instructions.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import pi

from .circuit import CORE_TAGS, Circuit, Gate, Instruction, Tag, canonical_angle
from .errors import UnknownPassError, UntaggedHError


class DecomposeMode(Enum):
    """How decompose_h picks the RZ angles around the SX.

    SYMMETRIC places RZ(+pi/2) on both sides of every H. Each replacement
    equals exp(-i*pi/4) * H on its own, so any circuit is preserved up to a
    global phase.

    PHASE_MATCHED keys the sequence on the layer tag. The diffusion wrapper
    layers get mirrored asymmetric sequences, time-ordered

        former:  RZ(+pi/2)  SX  RZ(-pi/2)
        latter:  RZ(-pi/2)  SX  RZ(+pi/2)

    Individually neither equals H up to phase, but their product around the
    diffusion core reproduces the undecomposed reflection exactly: the full
    tagged search circuit stays unitary-equal up to the global phase
    exp(i*(2k-1)*n*pi/4). Everything else (superposition, cores, untagged)
    gets the symmetric sequence. Only meaningful for tagged circuits; on
    untagged circuits both modes coincide.
    """

    SYMMETRIC = "symmetric"
    PHASE_MATCHED = "phase-matched"


_SYMMETRIC_SEQ = (pi / 2, pi / 2)

_PHASE_MATCHED_SEQS = {
    Tag.DIFFUSION_FORMER: (pi / 2, -pi / 2),
    Tag.DIFFUSION_LATTER: (-pi / 2, pi / 2),
}


def decompose_h(circuit: Circuit, mode: DecomposeMode = DecomposeMode.SYMMETRIC) -> Circuit:
    """Replace every H with a three-gate native [RZ, SX, RZ] sequence."""
    ops: list[Instruction] = []
    for instr in circuit.ops:
        if instr.gate is not Gate.H:
            ops.append(instr)
            continue
        first, last = _SYMMETRIC_SEQ
        if mode is DecomposeMode.PHASE_MATCHED:
            first, last = _PHASE_MATCHED_SEQS.get(instr.tag, _SYMMETRIC_SEQ)
        q = instr.qubits[0]
        ops += [
            Instruction(Gate.RZ, (q,), first, instr.tag),
            Instruction(Gate.SX, (q,), tag=instr.tag),
            Instruction(Gate.RZ, (q,), last, instr.tag),
        ]
    return Circuit(circuit.n, tuple(ops), circuit.measure_all)


_AXIS_SWAP = {
    Tag.SUPERPOSITION: Gate.SX,
    Tag.DIFFUSION_FORMER: Gate.SXDG,
    Tag.DIFFUSION_LATTER: Gate.SX,
}


def substitute_axis(circuit: Circuit) -> Circuit:
    """Swap the superposition axis of a tagged circuit from X to Y.

    Superposition H becomes SX, the leading diffusion wrapper H becomes SXDG,
    the trailing one SX; the replacement is 1-for-1 so layer gate counts are
    unchanged. H inside oracle or diffusion cores stays. Any other H has no
    defined role and is an error.
    """
    ops: list[Instruction] = []
    for instr in circuit.ops:
        if instr.gate is not Gate.H:
            ops.append(instr)
            continue
        if instr.tag in CORE_TAGS:
            ops.append(instr)
        elif instr.tag in _AXIS_SWAP:
            ops.append(Instruction(_AXIS_SWAP[instr.tag], instr.qubits, tag=instr.tag))
        else:
            raise UntaggedHError(
                f"h on q{instr.qubits[0]} has tag {instr.tag.value!r}, not a wrapper role"
            )
    return Circuit(circuit.n, tuple(ops), circuit.measure_all)


def expand_x(circuit: Circuit) -> Circuit:
    """Replace every X with [SX, SX]; exact, no phase involved."""
    ops: list[Instruction] = []
    for instr in circuit.ops:
        if instr.gate is Gate.X:
            q = instr.qubits[0]
            ops += [
                Instruction(Gate.SX, (q,), tag=instr.tag),
                Instruction(Gate.SX, (q,), tag=instr.tag),
            ]
        else:
            ops.append(instr)
    return Circuit(circuit.n, tuple(ops), circuit.measure_all)


# Adjacent pairs on one qubit that multiply to the identity.
_CANCEL_PAIRS = frozenset(
    {(Gate.SX, Gate.SXDG), (Gate.SXDG, Gate.SX), (Gate.X, Gate.X), (Gate.H, Gate.H)}
)


def _latest_on(out: list[Instruction | None], q: int, start: int) -> int | None:
    for j in range(start, -1, -1):
        instr = out[j]
        if instr is not None and q in instr.qubits:
            return j
    return None


def _cancel_once(ops) -> list[Instruction]:
    out: list[Instruction | None] = []
    last: dict[int, int | None] = {}
    for instr in ops:
        if instr.gate is Gate.I:
            continue
        if len(instr.qubits) == 1:
            q = instr.qubits[0]
            j = last.get(q)
            prev = out[j] if j is not None else None
            if prev is not None and len(prev.qubits) == 1:
                if (prev.gate, instr.gate) in _CANCEL_PAIRS:
                    out[j] = None
                    last[q] = _latest_on(out, q, j - 1)
                    continue
                if prev.gate is Gate.RZ and instr.gate is Gate.RZ:
                    merged = canonical_angle(prev.theta + instr.theta)
                    if merged == 0.0:
                        out[j] = None
                        last[q] = _latest_on(out, q, j - 1)
                    else:
                        out[j] = Instruction(Gate.RZ, (q,), merged, prev.tag)
                    continue
        out.append(instr)
        for q in instr.qubits:
            last[q] = len(out) - 1
    return [o for o in out if o is not None]


def cancel(circuit: Circuit) -> Circuit:
    """Drop I gates, cancel adjacent inverse pairs (SX/SXDG, X/X, H/H), and
    merge adjacent RZ angles, repeating until nothing fires.

    "Adjacent" means no instruction in between touches that qubit. Merged RZ
    angles are canonicalized, which may flip the global sign; everything else
    is an exact identity. Never increases the instruction count and is
    idempotent. Merged RZ keeps the earlier instruction's tag.
    """
    ops = list(circuit.ops)
    while True:
        new_ops = _cancel_once(ops)
        if len(new_ops) == len(ops):
            return Circuit(circuit.n, tuple(new_ops), circuit.measure_all)
        ops = new_ops


def realize_mcz(circuit: Circuit) -> Circuit:
    """Expand each MCZ into [H, multi-controlled X, H] on its last operand.

    MCZ is symmetric in its operands, so the choice of target is free; the
    last operand is used. Arity-2 MCZ lowers to CX. Tags are preserved, so
    core-tagged MCZ keeps its core-tagged wrapping H gates.
    """
    ops: list[Instruction] = []
    for instr in circuit.ops:
        if instr.gate is not Gate.MCZ:
            ops.append(instr)
            continue
        target = instr.qubits[-1]
        flip = Gate.CX if len(instr.qubits) == 2 else Gate.MCX
        ops += [
            Instruction(Gate.H, (target,), tag=instr.tag),
            Instruction(flip, instr.qubits, tag=instr.tag),
            Instruction(Gate.H, (target,), tag=instr.tag),
        ]
    return Circuit(circuit.n, tuple(ops), circuit.measure_all)


def _decompose_h_symmetric(circuit: Circuit) -> Circuit:
    return decompose_h(circuit, DecomposeMode.SYMMETRIC)


def _decompose_h_phase_matched(circuit: Circuit) -> Circuit:
    return decompose_h(circuit, DecomposeMode.PHASE_MATCHED)


PASSES = {
    "decompose-h-safe": _decompose_h_symmetric,
    "decompose-h-matched": _decompose_h_phase_matched,
    "substitute-axis": substitute_axis,
    "expand-x": expand_x,
    "cancel": cancel,
}


@dataclass(frozen=True)
class PassLog:
    """(pass name, instruction count before, count after) per applied pass."""

    entries: tuple[tuple[str, int, int], ...] = ()


def pipeline(circuit: Circuit, passes: list[str]) -> tuple[Circuit, PassLog]:
    """Apply named passes in order; unknown names raise UnknownPassError."""
    entries = []
    for name in passes:
        fn = PASSES.get(name)
        if fn is None:
            raise UnknownPassError(
                f"unknown pass {name!r}; valid: {', '.join(sorted(PASSES))}"
            )
        before = len(circuit.ops)
        circuit = fn(circuit)
        entries.append((name, before, len(circuit.ops)))
    return circuit, PassLog(tuple(entries))
