"""Line-oriented circuit text format: parser and emitter.

Grammar (one statement per line, '#' starts a comment):

    qubits <n>                         header, required first
    <mnemonic> <operand>... [@<tag>]   gate line
    measure all                        optional, once, last

Mnemonics: id x sx sxdg h z rz(<radians>) cx mcz mcx. Operands look like q<i>.
Tags: @superposition @oraclecore @difformer @difx @difcore @diflatter.

emit() prints RZ angles with 12 significant digits; emit(parse(text)) is the
canonical form of text, and parse(emit(c)) reproduces c exactly whenever c's
angles are representable at that precision.
"""

from __future__ import annotations

import re

from .circuit import Circuit, Gate, Instruction, Tag
from .errors import (
    CircuitSyntaxError,
    MissingHeaderError,
    OutOfRangeQubitError,
    UnknownGateError,
)
from .errors import AxiqError

_MNEMONICS = {g.mnemonic: g for g in Gate}
_TAGS = {t.value: t for t in Tag if t is not Tag.UNTAGGED}

_RZ_RE = re.compile(r"^rz\((?P<angle>[^()\s]+)\)$")
_OPERAND_RE = re.compile(r"^q(\d+)$")


def emit(circuit: Circuit) -> str:
    """Render a circuit in canonical text form (newline-terminated)."""
    lines = [f"qubits {circuit.n}"]
    for instr in circuit.ops:
        head = instr.gate.mnemonic
        if instr.gate is Gate.RZ:
            head = f"rz({instr.theta:.12g})"
        words = [head] + [f"q{q}" for q in instr.qubits]
        if instr.tag is not Tag.UNTAGGED:
            words.append(f"@{instr.tag.value}")
        lines.append(" ".join(words))
    if circuit.measure_all:
        lines.append("measure all")
    return "\n".join(lines) + "\n"


def _parse_gate_line(words: list[str], n: int, ln: int) -> Instruction:
    head = words[0]
    theta = None
    m = _RZ_RE.match(head)
    if m:
        gate = Gate.RZ
        try:
            theta = float(m.group("angle"))
        except ValueError:
            raise CircuitSyntaxError(f"bad rz angle {m.group('angle')!r}", ln)
    else:
        gate = _MNEMONICS.get(head)
        if gate is None or gate is Gate.RZ:
            raise UnknownGateError(f"unknown gate {head!r}", ln)
    tag = Tag.UNTAGGED
    if words and words[-1].startswith("@"):
        token = words.pop()[1:]
        tag = _TAGS.get(token)
        if tag is None:
            raise CircuitSyntaxError(f"unknown tag @{token}", ln)
    qubits = []
    for word in words[1:]:
        om = _OPERAND_RE.match(word)
        if om is None:
            raise CircuitSyntaxError(f"bad operand {word!r}", ln)
        q = int(om.group(1))
        if q >= n:
            raise OutOfRangeQubitError(f"line {ln}: qubit q{q} out of range for {n} qubits")
        qubits.append(q)
    try:
        return Instruction(gate, tuple(qubits), theta, tag)
    except AxiqError as exc:
        raise CircuitSyntaxError(str(exc), ln)


def parse(text: str) -> Circuit:
    """Parse circuit text; errors carry the 1-based source line number."""
    n = None
    ops: list[Instruction] = []
    measured = False
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        if n is None:
            if words[0] != "qubits":
                raise MissingHeaderError("expected 'qubits <n>' header", ln)
            if len(words) != 2 or not words[1].isdigit() or int(words[1]) < 1:
                raise CircuitSyntaxError(f"bad header {line!r}", ln)
            n = int(words[1])
            continue
        if words[0] == "qubits":
            raise CircuitSyntaxError("duplicate qubits header", ln)
        if words == ["measure", "all"]:
            if measured:
                raise CircuitSyntaxError("duplicate measure all", ln)
            measured = True
            continue
        if measured:
            raise CircuitSyntaxError("instruction after measure all", ln)
        if words[0] == "measure":
            raise CircuitSyntaxError(f"bad measure statement {line!r}", ln)
        ops.append(_parse_gate_line(words, n, ln))
    if n is None:
        raise MissingHeaderError("empty circuit text: expected 'qubits <n>' header")
    return Circuit(n, tuple(ops), measured)
