"""Gate-count and depth reporting against the sqrt(X)-native gate set.

The wrapper count is the figure of merit for axis rewrites: native gates
outside the oracle/diffusion cores, i.e. the superposition and diffusion
wrapper layers that the rewrites actually shrink. Cores are opaque and
identical across variants, so they are excluded from the comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circuit import CORE_TAGS, NATIVE_GATES, Circuit
from .errors import ZeroBaselineError


@dataclass(frozen=True)
class CostReport:
    n: int
    total: int
    depth: int
    per_kind: dict[str, int]
    native_total: int
    non_native_total: int
    wrapper_native_total: int


@dataclass(frozen=True)
class ComparisonReport:
    baseline: CostReport
    candidate: CostReport
    wrapper_reduction_percent: float


def report(circuit: Circuit) -> CostReport:
    """Count instructions per kind plus native/non-native/wrapper totals."""
    per_kind: dict[str, int] = {}
    native = 0
    wrapper = 0
    for instr in circuit.ops:
        per_kind[instr.gate.mnemonic] = per_kind.get(instr.gate.mnemonic, 0) + 1
        if instr.gate in NATIVE_GATES:
            native += 1
            if instr.tag not in CORE_TAGS:
                wrapper += 1
    total = len(circuit.ops)
    return CostReport(
        n=circuit.n,
        total=total,
        depth=circuit.depth(),
        per_kind=per_kind,
        native_total=native,
        non_native_total=total - native,
        wrapper_native_total=wrapper,
    )


def compare(baseline: Circuit, candidate: Circuit) -> ComparisonReport:
    """Report both circuits and the wrapper-count reduction percentage."""
    base = report(baseline)
    cand = report(candidate)
    if base.wrapper_native_total == 0:
        raise ZeroBaselineError("baseline has no wrapper native gates to reduce")
    reduction = 100.0 * (1.0 - cand.wrapper_native_total / base.wrapper_native_total)
    return ComparisonReport(base, cand, reduction)
