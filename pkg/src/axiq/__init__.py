"""Search-circuit toolkit: build tagged Grover circuits, rewrite their
superposition axis onto sqrt(X)-native gates, simulate, and compare costs."""

from .circuit import (
    CORE_TAGS,
    NATIVE_GATES,
    SINGLE_QUBIT_GATES,
    Circuit,
    Gate,
    Instruction,
    Tag,
    canonical_angle,
    cx,
    gate_matrix,
    h,
    ident,
    mcx,
    mcz,
    rz,
    structurally_equal,
    sx,
    sxdg,
    x,
    z,
)
from .cost import ComparisonReport, CostReport, compare, report
from .grover import Axis, GroverSpec, build_grover, optimal_iterations, reference_distribution
from .passes import (
    PASSES,
    DecomposeMode,
    PassLog,
    cancel,
    decompose_h,
    expand_x,
    pipeline,
    realize_mcz,
    substitute_axis,
)
from .sim import (
    RUN_QUBIT_CAP,
    UNITARY_QUBIT_CAP,
    BlochVector,
    EquivalenceReport,
    Statevector,
    bloch,
    equiv_global_phase,
    probabilities,
    run,
    sample,
    tvd,
    unitary,
)
from .textio import emit, parse

__version__ = "0.1.0"

__all__ = [
    "Axis",
    "BlochVector",
    "Circuit",
    "ComparisonReport",
    "CORE_TAGS",
    "CostReport",
    "DecomposeMode",
    "EquivalenceReport",
    "Gate",
    "GroverSpec",
    "Instruction",
    "NATIVE_GATES",
    "PASSES",
    "PassLog",
    "RUN_QUBIT_CAP",
    "SINGLE_QUBIT_GATES",
    "Statevector",
    "Tag",
    "UNITARY_QUBIT_CAP",
    "bloch",
    "build_grover",
    "cancel",
    "canonical_angle",
    "compare",
    "cx",
    "decompose_h",
    "emit",
    "equiv_global_phase",
    "expand_x",
    "gate_matrix",
    "h",
    "ident",
    "mcx",
    "mcz",
    "optimal_iterations",
    "parse",
    "pipeline",
    "probabilities",
    "realize_mcz",
    "reference_distribution",
    "report",
    "run",
    "rz",
    "sample",
    "structurally_equal",
    "substitute_axis",
    "sx",
    "sxdg",
    "tvd",
    "unitary",
    "x",
    "z",
]
