"""Witt vectors over the min-plus rig and the spaces enriched in them."""

from .errors import (
    ConstantTermError,
    DegreeOverflowError,
    FormatError,
    NotSymmetricError,
    TropwittError,
)
from .partitions import EMPTY, Partition, covers, hook_dimension, partitions_of, partitions_up_to
from .quantale import INF, ZERO, LValue, leq, monus, tropical_add, tropical_mul
from .symfunc import (
    SymFunc,
    TensorSymFunc,
    complete,
    coproduct_add,
    coproduct_mult,
    counit_add,
    counit_mult,
    elementary,
    expand_in_vars,
    from_polynomial,
    monomial,
    multiply,
    plethysm,
    poly_mul,
)
from .witt import (
    WittElem,
    additive_unit,
    coaction,
    from_points,
    multiplicative_unit,
    tau,
    theta,
)
from .enriched import (
    MetricSpace,
    WittSpace,
    argmin_partition,
    eval_slice,
    lambda_action,
    slice_complete,
    slice_table,
    table_space,
    tau_space,
    theta_space,
)
from .plancherel import (
    GrowthPath,
    ObservedStep,
    growth_step,
    observe,
    plancherel_measure,
    sample_path,
)
from .report import Report, Violation

__version__ = "0.1.0"

__all__ = [
    "ConstantTermError",
    "DegreeOverflowError",
    "FormatError",
    "NotSymmetricError",
    "TropwittError",
    "EMPTY",
    "Partition",
    "covers",
    "hook_dimension",
    "partitions_of",
    "partitions_up_to",
    "INF",
    "ZERO",
    "LValue",
    "leq",
    "monus",
    "tropical_add",
    "tropical_mul",
    "SymFunc",
    "TensorSymFunc",
    "complete",
    "coproduct_add",
    "coproduct_mult",
    "counit_add",
    "counit_mult",
    "elementary",
    "expand_in_vars",
    "from_polynomial",
    "monomial",
    "multiply",
    "plethysm",
    "poly_mul",
    "WittElem",
    "additive_unit",
    "coaction",
    "from_points",
    "multiplicative_unit",
    "tau",
    "theta",
    "MetricSpace",
    "WittSpace",
    "argmin_partition",
    "eval_slice",
    "lambda_action",
    "slice_complete",
    "slice_table",
    "table_space",
    "tau_space",
    "theta_space",
    "GrowthPath",
    "ObservedStep",
    "growth_step",
    "observe",
    "plancherel_measure",
    "sample_path",
    "Report",
    "Violation",
]
