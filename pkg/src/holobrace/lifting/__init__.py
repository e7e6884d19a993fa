"""층별 들어올림 엔진."""

from holobrace.lifting.complements import complements
from holobrace.lifting.context import ClassRep, LiftingContext, build_context
from holobrace.lifting.kernel import kernel_subgroup_classes, prune
from holobrace.lifting.lift import LiftingRun, lift_layer, lift_parent, run_layers

__all__ = [
    "ClassRep",
    "LiftingContext",
    "LiftingRun",
    "build_context",
    "complements",
    "kernel_subgroup_classes",
    "lift_layer",
    "lift_parent",
    "prune",
    "run_layers",
]
