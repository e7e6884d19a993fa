"""유한 아벨 군, 홀로모프, 순열군 엔진."""

from holobrace.groups.abelian import (
    AbelianGroup,
    Endomorphism,
    aut_elements,
    aut_order_formula,
    iter_automorphisms,
    make_group,
    parse_descriptor,
)
from holobrace.groups.holomorph import (
    HolElement,
    hol_generators,
    holomorph,
    translation_generators,
)
from holobrace.groups.permgroup import PermGroup, StabilizerChain, derived_series
from holobrace.groups.perms import Perm
from holobrace.groups.series import (
    NormalSeries,
    elementary_abelian_series,
    validate_series,
)

__all__ = [
    "AbelianGroup",
    "Endomorphism",
    "HolElement",
    "NormalSeries",
    "Perm",
    "PermGroup",
    "StabilizerChain",
    "aut_elements",
    "aut_order_formula",
    "derived_series",
    "elementary_abelian_series",
    "hol_generators",
    "holomorph",
    "iter_automorphisms",
    "make_group",
    "parse_descriptor",
    "translation_generators",
    "validate_series",
]
