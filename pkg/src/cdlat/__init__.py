"""Chermak-Delgado lattices of small finite groups."""

from .cd import (
    CDReport,
    ConditionsReport,
    cd_lattice,
    cd_measure,
    cd_report,
    check_interval_lemma,
    condition1,
    condition2,
    condition3,
    delta_cd,
    interval,
    max_cd_measure,
    run_conditions,
)
from .families import FamilySpec, build_family, parse_family
from .group import Group, build_from_generators, direct_product, element_order
from .iso import is_isomorphic
from .subgroups import (
    Subgroup,
    SubgroupLattice,
    center,
    centralizer,
    closure,
    conjugacy_classes_of_subgroups,
    enumerate_subgroups,
    is_nilpotent,
    is_subnormal,
    normalizer,
    subgroups_of_order,
    sylow_data,
)

__version__ = "0.1.0"

__all__ = [
    "CDReport", "ConditionsReport", "cd_lattice", "cd_measure", "cd_report",
    "check_interval_lemma", "condition1", "condition2", "condition3", "delta_cd", "interval",
    "max_cd_measure", "run_conditions", "FamilySpec", "build_family", "parse_family", "Group",
    "build_from_generators", "direct_product", "element_order", "is_isomorphic", "Subgroup",
    "SubgroupLattice", "center", "centralizer", "closure", "conjugacy_classes_of_subgroups",
    "enumerate_subgroups", "is_nilpotent", "is_subnormal", "normalizer", "subgroups_of_order",
    "sylow_data",
]
