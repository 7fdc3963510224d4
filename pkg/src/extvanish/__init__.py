"""Ext-vanishing facts for unipotent GL_n(q)-modules in cross characteristic.

The oracle subpackage (``extvanish.oracle``) cross-checks James's two-part
irreducibility criterion against Hecke-algebra Specht modules over F_r.
"""

from .james import INF, hook_graph, james_array, james_irreducible
from .labels import ModuleLabel, centralizer_types, dd_to_cps
from .modular import ModularParams, make_params, multiplicative_order
from .partitions import (
    Multipartition,
    Partition,
    conjugate,
    dominated_set,
    dominates,
    enumerate_partitions,
    is_l_regular,
    is_l_restricted,
    parse_partition,
    standard_tableau_count,
)
from .report import ExtFact, FactKind, Report, classify_s1, generate_report

__version__ = "0.1.0"

__all__ = [
    "INF",
    "hook_graph",
    "james_array",
    "james_irreducible",
    "ModuleLabel",
    "centralizer_types",
    "dd_to_cps",
    "ModularParams",
    "make_params",
    "multiplicative_order",
    "Multipartition",
    "Partition",
    "conjugate",
    "dominated_set",
    "dominates",
    "enumerate_partitions",
    "is_l_regular",
    "is_l_restricted",
    "parse_partition",
    "standard_tableau_count",
    "ExtFact",
    "FactKind",
    "Report",
    "classify_s1",
    "generate_report",
]
