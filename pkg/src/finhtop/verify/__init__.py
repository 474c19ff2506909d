"""Theorem checkers, random instance generators and the suite runner."""

from .checks import (
    check_barycentric,
    check_cofinality,
    check_dbp,
    check_dbpgen,
    check_gamma_index,
    check_homotopy_lemma,
    check_index_contractible,
    check_maximum,
    check_thomason_roundtrip,
    check_ubp,
    check_up_wp,
)
from .randgen import (
    random_complex,
    random_complex_diagram,
    random_diagram,
    random_dismantlable_poset,
    random_monotone_map,
    random_poset,
    random_poset_map,
    random_simplicial_map,
)
from .report import CheckReport
from .suite import (
    DEFAULT_COUNTS,
    THEOREMS,
    circle_complex,
    circle_poset,
    edge_complex,
    point_poset,
    run_all,
    run_family,
    suspension_diagram,
    w_poset,
)

__all__ = [
    "CheckReport",
    "DEFAULT_COUNTS",
    "THEOREMS",
    "check_barycentric",
    "check_cofinality",
    "check_dbp",
    "check_dbpgen",
    "check_gamma_index",
    "check_homotopy_lemma",
    "check_index_contractible",
    "check_maximum",
    "check_thomason_roundtrip",
    "check_ubp",
    "check_up_wp",
    "circle_complex",
    "circle_poset",
    "edge_complex",
    "point_poset",
    "random_complex",
    "random_complex_diagram",
    "random_diagram",
    "random_dismantlable_poset",
    "random_monotone_map",
    "random_poset",
    "random_poset_map",
    "random_simplicial_map",
    "run_all",
    "run_family",
    "suspension_diagram",
    "w_poset",
]
