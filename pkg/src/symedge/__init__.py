"""Exact computation of symbolic powers of edge ideals of simple graphs,
their low-degree structure, and the associated asymptotic invariants
(Waldschmidt constant, resurgence bounds, symbolic defect), with closed
forms for clique-sums of two odd cycles and for complete graphs."""

from .graphs import (
    BoundExceededError,
    CliqueSumSpec,
    CoverSet,
    SimpleGraph,
    build_family,
    clique_sum,
    complete,
    cover_number,
    cycle,
    is_decomposable,
    make_graph,
    minimal_vertex_covers,
    parallelize,
    parse_family,
    read_edge_list,
    rees_generators_01,
)
from .invariants import (
    AlphaTable,
    ResurgenceReport,
    alpha_closed_form,
    alpha_table,
    artinian_check,
    rees_decomposition_check,
    resurgence_formula_sup,
    resurgence_search,
    sdefect_closed_form,
    sdefect_comparison,
    waldschmidt,
    waldschmidt_estimate,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    alpha,
    contains,
    graded_count,
    ideal_power,
    ideal_product,
    ideal_sum,
    intersect,
    intersect_many,
    member,
    minimalize,
    prime_power_gens,
    unit_ideal,
    zero_ideal,
)
from .symbolic import (
    EdgeIdealContext,
    LDSplit,
    OptimalFactorization,
    b_value,
    containment,
    dmin_clique_sum,
    ordinary_power,
    parse_monomial,
    power_member,
    sdefect,
    split_LD,
    symbolic_member,
    symbolic_power,
    vertex_weight,
)
from .verification import CheckResult, run_all_checks

__version__ = "0.1.0"
