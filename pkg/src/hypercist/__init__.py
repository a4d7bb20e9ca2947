"""Completely independent spanning trees (CISTs) in hypercubes.

Build, lift, verify and analyze CIST families of ``Q_n``, evaluate the
necessary conditions for ``floor(k/2)`` CISTs in regular graphs, and
classify even dimensions against Hasunuma's conjecture.
"""

from .cist import (
    CistFamily,
    Status,
    TreeStats,
    Violation,
    ViolationKind,
    checked,
    family_stats,
    recheck,
    verify_criterion,
    verify_definition,
)
from .condition import (
    ConditionReport,
    ConjectureVerdict,
    Verdict,
    condition_bipartite,
    condition_regular,
    conjecture_verdict,
    divides_exception,
    lemma_strict,
    search_exceptions,
)
from .errors import (
    CistError,
    CostGuardError,
    DomainError,
    FormatError,
    InapplicableError,
    TranscriptionError,
    TreeValidationError,
    UnverifiedFamilyError,
)
from .hypercube import MAX_DIM, Hypercube, partition_side
from .lift import LiftPlan, diameter_bounds, lift_once, lift_to
from .q7data import Q7Archive, load_q7, q7_family
from .routing import RouteResult, disjoint_routes, fault_route
from .tree import SpanningTree, TreeProblem, from_edges

__version__ = "0.1.0"
