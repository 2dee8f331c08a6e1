"""Exact computations on monomial ideals and small polynomial ideals.

The library computes and cross-checks uniform containment phenomena:
symbolic versus ordinary powers, integral closures via Newton polyhedra,
Artin-Rees numbers, radical-power (Nullstellensatz) indices, and
Hilbert/Betti invariants.  All arithmetic is exact, over Q or GF(p).
"""

from .artinrees import ArReport, ar_counterexample_search, artin_rees_number
from .closure import (
    BsCheck,
    NewtonPolyhedron,
    briancon_skoda_check,
    integral_closure,
    is_integral,
    newton_polyhedron,
    uniform_bs_number,
)
from .corpus import (
    connected_graph_reps,
    random_homogeneous,
    random_ideal,
    random_monomial,
    random_squarefree_ideal,
    random_weighted_homogeneous,
    rng_from_seed,
)
from .errors import ParseError, ResourceCapError, RingMismatchError
from .fields import QQ, PrimeField, RationalField, parse_field
from .groebner import (
    FrobeniusCheck,
    GroebnerBasis,
    KollarBound,
    KollarSharpness,
    MatherIndex,
    MonomialOrder,
    Polynomial,
    buchberger,
    frobenius_containment_check,
    frobenius_power,
    ideal_member,
    jacobian_ideal,
    kollar_bound,
    kollar_family,
    kollar_sharpness,
    mather_index,
    normal_form,
    parse_polynomial,
    local_ideal_member,
    power_membership_index,
    radical_member,
)
from .invariants import (
    BettiTable,
    HilbertPolynomial,
    HilbertSeries,
    dimension_multiplicity,
    graded_betti,
    hilbert_function,
    hilbert_polynomial,
    hilbert_series,
    is_cohen_macaulay,
    pure_resolution_multiplicity,
    stillman_monomial_check,
    verify_betti_hilbert_identity,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    Ring,
    parse_ideal,
    parse_monomial,
    parse_ring,
)
from .symbolic import (
    EdgeTheoremReport,
    Graph,
    MinorFailure,
    PrimeComponent,
    codim,
    dim_quotient,
    edge_ideal,
    is_bipartite,
    is_packed,
    max_disjoint_monomials,
    minimal_primes,
    parse_graph,
    symbolic_equals_ordinary,
    symbolic_power,
    verify_edge_theorem,
)

__version__ = "0.1.0"
