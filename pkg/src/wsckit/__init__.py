"""Weighted simplicial complexes, mixed wreath products and weighted monomial ideals."""

from .checkers import (
    implication_chain_violations,
    is_cohen_macaulay_reisner,
    is_constructible_bounded,
    is_shellable,
    is_vertex_decomposable,
    property_transport_report,
    shelling_order,
    vertex_decomposition,
)
from .complex import (
    SimplicialComplex,
    boundary_simplex,
    cone,
    from_facets,
    from_minimal_nonfaces,
    full_simplex,
    irrelevant_complex,
    join,
    void_complex,
)
from .decomposition import (
    Decomposition,
    NTFVerdict,
    PrimaryComponent,
    PrimeIdeal,
    associated_primes,
    height,
    irreducible_decomposition,
    is_bipartite,
    minimal_and_embedded,
    minimal_primes,
    normally_torsion_free_upto,
    primary_decomposition,
    symbolic_power,
    weighted_decomposition_check,
)
from .errors import (
    ArityMismatch,
    DegenerateIdeal,
    InvalidDimension,
    InvalidExponent,
    InvalidVertex,
    InvalidWeight,
    NotAVertex,
    NotSquarefree,
    ParseError,
    ResourceLimit,
    VoidComplex,
    WscError,
)
from .homology import (
    BettiTable,
    HilbertSeries,
    depth,
    graded_betti,
    hilbert_series,
    krull_dimension,
    multigraded_betti,
    projective_dimension,
    reduced_homology_dims,
    regularity,
    upper_koszul,
)
from .io import Parsed, dumps, parse_input, parse_text
from .monomial import (
    Graph,
    MonomialIdeal,
    colon,
    cycle_graph,
    edge_ideal,
    intersect,
    polarize_ideal,
    power,
    saturate,
    weight_ideal,
)
from .verify import verify
from .weighted import WeightedComplex, complex_from_squarefree, polarize, sr_ideal, sr_ideal_weighted
from .wreath import WreathVertexMap, mixed_wreath, one_point_suspension, reduced_join, wreath_f_formula

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
