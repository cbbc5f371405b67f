"""Filled-diagram combinatorics for graded classical Lie algebras.

Enumerates nilpotent orbit labels per grading family, evaluates the counting
generating functions against brute-force enumeration, catalogs sheaf labels
and verifies the orbit-to-label bijections, and cross-checks the
distinguishedness predicate against an exact linear-algebra oracle.
"""

__version__ = "0.1.0"

from .diagrams import (
    FilledDiagram,
    FilledRow,
    MINUS,
    PLUS,
    canonicalize,
    dimension_vector,
    empty_diagram,
    enumerate_by_size,
    enumerate_diagrams,
    multipartitions,
    partitions,
)
from .orbits import (
    GradingSpec,
    StratumAI,
    StratumII,
    admissible,
    admissible_for_case,
    braid_rank_ai,
    component_group_order,
    d_check_dual,
    d_check_stratum,
    duality,
    enumerate_strata_ai,
    enumerate_strata_ii,
    full_support_stratum_ii,
    is_distinguished_ai,
    is_distinguished_ii,
    peel_ai,
    peel_ii,
)
from .series import (
    TruncSeries,
    gf_distinguished_ai,
    gf_distinguished_ii,
    gf_orbit_count,
    series_geom_pow,
    series_mul,
    weight_count,
)
from .oracle import (
    GradedMatrix,
    build_representative,
    centralizer_dim_gl,
    centralizer_dim_k,
    centralizer_g1,
    is_distinguished_oracle,
    orbit_dim,
    stratum_dim_ai,
)
from .sheaves import (
    CentralCharacter,
    SheafLabel,
    catalog_ai,
    catalog_ii,
    cuspidal_ai,
    divisors,
    exact_order_characters,
    map_sheaf_ai,
    map_sheaf_ii,
    orbital_complexes,
    verify_bijection,
)
