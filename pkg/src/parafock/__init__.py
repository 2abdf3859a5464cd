"""Exact parastatistics Fock representations in the odd Gelfand-Tsetlin basis.

The package constructs the order-p Fock representations of the Lie
superalgebra osp(2n+1|2n) generated by n parafermion and n paraboson pairs,
evaluates the coupling coefficients of its gl(n|n) decomposition exactly,
applies ladder operators to states, extends the action to the infinite-rank
algebra through row-stable patterns, and verifies every identity it relies
on with exact arithmetic.
"""

from .errors import (
    DomainError,
    InternalConsistencyError,
    ShapeError,
    TableDepthError,
)
from .radicals import RadicalNumber, squarefree_decompose
from .patterns import (
    GZPattern,
    TopRow,
    ValidationReport,
    WeightVector,
    cartan_eigenvalue,
    dimension_covariant,
    enumerate_patterns,
    enumerate_top_rows,
    generator_pattern,
    indices,
    is_valid_pattern,
    partitions,
    rho,
    row_weight,
    vacuum,
    validate_pattern,
    weight_vector,
)
from .cgc import (
    candidate_targets,
    cgc,
    cgc_table,
    isoscalar_even,
    isoscalar_odd,
    sign_S,
)
from .engine import (
    ReducedMETable,
    StateVector,
    TableFamily,
    apply_annihilation,
    apply_creation,
    apply_word,
    basis_through_degree,
    derive_reduced_mes,
    gl_generator,
    inner_product,
    parse_word,
    triple_residual,
)
from .oracle import adjoint, creation_word, gram_matrix, vev
from .stability import (
    InfinitePattern,
    InfiniteState,
    apply_infinite,
    apply_infinite_word,
    extend,
    infinite_vacuum,
    inner_product_infinite,
    phi_up,
    stability_index,
    triple_residual_infinite,
    truncate,
)
from .matrices import (
    SparseSuperMatrix,
    build_B,
    build_generator,
    cartan_element,
    is_member,
    super_bracket,
    verify_relations,
)
from .verify import SUITES, SuiteReport, run_suite

__version__ = "0.1.0"
