"""Deterministic truncation of linear matroids and representative families.

Exact arithmetic over prime fields, their extensions and the rationals;
k-truncations through classical and alpha-folded Wronskians; q-representative
subfamilies of p-families of independent sets.
"""

from .errors import TruncationError
from .field import (
    GF,
    Q,
    Element,
    Embedding,
    ExtensionField,
    Field,
    PrimeField,
    RationalField,
    element_of_order,
    extend_field,
    find_irreducible,
    order_of,
    parse_field,
    primitive_element,
)
from .fxmatrix import (
    FMatrix,
    PolyMatrix,
    column_basis_min_weight,
    det_poly,
    independent_columns_fx,
    independent_f,
    nice_spanning_set,
    rank_f,
    rank_fx,
)
from .matroid import LinearMatroid, graphic_matroid, random_matroid, uniform_matroid
from .poly import (
    Poly,
    evaluate,
    formal_derivative,
    hasse_derivative,
    poly_to_vec,
    scale_substitute,
    vec_to_poly,
)
from .repset import SetFamily, build_minor_matrix, repset_basis, repset_spanning, verify_repset
from .truncation import (
    TruncationResult,
    embed_finite,
    preprocess_field,
    randomized_truncation,
    truncate,
    truncate_classical,
    truncate_folded,
)
from .wronskian import (
    classical_wronskian,
    folded_wronskian,
    independent_classical,
    independent_folded,
)

__version__ = "0.1.0"
