"""Exact homothety coefficients of simplices inside the unit cube."""

from .constructions import (
    FamilyParam,
    HadamardMatrix,
    builtin,
    closed_form,
    family_simplex,
    hadamard,
    named,
    normalize_hadamard,
    regular_simplex,
    s_star,
)
from .cube import Certificate, ExtremalReport, certify, check_centroid_theorem, classify_vertices, facet_maxima, incidence_count
from .linalg import Matrix, det, format_rational, invert, parse_rational, rat_parse
from .search import SearchConfig, SearchResult, confirm, local_search, random_simplex
from .simplex import (
    LagrangeBasis,
    Simplex,
    alpha_cube,
    axial_diameters,
    centroid,
    eval_lambda,
    lagrange_basis,
    node_matrix,
    volume,
    xi_cube,
    xi_polytope,
)

__version__ = "0.1.0"
