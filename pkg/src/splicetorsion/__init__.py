"""Exact character-variety data and Reidemeister torsion of spliced
twist-knot exteriors J(2,2q).

The pipeline: exact Laurent polynomial arithmetic (`polyring`), free-group
words and Fox calculus (`words`), Riley/longitude data of the twist knots
(`twistknot`), A-polynomials and the Newton-polygon finiteness criterion
(`apoly`), certified root solving (`rootfind`), and the splice gluing with
its finite torsion value sets (`splice`).
"""

from .polyring import (
    MultiPoly, PolyError, AlignmentError, SubstitutionError, SymmetryError,
    EliminationError, DegenerateInputError, SizeError,
    chebyshev, divide_exact, gcd, reduce_mod, resultant, squarefree_part,
    squarefree_decomposition, to_trace_coordinate,
)
from .words import (
    GroupWord, GroupRingElem, Mat2, WordError, BindingError,
    commutator, evaluate_group_ring, evaluate_word, fox_derivative,
)
from .twistknot import (
    TwistKnotModel, UnknotError, build_model, character_data,
    longitude_matrix, riley_polynomial, riley_t_roots, xi_relation,
)
from .apoly import (
    INFINITY, CoprimalityResult, NewtonPolygon,
    a_polynomial, convex_hull, coprimality_criterion, criterion_report,
    invert_slopes, minkowski_sum, newton_polygon, slope_set, transpose,
)
from .rootfind import ComplexRoot, SolverError, solve_roots
from .splice import (
    BendingResult, RTReport, SpliceCharacter, SpliceSystem, Tolerances,
    bending_family, bending_matrix, bending_trace_identity, rt_set,
    solve_characters, splice_equation, torsion_exterior,
    torsion_exterior_oracle, torus_acyclicity,
)

__version__ = "1.0.0"
