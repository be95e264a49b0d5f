"""mixedsing: Newton-boundary analysis and monodromy zeta functions of
mixed polynomial singularities, in exact arithmetic.

The library computes, for a 2-variable mixed polynomial g(z, zbar):

  * its Newton boundary, face data and canonical stratification,
  * degeneracy certificates (strong non-degeneracy, local tameness),
  * axis fiber-point counts with an independent numeric oracle,
  * and the monodromy zeta function of a composition g(f1, f2) from the
    graded monodromies of f1, f2 and the Alexander polynomial of the
    associated multilink.

All algebra is exact (Gaussian-rational coefficients); floating point is
confined to clearly marked numeric oracles and sampling paths.
"""

from .mixedpoly import (
    GaussianRational,
    MixedMonomial,
    MixedPolynomial,
    ParseError,
    format_poly,
    parse,
)
from .newton import (
    Face,
    NewtonPolygon,
    StratumDescriptor,
    WeightVector,
    canonical_strata,
    compact_faces,
    face_function,
    support,
    weight_data,
)
from .degeneracy import (
    Budget,
    Verdict,
    check_local_tameness,
    check_strong_nondegeneracy,
    criticality_residual,
    is_critical_exact,
)
from .zetalg import (
    GradedMonodromy,
    LaurentPoly,
    ZetaFunction,
    cyclic_block,
    det_poly,
    euler_from_zeta,
    graded_E,
    tensor,
    zeta_from_monodromy,
)
from .linkalex import (
    MultilinkData,
    builtin_alexander,
    check_axis_multiplicities,
    reverse_orientation,
    substitute_matrices,
)
from .foxcalc import (
    FreeWord,
    GroupRingElement,
    Representation,
    alexander_from_words,
    fox_derivative,
    h_der_matrix,
    zeta_gD_component,
)
from .joincore import (
    AxisMultiplicityError,
    CountResult,
    JoinInput,
    JoinReport,
    LowestFactorization,
    OracleBudgetError,
    chi_without_axes,
    count_fiber_points,
    count_univariate,
    cross_check,
    euler_join,
    join_zeta,
    lowest_part_factorization,
    numeric_count_oracle,
)

__version__ = "0.1.0"
