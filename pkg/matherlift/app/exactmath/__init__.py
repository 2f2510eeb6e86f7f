from .polynomial import (  # noqa: F401
    DEGREVLEX,
    LEX,
    Ideal,
    MonomialOrder,
    MultiPoly,
    block_order,
    format_rational,
    gradient,
    linear_combination,
    parse_rational,
    poly_add,
    poly_mul,
    poly_scale,
)
from .groebner import GroebnerBasis, groebner, reduce, spoly  # noqa: F401
from .ideals import (  # noqa: F401
    eliminate,
    ideal_contains,
    ideal_intersection,
    ideal_quotient,
    ideal_quotient_by,
    ideal_saturate,
    ideal_sum,
    ideals_equal,
    is_unit_ideal,
)
from .hilbert import HilbertData, hilbert_dim_degree, hilbert_numerator  # noqa: F401
from .series import PowerSeries1, series_order  # noqa: F401
from .linalg import RationalMatrix, matrix_rank, solve  # noqa: F401
