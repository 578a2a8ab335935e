"""Density and coloring results for x + y, xy, x in Z_p, checked by exact counting."""

__version__ = "0.1.0"

from .field import (  # noqa: E402
    CapacityError,
    ConsistencyError,
    NotPrimeError,
    PrimeContext,
    ZpSubset,
    char_value,
    is_subgroup,
    make_context,
    next_prime,
    special_set,
    subgroup,
)
from .transform import Spectrum, fast_forward, fast_inverse, forward, inner_product, inverse  # noqa: E402
from .counting import (  # noqa: E402
    circ_set,
    count_equation_triples,
    f_values,
    phi_matrix,
    quadruple_count,
    second_moment,
    sigma,
    sigma_tilde,
    star_set,
)
from .report import VerificationReport  # noqa: E402
