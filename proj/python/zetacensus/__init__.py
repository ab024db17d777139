"""Zeta zero census: special functions, zero counting, verification suites."""

from ._zetacensus import (
    DomainError,
    Error,
    binet_g,
    census,
    count,
    density,
    digamma,
    dj_decomposition,
    gamma,
    loggamma,
    main_term,
    min_zero_gap,
    nabla,
    ratio_B,
    run_suite,
    set_thread_count,
    suite_names,
    xi,
    xi_logderiv,
    zeta,
    zeta_logderiv,
)

__all__ = [
    "DomainError",
    "Error",
    "binet_g",
    "census",
    "count",
    "density",
    "digamma",
    "dj_decomposition",
    "gamma",
    "loggamma",
    "main_term",
    "min_zero_gap",
    "nabla",
    "ratio_B",
    "run_suite",
    "set_thread_count",
    "suite_names",
    "xi",
    "xi_logderiv",
    "zeta",
    "zeta_logderiv",
]

__version__ = "0.1.0"
