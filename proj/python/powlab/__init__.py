"""Exact experiments on powered numbers in short intervals.

The heavy lifting lives in the C++ extension ``powlab._core``; this package
re-exports its operations.
"""

from ._core import (  # noqa: F401
    CapacityError,
    ParameterError,
    __version__,
    abc_quality,
    bound_eval,
    build_abc_triple,
    count_powered,
    count_rough,
    count_rough_report,
    count_smooth_divisor,
    count_smooth_powerful,
    count_t1,
    count_t2,
    count_verysmooth,
    decompose_case,
    default_z,
    enumerate_k_powered,
    enumerate_powerful,
    factor,
    factor_interval,
    find_ap_powered,
    identity_check,
    is_k_full,
    is_k_powered,
    is_powerful,
    is_prime,
    is_squarefree,
    is_w_smooth,
    kernel,
    largest_prime_factor,
    powered_exponent,
    powerful_part,
    primes_up_to,
    rk_exact,
    rk_greedy,
    scan_d_structure,
    smallest_prime_factor,
    smooth_part,
    squarefree_part,
    threshold_y,
    verify_b2_claim,
)
