"""Braid satellites and maximal-rank augmentation certificates.

Library layout:

- :mod:`augrank.braids` - braid words, permutations, cables, satellites
- :mod:`augrank.freealg` - exact arithmetic in the free generator algebra
- :mod:`augrank.action` - the braid action and its left/right matrices
- :mod:`augrank.splitting` - the cable-to-tensor splitting homomorphism
- :mod:`augrank.augment` - residuals, rank, the certificate search, and the
  deterministic satellite construction
- :mod:`augrank.cli` - command-line front end
"""

from .braids import (
    BraidWord,
    Perm,
    cable,
    component_count,
    full_twist,
    include_bar,
    iterated_torus_braid,
    kappa_word,
    pattern_braid,
    perm,
    satellite_braid,
    tau_word,
    torus_braid,
    writhe,
)
from .freealg import Assignment, NCPoly, TermBudgetError, parse_poly, set_term_budget
from .action import (
    PhiMatrix,
    cabled_generator_closed_form,
    chain_compose,
    kappa_closed_form,
    phi,
    phi_left,
    phi_left_direct,
    phi_letter,
    phi_matrix,
    phi_right,
    phi_right_direct,
    phi_star,
    tau_closed_form,
)
from .splitting import (
    TensorPoly,
    psi,
    psi_gen,
    psi_star,
    split_index,
    verify_cable_matrix_split,
    verify_commutes,
    verify_sum_collapse,
)
from .augment import (
    ACCEPT_TOL,
    Certificate,
    ConstructionError,
    EvidenceReport,
    MuOneError,
    NotFound,
    SolveOptions,
    aug_rank,
    check_block_structure,
    construct_satellite_aug,
    eval_phi_matrices,
    full_rank_residual,
    ideal_residual,
    matrix_a,
    matrix_delta,
    matrix_lambda,
    nonexistence_search,
    numerical_rank,
    sign_vector,
    solve_full_rank,
)

__version__ = "0.1.0"
