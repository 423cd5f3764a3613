"""Exact linear codes over GF(p^s), combinatorial t-designs, and the
codes spanned by their incidence matrices, with grid verification of the
parameter formulas for the evaluation-code families."""

from .cache import min_distance, set_cache_dir, weight_distribution
from .code import LinearCode, WeightDistribution, macwilliams_transform
from .constructions import (ag_design, cyclic_code_with_zeros, dmt_example_code,
                            grm, grm_punctured, mt_code, pg_design, prm,
                            prm_star, simplex)
from .design_code import (check_all_one_criterion, classify_relation,
                          code_of_design, dual_min_weight_bound)
from .designs import (Design, complement_design, design_from_text,
                      design_params, design_to_text, incidence_matrix,
                      is_t_design, support_design)
from .errors import (BadParams, BudgetExceeded, DesignCodesError, Infeasible,
                     NotATDesign)
from .gf import Field, field_of_order, gaussian_binomial, q_weight
from .verifier import (assmus_mattson, check_conjecture, reproduce_table,
                       sweep, verify_suite, verify_theorem)

__version__ = "0.1.0"

__all__ = [
    "LinearCode", "WeightDistribution", "macwilliams_transform",
    "Design", "support_design", "is_t_design", "design_params",
    "complement_design", "incidence_matrix", "design_to_text",
    "design_from_text", "code_of_design", "classify_relation",
    "check_all_one_criterion", "dual_min_weight_bound",
    "Field", "field_of_order", "q_weight", "gaussian_binomial",
    "simplex", "prm", "prm_star", "grm", "grm_punctured", "mt_code",
    "cyclic_code_with_zeros", "ag_design", "pg_design", "dmt_example_code",
    "weight_distribution", "min_distance", "set_cache_dir",
    "assmus_mattson", "verify_theorem", "verify_suite", "check_conjecture",
    "reproduce_table", "sweep",
    "DesignCodesError", "BadParams", "BudgetExceeded", "Infeasible",
    "NotATDesign",
    "__version__",
]
