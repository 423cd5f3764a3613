"""The code of a design — the row span of its incidence matrix — and the
structural relations between a design's code and its complement's."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import matrix
from .code import LinearCode
from .designs import Design, complement_design, design_params, incidence_matrix
from .errors import BadParams, FullSpace
from .gf import Field


def code_of_design(design: Design, field: Field) -> LinearCode:
    """RREF span of the design's b x v incidence matrix over the field."""
    return LinearCode(field, incidence_matrix(design), labels=design.labels)


class RelationVerdict:
    """Observed relation between the codes of a design and its complement."""

    __slots__ = ("case_id", "dim_D", "dim_Dc", "inclusion", "consistent")

    def __init__(self, case_id, dim_D, dim_Dc, inclusion, consistent):
        self.case_id = case_id
        self.dim_D = dim_D
        self.dim_Dc = dim_Dc
        self.inclusion = inclusion
        self.consistent = consistent

    def __repr__(self) -> str:
        return (f"RelationVerdict({self.case_id}, dim_D={self.dim_D}, "
                f"dim_Dc={self.dim_Dc}, {self.inclusion}, "
                f"consistent={self.consistent})")


def classify_relation(design: Design, field: Field) -> RelationVerdict:
    """Which of the four all-one-membership cases holds, and whether the
    observed containments/dimensions match what that case dictates:

    - only the design's code has the all-one word: it strictly contains the
      complement's code, with dimension exactly one higher;
    - only the complement's code has it: the mirror image;
    - both: the codes are equal;
    - neither: mutually incomparable, and their intersection is the span of
      the pairwise differences of the incidence rows.
    """
    C = code_of_design(design, field)
    Cc = code_of_design(complement_design(design), field)
    one_C, one_Cc = C.all_one_in(), Cc.all_one_in()
    cc_in_c, c_in_cc = Cc.is_subcode(C), C.is_subcode(Cc)
    if cc_in_c and c_in_cc:
        inclusion = "equal"
    elif cc_in_c:
        inclusion = "D_contains_Dc"
    elif c_in_cc:
        inclusion = "Dc_contains_D"
    else:
        inclusion = "incomparable"

    if one_C and not one_Cc:
        case = "D_has_1_only"
        ok = inclusion == "D_contains_Dc" and C.k == Cc.k + 1
    elif one_Cc and not one_C:
        case = "Dc_has_1_only"
        ok = inclusion == "Dc_contains_D" and Cc.k == C.k + 1
    elif one_C and one_Cc:
        case = "both_have_1"
        ok = inclusion == "equal" and C == Cc
    else:
        case = "neither_has_1"
        ok = inclusion == "incomparable"
        if ok:
            # intersection = { sum b_i (1-g_i) : sum b_i = 0 }
            #              = span of (1-g_1) - (1-g_i) = g_i - g_1, i >= 2
            inter = matrix.intersect_row_spaces(field, C.gen, Cc.gen)
            M = incidence_matrix(design)
            if M.shape[0] == 1:
                ok = inter.shape[0] == 0
            else:
                diffs = field.vsub(M[1:], M[0][None, :])
                R, piv = matrix.rref(field, diffs)
                span = R[: len(piv)]
                ok = span.shape == inter.shape and (span == inter).all()
    return RelationVerdict(case, C.k, Cc.k, inclusion, bool(ok))


def check_all_one_criterion(design: Design, t: int, field: Field) -> bool:
    """Whether lambda_1 is nonzero mod the characteristic.  When it is, the
    all-one word must lie in the design's code (asserted); when it is not,
    nothing follows."""
    if t < 2:
        raise BadParams("need t >= 2")
    params = design_params(design, t)  # NotATDesign if the oracle says no
    crit = params.lam1 % field.p != 0
    if crit:
        assert code_of_design(design, field).all_one_in(), \
            "lambda_1 criterion met but the all-one word is missing"
    return crit


def dual_min_weight_bound(design: Design, field: Field | None = None) -> Fraction:
    """(v-1)/(k-1) + 1, the floor under the dual code's minimum weight for a
    2-design whose code is proper.  Pass the field to have properness
    checked; the full space has no dual distance to bound."""
    if field is not None:
        if code_of_design(design, field).k == design.v:
            raise FullSpace("the design's code is the whole space")
    return Fraction(design.v - 1, design.k - 1) + 1
