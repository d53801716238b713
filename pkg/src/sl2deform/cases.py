"""The three solvable three-dimensional ladder cases and their constants.

On a three-dimensional module (J = 1) a one-step ladder structure leaves
exactly three label choices: raise by q = 1 from M1 = -1 or M1 = 0, or raise
by q = 2 from M1 = -1.  Each case carries closed-form solutions for the
diagonal label c and the structure constant delta, an "intrinsic" locus of
the cubic coefficient gamma on which the differential realization closes
identically (not merely on the module), and the explicit operator term
tables on the module spanned by {1, x, x^3}.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .scalars import Scalar

Fr = Fraction


@dataclass(frozen=True)
class CaseData:
    q: int
    two_m1: int
    p: Fraction                  # slope denominator of the diagonal operator
    a: Fraction                  # quadratic coefficient of the diagonal label
    # alpha = 0 solution: c = c_const - gamma/(2 beta), delta = gamma^2/(4 beta) - k0 * beta
    alpha0_delta_coeff: Fraction
    # alpha != 0 radicand  ra*alpha^2 + rb*beta^2 + rc*alpha*gamma
    radicand: tuple[Fraction, Fraction, Fraction]
    radicand_premul: int         # radicand is scaled by this before sqrt (folds a sqrt(3))
    c_const: Fraction            # c = c_const - beta/(3 alpha) +- S / (c_sqrt_den * alpha)
    c_sqrt_den: int
    # delta = da*alpha - (2/27) beta^3/alpha^2 + beta*gamma/(3 alpha)
    #         +- (db2*beta^2/alpha^2 + dg*gamma/alpha + dc) * S / d_sqrt_den
    delta_alpha: Fraction
    delta_b2: Fraction
    delta_g: Fraction
    delta_const: Fraction
    d_sqrt_den: int
    fg_shift: Fraction           # ladder product fg = cubic(c + fg_shift)
    # intrinsic locus: gamma = ig_alpha * alpha + beta^2/(3 alpha)
    ig_alpha: Fraction
    intrinsic_fg: Fraction       # fg = intrinsic_fg * alpha on the locus
    upper_needs_negative_alpha: bool
    intrinsic_c_const: Fraction  # c = intrinsic_c_const - beta/(3 alpha) on the locus
    raise_terms: tuple[tuple[tuple[int, int], Fraction], ...]
    lower_terms: tuple[tuple[tuple[int, int], Fraction], ...]
    separated_index: int         # module basis index split off by the ladders
    # whole-module diagonal label constant as published; case 3 disagrees with
    # the solved c and verify-case flags the discrepancy
    printed_label_const: Fraction


class CaseId(Enum):
    """The three admissible (q, M1) ladder labels on a three-dimensional module."""

    CASE1 = 1
    CASE2 = 2
    CASE3 = 3

    @property
    def data(self) -> CaseData:
        return _CASE_TABLE[self]

    @classmethod
    def from_int(cls, value: int) -> "CaseId":
        return cls(value)

    # -- intrinsic locus helpers ---------------------------------------------
    def intrinsic_gamma(self, alpha: Scalar, beta: Scalar) -> Scalar:
        d = self.data
        return d.ig_alpha * alpha + beta * beta / (3 * alpha)

    def intrinsic_product(self, alpha: Scalar) -> Scalar:
        return self.data.intrinsic_fg * alpha

    def intrinsic_c(self, alpha: Scalar, beta: Scalar) -> Scalar:
        return self.data.intrinsic_c_const - beta / (3 * alpha)

    def valid_branch(self, alpha) -> str:
        """Which sign of the solved c realizes the intrinsic closure for this alpha."""
        if alpha == 0:
            raise ValueError("branch selection needs alpha != 0")
        negative = alpha < 0
        if self.data.upper_needs_negative_alpha:
            return "upper" if negative else "lower"
        return "lower" if negative else "upper"


_CASE_TABLE = {
    CaseId.CASE1: CaseData(
        q=1, two_m1=-2, p=Fr(1), a=Fr(1, 2),
        alpha0_delta_coeff=Fr(169, 100),
        radicand=(Fr(-579), Fr(100), Fr(-300)), radicand_premul=1,
        c_const=Fr(-7, 10), c_sqrt_den=30,
        delta_alpha=Fr(39, 125), delta_b2=Fr(1, 135), delta_g=Fr(-1, 45),
        delta_const=Fr(-166, 1125), d_sqrt_den=1,
        fg_shift=Fr(0),
        ig_alpha=Fr(-31, 16), intrinsic_fg=Fr(3, 2),
        upper_needs_negative_alpha=True,
        intrinsic_c_const=Fr(-3, 4),
        raise_terms=(((3, 2), Fr(1, 3)), ((2, 1), Fr(-1)), ((1, 0), Fr(1))),
        lower_terms=(((1, 2), Fr(-1, 2)), ((0, 1), Fr(1))),
        separated_index=2,
        printed_label_const=Fr(-3, 4),
    ),
    CaseId.CASE2: CaseData(
        q=1, two_m1=0, p=Fr(2), a=Fr(1, 4),
        alpha0_delta_coeff=Fr(25, 64),
        radicand=(Fr(-111), Fr(64), Fr(-192)), radicand_premul=1,
        c_const=Fr(-1, 8), c_sqrt_den=24,
        delta_alpha=Fr(-15, 128), delta_b2=Fr(1, 108), delta_g=Fr(-1, 36),
        delta_const=Fr(-47, 1152), d_sqrt_den=1,
        fg_shift=Fr(1),
        ig_alpha=Fr(-5, 8), intrinsic_fg=Fr(3, 16),
        upper_needs_negative_alpha=False,
        intrinsic_c_const=Fr(0),
        raise_terms=(((4, 2), Fr(-1, 2)), ((3, 1), Fr(1))),
        lower_terms=(((0, 2), Fr(1, 6)),),
        separated_index=0,
        printed_label_const=Fr(0),
    ),
    CaseId.CASE3: CaseData(
        q=2, two_m1=-2, p=Fr(3), a=Fr(1, 6),
        alpha0_delta_coeff=Fr(25, 36),
        # printed form carries a sqrt(3) prefactor; folding it in scales the
        # radicand by 3 and the delta coefficient by 1/3
        radicand=(Fr(47), Fr(12), Fr(-36)), radicand_premul=3,
        c_const=Fr(-5, 6), c_sqrt_den=18,
        delta_alpha=Fr(5, 3), delta_b2=Fr(1, 27), delta_g=Fr(-1, 9),
        delta_const=Fr(-34, 81), d_sqrt_den=3,
        fg_shift=Fr(2, 3),
        ig_alpha=Fr(-55, 144), intrinsic_fg=Fr(-1, 18),
        upper_needs_negative_alpha=False,
        intrinsic_c_const=Fr(-1, 12),
        raise_terms=(((5, 2), Fr(1, 3)), ((4, 1), Fr(-1)), ((3, 0), Fr(1))),
        lower_terms=(((-1, 2), Fr(1, 6)),),
        separated_index=1,
        printed_label_const=Fr(-1, 6),  # disagrees with the solved c; flagged in reports
    ),
}
