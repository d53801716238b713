"""Single-step ladder representations and the solved three-dimensional cases.

The representation class handled here acts on basis states labeled
M = -J .. +J (stored doubled so half-integer spins stay in integers):
the diagonal generator has eigenvalues a*M^2 + (1/q - a*q - 2*a*M1)*M + c,
the raising operator moves only M1 -> M1 + q with coefficient f, and the
lowering operator moves only M1 + q -> M1 with coefficient g.  The linear
coefficient is pinned by the unit-shift relation [J0, J+] = J+, so the whole
relation system reduces to 2J + 1 diagonal constraints; only the product
f*g is ever constrained, never the split.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .algebra import AlgebraParams, MatrixTriple
from .cases import CaseId
from .matrices import Matrix, coordinate_block_split
from .scalars import Scalar, as_scalar, scalar_is_zero, sqrt_exact

Fr = Fraction


class TrivialAlgebraError(ValueError):
    """alpha = beta = 0 forces gamma = delta = 0; nothing to solve."""


@dataclass(frozen=True)
class RepSpec:
    """Labels and ladder coefficients of one single-step representation."""

    two_j: int
    q: int
    two_m1: int
    a: Scalar
    c: Scalar
    f: Scalar
    g: Scalar

    def __post_init__(self):
        for name in ("a", "c", "f", "g"):
            object.__setattr__(self, name, as_scalar(getattr(self, name)))
        if self.two_j < 0:
            raise ValueError("two_j must be nonnegative")
        if self.q < 1 or self.q > self.two_j:
            raise ValueError(f"q must lie in 1..{self.two_j}, got {self.q}")
        if (self.two_m1 - self.two_j) % 2 != 0:
            raise ValueError("two_m1 must have the parity of two_j")
        if self.two_m1 < -self.two_j or self.two_m1 + 2 * self.q > self.two_j:
            raise ValueError("both ladder endpoints must lie in -J..J")

    @property
    def m1(self) -> Fraction:
        return Fr(self.two_m1, 2)

    @property
    def linear_coeff(self) -> Scalar:
        """1/q - a*q - 2*a*M1, forced by the unit shift of the raising relation."""
        return Fr(1, self.q) - self.a * self.q - 2 * self.a * self.m1

    def diagonal_value(self, m: Union[Fraction, int]) -> Scalar:
        m = Fr(m)
        return self.a * m * m + self.linear_coeff * m + self.c


@dataclass(frozen=True)
class CaseSolution:
    """Solved labels for one case: the diagonal label c, delta, and f*g."""

    c: Scalar
    delta: Scalar
    fg: Scalar
    branch: str  # "upper" | "lower" | "alpha-zero"


@dataclass(frozen=True)
class IntrinsicData:
    """The locus on which a case's realization closes independently of the module."""

    gamma: Scalar
    fg: Scalar
    upper_branch_condition: str
    lower_branch_condition: str

    def branch_for(self, alpha) -> str:
        """The branch satisfying the sign condition for this concrete alpha."""
        if alpha == 0:
            raise ValueError("branch selection needs alpha != 0")
        negative = alpha < 0
        if self.upper_branch_condition == "alpha < 0":
            return "upper" if negative else "lower"
        return "lower" if negative else "upper"


def p_and_a(q: int, m1: Union[int, Fraction]) -> tuple[Fraction, Fraction]:
    """Slope denominator p = q^2/2 + q(M1 + 3/2) of the diagonal realization, a = 1/(2p)."""
    if q < 1:
        raise ValueError("q must be positive")
    m1 = Fr(m1)
    p = Fr(q * q, 2) + q * (m1 + Fr(3, 2))
    if p == 0:
        raise ValueError(f"degenerate diagonal realization: p = 0 at (q={q}, M1={m1})")
    return p, 1 / (2 * p)


def enumerate_case_labels(two_j: int) -> list[tuple[int, Fraction]]:
    """All (q, M1) with both ladder endpoints inside the basis, M1 as a fraction."""
    labels = []
    for q in range(1, two_j + 1):
        for two_m1 in range(-two_j, two_j - 2 * q + 1, 2):
            labels.append((q, Fr(two_m1, 2)))
    labels.sort(key=lambda t: (t[0], t[1]))
    return labels


def build_new_rep_matrices(spec: RepSpec) -> MatrixTriple:
    """Concrete matrices of a ladder representation, basis ordered M = -J .. +J."""
    two_ms = list(range(-spec.two_j, spec.two_j + 1, 2))
    pos = {t: i for i, t in enumerate(two_ms)}
    diag = [spec.diagonal_value(Fr(t, 2)) for t in two_ms]
    n = len(two_ms)
    plus_rows = [[as_scalar(0)] * n for _ in range(n)]
    minus_rows = [[as_scalar(0)] * n for _ in range(n)]
    src, dst = pos[spec.two_m1], pos[spec.two_m1 + 2 * spec.q]
    plus_rows[dst][src] = spec.f
    minus_rows[src][dst] = spec.g
    return MatrixTriple(
        j0=Matrix.diagonal(diag), jplus=Matrix(plus_rows), jminus=Matrix(minus_rows)
    )


def _cubic(t: Scalar, params: AlgebraParams) -> Scalar:
    return ((params.alpha * t + params.beta) * t + params.gamma) * t + params.delta


def constraint_residuals(spec: RepSpec, params: AlgebraParams) -> list[Scalar]:
    """The 2J+1 diagonal constraint residuals, raised state first.

    Order: the raised-state residual cubic(h(M1+q)) - f*g, then the source
    residual cubic(h(M1)) + f*g, then one residual cubic(h(M)) per remaining
    basis label M, ascending.  All zero exactly when the built matrices
    satisfy the deformed relations.
    """
    fg = spec.f * spec.g
    raised = spec.diagonal_value(spec.m1 + spec.q)
    source = spec.diagonal_value(spec.m1)
    residuals = [_cubic(raised, params) - fg, _cubic(source, params) + fg]
    for two_m in range(-spec.two_j, spec.two_j + 1, 2):
        if two_m in (spec.two_m1, spec.two_m1 + 2 * spec.q):
            continue
        residuals.append(_cubic(spec.diagonal_value(Fr(two_m, 2)), params))
    return residuals


def solve_case(
    case: CaseId,
    alpha: Scalar,
    beta: Scalar,
    gamma: Scalar,
    branch: str = "upper",
) -> CaseSolution:
    """Closed-form (c, delta, f*g) for one of the three-dimensional cases.

    With alpha = 0 the solution is unique and ``branch`` is ignored; otherwise
    ``branch`` picks the sign in front of the square root and the radicand
    must be nonnegative.  The ladder product comes from back-substituting c
    into the raised-state constraint.
    """
    alpha, beta, gamma = as_scalar(alpha), as_scalar(beta), as_scalar(gamma)
    data = case.data
    if scalar_is_zero(alpha):
        if scalar_is_zero(beta):
            raise TrivialAlgebraError(
                "alpha = beta = 0 admits only the trivial gamma = delta = 0 algebra"
            )
        c = data.c_const - gamma / (2 * beta)
        delta = gamma * gamma / (4 * beta) - data.alpha0_delta_coeff * beta
        branch_tag = "alpha-zero"
    else:
        if branch not in ("upper", "lower"):
            raise ValueError(f"branch must be 'upper' or 'lower', got {branch!r}")
        sign = 1 if branch == "upper" else -1
        ra, rb, rc = data.radicand
        radicand = ra * alpha * alpha + rb * beta * beta + rc * alpha * gamma
        root = sqrt_exact(data.radicand_premul * radicand)
        c = data.c_const - beta / (3 * alpha) + sign * root / (data.c_sqrt_den * alpha)
        delta = (
            data.delta_alpha * alpha
            - Fr(2, 27) * beta ** 3 / (alpha * alpha)
            + beta * gamma / (3 * alpha)
            + sign
            * (
                data.delta_b2 * beta * beta / (alpha * alpha)
                + data.delta_g * gamma / alpha
                + data.delta_const
            )
            * root
            / data.d_sqrt_den
        )
        branch_tag = branch
    params = AlgebraParams(alpha, beta, gamma, delta)
    fg = _cubic(c + data.fg_shift, params)
    return CaseSolution(c=c, delta=delta, fg=fg, branch=branch_tag)


def intrinsic_gamma_and_product(case: CaseId, alpha: Scalar, beta: Scalar) -> IntrinsicData:
    """gamma and f*g making the case realization close independently of the module.

    Also reports which square-root branch realizes the intrinsic solution for
    each sign of alpha.
    """
    alpha, beta = as_scalar(alpha), as_scalar(beta)
    if scalar_is_zero(alpha):
        raise ValueError("the intrinsic locus needs alpha != 0")
    if case.data.upper_needs_negative_alpha:
        upper, lower = "alpha < 0", "alpha > 0"
    else:
        upper, lower = "alpha > 0", "alpha < 0"
    return IntrinsicData(
        gamma=case.intrinsic_gamma(alpha, beta),
        fg=case.intrinsic_product(alpha),
        upper_branch_condition=upper,
        lower_branch_condition=lower,
    )


@dataclass(frozen=True)
class RepBlock:
    """One irreducible coordinate block of a decomposed representation."""

    indices: tuple[int, ...]
    two_j_label: int
    c_label: Union[Scalar, tuple[Scalar, ...]]


def decompose_rep(rep: MatrixTriple) -> list[RepBlock]:
    """Coordinate block decomposition with spin and diagonal labels.

    Each block of size d gets the spin label 2J = d - 1.  For a singleton the
    c label is the lone diagonal eigenvalue; larger blocks report the tuple of
    eigenvalues, since their own quadratic coefficient is a free parameter and
    a single c is not determined.
    """
    split = coordinate_block_split([rep.j0, rep.jplus, rep.jminus])
    out = []
    for block in split.blocks:
        eigs = tuple(rep.j0.rows[i][i] for i in block)
        label: Union[Scalar, tuple[Scalar, ...]] = eigs[0] if len(eigs) == 1 else eigs
        out.append(RepBlock(indices=block, two_j_label=len(block) - 1, c_label=label))
    return out


def case_rep_spec(case: CaseId, solution: CaseSolution, f: Optional[Scalar] = None) -> RepSpec:
    """RepSpec for a solved case, splitting the product as f = 1, g = f*g by default."""
    data = case.data
    f = as_scalar(1 if f is None else f)
    if scalar_is_zero(f):
        raise ValueError("the raising coefficient of the split must be nonzero")
    return RepSpec(
        two_j=2,
        q=data.q,
        two_m1=data.two_m1,
        a=data.a,
        c=solution.c,
        f=f,
        g=solution.fg / f,
    )
