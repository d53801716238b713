"""Exact calculus of linear differential operators with monomial coefficients.

An operator is a finite sum of terms ``coeff * x^m * D^n`` with integer x-power
``m`` (negative allowed, e.g. the lowering operator (1/6x) D^2), nonnegative
derivative order ``n``, and exact scalar coefficients.  Composition normal
orders all derivatives to the right, so operator equality is term-by-term.

Acting on a monomial x^k the term x^m D^n contributes
``k(k-1)...(k-n+1) x^(k+m-n)``; collecting the falling-factorial polynomials
per exponent shift s = m - n gives the *symbolic action*, the effect on x^k
with k left indeterminate.  An operator identity holds "intrinsically" (for
every monomial, hence independently of any chosen module) exactly when all
shift polynomials vanish identically in k.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, Mapping, Optional, Sequence

from .cases import CaseId
from .matrices import Matrix
from .scalars import (
    Scalar,
    as_scalar,
    parse_scalar,
    render_scalar,
    scalar_is_zero,
    sqrt_exact,
)

if TYPE_CHECKING:  # pragma: no cover - typing only, avoids an import cycle
    from .algebra import AlgebraParams


class NegativeExponentError(ArithmeticError):
    """Applying an operator produced a monomial of negative exponent."""


class SpaceEscapeError(ValueError):
    """An operator was asked for its matrix on a space it does not preserve."""


def _falling(k: int, n: int) -> int:
    out = 1
    for i in range(n):
        out *= k - i
    return out


class PolyK:
    """Dense polynomial in the symbolic exponent k, exact coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_scalar(c) for c in coeffs]
        while cs and scalar_is_zero(cs[-1]):
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *_):
        raise AttributeError("PolyK is immutable")

    @classmethod
    def falling_factorial(cls, order: int) -> "PolyK":
        """k(k-1)...(k-order+1); the derivative factor of D^order on x^k."""
        poly = cls([Fraction(1)])
        for i in range(order):
            poly = poly * cls([Fraction(-i), Fraction(1)])
        return poly

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "PolyK") -> "PolyK":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return PolyK(out)

    def __sub__(self, other: "PolyK") -> "PolyK":
        return self + other.scale(Fraction(-1))

    def scale(self, s) -> "PolyK":
        s = as_scalar(s)
        return PolyK([c * s for c in self.coeffs])

    def __mul__(self, other: "PolyK") -> "PolyK":
        if not isinstance(other, PolyK):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return PolyK()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return PolyK(out)

    def __call__(self, k) -> Scalar:
        acc: Scalar = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * k + c
        return acc

    def shifted(self, s: int) -> "PolyK":
        """The polynomial k -> self(k + s)."""
        out = PolyK()
        base = PolyK([Fraction(s), Fraction(1)])
        power = PolyK([Fraction(1)])
        for c in self.coeffs:
            out = out + power.scale(c)
            power = power * base
        return out

    def __eq__(self, other):
        if not isinstance(other, PolyK):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.is_zero():
            return "PolyK(0)"
        body = " + ".join(
            f"({render_scalar(c)})*k^{i}" for i, c in enumerate(self.coeffs)
            if not scalar_is_zero(c)
        )
        return f"PolyK[{body}]"


@dataclass(frozen=True)
class SymbolicAction:
    """Effect on x^k, k indeterminate: shift -> polynomial coefficient of x^(k+shift)."""

    polys: tuple[tuple[int, PolyK], ...]

    @classmethod
    def from_dict(cls, mapping: Mapping[int, PolyK]) -> "SymbolicAction":
        items = tuple(
            (s, p) for s, p in sorted(mapping.items()) if not p.is_zero()
        )
        return cls(items)

    def as_dict(self) -> dict[int, PolyK]:
        return dict(self.polys)

    def is_zero(self) -> bool:
        return not self.polys

    def shifts(self) -> tuple[int, ...]:
        return tuple(s for s, _ in self.polys)

    def evaluate(self, k: int) -> dict[int, Scalar]:
        """Image exponent -> coefficient for a concrete monomial x^k."""
        out: dict[int, Scalar] = {}
        for s, poly in self.polys:
            v = poly(k)
            if not scalar_is_zero(v):
                out[k + s] = v
        return out


class DiffOp:
    """Normal-ordered linear differential operator with monomial coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], object] = ()):
        canon: dict[tuple[int, int], Scalar] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (m, n), c in items:
            if n < 0:
                raise ValueError("derivative order must be nonnegative")
            c = as_scalar(c)
            if (m, n) in canon:
                c = canon[(m, n)] + c
            if scalar_is_zero(c):
                canon.pop((m, n), None)
            else:
                canon[(m, n)] = c
        object.__setattr__(self, "terms", dict(sorted(canon.items())))

    def __setattr__(self, *_):
        raise AttributeError("DiffOp is immutable")

    # -- constructors ---------------------------------------------------------
    @classmethod
    def zero(cls) -> "DiffOp":
        return cls()

    @classmethod
    def identity(cls) -> "DiffOp":
        return cls({(0, 0): Fraction(1)})

    @classmethod
    def x_power(cls, m: int) -> "DiffOp":
        return cls({(m, 0): Fraction(1)})

    @classmethod
    def derivative(cls, n: int = 1) -> "DiffOp":
        return cls({(0, n): Fraction(1)})

    @classmethod
    def euler(cls) -> "DiffOp":
        """x * D, the degree operator on monomials."""
        return cls({(1, 1): Fraction(1)})

    # -- ring structure ---------------------------------------------------------
    def __add__(self, other: "DiffOp") -> "DiffOp":
        merged = dict(self.terms)
        return DiffOp(list(merged.items()) + list(other.terms.items()))

    def __sub__(self, other: "DiffOp") -> "DiffOp":
        return self + other.scale(Fraction(-1))

    def __neg__(self) -> "DiffOp":
        return self.scale(Fraction(-1))

    def scale(self, s) -> "DiffOp":
        s = as_scalar(s)
        if scalar_is_zero(s):
            return DiffOp()
        return DiffOp({key: c * s for key, c in self.terms.items()})

    def __mul__(self, s):
        return self.scale(s)

    __rmul__ = __mul__

    def compose(self, other: "DiffOp") -> "DiffOp":
        """Operator product self . other, normal ordered.

        Derivatives exchange past powers by D^n x^m = sum_i C(n,i) m(m-1)..(m-i+1)
        x^(m-i) D^(n-i); the falling factorial also handles negative m.
        """
        acc: dict[tuple[int, int], Scalar] = {}
        for (m1, n1), c1 in self.terms.items():
            for (m2, n2), c2 in other.terms.items():
                for i in range(n1 + 1):
                    w = math.comb(n1, i) * _falling(m2, i)
                    if w == 0:
                        continue
                    key = (m1 + m2 - i, n1 + n2 - i)
                    cur = acc.get(key, Fraction(0))
                    acc[key] = cur + c1 * c2 * w
        return DiffOp(acc)

    def commutator(self, other: "DiffOp") -> "DiffOp":
        return self.compose(other) - other.compose(self)

    def __pow__(self, exponent: int) -> "DiffOp":
        if exponent < 0:
            raise ValueError("negative operator powers are not defined")
        out = DiffOp.identity()
        for _ in range(exponent):
            out = out.compose(self)
        return out

    # -- action -----------------------------------------------------------------
    def symbolic_action(self) -> SymbolicAction:
        per_shift: dict[int, PolyK] = {}
        for (m, n), c in self.terms.items():
            poly = PolyK.falling_factorial(n).scale(c)
            s = m - n
            per_shift[s] = per_shift.get(s, PolyK()) + poly
        return SymbolicAction.from_dict(per_shift)

    def apply_to_monomial(self, k: int) -> list[tuple[int, Scalar]]:
        """Exact image of x^k as (exponent, coefficient) pairs, exponent ascending.

        A nonzero coefficient on a negative exponent is an error, not a drop:
        the result would leave the monomial module entirely.
        """
        if k < 0:
            raise ValueError("monomial exponent must be nonnegative")
        image = self.symbolic_action().evaluate(k)
        bad = {e: v for e, v in image.items() if e < 0}
        if bad:
            rendered = ", ".join(
                f"{render_scalar(v)}*x^{e}" for e, v in sorted(bad.items())
            )
            raise NegativeExponentError(
                f"image of x^{k} has negative exponents: {rendered}"
            )
        return sorted(image.items())

    # -- module interaction -------------------------------------------------------
    def preserves_space(self, space: "MonomialSpace") -> bool:
        members = set(space.exponents)
        action = self.symbolic_action()
        for s, poly in action.polys:
            for k in space.exponents:
                if k + s not in members and not scalar_is_zero(poly(k)):
                    return False
        return True

    def matrix_on_space(
        self, space: "MonomialSpace", norm_squares: Optional[Sequence] = None
    ) -> Matrix:
        """Matrix in the basis x^e (optionally rescaled by sqrt(norm_squares[i])).

        With ``norm_squares`` the basis vector i is sqrt(norm_squares[i]) * x^e_i;
        each entry picks up sqrt(N_col / N_row), taken exactly per entry so no
        shared quadratic extension is ever needed.
        """
        if not self.preserves_space(space):
            raise SpaceEscapeError(
                f"operator does not preserve the space {space.exponents}"
            )
        pos = {e: i for i, e in enumerate(space.exponents)}
        n = len(space.exponents)
        rows = [[as_scalar(0) for _ in range(n)] for _ in range(n)]
        for col, k in enumerate(space.exponents):
            for e, v in self.symbolic_action().evaluate(k).items():
                rows[pos[e]][col] = v
        if norm_squares is not None:
            ns = [Fraction(x) for x in norm_squares]
            for r in range(n):
                for cix in range(n):
                    if not scalar_is_zero(rows[r][cix]):
                        rows[r][cix] = rows[r][cix] * sqrt_exact(ns[cix] / ns[r])
        return Matrix(rows)

    # -- identity ------------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def order(self) -> int:
        return max((n for _, n in self.terms), default=0)

    def __eq__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __repr__(self):
        return f"DiffOp({self.to_text()!r})"

    # -- text format -----------------------------------------------------------------
    def to_text(self) -> str:
        """Render as e.g. ``1/3 * x^3 * D^2 - 1 * x^2 * D^1 + 1 * x^1 * D^0``."""
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda mn: (-mn[1], -mn[0]))
        pieces = []
        for m, n in keys:
            c = self.terms[(m, n)]
            if isinstance(c, Fraction):
                sign = "-" if c < 0 else "+"
                body = f"{abs(c)} * x^{m} * D^{n}"
            else:
                sign = "+"
                body = f"({render_scalar(c)}) * x^{m} * D^{n}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text


_TERM_RE = re.compile(
    r"^\s*(?P<coeff>\(.*\)|[^*]*?)\s*\*\s*x\^(?P<m>-?\d+)\s*\*\s*D\^(?P<n>\d+)\s*$"
)


def parse_diffop(text: str) -> DiffOp:
    """Parse the operator text format produced by :meth:`DiffOp.to_text`."""
    text = text.strip()
    if text == "0":
        return DiffOp()
    # split on top-level +/- (not inside parentheses, not at position 0, and not
    # the sign of an exponent as in "x^-1")
    pieces: list[str] = []
    signs: list[int] = []
    depth = 0
    start = 0
    sign = 1
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > start:
            prev = text[:i].rstrip()
            if prev.endswith("^"):
                continue
            pieces.append(text[start:i])
            signs.append(sign)
            sign = 1 if ch == "+" else -1
            start = i + 1
    pieces.append(text[start:])
    signs.append(sign)
    if text[0] == "-":
        signs[0] = -1
        pieces[0] = pieces[0].lstrip("-").strip()
    terms: list[tuple[tuple[int, int], Scalar]] = []
    for sgn, piece in zip(signs, pieces):
        m = _TERM_RE.match(piece)
        if not m:
            raise ValueError(f"cannot parse operator term {piece!r}")
        coeff_text = m.group("coeff").strip()
        if coeff_text.startswith("("):
            coeff_text = coeff_text[1:-1]
        coeff = parse_scalar(coeff_text) if coeff_text else Fraction(1)
        terms.append(((int(m.group("m")), int(m.group("n"))), coeff * sgn))
    return DiffOp(terms)


def compose(op_a: DiffOp, op_b: DiffOp) -> DiffOp:
    return op_a.compose(op_b)


def commutator_op(op_a: DiffOp, op_b: DiffOp) -> DiffOp:
    return op_a.commutator(op_b)


@dataclass(frozen=True)
class MonomialSpace:
    """Span of finitely many monomials x^e, e a strictly increasing exponent list."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(self.exponents)
        if list(exps) != sorted(set(exps)) or any(e < 0 for e in exps):
            raise ValueError("exponents must be distinct, sorted and nonnegative")
        object.__setattr__(self, "exponents", exps)

    @property
    def dimension(self) -> int:
        return len(self.exponents)

    def __contains__(self, e: int) -> bool:
        return e in self.exponents


#: The module spanned by 1, x and x^3 on which the three ladder cases live.
V3 = MonomialSpace((0, 1, 3))


# -- case realizations ------------------------------------------------------------


def build_case_realization(
    case: CaseId,
    alpha: Scalar,
    beta: Scalar,
    f: Scalar,
    g: Scalar,
    c: Optional[Scalar] = None,
) -> tuple[DiffOp, DiffOp, DiffOp]:
    """The differential triple (diagonal, raising, lowering) of a ladder case.

    The diagonal operator is (1/p) x D + (c - 1/p).  Without an explicit
    label ``c`` the intrinsic one is used, which requires alpha != 0.
    """
    data = case.data
    alpha, beta = as_scalar(alpha), as_scalar(beta)
    if c is None:
        if scalar_is_zero(alpha):
            raise ValueError(
                "alpha = 0 leaves the intrinsic diagonal label undefined; pass c"
            )
        c = case.intrinsic_c(alpha, beta)
    slope = 1 / data.p
    j0 = DiffOp({(1, 1): slope, (0, 0): as_scalar(c) - slope})
    jp = DiffOp({key: coeff for key, coeff in data.raise_terms}).scale(f)
    jm = DiffOp({key: coeff for key, coeff in data.lower_terms}).scale(g)
    return j0, jp, jm


# -- closure checking ---------------------------------------------------------------


@dataclass(frozen=True)
class ClosureReport:
    """Residuals of the deformed commutation relations for a differential triple."""

    mode: str                                  # "intrinsic" or "on-space"
    passed: bool
    residuals: tuple[tuple[str, SymbolicAction], ...]

    def residual(self, name: str) -> SymbolicAction:
        return dict(self.residuals)[name]


def closure_check(
    triple: tuple[DiffOp, DiffOp, DiffOp],
    params: "AlgebraParams",
    space: Optional[MonomialSpace] = None,
) -> ClosureReport:
    """Check the ladder and cubic-bracket relations for a differential triple.

    ``space=None`` demands the relations as operator identities (all shift
    polynomials identically zero); with a space they only need to hold on the
    listed monomials.
    """
    j0, jp, jm = triple
    ident = DiffOp.identity()
    rhs = (
        (j0 ** 3).scale(params.alpha)
        + (j0 ** 2).scale(params.beta)
        + j0.scale(params.gamma)
        + ident.scale(params.delta)
    )
    residual_ops = (
        ("raising", j0.commutator(jp) - jp),
        ("lowering", j0.commutator(jm) + jm),
        ("bracket", jp.commutator(jm) - rhs),
    )
    actions = tuple((name, op.symbolic_action()) for name, op in residual_ops)
    if space is None:
        passed = all(action.is_zero() for _, action in actions)
        mode = "intrinsic"
    else:
        passed = all(
            scalar_is_zero(poly(k))
            for _, action in actions
            for _, poly in action.polys
            for k in space.exponents
        )
        mode = "on-space"
    return ClosureReport(mode=mode, passed=passed, residuals=actions)


# -- preserving operators -------------------------------------------------------------


def _rational_nullspace(rows: list[list[Fraction]], width: int) -> list[list[Fraction]]:
    """Basis of the null space of the given row list, via exact RREF."""
    mat = [row[:] for row in rows]
    pivots: list[int] = []
    r = 0
    for col in range(width):
        pivot_row = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = mat[r][col]
        mat[r] = [v / inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    free_cols = [c for c in range(width) if c not in pivots]
    basis = []
    for fc in free_cols:
        vec = [Fraction(0)] * width
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -mat[i][fc]
        basis.append(vec)
    return basis


def enumerate_preserving_operators(
    space: MonomialSpace, max_order: int
) -> list[DiffOp]:
    """Basis of the operators sum c_(m,n) x^m D^n, n <= max_order, preserving the space.

    The x-power window is [-max_order, max(exponents) + max_order]; preservation
    is the exact linear condition that every image exponent outside the space
    (negative ones included) carries a zero total coefficient.
    """
    if max_order < 0:
        raise ValueError("max_order must be nonnegative")
    if max_order > 6:
        raise ValueError("max_order above 6 is not supported")
    lo, hi = -max_order, max(space.exponents) + max_order
    term_keys = [
        (m, n) for n in range(max_order + 1) for m in range(lo, hi + 1)
    ]
    index = {key: i for i, key in enumerate(term_keys)}
    members = set(space.exponents)
    rows = []
    for k in space.exponents:
        by_exponent: dict[int, list[tuple[int, int]]] = {}
        for (m, n) in term_keys:
            if _falling(k, n) == 0:
                continue
            by_exponent.setdefault(k + m - n, []).append((m, n))
        for e, contributors in sorted(by_exponent.items()):
            if e in members:
                continue
            row = [Fraction(0)] * len(term_keys)
            for m, n in contributors:
                row[index[(m, n)]] = Fraction(_falling(k, n))
            rows.append(row)
    basis = _rational_nullspace(rows, len(term_keys))
    ops = []
    for vec in basis:
        denom_lcm = 1
        for v in vec:
            if v:
                denom_lcm = denom_lcm * v.denominator // math.gcd(denom_lcm, v.denominator)
        ints = [int(v * denom_lcm) for v in vec]
        g = 0
        for v in ints:
            g = math.gcd(g, abs(v))
        lead = next(v for v in ints if v)
        scale = Fraction((1 if lead > 0 else -1), g)
        ops.append(
            DiffOp({term_keys[i]: vec[i] * denom_lcm * scale for i in range(len(vec))})
        )
    return ops


# -- Lie closure probing -----------------------------------------------------------------


class _ExactSpan:
    """Incremental exact row space over the scalars (Gaussian elimination)."""

    def __init__(self, width: int):
        self.width = width
        self.rows: list[list[Scalar]] = []
        self.pivot_cols: list[int] = []

    def _reduce(self, vec: list[Scalar]) -> list[Scalar]:
        vec = list(vec)
        for row, pc in zip(self.rows, self.pivot_cols):
            if not scalar_is_zero(vec[pc]):
                f = vec[pc]
                vec = [a - f * b for a, b in zip(vec, row)]
        return vec

    def contains(self, vec: list[Scalar]) -> bool:
        return all(scalar_is_zero(v) for v in self._reduce(vec))

    def add(self, vec: list[Scalar]) -> bool:
        """Insert if independent; returns True when the span grew."""
        red = self._reduce(vec)
        pc = next((i for i, v in enumerate(red) if not scalar_is_zero(v)), None)
        if pc is None:
            return False
        inv = red[pc]
        red = [v / inv for v in red]
        self.rows.append(red)
        self.pivot_cols.append(pc)
        return True

    @property
    def dimension(self) -> int:
        return len(self.rows)


def _action_coordinates(ops: Sequence[DiffOp]) -> dict[tuple[int, int], int]:
    keys = set()
    for op in ops:
        for s, poly in op.symbolic_action().polys:
            for j, c in enumerate(poly.coeffs):
                if not scalar_is_zero(c):
                    keys.add((s, j))
    return {key: i for i, key in enumerate(sorted(keys))}


def _action_vector(op: DiffOp, coords: dict[tuple[int, int], int]) -> list[Scalar]:
    vec: list[Scalar] = [Fraction(0)] * len(coords)
    for s, poly in op.symbolic_action().polys:
        for j, c in enumerate(poly.coeffs):
            if not scalar_is_zero(c):
                vec[coords[(s, j)]] = c
    return vec


@dataclass(frozen=True)
class LieClosureReport:
    closed_as_operators: bool
    failing_pairs: tuple[tuple[int, int], ...]
    matrix_lie_span_dimension: int
    rounds_used: int


def lie_closure_probe(
    ops: Sequence[DiffOp], space: MonomialSpace, max_rounds: int = 6
) -> LieClosureReport:
    """Probe whether pairwise brackets of ``ops`` stay inside their span.

    Operator level: each commutator must lie in span(ops) extended by all
    diagonal operators of order <= 3 (polynomials of degree <= 3 in x*D),
    i.e. closure is granted even up to a cubic deformation.  Matrix level:
    the span of the operators' matrices on the space is saturated under
    commutators and its dimension reported.
    """
    if max_rounds < 1:
        raise ValueError("max_rounds must be positive")
    ops = list(ops)
    for op in ops:
        if not op.preserves_space(space):
            raise SpaceEscapeError("every probed operator must preserve the space")
    euler = DiffOp.euler()
    diagonal_allowance = [euler ** i for i in range(4)]
    brackets = [
        ((i, j), ops[i].commutator(ops[j]))
        for i in range(len(ops))
        for j in range(i + 1, len(ops))
    ]
    ambient = ops + diagonal_allowance + [b for _, b in brackets]
    coords = _action_coordinates(ambient)
    span = _ExactSpan(len(coords))
    for op in ops + diagonal_allowance:
        span.add(_action_vector(op, coords))
    failing = tuple(
        pair for pair, br in brackets if not span.contains(_action_vector(br, coords))
    )

    mats = [op.matrix_on_space(space) for op in ops]
    n = space.dimension
    flat = lambda mat: [mat.rows[i][j] for i in range(n) for j in range(n)]
    mspan = _ExactSpan(n * n)
    basis_mats: list[Matrix] = []
    for mat in mats:
        if mspan.add(flat(mat)):
            basis_mats.append(mat)
    rounds = 0
    for _ in range(max_rounds):
        rounds += 1
        grew = False
        current = list(basis_mats)
        for i in range(len(current)):
            for j in range(i + 1, len(current)):
                br = (current[i] @ current[j]) - (current[j] @ current[i])
                if mspan.add(flat(br)):
                    basis_mats.append(br)
                    grew = True
        if not grew:
            break
    return LieClosureReport(
        closed_as_operators=not failing,
        failing_pairs=failing,
        matrix_lie_span_dimension=mspan.dimension,
        rounds_used=rounds,
    )
