"""Exact scalar arithmetic: rationals and single quadratic extensions Q(sqrt(D)).

Every number handled by this package is either a ``fractions.Fraction`` or a
``QuadExt`` value ``a + b*sqrt(D)`` with rational ``a``, ``b`` and squarefree
integer ``D >= 2``.  Arithmetic is exact; a ``QuadExt`` whose radical part
cancels is demoted back to a ``Fraction`` by every canonicalizing operation.
Mixing two different radicands is an error, never a silent coercion.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

Rational = Fraction


class ScalarDomainError(ArithmeticError):
    """Two exact values live in incompatible extensions (different radicands)."""


class NegativeRadicandError(ValueError):
    """An exact square root of a negative rational was requested."""


def squarefree_split(n: int) -> tuple[int, int]:
    """Return (s, d) with n = s**2 * d and d squarefree, for n >= 0.

    Trial division up to isqrt(n); the radicands arising in practice are small.
    """
    if n < 0:
        raise NegativeRadicandError(f"cannot split negative integer {n}")
    if n == 0:
        return 0, 1
    s, d = 1, 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    d *= n  # leftover prime
    return s, d


class QuadExt:
    """a + b*sqrt(d) with rational a, b != 0 and squarefree d >= 2.

    Use :func:`quadext` to build values that may be rational; the constructor
    insists on a genuine radical part so that a ``QuadExt`` is never secretly
    a rational number.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        a = Fraction(a)
        b = Fraction(b)
        if b == 0:
            raise ValueError("QuadExt requires a nonzero radical part; use quadext()")
        if d < 2 or squarefree_split(d) != (1, d):
            raise ValueError(f"radicand must be squarefree and >= 2, got {d}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, *_):
        raise AttributeError("QuadExt is immutable")

    # -- helpers ------------------------------------------------------------
    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """Field norm (a + b sqrt d)(a - b sqrt d); never zero for b != 0."""
        return self.a * self.a - self.b * self.b * self.d

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise ScalarDomainError(
                    f"mixed radicands sqrt({self.d}) and sqrt({other.d})"
                )
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        oa, ob = co
        return quadext(self.a + oa, self.b + ob, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        oa, ob = co
        return quadext(self.a - oa, self.b - ob, self.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        oa, ob = co
        return quadext(
            self.a * oa + self.b * ob * self.d,
            self.a * ob + self.b * oa,
            self.d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        oa, ob = co
        if oa == 0 and ob == 0:
            raise ZeroDivisionError("division of QuadExt by zero")
        if ob == 0:
            return quadext(self.a / oa, self.b / oa, self.d)
        nrm = oa * oa - ob * ob * self.d
        # (a+b√d)/(oa+ob√d) = (a+b√d)(oa−ob√d)/nrm ; nrm != 0 since √d irrational
        return quadext(
            (self.a * oa - self.b * ob * self.d) / nrm,
            (self.b * oa - self.a * ob) / nrm,
            self.d,
        )

    def __rtruediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            return Fraction(0)
        nrm = self.norm()
        return quadext(Fraction(other) * self.a / nrm, -Fraction(other) * self.b / nrm, self.d)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        out: Scalar = Fraction(1)
        for _ in range(exponent):
            out = out * self
        return out

    # -- identity -----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if isinstance(other, (int, Fraction)):
            return False  # b != 0 by construction
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __repr__(self):
        return f"QuadExt({self.a!r}, {self.b!r}, {self.d})"

    def __str__(self):
        return render_scalar(self)

    def __bool__(self):
        return True  # never zero


Scalar = Union[Fraction, QuadExt]


def quadext(a, b, d: int) -> Scalar:
    """Canonical a + b*sqrt(d): folds square factors of d, demotes when b == 0."""
    a = Fraction(a)
    b = Fraction(b)
    if d < 0:
        raise NegativeRadicandError(f"negative radicand {d}")
    s, d0 = squarefree_split(d)
    b = b * s
    if b == 0 or d0 <= 1:
        # d0 == 1 means d was a perfect square (or 0); sqrt folds into b
        return a + b if d0 == 1 else a
    return QuadExt(a, b, d0)


def as_scalar(value) -> Scalar:
    if isinstance(value, QuadExt):
        return value
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"not an exact scalar: {value!r}")


def scalar_is_zero(value: Scalar) -> bool:
    return isinstance(value, (int, Fraction)) and value == 0


def scalar_arith(lhs: Scalar, rhs: Scalar, op: str) -> Scalar:
    """Exact field operation; ``op`` is one of add|sub|mul|div."""
    lhs, rhs = as_scalar(lhs), as_scalar(rhs)
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    if op == "div":
        if scalar_is_zero(rhs):
            raise ZeroDivisionError("scalar division by zero")
        return lhs / rhs
    raise ValueError(f"unknown operation {op!r}")


def sqrt_exact(value) -> Scalar:
    """Exact nonnegative square root of a rational.

    Perfect squares come back rational; otherwise the result is a pure radical
    r*sqrt(D) with D the squarefree part, satisfying (r*sqrt(D))**2 == value.
    """
    value = Fraction(value)
    if value < 0:
        raise NegativeRadicandError(f"square root of negative value {value}")
    if value == 0:
        return Fraction(0)
    p, q = value.numerator, value.denominator
    # sqrt(p/q) = sqrt(p*q)/q
    s, d = squarefree_split(p * q)
    return quadext(0, Fraction(s, q), d) if d > 1 else Fraction(s, q)


# -- text format -------------------------------------------------------------
#
# Rational:  "p" or "p/q".   Extension: "a + b*sqrt(D)" (also "a - b*sqrt(D)",
# "b*sqrt(D)", "sqrt(D)").  render/parse round-trip exactly.

_RAT = r"[+-]?\d+(?:/\d+)?"
_SQRT_RE = re.compile(
    rf"^\s*(?:(?P<a>{_RAT})\s*(?P<sign>[+-])\s*)?(?P<b>{_RAT})?\s*\*?\s*sqrt\((?P<d>\d+)\)\s*$"
)
_RAT_RE = re.compile(rf"^\s*(?P<r>{_RAT})\s*$")


def parse_scalar(text: str) -> Scalar:
    m = _RAT_RE.match(text)
    if m:
        return Fraction(m.group("r"))
    m = _SQRT_RE.match(text)
    if m:
        a = Fraction(m.group("a")) if m.group("a") else Fraction(0)
        b = Fraction(m.group("b")) if m.group("b") else Fraction(1)
        if m.group("sign") == "-":
            b = -b
        return quadext(a, b, int(m.group("d")))
    raise ValueError(f"cannot parse scalar {text!r}")


def render_scalar(value: Scalar) -> str:
    value = as_scalar(value)
    if isinstance(value, Fraction):
        return str(value)
    radical = f"{abs(value.b)}*sqrt({value.d})"
    if value.a == 0:
        return radical if value.b > 0 else f"-{radical}"
    joiner = " + " if value.b > 0 else " - "
    return f"{value.a}{joiner}{radical}"
