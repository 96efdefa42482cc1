"""Exact univariate polynomials and unit-triangular solves.

Scalars are plain Python ints and fractions.Fraction: both are arbitrary
precision, and Fraction keeps every value in lowest terms with a positive
denominator.  Floats are rejected so nothing silently leaves exact
arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]


def as_fraction(value: Rational) -> Fraction:
    """Coerce an int or Fraction to Fraction; refuse anything inexact."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(
        f"exact arithmetic accepts int or Fraction, got {type(value).__name__}"
    )


class Polynomial:
    """Dense polynomial in one indeterminate x over the rationals.

    Coefficients are stored ascending in the power of x with trailing zeros
    trimmed, so equality is plain coefficient-wise comparison.  The zero
    polynomial has degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational] = ()) -> None:
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def monomial(cls, power: int, coeff: Rational = 1) -> "Polynomial":
        """coeff * x**power."""
        if power < 0:
            raise ValueError("power must be nonnegative")
        return cls((0,) * power + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, power: int) -> Fraction:
        """Coefficient of x**power (0 beyond the degree)."""
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    @staticmethod
    def _coerce(value: object) -> "Polynomial | None":
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, (int, Fraction)):
            return Polynomial((value,))
        return None

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return self.coeffs == coerced.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: object) -> "Polynomial":
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        a, b = self.coeffs, coerced.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, v in enumerate(b):
            out[j] += v
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: object) -> "Polynomial":
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return self.__add__(-coerced)

    def __rsub__(self, other: object) -> "Polynomial":
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return coerced.__add__(-self)

    def __mul__(self, other: object) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            f = as_fraction(other)
            return Polynomial(tuple(c * f for c in self.coeffs))
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Rational) -> "Polynomial":
        f = as_fraction(scalar)
        if f == 0:
            raise ZeroDivisionError("division of a polynomial by zero")
        return Polynomial(tuple(c / f for c in self.coeffs))

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only nonnegative integer powers")
        result = Polynomial((1,))
        for _ in range(exponent):
            result = result * self
        return result

    def __call__(self, point: Rational) -> Fraction:
        """Evaluate at an exact point (Horner)."""
        x = as_fraction(point)
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                xpart = "x" if power == 1 else f"x^{power}"
                body = xpart if mag == 1 else f"{mag}*{xpart}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(parts)


X = Polynomial((0, 1))


def linear_combination(
    coeffs: Sequence[Rational], polys: Sequence[Polynomial]
) -> Polynomial:
    """Exact sum of coeffs[j] * polys[j]; the lists must have equal length."""
    if len(coeffs) != len(polys):
        raise ValueError(
            f"{len(coeffs)} coefficients given for {len(polys)} polynomials"
        )
    acc: list[Fraction] = []
    for c, p in zip(coeffs, polys):
        cf = as_fraction(c)
        if cf == 0 or not p:
            continue
        if len(p.coeffs) > len(acc):
            acc.extend([Fraction(0)] * (len(p.coeffs) - len(acc)))
        for j, pj in enumerate(p.coeffs):
            acc[j] += cf * pj
    return Polynomial(acc)


def solve_unit_lower(
    matrix: Sequence[Sequence[Rational]], rhs: Sequence[Rational]
) -> tuple[Fraction, ...]:
    """Forward substitution for L y = rhs, L lower triangular with unit diagonal.

    Rows may carry their full width or just columns 0..i; anything above the
    diagonal is ignored.  Only unipotent systems are supported, so the solve
    is division-free and exact.
    """
    n = len(rhs)
    if len(matrix) != n:
        raise ValueError("matrix and right-hand side sizes differ")
    out: list[Fraction] = []
    for i in range(n):
        row = matrix[i]
        if len(row) <= i:
            raise ValueError(f"row {i} is shorter than its diagonal")
        if as_fraction(row[i]) != 1:
            raise ValueError(
                f"diagonal entry at row {i} is {row[i]}; only unit-diagonal "
                "systems are supported"
            )
        total = as_fraction(rhs[i])
        for j in range(i):
            lij = as_fraction(row[j])
            if lij:
                total -= lij * out[j]
        out.append(total)
    return tuple(out)
