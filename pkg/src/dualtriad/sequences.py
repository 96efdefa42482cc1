"""Scalar combinatorial sequences in closed form.

Every function returns exact values: int where integrality is guaranteed,
Fraction otherwise.  Out-of-range indices give 0 rather than an error so that
recurrences can run without boundary branches.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import Rational, as_fraction


def fibonacci(n: int) -> int:
    """F_n with F_0 = 0 and F_1 = F_2 = 1."""
    if n < 0:
        raise ValueError("fibonacci index must be nonnegative")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def binomial(n: int, k: int) -> int:
    """Ordinary binomial coefficient; 0 outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def q_int(n: int, q: Rational) -> Fraction:
    """The q-integer (1 - q^n)/(1 - q) = 1 + q + ... + q^(n-1); n at q = 1."""
    qf = as_fraction(q)
    if qf == 0:
        raise ValueError("q must be nonzero")
    if n < 0:
        raise ValueError("q-integer index must be nonnegative")
    if qf == 1:
        return Fraction(n)
    return (1 - qf**n) / (1 - qf)


def q_factorial(n: int, q: Rational) -> Fraction:
    """Product of the q-integers 1..n; empty product 1 for n = 0."""
    result = Fraction(1)
    for m in range(1, n + 1):
        result *= q_int(m, q)
    return result


def q_binomial(n: int, k: int, q: Rational) -> Fraction:
    """Gaussian binomial: falling q-factorial of length k over the q-factorial
    of k.  Returns 0 outside 0 <= k <= n and 1 at k = 0.

    Over the rationals a denominator q-integer can vanish only at q = -1,
    where this factored form is undefined; that case raises.
    """
    if n < 0 or k < 0 or k > n:
        return Fraction(0)
    result = Fraction(1)
    for j in range(1, k + 1):
        den = q_int(j, q)
        if den == 0:
            raise ValueError(
                f"q-integer {j} vanishes at q = {as_fraction(q)}; the "
                "factorial form of the coefficient is undefined there"
            )
        result *= q_int(n - k + j, q) / den
    return result


def fibonomial(n: int, k: int) -> int:
    """F_n!/(F_k! F_{n-k}!) built from Fibonacci factorials; always an integer.

    0 outside 0 <= k <= n.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    result = Fraction(1)
    for j in range(1, k + 1):
        result *= Fraction(fibonacci(n - k + j), fibonacci(j))
    if result.denominator != 1:  # pragma: no cover - integrality is a theorem
        raise ArithmeticError(f"fibonomial({n}, {k}) evaluated non-integral")
    return result.numerator


def catalan_entry(n: int, k: int) -> int:
    """Ballot-style closed form binom(2n, n-k) * k / n for rows n >= 1.

    0 for k <= 0 or k > n.  Entry (n, 1) is the n-th Catalan number.
    """
    if n < 1:
        raise ValueError("closed-form rows start at n = 1")
    if k <= 0 or k > n:
        return 0
    value = Fraction(math.comb(2 * n, n - k) * k, n)
    if value.denominator != 1:  # pragma: no cover - integrality is a theorem
        raise ArithmeticError(f"catalan_entry({n}, {k}) evaluated non-integral")
    return value.numerator


def stirling_first(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind.

    Row recurrence: entry(n+1, k) = entry(n, k-1) + n * entry(n, k), seeded
    with entry(0, 0) = 1.  0 outside 0 <= k <= n.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    row = [1]
    for m in range(n):
        nxt = [0] * (m + 2)
        for j, v in enumerate(row):
            if v:
                nxt[j] += m * v
                nxt[j + 1] += v
        row = nxt
    return row[k]


def eulerian(n: int, k: int) -> int:
    """Eulerian number: permutations of {1..n} with exactly k descents.

    Row recurrence: entry(n+1, k) = (k+1) * entry(n, k) + (n+1-k) * entry(n, k-1),
    seeded with entry(0, 0) = 1.  entry(n, 0) = 1 for every n >= 0.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    row = [1]
    for m in range(n):
        nxt = [0] * (m + 2)
        for j, v in enumerate(row):
            if v:
                nxt[j] += (j + 1) * v
                nxt[j + 1] += (m - j) * v
        row = nxt
    return row[k]


@dataclass(frozen=True)
class RootSequence:
    """Level-indexed roots r_1, r_2, ... produced by a simple rule.

    Rules: constant value, arithmetic progression, geometric progression, or
    an explicit finite list (which errors past its end).
    """

    rule: str
    data: tuple[Fraction, ...]

    @classmethod
    def constant(cls, value: Rational) -> "RootSequence":
        return cls("constant", (as_fraction(value),))

    @classmethod
    def arithmetic(cls, start: Rational = 0, step: Rational = 1) -> "RootSequence":
        """r_s = start + (s - 1) * step; the default gives 0, 1, 2, ..."""
        return cls("arithmetic", (as_fraction(start), as_fraction(step)))

    @classmethod
    def geometric(cls, ratio: Rational, first: Rational = 1) -> "RootSequence":
        """r_s = first * ratio**(s - 1); the default gives 1, q, q^2, ..."""
        r = as_fraction(ratio)
        if r == 0:
            raise ValueError("geometric ratio must be nonzero")
        return cls("geometric", (as_fraction(first), r))

    @classmethod
    def explicit(cls, values) -> "RootSequence":
        return cls("explicit", tuple(as_fraction(v) for v in values))

    def value(self, level: int) -> Fraction:
        """Root r_level; levels are indexed from 1."""
        if level < 1:
            raise ValueError("root levels are indexed from 1")
        if self.rule == "constant":
            return self.data[0]
        if self.rule == "arithmetic":
            return self.data[0] + (level - 1) * self.data[1]
        if self.rule == "geometric":
            return self.data[0] * self.data[1] ** (level - 1)
        if self.rule == "explicit":
            if level > len(self.data):
                raise ValueError(
                    f"explicit root sequence has only {len(self.data)} levels"
                )
            return self.data[level - 1]
        raise ValueError(f"unknown root rule {self.rule!r}")

    def prefix(self, count: int) -> tuple[Fraction, ...]:
        """Roots r_1..r_count."""
        return tuple(self.value(s) for s in range(1, count + 1))
