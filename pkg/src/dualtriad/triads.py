"""Coefficient triangles, banded level recurrences, and duality checks.

A triangle is a lower-triangular array c[n][k] read as the state history of a
walk on levels 0, 1, 2, ...: row n + 1 follows from row n through per-level
weights for moving up one level, staying, or dropping down one.  When those
weights do not depend on the step number, the same three sequences define a
polynomial recurrence whose solutions complete the triangle to a duality
triad:

    x^n  =  sum_k  c[n][k] * phi_k(x)     exactly, for every n.

This module builds triangles (from weights, from named families, from root
sequences), builds the polynomial side, converts between the two Catalan
triangle conventions, and checks the expansion identity symbolically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

from .exact import Polynomial, Rational, X, as_fraction, linear_combination
from .sequences import RootSequence, binomial, fibonacci

LevelSpec = Union[Rational, Callable[[int], Rational], Sequence[Rational]]

NAMED_FAMILIES = (
    "pascal",
    "q-gaussian",
    "catalan-shifted",
    "catalan-triad",
    "fibonomial",
    "stirling1",
    "eulerian",
)


def canonical_family(name: str) -> str:
    return name.strip().lower().replace("_", "-")


@dataclass(frozen=True)
class Triangle:
    """Lower-triangular array of exact entries plus family metadata.

    rows[n] holds entries k = 0..n; anything outside the triangle reads as 0
    through entry().
    """

    rows: tuple[tuple[Fraction, ...], ...]
    family: str = ""
    params: tuple[tuple[str, str], ...] = ()

    def __post_init__(self) -> None:
        coerced = []
        for n, row in enumerate(self.rows):
            if len(row) != n + 1:
                raise ValueError(f"row {n} has {len(row)} entries, expected {n + 1}")
            coerced.append(tuple(as_fraction(v) for v in row))
        object.__setattr__(self, "rows", tuple(coerced))

    @property
    def max_row(self) -> int:
        return len(self.rows) - 1

    def entry(self, n: int, k: int) -> Fraction:
        if 0 <= n < len(self.rows) and 0 <= k <= n:
            return self.rows[n][k]
        return Fraction(0)

    def is_unipotent(self) -> bool:
        return all(row[n] == 1 for n, row in enumerate(self.rows))

    def params_dict(self) -> dict[str, str]:
        return dict(self.params)


def _levels(spec: LevelSpec, depth: int) -> tuple[Fraction, ...]:
    if callable(spec):
        return tuple(as_fraction(spec(k)) for k in range(depth + 1))
    if isinstance(spec, (int, Fraction)):
        return tuple(as_fraction(spec) for _ in range(depth + 1))
    vals = tuple(as_fraction(v) for v in spec)
    if len(vals) < depth + 1:
        raise ValueError(f"level sequence covers {len(vals)} levels, need {depth + 1}")
    return vals[: depth + 1]


@dataclass(frozen=True)
class BandedRecurrence:
    """Per-level walk weights: up[k] to level k+1, stay[k], down[k] to k-1.

    The weights are independent of the step number by construction; that time
    independence is what makes a dual polynomial sequence exist.  down[0] is
    carried for uniform indexing but never multiplies anything.
    """

    up: tuple[Fraction, ...]
    stay: tuple[Fraction, ...]
    down: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "up", tuple(as_fraction(v) for v in self.up))
        object.__setattr__(self, "stay", tuple(as_fraction(v) for v in self.stay))
        object.__setattr__(self, "down", tuple(as_fraction(v) for v in self.down))
        if not (len(self.up) == len(self.stay) == len(self.down)):
            raise ValueError("up, stay and down must cover the same levels")

    @property
    def depth(self) -> int:
        """Largest tabulated level index."""
        return len(self.up) - 1

    @classmethod
    def tabulate(
        cls, up: LevelSpec, stay: LevelSpec, down: LevelSpec, depth: int
    ) -> "BandedRecurrence":
        """Build weights for levels 0..depth from scalars, callables of the
        level, or existing sequences."""
        if depth < 0:
            raise ValueError("depth must be nonnegative")
        return cls(_levels(up, depth), _levels(stay, depth), _levels(down, depth))


@dataclass(frozen=True)
class TriadReport:
    """Outcome of a triad verification.

    holds is True iff the expansion residual vanished for every checked row;
    otherwise first_failure carries the first failing row index and the exact
    residual polynomial.
    """

    verified_up_to: int
    holds: bool
    first_failure: Optional[tuple[int, Polynomial]] = None


def generate_from_banded(
    rec: BandedRecurrence,
    rows: int,
    family: str = "banded",
    params: tuple[tuple[str, str], ...] = (),
) -> Triangle:
    """Iterate the banded recurrence from the seed entry 1 at (0, 0).

    Row n+1 entry k is up[k-1]*c[n][k-1] + stay[k]*c[n][k] + down[k+1]*c[n][k+1].
    With nonnegative weights, c[n][k] counts the walks from level 0 that reach
    level k in n steps.
    """
    if rows < 0:
        raise ValueError("rows must be nonnegative")
    if rows > 0 and rec.depth < rows - 1:
        raise ValueError(
            f"recurrence tabulated to level {rec.depth}; {rows} rows need level {rows - 1}"
        )
    out: list[tuple[Fraction, ...]] = [(Fraction(1),)]
    for n in range(rows):
        prev = out[-1]
        row: list[Fraction] = []
        for k in range(n + 2):
            total = Fraction(0)
            if 1 <= k:
                total += rec.up[k - 1] * prev[k - 1]
            if k <= n:
                total += rec.stay[k] * prev[k]
            if k + 1 <= n:
                total += rec.down[k + 1] * prev[k + 1]
            row.append(total)
        out.append(tuple(row))
    return Triangle(rows=tuple(out), family=family, params=params)


def _require_q(q: Optional[Rational]) -> Fraction:
    if q is None:
        raise ValueError("family 'q-gaussian' needs the parameter q")
    qf = as_fraction(q)
    if qf == 0:
        raise ValueError("q must be nonzero")
    return qf


def banded_for_family(
    family: str, depth: int, q: Optional[Rational] = None
) -> BandedRecurrence:
    """The banded time-independent recurrence of a named family.

    Only pascal, q-gaussian and catalan-triad have one; the other named
    families provably do not (their update weights depend on the row index).
    """
    name = canonical_family(family)
    if name == "pascal":
        return BandedRecurrence.tabulate(1, 1, 0, depth)
    if name == "q-gaussian":
        qf = _require_q(q)
        return BandedRecurrence.tabulate(1, lambda k: qf**k, 0, depth)
    if name == "catalan-triad":
        return BandedRecurrence.tabulate(1, 2, 1, depth)
    raise ValueError(f"family {name!r} has no banded time-independent recurrence")


def _pascal_rows(rows: int) -> list[tuple[Fraction, ...]]:
    return [
        tuple(Fraction(binomial(n, k)) for k in range(n + 1)) for n in range(rows + 1)
    ]


def _catalan_shifted_rows(rows: int) -> list[tuple[Fraction, ...]]:
    # Column 0 is pinned to 0 from row 1 on; the interior follows the
    # symmetric three-term update seeded with the single 1 at (1, 1).
    out: list[tuple[Fraction, ...]] = [(Fraction(1),)]
    if rows >= 1:
        out.append((Fraction(0), Fraction(1)))
    for n in range(1, rows):
        prev = out[-1]

        def at(j: int) -> Fraction:
            return prev[j] if 0 <= j < len(prev) else Fraction(0)

        row = [Fraction(0)]
        for k in range(1, n + 2):
            row.append(at(k - 1) + 2 * at(k) + at(k + 1))
        out.append(tuple(row))
    return out


def _fibonomial_rows(rows: int) -> list[tuple[Fraction, ...]]:
    # Update weights F_{k+1} and F_{n-k} depend on the row index n, so this
    # cannot be phrased as a BandedRecurrence.  The new diagonal entry is the
    # boundary value 1 (empty product), like the k = 0 column.
    fibs = [fibonacci(i) for i in range(rows + 2)]
    out: list[tuple[Fraction, ...]] = [(Fraction(1),)]
    for n in range(rows):
        prev = out[-1]
        row = [Fraction(1)]
        for k in range(1, n + 1):
            row.append(fibs[k + 1] * prev[k] + fibs[n - k] * prev[k - 1])
        row.append(Fraction(1))
        out.append(tuple(row))
    return out


def _stirling_first_rows(rows: int) -> list[tuple[Fraction, ...]]:
    out: list[tuple[Fraction, ...]] = [(Fraction(1),)]
    for n in range(rows):
        prev = out[-1]

        def at(j: int) -> Fraction:
            return prev[j] if 0 <= j < len(prev) else Fraction(0)

        out.append(tuple(at(k - 1) + n * at(k) for k in range(n + 2)))
    return out


def _eulerian_rows(rows: int) -> list[tuple[Fraction, ...]]:
    out: list[tuple[Fraction, ...]] = [(Fraction(1),)]
    for n in range(rows):
        prev = out[-1]

        def at(j: int) -> Fraction:
            return prev[j] if 0 <= j < len(prev) else Fraction(0)

        out.append(
            tuple((k + 1) * at(k) + (n + 1 - k) * at(k - 1) for k in range(n + 2))
        )
    return out


def generate_named(
    family: str, rows: int, q: Optional[Rational] = None
) -> Triangle:
    """Rows 0..rows of a named triangle family.

    Families with a defining recurrence are generated by that recurrence so
    the closed forms in the sequences module stay an independent cross-check.
    """
    if rows < 0:
        raise ValueError("rows must be nonnegative")
    name = canonical_family(family)
    if name == "pascal":
        return Triangle(tuple(_pascal_rows(rows)), family="pascal")
    if name == "q-gaussian":
        qf = _require_q(q)
        rec = banded_for_family("q-gaussian", max(rows - 1, 0), qf)
        return generate_from_banded(
            rec, rows, family="q-gaussian", params=(("q", str(qf)),)
        )
    if name == "catalan-triad":
        rec = banded_for_family("catalan-triad", max(rows - 1, 0))
        return generate_from_banded(rec, rows, family="catalan-triad")
    if name == "catalan-shifted":
        return Triangle(tuple(_catalan_shifted_rows(rows)), family="catalan-shifted")
    if name == "fibonomial":
        return Triangle(tuple(_fibonomial_rows(rows)), family="fibonomial")
    if name == "stirling1":
        return Triangle(tuple(_stirling_first_rows(rows)), family="stirling1")
    if name == "eulerian":
        return Triangle(tuple(_eulerian_rows(rows)), family="eulerian")
    raise ValueError(f"unknown family {family!r}")


def lah_from_roots(
    roots: RootSequence, rows: int, params: tuple[tuple[str, str], ...] = ()
) -> Triangle:
    """Connection constants of the persistent-root basis with the given roots.

    Rows satisfy c[n+1][k] = c[n][k-1] + r_{k+1} * c[n][k] from the seed 1 at
    (0, 0); the result is unipotent.
    """
    if rows < 0:
        raise ValueError("rows must be nonnegative")
    rvals = roots.prefix(rows)
    out: list[tuple[Fraction, ...]] = [(Fraction(1),)]
    for n in range(rows):
        prev = out[-1]

        def at(j: int) -> Fraction:
            return prev[j] if 0 <= j < len(prev) else Fraction(0)

        out.append(tuple(at(k - 1) + rvals[k] * at(k) if k <= n else at(k - 1)
                         for k in range(n + 2)))
    return Triangle(tuple(out), family="lah", params=params)


def dual_polynomials(rec: BandedRecurrence, count: int) -> list[Polynomial]:
    """Solve the polynomial recurrence dual to a banded recurrence.

    x*phi_k = down[k]*phi_{k-1} + stay[k]*phi_k + up[k]*phi_{k+1}, with
    phi_0 = 1 and phi_{-1} = 0, solved upward for phi_0..phi_count.  Each
    up[k] must be nonzero to isolate phi_{k+1}; deg phi_k = k follows.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    if count > 0 and rec.depth < count - 1:
        raise ValueError(
            f"recurrence tabulated to level {rec.depth}; {count} polynomials need level {count - 1}"
        )
    phis = [Polynomial((1,))]
    prev = Polynomial()
    for k in range(count):
        if rec.up[k] == 0:
            raise ValueError(f"dual recurrence not solvable at level {k}: up weight is 0")
        nxt = (X * phis[k] - rec.stay[k] * phis[k] - rec.down[k] * prev) / rec.up[k]
        prev = phis[k]
        phis.append(nxt)
    return phis


def persistent_root_polys(roots: RootSequence, count: int) -> list[Polynomial]:
    """Monic phi_k(x) = (x - r_1)(x - r_2)...(x - r_k) for k = 0..count.

    Each polynomial keeps all roots of its predecessor, hence the name.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    phis = [Polynomial((1,))]
    for s in range(1, count + 1):
        phis.append(phis[-1] * Polynomial((-roots.value(s), 1)))
    return phis


def verify_triad(tri: Triangle, phis: Sequence[Polynomial]) -> TriadReport:
    """Check x^n = sum_k c[n][k] * phi_k(x) symbolically for every row.

    The residual is computed exactly; the report carries the first failing row
    and its residual polynomial so a failure is a concrete counterexample.
    """
    if len(phis) != tri.max_row + 1:
        raise ValueError(
            f"{len(phis)} polynomials for rows 0..{tri.max_row}; counts must match"
        )
    for n in range(tri.max_row + 1):
        combo = linear_combination(tri.rows[n], phis[: n + 1])
        residual = combo - Polynomial.monomial(n)
        if residual:
            return TriadReport(tri.max_row, False, (n, residual))
    return TriadReport(tri.max_row, True, None)


def expand_in_basis(p: Polynomial, phis: Sequence[Polynomial]) -> list[Fraction]:
    """Coefficients a_k with p = sum a_k phi_k, by back-substitution.

    Requires deg phi_k = k for every k up to deg p (graded basis); the
    returned list has deg p + 1 entries, empty for the zero polynomial.
    """
    deg = p.degree
    if deg < 0:
        return []
    if len(phis) < deg + 1:
        raise ValueError(f"basis covers {len(phis)} levels, need {deg + 1}")
    for k in range(deg + 1):
        if phis[k].degree != k:
            raise ValueError(f"basis polynomial {k} must have degree {k}")
    coeffs = [Fraction(0)] * (deg + 1)
    rest = p
    for k in range(deg, -1, -1):
        c = rest.coefficient(k) / phis[k].leading
        coeffs[k] = c
        if c:
            rest = rest - c * phis[k]
    if rest:  # pragma: no cover - eliminated degree by degree
        raise ArithmeticError("back-substitution left a nonzero remainder")
    return coeffs


def catalan_triad_from_shifted(tri: Triangle) -> Triangle:
    """Drop the zero column and the seed row of the shifted Catalan triangle.

    Entry (n, k) of the result is entry (n+1, k+1) of the input; the result
    is the triangle whose rows complete the triad with the Catalan
    polynomials.
    """
    if tri.max_row < 1:
        raise ValueError("need at least rows 0..1 to unshift")
    rows = tuple(
        tuple(tri.rows[n + 1][k + 1] for k in range(n + 1))
        for n in range(tri.max_row)
    )
    return Triangle(rows, family="catalan-triad")


def catalan_shifted_from_triad(tri: Triangle) -> Triangle:
    """Inverse of catalan_triad_from_shifted: prepend the zero column and the
    bare seed row."""
    rows = [(Fraction(1),)]
    for n in range(tri.max_row + 1):
        rows.append((Fraction(0),) + tri.rows[n])
    return Triangle(tuple(rows), family="catalan-shifted")
