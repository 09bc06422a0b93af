"""Exact difference tables, closed forms, EGF coefficients, recurrence checks.

Two triangular integer arrays are attached to the colored permutation groups
with ``ell`` colors:

* the ``g`` table: ``g[n][n] = ell^n * n!`` and
  ``g[n][m] = g[n][m+1] - g[n-1][m]``; its column ``m = 0`` counts the
  derangements of the group on ``n`` letters,
* the ``d`` table: ``d[n][n] = 1`` and
  ``d[n][m] = ell*(m+1)*d[n][m+1] - d[n-1][m]``; it satisfies
  ``g[n][m] = ell^m * m! * d[n][m]`` entrywise.

Both are built by their own defining recurrence (the ``d`` table is never
derived from ``g`` by division, so that divisibility stays a genuine check).
All arithmetic is exact arbitrary-precision integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .reporting import CheckResult

FLAVOR_G = "g"
FLAVOR_D = "d"
FLAVORS = (FLAVOR_G, FLAVOR_D)


@dataclass(frozen=True)
class DifferenceTable:
    """Triangular array ``rows[n][m]`` for ``0 <= m <= n <= max_n``."""

    ell: int
    flavor: str
    rows: tuple[tuple[int, ...], ...]

    @property
    def max_n(self) -> int:
        return len(self.rows) - 1

    def entry(self, n: int, m: int) -> int:
        if not 0 <= m <= n <= self.max_n:
            raise ValueError(f"entry ({n}, {m}) outside triangle of size {self.max_n}")
        return self.rows[n][m]

    def row(self, n: int) -> tuple[int, ...]:
        return self.rows[n]


def build_table(ell: int, max_n: int, flavor: str) -> DifferenceTable:
    """Build a full triangle by the defining recurrence."""
    if ell < 1:
        raise ValueError(f"number of colors must be >= 1, got {ell}")
    if max_n < 0:
        raise ValueError(f"max_n must be >= 0, got {max_n}")
    if flavor not in FLAVORS:
        raise ValueError(f"flavor must be one of {FLAVORS}, got {flavor!r}")
    rows: list[tuple[int, ...]] = []
    for n in range(max_n + 1):
        row = [0] * (n + 1)
        if flavor == FLAVOR_G:
            row[n] = ell**n * math.factorial(n)
            for m in range(n - 1, -1, -1):
                row[m] = row[m + 1] - rows[n - 1][m]
        else:
            row[n] = 1
            for m in range(n - 1, -1, -1):
                row[m] = ell * (m + 1) * row[m + 1] - rows[n - 1][m]
        rows.append(tuple(row))
    return DifferenceTable(ell, flavor, tuple(rows))


def g_closed_form(ell: int, n: int, m: int) -> int:
    """Alternating-sum closed form for the ``g`` entry at ``(n, m)``."""
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got m={m}, n={n}")
    r = n - m
    return sum(
        (-1) ** (r - i) * math.comb(r, i) * ell ** (m + i) * math.factorial(m + i)
        for i in range(r + 1)
    )


def derangement_number(ell: int, n: int) -> int:
    """Number of derangements of the group on ``n`` letters with ``ell`` colors.

    Computed as ``sum_i (-1)^i * ell^(n-i) * n!/i!``; every term is an
    integer, so the sum is exact.
    """
    if n < 0:
        raise ValueError(f"size must be >= 0, got {n}")
    fact_n = math.factorial(n)
    return sum(
        (-1) ** i * ell ** (n - i) * (fact_n // math.factorial(i))
        for i in range(n + 1)
    )


def egf_coefficient(ell: int, m: int, n: int) -> int:
    """``n! * [u^n]`` of ``ell^m m! exp(-u) / (1 - ell*u)^(m+1)``.

    Evaluated by exact rational series arithmetic: the geometric series is
    raised to the ``(m+1)``-st power by repeated convolution and multiplied
    against the truncated exponential.  Equals the ``g`` entry at
    ``(n + m, m)``.
    """
    if m < 0 or n < 0:
        raise ValueError(f"need m, n >= 0, got m={m}, n={n}")
    geom = [ell**b for b in range(n + 1)]
    power = [1] + [0] * n
    for _ in range(m + 1):
        power = [
            sum(power[a] * geom[c - a] for a in range(c + 1)) for c in range(n + 1)
        ]
    exp_neg = [Fraction((-1) ** a, math.factorial(a)) for a in range(n + 1)]
    coeff = sum(exp_neg[a] * power[n - a] for a in range(n + 1))
    value = coeff * ell**m * math.factorial(m) * math.factorial(n)
    if value.denominator != 1:
        raise ArithmeticError("series coefficient is not integral")
    return int(value)


# -- recurrence suite ---------------------------------------------------------


def _scan(table: DifferenceTable, points, lhs_rhs):
    """First (n, m, lhs, rhs) disagreement over the given points, or None."""
    for n, m in points:
        lhs, rhs = lhs_rhs(table, n, m)
        if lhs != rhs:
            return {"n": n, "m": m, "lhs": str(lhs), "rhs": str(rhs)}
    return None


def check_recurrences(ell: int, max_n: int) -> list[CheckResult]:
    """Validate every recurrence, boundary, and divisibility identity.

    Returns one pass/fail result per identity; a failure carries the first
    counterexample.  Identities are only evaluated at index points where all
    referenced entries exist (terms with a zero coefficient are dropped
    before their entry is fetched).
    """
    if max_n < 2:
        raise ValueError(f"need max_n >= 2, got {max_n}")
    g = build_table(ell, max_n, FLAVOR_G)
    d = build_table(ell, max_n, FLAVOR_D)
    params = {"max_n": max_n}
    results = []

    def add(check, table, points, lhs_rhs):
        ce = _scan(table, points, lhs_rhs)
        status = "pass" if ce is None else "fail"
        results.append(CheckResult(check, ell, None, params, status, ce))

    def term(coef, table, n, m):
        return coef * table.entry(n, m) if coef else 0

    two_prev = [(n, m) for n in range(2, max_n + 1) for m in range(n)]
    add(
        "g_rec_two_prev_rows",
        g,
        two_prev,
        lambda t, n, m: (
            t.entry(n, m),
            (ell * n - 1) * t.entry(n - 1, m) + term(ell * (n - m - 1), t, n - 2, m),
        ),
    )
    add(
        "d_rec_two_prev_rows",
        d,
        two_prev,
        lambda t, n, m: (
            t.entry(n, m),
            (ell * n - 1) * t.entry(n - 1, m) + term(ell * (n - m - 1), t, n - 2, m),
        ),
    )

    diag = [(n, m) for n in range(1, max_n + 1) for m in range(1, n + 1)]
    add(
        "g_rec_prev_row_diag",
        g,
        diag,
        lambda t, n, m: (
            t.entry(n, m),
            term(ell * (n - m), t, n - 1, m) + ell * m * t.entry(n - 1, m - 1),
        ),
    )
    add(
        "d_rec_prev_row_diag",
        d,
        diag,
        lambda t, n, m: (
            t.entry(n, m),
            term(ell * (n - m), t, n - 1, m) + t.entry(n - 1, m - 1),
        ),
    )

    inner = [(n, m) for n in range(2, max_n + 1) for m in range(1, n)]
    add(
        "g_rec_three_term",
        g,
        inner,
        lambda t, n, m: (
            t.entry(n, m),
            ell * n * t.entry(n - 1, m) - ell * m * t.entry(n - 2, m - 1),
        ),
    )
    add(
        "d_rec_three_term",
        d,
        inner,
        lambda t, n, m: (
            t.entry(n, m) + t.entry(n - 2, m - 1),
            ell * n * t.entry(n - 1, m),
        ),
    )

    col0 = [(n, 0) for n in range(1, max_n + 1)]
    add(
        "d_rec_column0_parity",
        d,
        col0,
        lambda t, n, m: (t.entry(n, 0), ell * n * t.entry(n - 1, 0) + (-1) ** n),
    )

    boundary_ce = None
    expected = [
        ("g", 0, 0, 1),
        ("g", 1, 0, ell - 1),
        ("g", 1, 1, ell),
        ("d", 0, 0, 1),
        ("d", 1, 0, ell - 1),
        ("d", 1, 1, 1),
    ]
    for flavor, n, m, want in expected:
        got = (g if flavor == "g" else d).entry(n, m)
        if got != want:
            boundary_ce = {"flavor": flavor, "n": n, "m": m, "lhs": str(got), "rhs": str(want)}
            break
    results.append(
        CheckResult(
            "boundary_values",
            ell,
            None,
            params,
            "pass" if boundary_ce is None else "fail",
            boundary_ce,
        )
    )

    everywhere = [(n, m) for n in range(max_n + 1) for m in range(n + 1)]
    add(
        "g_equals_scaled_d",
        g,
        everywhere,
        lambda t, n, m: (
            t.entry(n, m),
            ell**m * math.factorial(m) * d.entry(n, m),
        ),
    )
    return results
