"""Exhaustive iteration over the colored groups and brute-force verification.

Elements are enumerated in a fixed order: underlying permutations
lexicographically, and for each permutation the color-by-value vector as a
base-``ell`` counter (leftmost digit most significant).  The stream can be
cut into contiguous index ranges, so counting reductions parallelize with an
exact integer merge and identical results at any worker count.

A budget guard refuses group sizes above ``DEFAULT_BUDGET`` elements unless a
larger budget is passed explicitly.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .core import ColoredPermutation, rotate_right
from .reporting import CheckResult
from .statistics import (
    CIRCULAR,
    LINEAR,
    SKEW_LINEAR,
    circular_successions,
    is_increasing_fixed,
    is_isolated_fixed,
    linear_successions,
    skew_linear_successions,
    succession_set,
)
from .tables import FLAVOR_D, FLAVOR_G, build_table, check_recurrences

DEFAULT_BUDGET = 100_000_000

# Below this many elements a parallel run is pure overhead; counts merge
# exactly either way, so results do not depend on the threshold.
_PARALLEL_THRESHOLD = 10_000

SUITES = ("t2", "t3", "c7", "l45", "t9", "t11", "e22", "e43", "rec")


class BudgetError(RuntimeError):
    """The requested enumeration exceeds the configured element budget."""


def group_size(ell: int, n: int) -> int:
    """Number of elements: ``ell^n * n!``."""
    if ell < 1 or n < 0:
        raise ValueError(f"need ell >= 1 and n >= 0, got ell={ell}, n={n}")
    return ell**n * math.factorial(n)


def _check_budget(ell: int, n: int, budget: int | None) -> int:
    limit = DEFAULT_BUDGET if budget is None else budget
    size = group_size(ell, n)
    if size > limit:
        raise BudgetError(
            f"group of size {size} exceeds the budget of {limit} elements"
        )
    return size


def _unrank_sigma(n: int, rank: int) -> list[int]:
    available = list(range(1, n + 1))
    out = []
    for radix in range(n, 0, -1):
        f = math.factorial(radix - 1)
        out.append(available.pop(rank // f))
        rank %= f
    return out


def _unrank_colors(ell: int, n: int, rank: int) -> list[int]:
    digits = [0] * n
    for j in range(n - 1, -1, -1):
        digits[j] = rank % ell
        rank //= ell
    return digits


def element_at(ell: int, n: int, index: int) -> ColoredPermutation:
    """The ``index``-th element (0-based) in enumeration order."""
    size = group_size(ell, n)
    if not 0 <= index < size:
        raise IndexError(f"index {index} out of range for group of size {size}")
    radix = ell**n
    sigma = _unrank_sigma(n, index // radix)
    colors = _unrank_colors(ell, n, index % radix)
    return ColoredPermutation(ell, tuple(sigma), tuple(colors))


def _next_sigma(sigma: list[int]) -> bool:
    """Advance to the lexicographic successor in place; False after the last."""
    n = len(sigma)
    i = n - 2
    while i >= 0 and sigma[i] >= sigma[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while sigma[j] <= sigma[i]:
        j -= 1
    sigma[i], sigma[j] = sigma[j], sigma[i]
    sigma[i + 1 :] = reversed(sigma[i + 1 :])
    return True


def _iter_raw(
    ell: int, n: int, start: int, stop: int
) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Yield ``(sigma, colors)`` for the contiguous index range [start, stop)."""
    if stop <= start:
        return
    radix = ell**n
    sigma = _unrank_sigma(n, start // radix)
    colors = _unrank_colors(ell, n, start % radix)
    for _ in range(stop - start):
        yield tuple(sigma), tuple(colors)
        j = n - 1
        while j >= 0 and colors[j] == ell - 1:
            colors[j] = 0
            j -= 1
        if j >= 0:
            colors[j] += 1
        elif not _next_sigma(sigma):
            return


def enumerate_group(
    ell: int, n: int, *, budget: int | None = None
) -> Iterator[ColoredPermutation]:
    """Every element exactly once, in the fixed enumeration order."""
    size = _check_budget(ell, n, budget)
    for sigma, colors in _iter_raw(ell, n, 0, size):
        yield ColoredPermutation(ell, sigma, colors)


def enumerate_range(
    ell: int, n: int, start: int, stop: int, *, budget: int | None = None
) -> Iterator[ColoredPermutation]:
    """The sub-stream with enumeration indices in ``[start, stop)``."""
    size = _check_budget(ell, n, budget)
    if not 0 <= start <= stop <= size:
        raise IndexError(f"range [{start}, {stop}) out of bounds for size {size}")
    for sigma, colors in _iter_raw(ell, n, start, stop):
        yield ColoredPermutation(ell, sigma, colors)


def partition_bounds(total: int, parts: int) -> list[tuple[int, int]]:
    """Split ``range(total)`` into ``parts`` contiguous, balanced ranges."""
    if parts < 1:
        raise ValueError(f"need at least one part, got {parts}")
    cuts = [total * j // parts for j in range(parts + 1)]
    return [(cuts[j], cuts[j + 1]) for j in range(parts)]


# -- counting reductions --------------------------------------------------------


@dataclass(frozen=True)
class CountDistribution:
    """Exact counts of elements by statistic value: ``counts[m]`` elements
    carry exactly ``m`` successions of the given kind."""

    ell: int
    n: int
    k: int
    kind: str
    counts: tuple[int, ...]

    def __post_init__(self):
        if sum(self.counts) != group_size(self.ell, self.n):
            raise ValueError("distribution does not cover the whole group")


def _stat_count(p: ColoredPermutation, k: int, kind: str) -> int:
    return len(succession_set(p, k, kind))


def _dist_task(args) -> list[int]:
    ell, n, k, kind, start, stop = args
    counts = [0] * (n + 1)
    for sigma, colors in _iter_raw(ell, n, start, stop):
        p = ColoredPermutation(ell, sigma, colors)
        counts[_stat_count(p, k, kind)] += 1
    return counts


def _dist_matrix_task(args) -> list[int]:
    ell, n, kind, start, stop = args
    width = n + 1
    flat = [0] * (width * width)
    for sigma, colors in _iter_raw(ell, n, start, stop):
        p = ColoredPermutation(ell, sigma, colors)
        lo = 0 if kind == CIRCULAR else 1
        for k in range(lo, n + 1):
            flat[k * width + _stat_count(p, k, kind)] += 1
    return flat


def _bounded_task(args) -> list[int]:
    ell, n, start, stop = args
    width = n + 1
    flat = [0] * (width * width)  # [k][max value of the k-succession set]
    for sigma, colors in _iter_raw(ell, n, start, stop):
        p = ColoredPermutation(ell, sigma, colors)
        for k in range(n + 1):
            vals = circular_successions(p, k).values
            flat[k * width + (max(vals) if vals else 0)] += 1
    return flat


def _family_task(args) -> list[int]:
    ell, n, family, start, stop = args
    pred = is_increasing_fixed if family == "increasing" else is_isolated_fixed
    counts = [0] * (n + 1)
    for sigma, colors in _iter_raw(ell, n, start, stop):
        p = ColoredPermutation(ell, sigma, colors)
        for m in range(n + 1):
            if pred(p, m):
                counts[m] += 1
    return counts


_TASKS = {
    "dist": _dist_task,
    "dist_matrix": _dist_matrix_task,
    "bounded": _bounded_task,
    "family": _family_task,
}


def _run_task(args) -> list[int]:
    name, rest = args
    return _TASKS[name](rest)


def _map_reduce(name: str, ell: int, n: int, extra: tuple, jobs: int,
                budget: int | None) -> list[int]:
    size = _check_budget(ell, n, budget)
    if jobs <= 1 or size < _PARALLEL_THRESHOLD:
        return _run_task((name, (ell, n, *extra, 0, size)))
    tasks = [
        (name, (ell, n, *extra, start, stop))
        for start, stop in partition_bounds(size, jobs)
    ]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        vectors = list(pool.map(_run_task, tasks))
    merged = vectors[0]
    for vec in vectors[1:]:
        merged = [a + b for a, b in zip(merged, vec)]
    return merged


def distribution(
    ell: int,
    n: int,
    k: int,
    kind: str,
    *,
    jobs: int = 1,
    budget: int | None = None,
) -> CountDistribution:
    """Exact distribution of one succession statistic over the whole group."""
    if kind not in (CIRCULAR, LINEAR, SKEW_LINEAR):
        raise ValueError(f"unknown statistic kind {kind!r}")
    if kind == CIRCULAR and k < 0:
        raise ValueError(f"circular statistic needs k >= 0, got {k}")
    if kind != CIRCULAR and k < 1:
        raise ValueError(f"{kind} statistic needs k >= 1, got {k}")
    counts = _map_reduce("dist", ell, n, (k, kind), jobs, budget)
    return CountDistribution(ell, n, k, kind, tuple(counts))


def distribution_matrix(
    ell: int, n: int, kind: str, *, jobs: int = 1, budget: int | None = None
) -> list[tuple[int, ...]]:
    """Distributions for every ``k`` at once: ``matrix[k][m]`` exact counts.

    Row ``k = 0`` of a linear/skew matrix is all zeros (undefined there).
    """
    flat = _map_reduce("dist_matrix", ell, n, (kind,), jobs, budget)
    width = n + 1
    return [tuple(flat[k * width : (k + 1) * width]) for k in range(width)]


def bounded_matrix(
    ell: int, n: int, *, jobs: int = 1, budget: int | None = None
) -> list[tuple[int, ...]]:
    """``matrix[k][v]``: elements whose largest k-circular succession is ``v``
    (``v = 0`` meaning none)."""
    flat = _map_reduce("bounded", ell, n, (), jobs, budget)
    width = n + 1
    return [tuple(flat[k * width : (k + 1) * width]) for k in range(width)]


def family_counts(
    ell: int, n: int, family: str, *, jobs: int = 1, budget: int | None = None
) -> tuple[int, ...]:
    """Counts of m-increasing-fixed or m-isolated-fixed elements per ``m``."""
    if family not in ("increasing", "isolated"):
        raise ValueError(f"unknown family {family!r}")
    return tuple(_map_reduce("family", ell, n, (family,), jobs, budget))


# -- verification suites -----------------------------------------------------------


def _suite_t2(ell, n, jobs, budget):
    """Elements with k-successions bounded by m are counted by g[n][m], all k <= m."""
    g = build_table(ell, n, FLAVOR_G)
    matrix = bounded_matrix(ell, n, jobs=jobs, budget=budget)
    for k in range(n + 1):
        prefix = 0
        for m in range(n + 1):
            prefix += matrix[k][m]
            if k <= m and prefix != g.entry(n, m):
                return {
                    "k": k,
                    "m": m,
                    "count": str(prefix),
                    "expected": str(g.entry(n, m)),
                }
    return None


def _three_term_rhs(cur, prev, k, m):
    rhs = cur[k][m] + prev[k][m]
    if m >= 1:
        rhs -= prev[k][m - 1]
    return rhs


def _suite_t3(ell, n, jobs, budget):
    """Circular counts: c[n+1][k+1][m] = c[n+1][k][m] + c[n][k][m] - c[n][k][m-1]."""
    cur = distribution_matrix(ell, n + 1, CIRCULAR, jobs=jobs, budget=budget)
    prev = distribution_matrix(ell, n, CIRCULAR, jobs=jobs, budget=budget)
    prev = [row + (0,) for row in prev]  # pad m = n+1 with zero
    for k in range(n + 1):
        for m in range(n + 2):
            if cur[k + 1][m] != _three_term_rhs(cur, prev, k, m):
                return {
                    "k": k,
                    "m": m,
                    "lhs": str(cur[k + 1][m]),
                    "rhs": str(_three_term_rhs(cur, prev, k, m)),
                }
    return None


def _suite_c7(ell, n, jobs, budget):
    """Linear counts obey the same three-term relation as circular ones."""
    lin = distribution_matrix(ell, n + 1, LINEAR, jobs=jobs, budget=budget)
    cur = distribution_matrix(ell, n + 1, CIRCULAR, jobs=jobs, budget=budget)
    prev = distribution_matrix(ell, n, CIRCULAR, jobs=jobs, budget=budget)
    prev = [row + (0,) for row in prev]
    for k in range(n + 1):
        for m in range(n + 2):
            if lin[k + 1][m] != _three_term_rhs(cur, prev, k, m):
                return {
                    "k": k,
                    "m": m,
                    "lhs": str(lin[k + 1][m]),
                    "rhs": str(_three_term_rhs(cur, prev, k, m)),
                }
    return None


def _suite_l45(ell, n, jobs, budget):
    """c[k][m] = C(n-k, m) * g[n-m][k] for k <= n - m."""
    g = build_table(ell, n, FLAVOR_G)
    matrix = distribution_matrix(ell, n, CIRCULAR, jobs=jobs, budget=budget)
    for m in range(n + 1):
        for k in range(n - m + 1):
            expected = math.comb(n - k, m) * g.entry(n - m, k)
            if matrix[k][m] != expected:
                return {
                    "k": k,
                    "m": m,
                    "count": str(matrix[k][m]),
                    "expected": str(expected),
                }
    return None


def _suite_family(family):
    def run(ell, n, jobs, budget):
        d = build_table(ell, n, FLAVOR_D)
        counts = family_counts(ell, n, family, jobs=jobs, budget=budget)
        for m in range(n + 1):
            if counts[m] != d.entry(n, m):
                return {
                    "m": m,
                    "count": str(counts[m]),
                    "expected": str(d.entry(n, m)),
                }
        return None

    return run


def _suite_e22(ell, n, jobs, budget):
    """Skew linear sets equal linear sets, possibly plus the boundary value k."""
    _check_budget(ell, n, budget)
    for index, p in enumerate(enumerate_group(ell, n, budget=budget)):
        for k in range(1, n + 1):
            expected = set(linear_successions(p, k).values)
            if p.sigma and p.sigma[0] == k and p.colors[k - 1] == 0:
                expected.add(k)
            if set(skew_linear_successions(p, k).values) != expected:
                return {"index": index, "perm": str(p), "k": k}
    return None


def _suite_e43(ell, n, jobs, budget):
    """Shifting k by one matches rotating the word right, up to the value k+1."""
    _check_budget(ell, n, budget)
    if n == 0:
        return None
    for index, p in enumerate(enumerate_group(ell, n, budget=budget)):
        rot = rotate_right(p)
        for k in range(n + 1):
            expected = set(circular_successions(rot, k).values)
            last = p.image(n)
            if last.value == k + 1 and last.color == 0:
                expected.discard(k + 1)
            if set(circular_successions(p, k + 1).values) != expected:
                return {"index": index, "perm": str(p), "k": k}
    return None


_ENUM_SUITES = {
    "t2": (_suite_t2, 0),
    "t3": (_suite_t3, 1),  # needs group size n+1: run for n <= max_n - 1
    "c7": (_suite_c7, 1),
    "l45": (_suite_l45, 0),
    "t9": (_suite_family("increasing"), 0),
    "t11": (_suite_family("isolated"), 0),
    "e22": (_suite_e22, 0),
    "e43": (_suite_e43, 0),
}


def verify_suite(
    suite: str,
    max_ell: int,
    max_n: int,
    *,
    jobs: int = 1,
    budget: int | None = None,
) -> list[CheckResult]:
    """Run one named check suite (or ``all``) over ``ell <= max_ell``,
    enumerating groups of size up to ``max_n`` letters.

    Returns one result per (check, ell, n) instance, in a fixed order that
    does not depend on ``jobs``.
    """
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    names = list(SUITES) if suite == "all" else [suite]
    results: list[CheckResult] = []
    for name in names:
        if name == "rec":
            for ell in range(1, max_ell + 1):
                results.extend(check_recurrences(ell, max(2, max_n)))
            continue
        run, shrink = _ENUM_SUITES[name]
        for ell in range(1, max_ell + 1):
            for n in range(0, max_n + 1 - shrink):
                if name in ("t3", "c7") and n == 0:
                    continue
                ce = run(ell, n, jobs, budget)
                results.append(
                    CheckResult(
                        name,
                        ell,
                        n,
                        {"max_ell": max_ell, "max_n": max_n},
                        "pass" if ce is None else "fail",
                        ce,
                    )
                )
    return results
