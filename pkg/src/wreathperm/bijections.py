"""Explicit bijections between succession-constrained families.

Every map here is a partial function with an explicit inverse; calling one
outside its stated domain raises :class:`~wreathperm.core.DomainError`.  The
pairs, with the counting identity each one witnesses (``g``/``d`` are the
difference tables of :mod:`wreathperm.tables`, sets as in
:mod:`wreathperm.statistics`):

* ``remove_max_succession`` / ``insert_max_succession``: elements whose
  largest k-circular succession is exactly ``m+1`` correspond to elements one
  size down with successions bounded by ``m`` (the difference-table step).
* ``foata`` / ``foata_inverse``: the classical cycles-to-word map on plain
  permutations, arranged so k-circular and k-linear successions swap.
* ``colored_foata`` / ``colored_foata_inverse``: the colored extension, with
  colors propagated multiplicatively along each cycle from its largest value;
  transports k-circular to k-linear successions for every k at once.
* ``succession_decompose`` / ``succession_compose``: peel off all k-circular
  successions, leaving a succession-free core plus the set of positions
  (shows the count with ``m`` successions is ``C(n-k, m) * g[n-m][k]``).
* ``prefix_action``: the group on ``[m]`` acting on permutations whose fixed
  points lie in ``[m]`` by permuting the first ``m`` letters.
* ``isolated_to_increasing`` / ``increasing_to_isolated``: the two
  interpretations of the ``d`` table entry at ``(n, m)``.
* ``class_signature`` / ``signature_insert`` / ``class_representative``:
  the equivalence classes of the prefix action, each of size ``ell^m * m!``.
* ``isolate_forward`` / ``isolate_inverse``:
  ``d[n][m-1] + d[n-1][m-1] = ell*m*d[n][m]``.
* ``derangement_insert`` / ``derangement_remove``:
  ``ell*n*d[n-1][0] = d[n][0] - (-1)^n``.
* ``isolated_insert`` / ``isolated_remove``:
  ``d[n][m] + d[n-2][m-1] = ell*n*d[n-1][m]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import ColoredPermutation, ColoredSymbol, DomainError, sigma_cycles
from .statistics import (
    circular_successions,
    fixed_points,
    is_derangement,
    is_increasing_fixed,
    is_isolated_fixed,
)

# -- shared helpers -----------------------------------------------------------


def _from_word(symbols: Sequence[ColoredSymbol], ell: int) -> ColoredPermutation:
    n = len(symbols)
    sigma = [0] * n
    colors = [0] * n
    for i, sym in enumerate(symbols):
        sigma[i] = sym.value
        colors[sym.value - 1] = sym.color
    return ColoredPermutation(ell, tuple(sigma), tuple(colors))


class _Surgeon:
    """Mutable successor/predecessor maps over values, for cycle splicing."""

    __slots__ = ("ell", "succ", "pred", "color")

    def __init__(self, p: ColoredPermutation):
        self.ell = p.ell
        self.succ: dict[int, int] = {}
        self.pred: dict[int, int] = {}
        self.color: dict[int, int] = {}
        for i, v in enumerate(p.sigma, start=1):
            self.succ[i] = v
            self.pred[v] = i
        for v in range(1, p.n + 1):
            self.color[v] = p.colors[v - 1]

    def cycle_values(self, v: int) -> list[int]:
        out = [v]
        x = self.succ[v]
        while x != v:
            out.append(x)
            x = self.succ[x]
        return out

    def cycle_len(self, v: int) -> int:
        return len(self.cycle_values(v))

    def delete_letter(self, x: int) -> None:
        s = self.succ.pop(x)
        p = self.pred.pop(x)
        del self.color[x]
        if s != x:
            self.succ[p] = s
            self.pred[s] = p

    def insert_after(self, a: int, x: int, color: int) -> None:
        s = self.succ[a]
        self.succ[a] = x
        self.pred[x] = a
        self.succ[x] = s
        self.pred[s] = x
        self.color[x] = color

    def insert_before(self, b: int, x: int, color: int) -> None:
        self.insert_after(self.pred[b], x, color)

    def insert_chain_before(self, b: int, letters: Iterable[tuple[int, int]]) -> None:
        prev = self.pred[b]
        for v, c in letters:
            self.succ[prev] = v
            self.pred[v] = prev
            self.color[v] = c
            prev = v
        self.succ[prev] = b
        self.pred[b] = prev

    def new_cycle(self, letters: Sequence[tuple[int, int]]) -> None:
        vals = [v for v, _ in letters]
        for v, c in letters:
            self.color[v] = c
        for a, b in zip(vals, vals[1:] + vals[:1]):
            self.succ[a] = b
            self.pred[b] = a

    def to_permutation(self, n: int) -> ColoredPermutation:
        if set(self.succ) != set(range(1, n + 1)):
            raise DomainError(f"support after surgery is not [1..{n}]")
        sigma = tuple(self.succ[i] for i in range(1, n + 1))
        colors = tuple(self.color[v] for v in range(1, n + 1))
        return ColoredPermutation(self.ell, sigma, colors)


# -- largest-succession removal ------------------------------------------------


def remove_max_succession(
    p: ColoredPermutation, m: int, k: int
) -> ColoredPermutation:
    """Delete the value ``m+1`` sitting as the largest k-circular succession.

    Requires the largest k-circular succession of ``p`` to be exactly
    ``m+1``; the value is removed from position ``m+1-k`` and every larger
    value shifts down by one.  The result, one size smaller, has all its
    k-circular successions bounded by ``m``.
    """
    if not 0 <= k <= m:
        raise DomainError(f"need 0 <= k <= m, got k={k}, m={m}")
    if m + 1 > p.n:
        raise DomainError(f"need m + 1 <= n, got m={m}, n={p.n}")
    succ = circular_successions(p, k).values
    if not succ or max(succ) != m + 1:
        raise DomainError(
            f"largest {k}-circular succession must be exactly {m + 1}"
        )
    word = list(p.one_line())
    removed = word.pop(m - k)
    if removed != ColoredSymbol(m + 1, 0):
        raise DomainError(f"position {m + 1 - k} does not hold the value {m + 1}")
    out = [
        sym if sym.value < m + 1 else ColoredSymbol(sym.value - 1, sym.color)
        for sym in word
    ]
    return _from_word(out, p.ell)


def insert_max_succession(
    p: ColoredPermutation, m: int, k: int
) -> ColoredPermutation:
    """Insert ``m+1`` at position ``m+1-k``, inverting ``remove_max_succession``.

    Requires every k-circular succession of ``p`` to be bounded by ``m`` and
    ``m <= n``; values above ``m`` shift up by one to make room.
    """
    if not 0 <= k <= m:
        raise DomainError(f"need 0 <= k <= m, got k={k}, m={m}")
    if m > p.n:
        raise DomainError(f"need m <= n, got m={m}, n={p.n}")
    if any(v > m for v in circular_successions(p, k).values):
        raise DomainError(f"all {k}-circular successions must lie in [{m}]")
    word = [
        sym if sym.value <= m else ColoredSymbol(sym.value + 1, sym.color)
        for sym in p.one_line()
    ]
    word.insert(m - k, ColoredSymbol(m + 1, 0))
    return _from_word(word, p.ell)


# -- cycles-to-word maps --------------------------------------------------------


def _foata_segments(sigma: Sequence[int]) -> list[list[int]]:
    segments = []
    for cyc in sigma_cycles(sigma):
        t = cyc.index(max(cyc))
        segments.append(cyc[t + 1 :] + cyc[: t + 1])
    segments.sort(key=lambda seg: -seg[-1])
    return segments


def _check_permutation(word: Sequence[int]) -> None:
    if sorted(word) != list(range(1, len(word) + 1)):
        raise ValueError(f"not a permutation of 1..{len(word)}: {word}")


def foata(sigma: Sequence[int]) -> tuple[int, ...]:
    """Cycles-to-word map on plain permutations.

    Write each cycle with its maximum last, list cycles by decreasing maxima,
    erase the parentheses.  Swaps k-circular with k-linear successions.
    """
    _check_permutation(sigma)
    return tuple(v for seg in _foata_segments(sigma) for v in seg)


def foata_inverse(word: Sequence[int]) -> tuple[int, ...]:
    """Cut the word after each right-to-left maximum; each block is a cycle."""
    _check_permutation(word)
    n = len(word)
    sigma = [0] * n
    block: list[int] = []
    best = 0
    suffix_max = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_max[i] = max(word[i], suffix_max[i + 1])
    for i, v in enumerate(word):
        block.append(v)
        if v == suffix_max[i]:
            for a, b in zip(block, block[1:] + block[:1]):
                sigma[a - 1] = b
            block = []
    return tuple(sigma)


def colored_foata(p: ColoredPermutation) -> ColoredPermutation:
    """Colored cycles-to-word map.

    The underlying word is ``foata`` of the underlying permutation; along
    each cycle, read from just after its maximum, the first letter keeps its
    color and each later letter wears the running product (sum of exponents)
    of the colors seen so far.  Transports k-circular to k-linear successions
    for every ``k >= 1`` simultaneously.
    """
    n = p.n
    colors = [0] * n
    word = []
    for seg in _foata_segments(p.sigma):
        prev = None
        for x in seg:
            if prev is None:
                colors[x - 1] = p.colors[x - 1]
            else:
                colors[x - 1] = (colors[prev - 1] + p.colors[x - 1]) % p.ell
            prev = x
        word.extend(seg)
    return ColoredPermutation(p.ell, tuple(word), tuple(colors))


def colored_foata_inverse(p2: ColoredPermutation) -> ColoredPermutation:
    """Invert :func:`colored_foata`: word back to cycles, color products undone."""
    sigma = foata_inverse(p2.sigma)
    n = p2.n
    colors = [0] * n
    for seg in _foata_segments(sigma):
        prev = None
        for x in seg:
            if prev is None:
                colors[x - 1] = p2.colors[x - 1]
            else:
                colors[x - 1] = (p2.colors[x - 1] - p2.colors[prev - 1]) % p2.ell
            prev = x
    return ColoredPermutation(p2.ell, sigma, tuple(colors))


# -- succession peeling ----------------------------------------------------------


@dataclass(frozen=True)
class SuccessionDecomposition:
    """Positions of the k-circular successions plus the succession-free core."""

    positions: tuple[int, ...]
    reduced: ColoredPermutation


def succession_decompose(p: ColoredPermutation, k: int) -> SuccessionDecomposition:
    """Remove every k-circular succession, largest position first."""
    if not 0 <= k <= p.n:
        raise DomainError(f"need 0 <= k <= n, got k={k}, n={p.n}")
    positions = tuple(
        i
        for i, v in enumerate(p.sigma, start=1)
        if v == i + k and p.colors[v - 1] == 0
    )
    word = list(p.one_line())
    for i in reversed(positions):
        removed = word.pop(i - 1)
        assert removed == ColoredSymbol(i + k, 0)
        word = [
            sym if sym.value < i + k else ColoredSymbol(sym.value - 1, sym.color)
            for sym in word
        ]
    return SuccessionDecomposition(positions, _from_word(word, p.ell))


def succession_compose(
    positions: Sequence[int], reduced: ColoredPermutation, k: int
) -> ColoredPermutation:
    """Re-insert successions at the given positions, smallest first."""
    n = reduced.n + len(positions)
    if not 0 <= k <= n:
        raise DomainError(f"need 0 <= k <= n, got k={k}, n={n}")
    pos = list(positions)
    if pos != sorted(set(pos)) or (pos and not 1 <= pos[0] <= pos[-1] <= n - k):
        raise DomainError(f"positions must be distinct, increasing, within [1, {n - k}]")
    if k <= reduced.n and circular_successions(reduced, k).values:
        raise DomainError("the core must have no k-circular succession")
    word = list(reduced.one_line())
    for i in pos:
        word = [
            sym if sym.value < i + k else ColoredSymbol(sym.value + 1, sym.color)
            for sym in word
        ]
        word.insert(i - 1, ColoredSymbol(i + k, 0))
    return _from_word(word, reduced.ell)


# -- prefix action and its classes ------------------------------------------------


def prefix_action(tau: ColoredPermutation, p: ColoredPermutation) -> ColoredPermutation:
    """Act by ``tau`` (an element on ``[m]``) on the first ``m`` letters of ``p``.

    Position ``i <= m`` of the result holds ``p`` applied to the symbol
    ``tau^{-1}(i)``; later letters are untouched.  Defined for ``p`` whose
    fixed points lie in ``[m]``, and stays inside that family.
    """
    m = tau.n
    if tau.ell != p.ell:
        raise DomainError("color counts differ")
    if m > p.n:
        raise DomainError(f"acting group size {m} exceeds n={p.n}")
    if any(v > m for v in fixed_points(p)):
        raise DomainError(f"fixed points must lie in [{m}]")
    tinv = tau.inverse()
    word = [p.apply(tinv.image(i)) for i in range(1, m + 1)]
    word.extend(p.image(i) for i in range(m + 1, p.n + 1))
    return _from_word(word, p.ell)


@dataclass(frozen=True)
class ClassSignature:
    """Invariant of the prefix-action classes.

    ``words[i-1]`` is the run of letters strictly between ``i`` and the next
    value ``<= m`` in the cycle of ``i``; ``omega`` holds the cycles that
    avoid ``[m]`` entirely, in canonical form.
    """

    ell: int
    n: int
    m: int
    words: tuple[tuple[ColoredSymbol, ...], ...]
    omega: tuple[tuple[ColoredSymbol, ...], ...]


def class_signature(p: ColoredPermutation, m: int) -> ClassSignature:
    if not 0 <= m <= p.n:
        raise DomainError(f"need 0 <= m <= n, got m={m}, n={p.n}")
    if any(v > m for v in fixed_points(p)):
        raise DomainError(f"fixed points must lie in [{m}]")
    words = []
    for i in range(1, m + 1):
        w = []
        x = p.sigma[i - 1]
        while x > m:
            w.append(ColoredSymbol(x, p.colors[x - 1]))
            x = p.sigma[x - 1]
        words.append(tuple(w))
    omega = tuple(
        cyc for cyc in p.cycles() if all(sym.value > m for sym in cyc)
    )
    return ClassSignature(p.ell, p.n, m, tuple(words), omega)


def class_core(p: ColoredPermutation, m: int) -> ColoredPermutation:
    """The element on ``[m]`` left after erasing the signature's words and cycles."""
    if not 0 <= m <= p.n:
        raise DomainError(f"need 0 <= m <= n, got m={m}, n={p.n}")
    sigma = []
    for i in range(1, m + 1):
        x = p.sigma[i - 1]
        while x > m:
            x = p.sigma[x - 1]
        sigma.append(x)
    return ColoredPermutation(p.ell, tuple(sigma), p.colors[:m])


def signature_insert(tau: ColoredPermutation, sig: ClassSignature) -> ColoredPermutation:
    """Graft the signature's words onto ``tau``'s cycles and append ``omega``."""
    if tau.ell != sig.ell or tau.n != sig.m:
        raise DomainError(f"need an element on [{sig.m}] with {sig.ell} colors")
    cycles: list[list[ColoredSymbol]] = []
    for cyc in tau.cycles():
        letters: list[ColoredSymbol] = []
        for sym in cyc:
            letters.append(sym)
            letters.extend(sig.words[sym.value - 1])
        cycles.append(letters)
    cycles.extend(list(c) for c in sig.omega)
    return ColoredPermutation.from_cycles(cycles, sig.ell, sig.n)


def class_representative(p: ColoredPermutation, m: int) -> ColoredPermutation:
    """Canonical member of ``p``'s prefix-action class (identity core)."""
    return signature_insert(
        ColoredPermutation.identity(p.ell, m), class_signature(p, m)
    )


# -- isolated <-> increasing ----------------------------------------------------


def isolated_to_increasing(p: ColoredPermutation, m: int) -> ColoredPermutation:
    """Sort the first ``m`` letters of an m-isolated-fixed element.

    The first ``m`` values of the word are rearranged increasingly, the tail
    is untouched, and for each ``i <= m`` the colors of ``i`` and of its old
    image swap (both swaps land on color 0 where required).  The result is
    m-increasing-fixed.
    """
    if not is_isolated_fixed(p, m):
        raise DomainError(f"input is not {m}-isolated-fixed")
    sigma = sorted(p.sigma[:m]) + list(p.sigma[m:])
    colors = list(p.colors)
    for i in range(m):
        colors[p.sigma[i] - 1] = 0
    for i in range(m):
        colors[i] = p.colors[p.sigma[i] - 1]
    return ColoredPermutation(p.ell, tuple(sigma), tuple(colors))


def increasing_to_isolated(p2: ColoredPermutation, m: int) -> ColoredPermutation:
    """Invert :func:`isolated_to_increasing`.

    For each ``i <= m`` the cycle through ``i`` is rebuilt by walking
    backwards from ``i`` until the first value that is an image of the sorted
    prefix; cycles that avoid those walks are kept as they are.
    """
    if not is_increasing_fixed(p2, m):
        raise DomainError(f"input is not {m}-increasing-fixed")
    n = p2.n
    heads_of = p2.sigma[:m]
    targets = set(heads_of)
    inv = p2.sigma_inverse()
    sigma = [0] * n
    consumed: set[int] = set()
    heads = {}
    for i in range(1, m + 1):
        chain = [i]
        x = i
        while x not in targets:
            x = inv[x - 1]
            chain.append(x)
        cyc = list(reversed(chain))
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            sigma[a - 1] = b
        heads[i] = chain[-1]
        for v in chain:
            if v in consumed:
                raise DomainError("input is not an increasing rearrangement image")
            consumed.add(v)
    for cyc in sigma_cycles(p2.sigma):
        if consumed.isdisjoint(cyc):
            for v in cyc:
                sigma[v - 1] = p2.sigma[v - 1]
            consumed.update(cyc)
    if len(consumed) != n:
        raise DomainError("input is not an increasing rearrangement image")
    colors = list(p2.colors)
    for i in range(1, m + 1):
        colors[heads[i] - 1] = p2.colors[i - 1]
    for i in range(1, m + 1):
        colors[i - 1] = 0
    return ColoredPermutation(p2.ell, tuple(sigma), tuple(colors))


# -- the three counting recurrences, realized bijectively --------------------------


def isolate_forward(
    p: ColoredPermutation, m: int, n: int
) -> tuple[int, int, ColoredPermutation]:
    """Make ``m`` isolated: map an (m-1)-isolated-fixed element of size
    ``n-1`` or ``n`` to ``(color, anchor, q)`` with ``q`` m-isolated-fixed of
    size ``n``.

    Size ``n-1`` inputs shift their values at or above ``m`` up and gain the
    fixed point ``m`` (color 0, anchor ``m``).  Size ``n`` inputs cut the
    cycle through ``m`` at the smallest value ``alpha`` of that cycle: the
    arc from ``m`` up to ``alpha`` becomes its own cycle, ``m`` loses its
    color (returned as ``color``), and ``alpha`` is the anchor.
    """
    if not 1 <= m <= n:
        raise DomainError(f"need 1 <= m <= n, got m={m}, n={n}")
    if p.n == n - 1:
        if not is_isolated_fixed(p, m - 1):
            raise DomainError(f"input is not {m - 1}-isolated-fixed")
        sigma = [0] * n
        colors = [0] * n

        def up(v: int) -> int:
            return v if v < m else v + 1

        for i in range(1, n):
            sigma[up(i) - 1] = up(p.sigma[i - 1])
        for v in range(1, n):
            colors[up(v) - 1] = p.colors[v - 1]
        sigma[m - 1] = m
        colors[m - 1] = 0
        return 0, m, ColoredPermutation(p.ell, tuple(sigma), tuple(colors))
    if p.n != n:
        raise DomainError(f"input size must be {n - 1} or {n}, got {p.n}")
    if not is_isolated_fixed(p, m - 1):
        raise DomainError(f"input is not {m - 1}-isolated-fixed")
    s = _Surgeon(p)
    cyc = s.cycle_values(m)
    alpha = min(cyc)
    eps = p.colors[m - 1]
    if alpha == m:
        colors = list(p.colors)
        colors[m - 1] = 0
        return eps, m, ColoredPermutation(p.ell, p.sigma, tuple(colors))
    chain = []
    x = m
    while x != alpha:
        chain.append(x)
        x = s.succ[x]
    letters = [(m, 0)] + [(v, p.colors[v - 1]) for v in chain[1:]]
    for v in chain:
        s.delete_letter(v)
    s.new_cycle(letters)
    return eps, alpha, s.to_permutation(n)


def isolate_inverse(
    eps: int, alpha: int, p2: ColoredPermutation, m: int
) -> ColoredPermutation:
    """Invert :func:`isolate_forward` given the returned ``(color, anchor)``."""
    n = p2.n
    if not 1 <= m <= n:
        raise DomainError(f"need 1 <= m <= n, got m={m}, n={n}")
    if not 1 <= alpha <= m:
        raise DomainError(f"anchor must lie in [1, {m}], got {alpha}")
    if not 0 <= eps < p2.ell:
        raise DomainError(f"color must lie in [0, {p2.ell}), got {eps}")
    if not is_isolated_fixed(p2, m):
        raise DomainError(f"image is not {m}-isolated-fixed")
    if alpha == m and eps == 0 and p2.sigma[m - 1] == m:
        sigma = [0] * (n - 1)
        colors = [0] * (n - 1)

        def down(v: int) -> int:
            return v if v < m else v - 1

        for i in range(1, n + 1):
            if i != m:
                sigma[down(i) - 1] = down(p2.sigma[i - 1])
        for v in range(1, n + 1):
            if v != m:
                colors[down(v) - 1] = p2.colors[v - 1]
        return ColoredPermutation(p2.ell, tuple(sigma), tuple(colors))
    if alpha == m and eps == 0:
        return p2
    if alpha == m:
        colors = list(p2.colors)
        colors[m - 1] = eps
        return ColoredPermutation(p2.ell, p2.sigma, tuple(colors))
    s = _Surgeon(p2)
    chain = s.cycle_values(m)
    letters = [(m, eps)] + [(v, p2.colors[v - 1]) for v in chain[1:]]
    for v in chain:
        s.delete_letter(v)
    s.insert_chain_before(alpha, letters)
    return s.to_permutation(n)


def all_transpositions(ell: int, n: int) -> ColoredPermutation:
    """The uncolored product ``(1 2)(3 4)...(n-1 n)``; ``n`` must be even."""
    if n % 2:
        raise ValueError(f"defined only for even n, got {n}")
    sigma = []
    for t in range(1, n, 2):
        sigma += [t + 1, t]
    return ColoredPermutation(ell, tuple(sigma), (0,) * n)


def _first_free_pair(p: ColoredPermutation) -> int:
    """Smallest odd ``t`` such that ``(t, t+1)`` is not an uncolored 2-cycle."""
    t = 1
    while (
        t + 1 <= p.n
        and p.sigma[t - 1] == t + 1
        and p.sigma[t] == t
        and p.colors[t - 1] == 0
        and p.colors[t] == 0
    ):
        t += 2
    if t > p.n:
        raise DomainError("every adjacent pair is a plain 2-cycle")
    return t


def derangement_insert(
    eps: int, k: int, p: ColoredPermutation
) -> ColoredPermutation:
    """Insert the new largest value ``n = p.n + 1`` into a derangement.

    For anchors ``k < n`` the letter ``n`` with color ``eps`` slots in right
    after ``k``; for ``k = n`` with ``eps != 0`` it becomes its own colored
    cycle.  For ``k = n`` with color 0 the slack is absorbed at the first
    adjacent pair ``(t, t+1)`` that is not a plain 2-cycle, by a case split
    on the color and cycle of ``t``.  One input is excluded when ``n`` is
    odd: color 0, anchor ``n``, on the all-2-cycles derangement.
    """
    n = p.n + 1
    if not 0 <= eps < p.ell:
        raise DomainError(f"color must lie in [0, {p.ell}), got {eps}")
    if not 1 <= k <= n:
        raise DomainError(f"anchor must lie in [1, {n}], got {k}")
    if not is_derangement(p):
        raise DomainError("input must be a derangement")
    if (
        n % 2 == 1
        and eps == 0
        and k == n
        and p == all_transpositions(p.ell, n - 1)
    ):
        raise DomainError("excluded input: color 0, anchor n, all-2-cycles derangement")
    s = _Surgeon(p)
    if k < n:
        s.insert_after(k, n, eps)
        return s.to_permutation(n)
    if eps != 0:
        s.new_cycle([(n, eps)])
        return s.to_permutation(n)
    t = _first_free_pair(p)
    u = t + 1
    if p.colors[t - 1] == 0:
        if p.sigma[t - 1] == u:
            s.delete_letter(t)
            s.new_cycle([(n, 0), (t, 0)])
        elif s.cycle_len(t) == 2:
            b = p.sigma[t - 1]
            lam = p.colors[b - 1]
            s.delete_letter(t)
            s.delete_letter(b)
            s.insert_before(u, t, 0)
            s.new_cycle([(n, lam), (b, 0)])
        else:
            a = s.pred[t]
            xi = p.colors[a - 1]
            s.delete_letter(a)
            s.new_cycle([(n, xi), (a, 0)])
    else:
        if s.cycle_len(t) == 1:
            gam = p.colors[t - 1]
            s.delete_letter(t)
            s.new_cycle([(n, gam), (t, 0)])
        else:
            a = s.pred[t]
            g2 = p.colors[a - 1]
            s.delete_letter(a)
            s.new_cycle([(n, g2), (a, 0)])
    return s.to_permutation(n)


def derangement_remove(
    p2: ColoredPermutation,
) -> tuple[int, int, ColoredPermutation]:
    """Invert :func:`derangement_insert`: recover ``(color, anchor, smaller)``.

    Excluded image when ``n`` is even: the all-2-cycles derangement.
    """
    n = p2.n
    if n < 1:
        raise DomainError("need n >= 1")
    if not is_derangement(p2):
        raise DomainError("image must be a derangement")
    if n % 2 == 0 and p2 == all_transpositions(p2.ell, n):
        raise DomainError("excluded image: all-2-cycles derangement")
    s = _Surgeon(p2)
    c = s.cycle_len(n)
    rho = p2.colors[n - 1]
    b = p2.sigma[n - 1]
    if c >= 3 or c == 1 or p2.colors[b - 1] != 0:
        k = s.pred[n]
        s.delete_letter(n)
        return rho, k, s.to_permutation(n - 1)
    t = _first_free_pair(p2)
    u = t + 1
    if b == t and rho == 0:
        s.delete_letter(n)
        s.delete_letter(t)
        s.insert_before(u, t, 0)
    elif b == t:
        s.delete_letter(n)
        s.color[t] = rho
    elif p2.colors[t - 1] == 0 and p2.sigma[t - 1] == u:
        s.delete_letter(t)
        s.delete_letter(n)
        s.delete_letter(b)
        s.new_cycle([(b, rho), (t, 0)])
    else:
        # Reached both when t's successor is not u and when t is colored; a
        # colored t can sit right before u without (t, u) being a free pair,
        # and such images must re-insert the displaced letter before t.
        s.delete_letter(n)
        s.delete_letter(b)
        s.insert_before(t, b, rho)
    return 0, n, s.to_permutation(n - 1)


def isolated_insert(
    rho: int, alpha: int, p: ColoredPermutation, m: int
) -> ColoredPermutation:
    """Insert the new largest value into an m-isolated-fixed element.

    From ``(color, anchor, p)`` with ``p`` of size ``n-1``: anchors below
    ``n`` splice the colored letter ``n`` in just before the anchor; anchor
    ``n`` with a color makes ``n`` a colored 1-cycle; anchor ``n`` with color
    0 either drops a fixed 1 and shifts everything down (two sizes smaller)
    or detaches the letter after 1 into a 2-cycle with ``n``.
    """
    n = p.n + 1
    if not 1 <= m <= n - 1:
        raise DomainError(f"need 1 <= m <= n - 1, got m={m}, n={n}")
    if not 0 <= rho < p.ell:
        raise DomainError(f"color must lie in [0, {p.ell}), got {rho}")
    if not 1 <= alpha <= n:
        raise DomainError(f"anchor must lie in [1, {n}], got {alpha}")
    if not is_isolated_fixed(p, m):
        raise DomainError(f"input is not {m}-isolated-fixed")
    if alpha == n and rho == 0 and p.sigma[0] == 1:
        sigma = tuple(v - 1 for v in p.sigma[1:])
        colors = p.colors[1:]
        return ColoredPermutation(p.ell, sigma, colors)
    if alpha == n and rho != 0:
        return ColoredPermutation(p.ell, p.sigma + (n,), p.colors + (rho,))
    s = _Surgeon(p)
    if alpha == n:
        b = p.sigma[0]
        gam = p.colors[b - 1]
        s.delete_letter(b)
        s.new_cycle([(n, gam), (b, 0)])
    else:
        s.insert_before(alpha, n, rho)
    return s.to_permutation(n)


def isolated_remove(
    p2: ColoredPermutation, m: int, n: int
) -> tuple[int, int, ColoredPermutation]:
    """Invert :func:`isolated_insert` for images of size ``n`` or ``n-2``."""
    if n < 2 or not 1 <= m <= n - 1:
        raise DomainError(f"need n >= 2 and 1 <= m <= n - 1, got m={m}, n={n}")
    if p2.n == n - 2:
        if not is_isolated_fixed(p2, m - 1):
            raise DomainError(f"image is not {m - 1}-isolated-fixed")
        sigma = (1,) + tuple(v + 1 for v in p2.sigma)
        colors = (0,) + p2.colors
        return 0, n, ColoredPermutation(p2.ell, sigma, colors)
    if p2.n != n:
        raise DomainError(f"image size must be {n} or {n - 2}, got {p2.n}")
    if not is_isolated_fixed(p2, m):
        raise DomainError(f"image is not {m}-isolated-fixed")
    s = _Surgeon(p2)
    c = s.cycle_len(n)
    b = p2.sigma[n - 1]
    rho = p2.colors[n - 1]
    if c == 1:
        s.delete_letter(n)
        return rho, n, s.to_permutation(n - 1)
    if c == 2 and p2.colors[b - 1] == 0 and b > m:
        s.delete_letter(n)
        s.delete_letter(b)
        s.insert_after(1, b, rho)
        return 0, n, s.to_permutation(n - 1)
    s.delete_letter(n)
    return rho, b, s.to_permutation(n - 1)
