"""Closed-form scheme parameters with exhaustive counting oracles.

Covers d-subset distance classes (intersection numbers and valencies),
the layers of the signed-subset lattice behind a crosspolytope (layer
sizes and valencies), and sign words under Hamming distance. Binomials
use arbitrary-precision integers with C(a,b) = 0 outside 0 <= b <= a.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import GuardError
from .report import Check, Report

JOHNSON_ORACLE_MAX_N = 12
SIGNED_ORACLE_MAX_M = 8


def binom(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


# ---------------------------------------------------------------------------
# Parameter kinds
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Johnson:
    """d-subsets of an n-set; distance d - |intersection|."""

    n: int
    d: int

    def __post_init__(self) -> None:
        if not 1 <= self.d <= self.n // 2:
            raise ValueError(f"need 1 <= d <= n/2, got d={self.d}, n={self.n}")


@dataclass(frozen=True)
class CrosspolytopeLayer:
    """Opposite-free d-subsets of {+-1, ..., +-m}; distance d - |intersection|."""

    m: int
    d: int

    def __post_init__(self) -> None:
        if not 1 <= self.d <= self.m:
            raise ValueError(f"need 1 <= d <= m, got d={self.d}, m={self.m}")


@dataclass(frozen=True)
class Hamming:
    """Sign words of length m; Hamming distance."""

    m: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"need m >= 1, got {self.m}")


SchemeKind = Johnson | CrosspolytopeLayer | Hamming


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------


def johnson_p(n: int, d: int, i: int, j: int, k: int) -> int:
    """Intersection number: z at distances i from x and j from y, when x, y
    are d-subsets at distance k."""
    Johnson(n, d)
    for name, v in (("i", i), ("j", j), ("k", k)):
        if not 0 <= v <= d:
            raise ValueError(f"{name} must lie in [0, {d}], got {v}")
    return sum(
        binom(d - k, c)
        * binom(k, d - i - c)
        * binom(k, d - j - c)
        * binom(n - d - k, i + j - d + c)
        for c in range(d - k + 1)
    )


def johnson_valency(n: int, d: int, i: int) -> int:
    """Number of d-subsets at distance i from a fixed one: C(d,i) * C(n-d,i)."""
    Johnson(n, d)
    if not 0 <= i <= d:
        raise ValueError(f"i must lie in [0, {d}], got {i}")
    return binom(d, i) * binom(n - d, i)


def crosspolytope_whitney(m: int, d: int) -> int:
    """Layer size: opposite-free d-subsets of a signed m-set, C(m,d) * 2^d."""
    if m < 1 or not 0 <= d <= m:
        raise ValueError(f"need 0 <= d <= m with m >= 1, got d={d}, m={m}")
    return binom(m, d) << d


def crosspolytope_valency(m: int, d: int, i: int) -> int:
    """Layer elements at distance i from a fixed one; C(m,i) when d = m."""
    if m < 1 or not 0 <= i <= d <= m:
        raise ValueError(f"need 0 <= i <= d <= m with m >= 1, got i={i}, d={d}, m={m}")
    return binom(d, i) * sum(
        binom(i, c) * binom(m - d, c) * (1 << c) for c in range(i + 1)
    )


def hamming_p(m: int, i: int, j: int, k: int) -> int:
    """Intersection number of sign words; zero whenever i + j + k is odd."""
    Hamming(m)
    for name, v in (("i", i), ("j", j), ("k", k)):
        if not 0 <= v <= m:
            raise ValueError(f"{name} must lie in [0, {m}], got {v}")
    if (i + j + k) % 2:
        return 0
    return binom(m - k, (i + j - k) // 2) * binom(k, (i - j + k) // 2)


def hamming_p_foursum(m: int, i: int, j: int, k: int) -> int:
    """The equivalent four-binomial sum; kept as a cross-check of hamming_p."""
    Hamming(m)
    return sum(
        binom(m - k, c)
        * binom(k, m - i - c)
        * binom(i + k - m + c, m - j - c)
        * binom(m - k - c, i + j - m + c)
        for c in range(m - k + 1)
    )


# ---------------------------------------------------------------------------
# Exhaustive oracles
# ---------------------------------------------------------------------------


def _ground_and_distance(kind: SchemeKind):
    if isinstance(kind, Johnson):
        if kind.n > JOHNSON_ORACLE_MAX_N:
            raise GuardError(f"oracle limit is n <= {JOHNSON_ORACLE_MAX_N}")
        ground = [
            sum(1 << i for i in combo)
            for combo in itertools.combinations(range(kind.n), kind.d)
        ]
        dist = lambda x, y: kind.d - (x & y).bit_count()
        return ground, dist, kind.d
    if isinstance(kind, CrosspolytopeLayer):
        if kind.m > SIGNED_ORACLE_MAX_M:
            raise GuardError(f"oracle limit is m <= {SIGNED_ORACLE_MAX_M}")
        # bit a: element a+1; bit m+a: element -(a+1)
        ground = [
            sum(1 << (axis + kind.m * sign) for axis, sign in zip(axes, signs))
            for axes in itertools.combinations(range(kind.m), kind.d)
            for signs in itertools.product((0, 1), repeat=kind.d)
        ]
        dist = lambda x, y: kind.d - (x & y).bit_count()
        return ground, dist, kind.d
    if isinstance(kind, Hamming):
        if kind.m > SIGNED_ORACLE_MAX_M:
            raise GuardError(f"oracle limit is m <= {SIGNED_ORACLE_MAX_M}")
        ground = list(range(1 << kind.m))
        dist = lambda x, y: (x ^ y).bit_count()
        return ground, dist, kind.m
    raise TypeError(f"unknown scheme kind {kind!r}")


def _canonical_pair(kind: SchemeKind, k: int) -> tuple[int, int]:
    if isinstance(kind, Johnson):
        x = (1 << kind.d) - 1
        y = ((1 << (kind.d - k)) - 1) | (((1 << k) - 1) << kind.d)
        return x, y
    if isinstance(kind, CrosspolytopeLayer):
        x = (1 << kind.d) - 1
        shared = (1 << (kind.d - k)) - 1
        flipped = (((1 << k) - 1) << (kind.d - k)) << kind.m
        return x, shared | flipped
    x = 0
    return x, (1 << k) - 1


def scheme_oracle(kind: SchemeKind, k: int, i: int, j: int) -> int:
    """Count z at distances (i, j) from a canonical pair at distance k.

    Exhaustive over the ground set; exponential-ish, guarded by the
    per-kind size limits.
    """
    ground, dist, diameter = _ground_and_distance(kind)
    if not 0 <= k <= diameter:
        raise ValueError(f"k must lie in [0, {diameter}], got {k}")
    x, y = _canonical_pair(kind, k)
    return sum(1 for z in ground if dist(z, x) == i and dist(z, y) == j)


def oracle_table(kind: SchemeKind, k: int) -> dict[tuple[int, int], int]:
    """Full (i, j) count table for the canonical pair at distance k."""
    ground, dist, diameter = _ground_and_distance(kind)
    if not 0 <= k <= diameter:
        raise ValueError(f"k must lie in [0, {diameter}], got {k}")
    x, y = _canonical_pair(kind, k)
    table: dict[tuple[int, int], int] = {}
    for z in ground:
        key = (dist(z, x), dist(z, y))
        table[key] = table.get(key, 0) + 1
    return table


def oracle_pair_sample(
    kind: SchemeKind, k: int, i: int, j: int, limit: int = 5
) -> list[int]:
    """Counts of z across up to `limit` distinct base pairs at distance k.

    A singleton value set means the count is independent of the pair
    choice; several values mean it is not (possible on crosspolytope
    layers with d < m, where no such independence is claimed).
    """
    ground, dist, diameter = _ground_and_distance(kind)
    if not 0 <= k <= diameter:
        raise ValueError(f"k must lie in [0, {diameter}], got {k}")
    counts: list[int] = []
    for x in ground:
        for y in ground:
            if dist(x, y) == k:
                counts.append(
                    sum(1 for z in ground if dist(z, x) == i and dist(z, y) == j)
                )
                break
        if len(counts) >= limit:
            break
    if not counts:
        raise ValueError(f"no pair at distance {k}")
    return counts


# ---------------------------------------------------------------------------
# Verification suite
# ---------------------------------------------------------------------------


def run_suite(max_n: int = 10, max_m: int = 6) -> Report:
    """Closed forms against the oracles over the full desk ranges."""
    checks = []

    bad = ""
    for n in range(2, max_n + 1):
        for d in range(1, n // 2 + 1):
            kind = Johnson(n, d)
            for k in range(d + 1):
                table = oracle_table(kind, k)
                for i in range(d + 1):
                    for j in range(d + 1):
                        want = table.get((i, j), 0)
                        if johnson_p(n, d, i, j, k) != want:
                            bad = bad or f"J({n},{d}) p^{k}_{{{i}{j}}} != {want}"
            for i in range(d + 1):
                if johnson_valency(n, d, i) != johnson_p(n, d, i, i, 0):
                    bad = bad or f"J({n},{d}) valency {i} != p^0_ii"
            if sum(johnson_valency(n, d, i) for i in range(d + 1)) != math.comb(n, d):
                bad = bad or f"J({n},{d}) valencies do not sum to C(n,d)"
    checks.append(Check(f"johnson-closed-forms(n<={max_n})", not bad, bad))

    bad = ""
    for m in range(1, max_m + 1):
        for d in range(m + 1):
            if d >= 1:
                kind = CrosspolytopeLayer(m, d)
                layer = _ground_and_distance(kind)[0]
                if crosspolytope_whitney(m, d) != len(layer):
                    bad = bad or f"layer size W_{d}(O({m})) != {len(layer)}"
                table = oracle_table(kind, 0)
                for i in range(d + 1):
                    if crosspolytope_valency(m, d, i) != table.get((i, i), 0):
                        bad = bad or f"O({m}) layer {d} valency {i} mismatch"
            elif crosspolytope_whitney(m, 0) != 1:
                bad = bad or f"W_0(O({m})) != 1"
    checks.append(Check(f"crosspolytope-layer-forms(m<={max_m})", not bad, bad))

    bad = ""
    for m in range(1, max_m + 1):
        for i in range(m + 1):
            if crosspolytope_valency(m, m, i) != binom(m, i):
                bad = bad or f"O({m}) top-layer valency {i} != C({m},{i})"
    checks.append(Check(f"top-layer-valency-reduction(m<={max_m})", not bad, bad))

    bad = ""
    for m in range(1, max_m + 1):
        kind = Hamming(m)
        for k in range(m + 1):
            table = oracle_table(kind, k)
            for i in range(m + 1):
                for j in range(m + 1):
                    want = table.get((i, j), 0)
                    if hamming_p(m, i, j, k) != want:
                        bad = bad or f"H({m},2) p^{k}_{{{i}{j}}} != {want}"
                    if (i + j + k) % 2 and want != 0:
                        bad = bad or f"H({m},2) odd-parity p^{k}_{{{i}{j}}} nonzero"
                    if hamming_p_foursum(m, i, j, k) != hamming_p(m, i, j, k):
                        bad = bad or f"H({m},2) four-binomial sum differs at {i},{j},{k}"
            for i in range(m + 1):
                if sum(hamming_p(m, i, j, k) for j in range(m + 1)) != binom(m, i):
                    bad = bad or f"H({m},2) row sum at i={i}, k={k}"
    checks.append(Check(f"hamming-closed-forms(m<={max_m})", not bad, bad))

    return Report(f"schemes(n<={max_n},m<={max_m})", tuple(checks))
