"""Farey sequences and their Boolean-layer subsequences.

Exact generation of three fraction families, adjacent-entry formulas
built on modular inverses, three-term recurrences, the eight bijections
between the halves of the order-2m family and the standard sequence of
order m, and the symmetry identities centered on 1/3 and 2/3.

All fractions are reduced nonnegative rationals in [0, 1], represented
with the stdlib `fractions.Fraction`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterator, Literal

from .errors import GuardError
from .report import Check, Report

Direction = Literal["pred", "succ"]
Side = Literal["left", "right"]
Orientation = Literal["preserving", "reversing"]

ZERO = Fraction(0)
HALF = Fraction(1, 2)
ONE = Fraction(1)
ONE_THIRD = Fraction(1, 3)
TWO_THIRDS = Fraction(2, 3)

# The subset-definition oracle enumerates 2^n subsets.
ORACLE_MAX_N = 20


def reduce(h: int, k: int) -> Fraction:
    """Reduced fraction h/k, constrained to [0, 1]. Idempotent."""
    if k < 1:
        raise ValueError(f"denominator must be >= 1, got {k}")
    if not 0 <= h <= k:
        raise ValueError(f"numerator must lie in [0, {k}], got {h}")
    return Fraction(h, k)


def format_fraction(f: Fraction) -> str:
    """Render as 'h/k' (never bare integers: 0/1, 1/1)."""
    return f"{f.numerator}/{f.denominator}"


def parse_fraction(text: str) -> Fraction:
    num, sep, den = text.partition("/")
    if not sep:
        raise ValueError(f"expected 'h/k', got {text!r}")
    try:
        h, k = int(num), int(den)
    except ValueError:
        raise ValueError(f"expected 'h/k' with integer parts, got {text!r}") from None
    return reduce(h, k)


@dataclass(frozen=True)
class FareySeq:
    """Strictly ascending reduced fractions plus their defining parameters.

    kind is one of "standard" (denominators bounded by n), "boolean"
    (the order-n family restricted by numerator <= m and co-numerator
    <= n - m), or "numbound" (numerator <= m only).
    """

    kind: str
    n: int
    m: int | None
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise ValueError("a Farey sequence cannot be empty")
        if any(a >= b for a, b in zip(self.entries, self.entries[1:])):
            raise ValueError("entries must be strictly ascending")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> Fraction:
        return self.entries[i]

    @cached_property
    def _positions(self) -> dict[tuple[int, int], int]:
        return {(f.numerator, f.denominator): i for i, f in enumerate(self.entries)}

    def __contains__(self, f: object) -> bool:
        if not isinstance(f, Fraction):
            return False
        return (f.numerator, f.denominator) in self._positions

    def index(self, f: Fraction) -> int:
        try:
            return self._positions[(f.numerator, f.denominator)]
        except KeyError:
            raise ValueError(
                f"{format_fraction(f)} is not an entry of {self.describe()}"
            ) from None

    def describe(self) -> str:
        if self.m is None:
            return f"F({self.n})"
        return f"F[{self.kind}]({self.n},{self.m})"

    def __str__(self) -> str:
        return " ".join(format_fraction(f) for f in self.entries)


@lru_cache(maxsize=None)
def _standard_entries(n: int) -> tuple[Fraction, ...]:
    fracs = [
        Fraction(h, k)
        for k in range(1, n + 1)
        for h in range(k + 1)
        if math.gcd(h, k) == 1
    ]
    fracs.sort()
    return tuple(fracs)


@lru_cache(maxsize=None)
def _standard_seq(n: int) -> FareySeq:
    return FareySeq("standard", n, None, _standard_entries(n))


@lru_cache(maxsize=None)
def _boolean_seq(n: int, m: int) -> FareySeq:
    entries = tuple(
        f
        for f in _standard_entries(n)
        if f.numerator <= m and f.denominator - f.numerator <= n - m
    )
    return FareySeq("boolean", n, m, entries)


@lru_cache(maxsize=None)
def _numbound_seq(n: int, m: int) -> FareySeq:
    entries = tuple(f for f in _standard_entries(n) if f.numerator <= m)
    return FareySeq("numbound", n, m, entries)


def farey_sequence(n: int) -> FareySeq:
    """Standard sequence of order n: every reduced h/k in [0,1] with k <= n."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    return _standard_seq(n)


def farey_boolean(n: int, m: int) -> FareySeq:
    """Order-n fractions with numerator <= m and denominator-numerator <= n-m."""
    _check_nm(n, m)
    return _boolean_seq(n, m)


def farey_numerator_bounded(n: int, m: int) -> FareySeq:
    """Order-n fractions with numerator <= m; equals farey_sequence(n) at m = n."""
    _check_nm(n, m)
    return _numbound_seq(n, m)


def farey_boolean_oracle(n: int, m: int, *, force: bool = False) -> FareySeq:
    """Independent construction of farey_boolean(n, m) from its set definition.

    Enumerates every nonempty subset B of an n-set C and collects the reduced
    ratios |B n A| / |B| for a fixed m-subset A. Exponential in n; guarded at
    n <= 20 unless force is given.
    """
    _check_nm(n, m)
    if n > ORACLE_MAX_N and not force:
        raise GuardError(
            f"subset oracle enumerates 2^{n} subsets (limit n <= {ORACLE_MAX_N}); "
            "pass force=True to override"
        )
    amask = (1 << m) - 1
    pairs = {((b & amask).bit_count(), b.bit_count()) for b in range(1, 1 << n)}
    entries = sorted({Fraction(a, b) for a, b in pairs})
    return FareySeq("boolean", n, m, tuple(entries))


def _check_nm(n: int, m: int) -> None:
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if not 0 <= m <= n:
        raise ValueError(f"m must lie in [0, {n}], got {m}")


# ---------------------------------------------------------------------------
# Adjacent entries
# ---------------------------------------------------------------------------


def _fit_residue(r: int, modulus: int, upper: int) -> int:
    # unique x = r (mod modulus) in the window (upper - modulus, upper]
    return upper - ((upper - r) % modulus)


def _require_member(n: int, m: int, f: Fraction) -> FareySeq:
    seq = farey_boolean(n, m)
    seq.index(f)  # raises if absent
    return seq


def neighbor_general(n: int, m: int, f: Fraction, direction: Direction) -> Fraction:
    """Adjacent entry of farey_boolean(n, m) on the requested side of f.

    Works for interior entries of any member sequence with 0 < m < n: the
    candidate x0 is the unique solution of k*x0 = -1 or +1 (mod h) in a
    length-h window below m, and a floored minimum of three ratios shifts
    (x0, y0) along the direction (h, k) to land on the true neighbor.
    """
    if not 0 < m < n:
        raise ValueError(f"need 0 < m < n, got m={m}, n={n}")
    _require_member(n, m, f)
    if f in (ZERO, ONE):
        raise ValueError(f"{format_fraction(f)} is an endpoint; the formula needs an interior entry")
    _check_direction(direction)
    h, k = f.numerator, f.denominator
    sign = 1 if direction == "pred" else -1  # k*x0 = -sign (mod h)
    r = (-sign * pow(k, -1, h)) % h
    x0 = _fit_residue(r, h, m)
    y0 = (k * x0 + sign) // h
    t_star = math.floor(
        min(
            Fraction(m - x0, h),
            Fraction(n - y0, k),
            Fraction(n - m + x0 - y0, k - h),
        )
    )
    return reduce(x0 + t_star * h, y0 + t_star * k)


def _right_neighbor(m: int, f: Fraction, direction: Direction) -> Fraction:
    # closed forms valid on the half at or above 1/2 (t* = 0 there)
    h, k = f.numerator, f.denominator
    sign = 1 if direction == "pred" else -1
    r = (-sign * pow(k, -1, h)) % h
    x0 = _fit_residue(r, h, m)
    return reduce(x0, (k * x0 + sign) // h)


def _left_neighbor(m: int, f: Fraction, direction: Direction) -> Fraction:
    # closed forms valid on the half at or below 1/2
    h, k = f.numerator, f.denominator
    d = k - h
    sign = -1 if direction == "pred" else 1  # h*x0 = -sign (mod k-h)
    r = (-sign * pow(h, -1, d)) % d
    x0 = _fit_residue(r, d, m)
    return reduce((h * x0 + sign) // d, (k * x0 + sign) // d)


def neighbor_half(m: int, f: Fraction, direction: Direction) -> Fraction:
    """Adjacent entry of farey_boolean(2m, m) via the one-sided closed forms.

    Dispatches on the side of 1/2 that f lies on; at f = 1/2 the predecessor
    uses the left form and the successor the right form.
    """
    if m <= 1:
        raise ValueError(f"need m > 1, got {m}")
    _require_member(2 * m, m, f)
    _check_direction(direction)
    if direction == "pred":
        if f == ZERO:
            raise ValueError("0/1 has no predecessor")
        return _right_neighbor(m, f, "pred") if f > HALF else _left_neighbor(m, f, "pred")
    if f == ONE:
        raise ValueError("1/1 has no successor")
    return _right_neighbor(m, f, "succ") if f >= HALF else _left_neighbor(m, f, "succ")


def _check_direction(direction: str) -> None:
    if direction not in ("pred", "succ"):
        raise ValueError(f"direction must be 'pred' or 'succ', got {direction!r}")


def _check_extension(direction: str) -> None:
    if direction not in ("back", "forward"):
        raise ValueError(f"direction must be 'back' or 'forward', got {direction!r}")


def _require_adjacent(n: int, m: int, f_a: Fraction, f_b: Fraction) -> FareySeq:
    seq = farey_boolean(n, m)
    i = seq.index(f_a)
    if i + 1 == len(seq) or seq[i + 1] != f_b:
        raise ValueError(
            f"{format_fraction(f_a)} and {format_fraction(f_b)} are not adjacent in {seq.describe()}"
        )
    return seq


def triple_extend(
    n: int, m: int, f_a: Fraction, f_b: Fraction, direction: Literal["back", "forward"]
) -> Fraction:
    """Third member of a run of three consecutive entries of farey_boolean(n, m).

    Given the adjacent pair f_a < f_b, 'forward' returns the entry after f_b
    and 'back' the entry before f_a, through the floored-minimum three-term
    recurrence.
    """
    if not 0 < m < n:
        raise ValueError(f"need 0 < m < n, got m={m}, n={n}")
    _require_adjacent(n, m, f_a, f_b)
    _check_extension(direction)
    if direction == "forward":
        if f_b == ONE:
            raise ValueError("no entry follows 1/1")
        (hj, kj), (hm, km) = (f_a.numerator, f_a.denominator), (f_b.numerator, f_b.denominator)
    else:
        if f_a == ZERO:
            raise ValueError("no entry precedes 0/1")
        (hj, kj), (hm, km) = (f_b.numerator, f_b.denominator), (f_a.numerator, f_a.denominator)
    q = math.floor(
        min(
            Fraction(hj + m, hm),
            Fraction(kj + n, km),
            Fraction(kj - hj + n - m, km - hm),
        )
    )
    return reduce(q * hm - hj, q * km - kj)


def triple_extend_half(
    m: int, f_a: Fraction, f_b: Fraction, direction: Literal["back", "forward"]
) -> Fraction:
    """Like triple_extend for farey_boolean(2m, m), via single-floor recurrences.

    Valid only when the whole three-entry run stays on one side of 1/2: the
    right-side recurrence floors (numerator + m) / numerator', the left-side
    one floors the same expression in co-numerators k - h. Raises when the
    run would straddle 1/2.
    """
    if m <= 1:
        raise ValueError(f"need m > 1, got {m}")
    _require_adjacent(2 * m, m, f_a, f_b)
    _check_extension(direction)
    if direction == "forward":
        if f_b == ONE:
            raise ValueError("no entry follows 1/1")
        far, mid = f_a, f_b
    else:
        if f_a == ZERO:
            raise ValueError("no entry precedes 0/1")
        far, mid = f_b, f_a
    hj, kj = far.numerator, far.denominator
    hm, km = mid.numerator, mid.denominator
    use_right = far >= HALF if direction == "forward" else far > HALF
    if use_right:
        q = (hj + m) // hm
    else:
        q = (kj - hj + m) // (km - hm)
    out = reduce(q * hm - hj, q * km - kj)
    if use_right and direction == "back" and out < HALF:
        raise ValueError("three-entry run straddles 1/2; use triple_extend")
    if not use_right and direction == "forward" and out > HALF:
        raise ValueError("three-entry run straddles 1/2; use triple_extend")
    return out


# ---------------------------------------------------------------------------
# Involutions and bijections
# ---------------------------------------------------------------------------


def reverse_involution(f: Fraction) -> Fraction:
    """h/k -> (k-h)/k; order-reversing, self-inverse on farey_boolean(2m, m)."""
    return reduce(f.denominator - f.numerator, f.denominator)


_HALF_TO_FM = {
    ("left", "preserving"): lambda h, k: (h, k - h),
    ("left", "reversing"): lambda h, k: (k - 2 * h, k - h),
    ("right", "preserving"): lambda h, k: (2 * h - k, h),
    ("right", "reversing"): lambda h, k: (k - h, h),
}

_FM_TO_HALF = {
    ("left", "preserving"): lambda h, k: (h, k + h),
    ("left", "reversing"): lambda h, k: (k - h, 2 * k - h),
    ("right", "preserving"): lambda h, k: (k, 2 * k - h),
    ("right", "reversing"): lambda h, k: (k, k + h),
}


def _apply_map(table, f: Fraction, side: Side, orientation: Orientation) -> Fraction:
    if (side, orientation) not in table:
        raise ValueError(f"unknown map {side!r}/{orientation!r}")
    num, den = table[(side, orientation)](f.numerator, f.denominator)
    try:
        return reduce(num, den)
    except ValueError:
        raise ValueError(
            f"{format_fraction(f)} lies outside the source sequence of the "
            f"{side} {orientation} map"
        ) from None


def map_half_to_fm(f: Fraction, side: Side, orientation: Orientation) -> Fraction:
    """Image in the order-m sequence of an entry of one half of farey_boolean(2m, m)."""
    return _apply_map(_HALF_TO_FM, f, side, orientation)


def map_fm_to_half(f: Fraction, side: Side, orientation: Orientation) -> Fraction:
    """Image in a half of farey_boolean(2m, m) of an order-m sequence entry."""
    return _apply_map(_FM_TO_HALF, f, side, orientation)


def third_symmetry_involution(f: Fraction, side: Side) -> Fraction:
    """Order-reversing involution of one half of farey_boolean(2m, m).

    Right half: h/k -> h/(3h-k), mirroring around 2/3. Left half:
    h/k -> (k-2h)/(2k-3h), mirroring around 1/3.
    """
    h, k = f.numerator, f.denominator
    if side == "right":
        if 3 * h - k <= 0:
            raise ValueError(f"{format_fraction(f)} is outside the right-half domain")
        return reduce(h, 3 * h - k)
    if side == "left":
        if 2 * k - 3 * h <= 0:
            raise ValueError(f"{format_fraction(f)} is outside the left-half domain")
        return reduce(k - 2 * h, 2 * k - 3 * h)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def neighbors_of_one_third(m: int) -> tuple[Fraction, Fraction]:
    """The entries flanking 1/3 in farey_boolean(2m, m), in parity closed form."""
    if m <= 1:
        raise ValueError(f"need m > 1, got {m}")
    if m % 2 == 0:
        pred = reduce((m - 2) // 2, (3 * m - 4) // 2)
        succ = reduce(m // 2, (3 * m - 2) // 2)
    else:
        pred = reduce((m - 1) // 2, (3 * m - 1) // 2)
        succ = reduce((m + 1) // 2, (3 * m + 1) // 2)
    return pred, succ


# ---------------------------------------------------------------------------
# Verification suites
# ---------------------------------------------------------------------------


def halves(seq: FareySeq) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Split at 1/2 (inclusive on both sides)."""
    left = tuple(f for f in seq if f <= HALF)
    right = tuple(f for f in seq if f >= HALF)
    return left, right


def verify_prop5(m: int) -> Report:
    """Check the symmetry identities of farey_boolean(2m, m).

    Around 2/3: paired entries share a numerator and their denominators sum
    to three times it. Around 1/3: paired denominator sums are three times
    paired numerator sums.
    """
    if m <= 1:
        raise ValueError(f"need m > 1, got {m}")
    seq = farey_boolean(2 * m, m)
    ent = seq.entries
    s = seq.index(HALF)
    t = seq.index(TWO_THIRDS)
    s1 = seq.index(ONE_THIRD)

    palindrome = Check("numerators-mirror-at-2/3", True)
    ratio = Check("denominator-sum-thrice-numerator-at-2/3", True)
    third = Check("denominator-sum-thrice-numerator-sum-at-1/3", True)

    for v in range(t - s + 1):
        a, b = ent[t + v], ent[t - v]
        if palindrome.ok and a.numerator != b.numerator:
            palindrome = Check(
                palindrome.name,
                False,
                f"v={v}: {format_fraction(a)} vs {format_fraction(b)}",
            )
        if ratio.ok and a.denominator + b.denominator != 3 * a.numerator:
            ratio = Check(
                ratio.name,
                False,
                f"v={v}: ({a.denominator}+{b.denominator})/{a.numerator} != 3",
            )
    for v in range(s - s1 + 1):
        a, b = ent[s1 + v], ent[s1 - v]
        if third.ok and a.denominator + b.denominator != 3 * (a.numerator + b.numerator):
            third = Check(
                third.name,
                False,
                f"v={v}: ({a.denominator}+{b.denominator}) vs 3*({a.numerator}+{b.numerator})",
            )
    return Report(f"prop5(m={m})", (palindrome, ratio, third))


def _first_bad(detail_iter) -> str:
    for detail in detail_iter:
        if detail:
            return detail
    return ""


def check_sequence_oracle(m_max: int, *, force: bool = False) -> Check:
    """farey_boolean(2m, m) against the subset-definition oracle."""

    def probe():
        for m in range(2, m_max + 1):
            got = farey_boolean(2 * m, m).entries
            want = farey_boolean_oracle(2 * m, m, force=force).entries
            if got != want:
                yield f"m={m}: filter and oracle sequences differ"
            yield ""

    bad = _first_bad(probe())
    return Check(f"sequence-matches-subset-oracle(m<={m_max})", not bad, bad)


def check_neighbors(m: int) -> Check:
    """Both neighbor formulas against actual adjacency, every interior entry."""
    seq = farey_boolean(2 * m, m)
    ent = seq.entries
    for i in range(1, len(ent) - 1):
        f = ent[i]
        for direction, want in (("pred", ent[i - 1]), ("succ", ent[i + 1])):
            got = neighbor_general(2 * m, m, f, direction)
            if got != want:
                return Check(
                    "neighbors",
                    False,
                    f"m={m}: general {direction} of {format_fraction(f)} gave {format_fraction(got)}",
                )
            got = neighbor_half(m, f, direction)
            if got != want:
                return Check(
                    "neighbors",
                    False,
                    f"m={m}: half {direction} of {format_fraction(f)} gave {format_fraction(got)}",
                )
    return Check("neighbors", True)


def check_triples(m: int) -> Check:
    """Three-term recurrences against the generated sequence, every pair."""
    seq = farey_boolean(2 * m, m)
    ent = seq.entries
    n = 2 * m
    for i in range(len(ent) - 1):
        fa, fb = ent[i], ent[i + 1]
        if i + 2 < len(ent):
            want = ent[i + 2]
            if triple_extend(n, m, fa, fb, "forward") != want:
                return Check("triples", False, f"m={m}: forward from {format_fraction(fa)},{format_fraction(fb)}")
            if fa >= HALF or want <= HALF:
                if triple_extend_half(m, fa, fb, "forward") != want:
                    return Check(
                        "triples", False, f"m={m}: half forward from {format_fraction(fa)},{format_fraction(fb)}"
                    )
            else:
                try:
                    triple_extend_half(m, fa, fb, "forward")
                    return Check("triples", False, f"m={m}: straddling forward run not rejected at i={i}")
                except ValueError:
                    pass
        if i - 1 >= 0:
            want = ent[i - 1]
            if triple_extend(n, m, fa, fb, "back") != want:
                return Check("triples", False, f"m={m}: back from {format_fraction(fa)},{format_fraction(fb)}")
            if fb <= HALF or want >= HALF:
                if triple_extend_half(m, fa, fb, "back") != want:
                    return Check(
                        "triples", False, f"m={m}: half back from {format_fraction(fa)},{format_fraction(fb)}"
                    )
            else:
                try:
                    triple_extend_half(m, fa, fb, "back")
                    return Check("triples", False, f"m={m}: straddling back run not rejected at i={i}")
                except ValueError:
                    pass
    return Check("triples", True)


def check_bijections(m: int) -> Check:
    """The eight half-to-order-m maps: monotone bijections, pairwise inverse."""
    seq = farey_boolean(2 * m, m)
    left, right = halves(seq)
    fm = farey_sequence(m).entries
    for side, half in (("left", left), ("right", right)):
        for orientation in ("preserving", "reversing"):
            image = tuple(map_half_to_fm(f, side, orientation) for f in half)
            want = fm if orientation == "preserving" else tuple(reversed(fm))
            if image != want:
                return Check("bijections", False, f"m={m}: {side} {orientation} image is not F({m})")
            back = tuple(map_fm_to_half(g, side, orientation) for g in image)
            if back != half:
                return Check("bijections", False, f"m={m}: {side} {orientation} maps are not mutually inverse")
    return Check("bijections", True)


def check_involutions(m: int) -> Check:
    """Order reversal h/k -> (k-h)/k and the one-sided mirrors around 1/3, 2/3."""
    seq = farey_boolean(2 * m, m)
    ent = seq.entries
    if tuple(reverse_involution(f) for f in ent) != tuple(reversed(ent)):
        return Check("involutions", False, f"m={m}: reversal does not map the sequence onto itself")
    if any(reverse_involution(reverse_involution(f)) != f for f in ent):
        return Check("involutions", False, f"m={m}: reversal applied twice is not the identity")
    left, right = halves(seq)
    for side, half in (("left", left), ("right", right)):
        image = tuple(third_symmetry_involution(f, side) for f in half)
        if image != tuple(reversed(half)):
            return Check("involutions", False, f"m={m}: {side} third-symmetry map does not reverse the half")
        if any(third_symmetry_involution(g, side) != f for f, g in zip(half, image)):
            return Check("involutions", False, f"m={m}: {side} third-symmetry map is not an involution")
    return Check("involutions", True)


def check_one_third_neighbors(m: int) -> Check:
    seq = farey_boolean(2 * m, m)
    i = seq.index(ONE_THIRD)
    pred, succ = neighbors_of_one_third(m)
    ok = seq[i - 1] == pred and seq[i + 1] == succ
    detail = "" if ok else f"m={m}: closed form gave {format_fraction(pred)}, {format_fraction(succ)}"
    return Check("one-third-neighbors", ok, detail)


def run_suite(m_max: int, *, oracle_max: int = 8) -> Report:
    """Full verification sweep for 2 <= m <= m_max.

    The subset-definition oracle is only run up to oracle_max (exponential);
    everything else covers the whole range.
    """
    if m_max < 2:
        raise ValueError(f"need m_max >= 2, got {m_max}")
    checks = [check_sequence_oracle(min(m_max, oracle_max))]
    families = (
        check_neighbors,
        check_triples,
        check_bijections,
        check_involutions,
        check_one_third_neighbors,
    )
    for fn in families:
        result = None
        for m in range(2, m_max + 1):
            result = fn(m)
            if not result.ok:
                break
        checks.append(result)
    prop5 = Check("prop5-identities", True)
    for m in range(2, m_max + 1):
        rep = verify_prop5(m)
        if not rep.ok:
            fail = rep.first_failure
            prop5 = Check("prop5-identities", False, f"m={m}: {fail.name}: {fail.detail}")
            break
    checks.append(prop5)
    numbound = Check("numerator-bound-degenerates-to-standard", True)
    for n in range(1, m_max + 1):
        if farey_numerator_bounded(n, n).entries != farey_sequence(n).entries:
            numbound = Check(numbound.name, False, f"n={n}")
            break
    checks.append(numbound)
    return Report(f"farey(m<={m_max})", tuple(checks))
