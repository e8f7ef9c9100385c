"""Tope committees: enumeration, minimality, closure laws, verifiers.

A committee is a nonempty tope subset holding a strict popcount majority
inside every positive halfspace. Enumeration runs on the bitmask kernel
in _scan; the structural verifiers re-derive every family from scratch
with an independent predicate before comparing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import _scan
from .errors import GuardError
from .farey import HALF, farey_boolean, farey_sequence, format_fraction, reduce
from .om_core import ToposSystem, is_acyclic, opposite
from .report import Check, Report

LAYER_GUARD = 100_000_000  # subsets examined by one layer scan
ALL_GUARD_BITS = 24  # full scans examine 2^|topes| subsets


@dataclass(frozen=True)
class Committee:
    """Tope subset in canonical order plus its per-element halfspace counts."""

    members: tuple[str, ...]
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.members:
            raise ValueError("a committee cannot be empty")
        size = len(self.members)
        if any(2 * c <= size for c in self.counts):
            raise ValueError(
                f"not a committee: counts {self.counts} lack a strict majority of {size}"
            )

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class CommitteeFamily:
    """Committees grouped by size; every layer key 1..|topes| is present."""

    system: ToposSystem
    layers: dict[int, tuple[Committee, ...]]
    kind: str  # "all" | "minimal"
    no_opposites: bool

    def __iter__(self):
        for k in sorted(self.layers):
            yield from self.layers[k]

    def total(self) -> int:
        return sum(len(v) for v in self.layers.values())

    def nonempty_layers(self) -> tuple[int, ...]:
        return tuple(k for k in sorted(self.layers) if self.layers[k])


def _member_tuple(system: ToposSystem, members: Iterable[str]) -> tuple[str, ...]:
    out = tuple(sorted(set(members)))
    known = set(system.topes)
    for tope in out:
        if tope not in known:
            raise ValueError(f"{tope!r} is not a tope of the system")
    if not out:
        raise ValueError("a committee cannot be empty")
    return out


def _counts(system: ToposSystem, members: tuple[str, ...]) -> tuple[int, ...]:
    return tuple(
        sum(1 for tope in members if tope[e] == "+") for e in range(system.t)
    )


def committee(system: ToposSystem, members: Iterable[str]) -> Committee:
    """Validated committee from raw members; rejects non-committees."""
    out = _member_tuple(system, members)
    return Committee(members=out, counts=_counts(system, out))


def is_committee(system: ToposSystem, members: Iterable[str]) -> bool:
    """Strict majority in every positive halfspace."""
    out = _member_tuple(system, members)
    size = len(out)
    return all(2 * c > size for c in _counts(system, out))


def is_committee_threshold(system: ToposSystem, members: Iterable[str]) -> bool:
    """Same predicate via the integer threshold ceil((k+1)/2)."""
    out = _member_tuple(system, members)
    need = (len(out) + 2) // 2  # ceil((k+1)/2)
    return all(c >= need for c in _counts(system, out))


def has_opposite_pair(members: Iterable[str]) -> bool:
    mem = set(members)
    return any(opposite(tope) in mem for tope in mem)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def _halfspace_masks(system: ToposSystem) -> list[int]:
    masks = [0] * system.t
    for i, tope in enumerate(system.topes):
        for e in range(system.t):
            if tope[e] == "+":
                masks[e] |= 1 << i
    return masks


def _pair_masks(system: ToposSystem) -> list[int]:
    index = {tope: i for i, tope in enumerate(system.topes)}
    pairs = []
    for tope, i in index.items():
        j = index[opposite(tope)]
        if i < j:
            pairs.append((1 << i) | (1 << j))
    return sorted(pairs)


def _from_mask(system: ToposSystem, mask: int, half_masks: list[int]) -> Committee:
    members = tuple(
        system.topes[i] for i in range(len(system.topes)) if mask >> i & 1
    )
    counts = tuple((mask & hm).bit_count() for hm in half_masks)
    return Committee(members=members, counts=counts)


def enumerate_layer(
    system: ToposSystem,
    k: int,
    no_opposites: bool = False,
    *,
    force: bool = False,
    backend: str | None = None,
) -> list[Committee]:
    """All size-k committees, lexicographic by members."""
    n = len(system.topes)
    if not 1 <= k <= n:
        raise ValueError(f"layer must lie in [1, {n}], got {k}")
    if math.comb(n, k) > LAYER_GUARD and not force:
        raise GuardError(
            f"layer scan would examine C({n},{k}) subsets; pass force=True to override"
        )
    half_masks = _halfspace_masks(system)
    pair_masks = _pair_masks(system) if no_opposites else None
    hits = _scan.committee_masks(n, half_masks, k, pair_masks, backend=backend)
    found = [_from_mask(system, mask, half_masks) for mask in hits]
    found.sort(key=lambda c: c.members)
    return found


def enumerate_all(
    system: ToposSystem,
    no_opposites: bool = False,
    *,
    force: bool = False,
    backend: str | None = None,
) -> CommitteeFamily:
    """Every committee of the system, grouped by size."""
    n = len(system.topes)
    if n > ALL_GUARD_BITS and not force:
        raise GuardError(
            f"full scan would examine 2^{n} subsets (limit 2^{ALL_GUARD_BITS}); "
            "pass force=True to override"
        )
    half_masks = _halfspace_masks(system)
    pair_masks = _pair_masks(system) if no_opposites else None
    hits = _scan.committee_masks(n, half_masks, None, pair_masks, backend=backend)
    layers: dict[int, list[Committee]] = {k: [] for k in range(1, n + 1)}
    for mask in hits:
        layers[mask.bit_count()].append(_from_mask(system, mask, half_masks))
    for bucket in layers.values():
        bucket.sort(key=lambda c: c.members)
    return CommitteeFamily(
        system=system,
        layers={k: tuple(v) for k, v in layers.items()},
        kind="all",
        no_opposites=no_opposites,
    )


def minimal_committees(
    system: ToposSystem, *, force: bool = False, backend: str | None = None
) -> CommitteeFamily:
    """Inclusion-minimal committees, by quadratic antichain filtering."""
    fam = enumerate_all(system, force=force, backend=backend)
    sets = [(c, frozenset(c.members)) for c in fam]
    layers: dict[int, list[Committee]] = {k: [] for k in fam.layers}
    for c, mem in sets:
        if any(other < mem for _, other in sets):
            continue
        layers[c.size].append(c)
    return CommitteeFamily(
        system=system,
        layers={k: tuple(v) for k, v in layers.items()},
        kind="minimal",
        no_opposites=False,
    )


# ---------------------------------------------------------------------------
# Closure laws and signatures
# ---------------------------------------------------------------------------


def augment_with_opposite_pair(system: ToposSystem, base: Committee, tope: str) -> Committee:
    """Adjoin the pair {tope, -tope}; the result is again a committee."""
    other = opposite(tope)
    if tope in base.members or other in base.members:
        raise ValueError(f"pair {{{tope}, {other}}} meets the committee")
    return committee(system, base.members + (tope, other))


def union_committees(system: ToposSystem, first: Committee, second: Committee) -> Committee:
    """Union of two disjoint committees; counts add, majorities persist."""
    if set(first.members) & set(second.members):
        raise ValueError("committees overlap")
    return committee(system, first.members + second.members)


def fraction_signature(system: ToposSystem, com: Committee, e: int) -> Fraction:
    """Reduced halfspace share counts[e] / |members|; exceeds 1/2."""
    if not 1 <= e <= system.t:
        raise ValueError(f"element index must lie in [1, {system.t}], got {e}")
    return reduce(com.counts[e - 1], com.size)


# ---------------------------------------------------------------------------
# Structural verifiers
# ---------------------------------------------------------------------------


def _threshold_layers(
    system: ToposSystem, no_opposites: bool
) -> dict[int, set[tuple[str, ...]]]:
    # independent pass: pure-python subset sweep using the threshold predicate
    n = len(system.topes)
    half_masks = _halfspace_masks(system)
    pair_masks = _pair_masks(system) if no_opposites else []
    layers: dict[int, set[tuple[str, ...]]] = {k: set() for k in range(1, n + 1)}
    for mask in range(1, 1 << n):
        size = mask.bit_count()
        need = (size + 2) // 2
        if any((mask & hm).bit_count() < need for hm in half_masks):
            continue
        if any(mask & pm == pm for pm in pair_masks):
            continue
        members = tuple(system.topes[i] for i in range(n) if mask >> i & 1)
        layers[size].add(members)
    return layers


def _verify_family(
    system: ToposSystem,
    *,
    no_opposites: bool,
    title: str,
    max_size: int,
    signature_seq,
    s_bound,
    force: bool,
    backend: str | None,
) -> Report:
    if is_acyclic(system):
        return Report(title, skipped="system is acyclic (all-plus tope present)")
    fam = enumerate_all(system, no_opposites, force=force, backend=backend)
    nt = len(system.topes)

    bounds = Check("layer-bounds", True)
    for com in fam:
        if not 3 <= com.size <= max_size:
            bounds = Check(
                "layer-bounds", False, f"size {com.size} outside [3, {max_size}]"
            )
            break
    checks = [bounds]

    expected = _threshold_layers(system, no_opposites)
    mismatch = ""
    for k in range(1, nt + 1):
        got = {c.members for c in fam.layers[k]}
        if got != expected[k]:
            mismatch = f"layer {k}: majority and threshold characterizations differ"
            break
    checks.append(Check("layers-match-threshold", not mismatch, mismatch))

    sig_fail = ""
    for com in fam:
        if sig_fail:
            break
        for e in range(1, system.t + 1):
            f = fraction_signature(system, com, e)
            if f <= HALF:
                sig_fail = f"signature {format_fraction(f)} <= 1/2"
                break
            if f not in signature_seq:
                sig_fail = f"signature {format_fraction(f)} outside {signature_seq.describe()}"
                break
            s, rem = divmod(com.size, f.denominator)
            if rem or s * f.numerator != com.counts[e - 1]:
                sig_fail = (
                    f"size {com.size}, count {com.counts[e - 1]} do not factor "
                    f"through {format_fraction(f)}"
                )
                break
            if s > s_bound(f):
                sig_fail = f"multiplier {s} exceeds bound {s_bound(f)} at {format_fraction(f)}"
                break
    checks.append(Check("signature-decomposition", not sig_fail, sig_fail))
    return Report(title, tuple(checks))


def verify_prop8(
    system: ToposSystem, *, force: bool = False, backend: str | None = None
) -> Report:
    """Structure of the full committee family of a non-acyclic system.

    Sizes are confined to [3, |topes|-3]; every layer coincides with its
    threshold characterization; every halfspace share factors as s * (h/k)
    with h/k > 1/2 drawn from farey_boolean(|topes|, |topes|/2) and
    s <= floor(|topes| / (2h)).
    """
    nt = len(system.topes)
    return _verify_family(
        system,
        no_opposites=False,
        title="prop8",
        max_size=nt - 3,
        signature_seq=farey_boolean(nt, nt // 2),
        s_bound=lambda f: nt // (2 * f.numerator),
        force=force,
        backend=backend,
    )


def verify_thm9(
    system: ToposSystem, *, force: bool = False, backend: str | None = None
) -> Report:
    """Structure of the opposite-free committee family of a non-acyclic system.

    Sizes are confined to [3, |topes|/2]; shares come from the standard
    sequence of order |topes|/2 with s <= floor(|topes| / (2k)).
    """
    nt = len(system.topes)
    return _verify_family(
        system,
        no_opposites=True,
        title="thm9",
        max_size=nt // 2,
        signature_seq=farey_sequence(nt // 2),
        s_bound=lambda f: nt // (2 * f.denominator),
        force=force,
        backend=backend,
    )
