"""Sign-vector systems: construction, validation, and the majority vote.

A system is a negation-closed set of full sign vectors ("topes") over a
ground set of size t, with no two ground-set columns equal or opposite.
Systems come from tope files or from central hyperplane arrangements,
whose regions are found by exact rational feasibility checks.

WARNING: validation enforces only the structural invariants listed
above. Whether an arbitrary tope file is realizable as (or even
axiomatically is) an oriented matroid is NOT checked; hand-written
inputs are trusted. Systems built by from_central_arrangement are
realizable by construction.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvariantError

PLUS = "+"
MINUS = "-"
_SWAP = str.maketrans(PLUS + MINUS, MINUS + PLUS)


def opposite(tope: str) -> str:
    """Componentwise negation; an involution."""
    return tope.translate(_SWAP)


class Vote(Enum):
    CLASS_A = "A"
    CLASS_B = "B"
    TIE = "tie"


def classify_vote(signs: Iterable[str]) -> Vote:
    """Majority decision over one sign per committee member.

    Fewer '+' than half the members puts the queried element in class A,
    more than half in class B; an exact split (even counts only) is a tie.
    """
    votes = list(signs)
    if not votes:
        raise ValueError("empty vote")
    for s in votes:
        if s not in (PLUS, MINUS):
            raise ValueError(f"invalid sign {s!r}")
    plus = votes.count(PLUS)
    if 2 * plus < len(votes):
        return Vote.CLASS_A
    if 2 * plus > len(votes):
        return Vote.CLASS_B
    return Vote.TIE


@dataclass(frozen=True)
class ToposSystem:
    """Ground-set size t plus the tope set, canonically ordered ('+' < '-')."""

    t: int
    topes: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.t < 1:
            raise InvariantError("ground set must be nonempty")
        if not self.topes:
            raise InvariantError("tope set must be nonempty")
        if list(self.topes) != sorted(set(self.topes)):
            raise InvariantError("topes must be unique and canonically sorted")
        for tope in self.topes:
            if len(tope) != self.t:
                raise InvariantError(
                    f"tope {tope!r} has length {len(tope)}, expected {self.t}"
                )
            for ch in tope:
                if ch not in (PLUS, MINUS):
                    raise InvariantError(f"invalid character {ch!r} in tope {tope!r}")
        present = set(self.topes)
        for tope in self.topes:
            if opposite(tope) not in present:
                raise InvariantError(
                    f"not negation-closed: missing opposite of {tope!r}"
                )
        half = len(self.topes) // 2
        for e in range(self.t):
            plus = sum(1 for tope in self.topes if tope[e] == PLUS)
            if plus != half:
                raise InvariantError(
                    f"positive halfspace of element {e + 1} has size {plus}, expected {half}"
                )
        for a, b in itertools.combinations(range(self.t), 2):
            col_a = tuple(tope[a] for tope in self.topes)
            col_b = tuple(tope[b] for tope in self.topes)
            if col_a == col_b:
                raise InvariantError(f"elements {a + 1} and {b + 1} are parallel")
            if all(x != y for x, y in zip(col_a, col_b)):
                raise InvariantError(f"elements {a + 1} and {b + 1} are antiparallel")

    def __len__(self) -> int:
        return len(self.topes)


def make_system(topes: Iterable[str]) -> ToposSystem:
    """Validated system from raw tope strings, any order."""
    tope_list = sorted(set(topes))
    if not tope_list:
        raise InvariantError("tope set must be nonempty")
    return ToposSystem(t=len(tope_list[0]), topes=tuple(tope_list))


def parse_topes(text: str) -> ToposSystem:
    """Read a tope file: one '+'/'-' string per line, '#' starts a comment."""
    rows: list[tuple[int, str]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        for ch in line:
            if ch not in (PLUS, MINUS):
                raise InvariantError(f"line {line_no}: invalid character {ch!r}")
        rows.append((line_no, line))
    if not rows:
        raise InvariantError("no topes found")
    width = len(rows[0][1])
    seen: dict[str, int] = {}
    for line_no, tope in rows:
        if len(tope) != width:
            raise InvariantError(
                f"line {line_no}: tope has length {len(tope)}, expected {width}"
            )
        if tope in seen:
            raise InvariantError(
                f"line {line_no}: duplicate tope {tope!r} (first at line {seen[tope]})"
            )
        seen[tope] = line_no
    return make_system(tope for _, tope in rows)


def serialize(system: ToposSystem) -> str:
    return "\n".join(system.topes) + "\n"


def positive_halfspace(system: ToposSystem, e: int) -> tuple[str, ...]:
    """The topes with '+' at element e (1-based); always half of them."""
    if not 1 <= e <= system.t:
        raise ValueError(f"element index must lie in [1, {system.t}], got {e}")
    return tuple(tope for tope in system.topes if tope[e - 1] == PLUS)


def is_acyclic(system: ToposSystem) -> bool:
    """True when the all-plus sign vector is a tope."""
    return PLUS * system.t in set(system.topes)


# ---------------------------------------------------------------------------
# Central arrangements
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Arrangement:
    """Normal vectors of oriented hyperplanes through the origin."""

    vectors: tuple[tuple[Fraction, ...], ...]
    dim: int

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise InvariantError("dimension must be >= 1")
        if not self.vectors:
            raise InvariantError("arrangement must contain at least one vector")
        for i, vec in enumerate(self.vectors, start=1):
            if len(vec) != self.dim:
                raise InvariantError(f"vector {i} has {len(vec)} components, expected {self.dim}")
            if all(c == 0 for c in vec):
                raise InvariantError(f"vector {i} is zero")
        for i, j in itertools.combinations(range(len(self.vectors)), 2):
            if _dependent(self.vectors[i], self.vectors[j]):
                raise InvariantError(f"vectors {i + 1} and {j + 1} are linearly dependent")

    @property
    def t(self) -> int:
        return len(self.vectors)


def _dependent(u: Sequence[Fraction], v: Sequence[Fraction]) -> bool:
    return all(
        u[a] * v[b] == u[b] * v[a] for a, b in itertools.combinations(range(len(u)), 2)
    )


def make_arrangement(rows: Iterable[Sequence]) -> Arrangement:
    vectors = tuple(tuple(Fraction(c) for c in row) for row in rows)
    if not vectors:
        raise InvariantError("arrangement must contain at least one vector")
    return Arrangement(vectors=vectors, dim=len(vectors[0]))


def parse_arrangement(text: str) -> Arrangement:
    """Read vectors, one per line, components as integers or 'p/q'.

    An optional first line 'dim n' pins the dimension; '#' starts a comment.
    """
    rows: list[tuple[Fraction, ...]] = []
    dim: int | None = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if dim is None and not rows and parts[0].lower() == "dim":
            if len(parts) != 2 or not parts[1].isdigit():
                raise InvariantError(f"line {line_no}: malformed 'dim n' header")
            dim = int(parts[1])
            continue
        try:
            row = tuple(Fraction(p) for p in parts)
        except (ValueError, ZeroDivisionError):
            raise InvariantError(f"line {line_no}: malformed vector component") from None
        rows.append(row)
    if not rows:
        raise InvariantError("no vectors found")
    if dim is None:
        dim = len(rows[0])
    for row in rows:
        if len(row) != dim:
            raise InvariantError(f"vector {row} has {len(row)} components, expected {dim}")
    return Arrangement(vectors=tuple(rows), dim=dim)


def _integer_rows(arr: Arrangement) -> list[tuple[int, ...]]:
    rows = []
    for vec in arr.vectors:
        scale = math.lcm(*(c.denominator for c in vec))
        rows.append(tuple(int(c * scale) for c in vec))
    return rows


def _normalized(row: tuple[int, ...]) -> tuple[int, ...]:
    g = 0
    for c in row:
        g = math.gcd(g, c)
    if g > 1:
        row = tuple(c // g for c in row)
    return row


def _feasible_strict(rows: Iterable[tuple[int, ...]]) -> bool:
    """Exact feasibility of the homogeneous strict system {row . x > 0}.

    Fourier-Motzkin elimination over the integers, pruning duplicate rows
    after gcd normalization. A surviving all-zero row reads 0 > 0.
    """
    work = {_normalized(tuple(r)) for r in rows}
    while True:
        if any(not any(r) for r in work):
            return False
        if not work:
            return True
        width = len(next(iter(work)))
        j = min(
            range(width),
            key=lambda col: sum(r[col] > 0 for r in work) * sum(r[col] < 0 for r in work),
        )
        pos = [r for r in work if r[j] > 0]
        neg = [r for r in work if r[j] < 0]
        nxt = {
            _normalized(tuple(c for a, c in enumerate(r) if a != j))
            for r in work
            if r[j] == 0
        }
        for p in pos:
            for q in neg:
                nxt.add(
                    _normalized(
                        tuple(p[j] * q[a] - q[j] * p[a] for a in range(width) if a != j)
                    )
                )
        work = nxt


def from_central_arrangement(arr: Arrangement | Iterable[Sequence]) -> ToposSystem:
    """Regions of a central arrangement as a sign-vector system.

    For every sign vector the corresponding open cone is tested for
    rational feasibility; no floating point is involved.
    """
    if not isinstance(arr, Arrangement):
        arr = make_arrangement(arr)
    base = _integer_rows(arr)
    topes = []
    for signs in itertools.product((PLUS, MINUS), repeat=arr.t):
        rows = [
            vec if s == PLUS else tuple(-c for c in vec)
            for s, vec in zip(signs, base)
        ]
        if _feasible_strict(rows):
            topes.append("".join(signs))
    return make_system(topes)
