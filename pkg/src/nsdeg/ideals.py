"""Calculus of monomial fractional ideals of a numerical semigroup.

A relative ideal of S is a set E of integers with E + S inside E,
bounded below and containing every large enough integer.  It is stored
in normal form: the minimum element (offset), the minimal conductor
(every z >= conductor belongs to E), and a bitset window over
[offset, conductor).  Two relative ideals are equal exactly when these
three parts coincide, which makes all the identity checks in the test
suite exact set comparisons.

All operations are pure; results are re-normalized and re-validated on
construction, so a bug in any operation surfaces immediately as an
InternalInvariantViolation rather than as a corrupted value.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Iterable

from ._bits import bit_positions, highest_bit, lowest_bit, ones, reverse_bits
from .errors import (
    AmbientMismatch,
    EmptyGenerators,
    InternalInvariantViolation,
    NotContained,
    Overflow,
)
from .semigroup import NumericalSemigroup

#: Guard on intermediate window lengths (ideal powers etc.).
_IDEAL_WINDOW_CAP = 10**7


class RelativeIdeal:
    """A monomial fractional ideal of a numerical semigroup, by value set.

    Construct through :func:`generate`, :func:`canonical_ideal`,
    :func:`unit_ideal` or :func:`maximal_ideal`; the raw constructor
    takes an arbitrary half-line description (mask over [start, tail)
    plus everything at or above tail) and normalizes it.
    """

    __slots__ = ("ambient", "offset", "conductor", "_window")

    def __init__(self, ambient: NumericalSemigroup, start: int, mask: int, tail: int):
        if tail < start:
            raise InternalInvariantViolation("half-line tail precedes its start")
        mask &= ones(tail - start)
        if mask == 0:
            offset = conductor = tail
            window = 0
        else:
            lo = lowest_bit(mask)
            offset = start + lo
            missing = ~mask & ones(tail - start) & ~ones(lo)
            conductor = start + highest_bit(missing) + 1 if missing else offset
            window = (mask >> lo) & ones(conductor - offset)
        self.ambient = ambient
        self.offset = offset
        self.conductor = conductor
        self._window = window
        self._validate()

    def _validate(self) -> None:
        # E + g inside E for every minimal generator g of the ambient.
        length = self.conductor - self.offset
        for g in self.ambient.generators:
            full = self._window | (ones(g) << length)
            if (self._window << g) & ~full & ones(length + g):
                raise InternalInvariantViolation(
                    f"value set is not closed under adding {g}"
                )

    # -- membership and views -------------------------------------------

    def contains(self, z: int) -> bool:
        if z < self.offset:
            return False
        if z >= self.conductor:
            return True
        return bool((self._window >> (z - self.offset)) & 1)

    def __contains__(self, z: int) -> bool:
        return self.contains(z)

    def _ext(self, stop: int) -> int:
        """Indicator mask of E over [offset, stop)."""
        length = stop - self.offset
        if length <= 0:
            return 0
        mask = self._window
        if stop > self.conductor:
            mask |= ones(stop - self.conductor) << (self.conductor - self.offset)
        return mask & ones(length)

    def elements_below_conductor(self) -> list[int]:
        return [self.offset + i for i in bit_positions(self._window)]

    def shift(self, z: int) -> "RelativeIdeal":
        """The translate z + E."""
        return RelativeIdeal(self.ambient, self.offset + z, self._window, self.conductor + z)

    # -- lattice and multiplicative operations ---------------------------

    def _check_ambient(self, other: "RelativeIdeal") -> None:
        if self.ambient != other.ambient:
            raise AmbientMismatch("ideals live over different ambient semigroups")

    def union(self, other: "RelativeIdeal") -> "RelativeIdeal":
        """Ideal sum: the union of the two value sets."""
        self._check_ambient(other)
        start = min(self.offset, other.offset)
        tail = min(self.conductor, other.conductor)
        mask = (self._ext(tail) << (self.offset - start)) | (
            other._ext(tail) << (other.offset - start)
        )
        return RelativeIdeal(self.ambient, start, mask, tail)

    def product(self, other: "RelativeIdeal") -> "RelativeIdeal":
        """Ideal product: the Minkowski sum of the two value sets."""
        self._check_ambient(other)
        start = self.offset + other.offset
        tail = min(self.conductor + other.offset, other.conductor + self.offset)
        if tail - start > _IDEAL_WINDOW_CAP:
            raise Overflow("product window exceeds the size bound")
        fmask = other._ext(tail - self.offset)
        acc = 0
        for e_rel in bit_positions(self._ext(tail - other.offset)):
            acc |= fmask << e_rel
        return RelativeIdeal(self.ambient, start, acc & ones(tail - start), tail)

    def colon(self, other: "RelativeIdeal") -> "RelativeIdeal":
        """E : F = all z with z + F inside E; realizes Hom(F, E)."""
        self._check_ambient(other)
        start = self.offset - other.offset
        length = self.conductor - self.offset
        missing = ~self._window & ones(length)
        bad = 0
        for f_rel in bit_positions(other._ext(other.offset + length)):
            bad |= missing >> f_rel
        return RelativeIdeal(self.ambient, start, ~bad & ones(length), start + length)

    def dual(self) -> "RelativeIdeal":
        """S - E, the value set of Hom(E, S)."""
        return unit_ideal(self.ambient).colon(self)

    def bidual(self) -> "RelativeIdeal":
        return self.dual().dual()

    def trace(self) -> "RelativeIdeal":
        """E * (S - E); always lands inside S and is shift-invariant."""
        return self.product(self.dual())

    def minimal_generators(self) -> list[int]:
        """Minimal G with generate(S, G) = E, namely E minus (M + E)."""
        me = maximal_ideal(self.ambient).product(self)
        stop = me.conductor
        diff = self._ext(stop) & ~(me._ext(stop) << (me.offset - self.offset))
        return [self.offset + i for i in bit_positions(diff)]

    def contains_ideal(self, other: "RelativeIdeal") -> bool:
        """True iff other is a subset of self."""
        self._check_ambient(other)
        if other.offset < self.offset:
            return False
        stop = max(self.conductor, other.conductor)
        big = self._ext(stop)
        small = other._ext(stop) << (other.offset - self.offset)
        return not (small & ~big)

    def to_dict(self) -> dict:
        return {
            "ambient": list(self.ambient.generators),
            "elements_below_conductor": self.elements_below_conductor(),
            "conductor": self.conductor,
            "offset": self.offset,
        }

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RelativeIdeal)
            and self.ambient == other.ambient
            and self.offset == other.offset
            and self.conductor == other.conductor
            and self._window == other._window
        )

    def __hash__(self) -> int:
        return hash((self.ambient, self.offset, self.conductor, self._window))

    def __repr__(self) -> str:
        return (
            f"RelativeIdeal(offset={self.offset}, "
            f"elements={self.elements_below_conductor()}, conductor={self.conductor})"
        )


@dataclass(frozen=True)
class ReductionData:
    """Principal reduction of an ideal by its minimum-value element."""

    element_value: int
    reduction_number: int


# -- constructors --------------------------------------------------------


def generate(S: NumericalSemigroup, gens: Iterable[int]) -> RelativeIdeal:
    """Smallest relative ideal containing ``gens``: the union of g + S."""
    vals = sorted({int(v) for v in gens})
    if not vals:
        raise EmptyGenerators("an ideal needs at least one generator")
    start = vals[0]
    tail = start + S.conductor
    acc = 0
    for v in vals:
        if v >= tail:
            continue
        length = tail - v
        mask = S._window
        if length > S.conductor:
            mask |= ones(length - S.conductor) << S.conductor
        acc |= (mask & ones(length)) << (v - start)
    return RelativeIdeal(S, start, acc, tail)


def unit_ideal(S: NumericalSemigroup) -> RelativeIdeal:
    """S considered as an ideal over itself."""
    return RelativeIdeal(S, 0, S._window, S.conductor)


def maximal_ideal(S: NumericalSemigroup) -> RelativeIdeal:
    """The positive elements of S."""
    return RelativeIdeal(S, 1, S._window >> 1, max(S.conductor, 1))


def canonical_ideal(S: NumericalSemigroup) -> RelativeIdeal:
    """The canonical ideal K = { x : frobenius - x not in S }, min 0.

    For symmetric semigroups K equals S; it always sits between S and
    the nonnegative integers.  It is the unique normalized ideal (up to
    the chosen shift) that dualizes exactly: (K : (K : E)) = E for every
    relative ideal E.
    """
    c = S.conductor
    if c == 0:
        return unit_ideal(S)
    return RelativeIdeal(S, 0, reverse_bits(~S._window & ones(c), c), c)


# -- lengths and reductions ----------------------------------------------


def length_quotient(big: RelativeIdeal, small: RelativeIdeal) -> int:
    """lambda(E/F) = |E minus F| for F contained in E.

    Raises NotContained (with a witness element) if F is not inside E.
    """
    big._check_ambient(small)
    anchor = min(big.offset, small.offset)
    stop = max(big.conductor, small.conductor)
    b = big._ext(stop) << (big.offset - anchor)
    s = small._ext(stop) << (small.offset - anchor)
    extra = s & ~b
    if extra:
        raise NotContained(anchor + lowest_bit(extra))
    return (b & ~s).bit_count()


def reduction(ideal: RelativeIdeal) -> ReductionData:
    """Reduction data of E by a = t^min(E).

    Returns the least r >= 0 with E^(r+1) = a + E^r as value sets; the
    stabilization is re-verified one step further.  The iteration always
    terminates mathematically; the cap only guards implementation bugs.
    """
    a = ideal.offset
    prev = unit_ideal(ideal.ambient)
    cur = ideal
    for r in range(65):
        if cur == prev.shift(a):
            if cur.product(ideal) != cur.shift(a):
                raise InternalInvariantViolation("reduction did not stabilize")
            return ReductionData(a, r)
        prev, cur = cur, cur.product(ideal)
    raise InternalInvariantViolation("reduction number exceeded 64 iterations")
