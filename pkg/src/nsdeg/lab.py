"""Closed, reflexive and precanonical ideals, and exhaustive enumeration.

An ideal E is closed when E : E = S, reflexive when E** = E, principal
when it is a shift of S.  Closed + reflexive forces principal in this
setting, and the enumeration below makes that an exhaustively checkable
statement: every normalized relative ideal with minimum 0 is S plus a
set of gaps that is stable under adding generators.

The canonicality test of a closed ideal via a socle condition needs an
Ext-vanishing hypothesis that has no value-set criterion; profiles
therefore carry the socle witnesses as data, and a closed non-canonical
ideal with a witness is flagged as needing the Ext check rather than
being asserted either way.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Iterator

from .errors import FullSemigroup, NotMember, TooLarge
from .ideals import (
    RelativeIdeal,
    canonical_ideal,
    length_quotient,
    maximal_ideal,
    unit_ideal,
)
from .semigroup import NumericalSemigroup

#: Enumerating 2**genus gap subsets beyond this is refused.
DEFAULT_ENUMERATION_CAP = 22


def is_closed(E: RelativeIdeal) -> bool:
    """True iff E : E = S."""
    return E.colon(E) == unit_ideal(E.ambient)


def is_reflexive(E: RelativeIdeal) -> bool:
    """True iff the bidual S - (S - E) is E itself."""
    return E.bidual() == E


def is_principal(E: RelativeIdeal) -> bool:
    """True iff E = min(E) + S."""
    return E == unit_ideal(E.ambient).shift(E.offset)


def is_canonical(E: RelativeIdeal) -> bool:
    """True iff E is a shift of the canonical ideal."""
    return E.shift(-E.offset) == canonical_ideal(E.ambient)


def bidual_defect(E: RelativeIdeal) -> int:
    """lambda(E** / E); zero exactly for reflexive ideals."""
    return length_quotient(E.bidual(), E)


def socle_quotient(E: RelativeIdeal, c: int) -> int | None:
    """Dimension of E/(c) when that quotient is a vector space, else None.

    Requires c in E.  The quotient is a vector space over the residue
    field exactly when M + E is contained in c + S; its dimension is
    then |E minus (c + S)|.
    """
    if c not in E:
        raise NotMember(f"{c} is not an element of the ideal")
    target = unit_ideal(E.ambient).shift(c)
    me = maximal_ideal(E.ambient).product(E)
    if not target.contains_ideal(me):
        return None
    return length_quotient(E, target)


def socle_witnesses(E: RelativeIdeal) -> list[tuple[int, int]]:
    """All (c, n) with M + E inside c + S and n = lambda(E/(c + S))."""
    me = maximal_ideal(E.ambient).product(E)
    out = []
    for c in range(E.offset, me.offset + 1):
        if c not in E:
            continue
        n = socle_quotient(E, c)
        if n is not None:
            out.append((c, n))
    return out


@dataclass(frozen=True)
class IdealProfile:
    """Flags and metrics of one normalized relative ideal."""

    ideal: RelativeIdeal
    is_closed: bool
    is_reflexive: bool
    is_principal: bool
    is_canonical: bool
    rel_ddeg: int
    socle_witnesses: tuple[tuple[int, int], ...]

    @property
    def needs_ext_check(self) -> bool:
        """Closed with a nontrivial socle witness but not canonical.

        Witnesses with n = 0 are excluded: they only say E is a shift of
        c + S, where the vector-space condition is vacuous.
        """
        return (
            self.is_closed
            and any(n >= 1 for _, n in self.socle_witnesses)
            and not self.is_canonical
        )


def profile_ideal(E: RelativeIdeal) -> IdealProfile:
    """Profile of E after normalizing its minimum to 0."""
    norm = E.shift(-E.offset)
    return IdealProfile(
        ideal=norm,
        is_closed=is_closed(norm),
        is_reflexive=is_reflexive(norm),
        is_principal=is_principal(norm),
        is_canonical=is_canonical(norm),
        rel_ddeg=bidual_defect(norm),
        socle_witnesses=tuple(socle_witnesses(norm)),
    )


def gap_subset_mask(E: RelativeIdeal) -> int:
    """Bitmask over the ambient gaps (bit i = i-th smallest gap is in E)."""
    return sum(1 << i for i, g in enumerate(E.ambient.gaps) if g in E)


def enumerate_ideals(
    S: NumericalSemigroup, *, max_genus: int = DEFAULT_ENUMERATION_CAP
) -> Iterator[RelativeIdeal]:
    """Every normalized relative ideal of S with minimum 0, exactly once.

    The ideals are exactly the sets S union G where G is a gap subset
    with g + generator in S union G for every g in G.  Gap subsets are
    emitted in increasing bitmask order (bit i = i-th smallest gap), so
    S comes first and the full semigroup last.
    """
    if S.conductor == 0:
        raise FullSemigroup("the full semigroup only carries its own shifts")
    if S.genus > max_genus:
        raise TooLarge(f"genus {S.genus} exceeds the enumeration cap {max_genus}")

    gaps = S.gaps
    index = {g: i for i, g in enumerate(gaps)}
    required = []
    for g in gaps:
        need = 0
        for m in S.generators:
            h = g + m
            if h < S.conductor and h not in S:
                need |= 1 << index[h]
        required.append(need)

    def rec(i: int, chosen: int) -> Iterator[int]:
        if i < 0:
            yield chosen
            return
        yield from rec(i - 1, chosen)
        if required[i] & ~chosen == 0:
            yield from rec(i - 1, chosen | (1 << i))

    for chosen in rec(len(gaps) - 1, 0):
        mask = S._window
        picked = chosen
        while picked:
            lsb = picked & -picked
            mask |= 1 << gaps[lsb.bit_length() - 1]
            picked ^= lsb
        yield RelativeIdeal(S, 0, mask, S.conductor)
