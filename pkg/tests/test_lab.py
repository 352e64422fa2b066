import pytest

from nsdeg import (
    FullSemigroup,
    NotMember,
    NumericalSemigroup,
    TooLarge,
    canonical_ideal,
    generate,
    maximal_ideal,
    unit_ideal,
)
from nsdeg.lab import (
    bidual_defect,
    enumerate_ideals,
    gap_subset_mask,
    is_canonical,
    is_closed,
    is_principal,
    is_reflexive,
    profile_ideal,
    socle_quotient,
    socle_witnesses,
)
from nsdeg.sweep import enumerate_semigroups

from oracles import semigroup_set, valid_gap_subsets

S579 = NumericalSemigroup([5, 7, 9])
S345 = NumericalSemigroup([3, 4, 5])


def test_is_closed():
    assert is_closed(canonical_ideal(S579))
    assert not is_closed(maximal_ideal(S579))  # M - M gains 11 and 13
    assert is_closed(unit_ideal(S579))
    T = maximal_ideal(S579).colon(maximal_ideal(S579))
    assert 11 in T and 13 in T


def test_reflexive_and_principal():
    M = maximal_ideal(S579)
    assert is_reflexive(M)
    assert not is_principal(M)
    assert not is_closed(M)
    U = unit_ideal(S579)
    assert is_reflexive(U) and is_principal(U) and is_closed(U)
    K = canonical_ideal(S579)
    assert not is_reflexive(K)
    assert bidual_defect(K) == 1


def test_socle_quotient():
    assert socle_quotient(canonical_ideal(S345), 0) == 1
    assert socle_quotient(unit_ideal(S345), 0) == 0
    # for <5,7,9>: 9 + 2 = 11 is outside S, so K/(t^0) is not a vector space
    assert socle_quotient(canonical_ideal(S579), 0) is None
    with pytest.raises(NotMember):
        socle_quotient(canonical_ideal(S579), 1)


def test_socle_witnesses():
    ws = socle_witnesses(canonical_ideal(S345))
    assert (0, 1) in ws
    assert socle_witnesses(canonical_ideal(S579)) == []


def test_is_canonical():
    K = canonical_ideal(S579)
    assert is_canonical(K)
    assert is_canonical(K.shift(7))
    assert not is_canonical(maximal_ideal(S579))


def test_enumerate_small_cases():
    S23 = NumericalSemigroup([2, 3])
    ideals = list(enumerate_ideals(S23))
    assert len(ideals) == 2
    assert ideals[0] == unit_ideal(S23)
    assert ideals[1].conductor == 0  # the full set of nonnegative integers

    ideals = list(enumerate_ideals(S345))
    assert len(ideals) == 4
    masks = [gap_subset_mask(E) for E in ideals]
    assert masks == [0b00, 0b01, 0b10, 0b11]

    S25 = NumericalSemigroup([2, 5])
    got = [gap_subset_mask(E) for E in enumerate_ideals(S25)]
    assert got == valid_gap_subsets([2, 5], [1, 3], semigroup_set([2, 5], 32))


def test_enumerate_matches_brute_force_everywhere():
    for S in enumerate_semigroups(7):
        if S.genus == 0:
            continue
        got = [gap_subset_mask(E) for E in enumerate_ideals(S)]
        want = valid_gap_subsets(
            list(S.generators), list(S.gaps), semigroup_set(list(S.generators), 4 * (S.frobenius + 2))
        )
        assert got == want, S


def test_enumerate_guards():
    with pytest.raises(FullSemigroup):
        next(enumerate_ideals(NumericalSemigroup([1])))
    big = NumericalSemigroup(list(range(25, 50)))
    assert big.genus == 24
    with pytest.raises(TooLarge):
        next(enumerate_ideals(big))


def test_closed_reflexive_implies_principal_small():
    for S in enumerate_semigroups(8):
        if S.genus == 0:
            continue
        unit = unit_ideal(S)
        for E in enumerate_ideals(S):
            if is_closed(E) and is_reflexive(E):
                assert E == unit, (S, E)


def test_canonical_implies_closed():
    for S in enumerate_semigroups(7):
        if S.genus == 0:
            continue
        for E in enumerate_ideals(S):
            if is_canonical(E):
                assert is_closed(E), (S, E)


def test_rel_ddeg_shift_invariant_and_reflexivity():
    for E in enumerate_ideals(S579):
        assert bidual_defect(E) == bidual_defect(E.shift(5))
        assert (bidual_defect(E) == 0) == is_reflexive(E)


def test_profile():
    prof = profile_ideal(canonical_ideal(S345).shift(4))
    assert prof.ideal.offset == 0
    assert prof.is_canonical and prof.is_closed
    assert not prof.is_reflexive
    assert prof.rel_ddeg == 1
    assert (0, 1) in prof.socle_witnesses
    assert not prof.needs_ext_check

    prof = profile_ideal(generate(S345, [0, 2]))
    assert prof.rel_ddeg == bidual_defect(generate(S345, [0, 2]))


def test_ext_check_flagging():
    # the unit ideal of a non-Gorenstein ring carries only the trivial
    # witness (0, 0) and must not be flagged
    assert not profile_ideal(unit_ideal(S345)).needs_ext_check
    flagged = []
    for S in enumerate_semigroups(6):
        if S.genus == 0:
            continue
        for E in enumerate_ideals(S):
            prof = profile_ideal(E)
            if prof.needs_ext_check:
                flagged.append((S, E, prof))
            if prof.is_canonical and prof.socle_witnesses:
                assert not prof.needs_ext_check
    # flags mark genuine Ext-undecided cases only
    for S, E, prof in flagged:
        assert is_closed(E) and not is_canonical(E)
        assert any(n >= 1 for _, n in prof.socle_witnesses)
