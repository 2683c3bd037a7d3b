"""Max-generated constructions and inequalities on frozen fixtures.

Expected values come from tests/subset_oracle.py runs; the heavier
exhaustive confirmations live in test_campaign.py and test_acceptance.py.
"""

from fractions import Fraction

import pytest

import subset_oracle as oracle
from numsgp import maxgen
from numsgp.core import from_generators
from numsgp.errors import (
    BadParameters,
    EmbeddingDimTooSmall,
    GapTooSmall,
    IsTrivial,
    NotAGapSet,
    NotMaxGenerated,
    NotSymmetric,
)


def S(*gens):
    return from_generators(list(gens))


def test_is_max_generated():
    assert maxgen.is_max_generated(S(3, 5, 7))
    assert maxgen.is_max_generated(S(4, 6, 7, 9))
    assert maxgen.is_max_generated(S(2, 3))
    assert not maxgen.is_max_generated(S(7, 11, 16, 17, 19))
    assert not maxgen.is_max_generated(S(3, 4))
    with pytest.raises(IsTrivial):
        maxgen.is_max_generated(S(1))


def test_reflection_map():
    assert maxgen.reflection_map(S(2, 3)) == ((2, 1),)
    assert maxgen.reflection_map(S(3, 5, 7)) == ((3, 4), (5, 2), (6, 1))
    pairs = maxgen.reflection_map(S(4, 6, 7, 9))
    assert sorted(b for _, b in pairs) == [1, 2, 3, 5]
    assert sorted(b for _, b in pairs) == list(S(4, 6, 7, 9).gaps())
    with pytest.raises(NotMaxGenerated):
        maxgen.reflection_map(S(3, 4))


def test_to_symmetric():
    sp = maxgen.to_symmetric(S(3, 5, 7))
    assert sp.min_generators == (3, 5)
    assert sp.is_symmetric()
    assert sp.frobenius == 7
    assert sp.genus == 4
    assert maxgen.to_symmetric(S(2, 3)).min_generators == (2, 5)
    assert maxgen.to_symmetric(S(4, 6, 7, 9)).min_generators == (4, 6, 7)
    with pytest.raises(NotMaxGenerated):
        maxgen.to_symmetric(S(7, 11, 16, 17, 19))


def test_from_symmetric():
    assert maxgen.from_symmetric(S(3, 5)).min_generators == (3, 5, 7)
    assert maxgen.from_symmetric(S(2, 5)).min_generators == (2, 3)
    assert maxgen.from_symmetric(S(4, 6, 7)).min_generators == (4, 6, 7, 9)
    # the genus-1 symmetric semigroup maps down to the trivial one
    assert maxgen.from_symmetric(S(2, 3)).is_trivial
    with pytest.raises(NotSymmetric):
        maxgen.from_symmetric(S(3, 5, 7))


def test_round_trips():
    for gens in ([3, 5, 7], [2, 3], [4, 6, 7, 9], [5, 7, 9, 11, 13]):
        s = S(*gens)
        assert maxgen.from_symmetric(maxgen.to_symmetric(s)) == s
    for gens in ([3, 5], [2, 5], [4, 6, 7], [2, 7]):
        sp = S(*gens)
        assert maxgen.to_symmetric(maxgen.from_symmetric(sp)) == sp


def test_frobenius_formula():
    assert maxgen.frobenius_formula_check(S(3, 5, 7))
    assert maxgen.frobenius_formula_check(S(2, 3))
    assert maxgen.frobenius_formula_check(S(4, 6, 7, 9))
    with pytest.raises(NotMaxGenerated):
        maxgen.frobenius_formula_check(S(3, 4))


def test_reflected_gaps():
    s = S(7, 11, 16, 17, 19)
    assert maxgen.reflected_gaps(s.frobenius, s) == (5, 8, 10, 12, 15)
    assert maxgen.reflected_gaps(27, s) == (12, 15)
    assert maxgen.reflected_gaps(4, S(3, 5, 7)) == (2,)
    assert maxgen.reflected_gaps(1, S(3, 5, 7)) == ()
    assert maxgen.reflected_gaps(1, S(1)) == ()
    with pytest.raises(ValueError):
        maxgen.reflected_gaps(0, s)
    # agree with the naive oracle on a spread of (n, S)
    for gens in ([3, 5, 7], [4, 9, 11], [7, 11, 16, 17, 19]):
        for n in range(1, 30):
            assert list(maxgen.reflected_gaps(n, S(*gens))) == \
                oracle.reflected_gaps(gens, n)


def test_reflected_gap_report():
    r = maxgen.reflected_gap_report(S(3, 5, 7))
    assert (r.cond_i, r.cond_ii, r.cond_iii) == (True, True, True)
    assert r.rg_f == (2,)
    assert r.rg_f_plus_m == ()
    assert r.apery_minus == (5,)

    r = maxgen.reflected_gap_report(S(7, 11, 16, 17, 19))
    assert (r.cond_i, r.cond_ii, r.cond_iii) == (False, False, False)
    # the count half of cond_iii alone is satisfied: |RG(f)| = 5 = m - 2
    assert len(r.rg_f) == 5 == 7 - 2
    assert S(7, 11, 16, 17, 19).min_generators[-1] != 20 + 7

    # family <m, f+1..f+m> with f = m+2: a_e = f+m yet not max-generated
    s = maxgen.notiz_family(5, 7)
    r = maxgen.reflected_gap_report(s)
    assert s.min_generators[-1] == s.frobenius + s.multiplicity
    assert not r.cond_i and not r.cond_ii and not r.cond_iii

    with pytest.raises(IsTrivial):
        maxgen.reflected_gap_report(S(1))


def test_canonical_ideal():
    k = maxgen.canonical_ideal(S(3, 5, 7))
    assert k.offsets == (0, 2)
    assert [z for z in range(6) if z in k] == [0, 2, 3, 5]
    assert 6 in k and 100 in k and -1 not in k
    # symmetric: K = S, single offset 0
    for gens in ([3, 4], [2, 7], [3, 5]):
        sym = S(*gens)
        k = maxgen.canonical_ideal(sym)
        assert k.offsets == (0,)
        assert all((z in k) == (z in sym) for z in range(sym.conductor + 3))
    assert maxgen.canonical_ideal(S(4, 6, 7, 9)).offsets == (0, 2, 3)
    assert maxgen.canonical_ideal(S(7, 11, 16, 17, 19)).offsets == (0, 5, 8, 10)
    with pytest.raises(IsTrivial):
        maxgen.canonical_ideal(S(1))


def test_canonical_ideal_invariants():
    for gens in ([3, 5, 7], [4, 6, 7, 9], [7, 11, 16, 17, 19], [4, 9, 11]):
        s = S(*gens)
        k = maxgen.canonical_ideal(s)
        assert list(k.offsets) == oracle.canonical_offsets(gens)
        assert 0 in k
        f = s.frobenius
        assert len(k.members_below_bound) == f + 2
        # base is contained in the ideal, and the ideal in turn is the
        # union of offset + base
        for z in range(f + 2):
            if z in s:
                assert z in k
            in_union = any(z - o in s for o in k.offsets)
            assert (z in k) == in_union
        # minimality: no offset is another offset plus a positive member
        for o in k.offsets:
            for o2 in k.offsets:
                d = o - o2
                assert d <= 0 or d not in s


def test_canonical_offsets_match_pf_reflection():
    for gens in ([3, 5, 7], [4, 6, 7, 9], [3, 4], [7, 11, 16, 17, 19],
                 [4, 9, 11], [5, 8, 9], [6, 10, 15]):
        s = S(*gens)
        k = maxgen.canonical_ideal(s)
        f = s.frobenius
        assert list(k.offsets) == sorted(f - p for p in s.pseudo_frobenius())


def test_shift_display_discrepancy():
    # For S = <3,5,7> the shift {u - a_1 : u in S} minus {-a_1} contains
    # 4 = a_e - a_1, which is not in K; dropping a_e before shifting gives
    # exactly K.  This pins the one-sided mismatch down to element 4.
    s = S(3, 5, 7)
    k = maxgen.canonical_ideal(s)
    bound = 12
    full_shift = {u - 3 for u in range(25) if u in s} - {-3}
    dropped_shift = {u - 3 for u in range(25) if u in s and u != 7} - {-3}
    assert 4 in full_shift
    assert 4 not in k
    assert {z for z in range(bound) if z in k} == \
        {z for z in dropped_shift if 0 <= z < bound}
    assert full_shift - dropped_shift == {4}


def test_pf_formula():
    assert maxgen.pf_formula_check(S(3, 5, 7))
    assert maxgen.pf_formula_check(S(2, 3))
    assert maxgen.pf_formula_check(S(4, 6, 7, 9))
    assert S(3, 5, 7).pseudo_frobenius() == (2, 4)
    with pytest.raises(NotMaxGenerated):
        maxgen.pf_formula_check(S(3, 4))


def test_type_is_e_minus_one_when_max_generated():
    for gens in ([3, 5, 7], [2, 3], [4, 6, 7, 9], [5, 7, 9, 11, 13]):
        s = S(*gens)
        assert s.type_number() == s.embedding_dimension - 1


def test_wilf_report():
    r = maxgen.wilf_report(S(3, 5, 7))
    assert (r.e, r.g, r.f, r.m) == (3, 3, 4, 3)
    assert r.lhs == Fraction(3, 5)
    assert r.rhs == Fraction(2, 3)
    assert r.margin == Fraction(1, 15)
    assert r.holds and r.count_form_holds

    r = maxgen.wilf_report(S(3, 4, 5))
    assert r.margin == 0 and r.holds

    r = maxgen.wilf_report(S(2, 3))
    assert r.lhs == Fraction(1, 2) == r.rhs
    assert r.margin == 0

    with pytest.raises(IsTrivial):
        maxgen.wilf_report(S(1))


def test_wilf_report_forms_agree():
    for gens in ([3, 5, 7], [3, 4], [7, 11, 16, 17, 19], [4, 9, 11],
                 [2, 101], [6, 10, 15]):
        r = maxgen.wilf_report(S(*gens))
        assert r.holds == r.count_form_holds
        assert r.holds == (r.margin >= 0)


def test_inequality_chain():
    r = maxgen.maxgen_inequality_chain(S(3, 5, 7))
    assert r.mult_form_holds and r.symmetric_form_holds and r.wilf_holds
    assert maxgen.maxgen_inequality_chain(S(4, 6, 7, 9)).mult_form_holds
    # family <m, m+2, ..., 2m+1> at m = 5
    fam = maxgen.notiz_family(5, 6)
    assert (5 - 2) * (fam.embedding_dimension - 1) <= \
        (fam.embedding_dimension - 2) * fam.genus
    assert maxgen.maxgen_inequality_chain(fam).wilf_holds
    with pytest.raises(EmbeddingDimTooSmall):
        maxgen.maxgen_inequality_chain(S(2, 3))
    with pytest.raises(NotMaxGenerated):
        maxgen.maxgen_inequality_chain(S(3, 4))


def test_genus_lower_bound():
    assert maxgen.genus_lower_bound_check(S(3, 5))
    # interval <4,5,6,7>: g = 3 < 1 + 2*4/3
    assert not maxgen.genus_lower_bound_check(S(4, 5, 6, 7))
    assert maxgen.genus_lower_bound_check(S(2, 3))
    with pytest.raises(IsTrivial):
        maxgen.genus_lower_bound_check(S(1))


def test_genus_lower_bound_interval_family():
    # <m, ..., 2m-1> fails the bound exactly when m >= 3
    for m in range(2, 12):
        t = from_generators(list(range(m, 2 * m)))
        assert t.frobenius == m - 1
        assert maxgen.genus_lower_bound_check(t) == (m < 3)


def test_is_distinguished():
    s = S(3, 5, 7)
    assert maxgen.is_distinguished(s.pseudo_frobenius(), s)
    assert maxgen.is_distinguished({1, 2}, S(3, 4, 5))
    assert not maxgen.is_distinguished({4}, s)
    assert maxgen.is_distinguished(s.gaps(), s)
    with pytest.raises(NotAGapSet):
        maxgen.is_distinguished({3}, s)
    with pytest.raises(NotAGapSet):
        maxgen.is_distinguished({1, 9}, s)


def test_distinguished_contains_pf_and_bounds_wilf():
    # any distinguished D contains PF(S) and gives g/(F+1) <= d/(d+1)
    for gens in ([3, 5, 7], [4, 6, 7, 9], [4, 9, 11], [7, 11, 16, 17, 19]):
        s = S(*gens)
        pf = set(s.pseudo_frobenius())
        for d in (pf, set(s.gaps())):
            assert maxgen.is_distinguished(d, s)
            assert pf <= d
            assert Fraction(s.genus, s.frobenius + 1) <= \
                Fraction(len(d), len(d) + 1)


def test_close_largest_gap():
    assert maxgen.close_largest_gap(S(3, 5, 7)).min_generators == (3, 4, 5)
    assert maxgen.close_largest_gap(S(4, 5, 6, 7)).min_generators == (3, 4, 5)
    t = maxgen.close_largest_gap(S(4, 6, 7, 9))
    assert t.min_generators == (4, 5, 6, 7)
    assert t.embedding_dimension == 4
    assert maxgen.close_largest_gap(S(2, 3)).is_trivial
    with pytest.raises(NotMaxGenerated):
        maxgen.close_largest_gap(S(3, 4))


def test_close_largest_gap_drops_genus():
    for gens in ([3, 5, 7], [4, 6, 7, 9], [2, 3], [4, 5, 6, 7],
                 [5, 7, 9, 11, 13]):
        s = S(*gens)
        t = maxgen.close_largest_gap(s)
        assert t.genus == s.genus - 1
        assert t.frobenius < s.min_generators[-1] - s.min_generators[0]


def test_distinguished_set_for_closed():
    s = S(3, 5, 7)
    d = maxgen.distinguished_set_for_closed(s)
    t = maxgen.close_largest_gap(s)
    assert d == (1, 2)
    assert d == t.pseudo_frobenius()
    assert maxgen.is_distinguished(d, t)

    d = maxgen.distinguished_set_for_closed(S(4, 6, 7, 9))
    assert d == (1, 2, 3)
    assert d == maxgen.close_largest_gap(S(4, 6, 7, 9)).pseudo_frobenius()

    with pytest.raises(GapTooSmall):
        maxgen.distinguished_set_for_closed(S(2, 3))
    with pytest.raises(NotMaxGenerated):
        maxgen.distinguished_set_for_closed(S(3, 4))


def test_notiz_family():
    s = maxgen.notiz_family(4, 5)
    assert s.min_generators == (4, 6, 7, 9)
    assert maxgen.is_max_generated(s)

    # frozen from the oracle: genus 6, so 2g+1 = 13 != 11 = a_e
    s = maxgen.notiz_family(4, 7)
    assert s.min_generators == (4, 9, 10, 11)
    assert s.frobenius == 7
    assert s.genus == 6
    assert s.min_generators[-1] == 11 == 7 + 4
    assert not maxgen.is_max_generated(s)

    with pytest.raises(BadParameters):
        maxgen.notiz_family(3, 6)
    with pytest.raises(BadParameters):
        maxgen.notiz_family(2, 3)
    with pytest.raises(BadParameters):
        maxgen.notiz_family(5, 4)


def test_notiz_family_invariants_sweep():
    for m in range(3, 9):
        for f in range(m + 1, 4 * m):
            if f % m == 0:
                continue
            s = maxgen.notiz_family(m, f)
            assert s.frobenius == f
            assert s.multiplicity == m
            assert s.min_generators[-1] == f + m
            assert maxgen.is_max_generated(s) == (f == m + 1)


def test_interval_tails_are_max_generated():
    # <m, m+2, ..., 2m+1> has genus m and largest generator 2m+1
    for m in range(3, 11):
        s = maxgen.notiz_family(m, m + 1)
        assert s.genus == m
        assert s.min_generators[-1] == 2 * m + 1
        assert maxgen.is_max_generated(s)
