"""Semigroups whose largest minimal generator equals 2g + 1.

Writing a_1 < ... < a_e for the minimal generators and g for the genus, the
condition a_e = 2g + 1 pins down a lot of structure: n -> 2g+1-n maps the
members of [1, 2g] onto the gaps, F = a_e - m, PF(S) = {a_e - a_i : i < e},
the type is e - 1, and dropping a_e yields a symmetric semigroup of genus
g + 1 (with adjoining the Frobenius number as inverse).  Each of those
statements is exposed here as its own checkable operation so the campaign
runner in :mod:`numsgp.campaign` can confirm them exhaustively, and the
derived constructions (canonical ideal, closing the largest gap,
distinguished gap sets, the interval-tail family) live here too.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import core
from .core import Semigroup, from_generators
from .errors import (
    BadParameters,
    EmbeddingDimTooSmall,
    GapTooSmall,
    IsTrivial,
    NotAGapSet,
    NotMaxGenerated,
    NotSymmetric,
)


@dataclass(frozen=True)
class ShiftIdeal:
    """An ideal of a semigroup, normalized to minimal element 0.

    The ideal is the union of offset + base over the minimal offsets; every
    integer above F(base) belongs to it.  members_below_bound[z] answers
    z in ideal for z in [0, F(base)+1].
    """

    base: Semigroup
    offsets: tuple[int, ...]
    members_below_bound: tuple[bool, ...]

    def __contains__(self, z: int) -> bool:
        if z < 0:
            return False
        if z >= len(self.members_below_bound):
            return True
        return self.members_below_bound[z]


@dataclass(frozen=True)
class WilfReport:
    """Exact-rational evaluation of g/(F+1) <= (e-1)/e.

    count_form_holds records the equivalent member-count form
    e * (F + 1 - g) >= F + 1; the two verdicts agree for every semigroup.
    """

    e: int
    g: int
    f: int
    m: int
    lhs: Fraction
    rhs: Fraction
    margin: Fraction
    holds: bool
    count_form_holds: bool


@dataclass(frozen=True)
class ReflectedGapReport:
    """Three equivalent descriptions of a_e = 2g + 1, evaluated separately.

    cond_i:   a_e = 2g + 1
    cond_ii:  m + RG(f, S) = Ap(S) minus {0, f + m}, as sets
    cond_iii: a_e = f + m and |RG(f, S)| = m - 2

    where f = F(S) and RG(n, S) = {L in [1, n-1] : L not in S, n - L not in
    S}.  rg_f_plus_m is reported as well because the equivalence proof runs
    through RG(f + m, S) being empty.
    """

    cond_i: bool
    cond_ii: bool
    cond_iii: bool
    rg_f: tuple[int, ...]
    rg_f_plus_m: tuple[int, ...]
    apery_minus: tuple[int, ...]


@dataclass(frozen=True)
class InequalityChain:
    """Inequality forms that bracket Wilf's inequality for a_e = 2g + 1.

    mult_form_holds:      (m - 2)(e - 1) <= (e - 2) g        on S
    symmetric_form_holds: g' >= 1 + (m' - 2) e' / (e' - 1)   on S' = S minus {a_e}
    wilf_holds:           g e <= (e - 1)(F + 1)              on S
    """

    mult_form_holds: bool
    symmetric_form_holds: bool
    wilf_holds: bool


def _require_nontrivial(s: Semigroup) -> None:
    if s.is_trivial:
        raise IsTrivial("operation undefined for the full semigroup of "
                        "nonnegative integers")


def is_max_generated(s: Semigroup) -> bool:
    """True iff the largest minimal generator equals 2g + 1."""
    _require_nontrivial(s)
    return s.min_generators[-1] == 2 * s.genus + 1


def _require_max_generated(s: Semigroup) -> None:
    if not is_max_generated(s):
        raise NotMaxGenerated(
            "largest generator %d of %r differs from 2g+1 = %d"
            % (s.min_generators[-1], s, 2 * s.genus + 1))


def reflection_map(s: Semigroup) -> tuple[tuple[int, int], ...]:
    """Pairs (n, 2g+1-n) for the members n of [1, 2g], ascending in n.

    The second components run through the gaps of S exactly once; this is
    the member/gap bijection that characterizes a_e = 2g + 1.
    """
    _require_max_generated(s)
    top = 2 * s.genus + 1
    mask = s.members_mask
    c = s.conductor
    out = []
    for n in range(1, top):
        if n >= c or (mask >> n) & 1:
            out.append((n, top - n))
    return tuple(out)


def to_symmetric(s: Semigroup) -> Semigroup:
    """S minus {a_e}: a symmetric semigroup of genus g + 1 with F = a_e."""
    _require_max_generated(s)
    return core._remove_generator(s, s.min_generators[-1])


def from_symmetric(sp: Semigroup) -> Semigroup:
    """S' union {F(S')}: the max-generated semigroup of genus g(S') - 1.

    Inverse of to_symmetric; the two form a bijection between semigroups
    with a_e = 2g + 1 at genus g and symmetric semigroups at genus g + 1.
    """
    if not sp.is_symmetric():
        raise NotSymmetric("%r has F+1 = %d but 2g = %d"
                           % (sp, sp.frobenius + 1, 2 * sp.genus))
    return core._add_gap_member(sp, sp.frobenius)


def frobenius_formula_check(s: Semigroup) -> bool:
    """F = a_e - m; holds for every max-generated semigroup."""
    _require_max_generated(s)
    return s.frobenius == s.min_generators[-1] - s.multiplicity


def _rg_mask(mask: int, conductor: int, n: int) -> int:
    # bit L set iff L and n - L are both gaps, 1 <= L <= n - 1
    out = 0
    limit = min(n, conductor)
    v = ~mask & ((1 << limit) - 1) & ~1
    while v:
        low = v & -v
        w = n - low.bit_length() + 1
        if w >= conductor or (mask >> w) & 1:
            pass
        else:
            out |= low
        v ^= low
    return out


def _bits(v: int) -> list[int]:
    out = []
    while v:
        low = v & -v
        out.append(low.bit_length() - 1)
        v ^= low
    return out


def reflected_gaps(n: int, s: Semigroup) -> tuple[int, ...]:
    """RG(n, S) = {L in [1, n-1] : L not in S and n - L not in S}, sorted."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    return tuple(_bits(_rg_mask(s.members_mask, s.conductor, n)))


def reflected_gap_report(s: Semigroup) -> ReflectedGapReport:
    """Evaluate the three descriptions of a_e = 2g + 1 independently.

    The three verdicts agree on every numerical semigroup; the campaign
    checks exactly that.
    """
    _require_nontrivial(s)
    mask = s.members_mask
    c = s.conductor
    f = s.frobenius
    m = s.multiplicity
    ae = s.min_generators[-1]
    rgf = _rg_mask(mask, c, f)
    rgfm = _rg_mask(mask, c, f + m)
    apery = s.apery_set().entries
    fm = f + m
    apery_minus = tuple(sorted(x for x in apery if x != 0 and x != fm))
    shifted = tuple(L + m for L in _bits(rgf))
    return ReflectedGapReport(
        cond_i=ae == 2 * s.genus + 1,
        cond_ii=shifted == apery_minus,
        cond_iii=ae == fm and rgf.bit_count() == m - 2,
        rg_f=tuple(_bits(rgf)),
        rg_f_plus_m=tuple(_bits(rgfm)),
        apery_minus=apery_minus,
    )


def _canonical_masks(s: Semigroup) -> tuple[int, int]:
    """(K mask over [0, F], minimal-offset mask) for K = {z : F - z not in S}.

    An offset o is minimal when no positive member u of S has o - u in K;
    sweeping K upward by every positive member <= F marks all non-minimal
    elements at once.
    """
    mask = s.members_mask
    c = s.conductor
    f = s.frobenius
    k = 0
    v = ~mask & ((1 << c) - 1) & ~1
    while v:
        low = v & -v
        k |= 1 << (f - low.bit_length() + 1)
        v ^= low
    nonmin = 0
    v = mask & ~1
    while v:
        low = v & -v
        nonmin |= k << (low.bit_length() - 1)
        v ^= low
    return k, k & ~nonmin


def canonical_ideal(s: Semigroup) -> ShiftIdeal:
    """The canonical ideal K = {z : F(S) - z not in S}, minimal element 0.

    Its minimal offsets equal {F - p : p in PF(S)}; for a_e = 2g + 1 they
    also equal {a_i - a_1 : i < e}, which identifies K with the shifted set
    {u - a_1 : u in S, u != a_e}.  Shifting all of S would wrongly include
    a_e - a_1, which is why the largest generator is dropped first.
    """
    _require_nontrivial(s)
    k, offs = _canonical_masks(s)
    f = s.frobenius
    table = tuple(bool((k >> z) & 1) for z in range(f + 1)) + (True,)
    return ShiftIdeal(base=s, offsets=tuple(_bits(offs)),
                      members_below_bound=table)


def pf_formula_check(s: Semigroup) -> bool:
    """PF(S) = {a_e - a_i : 1 <= i <= e-1}; holds whenever a_e = 2g + 1."""
    _require_max_generated(s)
    ae = s.min_generators[-1]
    expected = sorted(ae - a for a in s.min_generators[:-1])
    return list(s.pseudo_frobenius()) == expected


def wilf_report(s: Semigroup) -> WilfReport:
    """Evaluate g/(F+1) <= (e-1)/e exactly, plus the member-count form."""
    _require_nontrivial(s)
    e = len(s.min_generators)
    g = s.genus
    f = s.frobenius
    lhs = Fraction(g, f + 1)
    rhs = Fraction(e - 1, e)
    return WilfReport(
        e=e, g=g, f=f, m=s.multiplicity,
        lhs=lhs, rhs=rhs, margin=rhs - lhs,
        holds=g * e <= (e - 1) * (f + 1),
        count_form_holds=e * (f + 1 - g) >= f + 1,
    )


def maxgen_inequality_chain(s: Semigroup) -> InequalityChain:
    """Check (m-2)(e-1) <= (e-2)g on S and the genus bound on S minus {a_e}.

    Both follow from, and together are as strong as, Wilf's inequality for
    max-generated S with e > 2, so all three verdicts must agree.
    """
    _require_max_generated(s)
    e = len(s.min_generators)
    if e <= 2:
        raise EmbeddingDimTooSmall(
            "inequality chain needs e > 2, got e = %d" % e)
    g = s.genus
    sp = to_symmetric(s)
    ep = len(sp.min_generators)
    return InequalityChain(
        mult_form_holds=(s.multiplicity - 2) * (e - 1) <= (e - 2) * g,
        symmetric_form_holds=(sp.genus - 1) * (ep - 1)
                             >= (sp.multiplicity - 2) * ep,
        wilf_holds=g * e <= (e - 1) * (s.frobenius + 1),
    )


def genus_lower_bound_check(t: Semigroup) -> bool:
    """Truth value of g >= 1 + (m - 2) e / (e - 1), in integer arithmetic.

    The bound holds whenever F(T) > m(T); for the interval semigroups
    <m, ..., 2m-1> (the only ones with F < m) it fails exactly when m >= 3,
    so this returns the verdict without asserting anything.
    """
    _require_nontrivial(t)
    e = len(t.min_generators)
    return (t.genus - 1) * (e - 1) >= (t.multiplicity - 2) * e


def is_distinguished(d: "set[int] | tuple[int, ...] | list[int]",
                     s: Semigroup) -> bool:
    """True iff every gap a of S has some member u of S with a + u in D.

    A distinguished set D necessarily contains PF(S), and its size d bounds
    the Wilf quotient by d/(d+1); u = 0 is allowed, so every element of D
    covers itself.
    """
    dset = sorted(set(d))
    gaps = s.gaps()
    gapset = frozenset(gaps)
    bad = [x for x in dset if x not in gapset]
    if bad:
        raise NotAGapSet("not gaps of %r: %s" % (s, bad))
    for a in gaps:
        for x in dset:
            if x >= a and (x - a) in s:
                break
        else:
            return False
    return True


def close_largest_gap(s: Semigroup) -> Semigroup:
    """T = S union {a_e - a_1}, the largest gap of S closed.

    g(T) = g(S) - 1 and T satisfies Wilf's inequality.  When a_e > 2 a_1
    the result keeps the embedding dimension: T = <a_1, ..., a_{e-1},
    a_e - a_1>; otherwise S is the interval <a_1, ..., 2a_1 - 1> and T is
    the interval one multiplicity down.
    """
    _require_max_generated(s)
    x = s.min_generators[-1] - s.min_generators[0]
    return core._add_gap_member(s, x)


def distinguished_set_for_closed(s: Semigroup) -> tuple[int, ...]:
    """D = {a_e - 2a_1} union {a_e - a_i : 2 <= i <= e-1}, sorted.

    D is a distinguished gap set of close_largest_gap(S) and equals its
    pseudo-Frobenius set; defined when a_e > 2 a_1.
    """
    _require_max_generated(s)
    gens = s.min_generators
    ae = gens[-1]
    if ae < 2 * gens[0]:
        raise GapTooSmall("largest generator %d below 2 * %d"
                          % (ae, gens[0]))
    out = {ae - 2 * gens[0]}
    out.update(ae - a for a in gens[1:-1])
    return tuple(sorted(out))


def notiz_family(m: int, f: int) -> Semigroup:
    """The semigroup <m, f+1, f+2, ..., f+m> for f > m >= 3 with m not
    dividing f.

    Its Frobenius number is f and its largest minimal generator is f + m;
    it is max-generated exactly when f = m + 1.
    """
    if m < 3:
        raise BadParameters("need m >= 3, got m = %d" % m)
    if f <= m:
        raise BadParameters("need f > m, got f = %d, m = %d" % (f, m))
    if f % m == 0:
        raise BadParameters("f = %d is a multiple of m = %d" % (f, m))
    return from_generators([m] + list(range(f + 1, f + m + 1)))
