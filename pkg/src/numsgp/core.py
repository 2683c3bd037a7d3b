"""Numerical semigroups: construction and the classical invariants.

A numerical semigroup S is a subset of the nonnegative integers containing 0,
closed under addition, with finite complement.  We store membership below the
conductor c = F + 1 as a bitmask (bit n set iff n in S); everything from c on
is in S by definition, so the mask plus the conductor determine S exactly.

Invariants follow the usual notation: gaps(S) is the complement, g = #gaps
the genus, F the largest gap (Frobenius number), m the least positive element
(multiplicity), e the embedding dimension.  The trivial semigroup of all
nonnegative integers has F = -1, c = 0, g = 0.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator

from .errors import (
    ConductorCapExceeded,
    EmptyInput,
    IsTrivial,
    NonCoprime,
)

DEFAULT_CONDUCTOR_CAP = 2**31


def conductor_cap() -> int:
    """Active conductor bound; NUMSGP_MAX_CONDUCTOR overrides the default."""
    raw = os.environ.get("NUMSGP_MAX_CONDUCTOR", "").strip()
    return int(raw) if raw else DEFAULT_CONDUCTOR_CAP


@dataclass(frozen=True)
class AperyTable:
    """Apery set of S with respect to its multiplicity m.

    entries[r] is the least element of S congruent to r mod m, so
    entries[0] == 0 and max(entries) == F + m.
    """

    modulus: int
    entries: tuple[int, ...]

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(sorted(self.entries))

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)


class Semigroup:
    """Immutable numerical semigroup.

    Not constructed directly; use from_generators().  Equality and hashing go
    through the minimal generating set, which is unique.
    """

    __slots__ = (
        "min_generators",
        "conductor",
        "members_mask",
        "genus",
        "frobenius",
        "multiplicity",
        "_gaps",
        "_apery",
        "_pf",
    )

    def __init__(self, min_generators, conductor, members_mask, genus,
                 frobenius, multiplicity):
        self.min_generators = min_generators
        self.conductor = conductor
        self.members_mask = members_mask
        self.genus = genus
        self.frobenius = frobenius
        self.multiplicity = multiplicity
        self._gaps = None
        self._apery = None
        self._pf = None

    # pickling support: __slots__ classes have no __dict__ on 3.10
    def __getstate__(self):
        return (self.min_generators, self.conductor, self.members_mask,
                self.genus, self.frobenius, self.multiplicity)

    def __setstate__(self, state):
        (self.min_generators, self.conductor, self.members_mask,
         self.genus, self.frobenius, self.multiplicity) = state
        self._gaps = None
        self._apery = None
        self._pf = None

    def __repr__(self) -> str:
        return "Semigroup<%s>" % ", ".join(map(str, self.min_generators))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Semigroup):
            return NotImplemented
        return self.min_generators == other.min_generators

    def __hash__(self) -> int:
        return hash(self.min_generators)

    def __contains__(self, n: int) -> bool:
        if n >= self.conductor:
            return True
        if n < 0:
            return False
        return (self.members_mask >> n) & 1 == 1

    @property
    def embedding_dimension(self) -> int:
        return len(self.min_generators)

    @property
    def is_trivial(self) -> bool:
        """True for the semigroup of all nonnegative integers."""
        return self.conductor == 0

    @property
    def largest_generator(self) -> int:
        return self.min_generators[-1]

    def membership(self, n: int) -> bool:
        return n in self

    def gaps(self) -> tuple[int, ...]:
        """The complement, ascending.  Empty for the trivial semigroup."""
        if self._gaps is None:
            mask = self.members_mask
            self._gaps = tuple(n for n in range(1, self.conductor)
                               if not (mask >> n) & 1)
        return self._gaps

    def sporadic_elements(self) -> tuple[int, ...]:
        """Elements of S strictly between 0 and F, ascending.

        Their count sigma satisfies F + 1 = sigma + g + (number of gaps
        counted once each), i.e. sigma = F + 1 - g - 1 + ... concretely
        sigma = F - g when F >= 0, since [1, F] splits into gaps and
        sporadic elements.
        """
        mask = self.members_mask
        return tuple(n for n in range(1, self.frobenius)
                     if (mask >> n) & 1)

    def apery_set(self) -> AperyTable:
        """Least element of S in each residue class mod m."""
        if self._apery is None:
            m = self.multiplicity
            if m == 1:
                self._apery = AperyTable(1, (0,))
            else:
                mask = self.members_mask
                c = self.conductor
                entries = [0] * m
                remaining = m - 1
                n = m + 1
                while remaining:
                    if n >= c or (mask >> n) & 1:
                        r = n % m
                        if r and entries[r] == 0:
                            entries[r] = n
                            remaining -= 1
                    n += 1
                self._apery = AperyTable(m, tuple(entries))
        return self._apery

    def pseudo_frobenius(self) -> tuple[int, ...]:
        """Gaps p with p + s in S for every positive s in S, ascending.

        It suffices to test s over the minimal generators.
        """
        if self.is_trivial:
            raise IsTrivial("pseudo-Frobenius numbers need a nonempty gap set")
        if self._pf is None:
            gens = self.min_generators
            c = self.conductor
            mask = self.members_mask
            out = []
            for p in self.gaps():
                for a in gens:
                    t = p + a
                    if t < c and not (mask >> t) & 1:
                        break
                else:
                    out.append(p)
            self._pf = tuple(out)
        return self._pf

    def type_number(self) -> int:
        """Number of pseudo-Frobenius numbers."""
        return len(self.pseudo_frobenius())

    def is_symmetric(self) -> bool:
        """True iff F + 1 = 2g, i.e. n in S <=> F - n not in S."""
        if self.is_trivial:
            raise IsTrivial("symmetry is undefined without gaps")
        return self.frobenius + 1 == 2 * self.genus


#: The semigroup of all nonnegative integers.
def _naturals() -> Semigroup:
    return Semigroup((1,), 0, 0, 0, -1, 1)


def _min_generators_from_mask(mask: int, conductor: int, mult: int) -> tuple[int, ...]:
    """Minimal generators of the semigroup given by (mask, conductor).

    Minimal generators are the positive elements that are not a sum of two
    positive elements; all of them are <= F + m, so it is enough to look at
    the window [1, conductor + mult).
    """
    if conductor == 0:
        return (1,)
    bound = conductor + mult
    ext = mask | (((1 << bound) - 1) ^ ((1 << conductor) - 1))
    pos = ext & ~1
    half = bound // 2
    acc = 0
    v = pos
    while v:
        low = v & -v
        u = low.bit_length() - 1
        if u > half:
            break
        acc |= pos << u
        v ^= low
    gens = []
    v = pos & ~acc
    while v:
        low = v & -v
        gens.append(low.bit_length() - 1)
        v ^= low
    return tuple(gens)


def _from_mask(mask: int, known_bound: int) -> Semigroup:
    """Canonical Semigroup from a membership mask valid on [0, known_bound).

    Caller promises every n >= known_bound is a member.
    """
    missing = ((1 << known_bound) - 1) & ~mask
    if missing == 0:
        return _naturals()
    frobenius = missing.bit_length() - 1
    conductor = frobenius + 1
    mask &= (1 << conductor) - 1
    genus = conductor - mask.bit_count()
    positives = mask & ~1
    if positives:
        mult = (positives & -positives).bit_length() - 1
    else:
        mult = conductor
    gens = _min_generators_from_mask(mask, conductor, mult)
    return Semigroup(gens, conductor, mask, genus, frobenius, mult)


def _sieve(gens: Iterable[int], bound: int) -> int:
    """Membership mask of <gens> on [0, bound) by repeated shifted unions."""
    limit = (1 << bound) - 1
    mask = 1
    while True:
        new = mask
        for a in gens:
            new |= (new << a) & limit
        if new == mask:
            return mask
        mask = new


def _certified_conductor(mask: int, bound: int, mult: int) -> int | None:
    """Smallest c with [c, c + mult) all members, or None if no run fits.

    A run of mult consecutive members proves everything beyond its start is a
    member (add multiples of mult), so c bounds the conductor from above; c is
    in fact the conductor exactly when the mask is the true membership table
    up to bound, which the sieve guarantees.
    """
    if mult == 1:
        runs = mask
    else:
        runs = mask
        for i in range(1, mult):
            runs &= mask >> i
            if not runs:
                return None
    runs &= (1 << max(bound - mult + 1, 0)) - 1
    if runs == 0:
        return None
    return (runs & -runs).bit_length() - 1


def from_generators(values: Iterable[int]) -> Semigroup:
    """Numerical semigroup generated by the given positive integers.

    Raises EmptyInput for an empty list, NonCoprime when the gcd exceeds 1,
    ValueError for nonpositive entries, and ConductorCapExceeded when the
    conductor would reach conductor_cap().  The result's min_generators is
    the unique minimal generating set, which may be smaller than the input.
    """
    gens = sorted(set(values))
    if not gens:
        raise EmptyInput("need at least one generator")
    if gens[0] < 1:
        raise ValueError("generators must be positive integers")
    if gens[0] == 1:
        return _naturals()
    d = 0
    for a in gens:
        d = gcd(d, a)
    if d != 1:
        raise NonCoprime("gcd of generators is %d" % d)

    cap = conductor_cap()
    a1 = gens[0]
    # Conductor upper bound from the best coprime pair, when one exists:
    # c(<a, b>) = (a - 1)(b - 1) and adding generators only shrinks c.
    pair_bound = None
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            if gcd(a, b) == 1:
                v = (a - 1) * (b - 1)
                if pair_bound is None or v < pair_bound:
                    pair_bound = v
    bound = max(gens[-1], a1 * gens[1]) + 1
    if pair_bound is not None:
        if pair_bound >= cap:
            # only safe to reject outright when the pair bound is exact
            if len(gens) == 2:
                raise ConductorCapExceeded(
                    "conductor %d reaches the cap %d" % (pair_bound, cap))
        bound = min(bound, pair_bound + a1 + 1)
    while True:
        mask = _sieve(gens, bound)
        c = _certified_conductor(mask, bound, a1)
        if c is not None:
            break
        if bound - a1 >= cap:
            raise ConductorCapExceeded(
                "no conductor below the cap %d" % cap)
        bound = min(bound * 2, cap + a1)
    if c >= cap:
        raise ConductorCapExceeded(
            "conductor %d reaches the cap %d" % (c, cap))
    return _from_mask(mask, bound)


def _remove_generator(s: Semigroup, a: int) -> Semigroup:
    """S without one minimal generator a, for a > F(S).

    Removing such a generator keeps additive closure and raises the genus by
    one; this is the child step of the genus tree.  New minimal generators
    can only appear in (a, a + m'], m' the child's multiplicity.
    """
    conductor = a + 1
    child_mask = (s.members_mask | (((1 << conductor) - 1)
                                    ^ ((1 << s.conductor) - 1))) ^ (1 << a)
    mult = s.multiplicity
    if a == mult:
        positives = child_mask & ~1
        mult = ((positives & -positives).bit_length() - 1
                if positives else conductor)
    bound = conductor + mult
    ext = child_mask | (((1 << bound) - 1) ^ ((1 << conductor) - 1))
    pos = ext & ~1
    half = bound // 2
    acc = 0
    v = pos
    while v:
        low = v & -v
        u = low.bit_length() - 1
        if u > half:
            break
        acc |= pos << u
        v ^= low
    fresh = [t for t in range(a + 1, bound) if not (acc >> t) & 1]
    gens = [x for x in s.min_generators if x != a]
    for t in fresh:
        if t not in gens:
            gens.append(t)
    gens.sort()
    return Semigroup(tuple(gens), conductor, child_mask, s.genus + 1, a, mult)


def _add_gap_member(s: Semigroup, x: int) -> Semigroup:
    """The closure S union {x} for a gap x with x + S subset of S union {x}.

    Only valid when the union is itself a semigroup (x = F, or more generally
    x a pseudo-Frobenius number); callers guarantee that.
    """
    mask = s.members_mask | (1 << x)
    return _from_mask(mask, s.conductor)
