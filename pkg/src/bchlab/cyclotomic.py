"""q-cyclotomic cosets modulo rn and defining sets for BCH-type codes.

Everything here is integer combinatorics: cosets C_x = {x q^t mod N},
their leaders (smallest members), and the defining sets of two families of
codes whose length divides q^m + 1:

* cyclic, length n = q^m + 1: residues live in Z_n (step r = 1);
* negacyclic, length n = (q^m + 1)/2 with q = 3 (mod 4): residues are the
  odd class 1 + 2 Z_2n (step r = 2).

In both families q^m = -1 (mod rn), so every coset is closed under
negation and defining sets built from coset unions satisfy -T = T.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator

from .errors import (
    AsymmetricSet,
    BadDelta,
    BadFamilyParams,
    EmptySet,
    NotCoprime,
    NotEnoughCosets,
)

CYCLIC = "cyclic"
NEGACYCLIC = "negacyclic"
FAMILIES = (CYCLIC, NEGACYCLIC)


def ord_mod(a: int, n: int) -> int:
    """Multiplicative order of a modulo n (raises NotCoprime if undefined)."""
    if n <= 1:
        raise NotCoprime(f"modulus must be >= 2, got {n}")
    a %= n
    if math.gcd(a, n) != 1:
        raise NotCoprime(f"gcd({a}, {n}) != 1")
    t, x = 1, a
    while x != 1:
        x = x * a % n
        t += 1
    return t


def coset(x: int, q: int, n: int) -> tuple[int, ...]:
    """The q-cyclotomic coset of x modulo n, as a sorted tuple."""
    if math.gcd(q % n, n) != 1:
        raise NotCoprime(f"gcd({q}, {n}) != 1")
    x %= n
    out = [x]
    y = x * q % n
    while y != x:
        out.append(y)
        y = y * q % n
    return tuple(sorted(out))


def leader_map(q: int, n: int, odd_only: bool = False) -> dict[int, int]:
    """Map each residue of the class to its coset leader, one O(n) sweep.

    odd_only restricts to the class 1 + 2 Z_n (n must then be even).
    """
    if math.gcd(q % n, n) != 1:
        raise NotCoprime(f"gcd({q}, {n}) != {1}")
    if odd_only and n % 2:
        raise BadFamilyParams("odd residue class needs an even modulus")
    leaders: dict[int, int] = {}
    start, step = (1, 2) if odd_only else (0, 1)
    for x in range(start, n, step):
        if x in leaders:
            continue
        orbit = [x]
        y = x * q % n
        while y != x:
            orbit.append(y)
            y = y * q % n
        lead = min(orbit)
        for y in orbit:
            leaders[y] = lead
    return leaders


def coset_leaders(q: int, n: int, odd_only: bool = False) -> list[int]:
    """Sorted leaders of all q-cyclotomic cosets of the residue class."""
    lm = leader_map(q, n, odd_only)
    return sorted(set(lm.values()))


def kth_largest_leader(q: int, n: int, k: int, odd_only: bool = False) -> int:
    """The k-th largest coset leader (k = 1 is the largest)."""
    if k < 1:
        raise NotEnoughCosets(f"k must be >= 1, got {k}")
    leaders = coset_leaders(q, n, odd_only)
    if k > len(leaders):
        raise NotEnoughCosets(f"only {len(leaders)} cosets, asked for k={k}")
    return leaders[-k]


@dataclass(frozen=True)
class DefiningSet:
    """A union of q-cyclotomic cosets inside one residue class mod rn.

    r = 1 means the class is all of Z_rn (cyclic); r = 2 means the odd
    class 1 + 2 Z_rn (negacyclic).  Set operations require both operands
    to carry the same (q, rn, r) tag.
    """

    q: int
    modulus: int  # rn
    r: int  # 1 or 2
    residues: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.r not in (1, 2):
            raise BadFamilyParams(f"r must be 1 or 2, got {self.r}")
        if self.r == 2 and self.modulus % 2:
            raise BadFamilyParams("odd residue class needs an even modulus")
        for x in self.residues:
            if not 0 <= x < self.modulus:
                raise BadFamilyParams(f"residue {x} outside [0, {self.modulus})")
            if self.r == 2 and x % 2 == 0:
                raise BadFamilyParams(f"residue {x} not in the odd class")

    @property
    def family(self) -> str:
        return CYCLIC if self.r == 1 else NEGACYCLIC

    @property
    def n(self) -> int:
        """Code length: class size (modulus / r)."""
        return self.modulus // self.r

    def class_residues(self) -> Iterator[int]:
        start = 1 if self.r == 2 else 0
        return iter(range(start, self.modulus, self.r))

    def _check_compatible(self, other: "DefiningSet") -> None:
        if (self.q, self.modulus, self.r) != (other.q, other.modulus, other.r):
            raise BadFamilyParams(
                f"incompatible sets: ({self.q},{self.modulus},{self.r}) vs "
                f"({other.q},{other.modulus},{other.r})"
            )

    def __contains__(self, x: int) -> bool:
        return x % self.modulus in self.residues

    def __len__(self) -> int:
        return len(self.residues)

    def union(self, other: "DefiningSet") -> "DefiningSet":
        self._check_compatible(other)
        return DefiningSet(self.q, self.modulus, self.r,
                           self.residues | other.residues)

    def is_symmetric(self) -> bool:
        """True when -T = T modulo rn."""
        return all((-x) % self.modulus in self.residues for x in self.residues)

    def leaders(self) -> list[int]:
        """Sorted leaders of the cosets making up the set."""
        if not self.residues:
            return []
        seen: set[int] = set()
        out: list[int] = []
        for x in sorted(self.residues):
            if x in seen:
                continue
            orbit = coset(x, self.q, self.modulus)
            if not all(y in self.residues for y in orbit):
                raise AsymmetricSet(
                    f"residues are not a union of cosets near {x}")
            seen.update(orbit)
            out.append(orbit[0])
        return out


def _check_family_params(q: int, m: int, family: str) -> None:
    if family not in FAMILIES:
        raise BadFamilyParams(f"family must be one of {FAMILIES}, got {family!r}")
    if q < 3 or q % 2 == 0:
        raise BadFamilyParams(f"q must be an odd prime power >= 3, got {q}")
    if m < 2:
        raise BadFamilyParams(f"m must be >= 2, got {m}")
    if family == NEGACYCLIC and q % 4 != 3:
        raise BadFamilyParams(
            f"negacyclic family needs q = 3 (mod 4), got q = {q}")


def family_parameters(q: int, m: int, family: str) -> tuple[int, int, int]:
    """(n, r, rn) for the family; validates (q, m, family)."""
    _check_family_params(q, m, family)
    if family == CYCLIC:
        n = q**m + 1
        r = 1
    else:
        n = (q**m + 1) // 2
        r = 2
    return n, r, r * n


def defining_set(q: int, m: int, family: str, delta: int,
                 b: int | None = None) -> DefiningSet:
    """Defining set of the BCH-type code with designed distance delta.

    T = C_b u C_{b+r} u ... u C_{b+r(delta-2)}, residues mod rn.  The
    narrow-sense default is b = 1; cyclic codes also accept b = 0 (the
    even-like choice).  Negacyclic offsets must be odd.
    """
    n, r, rn = family_parameters(q, m, family)
    if not 2 <= delta <= n:
        raise BadDelta(f"delta must be in [2, {n}], got {delta}")
    if b is None:
        b = 1
    b %= rn
    if r == 2 and b % 2 == 0:
        raise BadFamilyParams(f"negacyclic offset must be odd, got {b}")
    residues: set[int] = set()
    for i in range(delta - 1):
        residues.update(coset(b + r * i, q, rn))
    return DefiningSet(q, rn, r, frozenset(residues))


def dual_defining_set(t: DefiningSet) -> DefiningSet:
    """Defining set of the dual code: the class minus -T.

    Raises AsymmetricSet when -T != T (cannot happen for sets built by
    defining_set at these lengths, where q^m = -1 mod rn).
    """
    if not t.residues:
        raise EmptySet("dual of an empty defining set is the whole class; "
                       "build it explicitly if that is what you want")
    if not t.is_symmetric():
        raise AsymmetricSet("defining set is not closed under negation")
    complement = frozenset(x for x in t.class_residues()
                           if x not in t.residues)
    return DefiningSet(t.q, t.modulus, t.r, complement)
