"""Cycles of the map x -> (k*x + c)/2 (x odd), x/2 (x even).

A cycle is described by its parity vector (1 = odd member).  Splitting a
parity vector that starts with a run of ones and ends with a run of zeros
into runs gives the exponent pairs ``(k_i, h_i)`` of a ``ReducedWordSpec``,
from which the closed-form member ``c*A / ((k-2)*(2**l - k**N1))`` follows.
``enumerate_cycles`` is the brute-force oracle the closed forms are checked
against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import groupby
from math import gcd

from .words import BinaryWord, min_rotation, period, rotate_left


class NoSuchCycle(ValueError):
    """No cycle exists for the requested parameters; ``predicate`` names the failing test."""

    def __init__(self, message, predicate):
        super().__init__(message)
        self.predicate = predicate


class InconsistentCycle(RuntimeError):
    """Iteration disagreed with the closed form. Always a bug."""


def check_params(k: int, c: int):
    if k < 3 or k % 2 == 0:
        raise ValueError(f"k must be odd and >= 3, got {k}")
    if c < 1 or c % 2 == 0:
        raise ValueError(f"c must be odd and >= 1, got {c}")


def step(x: int, k: int = 3, c: int = 1) -> int:
    check_params(k, c)
    return (k * x + c) // 2 if x & 1 else x // 2


@dataclass(frozen=True, eq=False)
class ParityVector(BinaryWord):
    """A binary word read as a cycle's odd/even pattern. Needs at least one 1."""

    def __post_init__(self):
        super().__post_init__()
        if self.value == 0:
            raise ValueError("a parity vector needs at least one odd position")

    @classmethod
    def of(cls, b: BinaryWord) -> "ParityVector":
        return cls(b.length, b.value)

    @property
    def is_canonical(self) -> bool:
        """Starts with a 1-run and ends with a 0-run."""
        return self.bit(0) == 1 and self.bit(self.length - 1) == 0


def parity(text: str) -> ParityVector:
    return ParityVector.of(BinaryWord.parse(text))


def z_map(b: BinaryWord, k: int = 3) -> int:
    """``sum(k**(N1 - i) * 2**x_i)`` over the 1-bit positions ``x_1 < ... < x_N1``."""
    xs = b.positions()
    if not xs:
        raise ValueError("z is undefined on the all-zeros word")
    n = len(xs)
    return sum(k ** (n - 1 - i) << x for i, x in enumerate(xs))


def canonical_parity(pv: BinaryWord, k: int = 3) -> tuple[ParityVector, int]:
    """Rotate ``pv`` left to the rotation with the least ``z_map`` value.

    That rotation is the one whose cycle starts at its smallest member, and it
    always starts with 1 and ends with 0 unless the vector has no zeros.
    Returns the rotated vector and the left-rotation amount (least on ties).
    """
    best = min(range(pv.length), key=lambda r: (z_map(rotate_left(pv, r), k), r))
    return ParityVector.of(rotate_left(pv, best)), best


@dataclass(frozen=True)
class ReducedWordSpec:
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.pairs:
            raise ValueError("empty reduced word")
        for ki, hi in self.pairs:
            if ki < 1 or hi < 1:
                raise ValueError(f"run exponents must be positive: {self.pairs}")

    @property
    def ones(self) -> int:
        return sum(ki for ki, _ in self.pairs)

    @property
    def zeros(self) -> int:
        return sum(hi for _, hi in self.pairs)

    @property
    def length(self) -> int:
        return self.ones + self.zeros

    def to_parity(self) -> ParityVector:
        return parity("".join("1" * ki + "0" * hi for ki, hi in self.pairs))


def spec_from_parity(pv: BinaryWord) -> ReducedWordSpec:
    pv = ParityVector.of(pv)
    if not pv.is_canonical:
        raise ValueError(f"{pv} must start with 1 and end with 0; rotate it with canonical_parity first")
    runs = [len(list(g)) for _, g in groupby(str(pv))]
    return ReducedWordSpec(tuple(zip(runs[::2], runs[1::2])))


def a_terms(spec: ReducedWordSpec, k: int = 3) -> list[int]:
    """``a_i = 2**(sum of earlier k_j + h_j) * (k**k_i - 2**k_i) * k**(sum of later k_j)``."""
    terms = []
    before = 0
    after = spec.ones
    for ki, hi in spec.pairs:
        after -= ki
        terms.append((k**ki - 2**ki) * k**after << before)
        before += ki + hi
    return terms


def compute_A(spec: ReducedWordSpec, k: int = 3) -> int:
    return sum(a_terms(spec, k))


def cycle_denominator(length: int, ones: int, k: int = 3) -> int:
    """``(k - 2) * (2**length - k**ones)``; the factor ``k - 2`` is 1 for k = 3."""
    return (k - 2) * ((1 << length) - k**ones)


def smallest_member(spec: ReducedWordSpec, k: int = 3, c: int = 1) -> Fraction:
    """Closed-form member at which the parity word starts.

    This is the cycle's smallest member when the word is the least-z rotation
    (see ``canonical_parity``).  The cycle exists only if the result is an
    integer (``.denominator == 1``).
    """
    check_params(k, c)
    d = cycle_denominator(spec.length, spec.ones, k)
    if d <= 0:
        raise NoSuchCycle(
            f"2^{spec.length} - {k}^{spec.ones} <= 0: no cycle can have this shape", "positivity"
        )
    return Fraction(c * compute_A(spec, k), d)


@dataclass(frozen=True)
class Cycle:
    k: int
    c: int
    members: tuple[int, ...]

    def __post_init__(self):
        m = self.members
        if not m:
            raise ValueError("empty cycle")
        if len(set(m)) != len(m):
            raise ValueError("cycle members must be distinct")
        if m[0] != min(m):
            raise ValueError("cycle must start at its smallest member")
        for i, x in enumerate(m):
            if step(x, self.k, self.c) != m[(i + 1) % len(m)]:
                raise ValueError(f"{x} does not map to {m[(i + 1) % len(m)]}")

    @classmethod
    def from_orbit(cls, k, c, orbit) -> "Cycle":
        i = orbit.index(min(orbit))
        return cls(k, c, tuple(orbit[i:]) + tuple(orbit[:i]))

    def __len__(self):
        return len(self.members)

    @property
    def parity(self) -> ParityVector:
        return ParityVector.from_bits(x & 1 for x in self.members)

    @property
    def ones(self) -> int:
        return sum(x & 1 for x in self.members)

    @property
    def max_odd(self) -> int:
        return max(x for x in self.members if x & 1)

    @property
    def primitive(self) -> bool:
        return is_primitive(self)

    def to_record(self) -> dict:
        return {
            "k": self.k,
            "c": str(self.c),
            "members": [str(x) for x in self.members],
            "parity": str(self.parity),
            "primitive": self.primitive,
        }


def iterate(x: int, k: int, c: int, n: int) -> list[int]:
    out = [x]
    for _ in range(n - 1):
        x = step(x, k, c)
        out.append(x)
    return out


def build_cycle(spec: ReducedWordSpec, k: int = 3, c: int = 1) -> Cycle:
    """Synthesize the cycle with parity ``spec`` from the closed form and verify it by iteration.

    A periodic parity word (e.g. ``1010``) realizes the shorter cycle of its
    fundamental period.  The returned cycle starts at its smallest member.
    """
    v1 = smallest_member(spec, k, c)
    if v1.denominator != 1:
        raise NoSuchCycle(f"v1 = {v1} is not an integer", "integrality")
    pv = spec.to_parity()
    orbit = iterate(int(v1), k, c, pv.length + 1)
    if orbit[-1] != orbit[0]:
        raise InconsistentCycle(f"{orbit} does not close")
    realized = BinaryWord.from_bits(x & 1 for x in orbit[:-1])
    if realized != pv:
        raise InconsistentCycle(f"realized parity {realized} != {pv}")
    return Cycle.from_orbit(k, c, orbit[: period(pv)])


def cycle_from_parity(pv: BinaryWord, k: int = 3, c: int = 1) -> Cycle:
    canon, _ = canonical_parity(pv, k)
    if canon.zeros == 0:
        raise NoSuchCycle(f"{pv} has no even position", "positivity")
    return build_cycle(spec_from_parity(canon), k, c)


def cycle_from_member(x: int, k: int = 3, c: int = 1, max_length: int = 10_000) -> Cycle:
    """The cycle through ``x``; raises NoSuchCycle if ``x`` does not return within ``max_length`` steps."""
    orbit = [x]
    y = step(x, k, c)
    while y != x:
        if len(orbit) >= max_length:
            raise NoSuchCycle(f"{x} does not return within {max_length} steps", "membership")
        orbit.append(y)
        y = step(y, k, c)
    return Cycle.from_orbit(k, c, orbit)


@dataclass(frozen=True)
class ExistenceReport:
    positivity: bool
    divides_c: bool
    gcd_condition: bool
    z_divisibility: bool

    def failing(self) -> list[str]:
        """Names of the failed necessary conditions (positivity, z_divisibility)."""
        return [name for name in ("positivity", "z_divisibility") if not getattr(self, name)]


def existence_report(pv: BinaryWord, k: int = 3, c: int = 1) -> ExistenceReport:
    """Evaluate the candidate existence conditions for a cycle with parity ``pv``.

    Only ``positivity`` and ``z_divisibility`` are necessary; ``divides_c``
    (c | 2^l - k^N1) and ``gcd_condition`` (gcd > 1) are reported but fail for
    real cycles such as (5, 10) under 3n+5 and (1, 2) under 3n+1.
    """
    check_params(k, c)
    pv = ParityVector.of(pv)
    d = (1 << pv.length) - k**pv.ones
    pos = d > 0
    return ExistenceReport(
        positivity=pos,
        divides_c=pos and d % c == 0,
        gcd_condition=gcd(c, d) > 1,
        z_divisibility=pos and c * z_map(pv, k) % d == 0,
    )


def first_appearance_c(pv: BinaryWord, k: int = 3) -> int:
    """Least ``c`` for which a cycle with parity ``pv`` exists: ``D / gcd(A, D)``."""
    canon, _ = canonical_parity(pv, k)
    if canon.zeros == 0 or (1 << canon.length) <= k**canon.ones:
        raise NoSuchCycle(f"2^{canon.length} - {k}^{canon.ones} <= 0", "positivity")
    spec = spec_from_parity(canon)
    d = cycle_denominator(spec.length, spec.ones, k)
    return d // gcd(compute_A(spec, k), d)


def is_primitive(cycle: Cycle) -> bool:
    return reduce(gcd, cycle.members) == 1


def reduce_cycle(cycle: Cycle, a: int) -> Cycle:
    if a < 1 or a % 2 == 0:
        raise ValueError(f"reduction factor must be a positive odd integer, got {a}")
    if cycle.c % a or any(x % a for x in cycle.members):
        raise ValueError(f"{a} does not divide c and every member")
    return Cycle(cycle.k, cycle.c // a, tuple(x // a for x in cycle.members))


def scale_cycle(cycle: Cycle, a: int) -> Cycle:
    return Cycle(cycle.k, cycle.c * a, tuple(x * a for x in cycle.members))


def max_structure_check(cycle: Cycle) -> bool:
    """The maximum even member's predecessor is the maximum odd member."""
    m = cycle.members
    evens = [i for i, x in enumerate(m) if x % 2 == 0]
    if not evens or len(evens) == len(m):
        raise ValueError("cycle needs both odd and even members")
    i = max(evens, key=lambda j: m[j])
    return m[i - 1] == cycle.max_odd


def enumerate_cycles(k: int, c: int, bound: int) -> list[Cycle]:
    """Every cycle of the map whose members are all <= ``bound``, ordered by smallest member.

    Iterates from each odd start, stopping once a value exceeds the bound or
    reaches a value settled by an earlier start.  Every cycle has an odd
    member, so odd starts suffice.
    """
    check_params(k, c)
    if bound < 1:
        raise ValueError("bound must be >= 1")
    owner = [0] * (bound + 1)
    found = []
    for start in range(1, bound + 1, 2):
        if owner[start]:
            continue
        path = []
        x = start
        while x <= bound and not owner[x]:
            owner[x] = start
            path.append(x)
            x = (k * x + c) >> 1 if x & 1 else x >> 1
        if x <= bound and owner[x] == start:
            found.append(Cycle.from_orbit(k, c, path[path.index(x):]))
    found.sort(key=lambda cyc: cyc.members[0])
    return found


def necklace_key(pv: BinaryWord) -> str:
    return str(min_rotation(pv))


def shared_parity_check(k: int, c1: int, c2: int, bound: int) -> list[str]:
    """Parity vectors (as necklace representatives) of primitive cycles present under both c1 and c2."""
    if c1 == c2:
        raise ValueError("c1 and c2 must differ")
    keys = [
        {necklace_key(cyc.parity) for cyc in enumerate_cycles(k, c, bound) if cyc.primitive}
        for c in (c1, c2)
    ]
    return sorted(keys[0] & keys[1], key=lambda s: (len(s), s))


def cycle_count_comparison(k: int, c: int, a: int, bound: int) -> dict:
    """Cycle counts under ``c`` and ``a*c`` below ``bound``.

    Purely observational: scaling maps each ``c`` cycle to an ``a*c`` cycle,
    but a bounded search cannot certify the count inequality.
    """
    small = enumerate_cycles(k, c, bound)
    large = enumerate_cycles(k, a * c, bound * a)
    return {"k": k, "c": c, "a": a, "bound": bound, "count_c": len(small), "count_ac": len(large)}

