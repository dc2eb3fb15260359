"""The boundary functions M(l, n) and N(l, n) and the containment report.

``M(l, n)`` is the largest, over all length-``l`` words with ``n`` ones, of
the least ``z`` value on the word's rotation orbit.  ``N(l, n)`` subtracts a
gcd-indexed power sum from ``2*M``.  Both are computed by exhaustive
enumeration only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, gcd

from .cycles import Cycle, build_cycle, canonical_parity, spec_from_parity, z_map
from .words import BinaryWord, min_rotation, period, rotations

DEFAULT_MAX_WORDS = 10**7


class TooManyWords(ValueError):
    pass


def _check(l: int, n: int, max_words: int | None):
    if not 1 <= n <= l - 1:
        raise ValueError(f"need 1 <= n <= l - 1, got l={l}, n={n}")
    if max_words is not None and comb(l, n) > max_words:
        raise TooManyWords(f"C({l},{n}) = {comb(l, n)} words exceeds the cap {max_words}")


def words_with_weight(l: int, n: int, descending: bool = True) -> list[BinaryWord]:
    """All of S_{l,n}; descending order lists 11000 first, as in the reference table."""
    out = []
    for pos in combinations(range(l), n):
        out.append(BinaryWord(l, sum(1 << (l - 1 - x) for x in pos)))
    # combinations() in lexicographic position order already yields descending values
    return out if descending else out[::-1]


def orbit_min_z(b: BinaryWord) -> int:
    return min(z_map(t) for t in rotations(b))


@dataclass(frozen=True)
class BoundaryRow:
    word: BinaryWord
    orbit: tuple[BinaryWord, ...]
    orbit_z: tuple[int, ...]
    orbit_min: int

    def csv_cells(self) -> list[str]:
        return [
            str(self.word),
            ",".join(map(str, self.orbit)),
            ",".join(map(str, self.orbit_z)),
            str(self.orbit_min),
        ]


def table_M(l: int, n: int, max_words: int | None = DEFAULT_MAX_WORDS) -> list[BoundaryRow]:
    _check(l, n, max_words)
    rows = []
    for b in words_with_weight(l, n):
        orbit = tuple(rotations(b))
        zs = tuple(z_map(t) for t in orbit)
        rows.append(BoundaryRow(b, orbit, zs, min(zs)))
    return rows


def boundary_M(l: int, n: int, max_words: int | None = DEFAULT_MAX_WORDS) -> int:
    _check(l, n, max_words)
    return max(orbit_min_z(b) for b in words_with_weight(l, n))


def boundary_M_classes(l: int, n: int, max_words: int | None = DEFAULT_MAX_WORDS) -> int:
    """Same value as ``boundary_M`` but visits one representative per rotation class."""
    _check(l, n, max_words)
    return max(orbit_min_z(b) for b in words_with_weight(l, n) if min_rotation(b) == b)


def power_sum(l: int, n: int) -> int:
    g = gcd(l, n)
    step = n // g
    return sum(2 ** (i * step) * 3 ** (n - 1 - i * step) for i in range(g))


def boundary_N(l: int, n: int, max_words: int | None = DEFAULT_MAX_WORDS) -> int:
    return 2 * boundary_M(l, n, max_words) - power_sum(l, n)


def _compare(lower, upper) -> str:
    """'strict' when lower < upper, 'equal' on a tie, else 'violated'."""
    if lower < upper:
        return "strict"
    if lower == upper:
        return "equal"
    return "violated"


@dataclass(frozen=True)
class ContainmentRow:
    cycle: Cycle
    M: Fraction
    N: Fraction
    smallest: int
    largest_odd: int
    smallest_vs_M: str
    N_vs_largest_odd: str

    @property
    def outcome(self) -> str:
        both = {self.smallest_vs_M, self.N_vs_largest_odd}
        for status in ("violated", "equal"):
            if status in both:
                return status
        return "strict"


def containment_check(l: int, n: int, a: int = 1, max_words: int | None = DEFAULT_MAX_WORDS) -> list[ContainmentRow]:
    """Compare each length-``l`` cycle at ``c = 2**l - 3**n`` against ``M`` and ``N``.

    With ``a > 1`` only cycles whose members ``a`` divides are kept, reduced to
    ``c/a``, and compared against ``M/a`` and ``N/a``.  Words whose rotation
    period is shorter than ``l`` give shorter cycles and are skipped.
    """
    _check(l, n, max_words)
    c = (1 << l) - 3**n
    if c <= 0:
        raise ValueError(f"c = 2^{l} - 3^{n} = {c} is not positive")
    if a < 1 or a % 2 == 0 or c % a:
        raise ValueError(f"reduction factor {a} must be odd and divide c = {c}")
    m = boundary_M(l, n, max_words)
    bound_m = Fraction(m, a)
    bound_n = Fraction(2 * m - power_sum(l, n), a)
    rows = []
    for b in words_with_weight(l, n, descending=False):
        if min_rotation(b) != b or period(b) != l:
            continue
        canon, _ = canonical_parity(b)
        cyc = build_cycle(spec_from_parity(canon), 3, c)
        if a > 1:
            if any(x % a for x in cyc.members):
                continue
            cyc = Cycle(3, c // a, tuple(x // a for x in cyc.members))
        small, big = cyc.members[0], cyc.max_odd
        rows.append(
            ContainmentRow(cyc, bound_m, bound_n, small, big, _compare(small, bound_m), _compare(bound_n, big))
        )
    rows.sort(key=lambda r: r.cycle.members[0])
    return rows
