"""Fixed-length binary words and their rotation algebra.

Bits are indexed from the left: position 0 is the most significant bit, so
bit ``x`` of a word of length ``l`` has place value ``2**(l - 1 - x)``.
Leading zeros are significant; a word always carries its length.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from math import gcd


class LengthMismatch(ValueError):
    """Two words that must have equal length do not."""


@total_ordering
@dataclass(frozen=True)
class BinaryWord:
    length: int
    value: int

    # compare by (length, value) so subclasses such as ParityVector compare equal to plain words
    def __eq__(self, other):
        if not isinstance(other, BinaryWord):
            return NotImplemented
        return (self.length, self.value) == (other.length, other.value)

    def __lt__(self, other):
        if not isinstance(other, BinaryWord):
            return NotImplemented
        return (self.length, self.value) < (other.length, other.value)

    def __hash__(self):
        return hash((self.length, self.value))

    def __post_init__(self):
        if self.length < 1:
            raise ValueError(f"word length must be >= 1, got {self.length}")
        if not 0 <= self.value < (1 << self.length):
            raise ValueError(f"value {self.value} does not fit in {self.length} bits")

    @classmethod
    def parse(cls, text: str) -> "BinaryWord":
        if not text:
            raise ValueError("empty word")
        if set(text) - {"0", "1"}:
            raise ValueError(f"word may only contain '0' and '1': {text!r}")
        return cls(len(text), int(text, 2))

    @classmethod
    def from_bits(cls, bits) -> "BinaryWord":
        return cls.parse("".join("1" if b else "0" for b in bits))

    def __str__(self):
        return format(self.value, f"0{self.length}b")

    @property
    def ones(self) -> int:
        return self.value.bit_count()

    @property
    def zeros(self) -> int:
        return self.length - self.value.bit_count()

    @property
    def mask(self) -> int:
        return (1 << self.length) - 1

    def bit(self, x: int) -> int:
        return (self.value >> (self.length - 1 - x)) & 1

    def positions(self) -> list[int]:
        """Zero-based positions of the 1-bits, counted from the left."""
        l, v = self.length, self.value
        return [x for x in range(l) if (v >> (l - 1 - x)) & 1]

    def complement(self) -> "BinaryWord":
        return BinaryWord(self.length, self.mask ^ self.value)


def word(text: str) -> BinaryWord:
    return BinaryWord.parse(text)


def bit_length(n: int) -> int:
    if n < 1:
        raise ValueError("bit length is only defined for n >= 1; pass an explicit length")
    return n.bit_length()


def legendre_weight(value: int, length: int) -> int:
    """``value - sum(value // 2**i for i in 1..length-1)``, the factorial 2-adic form."""
    return value - sum(value >> i for i in range(1, length))


def hamming_weight(b: BinaryWord) -> int:
    direct = b.value.bit_count()
    assert direct == legendre_weight(b.value, b.length), b
    return direct


def _rotl(value: int, r: int, length: int) -> int:
    r %= length
    if r == 0:
        return value
    return ((value << r) | (value >> (length - r))) & ((1 << length) - 1)


def rotate_left(b: BinaryWord, r: int) -> BinaryWord:
    return BinaryWord(b.length, _rotl(b.value, r, b.length))


def rotate_right(b: BinaryWord, r: int) -> BinaryWord:
    return BinaryWord(b.length, _rotl(b.value, -r % b.length, b.length))


def rotate_left_modular(b: BinaryWord, r: int) -> BinaryWord:
    """Rotation as ``(value * 2**r) mod (2**l - 1)``.

    The all-ones word is the formula's one degenerate input (it maps to 0);
    it is returned unchanged, matching the shift-and-mask rotation.
    """
    m = b.mask
    if b.value == m:
        return b
    return BinaryWord(b.length, (b.value << (r % b.length)) % m)


def rotations(b: BinaryWord) -> list[BinaryWord]:
    """All ``l`` left rotations, starting with ``b`` itself."""
    return [rotate_left(b, i) for i in range(b.length)]


def period(b: BinaryWord) -> int:
    """Least ``p`` dividing ``l`` with ``rotate_left(b, p) == b``."""
    l = b.length
    for p in range(1, l + 1):
        if l % p == 0 and _rotl(b.value, p, l) == b.value:
            return p
    raise AssertionError("unreachable")


def min_rotation(b: BinaryWord) -> BinaryWord:
    return BinaryWord(b.length, min(_rotl(b.value, i, b.length) for i in range(b.length)))


def max_rotation(b: BinaryWord) -> BinaryWord:
    return BinaryWord(b.length, max(_rotl(b.value, i, b.length) for i in range(b.length)))


def _check_lengths(a: BinaryWord, b: BinaryWord):
    if a.length != b.length:
        raise LengthMismatch(f"lengths differ: {a.length} != {b.length}")


def rotational_distance(src: BinaryWord, dst: BinaryWord) -> int | None:
    """Least ``r`` in ``[0, l)`` with ``rotate_left(src, r) == dst``, or None."""
    _check_lengths(src, dst)
    for r in range(src.length):
        if _rotl(src.value, r, src.length) == dst.value:
            return r
    return None


def distance_table(b: BinaryWord) -> list[list[int]]:
    """Entry ``(i, j)`` is the distance from rotation ``i`` of ``b`` to rotation ``j``."""
    rots = rotations(b)
    return [[rotational_distance(x, y) for y in rots] for x in rots]


@dataclass(frozen=True)
class CongruenceSolution:
    """All ``r`` with ``B_min * 2**r == B_max (mod 2**l - 1)``: ``r = base_residue + t*modulus``."""

    base_residue: int
    modulus: int
    solvable: bool
    unique_residue: bool

    def solutions(self, count: int) -> list[int]:
        if not self.solvable:
            return []
        return [self.base_residue + t * self.modulus for t in range(count)]


def solve_rotation_congruence(b_min: BinaryWord, b_max: BinaryWord) -> CongruenceSolution:
    """Solve ``b_min * Y == b_max (mod 2**l - 1)`` for ``Y``, then ``Y == 2**r`` for ``r``.

    Residues are compared modulo ``2**l - 1``, so the all-ones word counts as 0.
    """
    _check_lengths(b_min, b_max)
    l = b_min.length
    m = (1 << l) - 1
    g = gcd(b_min.value, m)
    unique = g == 1
    if b_max.value % g:
        return CongruenceSolution(0, l, False, unique)
    # Y == y0 (mod m/g); g candidate residues mod m, we only need the powers of two among them
    m_red = m // g
    y0 = (b_max.value // g) * pow(b_min.value // g, -1, m_red) % m_red if m_red > 1 else 0
    for r in range(l):
        if (1 << r) % m_red == y0:
            return CongruenceSolution(r, l, True, unique)
    return CongruenceSolution(0, l, False, unique)


def witness_a(l: int, ones: int, r: int) -> int | None:
    q, rem = divmod(ones * r + 1, l)
    return q if rem == 0 else None


@dataclass(frozen=True)
class DivisibilityProbe:
    l: int
    ones: int
    r: int
    holds: bool
    b_min: BinaryWord
    b_max: BinaryWord
    gcd_divides: bool
    modulus_divides: bool

    def witnesses(self, count: int = 3) -> list[int]:
        """``a = (N1*r + 1)/l`` for the first ``count`` solutions ``r + t*l``."""
        if not self.holds:
            return []
        return [witness_a(self.l, self.ones, self.r + t * self.l) for t in range(count)]


def divisibility_probe(b: BinaryWord) -> DivisibilityProbe:
    """Test ``l | N1*r + 1`` where ``r`` is the distance from the min to the max rotation.

    Also reports the two sufficient-looking predicates
    ``gcd(B_min, 2**l - 1) | B_max`` and ``2**l - 1 | 2**r * B_min - B_max``.
    """
    ones = hamming_weight(b)
    if ones == 0 or ones == b.length:
        raise ValueError(f"{b} has no distinct min/max rotation pair")
    lo, hi = min_rotation(b), max_rotation(b)
    r = rotational_distance(lo, hi)
    m = b.mask
    return DivisibilityProbe(
        l=b.length,
        ones=ones,
        r=r,
        holds=(ones * r + 1) % b.length == 0,
        b_min=lo,
        b_max=hi,
        gcd_divides=hi.value % gcd(lo.value, m) == 0,
        modulus_divides=((lo.value << r) - hi.value) % m == 0,
    )
