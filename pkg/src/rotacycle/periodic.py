"""Orbit value sequences ``z(rotate_left(B, i))`` and their sums."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .cycles import z_map
from .words import BinaryWord, min_rotation, period, rotate_left, rotations


@dataclass(frozen=True)
class OrbitSequence:
    source: BinaryWord
    values: tuple[int, ...]
    period: int

    @property
    def distinct(self) -> tuple[int, ...]:
        return self.values[: self.period]

    @property
    def repetitions(self) -> int:
        return self.source.length // self.period

    @property
    def total(self) -> int:
        return sum(self.values)


def orbit_sequence(b: BinaryWord) -> OrbitSequence:
    """Values start at rotation 0, i.e. ``z(b)`` itself."""
    if b.value == 0:
        raise ValueError("orbit sequence is undefined for the all-zeros word")
    return OrbitSequence(b, tuple(z_map(t) for t in rotations(b)), period(b))


def orbit_sum(b: BinaryWord) -> int:
    return orbit_sequence(b).total


def class_members(b: BinaryWord) -> list[BinaryWord]:
    """Distinct rotations of ``b`` in increasing value order."""
    return sorted({rotate_left(b, i) for i in range(period(b))}, key=lambda w: w.value)


def orbit_table(b: BinaryWord) -> list[list]:
    """One row per class member: word, value, v_0..v_{l-1}, Z."""
    rows = []
    for w in class_members(b):
        seq = orbit_sequence(w)
        rows.append([str(w), w.value, *seq.values, seq.total])
    return rows


def column_sums(b: BinaryWord) -> list[int]:
    """Column sums of ``orbit_table``; each equals ``Z(b) / repetitions``."""
    rows = orbit_table(b)
    return [sum(r[2 + i] for r in rows) for i in range(b.length)]


@dataclass(frozen=True)
class Census:
    length: int
    classes: int
    nonconstant_classes: int
    # (weight, period) -> number of classes
    by_weight_period: dict

    def to_record(self) -> dict:
        return {
            "l": self.length,
            "classes": self.classes,
            "nonconstant_classes": self.nonconstant_classes,
            "by_weight_period": [
                {"weight": w, "period": p, "classes": n} for (w, p), n in sorted(self.by_weight_period.items())
            ],
        }


def class_census(l: int) -> Census:
    """Partition all ``2**l`` words of length ``l`` into rotation classes."""
    if l < 1:
        raise ValueError("l must be >= 1")
    counts = Counter()
    for v in range(1 << l):
        b = BinaryWord(l, v)
        if min_rotation(b) == b:
            counts[b.ones, period(b)] += 1
    total = sum(counts.values())
    constant = sum(n for (w, _), n in counts.items() if w in (0, l))
    return Census(l, total, total - constant, dict(counts))
