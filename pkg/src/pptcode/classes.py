"""Divisibility classes of primitive triples.

In every primitive triple 4 divides b, exactly one leg is divisible by 3, and
exactly one of a, b, c is divisible by 5. The two independent choices give six
classes, labelled A to F and carried as the digits 0 to 5.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .triples import Ppt, StPair

__all__ = ["ClassLabel", "DivisibilityProfile", "profile", "classify", "classify_from_st"]


class ClassLabel(enum.IntEnum):
    A = 0
    B = 1
    C = 2
    D = 3
    E = 4
    F = 5

    @property
    def digit(self) -> int:
        return int(self)

    @property
    def letter(self) -> str:
        return self.name

    @classmethod
    def from_letter(cls, ch: str) -> ClassLabel:
        try:
            return cls[ch.upper()]
        except KeyError:
            raise ValueError(f"not a class letter: {ch!r}") from None

    @classmethod
    def from_digit(cls, d: int | str) -> ClassLabel:
        return cls(int(d))

    def __str__(self) -> str:
        return self.name


# (leg divisible by 3, component divisible by 5) -> class
_CLASS_TABLE = {
    ("a", "c"): ClassLabel.A,
    ("b", "a"): ClassLabel.B,
    ("a", "a"): ClassLabel.C,
    ("b", "c"): ClassLabel.D,
    ("a", "b"): ClassLabel.E,
    ("b", "b"): ClassLabel.F,
}


@dataclass(frozen=True)
class DivisibilityProfile:
    div3: str
    div5: str
    div4: str = "b"

    @property
    def label(self) -> ClassLabel:
        return _CLASS_TABLE[(self.div3, self.div5)]


def profile(x: Ppt) -> DivisibilityProfile:
    a, b, c = x.a, x.b, x.c
    threes = [name for name, v in (("a", a), ("b", b)) if v % 3 == 0]
    fives = [name for name, v in (("a", a), ("b", b), ("c", c)) if v % 5 == 0]
    if b % 4 != 0 or c % 3 == 0 or len(threes) != 1 or len(fives) != 1:
        raise AssertionError(f"divisibility invariants broken for {x.astuple()}")
    return DivisibilityProfile(div3=threes[0], div5=fives[0])


def classify(x: Ppt) -> ClassLabel:
    """Class by direct divisibility of the components."""
    a, b, c = x.a, x.b, x.c
    a3, b3 = a % 3 == 0, b % 3 == 0
    a5, b5, c5 = a % 5 == 0, b % 5 == 0, c % 5 == 0
    matches = [
        label
        for label, hit in (
            (ClassLabel.A, a3 and c5),
            (ClassLabel.B, b3 and a5),
            (ClassLabel.C, a3 and a5),
            (ClassLabel.D, b3 and c5),
            (ClassLabel.E, a3 and b5),
            (ClassLabel.F, b3 and b5),
        )
        if hit
    ]
    if len(matches) != 1:
        raise AssertionError(f"{x.astuple()} matches classes {matches}")
    return matches[0]


def classify_from_st(p: StPair) -> ClassLabel:
    """Class from the residues of s and t alone, without forming the triple.

    3 divides a = st exactly when it divides s or t; otherwise s^2 = t^2 = 1
    (mod 3) and 3 divides b. Likewise 5 divides a when it divides s or t,
    b when s^2 = t^2 (mod 5), and c otherwise.
    """
    s3, t3 = p.s % 3, p.t % 3
    s5, t5 = p.s % 5, p.t % 5
    div3 = "a" if s3 == 0 or t3 == 0 else "b"
    if s5 == 0 or t5 == 0:
        div5 = "a"
    elif (s5 * s5 - t5 * t5) % 5 == 0:
        div5 = "b"
    else:
        div5 = "c"
    return _CLASS_TABLE[(div3, div5)]
