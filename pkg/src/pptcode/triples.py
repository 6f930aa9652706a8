"""Primitive triples, (s, t) generator pairs and Gopala-Hemachandra quadruples.

All three representations are frozen dataclasses that validate themselves on
construction, so holding an instance means holding a valid value.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd, isqrt
from typing import Union

__all__ = [
    "ValidationError",
    "Ppt",
    "StPair",
    "GhQuad",
    "TripleKind",
    "validate_triple",
    "canonical_ppt",
    "ppt_from_st",
    "st_from_ppt",
    "ppt_from_gh",
    "gh_from_st",
    "polynomial_family",
]


class ValidationError(ValueError):
    """Raised when a value violates the invariants of its representation."""


@dataclass(frozen=True)
class Ppt:
    """Primitive Pythagorean triple, odd leg first."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        a, b, c = self.a, self.b, self.c
        if a < 3 or b < 4 or c < 5:
            raise ValidationError(f"triple {self.astuple()} is too small to be primitive")
        if a % 2 == 0 or b % 2 == 1:
            raise ValidationError(f"triple {self.astuple()} must have an odd a and an even b")
        if a * a + b * b != c * c:
            raise ValidationError(f"{a}^2 + {b}^2 != {c}^2")
        if gcd(a, b) != 1:
            raise ValidationError(f"triple {self.astuple()} is not primitive")

    def astuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __iter__(self):
        return iter((self.a, self.b, self.c))


@dataclass(frozen=True)
class StPair:
    """Generator pair: distinct odd coprime integers with s > t >= 1."""

    s: int
    t: int

    def __post_init__(self) -> None:
        s, t = self.s, self.t
        if not (s > t >= 1):
            raise ValidationError(f"need s > t >= 1, got s={s}, t={t}")
        if s % 2 == 0 or t % 2 == 0:
            raise ValidationError(f"s and t must both be odd, got s={s}, t={t}")
        if gcd(s, t) != 1:
            raise ValidationError(f"s={s} and t={t} share a factor")


@dataclass(frozen=True)
class GhQuad:
    """Four consecutive terms g, e, f=g+e, h=g+2e of an additive sequence.

    All four components are stored so that a broken linear relation is caught
    at construction rather than silently recomputed.
    """

    g: int
    e: int
    f: int
    h: int

    def __post_init__(self) -> None:
        g, e, f, h = self.g, self.e, self.f, self.h
        if min(g, e, f, h) < 1:
            raise ValidationError(f"quadruple {self.astuple()} must be positive")
        if f != g + e or h != g + 2 * e:
            raise ValidationError(f"quadruple {self.astuple()} breaks f=g+e, h=g+2e")

    @classmethod
    def from_pair(cls, g: int, e: int) -> GhQuad:
        return cls(g, e, g + e, g + 2 * e)

    @property
    def is_primitive(self) -> bool:
        return self.g % 2 == 1 and gcd(gcd(self.g, self.e), gcd(self.f, self.h)) == 1

    def astuple(self) -> tuple[int, int, int, int]:
        return (self.g, self.e, self.f, self.h)


class TripleKind(str, enum.Enum):
    PRIMITIVE = "primitive"
    NON_PRIMITIVE = "non-primitive-pythagorean"
    NOT_PYTHAGOREAN = "not-pythagorean"


def validate_triple(a: int, b: int, c: int) -> TripleKind:
    """Classify three positive integers; the legs may come in either order."""
    if min(a, b, c) <= 0:
        raise ValidationError(f"triple components must be positive, got {(a, b, c)}")
    if a * a + b * b != c * c:
        return TripleKind.NOT_PYTHAGOREAN
    if gcd(a, b) != 1:
        return TripleKind.NON_PRIMITIVE
    return TripleKind.PRIMITIVE


def canonical_ppt(a: int, b: int, c: int) -> Ppt:
    """Build a Ppt from legs given in either order."""
    kind = validate_triple(a, b, c)
    if kind is not TripleKind.PRIMITIVE:
        raise ValidationError(f"{(a, b, c)} is {kind.value}")
    if a % 2 == 0:
        a, b = b, a
    return Ppt(a, b, c)


def ppt_from_st(p: StPair) -> Ppt:
    s, t = p.s, p.t
    return Ppt(s * t, (s * s - t * t) // 2, (s * s + t * t) // 2)


def _exact_sqrt(n: int) -> int | None:
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def st_from_ppt(x: Union[Ppt, tuple[int, int, int]]) -> StPair:
    """Recover (s, t) from c + b = s^2 and c - b = t^2.

    Accepts a raw ``(a, b, c)`` tuple as well, in which case a triple whose
    c + b or c - b is not a perfect square is rejected.
    """
    a, b, c = x
    s = _exact_sqrt(c + b)
    t = _exact_sqrt(c - b)
    if s is None or t is None:
        raise ValidationError(f"{(a, b, c)} is not primitive: c+b or c-b is not a square")
    pair = StPair(s, t)
    if ppt_from_st(pair).astuple() != (a, b, c):
        raise ValidationError(f"{(a, b, c)} is not a primitive triple")
    return pair


def ppt_from_gh(q: GhQuad) -> Ppt:
    if not q.is_primitive:
        raise ValidationError(f"non-primitive quadruple {q.astuple()}")
    return Ppt(q.g * q.h, 2 * q.e * q.f, q.e * q.e + q.f * q.f)


def gh_from_st(p: StPair) -> GhQuad:
    return GhQuad(p.t, (p.s - p.t) // 2, (p.s + p.t) // 2, p.s)


def polynomial_family(n: int) -> Ppt:
    """The triple (2n+1, 2n^2+2n, 2n^2+2n+1), whose hypotenuse exceeds b by one."""
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n}")
    b = 2 * n * n + 2 * n
    return Ppt(2 * n + 1, b, b + 1)
