"""Enumerating primitive triples through their (s, t) generator pairs.

The pairs form a triangular array with s along the columns and t down the
rows. ``enumerate_st`` walks that array by column, row or anti-diagonal, or
emits the triples in increasing hypotenuse order.
"""

from __future__ import annotations

import enum
import itertools
from collections.abc import Iterator
from math import gcd, isqrt

from .triples import Ppt, StPair, ValidationError, ppt_from_st

__all__ = [
    "Ordering",
    "theta",
    "theta_bound",
    "enumerate_st",
    "hypotenuse_ordered",
    "nth_by_hypotenuse",
]


class Ordering(str, enum.Enum):
    BY_COLUMN = "by-column"
    BY_ROW = "by-row"
    BY_DIAGONAL = "by-diagonal"
    BY_HYPOTENUSE = "by-hypotenuse"

    @classmethod
    def parse(cls, value: str | Ordering) -> Ordering:
        if isinstance(value, Ordering):
            return value
        key = value if value.startswith("by-") else f"by-{value}"
        try:
            return cls(key)
        except ValueError:
            names = ", ".join(o.value for o in cls)
            raise ValidationError(f"unknown ordering {value!r}; expected one of {names}") from None


def theta(n: int) -> int:
    """Number of coprime odd pairs t < s <= n."""
    if n < 3 or n % 2 == 0:
        raise ValidationError(f"theta needs an odd n >= 3, got {n}")
    return sum(1 for s in range(3, n + 1, 2) for t in range(1, s, 2) if gcd(s, t) == 1)


def theta_bound(n: int) -> int:
    """Upper bound u(u+1)/2 with u = (n-1)/2."""
    u = (n - 1) // 2
    return u * (u + 1) // 2


def _pair(s: int, t: int) -> tuple[StPair, Ppt]:
    p = StPair(s, t)
    return p, ppt_from_st(p)


def _coprime(s: int, t: int) -> bool:
    return gcd(s, t) == 1


def _max_s_for_c(max_c: int, t: int = 1) -> int:
    # largest s with (s^2 + t^2) / 2 <= max_c
    rhs = 2 * max_c - t * t
    return isqrt(rhs) if rhs > 0 else 0


def _by_column(max_s: int | None, max_c: int | None) -> Iterator[tuple[StPair, Ppt]]:
    for s in itertools.count(3, 2):
        if max_s is not None and s > max_s:
            return
        if max_c is not None and (s * s + 1) // 2 > max_c:
            return
        for t in range(1, s, 2):
            if max_c is not None and (s * s + t * t) // 2 > max_c:
                break
            if _coprime(s, t):
                yield _pair(s, t)


def _row(t: int, max_s: int | None) -> Iterator[tuple[StPair, Ppt]]:
    for s in itertools.count(t + 2, 2):
        if max_s is not None and s > max_s:
            return
        if _coprime(s, t):
            yield _pair(s, t)


def _by_row(max_s: int | None, max_c: int | None) -> Iterator[tuple[StPair, Ppt]]:
    if max_s is None and max_c is None:
        yield from _round_robin_rows()
        return
    cap = max_s
    if max_c is not None:
        cap = _max_s_for_c(max_c) if cap is None else min(cap, _max_s_for_c(max_c))
    for t in range(1, cap, 2):
        row_cap = cap if max_c is None else min(cap, _max_s_for_c(max_c, t))
        for item in _row(t, row_cap):
            yield item


def _round_robin_rows() -> Iterator[tuple[StPair, Ppt]]:
    # Round r opens row t = 2r + 1, then every open row emits one element.
    rows: list[Iterator[tuple[StPair, Ppt]]] = []
    for r in itertools.count():
        rows.append(_row(2 * r + 1, None))
        for row in rows:
            yield next(row)


def _by_diagonal(max_s: int | None, max_c: int | None) -> Iterator[tuple[StPair, Ppt]]:
    # Diagonal d holds the pairs with s + t = d, ascending t.
    for d in itertools.count(4, 2):
        if max_s is not None and d // 2 + 1 > max_s:
            return
        if max_c is not None and d * d > 4 * max_c:
            return
        for t in range(1, (d + 1) // 2, 2):
            s = d - t
            if s <= t:
                break
            if max_s is not None and s > max_s:
                continue
            if max_c is not None and (s * s + t * t) // 2 > max_c:
                continue
            if _coprime(s, t):
                yield _pair(s, t)


def _by_hypotenuse(max_s: int | None, max_c: int | None) -> Iterator[tuple[StPair, Ppt]]:
    """Emit in (c, a) order by sieving (s, t) with a doubling s bound.

    After scanning every pair with s <= B, any pair not yet seen has s > B and
    therefore c > (B^2 + 1) / 2, so everything up to that frontier is final.
    """
    emitted_to = 0  # every c <= emitted_to has been yielded
    bound = 8
    while True:
        frontier = (bound * bound + 1) // 2
        if max_c is not None:
            frontier = min(frontier, max_c)
        batch = []
        for s in range(3, bound + 1, 2):
            if max_s is not None and s > max_s:
                break
            s2 = s * s
            # t range with emitted_to < (s^2 + t^2) / 2 <= frontier
            if (s2 + 1) // 2 > frontier:
                break
            t_hi = min(s - 2, isqrt(2 * frontier - s2))
            lo_rhs = 2 * emitted_to - s2
            t_lo = isqrt(lo_rhs) + 1 if lo_rhs >= 0 else 1
            for t in range(t_lo | 1, t_hi + 1, 2):
                if _coprime(s, t):
                    batch.append((s, t))
        batch.sort(key=lambda st: (st[0] * st[0] + st[1] * st[1], st[0] * st[1]))
        for s, t in batch:
            yield _pair(s, t)
        emitted_to = frontier
        if max_c is not None and emitted_to >= max_c:
            return
        if max_s is not None and 2 * emitted_to >= max_s * max_s + (max_s - 2) ** 2:
            return
        bound *= 2


_WALKERS = {
    Ordering.BY_COLUMN: _by_column,
    Ordering.BY_ROW: _by_row,
    Ordering.BY_DIAGONAL: _by_diagonal,
    Ordering.BY_HYPOTENUSE: _by_hypotenuse,
}


def enumerate_st(
    ordering: Ordering | str = Ordering.BY_COLUMN,
    *,
    max_s: int | None = None,
    max_c: int | None = None,
    count: int | None = None,
) -> Iterator[tuple[StPair, Ppt]]:
    """Yield (StPair, Ppt) pairs in the requested order.

    At least one of ``max_s``, ``max_c`` or ``count`` must be given; when
    several are given the stream stops at whichever is hit first.
    """
    if max_s is None and max_c is None and count is None:
        raise ValidationError("enumeration needs at least one of max_s, max_c or count")
    for name, value in (("max_s", max_s), ("max_c", max_c), ("count", count)):
        if value is not None and value < 0:
            raise ValidationError(f"{name} must be non-negative, got {value}")
    stream = _WALKERS[Ordering.parse(ordering)](max_s, max_c)
    if count is not None:
        stream = itertools.islice(stream, count)
    return stream


def hypotenuse_ordered(count: int) -> list[Ppt]:
    """The first ``count`` triples by increasing c, ties by increasing a."""
    return [x for _, x in enumerate_st(Ordering.BY_HYPOTENUSE, count=count)]


def nth_by_hypotenuse(n: int) -> Ppt:
    """1-based position ``n`` in the (c, a) ordering."""
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n}")
    _, x = next(itertools.islice(enumerate_st(Ordering.BY_HYPOTENUSE, count=n), n - 1, None))
    return x
