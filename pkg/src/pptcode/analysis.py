"""How long must a window of the class-label sequence be to pin down its start?

Positions are 1-based throughout, matching the x_1, x_2, ... numbering of
the hypotenuse-ordered triples.
"""

from __future__ import annotations

import struct
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass, field
from pathlib import Path

from .classes import ClassLabel
from .coding import w_labels
from .enumeration import Ordering
from .triples import ValidationError

__all__ = [
    "KGramIndex",
    "UniquenessReport",
    "build_index",
    "min_unique_window",
    "per_position_window",
    "invert",
    "class_frequencies",
    "parse_gram",
    "write_cache",
    "read_cache",
    "cached_labels",
]

Labels = Sequence[ClassLabel]


def parse_gram(gram: str | Sequence[ClassLabel]) -> tuple[ClassLabel, ...]:
    if isinstance(gram, str):
        try:
            return tuple(ClassLabel.from_letter(ch) for ch in gram)
        except ValueError as exc:
            raise ValidationError(str(exc)) from None
    return tuple(ClassLabel(g) for g in gram)


def _gram_key(labels: Labels) -> str:
    return "".join(label.name for label in labels)


@dataclass
class KGramIndex:
    k: int
    n: int
    table: dict[str, list[int]] = field(default_factory=dict)

    def lookup(self, gram: str | Sequence[ClassLabel]) -> list[int]:
        key = _gram_key(parse_gram(gram))
        if len(key) != self.k:
            raise ValidationError(f"gram length {len(key)} does not match index k={self.k}")
        return list(self.table.get(key, ()))

    def windows(self) -> int:
        return self.n - self.k + 1

    def is_unique(self) -> bool:
        return len(self.table) == self.windows()


def _labels_for(n: int, labels: Labels | None) -> Labels:
    if labels is None:
        return w_labels(n)
    if len(labels) < n:
        raise ValidationError(f"need {n} labels, got {len(labels)}")
    return labels


def build_index(n: int, k: int, labels: Labels | None = None) -> KGramIndex:
    """Map every length-k window of the first ``n`` labels to its start positions."""
    if k < 1 or n < 1:
        raise ValidationError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    if k > n:
        raise ValidationError(f"window length k={k} exceeds prefix length n={n}")
    seq = _gram_key(_labels_for(n, labels)[:n])
    table: dict[str, list[int]] = {}
    for start in range(n - k + 1):
        table.setdefault(seq[start : start + k], []).append(start + 1)
    return KGramIndex(k, n, table)


def invert(gram: str | Sequence[ClassLabel], n: int, labels: Labels | None = None) -> list[int]:
    """Every start position in [1, n - len(gram) + 1] where ``gram`` occurs."""
    g = parse_gram(gram)
    if not g:
        raise ValidationError("gram must not be empty")
    if len(g) > n:
        return []
    return build_index(n, len(g), labels).lookup(g)


@dataclass(frozen=True)
class UniquenessReport:
    n: int
    i_min: int
    # k -> number of windows whose gram also occurs at another position
    collisions: dict[int, int]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "i_min": self.i_min,
            "collisions": {str(k): v for k, v in sorted(self.collisions.items())},
        }


def _rolling_windows(seq: Labels):
    """Yield (k, codes) where codes[p] is the window at p packed base 6.

    The packing is exact, so equal codes mean equal windows.
    """
    codes = [int(x) for x in seq]
    digits = codes[:]
    k = 1
    while codes:
        yield k, codes
        k += 1
        codes = [codes[p] * 6 + digits[p + k - 1] for p in range(len(codes) - 1)]


def _shared(codes: list[int]) -> int:
    counts = Counter(codes)
    return sum(c for c in counts.values() if c > 1)


def min_unique_window(n: int, labels: Labels | None = None) -> UniquenessReport:
    """Smallest k such that all n - k + 1 windows of length k are distinct."""
    if n < 2:
        raise ValidationError(f"n must be >= 2, got {n}")
    seq = _labels_for(n, labels)[:n]
    collisions: dict[int, int] = {}
    for k, codes in _rolling_windows(seq):
        shared = _shared(codes)
        if shared == 0:
            return UniquenessReport(n, k, collisions)
        collisions[k] = shared
    raise AssertionError("a single full-length window is always unique")


def per_position_window(n: int, labels: Labels | None = None) -> list[int | None]:
    """For each start position, the shortest window there that occurs nowhere else.

    Positions too close to the end to ever become unique get ``None``.
    """
    seq = _labels_for(n, labels)[:n]
    result: list[int | None] = [None] * n
    for k, codes in _rolling_windows(seq):
        counts = Counter(codes)
        for p, code in enumerate(codes):
            if result[p] is None and counts[code] == 1:
                result[p] = k
        if len(counts) == len(codes):
            break
    return result


def class_frequencies(n: int, labels: Labels | None = None) -> dict[ClassLabel, int]:
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n}")
    counts = Counter(_labels_for(n, labels)[:n])
    return {label: counts.get(label, 0) for label in ClassLabel}


# Sidecar cache: b"PPTW", version byte, little-endian u64 length, one byte per label.
_MAGIC = b"PPTW"
_VERSION = 1
_HEADER = struct.Struct("<4sBQ")


def write_cache(path: str | Path, labels: Labels) -> None:
    with open(path, "wb") as fh:
        fh.write(_HEADER.pack(_MAGIC, _VERSION, len(labels)))
        fh.write(bytes(int(x) for x in labels))


def read_cache(path: str | Path) -> tuple[ClassLabel, ...]:
    data = Path(path).read_bytes()
    if len(data) < _HEADER.size:
        raise ValidationError(f"{path}: truncated cache header")
    magic, version, n = _HEADER.unpack_from(data)
    if magic != _MAGIC:
        raise ValidationError(f"{path}: bad magic {magic!r}")
    if version != _VERSION:
        raise ValidationError(f"{path}: unsupported cache version {version}")
    body = data[_HEADER.size :]
    if len(body) != n:
        raise ValidationError(f"{path}: header says {n} labels, found {len(body)}")
    if any(b > 5 for b in body):
        raise ValidationError(f"{path}: label byte out of range")
    return tuple(ClassLabel(b) for b in body)


def cached_labels(
    n: int, cache_dir: str | Path, ordering: Ordering | str = Ordering.BY_HYPOTENUSE
) -> tuple[ClassLabel, ...]:
    """First ``n`` labels, read from or written to a sidecar keyed by (n, ordering)."""
    ordering = Ordering.parse(ordering)
    path = Path(cache_dir) / f"w-{ordering.value}-{n}.pptw"
    if path.exists():
        return read_cache(path)
    labels = w_labels(n, ordering)
    path.parent.mkdir(parents=True, exist_ok=True)
    write_cache(path, labels)
    return labels
