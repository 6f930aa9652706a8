"""Class-label streams and the text codings built on them.

None of this is a secure cipher. The pair alphabet and the additive keystream
are the simplest invertible ways to put class labels to work on a message.
"""

from __future__ import annotations

import functools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from pathlib import Path

from .classes import ClassLabel, classify_from_st
from .enumeration import Ordering, enumerate_st
from .triples import ValidationError

__all__ = [
    "WSequence",
    "Alphabet36",
    "DEFAULT_ALPHABET",
    "w_stream",
    "w_labels",
    "digits",
    "encode_text",
    "decode_text",
    "keystream_encrypt",
    "keystream_decrypt",
]


@dataclass(frozen=True)
class WSequence:
    labels: tuple[ClassLabel, ...]
    ordering: Ordering = Ordering.BY_HYPOTENUSE

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __getitem__(self, i):
        return self.labels[i]

    def letters(self) -> str:
        return "".join(label.name for label in self.labels)


@functools.lru_cache(maxsize=32)
def _label_block(ordering: Ordering, size: int) -> tuple[ClassLabel, ...]:
    return tuple(classify_from_st(p) for p, _ in enumerate_st(ordering, count=size))


def w_labels(count: int, ordering: Ordering | str = Ordering.BY_HYPOTENUSE) -> tuple[ClassLabel, ...]:
    """First ``count`` class labels; blocks are cached at power-of-two sizes."""
    if count < 0:
        raise ValidationError(f"count must be non-negative, got {count}")
    size = 1 << max(count - 1, 0).bit_length()
    return _label_block(Ordering.parse(ordering), size)[:count]


def w_stream(count: int, ordering: Ordering | str = Ordering.BY_HYPOTENUSE) -> WSequence:
    if count < 1:
        raise ValidationError(f"count must be >= 1, got {count}")
    ordering = Ordering.parse(ordering)
    return WSequence(w_labels(count, ordering), ordering)


def digits(w: Iterable[ClassLabel]) -> str:
    return "".join(str(int(label)) for label in w)


_DEFAULT_SYMBOLS = tuple("ABCDEFGHIJKLMNOPQRSTUVWXYZ") + (" ", ".", ",", "?", "!", ";", ":", "'", "-", '"')


@dataclass(frozen=True)
class Alphabet36:
    """Bijection between 36 text symbols and ordered class pairs.

    Symbol ``i`` maps to the pair (i // 6, i % 6).
    """

    symbols: tuple[str, ...] = _DEFAULT_SYMBOLS

    def __post_init__(self) -> None:
        if len(self.symbols) != 36:
            raise ValidationError(f"alphabet needs 36 symbols, got {len(self.symbols)}")
        if len(set(self.symbols)) != 36:
            raise ValidationError("alphabet symbols must be distinct")
        for sym in self.symbols:
            if len(sym) != 1:
                raise ValidationError(f"alphabet symbol {sym!r} is not a single character")
        object.__setattr__(self, "_index", {sym: i for i, sym in enumerate(self.symbols)})

    @classmethod
    def from_file(cls, path: str | Path) -> Alphabet36:
        """Load ``index<TAB>symbol`` lines, one per index 0..35."""
        table: dict[int, str] = {}
        with open(path, encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.rstrip("\r\n")
                if not line:
                    continue
                idx, sep, sym = line.partition("\t")
                if not sep:
                    raise ValidationError(f"{path}:{lineno}: expected index<TAB>symbol")
                try:
                    i = int(idx)
                except ValueError:
                    raise ValidationError(f"{path}:{lineno}: bad index {idx!r}") from None
                if not 0 <= i < 36 or i in table:
                    raise ValidationError(f"{path}:{lineno}: index {i} out of range or repeated")
                table[i] = sym
        if sorted(table) != list(range(36)):
            raise ValidationError(f"{path}: alphabet must define every index 0..35")
        return cls(tuple(table[i] for i in range(36)))

    def index(self, symbol: str) -> int:
        return self._index[symbol]  # type: ignore[attr-defined]

    def __contains__(self, symbol: str) -> bool:
        return symbol in self._index  # type: ignore[attr-defined]

    def pair(self, symbol: str) -> tuple[ClassLabel, ClassLabel]:
        i = self.index(symbol)
        return ClassLabel(i // 6), ClassLabel(i % 6)

    def symbol(self, first: ClassLabel, second: ClassLabel) -> str:
        return self.symbols[6 * int(first) + int(second)]


DEFAULT_ALPHABET = Alphabet36()


def _normalise(msg: str, alphabet: Alphabet36) -> str:
    # Uppercase only where that lands on an alphabet symbol, so a custom
    # table that keeps lowercase letters still round-trips.
    return "".join(ch if ch in alphabet else ch.upper() for ch in msg)


def encode_text(msg: str, alphabet: Alphabet36 = DEFAULT_ALPHABET) -> list[ClassLabel]:
    text = _normalise(msg, alphabet)
    bad = [(i, ch) for i, ch in enumerate(text) if ch not in alphabet]
    if bad:
        where = ", ".join(f"{msg[i]!r} at position {i}" for i, _ in bad)
        raise ValidationError(f"unsupported symbol(s): {where}")
    out: list[ClassLabel] = []
    for ch in text:
        out.extend(alphabet.pair(ch))
    return out


def decode_text(labels: Sequence[ClassLabel], alphabet: Alphabet36 = DEFAULT_ALPHABET) -> str:
    if len(labels) % 2:
        raise ValidationError(f"framing error: {len(labels)} labels is not a whole number of pairs")
    return "".join(alphabet.symbol(labels[i], labels[i + 1]) for i in range(0, len(labels), 2))


def _keystream(key: int, length: int) -> tuple[ClassLabel, ...]:
    if key < 1:
        raise ValidationError(f"key must be >= 1, got {key}")
    return w_labels(key - 1 + length)[key - 1 :]


def _base6(msg: str) -> list[int]:
    bad = [(i, ch) for i, ch in enumerate(msg) if ch not in "012345"]
    if bad:
        i, ch = bad[0]
        raise ValidationError(f"non base-6 symbol {ch!r} at position {i}")
    return [ord(ch) - 48 for ch in msg]


def keystream_encrypt(msg: str, key: int) -> str:
    """Add the class digits of triples key, key+1, ... to ``msg`` mod 6."""
    values = _base6(msg)
    ks = _keystream(key, len(values))
    return "".join(str((v + int(k)) % 6) for v, k in zip(values, ks))


def keystream_decrypt(msg: str, key: int) -> str:
    values = _base6(msg)
    ks = _keystream(key, len(values))
    return "".join(str((v - int(k)) % 6) for v, k in zip(values, ks))
