"""Fixed-width bit-string witnesses.

A witness is a bit string of a declared length, carried as (value, length)
with the first field occupying the most significant bits.  Field widths are
``(upper + 1).bit_length()`` bits for a value range [0, upper]; decoders must
treat out-of-range field values as "reject" rather than error.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ValidationError


def field_width(upper: int) -> int:
    """Bits needed to store any integer in [0, upper]."""
    if upper < 0:
        raise ValidationError("field upper bound must be nonnegative")
    return max(upper.bit_length(), 1)


@dataclass(frozen=True)
class Witness:
    value: int
    length: int

    def __post_init__(self):
        if self.length < 0:
            raise ValidationError("witness length must be nonnegative")
        if not 0 <= self.value < (1 << self.length):
            raise ValidationError("witness value out of range for length")

    def bits(self) -> tuple[int, ...]:
        return tuple((self.value >> (self.length - 1 - i)) & 1
                     for i in range(self.length))

    def to_hex(self) -> str:
        nibbles = max((self.length + 3) // 4, 1)
        return format(self.value, f"0{nibbles}x")

    @classmethod
    def from_hex(cls, text: str, length: int) -> "Witness":
        try:
            value = int(text, 16)
        except ValueError as exc:
            raise ValidationError(f"bad witness hex: {text!r}") from exc
        if value >> length:
            raise ValidationError("witness hex wider than declared length")
        return cls(value, length)

    @classmethod
    def zero(cls, length: int) -> "Witness":
        return cls(0, length)


def pack_fields(values: Sequence[int], widths: Sequence[int]) -> Witness:
    if len(values) != len(widths):
        raise ValidationError("field count mismatch")
    acc = 0
    for v, w in zip(values, widths):
        if not 0 <= v < (1 << w):
            raise ValidationError(f"field value {v} does not fit in {w} bits")
        acc = (acc << w) | v
    return Witness(acc, sum(widths))


def unpack_fields(wit: Witness, widths: Sequence[int]) -> tuple[int, ...]:
    if wit.length != sum(widths):
        raise ValidationError("witness length does not match field widths")
    out = []
    rest = wit.value
    shift = wit.length
    for w in widths:
        shift -= w
        out.append((rest >> shift) & ((1 << w) - 1))
    return tuple(out)


def all_witnesses(length: int) -> Iterator[Witness]:
    for v in range(1 << length):
        yield Witness(v, length)
