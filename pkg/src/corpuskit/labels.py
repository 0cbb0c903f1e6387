"""Multilabel to multiclass conversion for five-flag annotation vectors.

The five binary flags (absent, dengue, healthclasses, mosquito, sick) are
read as one binary number, most significant flag first, giving 32 classes:
(1,1,0,1,1) -> 0b11011 -> 27. encode/decode form an exact bijection.
"""

from __future__ import annotations

from typing import Sequence

LABEL_FIELDS = ("absent", "dengue", "healthclasses", "mosquito", "sick")

N_FLAGS = len(LABEL_FIELDS)
N_CLASSES = 2 ** N_FLAGS


def encode_label_flags(flags: Sequence[bool | int]) -> int:
    """Concatenate the flags as binary digits, most significant first."""
    if len(flags) != N_FLAGS:
        raise ValueError(f"expected {N_FLAGS} flags, got {len(flags)}")
    value = 0
    for flag in flags:
        if flag not in (0, 1, True, False):
            raise ValueError(f"flags must be binary, got {flag!r}")
        value = (value << 1) | int(flag)
    return value


def decode_label_flags(value: int) -> tuple[bool, ...]:
    """Exact inverse of encode_label_flags on 0..31."""
    if not 0 <= value < N_CLASSES:
        raise ValueError(f"class value must be in [0, {N_CLASSES - 1}], got {value}")
    return tuple(bool((value >> shift) & 1) for shift in range(N_FLAGS - 1, -1, -1))
