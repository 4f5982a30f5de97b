import typing
from fractions import Fraction


__all__ = [
    "iter_bits",
    "bitmask",
    "lowest_bit",
    "format_number",
    "format_values",
    "fraction_to_json",
]


def iter_bits(mask: int) -> typing.Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bitmask(vertices: typing.Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def lowest_bit(mask: int) -> int:
    if not mask:
        raise ValueError("mask must be non-zero")
    return (mask & -mask).bit_length() - 1


def format_number(value: float | Fraction | int, digits: int = 10) -> str:
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, int):
        return str(value)
    text = f"{round(float(value), digits - 1):.{digits}g}"
    # -0 shows up for the zero eigenvalue after rounding
    if text in ("-0", "-0.0"):
        return "0"
    return text


def format_values(values: typing.Iterable[float], digits: int = 10) -> str:
    return ", ".join(format_number(v, digits) for v in values)


def fraction_to_json(value: Fraction | int) -> str | int:
    if isinstance(value, int):
        return value
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"
