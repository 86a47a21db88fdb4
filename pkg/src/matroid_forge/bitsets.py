"""Subsets of {1, ..., m} encoded as integer bit masks.

Element i corresponds to bit i-1.  All exhaustive sweeps in this package
run over masks; conversion to frozensets happens only at API boundaries.
"""

from collections.abc import Iterable


def mask_of(elements: Iterable[int], m: int | None = None) -> int:
    """Pack 1-based elements into a mask, range-checking against m if given."""
    mask = 0
    for e in elements:
        if e < 1 or (m is not None and e > m):
            raise ValueError(f"element {e} outside ground set of size {m}")
        mask |= 1 << (e - 1)
    return mask


def set_of(mask: int) -> frozenset[int]:
    return frozenset(elements_of(mask))


def elements_of(mask: int) -> tuple[int, ...]:
    """1-based elements of a mask, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def submasks(mask: int):
    """All submasks of a mask, the full mask first and 0 last."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask
