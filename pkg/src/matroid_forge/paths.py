"""Lattice paths with unit up and down steps, encoded as up-step position sets.

A path of 2n steps is identified with the subset of {1, ..., 2n} holding the
positions of its up-steps.  The height after x steps is 2|ups ∩ {1..x}| - x;
a path is Dyck when it has n up-steps and never drops below height 0.
"""

from functools import lru_cache
from math import comb

from .bitsets import elements_of, mask_of
from .errors import DomainError, check_bound, half_length_bound


class StepSet:
    """An up-step position set for a path of 2n unit steps.

    Any subset of {1, ..., 2n} is allowed; Dyck paths are the subsets that
    describe ballot sequences.  Instances are immutable and hashable.
    """

    __slots__ = ("n", "mask")

    def __init__(self, n: int, ups=()):
        if n < 0:
            raise DomainError(f"half-length must be non-negative, got {n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "mask", mask_of(ups, 2 * n))

    def __setattr__(self, name, value):
        raise AttributeError("StepSet is immutable")

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "StepSet":
        p = cls.__new__(cls)
        object.__setattr__(p, "n", n)
        object.__setattr__(p, "mask", mask)
        return p

    @property
    def ups(self) -> frozenset[int]:
        return frozenset(elements_of(self.mask))

    def height(self, x: int) -> int:
        """Height of the path after its first x steps, 0 <= x <= 2n."""
        if not 0 <= x <= 2 * self.n:
            raise DomainError(f"step index {x} outside 0..{2 * self.n}")
        return 2 * (self.mask & ((1 << x) - 1)).bit_count() - x

    def heights(self) -> tuple[int, ...]:
        """All heights (ht(0), ht(1), ..., ht(2n))."""
        out = [0]
        h = 0
        mask = self.mask
        for x in range(2 * self.n):
            h += 1 if mask >> x & 1 else -1
            out.append(h)
        return tuple(out)

    def min_height(self) -> int:
        return min(self.heights())

    def max_height(self) -> int:
        return max(self.heights())

    def is_dyck(self) -> bool:
        if self.mask.bit_count() != self.n:
            return False
        return self.min_height() == 0

    def initial_rise(self) -> int:
        """Number of up-steps before the first down-step (Dyck paths only)."""
        self._require_dyck()
        return _initial_rise(self.mask)

    def axis_touches(self) -> int:
        """Number of positive x at which the path returns to height 0."""
        self._require_dyck()
        return _axis_touches(self.n, self.mask)

    def split_at_first_return(self) -> tuple["StepSet", "StepSet"]:
        """Split off the arch ending at the first return to height 0.

        Returns the pair (inner, tail): the path reads as an up-step, then
        `inner` (half-length r), a down-step, then `tail`.  Inverse of
        :func:`compose`.
        """
        self._require_dyck()
        h = 0
        mask = self.mask
        first_return = 2 * self.n
        for x in range(2 * self.n):
            h += 1 if mask >> x & 1 else -1
            if h == 0:
                first_return = x + 1
                break
        r = first_return // 2 - 1
        inner = (mask >> 1) & ((1 << (2 * r)) - 1)
        tail = mask >> first_return
        return StepSet.from_mask(r, inner), StepSet.from_mask(self.n - 1 - r, tail)

    def _require_dyck(self):
        if self.n == 0 or not self.is_dyck():
            raise DomainError(f"{self!r} is not a non-empty Dyck path")

    def to_json(self) -> dict:
        return {"n": self.n, "ups": sorted(self.ups)}

    @classmethod
    def from_json(cls, data: dict) -> "StepSet":
        return cls(data["n"], data["ups"])

    def __eq__(self, other):
        return (
            isinstance(other, StepSet)
            and self.n == other.n
            and self.mask == other.mask
        )

    def __hash__(self):
        return hash((self.n, self.mask))

    def __repr__(self):
        return f"StepSet({self.n}, {sorted(self.ups)})"


def compose(inner: StepSet, tail: StepSet) -> StepSet:
    """Rebuild a Dyck path from its first-arch split: up, inner, down, tail."""
    r = inner.n
    mask = 1 | (inner.mask << 1) | (tail.mask << (2 * r + 2))
    return StepSet.from_mask(r + tail.n + 1, mask)


@lru_cache(maxsize=None)
def catalan_number(n: int) -> int:
    if n < 0:
        raise DomainError(f"Catalan numbers need n >= 0, got {n}")
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=8)
def dyck_masks(n: int) -> tuple[int, ...]:
    """Masks of all Dyck paths of half-length n, lexicographic on up-sets."""
    if n < 0:
        raise DomainError(f"half-length must be non-negative, got {n}")
    check_bound(n, half_length_bound(), "Dyck enumeration half-length")
    if n == 0:
        return (0,)
    out = []

    def rec(x, ups_left, height, mask):
        if ups_left == 0:
            out.append(mask)
            return
        rec(x + 1, ups_left - 1, height + 1, mask | (1 << x))
        if height > 0:
            rec(x + 1, ups_left, height - 1, mask)

    rec(0, n, 0, 0)
    return tuple(out)


def dyck_paths(n: int) -> list[StepSet]:
    """All Dyck paths of half-length n, lexicographic on up-step sets."""
    return [StepSet.from_mask(n, mask) for mask in dyck_masks(n)]


def _initial_rise(mask: int) -> int:
    # length of the run of set bits starting at bit 0
    return (~mask & (mask + 1)).bit_length() - 1


def _axis_touches(n: int, mask: int) -> int:
    h = 0
    touches = 0
    for x in range(2 * n):
        h += 1 if mask >> x & 1 else -1
        if h == 0:
            touches += 1
    return touches
