"""The Catalan matroid, shifted matroids, and their closed-form set systems.

The Catalan matroid of order n lives on {1, ..., 2n} with the up-step sets
of Dyck paths as bases.  A shift vector (s_1 < ... < s_n) defines the
shifted matroid whose bases are the sets {a_1 < ... < a_n} with a_i <= s_i
componentwise.  Height statistics of the associated paths characterize
rank, flats, independent, spanning sets, circuits and bonds in closed
form; each predicate here mirrors one of those characterizations and is
tested against the brute-force derivations of matroid_core.
"""

from functools import lru_cache

from .bitsets import elements_of, mask_of
from .errors import DomainError, check_bound, half_length_bound
from .matroid_core import BasisFamily
from .paths import StepSet, dyck_masks

SHIFTED_GROUND_BOUND = 16


class ShiftVector:
    """Strictly increasing positive integers (s_1 < ... < s_n)."""

    __slots__ = ("values",)

    def __init__(self, values):
        vals = tuple(int(v) for v in values)
        if not vals:
            raise DomainError("a shift vector needs at least one entry")
        if vals[0] < 1 or any(a >= b for a, b in zip(vals, vals[1:])):
            raise DomainError(f"not strictly increasing positive integers: {vals}")
        object.__setattr__(self, "values", vals)

    def __setattr__(self, name, value):
        raise AttributeError("ShiftVector is immutable")

    @property
    def n(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __eq__(self, other):
        other_vals = other.values if isinstance(other, ShiftVector) else tuple(other)
        return self.values == other_vals

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"ShiftVector{self.values}"

    def to_json(self) -> list[int]:
        return list(self.values)


@lru_cache(maxsize=8)
def catalan_matroid(n: int) -> BasisFamily:
    """The matroid on {1..2n} whose bases are Dyck up-step sets."""
    if n < 0:
        raise DomainError(f"order must be non-negative, got {n}")
    check_bound(n, half_length_bound(), "Catalan matroid order")
    return BasisFamily.from_masks(2 * n, dyck_masks(n))


def shifted_matroid(s: ShiftVector) -> BasisFamily:
    """The matroid on {1..s_n} with bases {a_1 < ... < a_n}, a_i <= s_i."""
    if not isinstance(s, ShiftVector):
        s = ShiftVector(s)
    ground = s[-1]
    check_bound(ground, SHIFTED_GROUND_BOUND, "shifted matroid ground size")
    out = []

    def rec(i, start, mask):
        if i == s.n:
            out.append(mask)
            return
        for a in range(start, s[i] + 1):
            rec(i + 1, a + 1, mask | (1 << (a - 1)))

    rec(0, 1, 0)
    return BasisFamily.from_masks(ground, out)


def catalan_as_shifted(n: int) -> tuple[ShiftVector, int]:
    """Shift vector and extra loop reconstructing the Catalan matroid."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    return ShiftVector(range(1, 2 * n, 2)), 2 * n


def _as_mask(n: int, a) -> int:
    return a if isinstance(a, int) else mask_of(a, 2 * n)


def _heights(n: int, a) -> tuple[int, ...]:
    return StepSet.from_mask(n, _as_mask(n, a)).heights()


def rank_closed_form(n: int, a) -> int:
    """Rank in the Catalan matroid: n plus half the minimum height, floored."""
    return n + min(_heights(n, a)) // 2


def is_flat_closed_form(n: int, a) -> bool:
    """Flat test: odd minimum height and a full tail after each minimum."""
    mask = _as_mask(n, a)
    if mask == (1 << (2 * n)) - 1:
        return True
    heights = _heights(n, mask)
    low = min(heights)
    if low % 2 == 0:
        return False
    full = (1 << (2 * n)) - 1
    for x in range(2 * n + 1):
        if heights[x] == low:
            tail = full ^ ((1 << x) - 1)
            if mask & tail != tail:
                return False
    return True


def is_independent_closed_form(n: int, a) -> bool:
    """Independence test: the path never dips below its final height."""
    heights = _heights(n, a)
    return min(heights) == heights[-1]


def is_spanning_closed_form(n: int, a) -> bool:
    """Spanning test: the path never goes below height zero."""
    return min(_heights(n, a)) == 0


def is_circuit_closed_form(n: int, a) -> bool:
    """Circuit test: an even minimum 2k followed by a shifted Dyck path."""
    mask = _as_mask(n, a)
    if mask == 0:
        return False
    els = elements_of(mask)
    lead = els[0]
    if lead % 2 != 0:
        return False
    k = lead // 2
    if not 1 <= k <= n:
        return False
    rest = [e - lead for e in els[1:]]
    if len(rest) != n - k or (rest and rest[-1] > 2 * (n - k)):
        return False
    return StepSet(n - k, rest).is_dyck()


def circuits_closed_form(n: int) -> tuple[frozenset[int], ...]:
    """All circuits of the Catalan matroid, built from shifted Dyck paths."""
    check_bound(n, half_length_bound(), "circuit enumeration order")
    out = []
    for k in range(1, n + 1):
        lead = 2 * k
        for d in dyck_masks(n - k):
            out.append(frozenset([lead] + [lead + e for e in elements_of(d)]))
    return tuple(sorted(out, key=lambda c: (len(c), sorted(c))))


def is_bond_closed_form(n: int, a) -> bool:
    """Bond test: maximum height one, reached only past every element."""
    mask = _as_mask(n, a)
    if mask == 0:
        return False
    heights = _heights(n, mask)
    if max(heights) != 1:
        return False
    top = mask.bit_length()
    return all(x >= top for x in range(2 * n + 1) if heights[x] == 1)


def hyperplane_count_over_flat(n: int, a) -> int:
    """Number of hyperplanes over a flat of rank n-2 in the Catalan matroid.

    Equals (x+3)/2 where x is the first step at which the flat's path
    reaches height -1.
    """
    mask = _as_mask(n, a)
    if not is_flat_closed_form(n, mask) or rank_closed_form(n, mask) != n - 2:
        raise DomainError(f"{sorted(elements_of(mask))} is not a flat of rank {n - 2}")
    heights = _heights(n, mask)
    x = heights.index(-1)
    return (x + 3) // 2
