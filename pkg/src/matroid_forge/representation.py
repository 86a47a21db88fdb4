"""Integer-matrix representations of shifted matroids.

A staircase matrix with generic entries in the support (row i nonzero only
in columns up to s_i) represents the shifted matroid of the vector s: a
column set is independent exactly when its submatrix determinant is
nonzero, which happens exactly when a non-attacking rook placement fits on
the support, which reduces to the sorted inequalities b_i <= s_i.

Genericity is realized by a super-increasing sequence, each term exceeding
the product of (1 + earlier terms); entries therefore grow doubly
exponentially and all arithmetic is exact big-integer work (gmpy2 when
available).  No floating point is used anywhere.
"""

from dataclasses import dataclass
from itertools import combinations

from .bitsets import mask_of
from .catalan_shifted import ShiftVector, catalan_matroid
from .errors import DomainError, check_bound
from .matroid_core import BasisFamily, MinorWitness, has_uniform_minor

try:
    from gmpy2 import mpz
except ImportError:  # pragma: no cover
    mpz = int

GENERIC_LENGTH_BOUND = 40
VECTOR_RANK_BOUND = 6
VECTOR_GROUND_BOUND = 12
MINOR_PROBE_MIN = 3
MINOR_PROBE_MAX = 6


def generic_sequence(length: int) -> list:
    """Super-increasing integers: x_1 = 1, x_i = 1 + prod of (1 + x_j), j < i."""
    if length < 0:
        raise DomainError(f"sequence length must be non-negative, got {length}")
    check_bound(length, GENERIC_LENGTH_BOUND, "generic sequence length")
    out = []
    product = mpz(1)
    for i in range(length):
        term = mpz(1) if i == 0 else product + 1
        out.append(term)
        product *= term + 1
    return out


class GenericMatrix:
    """Staircase matrix: row i may be nonzero only in columns 1..s_i.

    Columns beyond s_n are allowed and must be all zero; they represent
    loops of the vector matroid.
    """

    __slots__ = ("shifts", "entries")

    def __init__(self, shifts: ShiftVector, entries):
        if not isinstance(shifts, ShiftVector):
            shifts = ShiftVector(shifts)
        entries = tuple(tuple(mpz(v) for v in row) for row in entries)
        widths = {len(row) for row in entries}
        if len(entries) != shifts.n or len(widths) != 1 or min(widths) < shifts[-1]:
            raise DomainError(
                f"need a {shifts.n} x >= {shifts[-1]} matrix for shifts {shifts!r}"
            )
        for i, row in enumerate(entries):
            for j, value in enumerate(row, start=1):
                if j > shifts[i] and value != 0:
                    raise DomainError(f"entry ({i + 1},{j}) must be 0 outside the staircase")
        object.__setattr__(self, "shifts", shifts)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("GenericMatrix is immutable")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def column_submatrix(self, columns) -> list[list]:
        return [[row[c - 1] for c in columns] for row in self.entries]

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [str(v) for row in self.entries for v in row],
        }

    def __eq__(self, other):
        return (
            isinstance(other, GenericMatrix)
            and self.shifts == other.shifts
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"GenericMatrix(shifts={self.shifts!r})"


def build_representation(shifts: ShiftVector, ground: int | None = None) -> GenericMatrix:
    """Fill the staircase of a shift vector with the generic sequence, row-major.

    A ground size beyond the last shift appends all-zero loop columns.
    """
    if not isinstance(shifts, ShiftVector):
        shifts = ShiftVector(shifts)
    width = shifts[-1] if ground is None else ground
    if width < shifts[-1]:
        raise DomainError(f"ground size {width} is smaller than the last shift {shifts[-1]}")
    total = sum(shifts)
    check_bound(total, GENERIC_LENGTH_BOUND, "number of generic entries")
    values = iter(generic_sequence(total))
    entries = []
    for i in range(shifts.n):
        row = [next(values) for _ in range(shifts[i])]
        row += [mpz(0)] * (width - shifts[i])
        entries.append(row)
    return GenericMatrix(shifts, entries)


def determinant(rows) -> "mpz":
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [[mpz(v) for v in row] for row in rows]
    n = len(a)
    if any(len(row) != n for row in a):
        raise DomainError("determinant needs a square matrix")
    if n == 0:
        return mpz(1)
    sign = 1
    previous = mpz(1)
    for r in range(n - 1):
        if a[r][r] == 0:
            for i in range(r + 1, n):
                if a[i][r] != 0:
                    a[r], a[i] = a[i], a[r]
                    sign = -sign
                    break
            else:
                return mpz(0)
        pivot = a[r][r]
        for i in range(r + 1, n):
            for j in range(r + 1, n):
                a[i][j] = (pivot * a[i][j] - a[i][r] * a[r][j]) // previous
            a[i][r] = mpz(0)
        previous = pivot
    return sign * a[n - 1][n - 1]


def vector_matroid(matrix: GenericMatrix) -> BasisFamily:
    """Column sets whose exact determinant is nonzero, as a basis family."""
    n, m = matrix.rows, matrix.cols
    check_bound(n, VECTOR_RANK_BOUND, "matrix rank for determinant sweep")
    check_bound(m, VECTOR_GROUND_BOUND, "matrix columns for determinant sweep")
    bases = []
    for columns in combinations(range(1, m + 1), n):
        if determinant(matrix.column_submatrix(columns)) != 0:
            bases.append(mask_of(columns))
    return BasisFamily.from_masks(m, bases)


def rook_basis_test(shifts: ShiftVector, subset) -> bool:
    """Sorted-inequality basis test: the i-th smallest element is at most s_i."""
    if not isinstance(shifts, ShiftVector):
        shifts = ShiftVector(shifts)
    chosen = sorted(set(subset))
    if len(chosen) != shifts.n or chosen[0] < 1 or chosen[-1] > shifts[-1]:
        raise DomainError(
            f"need {shifts.n} distinct elements of 1..{shifts[-1]}, got {chosen}"
        )
    return all(value <= bound for value, bound in zip(chosen, shifts))


def rook_placement_exists(shifts: ShiftVector, subset) -> bool:
    """Independent oracle: bipartite matching on the staircase support.

    Row i is compatible with column c when c <= s_i; a full matching is a
    placement of non-attacking rooks on nonzero entries.
    """
    if not isinstance(shifts, ShiftVector):
        shifts = ShiftVector(shifts)
    columns = sorted(set(subset))
    if len(columns) != shifts.n or columns[0] < 1 or columns[-1] > shifts[-1]:
        raise DomainError(
            f"need {shifts.n} distinct elements of 1..{shifts[-1]}, got {columns}"
        )
    matched: dict[int, int] = {}

    def augment(row: int, seen: set[int]) -> bool:
        for c in columns:
            if c > shifts[row] or c in seen:
                continue
            seen.add(c)
            if c not in matched or augment(matched[c], seen):
                matched[c] = row
                return True
        return False

    return all(augment(row, set()) for row in range(shifts.n))


def _smallest_prime_factor(value: int) -> int:
    d = 2
    while d * d <= value:
        if value % d == 0:
            return d
        d += 1
    return value


def is_prime_power(value: int) -> bool:
    if value < 2:
        return False
    p = _smallest_prime_factor(value)
    while value % p == 0:
        value //= p
    return value == 1


@dataclass(frozen=True)
class NonRepresentabilityResult:
    """Outcome of the finite-field probe for the Catalan matroid."""

    order: int
    field_size: int
    conclusive: bool
    witness: MinorWitness | None
    reason: str

    def to_json(self) -> dict:
        data = {
            "n": self.order,
            "q": self.field_size,
            "conclusive": self.conclusive,
            "reason": self.reason,
        }
        if self.witness is not None:
            data["witness"] = self.witness.to_json()
        return data


def non_representability_witness(n: int, q: int) -> NonRepresentabilityResult:
    """Certify non-representability of the order-n Catalan matroid over F_q.

    For q <= n-2 a uniform U(2,n) minor is exhibited; such a minor needs a
    field with at least n-1 elements, so no representation over F_q exists.
    For larger q the probe draws no conclusion.
    """
    if n < MINOR_PROBE_MIN:
        raise DomainError(f"probe needs n >= {MINOR_PROBE_MIN}, got {n}")
    check_bound(n, MINOR_PROBE_MAX, "Catalan order for minor probe")
    if not is_prime_power(q):
        raise DomainError(f"field size must be a prime power, got {q}")
    if q > n - 2:
        return NonRepresentabilityResult(
            n, q, False, None, f"criterion silent: q = {q} exceeds n - 2 = {n - 2}"
        )
    witness = has_uniform_minor(catalan_matroid(n), 2, n)
    if witness is None:
        raise AssertionError(f"expected a U(2,{n}) minor in the Catalan matroid")
    return NonRepresentabilityResult(
        n,
        q,
        True,
        witness,
        f"U(2,{n}) minor needs a field with at least {n - 1} elements, "
        f"but q = {q} <= {n - 2}",
    )
