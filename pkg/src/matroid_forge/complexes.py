"""Shifted set families from matroids, Young tableaux, and posets.

A family is shifted when replacing any member element by a smaller absent
one stays in the family.  Independence complexes of shifted matroids are
shifted; conversely a loopless matroid with shifted complex is a shifted
matroid, and its shift vector can be recovered from the bases.  Standard
Young tableaux contribute two sources of shifted families (first-row sets
and sub-shape entry sets), both special cases of ideal images under poset
linear extensions.
"""

from dataclasses import dataclass

from .bitsets import elements_of, mask_of, set_of
from .catalan_shifted import ShiftVector, shifted_matroid
from .errors import DomainError, check_bound
from .matroid_core import BasisFamily, _independent_masks

COMPLEX_GROUND_BOUND = 16
TABLEAU_SIZE_BOUND = 10
EXTENSION_SIZE_BOUND = 9


class SetFamily:
    """A collection of subsets of {1..m}, with no structural requirements."""

    __slots__ = ("m", "masks")

    def __init__(self, m: int, members=()):
        if m < 0:
            raise DomainError(f"ground-set size must be non-negative, got {m}")
        masks = frozenset(
            s if isinstance(s, int) else mask_of(s, m) for s in members
        )
        full = (1 << m) - 1
        for mask in masks:
            if mask & ~full:
                raise DomainError(f"member {sorted(set_of(mask))} leaves the ground set [{m}]")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "masks", masks)

    def __setattr__(self, name, value):
        raise AttributeError("SetFamily is immutable")

    @property
    def sets(self) -> tuple[frozenset[int], ...]:
        return tuple(
            set_of(mask)
            for mask in sorted(self.masks, key=lambda x: (x.bit_count(), elements_of(x)))
        )

    def __contains__(self, subset):
        mask = subset if isinstance(subset, int) else mask_of(subset, self.m)
        return mask in self.masks

    def __len__(self):
        return len(self.masks)

    def __eq__(self, other):
        return (
            isinstance(other, SetFamily)
            and self.m == other.m
            and self.masks == other.masks
        )

    def __hash__(self):
        return hash((self.m, self.masks))

    def __repr__(self):
        return f"SetFamily(m={self.m}, members={len(self.masks)})"

    def to_json(self) -> dict:
        return {"m": self.m, "members": [sorted(s) for s in self.sets]}


class Partition:
    """Weakly decreasing positive integers; the empty partition is allowed."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        vals = tuple(int(p) for p in parts)
        if any(p < 1 for p in vals):
            raise DomainError(f"partition parts must be positive: {vals}")
        if any(a < b for a, b in zip(vals, vals[1:])):
            raise DomainError(f"partition parts must weakly decrease: {vals}")
        object.__setattr__(self, "parts", vals)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def contains(self, other: "Partition") -> bool:
        """Componentwise containment of Young diagrams."""
        if len(other.parts) > len(self.parts):
            return False
        return all(o <= s for o, s in zip(other.parts, self.parts))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        other_parts = other.parts if isinstance(other, Partition) else tuple(other)
        return self.parts == other_parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition{self.parts}"

    def to_json(self) -> list[int]:
        return list(self.parts)


def conjugate(shape: Partition) -> Partition:
    """Transpose the Young diagram: part i becomes the i-th column length."""
    if not shape.parts:
        return Partition()
    return Partition(
        sum(1 for p in shape.parts if p >= i) for i in range(1, shape.parts[0] + 1)
    )


class Tableau:
    """A standard filling of a Young diagram with 1..n."""

    __slots__ = ("shape", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        shape = Partition(len(row) for row in rows)
        entries = sorted(v for row in rows for v in row)
        if entries != list(range(1, shape.size + 1)):
            raise DomainError("entries must be a permutation of 1..n")
        for row in rows:
            if any(a >= b for a, b in zip(row, row[1:])):
                raise DomainError("rows must increase left to right")
        for r in range(1, len(rows)):
            for c in range(len(rows[r])):
                if rows[r - 1][c] >= rows[r][c]:
                    raise DomainError("columns must increase top to bottom")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Tableau is immutable")

    def first_row(self) -> tuple[int, ...]:
        return self.rows[0]

    def sub_shape_entries(self, sub: Partition) -> frozenset[int]:
        """Entries occupying the cells of a contained sub-diagram."""
        if not self.shape.contains(sub):
            raise DomainError(f"{sub!r} is not contained in {self.shape!r}")
        return frozenset(
            self.rows[r][c] for r in range(len(sub)) for c in range(sub[r])
        )

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Tableau{self.rows}"


def enumerate_syt(shape: Partition) -> tuple[Tableau, ...]:
    """All standard Young tableaux of the given shape, deterministic order."""
    if not isinstance(shape, Partition):
        shape = Partition(shape)
    return _enumerate_syt(shape)


@lru_cache(maxsize=256)
def _enumerate_syt(shape: Partition) -> tuple[Tableau, ...]:
    check_bound(shape.size, TABLEAU_SIZE_BOUND, "tableau size")
    if not shape.parts:
        return (Tableau([]),)
    rows = [[0] * p for p in shape.parts]
    fill = [0] * len(shape.parts)
    out = []

    def rec(value):
        if value > shape.size:
            out.append(Tableau([row[:] for row in rows]))
            return
        for r in range(len(shape.parts)):
            if fill[r] < shape[r] and (r == 0 or fill[r] < fill[r - 1]):
                rows[r][fill[r]] = value
                fill[r] += 1
                rec(value + 1)
                fill[r] -= 1

    rec(1)
    return tuple(out)


def first_row_shift_vector(shape: Partition) -> ShiftVector:
    """Shift vector whose matroid collects the first rows of the tableaux."""
    if not isinstance(shape, Partition):
        shape = Partition(shape)
    if not shape.parts:
        raise DomainError("the empty shape has no first row")
    columns = conjugate(shape).parts
    prefix = 0
    out = []
    for i in range(shape.parts[0]):
        out.append(1 + prefix)
        prefix += columns[i]
    return ShiftVector(out)


def first_row_sets(shape: Partition) -> SetFamily:
    """First-row entry sets of all standard tableaux of the shape."""
    if not isinstance(shape, Partition):
        shape = Partition(shape)
    return SetFamily(shape.size, (t.first_row() for t in enumerate_syt(shape)))


def mu_sets(shape: Partition, sub: Partition) -> SetFamily:
    """Entry sets filling a contained sub-diagram, over all standard tableaux."""
    if not isinstance(shape, Partition):
        shape = Partition(shape)
    if not isinstance(sub, Partition):
        sub = Partition(sub)
    if not shape.contains(sub):
        raise DomainError(f"{sub!r} is not contained in {shape!r}")
    return SetFamily(
        shape.size, (t.sub_shape_entries(sub) for t in enumerate_syt(shape))
    )


class Poset:
    """A finite partial order on {1..size} given by cover pairs."""

    __slots__ = ("size", "covers", "below")

    def __init__(self, size: int, covers=()):
        if size < 0:
            raise DomainError(f"poset size must be non-negative, got {size}")
        pairs = set()
        for a, b in covers:
            if not (1 <= a <= size and 1 <= b <= size) or a == b:
                raise DomainError(f"bad cover pair ({a}, {b}) for size {size}")
            pairs.add((a, b))
        successors = {e: [] for e in range(1, size + 1)}
        indegree = {e: 0 for e in range(1, size + 1)}
        for a, b in pairs:
            successors[a].append(b)
            indegree[b] += 1
        queue = [e for e in range(1, size + 1) if indegree[e] == 0]
        topo = []
        while queue:
            e = queue.pop()
            topo.append(e)
            for nxt in successors[e]:
                indegree[nxt] -= 1
                if indegree[nxt] == 0:
                    queue.append(nxt)
        if len(topo) != size:
            raise DomainError("cover relation contains a cycle")
        below = [0] * (size + 1)
        for e in topo:
            for nxt in successors[e]:
                below[nxt] |= below[e] | (1 << (e - 1))
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "covers", frozenset(pairs))
        object.__setattr__(self, "below", tuple(below))

    def __setattr__(self, name, value):
        raise AttributeError("Poset is immutable")

    def less(self, a: int, b: int) -> bool:
        return bool(self.below[b] >> (a - 1) & 1)

    def is_order_ideal(self, elements) -> bool:
        mask = mask_of(elements, self.size)
        d = mask
        while d:
            bit = d & -d
            d ^= bit
            if self.below[bit.bit_length()] & ~mask:
                return False
        return True

    def to_json(self) -> dict:
        return {"size": self.size, "covers": sorted(map(list, self.covers))}

    @classmethod
    def from_json(cls, data: dict) -> "Poset":
        return cls(data["size"], data["covers"])

    def __eq__(self, other):
        return (
            isinstance(other, Poset)
            and self.size == other.size
            and self.below == other.below
        )

    def __hash__(self):
        return hash((self.size, self.below))

    def __repr__(self):
        return f"Poset(size={self.size}, covers={sorted(self.covers)})"


def linear_extensions(poset: Poset) -> tuple[tuple[int, ...], ...]:
    """All order-preserving element sequences, lexicographically ordered."""
    check_bound(poset.size, EXTENSION_SIZE_BOUND, "poset size for extension sweep")
    out = []
    sequence = []
    placed = 0

    def rec():
        nonlocal placed
        if len(sequence) == poset.size:
            out.append(tuple(sequence))
            return
        for e in range(1, poset.size + 1):
            bit = 1 << (e - 1)
            if placed & bit or poset.below[e] & ~placed:
                continue
            sequence.append(e)
            placed |= bit
            rec()
            placed ^= bit
            sequence.pop()

    rec()
    return tuple(out)


def iset_family(poset: Poset, ideal) -> SetFamily:
    """Images of an order ideal under every linear extension."""
    ideal_mask = mask_of(ideal, poset.size)
    if not poset.is_order_ideal(elements_of(ideal_mask)):
        raise DomainError(f"{sorted(set_of(ideal_mask))} is not an order ideal")
    members = set()
    for ext in linear_extensions(poset):
        members.add(
            mask_of(
                idx + 1 for idx, e in enumerate(ext) if ideal_mask >> (e - 1) & 1
            )
        )
    return SetFamily(poset.size, members)


def tableau_poset(shape: Partition) -> Poset:
    """Cells of a Young diagram ordered northwest-to-southeast.

    Cells are numbered 1..n in reading order; covers join each cell to its
    right and lower neighbours, so linear extensions are exactly the
    standard tableaux of the shape.
    """
    if not isinstance(shape, Partition):
        shape = Partition(shape)
    cell_id = {}
    counter = 0
    for r, length in enumerate(shape.parts):
        for c in range(length):
            counter += 1
            cell_id[(r, c)] = counter
    covers = []
    for (r, c), ident in cell_id.items():
        if (r, c + 1) in cell_id:
            covers.append((ident, cell_id[(r, c + 1)]))
        if (r + 1, c) in cell_id:
            covers.append((ident, cell_id[(r + 1, c)]))
    return Poset(shape.size, covers)


def tableau_ideal(shape: Partition, sub: Partition) -> frozenset[int]:
    """Cell ids of a contained sub-diagram; an order ideal of tableau_poset."""
    if not isinstance(shape, Partition):
        shape = Partition(shape)
    if not isinstance(sub, Partition):
        sub = Partition(sub)
    if not shape.contains(sub):
        raise DomainError(f"{sub!r} is not contained in {shape!r}")
    out = []
    counter = 0
    for r, length in enumerate(shape.parts):
        for c in range(length):
            counter += 1
            if r < len(sub) and c < sub[r]:
                out.append(counter)
    return frozenset(out)


def independence_complex(f: BasisFamily) -> SetFamily:
    """All independent sets of a matroid, as a simplicial complex."""
    check_bound(f.m, COMPLEX_GROUND_BOUND, "ground-set size for complex sweep")
    return SetFamily(f.m, _independent_masks(f))


def shifted_violation(family: SetFamily):
    """First (member, j, i) with i < j, j inside, i outside, and no exchange."""
    masks = family.masks
    for mask in sorted(masks, key=lambda x: (x.bit_count(), elements_of(x))):
        for j in elements_of(mask):
            jbit = 1 << (j - 1)
            for i in range(1, j):
                ibit = 1 << (i - 1)
                if mask & ibit:
                    continue
                if (mask ^ jbit) | ibit not in masks:
                    return set_of(mask), j, i
    return None


def is_shifted_family(family: SetFamily) -> bool:
    """True when every smaller-element exchange stays in the family."""
    return shifted_violation(family) is None


@dataclass(frozen=True)
class NotShiftedReport:
    """Evidence that a basis family is not a shifted matroid."""

    attempted: ShiftVector
    discrepant: frozenset[int]
    missing_from_input: bool

    def __bool__(self):
        return False

    def to_json(self) -> dict:
        return {
            "shifted": False,
            "attempted": self.attempted.to_json(),
            "discrepant": sorted(self.discrepant),
            "missing_from_input": self.missing_from_input,
        }


def recover_shift_vector(f: BasisFamily):
    """Reconstruct the shift vector of a loopless shifted matroid.

    The candidate s_i is the largest i-th smallest element over all bases;
    the result is confirmed by rebuilding the matroid.  Returns the
    ShiftVector on success and a NotShiftedReport otherwise.
    """
    covered = 0
    for b in f.masks:
        covered |= b
    full = (1 << f.m) - 1
    if covered != full:
        loops = sorted(set_of(full ^ covered))
        raise DomainError(f"matroid has loops {loops}; strip them before recovery")
    if f.rank == 0:
        raise DomainError("rank-zero matroid has no shift vector")
    candidate = [0] * f.rank
    for b in f.masks:
        for idx, e in enumerate(elements_of(b)):
            if e > candidate[idx]:
                candidate[idx] = e
    vector = ShiftVector(candidate)
    rebuilt = shifted_matroid(vector)
    if rebuilt.m == f.m and rebuilt.masks == f.masks:
        return vector
    extra = sorted(
        (elements_of(b) for b in rebuilt.masks - f.masks), key=lambda x: x
    )
    if extra:
        return NotShiftedReport(vector, frozenset(extra[0]), True)
    stray = sorted((elements_of(b) for b in f.masks - rebuilt.masks))
    return NotShiftedReport(vector, frozenset(stray[0]), False)
