"""Finite matroids given by an explicit basis family.

Everything here treats the matroid extensionally: the ground set is
{1, ..., m} and the bases are stored outright, so every derived notion
(rank, flats, circuits, duality, minors) is computed by exhaustive sweeps
and equality of families is decidable.  Ground sets are kept small; the
sweeps are bounded at BRUTE_GROUND_BOUND elements.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .bitsets import elements_of, mask_of, set_of
from .errors import DomainError, ResourceLimitError, check_bound

BRUTE_GROUND_BOUND = 16
ISOMORPHISM_GROUND_BOUND = 10
MINOR_SEARCH_GROUND_BOUND = 12


class BasisFamily:
    """Ground-set size plus the collection of bases, all of one cardinality.

    Construction checks non-emptiness and equal cardinality (axiom B1 and
    the degenerate half of B2); the full exchange axiom is checked on
    demand by :func:`check_basis_axioms`.
    """

    __slots__ = ("m", "masks", "rank")

    def __init__(self, m: int, bases):
        masks = frozenset(
            b if isinstance(b, int) else mask_of(b, m) for b in bases
        )
        self._init_from_masks(m, masks)

    @classmethod
    def from_masks(cls, m: int, masks) -> "BasisFamily":
        f = cls.__new__(cls)
        f._init_from_masks(m, frozenset(masks))
        return f

    def _init_from_masks(self, m: int, masks: frozenset):
        if m < 0:
            raise DomainError(f"ground-set size must be non-negative, got {m}")
        if not masks:
            raise DomainError("a matroid needs at least one basis (axiom B1)")
        full = (1 << m) - 1
        sizes = set()
        for b in masks:
            if b & ~full:
                raise DomainError(f"basis {sorted(set_of(b))} leaves the ground set [{m}]")
            sizes.add(b.bit_count())
        if len(sizes) != 1:
            raise DomainError(f"bases of unequal sizes {sorted(sizes)}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "masks", masks)
        object.__setattr__(self, "rank", sizes.pop())

    def __setattr__(self, name, value):
        raise AttributeError("BasisFamily is immutable")

    @property
    def bases(self) -> tuple[tuple[int, ...], ...]:
        """Bases as sorted tuples, lexicographically ordered."""
        return tuple(sorted(elements_of(b) for b in self.masks))

    def contains_basis(self, subset) -> bool:
        mask = subset if isinstance(subset, int) else mask_of(subset, self.m)
        return mask in self.masks

    def to_json(self) -> dict:
        return {"m": self.m, "bases": [list(b) for b in self.bases]}

    @classmethod
    def from_json(cls, data: dict) -> "BasisFamily":
        return cls(data["m"], data["bases"])

    def __eq__(self, other):
        return (
            isinstance(other, BasisFamily)
            and self.m == other.m
            and self.masks == other.masks
        )

    def __hash__(self):
        return hash((self.m, self.masks))

    def __repr__(self):
        return f"BasisFamily(m={self.m}, rank={self.rank}, bases={len(self.masks)})"


@dataclass(frozen=True)
class AxiomCheck:
    """Outcome of a basis-axiom check; witness pins down the first failure."""

    ok: bool
    failure: str | None = None
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


def check_basis_axioms(m: int, sets) -> AxiomCheck:
    """Check B1 (non-empty) and the exchange axiom B2 on a candidate family.

    Every triple (A, B, a in A-B) is tested; the first triple with no valid
    exchange element is returned as the witness.
    """
    masks = sorted({s if isinstance(s, int) else mask_of(s, m) for s in sets})
    if not masks:
        return AxiomCheck(False, "B1: the family is empty")
    sizes = {b.bit_count() for b in masks}
    if len(sizes) != 1:
        small = min(masks, key=lambda b: b.bit_count())
        big = max(masks, key=lambda b: b.bit_count())
        return AxiomCheck(
            False, "bases of unequal cardinality", (set_of(small), set_of(big))
        )
    bset = set(masks)
    full = (1 << m) - 1
    # exchange[i] lists (bit of a, mask of all b outside A with A-a+b in the family)
    exchange = []
    for a_mask in masks:
        options = []
        rest = full & ~a_mask
        d = a_mask
        while d:
            abit = d & -d
            d ^= abit
            stripped = a_mask ^ abit
            ok_bits = 0
            bb = rest
            while bb:
                bbit = bb & -bb
                bb ^= bbit
                if stripped | bbit in bset:
                    ok_bits |= bbit
            options.append((abit, ok_bits))
        exchange.append(options)
    for i, a_mask in enumerate(masks):
        options = exchange[i]
        for b_mask in masks:
            diff = a_mask & ~b_mask
            if not diff:
                continue
            gain = b_mask & ~a_mask
            for abit, ok_bits in options:
                if abit & diff and not ok_bits & gain:
                    return AxiomCheck(
                        False,
                        "B2: no exchange element",
                        (set_of(a_mask), set_of(b_mask), abit.bit_length()),
                    )
    return AxiomCheck(True)


def rank_of(f: BasisFamily, subset) -> int:
    """Rank of a subset: the largest intersection with any basis."""
    mask = subset if isinstance(subset, int) else mask_of(subset, f.m)
    return max((mask & b).bit_count() for b in f.masks)


def closure(f: BasisFamily, subset) -> frozenset[int]:
    mask = subset if isinstance(subset, int) else mask_of(subset, f.m)
    r = rank_of(f, mask)
    out = mask
    for e in range(1, f.m + 1):
        bit = 1 << (e - 1)
        if not mask & bit and rank_of(f, mask | bit) == r:
            out |= bit
    return set_of(out)


def _check_brute_bound(f: BasisFamily) -> None:
    check_bound(f.m, BRUTE_GROUND_BOUND, "ground-set size for subset sweep")


@lru_cache(maxsize=8)
def _independent_masks(f: BasisFamily) -> frozenset[int]:
    """Downward closure of the basis masks."""
    seen = set(f.masks)
    frontier = list(f.masks)
    while frontier:
        mask = frontier.pop()
        d = mask
        while d:
            bit = d & -d
            d ^= bit
            sub = mask ^ bit
            if sub not in seen:
                seen.add(sub)
                frontier.append(sub)
    return frozenset(seen)


@lru_cache(maxsize=8)
def _rank_table(f: BasisFamily) -> list[int]:
    """rank per subset mask, for all 2^m subsets."""
    _check_brute_bound(f)
    indep = _independent_masks(f)
    table = [0] * (1 << f.m)
    for mask in range(1, 1 << f.m):
        if mask in indep:
            table[mask] = mask.bit_count()
        else:
            table[mask] = max(table[mask ^ bit] for bit in _bits(mask))
    return table


def _bits(mask: int):
    while mask:
        bit = mask & -mask
        mask ^= bit
        yield bit


def _sorted_sets(masks) -> tuple[frozenset[int], ...]:
    return tuple(
        set_of(m) for m in sorted(masks, key=lambda x: (x.bit_count(), elements_of(x)))
    )


def independents(f: BasisFamily) -> tuple[frozenset[int], ...]:
    """All independent sets: subsets of bases."""
    _check_brute_bound(f)
    return _sorted_sets(_independent_masks(f))


def spanning_sets(f: BasisFamily) -> tuple[frozenset[int], ...]:
    """All spanning sets: supersets of bases."""
    _check_brute_bound(f)
    full = (1 << f.m) - 1
    seen = set(f.masks)
    frontier = list(f.masks)
    while frontier:
        mask = frontier.pop()
        d = full & ~mask
        while d:
            bit = d & -d
            d ^= bit
            sup = mask | bit
            if sup not in seen:
                seen.add(sup)
                frontier.append(sup)
    return _sorted_sets(seen)


def flats(f: BasisFamily) -> tuple[frozenset[int], ...]:
    """All flats: subsets whose rank grows when any outside element joins."""
    table = _rank_table(f)
    out = []
    for mask in range(1 << f.m):
        r = table[mask]
        if all(
            table[mask | (1 << e)] > r
            for e in range(f.m)
            if not mask >> e & 1
        ):
            out.append(mask)
    return _sorted_sets(out)


def circuits(f: BasisFamily) -> tuple[frozenset[int], ...]:
    """All circuits: minimal dependent sets."""
    table = _rank_table(f)
    out = []
    for mask in range(1, 1 << f.m):
        if table[mask] < mask.bit_count() and all(
            table[mask ^ bit] == (mask ^ bit).bit_count() for bit in _bits(mask)
        ):
            out.append(mask)
    return _sorted_sets(out)


def bonds(f: BasisFamily) -> tuple[frozenset[int], ...]:
    """All bonds: circuits of the dual matroid."""
    return circuits(dual(f))


def dual(f: BasisFamily) -> BasisFamily:
    full = (1 << f.m) - 1
    return BasisFamily.from_masks(f.m, (full ^ b for b in f.masks))


def _perm_images(perm, m: int) -> list[int]:
    """Normalize a permutation given as mapping, sequence, or callable."""
    if callable(perm) and not isinstance(perm, dict):
        images = [perm(i) for i in range(1, m + 1)]
    elif isinstance(perm, dict):
        images = [perm[i] for i in range(1, m + 1)]
    else:
        images = list(perm)
    if sorted(images) != list(range(1, m + 1)):
        raise DomainError(f"not a permutation of 1..{m}: {images}")
    return images


def relabel(f: BasisFamily, perm) -> BasisFamily:
    """Map every basis through a permutation of the ground set."""
    images = _perm_images(perm, f.m)
    shifted = [1 << (img - 1) for img in images]

    def remap(mask):
        out = 0
        for i in range(f.m):
            if mask >> i & 1:
                out |= shifted[i]
        return out

    return BasisFamily.from_masks(f.m, (remap(b) for b in f.masks))


def is_isomorphic(f: BasisFamily, g: BasisFamily):
    """Search for a relabeling carrying f onto g.

    Returns the image tuple (sigma(1), ..., sigma(m)) or None.  The search
    is a permutation backtrack pruned by element and element-pair basis
    counts.
    """
    if (f.m, f.rank, len(f.masks)) != (g.m, g.rank, len(g.masks)):
        return None
    m = f.m
    check_bound(m, ISOMORPHISM_GROUND_BOUND, "ground-set size for isomorphism search")

    def degrees(fam):
        deg = [0] * (m + 1)
        pair = [[0] * (m + 1) for _ in range(m + 1)]
        for b in fam.masks:
            els = elements_of(b)
            for e in els:
                deg[e] += 1
            for e1, e2 in combinations(els, 2):
                pair[e1][e2] += 1
                pair[e2][e1] += 1
        return deg, pair

    deg_f, pair_f = degrees(f)
    deg_g, pair_g = degrees(g)
    if sorted(deg_f[1:]) != sorted(deg_g[1:]):
        return None

    order = sorted(range(1, m + 1), key=lambda e: (deg_f[e], e))
    image = [0] * (m + 1)
    used = [False] * (m + 1)

    def assign(idx):
        if idx == m:
            images = image[1:]
            return images if relabel(f, images).masks == g.masks else None
        e = order[idx]
        for cand in range(1, m + 1):
            if used[cand] or deg_g[cand] != deg_f[e]:
                continue
            if any(
                image[prev] and pair_g[cand][image[prev]] != pair_f[e][prev]
                for prev in range(1, m + 1)
            ):
                continue
            image[e] = cand
            used[cand] = True
            found = assign(idx + 1)
            if found is not None:
                return found
            image[e] = 0
            used[cand] = False
        return None

    found = assign(0)
    return tuple(found) if found is not None else None


def minor(f: BasisFamily, contract_set=(), delete_set=()) -> BasisFamily:
    """Contract one element set and delete another, then re-index.

    Contraction of a dependent set contracts a maximal independent part and
    drops the rest; deletion of elements met by every basis lowers the rank.
    Surviving elements are renumbered 1..l preserving order.
    """
    cmask = contract_set if isinstance(contract_set, int) else mask_of(contract_set, f.m)
    dmask = delete_set if isinstance(delete_set, int) else mask_of(delete_set, f.m)
    if cmask & dmask:
        raise DomainError("contract and delete sets overlap")
    r_c = rank_of(f, cmask) if cmask else 0
    traces = {b & ~cmask for b in f.masks if (b & cmask).bit_count() == r_c}
    after = {t & ~dmask for t in traces}
    top = max(t.bit_count() for t in after)
    kept = [t for t in after if t.bit_count() == top]
    survivors = [e for e in range(1, f.m + 1) if not (cmask | dmask) >> (e - 1) & 1]
    position = {e: i for i, e in enumerate(survivors)}

    def reindex(mask):
        out = 0
        for e in elements_of(mask):
            out |= 1 << position[e]
        return out

    return BasisFamily.from_masks(len(survivors), (reindex(t) for t in kept))


def delete(f: BasisFamily, e: int) -> BasisFamily:
    return minor(f, (), (e,))


def contract(f: BasisFamily, e: int) -> BasisFamily:
    return minor(f, (e,), ())


def extend_ground(f: BasisFamily, m: int) -> BasisFamily:
    """Enlarge the ground set to size m; the new elements are loops."""
    if m < f.m:
        raise DomainError(f"cannot shrink ground set from {f.m} to {m}")
    return BasisFamily.from_masks(m, f.masks)


def uniform(k: int, m: int) -> BasisFamily:
    """The uniform matroid: every k-subset of {1..m} is a basis."""
    if not 0 <= k <= m:
        raise DomainError(f"uniform matroid needs 0 <= k <= m, got k={k}, m={m}")
    return BasisFamily.from_masks(m, (mask_of(c) for c in combinations(range(1, m + 1), k)))


@dataclass(frozen=True)
class MinorWitness:
    """Contract/delete recipe exhibiting a uniform minor."""

    contract: frozenset[int]
    delete: frozenset[int]
    minor_rank: int
    minor_size: int

    def to_json(self) -> dict:
        return {
            "contract": sorted(self.contract),
            "delete": sorted(self.delete),
            "minor": f"U({self.minor_rank},{self.minor_size})",
        }


def has_uniform_minor(f: BasisFamily, k: int, l: int):
    """Find a minor isomorphic to the uniform matroid U(k, l).

    Returns a MinorWitness or None.  Complete within its bounds: every
    uniform minor arises by contracting an independent set of size
    rank - k and deleting the complement of a good l-subset.
    """
    check_bound(f.m, MINOR_SEARCH_GROUND_BOUND, "ground-set size for minor search")
    if k < 0 or l < k:
        raise DomainError(f"target U({k},{l}) is malformed")
    r = f.rank
    if k > r or l > f.m - (r - k):
        return None
    full = (1 << f.m) - 1
    for csub in combinations(range(1, f.m + 1), r - k):
        cmask = mask_of(csub)
        if rank_of(f, cmask) != r - k:
            continue
        quotient = {b & ~cmask for b in f.masks if b & cmask == cmask}
        good = [
            e
            for e in range(1, f.m + 1)
            if not cmask >> (e - 1) & 1
            and (k == 0 or any(q >> (e - 1) & 1 for q in quotient))
        ]
        if len(good) < l:
            continue
        for kept in combinations(good, l):
            if all(mask_of(sub) in quotient for sub in combinations(kept, k)):
                dmask = full & ~cmask & ~mask_of(kept)
                return MinorWitness(set_of(cmask), set_of(dmask), k, l)
    return None
