"""The acceptance checks: every headline claim, re-verified from scratch.

Each criterion function rebuilds its own evidence (enumerations, oracle
sweeps, random samples with fixed seeds) and returns a CriterionResult.
The command line exposes the suite as `matroid-forge verify all`; the test
suite runs the same functions at full bounds.
"""

import random
from dataclasses import dataclass
from itertools import combinations

from . import complexes as cx
from . import matroid_core as mc
from . import representation as rep
from . import tutte as tt
from .bitsets import elements_of, mask_of
from .catalan_shifted import (
    ShiftVector,
    catalan_as_shifted,
    catalan_matroid,
    circuits_closed_form,
    hyperplane_count_over_flat,
    is_bond_closed_form,
    is_circuit_closed_form,
    is_flat_closed_form,
    is_independent_closed_form,
    is_spanning_closed_form,
    rank_closed_form,
    shifted_matroid,
)
from .paths import catalan_number, dyck_paths

SEED = 271828
AXIOM_SAMPLES = 100
SHIFTED_SAMPLES = 50
POSET_SAMPLES = 100

GOLDEN_TUTTE = {
    2: {(2, 1): 1, (1, 2): 1},
    3: {(3, 1): 1, (2, 1): 1, (2, 2): 1, (1, 2): 1, (1, 3): 1},
}


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"criterion {self.number:2d} {status}  {self.name}: {self.detail}"


def _cap(value: int, max_n: int | None) -> int:
    return value if max_n is None else min(value, max_n)


def _random_shift_vector(rng, max_last: int, max_len: int) -> ShiftVector:
    n = rng.randint(1, min(max_len, max_last))
    return ShiftVector(sorted(rng.sample(range(1, max_last + 1), n)))


def _random_poset(rng, max_size: int) -> cx.Poset:
    size = rng.randint(1, max_size)
    covers = [
        (i, j)
        for i in range(1, size + 1)
        for j in range(i + 1, size + 1)
        if rng.random() < 0.35
    ]
    return cx.Poset(size, covers)


def _random_ideal(rng, poset: cx.Poset) -> list[int]:
    seed = [e for e in range(1, poset.size + 1) if rng.random() < 0.5]
    mask = mask_of(seed, poset.size)
    for e in seed:
        mask |= poset.below[e]
    return list(elements_of(mask))


def _partitions(total: int):
    """All partitions of the exact number total, parts weakly decreasing."""

    def rec(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    yield from rec(total, total)


def _sub_partitions(shape: cx.Partition):
    """All non-empty partitions contained in the given diagram."""

    def rec(i, bound):
        if i == len(shape.parts):
            yield ()
            return
        for part in range(min(shape[i], bound), 0, -1):
            for rest in rec(i + 1, part):
                yield (part,) + rest
        yield ()

    for parts in rec(0, shape[0] if shape.parts else 0):
        if parts:
            yield cx.Partition(parts)


def criterion_1_basis_counts(max_n: int | None = None) -> CriterionResult:
    top = _cap(12, max_n)
    for n in range(top + 1):
        if len(catalan_matroid(n).masks) != catalan_number(n):
            return CriterionResult(1, "basis counts", False, f"mismatch at n={n}")
    ok_example = top < 10 or len(catalan_matroid(10).masks) == 16796
    return CriterionResult(
        1,
        "basis counts",
        ok_example,
        f"|bases| = Catalan number for n <= {top}",
    )


def criterion_2_axioms(max_n: int | None = None) -> CriterionResult:
    top = _cap(6, max_n)
    for n in range(top + 1):
        f = catalan_matroid(n)
        if not mc.check_basis_axioms(f.m, f.masks):
            return CriterionResult(2, "basis axioms", False, f"Catalan n={n} fails")
    rng = random.Random(SEED)
    for _ in range(AXIOM_SAMPLES):
        s = _random_shift_vector(rng, max_last=12, max_len=7)
        f = shifted_matroid(s)
        if not mc.check_basis_axioms(f.m, f.masks):
            return CriterionResult(2, "basis axioms", False, f"SM{tuple(s)} fails")
    return CriterionResult(
        2,
        "basis axioms",
        True,
        f"Catalan n <= {top} and {AXIOM_SAMPLES} random shifted matroids",
    )


def criterion_3_closed_forms(max_n: int | None = None) -> CriterionResult:
    top = _cap(5, max_n)
    checked = 0
    for n in range(top + 1):
        f = catalan_matroid(n)
        flats = {mask_of(a) for a in mc.flats(f)}
        circuits = {mask_of(a) for a in mc.circuits(f)}
        bonds = {mask_of(a) for a in mc.bonds(f)}
        circuit_enum = {mask_of(a) for a in circuits_closed_form(n)}
        if circuit_enum != circuits:
            return CriterionResult(3, "closed forms", False, f"circuit list n={n}")
        for mask in range(1 << f.m):
            size = mask.bit_count()
            r = mc.rank_of(f, mask)
            if rank_closed_form(n, mask) != r:
                return CriterionResult(3, "closed forms", False, f"rank n={n}")
            if is_flat_closed_form(n, mask) != (mask in flats):
                return CriterionResult(3, "closed forms", False, f"flat n={n}")
            if is_independent_closed_form(n, mask) != (r == size):
                return CriterionResult(3, "closed forms", False, f"independent n={n}")
            if is_spanning_closed_form(n, mask) != (r == f.rank):
                return CriterionResult(3, "closed forms", False, f"spanning n={n}")
            if is_circuit_closed_form(n, mask) != (mask in circuits):
                return CriterionResult(3, "closed forms", False, f"circuit n={n}")
            if bool(mask) and is_bond_closed_form(n, mask) != (mask in bonds):
                return CriterionResult(3, "closed forms", False, f"bond n={n}")
            checked += 1
    return CriterionResult(
        3, "closed forms", True, f"{checked} subsets agree with oracles, n <= {top}"
    )


def criterion_4_self_duality(max_n: int | None = None) -> CriterionResult:
    top = _cap(8, max_n)
    for n in range(1, top + 1):
        f = catalan_matroid(n)
        reflected = mc.relabel(mc.dual(f), lambda x: 2 * n + 1 - x)
        if reflected != f:
            return CriterionResult(4, "self-duality", False, f"n={n}")
    return CriterionResult(
        4, "self-duality", True, f"reflected dual equals the matroid, n <= {top}"
    )


def criterion_5_tutte_triple(max_n: int | None = None) -> CriterionResult:
    top_activities = _cap(12, max_n)
    top_subsets = _cap(6, max_n)
    for n, golden in GOLDEN_TUTTE.items():
        if n <= top_activities and tt.tutte_catalan_direct(n) != tt.BivariatePolynomial(golden):
            return CriterionResult(5, "Tutte agreement", False, f"golden value n={n}")
    for n in range(top_activities + 1):
        if tt.tutte_via_activities(catalan_matroid(n)) != tt.tutte_catalan_direct(n):
            return CriterionResult(5, "Tutte agreement", False, f"activities n={n}")
    for n in range(top_subsets + 1):
        if tt.tutte_via_corank_nullity(catalan_matroid(n)) != tt.tutte_catalan_direct(n):
            return CriterionResult(5, "Tutte agreement", False, f"subset sum n={n}")
    return CriterionResult(
        5,
        "Tutte agreement",
        True,
        f"direct = activities (n <= {top_activities}) = subset sum (n <= {top_subsets})",
    )


def criterion_6_symmetry_duality(max_n: int | None = None) -> CriterionResult:
    top = _cap(12, max_n)
    for n in range(top + 1):
        if not tt.is_symmetric(tt.tutte_catalan_direct(n)):
            return CriterionResult(6, "Tutte symmetry", False, f"symmetry n={n}")
    for n in range(_cap(6, max_n) + 1):
        dual_poly = tt.tutte_via_activities(mc.dual(catalan_matroid(n)))
        if dual_poly != tt.tutte_catalan_direct(n).swap_variables():
            return CriterionResult(6, "Tutte symmetry", False, f"duality n={n}")
    return CriterionResult(
        6,
        "Tutte symmetry",
        True,
        f"T(q,t) = T(t,q) for n <= {top}; dual swaps variables for n <= {_cap(6, max_n)}",
    )


def criterion_7_generating_function(max_n: int | None = None) -> CriterionResult:
    top_series = _cap(10, max_n)
    series = tt.catalan_tutte_series(top_series)
    for n in range(top_series + 1):
        if series.coefficient(n) != tt.tutte_catalan_direct(n):
            return CriterionResult(7, "generating function", False, f"series n={n}")
    top_rec = _cap(12, max_n)
    for n in range(1, top_rec + 1):
        if not tt.recursion_check(n):
            return CriterionResult(7, "generating function", False, f"recursion n={n}")
    return CriterionResult(
        7,
        "generating function",
        True,
        f"series matches for n <= {top_series}; recursion holds for n <= {top_rec}",
    )


def criterion_8_equidistribution(max_n: int | None = None) -> CriterionResult:
    top = _cap(8, max_n)
    for n in range(1, top + 1):
        rises = {}
        touches = {}
        for p in dyck_paths(n):
            a = p.initial_rise()
            b = p.axis_touches()
            rises[a] = rises.get(a, 0) + 1
            touches[b] = touches.get(b, 0) + 1
        expected = {k: tt.count_paths_by_initial_rise(n, k) for k in range(1, n + 1)}
        expected = {k: v for k, v in expected.items() if v}
        if rises != expected or touches != expected:
            return CriterionResult(8, "equidistribution", False, f"n={n}")
        if sum(expected.values()) != catalan_number(n):
            return CriterionResult(8, "equidistribution", False, f"total n={n}")
    return CriterionResult(
        8, "equidistribution", True, f"both statistics match the formula, n <= {top}"
    )


def criterion_9_shiftedness(max_n: int | None = None) -> CriterionResult:
    rng = random.Random(SEED + 9)
    for _ in range(SHIFTED_SAMPLES):
        s = _random_shift_vector(rng, max_last=10, max_len=7)
        if not cx.is_shifted_family(cx.independence_complex(shifted_matroid(s))):
            return CriterionResult(9, "shiftedness", False, f"complex SM{tuple(s)}")
    for _ in range(SHIFTED_SAMPLES):
        s = _random_shift_vector(rng, max_last=12, max_len=8)
        if cx.recover_shift_vector(shifted_matroid(s)) != s:
            return CriterionResult(9, "shiftedness", False, f"round trip SM{tuple(s)}")
    top = _cap(8, max_n)
    for total in range(1, top + 1):
        for parts in _partitions(total):
            shape = cx.Partition(parts)
            for sub in _sub_partitions(shape):
                if not cx.is_shifted_family(cx.mu_sets(shape, sub)):
                    return CriterionResult(
                        9, "shiftedness", False, f"mu-sets {parts} {tuple(sub)}"
                    )
    rng = random.Random(SEED + 99)
    for _ in range(POSET_SAMPLES):
        poset = _random_poset(rng, max_size=7)
        ideal = _random_ideal(rng, poset)
        if not cx.is_shifted_family(cx.iset_family(poset, ideal)):
            return CriterionResult(9, "shiftedness", False, f"ideal images {poset!r}")
    return CriterionResult(
        9,
        "shiftedness",
        True,
        f"{SHIFTED_SAMPLES}+{SHIFTED_SAMPLES} random shifted matroids, "
        f"all sub-shapes of size <= {top}, {POSET_SAMPLES} random posets",
    )


def criterion_10_tableaux(max_n: int | None = None) -> CriterionResult:
    top = _cap(8, max_n)
    for total in range(1, top + 1):
        for parts in _partitions(total):
            shape = cx.Partition(parts)
            family = cx.first_row_sets(shape)
            vector = cx.first_row_shift_vector(shape)
            expected = {mask_of(b) for b in shifted_matroid(vector).bases}
            if family.masks != expected:
                return CriterionResult(10, "tableau first rows", False, f"{parts}")
    counterexample = None
    for total in range(1, top + 1):
        for parts in _partitions(total):
            shape = cx.Partition(parts)
            for sub in _sub_partitions(shape):
                family = cx.mu_sets(shape, sub)
                if not mc.check_basis_axioms(family.m, family.masks):
                    counterexample = (parts, tuple(sub))
                    break
            if counterexample:
                break
        if counterexample:
            break
    if counterexample is None:
        return CriterionResult(
            10, "tableau first rows", False, "no non-matroid mu-set family found"
        )
    return CriterionResult(
        10,
        "tableau first rows",
        True,
        f"first rows give shifted matroids for sizes <= {top}; "
        f"mu-sets of {counterexample[0]} at {counterexample[1]} are not matroid bases",
    )


def criterion_11_representation(max_n: int | None = None) -> CriterionResult:
    top_len = _cap(4, max_n)
    top_last = 8 if max_n is None else min(8, 2 * max_n)
    vectors = [
        ShiftVector(s)
        for n in range(1, top_len + 1)
        for s in combinations(range(1, top_last + 1), n)
    ]
    for s in vectors:
        matrix = rep.build_representation(s)
        from_matrix = rep.vector_matroid(matrix)
        expected = shifted_matroid(s)
        if from_matrix != expected:
            return CriterionResult(11, "representation", False, f"SM{tuple(s)}")
        for subset in combinations(range(1, s[-1] + 1), s.n):
            by_rook = rep.rook_basis_test(s, subset)
            by_matching = rep.rook_placement_exists(s, subset)
            by_det = from_matrix.contains_basis(subset)
            if not by_rook == by_matching == by_det:
                return CriterionResult(
                    11, "representation", False, f"SM{tuple(s)} subset {subset}"
                )
    for n in range(1, top_len + 1):
        vector, loop = catalan_as_shifted(n)
        matrix = rep.build_representation(vector, ground=loop)
        if rep.vector_matroid(matrix) != catalan_matroid(n):
            return CriterionResult(11, "representation", False, f"Catalan n={n}")
    return CriterionResult(
        11,
        "representation",
        True,
        f"{len(vectors)} shift vectors (n <= {top_len}, last <= {top_last}) "
        "and the Catalan staircases",
    )


def criterion_12_non_representability(max_n: int | None = None) -> CriterionResult:
    minors = [n for n in (4, 5, 6) if max_n is None or n <= max_n]
    for n in minors:
        largest_q = max(q for q in range(2, n - 1) if rep.is_prime_power(q))
        result = rep.non_representability_witness(n, largest_q)
        if not result.conclusive or result.witness is None:
            return CriterionResult(12, "non-representability", False, f"probe n={n}")
        found = mc.minor(catalan_matroid(n), result.witness.contract, result.witness.delete)
        if found != mc.uniform(2, n):
            return CriterionResult(12, "non-representability", False, f"witness n={n}")
    flats_checked = 0
    hyper = [n for n in (3, 4, 5) if max_n is None or n <= max_n]
    for n in hyper:
        f = catalan_matroid(n)
        all_flats = mc.flats(f)
        hyperplanes = [a for a in all_flats if mc.rank_of(f, a) == n - 1]
        for flat in all_flats:
            if mc.rank_of(f, flat) != n - 2:
                continue
            count = sum(1 for h in hyperplanes if flat <= h)
            if hyperplane_count_over_flat(n, flat) != count:
                return CriterionResult(
                    12, "non-representability", False, f"flat count n={n} {sorted(flat)}"
                )
            flats_checked += 1
        special = frozenset(list(range(1, n - 1)) + [2 * n])
        if hyperplane_count_over_flat(n, special) != n:
            return CriterionResult(12, "non-representability", False, f"special flat n={n}")
    return CriterionResult(
        12,
        "non-representability",
        True,
        f"uniform minors for n in {minors}; {flats_checked} hyperplane counts "
        f"for n in {hyper}",
    )


CRITERIA = (
    criterion_1_basis_counts,
    criterion_2_axioms,
    criterion_3_closed_forms,
    criterion_4_self_duality,
    criterion_5_tutte_triple,
    criterion_6_symmetry_duality,
    criterion_7_generating_function,
    criterion_8_equidistribution,
    criterion_9_shiftedness,
    criterion_10_tableaux,
    criterion_11_representation,
    criterion_12_non_representability,
)


def run_all(max_n: int | None = None) -> list[CriterionResult]:
    return [check(max_n) for check in CRITERIA]
