"""Tutte polynomials of basis-explicit matroids, three independent ways.

The three routes: Crapo's sum q^i(B) t^e(B) over bases (internal and
external activities), the corank-nullity subset sum, and, for the Catalan
matroid, the direct enumeration of Dyck paths by initial rise and number
of axis touches.  A truncated power series in a third variable packages
the whole Catalan family, and the closed-form path counts by statistic
round the module out.
"""

from collections import Counter
from functools import lru_cache
from math import comb

from .bitsets import elements_of, mask_of, set_of
from .errors import DomainError, check_bound
from .matroid_core import BRUTE_GROUND_BOUND, BasisFamily, _rank_table, rank_of
from .paths import _axis_touches, _initial_rise, catalan_number, dyck_masks

SERIES_ORDER_BOUND = 20
RECURSION_ORDER_BOUND = 12


class BivariatePolynomial:
    """Integer polynomial in the two formal variables q and t.

    Terms are kept in a map (q-degree, t-degree) -> coefficient with no
    zero entries; arithmetic is exact.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        data = dict(terms) if not isinstance(terms, dict) else dict(terms)
        object.__setattr__(
            self, "_terms", {k: int(c) for k, c in data.items() if c != 0}
        )

    def __setattr__(self, name, value):
        raise AttributeError("BivariatePolynomial is immutable")

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, q_deg: int, t_deg: int, coeff: int = 1):
        return cls({(q_deg, t_deg): coeff})

    def coefficient(self, q_deg: int, t_deg: int) -> int:
        return self._terms.get((q_deg, t_deg), 0)

    def terms(self) -> tuple[tuple[int, int, int], ...]:
        """(q-degree, t-degree, coefficient), q-major descending, t ascending."""
        return tuple(
            (i, j, self._terms[(i, j)])
            for i, j in sorted(self._terms, key=lambda k: (-k[0], k[1]))
        )

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return BivariatePolynomial(out)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return BivariatePolynomial({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BivariatePolynomial(out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def evaluate(self, q_value: int, t_value: int) -> int:
        return sum(
            c * q_value**i * t_value**j for (i, j), c in self._terms.items()
        )

    def specialize(self, q=None, t=None) -> "BivariatePolynomial":
        """Substitute integers for q and/or t, keeping the rest formal."""
        out = {}
        for (i, j), c in self._terms.items():
            value = c
            if q is not None:
                value *= q**i
                i = 0
            if t is not None:
                value *= t**j
                j = 0
            k = (i, j)
            out[k] = out.get(k, 0) + value
        return BivariatePolynomial(out)

    def swap_variables(self) -> "BivariatePolynomial":
        return BivariatePolynomial({(j, i): c for (i, j), c in self._terms.items()})

    def to_json(self) -> list[dict]:
        return [{"q": i, "t": j, "c": c} for i, j, c in self.terms()]

    def __eq__(self, other):
        if isinstance(other, int):
            other = _coerce(other)
        return (
            isinstance(other, BivariatePolynomial) and self._terms == other._terms
        )

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, j, c in self.terms():
            factors = []
            if abs(c) != 1 or (i == 0 and j == 0):
                factors.append(str(c))
            if i:
                factors.append("q" if i == 1 else f"q^{i}")
            if j:
                factors.append("t" if j == 1 else f"t^{j}")
            term = "*".join(factors)
            if c == -1 and (i or j):
                term = "-" + term
            parts.append(term)
        return " + ".join(parts)

    def __repr__(self):
        return f"BivariatePolynomial({self})"


def _coerce(value) -> BivariatePolynomial:
    if isinstance(value, BivariatePolynomial):
        return value
    if isinstance(value, int):
        return BivariatePolynomial({(0, 0): value})
    raise TypeError(f"cannot coerce {value!r} to a polynomial")


class PolynomialSeries:
    """Power series in x truncated at a fixed order, polynomial coefficients."""

    __slots__ = ("coefficients", "order")

    def __init__(self, coefficients, order: int | None = None):
        coeffs = [_coerce(c) for c in coefficients]
        if order is None:
            order = len(coeffs) - 1
        coeffs = coeffs[: order + 1]
        coeffs += [BivariatePolynomial.zero()] * (order + 1 - len(coeffs))
        object.__setattr__(self, "coefficients", tuple(coeffs))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("PolynomialSeries is immutable")

    def coefficient(self, n: int) -> BivariatePolynomial:
        if not 0 <= n <= self.order:
            raise DomainError(f"series truncated at order {self.order}, asked for {n}")
        return self.coefficients[n]

    def __add__(self, other):
        other = self._coerce_series(other)
        order = min(self.order, other.order)
        return PolynomialSeries(
            [a + b for a, b in zip(self.coefficients, other.coefficients)], order
        )

    def __sub__(self, other):
        other = self._coerce_series(other)
        order = min(self.order, other.order)
        return PolynomialSeries(
            [a - b for a, b in zip(self.coefficients, other.coefficients)], order
        )

    def __mul__(self, other):
        if isinstance(other, (int, BivariatePolynomial)):
            scale = _coerce(other)
            return PolynomialSeries(
                [c * scale for c in self.coefficients], self.order
            )
        order = min(self.order, other.order)
        out = [BivariatePolynomial.zero() for _ in range(order + 1)]
        for i, a in enumerate(self.coefficients[: order + 1]):
            if a.is_zero():
                continue
            for j in range(order + 1 - i):
                b = other.coefficients[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return PolynomialSeries(out, order)

    __rmul__ = __mul__

    def _coerce_series(self, other):
        if isinstance(other, PolynomialSeries):
            return other
        return PolynomialSeries([_coerce(other)], self.order).pad(self.order)

    def pad(self, order: int) -> "PolynomialSeries":
        return PolynomialSeries(list(self.coefficients), order)

    def divide_by(self, den: "PolynomialSeries") -> "PolynomialSeries":
        """Exact series division; the denominator must start with 1."""
        if den.coefficients[0] != BivariatePolynomial.one():
            raise DomainError("series division needs constant term 1")
        order = min(self.order, den.order)
        out = []
        for n in range(order + 1):
            acc = self.coefficients[n]
            for k in range(1, n + 1):
                acc = acc - den.coefficients[k] * out[n - k]
            out.append(acc)
        return PolynomialSeries(out, order)

    def __eq__(self, other):
        return (
            isinstance(other, PolynomialSeries)
            and self.order == other.order
            and self.coefficients == other.coefficients
        )

    def __repr__(self):
        return f"PolynomialSeries(order={self.order})"


def _positions(f: BasisFamily, order) -> list[int]:
    """Position of each element in the linear order, indexed by element."""
    if order is None:
        return list(range(f.m + 1))
    images = list(order)
    if sorted(images) != list(range(1, f.m + 1)):
        raise DomainError(f"order must be a permutation of 1..{f.m}")
    pos = [0] * (f.m + 1)
    for idx, e in enumerate(images):
        pos[e] = idx + 1
    return pos


def _require_basis(f: BasisFamily, b) -> int:
    mask = b if isinstance(b, int) else mask_of(b, f.m)
    if mask not in f.masks:
        raise DomainError(f"{sorted(set_of(mask))} is not a basis")
    return mask


def fundamental_circuit(f: BasisFamily, b, e: int) -> frozenset[int]:
    """The unique circuit inside basis + e, by minimal-dependent descent."""
    bmask = _require_basis(f, b)
    ebit = 1 << (e - 1)
    if bmask & ebit:
        raise DomainError(f"{e} already lies in the basis")
    current = bmask | ebit
    for x in elements_of(bmask):
        trial = current ^ (1 << (x - 1))
        if rank_of(f, trial) < trial.bit_count():
            current = trial
    return set_of(current)


def fundamental_bond(f: BasisFamily, b, i: int) -> frozenset[int]:
    """The unique bond inside (complement of basis) + i."""
    bmask = _require_basis(f, b)
    ibit = 1 << (i - 1)
    if not bmask & ibit:
        raise DomainError(f"{i} lies outside the basis")
    full = (1 << f.m) - 1
    r = f.rank
    current = (full ^ bmask) | ibit
    for y in elements_of(full ^ bmask):
        trial = current ^ (1 << (y - 1))
        if rank_of(f, full ^ trial) < r:
            current = trial
    return set_of(current)


def external_activity(f: BasisFamily, b, order=None) -> frozenset[int]:
    """Elements outside the basis that are order-minimal in their circuit."""
    bmask = _require_basis(f, b)
    pos = _positions(f, order)
    active = []
    for e in range(1, f.m + 1):
        if bmask >> (e - 1) & 1:
            continue
        circuit = fundamental_circuit(f, bmask, e)
        if min(pos[c] for c in circuit) == pos[e]:
            active.append(e)
    return frozenset(active)


def internal_activity(f: BasisFamily, b, order=None) -> frozenset[int]:
    """Basis elements that are order-minimal in their bond."""
    bmask = _require_basis(f, b)
    pos = _positions(f, order)
    active = []
    for i in elements_of(bmask):
        bond = fundamental_bond(f, bmask, i)
        if min(pos[c] for c in bond) == pos[i]:
            active.append(i)
    return frozenset(active)


def _activity_counts(masks: frozenset[int], m: int, pos: list[int]):
    """(internal, external) activity sizes per basis, by basis exchange.

    An outside element e is externally active exactly when no basis element
    before it in the order can be swapped in for it; dually for internal
    activity.  Agrees with the circuit/bond definitions by uniqueness of
    fundamental circuits and bonds.
    """
    by_pos = sorted(range(1, m + 1), key=lambda e: pos[e])
    bit = [0] * (m + 1)
    for e in range(1, m + 1):
        bit[e] = 1 << (e - 1)
    for bmask in masks:
        inside = [e for e in by_pos if bmask & bit[e]]
        outside = [e for e in by_pos if not bmask & bit[e]]
        ext = 0
        for e in outside:
            swapped = bmask | bit[e]
            pe = pos[e]
            for x in inside:
                if pos[x] >= pe:
                    ext += 1
                    break
                if swapped ^ bit[x] in masks:
                    break
            else:
                ext += 1
        internal = 0
        for i in inside:
            stripped = bmask ^ bit[i]
            pi = pos[i]
            for y in outside:
                if pos[y] >= pi:
                    internal += 1
                    break
                if stripped | bit[y] in masks:
                    break
            else:
                internal += 1
        yield internal, ext


def tutte_via_activities(f: BasisFamily, order=None) -> BivariatePolynomial:
    """Crapo's formula: sum q^(internal activity) t^(external activity)."""
    pos = _positions(f, order)
    hist = Counter(_activity_counts(f.masks, f.m, pos))
    return BivariatePolynomial({(i, e): c for (i, e), c in hist.items()})


def tutte_via_corank_nullity(f: BasisFamily) -> BivariatePolynomial:
    """Subset sum of (q-1)^corank (t-1)^nullity over the whole power set."""
    check_bound(f.m, BRUTE_GROUND_BOUND, "ground-set size for subset sweep")
    r = f.rank
    hist = Counter()
    ranks = _subset_ranks(f)
    for mask in range(1 << f.m):
        ra = ranks[mask]
        hist[(r - ra, mask.bit_count() - ra)] += 1
    q_minus_1 = BivariatePolynomial({(1, 0): 1, (0, 0): -1})
    t_minus_1 = BivariatePolynomial({(0, 1): 1, (0, 0): -1})
    q_pows = _powers(q_minus_1, max(i for i, _ in hist))
    t_pows = _powers(t_minus_1, max(j for _, j in hist))
    total = BivariatePolynomial.zero()
    for (i, j), c in sorted(hist.items()):
        total = total + q_pows[i] * t_pows[j] * c
    return total


def _powers(p: BivariatePolynomial, top: int) -> list[BivariatePolynomial]:
    out = [BivariatePolynomial.one()]
    for _ in range(top):
        out.append(out[-1] * p)
    return out


def _subset_ranks(f: BasisFamily) -> list[int]:
    return _rank_table(f)


@lru_cache(maxsize=None)
def tutte_catalan_direct(n: int) -> BivariatePolynomial:
    """Sum of q^(initial rise) t^(axis touches) over Dyck paths."""
    if n == 0:
        return BivariatePolynomial.one()
    hist = Counter(
        (_initial_rise(mask), _axis_touches(n, mask)) for mask in dyck_masks(n)
    )
    return BivariatePolynomial({(a, b): c for (a, b), c in hist.items()})


def is_symmetric(p: BivariatePolynomial) -> bool:
    return p == p.swap_variables()


def catalan_tutte_series(order: int) -> PolynomialSeries:
    """Expand the closed-form generating function for all T_{C_n} at once.

    The rational form (1 + (qt-q-t) x C(x)) / (1 - qt x + (qt-q-t) x C(x))
    is expanded with C(x) the Catalan number series; coefficient n is the
    Tutte polynomial of the order-n Catalan matroid.
    """
    if order < 0:
        raise DomainError(f"series order must be non-negative, got {order}")
    check_bound(order, SERIES_ORDER_BOUND, "series truncation order")
    qt = BivariatePolynomial.monomial(1, 1)
    q = BivariatePolynomial.monomial(1, 0)
    t = BivariatePolynomial.monomial(0, 1)
    mixer = qt - q - t
    x_catalan = PolynomialSeries(
        [0] + [catalan_number(k) for k in range(order)], order
    )
    one = PolynomialSeries([1], order)
    qt_x = PolynomialSeries([0, qt], order)
    numerator = one + x_catalan * mixer
    denominator = one - qt_x + x_catalan * mixer
    return numerator.divide_by(denominator)


def recursion_check(n: int) -> bool:
    """Verify T_n = qt * sum over splits of T_r(q,1) T_s(1,t)."""
    if n < 1:
        raise DomainError(f"recursion needs n >= 1, got {n}")
    check_bound(n, RECURSION_ORDER_BOUND, "recursion order")
    qt = BivariatePolynomial.monomial(1, 1)
    acc = BivariatePolynomial.zero()
    for r in range(n):
        s = n - 1 - r
        acc = acc + tutte_catalan_direct(r).specialize(t=1) * tutte_catalan_direct(
            s
        ).specialize(q=1)
    return qt * acc == tutte_catalan_direct(n)


def _stat_count(n: int, k: int) -> int:
    if not 1 <= k <= n:
        raise DomainError(f"statistic value must satisfy 1 <= k <= n, got k={k}, n={n}")
    numerator = k * comb(2 * n - k, n)
    quotient, remainder = divmod(numerator, 2 * n - k)
    if remainder:
        raise AssertionError(f"count formula not integral at n={n}, k={k}")
    return quotient


def count_paths_by_initial_rise(n: int, k: int) -> int:
    """Dyck paths of half-length n whose initial rise is exactly k."""
    return _stat_count(n, k)


def count_paths_by_axis_touches(n: int, k: int) -> int:
    """Dyck paths of half-length n touching the axis exactly k times."""
    return _stat_count(n, k)
