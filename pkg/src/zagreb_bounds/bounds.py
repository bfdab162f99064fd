"""Lower bounds on the general first Zagreb index and the bounds derived from them.

Every kernel bound has the same shape: pick up to two sorted-degree positions to
set aside, apply the two-point refinement of ``sum x^2 >= n * mean^2`` to the
remaining values ``x_i = d_i ** alpha``, and add back the squares that were set
aside. The result bounds ``Z_{2 alpha}``. Positions are 1-based on the
non-increasing degree sequence, so position 1 is the maximum degree and
position n the minimum.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from numbers import Rational
from typing import Callable, Iterator, Sequence

from .errors import DomainError, HypothesisError
from .graph import DegreeSequence, Graph, complement, constant_on, degree_sequence
from .indices import (
    degree_power,
    first_zagreb,
    forgotten,
    general_zagreb,
    second_zagreb,
)
from .scalars import ApproxScalar, Scalar, as_scalar, is_integral, sqrt_scalar

FAMILIES = ("lemma_kernel", "general_zagreb_lb", "baseline", "application")
HALF = Fraction(1, 2)


def lemma1_rhs(xs: Sequence, j: int, k: int):
    """``n*mean^2 + (x_j - x_k)^2 / 2 + 2n/(n-2) * (mean - (x_j + x_k)/2)^2`` for 1-based j != k.

    Never exceeds ``sum(x*x for x in xs)``; see :func:`lemma1_equality` for when it is tight.
    """
    n = len(xs)
    if n < 3:
        raise HypothesisError(f"need at least 3 values, got {n}")
    if j == k:
        raise HypothesisError("the two positions must differ")
    if not (1 <= j <= n and 1 <= k <= n):
        raise HypothesisError(f"positions ({j}, {k}) outside 1..{n}")
    exact = all(isinstance(x, Rational) for x in xs)
    half = HALF if exact else 0.5
    mean = Fraction(sum(xs), n) if exact else sum(xs) / n
    xj, xk = xs[j - 1], xs[k - 1]
    coef = Fraction(2 * n, n - 2) if exact else 2 * n / (n - 2)
    return n * mean * mean + half * (xj - xk) ** 2 + coef * (mean - half * (xj + xk)) ** 2


def lemma1_equality(xs: Sequence, j: int, k: int) -> bool:
    """Tightness condition: all values other than positions j and k coincide."""
    rest = {x for i, x in enumerate(xs, 1) if i not in (j, k)}
    return len(rest) <= 1


@dataclass(frozen=True)
class BoundSpec:
    family: str
    alpha: float | int | None = None
    removed: tuple[int, ...] = ()
    pair: tuple[int, int] | None = None
    baseline_name: str | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family in ("lemma_kernel", "general_zagreb_lb"):
            if len(self.removed) > 2:
                raise HypothesisError("at most two positions can be set aside")
            if len(set(self.removed)) != len(self.removed):
                raise HypothesisError("removed positions must be distinct")
            if self.pair is None or self.pair[0] == self.pair[1]:
                raise HypothesisError("the pair needs two distinct positions")
            if set(self.pair) & set(self.removed):
                raise HypothesisError("pair positions must not be removed")

    def check(self, n: int) -> None:
        """Raise :class:`HypothesisError` unless the spec applies to an n-vertex graph."""
        positions = (*self.removed, *(self.pair or ()))
        if any(not 1 <= p <= n for p in positions):
            raise HypothesisError(f"positions {positions} outside 1..{n}")
        if n - len(self.removed) < 3:
            raise HypothesisError(f"n = {n} too small: {len(self.removed)} removed leaves fewer than 3 values")

    def key(self) -> tuple:
        return (tuple(sorted(self.removed)), tuple(self.pair or ()))


@dataclass(frozen=True)
class BoundValue:
    spec: BoundSpec
    value: Scalar
    equality_predicted: bool | None = None
    bound_id: str | None = None

    def __float__(self) -> float:
        return float(self.value)


def _raw(x):
    if isinstance(x, BoundValue):
        return x.value
    if hasattr(x, "value") and not isinstance(x, ApproxScalar):
        return x.value
    return x


def _num(x):
    # ApproxScalar -> float for arithmetic; rationals pass through unchanged
    x = _raw(x)
    return float(x) if isinstance(x, ApproxScalar) else x


def general_zagreb_lower_bound(g: Graph | DegreeSequence, spec: BoundSpec) -> BoundValue:
    """Lower bound on ``Z_{2 alpha}`` for the removal set and pair in ``spec``."""
    ds = degree_sequence(g)
    spec.check(ds.n)
    alpha = spec.alpha
    if alpha < 0 and ds.delta == 0:
        raise DomainError("delta = 0: negative exponents need a graph without isolated vertices")
    xs = [degree_power(d, alpha) for d in ds.degrees]
    kept = [p for p in range(1, ds.n + 1) if p not in spec.removed]
    rest = [xs[p - 1] for p in kept]
    j, k = (kept.index(p) + 1 for p in spec.pair)
    value = sum(xs[p - 1] ** 2 for p in spec.removed) + lemma1_rhs(rest, j, k)
    return BoundValue(spec, as_scalar(value), lemma1_equality(rest, j, k))


def admissible_specs(n: int, alpha, n_removed: int) -> Iterator[BoundSpec]:
    """Every (removed, pair) choice with ``n_removed`` positions set aside, pair ordered j < k."""
    if n - n_removed < 3:
        return
    positions = range(1, n + 1)
    for removed in combinations(positions, n_removed):
        rest = [p for p in positions if p not in removed]
        for pair in combinations(rest, 2):
            yield BoundSpec("general_zagreb_lb", alpha, removed, pair)


def m1_pair_bound(g: Graph | DegreeSequence, j: int, k: int) -> BoundValue:
    """First Zagreb lower bound through the degrees at sorted positions j and k."""
    return general_zagreb_lower_bound(g, BoundSpec("general_zagreb_lb", 1, (), (j, k)))


def m1_bound_extremes(g: Graph | DegreeSequence) -> BoundValue:
    return evaluate("cor_zte2", g)


def m1_bound_two_smallest(g: Graph | DegreeSequence) -> BoundValue:
    return evaluate("cor_z2te1", g)


def m1_bound_two_largest(g: Graph | DegreeSequence) -> BoundValue:
    return evaluate("cor_z2te2", g)


def modified_m1_bounds(
    g: Graph | DegreeSequence,
    variant: str = "pair",
    removed: Sequence[int] | None = None,
    pair: tuple[int, int] | None = None,
) -> BoundValue:
    """Lower bounds on the modified first Zagreb index (the ``alpha = -1`` kernel).

    Defaults follow the extreme-degree choices: ``pair`` uses (max, min);
    ``one_removed`` sets aside the max and pairs (2nd largest, min);
    ``two_removed`` sets aside max and min and pairs the 2nd largest with the 2nd smallest.
    """
    n = degree_sequence(g).n
    defaults = {
        "pair": ((), (1, n)),
        "one_removed": ((1,), (2, n)),
        "two_removed": ((1, n), (2, n - 1)),
    }
    if variant not in defaults:
        raise ValueError(f"unknown variant {variant!r}")
    d_removed, d_pair = defaults[variant]
    removed = tuple(d_removed if removed is None else removed)
    if len(removed) != len(d_removed):
        raise HypothesisError(f"variant {variant!r} sets aside {len(d_removed)} positions")
    if degree_sequence(g).delta == 0:
        raise DomainError("delta = 0: the modified first Zagreb index is undefined")
    return general_zagreb_lower_bound(
        g, BoundSpec("general_zagreb_lb", -1, removed, tuple(pair or d_pair))
    )


# -- literature baselines ---------------------------------------------------

def _need(cond: bool, message: str):
    if not cond:
        raise HypothesisError(message)


def _m1_symbols(ds: DegreeSequence):
    _need(ds.n >= 3, f"n = {ds.n}: these bounds need n >= 3")
    return ds.n, Fraction(ds.m), ds.Delta, ds.d2, ds.d_nminus1, ds.delta


def _inv_symbols(ds: DegreeSequence):
    _need(ds.n >= 3, f"n = {ds.n}: these bounds need n >= 3")
    if ds.delta == 0:
        raise DomainError("delta = 0: inverse-degree bounds need a graph without isolated vertices")
    inv_id = sum((Fraction(1, d) for d in ds.degrees), Fraction(0))
    return ds.n, Fraction(ds.m), ds.Delta, ds.delta, inv_id


def _base_xu2(ds, alpha=None):
    n, m, D, d2, dn1, dl = _m1_symbols(ds)
    return 4 * m * m / n + HALF * (D - dl) ** 2


def _base_xu1(ds, alpha=None):
    n, m, D, d2, dn1, dl = _m1_symbols(ds)
    return D * D + d2 * d2 + (2 * m - D - d2) ** 2 / (n - 2)


def _base_avg(ds, alpha=None):
    n, m, D, d2, dn1, dl = _m1_symbols(ds)
    return D * D + (2 * m - D) ** 2 / (n - 1) + HALF * (d2 - dl) ** 2


def _base_avg1(ds, alpha=None):
    n, m, D, d2, dn1, dl = _m1_symbols(ds)
    return dl * dl + (2 * m - dl) ** 2 / (n - 1) + HALF * (D - dn1) ** 2


def _base_xu3(ds, alpha=None):
    n, m, D, d2, dn1, dl = _m1_symbols(ds)
    return D * D + dl * dl + (2 * m - D - dl) ** 2 / (n - 2) + HALF * (d2 - dn1) ** 2


def _base_das_ng(ds, alpha=None):
    n, m, D, d2, dn1, dl = _m1_symbols(ds)
    return 4 * m * m / n + Fraction(2 * (n - 2), (n - 1) ** 2) * (D - dl) ** 2


def _base_randic_diff(ds, alpha):
    _need(ds.n >= 3, f"n = {ds.n}: this bound needs n >= 3")
    if alpha < 0 and ds.delta == 0:
        raise DomainError("delta = 0 with a negative exponent")
    z = _num(general_zagreb(ds, alpha).value)
    half = HALF if is_integral(alpha) else 0.5
    return z * z / ds.n + half * (degree_power(ds.Delta, alpha) - degree_power(ds.delta, alpha)) ** 2


def _base_m26(ds, alpha=None):
    n, m, D, dl, inv_id = _inv_symbols(ds)
    return inv_id ** 2 / n + HALF * (Fraction(1, dl) - Fraction(1, D)) ** 2


def _base_m27(ds, alpha=None):
    n, m, D, dl, inv_id = _inv_symbols(ds)
    _need(2 * m - D > 0, "2m - Delta must be positive")
    return Fraction(1, D * D) + Fraction((n - 1) ** 3) / (2 * m - D) ** 2


def _base_m28(ds, alpha=None):
    n, m, D, dl, inv_id = _inv_symbols(ds)
    _need(2 * m - D - dl > 0, "2m - Delta - delta must be positive")
    rest = inv_id - Fraction(1, D) - Fraction(1, dl)
    return ApproxScalar(
        float(Fraction(1, D * D) + Fraction(1, dl * dl)) + float(sqrt_scalar(rest ** 3 / (2 * m - D - dl)))
    )


def _base_m29(ds, alpha=None):
    n, m, D, dl, inv_id = _inv_symbols(ds)
    _need(2 * m - D - dl > 0, "2m - Delta - delta must be positive")
    return Fraction(1, D * D) + Fraction(1, dl * dl) + Fraction((n - 2) ** 3) / (2 * m - D - dl) ** 2


BASELINES: dict[str, tuple[Callable, int | None]] = {
    # id: (formula, alpha of the Z_{2 alpha} it bounds; None = caller supplies alpha)
    "base_xu2": (_base_xu2, 1),
    "base_xu1": (_base_xu1, 1),
    "base_avg": (_base_avg, 1),
    "base_avg1": (_base_avg1, 1),
    "base_xu3": (_base_xu3, 1),
    "base_das_ng": (_base_das_ng, 1),
    "base_randic_diff": (_base_randic_diff, None),
    "base_m26": (_base_m26, -1),
    "base_m27": (_base_m27, -1),
    "base_m28": (_base_m28, -1),
    "base_m29": (_base_m29, -1),
}


def baseline_bound(g: Graph | DegreeSequence, name: str, alpha=None) -> BoundValue:
    if name not in BASELINES:
        raise KeyError(f"unknown baseline {name!r}")
    formula, fixed_alpha = BASELINES[name]
    alpha = fixed_alpha if fixed_alpha is not None else (1 if alpha is None else alpha)
    value = formula(degree_sequence(g), alpha)
    return BoundValue(BoundSpec("baseline", alpha, baseline_name=name), as_scalar(value), bound_id=name)


# -- named kernel instances -------------------------------------------------

@dataclass(frozen=True)
class NamedBound:
    """A kernel instance with positions written relative to n (0 = n, -1 = n - 1)."""

    id: str
    alpha: int
    removed: tuple[int, ...]
    pair: tuple[int, int]
    classes: tuple[tuple[int, int], ...]  # stated equality classes as (i, offset): Gamma_{i, n - offset}
    description: str = field(default="", compare=False)

    @property
    def min_n(self) -> int:
        return 3 + len(self.removed)

    def spec(self, n: int) -> BoundSpec:
        pos = lambda p: p if p > 0 else n + p  # noqa: E731
        return BoundSpec(
            "general_zagreb_lb", self.alpha, tuple(pos(p) for p in self.removed), tuple(pos(p) for p in self.pair)
        )

    def stated_equality(self, ds: DegreeSequence) -> bool:
        return any(constant_on(ds, i, ds.n - off) for i, off in self.classes)

    def kernel_equality_class(self, n: int) -> tuple[int, int]:
        """The sorted positions whose equality the kernel needs, as an inclusive range."""
        spec = self.spec(n)
        used = set(spec.removed) | set(spec.pair)
        rest = [p for p in range(1, n + 1) if p not in used]
        return (rest[0], rest[-1]) if rest else (1, 0)


_TWO_REMOVED_CLASSES = ((1, 0), (3, 2), (2, 2), (3, 1), (2, 1), (3, 0), (2, 0), (1, 2), (1, 1))

NAMED_BOUNDS: dict[str, NamedBound] = {
    b.id: b
    for b in [
        NamedBound("cor_zte2", 1, (), (1, 0), ((1, 0), (2, 1), (1, 1), (2, 0)), "M1 via (max, min)"),
        NamedBound("cor_z2te1", 1, (), (-1, 0), ((1, 0), (1, 1), (1, 2)), "M1 via (2nd smallest, min)"),
        NamedBound("cor_z2te2", 1, (), (1, 2), ((1, 0), (3, 0), (2, 0)), "M1 via (max, 2nd largest)"),
        NamedBound(
            "cor_zr31", 1, (1,), (2, 0), ((1, 0), (3, 1), (3, 0), (2, 1), (2, 0), (1, 1)),
            "M1, max set aside, pair (2nd largest, min)",
        ),
        NamedBound(
            "cor_zr32", 1, (0,), (1, -1), ((1, 0), (2, 2), (2, 1), (2, 0), (1, 2), (1, 1)),
            "M1, min set aside, pair (max, 2nd smallest)",
        ),
        NamedBound(
            "cor_xu4", 1, (1, 2), (-1, 0), _TWO_REMOVED_CLASSES,
            "M1, two largest set aside, pair (2nd smallest, min)",
        ),
        NamedBound(
            "cor_z24degree", 1, (1, 0), (2, -1), _TWO_REMOVED_CLASSES,
            "M1, max and min set aside, pair (2nd largest, 2nd smallest)",
        ),
        NamedBound("mm1_pair", -1, (), (1, 0), ((1, 0), (2, 0), (1, 1), (2, 1)), "mM1 via (max, min)"),
        NamedBound(
            "mm1_one", -1, (1,), (2, 0), ((1, 0), (2, 2), (2, 1), (2, 0), (1, 2), (1, 1)),
            "mM1, max set aside, pair (2nd largest, min)",
        ),
        NamedBound(
            "mm1_two", -1, (1, 0), (2, -1), _TWO_REMOVED_CLASSES,
            "mM1, max and min set aside, pair (2nd largest, 2nd smallest)",
        ),
    ]
}

THEOREM_FAMILIES = {"thm1": 0, "thm2": 1, "thm3": 2}
APPLICATION_IDS = ("app_m2", "app_spectral", "app_ng", "app_coindex")


def bound_ids() -> list[str]:
    return [*THEOREM_FAMILIES, *NAMED_BOUNDS, *BASELINES, *APPLICATION_IDS]


def bound_alpha(bound_id: str, alpha=None):
    """The alpha a bound id is evaluated at (fixed for corollaries, caller's for families)."""
    if bound_id in NAMED_BOUNDS:
        return NAMED_BOUNDS[bound_id].alpha
    if bound_id in BASELINES and BASELINES[bound_id][1] is not None:
        return BASELINES[bound_id][1]
    return 1 if alpha is None else alpha


def min_n(bound_id: str) -> int:
    if bound_id in NAMED_BOUNDS:
        return NAMED_BOUNDS[bound_id].min_n
    if bound_id in THEOREM_FAMILIES:
        return 3 + THEOREM_FAMILIES[bound_id]
    return 3


def evaluate(bound_id: str, g: Graph | DegreeSequence, alpha=None) -> BoundValue:
    """Evaluate a named kernel instance or baseline on ``g``.

    The value bounds ``Z_{2a}`` from below, where ``a = bound_alpha(bound_id, alpha)``.
    """
    ds = degree_sequence(g)
    if bound_id in NAMED_BOUNDS:
        nb = NAMED_BOUNDS[bound_id]
        if ds.n < nb.min_n:
            raise HypothesisError(f"{bound_id} needs n >= {nb.min_n}, got {ds.n}")
        bv = general_zagreb_lower_bound(ds, nb.spec(ds.n))
        return BoundValue(bv.spec, bv.value, nb.stated_equality(ds), bound_id)
    if bound_id in BASELINES:
        return baseline_bound(ds, bound_id, alpha)
    if bound_id in THEOREM_FAMILIES:
        raise ValueError(f"{bound_id} is a family; use admissible_specs() or best_bound()")
    raise KeyError(f"unknown bound id {bound_id!r}")


def target_index(g: Graph | DegreeSequence, bound_id: str, alpha=None) -> Scalar:
    """The true ``Z_{2a}`` a kernel or baseline bound is compared against."""
    return general_zagreb(g, 2 * bound_alpha(bound_id, alpha)).value


def best_bound(g: Graph | DegreeSequence, alpha=1) -> BoundValue:
    """Largest kernel bound over every admissible (removed, pair) choice.

    Ties go to the lexicographically smallest (removed, pair) tuple.
    """
    ds = degree_sequence(g)
    best = None
    for r in range(3):
        for spec in admissible_specs(ds.n, alpha, r):
            bv = general_zagreb_lower_bound(ds, spec)
            if best is None or bv.value > best.value or (bv.value == best.value and spec.key() < best.spec.key()):
                best = bv
    if best is None:
        raise HypothesisError(f"n = {ds.n}: no admissible spec (need n >= 3)")
    return best


# -- applications -----------------------------------------------------------

def _app(name: str, value, source=None) -> BoundValue:
    return BoundValue(BoundSpec("application", baseline_name=name), as_scalar(value), bound_id=name if source is None else f"{name}[{source}]")


def _source_id(m1_lb):
    return m1_lb.bound_id if isinstance(m1_lb, BoundValue) else None


def m2_lower_bound(g: Graph | DegreeSequence, m1_lb) -> BoundValue:
    """``2m^2 - (n-1) m Delta + (Delta - 1)/2 * M1_lb``; non-decreasing in the M1 bound."""
    ds = degree_sequence(g)
    _need(ds.Delta >= 1, "Delta >= 1 required")
    n, m, D = ds.n, Fraction(ds.m), ds.Delta
    value = 2 * m * m - (n - 1) * m * D + HALF * (D - 1) * _num(m1_lb)
    return _app("app_m2", value, _source_id(m1_lb))


def spectral_lower_bound(g: Graph | DegreeSequence, m1_lb) -> BoundValue:
    """``sqrt(M1_lb / n)``, a lower bound on the adjacency spectral radius."""
    ds = degree_sequence(g)
    return BoundValue(
        BoundSpec("application", baseline_name="app_spectral"),
        sqrt_scalar(max(_num(m1_lb), 0) / ds.n),
        bound_id="app_spectral" if _source_id(m1_lb) is None else f"app_spectral[{_source_id(m1_lb)}]",
    )


@dataclass(frozen=True)
class NordhausGaddum:
    """Sums ``f(G) + f(complement G)`` for f in (M1, M2, F): closed forms, direct values, bounds."""

    m1_sum: Fraction
    m2_sum: Fraction
    f_sum: Fraction
    m1_sum_direct: Fraction
    m2_sum_direct: Fraction
    f_sum_direct: Fraction
    m1_sum_lb: Scalar
    m2_sum_lb: Scalar
    f_sum_lb: Scalar

    def identities_hold(self) -> bool:
        return (self.m1_sum, self.m2_sum, self.f_sum) == (self.m1_sum_direct, self.m2_sum_direct, self.f_sum_direct)


def _ng_closed_forms(n: int, m, m1):
    m = Fraction(m)
    m1_sum = n * (n - 1) ** 2 - 4 * m * (n - 1) + 2 * m1
    m2_sum = Fraction(n * (n - 1) ** 3, 2) + 2 * m * m - 3 * m * (n - 1) ** 2 + (n - Fraction(3, 2)) * m1
    f_sum = n * (n - 1) ** 3 - 6 * m * (n - 1) ** 2 + 3 * (n - 1) * m1
    return m1_sum, m2_sum, f_sum


def nordhaus_gaddum_bounds(g: Graph | DegreeSequence, m1_lb) -> tuple[Scalar, Scalar, Scalar]:
    """Lower bounds on the (M1, M2, F) complement sums obtained by substituting an M1 lower bound."""
    ds = degree_sequence(g)
    return tuple(as_scalar(v) for v in _ng_closed_forms(ds.n, ds.m, _num(m1_lb)))


def nordhaus_gaddum(g: Graph, m1_lb) -> NordhausGaddum:
    gc = complement(g)
    m1 = first_zagreb(g).value
    closed = _ng_closed_forms(g.n, g.m, m1)
    direct = (
        m1 + first_zagreb(gc).value,
        second_zagreb(g).value + second_zagreb(gc).value,
        forgotten(g).value + forgotten(gc).value,
    )
    return NordhausGaddum(*closed, *direct, *nordhaus_gaddum_bounds(g, m1_lb))


@dataclass(frozen=True)
class CoindexBounds:
    """``index_plus_coindex_lb`` bounds ``Z_{2a+1} + coZ_{2a+1}``; the rest come from an M1 bound."""

    alpha: float
    index_plus_coindex_lb: Scalar
    m2_sum_ub: Scalar | None = None        # upper bound on coM2 + M2
    m1_coindex_ub: Scalar | None = None    # upper bound on coM1
    f_sum_lb: Scalar | None = None         # lower bound on F + coF


def m1_coindex_bounds(g: Graph | DegreeSequence, m1_lb) -> tuple[Scalar, Scalar, Scalar]:
    """(upper on coM2 + M2, upper on coM1, lower on F + coF) from an M1 lower bound."""
    ds = degree_sequence(g)
    n, m, lb = ds.n, Fraction(ds.m), _num(m1_lb)
    return as_scalar(2 * m * m - HALF * lb), as_scalar(2 * m * (n - 1) - lb), as_scalar((n - 1) * lb)


def coindex_bounds(g: Graph | DegreeSequence, spec: BoundSpec) -> CoindexBounds:
    ds = degree_sequence(g)
    kernel = general_zagreb_lower_bound(ds, spec)
    sum_lb = as_scalar((ds.n - 1) * _num(kernel.value))
    if spec.alpha != 1:
        return CoindexBounds(spec.alpha, sum_lb)
    return CoindexBounds(spec.alpha, sum_lb, *m1_coindex_bounds(ds, kernel))
