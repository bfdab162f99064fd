"""Degree-based indices, their coindices, and the adjacency spectral radius."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from .errors import ConvergenceError, DomainError
from .graph import DegreeSequence, Graph, degree_sequence
from .scalars import DEFAULT_ABS_TOL, ApproxScalar, Scalar, as_scalar, is_integral

INDEX_KINDS = (
    "Z_alpha", "M1", "M2", "F", "ID", "mM1",
    "Z_alpha_coindex", "M1_coindex", "M2_coindex", "F_coindex", "spectral_radius",
)


@dataclass(frozen=True)
class IndexValue:
    kind: str
    value: Scalar
    alpha: float | None = None

    @property
    def exact(self) -> bool:
        return isinstance(self.value, Fraction)

    def __float__(self) -> float:
        return float(self.value)


def degree_power(d: int, alpha):
    """``d ** alpha``: a Fraction for integer alpha (with 0**0 = 1), a float otherwise."""
    if is_integral(alpha):
        k = int(alpha)
        if d == 0 and k < 0:
            raise DomainError(f"delta = 0: 0 ** {k} is undefined")
        return Fraction(d) ** k
    if d == 0 and alpha < 0:
        raise DomainError(f"delta = 0: 0 ** {alpha} is undefined")
    return float(d) ** float(alpha)


def power_sum(degrees: Iterable[int], alpha):
    return sum((degree_power(d, alpha) for d in degrees), Fraction(0) if is_integral(alpha) else 0.0)


def _check_delta(degrees: Iterable[int], exponent, what: str):
    if exponent < 0 and min(degrees) == 0:
        raise DomainError(f"delta = 0: {what} needs a graph without isolated vertices")


def general_zagreb(g: Graph | DegreeSequence, alpha) -> IndexValue:
    """Sum of ``d ** alpha`` over all vertices."""
    ds = degree_sequence(g)
    _check_delta(ds.degrees, alpha, f"Z_{alpha}")
    return IndexValue("Z_alpha", as_scalar(power_sum(ds.degrees, alpha)), alpha)


def first_zagreb(g: Graph) -> IndexValue:
    # edge form, independent of the vertex power sum
    deg = g.degrees()
    return IndexValue("M1", Fraction(sum(deg[i] + deg[j] for i, j in g.edges())))


def second_zagreb(g: Graph) -> IndexValue:
    deg = g.degrees()
    return IndexValue("M2", Fraction(sum(deg[i] * deg[j] for i, j in g.edges())))


def forgotten(g: Graph) -> IndexValue:
    return IndexValue("F", Fraction(sum(d ** 3 for d in g.degrees())))


def inverse_degree(g: Graph) -> IndexValue:
    deg = g.degrees()
    _check_delta(deg, -1, "ID")
    return IndexValue("ID", sum((Fraction(1, d) for d in deg), Fraction(0)))


def modified_first_zagreb(g: Graph) -> IndexValue:
    deg = g.degrees()
    _check_delta(deg, -2, "mM1")
    return IndexValue("mM1", sum((Fraction(1, d * d) for d in deg), Fraction(0)))


def _non_adjacent_pairs(g: Graph):
    return ((i, j) for i in range(g.n) for j in range(i + 1, g.n) if not g.adjacent(i, j))


def general_zagreb_coindex(g: Graph, alpha) -> IndexValue:
    """Sum of ``d_i ** (alpha-1) + d_j ** (alpha-1)`` over unordered non-adjacent pairs ``i != j``."""
    deg = g.degrees()
    _check_delta(deg, alpha - 1, f"coindex at alpha = {alpha}")
    powers = [degree_power(d, alpha - 1) for d in deg]
    zero = Fraction(0) if is_integral(alpha) else 0.0
    total = sum((powers[i] + powers[j] for i, j in _non_adjacent_pairs(g)), zero)
    return IndexValue("Z_alpha_coindex", as_scalar(total), alpha)


def first_zagreb_coindex(g: Graph) -> IndexValue:
    deg = g.degrees()
    return IndexValue("M1_coindex", Fraction(sum(deg[i] + deg[j] for i, j in _non_adjacent_pairs(g))))


def second_zagreb_coindex(g: Graph) -> IndexValue:
    deg = g.degrees()
    return IndexValue("M2_coindex", Fraction(sum(deg[i] * deg[j] for i, j in _non_adjacent_pairs(g))))


def forgotten_coindex(g: Graph) -> IndexValue:
    deg = g.degrees()
    return IndexValue(
        "F_coindex", Fraction(sum(deg[i] ** 2 + deg[j] ** 2 for i, j in _non_adjacent_pairs(g)))
    )


def spectral_radius(
    g: Graph,
    abs_tol: float = DEFAULT_ABS_TOL,
    max_iter: int = 100_000,
    rq_tol: float = 1e-12,
) -> IndexValue:
    """Largest adjacency eigenvalue by power iteration on ``A + I``.

    The shift makes the iteration matrix primitive on every component, so the
    +lambda / -lambda tie of bipartite graphs cannot stall convergence. The
    all-ones start has positive overlap with the non-negative Perron vector.
    """
    shifted = g.adjacency_matrix() + np.eye(g.n)
    x = np.full(g.n, 1.0 / np.sqrt(g.n))
    prev = None
    for _ in range(max_iter):
        y = shifted @ x
        rq = float(x @ y)
        x = y / np.linalg.norm(y)
        if prev is not None and abs(rq - prev) < rq_tol:
            return IndexValue("spectral_radius", ApproxScalar(rq - 1.0, abs_tol))
        prev = rq
    residual = float(np.linalg.norm(shifted @ x - (x @ shifted @ x) * x))
    raise ConvergenceError(f"power iteration did not converge in {max_iter} steps", residual)


def compute_all(g: Graph, alphas: Iterable = ()) -> dict[str, IndexValue]:
    """Every index the package knows, skipping those undefined for ``g``."""
    out: dict[str, IndexValue] = {}
    for a in alphas:
        out[f"Z[{a}]"] = general_zagreb(g, a)
    out["M1"] = first_zagreb(g)
    out["M2"] = second_zagreb(g)
    out["F"] = forgotten(g)
    if min(g.degrees()) > 0:
        out["ID"] = inverse_degree(g)
        out["mM1"] = modified_first_zagreb(g)
    out["M1_coindex"] = first_zagreb_coindex(g)
    out["M2_coindex"] = second_zagreb_coindex(g)
    out["F_coindex"] = forgotten_coindex(g)
    out["spectral_radius"] = spectral_radius(g)
    return out
