from __future__ import annotations

import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import graphs, lemma_oracle
from zagreb_bounds import formulas
from zagreb_bounds.bounds import (
    BASELINES,
    NAMED_BOUNDS,
    BoundSpec,
    admissible_specs,
    baseline_bound,
    best_bound,
    bound_ids,
    coindex_bounds,
    evaluate,
    general_zagreb_lower_bound,
    lemma1_equality,
    lemma1_rhs,
    m1_bound_extremes,
    m1_bound_two_largest,
    m1_bound_two_smallest,
    m1_coindex_bounds,
    m1_pair_bound,
    m2_lower_bound,
    modified_m1_bounds,
    nordhaus_gaddum,
    spectral_lower_bound,
    target_index,
)
from zagreb_bounds.errors import DomainError, HypothesisError
from zagreb_bounds.graph import (
    DegreeSequence,
    Graph,
    complete_graph,
    cycle_graph,
    degree_sequence,
    star_graph,
)
from zagreb_bounds.indices import (
    first_zagreb,
    first_zagreb_coindex,
    forgotten,
    forgotten_coindex,
    general_zagreb,
    general_zagreb_coindex,
    modified_first_zagreb,
    second_zagreb,
    spectral_radius,
)
from zagreb_bounds.scalars import ApproxScalar

TOL = 5e-5


# -- two-point kernel -----------------------------------------------------------

def test_kernel_worked_examples(g1):
    assert lemma1_rhs([1, 1, 1, 1], 2, 3) == 4
    assert lemma1_rhs([3, 1, 1], 1, 3) == 11 == 9 + 1 + 1
    assert lemma1_equality([3, 1, 1], 1, 3)
    xs = list(degree_sequence(g1).degrees)
    assert lemma1_rhs(xs, 1, 8) == Fraction(1159, 6)


def test_kernel_parameter_errors():
    with pytest.raises(HypothesisError):
        lemma1_rhs([1, 2], 1, 2)
    with pytest.raises(HypothesisError):
        lemma1_rhs([1, 2, 3], 2, 2)
    with pytest.raises(HypothesisError):
        lemma1_rhs([1, 2, 3], 1, 4)


@given(
    st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=12), min_size=3, max_size=9),
    st.data(),
)
def test_kernel_matches_oracle(xs, data):
    n = len(xs)
    j, k = data.draw(st.lists(st.integers(1, n), min_size=2, max_size=2, unique=True))
    rhs = lemma1_rhs(xs, j, k)
    assert rhs == lemma_oracle(xs, j, k)
    total = sum(x * x for x in xs)
    assert rhs <= total
    assert (rhs == total) == lemma1_equality(xs, j, k)


@given(st.lists(st.floats(0.1, 50), min_size=3, max_size=8))
def test_kernel_float_path(xs):
    rhs = lemma1_rhs(xs, 1, len(xs))
    assert isinstance(rhs, float)
    assert rhs <= sum(x * x for x in xs) + 1e-9 * max(1.0, sum(x * x for x in xs))


# -- kernel instances on the reference graphs -------------------------------------

def test_single_pair_bounds_reference(g1, g2, g3):
    assert m1_bound_extremes(g1).value == Fraction(1159, 6)
    assert float(m1_bound_extremes(g2).value) == pytest.approx(120.6667, abs=TOL)
    assert float(m1_bound_extremes(g3).value) == pytest.approx(133.1667, abs=TOL)
    assert float(m1_pair_bound(g1, 7, 8).value) == pytest.approx(190.6667, abs=TOL)
    assert float(m1_pair_bound(g1, 1, 2).value) == pytest.approx(189.1667, abs=TOL)
    assert m1_bound_two_smallest(g1).value == m1_pair_bound(g1, 7, 8).value
    assert m1_bound_two_largest(g1).value == m1_pair_bound(g1, 1, 2).value
    assert m1_pair_bound(g3, 1, 8).value == m1_bound_extremes(g3).value


def test_one_removed_instance_matches_closed_form(g1):
    spec = BoundSpec("general_zagreb_lb", 1, (8,), (1, 7))
    ds = degree_sequence(g1)
    assert general_zagreb_lower_bound(g1, spec).value == formulas.cor_zr32(ds)
    assert evaluate("cor_zr32", g1).value == formulas.cor_zr32(ds)


def test_regular_graphs_are_tight():
    for g in (cycle_graph(6), complete_graph(5)):
        m1 = first_zagreb(g).value
        for r in range(3):
            for spec in admissible_specs(g.n, 1, r):
                bv = general_zagreb_lower_bound(g, spec)
                assert bv.value == m1 and bv.equality_predicted


def test_star_meets_extreme_pair_bound():
    s = star_graph(3)
    bv = evaluate("cor_zte2", s)
    assert bv.value == first_zagreb(s).value == 12
    assert bv.equality_predicted


def test_bound_spec_validation():
    with pytest.raises(ValueError):
        BoundSpec("nonsense")
    with pytest.raises(HypothesisError):
        BoundSpec("general_zagreb_lb", 1, (1, 2, 3), (4, 5))
    with pytest.raises(HypothesisError):
        BoundSpec("general_zagreb_lb", 1, (1,), (1, 2))
    with pytest.raises(HypothesisError):
        BoundSpec("general_zagreb_lb", 1, (), (2, 2))
    with pytest.raises(HypothesisError):
        general_zagreb_lower_bound(complete_graph(3), BoundSpec("general_zagreb_lb", 1, (1, 2), (1 + 2, 3 - 1)))


def test_small_graphs_are_refused():
    k3 = complete_graph(3)
    with pytest.raises(HypothesisError):
        evaluate("cor_xu4", k3)
    with pytest.raises(HypothesisError):
        evaluate("mm1_one", k3)
    assert list(admissible_specs(4, 1, 2)) == []


def test_negative_alpha_domain():
    g = Graph.from_edges(4, [(0, 1), (1, 2)])
    with pytest.raises(DomainError):
        general_zagreb_lower_bound(g, BoundSpec("general_zagreb_lb", -1, (), (1, 4)))
    with pytest.raises(DomainError):
        modified_m1_bounds(g)


def test_admissible_spec_counts():
    n = 6
    assert sum(1 for _ in admissible_specs(n, 1, 0)) == math.comb(6, 2)
    assert sum(1 for _ in admissible_specs(n, 1, 1)) == 6 * math.comb(5, 2)
    assert sum(1 for _ in admissible_specs(n, 1, 2)) == math.comb(6, 2) * math.comb(4, 2)


def test_best_bound_reference(g1, g2):
    best = best_bound(g1, 1)
    assert best.value == Fraction(789, 4)
    assert best.spec.removed == (1, 2) and best.spec.pair == (3, 8)
    assert best_bound(g2, 1).value >= Fraction(727, 6)


def test_best_bound_breaks_ties_lexicographically():
    best = best_bound(cycle_graph(5), 1)
    assert best.spec.removed == () and best.spec.pair == (1, 2)


@given(graphs(min_n=3, max_n=7, min_degree=1))
def test_best_bound_is_argmax(g):
    best = best_bound(g, 1)
    every = [general_zagreb_lower_bound(g, s).value for r in range(3) for s in admissible_specs(g.n, 1, r)]
    assert best.value == max(every)
    assert best.value <= first_zagreb(g).value


# -- closed-form transcriptions ---------------------------------------------------

@given(graphs(min_n=5, max_n=9, min_degree=1))
def test_transcriptions_agree_with_kernel(g):
    ds = degree_sequence(g)
    for bid, fn in formulas.TRANSCRIPTIONS.items():
        assert evaluate(bid, ds).value == fn(ds), bid


@given(graphs(min_n=5, max_n=8, min_degree=1), st.sampled_from([-2, -1, 1, 2]))
def test_theorem_forms_agree_with_kernel(g, alpha):
    ds = degree_sequence(g)
    for r in range(3):
        for spec in admissible_specs(ds.n, alpha, r):
            assert general_zagreb_lower_bound(ds, spec).value == formulas.theorem_form(ds, alpha, spec.removed, spec.pair)


@given(graphs(min_n=3, max_n=9, min_degree=1), st.sampled_from([-2, -1, 1, 2, 3]))
def test_every_kernel_spec_is_valid(g, alpha):
    ds = degree_sequence(g)
    target = general_zagreb(ds, 2 * alpha).value
    for r in range(3):
        for spec in admissible_specs(ds.n, alpha, r):
            bv = general_zagreb_lower_bound(ds, spec)
            assert bv.value <= target
            assert (bv.value == target) == bv.equality_predicted


@given(graphs(min_n=3, max_n=8, min_degree=1), st.floats(-2.5, 2.5).filter(lambda a: not float(a).is_integer()))
def test_fractional_alpha_bounds(g, alpha):
    ds = degree_sequence(g)
    target = general_zagreb(ds, 2 * alpha).value
    bv = general_zagreb_lower_bound(ds, BoundSpec("general_zagreb_lb", alpha, (), (1, ds.n)))
    assert isinstance(bv.value, ApproxScalar)
    assert bv.value <= target


def test_printed_slips_are_invalid():
    c4 = degree_sequence(cycle_graph(4))
    # as typeset, the (max, min) modified bound exceeds the index even on a regular graph
    assert formulas.printed_mm1_pair(c4) > modified_first_zagreb(cycle_graph(4)).value
    assert formulas.mm1_pair(c4) == modified_first_zagreb(cycle_graph(4)).value


# -- literature baselines ---------------------------------------------------------

def test_baseline_examples(g1):
    assert baseline_bound(g1, "base_xu2").value == 193
    assert m1_bound_extremes(g1).value >= baseline_bound(g1, "base_xu2").value
    c6 = cycle_graph(6)
    assert baseline_bound(c6, "base_randic_diff", 1).value == first_zagreb(c6).value
    r, n = 2, 6
    assert baseline_bound(c6, "base_m29").value == Fraction(n, r * r) == modified_first_zagreb(c6).value
    with pytest.raises(KeyError):
        baseline_bound(c6, "base_nope")


@given(graphs(min_n=3, max_n=8, min_degree=1))
def test_baselines_are_valid(g):
    ds = degree_sequence(g)
    for bid in BASELINES:
        try:
            bv = evaluate(bid, ds, 1)
        except (HypothesisError, DomainError):
            continue
        assert bv.value <= target_index(ds, bid, 1)


def test_registry():
    ids = bound_ids()
    for required in ("thm1", "thm2", "thm3", "cor_zte2", "cor_z2te1", "cor_z2te2", "cor_zr31", "cor_zr32",
                     "cor_xu4", "cor_z24degree", "base_xu2", "base_xu3", "base_randic_diff", "mm1_pair",
                     "mm1_one", "mm1_two", "base_m26", "base_m29", "app_m2", "app_spectral", "app_ng",
                     "app_coindex"):
        assert required in ids
    assert len(ids) == len(set(ids))
    with pytest.raises(KeyError):
        evaluate("nope", complete_graph(4))
    with pytest.raises(ValueError):
        evaluate("thm1", complete_graph(4))


# -- modified first Zagreb ---------------------------------------------------------

def test_modified_bounds_regular_tight():
    c5 = cycle_graph(5)
    assert modified_m1_bounds(c5, "pair").value == Fraction(5, 4) == modified_first_zagreb(c5).value


def test_modified_bounds_sandwich(g1, g2):
    v = modified_m1_bounds(g2, "one_removed").value
    assert baseline_bound(g2, "base_m27").value <= v <= modified_first_zagreb(g2).value
    w = modified_m1_bounds(g1, "two_removed").value
    assert baseline_bound(g1, "base_m29").value <= w <= modified_first_zagreb(g1).value
    assert modified_m1_bounds(g1, "pair").value == evaluate("mm1_pair", g1).value
    with pytest.raises(ValueError):
        modified_m1_bounds(g1, "three_removed")
    with pytest.raises(HypothesisError):
        modified_m1_bounds(g1, "one_removed", removed=(1, 2))


# -- applications ------------------------------------------------------------------

def test_m2_bound_examples(g2):
    k4 = complete_graph(4)
    assert m2_lower_bound(k4, first_zagreb(k4).value).value == 54 == second_zagreb(k4).value
    assert m2_lower_bound(k4, evaluate("cor_zte2", k4)).value == 54
    matching = Graph.from_edges(6, [(0, 1), (2, 3), (4, 5)])
    assert m2_lower_bound(matching, 0).value == 2 * 9 - 5 * 3
    lb = evaluate("cor_zr31", g2)
    assert m2_lower_bound(g2, lb).value <= second_zagreb(g2).value
    assert m2_lower_bound(g2, lb).bound_id == "app_m2[cor_zr31]"


def test_spectral_bound_examples(g1):
    lb = spectral_lower_bound(g1, evaluate("cor_zte2", g1)).value
    assert float(lb) == pytest.approx(math.sqrt(1159 / 6 / 8), abs=1e-12)
    assert float(lb) == pytest.approx(4.9138, abs=1e-4)
    assert lb <= spectral_radius(g1).value
    star = star_graph(4)
    assert float(spectral_lower_bound(star, first_zagreb(star).value).value) == pytest.approx(2)
    c6 = cycle_graph(6)
    assert float(spectral_lower_bound(c6, first_zagreb(c6).value).value) == pytest.approx(2)


def test_nordhaus_gaddum_examples(g1):
    c5 = cycle_graph(5)
    ng = nordhaus_gaddum(c5, first_zagreb(c5).value)
    assert ng.m1_sum == ng.m1_sum_direct == 40
    assert ng.identities_hold()
    assert nordhaus_gaddum(g1, evaluate("cor_zte2", g1)).identities_hold()
    k5 = complete_graph(5)
    ng = nordhaus_gaddum(k5, first_zagreb(k5).value)
    assert ng.m1_sum == first_zagreb(k5).value == 5 * 16
    assert ng.f_sum == forgotten(k5).value


@given(graphs(min_n=3, max_n=8, min_degree=1))
def test_nordhaus_gaddum_bounds_hold(g):
    ng = nordhaus_gaddum(g, best_bound(g, 1))
    assert ng.identities_hold()
    assert ng.m1_sum_lb <= ng.m1_sum_direct
    assert ng.m2_sum_lb <= ng.m2_sum_direct
    assert ng.f_sum_lb <= ng.f_sum_direct


def test_coindex_bound_examples(g1):
    c5 = cycle_graph(5)
    cb = coindex_bounds(c5, BoundSpec("general_zagreb_lb", 1, (), (1, 5)))
    assert cb.f_sum_lb == 80 == forgotten(c5).value + forgotten_coindex(c5).value
    _, m1bar_ub, _ = m1_coindex_bounds(g1, evaluate("cor_zte2", g1))
    assert float(m1bar_ub) == pytest.approx(72.8333, abs=TOL)
    assert first_zagreb_coindex(g1).value == 68 <= m1bar_ub


@given(graphs(min_n=3, max_n=8, min_degree=1), st.sampled_from([-1, 1, 2]))
def test_corollary8_form(g, alpha):
    spec = BoundSpec("general_zagreb_lb", alpha, (), (1, g.n))
    cb = coindex_bounds(g, spec)
    total = general_zagreb(g, 2 * alpha + 1).value + general_zagreb_coindex(g, 2 * alpha + 1).value
    assert cb.index_plus_coindex_lb <= total


def test_named_bound_equality_classes_match_kernel_except_one_removed_modified():
    """The stated unions agree with the kernel's tightness condition, with one exception."""
    disagree = set()
    for n in range(5, 8):
        for degs in itertools.combinations_with_replacement(range(1, n), n):
            ds_deg = tuple(sorted(degs, reverse=True))
            if sum(ds_deg) % 2:
                continue
            ds = DegreeSequence(ds_deg)
            for bid, nb in NAMED_BOUNDS.items():
                kernel = general_zagreb_lower_bound(ds, nb.spec(n))
                if kernel.equality_predicted != nb.stated_equality(ds):
                    disagree.add(bid)
    assert disagree == {"mm1_one"}
