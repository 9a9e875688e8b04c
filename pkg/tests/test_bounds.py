import math

import pytest

from turanlocal import (BoundId, BoundInputs, WeightedGraph, adak_chandran_report,
                        bound_classics, bound_local_edge, bound_localized_wilf,
                        bound_main_weighted, bound_vertex_degree,
                        chromatic_lower_bounds, chromatic_number, compute_all_bounds,
                        predicted_equality, property_p_check, psi_report,
                        sum_inequalities, turan_degree_report)
from turanlocal.bounds import EQUALITY_RTOL, kahan_sum
from turanlocal.enumeration import random_gnp, randomize_weights

from conftest import complete, complete_multipartite, cycle, graph, petersen


def by_id(reports, bound_id):
    return next(r for r in reports if r.bound_id is bound_id)


class TestKahan:
    def test_compensation(self):
        vals = [1e16, 1.0, -1e16, 1.0]
        assert kahan_sum(vals) == 2.0
        assert kahan_sum([]) == 0.0


class TestMainWeighted:
    def test_example1_equality(self, example1):
        rep = bound_main_weighted(example1)
        assert rep.lhs == pytest.approx(2 * math.sqrt(3), abs=1e-12)
        assert rep.rhs == pytest.approx(2 * math.sqrt(3), abs=1e-12)
        assert rep.equality

    def test_k3(self):
        rep = bound_main_weighted(complete(3))
        assert rep.lhs == pytest.approx(2.0, abs=1e-12)
        assert rep.rhs == pytest.approx(2.0, abs=1e-14)
        assert rep.equality

    def test_paw_strict(self, paw):
        rep = bound_main_weighted(paw)
        assert rep.rhs == pytest.approx(math.sqrt(5), abs=1e-14)
        assert rep.lhs == pytest.approx(2.1700864866260184, abs=1e-9)
        assert not rep.equality and rep.slack > 0

    def test_empty_graph_trivial_equality(self):
        rep = bound_main_weighted(graph(3))
        assert rep.lhs == 0.0 and rep.rhs == 0.0 and rep.equality

    def test_weighted_any_signs(self):
        g = WeightedGraph(3, ((0, 1, -1.5), (1, 2, 0.5)))
        rep = bound_main_weighted(g)
        assert rep.applicable and rep.slack >= -1e-12


class TestUnweightedLocalBounds:
    def test_k23_reports(self):
        g = complete_multipartite(2, 3)
        s6 = math.sqrt(6)
        assert bound_local_edge(g).rhs == pytest.approx(s6, abs=1e-14)
        assert bound_local_edge(g).equality
        assert bound_vertex_degree(g).rhs == pytest.approx(s6, abs=1e-14)
        assert bound_vertex_degree(g).equality
        wilf = bound_localized_wilf(g)
        assert wilf.rhs == pytest.approx(5 / 2, abs=1e-14)
        assert not wilf.equality

    def test_k3_all_equal(self):
        for rep in (bound_local_edge(complete(3)), bound_vertex_degree(complete(3)),
                    bound_localized_wilf(complete(3))):
            assert rep.rhs == pytest.approx(2.0, abs=1e-14)
            assert rep.equality

    def test_c5_strict(self, c5):
        rep = bound_local_edge(c5)
        assert rep.rhs == pytest.approx(math.sqrt(5), abs=1e-14)
        assert rep.lhs == pytest.approx(2.0, abs=1e-12)
        assert not rep.equality

    def test_weighted_inapplicable(self, example1):
        for op in (bound_local_edge, bound_vertex_degree, bound_localized_wilf):
            rep = op(example1)
            assert not rep.applicable
            assert "unit weights" in rep.reason


class TestClassics:
    def test_k3(self):
        reps = bound_classics(complete(3))
        assert by_id(reps, BoundId.STANLEY).rhs == pytest.approx(2.0, abs=1e-14)
        assert by_id(reps, BoundId.STANLEY).equality
        assert by_id(reps, BoundId.HONG).rhs == pytest.approx(2.0, abs=1e-14)
        assert by_id(reps, BoundId.HONG).equality

    def test_star_hong_equality(self):
        star = graph(4, (0, 1), (0, 2), (0, 3))
        rep = by_id(bound_classics(star), BoundId.HONG)
        assert rep.rhs == pytest.approx(math.sqrt(3), abs=1e-14)
        assert rep.equality

    def test_c5_nikiforov(self, c5):
        rep = by_id(bound_classics(c5), BoundId.NIKIFOROV)
        assert rep.rhs == pytest.approx(math.sqrt(5), abs=1e-14)
        assert dict(rep.extra)["r"] == 2
        assert not rep.equality

    def test_hong_inapplicable_with_isolated(self):
        rep = by_id(bound_classics(graph(3, (0, 1))), BoundId.HONG)
        assert not rep.applicable and "degree" in rep.reason

    def test_wilf_edge(self):
        rep = by_id(bound_classics(complete(4)), BoundId.WILF_EDGE)
        assert rep.rhs == pytest.approx(3.0, abs=1e-14)
        assert rep.equality  # complete graphs attain Wilf's edge bound


class TestSumInequalities:
    def test_paw_sum_cl_equality(self, paw):
        rep = by_id(sum_inequalities(paw), BoundId.SUM_CL)
        assert rep.rhs == pytest.approx(1.5, abs=1e-14)
        assert rep.lhs == pytest.approx(1.5)
        assert rep.equality

    def test_kn_bradac_equality(self):
        for n in range(3, 8):
            rep = by_id(sum_inequalities(complete(n)), BoundId.BRADAC)
            assert rep.lhs == pytest.approx(n * n / 2, abs=1e-12)
            assert rep.equality

    def test_star_minor_strict(self):
        star = graph(4, (0, 1), (0, 2), (0, 3))
        rep = by_id(sum_inequalities(star), BoundId.SUM_CL_MINOR)
        assert rep.rhs == pytest.approx(3.0)
        assert rep.lhs == pytest.approx(2.0)
        assert not rep.equality

    def test_preconditions(self):
        reps = sum_inequalities(graph(3, (0, 1)))  # isolated vertex
        assert not by_id(reps, BoundId.SUM_CL_MINOR).applicable
        assert not by_id(reps, BoundId.SUM_CL).applicable
        assert by_id(reps, BoundId.BRADAC).applicable
        assert not by_id(sum_inequalities(graph(1)), BoundId.SUM_CL).applicable


class TestTuranDegreeAndAdak:
    def test_k3(self):
        rep = turan_degree_report(complete(3))
        assert rep.lhs == pytest.approx(4.0) and rep.rhs == pytest.approx(4.0)
        assert rep.equality

    def test_k22(self):
        rep = turan_degree_report(complete_multipartite(2, 2))
        assert rep.lhs == pytest.approx(4.0) and rep.rhs == pytest.approx(4.0)
        assert rep.equality

    def test_k12_strict(self):
        rep = turan_degree_report(graph(3, (0, 1), (0, 2)))
        assert rep.lhs == pytest.approx(2.0)
        assert rep.rhs == pytest.approx(2.25)
        assert not rep.equality

    def test_adak_k3(self):
        rep = adak_chandran_report(complete(3))
        assert rep.lhs == 3.0 and rep.rhs == pytest.approx(3.0)
        assert rep.equality

    def test_adak_empty_graph(self):
        rep = adak_chandran_report(graph(4))
        assert rep.lhs == 0.0 and rep.rhs == 0.0 and rep.equality

    def test_adak_paw_strict(self, paw):
        rep = adak_chandran_report(paw)
        assert rep.lhs == 4.0
        assert rep.rhs == pytest.approx(5.0)
        assert not rep.equality


class TestChromaticBounds:
    def test_k3_edwards_elphick(self):
        rep, cvet = chromatic_lower_bounds(complete(3))
        assert rep.lhs == pytest.approx(3.0, abs=1e-9)
        assert rep.rhs == 3.0 and rep.equality
        assert cvet.lhs == pytest.approx(3.0, abs=1e-9)
        assert cvet.rhs == 3.0 and cvet.equality

    def test_k23(self):
        rep = chromatic_lower_bounds(complete_multipartite(2, 3))[0]
        assert rep.lhs == pytest.approx(2.0, abs=1e-9)
        assert rep.equality

    def test_empty_graph_inapplicable_ee(self):
        rep, cvet = chromatic_lower_bounds(graph(3))
        assert not rep.applicable
        assert cvet.applicable and cvet.lhs == pytest.approx(1.0) and cvet.equality

    def test_cvetkovic_precondition_small_weights(self):
        g = WeightedGraph(2, ((0, 1, 0.25),))  # 2*sum w = 0.5 < ||A||_F^2? no: 0.125
        reps = chromatic_lower_bounds(g)
        assert reps[1].applicable  # 0.5 >= 0.125
        g2 = WeightedGraph(2, ((0, 1, 3.0),))  # 6 < 18
        assert not chromatic_lower_bounds(g2)[1].applicable

    def test_chi_omitted_when_unknown(self):
        rep = chromatic_lower_bounds(complete(3), chi=None, inputs=None)[0]
        assert rep.rhs == 3  # n <= 10 computes chi automatically
        big = random_gnp(12, 0.5, 5)
        rep = chromatic_lower_bounds(big)[0]
        assert rep.rhs is None and rep.slack is None and rep.equality is None

    def test_lower_bounds_hold_with_exact_chi(self, corpus6):
        for g in corpus6:
            for rep in chromatic_lower_bounds(g):
                if rep.applicable and rep.slack is not None:
                    assert rep.slack >= -1e-8


class TestPsi:
    def test_k3(self):
        rep = psi_report(complete(3))
        assert rep.lhs == 6.0 and rep.rhs == pytest.approx(6.0) and rep.equality

    def test_single_vertex(self):
        rep = psi_report(graph(1))
        assert rep.lhs == 0.0 and rep.rhs == pytest.approx(0.0) and rep.equality

    def test_star(self):
        rep = psi_report(graph(4, (0, 1), (0, 2), (0, 3)))
        assert rep.rhs == pytest.approx(117 / 16, abs=1e-12)
        assert rep.lhs == 6.0 and rep.slack > 0


class TestPropertyP:
    def test_k3_false(self):
        assert property_p_check(complete(3)) is False

    def test_c5_true(self, c5):
        assert property_p_check(c5) is True

    def test_paw_false(self, paw):
        assert property_p_check(paw) is False

    def test_petersen_true(self):
        assert property_p_check(petersen()) is True

    def test_sufficiency_on_corpus(self, corpus6):
        # Property P plus no isolated vertices forces sum 1/cl(e) >= n/2
        from turanlocal import clique_profile
        for g in corpus6:
            if any(d == 0 for d in g.degrees) or g.n == 0:
                continue
            if property_p_check(g):
                total = sum(1.0 / cl for _, _, cl in clique_profile(g).cl_e)
                assert total >= g.n / 2 - 1e-12


class TestCatalogInvariants:
    def test_all_applicable_nonnegative_slack(self, corpus6):
        for g in corpus6:
            for rep in compute_all_bounds(g):
                if rep.applicable and rep.slack is not None:
                    assert rep.slack >= -EQUALITY_RTOL * max(1.0, abs(rep.rhs)), (
                        g.edges, rep)

    def test_equality_margin_10x_tolerance(self, corpus6):
        # the nearest non-extremal slack must clear 10x the equality tolerance
        closest = math.inf
        for g in corpus6:
            ctx = BoundInputs(g)
            for rep in compute_all_bounds(g, inputs=ctx):
                if not rep.applicable or rep.slack is None or rep.equality:
                    continue
                predicted = predicted_equality(rep.bound_id, g)
                if predicted is False:
                    closest = min(closest, rep.slack / max(1.0, abs(rep.rhs)))
        assert closest > 10 * EQUALITY_RTOL

    def test_hong_chain_inequality(self, corpus6):
        # for connected graphs with min degree >= 1: sum 2/cl(e) >= n - 1
        from turanlocal import clique_profile, connected_components
        for g in corpus6:
            if g.n < 2 or len(connected_components(g)) != 1:
                continue
            total = sum(2.0 / cl for _, _, cl in clique_profile(g).cl_e)
            assert total >= g.n - 1 - 1e-12

    def test_weighted_main_random_signs(self):
        for k in range(60):
            g = randomize_weights(random_gnp(9, 0.5, 900 + k), 0.1, 2.0, True, 950 + k)
            rep = bound_main_weighted(g)
            assert rep.slack >= -1e-8 * max(1.0, rep.rhs)

    def test_random_unweighted_catalog_1000(self):
        # the whole catalog on 1000 random G(n, p) graphs, n in 8..16
        from turanlocal.rng import CounterRng, derive_seed
        rng = CounterRng(20250807)
        for k in range(1000):
            n = 8 + int(rng.uniform() * 9)
            g = random_gnp(n, 0.5, derive_seed(20250807, k))
            for rep in compute_all_bounds(g):
                assert not rep.violated(), (n, k, rep)

    def test_checks_subset_selection(self, paw):
        reps = compute_all_bounds(paw, checks=[BoundId.PSI, BoundId.STANLEY])
        assert [r.bound_id for r in reps] == [BoundId.STANLEY, BoundId.PSI]


class TestChromaticNumber:
    @pytest.mark.parametrize("builder,chi", [
        (lambda: complete(4), 4),
        (lambda: cycle(5), 3),
        (lambda: cycle(6), 2),
        (lambda: petersen(), 3),
        (lambda: graph(3), 1),
        (lambda: graph(0), 0),
        (lambda: complete_multipartite(2, 2, 2), 3),
    ])
    def test_known_values(self, builder, chi):
        assert chromatic_number(builder()) == chi

    def test_greedy_oracle_on_corpus(self, corpus6):
        # chi is between clique number and greedy bound; spot-check exactness
        # against brute force on graphs with n <= 5
        from itertools import product
        from turanlocal import clique_number
        for g in corpus6:
            if g.n > 5:
                continue
            chi = chromatic_number(g)
            assert chi >= clique_number(g)
            if g.n == 0:
                continue
            brute = next(
                k for k in range(1, g.n + 1)
                if any(all(colors[u] != colors[v] for u, v, _ in g.edges)
                       for colors in product(range(k), repeat=g.n))
            )
            assert chi == brute
