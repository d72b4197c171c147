"""Region geometry: hulls, alpha blends, regime vertex sets, outer bound."""

from __future__ import annotations

from fractions import Fraction as F

import hypothesis.strategies as st
import pytest
from hypothesis import given

from mgnet import (HEX, SECTORED, WYNER, HalfPlane, MgPoint, achievable_region,
                   alpha_wyner, alphas_hex, alphas_sectored, contains,
                   convex_hull, is_subset, outer_bound_wyner,
                   outer_polygon_wyner, region_subset)
from mgnet.loads import formulas


def test_alpha_wyner_examples():
    assert alpha_wyner(F(9, 8), F(21, 8), 6, 3) == 1
    assert alpha_wyner(F(0), F(0), 6, 3) == 0
    assert alpha_wyner(F(1, 2), F(9, 2), 6, 3) == F(4, 9)


def test_alpha_rejects_negative():
    with pytest.raises(ValueError):
        alpha_wyner(F(-1), F(1), 6, 3)


def test_alphas_hex_examples():
    a1, _ = alphas_hex(F(5, 8), F(7, 4), 8, 3)
    assert a1 == 1
    _, a2 = alphas_hex(F(1, 10), F(12, 5), 8, 3)
    assert a2 == 1
    assert alphas_hex(F(0), F(0), 8, 3) == (0, 0)


def test_alphas_hex_negative_requirement_never_binds():
    # at D=2 the CoMP-transmission prelog formula is negative, so that
    # direction is requirement-free and must not cap the blend
    f = formulas(HEX, 2, 3)
    assert f["mu_t_tx"] < 0
    a1, _ = alphas_hex(F(1, 100), F(1), 2, 3)
    assert a1 == 1  # mu_t_rx = 0.185..., mu_rx=1 exceeds it; tx side is free


def test_alphas_sectored_examples():
    assert alphas_sectored(F(3, 4), F(9, 4), 4, 3) == (1, 1)
    a1, a2 = alphas_sectored(F(1, 10), F(3), 4, 3)
    assert a1 == F(2, 15) and a2 == F(2, 15)
    assert alphas_sectored(F(0), F(7), 4, 3) == (0, 0)


def test_convex_hull_examples():
    tri = convex_hull([MgPoint(F(0), F(0)), MgPoint(F(1), F(0)), MgPoint(F(0), F(1))])
    assert len(tri.vertices) == 3
    tri2 = convex_hull([MgPoint(F(0), F(0)), MgPoint(F(1), F(0)),
                        MgPoint(F(0), F(1)), MgPoint(F(1, 4), F(1, 4))])
    assert tri2 == tri  # interior point dropped


def test_case2_hull_has_five_vertices():
    region = achievable_region(WYNER, 6, 3, F(1, 2), F(9, 2))
    assert len(region.vertices) == 5
    assert MgPoint(F(2, 3), F(47, 24)) in region.vertices
    assert MgPoint(F(3, 2), F(1, 2)) in region.vertices


points = st.tuples(st.integers(-20, 20), st.integers(1, 9)).map(lambda t: F(t[0], t[1]))


@given(st.lists(st.tuples(points, points), min_size=1, max_size=12))
def test_hull_contains_inputs_and_is_idempotent(pts):
    mg = [MgPoint(a, b) for a, b in pts]
    hull = convex_hull(mg)
    assert all(contains(hull, p) for p in mg)
    assert convex_hull(list(hull.vertices)) == hull


def test_outer_bound_examples():
    hp = outer_bound_wyner(6, 3)
    assert HalfPlane(F(1), F(0), F(3, 2)) in hp
    assert HalfPlane(F(1), F(1), F(21, 8)) in hp
    assert any(h.c == F(11, 4) for h in outer_bound_wyner(10, 3))
    assert any(h == HalfPlane(F(1), F(1), F(1)) for h in outer_bound_wyner(0, 2))


def test_full_budget_region_equals_outer_polygon():
    for mu_tx, mu_rx in ((F(9, 8), F(21, 8)), (F(9, 4), F(9, 8)), (F(5), F(5))):
        region = achievable_region(WYNER, 6, 3, mu_tx, mu_rx)
        assert region == outer_polygon_wyner(6, 3)
        assert is_subset(region, outer_bound_wyner(6, 3))


def test_low_tx_budget_boundary_slopes():
    region = achievable_region(WYNER, 6, 3, F(1, 2), F(9, 2))
    v = {p.s_f: p for p in region.vertices}
    p0, p1, p2 = v[F(0)], v[F(2, 3)], v[F(3, 2)]
    assert p0.s_s == F(21, 8)
    slope1 = (p1.s_s - p0.s_s) / (p1.s_f - p0.s_f)
    slope2 = (p2.s_s - p1.s_s) / (p2.s_f - p1.s_f)
    assert slope1 == -1
    assert slope2 == F(-7, 4)


def test_sum_mg_preserved_along_case2_knee():
    # the low-mu_tx knee always sits on the maximum sum-MG line
    D, L = 6, 3
    cap = F(L * (D + 1), D + 2)
    for mu_tx in (F(1, 8), F(1, 4), F(1, 2), F(9, 10)):
        region = achievable_region(WYNER, D, L, mu_tx, F(9, 2))
        alpha = alpha_wyner(mu_tx, F(9, 2), D, L)
        f = formulas(WYNER, D, L)
        knee = MgPoint(alpha * f["s_f_both"],
                       alpha * f["s_s_both"] + (1 - alpha) * f["s_max"])
        assert knee.s_f + knee.s_s == cap
        assert contains(region, knee)


def test_inner_subset_of_outer_on_grid():
    hp = outer_bound_wyner(6, 3)
    grid = [F(i, 4) for i in range(0, 20)]
    for mu_tx in grid:
        for mu_rx in grid:
            region = achievable_region(WYNER, 6, 3, mu_tx, mu_rx)
            assert is_subset(region, hp)


def test_monotone_in_each_prelog():
    for model, D in ((WYNER, 6), (HEX, 8), (SECTORED, 4)):
        grid = [F(0), F(1, 2), F(1), F(2), F(3)]
        regions = {(tx, rx): achievable_region(model, D, 3, tx, rx)
                   for tx in grid for rx in grid}
        for i, tx in enumerate(grid):
            for j, rx in enumerate(grid):
                if i + 1 < len(grid):
                    assert region_subset(regions[(tx, rx)], regions[(grid[i + 1], rx)])
                if j + 1 < len(grid):
                    assert region_subset(regions[(tx, rx)], regions[(tx, grid[j + 1])])


def test_origin_in_every_region():
    zero = MgPoint(F(0), F(0))
    for model, D in ((WYNER, 6), (HEX, 8), (SECTORED, 4)):
        for mu in (F(0), F(1), F(10)):
            assert contains(achievable_region(model, D, 3, mu, mu), zero)


def test_hex_sum_mg_penalty():
    # whenever the mixed scheme's sum MG is below the slow-only maximum,
    # any point with positive fast MG loses sum MG
    D, L = 8, 3
    f = formulas(HEX, D, L)
    assert f["s_f_both"] + f["s_s_both"] < f["s_max"]
    for mu_tx, mu_rx in ((F(5, 8), F(12, 5)), (F(12, 5), F(12, 5)), (F(1), F(3))):
        region = achievable_region(HEX, D, L, mu_tx, mu_rx)
        at_zero = max(p.s_s for p in region.vertices if p.s_f == 0)
        best_positive = max(p.s_f + p.s_s for p in region.vertices if p.s_f > 0)
        assert best_positive < at_zero


def test_hex_middle_budget_vertical_intercept():
    # middle-budget regime lists the vertical intercept at s_f_both + s_s_both
    region = achievable_region(HEX, 8, 3, F(5, 8), F(7, 4))
    assert MgPoint(F(0), F(37, 16)) in region.vertices  # 13/16 + 3/2


def test_region_rejects_bad_args():
    with pytest.raises(ValueError):
        achievable_region(HEX, 6, 3, F(1), F(1))
    with pytest.raises(ValueError):
        achievable_region(WYNER, 5, 3, F(1), F(1))
    with pytest.raises(ValueError):
        achievable_region(WYNER, 6, 3, F(-1), F(1))


def test_sectorized_gap_parameters_still_get_a_region():
    # budgets between the named regimes: mu_rx above the mixed requirement
    # but below the slow-only one, mu_tx below the mixed requirement
    region = achievable_region(SECTORED, 4, 3, F(1, 2), F(5, 2))
    assert len(region.vertices) >= 4
    assert contains(region, MgPoint(F(1), F(0)))


budgets = st.tuples(st.integers(0, 40), st.integers(1, 8)).map(lambda t: F(t[0], t[1]))


@given(budgets, budgets, budgets)
def test_alpha_clamped_and_monotone(mu_tx, mu_rx, bump):
    a = alpha_wyner(mu_tx, mu_rx, 6, 3)
    assert 0 <= a <= 1
    assert alpha_wyner(mu_tx + bump, mu_rx, 6, 3) >= a
    assert alpha_wyner(mu_tx, mu_rx + bump, 6, 3) >= a


@given(budgets, budgets)
def test_hex_alphas_clamped(mu_tx, mu_rx):
    a1, a2 = alphas_hex(mu_tx, mu_rx, 8, 3)
    b1, b2 = alphas_sectored(mu_tx, mu_rx, 4, 3)
    for a in (a1, a2, b1, b2):
        assert 0 <= a <= 1
