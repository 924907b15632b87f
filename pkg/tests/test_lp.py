import pytest

from linkednets import fixtures as fx
from linkednets import lp
from linkednets import net as nt
from linkednets import zquiver as zq
from linkednets.exactla import QQ, Matrix, PrimeField

U, V = fx.SEG2_H


def singleton_net(r=2):
    p = nt.NetPresentation(QQ, 1, frozenset([U]), {U: r}, {})
    return nt.expand(p, 2)


def test_singleton_system_is_empty():
    assert lp.lp_equations(singleton_net(), [U]).equations == []


def test_seg2_equation(seg2):
    system = lp.lp_equations(seg2, fx.SEG2_H)
    assert [lp.format_poly(f) for f in system.equations] == ["x0_0*x1_1"]


def test_tri3_equations_bidegree(tri3):
    system = lp.lp_equations(tri3, fx.TRI3_H)
    assert len(system.equations) == 9
    for f in system.equations:
        for mono in f:
            assert len(mono) == 2 and mono[0][0] != mono[1][0]
        assert len({frozenset(x[0] for x in mono) for mono in f}) == 1


@pytest.mark.parametrize("q, count", [(2, 5), (3, 7), (5, 11)])
def test_seg2_counts(seg2, q, count):
    assert len(lp.enumerate_points(seg2, fx.SEG2_H, q)) == count == 2 * q + 1


def test_singleton_count():
    assert len(lp.enumerate_points(singleton_net(), [U], 3)) == 4


@pytest.mark.parametrize("q", [2, 3])
def test_tri3_counts(tri3, q):
    # three planes, three lines through pairs, and one common point
    assert len(lp.enumerate_points(tri3, fx.TRI3_H, q)) == 3 * q * q + 3 * q + 1


def test_points_satisfy_system(tri3):
    Nq = lp.over_prime_field(tri3, 2)
    system = lp.lp_equations(Nq, fx.TRI3_H)
    assert all(system.satisfied(p) for p in lp.enumerate_points(tri3, fx.TRI3_H, 2))


def test_seg2_strata(seg2):
    pts = lp.enumerate_points(seg2, fx.SEG2_H, 3)
    strata = lp.stratify(seg2, fx.SEG2_H, pts, 3)
    sizes = {tuple(sorted(k)): len(v) for k, v in strata.items()}
    assert sizes == {(U,): 3, (V,): 3, (U, V): 1}
    assert lp.stratum_param_count(seg2, U, fx.SEG2_H, 3) == 3


def test_exact_single_stratum():
    N = fx.exact_simple((0, 0, 0), radius=2)
    pts = lp.enumerate_points(N, [(0, 0, 0)], 3)
    assert list(lp.stratify(N, [(0, 0, 0)], pts, 3)) == [frozenset([(0, 0, 0)])]
    assert lp.stratum_param_count(singleton_net(3), U, [U], 3) == 13


@pytest.mark.parametrize("q", [2, 3])
def test_strata_counts_match_params(tri3, q):
    pts = lp.enumerate_points(tri3, fx.TRI3_H, q)
    strata = lp.stratify(tri3, fx.TRI3_H, pts, q)
    assert sum(len(v) for v in strata.values()) == len(pts)
    for key, members in strata.items():
        if len(key) == 1:
            assert len(members) == lp.stratum_param_count(tri3, next(iter(key)), fx.TRI3_H, q)


def test_psi_identity_and_bijection(seg2):
    pts = lp.enumerate_points(seg2, fx.SEG2_H, 3)
    Nq = lp.over_prime_field(seg2, 3)
    for p in pts:
        assert lp.psi(Nq, fx.SEG2_H, fx.SEG2_H, p) == p
    big = [U, V, (2, 0)]
    image = {lp.psi(Nq, fx.SEG2_H, big, p) for p in pts}
    assert image == set(lp.enumerate_points(seg2, big, 3))
    for p in pts:
        assert lp.psi(Nq, big, fx.SEG2_H, lp.psi(Nq, fx.SEG2_H, big, p)) == p


def test_psi_composition(tri3):
    Nq = lp.over_prime_field(tri3, 2)
    H1 = fx.TRI3_H
    H2 = sorted(zq.hull(list(H1) + [(2, 1, 0)]))
    H3 = sorted(zq.hull(H2 + [(0, 0, 1)]))
    assert len(H1) < len(H2) < len(H3)
    for p in lp.enumerate_points(tri3, H1, 2):
        direct = lp.psi(Nq, H1, H3, p)
        assert lp.psi(Nq, H2, H3, lp.psi(Nq, H1, H2, p)) == direct


def test_tri3_chart_data(tri3):
    data = lp.charts(tri3, fx.TRI3_H)
    assert data.M == [Matrix.diag(QQ, d) for d in [(1, 0, 1), (1, 1, 0), (0, 1, 1)]]
    assert lp.m_pattern_ok(data)
    assert {c.count() for c in data.charts} == {4}


def test_seg2_charts(seg2):
    data = lp.charts(seg2, fx.SEG2_H)
    assert {c.count() for c in data.charts} == {1}
    assert lp.chart_equation_count_ok(data, 1)


def test_single_summand_charts():
    N = fx.exact_simple((0, 0, 0), radius=3)
    data = lp.charts(N, [(0, 0, 0)])
    assert data.charts and all(c.count() == 0 for c in data.charts)


@pytest.mark.parametrize("net, H, q", [("seg2", fx.SEG2_H, 2), ("tri3", fx.TRI3_H, 3)])
def test_chart_agreement(net, H, q, request):
    N = request.getfixturevalue(net)
    assert lp.chart_vs_minor_agreement(N, H, q)


def test_perturbed_chart_disagrees(tri3):
    assert not lp.chart_vs_minor_agreement(tri3, fx.TRI3_H, 2, perturb=True)


def test_seg2_jacobian(seg2):
    Nq = lp.over_prime_field(seg2, 3)
    system = lp.lp_equations(Nq, fx.SEG2_H)
    F = PrimeField(3)
    one, zero = F.one, F.zero
    assert lp.is_smooth_point(system, ((one, zero), (one, zero)))
    assert not lp.is_smooth_point(system, ((zero, one), (one, zero)))
    with pytest.raises(lp.PointNotOnVariety):
        lp.jacobian_rank(system, ((one, zero), (zero, one)))


@pytest.mark.parametrize("q", [2, 3])
def test_smooth_iff_singleton_stratum(tri3, q):
    Nq = lp.over_prime_field(tri3, q)
    system = lp.lp_equations(Nq, fx.TRI3_H)
    strata = lp.stratify(tri3, fx.TRI3_H, lp.enumerate_points(tri3, fx.TRI3_H, q), q)
    for key, pts in strata.items():
        for p in pts:
            assert lp.is_smooth_point(system, p) == (len(key) == 1)


def test_hilbert_seg2(seg2):
    table = lp.hilbert_table(lp.lp_equations(seg2, fx.SEG2_H), 3)
    assert table[(0, 0)] == 1
    assert table[(1, 1)] == 3
    assert table == {d: d[0] + d[1] + 1 for d in table}
    assert table == lp.diagonal_table(2, 2, 3)


def test_hilbert_tri3(tri3):
    table = lp.hilbert_table(lp.lp_equations(tri3, fx.TRI3_H), 2)
    assert table == lp.diagonal_table(3, 3, 2)


def test_budget(tri3):
    with pytest.raises(lp.BudgetExceeded):
        lp.enumerate_points(tri3, fx.TRI3_H, 5, budget=100)
