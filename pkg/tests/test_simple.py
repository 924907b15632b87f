import itertools
import json
import random

import pytest

from conftest import FIXTURES, GOLDEN
from linkednets import fixtures as fx
from linkednets import net as nt
from linkednets import simple
from linkednets import zquiver as zq
from linkednets.document import net_colors

TAGS = ["I", "II", "III", "IV", "V"]


@pytest.fixture(scope="module")
def figure_colors():
    return json.loads((FIXTURES / "figure_colors.json").read_text())


@pytest.mark.parametrize("tag", TAGS)
def test_figure_colors(tag, z2_nets, figure_colors):
    S = z2_nets[tag]
    colors = {(tuple(v), a): c for v, a, c in net_colors(S)["arrows"]}
    fig = figure_colors[tag]
    for v, a, c in fig["arrows"]:
        assert colors[(tuple(v), a)] == c, (v, a)


@pytest.mark.parametrize("tag", TAGS)
def test_classify(tag, z2_nets, figure_colors):
    t = simple.classify_z2(z2_nets[tag])
    assert t.tag == tag
    assert t.generators == {tuple(v) for v in figure_colors[tag]["generators"]}
    for u, v in itertools.permutations(t.generators, 2):
        assert z2_nets[tag].class_map(u, v).is_zero()


def test_classify_exact(z2_nets):
    t = simple.classify_z2(z2_nets["Exact"])
    assert t.tag == "Exact" and t.generators == {(0, 0, 0)}


def test_classify_rejects_non_simple(tri3):
    with pytest.raises(simple.NotClassifiable):
        simple.classify_z2(tri3)


def test_relabel_two_gon():
    gens = [(v[1], v[0], v[2]) for v in fx.Z2_GENERATORS["I"]]
    t = simple.classify_z2(fx.simple_net(gens, radius=4))
    assert t.tag in {"I", "II", "III"}
    assert len(t.generators) == 2


@pytest.mark.parametrize("tag, size", [("Exact", 1), ("II", 2), ("V", 3)])
def test_max_unrelated(tag, size, z2_nets):
    assert len(simple.max_unrelated_polygon(z2_nets[tag])) == size


def test_minimal_generating_polygon(z2_nets):
    assert simple.minimal_generating_polygon(z2_nets["Exact"]) == {(0, 0, 0)}
    assert simple.minimal_generating_polygon(z2_nets["I"]) == set(fx.Z2_GENERATORS["I"])
    assert simple.minimal_generating_polygon(z2_nets["IV"]) == set(fx.Z2_GENERATORS["IV"])


def test_window_too_small():
    S = fx.simple_net(fx.Z2_GENERATORS["V"], radius=0)
    with pytest.raises(simple.WindowTooSmall):
        simple.minimal_generating_polygon(S)


def test_random_simple_nets_match_bruteforce():
    rng = random.Random(8)
    for _ in range(8):
        S, poly = fx.random_simple_net(rng, rng.randint(1, 2), radius=2)
        gens = simple.minimal_generating_polygon(S)
        assert gens == poly == nt.minimal_one_generators_bruteforce(S)


def test_shift_moves_and_terminates(z2_nets):
    S = z2_nets["I"]
    shifted = 0
    for v in S.window.interior():
        for order in itertools.permutations(range(3)):
            try:
                state = simple.circuit_state(S, v, order)
            except nt.PathLeavesWindow:
                continue
            for b in order[:-1]:
                try:
                    new = simple.b_shift(S, state, b)
                except (simple.ShiftNotApplicable, nt.PathLeavesWindow):
                    continue
                shifted += 1
                assert new.circuit.source == zq.arrow_source(v, b)
                assert new.zero_types == state.zero_types
                _, count = simple.shift_until_blocked(S, state, b)
                assert count >= 1
    assert shifted > 0


def test_shift_blocked_by_zero_arrow(z2_nets):
    S = z2_nets["I"]
    g = fx.Z2_GENERATORS["I"][0]
    # every arrow into a generator has zero map
    state = simple.circuit_state(S, g, (0, 1, 2))
    with pytest.raises(simple.ShiftNotApplicable):
        simple.b_shift(S, state, 0)


def test_circuit_state_rejects_non_circuit(z2_nets):
    with pytest.raises(ValueError):
        simple.circuit_state(z2_nets["I"], (1, 1, 0), (0, 1))


def test_render_golden(z2_nets):
    S = z2_nets["I"]
    text = simple.render_dot(S, simple.minimal_generating_polygon(S))
    assert text == simple.render_dot(S, simple.minimal_generating_polygon(S))
    assert text == (GOLDEN / "render_I.dot").read_text()


def test_render_empty():
    W = zq.VertexWindow(frozenset(), frozenset(), 0)
    S = nt.WindowNet(fx.QQ, 2, W, {}, {})
    assert simple.render_dot(S) == "digraph net {\n}\n"
