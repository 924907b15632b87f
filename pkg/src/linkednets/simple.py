"""Simple (dimension 1) linked nets: shifts, generating polygons, the planar
classification for n = 2 and DOT rendering."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import zquiver as zq
from .net import NotOneGenerated, PathLeavesWindow, WindowNet, is_one_generated_by
from .zquiver import Path, Vertex


class ShiftNotApplicable(ValueError):
    pass


class WindowTooSmall(NotOneGenerated):
    pass


class NotClassifiable(ValueError):
    pass


def is_simple(N: WindowNet) -> bool:
    return all(d == 1 for d in N.dims.values())


def arrow_is_zero(S: WindowNet, v: Vertex, a: int) -> bool:
    return S.arrow(v, a).is_zero()


# ---------------------------------------------------------------------------
# Minimal circuits and shifts


@dataclass(frozen=True)
class MinimalCircuitState:
    circuit: Path
    zero_steps: tuple  # positions k whose arrow (the k-th step) has zero map

    @property
    def vertices(self) -> list:
        return self.circuit.vertices()[:-1]

    @property
    def zero_types(self) -> frozenset:
        return frozenset(self.circuit.steps[k] for k in self.zero_steps)

    @property
    def marked(self) -> tuple:
        """Positions of circuit vertices whose arriving circuit arrow is zero."""
        m = len(self.circuit.steps)
        return tuple(sorted((k + 1) % m for k in self.zero_steps))


def circuit_state(S: WindowNet, start: Vertex, order) -> MinimalCircuitState:
    p = Path(start, tuple(order))
    if not zq.path_class(p).minimal_circuit:
        raise ValueError("order must use every arrow type exactly once")
    zeros = []
    for k, v in enumerate(p.vertices()[:-1]):
        if arrow_is_zero(S, v, p.steps[k]):
            zeros.append(k)
    return MinimalCircuitState(p, tuple(zeros))


def b_shift(S: WindowNet, state: MinimalCircuitState, b_type: int) -> MinimalCircuitState:
    """Shift the circuit along the arrow of type b_type arriving at its initial vertex.

    With steps a_0, ..., a_n and b = a_j, the new circuit starts at the source
    of b and uses the types b, a_0, ..., a_{j-1}, a_{j+1}, ..., a_n.
    """
    steps = state.circuit.steps
    if b_type == steps[-1]:
        raise ShiftNotApplicable("the shift type must differ from the last circuit type")
    center = state.circuit.source
    src = zq.arrow_source(center, b_type)
    if src not in S.window:
        raise PathLeavesWindow(f"arrow into {center} of type {b_type} leaves the window")
    if arrow_is_zero(S, src, b_type):
        raise ShiftNotApplicable(f"arrow of type {b_type} arriving at {center} has zero map")
    j = steps.index(b_type)
    new_steps = (b_type,) + steps[:j] + steps[j + 1:]
    new = circuit_state(S, src, new_steps)
    if new.zero_types != state.zero_types:
        raise AssertionError("shift changed the types of the zero arrows")
    return new


def shift_until_blocked(S: WindowNet, state: MinimalCircuitState, b_type: int, limit: int = 1000):
    """Repeat b-shifts; returns (final state, number of shifts)."""
    count = 0
    while count < limit:
        try:
            state = b_shift(S, state, b_type)
        except (ShiftNotApplicable, PathLeavesWindow):
            return state, count
        count += 1
    raise RuntimeError("shift sequence did not terminate")


# ---------------------------------------------------------------------------
# Generators


def incoming_zero_vertices(S: WindowNet) -> frozenset:
    """Interior vertices all of whose arriving arrows have zero map."""
    out = set()
    for v in S.window.interior():
        if all(arrow_is_zero(S, zq.arrow_source(v, a), a) for a in range(S.n + 1)):
            out.add(v)
    return frozenset(out)


def minimal_generating_polygon(S: WindowNet, check_maximum: bool = True) -> frozenset:
    gens = incoming_zero_vertices(S)
    interior = sorted(S.window.interior())
    if not gens or not is_one_generated_by(S, gens, interior):
        raise WindowTooSmall("generators are not visible inside the window interior")
    if not zq.is_polygon(gens):
        raise AssertionError(f"minimal generators {sorted(gens)} do not form a polygon")
    if check_maximum and len(max_unrelated_polygon(S)) != len(gens):
        raise AssertionError("generator count differs from the largest unrelated polygon")
    return gens


def related_pair(S: WindowNet, u: Vertex, v: Vertex):
    """True/False when both class maps are available, None otherwise."""
    try:
        return not S.class_map(u, v).is_zero() or not S.class_map(v, u).is_zero()
    except PathLeavesWindow:
        return None


def max_unrelated_polygon(S: WindowNet) -> frozenset:
    """Brute-force search for a largest polygon of pairwise unrelated vertices."""
    n = S.n
    members = S.window.members
    subsets = [I for k in range(1, n + 1) for I in itertools.combinations(range(n + 1), k)]

    def unrelated_neighbors(v):
        out = []
        for I in subsets:
            w = zq.act(I, v)
            if w in members and related_pair(S, v, w) is False:
                out.append(w)
        return out

    nbrs = {v: set(unrelated_neighbors(v)) for v in S.vertices}
    best = [min(members)]

    def extend(clique, candidates):
        nonlocal best
        if len(clique) > len(best):
            best = list(clique)
        if len(clique) == n + 1:
            return
        for w in sorted(candidates):
            if w > clique[-1]:
                extend(clique + [w], candidates & nbrs[w])

    for v in S.vertices:
        if len(best) == n + 1:
            break
        extend([v], nbrs[v])
    return frozenset(best)


# ---------------------------------------------------------------------------
# Classification over Z^2


@dataclass(frozen=True)
class Z2Type:
    tag: str
    generators: frozenset


_TWO_GON = {0: "I", 1: "II", 2: "III"}


def classify_z2(S: WindowNet) -> Z2Type:
    if S.n != 2 or not is_simple(S):
        raise NotClassifiable("classification needs a simple net over a Z^2-quiver")
    try:
        gens = minimal_generating_polygon(S)
    except NotOneGenerated as e:
        raise NotClassifiable(str(e)) from None
    if len(gens) == 1:
        return Z2Type("Exact", gens)
    start = min(gens)
    order, sets = zq.orient_polygon(gens, start)
    if len(gens) == 2:
        I = sets[0]
        single = I if len(I) == 1 else zq.closing_set(2, sets)
        return Z2Type(_TWO_GON[next(iter(single))], gens)
    types = [next(iter(I)) for I in sets] + [next(iter(zq.closing_set(2, sets)))]
    k = types.index(0)
    return Z2Type("IV" if types[(k + 1) % 3] == 1 else "V", gens)


# ---------------------------------------------------------------------------
# DOT rendering


def _planar(v: Vertex) -> tuple[float, float]:
    # type 0 points north-east, type 1 north-west, type 2 south
    x = 0.866 * (v[0] - v[1])
    y = 0.5 * (v[0] + v[1]) - v[2]
    return x, y


def _node(v: Vertex) -> str:
    return "v" + "_".join(str(x) for x in v)


def render_dot(S: WindowNet, generators=()) -> str:
    gens = set(generators)
    lines = ["digraph net {"]
    if S.window.members:
        lines.append('  node [shape=circle, label="", width=0.15];')
    for v in S.vertices:
        attrs = [f'tooltip="{v}"']
        if S.n == 2:
            x, y = _planar(v)
            attrs.append(f'pos="{x:.3f},{y:.3f}!"')
        if v in gens:
            attrs.append("style=filled, fillcolor=orange")
        lines.append(f"  {_node(v)} [{', '.join(attrs)}];")
    for (v, a), M in sorted(S.arrows.items()):
        color = "red" if M.is_zero() else "blue"
        w = zq.arrow_target(v, a)
        lines.append(f"  {_node(v)} -> {_node(w)} [color={color}, label=\"{a}\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"
