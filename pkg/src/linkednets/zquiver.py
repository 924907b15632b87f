"""Combinatorics of Z^n-quivers in the lattice model.

A vertex is an (n+1)-tuple of integers taken modulo the all-ones vector; we
store the representative whose smallest entry is 0.  The arrow of type a
leaving v ends at v + e_a.  Nothing in this module touches linear algebra.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

Vertex = tuple


class NotAPolygon(ValueError):
    pass


class OrderingInconsistent(ValueError):
    pass


class HullNotClosed(ValueError):
    pass


class NonUniqueShadow(RuntimeError):
    pass


def normalize(raw: Sequence[int]) -> Vertex:
    m = min(raw)
    return tuple(x - m for x in raw)


def unit(n: int, a: int) -> tuple:
    return tuple(1 if i == a else 0 for i in range(n + 1))


def indicator(n: int, types: Iterable[int]) -> tuple:
    s = set(types)
    return tuple(1 if i in s else 0 for i in range(n + 1))


def add(u: Sequence[int], d: Sequence[int]) -> tuple:
    return tuple(x + y for x, y in zip(u, d))


def diff(v: Sequence[int], u: Sequence[int]) -> tuple:
    """Normalized difference v - u, i.e. the type of an admissible path u -> v."""
    return normalize([x - y for x, y in zip(v, u)])


def arrow_target(v: Vertex, a: int) -> Vertex:
    return normalize([x + (1 if i == a else 0) for i, x in enumerate(v)])


def arrow_source(v: Vertex, a: int) -> Vertex:
    """The vertex u with arrow_target(u, a) == v."""
    return normalize([x - (1 if i == a else 0) for i, x in enumerate(v)])


def argmin(x: Sequence[int]) -> frozenset:
    m = min(x)
    return frozenset(i for i, y in enumerate(x) if y == m)


# ---------------------------------------------------------------------------
# Paths


@dataclass(frozen=True)
class Path:
    source: Vertex
    steps: tuple = ()

    @property
    def n(self) -> int:
        return len(self.source) - 1

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def counts(self) -> tuple:
        c = [0] * (self.n + 1)
        for a in self.steps:
            c[a] += 1
        return tuple(c)

    @property
    def essential_types(self) -> frozenset:
        return frozenset(self.steps)

    def vertices(self) -> list[Vertex]:
        out = [self.source]
        for a in self.steps:
            out.append(arrow_target(out[-1], a))
        return out

    @property
    def target(self) -> Vertex:
        return normalize(add(self.source, self.counts))


class PathClass(NamedTuple):
    counts: tuple
    admissible: bool
    simple: bool
    minimal_circuit: bool

    @property
    def label(self) -> str:
        if self.minimal_circuit:
            return "minimal_circuit"
        if self.admissible:
            return "admissible"
        if self.simple:
            return "simple"
        return "other"


def classify_counts(counts: Sequence[int]) -> PathClass:
    counts = tuple(counts)
    admissible = min(counts) == 0
    simple = max(counts) <= 1
    return PathClass(counts, admissible, simple, simple and not admissible)


def path_class(p: Path) -> PathClass:
    return classify_counts(p.counts)


def admissible_path(u: Vertex, v: Vertex) -> Path:
    d = diff(v, u)
    return Path(u, tuple(a for a, k in enumerate(d) for _ in range(k)))


def neighbor_type(u: Vertex, v: Vertex) -> frozenset | None:
    """The set I with v = I.u, or None when u and v are not neighbors."""
    if u == v:
        raise ValueError("neighbor_type needs distinct vertices")
    d = diff(v, u)
    if max(d) != 1:
        return None
    return frozenset(i for i, x in enumerate(d) if x)


def are_neighbors(u: Vertex, v: Vertex) -> bool:
    return u != v and neighbor_type(u, v) is not None


def act(types: Iterable[int], v: Vertex) -> Vertex:
    """I.v, the end of a simple path from v with essential types I."""
    return normalize(add(v, indicator(len(v) - 1, types)))


def lattice_distance(u: Vertex, v: Vertex) -> int:
    """Length of a shortest undirected path between u and v."""
    d = diff(v, u)
    return max(d)


# ---------------------------------------------------------------------------
# Polygons


def is_polygon(vertices: Iterable[Vertex]) -> bool:
    vs = list(set(vertices))
    if not vs or len(vs) > len(vs[0]):
        return False
    return all(are_neighbors(u, v) for u, v in itertools.combinations(vs, 2))


def orient_polygon(polygon: Iterable[Vertex], start: Vertex) -> tuple[list[Vertex], list[frozenset]]:
    """Order a polygon from `start` so that v_{i+1} = I_i . v_i.

    Returns the ordering and the list I_0, ..., I_{m-2} (the closing set
    from v_m back to v_1 is the complement of their union).
    """
    vs = set(polygon)
    if start not in vs:
        raise ValueError("start vertex is not in the polygon")
    for u, v in itertools.combinations(vs, 2):
        if not are_neighbors(u, v):
            raise NotAPolygon(f"{u} and {v} are not neighbors")
    n = len(start) - 1
    if len(vs) > n + 1:
        raise NotAPolygon("a polygon has at most n+1 vertices")
    others = sorted(vs - {start}, key=lambda v: (sum(diff(v, start)), v))
    order = [start]
    sets = []
    prev_support: frozenset = frozenset()
    for v in others:
        support = frozenset(i for i, x in enumerate(diff(v, start)) if x)
        if not prev_support < support:
            raise OrderingInconsistent(f"supports from {start} do not form a chain")
        sets.append(support - prev_support)
        prev_support = support
        order.append(v)
    return order, sets


def closing_set(n: int, sets: Sequence[frozenset]) -> frozenset:
    used = frozenset().union(*sets) if sets else frozenset()
    return frozenset(range(n + 1)) - used


def polygon_from_chain(start: Vertex, sets: Sequence[Iterable[int]]) -> list[Vertex]:
    out = [start]
    for s in sets:
        out.append(act(s, out[-1]))
    return out


# ---------------------------------------------------------------------------
# Hulls and shadows


def _in_hull(v: Vertex, H: Sequence[Vertex]) -> bool:
    n = len(v) - 1
    covered: set = set()
    for z in H:
        covered |= argmin([x - y for x, y in zip(v, z)])
        if len(covered) == n + 1:
            return True
    return False


def hull_box(H: Iterable[Vertex], margin: int = 0) -> Iterable[Vertex]:
    """Candidates for P(H): representatives with first coordinate 0 and the
    remaining coordinates between the extremes of z_i - z_0 over H."""
    H = list(H)
    n = len(H[0]) - 1
    lo = [min(z[i] - z[0] for z in H) - margin for i in range(1, n + 1)]
    hi = [max(z[i] - z[0] for z in H) + margin for i in range(1, n + 1)]
    for rest in itertools.product(*[range(a, b + 1) for a, b in zip(lo, hi)]):
        yield normalize((0,) + rest)


@lru_cache(maxsize=4096)
def _hull_cached(H: frozenset) -> frozenset:
    Hl = sorted(H)
    return frozenset(v for v in hull_box(Hl) if _in_hull(v, Hl))


def hull(H: Iterable[Vertex]) -> frozenset:
    """P(H): vertices v such that every arrow type is avoided by some
    admissible path from a member of H to v."""
    H = frozenset(normalize(z) for z in H)
    if not H:
        raise ValueError("hull of an empty set")
    return _hull_cached(H)


def hull_bruteforce(H: Iterable[Vertex], margin: int = 2) -> frozenset:
    """Oracle for hull(): scans a box enlarged by `margin`."""
    Hl = sorted(set(H))
    return frozenset(v for v in hull_box(Hl, margin) if _in_hull(v, Hl))


def is_hull_closed(H: Iterable[Vertex]) -> bool:
    H = frozenset(H)
    return hull(H) == H


def _shadow_ok(v: Vertex, w: Vertex, H: Iterable[Vertex]) -> bool:
    vw = argmin([x - y for x, y in zip(v, w)])
    return all(argmin([x - y for x, y in zip(w, z)]) & vw for z in H)


def shadow(v: Vertex, H: Iterable[Vertex]) -> Vertex:
    """The member w of H through which every member of H reaches v admissibly."""
    H = frozenset(H)
    if hull(H) != H:
        raise HullNotClosed("shadow needs P(H) = H")
    if v in H:
        return v
    found = [w for w in sorted(H) if _shadow_ok(v, w, H)]
    if len(found) != 1:
        raise NonUniqueShadow(f"{len(found)} shadow candidates for {v}")
    return found[0]


def shadow_regions(H: Iterable[Vertex], W: Iterable[Vertex]) -> dict:
    H = frozenset(H)
    regions: dict = {w: set() for w in H}
    for v in W:
        regions[shadow(v, H)].add(v)
    return regions


def bridges(v1: Vertex, v2: Vertex, W: Iterable[Vertex]) -> set:
    """Vertices of W with type-disjoint simple admissible paths to v1 and v2."""
    if v1 == v2:
        raise ValueError("bridges need distinct vertices")
    out = set()
    for v in W:
        d1, d2 = diff(v1, v), diff(v2, v)
        if max(d1) > 1 or max(d2) > 1:
            continue
        if any(a and b for a, b in zip(d1, d2)):
            continue
        out.add(v)
    return out


# ---------------------------------------------------------------------------
# Windows


@dataclass(frozen=True)
class VertexWindow:
    members: frozenset
    seed: frozenset
    radius: int

    def __contains__(self, v) -> bool:
        return v in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    @property
    def n(self) -> int:
        return len(next(iter(self.members))) - 1

    def boundary(self) -> frozenset:
        """Members with a lattice neighbor (one arrow away, either direction) outside."""
        n = self.n
        out = set()
        for v in self.members:
            for a in range(n + 1):
                if arrow_target(v, a) not in self.members or arrow_source(v, a) not in self.members:
                    out.add(v)
                    break
        return frozenset(out)

    def interior(self) -> frozenset:
        return self.members - self.boundary()


def lattice_ball(center: Iterable[Vertex], radius: int) -> frozenset:
    seen = set(center)
    frontier = deque((v, 0) for v in seen)
    while frontier:
        v, r = frontier.popleft()
        if r == radius:
            continue
        n = len(v) - 1
        for a in range(n + 1):
            for w in (arrow_target(v, a), arrow_source(v, a)):
                if w not in seen:
                    seen.add(w)
                    frontier.append((w, r + 1))
    return frozenset(seen)


def window(seed: Iterable[Vertex], radius: int) -> VertexWindow:
    """All vertices within `radius` arrows (either direction) of P(seed)."""
    seed = frozenset(normalize(v) for v in seed)
    if not seed:
        raise ValueError("window needs a nonempty seed")
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    return VertexWindow(lattice_ball(hull(seed), radius), seed, radius)


def window_from_members(members: Iterable[Vertex]) -> VertexWindow:
    m = frozenset(members)
    return VertexWindow(m, m, 0)


def paths_from(v: Vertex, max_len: int, W=None) -> Iterable[Path]:
    """All paths leaving v of length at most max_len, staying inside W if given."""
    n = len(v) - 1
    stack = [(v, ())]
    while stack:
        u, steps = stack.pop()
        yield Path(v, steps)
        if len(steps) == max_len:
            continue
        for a in range(n + 1):
            w = arrow_target(u, a)
            if W is None or w in W:
                stack.append((w, steps + (a,)))
