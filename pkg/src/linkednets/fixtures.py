"""Named example nets and random generators used by tests and the CLI."""

from __future__ import annotations

import itertools
import random
from typing import Iterable

from . import zquiver as zq
from .exactla import QQ, Field, Matrix, rank
from .net import NetPresentation, WindowNet, change_basis, direct_sum, expand

SEG2_H = ((0, 0), (1, 0))
TRI3_H = ((0, 0, 0), (1, 0, 0), (1, 1, 0))

# Generators of the five non-exact dimension-1 configurations over Z^2,
# read off the planar pictures (orange vertices) in lattice coordinates.
Z2_GENERATORS = {
    "I": ((1, 1, 0), (2, 1, 0)),
    "II": ((1, 0, 0), (1, 1, 0)),
    "III": ((0, 0, 0), (1, 1, 0)),
    "IV": ((1, 1, 0), (2, 1, 0), (2, 2, 0)),
    "V": ((2, 1, 0), (2, 2, 0), (3, 2, 0)),
}


def seg2_presentation(field: Field = QQ) -> NetPresentation:
    u, v = SEG2_H
    cross = {
        (u, v): Matrix.from_rows(field, [[1, 0], [0, 0]]),
        (v, u): Matrix.from_rows(field, [[0, 0], [0, 1]]),
    }
    return NetPresentation(field, 1, frozenset(SEG2_H), {u: 2, v: 2}, cross)


def seg2(field: Field = QQ, radius: int = 3) -> WindowNet:
    return expand(seg2_presentation(field), radius)


def tri3_presentation(field: Field = QQ) -> NetPresentation:
    v0, v1, v2 = TRI3_H
    d = lambda *e: Matrix.diag(field, e)  # noqa: E731
    cross = {
        (v0, v1): d(1, 0, 1),
        (v1, v2): d(1, 1, 0),
        (v2, v0): d(0, 1, 1),
        (v0, v2): d(1, 0, 0),
        (v1, v0): d(0, 1, 0),
        (v2, v1): d(0, 0, 1),
    }
    return NetPresentation(field, 2, frozenset(TRI3_H), {v: 3 for v in TRI3_H}, cross)


def tri3(field: Field = QQ, radius: int = 3) -> WindowNet:
    return expand(tri3_presentation(field), radius)


def simple_presentation(polygon: Iterable, field: Field = QQ) -> NetPresentation:
    """Dimension-1 net generated by an unrelated polygon: all cross maps zero."""
    H = frozenset(polygon)
    n = len(next(iter(H))) - 1
    cross = {(u, v): Matrix.zeros(field, 1, 1) for u, v in itertools.permutations(H, 2)}
    return NetPresentation(field, n, H, {v: 1 for v in H}, cross)


def simple_net(polygon: Iterable, radius: int = 3, field: Field = QQ, W=None) -> WindowNet:
    return expand(simple_presentation(polygon, field), radius, W)


def exact_simple(vertex, radius: int = 2, field: Field = QQ, W=None) -> WindowNet:
    return simple_net([vertex], radius, field, W)


def z2_fixture(tag: str, radius: int = 3, field: Field = QQ) -> WindowNet:
    if tag == "Exact":
        return exact_simple((0, 0, 0), radius, field)
    return simple_net(Z2_GENERATORS[tag], radius, field)


# ---------------------------------------------------------------------------
# Random generators


def random_vertex(rng: random.Random, n: int, spread: int = 2) -> tuple:
    return zq.normalize([rng.randint(0, spread) for _ in range(n + 1)])


def random_polygon(rng: random.Random, n: int, start=None, size: int | None = None) -> list:
    """A random polygon: a start vertex and an ordered partition of the types."""
    start = random_vertex(rng, n) if start is None else start
    size = rng.randint(1, n + 1) if size is None else size
    types = list(range(n + 1))
    rng.shuffle(types)
    cuts = sorted(rng.sample(range(1, n + 1), size - 1))
    parts = [types[a:b] for a, b in zip([0] + cuts, cuts + [n + 1])]
    return zq.polygon_from_chain(start, parts[:-1])


def random_invertible(rng: random.Random, field: Field, r: int, spread: int = 2) -> Matrix:
    while True:
        M = Matrix.from_rows(field, [[rng.randint(-spread, spread) for _ in range(r)] for _ in range(r)], r)
        if rank(M) == r:
            return M


def random_base_change(rng: random.Random, N: WindowNet) -> WindowNet:
    bases = {v: random_invertible(rng, N.field, N.dims[v]) for v in N.vertices}
    return change_basis(N, bases)


def random_simple_net(rng: random.Random, n: int, radius: int = 2, field: Field = QQ):
    poly = random_polygon(rng, n)
    return simple_net(poly, radius, field), frozenset(poly)


def random_exact_net(rng: random.Random, n: int, r: int, radius: int = 2, field: Field = QQ,
                     generators=None, twist: bool = True) -> tuple[WindowNet, list]:
    """Direct sum of r exact simple nets, then a random change of basis.

    Generators default to random vertices of a random polygon, so the sum is
    generated by that polygon.
    """
    if generators is None:
        poly = random_polygon(rng, n)
        generators = [rng.choice(poly) for _ in range(r)]
        seed = poly
    else:
        seed = list(generators)
    W = zq.window(seed, radius)
    N = direct_sum([exact_simple(g, field=field, W=W) for g in generators])
    if twist:
        N = random_base_change(rng, N)
    return N, sorted(set(seed))


def random_linked_net(rng: random.Random, n: int, r: int, radius: int = 2, field: Field = QQ,
                      twist: bool = True) -> tuple[WindowNet, list]:
    """Direct sum of r simple nets generated by random sub-polygons of one polygon."""
    poly = random_polygon(rng, n)
    W = zq.window(poly, radius)
    parts = []
    for _ in range(r):
        k = rng.randint(1, len(poly))
        parts.append(simple_net(rng.sample(poly, k), field=field, W=W))
    N = direct_sum(parts)
    if twist:
        N = random_base_change(rng, N)
    return N, sorted(poly)
