"""Structural laws of linked nets and shadows, as executable checks.

Each check returns a list of counterexamples (empty when the law holds on
the sampled data).  Net laws sample from the window and skip configurations
whose class maps leave it.
"""

from __future__ import annotations

import itertools
import random

from . import zquiver as zq
from .exactla import is_epi, is_iso, is_mono, scalar_multiple_of
from .net import PathLeavesWindow, WindowNet


def _nonempty_proper(n: int) -> list:
    return [frozenset(I) for k in range(1, n + 1) for I in itertools.combinations(range(n + 1), k)]


def _maps(N: WindowNet, pairs):
    try:
        return [N.class_map(u, v) for u, v in pairs]
    except PathLeavesWindow:
        return None


def sequence_triples(N: WindowNet):
    """All (v1, v2, v3, I) in the window with v2 = I.v1 and v3 = I.v2."""
    W = N.window.members
    for v1 in N.vertices:
        for I in _nonempty_proper(N.n):
            v2 = zq.act(I, v1)
            v3 = zq.act(I, v2)
            if v2 in W and v3 in W:
                yield v1, v2, v3, I


def check_sequence_lemma(N: WindowNet, linked: bool = True, limit: int | None = None, rng=None) -> list:
    """Epi forward forces zero backward; for linked nets, zero backward forces mono onward."""
    bad = []
    triples = list(sequence_triples(N))
    if limit is not None and len(triples) > limit:
        triples = (rng or random.Random(0)).sample(triples, limit)
    for v1, v2, v3, I in triples:
        maps = _maps(N, [(v1, v2), (v2, v1), (v2, v3)])
        if maps is None:
            continue
        f12, f21, f23 = maps
        if is_epi(f12) and not f21.is_zero():
            bad.append(("seq1", v1, v2, v3))
        if linked and f21.is_zero() and not is_mono(f23):
            bad.append(("seq2", v1, v2, v3))
    return bad


def oriented_triangles(N: WindowNet):
    """Triples (v1, v2, v3) with v2 = I1.v1, v3 = I2.v2 for disjoint nonempty I1, I2
    not covering every type."""
    W = N.window.members
    types = range(N.n + 1)
    for v1 in N.vertices:
        for I1 in _nonempty_proper(N.n):
            rest = [t for t in types if t not in I1]
            for k in range(1, len(rest)):
                for I2 in itertools.combinations(rest, k):
                    v2 = zq.act(I1, v1)
                    v3 = zq.act(I2, v2)
                    if v2 in W and v3 in W:
                        yield v1, v2, v3


def check_triangle_lemma(N: WindowNet, limit: int | None = None, rng=None) -> list:
    bad = []
    tris = list(oriented_triangles(N))
    if limit is not None and len(tris) > limit:
        tris = (rng or random.Random(0)).sample(tris, limit)
    for v1, v2, v3 in tris:
        maps = _maps(N, [(v1, v2), (v2, v3), (v1, v3), (v3, v1), (v3, v2)])
        if maps is None:
            continue
        f12, f23, f13, f31, f32 = maps
        comp = f23 @ f12
        if scalar_multiple_of(comp, f13) is None or scalar_multiple_of(f13, comp) is None:
            bad.append(("triangle1", v1, v2, v3))
        if is_iso(f12):
            unrel13 = f13.is_zero() and f31.is_zero()
            unrel23 = f23.is_zero() and f32.is_zero()
            if unrel13 != unrel23:
                bad.append(("triangle2", v1, v2, v3))
    return bad


def check_shadow_polygon(H, polygon) -> list:
    """Shadows of an oriented polygon form an oriented polygon, in the same order."""
    H = zq.hull(H)
    poly = list(polygon)
    order, _ = zq.orient_polygon(poly, poly[0])
    shadows = [zq.shadow(v, H) for v in order]
    distinct = []
    for w in shadows:
        if not distinct or distinct[-1] != w:
            distinct.append(w)
    if len(distinct) > 1 and distinct[0] == distinct[-1]:
        distinct.pop()
    if len(set(distinct)) != len(distinct) or not zq.is_polygon(distinct):
        return [("shadow_polygon", tuple(order), tuple(shadows))]
    if len(distinct) > 2:
        try:
            got, _ = zq.orient_polygon(distinct, distinct[0])
        except (zq.NotAPolygon, zq.OrderingInconsistent):
            return [("shadow_polygon", tuple(order), tuple(shadows))]
        if got != distinct:
            return [("shadow_polygon_order", tuple(order), tuple(shadows))]
    return []


def _length(counts) -> int:
    return sum(counts)


def check_shadow_path(H, start, steps) -> list:
    """Length comparison for a path split into arrows: |mu gamma_1| >= |gamma_{m+1} rho|,
    with equality exactly when every arrow followed by its shadow path is admissible."""
    H = zq.hull(H)
    vs = zq.Path(start, tuple(steps)).vertices()
    ws = [zq.shadow(v, H) for v in vs]
    lhs = len(steps) + _length(zq.diff(vs[0], ws[0]))
    rhs = _length(zq.diff(vs[-1], ws[-1])) + sum(_length(zq.diff(ws[i + 1], ws[i])) for i in range(len(steps)))
    each = all(
        min(c + (1 if t == a else 0) for t, c in enumerate(zq.diff(vs[i], ws[i]))) == 0
        for i, a in enumerate(steps)
    )
    if lhs < rhs or (lhs == rhs) != each:
        return [("shadow_path", start, tuple(steps), lhs, rhs, each)]
    return []
