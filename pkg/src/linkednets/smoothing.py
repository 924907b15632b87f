"""Nets over Q(t) and monomial smoothings of polygon-generated exact pure nets.

In the adapted basis of the simple-summand decomposition every arrow acts
diagonally.  The smoothing keeps the nonzero diagonal entries and replaces
each zero entry by t, so that the generic fiber (over Q(t)) has invertible
arrows and the special fiber (t = 0) is the original net.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import zquiver as zq
from .exactla import QQ, QT, Matrix, RatFunc, inverse, is_iso, scalar_multiple_of, specialize_t0
from .lp import diagonal_table, hilbert_table, lp_equations
from .net import (
    DecompositionFailed,
    Report,
    WindowNet,
    _paths_with_maps,
    change_basis,
    decompose_polygon_generated,
)


class SmoothingInvalid(ValueError):
    pass


@dataclass
class SmoothingReport:
    generic_ok: bool
    special_matches: bool
    circuits_vanish: bool
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.generic_ok and self.special_matches and self.circuits_vanish

    def to_json(self) -> dict:
        return {
            "generic_ok": self.generic_ok,
            "special_matches": self.special_matches,
            "circuits_vanish": self.circuits_vanish,
            "failures": self.failures,
        }


def check_general_linked(N: WindowNet) -> Report:
    """Arrows invertible, and any two window paths with the same ends proportional."""
    rep = Report("general_linked", N.bound())
    for (v, a), M in sorted(N.arrows.items()):
        rep.checked += 1
        if not is_iso(M):
            rep.fail("invertible", f"arrow {v} --{a}--> is not invertible", v, a)
    for v in N.vertices:
        first: dict = {}
        for steps, counts, M in _paths_with_maps(N, v, N.n + 1):
            w = zq.normalize(zq.add(v, counts))
            if w not in first:
                first[w] = (steps, M)
                continue
            rep.checked += 1
            steps0, M0 = first[w]
            if scalar_multiple_of(M, M0) is None or scalar_multiple_of(M0, M) is None:
                rep.fail("proportional", f"paths from {v} to {w} are not proportional", v, steps0, steps)
    return rep


def specialize(N: WindowNet) -> WindowNet:
    arrows = {k: specialize_t0(M) for k, M in N.arrows.items()}
    return WindowNet(QQ, N.n, N.window, dict(N.dims), arrows)


def _smooth_entry(x) -> RatFunc:
    return RatFunc.t() if not x else QT(x)


def construct_monomial_smoothing(N: WindowNet, polygon) -> tuple[WindowNet, SmoothingReport]:
    if N.field != QQ:
        raise SmoothingInvalid("smoothings are built for nets over the rationals")
    try:
        dec = decompose_polygon_generated(N, polygon)
    except DecompositionFailed as e:
        raise SmoothingInvalid(f"no simple-summand decomposition: {e}") from None
    if dec.unresolved:
        raise SmoothingInvalid(f"{len(dec.unresolved)} window vertices lie outside every summand's reach")
    adapted = change_basis(N, dec.basis)
    arrows = {}
    for (v, a), M in adapted.arrows.items():
        r = M.nrows
        if any(M[i, j] for i in range(r) for j in range(r) if i != j):
            raise SmoothingInvalid(f"arrow {v} --{a}--> is not diagonal in the adapted basis")
        arrows[(v, a)] = Matrix.diag(QT, [_smooth_entry(M[i, i]) for i in range(r)])
    smooth = WindowNet(QT, N.n, N.window, dict(N.dims), arrows)

    failures = []
    gen = check_general_linked(smooth)
    failures += [v.to_json() for v in gen.violations[:10]]
    special = specialize(smooth)
    matches = all(special.arrows[k] == adapted.arrows[k] for k in adapted.arrows)
    if not matches:
        failures.append({"kind": "special", "message": "t = 0 fiber differs from the input"})
    vanish = True
    for v in smooth.vertices:
        for steps, counts, M in _paths_with_maps(smooth, v, N.n + 1):
            if min(counts) > 0 and not specialize_t0(M).is_zero():
                vanish = False
                failures.append({"kind": "circuit", "message": f"circuit at {v} survives t = 0"})
    report = SmoothingReport(gen.passed, matches, vanish, failures)
    if not gen.passed:
        raise SmoothingInvalid(f"generic fiber is not a general linked net: {gen.violations[0].message}")
    return smooth, report


def adapted_net(N: WindowNet, polygon) -> WindowNet:
    dec = decompose_polygon_generated(N, polygon)
    return change_basis(N, dec.basis)


@dataclass
class DegenerationRow:
    degree: tuple
    special: int
    diagonal: int
    generic: int | None = None

    @property
    def equal(self) -> bool:
        return self.special == self.diagonal and (self.generic is None or self.generic == self.diagonal)


def degeneration_evidence(N: WindowNet, H, bound: int, smooth: WindowNet | None = None) -> list:
    """Hilbert table of LP_H side by side with the small diagonal's table.

    When a smoothing is supplied, the table of its generic fiber is added.
    """
    H = sorted(set(H))
    r = N.dims[H[0]]
    special = hilbert_table(lp_equations(N, H), bound)
    diag = diagonal_table(len(H), r, bound)
    generic = hilbert_table(lp_equations(smooth, H), bound) if smooth is not None else None
    return [DegenerationRow(d, special[d], diag[d], None if generic is None else generic[d]) for d in sorted(special)]


def format_evidence(rows: list, csv: bool = True) -> str:
    has_generic = any(r.generic is not None for r in rows)
    head = ["degree", "special", "diagonal"] + (["generic"] if has_generic else []) + ["equal"]
    body = []
    for r in rows:
        cells = ["(" + " ".join(str(x) for x in r.degree) + ")", str(r.special), str(r.diagonal)]
        if has_generic:
            cells.append(str(r.generic))
        cells.append("yes" if r.equal else "no")
        body.append(cells)
    if csv:
        return "\n".join(",".join(c) for c in [head] + body) + "\n"
    widths = [max(len(row[i]) for row in [head] + body) for i in range(len(head))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in [head] + body) + "\n"


def generic_fiber_is_iso(smooth: WindowNet) -> bool:
    return all(is_iso(M) for M in smooth.arrows.values())


def invert_adapted(N: WindowNet, polygon) -> dict:
    dec = decompose_polygon_generated(N, polygon)
    return {v: inverse(B) for v, B in dec.basis.items()}
