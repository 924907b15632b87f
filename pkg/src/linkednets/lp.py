"""The linked projective space of a pure net: minor equations, points over
prime fields, strata, local charts, Jacobian ranks and Hilbert tables.

Polynomials are dicts from monomials to coefficients; a monomial is a sorted
tuple of variable keys (with repetition).  Minor systems use variables
(block, index) where the block is a position in the ordered list H.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Iterable

from . import zquiver as zq
from .exactla import Field, Matrix, PrimeField, inverse, rank
from .net import WindowNet, change_field, decompose_polygon_generated, padded_chain


class BudgetExceeded(RuntimeError):
    pass


class ZeroImage(ValueError):
    pass


class StratumNotPolygon(AssertionError):
    pass


class PointNotOnVariety(ValueError):
    pass


class NotPolygonGenerated(ValueError):
    pass


class BadReduction(ValueError):
    pass


DEFAULT_BUDGET = 500_000


# ---------------------------------------------------------------------------
# Polynomials


def poly_mul(f: dict, g: dict) -> dict:
    out: dict = {}
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            m = tuple(sorted(m1 + m2))
            out[m] = out.get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


def poly_add(f: dict, g: dict, scale=1) -> dict:
    out = dict(f)
    for m, c in g.items():
        out[m] = out.get(m, 0) + scale * c
    return {m: c for m, c in out.items() if c}


def poly_eval(f: dict, point: dict, zero):
    total = zero
    for m, c in f.items():
        term = c
        for x in m:
            term = term * point[x]
        total = total + term
    return total


def poly_diff(f: dict, x) -> dict:
    out: dict = {}
    for m, c in f.items():
        k = m.count(x)
        if k:
            i = m.index(x)
            rest = m[:i] + m[i + 1:]
            out[rest] = out.get(rest, 0) + k * c
    return {m: c for m, c in out.items() if c}


def poly_variables(f: dict) -> set:
    return {x for m in f for x in m}


def var(x) -> dict:
    return {(x,): 1}


def const(c) -> dict:
    return {(): c} if c else {}


def _canonical(f: dict) -> dict:
    """Scale so that the coefficient of the smallest monomial is 1."""
    lead = f[min(f)]
    return {m: c / lead for m, c in f.items()}


def _fmt_var(x) -> str:
    return "x" + "_".join(str(i) for i in x)


def format_poly(f: dict) -> str:
    if not f:
        return "0"
    terms = []
    for m in sorted(f):
        c = f[m]
        mono = "*".join(_fmt_var(x) for x in m)
        cs = str(c)
        if not mono:
            terms.append(cs)
        elif cs == "1":
            terms.append(mono)
        elif cs == "-1":
            terms.append("-" + mono)
        else:
            terms.append(f"{cs}*{mono}")
    return " + ".join(terms).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# Minor systems


@dataclass
class MinorSystem:
    field: Field
    H: list
    block_dims: list
    equations: list  # polynomials in variables (block, index)

    @property
    def variables(self) -> list:
        return [(b, i) for b, r in enumerate(self.block_dims) for i in range(r)]

    def point_dict(self, point) -> dict:
        return {(b, i): x for b, vec in enumerate(point) for i, x in enumerate(vec)}

    def satisfied(self, point) -> bool:
        d = self.point_dict(point)
        z = self.field.zero
        return all(not poly_eval(f, d, z) for f in self.equations)

    def to_json(self) -> dict:
        return {
            "H": [list(v) for v in self.H],
            "block_dims": self.block_dims,
            "equations": [
                [{"monomial": [list(x) for x in m], "coefficient": self.field.format(c)} for m, c in sorted(f.items())]
                for f in self.equations
            ],
        }


def lp_equations(N: WindowNet, H: Iterable) -> MinorSystem:
    """2x2 minors of [phi^v_w s_v | s_w] for all ordered pairs v != w of H."""
    H = sorted(set(H))
    seen = set()
    eqs = []
    for bv, bw in itertools.permutations(range(len(H)), 2):
        A = N.class_map(H[bv], H[bw])
        if A.is_zero():
            continue
        images = [{((bv, k),): A[i, k] for k in range(A.ncols) if A[i, k]} for i in range(A.nrows)]
        for i, j in itertools.combinations(range(A.nrows), 2):
            f = poly_add(poly_mul(images[i], var((bw, j))), poly_mul(images[j], var((bw, i))), -1)
            if not f:
                continue
            f = _canonical(f)
            key = tuple(sorted(f.items()))
            if key not in seen:
                seen.add(key)
                eqs.append(f)
    return MinorSystem(N.field, H, [N.dims[v] for v in H], eqs)


# ---------------------------------------------------------------------------
# Points over prime fields


def projective_points(field: PrimeField, r: int) -> list:
    """Canonical representatives: first nonzero coordinate equal to 1."""
    els = field.elements()
    z, o = field.zero, field.one
    out = []
    for lead in range(r):
        for tail in itertools.product(els, repeat=r - lead - 1):
            out.append((z,) * lead + (o,) + tail)
    return out


def canonical_line(vec, field: Field) -> tuple:
    for x in vec:
        if x:
            inv = field.one / x
            return tuple(y * inv for y in vec)
    raise ZeroImage("zero vector has no line")


def over_prime_field(N: WindowNet, q: int) -> WindowNet:
    if isinstance(N.field, PrimeField):
        if N.field.p != q:
            raise ValueError(f"net is over GF({N.field.p}), not GF({q})")
        return N
    try:
        return change_field(N, PrimeField(q))
    except ZeroDivisionError as e:
        raise BadReduction(f"the net has no reduction mod {q}: {e}") from None


def enumerate_points(N: WindowNet, H: Iterable, q: int, budget: int = DEFAULT_BUDGET) -> list:
    Nq = over_prime_field(N, q)
    system = lp_equations(Nq, H)
    size = 1
    for r in system.block_dims:
        size *= (q ** r - 1) // (q - 1)
    if size > budget:
        raise BudgetExceeded(f"{size} candidate points exceed the budget {budget}")
    F = Nq.field
    spaces = [projective_points(F, r) for r in system.block_dims]
    # equations become checkable once both of their blocks are assigned
    by_last = {b: [] for b in range(len(spaces))}
    for f in system.equations:
        by_last[max(x[0] for x in poly_variables(f))].append(f)
    out = []
    assign: dict = {}

    def rec(b, chosen):
        if b == len(spaces):
            out.append(tuple(chosen))
            return
        for p in spaces[b]:
            for i, x in enumerate(p):
                assign[(b, i)] = x
            if all(not poly_eval(f, assign, F.zero) for f in by_last[b]):
                rec(b + 1, chosen + [p])

    rec(0, [])
    return sorted(out, key=point_key)


def point_key(p) -> tuple:
    return tuple(tuple(int(x.v) if hasattr(x, "v") else x for x in vec) for vec in p)


def format_point(p) -> str:
    return " ".join("[" + ":".join(str(x) for x in vec) + "]" for vec in p)


def generated_lines(N: WindowNet, H: list, point) -> dict:
    return {v: vec for v, vec in zip(H, point)}


def stratum_key(N: WindowNet, H: list, point) -> frozenset:
    """Minimal generators of the subnet spanned by the point: the members of H
    not reached nonzero from another member."""
    H = list(H)
    key = set()
    for v, s_v in zip(H, point):
        hit = False
        for u, s_u in zip(H, point):
            if u != v and any(N.class_map(u, v).apply(s_u)):
                hit = True
                break
        if not hit:
            key.add(v)
    return frozenset(key)


def stratify(N: WindowNet, H: Iterable, points, q: int | None = None) -> dict:
    H = sorted(set(H))
    Nq = over_prime_field(N, q) if q is not None else N
    strata: dict = {}
    for p in points:
        key = stratum_key(Nq, H, p)
        if not key or not zq.is_polygon(key):
            raise StratumNotPolygon(f"point {format_point(p)} is generated by {sorted(key)}")
        strata.setdefault(key, []).append(p)
    return strata


def stratum_param_count(N: WindowNet, v, H: Iterable, q: int) -> int:
    """Lines s at v with nonzero image at every member of H."""
    Nq = over_prime_field(N, q)
    maps = [Nq.class_map(v, u) for u in sorted(set(H)) if u != v]
    return sum(1 for s in projective_points(Nq.field, Nq.dims[v]) if all(any(M.apply(s)) for M in maps))


def psi(N: WindowNet, H1: Iterable, H2: Iterable, point) -> tuple:
    """Transport a point of LP_{H1} to H2 through shadows in H1."""
    H1 = sorted(set(H1))
    H2 = sorted(set(H2))
    lines = dict(zip(H1, point))
    out = []
    for v in H2:
        w = zq.shadow(v, H1)
        t = N.class_map(w, v).apply(lines[w])
        if not any(t):
            raise ZeroImage(f"line at {w} maps to zero at {v}")
        out.append(canonical_line(t, N.field))
    return tuple(out)


# ---------------------------------------------------------------------------
# Jacobian


def jacobian_matrix(field: Field, equations: list, variables: list, point: dict) -> Matrix:
    z = field.zero
    for f in equations:
        if poly_eval(f, point, z):
            raise PointNotOnVariety("point does not satisfy the system")
    rows = [[poly_eval(poly_diff(f, x), point, z) for x in variables] for f in equations]
    return Matrix.from_rows(field, rows, len(variables))


def jacobian_rank(system, point) -> int:
    """Rank of the Jacobian at a point.

    For a MinorSystem the point is a tuple of vectors (one per block); for a
    ChartSystem it is a dict of affine coordinates.
    """
    if isinstance(system, MinorSystem):
        d = system.point_dict(point)
        if not system.equations:
            return 0
        return rank(jacobian_matrix(system.field, system.equations, system.variables, d))
    if not system.equations:
        return 0
    return rank(jacobian_matrix(system.field, system.equations, system.variables, point))


def expected_codimension(system: MinorSystem) -> int:
    """Codimension of an (r-1)-dimensional LP in the product of projective spaces."""
    r = system.block_dims[0]
    return sum(d - 1 for d in system.block_dims) - (r - 1)


def is_smooth_point(system: MinorSystem, point) -> bool:
    return jacobian_rank(system, point) == expected_codimension(system)


# ---------------------------------------------------------------------------
# Hilbert tables


def _monomials(block: int, r: int, d: int) -> list:
    return [tuple((block, i) for i in c) for c in itertools.combinations_with_replacement(range(r), d)]


def multidegrees(k: int, bound: int) -> list:
    return [d for d in itertools.product(range(bound + 1), repeat=k) if sum(d) <= bound]


def hilbert_table(system: MinorSystem, bound: int = 4, budget: int = 20_000) -> dict:
    k = len(system.H)
    table = {}
    eq_degrees = []
    for f in system.equations:
        deg = [0] * k
        for x in next(iter(f)):
            deg[x[0]] += 1
        eq_degrees.append(tuple(deg))
    for d in multidegrees(k, bound):
        blocks = [_monomials(b, system.block_dims[b], d[b]) for b in range(k)]
        monos = [tuple(sorted(sum(parts, ()))) for parts in itertools.product(*blocks)]
        if len(monos) > budget:
            raise BudgetExceeded(f"{len(monos)} monomials in degree {d}")
        index = {m: i for i, m in enumerate(monos)}
        rows = []
        for f, e in zip(system.equations, eq_degrees):
            rest = [a - b for a, b in zip(d, e)]
            if min(rest) < 0:
                continue
            mblocks = [_monomials(b, system.block_dims[b], rest[b]) for b in range(k)]
            for parts in itertools.product(*mblocks):
                g = poly_mul({tuple(sorted(sum(parts, ()))): 1}, f)
                row = [0] * len(monos)
                for m, c in g.items():
                    row[index[m]] = c
                rows.append(row)
        rk = rank(Matrix.from_rows(system.field, rows, len(monos))) if rows else 0
        table[d] = len(monos) - rk
    return table


def diagonal_table(k: int, r: int, bound: int) -> dict:
    return {d: comb(sum(d) + r - 1, r - 1) for d in multidegrees(k, bound)}


def format_table(table: dict, other: dict | None = None) -> str:
    lines = []
    for d in sorted(table):
        row = ",".join(str(x) for x in d) + f",{table[d]}"
        if other is not None:
            row += f",{other[d]},{'yes' if table[d] == other[d] else 'no'}"
        lines.append(row)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Local charts


@dataclass
class ChartSystem:
    field: Field
    chain: list  # chain vertices v_0..v_n after rotation
    rotation: int
    choice: tuple  # (p_i, j_i) for i = 0..n; coordinate x^{j_i}_{i,p_i} is set to 1
    variables: list  # affine coordinates (i, flat index)
    equations: list
    y: list  # y_i as polynomials
    provenance: dict = field(default_factory=dict)

    def count(self) -> int:
        return len(self.equations)


@dataclass
class ChartData:
    field: Field
    chain: list  # padded chain vertices
    r_blocks: list  # r_l per chain position
    M: list  # diagonal 0/1 matrices in adapted bases
    bases: list  # adapted basis matrix per chain vertex (columns)
    charts: list


def _block_offsets(r_blocks):
    offs = [0]
    for r in r_blocks:
        offs.append(offs[-1] + r)
    return offs


def _chart_choices(n: int, r_blocks: list):
    """All (p_1..p_n) sequences of the cover refinement, with p_0 = 1."""
    def rec(s, p_next, acc):
        if s == 0:
            yield acc
            return
        opts = sorted({s + 1, p_next}) if s < n else [0, 1]
        for p in opts:
            if r_blocks[p % (n + 1)]:
                yield from rec(s - 1, p, {s: p % (n + 1), **acc})

    yield from rec(n, None, {})


def charts(N: WindowNet, polygon: Iterable, perturb: bool = False) -> ChartData:
    """Chart equations in the adapted basis of a polygon-generated exact pure net."""
    poly = sorted(set(polygon))
    if not zq.is_polygon(poly):
        raise NotPolygonGenerated("charts need a polygon")
    n = N.n
    base_chain = padded_chain(poly, poly[0])
    chain = [v for v, _ in base_chain]
    try:
        dec = decompose_polygon_generated(N, poly, base_chain)
    except Exception as e:  # noqa: BLE001
        raise NotPolygonGenerated(str(e)) from None
    r = dec.r
    r_blocks = [sum(1 for g in dec.generator if g == v) for v in chain]
    # summands are listed by generator in polygon order, which is chain order
    bases = [dec.basis[v] for v in chain]
    Ms = []
    for i, (v, a) in enumerate(base_chain):
        w = chain[(i + 1) % (n + 1)]
        Ms.append(inverse(bases[(i + 1) % (n + 1)]) @ N.arrow(v, a) @ bases[i])
    offs = _block_offsets(r_blocks)
    F = N.field
    out = []
    for rot in range(n + 1):
        rb = r_blocks[rot:] + r_blocks[:rot]
        if not rb[1 % (n + 1)]:
            continue
        for ps in _chart_choices(n, rb):
            p = [1] + [ps[s] for s in range(1, n + 1)]
            for js in itertools.product(*[range(rb[p[i]]) for i in range(n + 1)]):
                out.append(_build_chart(F, n, rot, rb, offs, p, list(js), chain, len(poly), perturb))
    return ChartData(F, chain, r_blocks, Ms, bases, out)


def _build_chart(F, n, rot, rb, offs, p, js, chain, m, perturb) -> ChartSystem:
    # rotated position i is chain position (i + rot) mod (n+1), for vertices and blocks alike
    def key(i, l, k):
        return ((i + rot) % (n + 1), offs[(l + rot) % (n + 1)] + k)

    units = {key(i, p[i], js[i]) for i in range(n + 1)}

    def x(i, l, k):
        kk = key(i % (n + 1), l % (n + 1), k)
        return const(1) if kk in units else var(kk)

    y = [x(i, p[(i + 1) % (n + 1)], js[(i + 1) % (n + 1)]) for i in range(n + 1)]
    if p[1] == 1:
        # x_{1,1} != 0 while M_0 kills block 1, so M_0 x_0 = 0 on this chart
        y[0] = {}
    eqs = []
    first = True
    for i in range(n + 1):
        for l in range(n + 1):
            if l == (i + 1) % (n + 1):
                continue
            for k in range(rb[l]):
                scale = -2 if (perturb and first) else -1
                f = poly_add(x(i, l, k), poly_mul(y[i], x(i + 1, l, k)), scale)
                if f:
                    eqs.append(f)
                    first = False
    prod = const(1)
    for yi in y:
        prod = poly_mul(prod, yi)
    if prod:
        eqs.append(prod)
    variables = sorted({key(i, l, k) for i in range(n + 1) for l in range(n + 1) for k in range(rb[l])} - units)
    rotated_chain = chain[rot:] + chain[:rot]
    return ChartSystem(F, rotated_chain, rot, tuple(zip(p, js)), variables, eqs, y,
                       {"padded": len(chain) > m, "units": sorted(units)})


def chart_equation_count_ok(data: ChartData, n: int) -> bool:
    r = sum(data.r_blocks)
    return all(c.count() == n * r - n for c in data.charts)


def m_pattern_ok(data: ChartData) -> bool:
    """M_i is the 0/1 diagonal matrix vanishing exactly on the block of summands
    generated at the next chain vertex."""
    n1 = len(data.chain)
    offs = _block_offsets(data.r_blocks)
    r = offs[-1]
    for i, M in enumerate(data.M):
        nxt = (i + 1) % n1
        zero = set(range(offs[nxt], offs[nxt + 1]))
        expect = Matrix.diag(data.field, [0 if k in zero else 1 for k in range(r)])
        if M != expect:
            return False
    return True


def _adapted_coords(data: ChartData, point) -> list:
    return [inverse(B).apply(vec) for B, vec in zip(data.bases, point)]


def chart_locus_agreement(N: WindowNet, polygon, q: int, perturb: bool = False,
                          budget: int = DEFAULT_BUDGET) -> dict:
    """Exhaustively compare chart equations with the minor system on each chart.

    Returns counts: points examined, chart-points compared, disagreements and
    LP points not covered by any chart.
    """
    Nq = over_prime_field(N, q)
    data = charts(Nq, polygon, perturb=perturb)
    F = Nq.field
    chain = data.chain
    if len(set(chain)) != len(chain):
        raise NotPolygonGenerated("chain revisits a vertex")
    system = lp_equations(Nq, chain)
    order = [system.H.index(v) for v in chain]
    spaces = [projective_points(F, Nq.dims[v]) for v in chain]
    total = 1
    for s in spaces:
        total *= len(s)
    if total > budget:
        raise BudgetExceeded(f"{total} points exceed the budget {budget}")
    inv_bases = [inverse(B) for B in data.bases]
    stats = {"points": 0, "compared": 0, "disagree": 0, "uncovered": 0, "charts": len(data.charts)}
    for pt in itertools.product(*spaces):
        stats["points"] += 1
        ordered = [None] * len(chain)
        for pos, b in enumerate(order):
            ordered[b] = pt[pos]
        on_lp = system.satisfied(ordered)
        adapted = [Bi.apply(vec) for Bi, vec in zip(inv_bases, pt)]
        covered = False
        for c in data.charts:
            units = c.provenance["units"]
            if any(not adapted[i][k] for i, k in units):
                continue
            aff = {}
            for i, vec in enumerate(adapted):
                u = next(k for ii, k in units if ii == i)
                inv = F.one / vec[u]
                for k, xk in enumerate(vec):
                    aff[(i, k)] = xk * inv
            chart_ok = all(not poly_eval(f, aff, F.zero) for f in c.equations)
            stats["compared"] += 1
            if chart_ok != on_lp:
                stats["disagree"] += 1
            covered = True
        if on_lp and not covered:
            stats["uncovered"] += 1
    return stats


def chart_vs_minor_agreement(N: WindowNet, polygon, q: int, perturb: bool = False) -> bool:
    s = chart_locus_agreement(N, polygon, q, perturb)
    return s["disagree"] == 0 and s["uncovered"] == 0
