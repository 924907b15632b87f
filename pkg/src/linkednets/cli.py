"""Command-line interface.

Every command reads a net document (see ``linkednets.document``), works on a
finite window around the generating data and states that window in its
output header.  Exit codes: 0 success, 1 a check failed, 2 the input could
not be parsed, 3 a computation budget was exceeded.
"""

from __future__ import annotations

import argparse
import sys

from . import document as doc
from . import lp
from . import net as nt
from . import simple
from . import smoothing as sm
from . import zquiver as zq
from .exactla import QT

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_BUDGET = 0, 1, 2, 3


class Output:
    """Collects text lines and a JSON payload; prints one of them."""

    def __init__(self, command: str, N: nt.WindowNet, **header):
        self.command = command
        self.header = {"command": command, "n": N.n, "radius": N.window.radius, "window_size": len(N.window)}
        self.header.update(header)
        self.lines: list[str] = []
        self.result: dict = {}

    def emit(self, as_json: bool, stream=None) -> None:
        stream = stream or sys.stdout
        if as_json:
            stream.write(doc.dumps({"header": self.header, "result": self.result}))
            return
        head = " ".join(f"{k}={v}" for k, v in self.header.items() if k != "command")
        stream.write(f"# {self.command}: {head}\n")
        for line in self.lines:
            stream.write(line + "\n")


def fmt_vertex(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def parse_vertex(s: str) -> tuple:
    try:
        return zq.normalize([int(x) for x in s.strip("()[] ").split(",")])
    except ValueError:
        raise doc.DocumentError(f"cannot read vertex {s!r}") from None


def _vertices(vs) -> list:
    return [list(v) for v in sorted(vs)]


def _load(args):
    d = doc.load(args.path)
    N = d.window_net(args.radius)
    return d, N


def _locally_finite_bound(N: nt.WindowNet, seed) -> int:
    P = zq.hull(seed)
    return max(sum(zq.diff(v, h)) for v in N.vertices for h in P)


# ---------------------------------------------------------------------------
# Commands


CHECKS = ("weakly_linked", "linked", "exact", "pure", "locally_finite")


def cmd_validate(args) -> int:
    d, N = _load(args)
    checks = args.checks.split(",") if args.checks else list(CHECKS)
    unknown = set(checks) - set(CHECKS)
    if unknown:
        raise doc.DocumentError(f"unknown checks {sorted(unknown)}")
    seed = d.H if (d.polygon is not None or d.presentation is not None) else N.window.seed or N.window.members
    ell = args.ell if args.ell is not None else _locally_finite_bound(N, seed)
    out = Output("validate", N, ell=ell)
    reports = []
    for c in checks:
        if c == "locally_finite":
            reports.append(nt.check_locally_finite(N, ell))
        else:
            reports.append(getattr(nt, f"check_{c}")(N))
    for r in reports:
        out.lines.append(r.summary())
        for v in r.violations[: args.max_witnesses]:
            out.lines.append(f"  {v.kind}: {v.message}")
    ok = all(r.passed for r in reports)
    out.lines.append("valid" if ok else "invalid")
    out.result = {"passed": ok, "reports": [r.to_json() for r in reports]}
    out.emit(args.json)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_min_gens(args) -> int:
    _, N = _load(args)
    out = Output("min-gens", N)
    try:
        gens = nt.minimal_one_generators(N)
    except nt.NotOneGenerated as e:
        out.lines.append(f"error: {e}")
        out.result = {"error": str(e)}
        out.emit(args.json)
        return EXIT_FAIL
    out.lines += [fmt_vertex(v) for v in sorted(gens)]
    out.result = {"generators": _vertices(gens)}
    out.emit(args.json)
    return EXIT_OK


def cmd_classify2(args) -> int:
    _, N = _load(args)
    out = Output("classify2", N)
    try:
        t = simple.classify_z2(N)
    except simple.NotClassifiable as e:
        out.lines.append(f"error: {e}")
        out.result = {"error": str(e)}
        out.emit(args.json)
        return EXIT_FAIL
    out.lines.append(f"type {t.tag}")
    out.lines += [fmt_vertex(v) for v in sorted(t.generators)]
    out.result = {"type": t.tag, "generators": _vertices(t.generators)}
    out.emit(args.json)
    return EXIT_OK


def cmd_hull(args) -> int:
    d, N = _load(args)
    H = [parse_vertex(s) for s in args.vertices.split(";")] if args.vertices else d.H
    P = zq.hull(H)
    out = Output("hull", N, H=" ".join(fmt_vertex(v) for v in sorted(H)))
    out.lines += [fmt_vertex(v) for v in sorted(P)]
    out.result = {"H": _vertices(H), "hull": _vertices(P)}
    out.emit(args.json)
    return EXIT_OK


def cmd_shadow(args) -> int:
    d, N = _load(args)
    H = sorted(zq.hull(d.H))
    out = Output("shadow", N)
    targets = [parse_vertex(args.vertex)] if args.vertex else N.vertices
    pairs = [(v, zq.shadow(v, H)) for v in targets]
    out.lines += [f"{fmt_vertex(v)} -> {fmt_vertex(w)}" for v, w in pairs]
    out.result = {"shadows": [[list(v), list(w)] for v, w in pairs]}
    out.emit(args.json)
    return EXIT_OK


def _render_generators(N):
    try:
        if simple.is_simple(N) and N.n == 2:
            return simple.minimal_generating_polygon(N, check_maximum=False)
        return nt.minimal_one_generators(N)
    except nt.NotOneGenerated:
        return frozenset()


def cmd_render(args) -> int:
    _, N = _load(args)
    text = simple.render_dot(N, _render_generators(N))
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# lp


def _point_json(p) -> list:
    return [[str(x) for x in vec] for vec in p]


def cmd_lp(args) -> int:
    d, N = _load(args)
    H = d.H
    sub = args.lp_command
    if sub == "eqs":
        system = lp.lp_equations(N, H)
        out = Output("lp eqs", N, H=" ".join(fmt_vertex(v) for v in H))
        out.lines.append(f"{len(system.equations)} equations")
        out.lines += [lp.format_poly(f) for f in system.equations]
        out.result = system.to_json()
    elif sub == "count":
        pts = lp.enumerate_points(N, H, args.q, args.budget)
        out = Output("lp count", N, q=args.q)
        out.lines.append(str(len(pts)))
        out.result = {"q": args.q, "count": len(pts)}
    elif sub == "strata":
        pts = lp.enumerate_points(N, H, args.q, args.budget)
        strata = lp.stratify(N, H, pts, args.q)
        out = Output("lp strata", N, q=args.q)
        out.lines.append("stratum,points,expected")
        rows = []
        for key in sorted(strata, key=lambda k: (len(k), sorted(k))):
            expected = lp.stratum_param_count(N, next(iter(key)), H, args.q) if len(key) == 1 else None
            rows.append({"stratum": _vertices(key), "points": len(strata[key]), "expected": expected})
            label = " ".join(fmt_vertex(v) for v in sorted(key))
            out.lines.append(f"{label},{len(strata[key])},{'-' if expected is None else expected}")
        out.result = {"q": args.q, "total": len(pts), "strata": rows}
    elif sub == "charts":
        data = lp.charts(N, H)
        out = Output("lp charts", N)
        ok_count = lp.chart_equation_count_ok(data, N.n)
        ok_m = lp.m_pattern_ok(data)
        out.lines.append(f"charts {len(data.charts)}; r_blocks {data.r_blocks}; "
                         f"count_ok {ok_count}; m_pattern_ok {ok_m}")
        res = []
        for c in data.charts:
            out.lines.append(f"chart rotation={c.rotation} choice={list(c.choice)} equations={c.count()}")
            out.lines += ["  " + lp.format_poly(f) for f in c.equations]
            res.append({"rotation": c.rotation, "choice": [list(x) for x in c.choice],
                        "equations": [lp.format_poly(f) for f in c.equations]})
        out.result = {"r_blocks": data.r_blocks, "count_ok": ok_count, "m_pattern_ok": ok_m, "charts": res}
        if not (ok_count and ok_m):
            out.emit(args.json)
            return EXIT_FAIL
    elif sub == "jacobian":
        pts = lp.enumerate_points(N, H, args.q, args.budget)
        Nq = lp.over_prime_field(N, args.q)
        system = lp.lp_equations(Nq, H)
        strata = lp.stratify(N, H, pts, args.q)
        where = {lp.point_key(p): k for k, ps in strata.items() for p in ps}
        codim = lp.expected_codimension(system)
        out = Output("lp jacobian", N, q=args.q, codim=codim)
        out.lines.append("point,stratum_size,rank,smooth")
        rows, mismatches = [], 0
        for p in pts:
            rk = lp.jacobian_rank(system, p)
            size = len(where[lp.point_key(p)])
            smooth = rk == codim
            mismatches += smooth != (size == 1)
            rows.append({"point": _point_json(p), "stratum_size": size, "rank": rk, "smooth": smooth})
            out.lines.append(f"{lp.format_point(p)},{size},{rk},{'yes' if smooth else 'no'}")
        out.lines.append(f"mismatches {mismatches}")
        out.result = {"codim": codim, "points": rows, "mismatches": mismatches}
        if mismatches:
            out.emit(args.json)
            return EXIT_FAIL
    else:  # hilbert
        system = lp.lp_equations(N, H)
        table = lp.hilbert_table(system, args.bound, args.budget)
        out = Output("lp hilbert", N, bound=args.bound)
        out.lines.append(",".join(f"d{i}" for i in range(len(H))) + ",dim")
        out.lines += lp.format_table(table).splitlines()
        out.result = {"table": [[list(k), v] for k, v in sorted(table.items())]}
    out.emit(args.json)
    return EXIT_OK


# ---------------------------------------------------------------------------
# smoothing


def cmd_smooth(args) -> int:
    d, N = _load(args)
    sub = args.smooth_command
    if sub == "check" and N.field == QT:
        return _check_qt(args, N)
    H = d.H
    try:
        S, report = sm.construct_monomial_smoothing(N, H)
    except sm.SmoothingInvalid as e:
        out = Output(f"smooth {sub}", N)
        out.lines.append(f"SmoothingInvalid: {e}")
        out.result = {"error": str(e)}
        out.emit(args.json)
        return EXIT_FAIL
    if sub == "build":
        text = doc.window_document(S, polygon=H).dumps()
        if args.out:
            with open(args.out, "w") as f:
                f.write(text)
        else:
            sys.stdout.write(text)
        return EXIT_OK
    if sub == "check":
        out = Output("smooth check", N)
        out.lines.append(f"generic_ok {report.generic_ok}")
        out.lines.append(f"special_matches {report.special_matches}")
        out.lines.append(f"circuits_vanish {report.circuits_vanish}")
        out.result = report.to_json()
        out.emit(args.json)
        return EXIT_OK if report.ok else EXIT_FAIL
    rows = sm.degeneration_evidence(N, H, args.bound, S)
    out = Output("smooth degeneration", N, bound=args.bound)
    out.lines += sm.format_evidence(rows).splitlines()
    out.result = {"rows": [{"degree": list(r.degree), "special": r.special, "diagonal": r.diagonal,
                            "generic": r.generic, "equal": r.equal} for r in rows]}
    out.emit(args.json)
    return EXIT_OK if all(r.equal for r in rows) else EXIT_FAIL


def _check_qt(args, S) -> int:
    out = Output("smooth check", S)
    gen = sm.check_general_linked(S)
    special = sm.specialize(S)
    weak = nt.check_weakly_linked(special)
    out.lines.append(gen.summary())
    out.lines.append("special fiber " + weak.summary())
    out.result = {"generic": gen.to_json(), "special": weak.to_json()}
    out.emit(args.json)
    return EXIT_OK if gen.passed and weak.passed else EXIT_FAIL


# ---------------------------------------------------------------------------
# Parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("path", help="net document (JSON)")
    common.add_argument("--radius", type=int, default=None, help="window radius for hull documents (default n+2)")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = argparse.ArgumentParser(prog="linkednets", description="Linked nets over Z^n-quivers")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", parents=[common], help="run axiom checks")
    v.add_argument("--checks", default=None, help="comma-separated subset of " + ",".join(CHECKS))
    v.add_argument("--ell", type=int, default=None, help="path length bound for local finiteness")
    v.add_argument("--max-witnesses", type=int, default=5)
    v.set_defaults(func=cmd_validate)

    sub.add_parser("min-gens", parents=[common], help="minimal 1-generating set").set_defaults(func=cmd_min_gens)
    sub.add_parser("classify2", parents=[common], help="type of a simple net over Z^2").set_defaults(func=cmd_classify2)

    h = sub.add_parser("hull", parents=[common], help="hull of the generating set")
    h.add_argument("--vertices", default=None, help="vertices separated by ';', e.g. '0,0,0;1,1,0'")
    h.set_defaults(func=cmd_hull)

    s = sub.add_parser("shadow", parents=[common], help="shadow of a vertex (all window vertices by default)")
    s.add_argument("vertex", nargs="?", default=None)
    s.set_defaults(func=cmd_shadow)

    r = sub.add_parser("render", parents=[common], help="DOT picture")
    r.add_argument("--out", default=None)
    r.set_defaults(func=cmd_render)

    lpp = sub.add_parser("lp", help="linked projective space")
    lsub = lpp.add_subparsers(dest="lp_command", required=True)
    lsub.add_parser("eqs", parents=[common])
    lsub.add_parser("charts", parents=[common])
    for name in ("count", "strata", "jacobian"):
        x = lsub.add_parser(name, parents=[common])
        x.add_argument("--q", type=int, required=True, help="prime field size")
        x.add_argument("--budget", type=int, default=lp.DEFAULT_BUDGET)
    hb = lsub.add_parser("hilbert", parents=[common])
    hb.add_argument("--bound", type=int, default=3)
    hb.add_argument("--budget", type=int, default=20_000)
    lpp.set_defaults(func=cmd_lp)

    sp = sub.add_parser("smooth", help="monomial smoothings")
    ssub = sp.add_subparsers(dest="smooth_command", required=True)
    b = ssub.add_parser("build", parents=[common])
    b.add_argument("--out", default=None)
    ssub.add_parser("check", parents=[common])
    dg = ssub.add_parser("degeneration", parents=[common])
    dg.add_argument("--bound", type=int, default=3)
    sp.set_defaults(func=cmd_smooth)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except doc.DocumentError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except lp.BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (nt.PathLeavesWindow, nt.NotOneGenerated, nt.DecompositionFailed, lp.NotPolygonGenerated, lp.BadReduction,
            zq.NotAPolygon, zq.HullNotClosed) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
