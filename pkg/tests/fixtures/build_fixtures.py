"""Regenerate the JSON fixtures in this directory.

    python3 tests/fixtures/build_fixtures.py
"""

import json
import random
from pathlib import Path

from linkednets import document as doc
from linkednets import fixtures as fx
from linkednets import zquiver as zq
from linkednets.exactla import QQ, Matrix
from linkednets.net import WindowNet, change_basis

HERE = Path(__file__).parent


def write(name: str, d: doc.NetDocument) -> None:
    (HERE / name).write_text(d.dumps())


def unimodular(rng: random.Random, r: int) -> Matrix:
    def entry(i, j, below):
        if i == j:
            return QQ(1)
        return QQ(rng.randint(-2, 2)) if (i > j) == below else QQ(0)

    L = Matrix.from_rows(QQ, [[entry(i, j, True) for j in range(r)] for i in range(r)], r)
    U = Matrix.from_rows(QQ, [[entry(i, j, False) for j in range(r)] for i in range(r)], r)
    return L @ U


def circuit_violating() -> doc.NetDocument:
    # every arrow the identity: minimal circuits compose to the identity
    W = zq.window([(0, 0)], 2)
    arrows = {(v, a): Matrix.identity(QQ, 1) for v in W.members for a in range(2) if zq.arrow_target(v, a) in W}
    N = WindowNet(QQ, 1, W, {v: 1 for v in W.members}, arrows)
    return doc.window_document(N, polygon=[(0, 0)])


def main() -> None:
    write("seg2.json", doc.hull_document(fx.seg2_presentation()))
    write("tri3.json", doc.hull_document(fx.tri3_presentation()))
    colors = json.loads((HERE / "figure_colors.json").read_text())
    for tag, gens in fx.Z2_GENERATORS.items():
        write(f"z2_{tag}.json", doc.hull_document(fx.simple_presentation(gens), colors=colors[tag]))
    write("z2_exact.json", doc.hull_document(fx.simple_presentation([(0, 0, 0)])))
    # unimodular base change keeps integer entries in both directions, so the
    # net reduces modulo every prime
    rng = random.Random(7)
    for _ in range(100):
        N, poly = fx.random_exact_net(rng, 2, 2, radius=2, twist=False)
        if len(poly) > 1:
            break
    N = change_basis(N, {v: unimodular(rng, N.dims[v]) for v in N.vertices})
    write("exact_random.json", doc.window_document(N, polygon=poly))
    write("circuit_violating.json", circuit_violating())
    (HERE / "malformed.json").write_text('{"format_version": 1, "field": {"kind": "rationals"}, "n": 1,\n')


if __name__ == "__main__":
    main()
