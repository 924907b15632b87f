"""The JSON net document: reading, validation, canonical writing.

Two modes are supported.  A "hull" document stores a presentation (a
hull-closed vertex set H with dimensions and cross maps) and is expanded on
a window when loaded.  A "window" document stores every space and arrow of a
window explicitly.

    {
      "format_version": 1,
      "field": {"kind": "rationals"},
      "n": 1,
      "mode": "hull",
      "hull": {"H": [[0, 0], [1, 0]], "dims": [2, 2],
               "cross_maps": [{"source": [0, 0], "target": [1, 0],
                               "matrix": [["1", "0"], ["0", "0"]]}, ...]},
      "polygon": [[0, 0], [1, 0]],
      "colors": {"generators": [...], "arrows": [[[0, 0], 1, "red"], ...]}
    }

A window block has "seed", "radius", "vertices", "dims" (aligned with
"vertices") and "arrows" (objects with "source", "type" and "matrix").
Matrix entries are strings in the field's notation; elements of Q(t) are
written "num|den" with comma-separated coefficients, lowest degree first.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from . import zquiver as zq
from .exactla import Field, Matrix
from .net import InvalidPresentation, NetPresentation, WindowNet, expand

FORMAT_VERSION = 1


class DocumentError(ValueError):
    pass


def _vertex(x, n: int | None = None) -> tuple:
    if not isinstance(x, list) or not x or not all(isinstance(c, int) and not isinstance(c, bool) for c in x):
        raise DocumentError(f"a vertex must be a nonempty list of integers, got {x!r}")
    if n is not None and len(x) != n + 1:
        raise DocumentError(f"vertex {x} has {len(x)} coordinates, expected {n + 1}")
    return zq.normalize(x)


def _matrix(F: Field, rows, nrows: int, ncols: int) -> Matrix:
    if not isinstance(rows, list) or len(rows) != nrows or any(not isinstance(r, list) or len(r) != ncols for r in rows):
        raise DocumentError(f"matrix must be {nrows} x {ncols}")
    try:
        return Matrix.from_rows(F, [[F.parse(str(x)) for x in r] for r in rows], ncols)
    except (ValueError, ZeroDivisionError, ArithmeticError) as e:
        raise DocumentError(f"bad matrix entry: {e}") from None


def _vlist(vs) -> list:
    return [list(v) for v in sorted(vs)]


@dataclass
class NetDocument:
    field: Field
    n: int
    mode: str
    presentation: NetPresentation | None = None
    net: WindowNet | None = None
    polygon: list | None = None
    colors: dict | None = None
    extra: dict = field(default_factory=dict)

    @property
    def H(self) -> list:
        """The generating vertex set used by lp and smoothing commands."""
        if self.polygon is not None:
            return sorted(self.polygon)
        if self.presentation is not None:
            return sorted(self.presentation.H)
        raise DocumentError("window documents need a 'polygon' entry for this command")

    def window_net(self, radius: int | None = None) -> WindowNet:
        if self.net is not None:
            return self.net
        r = self.n + 2 if radius is None else radius
        return expand(self.presentation, r)

    def to_json(self) -> dict:
        d: dict = {"format_version": FORMAT_VERSION, "field": self.field.to_json(), "n": self.n, "mode": self.mode}
        if self.mode == "hull":
            p = self.presentation
            H = sorted(p.H)
            d["hull"] = {
                "H": _vlist(H),
                "dims": [p.dims[v] for v in H],
                "cross_maps": [
                    {"source": list(u), "target": list(v), "matrix": p.cross_maps[(u, v)].to_strings()}
                    for u in H for v in H if u != v
                ],
            }
        else:
            N = self.net
            W = N.window
            d["window"] = {
                "seed": _vlist(W.seed),
                "radius": W.radius,
                "vertices": _vlist(W.members),
                "dims": [N.dims[v] for v in N.vertices],
                "arrows": [
                    {"source": list(v), "type": a, "matrix": M.to_strings()}
                    for (v, a), M in sorted(N.arrows.items())
                ],
            }
        if self.polygon is not None:
            d["polygon"] = _vlist(self.polygon)
        if self.colors is not None:
            d["colors"] = self.colors
        return d

    def dumps(self) -> str:
        return dumps(self.to_json())


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, one item per line, short lists inline."""
    return _dump(obj, 0) + "\n"


def _flat(x) -> bool:
    return not isinstance(x, (list, dict)) or (isinstance(x, list) and all(not isinstance(y, (list, dict)) for y in x))


def _dump(x, depth: int) -> str:
    pad = " " * (depth + 1)
    if isinstance(x, dict):
        if not x:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_dump(x[k], depth + 1)}" for k in sorted(x)]
        return "{\n" + ",\n".join(items) + "\n" + " " * depth + "}"
    if isinstance(x, list):
        if _flat(x) or (all(_flat(y) for y in x) and len(json.dumps(x)) <= 80):
            return json.dumps(x)
        return "[\n" + ",\n".join(pad + _dump(y, depth + 1) for y in x) + "\n" + " " * depth + "]"
    return json.dumps(x)


def from_json(d) -> NetDocument:
    if not isinstance(d, dict):
        raise DocumentError("document must be a JSON object")
    if d.get("format_version") != FORMAT_VERSION:
        raise DocumentError(f"unsupported format_version {d.get('format_version')!r}")
    try:
        F = Field.from_json(d["field"])
        n = d["n"]
        mode = d["mode"]
    except (KeyError, TypeError, ValueError) as e:
        raise DocumentError(f"bad header: {e}") from None
    if not isinstance(n, int) or n < 1:
        raise DocumentError("n must be a positive integer")
    polygon = [_vertex(v, n) for v in d["polygon"]] if "polygon" in d else None
    colors = d.get("colors")
    try:
        if mode == "hull":
            return NetDocument(F, n, mode, presentation=_read_hull(F, n, d["hull"]), polygon=polygon, colors=colors)
        if mode == "window":
            return NetDocument(F, n, mode, net=_read_window(F, n, d["window"]), polygon=polygon, colors=colors)
    except KeyError as e:
        raise DocumentError(f"missing key {e}") from None
    except (InvalidPresentation, zq.HullNotClosed) as e:
        raise DocumentError(str(e)) from None
    raise DocumentError(f"unknown mode {mode!r}")


def _read_hull(F: Field, n: int, h: dict) -> NetPresentation:
    H = [_vertex(v, n) for v in h["H"]]
    if len(set(H)) != len(H) or len(H) != len(h["dims"]):
        raise DocumentError("H must list distinct vertices, one dimension each")
    dims = dict(zip(H, h["dims"]))
    cross = {}
    for c in h["cross_maps"]:
        u, v = _vertex(c["source"], n), _vertex(c["target"], n)
        if u not in dims or v not in dims:
            raise DocumentError(f"cross map {u} -> {v} leaves H")
        cross[(u, v)] = _matrix(F, c["matrix"], dims[v], dims[u])
    return NetPresentation(F, n, frozenset(H), dims, cross)


def _read_window(F: Field, n: int, w: dict) -> WindowNet:
    members = [_vertex(v, n) for v in w["vertices"]]
    if len(members) != len(w["dims"]):
        raise DocumentError("one dimension per window vertex is required")
    dims = dict(zip(members, w["dims"]))
    W = zq.VertexWindow(frozenset(members), frozenset(_vertex(v, n) for v in w.get("seed", [])), int(w.get("radius", 0)))
    arrows = {}
    for a in w["arrows"]:
        v, t = _vertex(a["source"], n), a["type"]
        if not isinstance(t, int) or not 0 <= t <= n or v not in dims or zq.arrow_target(v, t) not in dims:
            raise DocumentError(f"bad arrow {a['source']} type {t}")
        arrows[(v, t)] = _matrix(F, a["matrix"], dims[zq.arrow_target(v, t)], dims[v])
    try:
        return WindowNet(F, n, W, dims, arrows)
    except ValueError as e:
        raise DocumentError(str(e)) from None


def loads(text: str) -> NetDocument:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"not JSON: {e}") from None
    return from_json(d)


def load(path) -> NetDocument:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise DocumentError(str(e)) from None
    return loads(text)


def window_document(N: WindowNet, polygon=None, colors=None) -> NetDocument:
    return NetDocument(N.field, N.n, "window", net=N, polygon=None if polygon is None else sorted(polygon), colors=colors)


def hull_document(p: NetPresentation, polygon=None, colors=None) -> NetDocument:
    return NetDocument(p.field, p.n, "hull", presentation=p, polygon=None if polygon is None else sorted(polygon), colors=colors)


def net_colors(N: WindowNet, generators=()) -> dict:
    return {
        "generators": _vlist(generators),
        "arrows": [[list(v), a, "red" if M.is_zero() else "blue"] for (v, a), M in sorted(N.arrows.items())],
    }
