"""JSON interchange and DOT export.

Graph JSON is ``{"n": int, "edges": [[u, v], ...]}`` in canonical order; a
witness adds a ``"labels"`` block. Loaders reject non-canonical input
instead of normalizing it, so ``dumps(load(dumps(x))) == dumps(x)``.
"""
from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path
from typing import Any, Optional

from .coloring import EdgeColoring
from .errors import GraphFormatError, InvalidParameterError
from .graph import Graph
from .witness import WitnessGraph, build_witness

# Pen colors for DOT export, cycled by color id.
DOT_PALETTE = (
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4",
    "#f032e6", "#bfef45", "#469990", "#9a6324", "#800000", "#000075",
)


def dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def write_atomic(path: str | os.PathLike, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_json(path: str | os.PathLike) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"{path}: invalid JSON ({exc})") from exc


def graph_to_json(g: Graph) -> dict:
    return {"n": g.vertex_count, "edges": [[u, v] for u, v in g.edges]}


def _is_int(x: Any) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def graph_from_json(obj: Any) -> Graph:
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise GraphFormatError('graph JSON needs "n" and "edges"')
    n, edges = obj["n"], obj["edges"]
    if not _is_int(n) or not isinstance(edges, list):
        raise GraphFormatError('"n" must be an integer and "edges" a list')
    pairs = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(_is_int(x) for x in e)):
            raise GraphFormatError(f"malformed edge {e!r}")
        pairs.append((e[0], e[1]))
    try:
        return Graph(n, tuple(pairs))
    except InvalidParameterError as exc:
        raise GraphFormatError(str(exc)) from exc


def witness_to_json(wg: WitnessGraph) -> dict:
    out = graph_to_json(wg.graph)
    out["labels"] = {
        "cycle": list(wg.cycle_ids),
        "w": wg.w_id,
        "v": wg.v_id,
        "path": list(wg.path_ids),
        "a": wg.a,
        "b": wg.b,
        "cycle_n": wg.n,
    }
    return out


def witness_from_json(obj: Any) -> WitnessGraph:
    """Load a witness; the graph and labels must match ``build_witness(a, b)``."""
    g = graph_from_json(obj)
    labels = obj.get("labels")
    if not isinstance(labels, dict) or "a" not in labels or "b" not in labels:
        raise GraphFormatError('witness JSON needs a "labels" block with "a" and "b"')
    try:
        wg = build_witness((labels["a"], labels["b"]))
    except (InvalidParameterError, TypeError) as exc:
        raise GraphFormatError(f"bad witness parameters: {exc}") from exc
    if witness_to_json(wg) != {**graph_to_json(g), "labels": labels}:
        raise GraphFormatError("graph or labels do not match the witness construction")
    return wg


def coloring_to_json(c: EdgeColoring) -> dict:
    return {"k": c.palette_size, "colors": list(c.colors)}


def coloring_from_json(obj: Any, g: Optional[Graph] = None) -> EdgeColoring:
    if not isinstance(obj, dict) or not _is_int(obj.get("k")) or not isinstance(obj.get("colors"), list):
        raise GraphFormatError('coloring JSON needs integer "k" and list "colors"')
    colors = obj["colors"]
    if not all(_is_int(x) for x in colors):
        raise GraphFormatError("colors must be integers")
    try:
        c = EdgeColoring(len(colors), obj["k"], tuple(colors))
    except InvalidParameterError as exc:
        raise GraphFormatError(str(exc)) from exc
    if g is not None:
        c.check_bound(g)
    return c


def to_dot(g: Graph, c: Optional[EdgeColoring] = None, name: str = "G") -> str:
    """Undirected DOT text; with a coloring every edge gets a label and pen color."""
    if c is not None:
        c.check_bound(g)
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.vertex_count)]
    for idx, (u, v) in enumerate(g.edges):
        if c is None:
            lines.append(f"  {u} -- {v};")
        else:
            col = c.colors[idx]
            pen = DOT_PALETTE[(col - 1) % len(DOT_PALETTE)]
            lines.append(f'  {u} -- {v} [label="{col}", color="{pen}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
