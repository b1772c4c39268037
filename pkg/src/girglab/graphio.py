"""Graph persistence: tab-separated vertex-attribute and edge files.

``export_graph(g, base)`` writes ``<base>.vertices.tsv`` (header, then one
line per vertex: id, weight, coordinates) and ``<base>.edges.tsv`` (header,
then one line per edge with u < v, sorted).  Floats are written with 17
significant digits, so a round-trip through the files is bit-exact.
"""

from __future__ import annotations

import math
import os
from pathlib import Path

import numpy as np

from .graph import GirgGraph

__all__ = ["GraphFormatError", "export_graph", "import_graph", "vertex_path", "edge_path"]


class GraphFormatError(ValueError):
    """Malformed graph file; the message names the file and line."""


def _fmt(x: float) -> str:
    return format(x, ".17g")


def vertex_path(base) -> Path:
    return Path(str(base) + ".vertices.tsv")


def edge_path(base) -> Path:
    return Path(str(base) + ".edges.tsv")


def export_graph(g: GirgGraph, base) -> tuple[Path, Path]:
    """Write the two files for ``g``; returns their paths."""
    vp, ep = vertex_path(base), edge_path(base)
    d = g.dimension
    header = "id\tweight\t" + "\t".join(f"coord_{i + 1}" for i in range(d))
    with open(vp, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(header + "\n")
        for v in range(g.n):
            coords = "\t".join(_fmt(c) for c in g.positions[v])
            fh.write(f"{v}\t{_fmt(g.weights[v])}\t{coords}\n")
    ea = g.edge_array()
    with open(ep, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("u\tv\n")
        for u, v in ea:
            fh.write(f"{u}\t{v}\n")
    return vp, ep


def _fail(path, lineno, msg):
    raise GraphFormatError(f"{os.fspath(path)}:{lineno}: {msg}")


def import_graph(base) -> GirgGraph:
    """Read a graph written by export_graph; validates both files and reports
    the offending line on failure."""
    vp, ep = vertex_path(base), edge_path(base)
    weights = []
    coords = []
    with open(vp, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines:
        _fail(vp, 1, "empty vertex file")
    ncols = None
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split("\t")
        if ncols is None:
            ncols = len(parts)
            if ncols < 3:
                _fail(vp, lineno, "expected id, weight and at least one coordinate")
        elif len(parts) != ncols:
            _fail(vp, lineno, f"expected {ncols} columns, found {len(parts)}")
        try:
            vid = int(parts[0])
            wt = float(parts[1])
            cs = [float(p) for p in parts[2:]]
        except ValueError:
            _fail(vp, lineno, "unparsable numeric field")
        if vid != lineno - 2:
            _fail(vp, lineno, f"vertex ids must be consecutive from 0; found {vid}")
        if not (wt > 0):
            _fail(vp, lineno, f"weight must be positive; found {parts[1]}")
        for c in cs:
            if not (math.isnan(c) or 0.0 <= c < 1.0):
                _fail(vp, lineno, f"coordinate out of [0,1): {c!r}")
        weights.append(wt)
        coords.append(cs)
    n = len(weights)
    if n == 0:
        _fail(vp, 2, "no vertex lines after the header")
    positions = np.asarray(coords, dtype=np.float64).reshape(n, -1)

    eu, ev = [], []
    with open(ep, "r", encoding="utf-8") as fh:
        elines = fh.read().splitlines()
    if not elines:
        _fail(ep, 1, "empty edge file")
    prev = (-1, -1)
    for lineno, line in enumerate(elines[1:], start=2):
        parts = line.split("\t")
        if len(parts) != 2:
            _fail(ep, lineno, f"expected 2 columns, found {len(parts)}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            _fail(ep, lineno, "unparsable vertex id")
        if not (0 <= u < n and 0 <= v < n):
            _fail(ep, lineno, f"edge ({u},{v}) out of range for n={n}")
        if u >= v:
            _fail(ep, lineno, f"edges must satisfy u < v; found ({u},{v})")
        if (u, v) == prev:
            _fail(ep, lineno, f"duplicate edge ({u},{v})")
        if (u, v) < prev:
            _fail(ep, lineno, f"edges out of order at ({u},{v})")
        prev = (u, v)
        eu.append(u)
        ev.append(v)
    return GirgGraph.from_edges(n, np.asarray(weights), positions, eu, ev)
