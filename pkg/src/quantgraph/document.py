"""JSON graph documents.

::

    {
      "edges": [{"length": 1.0}, {"length": 1.0}],
      "vertices": [[1, 2, 3, 4]],
      "conditions": {"builtin": "figure8_theta"}
    }

``conditions`` may instead be ``{"matrices": [M_1, ..., M_V]}`` with one
matrix per vertex, rows of ``[re, im]`` pairs, in the vertex's endpoint order.
Matrix documents describe a theta-independent (constant) family.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import numpy as np

from .errors import DocumentError, QuantGraphError
from .graph_core import EdgeGeom, MetricGraph
from .vertex_ops import ConditionFamily, VertexUnitary, constant_family, family_figure_eight

BUILTINS = ("figure8_theta",)


@dataclass(frozen=True, eq=False)
class GraphDocument:
    graph: MetricGraph
    builtin: str | None = None
    matrices: tuple[VertexUnitary, ...] | None = None

    def family(self) -> ConditionFamily:
        if self.builtin == "figure8_theta":
            return family_figure_eight()
        return constant_family(self.matrices)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "edges": [{"length": e.length} for e in self.graph.edges],
            "vertices": [list(v) for v in self.graph.vertex_partition],
        }
        if self.builtin is not None:
            out["conditions"] = {"builtin": self.builtin}
        else:
            out["conditions"] = {
                "matrices": [
                    [[[float(z.real), float(z.imag)] for z in row] for row in S.matrix] for S in self.matrices
                ]
            }
        return out


def figure_eight_document(l1: float = 1.0, l2: float = 1.0) -> GraphDocument:
    graph = MetricGraph((EdgeGeom(l1), EdgeGeom(l2)), ((1, 2, 3, 4),))
    return GraphDocument(graph, builtin="figure8_theta")


def _fail(where: str, msg: str) -> DocumentError:
    return DocumentError(f"{where}: {msg}")


def _parse_matrix(raw, where: str) -> np.ndarray:
    if not isinstance(raw, list) or not raw:
        raise _fail(where, "expected a non-empty list of rows")
    rows = []
    for i, row in enumerate(raw):
        if not isinstance(row, list):
            raise _fail(f"{where}[{i}]", "expected a list of [re, im] entries")
        entries = []
        for j, z in enumerate(row):
            if (
                not isinstance(z, list)
                or len(z) != 2
                or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in z)
            ):
                raise _fail(f"{where}[{i}][{j}]", "expected [re, im] pair of numbers")
            entries.append(complex(z[0], z[1]))
        rows.append(entries)
    if any(len(r) != len(rows) for r in rows):
        raise _fail(where, "matrix is not square")
    return np.array(rows, dtype=complex)


def parse_document(data: Any) -> GraphDocument:
    if not isinstance(data, dict):
        raise _fail("document", "top level must be an object")
    for key in ("edges", "vertices", "conditions"):
        if key not in data:
            raise _fail("document", f"missing field {key!r}")
    edges_raw = data["edges"]
    if not isinstance(edges_raw, list) or not edges_raw:
        raise _fail("edges", "expected a non-empty list")
    edges = []
    for i, e in enumerate(edges_raw):
        if not isinstance(e, dict) or "length" not in e:
            raise _fail(f"edges[{i}]", "expected an object with a 'length'")
        length = e["length"]
        if not isinstance(length, (int, float)) or isinstance(length, bool):
            raise _fail(f"edges[{i}].length", "expected a number")
        try:
            edges.append(EdgeGeom(length))
        except QuantGraphError as exc:
            raise _fail(f"edges[{i}].length", str(exc)) from None
    vertices = data["vertices"]
    if not isinstance(vertices, list) or not all(
        isinstance(v, list) and all(isinstance(j, int) and not isinstance(j, bool) for j in v) for v in vertices
    ):
        raise _fail("vertices", "expected a list of lists of endpoint indices")
    try:
        graph = MetricGraph(tuple(edges), tuple(tuple(v) for v in vertices))
    except QuantGraphError as exc:
        raise _fail("vertices", str(exc)) from None

    cond = data["conditions"]
    if not isinstance(cond, dict) or len(cond) != 1 or not ({"builtin", "matrices"} & set(cond)):
        raise _fail("conditions", "expected exactly one of 'builtin' or 'matrices'")
    if "builtin" in cond:
        name = cond["builtin"]
        if name not in BUILTINS:
            raise _fail("conditions.builtin", f"unknown builtin {name!r}; known: {', '.join(BUILTINS)}")
        if graph.n_edges != 2 or graph.vertex_partition != ((1, 2, 3, 4),):
            raise _fail("conditions.builtin", "figure8_theta needs two edges and the single vertex [1, 2, 3, 4]")
        return GraphDocument(graph, builtin=name)

    mats = cond["matrices"]
    if not isinstance(mats, list) or len(mats) != len(graph.vertex_partition):
        raise _fail("conditions.matrices", f"expected {len(graph.vertex_partition)} matrices, one per vertex")
    out = []
    for m, (raw, vertex) in enumerate(zip(mats, graph.vertex_partition)):
        where = f"conditions.matrices[{m}]"
        arr = _parse_matrix(raw, where)
        if arr.shape[0] != len(vertex):
            raise _fail(where, f"vertex has degree {len(vertex)} but matrix is {arr.shape[0]}x{arr.shape[0]}")
        try:
            out.append(VertexUnitary(arr))
        except QuantGraphError as exc:
            raise _fail(where, str(exc)) from None
    return GraphDocument(graph, matrices=tuple(out))


def loads(text: str) -> GraphDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return parse_document(data)


def load(path: str | Path) -> GraphDocument:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DocumentError(f"cannot read graph document {path}: {exc.strerror}") from None
    try:
        return loads(text)
    except DocumentError as exc:
        raise DocumentError(f"{path}: {exc}") from None


def dumps(doc: GraphDocument) -> str:
    return json.dumps(doc.to_dict(), indent=2) + "\n"
