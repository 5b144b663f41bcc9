"""Graph files and compact graph specs.

A graph file is JSON ``{"order": n, "edges": [[u, v], ...]}``. Wherever a
graph is expected, the CLI and suite files also accept a spec string:

* ``cycle:6``, ``complete_bipartite:3,3``, ``petersen`` (a family and its parameters)
* ``complement(<spec>)``, ``line(<spec>)``
* a path to a graph file
"""

from __future__ import annotations

import json
import os
import re
from pathlib import Path

from .errors import GraphError, GraphIOError, ParameterError
from .graph import FAMILIES, Graph, complement, line_graph, make_family


def read_graph(path: str | os.PathLike) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GraphIOError(f"{path}: {exc.strerror or exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"{path}:{exc.lineno}:{exc.colno}: malformed JSON: {exc.msg}") from exc
    try:
        return Graph.from_json(data)
    except GraphError as exc:
        raise GraphError(f"{path}: {exc}") from exc


def write_graph(g: Graph, path: str | os.PathLike) -> None:
    try:
        Path(path).write_text(json.dumps(g.to_json()) + "\n")
    except OSError as exc:
        raise GraphIOError(f"{path}: {exc.strerror or exc}") from exc


_WRAPPED = re.compile(r"^(complement|line)\((.*)\)$")


def parse_graph(spec) -> Graph:
    """Resolve a spec string, a graph JSON object, or a ``Graph``."""
    if isinstance(spec, Graph):
        return spec
    if isinstance(spec, dict):
        return Graph.from_json(spec)
    if not isinstance(spec, str):
        raise ParameterError(f"cannot read a graph from {spec!r}")
    s = spec.strip()
    wrapped = _WRAPPED.match(s)
    if wrapped:
        inner = parse_graph(wrapped.group(2))
        return complement(inner) if wrapped.group(1) == "complement" else line_graph(inner)
    name, _, rest = s.partition(":")
    if name in FAMILIES:
        try:
            params = [int(p) for p in rest.split(",")] if rest else []
        except ValueError:
            raise ParameterError(f"family parameters must be integers: {spec!r}") from None
        return make_family(name, *params)
    if os.path.exists(s) or os.sep in s or s.endswith(".json"):
        return read_graph(s)
    raise ParameterError(f"{spec!r} is neither a known family nor an existing file")
