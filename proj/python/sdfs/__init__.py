"""Space-efficient depth-first search and its graph applications."""

from ._sdfs import (
    CyclicGraphError,
    Graph,
    GraphError,
    ModeError,
    ParseError,
    UnknownEdgeError,
    bridges,
    components,
    cut_vertices,
    dfs,
    format_events,
    query,
    scc,
    toposort,
)

__all__ = [
    "CyclicGraphError",
    "Graph",
    "GraphError",
    "ModeError",
    "ParseError",
    "UnknownEdgeError",
    "bridges",
    "components",
    "cut_vertices",
    "dfs",
    "format_events",
    "query",
    "scc",
    "toposort",
]
