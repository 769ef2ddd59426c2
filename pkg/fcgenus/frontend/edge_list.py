"""
Edge-list text format.

One edge per line as two whitespace-separated non-negative integer labels;
equal labels make a loop and repeated lines make parallel edges. ``#`` starts
a comment, blank lines are skipped. Labels are densified in ascending order,
so vertex ids follow label order and edge ids follow line order.
"""

import logging
from pathlib import Path
from typing import List, Tuple, Union

from fcgenus.backend.errors import InvalidGraph, ParseError
from fcgenus.backend.graph.multigraph import Multigraph

logger = logging.getLogger("fcgenus.cli")


def _parse_label(token: str, line_number: int) -> int:
    if not (token.isascii() and token.isdecimal()):
        raise ParseError(f"vertex label {token!r} is not a non-negative integer", line_number)
    return int(token)


def parse_edge_list(text: str) -> Multigraph:
    """Parse edge-list text into a densified Multigraph carrying the original labels."""
    raw_edges: List[Tuple[int, int]] = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        tokens = content.split()
        if len(tokens) != 2:
            raise ParseError(f"expected two vertex labels, found {len(tokens)} token(s)", line_number)
        raw_edges.append((_parse_label(tokens[0], line_number), _parse_label(tokens[1], line_number)))

    if not raw_edges:
        raise InvalidGraph("edge list contains no edges")

    labels = sorted({label for edge in raw_edges for label in edge})
    index = {label: i for i, label in enumerate(labels)}
    g = Multigraph.from_edges(len(labels), [(index[u], index[v]) for u, v in raw_edges], labels)
    logger.debug("Edge list parsed", extra={"n_vertices": g.n_vertices, "n_edges": g.n_edges})
    return g


def read_edge_list(path: Union[str, Path]) -> Multigraph:
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise InvalidGraph(f"cannot read {path}: {e.strerror}", {"path": str(path)}) from e
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        line_number = data.count(b"\n", 0, e.start) + 1
        raise ParseError(f"invalid UTF-8 byte 0x{data[e.start]:02x}", line_number, {"path": str(path)}) from e
    return parse_edge_list(text)


def emit_edge_list(g: Multigraph) -> str:
    """One ``u v`` line per edge in edge-id order, using the graph's labels when present."""
    return "".join(f"{g.label_of(u)} {g.label_of(v)}\n" for u, v in g.edges)
