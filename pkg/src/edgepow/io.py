"""Graph file formats: a plain text edge list and a JSON object.

Text format: first non-comment line is "n m", followed by m lines "i j".
Lines starting with '#' and blank lines are ignored.  JSON format:
{"n": 4, "edges": [[1, 2], [3, 4]]}.  Both round-trip exactly.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import GraphInputError
from .graph import Graph


def parse_graph_text(text: str) -> Graph:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    edge_lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphInputError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphInputError(f"expected two integers, got {line!r}", lineno)
        if header is None:
            if a < 0 or b < 0:
                raise GraphInputError(f"header 'n m' must be nonnegative, got {line!r}", lineno)
            header = (a, b)
            continue
        edges.append((a, b))
        edge_lines.append(lineno)
    if header is None:
        raise GraphInputError("empty input: missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise GraphInputError(f"header declares {m} edges but {len(edges)} were given")
    return _build(n, edges, edge_lines)


def parse_graph_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphInputError(f"invalid JSON: {exc}")
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise GraphInputError('JSON graph must be an object with "n" and "edges"')
    n = data["n"]
    if not isinstance(n, int) or n < 0:
        raise GraphInputError(f'"n" must be a nonnegative integer, got {n!r}')
    raw_edges = data["edges"]
    if not isinstance(raw_edges, list):
        raise GraphInputError('"edges" must be a list of pairs')
    edges: list[tuple[int, int]] = []
    for k, item in enumerate(raw_edges):
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(x, int) for x in item)
        ):
            raise GraphInputError(f"edge #{k + 1} must be a pair of integers, got {item!r}")
        edges.append((item[0], item[1]))
    return _build(n, edges, None)


def _build(n: int, edges: list[tuple[int, int]], lines: list[int] | None) -> Graph:
    seen: set[tuple[int, int]] = set()
    for k, (i, j) in enumerate(edges):
        line = lines[k] if lines else None
        if i == j:
            raise GraphInputError(f"loop at vertex {i}", line)
        if not (1 <= i <= n and 1 <= j <= n):
            raise GraphInputError(f"edge ({i}, {j}) outside 1..{n}", line)
        e = (i, j) if i < j else (j, i)
        if e in seen:
            raise GraphInputError(f"duplicate edge ({i}, {j})", line)
        seen.add(e)
    return Graph(n, frozenset(seen))


def serialize_graph_text(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{i} {j}" for (i, j) in g.sorted_edges())
    return "\n".join(lines) + "\n"


def serialize_graph_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.sorted_edges()]})


def load_graph(path: str | Path) -> Graph:
    """Read a graph file, picking the format from the content.

    A file whose first non-whitespace character is '{' is parsed as JSON,
    anything else as the text format.
    """
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return parse_graph_json(text)
    return parse_graph_text(text)


def parse_inline_edges(spec: str, n: int | None = None) -> Graph:
    """Parse an inline edge list like "1-2,2-3,1-3"; n defaults to max label."""
    edges: list[tuple[int, int]] = []
    top = 0
    for chunk in spec.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split("-")
        if len(parts) != 2:
            raise GraphInputError(f"expected 'i-j', got {chunk!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphInputError(f"expected 'i-j' with integers, got {chunk!r}")
        edges.append((i, j))
        top = max(top, i, j)
    if not edges:
        raise GraphInputError("no edges in inline spec")
    return _build(n if n is not None else top, edges, None)
