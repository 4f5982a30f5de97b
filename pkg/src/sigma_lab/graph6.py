import typing

import networkx as nx

from sigma_lab.graphs import Graph, from_networkx, to_networkx


__all__ = [
    "Graph6Error",
    "HEADER",
    "graph6_decode",
    "graph6_encode",
    "read_graph6_lines",
]


HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.message = message
        self.offset = offset


def _header(data: bytes) -> tuple[int, int]:
    """Return ``(n, position of the first edge byte)``."""
    if not data:
        raise Graph6Error("empty graph6 string", 0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) < 4:
        raise Graph6Error("truncated vertex count", len(data))
    if data[1] != 126:
        n = 0
        for byte in data[1:4]:
            n = n << 6 | (byte - 63)
        return n, 4
    if len(data) < 8:
        raise Graph6Error("truncated vertex count", len(data))
    n = 0
    for byte in data[2:8]:
        n = n << 6 | (byte - 63)
    return n, 8


def _validate(data: bytes) -> None:
    for offset, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(
                f"character {chr(byte)!r} is outside the graph6 range 63..126", offset
            )
    n, start = _header(data)
    expected = start + (n * (n - 1) // 2 + 5) // 6
    if len(data) != expected:
        raise Graph6Error(
            f"graph on {n} vertices needs {expected} bytes, got {len(data)}",
            min(len(data), expected),
        )


def graph6_decode(text: str | bytes) -> Graph:
    data = text.encode("utf-8") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(HEADER.encode()):
        data = data[len(HEADER) :]
    _validate(data)
    return from_networkx(nx.from_graph6_bytes(data))


def graph6_encode(graph: Graph) -> str:
    return nx.to_graph6_bytes(to_networkx(graph), header=False).decode().strip()


def read_graph6_lines(lines: typing.Iterable[str | bytes]) -> typing.Iterator[Graph]:
    """Decode a stream of graph6 lines lazily, skipping blanks and headers."""
    for number, line in enumerate(lines, start=1):
        stripped = line.strip()
        if isinstance(stripped, bytes):
            stripped = stripped.decode("ascii", "replace")
        if not stripped or stripped == HEADER:
            continue
        try:
            yield graph6_decode(stripped)
        except Graph6Error as exc:
            raise Graph6Error(f"line {number}: {exc.message}", exc.offset) from exc
