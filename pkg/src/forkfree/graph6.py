"""graph6 codec (the format emitted by nauty's geng and most other generators)."""

from __future__ import annotations

import gzip
from functools import lru_cache
from collections.abc import Iterable, Iterator
from pathlib import Path
from typing import BinaryIO

from .graph import MAX_VERTICES, Graph, GraphError, _trusted

HEADER = b">>graph6<<"


class Graph6Error(GraphError):
    pass


def _encode_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])


def to_graph6(g: Graph) -> bytes:
    """Encode without header or trailing newline."""
    out = bytearray(_encode_size(g.n))
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


@lru_cache(maxsize=None)
def _pairs(n: int) -> tuple[tuple[int, int], ...]:
    """Upper-triangle pairs (i, j), i < j, in graph6 column order."""
    return tuple((i, j) for j in range(1, n) for i in range(j))


def parse_graph6(line: bytes | str) -> Graph:
    data = line.encode("ascii") if isinstance(line, str) else bytes(line)
    data = data.rstrip(b"\r\n")
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    if not data:
        raise Graph6Error("empty graph6 record")
    for b in data:
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b} outside the graph6 range 63..126")
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    else:
        if len(data) < 4 or data[1] == 126:
            raise Graph6Error("unsupported or truncated graph6 size field")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
    if n > MAX_VERTICES:
        raise Graph6Error(f"graph6 record has {n} vertices, limit is {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    body = data[pos:]
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"graph6 payload has {len(body)} bytes, expected {(nbits + 5) // 6}")
    acc = 0
    for byte in body:
        acc = (acc << 6) | (byte - 63)
    pad = 6 * len(body) - nbits
    if acc & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits in graph6 payload")
    acc >>= pad
    pairs = _pairs(n)
    rows = [0] * n
    while acc:
        low = acc & -acc
        i, j = pairs[nbits - low.bit_length()]
        rows[i] |= 1 << j
        rows[j] |= 1 << i
        acc ^= low
    return _trusted(n, rows)


def iter_graph6(stream: Iterable[bytes | str]) -> Iterator[Graph]:
    """Parse one graph per line, skipping blank lines and a bare header line."""
    for raw in stream:
        line = raw.encode("ascii") if isinstance(raw, str) else raw
        line = line.strip()
        if not line or line == HEADER:
            continue
        yield parse_graph6(line)


def open_graph6(path: str | Path) -> BinaryIO:
    path = Path(path)
    if path.suffix == ".gz":
        return gzip.open(path, "rb")
    return open(path, "rb")


def read_graph6_file(path: str | Path) -> Iterator[Graph]:
    with open_graph6(path) as fh:
        yield from iter_graph6(fh)


def write_graph6(graphs: Iterable[Graph], fh: BinaryIO) -> int:
    count = 0
    for g in graphs:
        fh.write(to_graph6(g) + b"\n")
        count += 1
    return count
