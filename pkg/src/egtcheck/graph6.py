"""Short-form graph6 reader and writer.

A record is one header byte ``63 + n`` followed by the upper-triangle bits
``x(0,1), x(0,2), x(1,2), x(0,3), ...`` packed six to a byte, most
significant bit first, each byte offset by 63. Only ``n <= 62`` is handled.
"""

from __future__ import annotations

import logging
from typing import IO, Iterable, Iterator

from .graph import Graph

log = logging.getLogger(__name__)

MAX_SHORT_N = 62
HEADER = b">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 record."""


def record_length(n: int) -> int:
    return 1 + (n * (n - 1) // 2 + 5) // 6


def upper_triangle_bits(g: Graph) -> int:
    """Column-major upper-triangle bits as an integer, first bit most significant."""
    bits = 0
    adj = g.adj
    for v in range(1, g.n):
        row = adj[v]
        for u in range(v):
            bits = bits << 1 | (row >> u & 1)
    return bits


def encode(g: Graph) -> bytes:
    """graph6 record for ``g`` under its current labelling (no newline)."""
    n = g.n
    if n > MAX_SHORT_N:
        raise Graph6Error(f"short-form graph6 holds at most {MAX_SHORT_N} vertices, got {n}")
    nbits = n * (n - 1) // 2
    groups = (nbits + 5) // 6
    bits = upper_triangle_bits(g) << (groups * 6 - nbits)
    body = bytes(63 + (bits >> (6 * (groups - 1 - i)) & 0x3F) for i in range(groups))
    return bytes([63 + n]) + body


def decode(record: bytes | str) -> Graph:
    """Parse one short-form record. Surrounding whitespace is ignored.

    Nonzero padding bits are tolerated with a logged warning.
    """
    if isinstance(record, str):
        record = record.encode("ascii")
    record = record.strip()
    if not record:
        raise Graph6Error("empty record")
    for i, byte in enumerate(record):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte!r} at offset {i} outside 63..126")
    n = record[0] - 63
    if n == MAX_SHORT_N + 1:
        raise Graph6Error("long-form graph6 (n > 62) is not supported")
    expected = record_length(n)
    if len(record) < expected:
        raise Graph6Error(f"truncated record: {len(record)} bytes, expected {expected}")
    if len(record) > expected:
        raise Graph6Error(f"trailing bytes: {len(record)} bytes, expected {expected}")
    nbits = n * (n - 1) // 2
    groups = expected - 1
    bits = 0
    for byte in record[1:]:
        bits = bits << 6 | (byte - 63)
    pad = groups * 6 - nbits
    if bits & ((1 << pad) - 1):
        log.warning("nonzero padding bits in graph6 record %r", record.decode("ascii"))
    bits >>= pad
    adj = [0] * n
    k = nbits
    for v in range(1, n):
        for u in range(v):
            k -= 1
            if bits >> k & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def read_lines(lines: Iterable[bytes | str]) -> Iterator[tuple[int, bytes]]:
    """Yield ``(line_number, record)`` for each non-blank record line.

    A leading ``>>graph6<<`` marker on a line is skipped.
    """
    for lineno, line in enumerate(lines, start=1):
        if isinstance(line, str):
            line = line.encode("ascii", errors="replace")
        line = line.strip()
        if line.startswith(HEADER):
            line = line[len(HEADER):]
        if line:
            yield lineno, line


def read_stream(stream: IO[bytes]) -> Iterator[Graph]:
    for lineno, record in read_lines(stream):
        try:
            yield decode(record)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from exc


def write_stream(stream: IO[bytes], graphs: Iterable[Graph]) -> int:
    count = 0
    for g in graphs:
        stream.write(encode(g) + b"\n")
        count += 1
    return count
