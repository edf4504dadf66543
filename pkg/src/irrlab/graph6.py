"""Bit-exact graph6 encoding and decoding.

The short form (single header byte, n <= 62) covers every desk-scale
scan; the 4-byte '~' header extends writing/reading up to n <= 258047 so
that large chain constructions can still round-trip.  Upper-triangle bit
order: for column j = 1..n-1, rows i = 0..j-1; bits packed 6 per
character, zero padded, each 6-bit chunk emitted as chr(chunk + 63).
"""

from __future__ import annotations

from .errors import (
    MalformedHeaderError,
    NonPrintableByteError,
    TruncatedBitfieldError,
)
from .graphs import Graph, from_edge_list

_MAX_LONG_N = 258047  # 2^18 - 1, the 4-byte header limit


def write_graph6(g: Graph) -> str:
    """Encode a graph as a single graph6 line (no trailing newline)."""
    n = g.n
    if n > _MAX_LONG_N:
        raise MalformedHeaderError(f"n={n} exceeds the 4-byte graph6 header range")
    if n <= 62:
        header = chr(n + 63)
    else:
        header = "~" + "".join(
            chr(((n >> shift) & 0x3F) + 63) for shift in (12, 6, 0)
        )
    bits = 0
    nbits = n * (n - 1) // 2
    pos = 0
    adj = [[False] * n for _ in range(n)]
    for u, v in g.edges:
        adj[u][v] = adj[v][u] = True
    chunks = []
    for j in range(1, n):
        for i in range(j):
            bits = (bits << 1) | (1 if adj[i][j] else 0)
            pos += 1
            if pos % 6 == 0:
                chunks.append(chr((bits & 0x3F) + 63))
    if pos % 6:
        pad = 6 - pos % 6
        chunks.append(chr(((bits << pad) & 0x3F) + 63))
    return header + "".join(chunks)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (trailing newline tolerated)."""
    line = text.rstrip("\n")
    if not line:
        raise MalformedHeaderError("empty graph6 line")
    for ch in line:
        if not 63 <= ord(ch) <= 126:
            raise NonPrintableByteError(f"byte {ord(ch)} outside printable graph6 range")
    if line[0] == "~":
        if len(line) < 4:
            raise MalformedHeaderError("truncated 4-byte graph6 header")
        if line[1] == "~":
            raise MalformedHeaderError("8-byte graph6 header not supported")
        n = 0
        for ch in line[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        body = line[4:]
    else:
        n = ord(line[0]) - 63
        if n > 62:
            raise MalformedHeaderError(f"bad short-form header byte {line[0]!r}")
        body = line[1:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise TruncatedBitfieldError(f"need {need} body bytes for n={n}, got {len(body)}")
    if len(body) > need:
        raise TruncatedBitfieldError(f"trailing bytes after bitfield for n={n}")
    pairs = []
    pos = 0
    vals = [ord(ch) - 63 for ch in body]
    for j in range(1, n):
        for i in range(j):
            chunk = vals[pos // 6]
            if (chunk >> (5 - pos % 6)) & 1:
                pairs.append((i, j))
            pos += 1
    return from_edge_list(n, pairs)


def parse_graph6_lines(text: str) -> list:
    """Parse a multi-line graph6 payload, skipping blank lines."""
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]
