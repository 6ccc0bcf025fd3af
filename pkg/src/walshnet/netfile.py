"""Text format for digital nets.

Line 1 is ``s n m``.  Then come m basis matrices, each as s lines of n
characters from {0,1} (character j of line i is x_{i,j}), separated by a
single blank line.  Lines end in LF and carry no trailing whitespace.
"""

from __future__ import annotations

import os
from pathlib import Path

from .f2core import F2Matrix, Subspace


class NetFormatError(ValueError):
    """Raised for a malformed net file."""


def format_net(p: Subspace) -> str:
    text = f"{p.s} {p.n} {p.dim}\n"
    if p.dim:
        text += "\n\n".join(str(x) for x in p.matrices()) + "\n"
    return text


def parse_net(text: str, source: str = "<string>") -> Subspace:
    def fail(msg: str) -> NetFormatError:
        return NetFormatError(f"{source}: {msg}")

    if "\r" in text:
        raise fail("lines must end in LF")
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise fail("empty file")
    header = lines[0].split(" ")
    if len(header) != 3 or not all(h.isdigit() for h in header):
        raise fail(f"bad header {lines[0]!r}, expected 's n m'")
    s, n, m = map(int, header)
    if s < 1 or n < 1 or m > s * n:
        raise fail(f"invalid shape s={s} n={n} m={m}")
    expected = 1 + m * s + max(m - 1, 0)
    if len(lines) != expected:
        raise fail(f"expected {expected} lines for {m} blocks of {s} rows, got {len(lines)}")
    vectors = []
    for k in range(m):
        start = 1 + k * (s + 1)
        rows = lines[start:start + s]
        if k < m - 1 and lines[start + s] != "":
            raise fail(f"block {k + 1} not followed by a blank line")
        for offset, row in enumerate(rows):
            if len(row) != n or set(row) - {"0", "1"}:
                raise fail(f"line {start + offset + 1}: expected {n} characters from 0/1, got {row!r}")
        vectors.append(F2Matrix.from_rows([[int(c) for c in row] for row in rows]).bits)
    p = Subspace.from_bits(s, n, vectors)
    if p.dim != m:
        raise fail(f"the {m} basis matrices are linearly dependent (rank {p.dim})")
    return p


def read_net(path: str | os.PathLike) -> Subspace:
    path = Path(path)
    try:
        text = path.read_text(encoding="ascii")
    except UnicodeDecodeError as exc:
        raise NetFormatError(f"{path}: not an ASCII net file") from exc
    return parse_net(text, str(path))


def write_net(p: Subspace, path: str | os.PathLike) -> None:
    Path(path).write_text(format_net(p), encoding="ascii", newline="\n")
