"""Dick weight, minimum weight of a subspace, and weight distributions."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .f2core import (
    DEFAULT_ENUM_CAP,
    F2Matrix,
    Subspace,
    check_cap,
    gray_steps,
)

# elements are materialised in blocks of 2^CHUNK_DIM
CHUNK_DIM = 16
_MAX_WEIGHT_BOUND = 2**62


def max_weight(s: int, n: int) -> int:
    """Largest possible Dick weight in M_{s,n}(F2), s * n(n+1)/2."""
    w = s * n * (n + 1) // 2
    if w >= _MAX_WEIGHT_BOUND:
        raise OverflowError(f"weights of a {s}x{n} matrix do not fit a machine integer")
    return w


def weight_of_bits(bits: int, n: int) -> int:
    w = 0
    while bits:
        low = bits & -bits
        w += (low.bit_length() - 1) % n + 1
        bits ^= low
    return w


def dick_weight(x: F2Matrix) -> int:
    """Sum of j * x_{ij} over all cells, taken in the integers."""
    return weight_of_bits(x.bits, x.n)


def _column_masks(s: int, n: int) -> list[int]:
    return [sum(1 << (i * n + j) for i in range(s)) for j in range(n)]


def span_chunks(p: Subspace, cap: int = DEFAULT_ENUM_CAP) -> Iterator[np.ndarray]:
    """Yield the elements of ``p`` as uint64 arrays, covering the span exactly once.

    Elements appear in Gray-code order within a chunk; the first chunk starts at O.
    Requires sn <= 64.
    """
    check_cap(p.dim, cap)
    if p.ambient_dim > 64:
        raise ValueError("vectorised enumeration needs sn <= 64")
    low, high = p.basis[:CHUNK_DIM], p.basis[CHUNK_DIM:]
    block = np.zeros(1, dtype=np.uint64)
    for b in low:
        block = np.concatenate([block, block[::-1] ^ np.uint64(b)])
    offset = 0
    yield block
    for t in gray_steps(len(high)):
        offset ^= high[t]
        yield block ^ np.uint64(offset)


def weights_array(xs: np.ndarray, s: int, n: int) -> np.ndarray:
    """Dick weights of an array of flat uint64 matrices."""
    out = np.zeros(xs.shape, dtype=np.int64)
    for j, mask in enumerate(_column_masks(s, n), start=1):
        out += j * np.bitwise_count(xs & np.uint64(mask)).astype(np.int64)
    return out


def iter_weights(p: Subspace, cap: int = DEFAULT_ENUM_CAP) -> Iterator[tuple[int, int]]:
    """Gray-code walk over ``p`` yielding (element bits, Dick weight).

    The weight is updated incrementally: XOR with basis vector b adds the
    weight of the cells b switches on and removes the weight of those it
    switches off.
    """
    check_cap(p.dim, cap)
    n = p.n
    x, w = 0, 0
    yield x, w
    for t in gray_steps(p.dim):
        b = p.basis[t]
        w += weight_of_bits(b & ~x, n) - weight_of_bits(b & x, n)
        x ^= b
        yield x, w


def min_weight(d: Subspace, cap: int = DEFAULT_ENUM_CAP) -> int:
    """Smallest Dick weight over the nonzero elements of ``d``."""
    if d.dim == 0:
        raise ValueError("minimum weight of the zero space is undefined (primal net is the full space)")
    check_cap(d.dim, cap)
    best = max_weight(d.s, d.n) + 1
    if d.ambient_dim <= 64:
        for chunk in span_chunks(d, cap):
            w = weights_array(chunk, d.s, d.n)
            w = w[chunk != 0]
            if w.size:
                best = min(best, int(w.min()))
            if best == 1:
                break
    else:
        for x, w in iter_weights(d, cap):
            if x and w < best:
                best = w
                if best == 1:
                    break
    return best


@dataclass
class WeightDistribution:
    s: int
    n: int
    counts: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def min_positive(self) -> int | None:
        keys = [w for w, c in self.counts.items() if w > 0 and c]
        return min(keys) if keys else None

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["weight", "count"])
        for w in sorted(self.counts):
            writer.writerow([w, self.counts[w]])
        return buf.getvalue()


def weight_distribution(d: Subspace, cap: int = DEFAULT_ENUM_CAP) -> WeightDistribution:
    """Number of elements of ``d`` at each Dick weight (the zero matrix included)."""
    check_cap(d.dim, cap)
    top = max_weight(d.s, d.n)
    if d.ambient_dim <= 64:
        hist = np.zeros(top + 1, dtype=np.int64)
        for chunk in span_chunks(d, cap):
            hist += np.bincount(weights_array(chunk, d.s, d.n), minlength=top + 1)
        counts = {w: int(c) for w, c in enumerate(hist) if c}
    else:
        counts = {}
        for _, w in iter_weights(d, cap):
            counts[w] = counts.get(w, 0) + 1
    return WeightDistribution(d.s, d.n, dict(sorted(counts.items())))

