"""Bit-packed linear algebra over F2 for s x n matrices.

A matrix X = (x_{i,j}) with 1 <= i <= s, 1 <= j <= n is flattened row-major:
entry (i, j) lives at flat index ``(i - 1) * n + (j - 1)``, and flat index k
is bit k of a Python int.  Subspaces are kept in reduced row-echelon form
over the flat coordinates, where the pivot of a vector is its lowest set
flat index.  Two subspaces are equal iff their basis tuples are equal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

DEFAULT_ENUM_CAP = 30
DEFAULT_SUBSPACE_CAP = 12


class ShapeError(ValueError):
    """Raised when matrices or subspaces of different shapes are combined."""


class EnumerationCapError(RuntimeError):
    """Raised when an exhaustive enumeration would exceed its configured cap."""


def _check_shape(s: int, n: int) -> None:
    if s < 1 or n < 1:
        raise ShapeError(f"shape must be positive, got s={s}, n={n}")


@dataclass(frozen=True)
class F2Matrix:
    """One element of M_{s,n}(F2), stored as an sn-bit integer."""

    s: int
    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        _check_shape(self.s, self.n)
        if self.bits < 0 or self.bits >> (self.s * self.n):
            raise ValueError(f"bits 0x{self.bits:x} do not fit a {self.s}x{self.n} matrix")

    @classmethod
    def zeros(cls, s: int, n: int) -> F2Matrix:
        return cls(s, n, 0)

    @classmethod
    def unit(cls, s: int, n: int, i: int, j: int) -> F2Matrix:
        """The one-hot matrix with a single 1 at row i, column j (1-based)."""
        if not (1 <= i <= s and 1 <= j <= n):
            raise IndexError(f"cell ({i}, {j}) outside a {s}x{n} matrix")
        return cls(s, n, 1 << flat_index(n, i, j))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> F2Matrix:
        s = len(rows)
        if s == 0:
            raise ShapeError("matrix needs at least one row")
        n = len(rows[0])
        bits = 0
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ShapeError("ragged rows")
            for j, x in enumerate(row):
                if x not in (0, 1):
                    raise ValueError(f"entry {x!r} is not a bit")
                if x:
                    bits |= 1 << (i * n + j)
        return cls(s, n, bits)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.s, self.n)

    def entry(self, i: int, j: int) -> int:
        return (self.bits >> flat_index(self.n, i, j)) & 1

    def rows(self) -> list[list[int]]:
        n = self.n
        return [[(self.bits >> (i * n + j)) & 1 for j in range(n)] for i in range(self.s)]

    def is_zero(self) -> bool:
        return self.bits == 0

    def __add__(self, other: F2Matrix) -> F2Matrix:
        _same_shape(self, other)
        return F2Matrix(self.s, self.n, self.bits ^ other.bits)

    def __str__(self) -> str:
        return "\n".join("".join(map(str, row)) for row in self.rows())


def flat_index(n: int, i: int, j: int) -> int:
    """Flat bit position of the 1-based cell (i, j) in a matrix with n columns."""
    return (i - 1) * n + (j - 1)


def _same_shape(a, b) -> None:
    if (a.s, a.n) != (b.s, b.n):
        raise ShapeError(f"shape mismatch: {a.s}x{a.n} vs {b.s}x{b.n}")


def inner_product(x: F2Matrix, y: F2Matrix) -> int:
    """Entrywise F2 inner product, sum of x_{ij} y_{ij} mod 2."""
    _same_shape(x, y)
    return (x.bits & y.bits).bit_count() & 1


def _rref(vectors: Iterable[int]) -> tuple[int, ...]:
    # pivot -> row; a row's pivot is its lowest set bit
    rows: dict[int, int] = {}
    for v in vectors:
        while v:
            p = (v & -v).bit_length() - 1
            row = rows.get(p)
            if row is None:
                rows[p] = v
                break
            v ^= row
    pivots = sorted(rows)
    # back-substitute from the highest pivot down so pivot columns are clean
    for idx in range(len(pivots) - 1, -1, -1):
        p = pivots[idx]
        row = rows[p]
        for q in pivots[idx + 1:]:
            if (row >> q) & 1:
                row ^= rows[q]
        rows[p] = row
    return tuple(rows[p] for p in pivots)


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of M_{s,n}(F2) with a canonical RREF basis.

    ``basis`` holds the flat bit vectors; build instances through
    :func:`canonicalize` (or :meth:`from_bits`) so the basis is reduced.
    """

    s: int
    n: int
    basis: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        _check_shape(self.s, self.n)
        if _rref(self.basis) != tuple(self.basis):
            raise ValueError("basis is not in reduced row-echelon form")

    @classmethod
    def from_bits(cls, s: int, n: int, vectors: Iterable[int]) -> Subspace:
        _check_shape(s, n)
        vectors = list(vectors)
        top = s * n
        for v in vectors:
            if v < 0 or v >> top:
                raise ValueError(f"vector 0x{v:x} does not fit a {s}x{n} matrix")
        return cls(s, n, _rref(vectors))

    @classmethod
    def zero(cls, s: int, n: int) -> Subspace:
        return cls(s, n, ())

    @classmethod
    def full(cls, s: int, n: int) -> Subspace:
        return cls(s, n, tuple(1 << k for k in range(s * n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def ambient_dim(self) -> int:
        return self.s * self.n

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple((v & -v).bit_length() - 1 for v in self.basis)

    def matrices(self) -> list[F2Matrix]:
        return [F2Matrix(self.s, self.n, v) for v in self.basis]

    def contains(self, x: F2Matrix | int) -> bool:
        v = x.bits if isinstance(x, F2Matrix) else x
        for b in self.basis:
            p = (b & -b).bit_length() - 1
            if (v >> p) & 1:
                v ^= b
        return v == 0


def canonicalize(vectors: Sequence[F2Matrix], s: int | None = None, n: int | None = None) -> Subspace:
    """Span of ``vectors`` in canonical RREF form.

    The shape is taken from the inputs; pass ``s`` and ``n`` explicitly to
    canonicalize an empty list.
    """
    if not vectors:
        if s is None or n is None:
            raise ShapeError("shape is required to canonicalize an empty list")
        return Subspace.zero(s, n)
    first = vectors[0]
    if (s is not None and s != first.s) or (n is not None and n != first.n):
        raise ShapeError("explicit shape disagrees with the vectors")
    for v in vectors[1:]:
        _same_shape(first, v)
    return Subspace(first.s, first.n, _rref(v.bits for v in vectors))


def dual(p: Subspace) -> Subspace:
    """Orthogonal complement of ``p`` under the entrywise inner product."""
    size = p.ambient_dim
    pivots = p.pivots
    pivot_set = set(pivots)
    kernel = []
    for f in range(size):
        if f in pivot_set:
            continue
        v = 1 << f
        for piv, row in zip(pivots, p.basis):
            if (row >> f) & 1:
                v |= 1 << piv
        kernel.append(v)
    return Subspace(p.s, p.n, _rref(kernel))


def span_sum(a: Subspace, b: Subspace) -> Subspace:
    _same_shape(a, b)
    return Subspace(a.s, a.n, _rref(a.basis + b.basis))


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """A ∩ B, computed as the dual of dual(A) + dual(B)."""
    _same_shape(a, b)
    return dual(span_sum(dual(a), dual(b)))


def gray_steps(dim: int) -> Iterator[int]:
    """Index of the basis vector toggled at each step of the reflected Gray code."""
    for k in range(1, 1 << dim):
        yield (k & -k).bit_length() - 1


def check_cap(dim: int, cap: int) -> None:
    if dim > cap:
        raise EnumerationCapError(f"subspace of dimension {dim} exceeds enumeration cap 2^{cap}")


def enumerate_bits(p: Subspace, cap: int = DEFAULT_ENUM_CAP) -> Iterator[int]:
    """All 2^dim elements of ``p`` as flat ints, in Gray-code order from O."""
    check_cap(p.dim, cap)
    basis = p.basis
    x = 0
    yield x
    for t in gray_steps(p.dim):
        x ^= basis[t]
        yield x


def iter_elements(p: Subspace, cap: int = DEFAULT_ENUM_CAP) -> Iterator[F2Matrix]:
    """Stream every element of ``p`` exactly once; consecutive ones differ by one basis vector."""
    s, n = p.s, p.n
    for x in enumerate_bits(p, cap):
        yield F2Matrix(s, n, x)


def gaussian_binomial(size: int, k: int) -> int:
    """Number of k-dimensional subspaces of F2^size."""
    if k < 0 or k > size:
        return 0
    num = den = 1
    for t in range(k):
        num *= (1 << (size - t)) - 1
        den *= (1 << (t + 1)) - 1
    return num // den


def enumerate_subspaces(s: int, n: int, m: int, cap: int = DEFAULT_SUBSPACE_CAP) -> Iterator[Subspace]:
    """Every m-dimensional subspace of M_{s,n}(F2), each exactly once.

    Walks all RREF matrices: a pivot set, then every assignment of the free
    cells (non-pivot columns to the right of each row's pivot).
    """
    _check_shape(s, n)
    size = s * n
    if size > cap:
        raise EnumerationCapError(f"sn = {size} exceeds subspace enumeration cap {cap}")
    if not 0 <= m <= size:
        raise ValueError(f"m = {m} outside [0, {size}]")
    for pivots in itertools.combinations(range(size), m):
        pivot_set = set(pivots)
        free = [[c for c in range(p + 1, size) if c not in pivot_set] for p in pivots]
        cells = [(r, c) for r, cols in enumerate(free) for c in cols]
        for assignment in range(1 << len(cells)):
            rows = [1 << p for p in pivots]
            a = assignment
            for r, c in cells:
                if a & 1:
                    rows[r] |= 1 << c
                a >>= 1
            yield Subspace(s, n, tuple(rows))

