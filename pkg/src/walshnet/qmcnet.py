"""Digital nets as point sets in [0,1)^s, random nets, and QMC integration."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .f2core import DEFAULT_ENUM_CAP, Subspace, check_cap, enumerate_bits
from .weights import span_chunks

# float64 holds k / 2^n exactly only up to here
MAX_DIGITS = 53


@dataclass(frozen=True)
class PointSet:
    """Points of a digital net; ``digits[k, i] / 2^n`` is coordinate i of point k."""

    s: int
    n: int
    digits: np.ndarray

    @property
    def points(self) -> np.ndarray:
        return np.ldexp(self.digits.astype(np.float64), -self.n)

    def __len__(self) -> int:
        return self.digits.shape[0]

    def to_csv(self) -> str:
        lines = [",".join(f"x{i + 1}" for i in range(self.s))]
        for row in self.digits.tolist():
            lines.append(",".join(dyadic_decimal(k, self.n) for k in row))
        return "\n".join(lines) + "\n"


def dyadic_decimal(k: int, n: int) -> str:
    """Exact decimal expansion of k / 2^n for 0 <= k < 2^n."""
    if k == 0:
        return "0"
    digits = str(k * 5**n).rjust(n, "0")
    return ("0." + digits).rstrip("0")


def _row_digit(x: int, i: int, n: int) -> int:
    # row i (0-based) read as the binary fraction 0.x_{i,1} x_{i,2} ... x_{i,n}
    row = (x >> (i * n)) & ((1 << n) - 1)
    return int(format(row, f"0{n}b")[::-1], 2)


def to_points(p: Subspace, cap: int = DEFAULT_ENUM_CAP) -> PointSet:
    """Apply the digit map X -> (sum_j x_{ij} 2^(-j))_i to every element of ``p``."""
    check_cap(p.dim, cap)
    s, n = p.s, p.n
    if n > MAX_DIGITS:
        raise ValueError(f"n = {n} digits exceed float precision ({MAX_DIGITS})")
    if p.ambient_dim <= 64:
        blocks = []
        for chunk in span_chunks(p, cap):
            digits = np.zeros((chunk.size, s), dtype=np.int64)
            for i in range(s):
                for j in range(1, n + 1):
                    bit = (chunk >> np.uint64(i * n + j - 1)) & np.uint64(1)
                    digits[:, i] |= bit.astype(np.int64) << (n - j)
            blocks.append(digits)
        return PointSet(s, n, np.concatenate(blocks))
    rows = [[_row_digit(x, i, n) for i in range(s)] for x in enumerate_bits(p, cap)]
    return PointSet(s, n, np.array(rows, dtype=np.int64))


@dataclass(frozen=True)
class Integrand:
    """A test function on [0,1)^s with a closed-form integral.

    ``evaluate`` maps an (N, s) array of points to N values.
    """

    name: str
    s: int
    evaluate: Callable[[np.ndarray], np.ndarray]
    exact_integral: float


def _linear(x: np.ndarray) -> np.ndarray:
    return x.mean(axis=1)


def _product(x: np.ndarray) -> np.ndarray:
    return x.prod(axis=1)


def _expprod(x: np.ndarray) -> np.ndarray:
    return np.exp(x.sum(axis=1))


_BATTERY = {
    "const1": (lambda x: np.ones(x.shape[0]), lambda s: 1.0),
    "linear": (_linear, lambda s: 0.5),
    "product": (_product, lambda s: 0.5**s),
    "expprod": (_expprod, lambda s: math.expm1(1.0) ** s),
}

INTEGRAND_NAMES = tuple(_BATTERY)


def integrand(name: str, s: int) -> Integrand:
    """Look up a battery function: const1, linear (coordinate mean), product, expprod."""
    try:
        f, integral = _BATTERY[name]
    except KeyError:
        raise KeyError(f"unknown function {name!r}; choose from {', '.join(INTEGRAND_NAMES)}") from None
    return Integrand(name, s, f, integral(s))


def qmc_integrate(points: PointSet, f: Integrand) -> float:
    """Plain average of f over the point set."""
    if f.s != points.s:
        raise ValueError(f"function arity {f.s} does not match point dimension {points.s}")
    values = f.evaluate(points.points)
    return math.fsum(values.tolist()) / len(points)


def integration_error(p: Subspace, f: Integrand, cap: int = DEFAULT_ENUM_CAP) -> float:
    return abs(qmc_integrate(to_points(p, cap), f) - f.exact_integral)


def random_net(s: int, n: int, m: int, seed: int | random.Random) -> Subspace:
    """A random m-dimensional subspace of M_{s,n}(F2), reproducible from ``seed``.

    Random sn-bit vectors are drawn until m independent ones are found;
    dependent draws are discarded.
    """
    size = s * n
    if not 0 <= m <= size:
        raise ValueError(f"m = {m} outside [0, {size}]")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    rows: dict[int, int] = {}
    vectors = []
    while len(vectors) < m:
        v = rng.getrandbits(size)
        w = v
        while w:
            piv = (w & -w).bit_length() - 1
            if piv not in rows:
                rows[piv] = w
                vectors.append(v)
                break
            w ^= rows[piv]
    return Subspace.from_bits(s, n, vectors)


def derive_seeds(seed: int, count: int) -> list[int]:
    """Per-net seeds for batch generation, fixed by the master seed."""
    rng = random.Random(seed)
    return [rng.getrandbits(63) for _ in range(count)]
