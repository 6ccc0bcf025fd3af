"""Walsh figure of merit of a digital net.

Two independent routes are provided:

* ``dual_enum`` sums 2^(-mu(X)) over the nonzero elements of the dual space,
  grouped by Dick weight;
* ``point_sum`` uses the character sum over the net's own elements,

      WAFOM(P) = -1 + 2^(-m) * sum_{B in P} prod_{i,j} (1 + (-1)^{B_ij} 2^(-j)),

  whose cost depends on dim P rather than on dim P^perp.

Both routes are accumulated exactly as dyadic rationals and rounded once, so
the float value is correctly rounded and tiny values keep full precision.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .dyadic import DyadicRational
from .f2core import DEFAULT_ENUM_CAP, Subspace, check_cap, dual, enumerate_bits
from .weights import max_weight, weight_distribution

_BYTE = 8


class WafomMethod(str, enum.Enum):
    DUAL_ENUM = "dual_enum"
    POINT_SUM = "point_sum"
    EXACT = "exact"


@dataclass(frozen=True)
class WafomValue:
    float_value: float
    log2_value: float
    method: WafomMethod
    exact: DyadicRational | None = None

    @classmethod
    def from_exact(cls, exact: DyadicRational, method: WafomMethod) -> WafomValue:
        if exact.numerator < 0:
            raise ArithmeticError(f"negative WAFOM {exact}; routes disagree with the definition")
        return cls(float(exact), exact.log2(), method, exact)


def _dual_sum(p: Subspace, cap: int) -> DyadicRational:
    d = dual(p)
    if d.dim == 0:
        return DyadicRational(0)
    top = max_weight(p.s, p.n)
    dist = weight_distribution(d, cap)
    numerator = sum(c << (top - w) for w, c in dist.counts.items() if w > 0)
    return DyadicRational(numerator, top)


def _factor_tables(s: int, n: int) -> list[list[int]]:
    # For each byte of the flat vector: table[v] = prod over the byte's cells
    # of (2^j + 1) if the bit is 0 else (2^j - 1).
    size = s * n
    tables = []
    for start in range(0, size, _BYTE):
        cols = [k % n + 1 for k in range(start, min(start + _BYTE, size))]
        table = []
        for v in range(1 << len(cols)):
            prod = 1
            for t, j in enumerate(cols):
                prod *= (1 << j) - 1 if (v >> t) & 1 else (1 << j) + 1
            table.append(prod)
        tables.append(table)
    return tables


def _point_sum(p: Subspace, cap: int) -> DyadicRational:
    check_cap(p.dim, cap)
    tables = _factor_tables(p.s, p.n)
    total = 0
    for x in enumerate_bits(p, cap):
        prod = 1
        for table in tables:
            prod *= table[x & 0xFF]
            x >>= _BYTE
        total += prod
    # every product carries the denominator 2^(s n(n+1)/2); the average adds 2^m
    exponent = max_weight(p.s, p.n) + p.dim
    return DyadicRational(total, exponent) - DyadicRational(1)


def wafom_exact(p: Subspace, via: WafomMethod | str = WafomMethod.DUAL_ENUM, cap: int = DEFAULT_ENUM_CAP) -> DyadicRational:
    """WAFOM(P) as an exact dyadic rational, computed by the requested route."""
    via = WafomMethod(via)
    if via is WafomMethod.DUAL_ENUM:
        check_cap(p.ambient_dim - p.dim, cap)
        return _dual_sum(p, cap)
    if via is WafomMethod.POINT_SUM:
        return _point_sum(p, cap)
    raise ValueError("wafom_exact route must be dual_enum or point_sum")


def wafom_dual(p: Subspace, cap: int = DEFAULT_ENUM_CAP) -> WafomValue:
    """WAFOM by summing over the nonzero elements of the dual space; 0 for the full space."""
    return WafomValue.from_exact(wafom_exact(p, WafomMethod.DUAL_ENUM, cap), WafomMethod.DUAL_ENUM)


def wafom_points(p: Subspace, cap: int = DEFAULT_ENUM_CAP) -> WafomValue:
    """WAFOM by the character sum over the 2^m elements of the net itself."""
    return WafomValue.from_exact(wafom_exact(p, WafomMethod.POINT_SUM, cap), WafomMethod.POINT_SUM)


def cheapest_route(p: Subspace) -> WafomMethod:
    """The route enumerating the smaller of P and its dual."""
    return WafomMethod.POINT_SUM if p.dim <= p.ambient_dim - p.dim else WafomMethod.DUAL_ENUM


def wafom(p: Subspace, method: WafomMethod | str = WafomMethod.EXACT, cap: int = DEFAULT_ENUM_CAP) -> WafomValue:
    """Dispatch on ``method``; ``exact`` picks the cheaper route and keeps the dyadic value."""
    method = WafomMethod(method)
    if method is WafomMethod.DUAL_ENUM:
        return wafom_dual(p, cap)
    if method is WafomMethod.POINT_SUM:
        return wafom_points(p, cap)
    return WafomValue.from_exact(wafom_exact(p, cheapest_route(p), cap), WafomMethod.EXACT)

