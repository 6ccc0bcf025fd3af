"""Upper bounds on the dual minimum weight and the resulting WAFOM lower bound.

For an m-dimensional net P in M_{s,n}(F2), write m = s*q + r with 0 <= r < s.
The staircase space W (free cells in columns 1..q+1 of rows 1..r+1 and in
columns 1..q of the remaining rows) has dimension s*q + r + 1 = m + 1, so it
meets every P^perp (of dimension sn - m) nontrivially.  Every element of W
has Dick weight at most s*q(q+1)/2 + (q+1)(r+1), which bounds delta(P^perp),
and WAFOM(P) >= 2^(-delta) >= 2^(-C' m^2 / s) once m/s is large enough.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from fractions import Fraction

from .dyadic import DyadicRational
from .f2core import DEFAULT_ENUM_CAP, F2Matrix, Subspace, dual, flat_index, intersect
from .wafom import cheapest_route, wafom_exact
from .weights import min_weight

REPORT_FIELDS = (
    "s",
    "n",
    "m",
    "c_prime",
    "delta",
    "delta_bound",
    "wafom",
    "wafom_exact",
    "wafom_log2",
    "lower_bound_log2",
    "threshold_ok",
    "wfdelta_ok",
    "lemma_ok",
    "theorem_ok",
)


@dataclass(frozen=True)
class QRDecomposition:
    m: int
    s: int
    q: int
    r: int


def _check_positive(**values: int) -> None:
    for name, v in values.items():
        if v < 1:
            raise ValueError(f"{name} must be a positive integer, got {v}")


def _check_c_prime(c_prime: float) -> None:
    if not c_prime > 0.5:
        raise ValueError(f"C' must exceed 1/2, got {c_prime}")


def qr_decompose(m: int, s: int) -> QRDecomposition:
    """The unique (q, r) with m = s*q + r and 0 <= r < s."""
    _check_positive(m=m, s=s)
    q, r = divmod(m, s)
    return QRDecomposition(m, s, q, r)


def delta_upper_bound(s: int, m: int) -> int:
    """s*q(q+1)/2 + (q+1)(r+1): the largest Dick weight in the staircase space."""
    qr = qr_decompose(m, s)
    q, r = qr.q, qr.r
    return s * q * (q + 1) // 2 + (q + 1) * (r + 1)


def staircase_cells(s: int, n: int, m: int) -> list[tuple[int, int]]:
    """Free (row, column) cells of the staircase space, 1-based, in flat order."""
    _check_positive(s=s, n=n, m=m)
    if m >= n * s:
        raise ValueError(f"staircase needs m < ns, got m={m}, ns={n * s}")
    qr = qr_decompose(m, s)
    cells = []
    for i in range(1, s + 1):
        width = qr.q + 1 if i <= qr.r + 1 else qr.q
        cells.extend((i, j) for j in range(1, width + 1))
    return cells


def staircase_space(s: int, n: int, m: int) -> Subspace:
    cells = staircase_cells(s, n, m)
    # unit vectors in increasing flat order are already reduced
    return Subspace(s, n, tuple(1 << flat_index(n, i, j) for i, j in cells))


def staircase_max(s: int, n: int, m: int) -> F2Matrix:
    """X_max: every free cell of the staircase set to 1."""
    bits = 0
    for i, j in staircase_cells(s, n, m):
        bits |= 1 << flat_index(n, i, j)
    return F2Matrix(s, n, bits)


def witness(p: Subspace) -> F2Matrix:
    """A nonzero element of P^perp inside the staircase space.

    Takes the first vector of the canonical basis of the intersection.
    """
    w = staircase_space(p.s, p.n, p.dim)
    common = intersect(dual(p), w)
    if common.dim == 0:
        raise AssertionError("staircase space misses the dual; dimension count violated")
    return F2Matrix(p.s, p.n, common.basis[0])


def theorem_threshold(c_prime: float) -> float:
    """(sqrt(C' + 1/16) + 3/4) / (C' - 1/2), the smallest admissible m/s."""
    _check_c_prime(c_prime)
    return (math.sqrt(c_prime + 1 / 16) + 0.75) / (c_prime - 0.5)


def threshold_satisfied(m: int, s: int, c_prime: float) -> bool:
    """Exact test of m/s >= theorem_threshold(C') in rational arithmetic.

    Rearranged as (m/s)(C' - 1/2) - 3/4 >= sqrt(C' + 1/16) and squared, so no
    rounding can push a borderline ratio over the threshold.
    """
    _check_c_prime(c_prime)
    _check_positive(m=m, s=s)
    c = Fraction(c_prime)
    lhs = Fraction(m, s) * (c - Fraction(1, 2)) - Fraction(3, 4)
    return lhs >= 0 and lhs * lhs >= c + Fraction(1, 16)


def lower_bound_log2(c_prime: float, m: int, s: int) -> float:
    """log2 of the WAFOM lower bound 2^(-C' m^2 / s)."""
    _check_c_prime(c_prime)
    _check_positive(m=m, s=s)
    return -c_prime * m * m / s


def bound_within_theorem(s: int, m: int, c_prime: float) -> bool:
    """delta_upper_bound(s, m) <= C' m^2 / s, compared exactly."""
    return delta_upper_bound(s, m) * s <= Fraction(c_prime) * m * m


@dataclass(frozen=True)
class VerificationReport:
    s: int
    n: int
    m: int
    c_prime: float
    delta: int
    delta_bound: int
    wafom: float
    wafom_exact: DyadicRational
    wafom_log2: float
    lower_bound_log2: float
    threshold_ok: bool
    wfdelta_ok: bool
    lemma_ok: bool
    theorem_ok: bool

    @property
    def violation(self) -> bool:
        """True when the hypotheses hold but the lower bound fails."""
        return self.threshold_ok and not self.theorem_ok

    @property
    def chain_consistent(self) -> bool:
        return not (self.threshold_ok and self.lemma_ok and self.wfdelta_ok) or self.theorem_ok

    def as_dict(self) -> dict:
        d = dataclasses.asdict(self)
        d["wafom_exact"] = str(self.wafom_exact)
        return d


def verify_net(p: Subspace, c_prime: float, cap: int = DEFAULT_ENUM_CAP) -> VerificationReport:
    """Evaluate every link of the WAFOM lower-bound chain for one net."""
    _check_c_prime(c_prime)
    m = p.dim
    if m < 1 or m >= p.ambient_dim:
        raise ValueError(f"net must be a proper nonzero subspace, got dim {m} of {p.ambient_dim}")
    delta = min_weight(dual(p), cap)
    bound = delta_upper_bound(p.s, m)
    exact = wafom_exact(p, cheapest_route(p), cap)
    log2_value = exact.log2()
    lb = lower_bound_log2(c_prime, m, p.s)
    return VerificationReport(
        s=p.s,
        n=p.n,
        m=m,
        c_prime=c_prime,
        delta=delta,
        delta_bound=bound,
        wafom=float(exact),
        wafom_exact=exact,
        wafom_log2=log2_value,
        lower_bound_log2=lb,
        threshold_ok=threshold_satisfied(m, p.s, c_prime),
        wfdelta_ok=exact >= DyadicRational.power_of_two(-delta),
        lemma_ok=delta <= bound,
        theorem_ok=log2_value >= lb,
    )
