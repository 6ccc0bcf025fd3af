"""Brute-force reference computations, independent of the library internals.

Everything here works on plain nested lists / ints and enumerates the whole
ambient space M_{s,n}(F2), so it is only usable for sn <= ~20.
"""

from fractions import Fraction
from itertools import product


def cells(x, s, n):
    """x as an s x n list of lists (row-major flat layout)."""
    return [[(x >> (i * n + j)) & 1 for j in range(n)] for i in range(s)]


def weight(x, s, n):
    return sum((j + 1) * bit for row in cells(x, s, n) for j, bit in enumerate(row))


def dot(x, y):
    return bin(x & y).count("1") % 2


def span(vectors):
    out = set()
    for coeffs in product((0, 1), repeat=len(vectors)):
        acc = 0
        for c, v in zip(coeffs, vectors):
            if c:
                acc ^= v
        out.add(acc)
    return out


def dual_set(vectors, s, n):
    return {x for x in range(1 << (s * n)) if all(dot(x, v) == 0 for v in vectors)}


def rank(vectors):
    return len(span(vectors)).bit_length() - 1


def wafom_fraction(vectors, s, n):
    """Sum of 2^-mu over the nonzero dual elements, as a Fraction."""
    return sum((Fraction(1, 2 ** weight(x, s, n)) for x in dual_set(vectors, s, n) if x), Fraction(0))


def min_dual_weight(vectors, s, n):
    return min(weight(x, s, n) for x in dual_set(vectors, s, n) if x)


def count_subspaces(size, m):
    """Number of m-dim subspaces of F2^size by counting ordered bases."""
    ordered = 1
    for t in range(m):
        ordered *= 2**size - 2**t
    per_space = 1
    for t in range(m):
        per_space *= 2**m - 2**t
    return ordered // per_space
