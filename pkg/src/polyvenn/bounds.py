"""Closed-form bounds on Venn diagrams of convex k-gons.

Exact integer arithmetic throughout; supports n up to 64.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def lemma1_max_vertices(n: int, k: int) -> int:
    """Crossing cap for n convex k-gons: C(n,2) * 2k."""
    if n < 2 or k < 3:
        raise ValueError(f"need n >= 2 and k >= 3, got n={n}, k={k}")
    return math.comb(n, 2) * 2 * k


def lemma2_min_k(n: int) -> int:
    """ceil((2^(n-1) - 1) / C(n,2)): minimum k from the vertex count of a
    simple n-Venn diagram versus the crossing cap."""
    if n < 3:
        raise ValueError(f"need n >= 3, got n={n}")
    return -((2 ** (n - 1) - 1) // -math.comb(n, 2))


def theorem_min_k(n: int) -> int:
    """ceil((2^n - 2 - n) / (n(n-2))): the sharper corner-calculus bound."""
    if n < 3:
        raise ValueError(f"need n >= 3, got n={n}")
    return -((2 ** n - 2 - n) // -(n * (n - 2)))


def theorem_vertex_cap(n: int, k: int) -> int:
    """Vertex cap 2k*C(n,2) - n(k-1) for any Venn diagram of k-gons."""
    if n < 3 or k < 3:
        raise ValueError(f"need n >= 3 and k >= 3, got n={n}, k={k}")
    return 2 * k * math.comb(n, 2) - n * (k - 1)


@dataclass(frozen=True)
class BoundsRow:
    """One n-column of the minimum-side-count table."""

    n: int
    lemma2_min_k: int
    theorem_min_k: int
    upper_k: int

    def max_vertices(self, k: int) -> int:
        return lemma1_max_vertices(self.n, k)

    def vertex_cap(self, k: int) -> int:
        return theorem_vertex_cap(self.n, k)


def bounds_table(n_min: int, n_max: int) -> list[BoundsRow]:
    """Lower and upper side-count bounds for each n in [n_min, n_max].

    The lower row is the corner-calculus bound; it is known tight for
    n <= 7, so the upper row equals it there, and the general convex
    construction gives 2^(n-2) for n >= 8.
    """
    if not 3 <= n_min <= n_max:
        raise ValueError(f"need 3 <= n_min <= n_max, got {n_min}..{n_max}")
    if n_max > 64:
        raise ValueError(f"n_max capped at 64, got {n_max}")
    rows = []
    for n in range(n_min, n_max + 1):
        lower = theorem_min_k(n)
        upper = lower if n <= 7 else 2 ** (n - 2)
        rows.append(BoundsRow(n, lemma2_min_k(n), lower, upper))
    return rows
