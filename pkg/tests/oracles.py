"""Independent reference computations used only by the tests."""

from __future__ import annotations

import itertools
import math

from hypothesis import strategies as st

from autcentral.fgab import FgAbelian, normalize


def leibniz_det(rows) -> int:
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i, j in enumerate(perm):
            term *= rows[i][j]
        total += term
    return total


def minor_gcd(rows, k: int) -> int:
    """gcd of all k x k minors, by direct enumeration."""
    m, n = len(rows), len(rows[0]) if rows else 0
    g = 0
    for ri in itertools.combinations(range(m), k):
        for ci in itertools.combinations(range(n), k):
            g = math.gcd(g, leibniz_det([[rows[i][j] for j in ci] for i in ri]))
    return g


def hom_order_by_cyclics(A: FgAbelian, B: FgAbelian) -> int:
    """|Hom(A, B)| for finite A, B from |Hom(C_m, C_n)| = gcd(m, n)."""
    out = 1
    for m in A.cyclic_orders():
        for n in B.cyclic_orders():
            out *= math.gcd(m, n)
    return out


def abelians(max_free: int = 2, primes=(2, 3, 5), max_len: int = 3, max_exp: int = 3):
    """Hypothesis strategy for FgAbelian values built from random cyclic orders."""
    cyclic = st.builds(lambda p, e: p ** e, st.sampled_from(primes), st.integers(1, max_exp))
    return st.builds(
        lambda free, cyc: normalize([math.inf] * free + cyc),
        st.integers(0, max_free),
        st.lists(cyclic, max_size=max_len),
    )


def finite_abelians(**kw):
    return abelians(max_free=0, **kw)
