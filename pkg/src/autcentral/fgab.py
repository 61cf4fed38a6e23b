"""Finitely generated abelian groups in canonical form, and integer Smith normal form.

A finitely generated abelian group is stored by its primary decomposition::

    Z^r x prod_p prod_j C_{p^e_pj}

with primes ascending and each prime's exponents descending.

>>> G = normalize([6, 4])
>>> G
FgAbelian(free_rank=0, parts=((2, (2, 1)), (3, (1,))))
>>> str(G)
'C4 x C2 x C3'
>>> str(normalize([INF, 8, 8, INF]))
'C8 x C8 x Z^2'
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from sympy import factorint, isprime

__all__ = [
    "INF",
    "FgAbelian",
    "IntMatrix",
    "Summary",
    "TRIVIAL",
    "normalize",
    "smith_normal_form",
    "from_relations",
    "direct_product",
    "is_isomorphic",
    "summary",
    "cyclic",
    "free",
]

#: Sentinel order of an infinite cyclic factor, accepted by :func:`normalize`.
INF = math.inf


@dataclass(frozen=True)
class FgAbelian:
    """Canonical invariants of a finitely generated abelian group.

    ``parts`` is a tuple of ``(prime, exponents)`` pairs, ascending by prime,
    with each ``exponents`` tuple non-empty, positive and non-increasing.
    Construct through :func:`normalize` unless the data is already canonical;
    the constructor validates but never reorders.
    """

    free_rank: int = 0
    parts: tuple[tuple[int, tuple[int, ...]], ...] = ()

    def __post_init__(self):
        if not isinstance(self.free_rank, int) or self.free_rank < 0:
            raise ValueError(f"free_rank must be a non-negative int, got {self.free_rank!r}")
        # tolerate lists from callers, store tuples
        parts = tuple((int(p), tuple(int(e) for e in exps)) for p, exps in self.parts)
        object.__setattr__(self, "parts", parts)
        last = 0
        for p, exps in parts:
            if p <= last:
                raise ValueError("primes must be strictly ascending")
            if not isprime(p):
                raise ValueError(f"{p} is not prime")
            if not exps or exps[-1] < 1:
                raise ValueError(f"exponents at {p} must be non-empty and positive")
            if any(a < b for a, b in zip(exps, exps[1:])):
                raise ValueError(f"exponents at {p} must be non-increasing")
            last = p

    # -- accessors -------------------------------------------------------

    def partition(self, p: int) -> tuple[int, ...]:
        """Exponent partition at ``p`` (empty when ``p`` does not divide the torsion)."""
        for q, exps in self.parts:
            if q == p:
                return exps
        return ()

    def p_part(self, p: int) -> "FgAbelian":
        exps = self.partition(p)
        return FgAbelian(0, ((p, exps),) if exps else ())

    @cached_property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.parts)

    @property
    def torsion(self) -> "FgAbelian":
        return FgAbelian(0, self.parts)

    @property
    def torsion_rank(self) -> int:
        return sum(len(exps) for _, exps in self.parts)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.parts

    @property
    def is_torsion_free(self) -> bool:
        return not self.parts

    @property
    def is_cyclic(self) -> bool:
        if self.free_rank == 1:
            return not self.parts
        return self.free_rank == 0 and all(len(exps) == 1 for _, exps in self.parts)

    @cached_property
    def order(self) -> int | None:
        """Group order, or ``None`` for an infinite group."""
        if self.free_rank:
            return None
        return math.prod(p ** e for p, exps in self.parts for e in exps)

    def invariant_factors(self) -> list[int]:
        """Torsion invariant factors d_1 | d_2 | ... (each > 1)."""
        width = max((len(exps) for _, exps in self.parts), default=0)
        factors = [1] * width
        for p, exps in self.parts:
            for j, e in enumerate(exps):
                factors[width - 1 - j] *= p ** e
        return factors

    def cyclic_orders(self) -> list[int]:
        """Orders of the prime-power cyclic factors, in canonical order."""
        return [p ** e for p, exps in self.parts for e in exps]

    def __str__(self) -> str:
        factors = [f"C{n}" for n in self.cyclic_orders()]
        if self.free_rank == 1:
            factors.append("Z")
        elif self.free_rank > 1:
            factors.append(f"Z^{self.free_rank}")
        return " x ".join(factors) if factors else "1"


TRIVIAL = FgAbelian()


def cyclic(n: int) -> FgAbelian:
    return normalize([n])


def free(rank: int) -> FgAbelian:
    return FgAbelian(rank)


def normalize(factors: Iterable[int | float]) -> FgAbelian:
    """Canonical form of a direct product of cyclic groups.

    Each entry is a finite order ``n >= 1`` or :data:`INF` for a copy of Z.
    """
    free_rank = 0
    by_prime: dict[int, list[int]] = {}
    for n in factors:
        if n == INF:
            free_rank += 1
            continue
        if n != int(n) or n < 1:
            raise ValueError(f"cyclic order must be a positive integer or INF, got {n!r}")
        for p, e in factorint(int(n)).items():
            by_prime.setdefault(int(p), []).append(int(e))
    parts = tuple((p, tuple(sorted(by_prime[p], reverse=True))) for p in sorted(by_prime))
    return FgAbelian(free_rank, parts)


def direct_product(A: FgAbelian, B: FgAbelian) -> FgAbelian:
    merged: dict[int, list[int]] = {}
    for G in (A, B):
        for p, exps in G.parts:
            merged.setdefault(p, []).extend(exps)
    parts = tuple((p, tuple(sorted(merged[p], reverse=True))) for p in sorted(merged))
    return FgAbelian(A.free_rank + B.free_rank, parts)


def is_isomorphic(A: FgAbelian, B: FgAbelian) -> bool:
    return A.free_rank == B.free_rank and A.parts == B.parts


@dataclass(frozen=True)
class Summary:
    primes: frozenset[int]
    exponents: dict[int, int] = field(hash=False)
    exponent: int
    torsion_rank: int
    free_rank: int


def summary(A: FgAbelian) -> Summary:
    """Prime set, exponents (per prime and overall) and ranks d, rho of ``A``.

    The exponent refers to the torsion part; a torsion-free group has exponent 1.
    """
    exps = {p: p ** e[0] for p, e in A.parts}
    return Summary(
        primes=frozenset(exps),
        exponents=exps,
        exponent=math.lcm(*exps.values()) if exps else 1,
        torsion_rank=A.torsion_rank,
        free_rank=A.free_rank,
    )


# ---------------------------------------------------------------------------
# Integer matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix, row-major. Python ints, so arithmetic is exact."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        entries = tuple(int(x) for x in self.entries)
        if len(entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(entries)}"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("column count required for an empty matrix")
            cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def random(cls, rows: int, cols: int, bound: int, rng: random.Random) -> "IntMatrix":
        return cls(rows, cols, tuple(rng.randint(-bound, bound) for _ in range(rows * cols)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        a, b = self.to_rows(), other.to_rows()
        out = [
            sum(a[i][k] * b[k][j] for k in range(self.cols))
            for i in range(self.rows)
            for j in range(other.cols)
        ]
        return IntMatrix(self.rows, other.cols, tuple(out))

    def diagonal(self) -> list[int]:
        return [self[i, i] for i in range(min(self.rows, self.cols))]

    def is_diagonal(self) -> bool:
        return all(self[i, j] == 0 for i in range(self.rows) for j in range(self.cols) if i != j)

    def det(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        a = self.to_rows()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.to_rows())


def smith_normal_form(A: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(U, D, V)`` with ``D = U @ A @ V`` in Smith normal form.

    ``U`` and ``V`` are unimodular; ``D`` is diagonal, non-negative, with
    ``d_1 | d_2 | ...`` and zeros trailing. The pivot at each stage is the
    entry of least nonzero absolute value in the remaining block, which keeps
    intermediate growth small for the matrix sizes used here.
    """
    m, n = A.rows, A.cols
    a = A.to_rows()
    u = IntMatrix.identity(m).to_rows()
    v = IntMatrix.identity(n).to_rows()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            pivot = None
            for i in range(t, m):
                for j in range(t, n):
                    if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            if pivot[0] != t:
                swap_rows(t, pivot[0])
            if pivot[1] != t:
                swap_cols(t, pivot[1])
            p = a[t][t]
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
            if any(a[i][t] for i in range(t + 1, m)) or any(a[t][j] for j in range(t + 1, n)):
                continue  # a smaller remainder is now available as pivot
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    flat = lambda rows: tuple(x for r in rows for x in r)  # noqa: E731
    return IntMatrix(m, m, flat(u)), IntMatrix(m, n, flat(a)), IntMatrix(n, n, flat(v))


def from_relations(n_gens: int, rels: IntMatrix) -> FgAbelian:
    """The abelian group ``Z^n_gens / rowspace(rels)``."""
    if n_gens < 1:
        raise ValueError("need at least one generator")
    if rels.cols != n_gens:
        raise ValueError(f"relation matrix has {rels.cols} columns, expected {n_gens}")
    if rels.rows == 0:
        return FgAbelian(n_gens)
    _, D, _ = smith_normal_form(rels)
    diag = [d for d in D.diagonal() if d]
    return normalize([d for d in diag if d > 1] + [INF] * (n_gens - len(diag)))
