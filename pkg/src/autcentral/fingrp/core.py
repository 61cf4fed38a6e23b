"""Cayley-table groups, subgroups, series and quotients."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from ..fgab import FgAbelian, normalize

__all__ = [
    "GroupError",
    "FiniteGroup",
    "Subgroup",
    "MAX_SUPPORTED_ORDER",
    "NOT_NILPOTENT",
    "validate",
    "load_group",
    "dump_group",
    "generate",
    "whole",
    "trivial_subgroup",
    "center",
    "derived_subgroup",
    "commutator",
    "centralizer",
    "upper_central_series",
    "lower_central_series",
    "nilpotency_class",
    "quotient",
    "abelian_invariants",
    "generating_set",
    "subgroups",
    "subgroups_between",
    "is_p_group",
]

MAX_SUPPORTED_ORDER = 128

#: value returned by :func:`nilpotency_class` for non-nilpotent groups
NOT_NILPOTENT = None


class GroupError(ValueError):
    """Invalid group data or a violated precondition; ``code`` names the failure."""

    def __init__(self, code: str, message: str, witness=None):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.witness = witness


class FiniteGroup:
    """A finite group given by its Cayley table, identity at index 0.

    Instances are immutable once built; derived data (inverses, element
    orders, automorphisms) is cached on the instance. Use :func:`validate`
    to build one from untrusted data.
    """

    def __init__(self, table, names: Sequence[str] | None = None, name: str = "G"):
        arr = np.array(table, dtype=np.int64)
        arr.setflags(write=False)
        self.table = arr
        self.order = int(arr.shape[0])
        self.names = tuple(names) if names is not None else tuple(str(i) for i in range(self.order))
        self.name = name
        self.rows: list[list[int]] = arr.tolist()
        self._cache: dict = {}

    def __repr__(self) -> str:
        return f"<FiniteGroup {self.name} of order {self.order}>"

    def mul(self, a: int, b: int) -> int:
        return self.rows[a][b]

    @cached_property
    def inverses(self) -> np.ndarray:
        inv = np.argmin(self.table, axis=1)  # the identity 0 sits at column inv[a] in row a
        inv.setflags(write=False)
        return inv

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def comm(self, a: int, b: int) -> int:
        """Commutator ``[a, b] = a^-1 b^-1 a b``."""
        r, inv = self.rows, self.inverses
        return r[r[r[int(inv[a])][int(inv[b])]][a]][b]

    def conj(self, x: int, h: int) -> int:
        """``x^h = h^-1 x h``."""
        r = self.rows
        return r[r[int(self.inverses[h])][x]][h]

    def power(self, a: int, k: int) -> int:
        x = 0
        for _ in range(k):
            x = self.rows[x][a]
        return x

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        orders = []
        for a in range(self.order):
            k, x = 1, a
            while x != 0:
                x = self.rows[x][a]
                k += 1
            orders.append(k)
        return tuple(orders)

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*self.element_orders)

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    @property
    def elements(self) -> range:
        return range(self.order)


def validate(table, names: Sequence[str] | None = None, name: str = "G") -> FiniteGroup:
    """Check every group axiom on ``table`` and return the group.

    Raises :class:`GroupError` with code BAD_SHAPE, NO_IDENTITY, NOT_LATIN or
    NOT_ASSOCIATIVE; the ``witness`` attribute holds the offending cell or triple.
    """
    try:
        arr = np.array(table, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise GroupError("BAD_SHAPE", f"table is not a rectangular integer array ({exc})") from None
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise GroupError("BAD_SHAPE", f"table must be a non-empty square array, got shape {arr.shape}")
    n = arr.shape[0]
    if n > MAX_SUPPORTED_ORDER:
        raise GroupError("BAD_SHAPE", f"order {n} exceeds the supported maximum {MAX_SUPPORTED_ORDER}")
    if arr.min() < 0 or arr.max() >= n:
        i, j = np.argwhere((arr < 0) | (arr >= n))[0]
        raise GroupError("BAD_SHAPE", f"entry at ({i}, {j}) out of range", witness=(int(i), int(j)))
    if names is not None and len(names) != n:
        raise GroupError("BAD_SHAPE", f"{len(names)} element names for a table of order {n}")
    ident = np.arange(n)
    bad = np.flatnonzero((arr[0] != ident) | (arr[:, 0] != ident))
    if bad.size:
        j = int(bad[0])
        raise GroupError("NO_IDENTITY", f"index 0 is not a two-sided identity (fails at element {j})",
                         witness=(0, j))
    for axis in (1, 0):
        srt = np.sort(arr, axis=axis)
        wrong = np.argwhere(srt != (ident[None, :] if axis == 1 else ident[:, None]))
        if wrong.size:
            line = int(wrong[0][0] if axis == 1 else wrong[0][1])
            vec = arr[line] if axis == 1 else arr[:, line]
            seen: dict[int, int] = {}
            for k, v in enumerate(vec.tolist()):
                if v in seen:
                    cell = (line, k) if axis == 1 else (k, line)
                    raise GroupError("NOT_LATIN", f"repeated entry {v} at cell {cell}", witness=cell)
                seen[v] = k
    lhs = arr[arr]          # (ab)c
    rhs = arr[:, arr]       # a(bc)
    wrong = np.argwhere(lhs != rhs)
    if wrong.size:
        a, b, c = (int(x) for x in wrong[0])
        raise GroupError("NOT_ASSOCIATIVE", f"({a}*{b})*{c} != {a}*({b}*{c})", witness=(a, b, c))
    return FiniteGroup(arr, names, name)


def load_group(path: str | Path) -> FiniteGroup:
    """Read a group file: JSON with ``name``, ``table`` and optional ``elements``."""
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise GroupError("BAD_FILE", f"{path}: {exc}") from None
    if not isinstance(doc, dict) or "table" not in doc:
        raise GroupError("BAD_FILE", f"{path}: expected an object with a 'table' field")
    return validate(doc["table"], doc.get("elements"), doc.get("name", Path(path).stem))


def dump_group(G: FiniteGroup, path: str | Path | None = None) -> str:
    text = json.dumps({"name": G.name, "table": G.rows, "elements": list(G.names)})
    if path is not None:
        Path(path).write_text(text + "\n")
    return text


@dataclass(frozen=True)
class Subgroup:
    """A subgroup as a sorted tuple of element indices of ``parent``."""

    parent: FiniteGroup
    members: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(set(int(m) for m in self.members))))

    @classmethod
    def checked(cls, G: FiniteGroup, members: Iterable[int]) -> "Subgroup":
        H = cls(G, tuple(members))
        s = H.member_set
        if 0 not in s or any(G.rows[a][b] not in s for a in H.members for b in H.members):
            raise GroupError("NOT_SUBGROUP", "element set is not closed under the product")
        return H

    @cached_property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.order, dtype=bool)
        m[list(self.members)] = True
        return m

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, g: int) -> bool:
        return g in self.member_set

    def __len__(self) -> int:
        return len(self.members)

    def __le__(self, other: "Subgroup") -> bool:
        return self.member_set <= other.member_set

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and self.parent is other.parent and self.members == other.members

    def __hash__(self) -> int:
        return hash((id(self.parent), self.members))

    def __repr__(self) -> str:
        return f"<Subgroup of {self.parent.name}, order {self.order}>"

    def is_normal(self) -> bool:
        G, s = self.parent, self.member_set
        return all(G.conj(x, g) in s for x in self.members for g in G.elements)

    def is_cyclic(self) -> bool:
        orders = self.parent.element_orders
        return any(orders[m] == self.order for m in self.members)

    def as_group(self, name: str | None = None) -> FiniteGroup:
        """The subgroup as a standalone group (members relabelled 0..k-1 in order)."""
        pos = {m: i for i, m in enumerate(self.members)}
        rows = self.parent.rows
        table = [[pos[rows[a][b]] for b in self.members] for a in self.members]
        names = [self.parent.names[m] for m in self.members]
        return FiniteGroup(table, names, name or f"subgroup of {self.parent.name}")


def whole(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, tuple(G.elements))


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, (0,))


def generate(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    """Subgroup generated by ``gens`` (closure under right multiplication)."""
    gens = [g for g in set(gens) if g != 0]
    seen = {0}
    queue = [0]
    rows = G.rows
    for x in queue:
        row = rows[x]
        for g in gens:
            y = row[g]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return Subgroup(G, tuple(seen))


def center(G: FiniteGroup) -> Subgroup:
    T = G.table
    return Subgroup(G, tuple(int(g) for g in np.flatnonzero((T == T.T).all(axis=1))))


def centralizer(G: FiniteGroup, S: Subgroup) -> Subgroup:
    rows = G.rows
    return Subgroup(G, tuple(g for g in G.elements if all(rows[g][s] == rows[s][g] for s in S.members)))


def commutator(G: FiniteGroup, S: Subgroup, T: Subgroup) -> Subgroup:
    """``[S, T]``, generated by all ``[s, t]``."""
    return generate(G, {G.comm(s, t) for s in S.members for t in T.members})


def derived_subgroup(G: FiniteGroup) -> Subgroup:
    W = whole(G)
    return commutator(G, W, W)


def upper_central_series(G: FiniteGroup) -> list[Subgroup]:
    """``[zeta_0 = 1, zeta_1 = Z(G), ...]`` up to the point it stabilizes."""
    series = [trivial_subgroup(G)]
    while True:
        prev = series[-1].member_set
        nxt = Subgroup(G, tuple(g for g in G.elements if all(G.comm(g, x) in prev for x in G.elements)))
        if nxt == series[-1]:
            return series
        series.append(nxt)


def lower_central_series(G: FiniteGroup) -> list[Subgroup]:
    """``[gamma_1 = G, gamma_2 = G', ...]`` up to the point it stabilizes."""
    W = whole(G)
    series = [W]
    while True:
        nxt = commutator(G, series[-1], W)
        if nxt == series[-1]:
            return series
        series.append(nxt)


def nilpotency_class(G: FiniteGroup) -> int | None:
    """Least c with zeta_c = G, or :data:`NOT_NILPOTENT`."""
    zeta = upper_central_series(G)
    if zeta[-1].order != G.order:
        return NOT_NILPOTENT
    return len(zeta) - 1


def quotient(G: FiniteGroup, N: Subgroup, name: str | None = None) -> tuple[FiniteGroup, np.ndarray]:
    """``G/N`` with its coset map; cosets numbered by least member, so ``N`` is index 0."""
    if not N.is_normal():
        raise GroupError("NOT_NORMAL", f"subgroup of order {N.order} is not normal in {G.name}")
    coset = np.full(G.order, -1, dtype=np.int64)
    reps = []
    for g in G.elements:
        if coset[g] < 0:
            label = len(reps)
            reps.append(g)
            for n in N.members:
                coset[G.rows[g][n]] = label
    table = [[int(coset[G.rows[a][b]]) for b in reps] for a in reps]
    names = [f"{G.names[r]}N" if N.order > 1 else G.names[r] for r in reps]
    coset.setflags(write=False)
    return FiniteGroup(table, names, name or f"{G.name}/N"), coset


def generating_set(G: FiniteGroup) -> list[int]:
    """Greedy generating set: repeatedly add an element of largest order outside the current span."""
    orders = G.element_orders
    by_order = sorted(G.elements, key=lambda g: (-orders[g], g))
    gens: list[int] = []
    span = {0}
    while len(span) < G.order:
        g = next(x for x in by_order if x not in span)
        gens.append(g)
        span = generate(G, gens).member_set
    return gens


def abelian_invariants(G: FiniteGroup | Subgroup) -> FgAbelian:
    """Invariants of an abelian group by peeling off cyclic factors of largest order."""
    H = G.as_group() if isinstance(G, Subgroup) else G
    if not H.is_abelian:
        raise GroupError("NOT_ABELIAN", f"{H.name} is not abelian")
    orders = []
    while H.order > 1:
        top = max(H.elements, key=lambda g: (H.element_orders[g], -g))
        orders.append(H.element_orders[top])
        H, _ = quotient(H, generate(H, [top]))
    return normalize(orders)


def subgroups_between(G: FiniteGroup, lower: Subgroup, upper: Subgroup | None = None) -> list[Subgroup]:
    """All subgroups H with ``lower <= H <= upper``, sorted by (order, members)."""
    pool = upper.members if upper is not None else tuple(G.elements)
    found = {lower.members: lower}
    queue = [lower]
    for H in queue:
        for g in pool:
            if g in H.member_set:
                continue
            K = generate(G, H.members + (g,))
            if K.members not in found:
                found[K.members] = K
                queue.append(K)
    return sorted(found.values(), key=lambda H: (H.order, H.members))


def subgroups(G: FiniteGroup) -> list[Subgroup]:
    return subgroups_between(G, trivial_subgroup(G))


def is_p_group(G: FiniteGroup) -> int | None:
    """The prime p when |G| is a power of p, else None (also None for the trivial group)."""
    n = G.order
    for p in range(2, n + 1):
        if n % p == 0:
            while n % p == 0:
                n //= p
            return p if n == 1 else None
    return None
