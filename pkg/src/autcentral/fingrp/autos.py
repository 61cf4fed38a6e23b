"""Automorphism enumeration and the automorphism subgroups built from it.

Conventions: automorphisms act on the left and compose as functions,
``(a * b)(x) = a(b(x))``; conjugation is ``x^h = h^-1 x h`` and the
autocommutator is ``[g, a] = g^-1 a(g)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from ..fgab import FgAbelian
from .core import (
    FiniteGroup,
    GroupError,
    Subgroup,
    generate,
    generating_set,
    lower_central_series,
    trivial_subgroup,
    center,
    whole,
)

__all__ = [
    "DEFAULT_MAX_ORDER",
    "Automorphism",
    "automorphism_group",
    "group_of",
    "inner_automorphisms",
    "aut_xy",
    "central_automorphisms_fixing_center",
    "autocommutator_matrix",
    "absolute_center",
    "autocenter_series",
    "autocommutator_subgroup",
    "var_group",
    "kpwi_group",
    "hom_bruteforce",
    "epimorphism_exists",
]

DEFAULT_MAX_ORDER = 64


@dataclass(frozen=True, order=True)
class Automorphism:
    """A bijection of element indices; ordering is lexicographic by image."""

    image: tuple[int, ...]

    def __call__(self, g: int) -> int:
        return self.image[g]

    def __mul__(self, other: "Automorphism") -> "Automorphism":
        return Automorphism(tuple(self.image[i] for i in other.image))

    def inverse(self) -> "Automorphism":
        inv = [0] * len(self.image)
        for i, v in enumerate(self.image):
            inv[v] = i
        return Automorphism(tuple(inv))

    @property
    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.image))

    def is_automorphism_of(self, G: FiniteGroup) -> bool:
        phi = np.asarray(self.image)
        if sorted(self.image) != list(range(G.order)):
            return False
        return bool((phi[G.table] == G.table[phi][:, phi]).all())


def _extend(G: FiniteGroup, gens: Sequence[int], imgs: Sequence[int], target: FiniteGroup,
            injective: bool) -> list[int] | None:
    """Extend ``gens[i] -> imgs[i]`` to a homomorphism on <gens>, or None if inconsistent.

    Walks the Cayley graph of <gens> from the identity; every edge x -> x*g
    is checked against phi(x)*phi(g), which makes the result a homomorphism
    once the walk covers the subgroup.
    """
    rows, trows = G.rows, target.rows
    phi = [-1] * G.order
    phi[0] = 0
    used = {0} if injective else None
    queue = [0]
    pairs = list(zip(gens, imgs))
    for x in queue:
        fx = trows[phi[x]]
        row = rows[x]
        for g, h in pairs:
            y, fy = row[g], fx[h]
            if phi[y] < 0:
                if injective:
                    if fy in used:
                        return None
                    used.add(fy)
                phi[y] = fy
                queue.append(y)
            elif phi[y] != fy:
                return None
    return phi


def automorphism_group(G: FiniteGroup, max_order: int = DEFAULT_MAX_ORDER) -> list[Automorphism]:
    """All automorphisms of ``G``, sorted lexicographically by image.

    Backtracks over images of a greedy generating set, trying only elements
    of the same order, and prunes any partial assignment that fails to
    extend injectively and homomorphically to the subgroup generated so far.
    """
    if G.order > max_order:
        raise GroupError("ORDER_BOUND_EXCEEDED", f"|{G.name}| = {G.order} exceeds the bound {max_order}")
    cached = G._cache.get("aut")
    if cached is not None:
        return cached
    gens = generating_set(G)
    orders = G.element_orders
    candidates = [[h for h in G.elements if orders[h] == orders[g]] for g in gens]
    found: list[Automorphism] = []

    def search(depth: int, imgs: list[int], image_span: set[int]):
        if depth == len(gens):
            phi = _extend(G, gens, imgs, G, injective=True)
            found.append(Automorphism(tuple(phi)))
            return
        for h in candidates[depth]:
            if h in image_span:
                continue
            trial = imgs + [h]
            phi = _extend(G, gens[: depth + 1], trial, G, injective=True)
            if phi is None:
                continue
            search(depth + 1, trial, {v for v in phi if v >= 0})

    search(0, [], {0})
    found.sort()
    G._cache["aut"] = found
    return found


def group_of(auts: Sequence[Automorphism], name: str = "A") -> FiniteGroup:
    """The Cayley table of a list of automorphisms closed under composition.

    Index 0 is the identity, which sorts first in any automorphism list.
    """
    ordered = sorted(set(auts))
    if not ordered or not ordered[0].is_identity:
        raise GroupError("NOT_SUBGROUP", "automorphism set does not contain the identity")
    index = {a: i for i, a in enumerate(ordered)}
    try:
        table = [[index[a * b] for b in ordered] for a in ordered]
    except KeyError:
        raise GroupError("NOT_SUBGROUP", "automorphism set is not closed under composition") from None
    return FiniteGroup(table, [str(i) for i in range(len(ordered))], name)


def inner_automorphisms(G: FiniteGroup) -> list[Automorphism]:
    """Conjugations ``x -> b^-1 x b``, deduplicated and sorted."""
    if "inn" not in G._cache:
        T, inv = G.table, G.inverses
        imgs = {tuple(T[T[inv[b]], b].tolist()) for b in G.elements}
        G._cache["inn"] = sorted(Automorphism(i) for i in imgs)
    return G._cache["inn"]


def autocommutator_matrix(G: FiniteGroup, auts: Sequence[Automorphism]) -> np.ndarray:
    """``M[k, g] = g^-1 auts[k](g)``."""
    if not auts:
        return np.zeros((0, G.order), dtype=np.int64)
    images = np.array([a.image for a in auts], dtype=np.int64)
    return G.table[G.inverses[None, :], images]


def aut_xy(G: FiniteGroup, X: Subgroup, Y: Subgroup, max_order: int = DEFAULT_MAX_ORDER) -> list[Automorphism]:
    """Automorphisms acting trivially on G/X and fixing Y pointwise."""
    if not X.is_normal():
        raise GroupError("NOT_NORMAL", "X must be normal")
    auts = automorphism_group(G, max_order)
    if not auts:
        return []
    ac = autocommutator_matrix(G, auts)
    ok = X.mask[ac].all(axis=1)
    ys = np.array(Y.members)
    images = np.array([a.image for a in auts])
    ok &= (images[:, ys] == ys[None, :]).all(axis=1)
    return [a for a, keep in zip(auts, ok) if keep]


def central_automorphisms_fixing_center(G: FiniteGroup, max_order: int = DEFAULT_MAX_ORDER) -> list[Automorphism]:
    """The group C* of central automorphisms fixing Z(G) elementwise."""
    Z = center(G)
    return aut_xy(G, Z, Z, max_order)


def absolute_center(G: FiniteGroup, max_order: int = DEFAULT_MAX_ORDER) -> Subgroup:
    return autocenter_series(G, 1, max_order)


def autocenter_series(G: FiniteGroup, n: int, max_order: int = DEFAULT_MAX_ORDER) -> Subgroup:
    """``L_n(G)``: elements g with ``[g, a_1, ..., a_n] = 1`` for all automorphisms a_i.

    Uses ``g in L_n`` iff ``[g, a] in L_{n-1}`` for every a, with ``L_0 = 1``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    ac = autocommutator_matrix(G, automorphism_group(G, max_order))
    inside = np.zeros(G.order, dtype=bool)
    inside[0] = True
    for _ in range(n):
        inside = inside[ac].all(axis=0)
    return Subgroup(G, tuple(int(g) for g in np.flatnonzero(inside)))


def autocommutator_subgroup(G: FiniteGroup, max_order: int = DEFAULT_MAX_ORDER) -> Subgroup:
    """``G*``, generated by every autocommutator ``g^-1 a(g)``."""
    ac = autocommutator_matrix(G, automorphism_group(G, max_order))
    return generate(G, set(ac.ravel().tolist()))


def var_group(G: FiniteGroup, max_order: int = DEFAULT_MAX_ORDER) -> list[Automorphism]:
    """Autocentral automorphisms: ``g^-1 a(g)`` lies in L(G) for every g."""
    L = absolute_center(G, max_order)
    return aut_xy(G, L, trivial_subgroup(G), max_order)


def kpwi_group(G: FiniteGroup, k: int, max_order: int = DEFAULT_MAX_ORDER) -> list[Automorphism]:
    """Automorphisms sending each x to some ``x^h`` with h in gamma_k(G)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    gammas = lower_central_series(G)
    H = gammas[k - 1] if k <= len(gammas) else gammas[-1]
    T, inv = G.table, G.inverses
    hs = np.array(H.members)
    # allowed[x, y]: y is a conjugate of x by an element of H
    conj = T[T[inv[hs][:, None], np.arange(G.order)[None, :]], hs[:, None]]
    allowed = np.zeros((G.order, G.order), dtype=bool)
    allowed[np.broadcast_to(np.arange(G.order), conj.shape), conj] = True
    auts = automorphism_group(G, max_order)
    if not auts:
        return []
    images = np.array([a.image for a in auts])
    ok = allowed[np.arange(G.order)[None, :], images].all(axis=1)
    return [a for a, keep in zip(auts, ok) if keep]


def _invariants_from_orders(orders: Iterable[int]) -> FgAbelian:
    """Invariants of a finite abelian group from the multiset of its element orders.

    For each prime p with p-part partition lam, the number of elements whose
    order has p-adic valuation <= k is ``|H_p'| * p^(sum_j min(lam_j, k))``.
    """
    orders = list(orders)
    n = len(orders)
    parts = []
    p = 2
    rest = n
    while rest > 1:
        if rest % p == 0:
            v = 0
            while rest % p == 0:
                rest //= p
                v += 1
            vals = []
            for o in orders:
                e = 0
                while o % p == 0:
                    o //= p
                    e += 1
                vals.append(e)
            sums = [0]
            for k in range(1, max(vals) + 1):
                count = sum(1 for e in vals if e <= k)
                scaled, r = divmod(count * p ** v, n)
                s = round(math.log(scaled, p)) if scaled > 0 else -1
                if r or s < 0 or p ** s != scaled:
                    raise GroupError("NOT_ABELIAN", "element order counts are not those of an abelian group")
                sums.append(s)
            conj = [sums[k] - sums[k - 1] for k in range(1, len(sums))]  # parts of size >= k
            lam = [sum(1 for c in conj if c >= j) for j in range(1, conj[0] + 1)] if conj else []
            parts.append((p, tuple(lam)))
        p += 1
    return FgAbelian(0, tuple(parts))


def hom_bruteforce(A: FiniteGroup, B: FiniteGroup, max_order: int = DEFAULT_MAX_ORDER) -> tuple[int, FgAbelian]:
    """Count Hom(A, B) by enumeration and identify its structure.

    Maps are fixed by the images of a greedy generating set of ``A``; each
    candidate is kept only if it extends consistently over all of ``A``.
    The structure of the resulting group (pointwise product) is read off
    from the orders of its elements.
    """
    for H in (A, B):
        if not H.is_abelian:
            raise GroupError("NOT_ABELIAN", f"{H.name} is not abelian")
    if A.order > max_order:
        raise GroupError("ORDER_BOUND_EXCEEDED", f"|{A.name}| = {A.order} exceeds the bound {max_order}")
    gens = generating_set(A)
    a_orders, b_orders = A.element_orders, B.element_orders
    candidates = [[h for h in B.elements if a_orders[g] % b_orders[h] == 0] for g in gens]
    hom_orders: list[int] = []

    def search(depth: int, imgs: list[int]):
        if depth == len(gens):
            hom_orders.append(math.lcm(*(b_orders[h] for h in imgs)) if imgs else 1)
            return
        for h in candidates[depth]:
            trial = imgs + [h]
            if _extend(A, gens[: depth + 1], trial, B, injective=False) is not None:
                search(depth + 1, trial)

    search(0, [])
    return len(hom_orders), _invariants_from_orders(hom_orders)


def epimorphism_exists(H: FiniteGroup, K: FiniteGroup) -> bool:
    """Whether some homomorphism maps ``H`` onto ``K`` (found by enumeration)."""
    if H.order % K.order:
        return False
    gens = generating_set(H)
    h_orders, k_orders = H.element_orders, K.element_orders
    candidates = [[y for y in K.elements if h_orders[g] % k_orders[y] == 0] for g in gens]

    def search(depth: int, imgs: list[int]) -> bool:
        if depth == len(gens):
            return generate(K, imgs).order == K.order
        for y in candidates[depth]:
            trial = imgs + [y]
            if _extend(H, gens[: depth + 1], trial, K, injective=False) is not None and search(depth + 1, trial):
                return True
        return False

    return search(0, [])
