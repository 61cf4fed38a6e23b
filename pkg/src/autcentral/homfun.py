"""Hom(A, B) for finitely generated abelian groups, at the level of invariants."""

from __future__ import annotations

from functools import lru_cache

from .fgab import FgAbelian, is_isomorphic

__all__ = ["hom_group", "hom_iso_check", "hom_order"]


@lru_cache(maxsize=1 << 16)
def hom_group(A: FgAbelian, B: FgAbelian) -> FgAbelian:
    """Canonical invariants of ``Hom(A, B)``.

    Hom is additive in both slots, so it is assembled from three pieces:

    * ``Hom(Z^r, B) = B^r``;
    * ``Hom(C_{p^b}, C_{p^c}) = C_{p^min(b, c)}``, and coprime cyclic
      groups contribute nothing;
    * ``Hom(torsion, Z) = 1``.
    """
    r = A.free_rank
    b_parts = dict(B.parts)
    merged: dict[int, list[int]] = {p: list(exps) * r for p, exps in B.parts}
    for p, alpha in A.parts:
        gamma = b_parts.get(p)
        if not gamma:
            continue
        merged[p].extend(min(x, y) for x in alpha for y in gamma)
    parts = tuple(
        (p, tuple(sorted(merged[p], reverse=True))) for p in sorted(merged) if merged[p]
    )
    return FgAbelian(r * B.free_rank, parts)


def hom_order(A: FgAbelian, B: FgAbelian) -> int | None:
    return hom_group(A, B).order


def hom_iso_check(GN: FgAbelian, M: FgAbelian, GL: FgAbelian) -> bool:
    """Whether ``Hom(GN, M)`` is isomorphic to ``GL``."""
    return is_isomorphic(hom_group(GN, M), GL)
