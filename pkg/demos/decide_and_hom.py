"""Decide whether Hom(G/N, M) is isomorphic to G/L from invariants alone.

Each input is run through the decider and through a direct computation of
Hom, so the two answers can be compared side by side.
"""

from autcentral import DecisionInput, GClass, decide_lemma21, hom_group, normalize
from autcentral.homfun import hom_iso_check

INF = float("inf")

CASES = [
    (GClass.TORSION, [2], [4], [2]),
    (GClass.TORSION, [4, 2], [8, 2], [4, 2]),
    (GClass.TORSION, [4], [4], [2]),
    (GClass.TORSION_FREE, [INF], [INF], [INF]),
    (GClass.MIXED, [2, INF], [4, INF], [2, INF]),
    (GClass.TORSION, [3, 3], [9, 3], [3, 3]),
]

for g_class, gl, gn, m in CASES:
    GL, GN, M = normalize(gl), normalize(gn), normalize(m)
    verdict = decide_lemma21(DecisionInput(g_class, GL, GN, M))
    direct = hom_iso_check(GN, M, GL)
    print(f"{g_class.value:13} G/L={GL!s:12} G/N={GN!s:12} M={M!s:8} "
          f"Hom={hom_group(GN, M)!s:12} decider={verdict.holds!s:5} direct={direct!s:5} "
          f"{verdict.branch.value} {dict(verdict.witnesses)}")
