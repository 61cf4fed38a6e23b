"""Central and autocentral automorphisms of finitely generated groups.

Invariant-level decisions about ``Hom(G/N, M) ~ G/L`` for finitely generated
abelian data, with a brute-force finite group engine to cross-check the
consequences on small groups.
"""

from .fgab import INF, FgAbelian, IntMatrix, normalize, smith_normal_form, from_relations
from .homfun import hom_group, hom_iso_check
from .decider import GClass, DecisionInput, Verdict, decide_lemma21, decide_remark22

__version__ = "0.1.0"
