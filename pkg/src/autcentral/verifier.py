"""Cross-check the invariant-level predictions against brute force on concrete groups.

Each ``verify_*`` function evaluates one claim on one group and returns a
:class:`Case` holding the prediction (computed from invariants through
:mod:`autcentral.decider` and :mod:`autcentral.homfun`) next to the
observation (computed by enumerating automorphisms with
:mod:`autcentral.fingrp`). Claims whose hypotheses do not apply give
skipped cases, never disagreements.
"""

from __future__ import annotations

import itertools
import json
import logging
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Sequence

from . import fingrp as fg
from .decider import (
    DecisionInput,
    GClass,
    check_compatible,
    cor24_center_shape,
    cor29_shape,
    decide_lemma21,
)
from .fgab import FgAbelian, is_isomorphic, normalize
from .homfun import hom_group, hom_iso_check

log = logging.getLogger(__name__)

__all__ = [
    "SUBJECTS",
    "Case",
    "Report",
    "Bundle",
    "SweepBounds",
    "verify_lemma23",
    "verify_attar",
    "verify_cor24",
    "verify_cor25",
    "verify_cor26_27",
    "verify_cor28_29",
    "verify_cor210",
    "verify_exp_equality",
    "verify_hom_oracle",
    "lemma23_pairs",
    "cor25_pairs",
    "sweep_lemma21",
    "iter_sweep_inputs",
    "DEFAULT_MANIFEST",
    "read_manifest",
    "load_entry",
    "run_group",
    "run_corpus",
]

SUBJECTS = (
    "LEMMA21_SWEEP", "LEMMA23", "ATTAR", "COR24", "COR25", "COR26", "COR27",
    "COR28", "COR29", "COR210", "EXP_EQUALITY_210", "HOM_ORACLE",
)


@dataclass
class Case:
    subject: str
    group: str
    input: str = ""
    predicted: Any = None
    observed: Any = None
    flags: tuple[str, ...] = ()
    skipped: bool = False
    detail: dict = field(default_factory=dict)

    @property
    def agree(self) -> bool | None:
        return None if self.skipped else self.predicted == self.observed

    @property
    def degenerate(self) -> bool:
        return "DEGENERATE" in self.flags

    def as_dict(self) -> dict:
        return {
            "subject": self.subject,
            "group": self.group,
            "input": self.input,
            "predicted": self.predicted,
            "observed": self.observed,
            "agree": self.agree,
            "skipped": self.skipped,
            "flags": list(self.flags),
            "detail": self.detail,
        }


def _skip(subject: str, G: fg.FiniteGroup, code: str, why: str, input: str = "") -> Case:
    return Case(subject, G.name, input, flags=(code,), skipped=True, detail={"why": why})


@dataclass
class Report:
    """Cases for one claim. ``tallies`` may count cases that are not listed (sweeps)."""

    subject: str
    cases: list[Case] = field(default_factory=list)
    tallies: Counter = field(default_factory=Counter)
    info: dict = field(default_factory=dict)

    def add(self, case: Case) -> Case:
        self.cases.append(case)
        self.tallies["total"] += 1
        if case.skipped:
            self.tallies["skipped"] += 1
        elif case.agree:
            self.tallies["agree"] += 1
        else:
            self.tallies["degenerate_disagree" if case.degenerate else "disagree"] += 1
        if case.degenerate:
            self.tallies["degenerate"] += 1
        return case

    @property
    def disagreements(self) -> list[Case]:
        return [c for c in self.cases if c.agree is False and not c.degenerate]

    @property
    def ok(self) -> bool:
        return self.tallies["disagree"] == 0

    def summary(self) -> dict:
        keys = ("total", "agree", "disagree", "skipped", "degenerate", "degenerate_disagree")
        return {k: self.tallies[k] for k in keys}


@dataclass
class Bundle:
    reports: dict[str, Report] = field(default_factory=dict)
    errors: list[dict] = field(default_factory=list)

    def report(self, subject: str) -> Report:
        return self.reports.setdefault(subject, Report(subject))

    def add(self, case: Case) -> Case:
        return self.report(case.subject).add(case)

    def sorted_cases(self) -> list[Case]:
        out = []
        for subject in sorted(self.reports):
            out.extend(sorted(self.reports[subject].cases, key=lambda c: (c.group, c.input)))
        return out

    @property
    def disagreement_count(self) -> int:
        return sum(r.tallies["disagree"] for r in self.reports.values())

    @property
    def ok(self) -> bool:
        return self.disagreement_count == 0

    def to_json(self) -> str:
        doc = {
            "summary": {s: self.reports[s].summary() for s in sorted(self.reports)},
            "errors": self.errors,
            "info": {s: self.reports[s].info for s in sorted(self.reports) if self.reports[s].info},
            "cases": [c.as_dict() for c in self.sorted_cases()],
        }
        return json.dumps(doc, indent=2, sort_keys=True, default=str)

    def to_text(self) -> str:
        lines = [f"{'subject':<17} {'group':<28} {'input':<24} {'pred':<14} {'obs':<14} result"]
        for c in self.sorted_cases():
            result = "skip" if c.skipped else ("ok" if c.agree else "DISAGREE")
            if c.flags and not c.skipped:
                result += " [" + ",".join(c.flags) + "]"
            elif c.skipped:
                result += " [" + ",".join(c.flags) + "]"
            lines.append(f"{c.subject:<17} {c.group:<28.28} {c.input:<24.24} "
                         f"{_short(c.predicted):<14.14} {_short(c.observed):<14.14} {result}")
        lines.append("")
        for s in sorted(self.reports):
            sm = self.reports[s].summary()
            lines.append(f"{s:<17} total {sm['total']:>6}  agree {sm['agree']:>6}  "
                         f"disagree {sm['disagree']:>3}  skipped {sm['skipped']:>4}  degenerate {sm['degenerate']:>4}")
        for s in sorted(self.reports):
            for k, v in self.reports[s].info.get("tallies", {}).items():
                lines.append(f"{s:<17} {k:<32} {v:>10}")
        for e in self.errors:
            lines.append(f"ERROR {e['entry']}: {e['error']}")
        lines.append(f"disagreements: {self.disagreement_count}")
        return "\n".join(lines)


def _short(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, dict):
        return ",".join(f"{k}={_short(x)}" for k, x in v.items())
    return str(v)


# ---------------------------------------------------------------------------
# helpers on concrete groups
# ---------------------------------------------------------------------------


def _invariants(H) -> FgAbelian:
    return fg.abelian_invariants(H)


def _quotient_invariants(G: fg.FiniteGroup, N: fg.Subgroup) -> FgAbelian:
    Q, _ = fg.quotient(G, N)
    return fg.abelian_invariants(Q)


def _abelianized_quotient_invariants(G: fg.FiniteGroup, X: fg.Subgroup) -> FgAbelian:
    """Invariants of (G/X)^ab = G/G'X, the domain that matters for Hom into an abelian group."""
    return _quotient_invariants(G, fg.generate(G, fg.derived_subgroup(G).members + X.members))


def _primes_of(n: int) -> set[int]:
    return set(normalize([n]).primes) if n > 1 else set()


def _aut_structure(auts: Sequence[fg.Automorphism]) -> str:
    """Structure of a set of automorphisms: invariants if it is an abelian group."""
    A = fg.group_of(auts)
    if not A.is_abelian:
        return f"non-abelian of order {A.order}"
    return _describe(fg.abelian_invariants(A))


def _describe(A: FgAbelian) -> str:
    return f"{A} (order {A.order})" if A.is_finite else str(A)


def _same_set(a: Iterable[fg.Automorphism], b: Iterable[fg.Automorphism]) -> bool:
    return set(a) == set(b)


# ---------------------------------------------------------------------------
# per-claim checks
# ---------------------------------------------------------------------------


def verify_lemma23(G: fg.FiniteGroup, X: fg.Subgroup, Y: fg.Subgroup, max_order: int = fg.DEFAULT_MAX_ORDER,
                   input: str = "") -> Case:
    """Automorphisms fixing X pointwise with ``g^-1 a(g)`` in Y, against Hom(G/X, Y)."""
    Z = fg.center(G)
    if not (Y <= Z and Y <= X and X.is_normal()):
        raise fg.GroupError("PRECONDITION", "need X normal and Y <= Z(G) n X")
    auts = fg.aut_xy(G, Y, X, max_order)
    predicted = _describe(hom_group(_abelianized_quotient_invariants(G, X), _invariants(Y)))
    observed = _aut_structure(auts)
    return Case("LEMMA23", G.name, input or f"|X|={X.order},|Y|={Y.order}", predicted, observed,
                detail={"count": len(auts)})


def verify_attar(G: fg.FiniteGroup, max_order: int = fg.DEFAULT_MAX_ORDER) -> Case:
    """C* = Inn(G) iff G is abelian, or of class 2 with cyclic center (finite p-groups)."""
    if G.order > 1 and fg.is_p_group(G) is None:
        return _skip("ATTAR", G, "NOT_P_GROUP", f"order {G.order} is not a prime power")
    Z = fg.center(G)
    predicted = G.is_abelian or (fg.nilpotency_class(G) == 2 and Z.is_cyclic())
    cstar = fg.central_automorphisms_fixing_center(G, max_order)
    inn = fg.inner_automorphisms(G)
    return Case("ATTAR", G.name, "", predicted, _same_set(cstar, inn),
                detail={"|C*|": len(cstar), "|Inn|": len(inn)})


def verify_cor24(G: fg.FiniteGroup, max_order: int = fg.DEFAULT_MAX_ORDER) -> Case:
    """For class 2: C* ~ Inn(G) iff Z(G) is cyclic at every prime of G/Z(G)."""
    c = fg.nilpotency_class(G)
    if c != 2:
        return _skip("COR24", G, "WRONG_CLASS", f"nilpotency class {c}")
    Z = fg.center(G)
    predicted = cor24_center_shape(_invariants(Z), _primes_of(G.order // Z.order))
    cstar = fg.central_automorphisms_fixing_center(G, max_order)
    observed = _aut_structure(cstar) == _aut_structure(fg.inner_automorphisms(G))
    return Case("COR24", G.name, "", predicted, observed,
                detail={"|C*|": len(cstar), "Z": str(_invariants(Z))})


def verify_cor25(G: fg.FiniteGroup, M: fg.Subgroup, N: fg.Subgroup, max_order: int = fg.DEFAULT_MAX_ORDER,
                 input: str = "") -> Case:
    """Aut^M_N(G) = Inn(G) iff class 2, N = Z(G), G' <= M, and M has the cyclic shape."""
    label = input or f"|M|={M.order},|N|={N.order}"
    if G.is_abelian:
        return _skip("COR25", G, "ABELIAN", "the claim concerns non-abelian groups", label)
    Z = fg.center(G)
    if not (M <= Z <= N and M.is_normal() and N.is_normal()):
        raise fg.GroupError("PRECONDITION", "need normal M <= Z(G) <= N")
    Gp = fg.derived_subgroup(G)
    predicted = (
        fg.nilpotency_class(G) == 2
        and N == Z
        and Gp <= M
        and cor24_center_shape(_invariants(M), _primes_of(G.order // Z.order))
    )
    auts = fg.aut_xy(G, M, N, max_order)
    return Case("COR25", G.name, label, predicted, _same_set(auts, fg.inner_automorphisms(G)),
                detail={"|Aut^M_N|": len(auts)})


def _commutator_set_condition(G: fg.FiniteGroup, k: int) -> bool:
    """``gamma_{k+1} = {[x, h] : h in gamma_k}`` for every x outside C_G(gamma_k)."""
    gammas = fg.lower_central_series(G)
    gk, gk1 = gammas[k - 1], gammas[k]
    C = fg.centralizer(G, gk)
    target = gk1.member_set
    return all({G.comm(x, h) for h in gk.members} == target for x in G.elements if x not in C)


def verify_cor26_27(G: fg.FiniteGroup, max_order: int = fg.DEFAULT_MAX_ORDER) -> list[Case]:
    """Hom(G/zeta_k, gamma_{k+1}) against G/zeta_k, Inn(G) and Aut_{k-pwi}(G), k = class - 1.

    Returns a COR26 case and a COR27 case. Hom is counted by brute force on
    the concrete groups; the predictions come from the cyclicity tests.
    """
    c = fg.nilpotency_class(G)
    if c is None or c < 2:
        why = "not nilpotent" if c is None else f"nilpotency class {c}"
        return [_skip("COR26", G, "WRONG_CLASS", why), _skip("COR27", G, "WRONG_CLASS", why)]
    k = c - 1
    zeta_k = fg.upper_central_series(G)[k]
    gammas = fg.lower_central_series(G)
    gamma = gammas[k]
    Q, _ = fg.quotient(G, zeta_k)
    q_inv = fg.abelian_invariants(Q)
    _, hom_inv = fg.hom_bruteforce(Q, gamma.as_group(), max_order)
    inn = fg.inner_automorphisms(G)
    inn_structure = _aut_structure(inn)
    hypothesis = _commutator_set_condition(G, k)
    flags = ("COMMUTATOR_SET_HYPOTHESIS",) if hypothesis else ()

    pred26 = {"hom_iso_quotient": gamma.is_cyclic()}
    obs26 = {"hom_iso_quotient": is_isomorphic(hom_inv, q_inv)}
    pred27 = {"hom_iso_inn": c == 2 and fg.derived_subgroup(G).is_cyclic()}
    obs27 = {"hom_iso_inn": _describe(hom_inv) == inn_structure}
    detail = {"k": k, "G/zeta_k": str(q_inv), "Hom": str(hom_inv), "Inn": inn_structure}
    if hypothesis:
        kpwi = fg.kpwi_group(G, k, max_order)
        kpwi_structure = _aut_structure(kpwi)
        detail["Aut_kpwi"] = kpwi_structure
        # the route through Hom(G/zeta_k, gamma_{k+1}) is recorded, not predicted:
        # for k >= 2 elements of C_G(gamma_k) outside zeta_k are forced to be fixed
        detail["kpwi_iso_hom"] = kpwi_structure == _describe(hom_inv)
        if not detail["kpwi_iso_hom"]:
            flags += ("KPWI_NOT_ISO_HOM",)
        if gamma.is_cyclic():
            pred26["kpwi_quotient_of_inn"] = True
            obs26["kpwi_quotient_of_inn"] = (
                len(inn) % len(kpwi) == 0
                and fg.epimorphism_exists(fg.group_of(inn), fg.group_of(kpwi))
            )
        pred27["kpwi_iso_inn"] = pred27["hom_iso_inn"]
        obs27["kpwi_iso_inn"] = kpwi_structure == inn_structure
    return [
        Case("COR26", G.name, f"k={k}", pred26, obs26, flags, detail=detail),
        Case("COR27", G.name, f"k={k}", pred27, obs27, flags, detail=dict(detail)),
    ]


def verify_cor28_29(G: fg.FiniteGroup, max_order: int = fg.DEFAULT_MAX_ORDER) -> list[Case]:
    """Var(G) = Inn(G) on a finite p-group, against the shape predicates.

    The torsion-branch check (COR28) needs pi(G/L) = pi(G/Z); otherwise only
    the COR29 shape is compared.
    """
    if G.order > 1 and fg.is_p_group(G) is None:
        return [_skip(s, G, "NOT_P_GROUP", f"order {G.order}") for s in ("COR28", "COR29")]
    L = fg.absolute_center(G, max_order)
    Z = fg.center(G)
    Gp = fg.derived_subgroup(G)
    observed = _same_set(fg.var_group(G, max_order), fg.inner_automorphisms(G))
    detail = {"|L|": L.order, "|Z|": Z.order, "G'<=L": Gp <= L}
    if not Gp <= L:
        return [
            _skip("COR28", G, "HYPOTHESIS_VIOLATED", "G' is not contained in L(G)"),
            Case("COR29", G.name, "", False, observed, ("G'_NOT_IN_L",), detail=detail),
        ]
    gz, gl, l_inv = _quotient_invariants(G, Z), _quotient_invariants(G, L), _invariants(L)
    detail.update({"G/Z": str(gz), "G/L": str(gl), "L": str(l_inv)})
    case29 = Case("COR29", G.name, "", cor29_shape(gz, gl, l_inv), observed, detail=detail)
    inp = DecisionInput(GClass.TORSION, gz, gl, l_inv)
    if not check_compatible(inp):
        return [_skip("COR28", G, "HYPOTHESIS_VIOLATED", "pi(G/L) != pi(G/Z)"), case29]
    verdict = decide_lemma21(inp)
    detail28 = dict(detail, branch=verdict.branch.value, witnesses={str(p): r for p, r in verdict.witnesses.items()})
    return [Case("COR28", G.name, "", verdict.holds, observed, verdict.flags, detail=detail28), case29]


def verify_cor210(G: fg.FiniteGroup, max_order: int = fg.DEFAULT_MAX_ORDER) -> Case:
    """For autonilpotent class 2: Var(G) = Inn(G) iff L(G) = Z(G) is cyclic."""
    if G.order > 1 and fg.is_p_group(G) is None:
        return _skip("COR210", G, "NOT_P_GROUP", f"order {G.order}")
    if fg.autocenter_series(G, 2, max_order).order != G.order:
        return _skip("COR210", G, "HYPOTHESIS_VIOLATED", "L_2(G) != G")
    L, Z = fg.absolute_center(G, max_order), fg.center(G)
    predicted = L == Z and L.is_cyclic()
    observed = _same_set(fg.var_group(G, max_order), fg.inner_automorphisms(G))
    return Case("COR210", G.name, "", predicted, observed, detail={"|L|": L.order, "|Z|": Z.order})


def verify_exp_equality(G: fg.FiniteGroup, max_order: int = fg.DEFAULT_MAX_ORDER) -> Case:
    """exp(G/L(G)) = exp(G*) whenever G* <= L(G)."""
    L = fg.absolute_center(G, max_order)
    Gstar = fg.autocommutator_subgroup(G, max_order)
    if not Gstar <= L:
        return _skip("EXP_EQUALITY_210", G, "HYPOTHESIS_VIOLATED", "G* is not contained in L(G)")
    Q, _ = fg.quotient(G, L)
    return Case("EXP_EQUALITY_210", G.name, "", Q.exponent, Gstar.as_group().exponent,
                detail={"|G*|": Gstar.order, "|L|": L.order})


def verify_hom_oracle(A: fg.FiniteGroup, B: fg.FiniteGroup, max_order: int = fg.DEFAULT_MAX_ORDER) -> Case:
    """Invariant-level Hom(A, B) against enumeration of homomorphisms."""
    count, inv = fg.hom_bruteforce(A, B, max_order)
    predicted = hom_group(fg.abelian_invariants(A), fg.abelian_invariants(B))
    return Case("HOM_ORACLE", A.name, f"-> {B.name}", _describe(predicted), _describe(inv),
                detail={"count": count})


# ---------------------------------------------------------------------------
# subgroup choices per claim
# ---------------------------------------------------------------------------


def lemma23_pairs(G: fg.FiniteGroup) -> list[tuple[str, fg.Subgroup, fg.Subgroup]]:
    """(label, X, Y) for X in {Z, G'Z, G} and every subgroup Y of Z(G) n X."""
    Z = fg.center(G)
    GZ = fg.generate(G, fg.derived_subgroup(G).members + Z.members)
    out, seen = [], set()
    for xname, X in (("Z", Z), ("G'Z", GZ), ("G", fg.whole(G))):
        if X.members in seen:
            continue
        seen.add(X.members)
        inter = fg.Subgroup(G, tuple(Z.member_set & X.member_set))
        for Y in fg.subgroups_between(G, fg.trivial_subgroup(G), inter):
            out.append((f"X={xname},|Y|={Y.order}:{Y.members}", X, Y))
    return out


def cor25_pairs(G: fg.FiniteGroup) -> list[tuple[str, fg.Subgroup, fg.Subgroup]]:
    """(label, M, N) for every subgroup M <= Z(G) and every normal N >= Z(G)."""
    Z = fg.center(G)
    Ms = fg.subgroups_between(G, fg.trivial_subgroup(G), Z)
    Ns = [N for N in fg.subgroups_between(G, Z) if N.is_normal()]
    return [(f"|M|={M.order}:{M.members},|N|={N.order}", M, N) for M in Ms for N in Ns]


# ---------------------------------------------------------------------------
# Lemma sweep over invariant data
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SweepBounds:
    primes: tuple[int, ...] = (2, 3)
    max_length: int = 3
    max_exponent: int = 3
    max_free_rank: int = 2
    #: cap on the total torsion rank d(.) of each group; None for no cap
    max_torsion_rank: int | None = None
    classes: tuple[GClass, ...] = (GClass.TORSION_FREE, GClass.TORSION, GClass.MIXED)
    include_trivial_gn: bool = False


def _partitions(max_length: int, max_exponent: int) -> list[tuple[int, ...]]:
    out = [()]
    for length in range(1, max_length + 1):
        out.extend(c[::-1] for c in itertools.combinations_with_replacement(range(1, max_exponent + 1), length))
    return out


def _fits_under(alpha: tuple[int, ...], beta: tuple[int, ...]) -> bool:
    return len(alpha) <= len(beta) and all(a <= b for a, b in zip(alpha, beta)) and bool(alpha) == bool(beta)


def iter_sweep_inputs(bounds: SweepBounds):
    """Every quotient-compatible DecisionInput within ``bounds``, class-consistent."""
    parts = _partitions(bounds.max_length, bounds.max_exponent)
    torsions = []
    for combo in itertools.product(parts, repeat=len(bounds.primes)):
        if bounds.max_torsion_rank is not None and sum(map(len, combo)) > bounds.max_torsion_rank:
            continue
        torsions.append(combo)
    ranks = range(bounds.max_free_rank + 1)

    def build(free, combo):
        return FgAbelian(free, tuple((p, e) for p, e in zip(bounds.primes, combo) if e))

    below = {
        tn: [tl for tl in torsions if all(_fits_under(a, b) for a, b in zip(tl, tn))]
        for tn in torsions
    }
    for g_class in bounds.classes:
        gn_ranks = [0] if g_class is GClass.TORSION else ranks
        m_ranks = [0] if g_class is GClass.TORSION else ranks
        m_torsions = [torsions[0]] if g_class is GClass.TORSION_FREE else torsions
        Ms = [build(c, tm) for c in m_ranks for tm in m_torsions]
        for b in gn_ranks:
            for tn in torsions:
                GN = build(b, tn)
                if GN.is_trivial and not bounds.include_trivial_gn:
                    continue
                GLs = [build(a, tl) for a in range(b + 1) for tl in below[tn]]
                for M in Ms:
                    for GL in GLs:
                        yield DecisionInput(g_class, GL, GN, M)


def sweep_lemma21(bounds: SweepBounds = SweepBounds(), keep_agreeing: bool = False) -> Report:
    """Compare :func:`decide_lemma21` with :func:`hom_iso_check` on every input within ``bounds``.

    Agreeing non-degenerate cases are tallied but only listed when
    ``keep_agreeing`` is set; disagreements and degenerate cases are always listed.
    """
    report = Report("LEMMA21_SWEEP", info={"bounds": _bounds_dict(bounds)})
    t = report.tallies
    seen: Counter = Counter()  # (class, branch) pairs, named at the end
    for inp in iter_sweep_inputs(bounds):
        verdict = decide_lemma21(inp)  # raises on an incompatible input
        oracle = hom_iso_check(inp.GN, inp.M, inp.GL)
        seen[inp.g_class, verdict.branch] += 1
        if verdict.degenerate or verdict.holds != oracle or keep_agreeing:
            report.add(Case(
                "LEMMA21_SWEEP", inp.g_class.value,
                f"GL={inp.GL}; GN={inp.GN}; M={inp.M}",
                verdict.holds, oracle, verdict.flags,
                detail={"branch": verdict.branch.value, "literal_holds": verdict.literal_holds,
                        "reason": verdict.reason.value if verdict.reason else None},
            ))
        else:
            t["total"] += 1
            t["agree"] += 1
    for (g_class, branch), n in seen.items():
        t["class:" + g_class.value] += n
        t["branch:" + branch.value] += n
    for case in report.cases:
        if case.degenerate:
            t["degenerate:" + case.flags[-1]] += 1
    report.info["tallies"] = {k: t[k] for k in sorted(t) if ":" in k}
    return report


def _bounds_dict(b: SweepBounds) -> dict:
    return {
        "primes": list(b.primes), "max_length": b.max_length, "max_exponent": b.max_exponent,
        "max_free_rank": b.max_free_rank, "max_torsion_rank": b.max_torsion_rank,
        "classes": [c.value for c in b.classes], "include_trivial_gn": b.include_trivial_gn,
    }


# ---------------------------------------------------------------------------
# corpus
# ---------------------------------------------------------------------------

DEFAULT_MANIFEST = [
    # order 8
    "builtin:cyclic(8)",
    "builtin:abelian(4, 2)",
    "builtin:abelian(2, 2, 2)",
    "builtin:dihedral(8)",
    "builtin:quaternion(8)",
    # order 16
    "builtin:cyclic(16)",
    "builtin:abelian(8, 2)",
    "builtin:abelian(4, 4)",
    "builtin:abelian(4, 2, 2)",
    "builtin:abelian(2, 2, 2, 2)",
    "builtin:dihedral(16)",
    "builtin:quaternion(16)",
    "builtin:semidihedral(16)",
    "builtin:modular(2, 4)",
    "builtin:direct_product(dihedral(8), cyclic(2))",
    "builtin:direct_product(quaternion(8), cyclic(2))",
    # order 27
    "builtin:heisenberg(3)",
    "builtin:modular(3)",
    # small and non-nilpotent groups
    "builtin:cyclic(2)",
    "builtin:cyclic(4)",
    "builtin:abelian(2, 2)",
    "builtin:cyclic(6)",
    "builtin:dihedral(6)",
    "builtin:abelian(3, 3)",
    "builtin:cyclic(9)",
    "builtin:abelian(6, 2)",
    "builtin:dihedral(12)",
]


def read_manifest(path: str | Path) -> list[str]:
    """Entries of a manifest file; ``file:`` paths are resolved against its directory."""
    path = Path(path)
    entries = []
    for raw in path.read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("file:"):
            target = Path(line[5:].strip())
            if not target.is_absolute():
                target = path.parent / target
            line = f"file:{target}"
        entries.append(line)
    return entries


def load_entry(entry: str) -> fg.FiniteGroup:
    kind, _, spec = entry.partition(":")
    if kind == "builtin":
        G = fg.parse_builtin(spec)
        G.name = spec.strip()
        return G
    if kind == "file":
        return fg.load_group(spec.strip())
    raise fg.GroupError("BAD_MANIFEST", f"manifest entry {entry!r} must start with builtin: or file:")


def run_group(G: fg.FiniteGroup, max_order: int = fg.DEFAULT_MAX_ORDER, lemma23_max: int = 32) -> list[Case]:
    """Every applicable claim on one group."""
    cases = [verify_attar(G, max_order), verify_cor24(G, max_order)]
    cases += verify_cor26_27(G, max_order)
    cases += verify_cor28_29(G, max_order)
    cases.append(verify_cor210(G, max_order))
    cases.append(verify_exp_equality(G, max_order))
    if G.order <= lemma23_max:
        cases += [verify_lemma23(G, X, Y, max_order, label) for label, X, Y in lemma23_pairs(G)]
    if not G.is_abelian:
        cases += [verify_cor25(G, M, N, max_order, label) for label, M, N in cor25_pairs(G)]
    return cases


def run_corpus(manifest: Sequence[str] | str | Path, max_order: int = fg.DEFAULT_MAX_ORDER,
               hom_pairs_max: int = 36) -> Bundle:
    """Run every applicable claim over the manifest's groups.

    Load failures are recorded per entry and do not stop the run. Abelian
    groups of order up to ``hom_pairs_max`` are also paired up for the
    Hom oracle check.
    """
    if isinstance(manifest, (str, Path)):
        manifest = DEFAULT_MANIFEST if str(manifest) == "default" else read_manifest(manifest)
    bundle = Bundle()
    groups = []
    for entry in manifest:
        try:
            G = load_entry(entry)
            if G.order > max_order:
                raise fg.GroupError("ORDER_BOUND_EXCEEDED", f"order {G.order} exceeds {max_order}")
        except (fg.GroupError, OSError) as exc:
            log.warning("skipping %s: %s", entry, exc)
            bundle.errors.append({"entry": entry, "error": str(exc)})
            continue
        groups.append(G)
        for case in run_group(G, max_order):
            bundle.add(case)
    abelian = [G for G in groups if G.is_abelian and G.order <= hom_pairs_max]
    for A, B in itertools.product(abelian, repeat=2):
        bundle.add(verify_hom_oracle(A, B, max_order))
    return bundle
