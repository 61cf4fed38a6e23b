"""Decide ``Hom(G/N, M) ~ G/L`` from the invariants of G/L, G/N and M.

The three branches follow the torsion classification of G:

* ``COND_I``   G torsion-free: M infinite cyclic, G/L and G/N torsion-free of equal rank;
* ``COND_II``  G torsion: M cyclic and nontrivial at every prime of G/N,
  equal partition lengths, and each exponent of G/L equal to
  ``min(beta_ij, gamma_i1)``, written as the r_i split;
* ``COND_III`` G mixed: as ``COND_II`` with G/L and G/N finite and M free rank arbitrary.

The torsion classification of G cannot be read off the quotients, so callers
pass it explicitly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .fgab import FgAbelian, is_isomorphic

__all__ = [
    "GClass",
    "Branch",
    "Reason",
    "DeciderError",
    "DecisionInput",
    "Verdict",
    "check_compatible",
    "compatibility_problems",
    "decide_lemma21",
    "decide_remark22",
    "cor24_center_shape",
    "cor29_shape",
    "split_index",
]


class GClass(str, enum.Enum):
    TORSION_FREE = "TORSION_FREE"
    TORSION = "TORSION"
    MIXED = "MIXED"

    @classmethod
    def parse(cls, text: str) -> "GClass":
        aliases = {"tf": cls.TORSION_FREE, "torsion-free": cls.TORSION_FREE,
                   "torsion": cls.TORSION, "mixed": cls.MIXED}
        key = text.strip()
        if key.lower() in aliases:
            return aliases[key.lower()]
        return cls(key.upper())


class Branch(str, enum.Enum):
    COND_I = "COND_I"
    COND_II = "COND_II"
    COND_III = "COND_III"
    NONE = "NONE"


class Reason(str, enum.Enum):
    PRIME_MISSING_IN_M = "PRIME_MISSING_IN_M"
    PART_NOT_CYCLIC = "PART_NOT_CYCLIC"
    LENGTH_MISMATCH = "LENGTH_MISMATCH"
    EXPONENT_MISMATCH = "EXPONENT_MISMATCH"
    RANK_MISMATCH = "RANK_MISMATCH"
    NOT_FINITE_QUOTIENT = "NOT_FINITE_QUOTIENT"
    QUOTIENT_HAS_TORSION = "QUOTIENT_HAS_TORSION"


#: Flags attached to verdicts where the literal conditions and the
#: isomorphism disagree, and the verdict follows the isomorphism.
DEGENERATE = "DEGENERATE"
GN_TRIVIAL = "GN_TRIVIAL"
GL_AND_M_TRIVIAL = "GL_AND_M_TRIVIAL"
MIXED_FREE_QUOTIENT = "MIXED_FREE_QUOTIENT"

_BRANCH_OF = {
    GClass.TORSION_FREE: Branch.COND_I,
    GClass.TORSION: Branch.COND_II,
    GClass.MIXED: Branch.COND_III,
}


class DeciderError(ValueError):
    """Raised with a ``code`` of PRECONDITION_VIOLATED, HYPOTHESIS_VIOLATED or MIXED_PRIMES."""

    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code


@dataclass(frozen=True)
class DecisionInput:
    g_class: GClass
    GL: FgAbelian
    GN: FgAbelian
    M: FgAbelian


@dataclass(frozen=True)
class Verdict:
    holds: bool
    branch: Branch
    witnesses: dict[int, int] = field(default_factory=dict, hash=False)
    reason: Reason | None = None
    flags: tuple[str, ...] = ()
    #: what the conditions say read to the letter; differs from ``holds`` only on flagged inputs
    literal_holds: bool | None = None

    @property
    def degenerate(self) -> bool:
        return DEGENERATE in self.flags

    def as_dict(self) -> dict:
        return {
            "holds": self.holds,
            "branch": self.branch.value,
            "witnesses": {str(p): r for p, r in sorted(self.witnesses.items())},
            "reason": self.reason.value if self.reason else None,
            "flags": list(self.flags),
            "literal_holds": self.literal_holds,
        }


def _fits(GL: FgAbelian, GN: FgAbelian) -> bool:
    if GL.primes != GN.primes:
        return False
    for (_, alpha), (_, beta) in zip(GL.parts, GN.parts):
        if len(alpha) > len(beta) or any(x > y for x, y in zip(alpha, beta)):
            return False
    return True


def compatibility_problems(inp: DecisionInput) -> list[str]:
    """Human-readable list of violated input invariants (empty when compatible)."""
    GL, GN, M = inp.GL, inp.GN, inp.M
    g = inp.g_class
    if (GL.free_rank <= GN.free_rank and _fits(GL, GN)
            and not (g is GClass.TORSION_FREE and M.parts)
            and not (g is GClass.TORSION and (GL.free_rank or GN.free_rank or M.free_rank))):
        return []
    problems = []
    if GL.free_rank > GN.free_rank:
        problems.append(f"free rank of G/L ({GL.free_rank}) exceeds that of G/N ({GN.free_rank})")
    if set(GL.primes) != set(GN.primes):
        problems.append(f"prime sets differ: G/L {GL.primes} vs G/N {GN.primes}")
    for p in GN.primes:
        alpha, beta = GL.partition(p), GN.partition(p)
        if len(alpha) > len(beta) or any(x > y for x, y in zip(alpha, beta)):
            problems.append(f"at p={p}, partition {alpha} of G/L does not fit under {beta} of G/N")
    if inp.g_class is GClass.TORSION_FREE and not M.is_torsion_free:
        problems.append("G torsion-free but M has torsion")
    if inp.g_class is GClass.TORSION and (GL.free_rank or GN.free_rank or M.free_rank):
        problems.append("G torsion but a free rank is nonzero")
    return problems


def check_compatible(inp: DecisionInput) -> bool:
    return not compatibility_problems(inp)


def split_index(beta: tuple[int, ...], gamma1: int) -> int:
    """Largest 1-based j with ``beta[j-1] > gamma1``, or 0 when there is none."""
    r = 0
    for j, b in enumerate(beta, 1):
        if b > gamma1:
            r = j
    return r


def _torsion_conditions(GL: FgAbelian, GN: FgAbelian, M: FgAbelian):
    """Per-prime test shared by branches II and III. Returns (reason, witnesses)."""
    witnesses = {}
    for p in GN.primes:
        alpha, beta, gamma = GL.partition(p), GN.partition(p), M.partition(p)
        if not gamma:
            return Reason.PRIME_MISSING_IN_M, witnesses
        if len(gamma) > 1:
            return Reason.PART_NOT_CYCLIC, witnesses
        if len(alpha) != len(beta):
            return Reason.LENGTH_MISMATCH, witnesses
        g1 = gamma[0]
        r = split_index(beta, g1)
        expected = (g1,) * r + beta[r:]
        if alpha != expected:
            return Reason.EXPONENT_MISMATCH, witnesses
        witnesses[p] = r
    return None, witnesses


def _literal(inp: DecisionInput) -> tuple[Reason | None, dict[int, int]]:
    GL, GN, M = inp.GL, inp.GN, inp.M
    if inp.g_class is GClass.TORSION_FREE:
        if not (GL.is_torsion_free and GN.is_torsion_free):
            return Reason.QUOTIENT_HAS_TORSION, {}
        if M.free_rank != 1 or GL.free_rank != GN.free_rank:
            return Reason.RANK_MISMATCH, {}
        return None, {}
    if inp.g_class is GClass.MIXED and (GL.free_rank or GN.free_rank):
        return Reason.NOT_FINITE_QUOTIENT, {}
    return _torsion_conditions(GL, GN, M)


def _degenerate_kind(inp: DecisionInput) -> str | None:
    """Inputs on which the isomorphism holds outside the literal conditions."""
    GL, GN, M = inp.GL, inp.GN, inp.M
    if GN.is_trivial:
        return GN_TRIVIAL
    if GL.is_trivial and M.is_trivial:
        return GL_AND_M_TRIVIAL
    if (inp.g_class is GClass.MIXED and GL.is_torsion_free and GN.is_torsion_free
            and GL.free_rank == GN.free_rank and is_isomorphic(M, FgAbelian(1))):
        return MIXED_FREE_QUOTIENT
    return None


def decide_lemma21(inp: DecisionInput) -> Verdict:
    """Evaluate the three conditions for ``Hom(G/N, M) ~ G/L``.

    On the degenerate inputs (G/N trivial; G/L and M trivial; G mixed with
    torsion-free G/N = G/L and M infinite cyclic) the isomorphism holds while
    the conditions, read literally, fail. There the verdict follows the
    isomorphism, carries the ``DEGENERATE`` flag and records ``literal_holds``.
    """
    problems = compatibility_problems(inp)
    if problems:
        raise DeciderError("PRECONDITION_VIOLATED", "; ".join(problems))
    reason, witnesses = _literal(inp)
    literal = reason is None
    branch = _BRANCH_OF[inp.g_class]
    kind = _degenerate_kind(inp)
    if kind is not None and not literal:
        return Verdict(True, branch, {}, None, (DEGENERATE, kind), literal_holds=False)
    if literal:
        if branch is Branch.COND_I:
            witnesses = {}
        return Verdict(True, branch, witnesses, None, (), literal_holds=True)
    return Verdict(False, Branch.NONE, {}, reason, (), literal_holds=False)


def decide_remark22(GL: FgAbelian, M: FgAbelian, g_class: GClass) -> Verdict:
    """Specialization to N = L when exp(G/L) divides exp(M).

    Then ``Hom(G/L, M) ~ G/L`` iff M is infinite cyclic, or G/L is finite and
    M is cyclic at every prime of G/L.
    """
    for p, alpha in GL.parts:
        gamma = M.partition(p)
        if not gamma or gamma[0] < alpha[0]:
            raise DeciderError("HYPOTHESIS_VIOLATED", f"exp(G/L) does not divide exp(M) at p={p}")
    inp = DecisionInput(g_class, GL, GL, M)
    problems = compatibility_problems(inp)
    if problems:
        raise DeciderError("PRECONDITION_VIOLATED", "; ".join(problems))
    branch = _BRANCH_OF[g_class]
    if is_isomorphic(M, FgAbelian(1)):
        return Verdict(True, branch, {}, None, (), literal_holds=True)
    if not GL.is_finite:
        return Verdict(False, Branch.NONE, {}, Reason.NOT_FINITE_QUOTIENT, (), literal_holds=False)
    if any(len(M.partition(p)) != 1 for p in GL.primes):
        return Verdict(False, Branch.NONE, {}, Reason.PART_NOT_CYCLIC, (), literal_holds=False)
    witnesses = {} if branch is Branch.COND_I else {p: 0 for p in GL.primes}
    return Verdict(True, branch, witnesses, None, (), literal_holds=True)


def cor24_center_shape(Z_of_G: FgAbelian, primes_GmodZ) -> bool:
    """Center shape under which C* ~ Inn(G) for nilpotent class-2 G."""
    if is_isomorphic(Z_of_G, FgAbelian(1)):
        return True
    return all(len(Z_of_G.partition(p)) == 1 for p in primes_GmodZ)


def cor29_shape(GmodZ: FgAbelian, GmodL: FgAbelian, L: FgAbelian) -> bool:
    """Shape test for Var(G) = Inn(G) on a finite p-group with G' <= L(G).

    ``GmodZ``, ``GmodL`` and ``L`` are the invariants of G/Z(G), G/L(G) and L(G).
    As in :func:`decide_lemma21`, trivial G/L, or trivial G/Z with trivial L,
    counts as a match.
    """
    groups = (GmodZ, GmodL, L)
    if any(not G.is_finite for G in groups):
        raise DeciderError("MIXED_PRIMES", "inputs must be finite p-groups")
    primes = {p for G in groups for p in G.primes}
    if len(primes) > 1:
        raise DeciderError("MIXED_PRIMES", f"inputs involve primes {sorted(primes)}")
    if GmodL.is_trivial:
        return GmodZ.is_trivial
    if GmodZ.is_trivial and L.is_trivial:
        return True
    if not L.is_cyclic:
        return False
    if is_isomorphic(GmodZ, GmodL):
        return True
    (p,) = primes or {2}
    alpha, beta, gamma = GmodZ.partition(p), GmodL.partition(p), L.partition(p)
    if len(alpha) != len(beta):
        return False
    g1 = gamma[0] if gamma else 0
    k = split_index(beta, g1)
    return alpha == (g1,) * k + beta[k:]
