"""Command-line front end.

Abelian groups are written as factors joined by ``x``: ``Z``, ``Z^k`` or
``Cn``, e.g. ``"C4 x C2 x Z^2"``; ``1`` denotes the trivial group.
Groups for the ``group`` and ``verify`` commands are either a JSON Cayley
table file or a builtin expression such as ``"direct_product(dihedral(8), cyclic(2))"``.

Exit status: 0 on success, 1 when a verification disagrees, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Any, Sequence

from . import fingrp as fg
from . import verifier as vf
from .decider import DeciderError, DecisionInput, GClass, decide_lemma21
from .fgab import FgAbelian, IntMatrix, from_relations, is_isomorphic, normalize, smith_normal_form
from .homfun import hom_group

__all__ = ["ParseError", "parse_abelian", "render", "load_group_arg", "read_matrix", "build_parser", "main"]

EXIT_OK, EXIT_DISAGREE, EXIT_INPUT = 0, 1, 2


class ParseError(ValueError):
    """Malformed abelian-group expression; ``position`` is a 0-based column."""

    code = "PARSE_ERROR"

    def __init__(self, message: str, position: int):
        super().__init__(f"PARSE_ERROR at column {position}: {message}")
        self.position = position


_FACTOR = re.compile(r"Z(?:\^(\d+))?|C(\d+)")


def parse_abelian(text: str) -> FgAbelian:
    """Parse ``Z | Z^k | Cn`` factors separated by ``x`` (whitespace-insensitive)."""
    if text.strip() == "1":
        return FgAbelian()
    factors: list[int | float] = []
    pos, n = 0, len(text)

    def skip_ws(i: int) -> int:
        while i < n and text[i].isspace():
            i += 1
        return i

    pos = skip_ws(pos)
    while True:
        m = _FACTOR.match(text, pos)
        if m is None:
            what = repr(text[pos]) if pos < n else "end of input"
            raise ParseError(f"expected Z, Z^k or Cn, found {what}", pos)
        if m.group(2) is not None:
            order = int(m.group(2))
            if order == 0:
                raise ParseError("C0 is not a cyclic group", m.start(2))
            factors.append(order)
        else:
            k = int(m.group(1)) if m.group(1) is not None else 1
            if k == 0:
                raise ParseError("Z^0 is not allowed; use 1 for the trivial group", m.start(1))
            factors.extend([float("inf")] * k)
        pos = skip_ws(m.end())
        if pos == n:
            break
        if text[pos] != "x":
            raise ParseError(f"expected 'x' between factors, found {text[pos]!r}", pos)
        pos = skip_ws(pos + 1)
    return normalize(factors)


def render(A: FgAbelian) -> str:
    return str(A)


def load_group_arg(arg: str) -> fg.FiniteGroup:
    """A group from a JSON table file if ``arg`` names one, else from a builtin expression."""
    path = Path(arg)
    if path.suffix == ".json" or path.is_file():
        return fg.load_group(path)
    G = fg.parse_builtin(arg)
    G.name = arg.strip()
    return G


def read_matrix(path: str | Path) -> IntMatrix:
    """Matrix file: first line ``rows cols``, then row-major integers."""
    tokens = Path(path).read_text().split()
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise ValueError(f"matrix file {path}: {exc}") from None
    if len(values) < 2:
        raise ValueError(f"matrix file {path}: missing 'rows cols' header")
    rows, cols = values[:2]
    body = values[2:]
    if rows < 0 or cols < 0 or len(body) != rows * cols:
        raise ValueError(f"matrix file {path}: expected {rows}x{cols} = {rows * cols} entries, got {len(body)}")
    return IntMatrix.from_rows([body[i * cols:(i + 1) * cols] for i in range(rows)]) if rows else IntMatrix(0, cols, ())


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------

def _emit(doc: Any, fmt: str, text: str | None = None) -> None:
    if fmt == "json":
        print(json.dumps(doc, indent=2, sort_keys=True, default=str))
    elif text is not None:
        print(text)
    elif isinstance(doc, dict):
        width = max((len(k) for k in doc), default=0)
        for k, v in doc.items():
            print(f"{k:<{width}}  {v if not isinstance(v, (list, tuple)) else ', '.join(map(str, v))}")
    else:
        print(doc)


def _abelian_doc(A: FgAbelian) -> dict:
    return {
        "group": render(A),
        "free_rank": A.free_rank,
        "parts": {str(p): list(e) for p, e in A.parts},
        "order": None if not A.is_finite else A.order,
    }


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_hom(args) -> int:
    A, B = parse_abelian(args.A), parse_abelian(args.B)
    H = hom_group(A, B)
    _emit({"A": render(A), "B": render(B), "hom": _abelian_doc(H)}, args.format, render(H))
    return EXIT_OK


def cmd_iso(args) -> int:
    A, B = parse_abelian(args.A), parse_abelian(args.B)
    same = is_isomorphic(A, B)
    _emit({"A": render(A), "B": render(B), "isomorphic": same}, args.format, "true" if same else "false")
    return EXIT_OK


def cmd_decide(args) -> int:
    inp = DecisionInput(GClass.parse(args.g_class), parse_abelian(args.gl), parse_abelian(args.gn),
                        parse_abelian(args.m))
    verdict = decide_lemma21(inp)
    doc = dict(verdict.as_dict(), GL=render(inp.GL), GN=render(inp.GN), M=render(inp.M), g_class=inp.g_class.value)
    parts = ["holds" if verdict.holds else "fails", verdict.branch.value]
    parts += [f"r_{p}={r}" for p, r in sorted(verdict.witnesses.items())]
    if verdict.reason:
        parts.append(verdict.reason.value)
    if verdict.flags:
        parts.append("[" + ",".join(verdict.flags) + "]")
    _emit(doc, args.format, " ".join(parts))
    return EXIT_OK


def cmd_snf(args) -> int:
    A = read_matrix(args.matrix)
    U, D, V = smith_normal_form(A)
    diag = D.diagonal()
    group = from_relations(A.cols, A)
    doc = {"U": U.to_rows(), "D": D.to_rows(), "V": V.to_rows(), "diagonal": diag,
           "cokernel": render(group)}
    text = "\n".join([f"U =\n{U}", f"D =\n{D}", f"V =\n{V}", f"diagonal: {diag}",
                      f"cokernel: {render(group)}"])
    _emit(doc, args.format, text)
    return EXIT_OK


def _names(G: fg.FiniteGroup, S: fg.Subgroup) -> list[str]:
    return [G.names[g] for g in S.members]


def _group_info(G: fg.FiniteGroup) -> dict:
    Z = fg.center(G)
    doc = {
        "name": G.name,
        "order": G.order,
        "abelian": G.is_abelian,
        "exponent": G.exponent,
        "p_group": fg.is_p_group(G),
        "center": render(fg.abelian_invariants(Z)),
        "derived_order": fg.derived_subgroup(G).order,
        "nilpotency_class": fg.nilpotency_class(G),
        "abelianization": render(fg.abelian_invariants(fg.quotient(G, fg.derived_subgroup(G))[0])),
    }
    if G.is_abelian:
        doc["invariants"] = render(fg.abelian_invariants(G))
    return doc


def _group_series(G: fg.FiniteGroup, max_order: int) -> dict:
    autocenter = []
    n = 1
    while True:
        Ln = fg.autocenter_series(G, n, max_order)
        if autocenter and Ln.order == autocenter[-1]:
            break
        autocenter.append(Ln.order)
        if Ln.order == G.order:
            break
        n += 1
    return {
        "name": G.name,
        "upper_central": [S.order for S in fg.upper_central_series(G)],
        "lower_central": [S.order for S in fg.lower_central_series(G)],
        "autocenter": autocenter,
        "autonilpotent_class": len(autocenter) if autocenter[-1] == G.order else None,
    }


def cmd_group(args) -> int:
    G = load_group_arg(args.group)
    if G.order > args.max_order and args.action != "info":
        raise fg.GroupError("ORDER_BOUND_EXCEEDED", f"|{G.name}| = {G.order} exceeds --max-order {args.max_order}")
    if args.action == "info":
        doc = _group_info(G)
    elif args.action == "aut":
        auts = fg.automorphism_group(G, args.max_order)
        doc = {
            "name": G.name,
            "aut_order": len(auts),
            "inn_order": len(fg.inner_automorphisms(G)),
            "inn_structure": vf._aut_structure(fg.inner_automorphisms(G)),
            "central_fixing_center_order": len(fg.central_automorphisms_fixing_center(G, args.max_order)),
            "var_order": len(fg.var_group(G, args.max_order)),
        }
    elif args.action == "series":
        doc = _group_series(G, args.max_order)
    elif args.action == "var":
        var = fg.var_group(G, args.max_order)
        inn = fg.inner_automorphisms(G)
        doc = {
            "name": G.name,
            "var_order": len(var),
            "var_structure": vf._aut_structure(var),
            "inn_order": len(inn),
            "var_equals_inn": vf._same_set(var, inn),
            "derived_in_absolute_center": fg.derived_subgroup(G) <= fg.absolute_center(G, args.max_order),
        }
    else:
        L = fg.absolute_center(G, args.max_order)
        doc = {
            "name": G.name,
            "order": L.order,
            "invariants": render(fg.abelian_invariants(L)),
            "elements": _names(G, L),
            "equals_center": L == fg.center(G),
        }
    _emit(doc, args.format)
    return EXIT_OK


def _verify_cases(claim: str, G: fg.FiniteGroup, max_order: int) -> list[vf.Case]:
    if claim == "lemma23":
        return [vf.verify_lemma23(G, X, Y, max_order, label) for label, X, Y in vf.lemma23_pairs(G)]
    if claim == "attar":
        return [vf.verify_attar(G, max_order)]
    if claim == "cor24":
        return [vf.verify_cor24(G, max_order)]
    if claim == "cor25":
        if G.is_abelian:
            return [vf._skip("COR25", G, "ABELIAN", "Inn(G) is trivial")]
        return [vf.verify_cor25(G, M, N, max_order, label) for label, M, N in vf.cor25_pairs(G)]
    if claim in ("cor26", "cor27"):
        return [c for c in vf.verify_cor26_27(G, max_order) if c.subject == claim.upper()]
    if claim in ("cor28", "cor29"):
        return [c for c in vf.verify_cor28_29(G, max_order) if c.subject == claim.upper()]
    if claim == "cor210":
        return [vf.verify_cor210(G, max_order)]
    if claim == "exp":
        return [vf.verify_exp_equality(G, max_order)]
    return vf.run_group(G, max_order)


CLAIMS = ("lemma23", "attar", "cor24", "cor25", "cor26", "cor27", "cor28", "cor29", "cor210", "exp", "all")


def _finish(bundle: vf.Bundle, fmt: str) -> int:
    print(bundle.to_json() if fmt == "json" else bundle.to_text())
    return EXIT_OK if bundle.ok else EXIT_DISAGREE


def cmd_verify(args) -> int:
    G = load_group_arg(args.group)
    if G.order > args.max_order:
        raise fg.GroupError("ORDER_BOUND_EXCEEDED", f"|{G.name}| = {G.order} exceeds --max-order {args.max_order}")
    bundle = vf.Bundle()
    for case in _verify_cases(args.claim, G, args.max_order):
        bundle.add(case)
    return _finish(bundle, args.format)


def _int_list(text: str) -> tuple[int, ...]:
    return tuple(int(t) for t in text.split(",") if t.strip())


def cmd_sweep(args) -> int:
    bounds = vf.SweepBounds(
        primes=_int_list(args.primes),
        max_length=args.max_length,
        max_exponent=args.max_exponent,
        max_free_rank=args.max_free_rank,
        max_torsion_rank=args.max_torsion_rank,
        classes=tuple(GClass.parse(c) for c in args.classes.split(",")),
        include_trivial_gn=args.include_trivial_gn,
    )
    bundle = vf.Bundle()
    bundle.reports["LEMMA21_SWEEP"] = vf.sweep_lemma21(bounds, keep_agreeing=args.all_cases)
    return _finish(bundle, args.format)


def cmd_corpus(args) -> int:
    return _finish(vf.run_corpus(args.manifest, args.max_order), args.format)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--max-order", type=int, default=argparse.SUPPRESS,
                        help=f"largest group order to enumerate (default {fg.DEFAULT_MAX_ORDER})")

    parser = argparse.ArgumentParser(prog="autcentral", parents=[common],
                                     description="Hom(G/N, M) ~ G/L decisions and automorphism checks on small groups")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hom", parents=[common], help="invariants of Hom(A, B)")
    p.add_argument("A")
    p.add_argument("B")
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("iso", parents=[common], help="test A ~ B")
    p.add_argument("A")
    p.add_argument("B")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("decide", parents=[common], help="decide Hom(G/N, M) ~ G/L")
    p.add_argument("--class", dest="g_class", required=True, choices=("tf", "torsion", "mixed"))
    p.add_argument("--gl", required=True, help="invariants of G/L")
    p.add_argument("--gn", required=True, help="invariants of G/N")
    p.add_argument("--m", required=True, help="invariants of M")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("snf", parents=[common], help="Smith normal form of a matrix file")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_snf)

    p = sub.add_parser("group", parents=[common], help="structure of a finite group")
    p.add_argument("action", choices=("info", "aut", "series", "var", "abs-center"))
    p.add_argument("group", help="JSON table file or builtin expression")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("verify", parents=[common], help="check one claim on one group")
    p.add_argument("claim", choices=CLAIMS)
    p.add_argument("group")
    p.set_defaults(func=cmd_verify)

    d = vf.SweepBounds()
    p = sub.add_parser("sweep", parents=[common], help="decider against the Hom oracle over bounded invariants")
    p.add_argument("--primes", default=",".join(map(str, d.primes)))
    p.add_argument("--max-length", type=int, default=d.max_length)
    p.add_argument("--max-exponent", type=int, default=d.max_exponent)
    p.add_argument("--max-free-rank", type=int, default=d.max_free_rank)
    p.add_argument("--max-torsion-rank", type=int, default=None,
                   help="cap on the number of cyclic torsion factors per group")
    p.add_argument("--classes", default="tf,torsion,mixed")
    p.add_argument("--include-trivial-gn", action="store_true")
    p.add_argument("--all-cases", action="store_true", help="list agreeing cases too")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("corpus", parents=[common], help="run every claim over a manifest ('default' for the builtin list)")
    p.add_argument("manifest")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    args.format = getattr(args, "format", "text")
    args.max_order = getattr(args, "max_order", fg.DEFAULT_MAX_ORDER)
    try:
        return args.func(args)
    except (ParseError, DeciderError, fg.GroupError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
