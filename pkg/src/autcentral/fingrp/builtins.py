"""Constructors for the standard small groups used by the verifier corpus.

Every constructor enumerates normal-form words, multiplies them with an
explicit rule and passes the resulting table through :func:`validate`.

>>> dihedral(8).order, quaternion(8).order, heisenberg(3).order
(8, 8, 27)
>>> parse_builtin("direct_product(dihedral(8), cyclic(2))").order
16
"""

from __future__ import annotations

import ast
import itertools
from typing import Callable, Hashable, Sequence

from sympy import isprime

from .core import FiniteGroup, GroupError, validate

__all__ = [
    "from_rule",
    "cyclic",
    "abelian",
    "dihedral",
    "quaternion",
    "semidihedral",
    "modular",
    "heisenberg",
    "metacyclic",
    "direct_product",
    "builtin",
    "parse_builtin",
    "FAMILIES",
]


def from_rule(elements: Sequence[Hashable], mul: Callable, names: Sequence[str], name: str) -> FiniteGroup:
    """Tabulate ``mul`` over ``elements``; ``elements[0]`` must be the identity."""
    index = {e: i for i, e in enumerate(elements)}
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    return validate(table, names, name)


def _word(parts: Sequence[tuple[str, int]]) -> str:
    out = [g if k == 1 else f"{g}^{k}" for g, k in parts if k]
    return " ".join(out) or "e"


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("BAD_PARAMS", "cyclic(n) needs n >= 1")
    return from_rule(list(range(n)), lambda a, b: (a + b) % n,
                     [_word([("a", i)]) for i in range(n)], f"C{n}")


def abelian(*orders: int) -> FiniteGroup:
    """Direct product of cyclic groups of the given orders."""
    if len(orders) == 1 and isinstance(orders[0], (list, tuple)):
        orders = tuple(orders[0])
    if not orders or any(n < 1 for n in orders):
        raise GroupError("BAD_PARAMS", "abelian(...) needs positive orders")
    elements = list(itertools.product(*(range(n) for n in orders)))
    gens = [chr(ord("a") + i) for i in range(len(orders))]
    return from_rule(
        elements,
        lambda x, y: tuple((u + v) % n for u, v, n in zip(x, y, orders)),
        [_word(list(zip(gens, e))) for e in elements],
        " x ".join(f"C{n}" for n in orders),
    )


def metacyclic(m: int, k: int, r: int, name: str | None = None) -> FiniteGroup:
    """Split extension ``C_m : C_k`` with ``b a b^-1 = a^r``; elements ``a^i b^j``."""
    if m < 1 or k < 1 or pow(r, k, m) != 1 % m:
        raise GroupError("BAD_PARAMS", f"r={r} does not define an action of C{k} on C{m}")
    elements = [(i, j) for j in range(k) for i in range(m)]

    def mul(x, y):
        return (x[0] + pow(r, x[1], m) * y[0]) % m, (x[1] + y[1]) % k

    return from_rule(elements, mul, [_word([("a", i), ("b", j)]) for i, j in elements],
                     name or f"C{m}:C{k}")


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order ``n`` (so ``dihedral(8)`` is D8)."""
    if n < 4 or n % 2:
        raise GroupError("BAD_PARAMS", "dihedral(n) needs even n >= 4")
    return metacyclic(n // 2, 2, -1 % (n // 2), f"D{n}")


def semidihedral(n: int = 16) -> FiniteGroup:
    if n < 16 or n & (n - 1):
        raise GroupError("BAD_PARAMS", "semidihedral(n) needs n a power of 2, n >= 16")
    m = n // 2
    return metacyclic(m, 2, m // 2 - 1, f"SD{n}")


def modular(p: int, n: int = 3) -> FiniteGroup:
    """Order ``p^n`` group ``<a, b | a^(p^(n-1)), b^p, b a b^-1 = a^(1 + p^(n-2))>``.

    ``modular(3)`` is the order-27 group of exponent 9; ``modular(2, 4)`` is M16.
    """
    if not isprime(p) or n < 3:
        raise GroupError("BAD_PARAMS", "modular(p, n) needs p prime and n >= 3")
    m = p ** (n - 1)
    return metacyclic(m, p, 1 + p ** (n - 2), f"M{p ** n}")


def quaternion(n: int = 8) -> FiniteGroup:
    """Generalized quaternion group of order ``n``: ``a^(n/2) = 1, b^2 = a^(n/4), b^-1 a b = a^-1``."""
    if n < 8 or n & (n - 1):
        raise GroupError("BAD_PARAMS", "quaternion(n) needs n a power of 2, n >= 8")
    m = n // 2
    elements = [(i, j) for j in range(2) for i in range(m)]

    def mul(x, y):
        (i1, j1), (i2, j2) = x, y
        if j1 == 0:
            return (i1 + i2) % m, j2
        # a^i1 b a^i2 = a^(i1 - i2) b
        if j2 == 0:
            return (i1 - i2) % m, 1
        return (i1 - i2 + m // 2) % m, 0

    return from_rule(elements, mul, [_word([("a", i), ("b", j)]) for i, j in elements], f"Q{n}")


def heisenberg(p: int) -> FiniteGroup:
    """Upper unitriangular 3x3 matrices over F_p (exponent p for odd p)."""
    if not isprime(p):
        raise GroupError("BAD_PARAMS", "heisenberg(p) needs p prime")
    elements = list(itertools.product(range(p), repeat=3))

    def mul(x, y):
        return (x[0] + y[0]) % p, (x[1] + y[1]) % p, (x[2] + y[2] + x[0] * y[1]) % p

    names = [_word([("x", a), ("y", b), ("z", c)]) for a, b, c in elements]
    return from_rule(elements, mul, names, f"Heis({p})")


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    elements = [(g, h) for g in G.elements for h in H.elements]
    names = [f"({G.names[g]}, {H.names[h]})" for g, h in elements]
    return from_rule(elements, lambda x, y: (G.rows[x[0]][y[0]], H.rows[x[1]][y[1]]),
                     names, f"{G.name} x {H.name}")


FAMILIES: dict[str, Callable[..., FiniteGroup]] = {
    "cyclic": cyclic,
    "abelian": abelian,
    "dihedral": dihedral,
    "quaternion": quaternion,
    "semidihedral": semidihedral,
    "modular": modular,
    "heisenberg": heisenberg,
    "metacyclic": metacyclic,
    "direct_product": direct_product,
}


def builtin(name: str, *params) -> FiniteGroup:
    try:
        family = FAMILIES[name]
    except KeyError:
        raise GroupError("UNKNOWN_FAMILY", f"no builtin family {name!r}") from None
    try:
        return family(*params)
    except TypeError as exc:
        raise GroupError("BAD_PARAMS", f"{name}{tuple(params)}: {exc}") from None


def parse_builtin(expr: str) -> FiniteGroup:
    """Build a group from an expression such as ``direct_product(quaternion(8), cyclic(2))``."""
    try:
        tree = ast.parse(expr.strip(), mode="eval").body
    except SyntaxError:
        raise GroupError("BAD_PARAMS", f"cannot parse builtin expression {expr!r}") from None

    def ev(node):
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, (ast.List, ast.Tuple)):
            return [ev(e) for e in node.elts]
        if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and not node.keywords:
            return builtin(node.func.id, *(ev(a) for a in node.args))
        raise GroupError("BAD_PARAMS", f"unsupported syntax in {expr!r}")

    G = ev(tree)
    if not isinstance(G, FiniteGroup):
        raise GroupError("BAD_PARAMS", f"{expr!r} does not describe a group")
    return G
