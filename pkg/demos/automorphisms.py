"""Automorphism-group invariants of a few small p-groups, computed by brute force."""

from autcentral import fingrp as fg

for expr in ["dihedral(8)", "quaternion(8)", "modular(2, 4)", "heisenberg(3)", "dihedral(16)"]:
    G = fg.parse_builtin(expr)
    auts = fg.automorphism_group(G)
    inn = fg.inner_automorphisms(G)
    C = fg.central_automorphisms_fixing_center(G)
    L = fg.absolute_center(G)
    Z = fg.center(G)
    print(f"{expr:14} |G|={G.order:3} class={fg.nilpotency_class(G)} |Aut|={len(auts):4} |Inn|={len(inn):2} "
          f"|C*|={len(C):3} Z={fg.abelian_invariants(Z)!s:8} L={fg.abelian_invariants(L)!s:8} "
          f"|Var|={len(fg.var_group(G))}")
