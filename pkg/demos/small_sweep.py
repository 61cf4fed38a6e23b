"""A small sweep: the decider against direct Hom on every input within tight bounds."""

from autcentral import verifier as vf

bounds = vf.SweepBounds(primes=(2,), max_length=2, max_exponent=3, max_free_rank=1, include_trivial_gn=True)
report = vf.sweep_lemma21(bounds)
print(report.summary())
for key, n in report.info["tallies"].items():
    print(f"  {key:32} {n}")
for case in report.cases[:5]:
    print(" ", case.group, case.input, case.flags)
