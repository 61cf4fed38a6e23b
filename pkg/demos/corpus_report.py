"""Run every corpus check on the default manifest and print the text report.

Pass ``--json`` for the machine-readable form.
"""

import sys

from autcentral import verifier as vf

bundle = vf.run_corpus(vf.DEFAULT_MANIFEST)
print(bundle.to_json() if "--json" in sys.argv else bundle.to_text())
sys.exit(0 if bundle.ok else 1)
