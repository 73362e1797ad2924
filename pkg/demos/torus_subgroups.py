"""Invariant finite subgroups of the torus, listed by invariant-factor shape."""

import sys

from toricsolid import torsub

top = int(sys.argv[1]) if len(sys.argv) > 1 else 8
for scheme in torsub.SCHEMES:
  seen = set()
  for N in range(1, top + 1):
    res = torsub.verify_classification(torsub.scheme_action(scheme, N), scheme)
    seen |= set(res.shapes)
    assert res.ok
  print(f"{scheme:8} shapes occurring for N <= {top}: {sorted(seen)}")

# the group of order 8 * 2 * 2 contains T[2] with index 4
S = torsub.SubgroupModN(8, ((1, 0, 0), (0, 4, 0), (0, 0, 4)))
print("invariant factors", S.invariant_factors, "cubic core", torsub.cubic_core(S))
