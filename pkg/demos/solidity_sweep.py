"""Every subgroup of each Weyl group, sorted into solid and not solid."""

from collections import Counter

from toricsolid import polyfan, solidity, toricvar

for X in toricvar.catalog():
  if X.rank != 3 or not polyfan.is_terminal_fano(X.fan):
    continue
  rows = solidity.weyl_sweep(X)
  solid = Counter(r.group_type for r in rows if r.solid)
  print(f"{X.name:6} {len(rows):3} subgroups, solid: {dict(solid) or 'none'}")

print()
for model, group in (("V6", "W2A"), ("V4", "W3A"), ("V4", "W3S"), ("X24", "W3A"), ("P3", "W3Sbar")):
  X = toricvar.model(model)
  v = solidity.is_g_solid(X, toricvar.group_by_name(X, group))
  print(f"{model} with {group}: solid {v.solid}, lookup {v.appendix_outcome}")
