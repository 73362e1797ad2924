"""Walk through the catalog, listing each Weyl group with its strata and class group."""

from toricsolid import latgroup, toricvar

for X in toricvar.catalog():
  if X.rank != 3:
    continue
  W = toricvar.weyl(X)
  s = toricvar.strata(X)
  types = ", ".join(f"{k} {v}" for k, v in sorted(s["point_types"].items()))
  print(f"{X.name:6} |W| = {W.order:2} ({latgroup.identify(W)}), "
        f"{s['divisors']}/{s['curves']}/{s['points']} strata [{types}], Cl = {toricvar.class_group(X)}")

# the A4 core of the cuboctahedral model splits the smooth points in two
X = toricvar.model("Y24")
for name in ("W1A", "W1S", "W1"):
  W = toricvar.group_by_name(X, name)
  print(f"Y24 under {name}: smooth point orbits {toricvar.orbit_sizes_by_type(X, W)['smooth']}, "
        f"invariant class rank {toricvar.invariant_class_rank(X, W)}")
