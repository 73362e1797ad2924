"""Monomial maps between the models, checked on the lattice and by sampling."""

from toricsolid import birmaps

maps = birmaps.fixtures()
for name in ("y24-to-v6", "v6-to-x24", "x8-to-v6", "p3-to-x24", "cremona"):
  f = maps[name]
  rep = birmaps.sample_consistency(f, 50, seed=0)
  print(f"{name:12} {f.source} -> {f.target}: degree {birmaps.generic_degree(f)}, "
        f"lattice map {f.lattice_map}, {rep.passed}/50 samples")

# conjugating the involution of X24 by the link back to P3 gives the Cremona map
psi = maps["p3-to-x24"]
lhs = birmaps.compose(birmaps.inverse(psi), birmaps.compose(maps["x24-involution"], psi))
print("conjugated involution equals cremona:", birmaps.verify_identity(lhs, maps["cremona"]).equal)

# printed formulas that do not survive the checks
for name in ("v4-involution-printed", "p3-to-x24-printed"):
  rep = birmaps.sample_consistency(maps[name], 100, seed=0)
  print(f"{name}: {rep.passed}/100 samples land on the target")
