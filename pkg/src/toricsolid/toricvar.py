"""Catalog of toric models and their equivariant combinatorics.

Each model is a Fano polytope in its cocharacter lattice N. Groups acting
on a model are stored on the character lattice M = N^* and act on faces
through the contragredient.
"""

from __future__ import annotations

import json
import os
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from itertools import permutations
from pathlib import Path

from . import intlin, latgroup, polyfan
from .latgroup import EmbeddedLattice, FiniteMatrixGroup, closure

DATA_ENV = "TORIC_SOLID_DATA"


class CatalogError(ValueError):
  pass


def data_dir() -> Path:
  override = os.environ.get(DATA_ENV)
  if override:
    return Path(override)
  return Path(str(resources.files("toricsolid") / "data"))


def load_json(name: str):
  path = data_dir() / name
  with open(path, encoding="utf-8") as fh:
    return json.load(fh)


# ------------------------------------------------------------- lattices

_h = Fraction(1, 2)
M1 = EmbeddedLattice("M1", ((_h, _h, -_h), (_h, -_h, _h), (-_h, _h, _h)))
M2 = EmbeddedLattice("M2", intlin.identity(3))
M3 = EmbeddedLattice("M3", ((1, 1, 0), (1, 0, 1), (0, 1, 1)))
CHARACTER_LATTICES = {1: M1, 2: M2, 3: M3}


def _lattice_from_json(name: str, rec: dict) -> EmbeddedLattice:
  d = rec["denominator"]
  return EmbeddedLattice(name, tuple(tuple(Fraction(x, d) for x in row) for row in rec["basis"]))


# ---------------------------------------------------------------- models

@dataclass
class ToricModel:
  name: str
  lattice: EmbeddedLattice
  polytope: polyfan.LatticePolytope
  fan: polyfan.FaceFan
  grdb_id: int | None = None
  expected_weyl: str | None = None
  family: int | None = None
  terminal_expected: bool = True
  description: str = ""
  expected_census: dict = field(default_factory=dict)
  defining_equations: dict | None = None

  @property
  def rank(self) -> int:
    return self.lattice.rank

  @property
  def character_lattice(self) -> EmbeddedLattice:
    return self.lattice.dual(f"{self.lattice.name}^*")

  def __hash__(self):
    return hash(self.name)


def build_model(rec: dict, lattices: dict) -> ToricModel:
  L = lattices[rec["lattice"]]
  den = rec.get("denominator", 1)
  verts = [tuple(Fraction(x, den) for x in v) for v in rec["vertices"]]
  P = polyfan.LatticePolytope(L, verts)
  fan = polyfan.face_fan(P)
  X = ToricModel(rec["name"], L, P, fan, rec.get("grdb_id"), rec.get("expected_weyl"),
                 rec.get("family"), rec.get("terminal", True), rec.get("description", ""),
                 rec.get("census", {}), rec.get("equations"))
  _validate(X)
  return X


def _validate(X: ToricModel) -> None:
  if not X.fan.is_complete():
    raise CatalogError(f"{X.name}: fan is not complete")
  for r in X.fan.rays:
    if not X.lattice.contains(r) or X.lattice.primitive(r) != r:
      raise CatalogError(f"{X.name}: ray {r} is not primitive")
  if polyfan.is_terminal_fano(X.fan) != X.terminal_expected:
    raise CatalogError(f"{X.name}: terminality differs from the stored flag")
  if X.expected_census:
    got = strata(X)
    for k, v in X.expected_census.items():
      if got.get(k) != v:
        raise CatalogError(f"{X.name}: census {k} = {got.get(k)}, expected {v}")


@lru_cache(maxsize=None)
def _catalog_cached(path: str) -> tuple[ToricModel, ...]:
  raw = load_json("catalog.json")
  lattices = {k: _lattice_from_json(k, v) for k, v in raw["lattices"].items()}
  return tuple(build_model(rec, lattices) for rec in raw["models"])


def catalog() -> list[ToricModel]:
  return list(_catalog_cached(str(data_dir())))


def not_constructed() -> list[dict]:
  return load_json("catalog.json").get("not_constructed", [])


def model(name: str) -> ToricModel:
  for X in catalog():
    if X.name == name:
      return X
  raise KeyError(name)


# ---------------------------------------------------------------- strata

def strata(X: ToricModel) -> dict:
  """Torus-invariant strata counts; fixed points carry singularity labels."""
  r = X.rank
  out = {"divisors": len(X.fan.rays), "points": len(X.fan.maximal_cones)}
  if r == 3:
    out["curves"] = len(X.fan.faces_by_dim[2])
  types = Counter(str(polyfan.classify_cone(c, X.lattice)) for c in X.fan.maximal_cones)
  out["point_types"] = dict(sorted(types.items()))
  return out


# ------------------------------------------------------------ weyl group

_weyl_cache: dict[str, FiniteMatrixGroup] = {}


def weyl(X: ToricModel) -> FiniteMatrixGroup:
  """Lattice symmetries of the polytope, as a group on M."""
  G = _weyl_cache.get(X.name)
  if G is None:
    G = polyfan.automorphisms(X.polytope).contragredient(X.character_lattice)
    _weyl_cache[X.name] = G
  return G


def on_model(X: ToricModel, W: FiniteMatrixGroup) -> FiniteMatrixGroup:
  """W rewritten in X's character basis, checked to lie in weyl(X)."""
  Wm = W.in_basis(X.character_lattice)
  if not Wm.is_subgroup_of(weyl(X)):
    raise latgroup.GroupError(f"group is not a subgroup of the Weyl group of {X.name}")
  return Wm


# -------------------------------------------------------------- orbits

@dataclass(frozen=True)
class OrbitDecomposition:
  orbits: dict  # stratum dimension -> tuple of orbits (frozensets of faces)

  def sizes(self, dim: int) -> tuple[int, ...]:
    return tuple(sorted(len(o) for o in self.orbits[dim]))


def ray_permutation(X: ToricModel, g_m) -> tuple[int, ...]:
  """Permutation of ray indices induced by g in GL(M)."""
  g_n = intlin.transpose(intlin.int_inverse(g_m))
  idx = {r: i for i, r in enumerate(X.fan.rays)}
  perm = []
  for r in X.fan.rays:
    img = X.lattice.point(intlin.matvec(g_n, X.lattice.int_coords(r)))
    perm.append(idx[img])
  return tuple(perm)


def orbits(X: ToricModel, W: FiniteMatrixGroup) -> OrbitDecomposition:
  """Orbits on faces, keyed by stratum dimension (rank - cone dimension)."""
  Wm = on_model(X, W)
  perms = [ray_permutation(X, g) for g in Wm.elements]
  r = X.rank
  out = {}
  for k, cones in X.fan.faces_by_dim.items():
    faces = {c.rays for c in cones}
    seen: set = set()
    orbs = []
    for f in sorted(faces, key=sorted):
      if f in seen:
        continue
      orb = frozenset(frozenset(p[i] for i in f) for p in perms)
      assert orb <= faces
      seen |= orb
      orbs.append(orb)
    out[r - k] = tuple(orbs)
  return OrbitDecomposition(out)


def orbit_sizes_by_type(X: ToricModel, W: FiniteMatrixGroup) -> dict[str, tuple[int, ...]]:
  """Fixed-point orbit sizes split by singularity label."""
  dec = orbits(X, W)
  label = {c.rays: str(polyfan.classify_cone(c, X.lattice)) for c in X.fan.maximal_cones}
  out: dict[str, list] = {}
  for orb in dec.orbits[0]:
    out.setdefault(label[next(iter(orb))], []).append(len(orb))
  return {k: tuple(sorted(v)) for k, v in sorted(out.items())}


# ---------------------------------------------------------- class group

def _ray_pairings(X: ToricModel) -> intlin.Matrix:
  return tuple(X.lattice.int_coords(r) for r in X.fan.rays)


def class_group(X: ToricModel) -> intlin.AbelianInvariants:
  A = _ray_pairings(X)
  if intlin.rank(A) != X.rank:
    raise CatalogError("rays do not span N")
  return intlin.cokernel_invariants(A)


def invariant_class_rank(X: ToricModel, W: FiniteMatrixGroup) -> int:
  Wm = on_model(X, W)
  dec = orbits(X, Wm)
  ray_orbits = len(dec.orbits[X.rank - 1])
  return ray_orbits - latgroup.fixed_subspace_dim(Wm)


def is_minimal(X: ToricModel, W: FiniteMatrixGroup) -> bool:
  return invariant_class_rank(X, W) == 1


def s4_type(W: FiniteMatrixGroup) -> str:
  if latgroup.identify(W) != "S4":
    return "not_S4"
  return "II" if all(intlin.det(g) == 1 for g in W.elements) else "I"


# ------------------------------------------------------ the named groups

def _s4_on_weights() -> list[intlin.Matrix]:
  """S4 permuting h1..h4 with h4 = -(e1+e2+e3), column convention."""
  mats = []
  for p in permutations(range(4)):
    cols = []
    for i in range(3):
      j = p[i]
      cols.append(tuple(int(k == j) for k in range(3)) if j < 3 else (-1, -1, -1))
    mats.append(intlin.transpose(cols))
  return mats


SIGMA = intlin.scale(intlin.identity(3), -1)
TAU = tuple(tuple(tuple(-1 if (i == j == k) else int(i == j) for j in range(3)) for i in range(3))
            for k in range(3))
PERMUTATION_MATRICES = tuple(
    intlin.transpose([tuple(int(k == p[i]) for k in range(3)) for i in range(3)])
    for p in permutations(range(3)))

TAHARA = {
    "W10": ((((0, 1, 0), (0, 0, 1), (1, 0, 0)), ((0, -1, 1), (0, -1, 0), (1, -1, 0))), 1),
    "W9": ((((0, 1, 0), (0, 0, 1), (1, 0, 0)), ((-1, 0, 0), (0, 1, 0), (0, 0, -1))), 2),
    "W11": ((((0, 1, 0), (0, 0, 1), (1, 0, 0)), ((-1, -1, -1), (0, 0, 1), (0, 1, 0))), 3),
}


@lru_cache(maxsize=None)
def family_groups(i: int) -> dict[str, FiniteMatrixGroup]:
  """W_i and its distinguished subgroups, on the character lattice M_i."""
  L = CHARACTER_LATTICES[i]
  if i == 2:
    # S4 x 1 is generated by S3 and the even sign changes
    s4 = list(PERMUTATION_MATRICES) + [intlin.matmul(TAU[0], TAU[1]), intlin.matmul(TAU[0], TAU[2])]
    full = closure(list(PERMUTATION_MATRICES) + list(TAU), L)
    s4bar = closure(s4, L)
  else:
    mats = _s4_on_weights()
    if i == 3:
      mats = [intlin.transpose(intlin.int_inverse(g)) for g in mats]
    s4bar = closure(mats, L)
    full = closure(mats + [SIGMA], L)
  a4 = latgroup.subgroup_from_elements(full, [g for g in s4bar.elements if intlin.det(g) == 1])
  sl = latgroup.subgroup_from_elements(full, [g for g in full.elements if intlin.det(g) == 1])
  a4s = latgroup.subgroup_from_elements(full, list(a4.generators) + [SIGMA])
  return {f"W{i}": full, f"W{i}A": a4, f"W{i}S": sl, f"W{i}Sbar": s4bar, f"W{i}A+sigma": a4s}


def tahara_group(name: str) -> FiniteMatrixGroup:
  gens, i = TAHARA[name]
  return closure(gens, CHARACTER_LATTICES[i])


def named_groups(X: ToricModel) -> dict[str, FiniteMatrixGroup]:
  """Group names usable with a model: its family's groups, weyl and trivial."""
  out = {"weyl": weyl(X), "trivial": latgroup.trivial_group(X.character_lattice)}
  if X.family:
    for k, G in family_groups(X.family).items():
      Gm = G.in_basis(X.character_lattice)
      if Gm.is_subgroup_of(weyl(X)):
        out[k] = Gm
  return out


def group_by_name(X: ToricModel, name: str) -> FiniteMatrixGroup:
  groups = named_groups(X)
  if name not in groups:
    raise KeyError(name)
  return groups[name]
