"""Lattice polytopes, face fans and cone singularities.

Hulls are computed by brute-force facet enumeration in exact arithmetic;
inputs here have at most a dozen points in dimension <= 3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Sequence

from . import intlin
from .latgroup import EmbeddedLattice, FiniteMatrixGroup, small_generating_set

Point = tuple[Fraction, ...]


class PolytopeError(ValueError):
  pass


def _pt(x) -> Point:
  return tuple(Fraction(v) for v in x)


def _dot(u, v):
  return sum(a * b for a, b in zip(u, v))


def affine_rank(points: Sequence[Point]) -> int:
  if len(points) <= 1:
    return 0
  p0 = points[0]
  return intlin.rank([[a - b for a, b in zip(p, p0)] for p in points[1:]])


@dataclass(frozen=True)
class Facet:
  normal: tuple[Fraction, ...]   # <normal, x> <= offset on the polytope
  offset: Fraction
  members: frozenset[int]        # indices of input points on the facet


def facets(points: Sequence[Point]) -> list[Facet]:
  """All facets of conv(points); points must span the ambient space affinely."""
  pts = [_pt(p) for p in points]
  d = len(pts[0])
  if affine_rank(pts) != d:
    raise PolytopeError("polytope is not full-dimensional")
  out: dict[frozenset, Facet] = {}
  for combo in combinations(range(len(pts)), d):
    base = [pts[i] for i in combo]
    if affine_rank(base) != d - 1:
      continue
    rows = [list(p) + [Fraction(-1)] for p in base]  # <n,p> - c = 0
    ker = intlin.nullspace(rows, ncols=d + 1)
    if len(ker) != 1:
      continue
    n, c = ker[0][:d], ker[0][d]
    vals = [_dot(n, p) - c for p in pts]
    if all(v <= 0 for v in vals):
      pass
    elif all(v >= 0 for v in vals):
      n, c, vals = tuple(-x for x in n), -c, [-v for v in vals]
    else:
      continue
    members = frozenset(i for i, v in enumerate(vals) if v == 0)
    if members not in out:
      scale_ = intlin.clear_denominators(list(n) + [c])
      out[members] = Facet(tuple(Fraction(x) for x in scale_[:d]), Fraction(scale_[d]), members)
  return sorted(out.values(), key=lambda f: sorted(f.members))


@dataclass
class LatticePolytope:
  lattice: EmbeddedLattice
  vertices: tuple[Point, ...]

  def __post_init__(self):
    self.vertices = tuple(_pt(v) for v in self.vertices)
    for v in self.vertices:
      if not self.lattice.contains(v):
        raise PolytopeError(f"vertex {v} is not a lattice point")
    fs = facets(self.vertices)
    on_facets = [sum(1 for f in fs if i in f.members) for i in range(len(self.vertices))]
    # every vertex must be a 0-face: the facets through it meet only in it
    for i in range(len(self.vertices)):
      common = frozenset(range(len(self.vertices)))
      for f in fs:
        if i in f.members:
          common &= f.members
      if on_facets[i] == 0 or common != {i}:
        raise PolytopeError(f"point {self.vertices[i]} is not a vertex")
    self._facets = fs

  @property
  def dim(self) -> int:
    return len(self.vertices[0])

  @property
  def facet_list(self) -> list[Facet]:
    return self._facets

  def contains(self, x) -> bool:
    x = _pt(x)
    return all(_dot(f.normal, x) <= f.offset for f in self._facets)

  def interior_contains(self, x) -> bool:
    x = _pt(x)
    return all(_dot(f.normal, x) < f.offset for f in self._facets)


def face_poset(P: LatticePolytope) -> dict[int, list[frozenset[int]]]:
  """Proper faces of P grouped by dimension, each as a set of vertex indices."""
  fs = [f.members for f in P.facet_list]
  faces = set(fs)
  frontier = set(fs)
  while frontier:
    new = set()
    for a in frontier:
      for b in fs:
        c = a & b
        if c and c not in faces:
          new.add(c)
    faces |= new
    frontier = new
  out: dict[int, list] = {k: [] for k in range(P.dim)}
  for face in faces:
    k = affine_rank([P.vertices[i] for i in sorted(face)])
    out[k].append(face)
  for k in out:
    out[k].sort(key=lambda s: sorted(s))
  return out


def f_vector(P: LatticePolytope) -> tuple[int, ...]:
  poset = face_poset(P)
  return tuple(len(poset[k]) for k in range(P.dim))


# ------------------------------------------------------------------- fans

@dataclass(frozen=True)
class Cone:
  primitive_generators: tuple[Point, ...]
  rays: frozenset[int]  # indices into the fan's ray list

  @property
  def dim(self) -> int:
    return intlin.rank(self.primitive_generators)


@dataclass
class FaceFan:
  lattice: EmbeddedLattice
  rays: tuple[Point, ...]
  maximal_cones: tuple[Cone, ...]
  faces_by_dim: dict[int, tuple[Cone, ...]]

  @property
  def rank(self) -> int:
    return self.lattice.rank

  def is_complete(self) -> bool:
    """Every codimension-one cone lies in exactly two maximal cones."""
    walls = self.faces_by_dim.get(self.rank - 1, ())
    return all(sum(1 for m in self.maximal_cones if w.rays <= m.rays) == 2 for w in walls)


def face_fan(P: LatticePolytope) -> FaceFan:
  """Cones over the proper faces of P, rays primitive in P's lattice."""
  L = P.lattice
  if not P.interior_contains([0] * P.dim):
    raise PolytopeError("origin is not interior to the polytope")
  rays = tuple(L.primitive(v) for v in P.vertices)
  poset = face_poset(P)
  by_dim = {}
  for k, faces in poset.items():
    by_dim[k + 1] = tuple(Cone(tuple(rays[i] for i in sorted(f)), f) for f in faces)
  maximal = by_dim[P.dim]
  return FaceFan(L, rays, maximal, by_dim)


# ------------------------------------------------------- classification

@dataclass(frozen=True)
class ConeType:
  kind: str                 # smooth | ODP | half_1_1_1 | other
  multiplicity: int = 1
  terminal: bool = True

  def __str__(self) -> str:
    if self.kind == "other":
      return f"other({self.multiplicity}, {'terminal' if self.terminal else 'not terminal'})"
    return self.kind


def generated_index(gens: Sequence[Point], L: EmbeddedLattice) -> int:
  """Index of the sublattice spanned by gens inside L intersected with their span."""
  coords = [L.int_coords(g) for g in gens]
  cols = intlin.transpose(coords)
  sat = intlin.saturate(intlin.column_hnf(cols))
  idx = intlin.sublattice_index(cols, sat)
  return int(idx)


def lattice_points_in_hull(points: Sequence[Point], L: EmbeddedLattice) -> list[Point]:
  """Lattice points of conv(points), assumed full-dimensional in L's ambient space."""
  pts = [_pt(p) for p in points]
  fs = facets(pts)
  coords = [L.coords(p) for p in pts]
  # facet inequalities rewritten on integer coordinates: <B n, c> <= offset
  ineqs = []
  for f in fs:
    row = [sum(b[j] * f.normal[j] for j in range(L.rank)) for b in L.basis]
    scaled = intlin.clear_denominators(row + [f.offset])
    sign = 1 if sum(a * b for a, b in zip(scaled, row + [f.offset])) >= 0 else -1
    ineqs.append((tuple(sign * x for x in scaled[:-1]), sign * scaled[-1]))
  lo = [math.floor(min(c[i] for c in coords)) for i in range(L.rank)]
  hi = [math.ceil(max(c[i] for c in coords)) for i in range(L.rank)]
  out = []
  for c in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
    if all(sum(a * x for a, x in zip(nrm, c)) <= off for nrm, off in ineqs):
      out.append(L.point(c))
  return sorted(out)


def cone_is_terminal(gens: Sequence[Point], L: EmbeddedLattice) -> bool:
  """Lattice points of conv(0, gens) are exactly 0 and the generators."""
  zero = tuple(Fraction(0) for _ in range(L.rank))
  pts = [zero] + [_pt(g) for g in gens]
  if affine_rank(pts) < L.rank:
    # lower-dimensional: work inside the span via the generated sublattice test
    return _low_dim_terminal(gens, L)
  return set(lattice_points_in_hull(pts, L)) == set(pts)


def _low_dim_terminal(gens, L):
  # conv(0, gens) lies in a proper subspace; enumerate points of L in a box
  # and keep those in the span and in the hull via barycentric solve.
  coords = [L.coords(g) for g in gens]
  lo = [math.floor(min([0] + [c[i] for c in coords])) for i in range(L.rank)]
  hi = [math.ceil(max([0] + [c[i] for c in coords])) for i in range(L.rank)]
  A = intlin.transpose([list(c) for c in coords])
  zero = (0,) * L.rank
  for c in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
    if c == zero or tuple(Fraction(x) for x in c) in [tuple(v) for v in coords]:
      continue
    lam = intlin.solve(A, c)
    if lam is None:
      continue
    # unique when gens are independent; otherwise skip non-simplicial low cones
    if all(x >= 0 for x in lam) and sum(lam) <= 1:
      return False
  return True


def classify_cone(c: Cone | Sequence[Point], L: EmbeddedLattice) -> ConeType:
  gens = tuple(_pt(g) for g in (c.primitive_generators if isinstance(c, Cone) else c))
  n = L.rank
  d = intlin.rank(gens)
  if not is_pointed(gens):
    raise PolytopeError("cone is not pointed")
  for g in gens:
    if intlin.clear_denominators(L.coords(g)) != L.int_coords(g):
      raise PolytopeError(f"generator {g} is not primitive")
  terminal = cone_is_terminal(gens, L)
  if len(gens) == d:  # simplicial
    idx = generated_index(gens, L)
    if idx == 1:
      return ConeType("smooth")
    if d == n == 3 and idx == 2:
      half = tuple(sum(g[i] for g in gens) / 2 for i in range(n))
      if L.contains(half):
        return ConeType("half_1_1_1", 2, terminal)
    return ConeType("other", idx, terminal)
  if n == 3 and d == 3 and len(gens) == 4:
    # ODP: generators on a plane <u, x> = 1 with u in the dual lattice, empty square
    M = L.dual()
    ker = intlin.nullspace([list(g) + [Fraction(-1)] for g in gens], ncols=4)
    if len(ker) == 1 and ker[0][3] != 0:
      u = tuple(x / ker[0][3] for x in ker[0][:3])
      if M.contains(u) and _empty_square(gens, L, u):
        return ConeType("ODP", generated_index(gens, L), terminal)
  return ConeType("other", generated_index(gens, L), terminal)


def is_pointed(gens: Sequence[Point]) -> bool:
  """No nonzero nonnegative combination of the generators vanishes.

  Checked on circuits: minimal dependent subsets have a one-dimensional
  kernel, and a vanishing combination exists iff some circuit kernel is
  single-signed.
  """
  gens = [_pt(g) for g in gens]
  if any(not any(g) for g in gens):
    return False
  n = len(gens[0])
  for k in range(2, min(len(gens), n + 1) + 1):
    for combo in combinations(gens, k):
      ker = intlin.nullspace(intlin.transpose(combo), ncols=k)
      if len(ker) == 1:
        lam = ker[0]
        if all(x > 0 for x in lam) or all(x < 0 for x in lam):
          return False
  return True


def _empty_square(gens, L, u) -> bool:
  zero = tuple(Fraction(0) for _ in range(3))
  pyramid = lattice_points_in_hull([zero] + list(gens), L)
  on_top = [p for p in pyramid if _dot(u, p) == 1]
  return sorted(on_top) == sorted(gens)


def is_terminal_fano(F: FaceFan) -> bool:
  return all(cone_is_terminal(c.primitive_generators, F.lattice) for c in F.maximal_cones)


# ----------------------------------------------------------- automorphisms

def automorphisms(P: LatticePolytope) -> FiniteMatrixGroup:
  """Lattice-preserving linear maps permuting the vertices, in L's basis."""
  L = P.lattice
  # vertices are lattice points, so everything runs on integer coordinates
  verts = [L.int_coords(v) for v in P.vertices]
  vset = set(verts)
  n = P.dim
  base = next(c for c in combinations(range(len(verts)), n)
              if intlin.rank([verts[i] for i in c]) == n)
  Binv = intlin.inverse(intlin.transpose([verts[i] for i in base]))
  found = set()
  for imgs in permutations(range(len(verts)), n):
    Img = intlin.transpose([verts[i] for i in imgs])
    A = intlin.matmul(Img, Binv)  # A * v_base = v_img
    if any(x.denominator != 1 for r in A for x in r):
      continue
    g = intlin.to_int(A)
    if abs(intlin.det(g)) != 1:
      continue
    if all(tuple(intlin.matvec(g, v)) in vset for v in verts):
      found.add(g)
  G = FiniteMatrixGroup(L, (), tuple(sorted(found)))
  return FiniteMatrixGroup(L, small_generating_set(G), G.elements)
