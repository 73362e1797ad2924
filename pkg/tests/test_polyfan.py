from fractions import Fraction
from itertools import product

import pytest

from toricsolid import intlin, latgroup, polyfan, toricvar
from toricsolid.polyfan import LatticePolytope

H = Fraction(1, 2)
Z3 = toricvar.model("V6").lattice
N1 = toricvar.model("Y24").lattice
N3 = toricvar.model("X24").lattice
Z2 = toricvar.model("P2").lattice

OCTAHEDRON = [v for i in range(3) for v in (tuple(int(j == i) for j in range(3)), tuple(-int(j == i) for j in range(3)))]
CUBE = list(product((1, -1), repeat=3))
CUBOCTAHEDRON = [p for p in product((-1, 0, 1), repeat=3) if sum(map(abs, p)) == 2]
TETRAHEDRON = [(H, H, -H), (H, -H, H), (-H, H, H), (-H, -H, -H)]


def test_f_vectors():
  assert polyfan.f_vector(LatticePolytope(N1, CUBOCTAHEDRON)) == (12, 24, 14)
  assert polyfan.f_vector(LatticePolytope(Z3, OCTAHEDRON)) == (6, 12, 8)
  assert polyfan.f_vector(LatticePolytope(Z3, CUBE)) == (8, 12, 6)


def test_cuboctahedron_facets():
  poset = polyfan.face_poset(LatticePolytope(N1, CUBOCTAHEDRON))
  assert sorted(len(f) for f in poset[2]) == [3] * 8 + [4] * 6


def test_degenerate_polytope():
  with pytest.raises(polyfan.PolytopeError):
    LatticePolytope(Z3, [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)])


def test_non_vertex_rejected():
  with pytest.raises(polyfan.PolytopeError):
    LatticePolytope(Z3, OCTAHEDRON + [(0, 0, 0)])


def test_face_fan_octahedron():
  F = polyfan.face_fan(LatticePolytope(Z3, OCTAHEDRON))
  assert len(F.rays) == 6 and len(F.maximal_cones) == 8
  assert all(len(c.primitive_generators) == 3 for c in F.maximal_cones)


def test_face_fan_cube_in_half_lattice():
  F = polyfan.face_fan(LatticePolytope(N3, CUBE))
  assert sorted(F.rays) == sorted(tuple(H * x for x in v) for v in CUBE)
  assert len(F.maximal_cones) == 6 and all(len(c.rays) == 4 for c in F.maximal_cones)
  # (1,1,1) is twice a lattice point of N3, so it is not primitive there
  assert N3.contains((H, H, H))


def test_face_fan_cuboctahedron():
  F = polyfan.face_fan(LatticePolytope(N1, CUBOCTAHEDRON))
  assert len(F.rays) == 12 and len(F.maximal_cones) == 14
  assert set(F.rays) == {tuple(Fraction(x) for x in v) for v in CUBOCTAHEDRON}


def test_origin_must_be_interior():
  with pytest.raises(polyfan.PolytopeError):
    polyfan.face_fan(LatticePolytope(Z3, [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]))


def test_classify_examples():
  e = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
  assert polyfan.classify_cone(e, Z3).kind == "smooth"
  assert polyfan.classify_cone(e, N3).kind == "half_1_1_1"
  square = [(1, 0, 1), (1, 0, -1), (1, 1, 0), (1, -1, 0)]
  assert polyfan.classify_cone(square, N1).kind == "ODP"
  # (1,0,0) has odd coordinate sum, so the Y24 square has no interior point
  assert not N1.contains((1, 0, 0))
  x8 = polyfan.classify_cone([(1, 1, 1), (1, 1, -1), (1, -1, 1), (1, -1, -1)], Z3)
  # generators span <(1,1,1), (0,2,0), (0,0,2)>, index 4 in Z^3
  assert (x8.kind, x8.multiplicity, x8.terminal) == ("other", 4, False)
  assert (1, 0, 0) in polyfan.lattice_points_in_hull(
    [(0, 0, 0), (1, 1, 1), (1, 1, -1), (1, -1, 1), (1, -1, -1)], Z3)


def test_classify_rejects_non_pointed():
  with pytest.raises(polyfan.PolytopeError):
    polyfan.classify_cone([(1, 0, 0), (-1, 0, 0), (0, 1, 0)], Z3)


def test_terminality():
  assert polyfan.is_terminal_fano(toricvar.model("Y24").fan)
  assert not polyfan.is_terminal_fano(toricvar.model("X8").fan)
  assert polyfan.is_terminal_fano(toricvar.model("V6").fan)


def test_automorphism_examples():
  G = polyfan.automorphisms(LatticePolytope(N1, CUBOCTAHEDRON))
  assert (G.order, latgroup.identify(G)) == (48, "S4xC2")
  T = polyfan.automorphisms(LatticePolytope(N3, TETRAHEDRON))
  assert (T.order, latgroup.identify(T)) == (24, "S4")
  hexagon = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)]
  assert polyfan.automorphisms(LatticePolytope(Z2, hexagon)).order == 12


@pytest.mark.parametrize("X", toricvar.catalog(), ids=lambda X: X.name)
def test_catalog_polytope_invariants(X):
  P, F, L = X.polytope, X.fan, X.lattice
  assert F.is_complete()
  assert all(L.contains(v) for v in P.vertices)
  assert all(L.primitive(r) == r for r in F.rays)
  if X.rank == 3:
    v, e, f = polyfan.f_vector(P)
    assert v - e + f == 2
  # automorphisms permute the vertices and preserve L
  vs = {L.int_coords(v) for v in P.vertices}
  G = polyfan.automorphisms(P)
  for g in G.elements:
    assert {tuple(intlin.matvec(g, v)) for v in vs} == vs
    assert abs(intlin.det(g)) == 1


@pytest.mark.parametrize("name", ["Y24", "V4", "X24", "X8"])
def test_classification_is_symmetric(name):
  X = toricvar.model(name)
  label = {c.rays: str(polyfan.classify_cone(c, X.lattice)) for c in X.fan.maximal_cones}
  for orb in toricvar.orbits(X, toricvar.weyl(X)).orbits[0]:
    assert len({label[c] for c in orb}) == 1
