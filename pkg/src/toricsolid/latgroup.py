"""Finite matrix groups over Z and the lattices they act on.

Group elements are integer matrices written in the basis of the carrying
lattice and act on column coordinate vectors.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from . import intlin
from .intlin import Matrix

DEFAULT_ORDER_CAP = 384


class GroupError(ValueError):
  pass


class UnsupportedError(ValueError):
  pass


# --------------------------------------------------------------- lattices

@dataclass(frozen=True)
class EmbeddedLattice:
  """A full-rank lattice inside Q^rank given by a rational basis (rows)."""
  name: str
  basis: tuple[tuple[Fraction, ...], ...]

  def __post_init__(self):
    object.__setattr__(self, "basis", intlin.as_qmatrix(self.basis))
    if len(self.basis) not in (1, 2, 3) or any(len(r) != len(self.basis) for r in self.basis):
      raise ValueError("basis must be square of size 1..3")
    if intlin.det(self.basis) == 0:
      raise ValueError("basis is singular")

  @property
  def rank(self) -> int:
    return len(self.basis)

  @property
  def denominator(self) -> int:
    return math.lcm(*(x.denominator for r in self.basis for x in r))

  def coords(self, x: Sequence) -> tuple[Fraction, ...]:
    """Coordinates of a reference vector in this basis (x = sum c_i b_i)."""
    return intlin.solve(intlin.transpose(self.basis), [Fraction(v) for v in x])

  def contains(self, x: Sequence) -> bool:
    return all(c.denominator == 1 for c in self.coords(x))

  def int_coords(self, x: Sequence) -> tuple[int, ...]:
    c = self.coords(x)
    if any(v.denominator != 1 for v in c):
      raise ValueError(f"{tuple(x)} is not in lattice {self.name}")
    return tuple(int(v) for v in c)

  def point(self, c: Sequence[int]) -> tuple[Fraction, ...]:
    """Reference vector with the given coordinates."""
    return tuple(sum(Fraction(ci) * b[j] for ci, b in zip(c, self.basis)) for j in range(self.rank))

  def primitive(self, x: Sequence) -> tuple[Fraction, ...]:
    """Primitive lattice vector on the ray through x (x need not be in the lattice)."""
    return self.point(intlin.clear_denominators(self.coords(x)))

  def dual(self, name: str | None = None) -> "EmbeddedLattice":
    """Dual lattice for the standard pairing, with the dual basis."""
    inv = intlin.inverse(self.basis)
    return EmbeddedLattice(name or f"{self.name}^*", intlin.transpose(inv))

  def same_set(self, other: "EmbeddedLattice") -> bool:
    """True when both bases span the same subset of Q^rank."""
    if other.rank != self.rank:
      return False
    return all(self.contains(b) for b in other.basis) and all(other.contains(b) for b in self.basis)

  # conversions of linear maps between bases and reference coordinates
  def to_reference(self, g: Matrix) -> tuple[tuple[Fraction, ...], ...]:
    bt = intlin.transpose(self.basis)
    return intlin.matmul(intlin.matmul(bt, g), intlin.inverse(bt))

  def from_reference(self, a) -> Matrix:
    bt = intlin.transpose(self.basis)
    return intlin.to_int(intlin.matmul(intlin.matmul(intlin.inverse(bt), a), bt))

  def change_of_basis(self, target: "EmbeddedLattice") -> Matrix:
    """Integer matrix taking coordinates in this basis to coordinates in ``target``."""
    return intlin.to_int(intlin.matmul(intlin.inverse(intlin.transpose(target.basis)),
                                       intlin.transpose(self.basis)))

  def in_lattice_basis(self, g: Matrix, target: "EmbeddedLattice") -> Matrix:
    """Rewrite a matrix given in this basis in the basis of ``target`` (same set)."""
    return target.from_reference(self.to_reference(g))


def standard_lattice(rank: int, name: str = "Z") -> EmbeddedLattice:
  return EmbeddedLattice(name, intlin.identity(rank))


# ----------------------------------------------------------------- groups

def _key(g: Matrix) -> tuple[int, ...]:
  return tuple(x for r in g for x in r)


@dataclass(frozen=True)
class FiniteMatrixGroup:
  lattice: EmbeddedLattice
  generators: tuple[Matrix, ...]
  elements: tuple[Matrix, ...] = field(compare=False)

  @property
  def order(self) -> int:
    return len(self.elements)

  @property
  def rank(self) -> int:
    return self.lattice.rank

  def __eq__(self, other):
    return (isinstance(other, FiniteMatrixGroup) and self.lattice.same_set(other.lattice)
            and self.elements == other.elements)

  def __hash__(self):
    return hash(self.elements)

  def __contains__(self, g) -> bool:
    return intlin.as_matrix(g) in self.element_set

  @property
  def element_set(self) -> frozenset:
    s = self.__dict__.get("_eset")
    if s is None:
      s = frozenset(self.elements)
      object.__setattr__(self, "_eset", s)
    return s

  def is_subgroup_of(self, other: "FiniteMatrixGroup") -> bool:
    return self.element_set <= other.element_set

  def in_basis(self, target: EmbeddedLattice) -> "FiniteMatrixGroup":
    """The same group written in the basis of ``target`` (an equal lattice)."""
    if not self.lattice.same_set(target):
      raise GroupError(f"lattice {self.lattice.name} differs from {target.name}")
    if self.lattice.basis == target.basis:
      return FiniteMatrixGroup(target, self.generators, self.elements)
    c = self.lattice.change_of_basis(target)
    ci = intlin.int_inverse(c)
    conv = lambda g: intlin.matmul(intlin.matmul(c, g), ci)
    return FiniteMatrixGroup(target, tuple(conv(g) for g in self.generators),
                             tuple(sorted(conv(g) for g in self.elements)))

  def contragredient(self, lattice: EmbeddedLattice | None = None) -> "FiniteMatrixGroup":
    """The action g -> (g^-1)^T, carried by the dual lattice with its dual basis."""
    lat = lattice or self.lattice.dual()
    f = lambda g: intlin.transpose(intlin.int_inverse(g))
    return FiniteMatrixGroup(lat, tuple(f(g) for g in self.generators),
                             tuple(sorted(f(g) for g in self.elements)))

  def conjugate(self, x: Matrix) -> "FiniteMatrixGroup":
    """x G x^-1."""
    xi = intlin.int_inverse(x)
    c = lambda g: intlin.matmul(intlin.matmul(x, g), xi)
    return FiniteMatrixGroup(self.lattice, tuple(c(g) for g in self.generators),
                             tuple(sorted(c(g) for g in self.elements)))


def closure(generators: Iterable, lattice: EmbeddedLattice | None = None,
            order_cap: int = DEFAULT_ORDER_CAP, rank: int | None = None) -> FiniteMatrixGroup:
  """Breadth-first product closure of a generating set.

  Raises:
    GroupError: when more than ``order_cap`` elements appear.
  """
  gens = tuple(intlin.as_matrix(g) for g in generators)
  if lattice is None:
    n = rank if rank is not None else (len(gens[0]) if gens else None)
    if n is None:
      raise ValueError("rank is needed for an empty generator list")
    lattice = standard_lattice(n)
  n = lattice.rank
  for g in gens:
    if intlin.shape(g) != (n, n) or abs(intlin.det(g)) != 1:
      raise GroupError("generators must be invertible over Z")
  one = intlin.identity(n)
  seen = {one}
  todo = deque([one])
  while todo:
    a = todo.popleft()
    for g in gens:
      b = intlin.matmul(a, g)
      if b not in seen:
        seen.add(b)
        if len(seen) > order_cap:
          raise GroupError("group not finite within cap")
        todo.append(b)
  return FiniteMatrixGroup(lattice, gens, tuple(sorted(seen)))


def trivial_group(lattice: EmbeddedLattice) -> FiniteMatrixGroup:
  return closure([], lattice)


def subgroup_from_elements(G: FiniteMatrixGroup, elements: Iterable) -> FiniteMatrixGroup:
  """Subgroup of G generated by the given elements, with a small generating set."""
  elements = [intlin.as_matrix(g) for g in elements]
  H = closure([], G.lattice)
  gens: list = []
  for g in elements:
    if g not in H.element_set:
      gens.append(g)
      H = closure(gens, G.lattice)
  return H


def small_generating_set(G: FiniteMatrixGroup) -> tuple[Matrix, ...]:
  """Greedy generating set, usually 2-4 matrices."""
  return subgroup_from_elements(G, sorted(G.elements, key=lambda g: (-element_order(g), g))).generators


def element_order(g: Matrix, cap: int = 1000) -> int:
  one = intlin.identity(len(g))
  x, k = g, 1
  while x != one:
    x = intlin.matmul(x, g)
    k += 1
    if k > cap:
      raise GroupError("element of infinite order")
  return k


def all_subgroups(G: FiniteMatrixGroup) -> list[FiniteMatrixGroup]:
  """Every subgroup of G, by joining cyclic subgroups until nothing new appears.

  Works on element indices through the multiplication table of G.
  """
  els = G.elements
  index = {g: i for i, g in enumerate(els)}
  table = [[index[intlin.matmul(a, b)] for b in els] for a in els]

  def join(base: frozenset, gens: tuple) -> frozenset:
    seen = set(base)
    todo = list(seen)
    while todo:
      a = todo.pop()
      for g in gens:
        b = table[a][g]
        if b not in seen:
          seen.add(b)
          todo.append(b)
    return frozenset(seen)

  one = index[intlin.identity(G.rank)]
  known: dict[frozenset, tuple] = {}
  frontier = []
  for i in range(len(els)):
    H = join(frozenset([one]), (i,))
    if H not in known:
      known[H] = (i,)
      frontier.append(H)
  while frontier:
    new = []
    for H in frontier:
      for i in range(len(els)):
        if i in H:
          continue
        gens = known[H] + (i,)
        K = join(H, gens)
        if K not in known:
          known[K] = gens
          new.append(K)
    frontier = new
  out = [FiniteMatrixGroup(G.lattice, tuple(els[i] for i in gens), tuple(sorted(els[i] for i in H)))
         for H, gens in known.items()]
  return sorted(out, key=lambda H: (H.order, H.elements))


# ---------------------------------------------------------- identification

@dataclass(frozen=True)
class Census:
  order: int
  center: int
  derived: int
  orders: tuple[tuple[int, int], ...]


def census(G: FiniteMatrixGroup) -> Census:
  els = G.elements
  gens = G.generators or els
  center = sum(1 for z in els if all(intlin.matmul(z, g) == intlin.matmul(g, z) for g in gens))
  inv = {a: intlin.int_inverse(a) for a in els}
  comms = set()
  for a in els:
    for b in els:
      comms.add(intlin.matmul(intlin.matmul(inv[a], inv[b]), intlin.matmul(a, b)))
  derived = closure(sorted(comms), G.lattice).order if comms else 1
  hist = Counter(element_order(g) for g in els)
  return Census(G.order, center, derived, tuple(sorted(hist.items())))


# order -> list of (center, derived, element-order histogram, label)
_SIGNATURES = {
  1: [(1, 1, {1: 1}, "1")],
  2: [(2, 1, {1: 1, 2: 1}, "C2")],
  3: [(3, 1, {1: 1, 3: 2}, "C3")],
  4: [(4, 1, {1: 1, 2: 3}, "C2^2"), (4, 1, {1: 1, 2: 1, 4: 2}, "C4")],
  6: [(1, 3, {1: 1, 2: 3, 3: 2}, "S3"), (6, 1, {1: 1, 2: 1, 3: 2, 6: 2}, "C6")],
  8: [(2, 2, {1: 1, 2: 5, 4: 2}, "D8")],
  12: [(1, 4, {1: 1, 2: 3, 3: 8}, "A4"), (2, 3, {1: 1, 2: 7, 3: 2, 6: 2}, "S3xC2")],
  24: [(1, 12, {1: 1, 2: 9, 3: 8, 4: 6}, "S4"), (2, 4, {1: 1, 2: 7, 3: 8, 6: 8}, "A4xC2")],
  48: [(2, 12, {1: 1, 2: 19, 3: 8, 4: 12, 6: 8}, "S4xC2")],
}

LABELS = ("1", "C2", "C2^2", "C3", "C4", "S3", "C6", "D8", "A4", "S4", "A4xC2", "S4xC2", "S3xC2")


def identify(G: FiniteMatrixGroup) -> str:
  """Abstract type from the census; unmatched groups give 'other(n)'."""
  c = census(G)
  for center, derived, hist, label in _SIGNATURES.get(c.order, []):
    if c.center == center and c.derived == derived and dict(c.orders) == hist:
      return label
  return f"other({c.order})"


# --------------------------------------------------------- invariant forms

def _sym_index(n):
  return [(i, j) for i in range(n) for j in range(i, n)]


def invariant_symmetric_forms(G: FiniteMatrixGroup) -> tuple[Matrix, ...]:
  """Integral basis of {F symmetric : g^T F g = F for all g in G}."""
  n = G.rank
  idx = _sym_index(n)
  rows = []
  for g in (G.generators or ()):
    for a in range(n):
      for b in range(a, n):
        # (g^T F g - F)[a][b] as a linear form in the upper-triangle unknowns
        row = []
        for i, j in idx:
          coef = g[i][a] * g[j][b]
          if i != j:
            coef += g[j][a] * g[i][b]
          if (i, j) == (a, b):
            coef -= 1
          row.append(coef)
        rows.append(row)
  basis = intlin.nullspace(rows, ncols=len(idx))
  out = []
  for v in basis:
    w = intlin.clear_denominators(v)
    F = [[0] * n for _ in range(n)]
    for (i, j), x in zip(idx, w):
      F[i][j] = F[j][i] = x
    out.append(intlin.as_matrix(F))
  return tuple(out)


def averaged_form(G: FiniteMatrixGroup) -> Matrix:
  """Sum of g^T g over the group: a positive-definite invariant form."""
  n = G.rank
  tot = [[0] * n for _ in range(n)]
  for g in G.elements:
    gg = intlin.matmul(intlin.transpose(g), g)
    for i in range(n):
      for j in range(n):
        tot[i][j] += gg[i][j]
  c = math.gcd(*(x for r in tot for x in r))
  return intlin.as_matrix([[x // c for x in r] for r in tot])


def is_positive_definite(F) -> bool:
  return all(intlin.det([r[:k] for r in F[:k]]) > 0 for k in range(1, len(F) + 1))


def unique_form(G: FiniteMatrixGroup) -> Matrix:
  """The primitive positive-definite generator of a one-dimensional form space."""
  forms = invariant_symmetric_forms(G)
  if len(forms) != 1:
    raise UnsupportedError("unsupported: non-unique invariant form")
  F = forms[0]
  if not is_positive_definite(F):
    F = intlin.scale(F, -1)
  if not is_positive_definite(F):
    raise UnsupportedError("unsupported: form space not definite")
  return F


def _qform(F, u, v):
  return sum(u[i] * F[i][j] * v[j] for i in range(len(u)) for j in range(len(v)))


def short_vectors(F: Matrix, bound: int) -> list[tuple[int, ...]]:
  """All nonzero integer x with x^T F x <= bound (F positive definite).

  Coordinates are bounded by |x_i| <= sqrt(bound * (F^-1)_ii), computed exactly.
  """
  n = len(F)
  inv = intlin.inverse(F)
  box = [math.isqrt(int(bound * inv[i][i])) + 1 for i in range(n)]
  out = []
  for x in product(*(range(-b, b + 1) for b in box)):
    if any(x) and _qform(F, x, x) <= bound:
      out.append(x)
  return out


def isometries(F1: Matrix, F2: Matrix, first_only: bool = False, accept=None) -> list[Matrix]:
  """All Y in GL_n(Z) with Y^T F1 Y = F2, by backtracking over images of basis vectors.

  ``accept`` is an optional predicate on complete candidates; rejected
  isometries do not stop the search.
  """
  n = len(F1)
  bound = max(F2[i][i] for i in range(n))
  cands = short_vectors(F1, bound)
  by_norm: dict[int, list] = {}
  for v in cands:
    by_norm.setdefault(_qform(F1, v, v), []).append(v)
  found: list[Matrix] = []
  cols: list = []

  def extend(k):
    if k == n:
      Y = intlin.transpose(cols)
      if abs(intlin.det(Y)) == 1 and (accept is None or accept(Y)):
        found.append(intlin.as_matrix(Y))
        return first_only
      return False
    for v in by_norm.get(F2[k][k], ()):
      if all(_qform(F1, cols[j], v) == F2[j][k] for j in range(k)):
        cols.append(v)
        if extend(k + 1):
          return True
        cols.pop()
    return False

  extend(0)
  return found


def automorphism_group(F: Matrix, lattice: EmbeddedLattice | None = None) -> FiniteMatrixGroup:
  """Aut(Z^n, F) for positive-definite F."""
  els = isometries(F, F)
  lat = lattice or standard_lattice(len(F))
  G = FiniteMatrixGroup(lat, (), tuple(sorted(els)))
  return FiniteMatrixGroup(lat, small_generating_set(G), G.elements)


def conjugator(G1: FiniteMatrixGroup, G2: FiniteMatrixGroup) -> Matrix | None:
  """X in GL_n(Z) with X G1 X^-1 = G2, or None.

  Complete when both groups have a one-dimensional invariant form space:
  Y = X^-1 must then carry the primitive form of G1 onto that of G2.
  """
  if G1.rank != G2.rank:
    raise ValueError("groups act on lattices of different rank")
  if G1.elements == G2.elements:
    return intlin.identity(G1.rank)
  if G1.order != G2.order or census(G1) != census(G2):
    return None
  try:
    F1, F2 = unique_form(G1), unique_form(G2)
  except UnsupportedError:
    raise UnsupportedError("unsupported: form space not definite")
  if intlin.det(F1) != intlin.det(F2):
    return None
  target = G2.element_set

  def ok(Y):
    X = intlin.int_inverse(Y)
    return all(intlin.matmul(intlin.matmul(X, g), Y) in target for g in G1.generators)

  found = isometries(F1, F2, first_only=True, accept=ok)
  if not found:
    return None
  X = intlin.int_inverse(found[0])
  assert G1.conjugate(X).elements == G2.elements
  return X


# -------------------------------------------------------- irreducibility

def _common_eigenline(mats: Sequence[Matrix], n: int):
  """A rational vector spanning a line stable under every matrix, or None.

  Finite-order integer matrices have rational eigenvalues in {1, -1}.
  """
  mats = list(mats)
  if not mats:
    return (1,) + (0,) * (n - 1)
  for signs in product((1, -1), repeat=len(mats)):
    rows = []
    for s, g in zip(signs, mats):
      rows += [[g[i][j] - s * int(i == j) for j in range(n)] for i in range(n)]
    ker = intlin.nullspace(rows, ncols=n)
    if ker:
      return intlin.clear_denominators(ker[0])
  return None


def invariant_line(G: FiniteMatrixGroup):
  return _common_eigenline(small_generating_set(G), G.rank)


def q_irreducible(G: FiniteMatrixGroup, L: EmbeddedLattice | None = None) -> bool:
  """True iff L tensor Q has no proper nonzero G-stable subspace (rank <= 3)."""
  n = G.rank
  if L is not None and L.rank != n:
    raise ValueError("group and lattice ranks differ")
  if n > 3:
    raise UnsupportedError("unsupported rank")
  if n == 1:
    return True
  gens = small_generating_set(G)
  if _common_eigenline(gens, n) is not None:
    return False
  if n == 3:
    dual = [intlin.transpose(intlin.int_inverse(g)) for g in gens]
    if _common_eigenline(dual, n) is not None:
      return False
  return True


def fixed_subspace_dim(G: FiniteMatrixGroup) -> int:
  n = G.rank
  rows = []
  for g in small_generating_set(G):
    rows += [[g[i][j] - int(i == j) for j in range(n)] for i in range(n)]
  return len(intlin.nullspace(rows, ncols=n))


def normalizer(G: FiniteMatrixGroup) -> FiniteMatrixGroup:
  """Normalizer of G in GL(L), computed inside Aut(L, F) for the unique form F."""
  F = unique_form(G)
  target = G.element_set
  gens = small_generating_set(G)

  def normalizes(Y):
    Yi = intlin.int_inverse(Y)
    return all(intlin.matmul(intlin.matmul(Y, g), Yi) in target for g in gens)

  els = isometries(F, F, accept=normalizes)
  N = FiniteMatrixGroup(G.lattice, (), tuple(sorted(els)))
  N = FiniteMatrixGroup(G.lattice, small_generating_set(N), N.elements)
  assert G.is_subgroup_of(N)
  return N
