"""Invariant finite subgroups of a torus, enumerated modulo N.

The N-torsion T[N] of a torus with cocharacter lattice L^* is identified
with (Z/N)^r in the dual basis; a group on the character lattice acts there
by the contragredient. Subgroups correspond to lattices H with
N Z^r <= H <= Z^r, each stored by its row Hermite normal form.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product

from . import intlin, toricvar
from .latgroup import EmbeddedLattice, FiniteMatrixGroup

DEFAULT_GUARD = 12


class EnumerationBoundError(ValueError):
  pass


class SchemeMismatchError(ValueError):
  pass


@dataclass(frozen=True)
class TorsionAction:
  modulus: int
  rank: int
  matrices: tuple[intlin.Matrix, ...]
  lattice: EmbeddedLattice | None = None


def _mod(g, n):
  return tuple(tuple(x % n for x in r) for r in g)


def torsion_action(L: EmbeddedLattice, W: FiniteMatrixGroup, N: int) -> TorsionAction:
  if N < 1:
    raise ValueError("modulus must be positive")
  Wl = W.in_basis(L)
  mats = {_mod(intlin.transpose(intlin.int_inverse(g)), N) for g in Wl.elements}
  return TorsionAction(N, L.rank, tuple(sorted(mats)), L)


@dataclass(frozen=True)
class SubgroupModN:
  modulus: int
  hnf: intlin.Matrix  # rows generate H with N Z^r <= H

  @property
  def rank(self) -> int:
    return len(self.hnf)

  @property
  def generators(self) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(x % self.modulus for x in r) for r in self.hnf)

  @property
  def order(self) -> int:
    d = 1
    for i, r in enumerate(self.hnf):
      d *= r[i]
    return self.modulus ** self.rank // d

  @property
  def invariant_factors(self) -> tuple[int, ...]:
    """Sorted cyclic orders a_1 | a_2 | ... of H / N Z^r, padded with ones."""
    diag = intlin.smith_diagonal(self.hnf)
    return tuple(sorted(self.modulus // e for e in diag))

  @property
  def exponent(self) -> int:
    return max(self.invariant_factors)

  def contains(self, v) -> bool:
    return _in_upper(self.hnf, v)

  def elements(self) -> frozenset:
    n, r = self.modulus, self.rank
    return frozenset(v for v in product(range(n), repeat=r) if self.contains(v))


def _in_upper(H, v) -> bool:
  v = list(v)
  for i, row in enumerate(H):
    d = row[i]
    if v[i] % d:
      return False
    q = v[i] // d
    v = [a - q * b for a, b in zip(v, row)]
  return not any(v)


def _candidate_hnfs(n: int, r: int):
  divisors = [d for d in range(1, n + 1) if n % d == 0]
  for diag in product(divisors, repeat=r):
    slots = [(i, j) for i in range(r) for j in range(i + 1, r)]
    for vals in product(*(range(diag[j]) for _, j in slots)):
      H = [[0] * r for _ in range(r)]
      for i in range(r):
        H[i][i] = diag[i]
      for (i, j), v in zip(slots, vals):
        H[i][j] = v
      yield tuple(tuple(row) for row in H)


def all_subgroups_mod(n: int, rank: int, guard: int = DEFAULT_GUARD) -> list[SubgroupModN]:
  if n > guard:
    raise EnumerationBoundError("enumeration bound exceeded")
  out = []
  for H in _candidate_hnfs(n, rank):
    if all(_in_upper(H, [n * int(i == k) for i in range(rank)]) for k in range(rank)):
      out.append(SubgroupModN(n, H))
  return out


def is_invariant(S: SubgroupModN, a: TorsionAction) -> bool:
  return all(S.contains(intlin.matvec(g, h)) for g in a.matrices for h in S.hnf)


def enumerate_invariant(a: TorsionAction, guard: int = DEFAULT_GUARD) -> list[SubgroupModN]:
  subs = [S for S in all_subgroups_mod(a.modulus, a.rank, guard) if is_invariant(S, a)]
  return sorted(subs, key=lambda S: (S.order, S.hnf))


def count_subgroups(n: int, rank: int, guard: int = DEFAULT_GUARD) -> int:
  return len(all_subgroups_mod(n, rank, guard))


# ---------------------------------------------------------- classification

SCHEMES = {"lemma71": 2, "cor72": 1, "cor73": 3}


def allowed_shapes(scheme: str, n: int) -> set[tuple[int, ...]]:
  """Sorted invariant-factor triples allowed for exponent n."""
  shapes = {(n, n, n)}
  if n % 2 == 0:
    shapes.add((n // 2, n, n))
    if scheme in ("lemma71", "cor72"):
      shapes.add((n // 2, n // 2, n))
  if n % 4 == 0:
    if scheme == "cor72":
      shapes.add((n // 4, n // 2, n))
      shapes.add((n // 4, n // 4, n))
    elif scheme == "cor73":
      shapes.add((n // 4, n, n))
  return shapes


def shape_label(scheme: str, S: SubgroupModN) -> str:
  n = S.exponent
  k = tuple(n // x for x in S.invariant_factors)  # (n/a1, n/a2, n/a3) descending ratios
  return "n/" + ",".join(str(x) for x in sorted(k, reverse=True)) if n > 1 else "trivial"


@dataclass
class ClassificationResult:
  scheme: str
  modulus: int
  subgroups: int
  counterexamples: list
  shapes: Counter
  examined: int = 0

  @property
  def ok(self) -> bool:
    return not self.counterexamples


def _check_scheme(a: TorsionAction, scheme: str) -> None:
  if scheme not in SCHEMES:
    raise SchemeMismatchError(f"unknown scheme {scheme}")
  i = SCHEMES[scheme]
  core = toricvar.family_groups(i)[f"W{i}A"]
  if a.lattice is None or not a.lattice.same_set(core.lattice):
    raise SchemeMismatchError(f"scheme {scheme} needs the lattice {core.lattice.name}")
  mats = set(a.matrices)
  needed = torsion_action(a.lattice, core, a.modulus).matrices
  if not set(needed) <= mats:
    raise SchemeMismatchError(f"scheme {scheme} needs a group containing W{i}A")


def verify_classification(a: TorsionAction, scheme: str, guard: int = DEFAULT_GUARD) -> ClassificationResult:
  _check_scheme(a, scheme)
  subs = enumerate_invariant(a, guard)
  bad = []
  shapes: Counter = Counter()
  for S in subs:
    inv = S.invariant_factors
    n = S.exponent
    shapes[shape_label(scheme, S)] += 1
    if inv not in allowed_shapes(scheme, n):
      bad.append((S.hnf, inv))
  total = count_subgroups(a.modulus, a.rank, guard)
  return ClassificationResult(scheme, a.modulus, len(subs), bad, shapes, total)


def cubic_core(S: SubgroupModN) -> tuple[int, int]:
  """Largest m with T[m] inside S, and the index [S : T[m]]."""
  if S.rank != 3:
    raise ValueError("cubic core needs rank 3")
  m = S.invariant_factors[0]
  return m, S.order // m ** 3


def envelope_index(S: SubgroupModN) -> int:
  """Index of S inside T[n], n the exponent of S."""
  return S.exponent ** S.rank // S.order


def scheme_action(scheme: str, N: int, group: str | None = None) -> TorsionAction:
  i = SCHEMES[scheme]
  G = toricvar.family_groups(i)[group or f"W{i}A"]
  return torsion_action(G.lattice, G, N)
