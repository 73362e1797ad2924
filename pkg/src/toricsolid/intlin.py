"""Exact integer linear algebra.

Matrices are tuples of row tuples holding Python ints (or Fractions for the
rational helpers).  Nothing here ever touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Matrix = tuple[tuple[int, ...], ...]
QMatrix = tuple[tuple[Fraction, ...], ...]

INFINITE = math.inf


@dataclass(frozen=True)
class AbelianInvariants:
  """Finitely generated abelian group Z^free_rank + sum Z/t_i.

  Attributes:
    free_rank: rank of the free part.
    torsion: invariant factors, each >= 2 and dividing the next.
  """
  free_rank: int
  torsion: tuple[int, ...] = ()

  def __post_init__(self):
    if self.free_rank < 0:
      raise ValueError("negative free rank")
    for i, t in enumerate(self.torsion):
      if t < 2:
        raise ValueError("torsion entries must be >= 2")
      if i and t % self.torsion[i - 1]:
        raise ValueError("torsion is not a divisibility chain")

  def __str__(self) -> str:
    parts = []
    if self.free_rank:
      parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
    parts += [f"Z/{t}" for t in self.torsion]
    return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------- basics

def as_matrix(rows: Iterable[Iterable]) -> Matrix:
  """Freeze nested iterables of integers into a Matrix."""
  out = tuple(tuple(int(x) for x in r) for r in rows)
  if not out or not out[0]:
    raise ValueError("matrix needs at least one row and one column")
  if any(len(r) != len(out[0]) for r in out):
    raise ValueError("ragged matrix")
  return out


def as_qmatrix(rows: Iterable[Iterable]) -> QMatrix:
  return tuple(tuple(Fraction(x) for x in r) for r in rows)


def shape(a: Sequence[Sequence]) -> tuple[int, int]:
  return len(a), len(a[0])


def identity(n: int) -> Matrix:
  return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(m: int, n: int) -> Matrix:
  return tuple((0,) * n for _ in range(m))


def transpose(a):
  return tuple(zip(*a))


def matmul(a, b):
  bt = transpose(b)
  return tuple(tuple(sum(x * y for x, y in zip(r, c)) for c in bt) for r in a)


def matvec(a, v):
  return tuple(sum(x * y for x, y in zip(r, v)) for r in a)


def scale(a, c):
  return tuple(tuple(c * x for x in r) for r in a)


def det(a) -> Fraction | int:
  """Determinant by fraction-free elimination (exact for ints and Fractions)."""
  n = len(a)
  if any(len(r) != n for r in a):
    raise ValueError("determinant of a non-square matrix")
  m = [[Fraction(x) for x in r] for r in a]
  sign = 1
  for k in range(n):
    p = next((i for i in range(k, n) if m[i][k] != 0), None)
    if p is None:
      return 0
    if p != k:
      m[k], m[p] = m[p], m[k]
      sign = -sign
    for i in range(k + 1, n):
      f = m[i][k] / m[k][k]
      if f:
        for j in range(k, n):
          m[i][j] -= f * m[k][j]
  out = Fraction(sign)
  for k in range(n):
    out *= m[k][k]
  return int(out) if out.denominator == 1 else out


def inverse(a) -> QMatrix:
  """Inverse over Q.  Raises ValueError when singular."""
  n = len(a)
  m = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
       for i, r in enumerate(a)]
  for k in range(n):
    p = next((i for i in range(k, n) if m[i][k] != 0), None)
    if p is None:
      raise ValueError("singular matrix")
    m[k], m[p] = m[p], m[k]
    piv = m[k][k]
    m[k] = [x / piv for x in m[k]]
    for i in range(n):
      if i != k and m[i][k]:
        f = m[i][k]
        m[i] = [x - f * y for x, y in zip(m[i], m[k])]
  return tuple(tuple(r[n:]) for r in m)


def to_int(a) -> Matrix:
  """Convert a rational matrix with integral entries to a Matrix."""
  out = []
  for r in a:
    row = []
    for x in r:
      x = Fraction(x)
      if x.denominator != 1:
        raise ValueError("matrix is not integral")
      row.append(int(x))
    out.append(tuple(row))
  return tuple(out)


def int_inverse(a) -> Matrix:
  """Inverse of a unimodular integer matrix."""
  return to_int(inverse(a))


def rref(a) -> tuple[QMatrix, tuple[int, ...]]:
  """Reduced row echelon form over Q and the pivot columns."""
  m = [[Fraction(x) for x in r] for r in a]
  rows, cols = len(m), len(m[0]) if m else 0
  pivots = []
  r = 0
  for c in range(cols):
    p = next((i for i in range(r, rows) if m[i][c] != 0), None)
    if p is None:
      continue
    m[r], m[p] = m[p], m[r]
    piv = m[r][c]
    m[r] = [x / piv for x in m[r]]
    for i in range(rows):
      if i != r and m[i][c]:
        f = m[i][c]
        m[i] = [x - f * y for x, y in zip(m[i], m[r])]
    pivots.append(c)
    r += 1
    if r == rows:
      break
  return tuple(tuple(x) for x in m), tuple(pivots)


def rank(a) -> int:
  if not a or not a[0]:
    return 0
  return len(rref(a)[1])


def nullspace(a, ncols: int | None = None) -> tuple[tuple[Fraction, ...], ...]:
  """Basis of the right kernel {x : a x = 0} over Q."""
  if not a:
    n = ncols or 0
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))
  n = len(a[0])
  red, piv = rref(a)
  free = [c for c in range(n) if c not in piv]
  basis = []
  for f in free:
    v = [Fraction(0)] * n
    v[f] = Fraction(1)
    for i, p in enumerate(piv):
      v[p] = -red[i][f]
    basis.append(tuple(v))
  return tuple(basis)


def solve(a, b) -> tuple[Fraction, ...] | None:
  """One solution x of a x = b over Q, or None."""
  n = len(a[0])
  aug = [list(r) + [bb] for r, bb in zip(a, b)]
  red, piv = rref(aug)
  if n in piv:
    return None
  x = [Fraction(0)] * n
  for i, p in enumerate(piv):
    x[p] = red[i][n]
  return tuple(x)


def primitive(v: Sequence[int]) -> tuple[int, ...]:
  """Divide an integer vector by the gcd of its entries."""
  g = math.gcd(*v)
  if g == 0:
    raise ValueError("zero vector has no primitive multiple")
  return tuple(x // g for x in v)


def clear_denominators(v: Sequence[Fraction]) -> tuple[int, ...]:
  """Smallest positive multiple of a rational vector that is integral and primitive."""
  lcm = 1
  for x in v:
    lcm = lcm * Fraction(x).denominator // math.gcd(lcm, Fraction(x).denominator)
  return primitive([int(Fraction(x) * lcm) for x in v])


# ---------------------------------------------------------- normal forms

def _row_op(m, i, j, q):
  """row_i -= q * row_j"""
  m[i] = [x - q * y for x, y in zip(m[i], m[j])]


def hermite_normal_form(a) -> tuple[Matrix, Matrix]:
  """Row-style Hermite normal form.

  Args:
    a: integer matrix.

  Returns:
    (H, U) with U unimodular and U*a == H.  H is upper echelon with positive
    pivots, and every entry above a pivot lies in [0, pivot).
  """
  a = as_matrix(a)
  m, n = shape(a)
  h = [list(r) for r in a]
  u = [list(r) for r in identity(m)]
  row = 0
  for col in range(n):
    if row == m:
      break
    while True:
      nz = [i for i in range(row, m) if h[i][col] != 0]
      if not nz:
        break
      p = min(nz, key=lambda i: abs(h[i][col]))
      h[row], h[p] = h[p], h[row]
      u[row], u[p] = u[p], u[row]
      clean = True
      for i in range(row + 1, m):
        if h[i][col]:
          q = h[i][col] // h[row][col]
          _row_op(h, i, row, q)
          _row_op(u, i, row, q)
          clean = clean and h[i][col] == 0
      if clean:
        break
    if h[row][col] == 0:
      continue
    if h[row][col] < 0:
      h[row] = [-x for x in h[row]]
      u[row] = [-x for x in u[row]]
    for i in range(row):
      q = h[i][col] // h[row][col]
      if q:
        _row_op(h, i, row, q)
        _row_op(u, i, row, q)
    row += 1
  H, U = as_matrix(h), as_matrix(u)
  assert matmul(U, a) == H
  return H, U


def smith_normal_form(a) -> tuple[Matrix, Matrix, Matrix]:
  """Smith normal form.

  Args:
    a: integer matrix.

  Returns:
    (U, S, V) with U, V unimodular, U*a*V == S diagonal, d_i | d_{i+1} and
    d_i >= 0.
  """
  a = as_matrix(a)
  m, n = shape(a)
  s = [list(r) for r in a]
  u = [list(r) for r in identity(m)]
  v = [list(r) for r in identity(n)]

  def col_op(i, j, q):  # col_i -= q * col_j
    for mat in (s, v):
      for r in mat:
        r[i] -= q * r[j]

  def swap_cols(i, j):
    for mat in (s, v):
      for r in mat:
        r[i], r[j] = r[j], r[i]

  for t in range(min(m, n)):
    while True:
      entries = [(abs(s[i][j]), i, j) for i in range(t, m) for j in range(t, n) if s[i][j]]
      if not entries:
        break
      _, pi, pj = min(entries)
      s[t], s[pi] = s[pi], s[t]
      u[t], u[pi] = u[pi], u[t]
      swap_cols(t, pj)
      p = s[t][t]
      dirty = False
      for i in range(t + 1, m):
        q = s[i][t] // p
        if q:
          _row_op(s, i, t, q)
          _row_op(u, i, t, q)
        dirty = dirty or s[i][t] != 0
      for j in range(t + 1, n):
        q = s[t][j] // p
        if q:
          col_op(j, t, q)
        dirty = dirty or s[t][j] != 0
      if dirty:
        continue
      bad = next((i for i in range(t + 1, m) for j in range(t + 1, n) if s[i][j] % p), None)
      if bad is None:
        break
      _row_op(s, t, bad, -1)
      _row_op(u, t, bad, -1)
    if s[t][t] < 0:
      s[t] = [-x for x in s[t]]
      u[t] = [-x for x in u[t]]
  U, S, V = as_matrix(u), as_matrix(s), as_matrix(v)
  assert matmul(matmul(U, a), V) == S
  return U, S, V


def smith_diagonal(a) -> tuple[int, ...]:
  _, s, _ = smith_normal_form(a)
  return tuple(s[i][i] for i in range(min(shape(s))))


def cokernel_invariants(a) -> AbelianInvariants:
  """Invariants of coker(a : Z^cols -> Z^rows)."""
  a = as_matrix(a)
  rows = len(a)
  diag = smith_diagonal(a)
  nonzero = [d for d in diag if d]
  return AbelianInvariants(rows - len(nonzero), tuple(d for d in nonzero if d > 1))


def column_hnf(b) -> Matrix:
  """Canonical basis of the column span: HNF of the transpose, nonzero rows, transposed."""
  h, _ = hermite_normal_form(transpose(as_matrix(b)))
  rows = [r for r in h if any(r)]
  return transpose(rows)


def saturate(b) -> Matrix:
  """Basis (as columns) of the primitive sublattice Q<b> intersected with Z^m.

  Raises:
    ValueError: if b does not have full column rank.
  """
  b = as_matrix(b)
  m, k = shape(b)
  if rank(b) < k:
    raise ValueError("not full column rank")
  u, _, _ = smith_normal_form(b)
  uinv = int_inverse(u)
  cols = tuple(tuple(uinv[i][j] for i in range(m)) for j in range(k))
  return column_hnf(transpose(cols))


def sublattice_index(sub, sup) -> int | float:
  """Index of the column lattice of ``sub`` inside the column lattice of ``sup``.

  Returns INFINITE when the ranks differ.

  Raises:
    ValueError: if some column of ``sub`` is not in the lattice of ``sup``.
  """
  sub, sup = as_matrix(sub), as_matrix(sup)
  basis = column_hnf(sup)  # m x r, full column rank
  coeffs = []
  for col in transpose(sub):
    x = solve(basis, col)
    if x is None or any(c.denominator != 1 for c in x):
      raise ValueError("sub is not contained in super")
    coeffs.append([int(c) for c in x])
  r = len(basis[0])
  if rank(sub) != r:
    return INFINITE
  # coeffs: columns of sub in the basis; the index is the gcd-product of its SNF
  diag = smith_diagonal(transpose(coeffs))
  return math.prod(diag[:r])
