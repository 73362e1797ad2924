from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricsolid import intlin, toricvar

INDEX4 = ((2, 1, 1), (1, 2, 1), (1, 1, 2))  # M3 in M1 coordinates
INDEX2 = ((1, 1, 0), (1, 0, 1), (0, 1, 1))  # M3 in M2, and M2 in M1

small = st.integers(-6, 6)
matrices = st.integers(1, 4).flatmap(
  lambda m: st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=m, max_size=m)))


def is_row_hnf(H):
  pivots = []
  for r in H:
    nz = [j for j, x in enumerate(r) if x]
    if not nz:
      continue
    pivots.append((nz[0], r[nz[0]]))
  cols = [c for c, _ in pivots]
  if cols != sorted(cols) or len(set(cols)) != len(cols):
    return False
  for k, (c, p) in enumerate(pivots):
    if p <= 0:
      return False
    for i in range(k):
      if not 0 <= H[i][c] < p:
        return False
  return True


def test_hnf_identity():
  H, U = intlin.hermite_normal_form(intlin.identity(3))
  assert H == intlin.identity(3) and U == intlin.identity(3)


def test_hnf_index_four_by_hand():
  # rows span <(1,-1,0), (0,1,-1), (0,0,4)>, reduced above the pivots
  H, U = intlin.hermite_normal_form(INDEX4)
  assert H == ((1, 0, 3), (0, 1, 3), (0, 0, 4))
  assert abs(intlin.det(H)) == 4


def test_hnf_index_two_by_hand():
  H, _ = intlin.hermite_normal_form(INDEX2)
  assert H == ((1, 0, 1), (0, 1, 1), (0, 0, 2))
  assert abs(intlin.det(H)) == 2


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_hnf_properties(a):
  H, U = intlin.hermite_normal_form(a)
  assert abs(intlin.det(U)) == 1
  assert intlin.matmul(U, a) == H
  assert is_row_hnf(H)


def test_snf_examples():
  assert intlin.smith_diagonal(intlin.zeros(3, 3)) == (0, 0, 0)
  assert intlin.smith_diagonal(INDEX4) == (1, 1, 4)
  assert intlin.smith_diagonal(INDEX2) == (1, 1, 2)


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_snf_properties(a):
  U, S, V = intlin.smith_normal_form(a)
  assert intlin.matmul(intlin.matmul(U, a), V) == S
  assert abs(intlin.det(U)) == 1 and abs(intlin.det(V)) == 1
  d = [S[i][i] for i in range(min(len(S), len(S[0])))]
  assert all(x >= 0 for x in d)
  assert all(S[i][j] == 0 for i in range(len(S)) for j in range(len(S[0])) if i != j)
  for x, y in zip(d, d[1:]):
    assert (y == 0) if x == 0 else y % x == 0
  if len(a) == len(a[0]):
    prod = 1
    for x in d:
      prod *= x
    assert abs(intlin.det(a)) == prod


def test_cokernel_examples():
  assert intlin.cokernel_invariants(intlin.identity(3)) == intlin.AbelianInvariants(0, ())
  assert intlin.cokernel_invariants(intlin.scale(intlin.identity(3), 2)) == intlin.AbelianInvariants(0, (2, 2, 2))


def test_abelian_invariants_canonical():
  with pytest.raises(ValueError):
    intlin.AbelianInvariants(0, (2, 3))
  with pytest.raises(ValueError):
    intlin.AbelianInvariants(0, (1, 2))


def test_saturate_examples():
  cols = intlin.transpose(((2, 0, 0), (0, 2, 0)))
  assert intlin.sublattice_index(intlin.transpose(((1, 0, 0), (0, 1, 0))), intlin.saturate(cols)) == 1
  assert intlin.saturate(intlin.transpose(((2, 2, 2),))) == ((1,), (1,), (1,))
  assert intlin.sublattice_index(intlin.saturate(INDEX4), intlin.identity(3)) == 1


def test_saturate_rank_deficient():
  with pytest.raises(ValueError, match="not full column rank"):
    intlin.saturate(((1, 2), (2, 4), (3, 6)))


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(small, min_size=2, max_size=2), min_size=3, max_size=3))
def test_saturate_idempotent(b):
  if intlin.rank(b) < 2:
    return
  s = intlin.saturate(b)
  assert intlin.column_hnf(intlin.saturate(s)) == intlin.column_hnf(s)
  # the quotient is torsion free: cokernel of the saturation has no torsion
  assert intlin.cokernel_invariants(s).torsion == ()


def test_sublattice_index_chain():
  m3_in_m1 = toricvar.M3.change_of_basis(toricvar.M1)
  m2_in_m1 = toricvar.M2.change_of_basis(toricvar.M1)
  m3_in_m2 = toricvar.M3.change_of_basis(toricvar.M2)
  assert m3_in_m1 == INDEX4
  I = intlin.identity(3)
  assert intlin.sublattice_index(intlin.transpose(m3_in_m1), I) == 4
  assert intlin.sublattice_index(intlin.transpose(m2_in_m1), I) == 2
  assert intlin.sublattice_index(intlin.transpose(m3_in_m2), I) == 2
  assert intlin.sublattice_index(I, I) == 1


def test_sublattice_index_errors():
  assert intlin.sublattice_index(((1,), (0,), (0,)), intlin.identity(3)) == intlin.INFINITE
  with pytest.raises(ValueError):
    intlin.sublattice_index(intlin.identity(3), INDEX4)


def test_no_floats_in_inverse():
  inv = intlin.inverse(INDEX4)
  assert all(isinstance(x, Fraction) for r in inv for x in r)
  assert intlin.matmul(inv, INDEX4) == intlin.identity(3)
