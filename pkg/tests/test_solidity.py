import pytest

from toricsolid import latgroup, solidity, toricvar
from toricsolid.solidity import SOLID_FIVE


def fam(i, name):
  return toricvar.family_groups(i)[name]


def on(model, name):
  X = toricvar.model(model)
  return X, toricvar.group_by_name(X, name)


def test_v6_core_is_solid():
  v = solidity.is_g_solid(*on("V6", "W2A"))
  assert v.solid and v.minimal and v.irreducible


def test_weighted_space_not_solid():
  X = toricvar.model("P1123")
  v = solidity.is_g_solid(X, toricvar.weyl(X))
  assert not v.solid


def test_plane_with_trivial_group():
  X = toricvar.model("P2")
  v = solidity.is_g_solid(X, latgroup.closure([], X.character_lattice, rank=2))
  assert not v.solid and not v.irreducible


def test_non_terminal_rejected():
  X = toricvar.model("X8")
  with pytest.raises(solidity.SolidityError):
    solidity.is_g_solid(X, toricvar.weyl(X))


@pytest.mark.parametrize("name,expected", [("W1", True), ("W2", True), ("W3", True), ("W3A", False),
                                           ("W3Sbar", False), ("W2A", False)])
def test_condition_b(name, expected):
  assert solidity.superrigidity_condition_b(fam(int(name[1]), name)) is expected


def test_condition_b_needs_irreducible():
  with pytest.raises(solidity.SolidityError):
    solidity.superrigidity_condition_b(latgroup.closure(toricvar.PERMUTATION_MATRICES))


# ----------------------------------------------------------------- appendix

@pytest.mark.parametrize("model,group,label", [
  ("Y24", "W1A", "G-birationally superrigid"),
  ("X24", "W3A", "G-birational to P^3"),
  ("V4", "W3A", "not G-minimal"),
  ("V4", "W3S", "G-birational to X24"),
  ("P3", "W3Sbar", "G-birational to X24"),
])
def test_appendix_examples(model, group, label):
  out = solidity.appendix_row(*on(model, group))
  assert out.ok and out.label == label


def test_appendix_v4_type_one():
  X = toricvar.model("V4")
  S4s = [H for H in latgroup.all_subgroups(toricvar.weyl(X))
         if solidity.contains_a4_core(X, H) and solidity.appendix_column(H) == "S4 I"]
  assert S4s
  for H in S4s:
    assert solidity.appendix_row(X, H).label == "not G-minimal"


def test_appendix_scope():
  with pytest.raises(solidity.SolidityError):
    solidity.appendix_row(*on("Q", "weyl"))
  with pytest.raises(solidity.SolidityError):
    solidity.appendix_row(toricvar.model("V6"), latgroup.closure(toricvar.PERMUTATION_MATRICES))


def test_unrealizable_cell():
  # the P3 row fills a column whose group type never contains the core
  assert solidity.appendix_cells_unrealizable() == [("P3", "A4xC2")]


@pytest.mark.parametrize("model", SOLID_FIVE)
def test_appendix_conjugation_symmetric(model):
  X = toricvar.model(model)
  W = toricvar.weyl(X)
  for H in latgroup.all_subgroups(W):
    if not solidity.contains_a4_core(X, H):
      continue
    label = solidity.appendix_row(X, H).label
    # invariance under generators gives invariance under all of W
    for g in W.generators:
      K = H.conjugate(g)
      if solidity.contains_a4_core(X, K):
        assert solidity.appendix_row(X, K).label == label


# ------------------------------------------------------------------- sweeps

def terminal_threefolds():
  from toricsolid import polyfan
  return [X for X in toricvar.catalog() if X.rank == 3 and polyfan.is_terminal_fano(X.fan)]


def test_catalog_weyl_verdicts():
  solid = {X.name for X in terminal_threefolds() if solidity.is_g_solid(X, toricvar.weyl(X)).solid}
  assert solid == set(SOLID_FIVE)


@pytest.mark.parametrize("model", SOLID_FIVE)
def test_solid_needs_a4(model):
  for row in solidity.weyl_sweep(toricvar.model(model)):
    if row.solid:
      assert row.has_a4, row


def test_minimality_exceptions_only_on_v4():
  failures = set()
  for name in SOLID_FIVE:
    X = toricvar.model(name)
    for H in latgroup.all_subgroups(toricvar.weyl(X)):
      if solidity.contains_a4_core(X, H) and not toricvar.is_minimal(X, H):
        failures.add((name, solidity.appendix_column(H)))
  assert failures == {("V4", "A4"), ("V4", "S4 I")}


def test_sweep_outside_five_has_no_solid_rows():
  for X in terminal_threefolds():
    if X.name not in SOLID_FIVE:
      assert not any(r.solid for r in solidity.weyl_sweep(X)), X.name
