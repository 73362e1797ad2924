"""Acceptance suite: one group of tests per criterion.

Each test carries a ``criterion`` marker; the terminal summary prints one
PASS/FAIL line per criterion. Run it alone with

    pytest tests/test_acceptance.py

or as a script: ``python tests/test_acceptance.py``.
"""

import json
import sys
import time

import pytest

from toricsolid import birmaps, claims, intlin, latgroup, polyfan, solidity, toricvar, torsub
from toricsolid.solidity import SOLID_FIVE

crit = pytest.mark.criterion


def grp(model, name):
  X = toricvar.model(model)
  return X, toricvar.group_by_name(X, name)


@pytest.fixture(scope="module")
def report(json_reports):
  return json.loads(json_reports[0].stdout)


CRITERION_OF = {c["id"]: c["criterion"] for c in claims.manifest()}


def claims_ok(report, n, skip=()):
  # SKIP marks missing data or a modulus above the bound, not a failure
  bad = [(r["id"], r["detail"]) for r in report
         if CRITERION_OF[r["id"]] == n and r["id"] not in skip and r["status"] == "FAIL"]
  assert not bad, bad


# ------------------------------------------------------------------------ 1

@crit(1)
def test_weyl_groups():
  t0 = time.perf_counter()
  want = {"Y24": (48, "S4xC2"), "V6": (48, "S4xC2"), "X24": (48, "S4xC2"), "V4": (48, "S4xC2"),
          "P3": (24, "S4"), "dP6": (12, "S3xC2"), "P1xP1": (8, "D8"), "P2": (6, "S3")}
  for name, (order, label) in want.items():
    W = toricvar.weyl(toricvar.model(name))
    assert (W.order, latgroup.identify(W)) == (order, label), name
  assert time.perf_counter() - t0 < 5


@crit(1)
def test_weyl_claims(report):
  claims_ok(report, 1)


# ------------------------------------------------------------------------ 2

@crit(2)
def test_strata_censuses():
  s = toricvar.strata(toricvar.model("Y24"))
  assert (s["divisors"], s["curves"], s["points"], s["point_types"]) == (12, 24, 14, {"ODP": 6, "smooth": 8})
  s = toricvar.strata(toricvar.model("X24"))
  assert (s["divisors"], s["curves"], s["points"], s["point_types"]) == (6, 12, 8, {"half_1_1_1": 8})
  s = toricvar.strata(toricvar.model("V4"))
  assert (s["divisors"], s["curves"], s["points"], s["point_types"]) == (8, 12, 6, {"ODP": 6})
  for name in ("V6", "P3"):
    assert set(toricvar.strata(toricvar.model(name))["point_types"]) == {"smooth"}
  assert not polyfan.is_terminal_fano(toricvar.model("X8").fan)


@crit(2)
def test_strata_claims(report):
  claims_ok(report, 2)


# ------------------------------------------------------------------------ 3

ORBITS = [
  ("Y24", ["W1A"], 2, None, (12,)),
  ("Y24", ["W1A"], 0, "ODP", (6,)),
  ("Y24", ["W1A", "W1Sbar"], 0, "smooth", (4, 4)),
  ("Y24", ["W1A", "W1Sbar"], 1, None, (12, 12)),
  ("Y24", ["W1S"], 0, "smooth", (8,)),
  ("Y24", ["W1S"], 1, None, (24,)),
  ("Y24", ["W1A+sigma", "W1"], 0, "smooth", (8,)),
  ("Y24", ["W1A+sigma", "W1"], 1, None, (24,)),
  ("V6", ["W2A"], 2, None, (6,)),
  ("V6", ["W2A"], 1, None, (12,)),
  ("V6", ["W2A", "W2Sbar"], 0, None, (4, 4)),
  ("V6", ["W2S"], 0, None, (8,)),
  ("V6", ["W2A+sigma", "W2"], 0, None, (8,)),
]


@crit(3)
@pytest.mark.parametrize("model,groups,dim,kind,sizes", ORBITS)
def test_orbit_structures(model, groups, dim, kind, sizes):
  for g in groups:
    X, W = grp(model, g)
    got = toricvar.orbits(X, W).sizes(dim) if kind is None else toricvar.orbit_sizes_by_type(X, W)[kind]
    assert tuple(sorted(got)) == sizes, g


@crit(3)
def test_orbit_claims(report):
  claims_ok(report, 3)


# ------------------------------------------------------------------------ 4

@crit(4)
def test_class_groups_and_minimality():
  assert toricvar.class_group(toricvar.model("X24")) == intlin.AbelianInvariants(3, (2,))
  for model, core in (("Y24", "W1A"), ("V6", "W2A"), ("X24", "W3A")):
    X, A = grp(model, core)
    for H in latgroup.all_subgroups(toricvar.weyl(X)):
      if A.is_subgroup_of(H):
        assert toricvar.invariant_class_rank(X, H) == 1, (model, latgroup.identify(H))


@crit(4)
def test_v4_minimality_iff():
  # minimal exactly when the group holds -I or is the type II S4
  X = toricvar.model("V4")
  neg = intlin.scale(intlin.identity(3), -1)
  S = toricvar.group_by_name(X, "W3S")
  got = {}
  for name in ("W3A", "W3A+sigma", "W3S", "W3Sbar", "W3"):
    W = toricvar.group_by_name(X, name)
    got[name] = toricvar.invariant_class_rank(X, W) == 1
    assert got[name] == (neg in W.element_set or W == S), name
  assert got == {"W3A": False, "W3A+sigma": True, "W3S": True, "W3Sbar": False, "W3": True}


@crit(4)
def test_class_group_claims(report):
  claims_ok(report, 4)


# ------------------------------------------------------------------------ 5

@crit(5)
def test_group_theory():
  fams = {i: toricvar.family_groups(i) for i in (1, 2, 3)}
  for a, b in ((1, 2), (1, 3), (2, 3)):
    assert latgroup.conjugator(fams[a][f"W{a}"], fams[b][f"W{b}"]) is None
  for name, i in (("W10", 1), ("W9", 2), ("W11", 3)):
    core = fams[i][f"W{i}A"]
    witness = latgroup.conjugator(toricvar.tahara_group(name), core)
    assert witness is not None
    assert latgroup.q_irreducible(core)
  S3 = latgroup.closure(toricvar.PERMUTATION_MATRICES)
  C2 = latgroup.closure([((0, 1, 0), (1, 0, 0), (0, 0, 1))])
  assert not latgroup.q_irreducible(S3) and not latgroup.q_irreducible(C2)


@crit(5)
def test_group_theory_claims(report):
  claims_ok(report, 5)


# ------------------------------------------------------------------------ 6

@crit(6)
def test_solidity_sweep():
  t0 = time.perf_counter()
  exceptions = set()
  for X in toricvar.catalog():
    if X.rank != 3 or not polyfan.is_terminal_fano(X.fan):
      continue
    for row in solidity.weyl_sweep(X):
      if row.solid:
        assert X.name in SOLID_FIVE and row.has_a4, row
    if X.name not in SOLID_FIVE:
      continue
    for H in latgroup.all_subgroups(toricvar.weyl(X)):
      if solidity.contains_a4_core(X, H) and not toricvar.is_minimal(X, H):
        exceptions.add((X.name, solidity.appendix_column(H)))
  assert exceptions == {("V4", "A4"), ("V4", "S4 I")}
  assert time.perf_counter() - t0 < 60


@crit(6)
def test_solidity_claims(report):
  claims_ok(report, 6)


# ------------------------------------------------------------------------ 7

@crit(7)
def test_condition_b():
  f = {i: toricvar.family_groups(i) for i in (1, 2, 3)}
  assert solidity.superrigidity_condition_b(f[1]["W1"])
  assert solidity.superrigidity_condition_b(f[2]["W2"])
  assert not solidity.superrigidity_condition_b(f[3]["W3A"])
  assert not solidity.superrigidity_condition_b(f[3]["W3Sbar"])
  # condition (a) from the lookup: superrigid rows are exactly V6 and Y24
  table = solidity.appendix_table()["rows"]
  rigid = {n for n in SOLID_FIVE if all(v == "G-birationally superrigid" for v in table[n].values() if v)}
  assert rigid == {"V6", "Y24"}


@crit(7)
def test_condition_b_claims(report):
  claims_ok(report, 7)


# ------------------------------------------------------------------------ 8

@crit(8)
def test_maps():
  m = birmaps.fixtures()
  for name, deg in (("y24-to-v6", 2), ("v6-to-x24", 2), ("x8-to-v6", 1), ("p3-to-x24", 1), ("cremona", 1)):
    assert birmaps.generic_degree(m[name]) == deg, name
  _, W2 = grp("X8", "W2")
  _, V2 = grp("V6", "W2")
  assert birmaps.check_equivariance(m["x8-to-v6"], W2, V2).ok
  _, P = grp("P3", "W3Sbar")
  _, Q = grp("X24", "W3Sbar")
  assert birmaps.check_equivariance(m["p3-to-x24"], P, Q).ok
  psi = m["p3-to-x24"]
  lhs = birmaps.compose(birmaps.inverse(psi), birmaps.compose(m["x24-involution"], psi))
  assert lhs.lattice_map == intlin.scale(intlin.identity(3), -1)
  assert birmaps.verify_identity(lhs, m["cremona"]).equal
  assert birmaps.verify_identity(birmaps.compose(m["x24-involution"], psi), m["p3-to-x24-swapped"]).equal
  for name in ("y24-to-segre", "v4-to-x24", "v4-involution", "p3-to-x24", "x24-involution"):
    rep = birmaps.sample_consistency(m[name], 100, seed=0)
    assert rep.ok and rep.passed == 100, name
  assert birmaps.sample_roundtrip(m["x8-to-v6"], m["v6-to-x8"], 100, seed=0).ok


@crit(8)
def test_map_claims(report):
  claims_ok(report, 8)
  status = {r["id"]: r["status"] for r in report}
  assert status["map-p3-to-x24-printed"] == "DISCREPANCY"
  assert status["segre-printed-entries"] == "DISCREPANCY"


# ------------------------------------------------------------------------ 9

@crit(9)
def test_torus_classification():
  t0 = time.perf_counter()
  total = 0
  for scheme in torsub.SCHEMES:
    for N in range(1, 9):
      res = torsub.verify_classification(torsub.scheme_action(scheme, N), scheme)
      assert res.ok, (scheme, N, res.counterexamples)
      total += res.examined
      for S in torsub.enumerate_invariant(torsub.scheme_action(scheme, N)):
        assert torsub.cubic_core(S)[1] <= 16
  assert total > 1000
  assert time.perf_counter() - t0 < 60


@crit(9)
@pytest.mark.xfail(strict=True, reason="two listed cor72 shapes never occur; see the decision notes")
def test_torus_shapes_realized():
  for scheme in torsub.SCHEMES:
    listed, seen = set(), set()
    for N in range(1, 9):
      for S in torsub.enumerate_invariant(torsub.scheme_action(scheme, N)):
        seen.add(torsub.shape_label(scheme, S))
      for n in range(2, N + 1):
        if N % n == 0:
          for shape in torsub.allowed_shapes(scheme, n):
            listed.add("n/" + ",".join(str(n // x) for x in sorted(shape)))
    assert listed <= seen, (scheme, sorted(listed - seen))


@crit(9)
def test_torus_claims(report):
  claims_ok(report, 9, skip={"torsub-cor72-shapes-realized"})
  ran = {r["id"] for r in report if r["status"] == "PASS"}
  for scheme in torsub.SCHEMES:
    assert {f"torsub-{scheme}-mod{N}" for N in range(1, 9)} <= ran


# ----------------------------------------------------------------------- 10

@crit(10)
def test_determinism(json_reports):
  a, b = json_reports
  assert a.stdout and a.stdout == b.stdout
  assert a.returncode == b.returncode


if __name__ == "__main__":
  sys.exit(pytest.main([__file__, "-q"]))
