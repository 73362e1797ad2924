"""Checks behind the verify-paper report.

Each check returns (status, detail). The manifest (data/manifest.json)
fixes the claim ids, their order and their citations; CHECKS maps the
manifest's ``check`` key to a function taking the run configuration.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

from . import birmaps, intlin, latgroup, polyfan, solidity, torsub, toricvar

PASS, FAIL, SKIP, DISCREPANCY = "PASS", "FAIL", "SKIP", "DISCREPANCY"
STATUSES = (PASS, FAIL, SKIP, DISCREPANCY)


@dataclass
class Config:
  samples: int = 100
  seed: int = 0
  max_modulus: int = 8
  guard: int = torsub.DEFAULT_GUARD
  timing: bool = False


@dataclass
class ClaimReport:
  id: str
  status: str
  detail: str
  millis: int = 0

  def as_dict(self) -> dict:
    return {"id": self.id, "status": self.status, "detail": self.detail, "millis": self.millis}


def _ok(cond: bool, detail: str) -> tuple[str, str]:
  return (PASS if cond else FAIL), detail


def _group(X, name):
  return toricvar.group_by_name(X, name)


# ---------------------------------------------------------- weyl groups

def check_weyl(cfg, model, order, label):
  W = toricvar.weyl(toricvar.model(model))
  got = (W.order, latgroup.identify(W))
  return _ok(got == (order, label), f"order {got[0]}, type {got[1]}")


def check_weyl_identification(cfg):
  p3 = toricvar.weyl(toricvar.model("P3"))
  v2 = toricvar.weyl(toricvar.model("V2"))
  a = p3 == toricvar.family_groups(3)["W3Sbar"].in_basis(p3.lattice)
  b = v2 == toricvar.family_groups(2)["W2Sbar"].in_basis(v2.lattice)
  return _ok(a and b, f"weyl(P3) = W3Sbar: {a}; weyl(V2) = W2Sbar: {b}")


def check_grdb_ids(cfg, ids):
  got = {X.grdb_id for X in toricvar.catalog()}
  missing = sorted(set(ids) - got)
  return _ok(not missing, f"catalog grdb ids {sorted(i for i in got if i)}; missing {missing}")


def check_not_constructed(cfg):
  ids = [r["grdb_id"] for r in toricvar.not_constructed()]
  return SKIP, f"no polytope data for grdb {ids}"


# -------------------------------------------------------------- strata

def check_census(cfg, model):
  X = toricvar.model(model)
  got = toricvar.strata(X)
  want = X.expected_census
  term = polyfan.is_terminal_fano(X.fan)
  ok = all(got.get(k) == v for k, v in want.items()) and term == X.terminal_expected
  return _ok(ok, f"{got}; terminal {term}")


def check_v4_singular_count(cfg):
  got = toricvar.strata(toricvar.model("V4"))["point_types"]
  if got == {"ODP": 6}:
    return DISCREPANCY, "computed 6 singular points (all ODP); the text elsewhere says eight"
  return FAIL, f"unexpected point types {got}"


def check_printed_tetrahedron(cfg):
  X = toricvar.model("V6")
  P = polyfan.LatticePolytope(X.lattice, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)])
  W2 = toricvar.family_groups(2)["W2"]
  auts = polyfan.automorphisms(P).contragredient(X.character_lattice)
  invariant = W2.in_basis(X.character_lattice).is_subgroup_of(auts)
  if invariant:
    return FAIL, "printed tetrahedron is invariant after all"
  return DISCREPANCY, (f"printed tetrahedron has symmetry group of order {auts.order}, "
                       f"not invariant under the order-{W2.order} group; octahedron used for V6")


def check_printed_cube(cfg):
  X = toricvar.model("X24")
  verts = [(a, b, c) for a in (1, -1) for b in (1, -1) for c in (1, -1)]
  P = polyfan.LatticePolytope(X.lattice, verts)
  F = polyfan.face_fan(P)
  got = (len(F.rays), len(F.faces_by_dim[2]), len(F.maximal_cones))
  if got == (8, 12, 6):
    return DISCREPANCY, "cube (+-1)^3 in the X24 lattice gives 8/12/6, the census of V4, not 6/12/8"
  return FAIL, f"cube census {got}"


# -------------------------------------------------------------- orbits

def _sizes(X, name, dim, kind=None):
  W = _group(X, name)
  if kind is None:
    return toricvar.orbits(X, W).sizes(dim)
  return toricvar.orbit_sizes_by_type(X, W).get(kind, ())


def check_orbits(cfg, model, groups, dim, kind, sizes, same=False):
  X = toricvar.model(model)
  got = {g: _sizes(X, g, dim, kind) for g in groups}
  ok = all(tuple(v) == tuple(sizes) for v in got.values())
  if same and ok:
    parts = [frozenset(toricvar.orbits(X, _group(X, g)).orbits[dim]) for g in groups]
    ok = all(p == parts[0] for p in parts)
  what = kind or {0: "points", 1: "curves", 2: "surfaces"}[dim]
  return _ok(ok, "; ".join(f"{g}: {what} {list(v)}" for g, v in got.items()))


def check_v4_v6_correspondence(cfg):
  V4, V6 = toricvar.model("V4"), toricvar.model("V6")
  rows = []
  ok = True
  for name in ("W3A", "W3A+sigma", "W3S", "W3Sbar", "W3"):
    W = toricvar.family_groups(3)[name]
    ref = [V4.character_lattice.to_reference(g) for g in W.in_basis(V4.character_lattice).elements]
    on_v6 = latgroup.FiniteMatrixGroup(V6.character_lattice, (),
                                       tuple(sorted(V6.character_lattice.from_reference(a) for a in ref)))
    a = len(toricvar.orbits(V4, _group(V4, name)).orbits[2])
    b = len(toricvar.orbits(V6, on_v6).orbits[0])
    ok &= a == b
    rows.append(f"{name}: {a}/{b}")
  return _ok(ok, "surface orbits on V4 / point orbits on V6: " + ", ".join(rows))


# ---------------------------------------------------------- class groups

def check_class_group(cfg, model, free, torsion):
  got = toricvar.class_group(toricvar.model(model))
  return _ok((got.free_rank, list(got.torsion)) == (free, torsion), f"Cl = {got}")


def _above_core(X):
  core = solidity.a4_core(X)
  return [H for H in latgroup.all_subgroups(toricvar.weyl(X)) if core.is_subgroup_of(H)]


def check_minimal_above_core(cfg, model):
  X = toricvar.model(model)
  ranks = sorted({toricvar.invariant_class_rank(X, H) for H in _above_core(X)})
  return _ok(ranks == [1], f"invariant class ranks over groups containing the A4 core: {ranks}")


def check_v4_criterion(cfg):
  X = toricvar.model("V4")
  sigma = intlin.scale(intlin.identity(3), -1)
  ws = _group(X, "W3S")
  rows, ok = [], True
  for name in ("W3A", "W3A+sigma", "W3S", "W3Sbar", "W3"):
    W = _group(X, name)
    r = toricvar.invariant_class_rank(X, W)
    expect = sigma in W.element_set or W == ws
    ok &= (r == 1) == expect
    rows.append(f"{name}: rank {r}")
  return _ok(ok, ", ".join(rows))


# ---------------------------------------------------------- group theory

def check_nonconjugate(cfg):
  F = {i: toricvar.family_groups(i)[f"W{i}"] for i in (1, 2, 3)}
  res = {(i, j): latgroup.conjugator(F[i], F[j]) for i, j in ((1, 2), (1, 3), (2, 3))}
  return _ok(all(v is None for v in res.values()), "conjugators: " + ", ".join(
      f"W{i}~W{j}: {'none' if v is None else v}" for (i, j), v in res.items()))


def check_tahara(cfg, name):
  T = toricvar.tahara_group(name)
  i = toricvar.TAHARA[name][1]
  core = toricvar.family_groups(i)[f"W{i}A"]
  if T.element_set == core.element_set:
    return PASS, f"{name} equals W{i}A as a set of matrices"
  x = latgroup.conjugator(T, core)
  return _ok(x is not None, f"{name} conjugate to W{i}A by {x}")


def check_core_irreducible(cfg):
  res = {i: latgroup.q_irreducible(toricvar.family_groups(i)[f"W{i}A"]) for i in (1, 2, 3)}
  return _ok(all(res.values()), f"irreducible: {res}")


def check_lower_rows_reducible(cfg):
  res = {n: latgroup.q_irreducible(toricvar.weyl(toricvar.model(n))) for n in ("P1112", "P1123")}
  return _ok(not any(res.values()), f"irreducible: {res}")


def check_core_normalizer(cfg):
  res = {}
  for i in (1, 2, 3):
    fam = toricvar.family_groups(i)
    res[i] = latgroup.normalizer(fam[f"W{i}A"]) == fam[f"W{i}"]
  return _ok(all(res.values()), f"normalizer of W_iA equals W_i: {res}")


# ------------------------------------------------------------- solidity

def check_sweep(cfg):
  bad = []
  exceptions = set()
  count = 0
  for X in toricvar.catalog():
    if X.rank != 3 or not polyfan.is_terminal_fano(X.fan):
      continue
    core = solidity.a4_core(X) if X.family else None
    for H, row in zip(latgroup.all_subgroups(toricvar.weyl(X)), solidity.weyl_sweep(X)):
      count += 1
      if row.solid and (X.name not in solidity.SOLID_FIVE or not row.has_a4):
        bad.append((X.name, row.group_type))
      if X.name in solidity.SOLID_FIVE and core.is_subgroup_of(H) and not row.minimal:
        exceptions.add((X.name, solidity.appendix_column(H)))
  want = {("V4", "A4"), ("V4", "S4 I")}
  ok = not bad and exceptions == want
  return _ok(ok, f"{count} subgroups; stray solid verdicts {bad}; non-minimal above the core {sorted(exceptions)}")


def check_solid_example(cfg, model, group, expect):
  X = toricvar.model(model)
  v = solidity.is_g_solid(X, _group(X, group), group)
  return _ok(v.solid == expect, f"minimal {v.minimal}, irreducible {v.irreducible}, solid {v.solid}")


def check_condition_b(cfg):
  want = {"W1": True, "W2": True, "W3": True, "W3A": False, "W3Sbar": False}
  got = {k: solidity.superrigidity_condition_b(toricvar.family_groups(int(k[1]))[k]) for k in want}
  return _ok(got == want, f"self-normalizing: {got}; condition (a) taken from the lookup table")


def check_appendix(cfg):
  bad, n = [], 0
  for name in solidity.SOLID_FIVE:
    X = toricvar.model(name)
    for H in _above_core(X):
      out = solidity.appendix_row(X, H)
      n += 1
      if not out.ok:
        bad.append((name, out.column, out.label))
  return _ok(not bad, f"{n} (model, group) cells checked; failures {bad}")


def check_appendix_example(cfg, model, group, label):
  X = toricvar.model(model)
  W = _group(X, group) if group != "S4 I" else next(
      H for H in _above_core(X) if solidity.appendix_column(H) == "S4 I")
  out = solidity.appendix_row(X, W)
  return _ok(out.label == label, f"{out.column}: {out.label}")


def check_appendix_unrealizable(cfg):
  cells = solidity.appendix_cells_unrealizable()
  if cells == [("P3", "A4xC2")]:
    return DISCREPANCY, "cell P3 / A4xC2 is filled but weyl(P3) = S4 has no A4xC2 subgroup"
  return _ok(not cells, f"unrealizable filled cells {cells}")


# ----------------------------------------------------------------- maps

def check_map(cfg, map_id):
  f = birmaps.get(map_id)
  meta = birmaps.fixture_meta(map_id)
  parts, ok = [], True
  if "expected_degree" in meta:
    d = birmaps.generic_degree(f)
    ok &= d == meta["expected_degree"]
    parts.append(f"degree {d}")
  src, tgt = birmaps.equivariance_groups(map_id)
  eq = birmaps.check_equivariance(f, src, tgt)
  parts.append(f"equivariant {eq.ok}")
  rep = birmaps.sample_consistency(f, cfg.samples, cfg.seed)
  parts.append(f"{rep.passed}/{rep.trials} samples")
  expect_fail = meta.get("expect_failure")
  if expect_fail:
    failed = (not eq.ok) if expect_fail == "equivariance" else (not rep.ok)
    if failed:
      return DISCREPANCY, f"printed formula fails the {expect_fail} check; " + ", ".join(parts)
    return FAIL, "printed formula unexpectedly passes; " + ", ".join(parts)
  ok &= eq.ok and rep.ok
  return _ok(ok, ", ".join(parts))


def _chain(ids):
  maps = [birmaps.get(k) for k in ids]
  f = maps[0]
  for g in maps[1:]:
    f = birmaps.compose(g, f)
  return maps, f


def check_identity(cfg, left, right):
  """Two chains of maps, each applied left to right, agree."""
  lm, lf = _chain(left)
  rm, rf = _chain(right)
  rep = birmaps.verify_identity(lf, rf)
  sample = birmaps.sample_commutes(lm, rm, cfg.samples, cfg.seed)
  return _ok(rep.equal and sample.ok, f"{rep.detail}; {sample.passed}/{sample.trials} samples agree")


def check_lattice_map(cfg, map_id, matrix):
  f = birmaps.get(map_id)
  want = intlin.as_matrix(matrix)
  ok = f.lattice_map == want and set(f.sign_translation) == {1}
  return _ok(ok, f"lattice map {f.lattice_map}, signs {f.sign_translation}")


def check_roundtrip(cfg, a, b):
  rep = birmaps.sample_roundtrip(birmaps.get(a), birmaps.get(b), cfg.samples, cfg.seed)
  return _ok(rep.ok, f"{rep.passed}/{rep.trials} samples return to the start")


def check_segre_printed(cfg):
  printed = birmaps.fixture_document()["segre_printed"]
  used = birmaps.fixture_document()["charts"]["V6:segre"]["labels"]
  dup = len(printed) - len(set(printed))
  if len(printed) != 8 and len(set(printed)) == 8:
    return DISCREPANCY, (f"printed Segre map has {len(printed)} entries for P^7 with {dup} repeated; "
                         f"the 8 distinct monomials match the chart: {set(printed) == set(used)}")
  return FAIL, f"printed entries {printed}"


# -------------------------------------------------------- torus subgroups

def check_torsub(cfg, scheme, modulus):
  if modulus > cfg.max_modulus:
    return SKIP, f"modulus {modulus} above the bound {cfg.max_modulus}"
  r = torsub.verify_classification(torsub.scheme_action(scheme, modulus), scheme, cfg.guard)
  return _ok(r.ok, f"{r.subgroups} invariant of {r.examined} subgroups, {len(r.counterexamples)} counterexamples; "
                   f"shapes {dict(sorted(r.shapes.items()))}")


def _scheme_subgroups(scheme, bound, guard):
  for N in range(1, bound + 1):
    yield from torsub.enumerate_invariant(torsub.scheme_action(scheme, N), guard)


def check_shapes_realized(cfg, scheme, needs):
  if cfg.max_modulus < needs:
    return SKIP, f"needs modulus {needs}, bound is {cfg.max_modulus}"
  n = 8  # a multiple of 4 lists every shape of the scheme
  listed = {"n/" + ",".join(str(n // x) for x in sh) for sh in torsub.allowed_shapes(scheme, n)}
  seen = {torsub.shape_label(scheme, S) for S in _scheme_subgroups(scheme, cfg.max_modulus, cfg.guard)}
  missing = sorted(listed - seen)
  detail = f"realized {sorted(listed & seen)}; never realized {missing} at any N <= {cfg.max_modulus}"
  return _ok(not missing, detail)


def check_cubic_core(cfg):
  worst = 0
  for scheme in torsub.SCHEMES:
    for S in _scheme_subgroups(scheme, cfg.max_modulus, cfg.guard):
      if S.rank == 3:
        worst = max(worst, torsub.cubic_core(S)[1], torsub.envelope_index(S))
  return _ok(worst <= 16, f"largest index over N <= {cfg.max_modulus}: {worst}")


def check_index_notation(cfg):
  return DISCREPANCY, "index bound is printed with the larger group second; computed as [S : T[m]] and [T[n] : S]"


# ------------------------------------------------------------- registry

CHECKS = {name[6:]: fn for name, fn in globals().items() if name.startswith("check_") and callable(fn)}


def manifest() -> list[dict]:
  return toricvar.load_json("manifest.json")["claims"]


def run_claim(entry: dict, cfg: Config) -> ClaimReport:
  start = time.perf_counter()
  try:
    fn = CHECKS[entry["check"]]
    status, detail = fn(cfg, **entry.get("args", {}))
  except (OSError, KeyError, ValueError, json.JSONDecodeError) as exc:
    status, detail = FAIL, f"{type(exc).__name__}: {exc}"
  millis = int((time.perf_counter() - start) * 1000) if cfg.timing else 0
  return ClaimReport(entry["id"], status, detail, millis)


def verify_paper(cfg: Config | None = None, only=None) -> list[ClaimReport]:
  cfg = cfg or Config()
  return [run_claim(e, cfg) for e in manifest() if only is None or only(e)]
