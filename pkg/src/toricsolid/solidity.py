"""Solidity verdicts, the normalizer test for superrigidity, and the
lookup of equivariant birational outcomes for the five solid threefolds."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import latgroup, polyfan, toricvar
from .latgroup import FiniteMatrixGroup
from .toricvar import ToricModel

SOLID_FIVE = ("V6", "V4", "X24", "Y24", "P3")
TABLE_TYPES = ("S4xC2", "S4", "A4xC2", "A4")


class SolidityError(ValueError):
  pass


@dataclass
class SolidityVerdict:
  variety: str
  group: str
  minimal: bool
  irreducible: bool
  solid: bool
  superrigid_condition_b: bool | None = None
  appendix_outcome: str | None = None


def is_g_solid(X: ToricModel, W: FiniteMatrixGroup, group_name: str | None = None) -> SolidityVerdict:
  if not polyfan.is_terminal_fano(X.fan):
    raise SolidityError(f"{X.name} is not a terminal Fano model")
  Wm = toricvar.on_model(X, W)
  minimal = toricvar.is_minimal(X, Wm)
  irreducible = latgroup.q_irreducible(Wm)
  cond_b = superrigidity_condition_b(Wm) if irreducible else None
  outcome = None
  if X.name in SOLID_FIVE and contains_a4_core(X, Wm):
    outcome = appendix_row(X, Wm).label
  return SolidityVerdict(X.name, group_name or latgroup.identify(Wm), minimal, irreducible,
                         minimal and irreducible, cond_b, outcome)


def superrigidity_condition_b(W: FiniteMatrixGroup) -> bool:
  """True iff W is its own normalizer in GL(M)."""
  if not latgroup.q_irreducible(W):
    raise SolidityError("group is reducible; its normalizer is infinite")
  return latgroup.normalizer(W) == W


# ------------------------------------------------------------- lookup

_cores: dict[str, FiniteMatrixGroup] = {}


def a4_core(X: ToricModel) -> FiniteMatrixGroup:
  if X.family is None:
    raise SolidityError(f"{X.name} has no A4 core")
  if X.name not in _cores:
    _cores[X.name] = toricvar.family_groups(X.family)[f"W{X.family}A"].in_basis(X.character_lattice)
  return _cores[X.name]


def contains_a4_core(X: ToricModel, W: FiniteMatrixGroup) -> bool:
  return X.family is not None and a4_core(X).is_subgroup_of(W)


@dataclass
class AppendixOutcome:
  variety: str
  column: str
  label: str | None
  checks: list = field(default_factory=list)  # (description, passed)

  @property
  def ok(self) -> bool:
    return self.label is not None and all(p for _, p in self.checks)


def appendix_table() -> dict:
  return toricvar.load_json("appendix.json")


def appendix_column(W: FiniteMatrixGroup) -> str:
  t = latgroup.identify(W)
  if t == "S4":
    return "S4 " + toricvar.s4_type(W)
  return t


def _transitive(X: ToricModel, W: FiniteMatrixGroup, on: str) -> bool:
  dec = toricvar.orbits(X, W)
  if on == "divisors":
    return len(dec.orbits[X.rank - 1]) == 1
  sizes = toricvar.orbit_sizes_by_type(X, W)
  singular = [s for k, v in sizes.items() if k != "smooth" for s in v]
  return len(singular) == 1


def appendix_row(X: ToricModel, W: FiniteMatrixGroup) -> AppendixOutcome:
  if X.name not in SOLID_FIVE:
    raise SolidityError(f"{X.name} is outside the table")
  Wm = toricvar.on_model(X, W)
  if latgroup.identify(Wm) not in TABLE_TYPES or not contains_a4_core(X, Wm):
    raise SolidityError("group does not contain the A4 core")
  table = appendix_table()
  col = appendix_column(Wm)
  label = table["rows"][X.name].get(col)
  out = AppendixOutcome(X.name, col, label)
  if label is None:
    out.checks.append(("table has an entry for this cell", False))
    return out
  minimal = toricvar.is_minimal(X, Wm)
  out.checks.append(("minimality agrees with the cell", minimal == (label != "not G-minimal")))
  trans = table.get("transitivity", {}).get(X.name)
  if trans and col in trans:
    out.checks.append((f"transitive on {trans['on']}", _transitive(X, Wm, trans["on"]) == trans[col]))
  if not out.ok:
    failed = "; ".join(d for d, p in out.checks if not p)
    out.label = f"precondition failed: {failed}"
  return out


def appendix_cells_unrealizable() -> list[tuple[str, str]]:
  """Filled cells whose column type does not occur among groups containing the core."""
  table = appendix_table()
  out = []
  for name in SOLID_FIVE:
    X = toricvar.model(name)
    W = toricvar.weyl(X)
    cols = {appendix_column(H) for H in latgroup.all_subgroups(W) if contains_a4_core(X, H)}
    for col, label in table["rows"][name].items():
      if label is not None and col not in cols:
        out.append((name, col))
  return out


# -------------------------------------------------------------- sweeps

@dataclass(frozen=True)
class SweepRow:
  variety: str
  group_type: str
  order: int
  minimal: bool
  irreducible: bool
  solid: bool
  has_a4: bool


def weyl_sweep(X: ToricModel) -> list[SweepRow]:
  """Verdicts for every subgroup of weyl(X)."""
  if not polyfan.is_terminal_fano(X.fan):
    raise SolidityError(f"{X.name} is not a terminal Fano model")
  subs = latgroup.all_subgroups(toricvar.weyl(X))
  a4s = [K for K in subs if K.order == 12 and latgroup.identify(K) == "A4"]
  rows = []
  for H in subs:
    minimal = toricvar.is_minimal(X, H)
    irr = latgroup.q_irreducible(H)
    has_a4 = any(K.is_subgroup_of(H) for K in a4s)
    rows.append(SweepRow(X.name, latgroup.identify(H), H.order, minimal, irr, minimal and irr, has_a4))
  return rows
