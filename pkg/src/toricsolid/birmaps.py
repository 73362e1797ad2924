"""Monomial rational maps between toric models.

A chart presents a model with homogeneous coordinates z_k = t^{P_k}, where
P_k is a character written in the model's M basis, and recovers the torus
by degree-zero monomials t_i = z^{Q_i}. A map given by signed monomials
then restricts to the tori as t -> s * t^A, with A = Q' E P. A is the
cocharacter map in N bases; its transpose is the pullback on characters.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import intlin, toricvar
from .latgroup import FiniteMatrixGroup

Signs = tuple[int, ...]


class MapError(ValueError):
  pass


class NotMonomialError(MapError):
  pass


# ----------------------------------------------------------------- charts

@dataclass(frozen=True)
class Chart:
  name: str
  model: str
  coords: tuple[str, ...]
  gradings: tuple[tuple[int, ...], ...]
  characters: tuple[tuple[int, ...], ...]
  inverse: tuple[tuple[int, ...], ...]
  equations: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

  @property
  def rank(self) -> int:
    return len(self.inverse)

  def point(self, t) -> tuple[Fraction, ...]:
    return tuple(_monomial(t, p) for p in self.characters)

  def torus(self, z) -> tuple[Fraction, ...]:
    return tuple(_monomial(z, q) for q in self.inverse)

  def equations_vanish(self, z) -> bool:
    return all(_monomial(z, a, allow_negative=False) == _monomial(z, b, allow_negative=False)
               for a, b in self.equations)


def _monomial(x, e, allow_negative: bool = True) -> Fraction:
  out = Fraction(1)
  for xi, k in zip(x, e):
    if k < 0 and not allow_negative:
      raise MapError("negative exponent in a polynomial")
    if k:
      out *= Fraction(xi) ** k
  return out


def quadric_binomials(characters) -> tuple:
  """All z_a z_b - z_c z_d with P_a + P_b = P_c + P_d, one per pair of pairs."""
  n = len(characters)
  by_sum: dict = {}
  for a in range(n):
    for b in range(a, n):
      s = tuple(x + y for x, y in zip(characters[a], characters[b]))
      by_sum.setdefault(s, []).append((a, b))
  out = []
  for pairs in by_sum.values():
    for (a, b), (c, d) in combinations(pairs, 2):
      e1 = [0] * n
      e2 = [0] * n
      e1[a] += 1
      e1[b] += 1
      e2[c] += 1
      e2[d] += 1
      out.append((tuple(e1), tuple(e2)))
  return tuple(out)


def _validate_chart(ch: Chart) -> None:
  n = len(ch.coords)
  QP = intlin.matmul(ch.inverse, ch.characters)
  if QP != intlin.identity(ch.rank):
    raise MapError(f"chart {ch.name}: inverse does not recover the torus")
  for q in ch.inverse:
    for g in ch.gradings:
      if sum(a * b for a, b in zip(q, g)):
        raise MapError(f"chart {ch.name}: inverse is not of degree zero")
  for a, b in ch.equations:
    if len(a) != n or len(b) != n:
      raise MapError(f"chart {ch.name}: equation has wrong length")
    for g in ch.gradings:
      if sum(x * y for x, y in zip(a, g)) != sum(x * y for x, y in zip(b, g)):
        raise MapError(f"chart {ch.name}: equation is not homogeneous")
    if intlin.matvec(intlin.transpose(ch.characters), a) != intlin.matvec(intlin.transpose(ch.characters), b):
      raise MapError(f"chart {ch.name}: equation does not vanish on the torus")


# ------------------------------------------------------------------ maps

@dataclass(frozen=True)
class MonomialRationalMap:
  name: str
  source: str
  target: str
  lattice_map: intlin.Matrix
  sign_translation: Signs
  formulas: tuple | None = field(default=None, compare=False)
  source_chart: Chart | None = field(default=None, compare=False)
  target_chart: Chart | None = field(default=None, compare=False)

  @property
  def rank(self) -> int:
    return len(self.lattice_map)

  def apply_torus(self, t) -> tuple[Fraction, ...]:
    return tuple(s * _monomial(t, row) for s, row in zip(self.sign_translation, self.lattice_map))

  def reference_matrix(self):
    """The cocharacter map in reference coordinates of Q^rank."""
    Ns = toricvar.model(self.source).lattice
    Nt = toricvar.model(self.target).lattice
    bs = intlin.transpose(Ns.basis)
    bt = intlin.transpose(Nt.basis)
    return intlin.matmul(intlin.matmul(bt, self.lattice_map), intlin.inverse(bs))


def _sign_power(signs: Signs, row) -> int:
  s = 1
  for si, k in zip(signs, row):
    if si == -1 and k % 2:
      s = -s
  return s


def _check_homogeneous(formulas, src: Chart, tgt: Chart) -> None:
  """Each source grading must act on the outputs through the target gradings."""
  for g in src.gradings:
    degs = [sum(a * b for a, b in zip(e, g)) for _, e in formulas]
    # degs must be a rational combination of the target gradings
    if intlin.solve(intlin.transpose(tgt.gradings), degs) is None:
      raise MapError("formulas are not homogeneous for the chart gradings")


def from_homogeneous(name: str, formulas, source_chart: Chart, target_chart: Chart) -> MonomialRationalMap:
  """Factor a signed monomial map into (lattice map, sign translation).

  Raises:
    NotMonomialError: an output is not a single monomial with coefficient +1 or -1.
  """
  parsed = []
  for item in formulas:
    if not isinstance(item, (list, tuple)) or len(item) != 2 or isinstance(item[1][0], (list, tuple)):
      raise NotMonomialError("not a monomial map")
    c, e = item
    if c not in (1, -1):
      raise MapError(f"unsupported coefficient {c}")
    if len(e) != len(source_chart.coords) or any(k < 0 for k in e):
      raise MapError("bad exponent vector")
    parsed.append((c, tuple(e)))
  if len(parsed) != len(target_chart.coords):
    raise MapError("number of outputs differs from the target coordinates")
  _check_homogeneous(parsed, source_chart, target_chart)
  E = tuple(e for _, e in parsed)
  s_out = tuple(c for c, _ in parsed)
  A = intlin.matmul(intlin.matmul(target_chart.inverse, E), source_chart.characters)
  signs = tuple(_sign_power(s_out, q) for q in target_chart.inverse)
  return MonomialRationalMap(name, source_chart.model, target_chart.model, intlin.to_int(A), signs,
                             tuple(parsed), source_chart, target_chart)


def identity_map(model_name: str, rank: int = 3) -> MonomialRationalMap:
  return MonomialRationalMap(f"id_{model_name}", model_name, model_name, intlin.identity(rank), (1,) * rank)


def compose(f: MonomialRationalMap, g: MonomialRationalMap) -> MonomialRationalMap:
  """f o g: apply g first, so g's target must be f's source."""
  if g.target != f.source:
    raise MapError(f"cannot compose: {g.name} lands in {g.target}, {f.name} starts at {f.source}")
  A = intlin.matmul(f.lattice_map, g.lattice_map)
  signs = tuple(sf * _sign_power(g.sign_translation, row) for sf, row in zip(f.sign_translation, f.lattice_map))
  return MonomialRationalMap(f"{f.name}o{g.name}", g.source, f.target, A, signs)


def inverse(f: MonomialRationalMap) -> MonomialRationalMap:
  """Inverse of a birational map on tori."""
  if generic_degree(f) != 1:
    raise MapError(f"{f.name} is not birational")
  Ai = intlin.int_inverse(f.lattice_map)
  signs = tuple(_sign_power(f.sign_translation, row) for row in Ai)
  return MonomialRationalMap(f"{f.name}^-1", f.target, f.source, Ai, signs)


def generic_degree(f: MonomialRationalMap) -> int:
  """Index of the image of N_src in N_tgt."""
  d = intlin.det(f.lattice_map)
  if d == 0:
    raise MapError("not generically finite")
  return abs(int(d))


# ---------------------------------------------------------- equivariance

@dataclass
class EquivarianceResult:
  ok: bool
  bijection: dict = field(default_factory=dict)
  detail: str = ""


def _cochar(g) -> intlin.Matrix:
  return intlin.transpose(intlin.int_inverse(g))


def check_equivariance(f: MonomialRationalMap, W_src: FiniteMatrixGroup,
                       W_tgt: FiniteMatrixGroup) -> EquivarianceResult:
  """Conjugation by the lattice map must carry W_src onto W_tgt.

  For g in W_src the induced element h satisfies A g^v = h^v A, where
  g^v = (g^-1)^T is the action on cocharacters, and the translation must
  be fixed by h.
  """
  Xs, Xt = toricvar.model(f.source), toricvar.model(f.target)
  Ws = W_src.in_basis(Xs.character_lattice)
  Wt = W_tgt.in_basis(Xt.character_lattice)
  A = f.lattice_map
  Ai = intlin.inverse(A)
  target = Wt.element_set
  bij = {}
  for g in Ws.elements:
    hv = intlin.matmul(intlin.matmul(A, _cochar(g)), Ai)
    if any(x.denominator != 1 for r in hv for x in map(Fraction, r)):
      return EquivarianceResult(False, {}, f"{g} does not descend along {f.name}")
    hv = intlin.to_int(hv)
    h = _cochar(hv)
    if h not in target:
      return EquivarianceResult(False, {}, f"{g} maps to {h}, outside the target group")
    if tuple(_sign_power(f.sign_translation, row) for row in hv) != f.sign_translation:
      return EquivarianceResult(False, {}, f"translation of {f.name} is not fixed by {h}")
    bij[g] = h
  if set(bij.values()) != target:
    return EquivarianceResult(False, bij, "image is a proper subset of the target group")
  return EquivarianceResult(True, bij, f"{Ws.order} elements matched")


# -------------------------------------------------------------- identity

@dataclass
class IdentityReport:
  equal: bool
  detail: str


def verify_identity(lhs: MonomialRationalMap, rhs: MonomialRationalMap) -> IdentityReport:
  if (lhs.source, lhs.target) != (rhs.source, rhs.target):
    return IdentityReport(False, f"models differ: {lhs.source}->{lhs.target} vs {rhs.source}->{rhs.target}")
  if lhs.lattice_map != rhs.lattice_map:
    return IdentityReport(False, f"lattice maps differ: {lhs.lattice_map} vs {rhs.lattice_map}")
  if lhs.sign_translation != rhs.sign_translation:
    return IdentityReport(False, f"translations differ: {lhs.sign_translation} vs {rhs.sign_translation}")
  return IdentityReport(True, "lattice maps and translations agree")


# -------------------------------------------------------------- sampling

@dataclass
class SampleReport:
  name: str
  trials: int
  seed: int
  passed: int = 0
  resampled: int = 0
  failures: list = field(default_factory=list)

  @property
  def ok(self) -> bool:
    return self.passed == self.trials and not self.failures


def _random_nonzero(rng: random.Random) -> Fraction:
  while True:
    q = Fraction(rng.randint(-30, 30), rng.randint(1, 17))
    if q:
      return q


def evaluate(f: MonomialRationalMap, z) -> tuple[Fraction, ...]:
  if f.formulas is None:
    raise MapError(f"{f.name} carries no formulas")
  return tuple(c * _monomial(z, e, allow_negative=False) for c, e in f.formulas)


def _block_zero(ch: Chart, z) -> bool:
  """True when some grading block of the target vanishes entirely."""
  for g in ch.gradings:
    if all(zi == 0 for zi, w in zip(z, g) if w):
      return True
  return False


def sample_consistency(f: MonomialRationalMap, trials: int = 100, seed: int = 0) -> SampleReport:
  """Evaluate the formulas at random torus points, exactly over Q."""
  rep = SampleReport(f.name, trials, seed)
  rng = random.Random(seed)
  src, tgt = f.source_chart, f.target_chart
  if src is None or tgt is None:
    raise MapError(f"{f.name} carries no charts")
  while rep.passed + len(rep.failures) < trials:
    t = tuple(_random_nonzero(rng) for _ in range(src.rank))
    z = src.point(t)
    if not src.equations_vanish(z):
      rep.failures.append(("source equations", t))
      continue
    w = evaluate(f, z)
    if _block_zero(tgt, w) or any(x == 0 for x in w):
      rep.resampled += 1
      continue
    if not tgt.equations_vanish(w):
      rep.failures.append(("target equations", t))
      continue
    if tgt.torus(w) != f.apply_torus(t):
      rep.failures.append(("torus prediction", t))
      continue
    rep.passed += 1
  return rep


def sample_roundtrip(f: MonomialRationalMap, g: MonomialRationalMap, trials: int = 100,
                     seed: int = 0) -> SampleReport:
  """g(f(x)) recovers x at random torus points of f's source."""
  rep = SampleReport(f"{g.name}o{f.name}", trials, seed)
  rng = random.Random(seed)
  src = f.source_chart
  while rep.passed + len(rep.failures) < trials:
    t = tuple(_random_nonzero(rng) for _ in range(src.rank))
    w = evaluate(g, evaluate(f, src.point(t)))
    if any(x == 0 for x in w):
      rep.resampled += 1
      continue
    if g.target_chart.torus(w) != t:
      rep.failures.append(("round trip", t))
      continue
    rep.passed += 1
  return rep


def sample_commutes(left: list, right: list, trials: int = 100, seed: int = 0) -> SampleReport:
  """Two chains of formula maps (applied left to right) agree on torus points."""
  name = "o".join(m.name for m in reversed(left)) + " = " + "o".join(m.name for m in reversed(right))
  rep = SampleReport(name, trials, seed)
  rng = random.Random(seed)
  src = left[0].source_chart
  while rep.passed + len(rep.failures) < trials:
    t = tuple(_random_nonzero(rng) for _ in range(src.rank))
    ends = []
    for chain in (left, right):
      z = src.point(t)
      for m in chain:
        z = evaluate(m, z)
      ends.append(chain[-1].target_chart.torus(z) if all(z) else None)
    if ends[0] is None or ends[1] is None:
      rep.resampled += 1
      continue
    if ends[0] != ends[1]:
      rep.failures.append(("mismatch", t))
      continue
    rep.passed += 1
  return rep


# --------------------------------------------------------------- fixtures

def _chart_from_json(name: str, rec: dict) -> Chart:
  if rec["equations"] == "model":
    eqs = toricvar.model(rec["model"]).defining_equations["binomials"]
  elif rec["equations"] == "quadrics":
    eqs = quadric_binomials(rec["characters"])
  else:
    eqs = rec["equations"]
  ch = Chart(name, rec["model"], tuple(rec["coords"]), intlin.as_matrix(rec["gradings"]),
             intlin.as_matrix(rec["characters"]), intlin.as_matrix(rec["inverse"]),
             tuple((tuple(a), tuple(b)) for a, b in eqs))
  _validate_chart(ch)
  return ch


@lru_cache(maxsize=None)
def _fixtures(path: str):
  raw = toricvar.load_json("maps.json")
  charts = {k: _chart_from_json(k, v) for k, v in raw["charts"].items()}
  maps = {}
  meta = {}
  for rec in raw["maps"]:
    f = from_homogeneous(rec["id"], rec["formulas"], charts[rec["source_chart"]], charts[rec["target_chart"]])
    maps[rec["id"]] = f
    meta[rec["id"]] = rec
  return charts, maps, meta, raw


def charts() -> dict[str, Chart]:
  return _fixtures(str(toricvar.data_dir()))[0]


def fixtures() -> dict[str, MonomialRationalMap]:
  return _fixtures(str(toricvar.data_dir()))[1]


def fixture_meta(map_id: str) -> dict:
  return _fixtures(str(toricvar.data_dir()))[2][map_id]


def fixture_document() -> dict:
  return _fixtures(str(toricvar.data_dir()))[3]


def get(map_id: str) -> MonomialRationalMap:
  return fixtures()[map_id]


def equivariance_groups(map_id: str) -> tuple[FiniteMatrixGroup, FiniteMatrixGroup]:
  f = get(map_id)
  gs, gt = fixture_meta(map_id)["equivariance"]
  return (toricvar.group_by_name(toricvar.model(f.source), gs),
          toricvar.group_by_name(toricvar.model(f.target), gt))
