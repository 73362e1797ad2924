import subprocess
import sys
from collections import defaultdict

import pytest

from toricsolid import intlin, latgroup

CRITERIA = {
  1: "Weyl groups",
  2: "strata censuses",
  3: "orbit structures",
  4: "class groups and minimality",
  5: "group theory",
  6: "solidity sweep",
  7: "superrigidity condition (b)",
  8: "monomial maps",
  9: "torus subgroups",
  10: "determinism",
}

_outcomes = defaultdict(list)


def pytest_configure(config):
  config.addinivalue_line("markers", "criterion(n): acceptance criterion the test belongs to")


def pytest_runtest_makereport(item, call):
  mark = item.get_closest_marker("criterion")
  if mark is None or call.when != "call":
    return
  # an expected failure counts against its criterion
  passed = call.excinfo is None and not hasattr(item, "wasxfail")
  if item.get_closest_marker("xfail") is not None:
    passed = False
  _outcomes[mark.args[0]].append((item.name, passed))


def pytest_terminal_summary(terminalreporter):
  if not _outcomes:
    return
  terminalreporter.section("acceptance criteria")
  for n, title in CRITERIA.items():
    if n not in _outcomes:
      continue
    runs = _outcomes[n]
    ok = all(p for _, p in runs)
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {title}"
    if not ok:
      line += " (" + ", ".join(name for name, p in runs if not p) + ")"
    terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def json_reports():
  """Two consecutive `verify-paper --format json` runs in fresh interpreters."""
  cmd = [sys.executable, "-m", "toricsolid", "verify-paper", "--format", "json"]
  return [subprocess.run(cmd, capture_output=True, text=True, check=False) for _ in range(2)]


def signed_permutations(n):
  """All n x n signed permutation matrices, built directly."""
  from itertools import permutations, product
  out = []
  for perm in permutations(range(n)):
    for signs in product((1, -1), repeat=n):
      out.append(tuple(tuple(signs[i] if j == perm[i] else 0 for j in range(n)) for i in range(n)))
  return sorted(out)


def unimodular(ops, n=3):
  """Product of elementary matrices described by (i, j, c) with i != j."""
  X = intlin.identity(n)
  for i, j, c in ops:
    if i == j:
      continue
    E = [list(r) for r in intlin.identity(n)]
    E[i][j] = c
    X = intlin.matmul(X, intlin.as_matrix(E))
  return X


def brute_closed(G: latgroup.FiniteMatrixGroup) -> bool:
  s = G.element_set
  return all(intlin.matmul(a, b) in s for a in G.elements for b in G.elements) and \
    all(intlin.int_inverse(a) in s for a in G.elements)
