"""Command-line front end.

Exit status: 0 when nothing failed, 1 when some check failed, 2 for an
unknown variety, group or map id, 3 when a torus enumeration would exceed
the modulus guard.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import birmaps, claims, latgroup, polyfan, solidity, torsub, toricvar

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
  pass


def _yn(b) -> str:
  return "n/a" if b is None else ("yes" if b else "no")


def _model(name):
  try:
    return toricvar.model(name)
  except KeyError:
    raise UsageError(f"unknown variety {name!r}; try 'catalog list'") from None


def _group(X, name):
  try:
    return toricvar.group_by_name(X, name)
  except KeyError:
    known = ", ".join(sorted(toricvar.named_groups(X)))
    raise UsageError(f"unknown group {name!r} for {X.name}; known: {known}") from None


# ------------------------------------------------------------ commands

def cmd_catalog(args, out):
  out.write(f"{'name':<7}{'grdb':>6}  {'lattice':<8}{'weyl':<8}{'terminal':<10}description\n")
  for X in toricvar.catalog():
    grdb = "-" if X.grdb_id is None else str(X.grdb_id)
    out.write(f"{X.name:<7}{grdb:>6}  {X.lattice.name:<8}{X.expected_weyl or '-':<8}"
              f"{_yn(X.terminal_expected):<10}{X.description}\n")
  for rec in toricvar.not_constructed():
    out.write(f"{'-':<7}{rec['grdb_id']:>6}  {'-':<8}{rec.get('expected_weyl', '-'):<8}{'-':<10}"
              f"not constructed: {rec.get('description', '')}\n")
  return EXIT_OK


def cmd_strata(args, out):
  X = _model(args.variety)
  s = toricvar.strata(X)
  dims = [f"divisors {s['divisors']}"]
  if "curves" in s:
    dims.append(f"curves {s['curves']}")
  dims.append(f"points {s['points']}")
  types = ", ".join(f"{k} {v}" for k, v in s["point_types"].items())
  out.write(f"{X.name}: {', '.join(dims)} ({types}); terminal {_yn(polyfan.is_terminal_fano(X.fan))}\n")
  return EXIT_OK


def cmd_weyl(args, out):
  W = toricvar.weyl(_model(args.variety))
  out.write(f"order {W.order}, type {latgroup.identify(W)}\n")
  return EXIT_OK


def cmd_orbits(args, out):
  X = _model(args.variety)
  G = _group(X, args.group)
  dec = toricvar.orbits(X, G)
  names = {X.rank - 1: "divisors", 1: "curves", 0: "points"}
  for dim in sorted(dec.orbits, reverse=True):
    if dim == X.rank:
      continue
    out.write(f"{names.get(dim, f'dim {dim}')}: {list(dec.sizes(dim))}\n")
  for label, sizes in toricvar.orbit_sizes_by_type(X, G).items():
    out.write(f"  {label} points: {list(sizes)}\n")
  return EXIT_OK


def cmd_classgroup(args, out):
  out.write(f"{toricvar.class_group(_model(args.variety))}\n")
  return EXIT_OK


def cmd_minimal(args, out):
  X = _model(args.variety)
  G = _group(X, args.group)
  r = toricvar.invariant_class_rank(X, G)
  out.write(f"invariant class rank {r}; minimal {_yn(r == 1)}\n")
  return EXIT_OK


def cmd_solid(args, out):
  X = _model(args.variety)
  G = _group(X, args.group)
  v = solidity.is_g_solid(X, G, args.group)
  out.write(f"{X.name} with {v.group} ({latgroup.identify(toricvar.on_model(X, G))}): "
            f"minimal {_yn(v.minimal)}, irreducible {_yn(v.irreducible)}, solid {_yn(v.solid)}\n")
  if v.superrigid_condition_b is not None:
    out.write(f"self-normalizing {_yn(v.superrigid_condition_b)}\n")
  if v.appendix_outcome is not None:
    out.write(f"lookup: {v.appendix_outcome}\n")
  return EXIT_OK


def _emit(reports, out):
  for r in reports:
    out.write(f"{r.status:<12}{r.id}  {r.detail}\n")
  return EXIT_FAIL if any(r.status == claims.FAIL for r in reports) else EXIT_OK


def cmd_maps(args, out):
  ids = list(birmaps.fixtures())
  if args.map_id is not None:
    if args.map_id not in ids:
      raise UsageError(f"unknown map id {args.map_id!r}; known: {', '.join(ids)}")
    ids = [args.map_id]
  cfg = claims.Config(samples=args.samples, seed=args.seed)
  reports = []
  for mid in ids:
    status, detail = claims.check_map(cfg, mid)
    reports.append(claims.ClaimReport(mid, status, detail))
  return _emit(reports, out)


def cmd_torsub(args, out):
  if args.max_modulus > args.guard:
    raise torsub.EnumerationBoundError("enumeration bound exceeded")
  worst = EXIT_OK
  for N in range(1, args.max_modulus + 1):
    a = torsub.scheme_action(args.scheme, N)
    r = torsub.verify_classification(a, args.scheme, args.guard)
    shapes = ", ".join(f"{k} x{v}" for k, v in sorted(r.shapes.items()))
    out.write(f"N={N}: {r.subgroups} invariant of {r.examined}, "
              f"{len(r.counterexamples)} counterexamples; {shapes}\n")
    if not r.ok:
      worst = EXIT_FAIL
  return worst


def cmd_verify_paper(args, out):
  if args.max_modulus > args.guard:
    raise torsub.EnumerationBoundError("enumeration bound exceeded")
  cfg = claims.Config(samples=args.samples, seed=args.seed, max_modulus=args.max_modulus,
                      guard=args.guard, timing=args.timing)
  reports = claims.verify_paper(cfg)
  if args.format == "json":
    text = json.dumps([r.as_dict() for r in reports], indent=1) + "\n"
  else:
    lines = [f"{r.status:<12}{r.id}  {r.detail}" for r in reports]
    counts = {s: sum(r.status == s for r in reports) for s in claims.STATUSES}
    lines.append(f"{len(reports)} claims: " + ", ".join(f"{v} {k}" for k, v in counts.items()))
    text = "\n".join(lines) + "\n"
  if args.out:
    with open(args.out, "w", encoding="utf-8") as fh:
      fh.write(text)
    failed = [r.id for r in reports if r.status == claims.FAIL]
    out.write(f"wrote {len(reports)} claims to {args.out}; failed: {', '.join(failed) or 'none'}\n")
  else:
    out.write(text)
  return EXIT_FAIL if any(r.status == claims.FAIL for r in reports) else EXIT_OK


# -------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
  p = argparse.ArgumentParser(prog="toric-solid", description="Toric Fano threefolds: groups, orbits, solidity.")
  sub = p.add_subparsers(dest="command", required=True)

  cat = sub.add_parser("catalog", help="list the catalog")
  cat.add_argument("action", choices=["list"])
  cat.set_defaults(fn=cmd_catalog)

  for name, fn, hlp in (("strata", cmd_strata, "strata census"),
                        ("weyl", cmd_weyl, "order and type of the Weyl group"),
                        ("classgroup", cmd_classgroup, "class group")):
    sp = sub.add_parser(name, help=hlp)
    sp.add_argument("variety")
    sp.set_defaults(fn=fn)

  for name, fn, hlp in (("orbits", cmd_orbits, "orbit sizes on strata"),
                        ("minimal", cmd_minimal, "G-minimality"),
                        ("solid", cmd_solid, "G-solidity verdict")):
    sp = sub.add_parser(name, help=hlp)
    sp.add_argument("variety")
    sp.add_argument("--group", required=True)
    sp.set_defaults(fn=fn)

  maps = sub.add_parser("maps", help="check monomial map fixtures")
  maps.add_argument("action", choices=["verify"])
  maps.add_argument("map_id", nargs="?")
  maps.add_argument("--samples", type=int, default=100)
  maps.add_argument("--seed", type=int, default=0)
  maps.set_defaults(fn=cmd_maps)

  ts = sub.add_parser("torsub", help="enumerate invariant torus subgroups")
  ts.add_argument("action", choices=["verify"])
  ts.add_argument("--scheme", required=True, choices=sorted(torsub.SCHEMES))
  ts.add_argument("--max-modulus", type=int, default=8)
  ts.add_argument("--guard", type=int, default=torsub.DEFAULT_GUARD)
  ts.set_defaults(fn=cmd_torsub)

  vp = sub.add_parser("verify-paper", help="run every claim in the manifest")
  vp.add_argument("--format", choices=["text", "json"], default="text")
  vp.add_argument("--out")
  vp.add_argument("--max-modulus", type=int, default=8)
  vp.add_argument("--guard", type=int, default=torsub.DEFAULT_GUARD)
  vp.add_argument("--samples", type=int, default=100)
  vp.add_argument("--seed", type=int, default=0)
  vp.add_argument("--timing", action="store_true", help="record elapsed milliseconds (breaks byte-identity)")
  vp.set_defaults(fn=cmd_verify_paper)
  return p


def main(argv=None, out=None) -> int:
  out = out or sys.stdout
  parser = build_parser()
  try:
    args = parser.parse_args(argv)
  except SystemExit as exc:
    return EXIT_USAGE if exc.code else EXIT_OK
  try:
    return args.fn(args, out)
  except (UsageError, solidity.SolidityError) as exc:
    parser.print_usage(sys.stderr)
    sys.stderr.write(f"error: {exc}\n")
    return EXIT_USAGE
  except torsub.EnumerationBoundError as exc:
    sys.stderr.write(f"error: {exc} (modulus guard {args.guard})\n")
    return EXIT_GUARD


if __name__ == "__main__":
  sys.exit(main())
