"""Regenerate data/maps.json from readable monomial strings."""

import json
import re
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "toricsolid" / "data" / "maps.json"

P1_3 = ["u1", "v1", "u2", "v2", "u3", "v3"]
P1_4 = P1_3 + ["u4", "v4"]
P6 = [f"y{i}" for i in range(1, 8)]
P5 = [f"y{i}" for i in range(1, 7)]
P3 = ["x1", "x2", "x3", "x4"]
WP = ["x1", "x2", "x3", "x4", "w"]
SEGRE = [f"z{i}" for i in range(8)]
X24A = ["222", "220", "211", "202", "200", "121", "112", "110", "101", "022", "020", "011", "002", "000"]
P13 = [f"z{i}" for i in range(14)]


def mono(text, coords):
  text = text.strip()
  sign = 1
  if text.startswith("-"):
    sign, text = -1, text[1:]
  exps = [0] * len(coords)
  if text != "1":
    for factor in text.split("*"):
      m = re.fullmatch(r"([a-z]\d*)(?:\^(\d+))?", factor)
      exps[coords.index(m.group(1))] += int(m.group(2) or 1)
  return [sign, exps]


def monos(texts, coords):
  return [mono(t, coords) for t in texts]


def ratio(num, den, coords):
  a, b = mono(num, coords)[1], mono(den, coords)[1]
  return [x - y for x, y in zip(a, b)]


def x24_char(a):
  a1, a2, a3 = (int(c) for c in a)
  return [(a1 + a2 - a3) // 2, (a1 - a2 + a3) // 2, (-a1 + a2 + a3) // 2]


def p1_gradings(n):
  return [[int(k // 2 == i) for k in range(2 * n)] for i in range(n)]


charts = {
  "Y24:P1^4": {
    "model": "Y24", "coords": P1_4, "gradings": p1_gradings(4),
    "characters": [[1, 0, 0], [0, 0, 0], [0, 1, 0], [0, 0, 0], [0, 0, 1], [0, 0, 0], [0, 0, 0], [1, 1, 1]],
    "inverse": [ratio("u1", "v1", P1_4), ratio("u2", "v2", P1_4), ratio("u3", "v3", P1_4)],
    "equations": "model"},
  "V6:P1^3": {
    "model": "V6", "coords": P1_3, "gradings": p1_gradings(3),
    "characters": [[1, 0, 0], [0, 0, 0], [0, 1, 0], [0, 0, 0], [0, 0, 1], [0, 0, 0]],
    "inverse": [ratio("u1", "v1", P1_3), ratio("u2", "v2", P1_3), ratio("u3", "v3", P1_3)],
    "equations": []},
  "V6:segre": {
    "model": "V6", "coords": SEGRE, "gradings": [[1] * 8],
    "labels": ["u1*u2*v3", "v1*v2*u3", "u1*v2*u3", "v1*u2*v3", "v1*u2*u3", "u1*v2*v3", "v1*v2*v3", "u1*u2*u3"],
    "characters": [[1, 1, 0], [0, 0, 1], [1, 0, 1], [0, 1, 0], [0, 1, 1], [1, 0, 0], [0, 0, 0], [1, 1, 1]],
    "inverse": [ratio("z5", "z6", SEGRE), ratio("z3", "z6", SEGRE), ratio("z1", "z6", SEGRE)],
    "equations": "quadrics"},
  "X8:P6": {
    "model": "X8", "coords": P6, "gradings": [[1] * 7],
    "characters": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 0, -1], [0, -1, 0], [-1, 0, 0], [0, 0, 0]],
    "inverse": [ratio("y1", "y7", P6), ratio("y2", "y7", P6), ratio("y3", "y7", P6)],
    "equations": "model"},
  "V4:P5": {
    "model": "V4", "coords": P5, "gradings": [[1] * 6],
    "characters": [[1, 1, -1], [1, 0, 0], [0, 1, 0], [1, 0, -1], [0, 1, -1], [0, 0, 0]],
    "inverse": [ratio("y2", "y6", P5), ratio("y3", "y6", P5), ratio("y2*y3", "y1*y6", P5)],
    "equations": "model"},
  "X24:P13": {
    "model": "X24", "coords": P13, "gradings": [[1] * 14],
    "labels": ["u^" + a for a in X24A],
    "characters": [x24_char(a) for a in X24A],
    "inverse": [ratio("z7", "z13", P13), ratio("z8", "z13", P13), ratio("z11", "z13", P13)],
    "equations": "quadrics"},
  "V2:P11112": {
    "model": "V2", "coords": WP, "gradings": [[1, 1, 1, 1, 2]],
    "characters": [[1, 1, 0], [1, 0, 1], [0, 1, 1], [0, 0, 0], [1, 1, 1]],
    "inverse": [ratio("x1*x2", "w", WP), ratio("x1*x3", "w", WP), ratio("x2*x3", "w", WP)],
    "equations": [[mono("w^2", WP)[1], mono("x1*x2*x3*x4", WP)[1]]]},
  "P3:P3": {
    "model": "P3", "coords": P3, "gradings": [[1] * 4],
    "characters": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 0, 0]],
    "inverse": [ratio("x1", "x4", P3), ratio("x2", "x4", P3), ratio("x3", "x4", P3)],
    "equations": []},
}


def w(i, j):
  return f"u{i}*v{i}*u{j}*v{j}"


def x24_from_v6():
  out = []
  for a in X24A:
    parts = []
    for i, c in enumerate(a, start=1):
      c = int(c)
      parts += [f"u{i}"] * c + [f"v{i}"] * (2 - c)
    out.append("*".join(parts))
  return out


def big_uv(i, which):
  others = [j for j in range(1, 5) if j != i]
  lead = f"{which}{i}^2"
  return "*".join([lead] + [f"u{j}*v{j}" for j in others])


PSI_INF = ["x1^2*x2^2*x3^2", "x1^3*x2*x3*x4", "x1^2*x2^2*x3*x4", "x1*x2^3*x3*x4", "x1^2*x2^2*x4^2",
           "x1^2*x2*x3^2*x4", "x1*x2^2*x3^2*x4", "x1^2*x2*x3*x4^2", "x1*x2^2*x3*x4^2",
           "x1*x2*x3^3*x4", "x1^2*x3^2*x4^2", "x1*x2*x3^2*x4^2", "x2^2*x3^2*x4^2", "x1*x2*x3*x4^3"]
PSI_INF_PRINTED = PSI_INF[:12] + ["x2^4*x4^2"] + PSI_INF[13:]
SIGMA_X24_PERM = [X24A.index("".join(str(2 - int(c)) for c in a)) for a in X24A]

maps = [
  {"id": "y24-to-v6", "source_chart": "Y24:P1^4", "target_chart": "V6:P1^3", "kind": "quotient",
   "printed": "(t1,t2,t3) -> (t1t2, t1t3, t2t3)",
   "formulas": monos(["u1*u2", "v1*v2", "u1*u3", "v1*v3", "u2*u3", "v2*v3"], P1_4),
   "expected_degree": 2, "equivariance": ["W1", "W2"]},
  {"id": "y24-to-v6-printed", "source_chart": "Y24:P1^4", "target_chart": "V6:P1^3", "kind": "literal",
   "printed": "(t1,t2,t3) -> (t1t2, t1t3, t2t2)",
   "formulas": monos(["u1*u2", "v1*v2", "u1*u3", "v1*v3", "u2^2", "v2^2"], P1_4),
   "expected_degree": 2, "equivariance": ["W1", "W2"], "expect_failure": "equivariance"},
  {"id": "y24-to-segre", "source_chart": "Y24:P1^4", "target_chart": "V6:segre", "kind": "quotient",
   "printed": "[U1:V1:U2:V2:U3:V3:U4:V4]",
   "formulas": monos([big_uv(i, c) for i in range(1, 5) for c in ("u", "v")], P1_4),
   "expected_degree": 2, "equivariance": ["W1", "W2"]},
  {"id": "segre-embedding", "source_chart": "V6:P1^3", "target_chart": "V6:segre", "kind": "embedding",
   "printed": "Segre embedding with the repeated fifth entry removed",
   "formulas": monos(charts["V6:segre"]["labels"], P1_3),
   "expected_degree": 1, "equivariance": ["W2", "W2"]},
  {"id": "v6-to-x24", "source_chart": "V6:P1^3", "target_chart": "X24:P13", "kind": "quotient",
   "printed": "V6 -> P13 by the fourteen sextic monomials",
   "formulas": monos(x24_from_v6(), P1_3),
   "expected_degree": 2, "equivariance": ["W2", "W3"]},
  {"id": "v6-involution", "source_chart": "V6:P1^3", "target_chart": "V6:P1^3", "kind": "involution",
   "printed": "([u1:-v1],[u2:-v2],[u3:-v3])",
   "formulas": monos(["u1", "-v1", "u2", "-v2", "u3", "-v3"], P1_3),
   "expected_degree": 1, "equivariance": ["W2", "W2"]},
  {"id": "x8-to-v6", "source_chart": "X8:P6", "target_chart": "V6:P1^3", "kind": "link",
   "printed": "([y1:y7],[y2:y7],[y3:y7])",
   "formulas": monos(["y1", "y7", "y2", "y7", "y3", "y7"], P6),
   "expected_degree": 1, "equivariance": ["W2", "W2"]},
  {"id": "v6-to-x8", "source_chart": "V6:P1^3", "target_chart": "X8:P6", "kind": "link",
   "printed": "[u1^2W23:u2^2W13:u3^2W12:v3^2W12:v2^2W13:v1^2W23:u1u2u3v1v2v3]",
   "formulas": monos([f"u1^2*{w(2, 3)}", f"u2^2*{w(1, 3)}", f"u3^2*{w(1, 2)}", f"v3^2*{w(1, 2)}",
                      f"v2^2*{w(1, 3)}", f"v1^2*{w(2, 3)}", "u1*u2*u3*v1*v2*v3"], P1_3),
   "expected_degree": 1, "equivariance": ["W2", "W2"]},
  {"id": "x8-involution", "source_chart": "X8:P6", "target_chart": "X8:P6", "kind": "involution",
   "printed": "[y1:y2:y3:y4:y5:y6:-y7]",
   "formulas": monos(["y1", "y2", "y3", "y4", "y5", "y6", "-y7"], P6),
   "expected_degree": 1, "equivariance": ["W2", "W2"]},
  {"id": "x8-to-v4", "source_chart": "X8:P6", "target_chart": "V4:P5", "kind": "quotient",
   "printed": "projection from [0:0:0:0:0:0:1]",
   "formulas": monos(["y1", "y2", "y3", "y4", "y5", "y6"], P6),
   "expected_degree": 2, "equivariance": ["W2", "W3"]},
  {"id": "v4-to-x24", "source_chart": "V4:P5", "target_chart": "X24:P13", "kind": "link",
   "printed": "fourteen cubic monomials in y1..y6",
   "formulas": monos(["y1*y2*y3", "y1*y2*y4", "y1*y3*y4", "y1*y3*y5", "y1*y4*y5", "y1*y2*y6", "y1*y3*y6",
                      "y1*y4*y6", "y1*y5*y6", "y2*y3*y6", "y2*y4*y6", "y2*y5*y6", "y3*y5*y6", "y4*y5*y6"], P5),
   "expected_degree": 1, "equivariance": ["W3", "W3"]},
  {"id": "v4-involution", "source_chart": "V4:P5", "target_chart": "V4:P5", "kind": "involution",
   "printed": "[y6:y5:y4:y3:y2:y1]",
   "formulas": monos(["y6", "y5", "y4", "y3", "y2", "y1"], P5),
   "expected_degree": 1, "equivariance": ["W3", "W3"]},
  {"id": "v4-involution-printed", "source_chart": "V4:P5", "target_chart": "V4:P5", "kind": "literal",
   "printed": "[y6:y5:y4:y3:y3:y1]",
   "formulas": monos(["y6", "y5", "y4", "y3", "y3", "y1"], P5),
   "expected_degree": 1, "equivariance": ["W3", "W3"], "expect_failure": "sampling"},
  {"id": "v2-to-v6", "source_chart": "V2:P11112", "target_chart": "V6:P1^3", "kind": "link",
   "printed": "([x1x2:w],[x1x3:w],[x2x3:w])",
   "formulas": monos(["x1*x2", "w", "x1*x3", "w", "x2*x3", "w"], WP),
   "expected_degree": 1, "equivariance": ["weyl", "W2Sbar"]},
  {"id": "v6-to-v2", "source_chart": "V6:P1^3", "target_chart": "V2:P11112", "kind": "link",
   "printed": "[u1u2v3:u1u3v2:u2u3v1:v1v2v3:u1u2u3v1v2v3]",
   "formulas": monos(["u1*u2*v3", "u1*u3*v2", "u2*u3*v1", "v1*v2*v3", "u1*u2*u3*v1*v2*v3"], P1_3),
   "expected_degree": 1, "equivariance": ["W2Sbar", "weyl"]},
  {"id": "v2-involution", "source_chart": "V2:P11112", "target_chart": "V2:P11112", "kind": "involution",
   "printed": "[x1:x2:x3:x4:-w]",
   "formulas": monos(["x1", "x2", "x3", "x4", "-w"], WP),
   "expected_degree": 1, "equivariance": ["weyl", "weyl"]},
  {"id": "v2-to-p3", "source_chart": "V2:P11112", "target_chart": "P3:P3", "kind": "quotient",
   "printed": "[x1:x2:x3:x4]",
   "formulas": monos(["x1", "x2", "x3", "x4"], WP),
   "expected_degree": 2, "equivariance": ["weyl", "weyl"]},
  {"id": "p3-to-x24", "source_chart": "P3:P3", "target_chart": "X24:P13", "kind": "link",
   "printed": "sextic monomials, thirteenth entry read as x2^2x3^2x4^2",
   "formulas": monos(PSI_INF, P3),
   "expected_degree": 1, "equivariance": ["W3Sbar", "W3Sbar"]},
  {"id": "p3-to-x24-printed", "source_chart": "P3:P3", "target_chart": "X24:P13", "kind": "literal",
   "printed": "sextic monomials with thirteenth entry x2^2x2^2x4^2",
   "formulas": monos(PSI_INF_PRINTED, P3),
   "expected_degree": 1, "equivariance": ["W3Sbar", "W3Sbar"], "expect_failure": "sampling"},
  {"id": "p3-to-x24-swapped", "source_chart": "P3:P3", "target_chart": "X24:P13", "kind": "link",
   "printed": "x24-involution applied to the outputs of p3-to-x24",
   "formulas": monos([PSI_INF[SIGMA_X24_PERM[k]] for k in range(14)], P3),
   "expected_degree": 1, "equivariance": ["W3Sbar", "W3Sbar"]},
  {"id": "x24-involution", "source_chart": "X24:P13", "target_chart": "X24:P13", "kind": "involution",
   "printed": "u^a -> u^(222-a) on the fourteen coordinates",
   "formulas": monos([f"z{SIGMA_X24_PERM[k]}" for k in range(14)], P13),
   "expected_degree": 1, "equivariance": ["W3", "W3"]},
  {"id": "cremona", "source_chart": "P3:P3", "target_chart": "P3:P3", "kind": "involution",
   "printed": "[x2x3x4:x1x3x4:x1x2x4:x1x2x3]",
   "formulas": monos(["x2*x3*x4", "x1*x3*x4", "x1*x2*x4", "x1*x2*x3"], P3),
   "expected_degree": 1, "equivariance": ["W3Sbar", "W3Sbar"]},
]

doc = {"schema": "toricsolid-maps/1",
       "segre_printed": ["u1*u2*v3", "v1*v2*u3", "u1*v2*u3", "v1*u2*v3", "v1*u2*v3",
                         "v1*u2*u3", "u1*v2*v3", "v1*v2*v3", "u1*u2*u3"],
       "charts": charts, "maps": maps}
OUT.write_text(json.dumps(doc, indent=1) + "\n", encoding="utf-8")
print(f"wrote {OUT}")
