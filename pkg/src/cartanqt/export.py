"""JSON and CSV forms of tables, polynomials and divisors.

Every ``*_to_*`` function has a parser that inverts it exactly.  Keys are
sorted so output is stable across runs.
"""

from __future__ import annotations

import csv
import io
import json

from .cartan import CartanData, build, parse_type
from .deform import CTildeTable
from .poly import BiLaurent
from .rmatrix import DivisorPoly

__all__ = [
    "ctilde_from_csv",
    "ctilde_from_json",
    "ctilde_t1_entries",
    "ctilde_to_csv",
    "ctilde_to_json",
    "divisor_from_json",
    "divisor_to_json",
    "dumps",
    "poly_from_json",
    "poly_to_json",
]


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def ctilde_t1_entries(tab: CTildeTable) -> list[dict]:
    out = []
    for i in tab.cd.nodes:
        for j in tab.cd.nodes:
            for u in range(tab.order + 1):
                c = tab.coeff_q(i, j, u)
                if c:
                    out.append({"i": i, "j": j, "u": u, "c": c})
    return out


def ctilde_to_json(tab: CTildeTable, t1: bool = False) -> str:
    if t1:
        entries = ctilde_t1_entries(tab)
    else:
        entries = [{"i": i, "j": j, "u": u, "v": v, "c": c} for i, j, u, v, c in tab.items()]
    return dumps({"type": str(tab.cd.type), "order": tab.order, "t1": t1, "entries": entries})


def ctilde_from_json(text: str) -> CTildeTable:
    """Parse a bigraded table.  A t = 1 table comes back with every v = 0."""
    obj = json.loads(text)
    cd = build(parse_type(obj["type"]))
    rows = ((e["i"], e["j"], e["u"], e.get("v", 0), e["c"]) for e in obj["entries"])
    return CTildeTable.from_entries(cd, obj["order"], rows)


def ctilde_to_csv(tab: CTildeTable, t1: bool = False) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if t1:
        w.writerow(["i", "j", "u", "c"])
        for e in ctilde_t1_entries(tab):
            w.writerow([e["i"], e["j"], e["u"], e["c"]])
    else:
        w.writerow(["i", "j", "u", "v", "c"])
        for row in tab.items():
            w.writerow(row)
    return buf.getvalue()


def ctilde_from_csv(text: str, cd: CartanData, order: int) -> CTildeTable:
    rows = csv.DictReader(io.StringIO(text))
    return CTildeTable.from_entries(
        cd, order,
        ((int(r["i"]), int(r["j"]), int(r["u"]), int(r.get("v") or 0), int(r["c"])) for r in rows),
    )


def poly_to_json(p: BiLaurent) -> list[list[int]]:
    return [[u, v, c] for u, v, c in p.sorted_terms()]


def poly_from_json(data) -> BiLaurent:
    return BiLaurent({(u, v): c for u, v, c in data})


def divisor_to_json(d: DivisorPoly) -> dict[str, int]:
    return {str(e): m for e, m in d.mults.items()}


def divisor_from_json(data) -> DivisorPoly:
    return DivisorPoly({int(e): m for e, m in data.items()})
