"""Single-document JSON serialization for codes.

Files are self-describing: the field modulus is stored explicitly, all
values are integers, and the generator round-trips losslessly. A cached
weight distribution may be embedded and is revalidated on use.
"""

from __future__ import annotations

import json

from .gf import GF, Matrix
from .linear import CodeError, LinearCode, WeightDistribution

FORMAT_NAME = "linear-code"


def code_to_dict(code: LinearCode, with_distribution: bool = False) -> dict:
    doc = {
        "format": FORMAT_NAME,
        "field": {
            "p": code.field.p,
            "e": code.field.e,
            "modulus": list(code.field.modulus),
        },
        "n": code.n,
        "k": code.k,
        "label": code.label,
        "generator": [list(row) for row in code.generator.rows],
    }
    if with_distribution:
        doc["weight_distribution"] = code.weight_distribution().to_dict()
    return doc


def code_from_dict(doc: dict) -> LinearCode:
    if doc.get("format") != FORMAT_NAME:
        raise CodeError(f"not a {FORMAT_NAME} document")
    fld = doc["field"]
    field = GF(fld["p"], fld["e"], modulus=fld["modulus"])
    code = LinearCode(field, Matrix(field, doc["generator"]),
                      label=doc.get("label", ""))
    if code.n != doc["n"] or code.k != doc["k"]:
        raise CodeError(
            f"declared [{doc['n']},{doc['k']}] but generator is "
            f"[{code.n},{code.k}]")
    cached = doc.get("weight_distribution")
    if cached is not None:
        wd = WeightDistribution(
            field.q, code.n, code.k, {int(w): c for w, c in cached.items()})
        code._wd = wd
    return code


def save_code(code: LinearCode, path, with_distribution: bool = True):
    with open(path, "w") as fh:
        json.dump(code_to_dict(code, with_distribution), fh, indent=2,
                  sort_keys=True)
        fh.write("\n")


def load_code(path) -> LinearCode:
    with open(path) as fh:
        return code_from_dict(json.load(fh))
