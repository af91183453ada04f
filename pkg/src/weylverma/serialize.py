"""Schema-stable JSON for every result type.

Rationals are written as strings ("1/2", "-3"), weights as lists of such
strings, and every object carries a "type" tag so that ``from_json`` can
rebuild it. Output is sorted and contains no volatile data.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .branching import BranchingResult, Fan
from .embedding import EmbeddingSpec
from .formal import FormalElement
from .oracle import WeightDiagram
from .resolution import ResolutionEntry, ResolutionSequence
from .rootspace import build_root_datum
from .singular import SingularDecomposition, SingularEntry
from .verma import GVChar, VermaTerm
from .weyl import WeylElement


def _q(x) -> str:
    return str(Fraction(x))


def _w(x) -> list:
    return [_q(c) for c in x]


def _unw(x) -> tuple:
    return tuple(Fraction(c) for c in x)


def _table(d: dict) -> list:
    return [[_w(k), v] for k, v in sorted(d.items())]


def _untable(rows) -> dict:
    return {_unw(k): v for k, v in rows}


def encode(obj):
    """Convert a result object to plain JSON data."""
    if isinstance(obj, VermaTerm):
        return {"type": "verma_term", "sign": obj.sign, "carrier": _w(obj.carrier),
                "gv": encode(obj.gv), "u": encode(obj.u)}
    if isinstance(obj, (list, tuple)):
        return [encode(x) for x in obj]
    if isinstance(obj, FormalElement):
        return {"type": "formal", "terms": _table(dict(obj.items()))}
    if isinstance(obj, WeylElement):
        return {"type": "weyl", "datum": obj.datum, "word": list(obj.word),
                "rho_image": _w(obj.rho_image)}
    if isinstance(obj, EmbeddingSpec):
        return {"type": "embedding", **obj.descriptor()}
    if isinstance(obj, Fan):
        return {"type": "fan", "gamma0": _w(obj.gamma0), "s0": obj.s0,
                "shifts": _table(obj.shifts), "depth": obj.depth,
                "exponents": _table(obj.exponents)}
    if isinstance(obj, BranchingResult):
        return {"type": "branching", "mu": _w(obj.mu), "k": _table(obj.k_table),
                "b": _table(obj.b), "fan": encode(obj.fan), "depth": obj.depth}
    if isinstance(obj, SingularEntry):
        return {"type": "singular_entry", "u": encode(obj.u), "sign": obj.sign,
                "carrier": _w(obj.carrier), "perp_hw": _w(obj.perp_hw)}
    if isinstance(obj, SingularDecomposition):
        return {"type": "singular_decomposition", "mu": _w(obj.mu),
                "entries": [encode(e) for e in obj.entries]}
    if isinstance(obj, ResolutionEntry):
        return {"type": "resolution_entry", "u": encode(obj.u),
                "highest_weight": _w(obj.highest_weight), "carrier": _w(obj.carrier),
                "perp_hw": _w(obj.perp_hw), "sign": obj.sign}
    if isinstance(obj, ResolutionSequence):
        return {"type": "resolution", "mu": _w(obj.mu),
                "grades": [[encode(e) for e in g] for g in obj.grades]}
    if isinstance(obj, WeightDiagram):
        return {"type": "weight_diagram", "hw": _w(obj.hw),
                "multiplicities": _table(obj.multiplicities)}
    if isinstance(obj, GVChar):
        return {"type": "gv_character", "ambient": obj.ambient.name,
                "highest_weight": _w(obj.highest_weight), "depth": obj.depth,
                "relative": [[list(k), c] for k, c in obj.relative.sorted_items()]}
    if isinstance(obj, dict):
        return {str(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, Fraction):
        return _q(obj)
    if obj is None or isinstance(obj, (bool, int, str, float)):
        return obj
    raise TypeError(f"cannot encode {type(obj).__name__}")


def decode(data):
    """Inverse of :func:`encode`."""
    if isinstance(data, list):
        return [decode(x) for x in data]
    if not isinstance(data, dict):
        return data
    t = data.get("type")
    if t is None:
        return {k: decode(v) for k, v in data.items()}
    if t == "formal":
        return FormalElement(_untable(data["terms"]))
    if t == "weyl":
        return WeylElement(tuple(data["word"]), data["datum"], _unw(data["rho_image"]))
    if t == "embedding":
        return EmbeddingSpec.from_descriptor(data)
    if t == "fan":
        return Fan(_unw(data["gamma0"]), data["s0"], _untable(data["shifts"]),
                   data["depth"], _untable(data["exponents"]))
    if t == "branching":
        return BranchingResult(_unw(data["mu"]), _untable(data["k"]), _untable(data["b"]),
                               decode(data["fan"]), data["depth"])
    if t == "singular_entry":
        return SingularEntry(decode(data["u"]), data["sign"], _unw(data["carrier"]),
                             _unw(data["perp_hw"]))
    if t == "singular_decomposition":
        return SingularDecomposition(_unw(data["mu"]), tuple(decode(e) for e in data["entries"]))
    if t == "resolution_entry":
        return ResolutionEntry(decode(data["u"]), _unw(data["highest_weight"]),
                               _unw(data["carrier"]), _unw(data["perp_hw"]), data["sign"])
    if t == "resolution":
        return ResolutionSequence(_unw(data["mu"]),
                                  [[decode(e) for e in g] for g in data["grades"]])
    if t == "weight_diagram":
        return WeightDiagram(_unw(data["hw"]), _untable(data["multiplicities"]))
    if t == "gv_character":
        rel = FormalElement({tuple(k): c for k, c in data["relative"]})
        return GVChar(_unw(data["highest_weight"]), rel, data["depth"],
                      build_root_datum(data["ambient"]))
    if t == "verma_term":
        return VermaTerm(data["sign"], _unw(data["carrier"]), decode(data["gv"]),
                         decode(data["u"]))
    raise ValueError(f"unknown type tag {t!r}")


def to_json(obj) -> str:
    return json.dumps(encode(obj), sort_keys=True, indent=2)


def from_json(text: str):
    return decode(json.loads(text))
