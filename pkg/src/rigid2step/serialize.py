"""Canonical JSON for algebras, metrics, verdicts and generator dumps.

Rationals are written as strings "p/q" (or "p"), indices are 1-based and
keys are sorted so identical inputs give byte-identical output.
"""

import dataclasses
import json
from fractions import Fraction

from . import linalg as la
from .lie import Graded2Step, Metric, MTypeAlgebra
from .poly import Poly

__all__ = [
    "SchemaError", "parse_rat", "to_jsonable", "dumps", "algebra_to_json",
    "algebra_from_json", "load_algebra", "verdict_to_json", "prolongation_to_json",
    "j2_to_json", "generators_to_json",
]


class SchemaError(ValueError):
    """Input JSON that parses but does not follow the documented schema."""


def parse_rat(v, where="value"):
    """A rational from "p/q", "p" or an int. Floats and booleans are rejected."""
    if isinstance(v, bool) or isinstance(v, float):
        raise SchemaError(f"{where}: expected a rational string, got {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v.strip())
        except (ValueError, ZeroDivisionError):
            raise SchemaError(f"{where}: {v!r} is not a rational") from None
    raise SchemaError(f"{where}: expected a rational string, got {type(v).__name__}")


def to_jsonable(obj):
    """Recursively convert results to JSON-ready values."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return la.rat_str(obj)
    if isinstance(obj, la.GaussRat):
        return {"re": la.rat_str(obj.re), "im": la.rat_str(obj.im)}
    if isinstance(obj, Poly):
        return str(obj)
    if isinstance(obj, dict):
        return {_key(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _key(k):
    if isinstance(k, tuple):
        return ",".join(str(x) for x in k)
    return str(k)


def dumps(doc):
    """Byte-stable text of a JSON document."""
    return json.dumps(to_jsonable(doc), sort_keys=True, indent=2) + "\n"


def _matrix_json(M):
    return [[la.rat_str(la.rat(x)) for x in row] for row in M]


def algebra_to_json(a, metric=None):
    """Canonical algebra document; ``a`` may be an MTypeAlgebra."""
    if isinstance(a, MTypeAlgebra):
        a, metric = a.algebra, a.metric
    doc = {
        "n": a.n,
        "m": a.m,
        "brackets": [{"i": i + 1, "j": j + 1, "z": [la.rat_str(c) for c in z]}
                     for i, j, z in a.brackets()],
    }
    if metric is not None:
        doc["metric"] = {"V": _matrix_json(metric.V), "Z": _matrix_json(metric.Z)}
    return doc


def _field(d, name, where):
    if not isinstance(d, dict):
        raise SchemaError(f"{where}: expected an object")
    if name not in d:
        raise SchemaError(f"{where}: missing field '{name}'")
    return d[name]


def _int_field(d, name, where):
    v = _field(d, name, where)
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise SchemaError(f"{where}.{name}: expected a non-negative integer")
    return v


def _matrix(v, size, where):
    if not isinstance(v, list) or len(v) != size or \
            any(not isinstance(r, list) or len(r) != size for r in v):
        raise SchemaError(f"{where}: expected a {size}x{size} matrix")
    return [[parse_rat(x, f"{where}[{i + 1}][{j + 1}]") for j, x in enumerate(r)]
            for i, r in enumerate(v)]


def algebra_from_json(doc):
    """(Graded2Step, Metric or None) from a parsed algebra document."""
    n = _int_field(doc, "n", "algebra")
    m = _int_field(doc, "m", "algebra")
    raw = _field(doc, "brackets", "algebra")
    if not isinstance(raw, list):
        raise SchemaError("algebra.brackets: expected a list")
    br = []
    for t, b in enumerate(raw):
        where = f"algebra.brackets[{t}]"
        i = _int_field(b, "i", where)
        j = _int_field(b, "j", where)
        z = _field(b, "z", where)
        if not (1 <= i <= n and 1 <= j <= n):
            raise SchemaError(f"{where}: index out of range 1..{n}")
        if not isinstance(z, list) or len(z) != m:
            raise SchemaError(f"{where}.z: expected a list of {m} rationals")
        br.append((i - 1, j - 1, [parse_rat(c, f"{where}.z") for c in z]))
    try:
        a = Graded2Step(n, m, br)
    except ValueError as e:
        raise SchemaError(f"algebra: {e}") from None
    metric = None
    if doc.get("metric") is not None:
        md = doc["metric"]
        V = _matrix(_field(md, "V", "algebra.metric"), n, "algebra.metric.V")
        Z = _matrix(_field(md, "Z", "algebra.metric"), m, "algebra.metric.Z")
        try:
            metric = Metric(la.as_matrix(V), la.as_matrix(Z))
        except ValueError as e:
            raise SchemaError(f"algebra.metric: {e}") from None
    return a, metric


def load_algebra(text):
    """Parse algebra JSON text. Syntax errors name the byte offset."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        offset = len(text[:e.pos].encode("utf-8"))
        raise SchemaError(f"malformed JSON at byte offset {offset}: {e.msg}") from None
    return algebra_from_json(doc)


def prolongation_to_json(res):
    return {"level_dims": list(res.level_dims), "terminated": res.terminated,
            "total_dim": res.total_dim if res.terminated else None,
            "negative_dims": [res.m, res.n]}


def verdict_to_json(v):
    doc = {
        "verdict": v.verdict,
        "method": v.method,
        "certificate": dict({"kind": v.certificate.kind}, **to_jsonable(v.certificate.data)),
    }
    if v.checks:
        doc["checks"] = [{"stage": s, "verdict": r, "evidence": k} for s, r, k in v.checks]
    if v.prolongation is not None:
        doc["prolongation"] = prolongation_to_json(v.prolongation)
    return doc


def j2_to_json(v):
    doc = {"j2": v.holds, "mode": v.mode}
    if v.witness is not None:
        w = v.witness
        doc["witness"] = {"x": to_jsonable(w["x"]), "pair": [p + 1 for p in w["pair"]],
                          "checks": to_jsonable(w["checks"])}
    if v.residual_certificate:
        doc["zero_residual_pairs"] = [[i + 1, j + 1] for i, j in v.residual_certificate]
    if v.mode == "general-probe" and v.holds:
        doc["note"] = "no counterexample on the probe set (semi-decision)"
    return doc


def generators_to_json(rep):
    """Generator dump: the r+s matrices and the admissible form, as rational strings."""
    return {"r": rep.r, "s": rep.s, "dim": rep.dim,
            "generators": [_matrix_json(g) for g in rep.gens],
            "form": _matrix_json(rep.G),
            "composition": to_jsonable(rep.composition)}
