"""JSON file formats for algebras, contraction families and reports.

Algebra file::

    {"dim": 3, "basis": ["H", "E", "F"],
     "brackets": [{"i": 1, "j": 2, "k": 2, "coeff": "2"}, ...]}

Indices are 1-based and ``i < j``; coefficients are integer or ``"p/q"``
strings (JSON integers are accepted too, floats never).

Family file::

    {"type": "diagonal", "weights": [1, 1, 2]}
    {"type": "matrix", "entries": [["e^2", "0"], ["1 + 3*e", "(e+1)/e"]]}
"""

from __future__ import annotations

import ast
import hashlib
import json
from fractions import Fraction

from .contraction import ContractionFamily
from .lie_core import LieAlgebra
from .scalar_poly import RationalFunction, SingularFamily, UPoly, as_rational

__all__ = [
    "ParseError",
    "parse_ratfunc",
    "parse_algebra",
    "load_algebra",
    "algebra_to_dict",
    "dump_algebra",
    "parse_family",
    "load_family",
    "family_to_dict",
    "digest",
    "dump_report",
]


class ParseError(ValueError):
    def __init__(self, location, message):
        self.location = location
        super().__init__(f"{location}: {message}")


_EPS = RationalFunction(UPoly([0, 1]))


def parse_ratfunc(text: str) -> RationalFunction:
    """Parse an expression in ``e`` with + - * / ^ and parentheses into Q(e)."""
    if not isinstance(text, str):
        if isinstance(text, int) and not isinstance(text, bool):
            return RationalFunction(text)
        raise ValueError(f"expected a string, got {text!r}")
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse {text!r}: {exc.msg}") from None
    return _eval_node(tree.body, text)


def _eval_node(node, text):
    if isinstance(node, ast.Constant) and type(node.value) is int:
        return RationalFunction(node.value)
    if isinstance(node, ast.Name) and node.id == "e":
        return _EPS
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval_node(node.operand, text)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        left = _eval_node(node.left, text)
        if isinstance(node.op, ast.Pow):
            exp = node.right
            sign = 1
            if isinstance(exp, ast.UnaryOp) and isinstance(exp.op, ast.USub):
                exp, sign = exp.operand, -1
            if not (isinstance(exp, ast.Constant) and type(exp.value) is int):
                raise ValueError(f"exponents must be integer literals in {text!r}")
            return left ** (sign * exp.value)
        right = _eval_node(node.right, text)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            if right.is_zero():
                raise ValueError(f"division by zero in {text!r}")
            return left / right
    raise ValueError(f"unsupported syntax in {text!r}: {ast.dump(node)}")


def _coeff(value, loc):
    if isinstance(value, bool) or isinstance(value, float):
        raise ParseError(loc, f"coefficient must be an exact integer or 'p/q' string, got {value!r}")
    try:
        c = as_rational(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(loc, str(exc)) from None
    return c


def _index(rec, key, dim, loc):
    v = rec.get(key)
    if isinstance(v, bool) or not isinstance(v, int):
        raise ParseError(f"{loc}.{key}", f"expected an integer index, got {v!r}")
    if not 1 <= v <= dim:
        raise ParseError(f"{loc}.{key}", f"index {v} outside 1..{dim}")
    return v - 1


def parse_algebra(doc) -> LieAlgebra:
    if not isinstance(doc, dict):
        raise ParseError("$", "algebra file must be a JSON object")
    dim = doc.get("dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 0:
        raise ParseError("$.dim", f"expected a non-negative integer, got {dim!r}")
    labels = doc.get("basis")
    if labels is None:
        labels = ()
    elif not (isinstance(labels, list) and all(isinstance(s, str) for s in labels)):
        raise ParseError("$.basis", "expected a list of strings")
    elif len(labels) != dim:
        raise ParseError("$.basis", f"{len(labels)} labels for dimension {dim}")
    elif len(set(labels)) != len(labels):
        raise ParseError("$.basis", "duplicate basis labels")
    records = doc.get("brackets", [])
    if not isinstance(records, list):
        raise ParseError("$.brackets", "expected a list of records")
    seen = {}
    brackets = {}
    for n, rec in enumerate(records):
        loc = f"$.brackets[{n}]"
        if not isinstance(rec, dict):
            raise ParseError(loc, "expected an object with i, j, k, coeff")
        unknown = set(rec) - {"i", "j", "k", "coeff"}
        if unknown:
            raise ParseError(loc, f"unknown fields {sorted(unknown)}")
        i = _index(rec, "i", dim, loc)
        j = _index(rec, "j", dim, loc)
        k = _index(rec, "k", dim, loc)
        if not i < j:
            raise ParseError(loc, f"need i < j, got i={i + 1}, j={j + 1}")
        if "coeff" not in rec:
            raise ParseError(f"{loc}.coeff", "missing")
        c = _coeff(rec["coeff"], f"{loc}.coeff")
        key = (i, j, k)
        if key in seen:
            raise ParseError(
                loc, f"duplicate bracket record (i={i + 1}, j={j + 1}, k={k + 1}), first at $.brackets[{seen[key]}]"
            )
        seen[key] = n
        brackets.setdefault((i, j), []).append((k, c))
    name = doc.get("name", "")
    return LieAlgebra(dim, brackets, tuple(labels), name if isinstance(name, str) else "")


def _read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(str(path), exc.strerror or str(exc)) from None
    try:
        return json.loads(text), text
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}:{exc.lineno}:{exc.colno}", exc.msg) from None


def load_algebra(path) -> LieAlgebra:
    doc, _ = _read_json(path)
    return parse_algebra(doc)


def _fstr(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def algebra_to_dict(L: LieAlgebra) -> dict:
    records = []
    for (i, j), terms in sorted(L.brackets.items()):
        for k, c in terms:
            records.append({"i": i + 1, "j": j + 1, "k": k + 1, "coeff": _fstr(c)})
    doc = {"dim": L.dim, "basis": list(L.basis_labels), "brackets": records}
    if L.name:
        doc = {"name": L.name, **doc}
    return doc


def dump_algebra(L: LieAlgebra) -> str:
    return _dumps(algebra_to_dict(L))


def parse_family(doc, dim=None) -> ContractionFamily:
    if not isinstance(doc, dict):
        raise ParseError("$", "family file must be a JSON object")
    kind = doc.get("type")
    if kind == "diagonal":
        ws = doc.get("weights")
        if not isinstance(ws, list):
            raise ParseError("$.weights", "expected a list of integers")
        for n, w in enumerate(ws):
            if isinstance(w, bool) or not isinstance(w, int):
                raise ParseError(f"$.weights[{n}]", f"expected an integer, got {w!r}")
        fam = ContractionFamily.diagonal(ws)
    elif kind == "matrix":
        entries = doc.get("entries")
        if not isinstance(entries, list) or not all(isinstance(r, list) for r in entries):
            raise ParseError("$.entries", "expected a list of rows")
        size = len(entries)
        rows = []
        for a, row in enumerate(entries):
            if len(row) != size:
                raise ParseError(f"$.entries[{a}]", f"row has {len(row)} entries, expected {size}")
            parsed = []
            for b, text in enumerate(row):
                try:
                    parsed.append(parse_ratfunc(text))
                except ValueError as exc:
                    raise ParseError(f"$.entries[{a}][{b}]", str(exc)) from None
            rows.append(parsed)
        try:
            fam = ContractionFamily.from_matrix(rows)
        except SingularFamily as exc:
            raise ParseError("$.entries", str(exc)) from None
    else:
        raise ParseError("$.type", f"expected 'diagonal' or 'matrix', got {kind!r}")
    if dim is not None and fam.n != dim:
        raise ParseError("$", f"family has size {fam.n}, algebra has dimension {dim}")
    return fam


def load_family(path, dim=None) -> ContractionFamily:
    doc, _ = _read_json(path)
    return parse_family(doc, dim)


def family_to_dict(fam: ContractionFamily) -> dict:
    if fam.weights is not None:
        return {"type": "diagonal", "weights": list(fam.weights)}
    return {"type": "matrix", "entries": [[str(x) for x in row] for row in fam.matrix]}


def digest(path) -> str:
    with open(path, "rb") as fh:
        return "sha256:" + hashlib.sha256(fh.read()).hexdigest()


def _dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def dump_report(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
