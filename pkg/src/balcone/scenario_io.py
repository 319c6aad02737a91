"""Read and write scenario documents (JSON, UTF-8).

Document layout::

    {
      "ambient": [4, 1],
      "divisors": [[1, 1], [4, 1]],
      "h11_basis": [{"name": "α", "multidegree": [0, 1]}, ...],
      "codim_basis": [{"name": "α∧β", "expr": "α*β"}, ...],
      "kahler_cone": [[1, 0], [0, 1]],
      "effective_cone": [[1, 0], [-1, 1]],
      "prime_divisors": [{"name": "E1", "coords": [-1, 1]}, ...]
    }

``expr`` is a linear combination of products of h11 names with rational
coefficients, e.g. ``"β*β - 1/4*α*β"``.  Syntax errors report line and
column; semantic errors report the path of the offending node.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .cones import cone_new
from .errors import ScenarioError, ValidationError
from .pipeline import Scenario
from .ring import AmbientSpace, divisor_class
from .variety import CompleteIntersection

_NUMBER = re.compile(r"\d+(?:/\d+)?$")
_TOKEN = re.compile(r"\s*(\d+(?:/\d+)?|[+\-*]|[^\s+\-*/]+)")

DEMO_SCENARIO_DOCUMENT = {
    "ambient": [4, 1],
    "divisors": [[1, 1], [4, 1]],
    "h11_basis": [
        {"name": "α", "multidegree": [0, 1]},
        {"name": "β", "multidegree": [1, 0]},
    ],
    "codim_basis": [
        {"name": "α∧β", "expr": "α*β"},
        {"name": "β∧β", "expr": "β*β"},
    ],
    "kahler_cone": [[1, 0], [0, 1]],
    "effective_cone": [[1, 0], [-1, 1]],
    "prime_divisors": [
        {"name": "E1", "coords": [-1, 1]},
        {"name": "E2", "coords": [-1, 4]},
    ],
}

DEMO_SCENARIO_JSON = json.dumps(DEMO_SCENARIO_DOCUMENT, indent=2, ensure_ascii=False) + "\n"


def _require(doc, key, path):
    if key not in doc:
        raise ScenarioError("missing required key", path=f"{path}/{key}")
    return doc[key]


def _int_list(value, path, minimum=None):
    if not isinstance(value, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in value
    ):
        raise ScenarioError("expected a list of integers", path=path)
    if minimum is not None and any(x < minimum for x in value):
        raise ScenarioError(f"entries must be >= {minimum}", path=path)
    return value


def _int_pair(value, path):
    pair = _int_list(value, path)
    if len(pair) != 2:
        raise ScenarioError("expected a pair of integers", path=path)
    return tuple(pair)


def _cone(value, path):
    if not isinstance(value, list) or len(value) != 2:
        raise ScenarioError("expected two integer pairs", path=path)
    rays = [_int_pair(v, f"{path}/{i}") for i, v in enumerate(value)]
    try:
        return cone_new(rays[0], rays[1])
    except ValidationError as e:
        raise ScenarioError(str(e), path=path) from e


def _named_entries(value, path, value_key):
    if not isinstance(value, list):
        raise ScenarioError("expected a list of objects", path=path)
    out = []
    for i, item in enumerate(value):
        here = f"{path}/{i}"
        if not isinstance(item, dict):
            raise ScenarioError("expected an object", path=here)
        name = _require(item, "name", here)
        if not isinstance(name, str) or not name:
            raise ScenarioError("name must be a non-empty string", path=f"{here}/name")
        out.append((name, _require(item, value_key, here), here))
    return out


def parse_class_expr(expr, classes, space, path="expr"):
    """Parse a combination like ``"β*β - 1/4*α*β"`` against named degree-1 classes."""
    if not isinstance(expr, str) or not expr.strip():
        raise ScenarioError("expected a non-empty expression string", path=path)
    tokens = []
    pos = 0
    while pos < len(expr):
        m = _TOKEN.match(expr, pos)
        if m is None:
            break
        tokens.append(m.group(1))
        pos = m.end()
    if expr[pos:].strip():
        raise ScenarioError(f"cannot tokenize {expr[pos:].strip()!r}", path=path)

    total = space.zero()
    idx = 0

    def take_term(sign):
        nonlocal idx
        coeff = Fraction(sign)
        cls = space.one()
        while True:
            if idx >= len(tokens) or tokens[idx] in "+-*":
                raise ScenarioError("expected a name or number", path=path)
            tok = tokens[idx]
            if _NUMBER.match(tok):
                coeff *= Fraction(tok)
            elif tok in classes:
                cls = cls * classes[tok]
            else:
                raise ScenarioError(f"unknown class name {tok!r}", path=path)
            idx += 1
            if idx < len(tokens) and tokens[idx] == "*":
                idx += 1
                continue
            return coeff * cls

    sign = 1
    if tokens and tokens[0] in "+-":
        sign = 1 if tokens[0] == "+" else -1
        idx = 1
    total = total + take_term(sign)
    while idx < len(tokens):
        tok = tokens[idx]
        if tok == "+":
            sign = 1
        elif tok == "-":
            sign = -1
        else:
            raise ScenarioError(f"expected '+' or '-', got {tok!r}", path=path)
        idx += 1
        total = total + take_term(sign)
    return total


def document_to_scenario(doc) -> Scenario:
    """Validated scenario from a decoded JSON document."""
    if not isinstance(doc, dict):
        raise ScenarioError("document must be a JSON object", path="/")

    dims = _int_list(_require(doc, "ambient", ""), "/ambient")
    try:
        space = AmbientSpace(dims)
    except ValidationError as e:
        raise ScenarioError(str(e), path="/ambient") from e

    raw_divisors = _require(doc, "divisors", "")
    if not isinstance(raw_divisors, list):
        raise ScenarioError("expected a list of multidegrees", path="/divisors")
    divisors = [
        tuple(_int_list(d, f"/divisors/{i}", minimum=0)) for i, d in enumerate(raw_divisors)
    ]
    try:
        ci = CompleteIntersection(space, divisors)
    except ValidationError as e:
        raise ScenarioError(str(e), path="/divisors") from e

    h11_names, h11_classes = [], []
    for name, raw, here in _named_entries(_require(doc, "h11_basis", ""), "/h11_basis", "multidegree"):
        if any(ch in name for ch in "+-*/ \t"):
            raise ScenarioError(
                "h11 names may not contain arithmetic characters or spaces",
                path=f"{here}/name",
            )
        d = _int_list(raw, f"{here}/multidegree", minimum=0)
        if not any(d):
            raise ScenarioError(
                "multidegree must have a positive entry", path=f"{here}/multidegree"
            )
        try:
            cls = divisor_class(space, d)
        except ValidationError as e:
            raise ScenarioError(str(e), path=f"{here}/multidegree") from e
        h11_names.append(name)
        h11_classes.append(cls)
    named = dict(zip(h11_names, h11_classes))

    codim_names, codim_classes, codim_exprs = [], [], []
    for name, raw, here in _named_entries(_require(doc, "codim_basis", ""), "/codim_basis", "expr"):
        codim_names.append(name)
        codim_classes.append(parse_class_expr(raw, named, space, path=f"{here}/expr"))
        codim_exprs.append(raw)

    kahler = _cone(_require(doc, "kahler_cone", ""), "/kahler_cone")
    effective = _cone(_require(doc, "effective_cone", ""), "/effective_cone")

    primes = []
    if "prime_divisors" in doc:
        for name, raw, here in _named_entries(doc["prime_divisors"], "/prime_divisors", "coords"):
            primes.append((name, _int_pair(raw, f"{here}/coords")))

    try:
        return Scenario(
            ci=ci,
            h11_names=tuple(h11_names),
            h11_classes=tuple(h11_classes),
            codim_names=tuple(codim_names),
            codim_classes=tuple(codim_classes),
            kahler_cone=kahler,
            effective_cone=effective,
            prime_divisors=tuple(primes),
            codim_exprs=tuple(codim_exprs),
        )
    except ValidationError as e:
        raise ScenarioError(str(e), path="/") from e


def parse_scenario(text: str) -> Scenario:
    """Scenario from JSON text; locates syntax and semantic errors."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ScenarioError(e.msg, line=e.lineno, column=e.colno) from e
    return document_to_scenario(doc)


def _multidegree_of(cls):
    out = [0] * cls.space.nfactors
    for exp, coeff in cls.terms().items():
        if sum(exp) != 1 or coeff.denominator != 1 or coeff < 0:
            raise ValidationError(
                "degree-1 basis class is not a non-negative multidegree class"
            )
        out[exp.index(1)] = int(coeff)
    return out


def scenario_to_document(s: Scenario) -> dict:
    """Document form of a scenario; inverse of :func:`document_to_scenario`."""
    if s.codim_exprs is None:
        raise ValidationError("scenario carries no codim basis expressions to serialize")
    doc = {
        "ambient": list(s.ci.space.dims),
        "divisors": [list(d) for d in s.ci.divisors],
        "h11_basis": [
            {"name": n, "multidegree": _multidegree_of(c)}
            for n, c in zip(s.h11_names, s.h11_classes)
        ],
        "codim_basis": [
            {"name": n, "expr": e} for n, e in zip(s.codim_names, s.codim_exprs)
        ],
        "kahler_cone": [list(s.kahler_cone.r1.coords), list(s.kahler_cone.r2.coords)],
        "effective_cone": [
            list(s.effective_cone.r1.coords),
            list(s.effective_cone.r2.coords),
        ],
    }
    if s.prime_divisors:
        doc["prime_divisors"] = [
            {"name": n, "coords": list(c)} for n, c in s.prime_divisors
        ]
    return doc


def serialize_scenario(s: Scenario) -> str:
    return json.dumps(scenario_to_document(s), indent=2, ensure_ascii=False) + "\n"
