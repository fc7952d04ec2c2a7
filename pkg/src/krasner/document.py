"""Versioned JSON documents for Krasner structures.

Grades are strings ``"p/q"``, never JSON numbers. Fuzzy subsets are lists of
``[label, grade]`` pairs for the positively graded elements. Every table tuple
must be listed; nothing is defaulted.
"""
from __future__ import annotations

import hashlib
import itertools
import json

from .errors import KrasnerError, ParseError
from .fuzzy import MODES, Carrier, FuzzySubset, ZERO, format_grade, grade
from .hyperstructure import HyperOperationTable, KrasnerStructure

FORMAT = "krasner-structure"
VERSION = 1


def _fuzzy_json(mu: FuzzySubset) -> list:
    return [[a, format_grade(g)] for a, g in mu.items()]


def _table_lines(T: HyperOperationTable) -> list:
    return [json.dumps({"args": list(args), "value": _fuzzy_json(mu)}, ensure_ascii=False)
            for args, mu in zip(T.tuples(), T.entries)]


def serialize(R: KrasnerStructure) -> str:
    """Canonical text: fixed key order, one table entry per line."""
    head = [
        ("format", FORMAT),
        ("version", VERSION),
        ("name", R.name),
        ("carrier", list(R.carrier.labels)),
        ("m", R.m),
        ("n", R.n),
        ("identity", R.identity),
        ("scalar_identity", R.scalar_identity),
        ("negation", {a: b for a, b in zip(R.carrier.labels, R.negation)}),
        ("equality_mode", R.equality_mode),
    ]
    lines = ["{"]
    for key, value in head:
        lines.append(f"  {json.dumps(key)}: {json.dumps(value, ensure_ascii=False)},")
    for key, T in (("f", R.f), ("g", R.g)):
        body = _table_lines(T)
        lines.append(f"  {json.dumps(key)}: [")
        lines.extend("    " + line + ("," if i < len(body) - 1 else "") for i, line in enumerate(body))
        lines.append("  ]," if key == "f" else "  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def digest(R: KrasnerStructure) -> str:
    return hashlib.sha256(serialize(R).encode("utf-8")).hexdigest()


def _require(doc, key, kind, path=None):
    if key not in doc:
        raise ParseError(f"missing field {key!r}", path=path or key)
    value = doc[key]
    if kind is not None and not isinstance(value, kind):
        raise ParseError(f"field {key!r} has the wrong type", path=path or key)
    return value


def _parse_grade(value, path) -> object:
    if not isinstance(value, str):
        raise ParseError("grades must be strings of the form 'p/q'", path=path)
    try:
        return grade(value)
    except KrasnerError as exc:
        raise ParseError(str(exc), path=path) from None


def _parse_fuzzy(carrier, value, path) -> FuzzySubset:
    if not isinstance(value, list):
        raise ParseError("fuzzy subset must be a list of [label, grade] pairs", path=path)
    grades = [ZERO] * len(carrier)
    seen = set()
    for j, pair in enumerate(value):
        if not (isinstance(pair, list) and len(pair) == 2):
            raise ParseError("expected a [label, grade] pair", path=f"{path}[{j}]")
        label, g = pair
        if label not in carrier:
            raise ParseError(f"unknown element {label!r}", path=f"{path}[{j}]")
        if label in seen:
            raise ParseError(f"element {label!r} graded twice", path=f"{path}[{j}]")
        seen.add(label)
        grades[carrier.index(label)] = _parse_grade(g, f"{path}[{j}][1]")
    mu = FuzzySubset(carrier, tuple(grades))
    if not mu.is_nonzero():
        raise ParseError("table entries must be non-zero fuzzy subsets", path=path)
    return mu


def _parse_table(carrier, arity, entries, key) -> HyperOperationTable:
    if not isinstance(entries, list):
        raise ParseError("table must be a list of entries", path=key)
    mapping = {}
    for i, entry in enumerate(entries):
        path = f"{key}[{i}]"
        if not isinstance(entry, dict):
            raise ParseError("table entry must be an object", path=path)
        args = _require(entry, "args", list, f"{path}.args")
        if len(args) != arity:
            raise ParseError(f"expected {arity} arguments", path=f"{path}.args")
        for a in args:
            if a not in carrier:
                raise ParseError(f"unknown element {a!r}", path=f"{path}.args")
        t = tuple(args)
        if t in mapping:
            raise ParseError(f"duplicate entry for {t}", path=path)
        mapping[t] = _parse_fuzzy(carrier, _require(entry, "value", None, f"{path}.value"), f"{path}.value")
    for t in itertools.product(carrier.labels, repeat=arity):
        if t not in mapping:
            raise ParseError(f"table {key} is not total: missing entry for {list(t)}", path=key)
    return HyperOperationTable.from_mapping(carrier, arity, mapping)


def parse(text: str) -> KrasnerStructure:
    """Parse a structure document; errors carry a line/column or a field path."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"syntax error: {exc.msg}", line=exc.lineno, column=exc.colno) from None
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object", line=1, column=1)
    if doc.get("format") != FORMAT:
        raise ParseError(f"not a {FORMAT} document", path="format")
    if doc.get("version") != VERSION:
        raise ParseError(f"unsupported version {doc.get('version')!r}", path="version")
    labels = _require(doc, "carrier", list)
    if not labels or not all(isinstance(a, str) for a in labels):
        raise ParseError("carrier must be a non-empty list of string labels", path="carrier")
    if len(set(labels)) != len(labels):
        dup = next(a for a in labels if labels.count(a) > 1)
        raise ParseError(f"duplicate label {dup!r}", path="carrier")
    carrier = Carrier(tuple(labels))
    m = _require(doc, "m", int)
    n = _require(doc, "n", int)
    if m < 2 or n < 2:
        raise ParseError("arities must be at least 2", path="m" if m < 2 else "n")
    identity = _require(doc, "identity", str)
    if identity not in carrier:
        raise ParseError(f"identity {identity!r} is not in the carrier", path="identity")
    ep = doc.get("scalar_identity")
    if ep is not None and ep not in carrier:
        raise ParseError(f"scalar identity {ep!r} is not in the carrier", path="scalar_identity")
    neg = _require(doc, "negation", dict)
    for a in labels:
        if a not in neg:
            raise ParseError(f"negation has no image for {a!r}", path="negation")
        if neg[a] not in carrier:
            raise ParseError(f"negation image {neg[a]!r} is not in the carrier", path=f"negation.{a}")
    if set(neg) - set(labels):
        raise ParseError("negation mentions unknown elements", path="negation")
    mode = doc.get("equality_mode", "support")
    if mode not in MODES:
        raise ParseError(f"unknown equality mode {mode!r}", path="equality_mode")
    f = _parse_table(carrier, m, _require(doc, "f", list), "f")
    g = _parse_table(carrier, n, _require(doc, "g", list), "g")
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise ParseError("name must be a string", path="name")
    return KrasnerStructure(carrier, f, g, identity, dict(neg), ep, mode, name=name)


def load(path) -> KrasnerStructure:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def dump(R: KrasnerStructure, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(R))
