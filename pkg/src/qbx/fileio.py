"""Reading and writing presentation files (JSON, schema ``qbx/1``).

A file looks like::

    {"schema": "qbx/1",
     "generators": ["x1", "x2", "x3", "x4"],
     "field": "rational",
     "relations": [{"lhs": ["x4", "x2"], "coeff": "1/1", "rhs": ["x1", "x3"]}]}

The order of ``generators`` is the declared base order. ``field`` is
optional and defaults to the rationals.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .core import Field, InputError, format_scalar
from .presentation import Presentation

SCHEMA = "qbx/1"


def _scalar(field: Field, text, where: str):
    if not isinstance(text, (str, int)) or isinstance(text, bool):
        raise InputError("%s: coefficient must be a fraction string, got %r" % (where, text))
    try:
        q = Fraction(text) if isinstance(text, int) else Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InputError("%s: bad coefficient %r" % (where, text)) from None
    if q == 0:
        raise InputError("%s: zero coefficient" % where)
    try:
        value = field(q)
    except ZeroDivisionError:
        raise InputError("%s: coefficient %s is not defined in %s" % (where, text, field.describe())) from None
    if not value:
        raise InputError("%s: zero coefficient (%s vanishes in %s)" % (where, text, field.describe()))
    return value


def loads(text: str, field: Field | None = None) -> Presentation:
    """Parse a presentation from JSON text; ``field`` overrides the file's."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("syntax error at line %d, column %d: %s" % (exc.lineno, exc.colno, exc.msg)) from None
    if not isinstance(doc, dict):
        raise InputError("top level must be an object")
    schema = doc.get("schema", SCHEMA)
    if schema != SCHEMA:
        raise InputError("unsupported schema %r (expected %r)" % (schema, SCHEMA))
    names = doc.get("generators")
    if not isinstance(names, list) or not all(isinstance(s, str) for s in names):
        raise InputError("'generators' must be a list of names")
    if "n" in doc and doc["n"] != len(names):
        raise InputError("'n' is %r but %d generators are listed" % (doc["n"], len(names)))
    if field is None:
        field = Field.parse(doc.get("field", "rational"))
    index = {s: i for i, s in enumerate(names)}
    if len(index) != len(names):
        raise InputError("generator names must be distinct")
    rels = []
    for k, entry in enumerate(doc.get("relations", [])):
        where = "relation %d" % (k + 1)
        if not isinstance(entry, dict) or not {"lhs", "rhs"} <= set(entry):
            raise InputError("%s: expected an object with 'lhs' and 'rhs'" % where)
        sides = []
        for key in ("lhs", "rhs"):
            word = entry[key]
            if not isinstance(word, list) or len(word) != 2:
                raise InputError("%s: %s must list two generators" % (where, key))
            for s in word:
                if s not in index:
                    raise InputError("%s: unknown generator %r" % (where, s))
            sides.append(tuple(index[s] for s in word))
        c = _scalar(field, entry.get("coeff", "1/1"), where)
        rels.append((sides[0], c, sides[1]))
    return Presentation(len(names), tuple(rels), tuple(names), field)


def load(path, field: Field | None = None) -> Presentation:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc.strerror)) from None
    return loads(text, field)


def to_document(p: Presentation) -> dict:
    return {
        "schema": SCHEMA,
        "generators": list(p.names),
        "field": p.field.describe(),
        "relations": [
            {"lhs": [p.names[a] for a in r.lhs], "coeff": format_scalar(r.coeff), "rhs": [p.names[a] for a in r.rhs]}
            for r in p.relations
        ],
    }


def dumps(p: Presentation) -> str:
    return json.dumps(to_document(p), indent=2, ensure_ascii=False) + "\n"


parse = loads
render = dumps
