"""Reading and writing V-representation and report files.

Both are UTF-8 JSON with sorted keys.  Coordinates are strings ``"p"`` or
``"p/q"`` so that rationals survive the round trip exactly.
"""

import hashlib
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import __version__
from .exact import format_rational
from .lattice import Polytope

_RATIONAL = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")
_TOKEN = re.compile(r'"(?:[^"\\]|\\.)*"|-?\d+(?:\.\d+)?(?:[eE][+-]?\d+)?|[\[\]]')
EXPECTED_KEYS = ("connectivity", "facets", "simplicial")


class VRepParseError(ValueError):
    def __init__(self, message, line=None, column=None):
        where = "" if line is None else " (line %d, column %d)" % (line, column)
        super().__init__(message + where)
        self.line = line
        self.column = column


def parse_rational(token) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (integers also accepted) into a Fraction."""
    if isinstance(token, bool):
        raise ValueError("invalid rational %r" % (token,))
    if isinstance(token, int):
        return Fraction(token)
    if not isinstance(token, str):
        raise ValueError("invalid rational %r: coordinates must be \"p\" or \"p/q\" strings"
                         % (token,))
    m = _RATIONAL.match(token.strip())
    if not m:
        raise ValueError("invalid rational %r" % token)
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError("invalid rational %r: zero denominator" % token)
    return Fraction(int(m.group(1)), den)


@dataclass
class VRepDocument:
    ambient_dim: int
    points: list
    name: str = ""
    expected: dict = field(default_factory=dict)

    def to_json(self) -> str:
        doc = {"ambient_dim": self.ambient_dim,
               "points": [[format_rational(c) for c in p] for p in self.points]}
        if self.name:
            doc["name"] = self.name
        if self.expected:
            doc["expected"] = self.expected
        return json.dumps(doc, sort_keys=True, indent=1) + "\n"

    def digest(self) -> str:
        return hashlib.sha256(self.to_json().encode("utf-8")).hexdigest()

    def to_polytope(self, strict: bool = True) -> Polytope:
        return Polytope.from_points(self.points, self.ambient_dim, name=self.name, strict=strict)

    @classmethod
    def from_polytope(cls, p: Polytope, name: Optional[str] = None, expected=None):
        return cls(p.ambient_dim, [tuple(v) for v in p.vertices],
                   p.name if name is None else name, dict(expected or {}))


def _locate_coordinate(text: str, flat_index: int):
    """Line and column of the ``flat_index``-th coordinate token in "points"."""
    key = re.search(r'"points"\s*:', text)
    if key is None:
        return None, None
    depth = 0
    count = 0
    for m in _TOKEN.finditer(text, key.end()):
        tok = m.group(0)
        if tok == "[":
            depth += 1
        elif tok == "]":
            depth -= 1
            if depth == 0:
                break
        else:
            if count == flat_index:
                line = text.count("\n", 0, m.start()) + 1
                col = m.start() - (text.rfind("\n", 0, m.start()) + 1) + 1
                return line, col
            count += 1
    return None, None


def loads(text: str) -> VRepDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise VRepParseError("malformed JSON: %s" % err.msg, err.lineno, err.colno) from None
    if not isinstance(data, dict):
        raise VRepParseError("top level must be an object")
    for key in ("ambient_dim", "points"):
        if key not in data:
            raise VRepParseError("missing field %r" % key)
    d = data["ambient_dim"]
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise VRepParseError("ambient_dim must be a positive integer")
    raw = data["points"]
    if not isinstance(raw, list) or not all(isinstance(p, list) for p in raw):
        raise VRepParseError("points must be a list of coordinate lists")
    points = []
    flat = 0
    for i, row in enumerate(raw):
        if len(row) != d:
            raise VRepParseError("point %d has %d coordinates, expected %d" % (i, len(row), d))
        coords = []
        for tok in row:
            try:
                coords.append(parse_rational(tok))
            except ValueError as err:
                line, col = _locate_coordinate(text, flat)
                raise VRepParseError("%s at point %d" % (err, i), line, col) from None
            flat += 1
        points.append(tuple(coords))
    expected = data.get("expected") or {}
    unknown = set(expected) - set(EXPECTED_KEYS)
    if unknown:
        raise VRepParseError("unknown expected keys %s" % sorted(unknown))
    return VRepDocument(d, points, data.get("name", ""), expected)


def load(path) -> VRepDocument:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def dump(doc: VRepDocument, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(doc.to_json())


def check_expected(expected: dict, summary) -> list:
    """Mismatches between a document's ``expected`` block and a summary."""
    actual = {"connectivity": summary.connectivity,
              "facets": summary.f_vector[-1] if summary.f_vector else 0,
              "simplicial": summary.simplicial}
    return ["%s: expected %r, got %r" % (k, v, actual[k])
            for k, v in sorted(expected.items()) if actual[k] != v]


def report_document(summary, input_digest: str, seconds: float, seeds, extra=None) -> dict:
    doc = {"tool_version": __version__,
           "input_digest": input_digest,
           "timing_seconds": round(seconds, 6),
           "seeds": list(seeds),
           "summary": summary.to_dict()}
    if extra:
        doc.update(extra)
    return doc


def write_report(doc: dict, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, sort_keys=True, indent=1)
        fh.write("\n")
