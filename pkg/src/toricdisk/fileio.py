"""Geometry files, catalog references and result tables.

Geometry files are JSON::

    {"name": ..., "k": 1, "r": 4,
     "charge_vectors": [[-1, -1, 1, 1]],
     "max_cones": [[1, 2, 3], [1, 2, 4]],
     "rays": [[0, 0, 1], ...],                       (optional)
     "branes": [{"label": "I", "kind": "inner", "i1": 4, "i2": 1, "i3": 2, "i4": 3}]}

Indices are 1-based.  ``catalog:NAME`` (and ``catalog:Ym?m=3``) resolve to the
built-in geometries without touching the file system.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from urllib.parse import parse_qs

from . import catalog
from .toric import INNER, BraneSpec, ToricCY3, validate


class InputError(ValueError):
    """Unreadable, malformed or invalid input (exit status 2)."""


# --- geometry files --------------------------------------------------------------

def _int(x, what):
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError(f"{what} must be an integer, got {x!r}")
    return x


def _int_rows(rows, what):
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputError(f"{what} must be a list of integer lists")
    return tuple(tuple(_int(x, what) for x in r) for r in rows)


def geometry_from_dict(data: dict) -> tuple:
    """Parse and validate a geometry document; returns ``(ToricCY3, branes)``."""
    if not isinstance(data, dict):
        raise InputError("geometry file must contain a JSON object")
    for key in ("name", "charge_vectors", "max_cones"):
        if key not in data:
            raise InputError(f"geometry file is missing {key!r}")
    charge = _int_rows(data["charge_vectors"], "charge_vectors")
    cones = _int_rows(data["max_cones"], "max_cones")
    rays = _int_rows(data["rays"], "rays") if data.get("rays") is not None else None
    k = _int(data.get("k", len(charge)), "k")
    r = _int(data.get("r", len(charge[0]) if charge else 0), "r")
    if k != len(charge) or any(len(row) != r for row in charge):
        raise InputError(f"charge_vectors must be {k} rows of {r} integers")
    for c in cones:
        if len(c) != 3 or len(set(c)) != 3 or any(not 1 <= i <= r for i in c):
            raise InputError(f"max cone {list(c)} must have 3 distinct ray indices in 1..{r}")
    g = ToricCY3(str(data["name"]), charge, tuple(frozenset(c) for c in cones), rays)
    rep = validate(g)
    if not rep.ok:
        raise InputError(f"invalid geometry {g.name}:\n{rep}")
    out = []
    for entry in data.get("branes", []):
        if not isinstance(entry, dict):
            raise InputError("each brane must be a JSON object")
        try:
            kind = entry["kind"]
            idx = [_int(entry[key], key) for key in ("i1", "i2", "i3")]
        except KeyError as exc:
            raise InputError(f"brane entry is missing {exc.args[0]!r}")
        i4 = entry.get("i4")
        b = BraneSpec(kind, *idx, _int(i4, "i4") if i4 is not None else None,
                      0, str(entry.get("label", "")))
        rep = validate(g, b)
        if not rep.ok:
            raise InputError(f"invalid brane {b.label!r}:\n{rep}")
        out.append(b)
    labels = [b.label for b in out]
    if len(set(labels)) != len(labels):
        raise InputError("brane labels must be unique")
    return g, tuple(out)


def geometry_to_dict(g: ToricCY3, branes) -> dict:
    doc = {
        "name": g.name,
        "k": g.k,
        "r": g.r,
        "charge_vectors": [list(row) for row in g.charge],
        "max_cones": [sorted(c) for c in sorted(g.max_cones, key=sorted)],
    }
    if g.rays is not None:
        doc["rays"] = [list(v) for v in g.rays]
    doc["branes"] = []
    for b in branes:
        e = {"label": b.label, "kind": b.kind, "i1": b.i1, "i2": b.i2, "i3": b.i3}
        if b.kind == INNER:
            e["i4"] = b.i4
        doc["branes"].append(e)
    return doc


def _catalog(ref: str) -> tuple:
    name, _, query = ref.partition("?")
    params = parse_qs(query)
    try:
        if name in ("Ym", "Y_m") and "m" in params:
            g = catalog.y_m(int(params["m"][-1]))
        else:
            g = catalog.geometry(name)
    except (KeyError, ValueError) as exc:
        raise InputError(str(exc.args[0]) if exc.args else str(exc))
    return g, catalog.branes(g)


def load_geometry(source: str) -> tuple:
    """``catalog:NAME[?m=M]`` or a path to a JSON geometry file."""
    if source.startswith("catalog:"):
        return _catalog(source[len("catalog:"):])
    try:
        with open(source, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror}")
    except json.JSONDecodeError as exc:
        raise InputError(f"{source} is not valid JSON: {exc}")
    return geometry_from_dict(data)


def find_brane(branes, label: str, f: int = 0) -> BraneSpec:
    for b in branes:
        if b.label == label:
            return b.framed(f)
    known = ", ".join(b.label for b in branes) or "none"
    raise InputError(f"unknown brane {label!r} (known: {known})")


# --- result tables -----------------------------------------------------------------

def rational(x) -> str:
    """Lowest-terms rendering: ``"p/q"``, or ``"p"`` for integers."""
    return str(Fraction(x))


@dataclass
class ResultTable:
    columns: list
    rows: list = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    @classmethod
    def from_series(cls, s, names, metadata=None, prefix=()):
        """One row per stored monomial; ``prefix`` is prepended to every row."""
        rows = [list(prefix) + list(e) + [rational(c)] for e, c in s.sorted_items()]
        return cls(list(names) + ["value"], rows, dict(metadata or {}))

    def to_json(self) -> str:
        doc = {"metadata": self.metadata, "columns": self.columns,
               "rows": sorted(self.rows, key=_row_key)}
        return json.dumps(doc, indent=1, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.columns)
        w.writerows(sorted(self.rows, key=_row_key))
        return buf.getvalue()

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        raise InputError(f"unknown format {fmt!r}")


def _row_key(row):
    # integers first in numeric order, strings after them
    return tuple((0, x, "") if isinstance(x, int) else (1, 0, str(x)) for x in row)


def variable_names(k: int, open_direction: bool = True) -> list:
    return (["w"] if open_direction else []) + [f"d{a}" for a in range(1, k + 1)]

