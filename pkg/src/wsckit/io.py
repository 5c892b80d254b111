"""JSON and text input/output for complexes, weighted complexes, ideals and graphs.

JSON shapes::

    {"n": 3, "facets": [[0, 1], [2]]}                      complex
    {"n": 3, "facets": [[0, 1], [2]], "weights": [1,2,1]}  weighted complex
    {"n": 3, "gens": [[2, 3, 0], [0, 3, 4]]}               monomial ideal
    {"n": 4, "edges": [[0, 1], [1, 2]]}                    graph (optional "weights")

Any of them may carry ``"names": [...]`` (one string per vertex/variable).
Ideals are also accepted as text, e.g. ``x1^2*x2^3, x2^3*x3^4``.
"""

from __future__ import annotations

import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Union

from .complex import SimplicialComplex
from .errors import ParseError
from .monomial import Graph, MonomialIdeal, check_weights, format_ideal
from .weighted import WeightedComplex

DomainObject = Union[SimplicialComplex, WeightedComplex, MonomialIdeal, Graph]


@dataclass(frozen=True)
class Parsed:
    """A parsed domain object with its optional name table and graph weights."""

    value: DomainObject
    names: tuple[str, ...] | None = None
    weights: tuple[int, ...] | None = None

    @property
    def kind(self) -> str:
        return kind_of(self.value)


def kind_of(obj: Any) -> str:
    if isinstance(obj, WeightedComplex):
        return "weighted_complex"
    if isinstance(obj, SimplicialComplex):
        return "complex"
    if isinstance(obj, MonomialIdeal):
        return "ideal"
    if isinstance(obj, Graph):
        return "graph"
    raise TypeError(f"not a domain object: {type(obj).__name__}")


# -- JSON -----------------------------------------------------------------


def _int(value: Any, field: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"expected an integer, got {value!r}", field=field)
    return value


def _int_list(value: Any, field: str) -> list[int]:
    if not isinstance(value, list):
        raise ParseError(f"expected a list, got {type(value).__name__}", field=field)
    return [_int(x, field) for x in value]


def _list_of_lists(value: Any, field: str) -> list[list[int]]:
    if not isinstance(value, list):
        raise ParseError(f"expected a list of lists, got {type(value).__name__}", field=field)
    return [_int_list(x, field) for x in value]


def _names(data: dict, n: int) -> tuple[str, ...] | None:
    if "names" not in data:
        return None
    names = data["names"]
    if not isinstance(names, list) or not all(isinstance(s, str) and s for s in names):
        raise ParseError("names must be a list of nonempty strings", field="names")
    if len(names) != n:
        raise ParseError(f"{len(names)} names for n={n}", field="names")
    if len(set(names)) != n:
        raise ParseError("names must be distinct", field="names")
    return tuple(names)


def _weights(data: dict, n: int) -> tuple[int, ...]:
    w = _int_list(data["weights"], "weights")
    if len(w) != n:
        raise ParseError(f"{len(w)} weights for n={n}", field="weights")
    return check_weights(w, n)


def from_json_data(data: Any) -> Parsed:
    """Build a domain object from decoded JSON."""
    if not isinstance(data, dict):
        raise ParseError("top level must be a JSON object")
    if "n" not in data:
        raise ParseError("missing vertex/variable count", field="n")
    n = _int(data["n"], "n")
    if n < 0:
        raise ParseError(f"negative n={n}", field="n")
    names = _names(data, n)
    kinds = [k for k in ("facets", "gens", "edges") if k in data]
    if len(kinds) != 1:
        raise ParseError("expected exactly one of 'facets', 'gens', 'edges'")
    kind = kinds[0]
    if kind == "facets":
        c = SimplicialComplex.from_facets(n, _list_of_lists(data["facets"], "facets"))
        if "weights" in data:
            return Parsed(WeightedComplex(c, _weights(data, n)), names)
        return Parsed(c, names)
    if kind == "gens":
        gens = _list_of_lists(data["gens"], "gens")
        for g in gens:
            if len(g) != n:
                raise ParseError(f"generator {g} has {len(g)} exponents, expected {n}", field="gens")
        return Parsed(MonomialIdeal(n, gens), names)
    edges = _list_of_lists(data["edges"], "edges")
    for e in edges:
        if len(e) != 2:
            raise ParseError(f"edge {e} does not have two ends", field="edges")
    weights = _weights(data, n) if "weights" in data else None
    return Parsed(Graph(n, edges), names, weights)


def to_json_data(obj: DomainObject | Parsed, names=None, weights=None) -> dict:
    """Inverse of :func:`from_json_data`."""
    if isinstance(obj, Parsed):
        names = obj.names if names is None else names
        weights = obj.weights if weights is None else weights
        obj = obj.value
    out = obj.to_json()
    if weights is not None and isinstance(obj, Graph):
        out["weights"] = list(weights)
    if names is not None:
        out["names"] = list(names)
    return out


def dumps(obj: DomainObject | Parsed, **kw) -> str:
    return json.dumps(to_json_data(obj, **kw), sort_keys=True)


# -- text ideals -----------------------------------------------------------

_FACTOR = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\^\s*(\d+))?\s*$")
_XK = re.compile(r"x(\d+)$")


def parse_ideal_text(text: str, names: tuple[str, ...] | None = None) -> Parsed:
    """Parse ``x1^2*x2^3, x2^3*x3^4`` (commas or newlines separate generators).

    With only ``x<k>`` names the ring is ``k[x1..x_max]``; otherwise variables
    are numbered in order of first appearance and the names are kept.
    """
    body = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    stripped = body.strip()
    if stripped.startswith("(") and stripped.endswith(")"):
        # blank out the outer parentheses without disturbing line numbers
        first, last = body.index("("), body.rindex(")")
        body = body[:first] + " " + body[first + 1 : last] + " " + body[last + 1 :]
    raw: list[tuple[int, str]] = []
    for lineno, line in enumerate(body.splitlines(), start=1):
        for chunk in line.split(","):
            if chunk.strip():
                raw.append((lineno, chunk.strip()))
    if not raw:
        raise ParseError("no generators", line=1)
    # "0" alone is the zero ideal; any number of variables is then fine
    if all(chunk == "0" for _, chunk in raw):
        return Parsed(MonomialIdeal.zero(len(names) if names else 0), names)
    monos: list[tuple[int, list[tuple[str, int]]]] = []
    for lineno, chunk in raw:
        if chunk == "1":
            monos.append((lineno, []))
            continue
        factors = []
        for part in chunk.split("*"):
            m = _FACTOR.match(part)
            if not m:
                raise ParseError(f"cannot read factor {part.strip()!r}", line=lineno)
            exp = int(m.group(2)) if m.group(2) is not None else 1
            factors.append((m.group(1), exp))
        monos.append((lineno, factors))

    seen = [v for _, fs in monos for v, _ in fs]
    if names is not None:
        index = {s: i for i, s in enumerate(names)}
        unknown = [v for v in seen if v not in index]
        if unknown:
            raise ParseError(f"unknown variable {unknown[0]!r}", field="names")
        n = len(names)
    elif all(_XK.match(v) and int(_XK.match(v).group(1)) >= 1 for v in seen):
        index = {v: int(_XK.match(v).group(1)) - 1 for v in seen}
        n = max(index.values(), default=-1) + 1
    else:
        order = list(dict.fromkeys(seen))
        index = {v: i for i, v in enumerate(order)}
        names = tuple(order)
        n = len(order)
    gens = []
    for _, fs in monos:
        e = [0] * n
        for v, k in fs:
            e[index[v]] += k
        gens.append(e)
    return Parsed(MonomialIdeal(n, gens), names)


def ideal_to_text(ideal: MonomialIdeal, names=None) -> str:
    return format_ideal(ideal, names)[1:-1]


# -- entry point -----------------------------------------------------------


def parse_text(text: str) -> Parsed:
    """JSON if the text looks like a JSON object, otherwise the monomial grammar."""
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
        return from_json_data(data)
    return parse_ideal_text(text)


def parse_input(source: str | Path) -> Parsed:
    """Read a path, or standard input when ``source`` is ``"-"``."""
    if str(source) == "-":
        return parse_text(sys.stdin.read())
    try:
        text = Path(source).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {source}: {exc.strerror}") from None
    return parse_text(text)
