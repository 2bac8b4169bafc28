"""Hypergraph file formats.

Text form: a header line ``k n m`` followed by m lines of k whitespace-separated 0-based
vertex indices. Blank lines and ``#`` comments are ignored. JSON form:
``{"k": 3, "n": 5, "edges": [[0, 1, 2], [2, 3, 4]]}``.
"""

from __future__ import annotations

import json
import re

from .core import Hypergraph
from .errors import HypergraphError, HypergraphSyntaxError


def _ints(line: str, lineno: int) -> list[int]:
    out = []
    for tok in re.finditer(r"\S+", line):
        try:
            out.append(int(tok.group()))
        except ValueError:
            raise HypergraphSyntaxError(f"expected an integer, got {tok.group()!r}",
                                        line=lineno, column=tok.start() + 1) from None
    return out


def _parse_json(text: str) -> Hypergraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise HypergraphSyntaxError(exc.msg, line=exc.lineno, column=exc.colno) from None
    if "hypergraph" in obj and isinstance(obj["hypergraph"], dict):
        obj = obj["hypergraph"]
    try:
        k, n, edges = int(obj["k"]), int(obj["n"]), [list(map(int, e)) for e in obj["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise HypergraphSyntaxError(f"structured form needs integer 'k', 'n' and 'edges': {exc}", line=1) from None
    if "m" in obj and int(obj["m"]) != len(edges):
        raise HypergraphSyntaxError(f"'m' is {obj['m']} but {len(edges)} edges given", line=1)
    return Hypergraph(k, n, tuple(tuple(e) for e in edges))


def parse(text: str) -> Hypergraph:
    """Read either format. Validation errors carry the offending line number."""
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    rows: list[tuple[int, list[int]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if line.strip():
            rows.append((lineno, _ints(line, lineno)))
    if not rows:
        raise HypergraphSyntaxError("empty input", line=1)
    head_line, head = rows[0]
    if len(head) != 3:
        raise HypergraphSyntaxError(f"header must be 'k n m', got {len(head)} fields", line=head_line)
    k, n, m = head
    body = rows[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] + 1 if body else head_line + 1)
        raise HypergraphSyntaxError(f"header announces {m} edges, found {len(body)}", line=where)
    try:
        return Hypergraph(k, n, tuple(tuple(e) for _, e in body))
    except HypergraphError as exc:
        if exc.edge_index is not None:
            exc.line = body[exc.edge_index][0]
        raise


def serialize(H: Hypergraph, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(to_dict(H))
    lines = [f"{H.k} {H.n} {H.m}"]
    lines.extend(" ".join(map(str, e)) for e in H.edges)
    return "\n".join(lines) + "\n"


def to_dict(H: Hypergraph) -> dict:
    return {"k": H.k, "n": H.n, "m": H.m, "edges": [list(e) for e in H.edges]}


def read(path: str) -> Hypergraph:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())
