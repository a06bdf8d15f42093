"""Reading complexes from JSON or plain text, and dumping/loading models."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from types import MappingProxyType
from typing import List, Optional, Sequence

from .at_model import ATModel
from .fixtures import FIXTURES
from .simplicial import FilteredComplex, close_complex


class ParseError(ValueError):
    def __init__(self, message, line=None, column=None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.column = column


@dataclass
class ComplexDocument:
    maximal_simplices: List[List[int]]
    name: Optional[str] = None
    filtration: Optional[List[List[int]]] = None
    model: Optional[dict] = None

    def to_complex(self, order: str = "lex") -> FilteredComplex:
        if order == "input":
            if self.filtration is None:
                raise ParseError("order 'input' needs a 'filtration' entry in the document")
            return close_complex(self.maximal_simplices, order="input",
                                 filtration=self.filtration)
        return close_complex(self.maximal_simplices, order=order)


def _int_lists(value, what: str) -> List[List[int]]:
    if not isinstance(value, list):
        raise ParseError(f"'{what}' must be a list of vertex lists")
    out = []
    for i, row in enumerate(value):
        if not isinstance(row, list) or not row or not all(
                isinstance(v, int) and not isinstance(v, bool) for v in row):
            raise ParseError(f"'{what}' entry {i} is not a non-empty list of integers")
        out.append(list(row))
    return out


def parse_json(text: str) -> ComplexDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict) or "maximal_simplices" not in data:
        raise ParseError("expected an object with a 'maximal_simplices' list")
    maximal = _int_lists(data["maximal_simplices"], "maximal_simplices")
    filtration = data.get("filtration")
    if filtration is not None:
        filtration = _int_lists(filtration, "filtration")
    model = data.get("model")
    return ComplexDocument(maximal, data.get("name"), filtration, model)


def parse_text(text: str) -> ComplexDocument:
    """One maximal simplex per line as whitespace-separated labels; '#' starts a comment."""
    maximal = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        row = []
        col = 1
        for tok in line.split():
            col = raw.index(tok, col - 1) + 1
            try:
                row.append(int(tok))
            except ValueError:
                raise ParseError(f"not an integer vertex label: {tok!r}", lineno, col) from None
            col += len(tok)
        maximal.append(row)
    return ComplexDocument(maximal)


def parse_document(text: str, fmt: Optional[str] = None) -> ComplexDocument:
    if fmt is None:
        fmt = "json" if text.lstrip().startswith(("{", "[")) else "text"
    return parse_json(text) if fmt == "json" else parse_text(text)


def load_document(source: str) -> ComplexDocument:
    """Read a file, or a bundled fixture when ``source`` names one and no such file exists."""
    path = Path(source)
    if not path.exists() and source in FIXTURES:
        return ComplexDocument([list(m) for m in FIXTURES[source]], name=source)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {source}: {exc.strerror}") from None
    fmt = "json" if path.suffix == ".json" else None
    doc = parse_document(text, fmt)
    if doc.name is None:
        doc.name = path.stem
    return doc


def _chains(mapping) -> list:
    out = []
    for s in sorted(mapping, key=lambda s: (len(s), s)):
        out.append([list(s), [list(t) for t in sorted(mapping[s])]])
    return out


def dump_model(model: ATModel, name: Optional[str] = None, tau: str = "largest") -> dict:
    K = model.complex
    return {
        "name": name,
        "maximal_simplices": [list(s) for s in K.maximal_simplices()],
        "filtration": [list(s) for s in K],
        "model": {
            "tau": tau,
            "generators": [list(s) for s in model.generators],
            "f": _chains(model.f),
            "phi": _chains(model.phi),
        },
    }


def load_model(doc: ComplexDocument) -> ATModel:
    """Rebuild a stored model verbatim (no recomputation)."""
    if doc.model is None:
        raise ParseError("document has no stored model")
    K = doc.to_complex("input") if doc.filtration is not None else doc.to_complex()

    def read(entries: Sequence) -> dict:
        out = {}
        for s, img in entries:
            out[tuple(s)] = frozenset(tuple(t) for t in img)
        return out

    try:
        return ATModel(K, MappingProxyType(read(doc.model["f"])),
                       MappingProxyType(read(doc.model["phi"])),
                       tuple(tuple(s) for s in doc.model["generators"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed model: {exc}") from None
