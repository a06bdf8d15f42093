"""Report record shared by the CLI's text and JSON outputs."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, fields
from typing import Any, Dict, List, Optional


@dataclass
class Report:
    name: Optional[str] = None
    betti: Optional[List[int]] = None
    generators: Optional[List[List[int]]] = None
    cycles: Optional[Dict[str, List[List[int]]]] = None
    ring: Optional[List[Dict[str, Any]]] = None
    sq: Optional[Dict[str, Any]] = None
    psi2: Optional[Dict[str, Any]] = None
    reduction: Optional[Dict[str, Any]] = None
    verification: Optional[Dict[str, Any]] = None
    extra: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v is not None and v != {}}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown report keys: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))


def simplex_name(s) -> str:
    return "<" + ",".join(str(v) for v in s) + ">"


def chain_name(chain) -> str:
    if not chain:
        return "0"
    return " + ".join(simplex_name(s) for s in chain)


def render_text(r: Report) -> str:
    lines = []
    if r.name:
        lines.append(f"complex: {r.name}")
    if r.betti is not None:
        lines.append("betti: " + " ".join(f"b{q}={b}" for q, b in enumerate(r.betti)))
    if r.generators is not None:
        lines.append("generators: " + (", ".join(simplex_name(g) for g in r.generators) or "none"))
    if r.cycles:
        lines.append("representative cycles:")
        for key in r.cycles:
            lines.append(f"  g{key} = {chain_name(r.cycles[key])}")
    if r.ring is not None:
        lines.append("cup products (nonzero structure constants):")
        for t in r.ring:
            lines.append(f"  {simplex_name(t['alpha'])}* . {simplex_name(t['beta'])}* "
                         f"-> {simplex_name(t['gamma'])}*")
        if not r.ring:
            lines.append("  none")
    if r.sq is not None:
        s = r.sq
        lines.append(f"Sq^{s['i']}: H^{s['q']} -> H^{s['q'] + s['i']}  "
                     f"({len(s['matrix'])}x{len(s['source'])})")
        for row in s["matrix"]:
            lines.append("  [" + " ".join(str(x) for x in row) + "]")
        lines.append(f"  kernel basis: {_classes(s['kernel'])}")
        lines.append(f"  image basis:  {_classes(s['image'])}")
    if r.psi2 is not None:
        p = r.psi2
        lines.append(f"Psi_2({_class(p['input'])})  [E3 variant: {p['e3']}]")
        lines.append(f"  w = {chain_name(p['w'])}")
        lines.append(f"  [w] = {_class(p['w_class'])}")
        lines.append(f"  Im Sq^2 H^3 basis: {_classes(p['image'])}")
        lines.append(f"  coset representative: {_class(p['coset'])}")
        lines.append(f"  zero: {'yes' if p['is_zero'] else 'no'}")
    if r.reduction is not None:
        red = r.reduction
        lines.append(f"collapse thinning: {red['steps']} collapses, "
                     f"simplex counts {red['before']} -> {red['after']}")
        lines.append("  thinned maximal simplices: "
                     + ", ".join(simplex_name(s) for s in red["maximal"]))
        lines.append(f"  contraction verified: {red['verified']}, betti preserved: "
                     f"{red['betti_preserved']}")
    if r.verification is not None:
        v = r.verification
        lines.append(f"verification: {'ok' if v['ok'] else 'FAILED'}")
        for msg in v.get("violations", []):
            lines.append(f"  {msg}")
        for key in sorted(set(v) - {"ok", "violations"}):
            lines.append(f"  {key}: {v[key]}")
    return "\n".join(lines)


def _class(gens) -> str:
    return " + ".join(simplex_name(g) + "*" for g in gens) if gens else "0"


def _classes(items) -> str:
    return "{" + ", ".join(_class(c) for c in items) + "}"
