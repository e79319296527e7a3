"""JSON and Graphviz DOT output formats."""

from __future__ import annotations

import json

from .locsys import DElement
from .orbits import AdmissiblePair

SCHEMA_VERSION = 1


def pair_json(p: AdmissiblePair) -> dict:
    return {"v": list(p.v.inversion_set), "s": list(p.s)}


def delement_json(d: DElement) -> dict:
    out = pair_json(d.pair)
    if d.pair.parabolic.system.type_label == "C":
        out["signs"] = [[k, s] for k, s in d.signs]
    else:
        out["char"] = "nontrivial" if d.nontrivial else "trivial"
    return out


def element_json(x) -> dict:
    return delement_json(x) if isinstance(x, DElement) else pair_json(x)


def element_label(x) -> str:
    p = x.pair if isinstance(x, DElement) else x
    label = "v=" + ",".join(map(str, p.v.inversion_set)) + "|S=" + ",".join(map(str, p.s))
    if isinstance(x, DElement):
        if x.signs:
            label += "|signs=" + "".join("+" if s == 1 else "-" for _, s in x.signs)
        elif x.nontrivial:
            label += "|char=nontrivial"
    return label


def relation_json(system: str, order: str, method: str, elements, hasse_edges, leq=None) -> dict:
    out = {
        "schema": SCHEMA_VERSION,
        "system": system,
        "order": order,
        "method": method,
        "elements": [element_json(x) for x in elements],
        "hasse_edges": [[int(i), int(j)] for i, j in hasse_edges],
    }
    if leq is not None:
        out["leq"] = [[int(i), int(j)] for i, j in leq]
    return out


_PALETTE = ("black", "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta")


def to_dot(elements, hasse_edges, components=None, name: str = "hasse") -> str:
    color = {}
    if components is not None:
        for c, comp in enumerate(components):
            for i in comp:
                color[i] = _PALETTE[c % len(_PALETTE)]
    lines = [f"digraph {name} {{"]
    for i, x in enumerate(elements):
        attrs = f'label="{element_label(x)}"'
        if i in color:
            attrs += f', color="{color[i]}"'
        lines.append(f"  n{i} [{attrs}];")
    for i, j in hasse_edges:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps(obj) -> str:
    return json.dumps(obj, indent=1, sort_keys=True) + "\n"
