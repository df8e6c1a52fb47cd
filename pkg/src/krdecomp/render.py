"""Text, JSON and DOT renderings of trees and characters.

All output is deterministic: trees are printed in their canonical depth-first
order and characters are sorted by weight.
"""

from __future__ import annotations

import json
from collections.abc import Mapping

from .lie import AlgebraSpec, Weight
from .tree import DecompositionTree


def _vec(w) -> str:
    return "[" + ",".join(str(x) for x in w) + "]"


def tree_text(tree: DecompositionTree) -> str:
    """One ``⊕(level) c·V[weight]`` line per node, depth-first, root at level 0."""
    return "".join(f"⊕({n.depth}) {n.multiplicity}·V{_vec(n.highest_weight)}\n" for n in tree.nodes())


def tree_json(tree: DecompositionTree) -> str:
    def encode(node) -> dict:
        return {
            "label": [list(d) for d in node.label],
            "weight": list(node.highest_weight),
            "mult": node.multiplicity,
            "children": [encode(c) for c in node.children],
        }

    doc = {
        "algebra": str(tree.spec),
        "factors": [list(f) for f in tree.factors],
        "root": encode(tree.root),
    }
    return json.dumps(doc, indent=1) + "\n"


def tree_dot(tree: DecompositionTree) -> str:
    """Graphviz digraph; edges carry the increment delta in alpha-coordinates."""
    lines = ["digraph decomposition {", "  node [shape=plaintext];"]
    ids: dict[int, str] = {}
    for i, node in enumerate(tree.nodes()):
        ids[id(node)] = f"n{i}"
        coeff = "" if node.multiplicity == 1 else f"{node.multiplicity} "
        lines.append(f'  n{i} [label="{coeff}V{_vec(node.highest_weight)}"];')
    for node in tree.nodes():
        for child in node.children:
            lines.append(f'  {ids[id(node)]} -> {ids[id(child)]} [label="{_vec(child.delta)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def character_text(terms: Mapping[Weight, int]) -> str:
    """One ``c·V[weight]`` line per term; the empty character prints as ``0``."""
    if not terms:
        return "0\n"
    return "".join(f"{c}·V{_vec(w)}\n" for w, c in sorted(terms.items()))


def character_json(spec: AlgebraSpec, terms: Mapping[Weight, int]) -> str:
    doc = {
        "algebra": str(spec),
        "terms": [{"weight": list(w), "mult": c} for w, c in sorted(terms.items())],
    }
    return json.dumps(doc) + "\n"


def character_from_json(text: str) -> tuple[AlgebraSpec, dict[Weight, int]]:
    doc = json.loads(text)
    spec = AlgebraSpec.parse(doc["algebra"])
    terms: dict[Weight, int] = {}
    for item in doc["terms"]:
        w = tuple(int(x) for x in item["weight"])
        if len(w) != spec.rank:
            raise ValueError(f"weight {list(w)} has wrong length for {spec}")
        terms[w] = terms.get(w, 0) + int(item["mult"])
    return spec, {w: c for w, c in terms.items() if c}
