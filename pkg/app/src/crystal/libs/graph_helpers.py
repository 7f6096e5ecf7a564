# Copyright (c) 2025 harokku999@gmail.com
# Licensed under the MIT License - https://opensource.org/licenses/MIT

"""Graphviz DOT text for crystal graphs."""

from typing import Dict, List, Optional, Sequence, Tuple


def coefficient_label(power: int) -> str:
    """(1-u)^power as a short label."""
    if power == 0:
        return "1"
    if power == 1:
        return "(1-u)"
    return f"(1-u)^{power}"


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def render_dot(
    name: str,
    labels: Sequence[str],
    edges: List[Tuple[int, int, int]],
    attributes: Optional[Sequence[Dict[str, object]]] = None,
) -> str:
    """
    Nodes n0, n1, ... in the given order, then edges (source, target, index)
    in the given order, each labelled by its index.
    """
    lines = [f"digraph {name} {{", "  rankdir=TB;", "  node [shape=box];"]
    for position, label in enumerate(labels):
        extra = ""
        if attributes is not None:
            extra = "".join(f", {key}={value}" for key, value in attributes[position].items())
        lines.append(f"  n{position} [label={_quote(label)}{extra}];")
    for source, target, index in edges:
        lines.append(f'  n{source} -> n{target} [label="{index}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
