"""Graphviz DOT rendering of degeneration graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List

from .graph import INCLUSION, IMPLIED, DegenGraph


@dataclass(frozen=True)
class DotOptions:
    name: str = ""
    rankdir: str = "TB"
    show_implied: bool = False
    level_labels: bool = True


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(g: DegenGraph, options: DotOptions = DotOptions()) -> str:
    """Deterministic DOT text with one rank group per orbit dimension.

    Nodes whose first product is zero are round, the others square; edges
    without a verified witness are dashed.
    """
    lines: List[str] = [f"digraph {_quote(options.name or g.variety)} {{"]
    lines.append(f"  graph [rankdir={options.rankdir}];")
    lines.append('  node [fontname="Helvetica"];')
    levels: Dict[int, List[str]] = {}
    for n in g.nodes:
        levels.setdefault(n.level, []).append(n.key)
    for level in sorted(levels, reverse=True):
        keys = sorted(levels[level])
        anchor = f"level {level}"
        if options.level_labels:
            lines.append(f"  {_quote(anchor)} [shape=plaintext, label={_quote(str(level))}];")
        members = " ".join(f"{_quote(k)};" for k in keys)
        head = f"{_quote(anchor)}; " if options.level_labels else ""
        lines.append(f"  {{ rank=same; {head}{members} }}")
    for n in g.nodes:
        shape = "ellipse" if n.zero_dot else "box"
        lines.append(f"  {_quote(n.key)} [label={_quote(n.label or n.key)}, shape={shape}];")
    if options.level_labels and len(levels) > 1:
        order = sorted(levels, reverse=True)
        chain = " -> ".join(_quote(f"level {lv}") for lv in order)
        lines.append(f"  {chain} [style=invis];")
    for e in g.edges:
        if e.kind == IMPLIED and not options.show_implied:
            continue
        attrs = []
        if e.label:
            attrs.append(f"label={_quote(e.label)}")
        if not e.verified:
            attrs.append("style=dashed")
        elif e.kind == INCLUSION:
            attrs.append("style=dotted")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {_quote(e.source)} -> {_quote(e.target)}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"
