"""Groupoid snapshots as JSON and DOT.

Nodes are unit points labelled by canonical index literals; arrows carry
their source, target and a label (the element literal for germs, "z;x" for
transformation-groupoid triples).  Output is deterministic: nodes and
arrows are sorted.
"""

import json

from .germs import enumerate_germs, source_index
from .literals import format_element, format_index
from .spectrum import INF, index_grid
from .triples import enumerate_triples, source

SCHEMA = "oddsphere-groupoid/1"


def _index_sort_key(k):
    return tuple((1, 0) if v == INF else (0, v) for v in k)


def germ_groupoid_snapshot(ell: int, bound: int) -> dict:
    nodes = [format_index(k) for k in sorted(index_grid(ell, bound), key=_index_sort_key)]
    arrows = []
    for g in enumerate_germs(ell, bound):
        arrows.append(
            {
                "source": format_index(source_index(g)),
                "target": format_index(g.base),
                "label": format_element(g.elem),
            }
        )
    arrows.sort(key=lambda a: (a["source"], a["target"], a["label"]))
    return {"schema": SCHEMA, "kind": "germ", "nodes": nodes, "arrows": arrows}


def triple_groupoid_snapshot(ell: int, bound_z: int, bound_x: int, bound_w: int) -> dict:
    nodes = [
        format_index(k) for k in sorted(index_grid(ell, bound_w), key=_index_sort_key)
    ]
    arrows = []
    for t in enumerate_triples(ell, bound_z, bound_x, bound_w):
        arrows.append(
            {
                "source": format_index(source(t)),
                "target": format_index(t.w),
                "label": f"{t.z};{','.join(str(v) for v in t.x)}",
            }
        )
    arrows.sort(key=lambda a: (a["source"], a["target"], a["label"]))
    return {"schema": SCHEMA, "kind": "triple", "nodes": nodes, "arrows": arrows}


def snapshot_to_json(snap: dict) -> str:
    return json.dumps(snap, indent=2, sort_keys=True)


def snapshot_to_dot(snap: dict) -> str:
    lines = ["digraph groupoid {"]
    for node in snap["nodes"]:
        lines.append(f'  "{node}" [shape=circle];')
    for arrow in snap["arrows"]:
        lines.append(
            f'  "{arrow["source"]}" -> "{arrow["target"]}" [label="{arrow["label"]}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
