"""OFF / OBJ / JSON writers for built complexes."""

from __future__ import annotations

import json
from typing import TextIO

from .geometry import norm_inf
from .wythoff import Complex, Face


def _face_runs(f: Face) -> list[list]:
    """A finite face as one record; a zigzag as its maximal in-box runs."""
    if f.kind == "finite-cycle":
        return [list(f.vertices)]
    runs, cur, last = [], [], None
    for v, i in zip(f.vertices, f.indices):
        if last is not None and i != last + 1:
            runs.append(cur)
            cur = []
        cur.append(v)
        last = i
    if cur:
        runs.append(cur)
    return [r for r in runs if len(r) >= 2]


def mesh_records(K: Complex) -> tuple[list, list[tuple[str, list[int]]]]:
    """Sorted vertex list and ``(kind, indices)`` records, kind "face" or "path"."""
    verts = sorted(K.vertices)
    index = {v: i for i, v in enumerate(verts)}
    records = []
    for f in sorted(K.faces):
        kind = "face" if f.kind == "finite-cycle" else "path"
        for run in _face_runs(f):
            records.append((kind, [index[v] for v in run]))
    return verts, records


def write_off(K: Complex, out: TextIO, scale: int = 1) -> None:
    """OFF with one polygon record per face; zigzag runs become open-path records."""
    verts, records = mesh_records(K)
    out.write("OFF\n")
    out.write(f"{len(verts)} {len(records)} {len(K.edges)}\n")
    for v in verts:
        out.write(" ".join(str(scale * c) for c in v) + "\n")
    for _, idx in records:
        out.write(f"{len(idx)} " + " ".join(map(str, idx)) + "\n")


def write_obj(K: Complex, out: TextIO, scale: int = 1) -> None:
    verts, records = mesh_records(K)
    out.write(f"# {K.name or 'complex'} radius {K.region.radius}\n")
    for v in verts:
        out.write("v " + " ".join(str(scale * c) for c in v) + "\n")
    for kind, idx in records:
        tag = "f" if kind == "face" else "l"
        out.write(tag + " " + " ".join(str(i + 1) for i in idx) + "\n")


def summary(K: Complex, scale: int = 1) -> dict:
    """Counts plus face size and interior edge valence (null when undetermined)."""
    from .verify import classify_face_shape, interior_edge_valence

    region = K.region
    has_interior = region.radius > region.margin
    shapes = sorted({str(classify_face_shape(f)) for f in K.faces})
    sizes = {len(f.vertices) for f in K.faces if f.kind == "finite-cycle"}
    return {
        "catalog_id": K.name,
        "radius": region.radius,
        "margin": region.margin,
        "scale": scale,
        "vertices": len(K.vertices),
        "edges": len(K.edges),
        "faces": len(K.faces),
        "interior_vertices": sum(norm_inf(v) <= region.radius - region.margin for v in K.vertices) if has_interior else 0,
        "face_size": sizes.pop() if len(sizes) == 1 else None,
        "face_shapes": shapes,
        "r": interior_edge_valence(K) if has_interior else None,
    }


def write_json(data: dict, out: TextIO) -> None:
    json.dump(data, out, indent=2, sort_keys=True)
    out.write("\n")
