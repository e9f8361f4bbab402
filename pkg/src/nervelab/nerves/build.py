"""Shared construction helper: complete a 2-truncated presheaf to a
3-coskeletal one whose 3-dimensional cells are prescribed commutative spheres.

All nerve constructions and the homotopy quotient build their 2-truncation
explicitly and hand the sphere level to this helper; face, degeneracy and
isomorphism operators at the new level are forced (faces are the sphere
entries, the rest are computed by expanding composites through the
2-truncation and looking the resulting sphere up).
"""

from __future__ import annotations

from ..presheaf import TruncatedPresheaf, boundary_reps


def sphere_id(shape, obj, faces: tuple) -> str:
    return "{" + shape.format_obj(obj) + ":" + ";".join(faces) + "}"


def complete_to_dim3(p2: TruncatedPresheaf, three_cells: dict) -> TruncatedPresheaf:
    """three_cells: {dim-3 object: iterable of face tuples (in special coface
    order)}.  Returns the 3-truncated presheaf with coskeletal flag 3."""
    sh = p2.shape
    assert p2.trunc == 2
    cells = dict(p2.cells)
    action = dict(p2.action)
    names: dict = {}
    for obj in sh.objects_of_dim(3):
        spheres = list(dict.fromkeys(tuple(f) for f in three_cells.get(obj, ())))
        ids = []
        for faces in spheres:
            name = sphere_id(sh, obj, faces)
            names[(obj, faces)] = name
            ids.append(name)
        cells[obj] = tuple(ids)
        cofaces = sh.cofaces(obj)
        for k, f in enumerate(cofaces):
            action.setdefault(f, {})
            for faces in spheres:
                action[f][names[(obj, faces)]] = faces[k]
    # degeneracies into dimension 3
    for obj2 in sh.objects_of_dim(2):
        for e in sh.elementary_epis(obj2):
            if sh.dim(e.source) != 3:
                continue
            action.setdefault(e, {})
            for x in p2.cells_at(obj2):
                faces = tuple(p2.act(sh.compose(e, f), x) for f in sh.cofaces(e.source))
                key = (e.source, faces)
                if key not in names:
                    raise ValueError(
                        f"degenerate sphere of {x} along {sh.map_key(e)} is not a cell"
                    )
                action[e][x] = names[key]
    # isomorphism operators at dimension 3 (Gamma's coswaps)
    if hasattr(sh, "isos"):
        for obj in sh.objects_of_dim(3):
            reps = boundary_reps(sh, obj)
            cofaces = sh.cofaces(obj)
            for w in sh.isos(obj):
                if w.is_identity():
                    continue
                action.setdefault(w, {})
                for faces in (key[1] for key in names if key[0] == obj):
                    moved = []
                    for f in cofaces:
                        j, h = reps[sh.compose(w, f)]
                        moved.append(p2.act(h, faces[j]))
                    key = (obj, tuple(moved))
                    if key not in names:
                        raise ValueError(
                            f"isomorphism {sh.map_key(w)} leaves the 3-cell set"
                        )
                    action[w][names[(obj, faces)]] = names[key]
    return TruncatedPresheaf(sh, 3, cells, action, coskeletal=3)
