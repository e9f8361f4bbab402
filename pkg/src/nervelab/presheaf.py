"""Finite truncated presheaves over a shape category.

Cells are opaque string identifiers; all structure lives in explicit operator
tables.  The action is stored for generator maps only (cofaces, elementary
epis, and for Gamma the coswaps); the action of an arbitrary map is computed
along its canonical generator factorization.  A presheaf may carry a
coskeletal flag c, declaring it the c-coskeleton of its truncation, which is
how sphere/horn queries one dimension above the truncation are answered.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache

from .shapes import SHAPES, shape_by_name


@dataclass
class Violation:
    kind: str
    detail: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.detail}"


@dataclass
class TruncatedPresheaf:
    shape: object
    trunc: int
    cells: dict
    action: dict
    coskeletal: int | None = None
    _act_tables: dict = field(default_factory=dict, repr=False)

    # -- basic structure ----------------------------------------------------
    def objects(self) -> list:
        return [o for o in self.shape.objects_up_to(self.trunc)]

    def cells_at(self, obj) -> tuple:
        return self.cells.get(obj, ())

    def generator_maps(self) -> list:
        return generator_maps(self.shape, self.trunc)

    def act(self, f, x: str) -> str:
        """X(f) applied to the cell x (x lives at f.target)."""
        table = self.act_table(f)
        return table[x]

    def act_table(self, f) -> dict:
        if f in self._act_tables:
            return self._act_tables[f]
        if f.is_identity():
            table = {x: x for x in self.cells_at(f.source)}
        else:
            word = _decompose_cached(self.shape, f)
            table = {}
            for x in self.cells_at(f.target):
                y = x
                for e in word:
                    y = self.action[e][y]
                table[x] = y
        self._act_tables[f] = table
        return table

    def boundary(self, obj, x: str) -> tuple:
        """The ordered tuple of special faces of x."""
        return tuple(self.act(f, x) for f in self.shape.cofaces(obj))

    def invalidate_caches(self) -> None:
        self._act_tables.clear()

    # -- validation ----------------------------------------------------------
    def validate(self) -> list[Violation]:
        """Empty iff every generator table is total and the functor law holds."""
        out: list[Violation] = []
        objs = self.objects()
        known = {o: set(self.cells_at(o)) for o in objs}
        for e in self.generator_maps():
            table = self.action.get(e)
            if table is None:
                out.append(Violation("missing-operator", self.shape.map_key(e)))
                continue
            for x in self.cells_at(e.target):
                if x not in table:
                    out.append(Violation("partial-operator", f"{self.shape.map_key(e)} at {x}"))
                elif table[x] not in known[e.source]:
                    out.append(Violation("ill-typed", f"{self.shape.map_key(e)} sends {x} to {table[x]}"))
        if out:
            return out
        for a in objs:
            for b in objs:
                maps_ab = _maps_cached(self.shape, a, b)
                if not maps_ab:
                    continue
                for c in objs:
                    if not self.cells_at(c):
                        continue
                    for g in _maps_cached(self.shape, b, c):
                        right = self.act_table(g)
                        for f in maps_ab:
                            left = self.act_table(self.shape.compose(g, f))
                            mid = self.act_table(f)
                            for x in self.cells_at(c):
                                if left[x] != mid[right[x]]:
                                    out.append(
                                        Violation(
                                            "relation",
                                            f"X({self.shape.map_key(g)} o {self.shape.map_key(f)}) "
                                            f"!= X(f)X(g) at cell {x}",
                                        )
                                    )
        return out

    # -- spheres and horns -----------------------------------------------------
    def sphere_of(self, obj, x: str) -> "Sphere":
        return Sphere(obj, self.boundary(obj, x))

    def sphere_consistent(self, sphere: "Sphere") -> bool:
        return _assignment_consistent(self, sphere.obj, dict(enumerate(sphere.faces)))

    def all_spheres(self, obj) -> list["Sphere"]:
        """All consistent boundary assignments over obj (dim(obj) <= trunc+1)."""
        cofaces = self.shape.cofaces(obj)
        slots = list(range(len(cofaces)))
        found: list[Sphere] = []
        for assignment in _search_assignments(self, obj, slots, {}):
            found.append(Sphere(obj, tuple(assignment[k] for k in slots)))
        return found

    def sphere_fillers(self, sphere: "Sphere") -> list[str]:
        """Cells whose boundary is the sphere; above the truncation the
        coskeletal flag answers the query (a consistent sphere is its own
        unique filler)."""
        obj = sphere.obj
        d = self.shape.dim(obj)
        if d <= self.trunc:
            cofaces = self.shape.cofaces(obj)
            return [
                x
                for x in self.cells_at(obj)
                if all(self.act(f, x) == v for f, v in zip(cofaces, sphere.faces))
            ]
        if self.coskeletal is not None and d == self.trunc + 1:
            return ["(sphere)"] if self.sphere_consistent(sphere) else []
        raise ValueError(f"object {obj} beyond truncation and no coskeletal flag")

    # -- serialization ----------------------------------------------------------
    def to_json(self) -> dict:
        sh = self.shape
        return {
            "shape": sh.name,
            "truncation_dim": self.trunc,
            "coskeletal": self.coskeletal,
            "cells": {sh.format_obj(o): list(self.cells_at(o)) for o in self.objects()},
            "action": {
                sh.map_key(e): dict(sorted(self.action[e].items())) for e in self.generator_maps()
            },
        }

    @staticmethod
    def from_json(doc: dict) -> "TruncatedPresheaf":
        sh = shape_by_name(doc["shape"])
        trunc = doc["truncation_dim"]
        cells = {sh.parse_obj(k): tuple(v) for k, v in doc["cells"].items()}
        gens = {sh.map_key(e): e for e in generator_maps(sh, trunc)}
        action = {}
        for key, table in doc["action"].items():
            if key not in gens:
                raise ValueError(f"unknown operator key: {key}")
            action[gens[key]] = dict(table)
        return TruncatedPresheaf(sh, trunc, cells, action, doc.get("coskeletal"))

    def save(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_json(), fh, indent=1, sort_keys=True)

    @staticmethod
    def load(path: str) -> "TruncatedPresheaf":
        with open(path, encoding="utf-8") as fh:
            return TruncatedPresheaf.from_json(json.load(fh))


@dataclass(frozen=True)
class Sphere:
    """A total boundary assignment: one cell per special coface, in order."""

    obj: object
    faces: tuple


@dataclass(frozen=True)
class Horn:
    """A partial boundary assignment: cells for the kept special cofaces."""

    obj: object
    removed: frozenset  # indices into shape.cofaces(obj)
    faces: tuple  # entries for all slots; None at removed slots


def generator_maps(shape, trunc: int) -> list:
    return _generator_maps_cached(shape, trunc)


@lru_cache(maxsize=None)
def _generator_maps_cached(shape, trunc: int) -> list:
    out = []
    for obj in shape.objects_up_to(trunc):
        d = shape.dim(obj)
        if d >= 1:
            out.extend(shape.cofaces(obj))
        if d + 1 <= trunc:
            out.extend(shape.elementary_epis(obj))
        if hasattr(shape, "isos") and d >= 1:
            out.extend(i for i in shape.isos(obj) if not i.is_identity())
    seen = set()
    unique = []
    for e in out:
        if e not in seen:
            seen.add(e)
            unique.append(e)
    return unique


@lru_cache(maxsize=None)
def _decompose_cached(shape, f):
    word = shape.decompose(f)
    gens = set(_generator_maps_cached(shape, max(shape.dim(f.source), shape.dim(f.target))))
    for e in word:
        if e not in gens and not e.is_identity():
            raise AssertionError(f"decompose emitted a non-generator: {e}")
    return tuple(word)


@lru_cache(maxsize=None)
def _maps_cached(shape, a, b) -> tuple:
    return tuple(shape.all_maps(a, b))


@lru_cache(maxsize=None)
def _monic_maps_cached(shape, a, b) -> tuple:
    return tuple(f for f in _maps_cached(shape, a, b) if not shape.degenerate_wrt(f))


@lru_cache(maxsize=None)
def boundary_groups(shape, obj) -> tuple:
    """Groups of coincident boundary positions.

    Each group is a tuple of (coface_index, h) pairs, h monic, whose
    composites coface o h agree as maps into obj; a consistent assignment of
    cells from a valid presheaf must give them all the same cell after acting
    by h.  Coincidences with degenerate h follow from these by factoring out
    the common epi part.  Groups of size one are dropped.
    """
    cofaces = shape.cofaces(obj)
    groups: dict = {}
    dim = shape.dim(obj)
    lower = [b for b in shape.objects_up_to(dim - 1)]
    for k, f in enumerate(cofaces):
        src = f.source
        for b in lower:
            for h in _monic_maps_cached(shape, b, src):
                composite = shape.compose(f, h)
                groups.setdefault(composite, []).append((k, h))
    return tuple(tuple(v) for v in groups.values() if len(v) > 1)


@lru_cache(maxsize=None)
def boundary_reps(shape, obj) -> dict:
    """For every map m into obj factoring through a special coface, one
    factorization m = f_k o h, as {m: (k, h)}."""
    cofaces = shape.cofaces(obj)
    reps: dict = {}
    dim = shape.dim(obj)
    for k, f in enumerate(cofaces):
        for b in shape.objects_up_to(dim - 1):
            for h in _maps_cached(shape, b, f.source):
                reps.setdefault(shape.compose(f, h), (k, h))
    return reps


@lru_cache(maxsize=None)
def overlap_constraints(shape, obj, active: frozenset) -> dict:
    """For each pair of active slots (k, k'), pairs (h, h') with
    f_k o h = f_k' o h'.  Within each coincidence group, restricted to the
    active slots, only a spanning set of pairs is kept; consistency of the
    remaining pairs follows by transitivity."""
    out: dict = {}
    for group in boundary_groups(shape, obj):
        members = [(k, h) for k, h in group if k in active]
        if len(members) < 2:
            continue
        anchor_k, anchor_h = members[0]
        for k2, h2 in members[1:]:
            out.setdefault((anchor_k, k2), []).append((anchor_h, h2))
            out.setdefault((k2, anchor_k), []).append((h2, anchor_h))
    return out


def _assignment_consistent(p: TruncatedPresheaf, obj, assignment: dict) -> bool:
    constraints = overlap_constraints(p.shape, obj, frozenset(assignment))
    for (k, k2), pairs in constraints.items():
        if k > k2:
            continue
        for h, h2 in pairs:
            if p.act(h, assignment[k]) != p.act(h2, assignment[k2]):
                return False
    return True


def _search_assignments(p: TruncatedPresheaf, obj, slots: list, fixed: dict):
    """Backtracking enumeration of consistent assignments on the given slots."""
    cofaces = p.shape.cofaces(obj)
    active = frozenset(slots) | frozenset(fixed)
    constraints = overlap_constraints(p.shape, obj, active)

    def extend(i: int, assignment: dict):
        if i == len(slots):
            yield dict(assignment)
            return
        k = slots[i]
        if k in assignment:
            yield from extend(i + 1, assignment)
            return
        checks = []
        for k2, val2 in assignment.items():
            for h, h2 in constraints.get((k, k2), ()):
                checks.append((p.act_table(h), p.act_table(h2)[val2]))
        for x in p.cells_at(cofaces[k].source):
            if all(table[x] == expected for table, expected in checks):
                assignment[k] = x
                yield from extend(i + 1, assignment)
                del assignment[k]

    yield from extend(0, dict(fixed))


def terminal_presheaf(shape_name: str, trunc: int) -> TruncatedPresheaf:
    """One cell per object; every operator the unique map."""
    sh = SHAPES[shape_name]
    cells = {o: (f"pt{sh.format_obj(o)}",) for o in sh.objects_up_to(trunc)}
    action = {}
    for e in generator_maps(sh, trunc):
        action[e] = {cells[e.target][0]: cells[e.source][0]}
    return TruncatedPresheaf(sh, trunc, cells, action, coskeletal=trunc)


# -- truncation / skeleton / coskeleton ----------------------------------------


def truncate(p: TruncatedPresheaf, n: int) -> TruncatedPresheaf:
    assert n <= p.trunc
    sh = p.shape
    cells = {o: p.cells_at(o) for o in sh.objects_up_to(n)}
    action = {e: dict(p.action[e]) for e in generator_maps(sh, n)}
    return TruncatedPresheaf(sh, n, cells, action, None)


def skeleton(p: TruncatedPresheaf, n: int) -> TruncatedPresheaf:
    """The subpresheaf of cells generated by dimensions <= n."""
    assert n <= p.trunc
    sh = p.shape
    keep = {o: set(p.cells_at(o)) if sh.dim(o) <= n else set() for o in p.objects()}
    changed = True
    while changed:
        changed = False
        for e in p.generator_maps():
            if sh.dim(e.source) <= sh.dim(e.target):
                continue  # only degeneracy directions create cells
            for x in keep[e.target]:
                y = p.action[e][x]
                if y not in keep[e.source]:
                    keep[e.source].add(y)
                    changed = True
    cells = {o: tuple(x for x in p.cells_at(o) if x in keep[o]) for o in p.objects()}
    action = {
        e: {x: p.action[e][x] for x in cells.get(e.target, ())} for e in p.generator_maps()
    }
    return TruncatedPresheaf(sh, p.trunc, cells, action, None)


def coskeleton(p: TruncatedPresheaf, n: int, out_trunc: int | None = None) -> TruncatedPresheaf:
    """Cosk_n: cells above n are consistent boundary families, built level by level."""
    sh = p.shape
    out_trunc = p.trunc if out_trunc is None else out_trunc
    q = truncate(p, min(n, p.trunc))
    q = TruncatedPresheaf(sh, q.trunc, dict(q.cells), dict(q.action), None)
    for d in range(min(n, p.trunc) + 1, out_trunc + 1):
        new_cells = {}
        new_names: dict = {}
        q_ext = TruncatedPresheaf(sh, d - 1, q.cells, q.action, None)
        for obj in sh.objects_of_dim(d):
            spheres = q_ext.all_spheres(obj)
            names = []
            for s in spheres:
                name = f"cosk{sh.format_obj(obj)}#{len(names)}"
                names.append(name)
                new_names[(obj, s.faces)] = name
            new_cells[obj] = tuple(names)
        cells = dict(q.cells)
        cells.update(new_cells)
        action = dict(q.action)
        for obj in sh.objects_of_dim(d):
            cofaces = sh.cofaces(obj)
            sphere_by_name = {}
            for s in q_ext.all_spheres(obj):
                sphere_by_name[new_names[(obj, s.faces)]] = s
            for k, f in enumerate(cofaces):
                action.setdefault(f, {})
                for name, s in sphere_by_name.items():
                    action[f][name] = s.faces[k]
        # degeneracies into the new level
        for obj in sh.objects_of_dim(d - 1):
            for e in sh.elementary_epis(obj):
                if sh.dim(e.source) != d:
                    continue
                action.setdefault(e, {})
                tmp = TruncatedPresheaf(sh, d - 1, cells, action, None)
                for x in q.cells_at(obj):
                    faces = tuple(tmp.act(sh.compose(e, f), x) for f in sh.cofaces(e.source))
                    action[e][x] = new_names[(e.source, faces)]
        # isomorphism operators at the new level (Gamma's coswaps)
        if hasattr(sh, "isos"):
            tmp = TruncatedPresheaf(sh, d - 1, cells, action, None)
            for obj in sh.objects_of_dim(d):
                reps = boundary_reps(sh, obj)
                cofaces = sh.cofaces(obj)
                for w in sh.isos(obj):
                    if w.is_identity():
                        continue
                    action.setdefault(w, {})
                    for name in new_cells[obj]:
                        faces = []
                        for f in cofaces:
                            j, h = reps[sh.compose(w, f)]
                            source_face = action[cofaces[j]][name]
                            faces.append(tmp.act(h, source_face))
                        action[w][name] = new_names[(obj, tuple(faces))]
        q = TruncatedPresheaf(sh, d, cells, action, None)
    q.coskeletal = n
    return q


def is_k_subcoskeletal(p: TruncatedPresheaf, k: int) -> bool:
    """At most one filler for every sphere of dimension > k (within the
    truncation, plus the flagged coskeletal dimension)."""
    top = p.trunc + (1 if p.coskeletal is not None else 0)
    for d in range(k + 1, top + 1):
        for obj in p.shape.objects_of_dim(d):
            for s in TruncatedPresheaf(p.shape, min(d - 1, p.trunc), p.cells, p.action, None).all_spheres(obj):
                if d <= p.trunc and len(p.sphere_fillers(s)) > 1:
                    return False
    return True


def is_k_coskeletal(p: TruncatedPresheaf, k: int) -> bool:
    """Exactly one filler for every sphere of dimension > k."""
    top = p.trunc + (1 if p.coskeletal is not None else 0)
    for d in range(k + 1, top + 1):
        for obj in p.shape.objects_of_dim(d):
            lower = TruncatedPresheaf(p.shape, min(d - 1, p.trunc), p.cells, p.action, None)
            for s in lower.all_spheres(obj):
                if len(p.sphere_fillers(s)) != 1:
                    return False
    return True
