"""Exhaustive inner-horn enumeration and filler certification.

A horn class fixes a shape object and the set of removed special cofaces;
an instance is a consistent assignment of cells to the kept cofaces.  Filler
search is exhaustive over the candidate cell set.  Horn instances one
dimension above the truncation are answered through the coskeletal flag
(a filler is a consistent completion of the boundary); horns of minimal
complementary dimension above the flag are certified without enumeration.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .presheaf import TruncatedPresheaf, _maps_cached, _search_assignments
from .shapes import SHAPES
from .shapes.gamma import GammaMap, coskip


@dataclass(frozen=True)
class HornClass:
    shape_name: str
    obj: object
    removed: tuple[int, ...]
    label: str

    def kept(self, shape) -> list[int]:
        return [k for k in range(len(shape.cofaces(self.obj))) if k not in self.removed]


@dataclass
class HornRecord:
    horn: HornClass
    boundary: dict
    fillers: tuple
    outer: bool = False

    def to_json(self, shape) -> dict:
        return {
            "horn_class": self.horn.label,
            "object": shape.format_obj(self.horn.obj),
            "boundary_ids": {str(k): v for k, v in sorted(self.boundary.items())},
            "filler_ids": list(self.fillers),
        }


@dataclass
class KanReport:
    shape_name: str
    max_dim: int
    records: list[HornRecord] = field(default_factory=list)
    certified_classes: list[str] = field(default_factory=list)
    flags: dict = field(default_factory=dict)

    @property
    def inner_kan(self) -> bool:
        return all(len(r.fillers) >= 1 for r in self.records if not r.outer)

    def unfillable(self) -> list[HornRecord]:
        return [r for r in self.records if not r.fillers and not r.outer]

    def non_unique(self, mcd_at_least: int, shape) -> list[HornRecord]:
        out = []
        for r in self.records:
            if r.outer:
                continue
            if min_comp_dimension(shape, r.horn) >= mcd_at_least and len(r.fillers) != 1:
                out.append(r)
        return out

    def to_json(self) -> dict:
        shape = SHAPES[self.shape_name]
        return {
            "shape": self.shape_name,
            "max_dim": self.max_dim,
            "flags": self.flags,
            "certified_classes": self.certified_classes,
            "horns": [r.to_json(shape) for r in self.records],
        }


# -- horn classes ---------------------------------------------------------------


def gamma_partition_horn(m: int, part0: frozenset, part1: frozenset) -> HornClass:
    shape = SHAPES["gamma"]
    removed = []
    for k, f in enumerate(shape.cofaces(m)):
        if any(set(block) & part0 and set(block) & part1 for block in f.assignment):
            removed.append(k)
    name0 = "".join(str(v) for v in sorted(part0))
    name1 = "".join(str(v) for v in sorted(part1))
    return HornClass("gamma", m, tuple(removed), f"Lambda^{m}_{{{name0}|{name1}}}")


def gamma_special_partitions(m: int) -> list[tuple[frozenset, frozenset]]:
    return [
        (frozenset(range(1, k + 1)), frozenset(range(k + 1, m + 1)))
        for k in range(1, m)
    ]


def inner_horn_classes(shape_name: str, max_dim: int) -> list[HornClass]:
    shape = SHAPES[shape_name]
    out: list[HornClass] = []
    if shape_name == "gamma":
        for m in range(2, max_dim + 1):
            for part0, part1 in gamma_special_partitions(m):
                out.append(gamma_partition_horn(m, part0, part1))
        return out
    for d in range(2, max_dim + 1):
        for obj in shape.objects_of_dim(d):
            for k, f in enumerate(shape.cofaces(obj)):
                if shape.is_inner_coface(f):
                    out.append(
                        HornClass(
                            shape_name,
                            obj,
                            (k,),
                            f"Lambda[{shape.format_obj(obj)};{shape.coface_label(f)}]",
                        )
                    )
    return out


def gamma_outer_2horns() -> list[HornClass]:
    shape = SHAPES["gamma"]
    cofaces = shape.cofaces(2)
    out = []
    for name, target in (("k0", coskip(1, 0)), ("k1", coskip(1, 1))):
        k = cofaces.index(target)
        out.append(HornClass("gamma", 2, (k,), f"Lambda^2_{{{name}}}"))
    return out


@lru_cache(maxsize=None)
def _mcd_cached(shape, obj, removed: tuple) -> int:
    kept = [f for k, f in enumerate(shape.cofaces(obj)) if k not in removed]
    for d in range(shape.dim(obj) + 1):
        for b in shape.objects_of_dim(d):
            for m in _maps_cached(shape, b, obj):
                if not any(_factors(shape, m, f) for f in kept):
                    return d
    return shape.dim(obj)


def _factors(shape, m, f) -> bool:
    if hasattr(shape, "name") and shape.name == "theta2":
        from .shapes.theta2 import factors_through

        return factors_through(m, f)
    return any(shape.compose(f, h) == m for h in _maps_cached(shape, m.source, f.source))


def min_comp_dimension(shape, horn: HornClass) -> int:
    """The smallest dimension of a cell of the representable absent from the horn."""
    return _mcd_cached(shape, horn.obj, horn.removed)


# -- instance enumeration and filling ----------------------------------------------


def horn_instances(p: TruncatedPresheaf, horn: HornClass):
    shape = p.shape
    kept = horn.kept(shape)
    yield from _search_assignments(p, horn.obj, kept, {})


def horn_fillers(p: TruncatedPresheaf, horn: HornClass, assignment: dict) -> tuple:
    shape = p.shape
    d = shape.dim(horn.obj)
    cofaces = shape.cofaces(horn.obj)
    if d <= p.trunc:
        tables = [(p.act_table(cofaces[k]), v) for k, v in assignment.items()]
        return tuple(
            z for z in p.cells_at(horn.obj) if all(t[z] == v for t, v in tables)
        )
    if p.coskeletal is not None and d == p.trunc + 1:
        completions = []
        for full in _search_assignments(p, horn.obj, list(horn.removed), dict(assignment)):
            completions.append(
                "sphere[" + ",".join(full[k] for k in range(len(cofaces))) + "]"
            )
        return tuple(completions)
    raise ValueError(
        f"horn over {shape.format_obj(horn.obj)} exceeds the truncation and no "
        "coskeletal flag applies"
    )


def check_inner_kan(p: TruncatedPresheaf, max_dim: int, threads: int | None = None) -> KanReport:
    """Enumerate every inner horn of dimension <= max_dim with its fillers."""
    shape = p.shape
    report = KanReport(shape.name, max_dim)
    classes = inner_horn_classes(shape.name, max_dim)
    work: list[HornClass] = []
    for hc in classes:
        d = shape.dim(hc.obj)
        if d <= p.trunc + (1 if p.coskeletal is not None else 0):
            work.append(hc)
        elif p.coskeletal is not None and min_comp_dimension(shape, hc) >= p.coskeletal + 1:
            report.certified_classes.append(hc.label)
        else:
            raise ValueError(f"truncation too low for horn class {hc.label}")

    def run(hc: HornClass) -> list[HornRecord]:
        return [
            HornRecord(hc, assignment, horn_fillers(p, hc, assignment))
            for assignment in horn_instances(p, hc)
        ]

    threads = threads if threads is not None else _thread_budget()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(run, work))
    else:
        chunks = [run(hc) for hc in work]
    for chunk in chunks:
        report.records.extend(chunk)
    report.flags[f"inner_kan(max_dim={max_dim})"] = report.inner_kan
    return report


def _thread_budget() -> int:
    raw = os.environ.get("NERVELAB_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def check_n_reduced(p: TruncatedPresheaf, n: int, max_dim: int = 4, report: KanReport | None = None) -> bool:
    """Unique fillers for every enumerable inner horn of mcd >= n."""
    report = report or check_inner_kan(p, max_dim)
    bad = report.non_unique(n, p.shape)
    report.flags[f"n_reduced({n})"] = not bad
    return not bad


def check_gamma_kan(p: TruncatedPresheaf, report: KanReport | None = None) -> bool:
    """Outer 2-horn filling for a Gamma presheaf (grouplike detection)."""
    assert p.shape.name == "gamma"
    ok = True
    for hc in gamma_outer_2horns():
        for assignment in horn_instances(p, hc):
            fillers = horn_fillers(p, hc, assignment)
            if report is not None:
                report.records.append(HornRecord(hc, assignment, fillers, outer=True))
            if not fillers:
                ok = False
    if report is not None:
        report.flags["kan"] = ok
    return ok


# -- tabularity -------------------------------------------------------------------


def glenn_category_objects(shape, horn: HornClass) -> list:
    """Maps into the horn object that are kept cofaces or composites of a
    kept coface with a coface of its source (the Glenn category's objects)."""
    kept = [shape.cofaces(horn.obj)[k] for k in horn.kept(shape)]
    out = list(kept)
    for h in kept:
        for e in shape.cofaces(h.source):
            out.append(shape.compose(h, e))
    seen = set()
    unique = []
    for g in out:
        if g not in seen:
            seen.add(g)
            unique.append(g)
    return unique


def verify_tabular(shape, horn: HornClass) -> bool:
    """Exhaustively check that (f/I) is nonempty and connected for every cell
    f of the horn: the Glenn category is cofinal, licensing Glenn tables."""
    kept = [shape.cofaces(horn.obj)[k] for k in horn.kept(shape)]
    gobjects = glenn_category_objects(shape, horn)
    dim = shape.dim(horn.obj)
    for d in range(dim):
        for b in shape.objects_of_dim(d):
            for f in _maps_cached(shape, b, horn.obj):
                if not any(_factors(shape, f, h) for h in kept):
                    continue  # f is not a cell of the horn
                valid = [g for g in gobjects if _factors(shape, f, g)]
                if not valid:
                    return False
                index = {g: i for i, g in enumerate(valid)}
                parent = list(range(len(valid)))

                def find(i):
                    while parent[i] != i:
                        parent[i] = parent[parent[i]]
                        i = parent[i]
                    return i

                def union(i, j):
                    parent[find(i)] = find(j)

                for g in valid:
                    steps = list(shape.cofaces(g.source)) if shape.dim(g.source) >= 1 else []
                    if hasattr(shape, "isos"):
                        steps += [w for w in shape.isos(g.source) if not w.is_identity()]
                    for e in steps:
                        g2 = shape.compose(g, e)
                        if g2 in index:
                            union(index[g], index[g2])
                if len({find(i) for i in range(len(valid))}) != 1:
                    return False
    return True
