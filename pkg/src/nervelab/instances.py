"""Small concrete structures used by the test and acceptance suites."""

from __future__ import annotations

import itertools

from .structures import FancyBicategory, FinBicategory, SymMonGroupoid, fancify_sparse


def strict_two_category(
    objects: tuple[str, ...],
    one_cells: dict,  # name -> (src, tgt)
    comp1: dict,  # (g, f) -> g*f
    id1: dict,  # object -> identity 1-cell name
    hom_groups: dict,  # 1-cell -> tuple of group element names (identity first)
    group_mul: dict,  # (1-cell, x, y) -> x*y within hom_groups[1-cell]
    whisker_r_map: dict,  # (h, f, x) -> element of hom_groups[h*f]
    whisker_l_map: dict,  # (g, f, x) -> element of hom_groups[g*f]
    invertible: bool = True,
) -> FinBicategory:
    """A strict 2-category whose 2-cells are endo-cells f => f, one group per
    1-cell (enough generality for every instance the acceptance suite uses)."""
    src1 = {f: st[0] for f, st in one_cells.items()}
    tgt1 = {f: st[1] for f, st in one_cells.items()}
    cells1 = tuple(one_cells)
    two_cells = []
    src2, tgt2 = {}, {}
    for f in cells1:
        for x in hom_groups[f]:
            name = f"{x}@{f}"
            two_cells.append(name)
            src2[name] = f
            tgt2[name] = f
    id2 = {f: f"{hom_groups[f][0]}@{f}" for f in cells1}
    vert = {}
    for f in cells1:
        for x in hom_groups[f]:
            for y in hom_groups[f]:
                vert[(f"{x}@{f}", f"{y}@{f}")] = f"{group_mul[(f, x, y)]}@{f}"
    whisker_r = {}
    whisker_l = {}
    for h in cells1:
        for f in cells1:
            if tgt1[f] == src1[h]:
                hf = comp1[(h, f)]
                for x in hom_groups[f]:
                    whisker_r[(h, f"{x}@{f}")] = f"{whisker_r_map[(h, f, x)]}@{hf}"
                for x in hom_groups[h]:
                    whisker_l[(f"{x}@{h}", f)] = f"{whisker_l_map[(h, f, x)]}@{hf}"
    rho = dict(id2)
    lam = dict(id2)
    alpha = {}
    for h in cells1:
        for g in cells1:
            if tgt1[g] != src1[h]:
                continue
            for f in cells1:
                if tgt1[f] == src1[g]:
                    alpha[(h, g, f)] = id2[comp1[(comp1[(h, g)], f)]]
    inv = None
    if invertible:
        inv = {}
        for f in cells1:
            for x in hom_groups[f]:
                y = next(
                    y for y in hom_groups[f] if group_mul[(f, x, y)] == hom_groups[f][0]
                )
                inv[f"{x}@{f}"] = f"{y}@{f}"
    return FinBicategory(
        objects=objects,
        one_cells=cells1,
        src1=src1,
        tgt1=tgt1,
        two_cells=tuple(two_cells),
        src2=src2,
        tgt2=tgt2,
        id1=id1,
        comp1=comp1,
        id2=id2,
        vert=vert,
        whisker_r=whisker_r,
        whisker_l=whisker_l,
        rho=rho,
        lam=lam,
        alpha=alpha,
        inv=inv,
    )


def terminal_21() -> FinBicategory:
    """One object, one 1-cell, one 2-cell."""
    return strict_two_category(
        objects=("*",),
        one_cells={"i": ("*", "*")},
        comp1={("i", "i"): "i"},
        id1={"*": "i"},
        hom_groups={"i": ("e",)},
        group_mul={("i", "e", "e"): "e"},
        whisker_r_map={("i", "i", "e"): "e"},
        whisker_l_map={("i", "i", "e"): "e"},
    )


def group_as_discrete_21(elements: tuple[str, ...], mul, unit: str) -> FinBicategory:
    """A group (or monoid) as a one-object strict category with identity 2-cells."""
    comp1 = {(g, f): mul(g, f) for g in elements for f in elements}
    return strict_two_category(
        objects=("*",),
        one_cells={g: ("*", "*") for g in elements},
        comp1=comp1,
        id1={"*": unit},
        hom_groups={g: ("e",) for g in elements},
        group_mul={(g, "e", "e"): "e" for g in elements},
        whisker_r_map={(h, f, "e"): "e" for h in elements for f in elements},
        whisker_l_map={(h, f, "e"): "e" for h in elements for f in elements},
        invertible=True,
    )


def z2_discrete_21() -> FinBicategory:
    mul = lambda a, b: "e" if a == b else "g"
    return group_as_discrete_21(("e", "g"), mul, "e")


def walking_2cell_21() -> FinBicategory:
    """Two objects a, b; 1-cells id_a, id_b, f: a -> b; Hom(f, f) = Z/2.

    The unique nonidentity 2-cell is invertible (its own inverse)."""
    one_cells = {"ia": ("a", "a"), "ib": ("b", "b"), "f": ("a", "b")}
    comp1 = {
        ("ia", "ia"): "ia",
        ("ib", "ib"): "ib",
        ("f", "ia"): "f",
        ("ib", "f"): "f",
    }
    hom = {"ia": ("0",), "ib": ("0",), "f": ("0", "1")}
    z2 = lambda x, y: str((int(x) + int(y)) % 2)
    group_mul = {(f, x, y): z2(x, y) for f, xs in hom.items() for x in xs for y in xs}
    wr = {}
    wl = {}
    for h, f in comp1:
        hf = comp1[(h, f)]
        for x in hom[f]:
            wr[(h, f, x)] = x if hf == "f" and f == "f" else ("0" if hf != "f" else x)
        for x in hom[h]:
            wl[(h, f, x)] = x if hf == "f" and h == "f" else ("0" if hf != "f" else x)
    return strict_two_category(
        objects=("a", "b"),
        one_cells=one_cells,
        comp1=comp1,
        id1={"a": "ia", "b": "ib"},
        hom_groups=hom,
        group_mul=group_mul,
        whisker_r_map=wr,
        whisker_l_map=wl,
    )


def two_object_z2_homs() -> FinBicategory:
    """Objects a, b; an invertible 1-cell pair f: a -> b, g: b -> a (strictly
    inverse); every hom-set of 2-cells is Z/2.  Eight 2-cells, strict."""
    one_cells = {"ia": ("a", "a"), "ib": ("b", "b"), "f": ("a", "b"), "g": ("b", "a")}
    comp1 = {}
    for h, (hs, ht) in one_cells.items():
        for f, (fs, ft) in one_cells.items():
            if ft != hs:
                continue
            walk = {"ia": "a", "ib": "b"}.get(h)
            if h.startswith("i"):
                comp1[(h, f)] = f
            elif f.startswith("i"):
                comp1[(h, f)] = h
            else:
                comp1[(h, f)] = "ia" if f == "f" else "ib"
    hom = {f: ("0", "1") for f in one_cells}
    z2 = lambda x, y: str((int(x) + int(y)) % 2)
    group_mul = {(f, x, y): z2(x, y) for f in one_cells for x in "01" for y in "01"}
    wr = {(h, f, x): x for (h, f) in comp1 for x in "01"}
    wl = {(h, f, x): x for (h, f) in comp1 for x in "01"}
    return strict_two_category(
        objects=("a", "b"),
        one_cells=one_cells,
        comp1=comp1,
        id1={"a": "ia", "b": "ib"},
        hom_groups=hom,
        group_mul=group_mul,
        whisker_r_map=wr,
        whisker_l_map=wl,
    )


def smg_from_commutative_monoid(elements: tuple[str, ...], mul, unit: str) -> SymMonGroupoid:
    """A commutative monoid as a discrete symmetric monoidal groupoid."""
    bic = group_as_discrete_21(elements, mul, unit)
    braiding = {}
    for A in elements:
        for B in elements:
            assert mul(A, B) == mul(B, A), "braiding needs commutativity"
            braiding[(A, B)] = bic.id2[mul(A, B)]
    return SymMonGroupoid(bic=bic, braiding=braiding)


def z2_smg() -> SymMonGroupoid:
    return smg_from_commutative_monoid(("e", "g"), lambda a, b: "e" if a == b else "g", "e")


def max_monoid_smg() -> SymMonGroupoid:
    """({0,1}, max) as a discrete symmetric monoidal groupoid; not grouplike."""
    return smg_from_commutative_monoid(
        ("0", "1"), lambda a, b: str(max(int(a), int(b))), "0"
    )


def trivial_group_smg() -> SymMonGroupoid:
    return smg_from_commutative_monoid(("e",), lambda a, b: "e", "e")


def sparse_two_object() -> FancyBicategory:
    return fancify_sparse(two_object_z2_homs())
