"""The bisimplicial nerve of a Verity double category.

Edges are the Duskin nerves of the horizontal and vertical (2,1)-categories;
(1,1)-cells are the squares (faces: d0 bottom, d1 top, delta0 right, delta1
left); a (1,2)- or (2,1)-sphere is a cell exactly when its square composite,
acted on by the interiors of its edge 2-cells, returns the middle square.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..presheaf import TruncatedPresheaf
from ..shapes import delta_shape
from ..shapes.delta import MultiMap, SimplexMap, codegeneracy, coface
from ..structures import VerityDoubleCategory, check_vdc
from .build import complete_to_dim3
from .duskin import duskin_nerve, two_cell_id


def _mm2(first: SimplexMap | None, second: SimplexMap | None, ranks):
    parts = []
    parts.append(first if first is not None else SimplexMap.identity(ranks[0]))
    parts.append(second if second is not None else SimplexMap.identity(ranks[1]))
    return MultiMap(tuple(parts))


@dataclass
class VdcNerve:
    presheaf: TruncatedPresheaf
    chi_h: dict
    chi_v: dict
    interior_h: dict
    interior_v: dict
    frame_h: dict
    frame_v: dict


def vdc_nerve(d: VerityDoubleCategory, check: bool = True) -> VdcNerve:
    if check:
        rep = check_vdc(d)
        if not rep.ok:
            raise ValueError(f"input fails the VDC axioms: {rep.failures()[:3]}")
    sh = delta_shape(2)
    H, V = d.H, d.V
    nh = duskin_nerve(H, check=False)
    nv = duskin_nerve(V, check=False)

    cells = {
        (0, 0): tuple(H.objects),
        (0, 1): tuple(H.one_cells),
        (1, 0): tuple(V.one_cells),
        (0, 2): nh.presheaf.cells_at((2,)),
        (2, 0): nv.presheaf.cells_at((2,)),
        (1, 1): tuple(d.squares),
    }
    action: dict = {}

    def hrow(n: int, i: int):  # vertical coface acting within the H row
        return _mm2(None, coface(n, i), (0, n))

    def vcol(n: int, i: int):
        return _mm2(coface(n, i), None, (n, 0))

    h1 = nh.presheaf
    v1 = nv.presheaf
    for n in (1, 2):
        for i in range(n + 1):
            action[hrow(n, i)] = dict(h1.act_table(MultiMap((coface(n, i),))))
            action[vcol(n, i)] = dict(v1.act_table(MultiMap((coface(n, i),))))
    for n in (0, 1):
        for i in range(n + 1):
            action[_mm2(None, codegeneracy(n, i), (0, n + 1))] = dict(
                h1.act_table(MultiMap((codegeneracy(n, i),)))
            )
            action[_mm2(codegeneracy(n, i), None, (n + 1, 0))] = dict(
                v1.act_table(MultiMap((codegeneracy(n, i),)))
            )
    # square faces: d0 bottom, d1 top | delta0 right, delta1 left
    action[_mm2(coface(1, 0), None, (0, 1))] = {s: d.bottom[s] for s in d.squares}
    action[_mm2(coface(1, 1), None, (0, 1))] = {s: d.top[s] for s in d.squares}
    action[_mm2(None, coface(1, 0), (1, 0))] = {s: d.right[s] for s in d.squares}
    action[_mm2(None, coface(1, 1), (1, 0))] = {s: d.left[s] for s in d.squares}
    # pseudo-identity squares as degeneracies
    action[_mm2(codegeneracy(0, 0), None, (0, 1))] = {f: d.id_h[f] for f in H.one_cells}
    action[_mm2(None, codegeneracy(0, 0), (1, 0))] = {p: d.id_v[p] for p in V.one_cells}
    p2 = TruncatedPresheaf(sh, 2, cells, action, None)

    three: dict = {}
    three[(0, 3)] = [
        tuple(nh.presheaf.act(MultiMap((coface(3, i),)), z) for i in range(4))
        for z in nh.presheaf.cells_at((3,))
    ]
    three[(3, 0)] = [
        tuple(nv.presheaf.act(MultiMap((coface(3, i),)), z) for i in range(4))
        for z in nv.presheaf.cells_at((3,))
    ]
    # (1,2): [x1, x0 | Sigma, Pi, Theta], Pi = (Sigma hcomp Theta) top x0 bottom x1
    squares12 = []
    for theta in d.squares:
        for sigma in d.squares:
            if d.left[sigma] != d.right[theta]:
                continue
            comp = d.hcomp[(sigma, theta)]
            for x0 in nh.presheaf.cells_at((2,)):
                h_, g_, f_ = nh.frame[x0]
                if (h_, f_) != (d.top[sigma], d.top[theta]):
                    continue
                top_acted = d.act_top[(comp, nh.interior[x0])]
                for x1 in nh.presheaf.cells_at((2,)):
                    h2_, g2_, f2_ = nh.frame[x1]
                    if (h2_, f2_) != (d.bottom[sigma], d.bottom[theta]):
                        continue
                    pi = d.act_bottom[(top_acted, nh.interior[x1])]
                    squares12.append((x1, x0, sigma, pi, theta))
    three[(1, 2)] = squares12
    squares21 = []
    for theta in d.squares:
        for sigma in d.squares:
            if d.top[sigma] != d.bottom[theta]:
                continue
            comp = d.vcomp[(sigma, theta)]
            for y0 in nv.presheaf.cells_at((2,)):
                r_, q_, p_ = nv.frame[y0]
                if (r_, p_) != (d.left[sigma], d.left[theta]):
                    continue
                left_acted = d.act_left[(comp, nv.interior[y0])]
                for y1 in nv.presheaf.cells_at((2,)):
                    r2_, q2_, p2_ = nv.frame[y1]
                    if (r2_, p2_) != (d.right[sigma], d.right[theta]):
                        continue
                    pi = d.act_right[(left_acted, nv.interior[y1])]
                    squares21.append((sigma, pi, theta, y1, y0))
    three[(2, 1)] = squares21
    full = complete_to_dim3(p2, three)
    return VdcNerve(
        presheaf=full,
        chi_h=nh.chi,
        chi_v=nv.chi,
        interior_h=nh.interior,
        interior_v=nv.interior,
        frame_h=nh.frame,
        frame_v=nv.frame,
    )
