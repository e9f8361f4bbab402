"""The Theta_2 nerve of a fancy bicategory.

The simplicial part (objects <0..0>) is the Duskin nerve of the thin
(2,1)-category; <1>-cells are the 2-morphisms of the underlying bicategory.
A 3-dimensional sphere is a cell when its middle face is the composite the
other faces force: b = a * c over <2>, the whisker-conjugation formulas over
<1,0> and <0,1>, and the Duskin condition over <0,0,0>.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..presheaf import TruncatedPresheaf
from ..shapes import delta_shape, theta2_shape
from ..shapes.delta import MultiMap, SimplexMap, codegeneracy, coface
from ..shapes.gamma import phi
from ..shapes.theta2 import Theta2Map
from ..structures import FancyBicategory, check_fancy
from .build import complete_to_dim3
from .duskin import duskin_nerve


@dataclass
class Theta2Nerve:
    presheaf: TruncatedPresheaf
    chi: dict  # (g, f) -> preferred <0,0>-cell
    interior: dict
    frame: dict


def psi_pullback(p: TruncatedPresheaf) -> TruncatedPresheaf:
    """Restriction along [n] -> <0,...,0>: the simplicial part of a
    Theta_2 presheaf."""
    assert p.shape.name == "theta2"
    tsh = theta2_shape()
    sh = delta_shape(1)
    cells = {(n,): p.cells_at((0,) * n) for n in range(4)}

    def psi_map(f):
        src, tgt = (0,) * f.source, (0,) * f.target
        cover = phi(f)
        comps = {
            (j, i): SimplexMap.identity(0)
            for i in range(1, f.source + 1)
            for j in cover(i)
        }
        return Theta2Map.make(src, tgt, f, comps)

    action = {}
    for n in (1, 2, 3):
        for i in range(n + 1):
            action[MultiMap((coface(n, i),))] = dict(p.act_table(psi_map(coface(n, i))))
    for n in (0, 1, 2):
        for i in range(n + 1):
            action[MultiMap((codegeneracy(n, i),))] = dict(
                p.act_table(psi_map(codegeneracy(n, i)))
            )
    return TruncatedPresheaf(sh, 3, cells, action, coskeletal=3)


def theta2_nerve(b: FancyBicategory, check: bool = True) -> Theta2Nerve:
    if check:
        rep = check_fancy(b)
        if not rep.ok:
            raise ValueError(f"input fails the fancy bicategory axioms: {rep.failures()[:3]}")
    sh = theta2_shape()
    bt, bb = b.btilde, b.bbar
    nbar = duskin_nerve(bb, check=False)
    t_inv = {}
    for e in bb.two_cells:
        inv = bt.inverse_of(b.t[e])
        assert inv is not None
        t_inv[e] = inv

    cells = {
        (): tuple(bb.objects),
        (0,): tuple(bb.one_cells),
        (1,): tuple(bt.two_cells),
        (0, 0): nbar.presheaf.cells_at((2,)),
    }
    action: dict = {}
    cof = {obj: sh.cofaces(obj) for obj in [(0,), (1,), (0, 0)]}
    action[cof[(0,)][0]] = {f: bb.tgt1[f] for f in bb.one_cells}  # d_*|
    action[cof[(0,)][1]] = {f: bb.src1[f] for f in bb.one_cells}  # d_|*
    action[cof[(1,)][0]] = {e: bt.tgt2[e] for e in bt.two_cells}  # |1|
    action[cof[(1,)][1]] = {e: bt.src2[e] for e in bt.two_cells}  # |0|
    dd = {
        i: nbar.presheaf.act_table(MultiMap((coface(2, i),))) for i in range(3)
    }
    for k in range(3):
        action[cof[(0, 0)][k]] = dict(dd[k])
    for e in sh.elementary_epis(()):
        action[e] = {a: bb.id1[a] for a in bb.objects}
    s0bar = nbar.presheaf.act_table(MultiMap((codegeneracy(1, 0),)))
    s1bar = nbar.presheaf.act_table(MultiMap((codegeneracy(1, 1),)))
    for e in sh.elementary_epis((0,)):
        if len(e.source) == 1:  # <1> -> <0>: the 2-identity of btilde
            action[e] = {f: bt.id2[f] for f in bb.one_cells}
        elif e.type.values == (0, 0, 1):  # <0,0> -> <0> collapsing the first column
            action[e] = dict(s0bar)
        else:
            action[e] = dict(s1bar)
    p2 = TruncatedPresheaf(sh, 2, cells, action, None)

    three: dict = {}
    three[(0, 0, 0)] = [
        tuple(nbar.presheaf.act(MultiMap((coface(3, i),)), z) for i in range(4))
        for z in nbar.presheaf.cells_at((3,))
    ]
    two_sph = []
    for pi in bt.two_cells:
        for eta in bt.two_cells:
            if bt.src2[pi] == bt.tgt2[eta]:
                two_sph.append((pi, bt.bullet(pi, eta), eta))
    three[(2,)] = two_sph
    sph10 = []
    for gcell in nbar.presheaf.cells_at((2,)):
        hh, gp, fp = nbar.frame[gcell]
        for bcell in nbar.presheaf.cells_at((2,)):
            h2, g, f = nbar.frame[bcell]
            if h2 != hh:
                continue
            for eta in bt.hom2(f, fp):
                theta = bt.bullet(
                    t_inv[nbar.interior[gcell]],
                    bt.bullet(bt.wr(hh, eta), b.t[nbar.interior[bcell]]),
                )
                sph10.append((gcell, bcell, theta, eta))
    three[(1, 0)] = sph10
    sph01 = []
    for gcell in nbar.presheaf.cells_at((2,)):
        hp, gp, f = nbar.frame[gcell]
        for bcell in nbar.presheaf.cells_at((2,)):
            hh, g, f2 = nbar.frame[bcell]
            if f2 != f:
                continue
            for theta in bt.hom2(hh, hp):
                eta = bt.bullet(
                    t_inv[nbar.interior[gcell]],
                    bt.bullet(bt.wl(theta, f), b.t[nbar.interior[bcell]]),
                )
                sph01.append((theta, eta, gcell, bcell))
    three[(0, 1)] = sph01
    full = complete_to_dim3(p2, three)
    return Theta2Nerve(
        presheaf=full, chi=nbar.chi, interior=nbar.interior, frame=nbar.frame
    )
