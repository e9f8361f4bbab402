"""FBic: a fancy bicategory from an algebraic 2-reduced inner-Kan Theta_2
presheaf, plus the Theta_2 roundtrips u and U."""

from __future__ import annotations

from dataclasses import dataclass

from ..nerves.build import sphere_id
from ..nerves.duskin import two_cell_id
from ..nerves.theta2 import Theta2Nerve, psi_pullback, theta2_nerve
from ..presheaf import TruncatedPresheaf
from ..structures import FancyBicategory, FinBicategory, check_fancy
from .bic import AlgebraicPresheaf, BicConstruction, ConstructionFailure, IsoReport, bic_from, check_cell_iso, roundtrip_U_delta


@dataclass
class FBicConstruction:
    fancy: FancyBicategory
    con_bar: BicConstruction


def fbic_from(p: TruncatedPresheaf, chi: dict, check: bool = True) -> FBicConstruction:
    """bbar = Bic(psi* p); btilde has the <1>-cells as 2-morphisms, with
    composition, whiskering and the thin map t each given by the unique
    filler of its defining inner horn."""
    sh = p.shape
    con = bic_from(AlgebraicPresheaf(psi_pullback(p), chi), check=check)
    bb = con.bic

    cof1 = sh.cofaces((1,))
    tgt2 = dict(p.act_table(cof1[0]))
    src2 = dict(p.act_table(cof1[1]))
    two = tuple(p.cells_at((1,)))
    id2 = {
        f: p.act(next(e for e in sh.elementary_epis((0,)) if len(e.source) == 1), f)
        for f in bb.one_cells
    }

    cof2 = {obj: sh.cofaces(obj) for obj in [(2,), (1, 0), (0, 1)]}
    t2 = {obj: [p.act_table(f) for f in cof2[obj]] for obj in cof2}

    def fill(obj, spec: dict, want: int) -> str:
        tables = t2[obj]
        hits = [
            z
            for z in p.cells_at(obj)
            if all(tables[k][z] == v for k, v in spec.items())
        ]
        if len(hits) != 1:
            raise ConstructionFailure(
                f"{sh.format_obj(obj)}-horn {spec} has {len(hits)} fillers"
            )
        return tables[want][hits[0]]

    vert = {}
    for theta in two:
        for eta in two:
            if src2[theta] != tgt2[eta]:
                continue
            vert[(theta, eta)] = fill((2,), {0: theta, 2: eta}, 1)
    whisker_r = {}
    whisker_l = {}
    for eta in two:
        f, fp = src2[eta], tgt2[eta]
        for hh in bb.one_cells:
            if bb.src1[hh] == bb.tgt1[f]:
                whisker_r[(hh, eta)] = fill(
                    (1, 0), {0: chi[(hh, fp)], 1: chi[(hh, f)], 3: eta}, 2
                )
            if bb.tgt1[hh] == bb.src1[f]:
                whisker_l[(eta, hh)] = fill(
                    (0, 1), {0: eta, 2: chi[(fp, hh)], 3: chi[(f, hh)]}, 1
                )
    tmap = {}
    s0bar = {f: con.helper.s0_1(f) for f in bb.one_cells}
    for beta in bb.two_cells:
        f, g = bb.src2[beta], bb.tgt2[beta]
        tmap[beta] = fill((0, 1), {0: id2[g], 2: s0bar[g], 3: beta}, 1)

    btilde = FinBicategory(
        objects=bb.objects,
        one_cells=bb.one_cells,
        src1=dict(bb.src1),
        tgt1=dict(bb.tgt1),
        two_cells=two,
        src2=src2,
        tgt2=tgt2,
        id1=dict(bb.id1),
        comp1=dict(bb.comp1),
        id2=id2,
        vert=vert,
        whisker_r=whisker_r,
        whisker_l=whisker_l,
        rho={f: tmap[bb.rho[f]] for f in bb.one_cells},
        lam={f: tmap[bb.lam[f]] for f in bb.one_cells},
        alpha={k: tmap[v] for k, v in bb.alpha.items()},
        inv=None,
        size_cap=max(64, len(two)),
    )
    fancy = FancyBicategory(bbar=bb, btilde=btilde, t=tmap)
    if check:
        rep = check_fancy(fancy)
        if not rep.ok:
            raise ConstructionFailure(f"FBic output fails axioms: {rep.failures()[:3]}")
    return FBicConstruction(fancy=fancy, con_bar=con)


def roundtrip_u_theta2(p: TruncatedPresheaf, chi: dict) -> tuple[IsoReport, Theta2Nerve]:
    """u: X -> N_theta(FBic(X)): identity on <>, <0>, <1>; the Duskin u on the
    simplicial part; spheres on dimension 3."""
    con = fbic_from(p, chi, check=False)
    nerve = theta2_nerve(con.fancy, check=False)
    sh = p.shape
    cellmap = {
        (): {a: a for a in p.cells_at(())},
        (0,): {f: f for f in p.cells_at((0,))},
        (1,): {e: e for e in p.cells_at((1,))},
        (0, 0): {},
    }
    psi = psi_pullback(p)
    helper = con.con_bar.helper
    for x in p.cells_at((0, 0)):
        hh, g, f = helper.faces2(x)
        cellmap[(0, 0)][x] = two_cell_id(hh, g, f, con.con_bar.underline(x))
    for obj in ((2,), (1, 0), (0, 1), (0, 0, 0)):
        table = {}
        cofaces = sh.cofaces(obj)
        for z in p.cells_at(obj):
            faces = tuple(cellmap[f.source][p.act(f, z)] for f in cofaces)
            table[z] = sphere_id(sh, obj, faces)
        cellmap[obj] = table
    report = IsoReport("u: X -> N_theta(FBic(X))")
    check_cell_iso(p, nerve.presheaf, cellmap, report)
    for (g, f), cell in chi.items():
        if cellmap[(0, 0)][cell] != nerve.chi[(g, f)]:
            report.witnesses.append(("chi not preserved at", (g, f)))
    return report, nerve


def roundtrip_U_theta2(b: FancyBicategory) -> tuple[IsoReport, Theta2Nerve, FBicConstruction]:
    """U: B -> FBic(N_theta(B)): the Duskin U on the thin part, the literal
    identity on the underlying 2-morphisms; the square with t must commute."""
    nerve = theta2_nerve(b, check=False)
    con = fbic_from(nerve.presheaf, nerve.chi, check=False)
    r = con.fancy
    report = IsoReport("U: B -> FBic(N_theta(B))")
    rep_bar, _, _ = roundtrip_U_delta(b.bbar)
    report.per_dimension["thin (2,1)-category"] = {
        "bijective": rep_bar.ok,
        "operator_ok": rep_bar.ok,
    }
    report.witnesses.extend(rep_bar.witnesses)

    bt, rt = b.btilde, r.btilde
    entry = {"bijective": set(bt.two_cells) == set(rt.two_cells), "operator_ok": True}
    report.per_dimension["underlying 2-morphisms"] = entry

    def expect(name, lhs, rhs, *w):
        if lhs != rhs:
            entry["operator_ok"] = False
            report.witnesses.append((name, *w))

    for f in bt.one_cells:
        expect("Id", bt.id2[f], rt.id2[f], f)
    for key, val in bt.vert.items():
        expect("vert", rt.vert[key], val, key)
    for key, val in bt.whisker_r.items():
        expect("whisker_r", rt.whisker_r[key], val, key)
    for key, val in bt.whisker_l.items():
        expect("whisker_l", rt.whisker_l[key], val, key)

    def U2(beta: str) -> str:
        f, g = b.bbar.src2[beta], b.bbar.tgt2[beta]
        a = b.bbar.src1[f]
        return two_cell_id(g, f, b.bbar.id1[a], b.bbar.bullet(b.bbar.rho[g], beta))

    for beta in b.bbar.two_cells:
        expect("t square", r.t[U2(beta)], b.t[beta], beta)
    return report, nerve, con
