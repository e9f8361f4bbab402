"""Vdc: a Verity double category from an algebraic 2-reduced inner-Kan
bisimplicial presheaf, plus the bisimplicial roundtrips u and U."""

from __future__ import annotations

from dataclasses import dataclass

from ..nerves.build import sphere_id
from ..nerves.duskin import two_cell_id
from ..nerves.vdc import VdcNerve, vdc_nerve
from ..presheaf import TruncatedPresheaf
from ..shapes import delta_shape
from ..shapes.delta import MultiMap, SimplexMap, codegeneracy, coface
from ..structures import VerityDoubleCategory, check_vdc
from .bic import AlgebraicPresheaf, BicConstruction, ConstructionFailure, IsoReport, bic_from, check_cell_iso, roundtrip_U_delta


def _mm2(first, second, ranks):
    parts = (
        first if first is not None else SimplexMap.identity(ranks[0]),
        second if second is not None else SimplexMap.identity(ranks[1]),
    )
    return MultiMap(parts)


def row_presheaf(p: TruncatedPresheaf) -> TruncatedPresheaf:
    """The simplicial presheaf X_h = X(0, -)."""
    sh = delta_shape(1)
    cells = {(n,): p.cells_at((0, n)) for n in range(4)}
    action = {}
    for n in (1, 2, 3):
        for i in range(n + 1):
            action[MultiMap((coface(n, i),))] = dict(
                p.act_table(_mm2(None, coface(n, i), (0, n)))
            )
    for n in (0, 1, 2):
        for i in range(n + 1):
            action[MultiMap((codegeneracy(n, i),))] = dict(
                p.act_table(_mm2(None, codegeneracy(n, i), (0, n + 1)))
            )
    return TruncatedPresheaf(sh, 3, cells, action, coskeletal=3)


def column_presheaf(p: TruncatedPresheaf) -> TruncatedPresheaf:
    sh = delta_shape(1)
    cells = {(n,): p.cells_at((n, 0)) for n in range(4)}
    action = {}
    for n in (1, 2, 3):
        for i in range(n + 1):
            action[MultiMap((coface(n, i),))] = dict(
                p.act_table(_mm2(coface(n, i), None, (n, 0)))
            )
    for n in (0, 1, 2):
        for i in range(n + 1):
            action[MultiMap((codegeneracy(n, i),))] = dict(
                p.act_table(_mm2(codegeneracy(n, i), None, (n + 1, 0)))
            )
    return TruncatedPresheaf(sh, 3, cells, action, coskeletal=3)


@dataclass
class VdcConstruction:
    vdc: VerityDoubleCategory
    con_h: BicConstruction
    con_v: BicConstruction


def vdc_from(p: TruncatedPresheaf, chi_h: dict, chi_v: dict, check: bool = True) -> VdcConstruction:
    """The paper's Vdc(X, chi): H and V by Bic on the edge row and column,
    squares the (1,1)-cells, operations by unique inner-horn filling."""
    con_h = bic_from(AlgebraicPresheaf(row_presheaf(p), chi_h), check=check)
    con_v = bic_from(AlgebraicPresheaf(column_presheaf(p), chi_v), check=check)
    H, V = con_h.bic, con_v.bic
    squares = tuple(p.cells_at((1, 1)))
    bottom = dict(p.act_table(_mm2(coface(1, 0), None, (0, 1))))
    top = dict(p.act_table(_mm2(coface(1, 1), None, (0, 1))))
    right = dict(p.act_table(_mm2(None, coface(1, 0), (1, 0))))
    left = dict(p.act_table(_mm2(None, coface(1, 1), (1, 0))))

    cells12 = p.cells_at((1, 2))
    f12 = {
        "d0": p.act_table(_mm2(coface(1, 0), None, (0, 2))),
        "d1": p.act_table(_mm2(coface(1, 1), None, (0, 2))),
        "q0": p.act_table(_mm2(None, coface(2, 0), (1, 1))),
        "q1": p.act_table(_mm2(None, coface(2, 1), (1, 1))),
        "q2": p.act_table(_mm2(None, coface(2, 2), (1, 1))),
    }
    cells21 = p.cells_at((2, 1))
    f21 = {
        "d0": p.act_table(_mm2(coface(2, 0), None, (1, 1))),
        "d1": p.act_table(_mm2(coface(2, 1), None, (1, 1))),
        "d2": p.act_table(_mm2(coface(2, 2), None, (1, 1))),
        "q0": p.act_table(_mm2(None, coface(1, 0), (2, 0))),
        "q1": p.act_table(_mm2(None, coface(1, 1), (2, 0))),
    }

    def fill12(d0=None, d1=None, q0=None, q1=None, q2=None, want="q1"):
        spec = {"d0": d0, "d1": d1, "q0": q0, "q1": q1, "q2": q2}
        hits = [
            z
            for z in cells12
            if all(v is None or f12[k][z] == v for k, v in spec.items())
        ]
        if len(hits) != 1:
            raise ConstructionFailure(f"(1,2)-horn {spec} has {len(hits)} fillers")
        return f12[want][hits[0]]

    def fill21(d0=None, d1=None, d2=None, q0=None, q1=None, want="d1"):
        spec = {"d0": d0, "d1": d1, "d2": d2, "q0": q0, "q1": q1}
        hits = [
            z
            for z in cells21
            if all(v is None or f21[k][z] == v for k, v in spec.items())
        ]
        if len(hits) != 1:
            raise ConstructionFailure(f"(2,1)-horn {spec} has {len(hits)} fillers")
        return f21[want][hits[0]]

    s0_row = p.act_table(_mm2(None, codegeneracy(0, 0), (1, 0)))  # IdV of vertical 1-cells
    s0_col = p.act_table(_mm2(codegeneracy(0, 0), None, (0, 1)))  # IdH of horizontal 1-cells
    id_h = {f: s0_col[f] for f in H.one_cells}
    id_v = {q: s0_row[q] for q in V.one_cells}
    srow = row_presheaf(p)
    scol = column_presheaf(p)
    s0_h2 = srow.act_table(MultiMap((codegeneracy(1, 0),)))
    s0_v2 = scol.act_table(MultiMap((codegeneracy(1, 0),)))

    hcomp = {}
    for th in squares:
        for pi in squares:
            if left[pi] != right[th]:
                continue
            hcomp[(pi, th)] = fill12(
                d0=chi_h[(bottom[pi], bottom[th])],
                d1=chi_h[(top[pi], top[th])],
                q0=pi,
                q2=th,
            )
    vcomp = {}
    for th in squares:
        for pi in squares:
            if top[pi] != bottom[th]:
                continue
            vcomp[(pi, th)] = fill21(
                d0=pi,
                d2=th,
                q0=chi_v[(right[pi], right[th])],
                q1=chi_v[(left[pi], left[th])],
            )
    act_top, act_bottom, act_left, act_right = {}, {}, {}, {}
    for s in squares:
        for beta in H.two_cells:
            if H.tgt2[beta] == top[s]:
                act_top[(s, beta)] = fill12(d0=s0_h2[bottom[s]], d1=beta, q0=s, q2=id_v[left[s]])
            if H.tgt2[beta] == bottom[s]:
                act_bottom[(s, beta)] = fill12(d0=beta, d1=s0_h2[top[s]], q0=s, q2=id_v[left[s]])
        for eta in V.two_cells:
            if V.tgt2[eta] == left[s]:
                act_left[(s, eta)] = fill21(d0=s, d2=id_h[top[s]], q0=s0_v2[right[s]], q1=eta, want="d1")
            if V.tgt2[eta] == right[s]:
                act_right[(s, eta)] = fill21(d0=s, d2=id_h[top[s]], q0=eta, q1=s0_v2[left[s]], want="d1")

    vdc = VerityDoubleCategory(
        H=H,
        V=V,
        squares=squares,
        top=top,
        bottom=bottom,
        left=left,
        right=right,
        hcomp=hcomp,
        vcomp=vcomp,
        id_h=id_h,
        id_v=id_v,
        act_top=act_top,
        act_bottom=act_bottom,
        act_left=act_left,
        act_right=act_right,
        size_cap=max(64, len(squares)),
    )
    if check:
        rep = check_vdc(vdc)
        if not rep.ok:
            raise ConstructionFailure(f"Vdc output fails axioms: {rep.failures()[:3]}")
    return VdcConstruction(vdc=vdc, con_h=con_h, con_v=con_v)


def roundtrip_u_delta2(p: TruncatedPresheaf, chi_h: dict, chi_v: dict) -> tuple[IsoReport, VdcNerve]:
    """u: X -> N(Vdc(X)): Duskin u on the edges, the identity on squares."""
    con = vdc_from(p, chi_h, chi_v, check=False)
    nerve = vdc_nerve(con.vdc, check=False)
    q = nerve.presheaf
    sh = p.shape
    u_h, u_v = {}, {}
    for x in p.cells_at((0, 2)):
        faces = [p.act(_mm2(None, coface(2, i), (0, 2)), x) for i in range(3)]
        u_h[x] = two_cell_id(faces[0], faces[1], faces[2], con.con_h.underline(x))
    for x in p.cells_at((2, 0)):
        faces = [p.act(_mm2(coface(2, i), None, (2, 0)), x) for i in range(3)]
        u_v[x] = two_cell_id(faces[0], faces[1], faces[2], con.con_v.underline(x))
    cellmap = {
        (0, 0): {a: a for a in p.cells_at((0, 0))},
        (0, 1): {f: f for f in p.cells_at((0, 1))},
        (1, 0): {f: f for f in p.cells_at((1, 0))},
        (1, 1): {s: s for s in p.cells_at((1, 1))},
        (0, 2): u_h,
        (2, 0): u_v,
    }
    lower = dict(cellmap)
    for obj in ((0, 3), (3, 0), (1, 2), (2, 1)):
        table = {}
        cofaces = sh.cofaces(obj)
        for z in p.cells_at(obj):
            faces = tuple(
                lower[f.source][p.act(f, z)] for f in cofaces
            )
            table[z] = sphere_id(sh, obj, faces)
        cellmap[obj] = table
        lower[obj] = table
    report = IsoReport("u: X -> N(Vdc(X))")
    check_cell_iso(p, q, cellmap, report)
    for (g, f), cell in chi_h.items():
        if u_h[cell] != nerve.chi_h[(g, f)]:
            report.witnesses.append(("chi_h not preserved at", (g, f)))
    for (g, f), cell in chi_v.items():
        if u_v[cell] != nerve.chi_v[(g, f)]:
            report.witnesses.append(("chi_v not preserved at", (g, f)))
    return report, nerve


def roundtrip_U_delta2(d: VerityDoubleCategory) -> tuple[IsoReport, VdcNerve, VdcConstruction]:
    """U: D -> Vdc(N(D)): the Duskin U on H and V, the identity on squares."""
    nerve = vdc_nerve(d, check=False)
    con = vdc_from(nerve.presheaf, nerve.chi_h, nerve.chi_v, check=False)
    r = con.vdc
    report = IsoReport("U: D -> Vdc(N(D))")
    rep_h, _, _ = roundtrip_U_delta(d.H)
    rep_v, _, _ = roundtrip_U_delta(d.V)
    report.per_dimension["H"] = {"bijective": rep_h.ok, "operator_ok": rep_h.ok}
    report.per_dimension["V"] = {"bijective": rep_v.ok, "operator_ok": rep_v.ok}
    report.witnesses.extend(rep_h.witnesses)
    report.witnesses.extend(rep_v.witnesses)

    def U2h(eta: str) -> str:
        f, g = d.H.src2[eta], d.H.tgt2[eta]
        a = d.H.src1[f]
        return two_cell_id(g, f, d.H.id1[a], d.H.bullet(d.H.rho[g], eta))

    def U2v(eta: str) -> str:
        f, g = d.V.src2[eta], d.V.tgt2[eta]
        a = d.V.src1[f]
        return two_cell_id(g, f, d.V.id1[a], d.V.bullet(d.V.rho[g], eta))

    entry = {"bijective": set(r.squares) == set(d.squares), "operator_ok": True}
    report.per_dimension["squares"] = entry

    def expect(name, lhs, rhs, *w):
        if lhs != rhs:
            entry["operator_ok"] = False
            report.witnesses.append((name, *w))

    for key, val in d.hcomp.items():
        expect("hcomp", r.hcomp[key], val, key)
    for key, val in d.vcomp.items():
        expect("vcomp", r.vcomp[key], val, key)
    for f, val in d.id_h.items():
        expect("id_h", r.id_h[f], val, f)
    for q, val in d.id_v.items():
        expect("id_v", r.id_v[q], val, q)
    for (s, beta), val in d.act_top.items():
        expect("act_top", r.act_top[(s, U2h(beta))], val, s, beta)
    for (s, beta), val in d.act_bottom.items():
        expect("act_bottom", r.act_bottom[(s, U2h(beta))], val, s, beta)
    for (s, eta), val in d.act_left.items():
        expect("act_left", r.act_left[(s, U2v(eta))], val, s, eta)
    for (s, eta), val in d.act_right.items():
        expect("act_right", r.act_right[(s, U2v(eta))], val, s, eta)
    return report, nerve, con
