"""Sym: a symmetric monoidal groupoid from an algebraic symmetric
quasimonoid, plus the Gamma-pipeline roundtrip isomorphisms."""

from __future__ import annotations

from ..nerves.flatten import SymQuasimonoid, fl2
from ..nerves.gamma import GammaNerve, gamma_nerve, gamma_two_cell
from ..presheaf import TruncatedPresheaf
from ..shapes.gamma import coswap, parse_display_name
from ..structures import SymMonGroupoid, check_sym_mon
from .bic import AlgebraicPresheaf, BicConstruction, ConstructionFailure, IsoReport, bic_from, check_cell_iso


def sym_from(q: SymQuasimonoid, chi: dict, check: bool = True) -> tuple[SymMonGroupoid, BicConstruction]:
    """Bic of the underlying quasimonoid plus the braiding underline(sigma chi)."""
    con = bic_from(AlgebraicPresheaf(q.presheaf, chi), check=check)
    b = con.bic
    braiding = {}
    for A in b.one_cells:
        for B in b.one_cells:
            braiding[(A, B)] = con.underline(q.sigma[chi[(A, B)]])
    smg = SymMonGroupoid(bic=b, braiding=braiding)
    if check:
        rep = check_sym_mon(smg)
        if not rep.ok:
            raise ConstructionFailure(f"Sym output fails axioms: {rep.failures()[:3]}")
    return smg, con


def gamma_chi_as_simplicial(n: GammaNerve) -> dict:
    """Transport the nerve's preferred Gamma 2-horn fillers to the flattening:
    chi[(g, f)] fills the simplicial horn [g, -, f]."""
    return {(a, bb): cell for (a, bb), cell in n.chi.items()}


def first_fillers_gamma(p: TruncatedPresheaf) -> dict:
    """chi for a foreign Gamma presheaf: first filler in canonical order for
    each Lambda^2_{1|2} instance, keyed by (face-2 value, face-1 value)."""
    sh = p.shape
    cofaces = sh.cofaces(2)
    chi = {}
    ones = p.cells_at(1)
    t0 = p.act_table(cofaces[0])
    t2 = p.act_table(cofaces[2])
    for A in ones:
        for B in ones:
            fillers = sorted(z for z in p.cells_at(2) if t0[z] == A and t2[z] == B)
            if not fillers:
                raise ConstructionFailure(f"no filler for the Gamma 2-horn [{A},-,{B}]")
            chi[(A, B)] = fillers[0]
    return chi


def roundtrip_U_gamma(c: SymMonGroupoid) -> tuple[IsoReport, GammaNerve, SymMonGroupoid]:
    """U': C -> Sym(Fl_2(N_Gamma(C))): identity on objects, rho_B * eta on
    morphisms; strict braided functor, tables compared entry-wise."""
    nerve = gamma_nerve(c, check=False)
    q = fl2(nerve.presheaf)
    smg, con = sym_from(q, gamma_chi_as_simplicial(nerve), check=False)
    b, r = c.bic, smg.bic
    unit = b.id1[b.objects[0]]
    report = IsoReport("U': C -> Sym(Fl2(N_Gamma(C)))")

    def U2(eta: str) -> str:
        A, B = b.src2[eta], b.tgt2[eta]
        return gamma_two_cell(unit, A, B, b.bullet(b.rho[B], eta))

    ok = tuple(r.one_cells) == tuple(b.one_cells)
    report.per_dimension["objects"] = {"bijective": ok, "operator_ok": ok}
    mapped = [U2(e) for e in b.two_cells]
    entry = {"bijective": len(set(mapped)) == len(mapped) and set(mapped) == set(r.two_cells), "operator_ok": True}
    report.per_dimension["morphisms"] = entry

    def expect(name, lhs, rhs, *w):
        if lhs != rhs:
            entry["operator_ok"] = False
            report.witnesses.append((name, *w))

    for g, f in b.composable1():
        expect("tensor", b.compose1(g, f), r.compose1(g, f), g, f)
    for f in b.one_cells:
        expect("Id", U2(b.id2[f]), r.id2[f], f)
        expect("rho", U2(b.rho[f]), r.rho[f], f)
        expect("lam", U2(b.lam[f]), r.lam[f], f)
    for theta, eta in b.vert_composable():
        expect("vert", U2(b.bullet(theta, eta)), r.bullet(U2(theta), U2(eta)), theta, eta)
    for eta in b.two_cells:
        expect("inv", U2(b.inv[eta]), r.inv[U2(eta)], eta)
        for hh in b.one_cells:
            expect("whisker_r", U2(b.wr(hh, eta)), r.wr(hh, U2(eta)), hh, eta)
            expect("whisker_l", U2(b.wl(eta, hh)), r.wl(U2(eta), hh), eta, hh)
    for hh in b.one_cells:
        for g in b.one_cells:
            for f in b.one_cells:
                expect("alpha", U2(b.alpha[(hh, g, f)]), r.alpha[(hh, g, f)], hh, g, f)
    for A in b.one_cells:
        for B in b.one_cells:
            expect("braiding", U2(c.braiding[(A, B)]), smg.braiding[(A, B)], A, B)
    return report, nerve, smg


def roundtrip_u_gamma(p: TruncatedPresheaf, chi: dict | None = None) -> tuple[IsoReport, GammaNerve]:
    """u': X -> N_Gamma(Sym(Fl_2 X)) for a 2-reduced inner-Kan Gamma presheaf."""
    chi = chi if chi is not None else first_fillers_gamma(p)
    q = fl2(p)
    smg, con = sym_from(q, chi, check=False)
    nerve = gamma_nerve(smg, check=False)
    sh = p.shape
    cofaces2 = sh.cofaces(2)
    t2 = {k: p.act_table(f) for k, f in enumerate(cofaces2)}
    cellmap = {
        0: {x: "*" for x in p.cells_at(0)},
        1: {f: f for f in p.cells_at(1)},
        2: {},
        3: {},
    }
    for z in p.cells_at(2):
        x2, mid, x1 = t2[0][z], t2[1][z], t2[2][z]
        cellmap[2][z] = gamma_two_cell(x1, mid, x2, con.underline(z))
    cofaces3 = sh.cofaces(3)
    for z in p.cells_at(3):
        faces = tuple(cellmap[2][p.act(f, z)] for f in cofaces3)
        from ..nerves.build import sphere_id

        cellmap[3][z] = sphere_id(sh, 3, faces)
    report = IsoReport("u': X -> N_Gamma(Sym(Fl2(X)))")
    check_cell_iso(p, nerve.presheaf, cellmap, report)
    for (A, B), cell in chi.items():
        if cellmap[2][cell] != nerve.chi[(A, B)]:
            report.witnesses.append(("chi not preserved at", (A, B)))
    return report, nerve
