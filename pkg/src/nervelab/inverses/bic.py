"""Reconstructing a (2,1)-category from an algebraic 2-reduced inner-Kan
simplicial presheaf, and the roundtrip isomorphisms u and U.

Every composite of the construction is the face of a unique inner-horn
filler; a missing or non-unique filler raises a construction failure naming
the horn, which is how insufficient certification surfaces.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..nerves.duskin import DuskinNerve, duskin_nerve, three_cell_id, two_cell_id
from ..presheaf import TruncatedPresheaf, generator_maps
from ..shapes.delta import MultiMap, codegeneracy, coface
from ..structures import AxiomReport, FinBicategory, check_bicategory


class ConstructionFailure(RuntimeError):
    pass


@dataclass
class AlgebraicPresheaf:
    """A presheaf with chosen fillers for its inner 2-dimensional horn classes."""

    presheaf: TruncatedPresheaf
    chi: dict  # (g, f) 1-cell pair -> preferred filling 2-cell

    @staticmethod
    def with_first_fillers(p: TruncatedPresheaf) -> "AlgebraicPresheaf":
        """chi from the first filler in canonical cell order."""
        helper = SimplicialHelper(p)
        chi = {}
        for g in p.cells_at((1,)):
            for f in p.cells_at((1,)):
                if helper.d1_1(g) != helper.d0_1(f):
                    continue
                fillers = [
                    z
                    for z in p.cells_at((2,))
                    if helper.d(0, z) == g and helper.d(2, z) == f
                ]
                if not fillers:
                    raise ConstructionFailure(f"no filler for the 2-horn [{g},-,{f}]")
                chi[(g, f)] = fillers[0]
        return AlgebraicPresheaf(p, chi)


class SimplicialHelper:
    """Face/degeneracy shorthand plus unique inner-horn filling for a
    simplicial presheaf truncated at 3."""

    def __init__(self, p: TruncatedPresheaf):
        assert p.shape.name == "delta"
        self.p = p
        self._d = {
            (n, i): p.act_table(MultiMap((coface(n, i),)))
            for n in (1, 2, 3)
            for i in range(n + 1)
        }
        self._s = {
            (n, i): p.act_table(MultiMap((codegeneracy(n, i),)))
            for n in (0, 1, 2)
            for i in range(n + 1)
        }
        self._three_by_faces = {}
        for z in p.cells_at((3,)):
            key = tuple(self._d[(3, i)][z] for i in range(4))
            self._three_by_faces.setdefault(key, []).append(z)

    def d(self, i: int, x: str) -> str:
        n = 2 if x in self._d[(2, 0)] else 3
        return self._d[(n, i)][x]

    def d0_1(self, f: str) -> str:
        return self._d[(1, 0)][f]

    def d1_1(self, f: str) -> str:
        return self._d[(1, 1)][f]

    def s0_0(self, a: str) -> str:
        return self._s[(0, 0)][a]

    def s0_1(self, f: str) -> str:
        return self._s[(1, 0)][f]

    def s1_1(self, f: str) -> str:
        return self._s[(1, 1)][f]

    def faces2(self, x: str) -> tuple:
        return tuple(self._d[(2, i)][x] for i in range(3))

    def fill3(self, faces: list) -> tuple:
        """Fill an inner 3-horn given as a face list with exactly one None;
        returns (filler 3-cell, the missing face).  Unique filler required."""
        missing = faces.index(None)
        assert 0 < missing < 3, "only inner horns are filled"
        hits = []
        for key, zs in self._three_by_faces.items():
            if all(f is None or key[i] == f for i, f in enumerate(faces)):
                hits.extend((z, key[missing]) for z in zs)
        if len(hits) != 1:
            horn = ",".join("-" if f is None else f for f in faces)
            raise ConstructionFailure(
                f"inner horn [{horn}] has {len(hits)} fillers (need exactly 1)"
            )
        return hits[0]


@dataclass
class BicConstruction:
    bic: FinBicategory
    helper: SimplicialHelper
    chi: dict
    underline_table: dict = field(default_factory=dict)

    def underline(self, x: str) -> str:
        return self.underline_table[x]


def bic_from(x: AlgebraicPresheaf, check: bool = True) -> BicConstruction:
    """The paper's Bic(X, chi) for a 2-reduced inner-Kan simplicial presheaf."""
    p = x.presheaf
    h = SimplicialHelper(p)
    chi = x.chi
    objects = tuple(p.cells_at((0,)))
    one_cells = tuple(p.cells_at((1,)))
    src1 = {f: h.d1_1(f) for f in one_cells}
    tgt1 = {f: h.d0_1(f) for f in one_cells}
    id1 = {a: h.s0_0(a) for a in objects}
    comp1 = {(g, f): h.d(1, chi[(g, f)]) for (g, f) in chi}

    two_cells = []
    src2, tgt2 = {}, {}
    for e in p.cells_at((2,)):
        g, f, deg = h.faces2(e)
        if deg == h.s0_0(src1[f]):
            two_cells.append(e)
            src2[e] = f
            tgt2[e] = g
    two_cells = tuple(two_cells)
    id2 = {f: h.s0_1(f) for f in one_cells}

    def fill_face(faces: list) -> str:
        return h.fill3(faces)[1]

    vert = {}
    for theta in two_cells:
        for eta in two_cells:
            if src2[theta] != tgt2[eta]:
                continue
            a = src1[src2[eta]]
            vert[(theta, eta)] = fill_face([theta, None, eta, id2[id1[a]]])

    def hat(eta: str) -> str:
        """The alt version of a 2-morphism (or back again)."""
        g0, g1, g2 = h.faces2(eta)
        if g2 == h.s0_0(src1[g1]):  # a 2-morphism f => g
            g = g0
            return fill_face([h.s1_1(g), None, eta, h.s0_1(g)])
        g = g2  # an alt-2-morphism
        z, _ = h.fill3([h.s1_1(g), eta, None, h.s0_1(g)])
        return h.d(2, z)

    underline_table = {}
    for e in p.cells_at((2,)):
        hh, g, f = h.faces2(e)
        z, val = h.fill3([chi[(hh, f)], e, None, h.s0_1(f)])
        underline_table[e] = val

    whisker_l = {}
    for eta in two_cells:
        g, hh = src2[eta], tgt2[eta]
        for f in one_cells:
            if tgt1[f] != src1[g]:
                continue
            alt = fill_face([hat(eta), None, chi[(g, f)], chi[(hh, f)]])
            whisker_l[(eta, f)] = hat(alt)
    whisker_r = {}
    for eta in two_cells:
        f, g = src2[eta], tgt2[eta]
        for hh in one_cells:
            if src1[hh] != tgt1[f]:
                continue
            whisker_r[(hh, eta)] = fill_face([chi[(hh, g)], chi[(hh, f)], None, eta])
    inv = {}
    for eta in two_cells:
        f, g = src2[eta], tgt2[eta]
        a = src1[f]
        inv[eta] = fill_face([eta, id2[g], None, id2[id1[a]]])

    rho = {f: underline_table[h.s0_1(f)] for f in one_cells}
    lam = {f: underline_table[hat(h.s0_1(f))] for f in one_cells}
    alpha = {}
    for hh in one_cells:
        for g in one_cells:
            if tgt1[g] != src1[hh]:
                continue
            for f in one_cells:
                if tgt1[f] != src1[g]:
                    continue
                gf = comp1[(g, f)]
                tilde = fill_face([chi[(hh, g)], chi[(hh, gf)], None, chi[(g, f)]])
                alpha[(hh, g, f)] = underline_table[tilde]

    bic = FinBicategory(
        objects=objects,
        one_cells=one_cells,
        src1=src1,
        tgt1=tgt1,
        two_cells=two_cells,
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
        size_cap=max(64, len(two_cells)),
    )
    if check:
        rep = check_bicategory(bic, "(2,1)")
        if not rep.ok:
            raise ConstructionFailure(f"Bic output fails axioms: {rep.failures()[:3]}")
    return BicConstruction(bic=bic, helper=h, chi=chi, underline_table=underline_table)


# -- roundtrip reports -------------------------------------------------------------


@dataclass
class IsoReport:
    direction: str
    per_dimension: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(v["bijective"] and v["operator_ok"] for v in self.per_dimension.values()) and not self.witnesses

    def to_json(self) -> dict:
        return {
            "direction": self.direction,
            "ok": self.ok,
            "per_dimension": self.per_dimension,
            "witnesses": [str(w) for w in self.witnesses],
        }


def check_cell_iso(p: TruncatedPresheaf, q: TruncatedPresheaf, cellmap: dict, report: IsoReport) -> None:
    """Record per-object bijectivity and generator-operator compatibility."""
    for obj in p.objects():
        mapped = [cellmap[obj][x] for x in p.cells_at(obj)]
        bij = len(set(mapped)) == len(mapped) and set(mapped) == set(q.cells_at(obj))
        report.per_dimension.setdefault(
            p.shape.format_obj(obj), {"bijective": True, "operator_ok": True}
        )
        if not bij:
            report.per_dimension[p.shape.format_obj(obj)]["bijective"] = False
            report.witnesses.append(("not bijective at", obj))
    for e in generator_maps(p.shape, p.trunc):
        for x in p.cells_at(e.target):
            if q.act(e, cellmap[e.target][x]) != cellmap[e.source][p.act(e, x)]:
                report.per_dimension[p.shape.format_obj(e.target)]["operator_ok"] = False
                report.witnesses.append(("operator mismatch", p.shape.map_key(e), x))


def roundtrip_u_delta(x: AlgebraicPresheaf) -> tuple[IsoReport, DuskinNerve, BicConstruction]:
    """u: (X, chi) -> N(Bic(X, chi)), the explicit strict isomorphism."""
    con = bic_from(x)
    nerve = duskin_nerve(con.bic, check=False)
    p, q = x.presheaf, nerve.presheaf
    h = con.helper
    cellmap = {
        (0,): {a: a for a in p.cells_at((0,))},
        (1,): {f: f for f in p.cells_at((1,))},
        (2,): {},
        (3,): {},
    }
    for e in p.cells_at((2,)):
        hh, g, f = h.faces2(e)
        cellmap[(2,)][e] = two_cell_id(hh, g, f, con.underline(e))
    for z in p.cells_at((3,)):
        faces = tuple(h.d(i, z) for i in range(4))
        cellmap[(3,)][z] = three_cell_id(tuple(cellmap[(2,)][y] for y in faces))
    report = IsoReport("u: X -> N(Bic(X))")
    check_cell_iso(p, q, cellmap, report)
    # strictness: chi goes to the canonical algebraic structure
    for (g, f), cell in x.chi.items():
        if cellmap[(2,)][cell] != nerve.chi[(g, f)]:
            report.witnesses.append(("chi not preserved at", (g, f)))
    return report, nerve, con


def roundtrip_U_delta(b: FinBicategory) -> tuple[IsoReport, DuskinNerve, BicConstruction]:
    """U: B -> Bic(N(B)), identity on objects and 1-morphisms, rho_g * eta on
    2-morphisms; verified as a strict functor isomorphism table by table."""
    nerve = duskin_nerve(b, check=False)
    con = bic_from(AlgebraicPresheaf(nerve.presheaf, nerve.chi), check=False)
    r = con.bic
    report = IsoReport("U: B -> Bic(N(B))")

    def U2(eta: str) -> str:
        f, g = b.src2[eta], b.tgt2[eta]
        a = b.src1[f]
        return two_cell_id(g, f, b.id1[a], b.bullet(b.rho[g], eta))

    ok = tuple(b.objects) == tuple(r.objects) and tuple(b.one_cells) == tuple(r.one_cells)
    report.per_dimension["objects/1-morphisms"] = {"bijective": ok, "operator_ok": ok}
    if not ok:
        report.witnesses.append(("object or 1-morphism sets differ",))
    mapped = [U2(e) for e in b.two_cells]
    bij = len(set(mapped)) == len(mapped) and set(mapped) == set(r.two_cells)
    entry = {"bijective": bij, "operator_ok": True}
    report.per_dimension["2-morphisms"] = entry

    def expect(name, lhs, rhs, *w):
        if lhs != rhs:
            entry["operator_ok"] = False
            report.witnesses.append((name, *w))

    for a in b.objects:
        expect("id1", b.id1[a], r.id1[a], a)
    for g, f in b.composable1():
        expect("comp1", b.compose1(g, f), r.compose1(g, f), g, f)
    for f in b.one_cells:
        expect("Id", U2(b.id2[f]), r.id2[f], f)
        expect("rho", U2(b.rho[f]), r.rho[f], f)
        expect("lam", U2(b.lam[f]), r.lam[f], f)
    for theta, eta in b.vert_composable():
        expect("vert", U2(b.bullet(theta, eta)), r.bullet(U2(theta), U2(eta)), theta, eta)
    for eta in b.two_cells:
        expect("inv", U2(b.inv[eta]), r.inv[U2(eta)], eta)
        f = b.src2[eta]
        for hh in b.one_cells:
            if b.src1[hh] == b.tgt1[f]:
                expect("whisker_r", U2(b.wr(hh, eta)), r.wr(hh, U2(eta)), hh, eta)
            if b.tgt1[hh] == b.src1[f]:
                expect("whisker_l", U2(b.wl(eta, hh)), r.wl(U2(eta), hh), eta, hh)
    for trip in _triples(b):
        expect("alpha", U2(b.alpha[trip]), r.alpha[trip], trip)
    return report, nerve, con


def _triples(b: FinBicategory):
    for hh in b.one_cells:
        for g in b.one_cells:
            if b.tgt1[g] != b.src1[hh]:
                continue
            for f in b.one_cells:
                if b.tgt1[f] == b.src1[g]:
                    yield (hh, g, f)
