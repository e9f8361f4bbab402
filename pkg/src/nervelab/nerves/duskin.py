"""The Duskin nerve of a (2,1)-category, as a 3-truncated coskeletal presheaf.

Cells: dimension 0 the objects, 1 the 1-morphisms, 2 the quadruples
(h, g, f ; eta) with eta: g => h*f, 3 the sphere quadruples of 2-cells whose
even and odd faces compose equally up to the associator.  The canonical
algebraic structure fills the inner 2-horn on (g, f) by the identity on g*f.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..presheaf import TruncatedPresheaf, generator_maps
from ..shapes import delta_shape
from ..shapes.delta import MultiMap, SimplexMap, codegeneracy, coface
from ..structures import FinBicategory, check_bicategory


def two_cell_id(h: str, g: str, f: str, eta: str) -> str:
    return f"({h},{g},{f};{eta})"


def three_cell_id(faces: tuple) -> str:
    return "[" + ",".join(faces) + "]"


@dataclass
class DuskinNerve:
    presheaf: TruncatedPresheaf
    chi: dict  # (g, f) -> preferred 2-cell id
    interior: dict  # 2-cell id -> 2-morphism of the source structure
    frame: dict  # 2-cell id -> (h, g, f)


def _condition(b: FinBicategory, fr, intr, a, bb, c, d) -> bool:
    """alpha * (x23 |> eta_012) * eta_023 == (eta_123 <| x01) * eta_013."""
    x23 = fr[a][0]
    x12 = fr[d][0]
    x01 = fr[d][2]
    lhs = b.bullet(
        b.alpha[(x23, x12, x01)], b.bullet(b.wr(x23, intr[d]), intr[bb])
    )
    rhs = b.bullet(b.wl(intr[a], x01), intr[c])
    return lhs == rhs


def duskin_nerve(b: FinBicategory, check: bool = True) -> DuskinNerve:
    if check:
        rep = check_bicategory(b, "(2,1)")
        if not rep.ok:
            raise ValueError(f"input fails the (2,1) axioms: {rep.failures()[:3]}")
    sh = delta_shape(1)
    cells = {(0,): tuple(b.objects), (1,): tuple(b.one_cells)}
    interior: dict = {}
    frame: dict = {}
    two: list[str] = []
    for h in b.one_cells:
        for f in b.one_cells:
            if b.tgt1[f] != b.src1[h]:
                continue
            hf = b.compose1(h, f)
            for g in b.hom1(b.src1[f], b.tgt1[h]):
                for eta in b.hom2(g, hf):
                    cid = two_cell_id(h, g, f, eta)
                    two.append(cid)
                    interior[cid] = eta
                    frame[cid] = (h, g, f)
    cells[(2,)] = tuple(two)

    d0 = {x: frame[x][0] for x in two}
    d1 = {x: frame[x][1] for x in two}
    d2 = {x: frame[x][2] for x in two}

    def s0_1(f: str) -> str:
        return two_cell_id(f, f, b.id1[b.src1[f]], b.rho[f])

    def s1_1(f: str) -> str:
        return two_cell_id(b.id1[b.tgt1[f]], f, f, b.lam[f])

    three: list[str] = []
    faces3: dict = {}
    by_d0: dict = {}
    for x in two:
        by_d0.setdefault(d0[x], []).append(x)
    for a in two:
        for bb in by_d0.get(d0[a], []):
            for c in two:
                if d0[c] != d1[a] or d1[c] != d1[bb]:
                    continue
                for dd in two:
                    if d0[dd] != d2[a] or d1[dd] != d2[bb] or d2[dd] != d2[c]:
                        continue
                    if _condition(b, frame, interior, a, bb, c, dd):
                        cid = three_cell_id((a, bb, c, dd))
                        three.append(cid)
                        faces3[cid] = (a, bb, c, dd)
    cells[(3,)] = tuple(three)

    action: dict = {}

    def put(f: MultiMap, table: dict) -> None:
        action[f] = table

    mm = lambda s: MultiMap((s,))
    put(mm(coface(1, 0)), {f: b.tgt1[f] for f in b.one_cells})
    put(mm(coface(1, 1)), {f: b.src1[f] for f in b.one_cells})
    put(mm(codegeneracy(0, 0)), {a: b.id1[a] for a in b.objects})
    put(mm(coface(2, 0)), d0)
    put(mm(coface(2, 1)), d1)
    put(mm(coface(2, 2)), d2)
    put(mm(codegeneracy(1, 0)), {f: s0_1(f) for f in b.one_cells})
    put(mm(codegeneracy(1, 1)), {f: s1_1(f) for f in b.one_cells})
    for i in range(4):
        put(mm(coface(3, i)), {x: faces3[x][i] for x in three})
    s2_0 = {x: three_cell_id((x, x, s0_1(d1[x]), s0_1(d2[x]))) for x in two}
    s2_1 = {x: three_cell_id((s0_1(d0[x]), x, x, s1_1(d2[x]))) for x in two}
    s2_2 = {x: three_cell_id((s1_1(d0[x]), s1_1(d1[x]), x, x)) for x in two}
    put(mm(codegeneracy(2, 0)), s2_0)
    put(mm(codegeneracy(2, 1)), s2_1)
    put(mm(codegeneracy(2, 2)), s2_2)

    p = TruncatedPresheaf(sh, 3, cells, action, coskeletal=3)
    chi = {}
    for g, f in b.composable1():
        gf = b.compose1(g, f)
        chi[(g, f)] = two_cell_id(g, gf, f, b.id2[gf])
    return DuskinNerve(presheaf=p, chi=chi, interior=interior, frame=frame)


def duskin_nerve_functor(F, nb: DuskinNerve, nc: DuskinNerve) -> dict:
    """The presheaf morphism N(F): N(B) -> N(C) of a strictly
    identity-preserving functor, as per-object cell maps."""
    B, C = F.source, F.target
    out = {
        (0,): {a: F.f0[a] for a in B.objects},
        (1,): {f: F.f1[f] for f in B.one_cells},
    }
    two = {}
    for x, (h, g, f) in nb.frame.items():
        eta = nb.interior[x]
        img = two_cell_id(
            F.f1[h], F.f1[g], F.f1[f], C.bullet(F.phi[(h, f)], F.f2[eta])
        )
        two[x] = img
    out[(2,)] = two
    three = {}
    for x in nb.presheaf.cells_at((3,)):
        faces = tuple(
            nb.presheaf.act(MultiMap((coface(3, i),)), x) for i in range(4)
        )
        three[x] = three_cell_id(tuple(two[y] for y in faces))
    out[(3,)] = three
    return out


def presheaf_map_ok(p: TruncatedPresheaf, q: TruncatedPresheaf, cellmap: dict) -> bool:
    """Whether the per-object map commutes with all generator operators."""
    for e in generator_maps(p.shape, p.trunc):
        for x in p.cells_at(e.target):
            if cellmap[e.target][x] not in q.cells_at(e.target):
                return False
            if q.act(e, cellmap[e.target][x]) != cellmap[e.source][p.act(e, x)]:
                return False
    return True
