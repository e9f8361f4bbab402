"""The Gamma-nerve of a small symmetric monoidal groupoid.

Cells: a single 0-cell; 1-cells the objects; 2-cells quadruples
(x1, x12m, x2 ; x12) with x12 : x12m -> x2*x1 a morphism; 3-cells the
commuting three-legged diagrams out of the middle object, stored as their
boundary sphere in the coface order (23, (12)3, 1(23), 12, 13, (13)2).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..presheaf import TruncatedPresheaf
from ..shapes import gamma_shape
from ..shapes.gamma import coinsert, coswap
from ..structures import SymMonGroupoid, check_sym_mon
from .build import complete_to_dim3

POINT = "*"


def gamma_two_cell(x1: str, mid: str, x2: str, interior: str) -> str:
    return f"({x1},{mid},{x2};{interior})"


@dataclass
class GammaNerve:
    presheaf: TruncatedPresheaf
    chi: dict  # (A, B) -> preferred 2-cell, A the "2"-face, B the "1"-face
    interior: dict
    frame: dict  # 2-cell -> (x1, mid, x2)


def gamma_nerve(c: SymMonGroupoid, check: bool = True) -> GammaNerve:
    if check:
        rep = check_sym_mon(c)
        if not rep.ok:
            raise ValueError(f"input fails the symmetric monoidal axioms: {rep.failures()[:3]}")
    b = c.bic
    sh = gamma_shape()
    unit = b.id1[b.objects[0]]

    two = []
    interior: dict = {}
    frame: dict = {}
    for x1 in b.one_cells:
        for x2 in b.one_cells:
            tensor = b.compose1(x2, x1)
            for mid in b.one_cells:
                for eta in b.hom2(mid, tensor):
                    cid = gamma_two_cell(x1, mid, x2, eta)
                    two.append(cid)
                    interior[cid] = eta
                    frame[cid] = (x1, mid, x2)

    # 2-truncation: faces (2, (12), 1) -> (x2, mid, x1); coswap is the
    # symmetric structure (A,B;f) -> (B,A; gamma_{x2,x1} * f)
    cells = {0: (POINT,), 1: tuple(b.one_cells), 2: tuple(two)}
    action: dict = {}
    cofaces2 = sh.cofaces(2)
    face_values = {
        0: {x: frame[x][2] for x in two},  # "2"
        1: {x: frame[x][1] for x in two},  # "(12)"
        2: {x: frame[x][0] for x in two},  # "1"
    }
    for k, f in enumerate(cofaces2):
        action[f] = face_values[k]
    action[sh.cofaces(1)[0]] = {f: POINT for f in b.one_cells}
    action[coswap(2, 1)] = {
        x: gamma_two_cell(
            frame[x][2],
            frame[x][1],
            frame[x][0],
            b.bullet(c.braiding[(frame[x][2], frame[x][0])], interior[x]),
        )
        for x in two
    }
    action[coinsert(1, 0)] = {POINT: unit}

    def s0_1(A: str) -> str:
        return gamma_two_cell(unit, A, A, b.rho[A])

    def s1_1(A: str) -> str:
        return gamma_two_cell(A, A, unit, b.lam[A])

    action[coinsert(2, 0)] = {A: s0_1(A) for A in b.one_cells}
    action[coinsert(2, 1)] = {A: s1_1(A) for A in b.one_cells}
    p2 = TruncatedPresheaf(sh, 2, cells, action, None)

    spheres = list(_three_cells(c, two, interior, frame))
    full = complete_to_dim3(p2, {3: spheres})
    chi = {}
    for A in b.one_cells:
        for B in b.one_cells:
            ab = b.compose1(A, B)
            chi[(A, B)] = gamma_two_cell(B, ab, A, b.id2[ab])
    return GammaNerve(presheaf=full, chi=chi, interior=interior, frame=frame)


def _three_cells(c: SymMonGroupoid, two, interior, frame):
    """Spheres [a, b, cc, d, e, f] whose three legs agree.

    a = (x2, x23m, x3; x23)   b = (x12m, x123m, x3; x12_3)
    cc = (x1, x123m, x23m; x1_23)   d = (x1, x12m, x2; x12)
    e = (x1, x13m, x3; x13)   f = (x13m, x123m, x2; x13_2)
    """
    b = c.bic
    by_frame: dict = {}
    for x in two:
        by_frame.setdefault(frame[x], []).append(x)

    def cells_with(x1, mid, x2):
        return by_frame.get((x1, mid, x2), ())

    for d in two:
        x1, x12m, x2 = frame[d]
        for a in two:
            if frame[a][0] != x2:
                continue
            _, x23m, x3 = frame[a]
            for bb in cells_with(x12m, None, x3) if False else two:
                if frame[bb][0] != x12m or frame[bb][2] != x3:
                    continue
                x123m = frame[bb][1]
                left_leg = None
                for cc in cells_with(x1, x123m, x23m):
                    leg0 = b.bullet(b.wl(interior[a], x1), interior[cc])
                    leg1 = b.bullet(
                        b.alpha[(x3, x2, x1)],
                        b.bullet(b.wr(x3, interior[d]), interior[bb]),
                    )
                    if leg0 != leg1:
                        continue
                    for e in two:
                        if frame[e][0] != x1 or frame[e][2] != x3:
                            continue
                        x13m = frame[e][1]
                        for ff in cells_with(x13m, x123m, x2):
                            leg2 = b.bullet(
                                b.wl(c.braiding[(x2, x3)], x1),
                                b.bullet(
                                    b.alpha[(x2, x3, x1)],
                                    b.bullet(b.wr(x2, interior[e]), interior[ff]),
                                ),
                            )
                            if leg2 == leg0:
                                yield (a, bb, cc, d, e, ff)
