"""Flattening a Gamma presheaf to a symmetric quasimonoid and back.

phi_pullback restricts along Segal's functor (faces d_0, d_j, d_n become the
coskip, comerge, coskip operators); the 2-flattening is its homotopy quotient
h_2 together with the involution induced by the swap of the 2-element object.
Orb rebuilds a Gamma presheaf from a symmetric quasimonoid: dimensions at most
2 are kept, and a 3-sphere [a,b,c,d,e,f] is commutative exactly when
[a,b,c,d] and [e,b,sf,sd] are commutative in the quasimonoid.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..presheaf import TruncatedPresheaf
from ..shapes import delta_shape, gamma_shape
from ..shapes.delta import MultiMap, codegeneracy, coface
from ..shapes.gamma import coinsert, coswap, phi
from .build import complete_to_dim3
from .homotopy import h_m, homotopy_classes


@dataclass
class SymQuasimonoid:
    """A 2-reduced inner-Kan simplicial presheaf with one 0-cell and a
    symmetrizing involution on 2-cells."""

    presheaf: TruncatedPresheaf
    sigma: dict

    def check_structure(self) -> list[str]:
        """sigma^2 = id, d(sigma x) = [d2, d1, d0], sigma s0 = s1."""
        p = self.presheaf
        out = []
        if len(p.cells_at((0,))) != 1:
            out.append("not a quasimonoid: more than one 0-cell")
        d = {i: p.act_table(MultiMap((coface(2, i),))) for i in range(3)}
        for x in p.cells_at((2,)):
            sx = self.sigma[x]
            if self.sigma[sx] != x:
                out.append(f"sigma^2 != id at {x}")
            if (d[0][sx], d[1][sx], d[2][sx]) != (d[2][x], d[1][x], d[0][x]):
                out.append(f"sigma boundary law fails at {x}")
        s0 = p.act_table(MultiMap((codegeneracy(1, 0),)))
        s1 = p.act_table(MultiMap((codegeneracy(1, 1),)))
        for f in p.cells_at((1,)):
            if self.sigma[s0[f]] != s1[f]:
                out.append(f"sigma s0 != s1 at {f}")
        return out


def phi_pullback(p: TruncatedPresheaf) -> TruncatedPresheaf:
    """The simplicial presheaf with X_n = p(n) and operators along phi."""
    assert p.shape.name == "gamma"
    sh = delta_shape(1)
    cells = {(n,): p.cells_at(n) for n in range(4)}
    action = {}
    for n in (1, 2, 3):
        for i in range(n + 1):
            action[MultiMap((coface(n, i),))] = dict(p.act_table(phi(coface(n, i))))
    for n in (0, 1, 2):
        for i in range(n + 1):
            action[MultiMap((codegeneracy(n, i),))] = dict(p.act_table(phi(codegeneracy(n, i))))
    return TruncatedPresheaf(sh, 3, cells, action, None)


def fl2(p: TruncatedPresheaf) -> SymQuasimonoid:
    """The 2-flattening h_2 phi* with sigma induced by the swap."""
    flat = phi_pullback(p)
    q = h_m(flat, 2)
    swap = p.act_table(coswap(2, 1))
    rep = homotopy_classes(flat, (2,)).rep
    sigma = {rep[x]: rep[swap[x]] for x in p.cells_at(2)}
    return SymQuasimonoid(presheaf=q, sigma=sigma)


def orb(q: SymQuasimonoid, check: bool = True) -> TruncatedPresheaf:
    """The Gamma presheaf of a symmetric quasimonoid."""
    if check:
        problems = q.check_structure()
        if problems:
            raise ValueError(f"not a symmetric quasimonoid: {problems[:3]}")
    p = q.presheaf
    sh = gamma_shape()
    mm = lambda s: MultiMap((s,))
    d = {i: p.act_table(mm(coface(2, i))) for i in range(3)}
    cells = {0: p.cells_at((0,)), 1: p.cells_at((1,)), 2: p.cells_at((2,))}
    action = {}
    cofaces2 = sh.cofaces(2)  # (2, (12), 1) acting as (d0, d1, d2)
    action[cofaces2[0]] = dict(d[0])
    action[cofaces2[1]] = dict(d[1])
    action[cofaces2[2]] = dict(d[2])
    action[sh.cofaces(1)[0]] = {
        f: cells[0][0] for f in p.cells_at((1,))
    }
    action[coswap(2, 1)] = dict(q.sigma)
    action[coinsert(1, 0)] = {
        cells[0][0]: p.act(mm(codegeneracy(0, 0)), cells[0][0])
    }
    action[coinsert(2, 0)] = dict(p.act_table(mm(codegeneracy(1, 0))))
    action[coinsert(2, 1)] = dict(p.act_table(mm(codegeneracy(1, 1))))
    p2 = TruncatedPresheaf(sh, 2, cells, action, None)

    spheres = []
    sig = q.sigma
    d3 = {i: p.act_table(mm(coface(3, i))) for i in range(4)}
    simplicial_spheres = {}
    for z in p.cells_at((3,)):
        simplicial_spheres.setdefault(
            (d3[0][z], d3[1][z], d3[2][z], d3[3][z]), z
        )
    from ..presheaf import _search_assignments

    for assignment in _search_assignments(p2, 3, list(range(6)), {}):
        a, b, c, dd, e, f = (assignment[k] for k in range(6))
        if (a, b, c, dd) not in simplicial_spheres:
            continue
        if (e, b, sig[f], sig[dd]) not in simplicial_spheres:
            continue
        spheres.append((a, b, c, dd, e, f))
    return complete_to_dim3(p2, {3: spheres})
