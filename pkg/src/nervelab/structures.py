"""Finite two-dimensional algebraic structures as lookup tables.

Everything is fully tabulated: a structure is a collection of named finite
tables, and every axiom checker is a finite conjunction of table equalities
evaluated on all applicable tuples, reporting the witnessing tuple on
failure.  Strict structures are represented as the general kind with identity
coherence tables.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

DEFAULT_SIZE_CAP = 64


@dataclass
class AxiomCheck:
    axiom: str
    passed: bool
    witness: tuple | None = None

    def __str__(self) -> str:
        status = "pass" if self.passed else f"FAIL at {self.witness}"
        return f"{self.axiom}: {status}"


@dataclass
class AxiomReport:
    checks: list[AxiomCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[AxiomCheck]:
        return [c for c in self.checks if not c.passed]

    def record(self, axiom: str, passed: bool, witness: tuple | None = None) -> None:
        current = next((c for c in self.checks if c.axiom == axiom), None)
        if current is None:
            self.checks.append(AxiomCheck(axiom, passed, witness))
        elif current.passed and not passed:
            current.passed = False
            current.witness = witness

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "axioms": [
                {"axiom": c.axiom, "passed": c.passed, "witness": _jsonable(c.witness)}
                for c in self.checks
            ],
        }


def _jsonable(witness):
    if witness is None:
        return None
    return [str(w) for w in witness]


class SizeCapExceeded(RuntimeError):
    pass


@dataclass
class FinBicategory:
    """A bicategory (or (2,1)-category, when ``inv`` is present) by tables.

    Whiskering conventions: ``whisker_r[(h, eta)]`` is h applied after
    (h*f => h*g for eta: f => g), ``whisker_l[(eta, f)]`` is f applied first
    (g*f => h*f for eta: g => h).  ``rho[f]: f => f*id`` and
    ``lam[f]: f => id*f``; ``alpha[(h,g,f)]: h*(g*f) => (h*g)*f``.
    """

    objects: tuple[str, ...]
    one_cells: tuple[str, ...]
    src1: dict
    tgt1: dict
    two_cells: tuple[str, ...]
    src2: dict  # 2-cell -> source 1-cell
    tgt2: dict
    id1: dict  # object -> identity 1-cell
    comp1: dict  # (g, f) -> g*f for tgt1[f] == src1[g]
    id2: dict  # 1-cell -> identity 2-cell
    vert: dict  # (theta, eta) -> theta*eta for src2[theta] == tgt2[eta]
    whisker_r: dict
    whisker_l: dict
    rho: dict
    lam: dict
    alpha: dict
    inv: dict | None = None
    size_cap: int = DEFAULT_SIZE_CAP

    # -- helpers --------------------------------------------------------------
    def hom1(self, a: str, b: str) -> list[str]:
        return [f for f in self.one_cells if self.src1[f] == a and self.tgt1[f] == b]

    def hom2(self, f: str, g: str) -> list[str]:
        return [e for e in self.two_cells if self.src2[e] == f and self.tgt2[e] == g]

    def compose1(self, g: str, f: str) -> str:
        return self.comp1[(g, f)]

    def bullet(self, theta: str, eta: str) -> str:
        return self.vert[(theta, eta)]

    def wr(self, h: str, eta: str) -> str:
        return self.whisker_r[(h, eta)]

    def wl(self, eta: str, f: str) -> str:
        return self.whisker_l[(eta, f)]

    def composable1(self):
        for g in self.one_cells:
            for f in self.one_cells:
                if self.tgt1[f] == self.src1[g]:
                    yield g, f

    def vert_composable(self):
        for theta in self.two_cells:
            for eta in self.two_cells:
                if self.src2[theta] == self.tgt2[eta]:
                    yield theta, eta

    def two_cells_from(self, a: str, b: str):
        for e in self.two_cells:
            if self.src1[self.src2[e]] == a and self.tgt1[self.src2[e]] == b:
                yield e

    def inverse_of(self, eta: str) -> str | None:
        """A two-sided bullet-inverse, if one exists in the tables."""
        f, g = self.src2[eta], self.tgt2[eta]
        for cand in self.hom2(g, f):
            if self.vert[(cand, eta)] == self.id2[f] and self.vert[(eta, cand)] == self.id2[g]:
                return cand
        return None

    def well_typed(self) -> AxiomReport:
        rep = AxiomReport()
        ok = True
        for f in self.one_cells:
            ok &= self.src1[f] in self.objects and self.tgt1[f] in self.objects
        rep.record("one-cell frames", ok)
        ok = True
        for e in self.two_cells:
            ok &= self.src2[e] in self.one_cells and self.tgt2[e] in self.one_cells
            ok &= self.src1[self.src2[e]] == self.src1[self.tgt2[e]]
            ok &= self.tgt1[self.src2[e]] == self.tgt1[self.tgt2[e]]
        rep.record("two-cell frames", ok)
        ok = all((g, f) in self.comp1 for g, f in self.composable1())
        rep.record("composition total", ok)
        ok = all((t, e) in self.vert for t, e in self.vert_composable())
        rep.record("vertical composition total", ok)
        ok = True
        for h in self.one_cells:
            for e in self.two_cells:
                if self.src1[h] == self.tgt1[self.src2[e]]:
                    ok &= (h, e) in self.whisker_r
                if self.tgt1[h] == self.src1[self.src2[e]]:
                    ok &= (e, h) in self.whisker_l
        rep.record("whiskering total", ok)
        ok = all(f in self.rho and f in self.lam for f in self.one_cells)
        for h, g, f in _triples(self):
            ok &= (h, g, f) in self.alpha
        rep.record("coherence tables total", ok)
        return rep


def _triples(b: FinBicategory):
    for h in b.one_cells:
        for g in b.one_cells:
            if b.tgt1[g] != b.src1[h]:
                continue
            for f in b.one_cells:
                if b.tgt1[f] == b.src1[g]:
                    yield h, g, f


def check_bicategory(b: FinBicategory, variant: str = "(2,1)") -> AxiomReport:
    """Evaluate the seventeen axioms; axiom 3 only for the (2,1) variant,
    invertibility of the coherence tables only for the plain variant."""
    if len(b.two_cells) > b.size_cap:
        raise SizeCapExceeded(f"{len(b.two_cells)} two-cells > cap {b.size_cap}")
    rep = b.well_typed()
    if not rep.ok:
        return rep
    try:
        return _bicategory_axioms(b, variant, rep)
    except KeyError as exc:
        rep.record("table domains consistent", False, (str(exc),))
        return rep


def _bicategory_axioms(b: FinBicategory, variant: str, rep: AxiomReport) -> AxiomReport:
    two_one = variant == "(2,1)"

    for eta in b.two_cells:
        f, g = b.src2[eta], b.tgt2[eta]
        rep.record(
            "1 vertical identity",
            b.bullet(eta, b.id2[f]) == eta and b.bullet(b.id2[g], eta) == eta,
            (eta,),
        )
    for iota in b.two_cells:
        for theta in b.two_cells:
            if b.src2[iota] != b.tgt2[theta]:
                continue
            for eta in b.two_cells:
                if b.src2[theta] != b.tgt2[eta]:
                    continue
                rep.record(
                    "2 vertical associativity",
                    b.bullet(iota, b.bullet(theta, eta)) == b.bullet(b.bullet(iota, theta), eta),
                    (iota, theta, eta),
                )
    if two_one:
        assert b.inv is not None, "(2,1) variant requires the inverse table"
        for eta in b.two_cells:
            f, g = b.src2[eta], b.tgt2[eta]
            inv = b.inv[eta]
            rep.record(
                "3 inverses",
                b.bullet(eta, inv) == b.id2[g] and b.bullet(inv, eta) == b.id2[f],
                (eta,),
            )
    for g, f in b.composable1():
        gf = b.compose1(g, f)
        rep.record(
            "4 whiskered identities",
            b.wr(g, b.id2[f]) == b.id2[gf] and b.wl(b.id2[g], f) == b.id2[gf],
            (g, f),
        )
    for theta, eta in b.vert_composable():
        a, bb = b.src1[b.src2[eta]], b.tgt1[b.src2[eta]]
        for i in b.one_cells:
            if b.src1[i] == bb:
                rep.record(
                    "5 right whiskering functorial",
                    b.bullet(b.wr(i, theta), b.wr(i, eta)) == b.wr(i, b.bullet(theta, eta)),
                    (i, theta, eta),
                )
            if b.tgt1[i] == a:
                rep.record(
                    "6 left whiskering functorial",
                    b.bullet(b.wl(theta, i), b.wl(eta, i)) == b.wl(b.bullet(theta, eta), i),
                    (theta, eta, i),
                )
    for eta in b.two_cells:
        f, g = b.src2[eta], b.tgt2[eta]
        a, bb = b.src1[f], b.tgt1[f]
        rep.record(
            "7 right unitor natural",
            b.bullet(b.wl(eta, b.id1[a]), b.rho[f]) == b.bullet(b.rho[g], eta),
            (eta,),
        )
        rep.record(
            "8 left unitor natural",
            b.bullet(b.wr(b.id1[bb], eta), b.lam[f]) == b.bullet(b.lam[g], eta),
            (eta,),
        )
    for eta in b.two_cells:
        f, g = b.src2[eta], b.tgt2[eta]
        a, bb = b.src1[f], b.tgt1[f]
        for h in b.one_cells:
            if b.src1[h] != bb:
                continue
            for i in b.one_cells:
                if b.src1[i] != b.tgt1[h]:
                    continue
                lhs = b.bullet(b.alpha[(i, h, g)], b.wr(i, b.wr(h, eta)))
                rhs = b.bullet(b.wr(b.compose1(i, h), eta), b.alpha[(i, h, f)])
                rep.record("9 associator natural (inner)", lhs == rhs, (i, h, eta))
    for eta in b.two_cells:
        g, h = b.src2[eta], b.tgt2[eta]
        bb = b.src1[g]
        for f in b.one_cells:
            if b.tgt1[f] != bb:
                continue
            for i in b.one_cells:
                if b.src1[i] != b.tgt1[g]:
                    continue
                lhs = b.bullet(b.alpha[(i, h, f)], b.wr(i, b.wl(eta, f)))
                rhs = b.bullet(b.wl(b.wr(i, eta), f), b.alpha[(i, g, f)])
                rep.record("10 associator natural (middle)", lhs == rhs, (i, eta, f))
    for eta in b.two_cells:
        h, i = b.src2[eta], b.tgt2[eta]
        c = b.src1[h]
        for g in b.one_cells:
            if b.tgt1[g] != c:
                continue
            for f in b.one_cells:
                if b.tgt1[f] != b.src1[g]:
                    continue
                lhs = b.bullet(b.alpha[(i, g, f)], b.wl(eta, b.compose1(g, f)))
                rhs = b.bullet(b.wl(b.wl(eta, g), f), b.alpha[(h, g, f)])
                rep.record("11 associator natural (outer)", lhs == rhs, (eta, g, f))
    for a in b.objects:
        rep.record("12 unitors on identity", b.lam[b.id1[a]] == b.rho[b.id1[a]], (a,))
    for g, f in b.composable1():
        a = b.src1[f]
        gf = b.compose1(g, f)
        rep.record(
            "13 right unitor vs associator",
            b.bullet(b.alpha[(g, f, b.id1[a])], b.wr(g, b.rho[f])) == b.rho[gf],
            (g, f),
        )
        bb = b.tgt1[f]
        rep.record(
            "14 middle unitor vs associator",
            b.wl(b.rho[g], f) == b.bullet(b.alpha[(g, b.id1[bb], f)], b.wr(g, b.lam[f])),
            (g, f),
        )
        c = b.tgt1[g]
        rep.record(
            "15 left unitor vs associator",
            b.wl(b.lam[g], f) == b.bullet(b.alpha[(b.id1[c], g, f)], b.lam[gf]),
            (g, f),
        )
    for eta in b.two_cells:
        f, g = b.src2[eta], b.tgt2[eta]
        bb = b.tgt1[f]
        for theta in b.two_cells:
            h, i = b.src2[theta], b.tgt2[theta]
            if b.src1[h] != bb:
                continue
            lhs = b.bullet(b.wr(i, eta), b.wl(theta, f))
            rhs = b.bullet(b.wl(theta, g), b.wr(h, eta))
            rep.record("16 full interchange", lhs == rhs, (theta, eta))
    for i in b.one_cells:
        for h in b.one_cells:
            if b.tgt1[h] != b.src1[i]:
                continue
            for g in b.one_cells:
                if b.tgt1[g] != b.src1[h]:
                    continue
                for f in b.one_cells:
                    if b.tgt1[f] != b.src1[g]:
                        continue
                    lhs = b.bullet(
                        b.wl(b.alpha[(i, h, g)], f),
                        b.bullet(b.alpha[(i, b.compose1(h, g), f)], b.wr(i, b.alpha[(h, g, f)])),
                    )
                    rhs = b.bullet(b.alpha[(b.compose1(i, h), g, f)], b.alpha[(i, h, b.compose1(g, f))])
                    rep.record("17 pentagon", lhs == rhs, (i, h, g, f))
    if not two_one:
        ok = all(b.inverse_of(b.rho[f]) is not None for f in b.one_cells)
        ok &= all(b.inverse_of(b.lam[f]) is not None for f in b.one_cells)
        ok &= all(b.inverse_of(b.alpha[t]) is not None for t in _triples(b))
        rep.record("coherence invertible", ok)
    return rep


def is_strict(b: FinBicategory) -> bool:
    return (
        all(b.rho[f] == b.id2[f] for f in b.one_cells)
        and all(b.lam[f] == b.id2[f] for f in b.one_cells)
        and all(b.alpha[t] == b.id2[b.compose1(b.compose1(t[0], t[1]), t[2])] for t in _triples(b))
    )


# -- functors -------------------------------------------------------------------


@dataclass
class BicFunctor:
    source: FinBicategory
    target: FinBicategory
    f0: dict
    f1: dict
    f2: dict
    phi: dict  # (g, f) -> invertible 2-cell F(g*f) => F(g)*F(f)
    upsilon: dict  # a -> invertible 2-cell F(id_a) => id_Fa


def check_functor(F: BicFunctor) -> AxiomReport:
    rep = AxiomReport()
    B, C = F.source, F.target
    ok = all(F.f0[a] in C.objects for a in B.objects)
    ok &= all(F.f1[f] in C.one_cells for f in B.one_cells)
    ok &= all(F.f2[e] in C.two_cells for e in B.two_cells)
    rep.record("BFun0 well-typed", ok)
    for f in B.one_cells:
        rep.record("BFun1 identities", F.f2[B.id2[f]] == C.id2[F.f1[f]], (f,))
    for theta, eta in B.vert_composable():
        rep.record(
            "BFun2 vertical functorial",
            C.bullet(F.f2[theta], F.f2[eta]) == F.f2[B.bullet(theta, eta)],
            (theta, eta),
        )
    for eta in B.two_cells:
        f, g = B.src2[eta], B.tgt2[eta]
        bb = B.tgt1[f]
        for h in B.one_cells:
            if B.src1[h] != bb:
                continue
            lhs = C.bullet(F.phi[(h, g)], F.f2[B.wr(h, eta)])
            rhs = C.bullet(C.wr(F.f1[h], F.f2[eta]), F.phi[(h, f)])
            rep.record("BFun3 distributor natural (right)", lhs == rhs, (h, eta))
    for eta in B.two_cells:
        g, h = B.src2[eta], B.tgt2[eta]
        for f in B.one_cells:
            if B.tgt1[f] != B.src1[g]:
                continue
            lhs = C.bullet(F.phi[(h, f)], F.f2[B.wl(eta, f)])
            rhs = C.bullet(C.wl(F.f2[eta], F.f1[f]), F.phi[(g, f)])
            rep.record("BFun4 distributor natural (left)", lhs == rhs, (eta, f))
    for h, g, f in _triples(B):
        lhs = C.bullet(
            C.alpha[(F.f1[h], F.f1[g], F.f1[f])],
            C.bullet(C.wr(F.f1[h], F.phi[(g, f)]), F.phi[(h, B.compose1(g, f))]),
        )
        rhs = C.bullet(
            C.wl(F.phi[(h, g)], F.f1[f]),
            C.bullet(F.phi[(B.compose1(h, g), f)], F.f2[B.alpha[(h, g, f)]]),
        )
        rep.record("BFun5 distributor vs associator", lhs == rhs, (h, g, f))
    for f in B.one_cells:
        a, bb = B.src1[f], B.tgt1[f]
        Ff = F.f1[f]
        lhs = C.rho[Ff]
        rhs = C.bullet(
            C.wr(Ff, F.upsilon[a]), C.bullet(F.phi[(f, B.id1[a])], F.f2[B.rho[f]])
        )
        rep.record("BFun6 right unitor", lhs == rhs, (f,))
        lhs = C.lam[Ff]
        rhs = C.bullet(
            C.wl(F.upsilon[bb], Ff), C.bullet(F.phi[(B.id1[bb], f)], F.f2[B.lam[f]])
        )
        rep.record("BFun7 left unitor", lhs == rhs, (f,))
    return rep


# -- symmetric monoidal groupoids ------------------------------------------------


@dataclass
class SymMonGroupoid:
    """A one-object (2,1)-category plus a braiding table gamma[(A,B)]."""

    bic: FinBicategory
    braiding: dict

    def __post_init__(self):
        assert len(self.bic.objects) == 1


def check_sym_mon(c: SymMonGroupoid) -> AxiomReport:
    b = c.bic
    rep = check_bicategory(b, "(2,1)")
    box = b.objects[0]
    unit = b.id1[box]
    gam = c.braiding
    ok = True
    for A in b.one_cells:
        for B in b.one_cells:
            g = gam.get((A, B))
            ok &= g is not None and b.src2[g] == b.compose1(A, B) and b.tgt2[g] == b.compose1(B, A)
    rep.record("braiding well-typed", ok)
    if not ok:
        return rep
    for A in b.one_cells:
        rep.record(
            "BMG1 braiding vs unitors",
            b.bullet(gam[(A, unit)], b.rho[A]) == b.lam[A],
            (A,),
        )
    for eta in b.two_cells:
        A, B = b.src2[eta], b.tgt2[eta]
        for C in b.one_cells:
            lhs = b.bullet(gam[(B, C)], b.wl(eta, C))
            rhs = b.bullet(b.wr(C, eta), gam[(A, C)])
            rep.record("BMG2 braiding natural (first)", lhs == rhs, (eta, C))
            lhs = b.bullet(gam[(C, B)], b.wr(C, eta))
            rhs = b.bullet(b.wl(eta, C), gam[(C, A)])
            rep.record("BMG3 braiding natural (second)", lhs == rhs, (C, eta))
    for A in b.one_cells:
        for B in b.one_cells:
            for C in b.one_cells:
                lhs = b.bullet(
                    b.alpha[(A, C, B)],
                    b.bullet(gam[(b.compose1(C, B), A)], b.alpha[(C, B, A)]),
                )
                rhs = b.bullet(
                    b.wl(gam[(C, A)], B),
                    b.bullet(b.alpha[(C, A, B)], b.wr(C, gam[(B, A)])),
                )
                rep.record("BMG4 first hexagon", lhs == rhs, (A, B, C))
                ia = b.inv[b.alpha[(B, A, C)]]
                ic = b.inv[b.alpha[(C, B, A)]]
                lhs = b.bullet(ia, b.bullet(gam[(C, b.compose1(B, A))], ic))
                rhs = b.bullet(
                    b.wr(B, gam[(C, A)]),
                    b.bullet(b.inv[b.alpha[(B, C, A)]], b.wl(gam[(C, B)], A)),
                )
                rep.record("BMG5 second hexagon", lhs == rhs, (A, B, C))
    for A in b.one_cells:
        for B in b.one_cells:
            rep.record(
                "SM symmetric",
                b.bullet(gam[(B, A)], gam[(A, B)]) == b.id2[b.compose1(A, B)],
                (A, B),
            )
    return rep


def is_grouplike(c: SymMonGroupoid) -> bool:
    b = c.bic
    unit = b.id1[b.objects[0]]
    for A in b.one_cells:
        if not any(b.hom2(b.compose1(A, inv), unit) for inv in b.one_cells):
            return False
    return True


# -- Verity double categories -----------------------------------------------------


@dataclass
class VerityDoubleCategory:
    H: FinBicategory
    V: FinBicategory
    squares: tuple[str, ...]
    top: dict
    bottom: dict
    left: dict
    right: dict
    hcomp: dict  # (Pi, Theta) -> Pi (right) beside Theta (left)
    vcomp: dict  # (Pi, Theta) -> Pi (below) under Theta (above)
    id_h: dict  # horizontal 1-cell f -> pseudo-identity square
    id_v: dict  # vertical 1-cell p -> pseudo-identity square
    act_top: dict
    act_bottom: dict
    act_left: dict
    act_right: dict
    size_cap: int = DEFAULT_SIZE_CAP

    def frame(self, s: str) -> tuple:
        return (self.top[s], self.bottom[s], self.left[s], self.right[s])

    def h_composable(self):
        for theta in self.squares:
            for pi in self.squares:
                if self.left[pi] == self.right[theta]:
                    yield pi, theta

    def v_composable(self):
        for theta in self.squares:
            for pi in self.squares:
                if self.top[pi] == self.bottom[theta]:
                    yield pi, theta

    def well_typed(self) -> AxiomReport:
        rep = AxiomReport()
        H, V = self.H, self.V
        ok = tuple(H.objects) == tuple(V.objects)
        rep.record("shared objects", ok)
        ok = True
        for s in self.squares:
            t, bm, l, r = self.frame(s)
            ok &= t in H.one_cells and bm in H.one_cells
            ok &= l in V.one_cells and r in V.one_cells
            ok &= H.src1[t] == V.src1[l] and H.tgt1[t] == V.src1[r]
            ok &= H.src1[bm] == V.tgt1[l] and H.tgt1[bm] == V.tgt1[r]
        rep.record("square frames", ok)
        ok = all((pi, th) in self.hcomp for pi, th in self.h_composable())
        ok &= all((pi, th) in self.vcomp for pi, th in self.v_composable())
        rep.record("compositions total", ok)
        for pi, th in self.h_composable():
            s = self.hcomp[(pi, th)]
            ok &= self.frame(s) == (
                H.compose1(self.top[pi], self.top[th]),
                H.compose1(self.bottom[pi], self.bottom[th]),
                self.left[th],
                self.right[pi],
            )
        for pi, th in self.v_composable():
            s = self.vcomp[(pi, th)]
            ok &= self.frame(s) == (
                self.top[th],
                self.bottom[pi],
                V.compose1(self.left[pi], self.left[th]),
                V.compose1(self.right[pi], self.right[th]),
            )
        rep.record("composition frames", ok)
        return rep

    def action_pairs(self, which: str):
        """(square, 2-morphism) pairs for which the given action is defined."""
        edge = {"top": self.top, "bottom": self.bottom, "left": self.left, "right": self.right}[
            which
        ]
        cat = self.H if which in ("top", "bottom") else self.V
        for s in self.squares:
            for beta in cat.two_cells:
                if cat.tgt2[beta] == edge[s]:
                    yield s, beta


def check_vdc(d: VerityDoubleCategory) -> AxiomReport:
    if len(d.squares) > d.size_cap:
        raise SizeCapExceeded(f"{len(d.squares)} squares > cap {d.size_cap}")
    rep = d.well_typed()
    if not rep.ok:
        return rep
    H, V = d.H, d.V
    acts = {
        "top": (d.act_top, H, d.top),
        "bottom": (d.act_bottom, H, d.bottom),
        "left": (d.act_left, V, d.left),
        "right": (d.act_right, V, d.right),
    }
    for name, (table, cat, edge) in acts.items():
        for s, beta in d.action_pairs(name):
            out = table.get((s, beta))
            ok = out is not None
            if ok:
                expected = dict(zip(("top", "bottom", "left", "right"), d.frame(s)))
                expected[name] = cat.src2[beta]
                ok = d.frame(out) == (
                    expected["top"],
                    expected["bottom"],
                    expected["left"],
                    expected["right"],
                )
            rep.record(f"action frames ({name})", ok, (s, beta))
        for s in d.squares:
            ident = cat.id2[edge[s]]
            rep.record(
                "VDC1 unital actions",
                table.get((s, ident)) == s,
                (name, s),
            )
    if not rep.ok:
        return rep
    for name, (table, cat, edge) in acts.items():
        for s in d.squares:
            for beta in cat.two_cells:
                if cat.tgt2[beta] != edge[s]:
                    continue
                for al in cat.two_cells:
                    if cat.tgt2[al] != cat.src2[beta]:
                        continue
                    rep.record(
                        "VDC2 associative actions",
                        table[(s, cat.bullet(beta, al))] == table[(table[(s, beta)], al)],
                        (name, s, beta, al),
                    )
    edges = list(acts.keys())
    for n1, n2 in itertools.combinations(edges, 2):
        t1, c1, e1 = acts[n1]
        t2, c2, e2 = acts[n2]
        for s in d.squares:
            for b1 in c1.two_cells:
                if c1.tgt2[b1] != e1[s]:
                    continue
                for b2 in c2.two_cells:
                    if c2.tgt2[b2] != e2[s]:
                        continue
                    rep.record(
                        "VDC3 actions commute",
                        t2[(t1[(s, b1)], b2)] == t1[(t2[(s, b2)], b1)],
                        (n1, n2, s, b1, b2),
                    )
    for pi, th in d.h_composable():
        comp = d.hcomp[(pi, th)]
        for eta in V.two_cells:
            if V.tgt2[eta] == d.left[th]:
                rep.record(
                    "VDC4 actions vs composition",
                    d.act_left[(comp, eta)] == d.hcomp[(pi, d.act_left[(th, eta)])],
                    ("left-hcomp", pi, th, eta),
                )
            if V.tgt2[eta] == d.right[pi]:
                rep.record(
                    "VDC4 actions vs composition",
                    d.act_right[(comp, eta)] == d.hcomp[(d.act_right[(pi, eta)], th)],
                    ("right-hcomp", pi, th, eta),
                )
    for pi, th in d.v_composable():
        comp = d.vcomp[(pi, th)]
        for beta in H.two_cells:
            if H.tgt2[beta] == d.top[th]:
                rep.record(
                    "VDC4 actions vs composition",
                    d.act_top[(comp, beta)] == d.vcomp[(pi, d.act_top[(th, beta)])],
                    ("top-vcomp", pi, th, beta),
                )
            if H.tgt2[beta] == d.bottom[pi]:
                rep.record(
                    "VDC4 actions vs composition",
                    d.act_bottom[(comp, beta)] == d.vcomp[(d.act_bottom[(pi, beta)], th)],
                    ("bottom-vcomp", pi, th, beta),
                )
    for a in H.objects:
        rep.record(
            "VDC5 identity square on objects",
            d.id_h[H.id1[a]] == d.id_v[V.id1[a]],
            (a,),
        )
    for g, f in H.composable1():
        rep.record(
            "VDC6 identity squares compose (h)",
            d.hcomp[(d.id_h[g], d.id_h[f])] == d.id_h[H.compose1(g, f)],
            (g, f),
        )
    for q, p in V.composable1():
        rep.record(
            "VDC6 identity squares compose (v)",
            d.vcomp[(d.id_v[q], d.id_v[p])] == d.id_v[V.compose1(q, p)],
            (q, p),
        )
    for beta in H.two_cells:
        f, g = H.src2[beta], H.tgt2[beta]
        rep.record(
            "VDC7 identity squares vs actions (h)",
            d.act_bottom[(d.act_top[(d.id_h[g], beta)], beta)] == d.id_h[f],
            (beta,),
        )
    for eta in V.two_cells:
        p, q = V.src2[eta], V.tgt2[eta]
        rep.record(
            "VDC7 identity squares vs actions (v)",
            d.act_right[(d.act_left[(d.id_v[q], eta)], eta)] == d.id_v[p],
            (eta,),
        )
    for pi, th in d.h_composable():
        comp = d.hcomp[(pi, th)]
        h_top, h_bot = d.top[pi], d.bottom[pi]
        g_top, g_bot = d.top[th], d.bottom[th]
        for beta in H.two_cells:
            if H.tgt2[beta] == g_top:
                rep.record(
                    "VDC8 interchange with whiskering",
                    d.hcomp[(pi, d.act_top[(th, beta)])]
                    == d.act_top[(comp, H.wr(h_top, beta))],
                    ("hcomp-top-inner", pi, th, beta),
                )
            if H.tgt2[beta] == h_top:
                rep.record(
                    "VDC8 interchange with whiskering",
                    d.hcomp[(d.act_top[(pi, beta)], th)]
                    == d.act_top[(comp, H.wl(beta, g_top))],
                    ("hcomp-top-outer", pi, th, beta),
                )
            if H.tgt2[beta] == g_bot:
                rep.record(
                    "VDC8 interchange with whiskering",
                    d.hcomp[(pi, d.act_bottom[(th, beta)])]
                    == d.act_bottom[(comp, H.wr(h_bot, beta))],
                    ("hcomp-bottom-inner", pi, th, beta),
                )
            if H.tgt2[beta] == h_bot:
                rep.record(
                    "VDC8 interchange with whiskering",
                    d.hcomp[(d.act_bottom[(pi, beta)], th)]
                    == d.act_bottom[(comp, H.wl(beta, g_bot))],
                    ("hcomp-bottom-outer", pi, th, beta),
                )
    for pi, th in d.v_composable():
        comp = d.vcomp[(pi, th)]
        q_l, q_r = d.left[pi], d.right[pi]
        p_l, p_r = d.left[th], d.right[th]
        for eta in V.two_cells:
            if V.tgt2[eta] == p_l:
                rep.record(
                    "VDC8 interchange with whiskering",
                    d.vcomp[(pi, d.act_left[(th, eta)])] == d.act_left[(comp, V.wr(q_l, eta))],
                    ("vcomp-left-inner", pi, th, eta),
                )
            if V.tgt2[eta] == q_l:
                rep.record(
                    "VDC8 interchange with whiskering",
                    d.vcomp[(d.act_left[(pi, eta)], th)] == d.act_left[(comp, V.wl(eta, p_l))],
                    ("vcomp-left-outer", pi, th, eta),
                )
            if V.tgt2[eta] == p_r:
                rep.record(
                    "VDC8 interchange with whiskering",
                    d.vcomp[(pi, d.act_right[(th, eta)])] == d.act_right[(comp, V.wr(q_r, eta))],
                    ("vcomp-right-inner", pi, th, eta),
                )
            if V.tgt2[eta] == q_r:
                rep.record(
                    "VDC8 interchange with whiskering",
                    d.vcomp[(d.act_right[(pi, eta)], th)] == d.act_right[(comp, V.wl(eta, p_r))],
                    ("vcomp-right-outer", pi, th, eta),
                )
    for pi, th in d.h_composable():
        for sg in d.squares:
            if d.left[sg] != d.right[pi]:
                continue
            lhs = d.act_bottom[
                (
                    d.act_top[
                        (
                            d.hcomp[(d.hcomp[(sg, pi)], th)],
                            H.alpha[(d.top[sg], d.top[pi], d.top[th])],
                        )
                    ],
                    H.alpha[(d.bottom[sg], d.bottom[pi], d.bottom[th])],
                )
            ]
            rep.record(
                "VDC9 composition vs associator (h)",
                lhs == d.hcomp[(sg, d.hcomp[(pi, th)])],
                (sg, pi, th),
            )
    for pi, th in d.v_composable():
        for sg in d.squares:
            if d.top[sg] != d.bottom[pi]:
                continue
            lhs = d.act_right[
                (
                    d.act_left[
                        (
                            d.vcomp[(d.vcomp[(sg, pi)], th)],
                            V.alpha[(d.left[sg], d.left[pi], d.left[th])],
                        )
                    ],
                    V.alpha[(d.right[sg], d.right[pi], d.right[th])],
                )
            ]
            rep.record(
                "VDC9 composition vs associator (v)",
                lhs == d.vcomp[(sg, d.vcomp[(pi, th)])],
                (sg, pi, th),
            )
    for s in d.squares:
        t, bm, l, r = d.frame(s)
        lhs = d.act_bottom[(d.act_top[(d.hcomp[(s, d.id_v[l])], H.rho[t])], H.rho[bm])]
        rep.record("VDC10 unitors (h, right)", lhs == s, (s,))
        lhs = d.act_bottom[(d.act_top[(d.hcomp[(d.id_v[r], s)], H.lam[t])], H.lam[bm])]
        rep.record("VDC10 unitors (h, left)", lhs == s, (s,))
        lhs = d.act_right[(d.act_left[(d.vcomp[(s, d.id_h[t])], V.rho[l])], V.rho[r])]
        rep.record("VDC10 unitors (v, top)", lhs == s, (s,))
        lhs = d.act_right[(d.act_left[(d.vcomp[(d.id_h[bm], s)], V.lam[l])], V.lam[r])]
        rep.record("VDC10 unitors (v, bottom)", lhs == s, (s,))
    for th in d.squares:
        for pi in d.squares:
            if d.left[pi] != d.right[th]:
                continue
            for th2 in d.squares:
                if d.top[th2] != d.bottom[th]:
                    continue
                for pi2 in d.squares:
                    if d.left[pi2] != d.right[th2] or d.top[pi2] != d.bottom[pi]:
                        continue
                    lhs = d.vcomp[(d.hcomp[(pi2, th2)], d.hcomp[(pi, th)])]
                    rhs = d.hcomp[(d.vcomp[(pi2, pi)], d.vcomp[(th2, th)])]
                    rep.record("VDC11 grid interchange", lhs == rhs, (th, pi, th2, pi2))
    return rep


# -- fancy bicategories -------------------------------------------------------------


@dataclass
class FancyBicategory:
    """bbar (2,1) and btilde share objects, 1-cells, their composition and
    identities; t maps bbar 2-cells to btilde 2-cells strictly."""

    bbar: FinBicategory
    btilde: FinBicategory
    t: dict


def check_fancy(b: FancyBicategory) -> AxiomReport:
    rep = AxiomReport()
    bb, bt = b.bbar, b.btilde
    rep.record("objects identified", tuple(bb.objects) == tuple(bt.objects))
    rep.record("one-cells identified", tuple(bb.one_cells) == tuple(bt.one_cells))
    rep.record(
        "one-cell structure identified",
        bb.comp1 == bt.comp1 and bb.id1 == bt.id1 and bb.src1 == bt.src1 and bb.tgt1 == bt.tgt1,
    )
    sub = check_bicategory(bb, "(2,1)")
    rep.record("thin (2,1)-category axioms", sub.ok, None if sub.ok else tuple(str(c) for c in sub.failures()[:1]))
    sub = check_bicategory(bt, "bicategory")
    rep.record("underlying bicategory axioms", sub.ok, None if sub.ok else tuple(str(c) for c in sub.failures()[:1]))
    ok = all(e in b.t and b.t[e] in bt.two_cells for e in bb.two_cells)
    rep.record("t total", ok)
    if not ok:
        return rep
    for e in bb.two_cells:
        rep.record(
            "t preserves frames",
            bt.src2[b.t[e]] == bb.src2[e] and bt.tgt2[b.t[e]] == bb.tgt2[e],
            (e,),
        )
    for f in bb.one_cells:
        rep.record("t strict on identities", b.t[bb.id2[f]] == bt.id2[f], (f,))
        rep.record("t strict on unitors", b.t[bb.rho[f]] == bt.rho[f] and b.t[bb.lam[f]] == bt.lam[f], (f,))
    for theta, eta in bb.vert_composable():
        rep.record(
            "t strict on vertical composition",
            b.t[bb.bullet(theta, eta)] == bt.bullet(b.t[theta], b.t[eta]),
            (theta, eta),
        )
    for h in bb.one_cells:
        for e in bb.two_cells:
            if bb.src1[h] == bb.tgt1[bb.src2[e]]:
                rep.record(
                    "t strict on right whiskering",
                    b.t[bb.wr(h, e)] == bt.wr(h, b.t[e]),
                    (h, e),
                )
            if bb.tgt1[h] == bb.src1[bb.src2[e]]:
                rep.record(
                    "t strict on left whiskering",
                    b.t[bb.wl(e, h)] == bt.wl(b.t[e], h),
                    (e, h),
                )
    for trip in _triples(bb):
        rep.record("t strict on associator", b.t[bb.alpha[trip]] == bt.alpha[trip], trip)
    return rep


def fancify_complete(b: FinBicategory) -> FancyBicategory:
    """bbar = the invertible 2-cells of b."""
    invertible = [e for e in b.two_cells if b.inverse_of(e) is not None]
    keep = set(invertible)
    bbar = FinBicategory(
        objects=b.objects,
        one_cells=b.one_cells,
        src1=dict(b.src1),
        tgt1=dict(b.tgt1),
        two_cells=tuple(invertible),
        src2={e: b.src2[e] for e in invertible},
        tgt2={e: b.tgt2[e] for e in invertible},
        id1=dict(b.id1),
        comp1=dict(b.comp1),
        id2=dict(b.id2),
        vert={k: v for k, v in b.vert.items() if k[0] in keep and k[1] in keep},
        whisker_r={k: v for k, v in b.whisker_r.items() if k[1] in keep},
        whisker_l={k: v for k, v in b.whisker_l.items() if k[0] in keep},
        rho=dict(b.rho),
        lam=dict(b.lam),
        alpha=dict(b.alpha),
        inv={e: b.inverse_of(e) for e in invertible},
        size_cap=b.size_cap,
    )
    return FancyBicategory(bbar=bbar, btilde=b, t={e: e for e in invertible})


def fancify_sparse(b: FinBicategory) -> FancyBicategory:
    """bbar = identity 2-cells only; requires b strict."""
    assert is_strict(b), "sparse fancification needs a strict bicategory"
    idents = tuple(b.id2[f] for f in b.one_cells)
    keep = set(idents)
    bbar = FinBicategory(
        objects=b.objects,
        one_cells=b.one_cells,
        src1=dict(b.src1),
        tgt1=dict(b.tgt1),
        two_cells=idents,
        src2={e: b.src2[e] for e in idents},
        tgt2={e: b.tgt2[e] for e in idents},
        id1=dict(b.id1),
        comp1=dict(b.comp1),
        id2=dict(b.id2),
        vert={k: v for k, v in b.vert.items() if k[0] in keep and k[1] in keep},
        whisker_r={k: v for k, v in b.whisker_r.items() if k[1] in keep},
        whisker_l={k: v for k, v in b.whisker_l.items() if k[0] in keep},
        rho=dict(b.rho),
        lam=dict(b.lam),
        alpha=dict(b.alpha),
        inv={e: e for e in idents},
        size_cap=b.size_cap,
    )
    return FancyBicategory(bbar=bbar, btilde=b, t={e: e for e in idents})


def es_construction(b: FancyBicategory) -> VerityDoubleCategory:
    """The edge-symmetric VDC of a fancy bicategory.

    A square with frame (top f', bottom g, left f, right g') is a 2-morphism
    g o f => g' o f' of btilde; compositions whisker with associator
    corrections, actions pre/post-compose through t.
    """
    bb, bt = b.bbar, b.btilde
    tmap = b.t
    t_inv = {e: bt_inverse(bt, tmap[e]) for e in bb.two_cells}

    squares = []
    frames = {}
    payload = {}
    for f in bt.one_cells:  # left
        for g in bt.one_cells:  # bottom
            if bt.src1[g] != bt.tgt1[f]:
                continue
            for fp in bt.one_cells:  # top
                if bt.src1[fp] != bt.src1[f]:
                    continue
                for gp in bt.one_cells:  # right
                    if bt.src1[gp] != bt.tgt1[fp] or bt.tgt1[gp] != bt.tgt1[g]:
                        continue
                    for theta in bt.hom2(bt.compose1(g, f), bt.compose1(gp, fp)):
                        name = f"sq[{fp}/{f}/{g}/{gp}:{theta}]"
                        squares.append(name)
                        frames[name] = (fp, g, f, gp)
                        payload[name] = theta
    by_data = {(frames[s], payload[s]): s for s in squares}

    def square(fp, g, f, gp, theta):
        return by_data[((fp, g, f, gp), theta)]

    top = {s: frames[s][0] for s in squares}
    bottom = {s: frames[s][1] for s in squares}
    left = {s: frames[s][2] for s in squares}
    right = {s: frames[s][3] for s in squares}

    hcomp = {}
    for th in squares:
        fp, g, f, gpp = frames[th]
        for pi in squares:
            if left[pi] != gpp:
                continue
            gp, h, _, hp = frames[pi]
            theta, piv = payload[th], payload[pi]
            val = _bullet_chain(
                bt,
                bt_inverse(bt, bt.alpha[(hp, gp, fp)]),
                bt.wl(piv, fp),
                bt.alpha[(h, gpp, fp)],
                bt.wr(h, theta),
                bt_inverse(bt, bt.alpha[(h, g, f)]),
            )
            hcomp[(pi, th)] = square(bt.compose1(gp, fp), bt.compose1(h, g), f, hp, val)
    vcomp = {}
    for th in squares:
        fp, gpp, f, gp = frames[th]
        for pi in squares:
            if top[pi] != gpp:
                continue
            _, h, g, hp = frames[pi]
            theta, piv = payload[th], payload[pi]
            val = _bullet_chain(
                bt,
                bt.alpha[(hp, gp, fp)],
                bt.wr(hp, theta),
                bt_inverse(bt, bt.alpha[(hp, gpp, f)]),
                bt.wl(piv, f),
                bt.alpha[(h, g, f)],
            )
            vcomp[(pi, th)] = square(fp, h, bt.compose1(g, f), bt.compose1(hp, gp), val)

    id_h = {}
    id_v = {}
    for f in bt.one_cells:
        a = bt.src1[f]
        bb_obj = bt.tgt1[f]
        id_h[f] = square(
            f, f, bt.id1[a], bt.id1[bb_obj], bt.bullet(bt.lam[f], bt_inverse(bt, bt.rho[f]))
        )
        id_v[f] = square(
            bt.id1[a], bt.id1[bb_obj], f, f, bt.bullet(bt.rho[f], bt_inverse(bt, bt.lam[f]))
        )

    act_top, act_bottom, act_left, act_right = {}, {}, {}, {}
    for s in squares:
        fp, g, f, gp = frames[s]
        theta = payload[s]
        for beta in bb.two_cells:
            if bb.tgt2[beta] == fp:
                e = bb.src2[beta]
                val = bt.bullet(bt.wr(gp, t_inv[beta]), theta)
                act_top[(s, beta)] = square(e, g, f, gp, val)
            if bb.tgt2[beta] == g:
                e = bb.src2[beta]
                val = bt.bullet(theta, bt.wl(tmap[beta], f))
                act_bottom[(s, beta)] = square(fp, e, f, gp, val)
            if bb.tgt2[beta] == f:
                e = bb.src2[beta]
                val = bt.bullet(theta, bt.wr(g, tmap[beta]))
                act_left[(s, beta)] = square(fp, g, e, gp, val)
            if bb.tgt2[beta] == gp:
                e = bb.src2[beta]
                val = bt.bullet(bt.wl(t_inv[beta], fp), theta)
                act_right[(s, beta)] = square(fp, g, f, e, val)

    return VerityDoubleCategory(
        H=bb,
        V=bb,
        squares=tuple(squares),
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
    )


def bt_inverse(bt: FinBicategory, e: str) -> str:
    inv = bt.inv[e] if bt.inv is not None and e in bt.inv else bt.inverse_of(e)
    assert inv is not None, f"2-cell {e} is not invertible"
    return inv


def _bullet_chain(b: FinBicategory, *cells: str) -> str:
    out = cells[-1]
    for c in reversed(cells[:-1]):
        out = b.bullet(c, out)
    return out


# -- structure serialization -----------------------------------------------------


def bicategory_to_json(b: FinBicategory) -> dict:
    enc = lambda table: {"|".join(k) if isinstance(k, tuple) else k: v for k, v in table.items()}
    return {
        "kind": "bicategory",
        "objects": list(b.objects),
        "one_cells": list(b.one_cells),
        "src1": dict(b.src1),
        "tgt1": dict(b.tgt1),
        "two_cells": list(b.two_cells),
        "src2": dict(b.src2),
        "tgt2": dict(b.tgt2),
        "id1": dict(b.id1),
        "comp1": enc(b.comp1),
        "id2": dict(b.id2),
        "vert": enc(b.vert),
        "whisker_r": enc(b.whisker_r),
        "whisker_l": enc(b.whisker_l),
        "rho": dict(b.rho),
        "lam": dict(b.lam),
        "alpha": enc(b.alpha),
        "inv": dict(b.inv) if b.inv is not None else None,
    }


def bicategory_from_json(doc: dict) -> FinBicategory:
    def dec(table, arity):
        return {tuple(k.split("|")) if arity > 1 else k: v for k, v in table.items()}

    return FinBicategory(
        objects=tuple(doc["objects"]),
        one_cells=tuple(doc["one_cells"]),
        src1=doc["src1"],
        tgt1=doc["tgt1"],
        two_cells=tuple(doc["two_cells"]),
        src2=doc["src2"],
        tgt2=doc["tgt2"],
        id1=doc["id1"],
        comp1=dec(doc["comp1"], 2),
        id2=doc["id2"],
        vert=dec(doc["vert"], 2),
        whisker_r=dec(doc["whisker_r"], 2),
        whisker_l=dec(doc["whisker_l"], 2),
        rho=doc["rho"],
        lam=doc["lam"],
        alpha=dec(doc["alpha"], 3),
        inv=doc.get("inv"),
    )


def structure_to_json(s) -> dict:
    if isinstance(s, FinBicategory):
        return bicategory_to_json(s)
    if isinstance(s, SymMonGroupoid):
        return {
            "kind": "sym_mon_groupoid",
            "bic": bicategory_to_json(s.bic),
            "braiding": {"|".join(k): v for k, v in s.braiding.items()},
        }
    if isinstance(s, FancyBicategory):
        return {
            "kind": "fancy_bicategory",
            "bbar": bicategory_to_json(s.bbar),
            "btilde": bicategory_to_json(s.btilde),
            "t": dict(s.t),
        }
    if isinstance(s, VerityDoubleCategory):
        enc = lambda table: {"|".join(k): v for k, v in table.items()}
        return {
            "kind": "vdc",
            "H": bicategory_to_json(s.H),
            "V": bicategory_to_json(s.V),
            "squares": list(s.squares),
            "top": dict(s.top),
            "bottom": dict(s.bottom),
            "left": dict(s.left),
            "right": dict(s.right),
            "hcomp": enc(s.hcomp),
            "vcomp": enc(s.vcomp),
            "id_h": dict(s.id_h),
            "id_v": dict(s.id_v),
            "act_top": enc(s.act_top),
            "act_bottom": enc(s.act_bottom),
            "act_left": enc(s.act_left),
            "act_right": enc(s.act_right),
        }
    raise TypeError(type(s))


def structure_from_json(doc: dict):
    kind = doc["kind"]
    if kind == "bicategory":
        return bicategory_from_json(doc)
    if kind == "sym_mon_groupoid":
        return SymMonGroupoid(
            bic=bicategory_from_json(doc["bic"]),
            braiding={tuple(k.split("|")): v for k, v in doc["braiding"].items()},
        )
    if kind == "fancy_bicategory":
        return FancyBicategory(
            bbar=bicategory_from_json(doc["bbar"]),
            btilde=bicategory_from_json(doc["btilde"]),
            t=dict(doc["t"]),
        )
    if kind == "vdc":
        dec = lambda table: {tuple(k.split("|")): v for k, v in table.items()}
        return VerityDoubleCategory(
            H=bicategory_from_json(doc["H"]),
            V=bicategory_from_json(doc["V"]),
            squares=tuple(doc["squares"]),
            top=doc["top"],
            bottom=doc["bottom"],
            left=doc["left"],
            right=doc["right"],
            hcomp=dec(doc["hcomp"]),
            vcomp=dec(doc["vcomp"]),
            id_h=doc["id_h"],
            id_v=doc["id_v"],
            act_top=dec(doc["act_top"]),
            act_bottom=dec(doc["act_bottom"]),
            act_left=dec(doc["act_left"]),
            act_right=dec(doc["act_right"]),
        )
    raise ValueError(kind)


def load_structure(path: str):
    with open(path, encoding="utf-8") as fh:
        return structure_from_json(json.load(fh))


def save_structure(s, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(structure_to_json(s), fh, indent=1, sort_keys=True)
