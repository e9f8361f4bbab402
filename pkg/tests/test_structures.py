import copy
import itertools

import pytest

from nervelab.instances import (
    max_monoid_smg,
    terminal_21,
    two_object_z2_homs,
    walking_2cell_21,
    z2_discrete_21,
    z2_smg,
)
from nervelab.structures import (
    BicFunctor,
    check_bicategory,
    check_fancy,
    check_functor,
    check_sym_mon,
    check_vdc,
    es_construction,
    fancify_complete,
    fancify_sparse,
    is_grouplike,
    is_strict,
    structure_from_json,
    structure_to_json,
)


def all_instances():
    return [terminal_21(), z2_discrete_21(), walking_2cell_21(), two_object_z2_homs()]


def test_bicategory_axioms_pass():
    for b in all_instances():
        assert check_bicategory(b, "(2,1)").ok


def test_pentagon_mutation_detected_with_witness():
    b = two_object_z2_homs()
    key = ("f", "g", "f")  # no identity 1-cell: axioms 13-15 cannot see it
    corrupted = copy.deepcopy(b)
    f = corrupted.compose1(corrupted.compose1(key[0], key[1]), key[2])
    other = next(e for e in corrupted.hom2(f, f) if e != corrupted.alpha[key])
    corrupted.alpha[key] = other
    rep = check_bicategory(corrupted, "(2,1)")
    assert not rep.ok
    pentagon = [c for c in rep.checks if c.axiom == "17 pentagon" and not c.passed]
    assert pentagon and pentagon[0].witness is not None
    # the witness re-evaluates to the reported inequality
    i, h, g, fcell = pentagon[0].witness
    lhs = corrupted.bullet(
        corrupted.wl(corrupted.alpha[(i, h, g)], fcell),
        corrupted.bullet(
            corrupted.alpha[(i, corrupted.compose1(h, g), fcell)],
            corrupted.wr(i, corrupted.alpha[(h, g, fcell)]),
        ),
    )
    rhs = corrupted.bullet(
        corrupted.alpha[(corrupted.compose1(i, h), g, fcell)],
        corrupted.alpha[(i, h, corrupted.compose1(g, fcell))],
    )
    assert lhs != rhs


def test_sym_mon_axioms_and_grouplike():
    rep = check_sym_mon(z2_smg())
    assert rep.ok and is_grouplike(z2_smg())
    rep = check_sym_mon(max_monoid_smg())
    assert rep.ok and not is_grouplike(max_monoid_smg())


def test_braiding_mutation_gives_bmg_witness():
    c = z2_smg()
    corrupted = copy.deepcopy(c)
    # a non-natural choice: swap the braiding at one slot with a wrong frame
    corrupted.braiding[("e", "g")] = corrupted.bic.id2["e"]
    rep = check_sym_mon(corrupted)
    assert not rep.ok
    assert any("braiding" in chk.axiom or chk.axiom.startswith("BMG") for chk in rep.failures())


def test_hexlike_derived_identity():
    """gamma_{A o B, C} * alpha * gamma_{B o C, A} equals the other hexagon-like
    composite on every checked symmetric monoidal groupoid."""
    for c in (z2_smg(), max_monoid_smg()):
        b = c.bic
        gam = c.braiding
        for A in b.one_cells:
            for B in b.one_cells:
                for C in b.one_cells:
                    lhs = b.bullet(
                        gam[(b.compose1(A, B), C)],
                        b.bullet(b.alpha[(A, B, C)], gam[(b.compose1(B, C), A)]),
                    )
                    rhs = b.bullet(
                        b.wr(C, gam[(B, A)]),
                        b.bullet(
                            b.inv[b.alpha[(C, B, A)]], b.wl(gam[(B, C)], A)
                        ),
                    )
                    assert lhs == rhs


def test_vdc_axioms_for_es_constructions():
    for fan in (fancify_sparse(two_object_z2_homs()), fancify_complete(walking_2cell_21())):
        d = es_construction(fan)
        assert check_vdc(d).ok


def test_es_terminal_is_terminal():
    d = es_construction(fancify_complete(terminal_21()))
    assert len(d.squares) == 1 and check_vdc(d).ok


def test_vdc_identity_table_mutation_detected():
    d = es_construction(fancify_sparse(two_object_z2_homs()))
    corrupted = copy.deepcopy(d)
    f = next(iter(corrupted.id_h))
    candidates = [
        s
        for s in corrupted.squares
        if corrupted.frame(s) == corrupted.frame(corrupted.id_h[f]) and s != corrupted.id_h[f]
    ]
    corrupted.id_h[f] = candidates[0]
    rep = check_vdc(corrupted)
    assert not rep.ok
    assert any(chk.axiom.startswith(("VDC5", "VDC6", "VDC7", "VDC10")) for chk in rep.failures())


def test_middle_associativity_and_cancellation_derived():
    d = es_construction(fancify_complete(walking_2cell_21()))
    V = d.V
    for th in d.squares:
        for pi in d.squares:
            if d.left[pi] != d.right[th]:
                continue
            qp = d.right[th]
            for theta in V.two_cells:
                if V.tgt2[theta] != qp:
                    continue
                for piv in V.two_cells:
                    if V.tgt2[piv] != qp or V.src2[piv] != V.src2[theta]:
                        continue
                    lhs = d.hcomp[(d.act_left[(pi, piv)], d.act_right[(th, theta)])]
                    mid = d.hcomp[(d.act_left[(pi, V.bullet(piv, V.inv[theta]))], th)]
                    rhs = d.hcomp[(pi, d.act_right[(th, V.bullet(V.inv[piv], theta)) ])]
                    assert lhs == mid == rhs
                    if piv == theta:
                        assert lhs == d.hcomp[(pi, th)]


def test_fancifications():
    B = two_object_z2_homs()
    assert is_strict(B)
    sparse = fancify_sparse(B)
    complete = fancify_complete(B)
    assert check_fancy(sparse).ok and check_fancy(complete).ok
    assert set(sparse.bbar.two_cells) == {B.id2[f] for f in B.one_cells}
    assert set(complete.bbar.two_cells) == set(B.two_cells)  # a (2,1)-category
    # complete fancification of a (2,1)-category has everything thin
    w = fancify_complete(walking_2cell_21())
    assert set(w.bbar.two_cells) == set(walking_2cell_21().two_cells)


def test_complete_fancification_excludes_noninvertible():
    # a strict 2-category with a non-invertible 2-cell: the 2-element
    # "absorbing" monoid on Hom(f, f)
    from nervelab.instances import strict_two_category

    one_cells = {"ia": ("a", "a"), "ib": ("b", "b"), "f": ("a", "b")}
    comp1 = {("ia", "ia"): "ia", ("ib", "ib"): "ib", ("f", "ia"): "f", ("ib", "f"): "f"}
    hom = {"ia": ("0",), "ib": ("0",), "f": ("0", "1")}
    absorb = lambda x, y: "1" if "1" in (x, y) else "0"
    gm = {(f, x, y): absorb(x, y) for f, xs in hom.items() for x in xs for y in xs}
    wr = {(h, f, x): x if comp1[(h, f)] == "f" and f == "f" else "0" for (h, f) in comp1 for x in hom[f]}
    wl = {(h, f, x): x if comp1[(h, f)] == "f" and h == "f" else "0" for (h, f) in comp1 for x in hom[h]}
    b = strict_two_category(
        ("a", "b"), one_cells, comp1, {"a": "ia", "b": "ib"}, hom, gm, wr, wl, invertible=False
    )
    assert check_bicategory(b, "bicategory").ok
    complete = fancify_complete(b)
    assert "1@f" in b.two_cells and "1@f" not in complete.bbar.two_cells
    assert check_fancy(complete).ok


def test_functor_axioms_for_z2_swap():
    b = z2_discrete_21()
    swap = {"e": "e", "g": "g"}
    F = BicFunctor(
        source=b,
        target=b,
        f0={"*": "*"},
        f1=dict(swap),
        f2={e: e for e in b.two_cells},
        phi={(g, f): b.id2[b.compose1(g, f)] for g, f in b.composable1()},
        upsilon={"*": b.id2["e"]},
    )
    assert check_functor(F).ok


def test_structure_json_roundtrip():
    for s in (walking_2cell_21(), z2_smg(), fancify_sparse(two_object_z2_homs())):
        doc = structure_to_json(s)
        back = structure_from_json(doc)
        assert structure_to_json(back) == doc
    d = es_construction(fancify_sparse(two_object_z2_homs()))
    doc = structure_to_json(d)
    assert structure_to_json(structure_from_json(doc)) == doc
