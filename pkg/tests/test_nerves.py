import itertools

import pytest

from nervelab.instances import (
    max_monoid_smg,
    terminal_21,
    trivial_group_smg,
    two_object_z2_homs,
    walking_2cell_21,
    z2_discrete_21,
    z2_smg,
)
from nervelab.kancheck import check_inner_kan, check_n_reduced
from nervelab.nerves.diagonal import diag, diag_star, diag_star_with_tuples, shuffles
from nervelab.nerves.duskin import duskin_nerve, duskin_nerve_functor, presheaf_map_ok, two_cell_id
from nervelab.nerves.flatten import fl2, orb, phi_pullback
from nervelab.nerves.gamma import gamma_nerve
from nervelab.nerves.homotopy import h_m, homotopic, homotopy_classes
from nervelab.nerves.theta2 import psi_pullback, theta2_nerve
from nervelab.nerves.vdc import vdc_nerve
from nervelab.presheaf import TruncatedPresheaf, terminal_presheaf
from nervelab.shapes.delta import MultiMap, SimplexMap, codegeneracy, coface
from nervelab.structures import BicFunctor, es_construction, fancify_complete, fancify_sparse


def test_duskin_nerve_sizes_and_validation():
    expected = {
        "terminal": (1, 1, 1, 1),
        "z2": (1, 2, 4, 8),
    }
    for name, b in (("terminal", terminal_21()), ("z2", z2_discrete_21())):
        n = duskin_nerve(b)
        sizes = tuple(len(n.presheaf.cells_at((k,))) for k in range(4))
        assert sizes == expected[name]
        assert not n.presheaf.validate()


def test_duskin_two_cells_are_quadruples():
    b = walking_2cell_21()
    n = duskin_nerve(b)
    for cid in n.presheaf.cells_at((2,)):
        h, g, f = n.frame[cid]
        eta = n.interior[cid]
        assert b.src2[eta] == g and b.tgt2[eta] == b.compose1(h, f)
        assert cid == two_cell_id(h, g, f, eta)


def test_duskin_refuses_unchecked_garbage():
    import copy

    b = copy.deepcopy(walking_2cell_21())
    key = ("ib", "f", "ia")
    b.alpha[key] = next(e for e in b.hom2("f", "f") if e != b.alpha[key])
    with pytest.raises(ValueError):
        duskin_nerve(b)
    # a structurally broken table is reported, not crashed on
    broken = copy.deepcopy(z2_discrete_21())
    broken.comp1[("g", "g")] = "g"
    from nervelab.structures import check_bicategory

    assert not check_bicategory(broken, "(2,1)").ok


def test_duskin_nerve_functor_swap_automorphism():
    b = z2_discrete_21()
    F = BicFunctor(
        source=b,
        target=b,
        f0={"*": "*"},
        f1={"e": "e", "g": "g"},
        f2={e: e for e in b.two_cells},
        phi={(g, f): b.id2[b.compose1(g, f)] for g, f in b.composable1()},
        upsilon={"*": b.id2["e"]},
    )
    nb = duskin_nerve(b)
    cellmap = duskin_nerve_functor(F, nb, nb)
    assert presheaf_map_ok(nb.presheaf, nb.presheaf, cellmap)
    # 2-cell action is (F(h), F(g), F(f) ; phi * F(eta))
    for x, (h, g, f) in nb.frame.items():
        eta = nb.interior[x]
        assert cellmap[(2,)][x] == two_cell_id(
            F.f1[h], F.f1[g], F.f1[f], b.bullet(F.phi[(h, f)], F.f2[eta])
        )
    # a strict functor sends preferred fillers to preferred fillers
    for (g, f), cell in nb.chi.items():
        assert cellmap[(2,)][cell] == nb.chi[(F.f1[g], F.f1[f])]


def test_gamma_nerve_explicit_description():
    n = gamma_nerve(z2_smg())
    assert len(n.presheaf.cells_at(0)) == 1
    assert len(n.presheaf.cells_at(1)) == 2
    assert len(n.presheaf.cells_at(2)) == 4  # the middle object is forced
    assert not n.presheaf.validate()
    t = gamma_nerve(trivial_group_smg())
    assert all(len(t.presheaf.cells_at(k)) == 1 for k in range(4))


def test_vdc_nerve_edges_are_duskin_nerves():
    d = es_construction(fancify_sparse(two_object_z2_homs()))
    n = vdc_nerve(d)
    nh = duskin_nerve(d.H, check=False)
    nv = duskin_nerve(d.V, check=False)
    for k in range(3):
        assert n.presheaf.cells_at((0, k)) == nh.presheaf.cells_at((k,))
        assert n.presheaf.cells_at((k, 0)) == nv.presheaf.cells_at((k,))
    # dimension 3: the same commutative spheres (ids are construction-local)
    row3 = {
        tuple(n.presheaf.act(f, z) for f in n.presheaf.shape.cofaces((0, 3)))
        for z in n.presheaf.cells_at((0, 3))
    }
    duskin3 = {
        tuple(nh.presheaf.act(f, z) for f in nh.presheaf.shape.cofaces((3,)))
        for z in nh.presheaf.cells_at((3,))
    }
    assert row3 == duskin3
    assert set(n.presheaf.cells_at((1, 1))) == set(d.squares)


def test_theta2_nerve_cells():
    B = two_object_z2_homs()
    sparse = fancify_sparse(B)
    n = theta2_nerve(sparse)
    assert set(n.presheaf.cells_at((1,))) == set(B.two_cells)
    nbar = duskin_nerve(sparse.bbar, check=False)
    assert n.presheaf.cells_at((0, 0)) == nbar.presheaf.cells_at((2,))
    assert n.presheaf.cells_at(()) == nbar.presheaf.cells_at((0,))
    # psi pullback recovers the Duskin nerve of the thin part
    psi = psi_pullback(n.presheaf)
    assert not psi.validate()
    for k in range(3):
        assert psi.cells_at((k,)) == nbar.presheaf.cells_at((k,))
    psi3 = {
        tuple(psi.act(f, z) for f in psi.shape.cofaces((3,)))
        for z in psi.cells_at((3,))
    }
    duskin3 = {
        tuple(nbar.presheaf.act(f, z) for f in nbar.presheaf.shape.cofaces((3,)))
        for z in nbar.presheaf.cells_at((3,))
    }
    assert psi3 == duskin3


def test_homotopy_is_equivalence_relation_on_acceptance_nerves():
    for p in (
        duskin_nerve(walking_2cell_21()).presheaf,
        phi_pullback(gamma_nerve(z2_smg()).presheaf),
    ):
        cells = p.cells_at((2,))
        for x in cells:
            assert homotopic(p, (2,), x, x)
        for x in cells:
            for y in cells:
                assert homotopic(p, (2,), x, y) == homotopic(p, (2,), y, x)
                for z in cells:
                    if homotopic(p, (2,), x, y) and homotopic(p, (2,), y, z):
                        assert homotopic(p, (2,), x, z)


def test_h2_of_reduced_is_isomorphic_copy():
    p = duskin_nerve(walking_2cell_21()).presheaf
    h = h_m(p, 2)
    assert h.cells_at((2,)) == tuple(sorted(p.cells_at((2,))))
    assert len(h.cells_at((3,))) == len(p.cells_at((3,)))
    assert not h.validate()


def _fatten(p: TruncatedPresheaf, victim: str) -> TruncatedPresheaf:
    """Clone a 2-cell; 3-cells become all sphere lifts of original 3-cells."""
    clone = victim + "*"
    sh = p.shape
    cells = dict(p.cells)
    cells[(2,)] = p.cells_at((2,)) + (clone,)
    lift = {victim: (victim, clone)}
    threes = []
    faces3 = {}
    for z in p.cells_at((3,)):
        base = tuple(p.act(f, z) for f in sh.cofaces((3,)))
        options = [lift.get(c, (c,)) for c in base]
        for combo in itertools.product(*options):
            zid = "[" + ",".join(combo) + "]"
            threes.append(zid)
            faces3[zid] = combo
    cells[(3,)] = tuple(threes)
    action = {}
    for e in p.generator_maps():
        src_d, tgt_d = sh.dim(e.source), sh.dim(e.target)
        table = {}
        if tgt_d <= 1 and src_d <= 2:
            for x in cells.get(e.target, ()):
                y = p.action[e][x]
                table[x] = y
        elif tgt_d == 2 and src_d == 1:  # faces of 2-cells (and the clone)
            for x in cells[(2,)]:
                table[x] = p.action[e][victim if x == clone else x]
        elif e.target == (3,) and src_d == 2:
            k = sh.cofaces((3,)).index(e)
            for z in threes:
                table[z] = faces3[z][k]
        elif e.source == (3,):  # degeneracies into dimension 3
            for x in cells[(2,)]:
                faces = []
                for f in sh.cofaces((3,)):
                    comp = sh.compose(e, f)
                    if comp.is_identity():
                        faces.append(x)  # the clone keeps itself on identity slots
                    else:
                        faces.append(p.act(comp, victim if x == clone else x))
                table[x] = "[" + ",".join(faces) + "]"
        action[e] = table
    return TruncatedPresheaf(sh, 3, cells, action, 3)


def test_h2_merges_exactly_the_duplicated_class():
    p = duskin_nerve(z2_discrete_21()).presheaf
    victim = p.cells_at((2,))[0]
    fat = _fatten(p, victim)
    assert not fat.validate(), "the fattened presheaf must still be a presheaf"
    rep = check_inner_kan(fat, 3)
    assert rep.inner_kan
    classes = homotopy_classes(fat, (2,))
    multi = [c for c in classes.classes if len(c) > 1]
    assert multi == [sorted([victim, victim + "*"])]
    h = h_m(fat, 2)
    assert set(h.cells_at((2,))) == set(p.cells_at((2,)))
    assert len(h.cells_at((3,))) == len(p.cells_at((3,)))


def test_fl2_relation_is_identity_for_reduced_gamma_sets():
    for smg in (z2_smg(), max_monoid_smg()):
        p = gamma_nerve(smg).presheaf
        flat = phi_pullback(p)
        classes = homotopy_classes(flat, (2,))
        assert all(len(c) == 1 for c in classes.classes)


def test_orb_of_terminal_quasimonoid_is_terminal():
    q = fl2(gamma_nerve(trivial_group_smg()).presheaf)
    o = orb(q)
    assert all(len(o.cells_at(k)) == 1 for k in range(4))


def test_orb_transposition_closure():
    """Delta_Orb(s, 2) is automatically commutative for every Orb 3-cell."""
    p = gamma_nerve(z2_smg()).presheaf
    q = fl2(p)
    o = orb(q)
    sh = o.shape
    sig = q.sigma
    from nervelab.presheaf import Sphere

    for z in o.cells_at(3):
        a, b, c, d, e, f = (o.act(fc, z) for fc in sh.cofaces(3))
        third = ((sig[a], f, c, e))
        hits = [
            w
            for w in q.presheaf.cells_at((3,))
            if tuple(q.presheaf.act(MultiMap((coface(3, i),)), w) for i in range(4)) == third
        ]
        assert hits, "Transposition Law closure fails"


def test_prismatic_identities_match_canonical_action():
    """h_i d_j and h_i s_j of a prism follow the displayed case formulas."""
    x = duskin_nerve(walking_2cell_21()).presheaf
    prisms, tuples = diag_star_with_tuples(x)

    # d_i on (2,1)-prisms: h_i(d_j q) = d_j(h_{i+1} q) if i >= j else d_{j+1}(h_i q)
    # shuffle words in h_i order: h_i = r^i u r^(m-i), so h_0=urr, h_1=rur, h_2=rru
    for cid in prisms.cells_at((2, 1)):
        vals = tuples[((2, 1), cid)]
        hq = {0: vals["urr"], 1: vals["rur"], 2: vals["rru"]}
        for j in range(3):
            e = MultiMap((coface(2, j), SimplexMap.identity(1)))
            dq = prisms.act(e, cid)
            dvals = tuples[((1, 1), dq)]
            hd = {0: dvals["ur"], 1: dvals["ru"]}
            for i in range(2):
                if i >= j:
                    expected = x.act(MultiMap((coface(3, j),)), hq[i + 1])
                else:
                    expected = x.act(MultiMap((coface(3, j + 1),)), hq[i])
                assert hd[i] == expected, (cid, i, j)
    # s_j on (1,1)-prisms: h_i(s_j f) = s_j h_{i-1} f if i > j else s_{j+1} h_i f
    for cid in prisms.cells_at((1, 1)):
        vals = tuples[((1, 1), cid)]
        hq = {0: vals["ur"], 1: vals["ru"]}
        for j in range(2):
            e = MultiMap((codegeneracy(1, j), SimplexMap.identity(1)))
            sq = prisms.act(e, cid)
            svals = tuples[((2, 1), sq)]
            hs = {0: svals["urr"], 1: svals["rur"], 2: svals["rru"]}
            for i in range(3):
                if i > j:
                    expected = x.act(MultiMap((codegeneracy(2, j),)), hq[i - 1])
                else:
                    expected = x.act(MultiMap((codegeneracy(2, j + 1),)), hq[i])
                assert hs[i] == expected, (cid, i, j)


def test_diag_star_zeroth_row_and_column():
    x = duskin_nerve(z2_discrete_21()).presheaf
    ds = diag_star(x)
    for k in range(4):
        assert ds.cells_at((0, k)) == x.cells_at((k,))
        assert ds.cells_at((k, 0)) == x.cells_at((k,))
    assert not ds.validate()


def test_diag_of_diag_star_on_the_point():
    pt = terminal_presheaf("delta2", 3)
    d = diag(pt)
    assert all(len(v) == 1 for v in d.cells.values())
    assert not d.validate()


def test_diag_star_11_cells_are_interior_pairs():
    """(1,1)-cells of diag_star(Duskin nerve) are pairs [eta', eta] sharing
    the diagonal edge."""
    b = walking_2cell_21()
    x = duskin_nerve(b).presheaf
    prisms, tuples = diag_star_with_tuples(x)
    n = duskin_nerve(b)
    count = 0
    for cid in prisms.cells_at((1, 1)):
        vals = tuples[((1, 1), cid)]
        eta, etap = vals["ru"], vals["ur"]
        assert x.act(MultiMap((coface(2, 1),)), eta) == x.act(
            MultiMap((coface(2, 1),)), etap
        )
        count += 1
    # brute-force the pairs
    d1 = x.act_table(MultiMap((coface(2, 1),)))
    brute = sum(
        1 for e in x.cells_at((2,)) for ep in x.cells_at((2,)) if d1[e] == d1[ep]
    )
    assert count == brute
