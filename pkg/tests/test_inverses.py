import copy

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
from nervelab.inverses.bic import (
    AlgebraicPresheaf,
    ConstructionFailure,
    bic_from,
    roundtrip_U_delta,
    roundtrip_u_delta,
)
from nervelab.inverses.fbic import fbic_from, roundtrip_U_theta2, roundtrip_u_theta2
from nervelab.inverses.sym import (
    first_fillers_gamma,
    gamma_chi_as_simplicial,
    roundtrip_U_gamma,
    roundtrip_u_gamma,
    sym_from,
)
from nervelab.inverses.thin import v_comparison
from nervelab.inverses.vdc import roundtrip_U_delta2, roundtrip_u_delta2, vdc_from
from nervelab.nerves.duskin import duskin_nerve
from nervelab.nerves.flatten import fl2
from nervelab.nerves.gamma import gamma_nerve
from nervelab.nerves.theta2 import theta2_nerve
from nervelab.nerves.vdc import vdc_nerve
from nervelab.presheaf import TruncatedPresheaf
from nervelab.structures import (
    check_bicategory,
    check_sym_mon,
    check_vdc,
    es_construction,
    fancify_complete,
    fancify_sparse,
)

ALL_21 = [terminal_21, z2_discrete_21, walking_2cell_21, two_object_z2_homs]


@pytest.mark.parametrize("make", ALL_21)
def test_bic_roundtrips(make):
    b = make()
    rep, nerve, con = roundtrip_U_delta(b)
    assert rep.ok, rep.witnesses[:4]
    rep2, _, _ = roundtrip_u_delta(AlgebraicPresheaf(nerve.presheaf, nerve.chi))
    assert rep2.ok, rep2.witnesses[:4]


def test_bic_output_independently_checked():
    n = duskin_nerve(walking_2cell_21())
    con = bic_from(AlgebraicPresheaf(n.presheaf, n.chi))
    assert check_bicategory(con.bic, "(2,1)").ok


def test_changing_chi_gives_isomorphic_but_different_tables():
    b = walking_2cell_21()
    n = duskin_nerve(b)
    p = n.presheaf
    alt = dict(n.chi)
    for (g, f), cell in n.chi.items():
        others = [
            z
            for z in p.cells_at((2,))
            if p.boundary((2,), z) == p.boundary((2,), cell) and z != cell
        ]
        if others:
            alt[(g, f)] = others[0]
    assert alt != n.chi
    con1 = bic_from(AlgebraicPresheaf(p, n.chi))
    con2 = bic_from(AlgebraicPresheaf(p, alt))
    assert check_bicategory(con2.bic, "(2,1)").ok
    assert (con1.bic.rho, con1.bic.lam, con1.bic.alpha) != (
        con2.bic.rho,
        con2.bic.lam,
        con2.bic.alpha,
    )


def test_u_failure_on_corrupted_presheaf():
    n = duskin_nerve(z2_discrete_21())
    p = n.presheaf
    bad = TruncatedPresheaf(p.shape, p.trunc, dict(p.cells), copy.deepcopy(p.action), 3)
    # swap two parallel 1-cells in one degeneracy slot: still a presheaf-shaped
    # table, but u can no longer be operator-compatible
    gen = next(e for e in bad.generator_maps() if e.source == (2,) and e.target == (1,))
    table = bad.action[gen]
    cells1 = bad.cells_at((1,))
    table[cells1[0]], table[cells1[1]] = table[cells1[1]], table[cells1[0]]
    if bad.validate():
        return  # corruption already detected upstream; construction refuses
    rep, _, _ = roundtrip_u_delta(AlgebraicPresheaf(bad, n.chi))
    assert not rep.ok


@pytest.mark.parametrize("make,expect_grouplike", [(z2_smg, True), (max_monoid_smg, False), (trivial_group_smg, True)])
def test_sym_roundtrips(make, expect_grouplike):
    c = make()
    rep, nerve, smg = roundtrip_U_gamma(c)
    assert rep.ok, rep.witnesses[:4]
    assert check_sym_mon(smg).ok
    rep2, _ = roundtrip_u_gamma(nerve.presheaf, gamma_chi_as_simplicial(nerve))
    assert rep2.ok, rep2.witnesses[:4]


def test_sym_of_z2_has_identity_braiding():
    c = z2_smg()
    nerve = gamma_nerve(c)
    smg, con = sym_from(fl2(nerve.presheaf), gamma_chi_as_simplicial(nerve))
    b = smg.bic
    for key, val in smg.braiding.items():
        assert val == b.id2[b.src2[val]] or b.src2[val] == b.tgt2[val]
    # the braiding squares to the identity (SM) and the axioms hold
    assert check_sym_mon(smg).ok


def test_vdc_roundtrips():
    for fan in (fancify_sparse(two_object_z2_homs()), fancify_complete(walking_2cell_21())):
        d = es_construction(fan)
        rep, nerve, con = roundtrip_U_delta2(d)
        assert rep.ok, rep.witnesses[:4]
        assert check_vdc(con.vdc).ok
        rep2, _ = roundtrip_u_delta2(nerve.presheaf, nerve.chi_h, nerve.chi_v)
        assert rep2.ok, rep2.witnesses[:4]


def test_fbic_roundtrips():
    B = two_object_z2_homs()
    for fan in (fancify_sparse(B), fancify_complete(B)):
        rep, nerve, con = roundtrip_U_theta2(fan)
        assert rep.ok, rep.witnesses[:4]
        rep2, _ = roundtrip_u_theta2(nerve.presheaf, nerve.chi)
        assert rep2.ok, rep2.witnesses[:4]


def test_construction_failure_names_the_horn():
    n = duskin_nerve(walking_2cell_21())
    p = n.presheaf
    cells = dict(p.cells)
    victim = p.cells_at((3,))[0]
    cells[(3,)] = tuple(z for z in p.cells_at((3,)) if z != victim)
    action = {
        e: {x: v for x, v in p.action[e].items() if x in cells.get(e.target, ())}
        for e in p.generator_maps()
    }
    broken = TruncatedPresheaf(p.shape, 3, cells, action, 3)
    with pytest.raises(ConstructionFailure) as err:
        bic_from(AlgebraicPresheaf(broken, n.chi))
    assert "horn" in str(err.value)


def test_v_comparison_cell_by_cell():
    for make in (terminal_21, z2_discrete_21, walking_2cell_21):
        rep, lhs, rhs = v_comparison(make())
        assert rep.ok, rep.witnesses[:4]
