import itertools

import pytest

from nervelab.shapes.delta import (
    MultiMap,
    SimplexMap,
    all_simplex_maps,
    codegeneracy,
    coface,
    delta_shape,
    epi_monic,
)


def test_parse_print_digit_strings():
    f = SimplexMap.parse("0234", 3, 4)
    assert str(f) == "0234"
    assert f.is_monic() and not f.is_epi() and f.is_inner()
    assert str(SimplexMap.parse("0012", 3, 2)) == "0012"


def test_face_degeneracy_identities():
    # d_j d_i = d_i d_{j+1} for i <= j
    for n in range(2, 5):
        for i in range(n):
            for j in range(i, n):
                lhs = coface(n, j + 1).compose(coface(n - 1, i))
                rhs = coface(n, i).compose(coface(n - 1, j))
                assert lhs == rhs


def test_epi_monic_unique_by_brute_force():
    for n, m in itertools.product(range(4), repeat=2):
        for f in all_simplex_maps(n, m):
            e, mo = epi_monic(f)
            assert mo.compose(e) == f and e.is_epi() and mo.is_monic()
            found = [
                (e2, m2)
                for k in range(min(n, m) + 1)
                for e2 in all_simplex_maps(n, k)
                if e2.is_epi()
                for m2 in all_simplex_maps(k, m)
                if m2.is_monic() and m2.compose(e2) == f
            ]
            assert found == [(e, mo)]


def test_decompose_roundtrip_and_assoc_exhaustive():
    sh = delta_shape(1)
    for n, m in itertools.product(range(5), repeat=2):
        for g in all_simplex_maps(n, m):
            word = sh.decompose(MultiMap((g,)))
            acc = MultiMap((SimplexMap.identity(n),))
            for w in reversed(word):
                acc = w.compose(acc)
            assert acc == MultiMap((g,))
    for l, n, m, k in itertools.product(range(4), repeat=4):
        for f in all_simplex_maps(l, n):
            for g in all_simplex_maps(n, m):
                gf = g.compose(f)
                for h in all_simplex_maps(m, k):
                    assert h.compose(gf) == (h.compose(g)).compose(f)


def test_delta2_cofaces_order_and_inner():
    sh = delta_shape(2)
    cofs = sh.cofaces((2, 1))
    labels = [sh.coface_label(f) for f in cofs]
    assert labels == ["d^0_0", "d^0_1", "d^0_2", "d^1_0", "d^1_1"]
    inner = [sh.coface_label(f) for f in cofs if sh.is_inner_coface(f)]
    assert inner == ["d^0_1"]
    for obj in sh.objects_up_to(4):
        for f in sh.cofaces(obj):
            assert sh.dim(f.source) == sh.dim(obj) - 1
            assert all(p.is_monic() for p in f.parts)


def test_delta2_identity_and_assoc_small():
    sh = delta_shape(2)
    objs = sh.objects_up_to(2)
    for a in objs:
        for b in objs:
            for f in sh.all_maps(a, b):
                assert sh.compose(sh.identity(b), f) == f
                assert sh.compose(f, sh.identity(a)) == f
    for a in objs:
        for b in objs:
            for f in sh.all_maps(a, b):
                for c in objs:
                    for g in sh.all_maps(b, c):
                        gf = sh.compose(g, f)
                        for d in objs:
                            for h in sh.all_maps(c, d):
                                assert sh.compose(h, gf) == sh.compose(sh.compose(h, g), f)
