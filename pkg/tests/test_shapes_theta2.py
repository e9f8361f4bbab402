import itertools
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nervelab.shapes.theta2 import (
    Theta2Map,
    epi_monic_factor,
    factors_through,
    image_profile,
    lattice_paths,
    solve_factor,
    theta2_cofaces,
    theta2_shape,
)

ts = theta2_shape()
OBJS3 = ts.objects_up_to(3)


def test_displayed_morphism_parses_and_composes_with_identities():
    src, tgt = (3, 1, 2, 6), (1, 2, 1, 3, 7)
    f = Theta2Map.parse("*|.|01|001,013|0123467|", src, tgt)
    assert f.format() == "*|.|01|001,013|0123467|"
    # the unicode star/dot variant parses to the same morphism
    assert Theta2Map.parse("⋆|·|01|001,013|0123467|", src, tgt) == f
    assert f.compose(Theta2Map.identity(src)) == f
    assert Theta2Map.identity(tgt).compose(f) == f


def test_identity_laws_exhaustive_dim4():
    objs = ts.objects_up_to(4)
    for a in objs:
        ia = Theta2Map.identity(a)
        for b in objs:
            for f in ts.all_maps(a, b):
                assert f.compose(ia) == f
                assert Theta2Map.identity(b).compose(f) == f


def test_associativity_exhaustive_dim2():
    objs = ts.objects_up_to(2)
    for a, b, c, d in itertools.product(objs, repeat=4):
        for f in ts.all_maps(a, b):
            for g in ts.all_maps(b, c):
                gf = g.compose(f)
                for h in ts.all_maps(c, d):
                    assert h.compose(gf) == (h.compose(g)).compose(f)


@settings(max_examples=300, deadline=None)
@given(st.data())
def test_associativity_random_dim4(data):
    objs = ts.objects_up_to(4)
    a = data.draw(st.sampled_from(objs))
    b = data.draw(st.sampled_from(objs))
    c = data.draw(st.sampled_from(objs))
    d = data.draw(st.sampled_from(objs))
    maps_ab, maps_bc, maps_cd = ts.all_maps(a, b), ts.all_maps(b, c), ts.all_maps(c, d)
    if not (maps_ab and maps_bc and maps_cd):
        return
    f = data.draw(st.sampled_from(maps_ab))
    g = data.draw(st.sampled_from(maps_bc))
    h = data.draw(st.sampled_from(maps_cd))
    assert h.compose(g.compose(f)) == (h.compose(g)).compose(f)


def test_coface_labels_and_inner_match_tables():
    labels = lambda o: [c.label() for c in theta2_cofaces(o)]
    assert labels((1, 1)) == ["d^1_0", "d^1_1", "d^1_|ru|", "d^1_|ur|", "d^2_0", "d^2_1"]
    assert labels((1, 0)) == ["d^1_0", "d^1_1", "d^1_|r|", "d_|*"]
    assert labels((0, 1)) == ["d_*|", "d^1_|u|", "d^2_0", "d^2_1"]
    inner = lambda o: [c.label() for c in theta2_cofaces(o) if c.map.is_inner()]
    assert inner((2, 0)) == ["d^1_1", "d^1_|rr|"]
    assert inner((0, 2)) == ["d^1_|uu|", "d^2_1"]
    assert inner((1, 1)) == ["d^1_|ru|", "d^1_|ur|"]
    # d_*| always has type d_0, hence never inner
    for obj in ts.objects_up_to(4):
        for c in theta2_cofaces(obj):
            if c.kind in ("star_left", "star_right"):
                assert not c.map.is_inner()


def test_cofaces_monic_dim_raising_and_merge_counts():
    for obj in ts.objects_up_to(4):
        if ts.dim(obj) == 0:
            continue
        seen = set()
        for c in theta2_cofaces(obj):
            assert c.map.is_monic()
            assert ts.dim(c.map.source) == ts.dim(obj) - 1
            assert c.map not in seen
            seen.add(c.map)
        for i in range(1, len(obj)):
            merges = [c for c in theta2_cofaces(obj) if c.kind == "merge" and c.i == i]
            assert len(merges) == comb(obj[i - 1] + obj[i], obj[i - 1])


def test_core_words_enumerated_in_binary_order():
    assert lattice_paths(1, 1) == ["ru", "ur"]
    assert lattice_paths(2, 1) == ["rru", "rur", "urr"]
    assert lattice_paths(0, 0) == [""]


def test_inner_simplex_maps():
    from nervelab.shapes.delta import SimplexMap, coface

    assert coface(3, 1).is_inner() and not coface(3, 0).is_inner()
    assert SimplexMap(2, 2, (0, 0, 2)).is_inner()


def test_factors_through_reflexive_and_matches_brute_dim3():
    for a in OBJS3:
        for b in OBJS3:
            for f in ts.all_maps(a, b):
                assert factors_through(f, f)
    import random

    rng = random.Random(7)
    for b in OBJS3:
        for a in OBJS3:
            maps_ab = ts.all_maps(a, b)
            if not maps_ab:
                continue
            for c in OBJS3:
                maps_cb = ts.all_maps(c, b)
                if not maps_cb:
                    continue
                for g in rng.sample(maps_ab, min(3, len(maps_ab))):
                    for f in rng.sample(maps_cb, min(3, len(maps_cb))):
                        brute = any(
                            f.compose(h) == g for h in ts.all_maps(g.source, f.source)
                        )
                        assert factors_through(g, f) == brute


def test_factorization_verdicts_cofaces_dim4_vs_brute():
    """All pairs of cofaces of every object of dimension <= 4."""
    for obj in ts.objects_up_to(4):
        if ts.dim(obj) == 0:
            continue
        cofs = [c.map for c in theta2_cofaces(obj)]
        for g in cofs:
            for f in cofs:
                brute = any(
                    f.compose(h) == g for h in ts.all_maps(g.source, f.source)
                )
                assert factors_through(g, f) == brute, (obj, str(g), str(f))


def test_pullback_table_rows():
    """The paper's pullback table: h g = h' g' is the pullback, so a map
    factors through h and h' iff it factors through the composite."""
    from nervelab.shapes.theta2 import Theta2Coface

    def coface_by(obj, kind, i=0, m=-1, core=""):
        for c in theta2_cofaces(obj):
            if (c.kind, c.i, c.m, c.core) == (kind, i, m, core):
                return c.map
        raise LookupError((obj, kind, i, m, core))

    cases = []
    # d_*| vs d_|*  on <0,1,0> (needs both stars)
    obj = (0, 1, 0)
    h = coface_by(obj, "star_left")
    hp = coface_by(obj, "star_right")
    g = coface_by(h.source, "star_right")
    gp = coface_by(hp.source, "star_left")
    cases.append((obj, h, hp, g, gp))
    # d_*| vs d^i_m on <0,2>: i=2, m=1 -> g = d^{i-1}_m, g' = d_*|
    obj = (0, 2)
    h = coface_by(obj, "star_left")
    hp = coface_by(obj, "face", i=2, m=1)
    g = coface_by(h.source, "face", i=1, m=1)
    gp = coface_by(hp.source, "star_left")
    cases.append((obj, h, hp, g, gp))
    # d^i_m vs d^i_m' with m < m' on <2>
    obj = (2,)
    h = coface_by(obj, "face", i=1, m=0)
    hp = coface_by(obj, "face", i=1, m=2)
    g = coface_by(h.source, "face", i=1, m=1)
    gp = coface_by(hp.source, "face", i=1, m=0)
    cases.append((obj, h, hp, g, gp))
    # d^i_m vs d^j_|g| with i < j on <1,1,0>: i=1, j=2 core "r"
    obj = (1, 1, 0)
    h = coface_by(obj, "face", i=1, m=0)
    hp = coface_by(obj, "merge", i=2, core="r")
    g = coface_by(h.source, "merge", i=2, core="r")
    gp = coface_by(hp.source, "face", i=1, m=0)
    cases.append((obj, h, hp, g, gp))
    # d^i_|f| vs d^j_|g| with i < j-1 on <1,0,0,1>: i=1 core "r", j=3 core "u"
    obj = (1, 0, 0, 1)
    h = coface_by(obj, "merge", i=1, core="r")
    hp = coface_by(obj, "merge", i=3, core="u")
    g = coface_by(h.source, "merge", i=2, core="u")
    gp = coface_by(hp.source, "merge", i=1, core="r")
    cases.append((obj, h, hp, g, gp))
    for obj, h, hp, g, gp in cases:
        left = h.compose(g)
        right = hp.compose(gp)
        assert left == right, (obj, str(h), str(hp))
        pullback = left
        for b in ts.objects_up_to(ts.dim(obj) - 1):
            for f in ts.all_maps(b, obj):
                through_both = factors_through(f, h) and factors_through(f, hp)
                assert through_both == factors_through(f, pullback), (obj, str(f))


def test_epi_monic_unique_by_brute_force_dim3():
    for a in OBJS3:
        for b in OBJS3:
            for f in ts.all_maps(a, b):
                e, m = epi_monic_factor(f)
                assert m.compose(e) == f and e.is_epi() and m.is_monic()
                if f.is_monic():
                    assert e.is_identity() and m == f
                if f.is_identity():
                    assert e.is_identity() and m.is_identity()
                hits = []
                for mid in ts.objects_up_to(3):
                    for e2 in ts.all_maps(a, mid):
                        if not e2.is_epi():
                            continue
                        for m2 in ts.all_maps(mid, b):
                            if m2.is_monic() and m2.compose(e2) == f:
                                hits.append((e2, m2))
                assert hits == [(e, m)]


def test_image_profile_of_displayed_cofaces():
    # the image of a merge coface restricted to its two columns is the core
    for obj in [(1, 1), (2, 0), (0, 2)]:
        for c in theta2_cofaces(obj):
            if c.kind != "merge":
                continue
            prof = image_profile(c.map)
            i = c.i
            pts = {t[i - prof.lo], t[i + 1 - prof.lo]} if False else None
            pairs = sorted({(t[i - prof.lo], t[i + 1 - prof.lo]) for t in prof.tuples})
            from nervelab.shapes.theta2 import core_to_maps

            f1, f2 = core_to_maps(c.core)
            expected = sorted({(f1(v), f2(v)) for v in range(f1.source + 1)})
            assert pairs == expected
