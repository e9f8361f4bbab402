import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nervelab.shapes.delta import SimplexMap, all_simplex_maps, codegeneracy, coface
from nervelab.shapes.gamma import (
    GammaFourWay,
    GammaMap,
    all_gamma_maps,
    coface_display_name,
    coinsert,
    comerge,
    coskip,
    coswap,
    evaluate_word,
    four_way_factor,
    gamma_shape,
    generator_word,
    perm_map,
    phi,
    preserves_order_within,
)


def test_bracket_notation_bit_exact():
    g = GammaMap.parse("[13,-,2]", 4)
    assert g.source == 3 and g.target == 4
    assert g(1) == (1, 3) and g(2) == () and g(3) == (2,)
    assert str(g) == "[13,-,2]"


def test_compose_examples():
    # w_1 m_1 = m_1 on source 1 (the paper's relation)
    assert coswap(2, 1).compose(comerge(1, 1)) == comerge(1, 1)
    for n in range(5):
        for m in range(5):
            for g in all_gamma_maps(n, m):
                assert GammaMap.identity(m).compose(g) == g
                assert g.compose(GammaMap.identity(n)) == g


def test_compose_matches_pointed_dual_exhaustive_small():
    for l, n, m in itertools.product(range(4), repeat=3):
        for a in all_gamma_maps(l, n):
            for b in all_gamma_maps(n, m):
                dual = tuple(a.dual()[v] for v in b.dual())
                assert b.compose(a) == GammaMap.from_dual(dual, l)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_compose_matches_pointed_dual_random_rank4(data):
    l = data.draw(st.integers(0, 4))
    n = data.draw(st.integers(0, 4))
    m = data.draw(st.integers(0, 4))
    a = data.draw(st.sampled_from(all_gamma_maps(l, n)))
    b = data.draw(st.sampled_from(all_gamma_maps(n, m)))
    dual = tuple(a.dual()[v] for v in b.dual())
    assert b.compose(a) == GammaMap.from_dual(dual, l)


def _maxrank(*maps):
    return 5


def test_thirteen_relations_ranks_up_to_5():
    failures = []
    for n in range(6):
        # 1: k_j k_i = k_i k_{j-1}, i < j (source n, both composites n -> n+2)
        for i in range(n + 1):
            for j in range(i + 1, n + 2):
                if coskip(n + 1, j).compose(coskip(n, i)) != coskip(n + 1, i).compose(
                    coskip(n, j - 1)
                ):
                    failures.append((1, n, i, j))
        # 2: s_j s_i = s_i s_{j+1}, i <= j (source n, composites n -> n-2)
        for j in range(n - 1):
            for i in range(j + 1):
                if coinsert(n - 1, j).compose(coinsert(n, i)) != coinsert(
                    n - 1, i
                ).compose(coinsert(n, j + 1)):
                    failures.append((2, n, i, j))
        # 3: s_j k_i
        for i in range(n + 1):
            for j in range(n + 1):
                lhs = coinsert(n + 1, j).compose(coskip(n, i))
                if i == j:
                    rhs = GammaMap.identity(n)
                elif i < j:
                    rhs = coskip(n - 1, i).compose(coinsert(n, j - 1))
                else:
                    rhs = coskip(n - 1, i - 1).compose(coinsert(n, j))
                if lhs != rhs:
                    failures.append((3, n, i, j))
        # 4: m_j m_i = m_i m_{j-1}, i < j
        for i in range(1, n + 1):
            for j in range(i + 1, n + 2):
                if comerge(n + 1, j).compose(comerge(n, i)) != comerge(n + 1, i).compose(
                    comerge(n, j - 1)
                ):
                    failures.append((4, n, i, j))
        # 5: m_j k_i
        for i in range(n + 1):
            for j in range(1, n + 2):
                lhs = comerge(n + 1, j).compose(coskip(n, i))
                if i == j - 1:
                    rhs = coskip(n + 1, i).compose(coskip(n, i))
                    rhs2 = coskip(n + 1, i + 1).compose(coskip(n, i))
                    if not (lhs == rhs == rhs2):
                        failures.append((5, n, i, j))
                    continue
                elif i < j - 1:
                    rhs = coskip(n + 1, i).compose(comerge(n, j - 1))
                else:
                    rhs = coskip(n + 1, i + 1).compose(comerge(n, j))
                if lhs != rhs:
                    failures.append((5, n, i, j))
        # 6: s_j m_i
        for i in range(1, n + 1):
            for j in range(n + 1):
                lhs = coinsert(n + 1, j).compose(comerge(n, i))
                if i in (j, j + 1):
                    rhs = GammaMap.identity(n)
                elif i < j:
                    rhs = comerge(n - 1, i).compose(coinsert(n, j - 1))
                else:
                    rhs = comerge(n - 1, i - 1).compose(coinsert(n, j))
                if lhs != rhs:
                    failures.append((6, n, i, j))
        # 7: w_j k_i
        for i in range(n + 1):
            for j in range(1, n + 1):
                lhs = coswap(n + 1, j).compose(coskip(n, i))
                if i == j - 1:
                    rhs = coskip(n, i + 1)
                elif i == j:
                    rhs = coskip(n, i - 1)
                elif i < j - 1:
                    rhs = coskip(n, i).compose(coswap(n, j - 1))
                else:
                    rhs = coskip(n, i).compose(coswap(n, j))
                if lhs != rhs:
                    failures.append((7, n, i, j))
        # 8: s_j w_i
        for i in range(1, n):
            for j in range(n - 1 + 1):
                if j > n - 1:
                    continue
                lhs = coinsert(n, j).compose(coswap(n, i))
                if i == j:
                    rhs = coinsert(n, j - 1) if j - 1 >= 0 else None
                elif i == j + 1:
                    rhs = coinsert(n, j + 1)
                elif i < j:
                    rhs = coswap(n - 1, i).compose(coinsert(n, j))
                elif i > j + 1:
                    rhs = coswap(n - 1, i - 1).compose(coinsert(n, j))
                if rhs is not None and lhs != rhs:
                    failures.append((8, n, i, j))
        # 9: m_j w_i
        for i in range(1, n):
            for j in range(1, n + 1):
                lhs = comerge(n, j).compose(coswap(n, i))
                if i == j:
                    rhs = (
                        coswap(n + 1, i + 1)
                        .compose(coswap(n + 1, i))
                        .compose(comerge(n, j + 1))
                    )
                elif i == j - 1:
                    rhs = (
                        coswap(n + 1, i)
                        .compose(coswap(n + 1, i + 1))
                        .compose(comerge(n, j - 1))
                    )
                elif i < j - 1:
                    rhs = coswap(n + 1, i).compose(comerge(n, j))
                else:
                    rhs = coswap(n + 1, i + 1).compose(comerge(n, j))
                if lhs != rhs:
                    failures.append((9, n, i, j))
        # 10: w_i m_i = m_i
        for i in range(1, n + 1):
            if coswap(n + 1, i).compose(comerge(n, i)) != comerge(n, i):
                failures.append((10, n, i))
        # 11-13: symmetric group laws
        for i in range(1, n):
            if coswap(n, i).compose(coswap(n, i)) != GammaMap.identity(n):
                failures.append((11, n, i))
        for i in range(1, n):
            for j in range(1, n):
                if abs(i - j) > 1:
                    if coswap(n, j).compose(coswap(n, i)) != coswap(n, i).compose(
                        coswap(n, j)
                    ):
                        failures.append((12, n, i, j))
        for i in range(1, n - 1):
            lhs = coswap(n, i).compose(coswap(n, i + 1)).compose(coswap(n, i))
            rhs = coswap(n, i + 1).compose(coswap(n, i)).compose(coswap(n, i + 1))
            if lhs != rhs:
                failures.append((13, n, i))
    assert not failures, failures[:10]


def test_four_way_trivial_cases():
    for n in range(5):
        fw = four_way_factor(GammaMap.identity(n))
        assert all(m.is_identity() for m in (fw.K, fw.W, fw.M, fw.S))
    for n in range(2, 5):
        for i in range(1, n):
            fw = four_way_factor(coswap(n, i))
            assert fw.W == coswap(n, i)
            assert fw.K.is_identity() and fw.M.is_identity() and fw.S.is_identity()


def _brute_four_way(f: GammaMap):
    hits = []
    n, m = f.source, f.target
    for n1 in range(n + 1):
        s_like = [s for s in all_gamma_maps(n, n1) if s.is_s_like()]
        if not s_like:
            continue
        for n2 in range(n1, m + 1):
            m_like = [g for g in all_gamma_maps(n1, n2) if g.is_m_like()]
            k_like = [k for k in all_gamma_maps(n2, m) if k.is_k_like()]
            if not m_like or not k_like:
                continue
            perms = [perm_map(p) for p in itertools.permutations(range(1, n2 + 1))]
            for S in s_like:
                for M in m_like:
                    ms = M.compose(S)
                    for W in perms:
                        if not preserves_order_within(W, M):
                            continue
                        wms = W.compose(ms)
                        for K in k_like:
                            if K.compose(wms) == f:
                                hits.append(GammaFourWay(K, W, M, S))
    return hits


def test_four_way_unique_by_brute_force_rank3():
    for n in range(4):
        for m in range(4):
            for f in all_gamma_maps(n, m):
                fw = four_way_factor(f)
                assert fw.recompose() == f
                hits = _brute_four_way(f)
                assert len(hits) == 1
                assert (hits[0].K, hits[0].W, hits[0].M, hits[0].S) == (
                    fw.K,
                    fw.W,
                    fw.M,
                    fw.S,
                )


def test_four_way_example_13_dash_2():
    f = GammaMap.parse("[13,-,2]", 4)
    fw = four_way_factor(f)
    hits = _brute_four_way(f)
    assert hits and all(
        (h.K, h.W, h.M, h.S) == (fw.K, fw.W, fw.M, fw.S) for h in hits
    )


def test_generator_words():
    # merge of {1,2} and {3,4}: word m3 m1, ascending indices
    g = GammaMap(2, 4, ((1, 2), (3, 4)))
    word = generator_word(g)
    assert word == [("m", 3), ("m", 1)]
    assert generator_word(GammaMap.identity(3)) == []
    for n in range(4):
        for m in range(4):
            for f in all_gamma_maps(n, m):
                assert evaluate_word(generator_word(f), n) == f


def test_word_index_conditions():
    for n in range(4):
        for m in range(4):
            for f in all_gamma_maps(n, m):
                word = generator_word(f)
                ks = [i for l, i in word if l == "k"]
                ms = [i for l, i in word if l == "m"]
                ss = [i for l, i in word if l == "s"]
                assert ks == sorted(ks, reverse=True)
                assert ms == sorted(ms, reverse=True)
                assert ss == sorted(ss)
                fw = four_way_factor(f)
                sigma = fw.W.permutation()
                for i in ms:
                    assert sigma[i - 1] < sigma[i]


def test_phi_on_generators_and_functoriality():
    for n in range(1, 5):
        assert phi(coface(n, 0)) == coskip(n - 1, 0)
        assert phi(coface(n, n)) == coskip(n - 1, n - 1)
        for j in range(1, n):
            assert phi(coface(n, j)) == comerge(n - 1, j)
    for n in range(4):
        for i in range(n + 1):
            assert phi(codegeneracy(n, i)) == coinsert(n + 1, i)
    assert phi(SimplexMap.identity(3)) == GammaMap.identity(3)
    assert phi(coface(3, 1)) == GammaMap.parse("[12,3]", 3)
    for n, m, k in itertools.product(range(5), repeat=3):
        for a in all_simplex_maps(n, m):
            for b in all_simplex_maps(m, k):
                assert phi(b.compose(a)) == phi(b).compose(phi(a))


def test_coface_lists_match_paper():
    gs = gamma_shape()
    assert [coface_display_name(f) for f in gs.cofaces(2)] == ["2", "(12)", "1"]
    assert [coface_display_name(f) for f in gs.cofaces(3)] == [
        "23",
        "(12)3",
        "1(23)",
        "12",
        "13",
        "(13)2",
    ]
    assert [coface_display_name(f) for f in gs.cofaces(4)] == [
        "234",
        "(12)34",
        "1(23)4",
        "12(34)",
        "123",
        "413",
        "(24)13",
        "2(14)3",
        "24(13)",
        "241",
    ]
    import math

    for d in (2, 3, 4):
        monics = [f for f in all_gamma_maps(d - 1, d) if f.is_monic()]
        assert len(monics) == len(gs.cofaces(d)) * math.factorial(d - 1)
    for d in (1, 2, 3, 4, 5):
        for f in gs.cofaces(d):
            assert f.is_monic() and f.source == d - 1
