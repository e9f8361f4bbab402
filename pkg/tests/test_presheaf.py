import copy
import json

import pytest

from nervelab.instances import walking_2cell_21, z2_discrete_21
from nervelab.nerves.duskin import duskin_nerve
from nervelab.presheaf import (
    Sphere,
    TruncatedPresheaf,
    coskeleton,
    is_k_coskeletal,
    is_k_subcoskeletal,
    skeleton,
    terminal_presheaf,
    truncate,
)


@pytest.mark.parametrize("shape", ["delta", "delta2", "gamma", "theta2"])
def test_terminal_presheaf_validates(shape):
    p = terminal_presheaf(shape, 3)
    assert not p.validate()
    for obj in p.objects():
        assert len(p.cells_at(obj)) == 1


def test_json_roundtrip(tmp_path):
    p = duskin_nerve(z2_discrete_21()).presheaf
    path = tmp_path / "z2.json"
    p.save(str(path))
    q = TruncatedPresheaf.load(str(path))
    assert q.cells == p.cells
    assert not q.validate()
    assert q.coskeletal == 3
    doc = json.loads(path.read_text())
    assert set(doc) >= {"shape", "truncation_dim", "coskeletal", "cells", "action"}


def test_mutate_and_detect_names_the_relation():
    n = duskin_nerve(z2_discrete_21())
    p = n.presheaf
    bad = TruncatedPresheaf(p.shape, p.trunc, dict(p.cells), copy.deepcopy(p.action), p.coskeletal)
    gen = next(e for e in bad.generator_maps() if e.target == (2,) and e.source == (1,))
    cell = bad.cells_at((2,))[0]
    ones = bad.cells_at((1,))
    table = bad.action[gen]
    table[cell] = ones[0] if table[cell] != ones[0] else ones[1]
    errs = bad.validate()
    assert errs and all(e.kind == "relation" for e in errs)
    assert any(cell in e.detail for e in errs)


def test_coskeleton_tower_and_sphere_queries():
    n = duskin_nerve(z2_discrete_21()).presheaf
    t2 = truncate(n, 2)
    c2 = coskeleton(t2, 2, out_trunc=3)
    assert not c2.validate()
    # a 2-truncated presheaf answers dimension-3 sphere queries through Hom
    for obj in [(3,)]:
        for z in n.cells_at(obj):
            s = n.sphere_of(obj, z)
            assert c2.sphere_fillers(Sphere(obj, s.faces))
    # cosk_n o cosk_m = cosk_min on the test presheaf
    c3_then_2 = coskeleton(truncate(coskeleton(truncate(n, 3), 3), 2), 2, out_trunc=3)
    assert c3_then_2.cells[(3,)] == c2.cells[(3,)]


def test_skeleton_of_terminal_at_zero_is_generated_by_the_point():
    p = terminal_presheaf("delta", 3)
    s = skeleton(p, 0)
    assert len(s.cells_at((0,))) == 1
    # every higher cell of the skeleton is degenerate (the terminal presheaf's
    # single cells are all degenerate images of the point)
    assert s.cells == p.cells
    assert not s.validate()


def test_skeleton_drops_nondegenerate_cells():
    n = duskin_nerve(z2_discrete_21()).presheaf
    s = skeleton(n, 1)
    assert s.cells_at((1,)) == n.cells_at((1,))
    from nervelab.shapes.delta import MultiMap, codegeneracy

    degenerate = set()
    for e in n.generator_maps():
        if e.source == (2,) and e.target == (1,):
            degenerate.update(n.action[e].values())
    assert set(s.cells_at((2,))) == degenerate
    assert len(s.cells_at((2,))) < len(n.cells_at((2,)))


def test_coskeletal_predicates_match_filler_characterization():
    for b in (z2_discrete_21(), walking_2cell_21()):
        n = duskin_nerve(b).presheaf
        assert is_k_coskeletal(n, 3)
        assert is_k_subcoskeletal(n, 2)  # 2-reduced: at most one filler above 2
    # the nerve of a discrete group is even 2-coskeletal; with a nontrivial
    # 2-morphism around, some consistent 3-spheres fail the interior condition
    assert is_k_coskeletal(duskin_nerve(z2_discrete_21()).presheaf, 2)
    w = duskin_nerve(walking_2cell_21()).presheaf
    assert not is_k_coskeletal(w, 2)
    assert not is_k_subcoskeletal(w, 1)  # parallel 2-cells over one boundary


def test_sphere_fillers_boundary_of_existing_cell():
    n = duskin_nerve(walking_2cell_21()).presheaf
    for z in n.cells_at((2,)):
        s = n.sphere_of((2,), z)
        assert z in n.sphere_fillers(s)
    for z in n.cells_at((3,)):
        s = n.sphere_of((3,), z)
        fillers = n.sphere_fillers(s)
        assert fillers == [z]  # 2-reduced: unique


def test_unsupported_glenn_dimension_is_explicit():
    from nervelab.glenn import universal_glenn_table

    with pytest.raises(ValueError):
        universal_glenn_table("gamma", 5)
