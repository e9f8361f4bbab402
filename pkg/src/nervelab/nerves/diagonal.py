"""The diagonal adjunction between simplicial and bisimplicial presheaves.

A cell of diag_star(X) over (m, n) is a map from the prism, stored as its
value tuple on the shuffle simplices (maximal chains of [m] x [n], r/u words
in lexicographic order); the action of any bisimplicial map is computed by
rewriting each transported chain through a containing shuffle.  This makes
the prismatic identities facts rather than definitions, and the test suite
checks them against the stored decomposition.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from ..presheaf import TruncatedPresheaf, generator_maps
from ..shapes import delta_shape
from ..shapes.delta import MultiMap, SimplexMap
from ..shapes.theta2 import lattice_paths


@lru_cache(maxsize=None)
def shuffle_chain(word: str) -> tuple:
    """The vertex chain of a shuffle word, from (0,0)."""
    a = b = 0
    chain = [(0, 0)]
    for ch in word:
        if ch == "r":
            a += 1
        else:
            b += 1
        chain.append((a, b))
    return tuple(chain)


def shuffles(m: int, n: int) -> list[str]:
    return lattice_paths(m, n)


def prism_id(values: tuple) -> str:
    return "pr[" + ";".join(values) + "]"


class PrismComplex:
    """diag_star of a 3-truncated coskeletal simplicial presheaf, through
    total dimension 3."""

    def __init__(self, x: TruncatedPresheaf):
        assert x.shape.name == "delta" and x.trunc == 3
        self.x = x
        self.sh2 = delta_shape(2)

    def value_on_chain(self, obj, values: dict, chain: tuple) -> str:
        """The value of a prism cell on an arbitrary chain of [m] x [n]."""
        for word in shuffles(*obj):
            big = shuffle_chain(word)
            if all(v in big for v in chain):
                u = SimplexMap(
                    len(chain) - 1, len(big) - 1, tuple(big.index(v) for v in chain)
                )
                return self.x.act(MultiMap((u,)), values[word])
        raise ValueError((obj, chain))

    def cells(self, obj) -> list[tuple]:
        m, n = obj
        words = shuffles(m, n)
        if len(words) == 1:
            return [(z,) for z in self.x.cells_at((m + n,))]
        out = []
        candidates = self.x.cells_at((m + n,))

        def compatible(assigned: dict, word: str, z: str) -> bool:
            big = shuffle_chain(word)
            for w2, z2 in assigned.items():
                other = shuffle_chain(w2)
                common = tuple(v for v in big if v in other)
                u = SimplexMap(len(common) - 1, m + n, tuple(big.index(v) for v in common))
                u2 = SimplexMap(len(common) - 1, m + n, tuple(other.index(v) for v in common))
                if self.x.act(MultiMap((u,)), z) != self.x.act(MultiMap((u2,)), z2):
                    return False
            return True

        def extend(i: int, assigned: dict):
            if i == len(words):
                out.append(tuple(assigned[w] for w in words))
                return
            for z in candidates:
                if compatible(assigned, words[i], z):
                    assigned[words[i]] = z
                    extend(i + 1, assigned)
                    del assigned[words[i]]

        extend(0, {})
        return out

    def act(self, f: MultiMap, obj_src, obj_tgt, values: dict) -> dict:
        """values of (prism at obj_tgt) composed with f x g."""
        fm, gm = f.parts
        out = {}
        for word in shuffles(*obj_src):
            chain = tuple((fm(a), gm(b)) for a, b in shuffle_chain(word))
            dedup = [chain[0]]
            for v in chain[1:]:
                if v != dedup[-1]:
                    dedup.append(v)
            target_value = self.value_on_chain(obj_tgt, values, tuple(dedup))
            collapse = SimplexMap(
                len(chain) - 1,
                len(dedup) - 1,
                tuple(dedup.index(v) for v in chain),
            )
            out[word] = self.x.act(MultiMap((collapse,)), target_value)
        return out


def diag_star_with_tuples(x: TruncatedPresheaf) -> tuple[TruncatedPresheaf, dict]:
    """diag_star plus {(obj, cell): {shuffle: value}} for the prism cells."""
    pc = PrismComplex(x)
    sh = delta_shape(2)
    cells = {}
    tuples: dict = {}
    for obj in sh.objects_up_to(3):
        cell_tuples = pc.cells(obj)
        ids = []
        for values in cell_tuples:
            cid = values[0] if len(values) == 1 else prism_id(values)
            ids.append(cid)
            tuples[(obj, cid)] = dict(zip(shuffles(*obj), values))
        cells[obj] = tuple(ids)
    action = {}
    for e in generator_maps(sh, 3):
        table = {}
        for cid in cells[e.target]:
            moved = pc.act(e, e.source, e.target, tuples[(e.target, cid)])
            values = tuple(moved[w] for w in shuffles(*e.source))
            table[cid] = values[0] if len(values) == 1 else prism_id(values)
        action[e] = table
    return TruncatedPresheaf(sh, 3, cells, action, None), tuples


def diag_star(x: TruncatedPresheaf) -> TruncatedPresheaf:
    """The right adjoint to the diagonal, through total dimension 3."""
    return diag_star_with_tuples(x)[0]


def diag(x: TruncatedPresheaf, out_trunc: int = 2) -> TruncatedPresheaf:
    """The diagonal restriction (diag X)_n = X_{n,n}, computed through the
    coskeletal completion where (n,n) exceeds the truncation."""
    assert x.shape.name == "delta2"
    sh = delta_shape(1)
    assert out_trunc <= 2
    cells = {(0,): x.cells_at((0, 0)), (1,): x.cells_at((1, 1))}
    sh2 = x.shape
    from ..shapes.delta import codegeneracy, coface

    def mm2(i: int, n: int) -> MultiMap:
        return MultiMap((coface(n, i), coface(n, i)))

    action = {}
    action[MultiMap((coface(1, 0),))] = {
        z: x.act(mm2(0, 1), z) for z in cells[(1,)]
    }
    action[MultiMap((coface(1, 1),))] = {
        z: x.act(mm2(1, 1), z) for z in cells[(1,)]
    }
    action[MultiMap((codegeneracy(0, 0),))] = {
        a: x.act(MultiMap((codegeneracy(0, 0), codegeneracy(0, 0))), a)
        for a in cells[(0,)]
    }
    if out_trunc >= 2:
        spheres = x.all_spheres((2, 2)) if x.coskeletal is not None else []
        names = {s.faces: f"diag2#{i}" for i, s in enumerate(spheres)}
        cells[(2,)] = tuple(names.values())
        cofaces22 = sh2.cofaces((2, 2))
        by_name = {names[s.faces]: s for s in spheres}

        def face22(i: int):
            probe = MultiMap((coface(2, i), coface(2, i)))
            table = {}
            for name, s in by_name.items():
                # the diagonal coface factors through two boundary cofaces
                first = MultiMap((coface(2, i), SimplexMap.identity(2)))
                second = MultiMap((SimplexMap.identity(1), coface(2, i)))
                k = cofaces22.index(first)
                mid = s.faces[k]
                table[name] = x.act(second, mid)
            return table

        for i in range(3):
            action[MultiMap((coface(2, i),))] = face22(i)
        for i in range(2):
            s_diag = MultiMap((codegeneracy(1, i), codegeneracy(1, i)))
            table = {}
            for z in cells[(1,)]:
                faces = []
                for f in cofaces22:
                    composite = sh2.compose(s_diag, f)
                    faces.append(x.act(composite, z))
                table[z] = names[tuple(faces)]
            action[MultiMap((codegeneracy(1, i),))] = table
    return TruncatedPresheaf(sh, out_trunc, cells, action, None)
