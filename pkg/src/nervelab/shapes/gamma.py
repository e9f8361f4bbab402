"""Segal's category of finite pointed cardinals, presented covariantly.

A map n -> m assigns to each i in {1..n} a subset of {1..m}, the subsets
pairwise disjoint; composition takes unions over the assigned subsets.  Maps
are kept in a canonical form (each subset stored sorted) so equality is
decidable everywhere.  Bracket notation: [13,-,2] is the map 3 -> 4 with
1 -> {1,3}, 2 -> {}, 3 -> {2}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .delta import SimplexMap


@dataclass(frozen=True, order=True)
class GammaMap:
    source: int
    target: int
    assignment: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        assert len(self.assignment) == self.source, self
        seen: set[int] = set()
        for block in self.assignment:
            assert tuple(sorted(block)) == block, self
            for v in block:
                assert 1 <= v <= self.target, self
                assert v not in seen, f"not disjoint: {self}"
                seen.add(v)
        object.__setattr__(self, "_hash", hash((self.source, self.target, self.assignment)))

    def __hash__(self):
        return self._hash

    def __call__(self, i: int) -> tuple[int, ...]:
        return self.assignment[i - 1]

    def __str__(self) -> str:
        def block(b):
            return "-" if not b else "".join(str(v) for v in b)

        return "[" + ",".join(block(b) for b in self.assignment) + "]"

    @staticmethod
    def parse(text: str, target: int | None = None) -> "GammaMap":
        body = text.strip()
        assert body.startswith("[") and body.endswith("]"), text
        blocks = []
        for tok in body[1:-1].split(","):
            tok = tok.strip()
            blocks.append(() if tok in ("-", "") else tuple(sorted(int(c) for c in tok)))
        top = max((v for b in blocks for v in b), default=0)
        return GammaMap(len(blocks), target if target is not None else top, tuple(blocks))

    @staticmethod
    def identity(n: int) -> "GammaMap":
        return GammaMap(n, n, tuple((i,) for i in range(1, n + 1)))

    def compose(self, other: "GammaMap") -> "GammaMap":
        """self o other (other applied first)."""
        assert other.target == self.source, (self, other)
        blocks = []
        for i in range(1, other.source + 1):
            merged: list[int] = []
            for j in other(i):
                merged.extend(self(j))
            blocks.append(tuple(sorted(merged)))
        return GammaMap(other.source, self.target, tuple(blocks))

    def is_identity(self) -> bool:
        return self == GammaMap.identity(self.source)

    # -- duality with pointed cardinals ------------------------------------
    def dual(self) -> tuple[int, ...]:
        """The pointed map target+ -> source+ (0 plays the basepoint)."""
        out = [0] * (self.target + 1)
        for i in range(1, self.source + 1):
            for v in self(i):
                out[v] = i
        return tuple(out)

    @staticmethod
    def from_dual(values: tuple[int, ...], source: int) -> "GammaMap":
        target = len(values) - 1
        blocks = [tuple(j for j in range(1, target + 1) if values[j] == i) for i in range(1, source + 1)]
        return GammaMap(source, target, tuple(blocks))

    # -- structural predicates ----------------------------------------------
    @property
    def image(self) -> tuple[int, ...]:
        return tuple(sorted(v for b in self.assignment for v in b))

    def is_cofull(self) -> bool:
        return len(self.image) == self.target

    def is_coincreasing(self) -> bool:
        prev = 0
        for block in self.assignment:
            if not block:
                continue
            if block[0] <= prev:
                return False
            prev = block[-1]
        return True

    def is_monic(self) -> bool:
        return all(b for b in self.assignment)

    def is_epi(self) -> bool:
        return self.is_cofull() and all(len(b) <= 1 for b in self.assignment)

    def is_iso(self) -> bool:
        return self.is_monic() and self.is_epi()

    def is_k_like(self) -> bool:
        return self.is_coincreasing() and all(len(b) == 1 for b in self.assignment)

    def is_m_like(self) -> bool:
        return self.is_coincreasing() and self.is_cofull() and self.is_monic()

    def is_s_like(self) -> bool:
        return self.is_coincreasing() and self.is_cofull() and self.is_epi()

    def permutation(self) -> tuple[int, ...]:
        assert self.is_iso() and self.source == self.target, self
        return tuple(b[0] for b in self.assignment)


# -- generators -------------------------------------------------------------


def coskip(n: int, i: int) -> GammaMap:
    """k^i : n -> n+1, image missing i+1 (0 <= i <= n)."""
    assert 0 <= i <= n
    return GammaMap(n, n + 1, tuple((j,) if j <= i else (j + 1,) for j in range(1, n + 1)))


def comerge(n: int, i: int) -> GammaMap:
    """m^i : n -> n+1 merging i and i+1 of the target (1 <= i <= n)."""
    assert 1 <= i <= n
    blocks = []
    for j in range(1, n + 1):
        if j < i:
            blocks.append((j,))
        elif j == i:
            blocks.append((i, i + 1))
        else:
            blocks.append((j + 1,))
    return GammaMap(n, n + 1, tuple(blocks))


def coinsert(n: int, i: int) -> GammaMap:
    """s^i : n -> n-1 sending i+1 to the empty set (0 <= i <= n-1)."""
    assert 0 <= i <= n - 1
    blocks = []
    for j in range(1, n + 1):
        if j <= i:
            blocks.append((j,))
        elif j == i + 1:
            blocks.append(())
        else:
            blocks.append((j - 1,))
    return GammaMap(n, n - 1, tuple(blocks))


def coswap(n: int, i: int) -> GammaMap:
    """w^i : n -> n swapping i and i+1 (1 <= i <= n-1)."""
    assert 1 <= i <= n - 1
    blocks = []
    for j in range(1, n + 1):
        if j == i:
            blocks.append((i + 1,))
        elif j == i + 1:
            blocks.append((i,))
        else:
            blocks.append((j,))
    return GammaMap(n, n, tuple(blocks))


def perm_map(perm: tuple[int, ...]) -> GammaMap:
    n = len(perm)
    return GammaMap(n, n, tuple((v,) for v in perm))


def all_gamma_maps(n: int, m: int) -> list[GammaMap]:
    """All maps n -> m, via duals target+ -> source+."""
    out = []
    for dual_tail in itertools.product(range(n + 1), repeat=m):
        out.append(GammaMap.from_dual((0,) + dual_tail, n))
    return out


# -- four-way factorization ---------------------------------------------------


@dataclass(frozen=True)
class GammaFourWay:
    """f = K o W o M o S with the corollary's five conditions."""

    K: GammaMap
    W: GammaMap
    M: GammaMap
    S: GammaMap

    def recompose(self) -> GammaMap:
        return self.K.compose(self.W).compose(self.M).compose(self.S)


def four_way_factor(f: GammaMap) -> GammaFourWay:
    """Unique factorization f = K o W o M o S.

    S is coincreasing, cofull, epic (kills the i with f(i) empty); M is
    coincreasing, cofull, monic (merges within blocks); W a permutation
    preserving order within the images of M; K strictly coincreasing
    (skips the elements of the target missed by f).
    """
    n, m = f.source, f.target
    nonempty = [i for i in range(1, n + 1) if f(i)]
    n1 = len(nonempty)
    blocks_s = []
    pos = {i: idx + 1 for idx, idx_src in enumerate(nonempty) for i in (idx_src,)}
    for i in range(1, n + 1):
        blocks_s.append((pos[i],) if i in pos else ())
    S = GammaMap(n, n1, tuple(blocks_s))

    image = f.image
    n2 = len(image)
    rank = {v: idx + 1 for idx, v in enumerate(image)}
    K = GammaMap(n2, m, tuple((image[idx],) for idx in range(n2)))

    # remaining full map g : n1 -> n2 with blocks of ranks
    blocks_g = [tuple(sorted(rank[v] for v in f(i))) for i in nonempty]

    # W sorts the target ranks so the residue is coincreasing; within a block
    # order is preserved, between blocks order follows the block order
    order: list[int] = []
    for b in blocks_g:
        order.extend(b)
    # sigma_W sends the element in sorted position p to order[p] position...
    # We want W with W o M coincreasing-free: M merges consecutive runs, W places them.
    m_blocks = []
    w_perm = [0] * n2
    cursor = 1
    for b in blocks_g:
        m_blocks.append(tuple(range(cursor, cursor + len(b))))
        for offset, v in enumerate(b):
            w_perm[cursor + offset - 1] = v
        cursor += len(b)
    M = GammaMap(n1, n2, tuple(m_blocks))
    W = perm_map(tuple(w_perm))
    return GammaFourWay(K=K, W=W, M=M, S=S)


def preserves_order_within(W: GammaMap, M: GammaMap) -> bool:
    sigma = W.permutation()
    for block in M.assignment:
        vals = [sigma[v - 1] for v in block]
        if any(a > b for a, b in zip(vals, vals[1:])):
            return False
    return True


def bubble_sort_word(perm: tuple[int, ...]) -> list[int]:
    """Positions (1-based) of the adjacent swaps bubble sort applies, in order."""
    lst = list(perm)
    swaps = []
    changed = True
    while changed:
        changed = False
        for p in range(len(lst) - 1):
            if lst[p] > lst[p + 1]:
                lst[p], lst[p + 1] = lst[p + 1], lst[p]
                swaps.append(p + 1)
                changed = True
    return swaps


def generator_word(f: GammaMap) -> list[tuple[str, int]]:
    """f as a word over the generators, rightmost letter applied first.

    The word is k-letters (ascending index, leftmost largest applied last),
    then the bubble-sort word of the permutation, then m-letters (ascending),
    then s-letters (descending), per the unique-factorization corollary.
    """
    fw = four_way_factor(f)
    word: list[tuple[str, int]] = []
    missed = [v for v in range(1, f.target + 1) if v not in set(fw.K.image)]
    for e in sorted(missed, reverse=True):
        word.append(("k", e - 1))
    swaps = bubble_sort_word(fw.W.permutation())
    # bubble sort sorts sigma's one-line list; sigma = w_{p_r} o ... o w_{p_1}
    for p in reversed(swaps):
        word.append(("w", p))
    merge_at = [p for p in range(1, fw.M.target) if _same_block(fw.M, p)]
    for p in sorted(merge_at, reverse=True):
        word.append(("m", p))
    killed = [i for i in range(1, f.source + 1) if not f(i)]
    for i in sorted(killed):
        word.append(("s", i - 1))
    return word


def _same_block(M: GammaMap, p: int) -> bool:
    return any(p in b and p + 1 in b for b in M.assignment)


def generator_map(letter: str, index: int, source: int) -> GammaMap:
    if letter == "k":
        return coskip(source, index)
    if letter == "m":
        return comerge(source, index)
    if letter == "s":
        return coinsert(source, index)
    if letter == "w":
        return coswap(source, index)
    raise ValueError(letter)


def evaluate_word(word: list[tuple[str, int]], source: int) -> GammaMap:
    g = GammaMap.identity(source)
    for letter, index in reversed(word):
        step = generator_map(letter, index, g.target)
        g = step.compose(g)
    return g


@lru_cache(maxsize=None)
def phi(f: SimplexMap) -> GammaMap:
    """Segal's functor: a pair (i-1,i) covers (j-1,j) iff f(i-1) <= j-1 < j <= f(i)."""
    blocks = []
    for i in range(1, f.source + 1):
        blocks.append(tuple(j for j in range(1, f.target + 1) if f(i - 1) <= j - 1 and j <= f(i)))
    return GammaMap(f.source, f.target, tuple(blocks))


# -- the dimensional category -------------------------------------------------

SPECIAL_COFACES: dict[int, tuple[str, ...]] = {
    1: ("",),
    2: ("2", "(12)", "1"),
    3: ("23", "(12)3", "1(23)", "12", "13", "(13)2"),
    4: ("234", "(12)34", "1(23)4", "12(34)", "123", "413", "(24)13", "2(14)3", "24(13)", "241"),
}


def parse_display_name(name: str, target: int) -> GammaMap:
    """Parse names like "(12)34": parenthesized groups are blocks, digits singletons."""
    blocks: list[tuple[int, ...]] = []
    pos = 0
    while pos < len(name):
        if name[pos] == "(":
            end = name.index(")", pos)
            blocks.append(tuple(sorted(int(c) for c in name[pos + 1 : end])))
            pos = end + 1
        else:
            blocks.append((int(name[pos]),))
            pos += 1
    return GammaMap(len(blocks), target, tuple(blocks))


def coface_display_name(f: GammaMap) -> str:
    out = []
    for b in f.assignment:
        tok = "".join(str(v) for v in b)
        out.append(f"({tok})" if len(b) > 1 else tok)
    return "".join(out)


class GammaShape:
    """Gamma as an excellent dimensional category with ordered special cofaces."""

    name = "gamma"

    def dim(self, obj: int) -> int:
        return obj

    def objects_of_dim(self, d: int) -> list[int]:
        return [d]

    def objects_up_to(self, d: int) -> list[int]:
        return list(range(d + 1))

    def format_obj(self, obj: int) -> str:
        return str(obj)

    def parse_obj(self, text: str) -> int:
        return int(text)

    def identity(self, obj: int) -> GammaMap:
        return GammaMap.identity(obj)

    def compose(self, g: GammaMap, f: GammaMap) -> GammaMap:
        return g.compose(f)

    def all_maps(self, a: int, b: int) -> list[GammaMap]:
        return all_gamma_maps(a, b)

    def format_map(self, f: GammaMap) -> str:
        return str(f)

    def map_key(self, f: GammaMap) -> str:
        return f"{f}@{f.source}->{f.target}"

    def cofaces(self, obj: int) -> list[GammaMap]:
        """Ordered special cofaces (the paper's lists through dimension 4)."""
        assert obj >= 1
        if obj in SPECIAL_COFACES:
            return [parse_display_name(name, obj) for name in SPECIAL_COFACES[obj]]
        chosen: dict[tuple, GammaMap] = {}
        for f in all_gamma_maps(obj - 1, obj):
            if not f.is_monic():
                continue
            orbit = frozenset(
                f.compose(perm_map(p)) for p in itertools.permutations(range(1, obj))
            )
            key = tuple(sorted(str(g) for g in orbit))
            if key not in chosen or str(f) < str(chosen[key]):
                chosen[key] = f
        return sorted(chosen.values(), key=str)

    def coface_label(self, f: GammaMap) -> str:
        return coface_display_name(f)

    def is_inner_coface(self, f: GammaMap) -> bool:
        """Inner = merging: some block has more than one element."""
        return any(len(b) > 1 for b in f.assignment)

    def elementary_epis(self, obj: int) -> list[GammaMap]:
        return [coinsert(obj + 1, i) for i in range(obj + 1)]

    def isos(self, obj: int) -> list[GammaMap]:
        return [perm_map(p) for p in itertools.permutations(range(1, obj + 1))]

    def decompose(self, f: GammaMap) -> list[GammaMap]:
        """f as a generator list [e_1, ..., e_r] with f = e_1 o ... o e_r."""
        if f.is_identity():
            return []
        out: list[GammaMap] = []
        source = f.source
        word = generator_word(f)
        for letter, index in reversed(word):
            g = generator_map(letter, index, source)
            out.append(g)
            source = g.target
        out.reverse()
        return out

    def degenerate_wrt(self, f: GammaMap) -> bool:
        return not f.is_monic()


@lru_cache(maxsize=None)
def gamma_shape() -> GammaShape:
    return GammaShape()
