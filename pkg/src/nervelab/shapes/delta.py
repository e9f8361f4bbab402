"""The simplex category and its finite powers.

A map [n] -> [m] is stored as its value list, printed as the digit string
"0234" (values beyond 9 are printed comma-separated).  Objects of the k-fold
simplex category are k-tuples of ranks; dimension is the rank sum.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True, order=True)
class SimplexMap:
    """A weakly monotone map [source] -> [target], given by its values."""

    source: int
    target: int
    values: tuple[int, ...]

    def __post_init__(self):
        assert len(self.values) == self.source + 1, self
        assert all(0 <= v <= self.target for v in self.values), self
        assert all(a <= b for a, b in zip(self.values, self.values[1:])), self
        object.__setattr__(self, "_hash", hash((self.source, self.target, self.values)))

    def __hash__(self):
        return self._hash

    def __call__(self, i: int) -> int:
        return self.values[i]

    def __str__(self) -> str:
        if self.target > 9:
            return ",".join(str(v) for v in self.values)
        return "".join(str(v) for v in self.values)

    @staticmethod
    def parse(text: str, source: int, target: int) -> "SimplexMap":
        vals = [int(v) for v in text.split(",")] if "," in text else [int(c) for c in text]
        assert len(vals) == source + 1
        return SimplexMap(source, target, tuple(vals))

    @staticmethod
    def identity(n: int) -> "SimplexMap":
        return SimplexMap(n, n, tuple(range(n + 1)))

    def compose(self, other: "SimplexMap") -> "SimplexMap":
        """self o other (other applied first)."""
        assert other.target == self.source, (self, other)
        return SimplexMap(other.source, self.target, tuple(self.values[v] for v in other.values))

    def is_identity(self) -> bool:
        return self.source == self.target and self.values == tuple(range(self.source + 1))

    def is_monic(self) -> bool:
        return all(a < b for a, b in zip(self.values, self.values[1:]))

    def is_epi(self) -> bool:
        return set(self.values) == set(range(self.target + 1))

    def is_inner(self) -> bool:
        """0 and target both lie in the image."""
        return self.target == 0 or (self.values[0] == 0 and self.values[-1] == self.target)

    def missed(self) -> list[int]:
        return [v for v in range(self.target + 1) if v not in set(self.values)]


def coface(n: int, i: int) -> SimplexMap:
    """d^i : [n-1] -> [n], skipping the value i."""
    assert 0 <= i <= n and n >= 1
    return SimplexMap(n - 1, n, tuple(v for v in range(n + 1) if v != i))


def codegeneracy(n: int, i: int) -> SimplexMap:
    """s^i : [n+1] -> [n], repeating the value i."""
    assert 0 <= i <= n
    vals = list(range(i + 1)) + [i] + list(range(i + 1, n + 1))
    return SimplexMap(n + 1, n, tuple(vals))


def all_simplex_maps(n: int, m: int) -> list[SimplexMap]:
    return [
        SimplexMap(n, m, vals)
        for vals in itertools.combinations_with_replacement(range(m + 1), n + 1)
    ]


def epi_monic(f: SimplexMap) -> tuple[SimplexMap, SimplexMap]:
    """Unique factorization f = monic o epi in the simplex category."""
    image = sorted(set(f.values))
    k = len(image) - 1
    index = {v: i for i, v in enumerate(image)}
    epi = SimplexMap(f.source, k, tuple(index[v] for v in f.values))
    monic = SimplexMap(k, f.target, tuple(image))
    return epi, monic


def monic_into_cofaces(f: SimplexMap) -> list[SimplexMap]:
    """Write a monic f as d^{i_r} o ... o d^{i_1} (list in application order)."""
    assert f.is_monic()
    word: list[SimplexMap] = []
    g = f
    while not g.is_identity():
        i = max(g.missed())
        word.append(coface(g.target, i))
        g = SimplexMap(g.source, g.target - 1, tuple(v if v < i else v - 1 for v in g.values))
    word.reverse()
    return word


def epi_into_codegeneracies(f: SimplexMap) -> list[SimplexMap]:
    """Write an epi f as a codegeneracy word (list in application order)."""
    assert f.is_epi()
    word: list[SimplexMap] = []
    g = f
    while not g.is_identity():
        i = next(j for j in range(g.source) if g.values[j] == g.values[j + 1])
        word.append(codegeneracy(g.source - 1, i))
        g = SimplexMap(g.source - 1, g.target, g.values[:i] + g.values[i + 1 :])
    return word


# --- the k-fold simplex category -------------------------------------------------


@dataclass(frozen=True, order=True)
class MultiMap:
    """A morphism of the k-fold simplex category: a tuple of simplex maps."""

    parts: tuple[SimplexMap, ...]

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash(self.parts))

    def __hash__(self):
        return self._hash

    @property
    def source(self) -> tuple[int, ...]:
        return tuple(p.source for p in self.parts)

    @property
    def target(self) -> tuple[int, ...]:
        return tuple(p.target for p in self.parts)

    def __str__(self) -> str:
        return ";".join(str(p) for p in self.parts)

    def compose(self, other: "MultiMap") -> "MultiMap":
        return MultiMap(tuple(p.compose(q) for p, q in zip(self.parts, other.parts)))

    def is_identity(self) -> bool:
        return all(p.is_identity() for p in self.parts)


class DeltaKShape:
    """The dimensional category Delta^k, with its ordered coface system.

    Cofaces with target n are the maps that apply d^i in one direction and the
    identity elsewhere, ordered lexically by (direction, i).
    """

    def __init__(self, k: int = 1):
        self.k = k
        self.name = "delta" if k == 1 else f"delta{k}"

    # objects ---------------------------------------------------------------
    def dim(self, obj: tuple[int, ...]) -> int:
        return sum(obj)

    def objects_of_dim(self, d: int) -> list[tuple[int, ...]]:
        out = []
        for split in itertools.product(range(d + 1), repeat=self.k):
            if sum(split) == d:
                out.append(split)
        return sorted(out)

    def objects_up_to(self, d: int) -> list[tuple[int, ...]]:
        return [o for dd in range(d + 1) for o in self.objects_of_dim(dd)]

    def format_obj(self, obj) -> str:
        return "[" + ",".join(str(n) for n in obj) + "]"

    def parse_obj(self, text: str):
        return tuple(int(v) for v in text.strip("[]").split(","))

    # morphisms --------------------------------------------------------------
    def identity(self, obj) -> MultiMap:
        return MultiMap(tuple(SimplexMap.identity(n) for n in obj))

    def compose(self, g: MultiMap, f: MultiMap) -> MultiMap:
        return g.compose(f)

    def all_maps(self, a, b) -> list[MultiMap]:
        pools = [all_simplex_maps(n, m) for n, m in zip(a, b)]
        return [MultiMap(combo) for combo in itertools.product(*pools)]

    def format_map(self, f: MultiMap) -> str:
        return str(f)

    def map_key(self, f: MultiMap) -> str:
        return f"{f}@{self.format_obj(f.source)}->{self.format_obj(f.target)}"

    # cofaces ----------------------------------------------------------------
    def cofaces(self, obj) -> list[MultiMap]:
        out = []
        for alpha, n in enumerate(obj):
            if n == 0:
                continue
            for i in range(n + 1):
                parts = [SimplexMap.identity(m) for m in obj]
                parts[alpha] = coface(n, i)
                out.append(MultiMap(tuple(parts)))
        return out

    def coface_label(self, f: MultiMap) -> str:
        alpha = next(a for a, p in enumerate(f.parts) if not p.is_identity())
        i = f.parts[alpha].missed()[0]
        if self.k == 1:
            return f"d{i}"
        return f"d^{alpha}_{i}"

    def is_inner_coface(self, f: MultiMap) -> bool:
        for p in f.parts:
            if not p.is_identity():
                i = p.missed()[0]
                return 0 < i < p.target
        return False

    def is_inner(self, f: MultiMap) -> bool:
        return all(p.is_inner() for p in f.parts)

    def elementary_epis(self, obj) -> list[MultiMap]:
        """Epis lowering dimension by one out of objects of dimension dim(obj)+1."""
        out = []
        for alpha, n in enumerate(obj):
            for i in range(n + 1):
                parts = [SimplexMap.identity(m) for m in obj]
                parts[alpha] = codegeneracy(n, i)
                out.append(MultiMap(tuple(parts)))
        return out

    def decompose(self, f: MultiMap) -> list[MultiMap]:
        """f as a list of coface/codegeneracy generators, composite left-to-right.

        Returns [e_1, ..., e_r] with f = e_1 o e_2 o ... o e_r.
        """
        if f.is_identity():
            return []
        word: list[MultiMap] = []
        source = list(f.source)
        # epi parts first (applied first => rightmost in the word)
        tail: list[MultiMap] = []
        mids = []
        for alpha, p in enumerate(f.parts):
            epi, monic = epi_monic(p)
            mids.append(monic)
            for s in epi_into_codegeneracies(epi):
                parts = [SimplexMap.identity(n) for n in source]
                parts[alpha] = s
                tail.append(MultiMap(tuple(parts)))
                source[alpha] = s.target
        for alpha, monic in enumerate(mids):
            for d in monic_into_cofaces(monic):
                parts = [SimplexMap.identity(n) for n in source]
                parts[alpha] = d
                word.append(MultiMap(tuple(parts)))
                source[alpha] = d.target
        word.reverse()
        return word + list(reversed(tail))

    def degenerate_wrt(self, f: MultiMap) -> bool:
        return not all(p.is_monic() for p in f.parts)


@lru_cache(maxsize=None)
def delta_shape(k: int = 1) -> DeltaKShape:
    return DeltaKShape(k)
