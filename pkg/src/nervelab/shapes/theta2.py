"""The wreath product of the simplex category with itself.

Objects <c_1,...,c_n>; a morphism has a type [n] -> [m] plus a component
[c_i] -> [c'_j] whenever j lies in the pair-covering image phi(type)(i).
Stars-and-bars notation: the type is written in stars-and-bars form and each
star between two bars is replaced by the component's digit string, components
separated by commas, an empty slot written ".".  ASCII uses "*" for the star.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .delta import SimplexMap, all_simplex_maps, coface, codegeneracy
from .gamma import phi

Obj = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Theta2Map:
    source: Obj
    target: Obj
    type: SimplexMap
    components: tuple[tuple[tuple[int, int], SimplexMap], ...]
    # keyed (j, i), sorted; exactly one entry per j in phi(type)(i)

    def __post_init__(self):
        n, m = len(self.source), len(self.target)
        assert self.type.source == n and self.type.target == m, self
        cover = phi(self.type)
        expected = {(j, i) for i in range(1, n + 1) for j in cover(i)}
        assert {k for k, _ in self.components} == expected, self
        assert self.components == tuple(sorted(self.components, key=lambda kv: kv[0])), self
        for (j, i), comp in self.components:
            assert comp.source == self.source[i - 1] and comp.target == self.target[j - 1], self
        object.__setattr__(
            self, "_hash", hash((self.source, self.target, self.type, self.components))
        )

    def __hash__(self):
        return self._hash

    def component(self, j: int, i: int) -> SimplexMap:
        for key, comp in self.components:
            if key == (j, i):
                return comp
        raise KeyError((j, i))

    def columns_hit(self, i: int) -> tuple[int, ...]:
        return phi(self.type)(i)

    @staticmethod
    def make(source: Obj, target: Obj, typ: SimplexMap, comps: dict[tuple[int, int], SimplexMap]) -> "Theta2Map":
        return Theta2Map(source, target, typ, tuple(sorted(comps.items(), key=lambda kv: kv[0])))

    @staticmethod
    def identity(obj: Obj) -> "Theta2Map":
        n = len(obj)
        return Theta2Map.make(
            obj, obj, SimplexMap.identity(n), {(i, i): SimplexMap.identity(c) for i, c in enumerate(obj, 1)}
        )

    def is_identity(self) -> bool:
        return self == Theta2Map.identity(self.source)

    def compose(self, other: "Theta2Map") -> "Theta2Map":
        """self o other (other applied first)."""
        assert other.target == self.source, (self, other)
        typ = self.type.compose(other.type)
        comps: dict[tuple[int, int], SimplexMap] = {}
        outer, inner = phi(self.type), phi(other.type)
        for i in range(1, len(other.source) + 1):
            for j in inner(i):
                for k in outer(j):
                    comps[(k, i)] = self.component(k, j).compose(other.component(j, i))
        return Theta2Map.make(other.source, self.target, typ, comps)

    # -- notation ------------------------------------------------------------
    def format(self, star: str = "*", dot: str = ".") -> str:
        m = len(self.target)
        inner_slots: dict[int, list[str]] = {}
        for (j, i), comp in self.components:
            inner_slots.setdefault(i, []).append(str(comp))
        pieces = []
        pieces.append(star * self.type(0))
        for i in range(1, len(self.source) + 1):
            pieces.append("|")
            cols = self.columns_hit(i)
            pieces.append(",".join(str(self.component(j, i)) for j in cols) if cols else dot)
        pieces.append("|")
        pieces.append(star * (m - self.type(len(self.source))))
        return "".join(pieces)

    def __str__(self) -> str:
        return self.format()

    @staticmethod
    def parse(text: str, source: Obj, target: Obj) -> "Theta2Map":
        """Parse stars-and-bars (either * or the unicode star; '.' or the dot)."""
        text = text.replace("⋆", "*").replace("·", ".")
        assert text.count("|") == len(source) + 1, (text, source)
        segs = text.split("|")
        lead = segs[0].count("*")
        typ_vals = [lead]
        comps: dict[tuple[int, int], SimplexMap] = {}
        col = lead
        for i, seg in enumerate(segs[1:-1], start=1):
            if seg in (".", ""):
                typ_vals.append(col)
                continue
            toks = seg.split(",")
            for tok in toks:
                col += 1
                comps[(col, i)] = SimplexMap.parse(tok, source[i - 1], target[col - 1])
            typ_vals.append(col)
        typ = SimplexMap(len(source), len(target), tuple(typ_vals))
        return Theta2Map.make(source, target, typ, comps)

    # -- structural predicates -------------------------------------------------
    def is_inner(self) -> bool:
        return self.type.is_inner() and all(c.is_inner() for _, c in self.components)

    def part(self, i: int) -> tuple[SimplexMap, ...]:
        return tuple(self.component(j, i) for j in self.columns_hit(i))

    def is_monic(self) -> bool:
        if not self.type.is_monic():
            return False
        for i in range(1, len(self.source) + 1):
            part = self.part(i)
            tuples = [tuple(c(v) for c in part) for v in range(self.source[i - 1] + 1)]
            if len(set(tuples)) != len(tuples):
                return False
        return True

    def is_epi(self) -> bool:
        return self.type.is_epi() and all(c.is_epi() for _, c in self.components)


def theta2_dim(obj: Obj) -> int:
    return len(obj) + sum(obj)


# -- image profiles and factorization ----------------------------------------


@dataclass(frozen=True)
class Profile:
    """A set of tuples in the product [c_l] x ... x [c_m]; empty kind if l > m."""

    lo: int
    hi: int
    tuples: frozenset

    @property
    def empty(self) -> bool:
        return self.lo > self.hi

    def project(self, lo: int, hi: int) -> "Profile":
        offset = lo - self.lo
        width = hi - lo + 1
        return Profile(lo, hi, frozenset(t[offset : offset + width] for t in self.tuples))

    def contains(self, other: "Profile") -> bool:
        """other `sqsubseteq` self."""
        if other.empty:
            return True
        if self.empty:
            return False
        if not (self.lo <= other.lo and other.hi <= self.hi):
            return False
        return other.tuples <= self.project(other.lo, other.hi).tuples

    def meet(self, other: "Profile") -> "Profile":
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo > hi or self.empty or other.empty:
            return Profile(1, 0, frozenset())
        return Profile(lo, hi, self.project(lo, hi).tuples & other.project(lo, hi).tuples)


def image_profile(f: Theta2Map) -> Profile:
    lo = f.type(0) + 1
    hi = f.type(len(f.source))
    if lo > hi:
        return Profile(1, 0, frozenset())
    per_part = []
    for i in range(1, len(f.source) + 1):
        cols = f.columns_hit(i)
        if not cols:
            continue
        part = f.part(i)
        per_part.append({tuple(c(v) for c in part) for v in range(f.source[i - 1] + 1)})
    tuples = {sum(combo, ()) for combo in itertools.product(*per_part)} if per_part else {()}
    return Profile(lo, hi, frozenset(tuples))


def type_factors_through(g: SimplexMap, f: SimplexMap) -> bool:
    return all(v in set(f.values) for v in g.values) if f.is_monic() else _brute_type_factor(g, f)


def _brute_type_factor(g: SimplexMap, f: SimplexMap) -> bool:
    return any(f.compose(h) == g for h in all_simplex_maps(g.source, f.source))


def factors_through(g: Theta2Map, f: Theta2Map) -> bool:
    """Whether g = f o h for some h (shared target)."""
    assert g.target == f.target
    if not type_factors_through(g.type, f.type):
        return False
    return image_profile(f).contains(image_profile(g))


def solve_factor(g: Theta2Map, f: Theta2Map) -> "Theta2Map | None":
    """An h with g = f o h, or None; h is unique when f is monic."""
    for h in all_theta2_maps(g.source, f.source):
        if f.compose(h) == g:
            return h
    return None


def all_theta2_maps(a: Obj, b: Obj) -> list[Theta2Map]:
    out = []
    for typ in all_simplex_maps(len(a), len(b)):
        cover = phi(typ)
        slots = [(j, i) for i in range(1, len(a) + 1) for j in cover(i)]
        pools = [all_simplex_maps(a[i - 1], b[j - 1]) for j, i in slots]
        for combo in itertools.product(*pools):
            comps = {slot: comp for slot, comp in zip(slots, combo)}
            out.append(Theta2Map.make(a, b, typ, comps))
    return out


def epi_monic_factor(f: Theta2Map) -> tuple[Theta2Map, Theta2Map]:
    """The Reedy factorization f = monic o epi."""
    E, M = _epi_monic_type(f.type)
    mid_obj: list[int] = []
    e_comps: dict[tuple[int, int], SimplexMap] = {}
    m_comps: dict[tuple[int, int], SimplexMap] = {}
    cover_e, cover_m = phi(E), phi(M)
    for p in range(1, E.target + 1):
        i = next(ii for ii in range(1, len(f.source) + 1) if p in cover_e(ii))
        cols = cover_m(p)
        block = [f.component(j, i) for j in cols]
        chain = sorted({tuple(c(v) for c in block) for v in range(f.source[i - 1] + 1)})
        mid_obj.append(len(chain) - 1)
        index = {t: q for q, t in enumerate(chain)}
        e_comps[(p, i)] = SimplexMap(
            f.source[i - 1],
            len(chain) - 1,
            tuple(index[tuple(c(v) for c in block)] for v in range(f.source[i - 1] + 1)),
        )
        for offset, j in enumerate(cols):
            m_comps[(j, p)] = SimplexMap(len(chain) - 1, f.target[j - 1], tuple(t[offset] for t in chain))
    mid = tuple(mid_obj)
    epi = Theta2Map.make(f.source, mid, E, e_comps)
    monic = Theta2Map.make(mid, f.target, M, m_comps)
    return epi, monic


def _epi_monic_type(t: SimplexMap) -> tuple[SimplexMap, SimplexMap]:
    from .delta import epi_monic

    return epi_monic(t)


# -- cofaces -----------------------------------------------------------------


def lattice_paths(r: int, u: int) -> list[str]:
    """All r/u words with r rights and u ups, in lexicographic order (r < u)."""
    if r == 0 and u == 0:
        return [""]
    out = []
    if r:
        out.extend("r" + w for w in lattice_paths(r - 1, u))
    if u:
        out.extend("u" + w for w in lattice_paths(r, u - 1))
    return out


def core_to_maps(word: str) -> tuple[SimplexMap, SimplexMap]:
    """The two merge components (f_1, f_2) of the core path given by an r/u word."""
    r = word.count("r")
    u = word.count("u")
    a = b = 0
    f1, f2 = [0], [0]
    for ch in word:
        if ch == "r":
            a += 1
        else:
            b += 1
        f1.append(a)
        f2.append(b)
    return SimplexMap(r + u, r, tuple(f1)), SimplexMap(r + u, u, tuple(f2))


def maps_to_core(f1: SimplexMap, f2: SimplexMap) -> str:
    word = []
    for v in range(1, f1.source + 1):
        word.append("r" if f1(v) > f1(v - 1) else "u")
    return "".join(word)


@dataclass(frozen=True)
class Theta2Coface:
    """A coface of a Theta_2 object, with its classification."""

    kind: str  # "star_left", "star_right", "face", "merge"
    i: int  # column (1-based); 0 for the star kinds
    m: int  # missed value for "face"; -1 otherwise
    core: str  # r/u word for "merge"; "" otherwise
    map: Theta2Map

    def label(self) -> str:
        if self.kind == "star_left":
            return "d_*|"
        if self.kind == "star_right":
            return "d_|*"
        if self.kind == "face":
            return f"d^{self.i}_{self.m}"
        return f"d^{self.i}_|{self.core}|"


@lru_cache(maxsize=None)
def theta2_cofaces(obj: Obj) -> list[Theta2Coface]:
    """Ordered cofaces, matching the paper's universal Glenn tables.

    Order: the left star coface, then per column i the inner-face maps
    d^i_m (m ascending) followed by the merge cofaces with cores in
    lexicographic r/u order, then the right star coface.
    """
    n = len(obj)
    out: list[Theta2Coface] = []
    if n >= 1 and obj[0] == 0:
        src = obj[1:]
        typ = coface(n, 0)
        comps = {(i + 1, i): SimplexMap.identity(c) for i, c in enumerate(src, 1)}
        out.append(Theta2Coface("star_left", 0, -1, "", Theta2Map.make(src, obj, typ, comps)))
    for i in range(1, n + 1):
        c = obj[i - 1]
        if c >= 1:
            src = obj[: i - 1] + (c - 1,) + obj[i:]
            for m in range(c + 1):
                comps = {(j, j): SimplexMap.identity(cc) for j, cc in enumerate(src, 1)}
                comps[(i, i)] = coface(c, m)
                out.append(
                    Theta2Coface("face", i, m, "", Theta2Map.make(src, obj, SimplexMap.identity(n), comps))
                )
        if i < n:
            ci, cj = obj[i - 1], obj[i]
            src = obj[: i - 1] + (ci + cj,) + obj[i + 1 :]
            typ = coface(n, i)
            for word in lattice_paths(ci, cj):
                f1, f2 = core_to_maps(word)
                comps: dict[tuple[int, int], SimplexMap] = {}
                for j in range(1, i):
                    comps[(j, j)] = SimplexMap.identity(obj[j - 1])
                comps[(i, i)] = f1
                comps[(i + 1, i)] = f2
                for j in range(i + 1, n):
                    comps[(j + 1, j)] = SimplexMap.identity(obj[j])
                out.append(Theta2Coface("merge", i, -1, word, Theta2Map.make(src, obj, typ, comps)))
    if n >= 1 and obj[-1] == 0:
        src = obj[:-1]
        typ = coface(n, n)
        comps = {(i, i): SimplexMap.identity(c) for i, c in enumerate(src, 1)}
        out.append(Theta2Coface("star_right", 0, -1, "", Theta2Map.make(src, obj, typ, comps)))
    return out


class Theta2Shape:
    """Theta_2 as a dimensional category with the table coface ordering."""

    name = "theta2"

    def dim(self, obj: Obj) -> int:
        return theta2_dim(obj)

    def objects_of_dim(self, d: int) -> list[Obj]:
        out: list[Obj] = []
        for n in range(d + 1):
            if n == 0:
                if d == 0:
                    out.append(())
                continue
            rest = d - n
            for split in itertools.product(range(rest + 1), repeat=n):
                if sum(split) == rest:
                    out.append(split)
        return sorted(out, key=lambda o: (len(o), o))

    def objects_up_to(self, d: int) -> list[Obj]:
        return [o for dd in range(d + 1) for o in self.objects_of_dim(dd)]

    def format_obj(self, obj: Obj) -> str:
        return "<" + ",".join(str(c) for c in obj) + ">"

    def parse_obj(self, text: str) -> Obj:
        body = text.strip().strip("<>")
        return tuple(int(t) for t in body.split(",")) if body else ()

    def identity(self, obj: Obj) -> Theta2Map:
        return Theta2Map.identity(obj)

    def compose(self, g: Theta2Map, f: Theta2Map) -> Theta2Map:
        return g.compose(f)

    def all_maps(self, a: Obj, b: Obj) -> list[Theta2Map]:
        return all_theta2_maps(a, b)

    def format_map(self, f: Theta2Map) -> str:
        return str(f)

    def map_key(self, f: Theta2Map) -> str:
        return f"{f}@{self.format_obj(f.source)}->{self.format_obj(f.target)}"

    def cofaces(self, obj: Obj) -> list[Theta2Map]:
        return [c.map for c in theta2_cofaces(obj)]

    def coface_label(self, f: Theta2Map) -> str:
        for c in theta2_cofaces(f.target):
            if c.map == f:
                return c.label()
        raise ValueError(f"not a coface: {f}")

    def is_inner_coface(self, f: Theta2Map) -> bool:
        return f.is_inner()

    def elementary_epis(self, obj: Obj) -> list[Theta2Map]:
        """Epis into obj lowering dimension by one."""
        n = len(obj)
        out = []
        for i in range(1, n + 1):
            c = obj[i - 1]
            src = obj[: i - 1] + (c + 1,) + obj[i:]
            for q in range(c + 1):
                comps = {(j, j): SimplexMap.identity(cc) for j, cc in enumerate(obj, 1)}
                comps[(i, i)] = codegeneracy(c, q)
                out.append(Theta2Map.make(src, obj, SimplexMap.identity(n), comps))
        for i in range(n + 1):
            src = obj[:i] + (0,) + obj[i:]
            typ = codegeneracy(n, i)
            comps: dict[tuple[int, int], SimplexMap] = {}
            for j in range(1, i + 1):
                comps[(j, j)] = SimplexMap.identity(obj[j - 1])
            for j in range(i + 1, n + 1):
                comps[(j, j + 1)] = SimplexMap.identity(obj[j - 1])
            out.append(Theta2Map.make(src, obj, typ, comps))
        return out

    def decompose(self, f: Theta2Map) -> list[Theta2Map]:
        """f as [e_1, ..., e_r] over cofaces and elementary epis."""
        if f.is_identity():
            return []
        epi, monic = epi_monic_factor(f)
        word: list[Theta2Map] = []
        g = monic
        while not g.is_identity():
            step = next(c.map for c in theta2_cofaces(g.target) if factors_through(g, c.map))
            rest = solve_factor(g, step)
            assert rest is not None
            word.append(step)
            g = rest
        tail: list[Theta2Map] = []
        e = epi
        while not e.is_identity():
            step = next(s for s in self.elementary_epis_from(e.source) if _epi_peels(e, s))
            rest = _peel_epi(e, step)
            tail.append(step)
            e = rest
        return word + list(reversed(tail))

    def elementary_epis_from(self, obj: Obj) -> list[Theta2Map]:
        """Elementary epis whose source is obj."""
        out = []
        n = len(obj)
        for i in range(1, n + 1):
            c = obj[i - 1]
            if c >= 1:
                tgt = obj[: i - 1] + (c - 1,) + obj[i:]
                for q in range(c):
                    comps = {(j, j): SimplexMap.identity(cc) for j, cc in enumerate(tgt, 1)}
                    comps[(i, i)] = codegeneracy(c - 1, q)
                    out.append(Theta2Map.make(obj, tgt, SimplexMap.identity(n), comps))
            if c == 0:
                tgt = obj[: i - 1] + obj[i:]
                typ = codegeneracy(n - 1, i - 1)
                comps = {}
                for j in range(1, i):
                    comps[(j, j)] = SimplexMap.identity(obj[j - 1])
                for j in range(i + 1, n + 1):
                    comps[(j - 1, j)] = SimplexMap.identity(obj[j - 1])
                out.append(Theta2Map.make(obj, tgt, typ, comps))
        return out

    def degenerate_wrt(self, f: Theta2Map) -> bool:
        return not f.is_monic()

    def isos(self, obj: Obj) -> list[Theta2Map]:
        return [Theta2Map.identity(obj)]


def _epi_peels(e: Theta2Map, s: Theta2Map) -> bool:
    return solve_epi_factor(e, s) is not None


def _peel_epi(e: Theta2Map, s: Theta2Map) -> Theta2Map:
    rest = solve_epi_factor(e, s)
    assert rest is not None
    return rest


def solve_epi_factor(e: Theta2Map, s: Theta2Map) -> "Theta2Map | None":
    """An e' with e = e' o s (s an elementary epi out of e's source)."""
    for h in all_theta2_maps(s.target, e.target):
        if h.compose(s) == e:
            return h
    return None


@lru_cache(maxsize=None)
def theta2_shape() -> Theta2Shape:
    return Theta2Shape()
