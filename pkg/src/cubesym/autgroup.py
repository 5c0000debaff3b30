"""Automorphisms and automorphism groups of the word families.

Automorphisms are stored structurally where the family admits a closed form
(translation plus coordinate data), or as explicit image arrays otherwise.
Composition convention throughout: (sigma o tau)(v) = sigma(tau(v)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from math import factorial

from .bitgraph import (
    AUGMENTED,
    ENHANCED,
    FOLDED,
    HYPERCUBE,
    LOCALLY_TWISTED,
    POWER,
    FamilySpec,
    Graph,
    build_family,
)
from .errors import (
    DimensionMismatch,
    NoStructuredForm,
    ParameterOutOfRange,
    SearchBudgetExceeded,
)

DEFAULT_ELEMENT_CAP = 2_000_000


# ---------------------------------------------------------------------------
# automorphism value objects


class Automorphism:
    """Vertex bijection of a fixed graph, applied via `apply`."""

    n_vertices: int

    def apply(self, v: int) -> int:
        raise NotImplementedError

    def images(self) -> tuple[int, ...]:
        return tuple(self.apply(v) for v in range(self.n_vertices))

    def is_identity(self) -> bool:
        return all(self.apply(v) == v for v in range(self.n_vertices))

    def __call__(self, v: int) -> int:
        return self.apply(v)


@dataclass(frozen=True)
class ExplicitPerm(Automorphism):
    """Image array over the whole vertex set."""

    perm: tuple[int, ...]

    @property
    def n_vertices(self) -> int:
        return len(self.perm)

    def apply(self, v: int) -> int:
        return self.perm[v]

    def images(self) -> tuple[int, ...]:
        return self.perm


def _permute_positions(word: int, pi: tuple[int, ...], n: int) -> int:
    """Image word w with w[i] = word[pi[i]] (0-based positions, leftmost first)."""
    out = 0
    for i, src in enumerate(pi):
        if (word >> (n - 1 - src)) & 1:
            out |= 1 << (n - 1 - i)
    return out


@dataclass(frozen=True)
class HypercubeAff(Automorphism):
    """Translation by c composed with a position permutation: v -> c + pi(v)."""

    n: int
    c: int
    pi: tuple[int, ...]

    @property
    def n_vertices(self) -> int:
        return 1 << self.n

    def apply(self, v: int) -> int:
        return self.c ^ _permute_positions(v, self.pi, self.n)

    def is_identity(self) -> bool:
        return self.c == 0 and self.pi == tuple(range(self.n))


@dataclass(frozen=True)
class FoldedAff(Automorphism):
    """Folded-cube automorphism: translation plus a permutation of the n+1
    symbols (the n positions and the all-ones word), realised as a coordinate
    permutation of the zero-extended (n+1)-bit word modulo global complement.
    Symbol index i < n is position i+1; symbol index n is the all-ones word.
    """

    n: int
    c: int
    pi: tuple[int, ...]  # length n+1, image coordinate i reads source pi[i]

    @property
    def n_vertices(self) -> int:
        return 1 << self.n

    def apply(self, v: int) -> int:
        n = self.n
        # lift: digit j of the extended word, j in [0, n]; digit n is 0
        out = 0
        flip = False
        for i, src in enumerate(self.pi):
            bit = 0 if src == n else (v >> (n - 1 - src)) & 1
            if i == n:
                flip = bool(bit)
            elif bit:
                out |= 1 << (n - 1 - i)
        if flip:
            out ^= (1 << n) - 1
        return self.c ^ out

    def is_identity(self) -> bool:
        return self.c == 0 and self.pi == tuple(range(self.n + 1))


# the eight automorphisms of an augmented cube that fix the zero vertex,
# given as patterns on (first bit, middle block of n-3 bits, last two bits);
# middle ops: keep, complement, reverse, complement-of-reverse
_KEEP, _COMP, _REV, _CREV = "A", "C", "R", "CR"

_AQ_BASE_PATTERNS = {
    1: {(0, 0b00): (0, _KEEP, 0b00), (0, 0b01): (0, _KEEP, 0b01),
        (0, 0b10): (0, _KEEP, 0b10), (0, 0b11): (0, _KEEP, 0b11),
        (1, 0b00): (1, _KEEP, 0b00), (1, 0b01): (1, _KEEP, 0b01),
        (1, 0b10): (1, _KEEP, 0b10), (1, 0b11): (1, _KEEP, 0b11)},
    2: {(0, 0b00): (0, _KEEP, 0b00), (0, 0b01): (0, _KEEP, 0b01),
        (0, 0b10): (0, _KEEP, 0b10), (0, 0b11): (0, _KEEP, 0b11),
        (1, 0b00): (1, _COMP, 0b11), (1, 0b01): (1, _COMP, 0b10),
        (1, 0b10): (1, _COMP, 0b01), (1, 0b11): (1, _COMP, 0b00)},
    3: {(0, 0b00): (0, _KEEP, 0b00), (0, 0b01): (0, _KEEP, 0b10),
        (0, 0b10): (0, _KEEP, 0b01), (0, 0b11): (0, _KEEP, 0b11),
        (1, 0b00): (1, _KEEP, 0b00), (1, 0b01): (1, _KEEP, 0b10),
        (1, 0b10): (1, _KEEP, 0b01), (1, 0b11): (1, _KEEP, 0b11)},
    4: {(0, 0b00): (0, _KEEP, 0b00), (0, 0b01): (0, _KEEP, 0b10),
        (0, 0b10): (0, _KEEP, 0b01), (0, 0b11): (0, _KEEP, 0b11),
        (1, 0b00): (1, _COMP, 0b11), (1, 0b01): (1, _COMP, 0b01),
        (1, 0b10): (1, _COMP, 0b10), (1, 0b11): (1, _COMP, 0b00)},
    5: {(0, 0b00): (0, _REV, 0b00), (0, 0b01): (1, _CREV, 0b11),
        (0, 0b10): (1, _REV, 0b00), (0, 0b11): (0, _CREV, 0b11),
        (1, 0b00): (0, _REV, 0b10), (1, 0b01): (1, _CREV, 0b01),
        (1, 0b10): (1, _REV, 0b10), (1, 0b11): (0, _CREV, 0b01)},
    6: {(0, 0b00): (0, _REV, 0b00), (0, 0b01): (1, _CREV, 0b11),
        (0, 0b10): (1, _REV, 0b00), (0, 0b11): (0, _CREV, 0b11),
        (1, 0b00): (0, _REV, 0b01), (1, 0b01): (1, _CREV, 0b10),
        (1, 0b10): (1, _REV, 0b01), (1, 0b11): (0, _CREV, 0b10)},
    7: {(0, 0b00): (0, _REV, 0b00), (0, 0b01): (1, _REV, 0b00),
        (0, 0b10): (1, _CREV, 0b11), (0, 0b11): (0, _CREV, 0b11),
        (1, 0b00): (0, _REV, 0b10), (1, 0b01): (1, _REV, 0b10),
        (1, 0b10): (1, _CREV, 0b01), (1, 0b11): (0, _CREV, 0b01)},
    8: {(0, 0b00): (0, _REV, 0b00), (0, 0b01): (1, _REV, 0b00),
        (0, 0b10): (1, _CREV, 0b11), (0, 0b11): (0, _CREV, 0b11),
        (1, 0b00): (0, _REV, 0b01), (1, 0b01): (1, _REV, 0b01),
        (1, 0b10): (1, _CREV, 0b10), (1, 0b11): (0, _CREV, 0b10)},
}


def _mid_reverse(a: int, width: int) -> int:
    r = 0
    for i in range(width):
        if (a >> i) & 1:
            r |= 1 << (width - 1 - i)
    return r


@dataclass(frozen=True)
class AugmentedAff(Automorphism):
    """Translation composed with one of the eight base maps fixing zero."""

    n: int
    c: int
    base: int  # 1..8

    def __post_init__(self):
        if self.n < 4:
            raise ParameterOutOfRange("augmented base maps need n >= 4")
        if not 1 <= self.base <= 8:
            raise ParameterOutOfRange(f"base index {self.base} not in 1..8")

    @property
    def n_vertices(self) -> int:
        return 1 << self.n

    def apply(self, v: int) -> int:
        n = self.n
        width = n - 3
        midmask = (1 << width) - 1
        first = (v >> (n - 1)) & 1
        mid = (v >> 2) & midmask
        last2 = v & 0b11
        first2, op, last2b = _AQ_BASE_PATTERNS[self.base][(first, last2)]
        if op == _COMP:
            mid ^= midmask
        elif op == _REV:
            mid = _mid_reverse(mid, width)
        elif op == _CREV:
            mid = _mid_reverse(mid, width) ^ midmask
        return self.c ^ ((first2 << (n - 1)) | (mid << 2) | last2b)

    def is_identity(self) -> bool:
        return self.c == 0 and self.base == 1


@dataclass(frozen=True)
class LtqTranslation(Automorphism):
    """Adds a fixed word to the first n-1 bits of each vertex."""

    n: int
    c_prime: int  # (n-1)-bit word over positions 1..n-1

    @property
    def n_vertices(self) -> int:
        return 1 << self.n

    def apply(self, v: int) -> int:
        return v ^ (self.c_prime << 1)

    def is_identity(self) -> bool:
        return self.c_prime == 0


@dataclass(frozen=True)
class ProductAut(Automorphism):
    """Blockwise automorphism of a Cartesian product: (g, h) -> (a(g), b(h))."""

    a: Automorphism
    b: Automorphism

    @property
    def n_vertices(self) -> int:
        return self.a.n_vertices * self.b.n_vertices

    def apply(self, v: int) -> int:
        nb = self.b.n_vertices
        return self.a.apply(v // nb) * nb + self.b.apply(v % nb)

    def is_identity(self) -> bool:
        return self.a.is_identity() and self.b.is_identity()


def identity_aut(nv: int) -> ExplicitPerm:
    return ExplicitPerm(tuple(range(nv)))


def compose(sigma: Automorphism, tau: Automorphism) -> Automorphism:
    """(sigma o tau)(v) = sigma(tau(v)), kept structural where easy."""
    if sigma.n_vertices != tau.n_vertices:
        raise DimensionMismatch("composing automorphisms of different graphs")
    if isinstance(sigma, HypercubeAff) and isinstance(tau, HypercubeAff):
        n = sigma.n
        pi = tuple(tau.pi[sigma.pi[i]] for i in range(n))
        c = sigma.c ^ _permute_positions(tau.c, sigma.pi, n)
        return HypercubeAff(n, c, pi)
    if isinstance(sigma, LtqTranslation) and isinstance(tau, LtqTranslation):
        return LtqTranslation(sigma.n, sigma.c_prime ^ tau.c_prime)
    if isinstance(sigma, FoldedAff) and isinstance(tau, FoldedAff):
        n = sigma.n
        c = sigma.apply(tau.c)
        lin = lambda v: c ^ sigma.apply(tau.apply(v))  # noqa: E731
        return FoldedAff(n, c, _folded_pi_from_linear(lin, n))
    if isinstance(sigma, AugmentedAff) and isinstance(tau, AugmentedAff):
        n = sigma.n
        c = sigma.apply(tau.apply(0))
        for idx in range(1, 9):
            cand = AugmentedAff(n, c, idx)
            if all(cand.apply(p) == sigma.apply(tau.apply(p))
                   for p in _aq_probes(n)):
                return cand
        raise AssertionError("composite escaped the structured form")
    if isinstance(sigma, ProductAut) and isinstance(tau, ProductAut) \
            and sigma.b.n_vertices == tau.b.n_vertices:
        return ProductAut(compose(sigma.a, tau.a), compose(sigma.b, tau.b))
    return ExplicitPerm(tuple(sigma.apply(tau.apply(v)) for v in range(sigma.n_vertices)))


def inverse(sigma: Automorphism) -> Automorphism:
    if isinstance(sigma, HypercubeAff):
        n = sigma.n
        inv_pi = [0] * n
        for i, src in enumerate(sigma.pi):
            inv_pi[src] = i
        inv_pi = tuple(inv_pi)
        c = _permute_positions(sigma.c, inv_pi, n)
        return HypercubeAff(n, c, inv_pi)
    if isinstance(sigma, LtqTranslation):
        return sigma
    if isinstance(sigma, FoldedAff):
        n = sigma.n
        inv_pi = [0] * (n + 1)
        for i, src in enumerate(sigma.pi):
            inv_pi[src] = i
        base = FoldedAff(n, 0, tuple(inv_pi))
        # v -> L^{-1}(v + c); probe to renormalise the translation part
        c = base.apply(sigma.c)
        return FoldedAff(n, c, tuple(inv_pi))
    if isinstance(sigma, AugmentedAff):
        n = sigma.n
        for idx in range(1, 9):
            for c in {sigma.apply(0), AugmentedAff(n, 0, idx).apply(sigma.c)} | {
                    AugmentedAff(n, 0, idx).apply(sigma.apply(0))}:
                cand = AugmentedAff(n, c, idx)
                if all(cand.apply(sigma.apply(p)) == p for p in _aq_probes(n)):
                    return cand
        perm = sigma.images()
        inv = [0] * len(perm)
        for v, w in enumerate(perm):
            inv[w] = v
        return ExplicitPerm(tuple(inv))
    if isinstance(sigma, ProductAut):
        return ProductAut(inverse(sigma.a), inverse(sigma.b))
    perm = sigma.images()
    inv = [0] * len(perm)
    for v, w in enumerate(perm):
        inv[w] = v
    return ExplicitPerm(tuple(inv))


def _aq_probes(n: int) -> list[int]:
    probes = [1 << b for b in range(n)]
    probes += [(1 << t) - 1 for t in range(2, n + 1)]
    probes += [((1 << n) - 1) ^ 0b101, 0b10 | (1 << (n - 1))]
    return [p & ((1 << n) - 1) for p in probes]


def _folded_pi_from_linear(lin, n: int) -> tuple[int, ...]:
    """Recover the symbol permutation of a linear folded automorphism."""
    full = (1 << n) - 1
    sym_img = [0] * (n + 1)  # symbol j -> symbol image
    seen = set()
    for j in range(n):
        w = lin(1 << (n - 1 - j))
        if w == full:
            sym_img[j] = n
        else:
            if w.bit_count() != 1:
                raise AssertionError("not a folded-form linear map")
            sym_img[j] = n - w.bit_length()
        seen.add(sym_img[j])
    sym_img[n] = next(s for s in range(n + 1) if s not in seen)
    # coordinate i of the image reads source coordinate pi[i]
    pi = [0] * (n + 1)
    for j, img in enumerate(sym_img):
        pi[img] = j
    return tuple(pi)


def fq_phi_extend(n: int, symbol_perm) -> FoldedAff:
    """Folded automorphism from a permutation of the n+1 symbols.

    `symbol_perm[j]` is the image symbol of symbol j (0-based; symbol n is
    the all-ones word).  The translation part is zero.
    """
    if n < 4:
        raise ParameterOutOfRange("folded structured form needs n >= 4")
    sp = tuple(symbol_perm)
    if sorted(sp) != list(range(n + 1)):
        raise ParameterOutOfRange("not a permutation of the n+1 symbols")
    pi = [0] * (n + 1)
    for j, img in enumerate(sp):
        pi[img] = j
    return FoldedAff(n, 0, tuple(pi))


def aq_base(n: int, idx: int) -> AugmentedAff:
    """One of the eight augmented-cube automorphisms fixing zero."""
    return AugmentedAff(n, 0, idx)


# ---------------------------------------------------------------------------
# groups


@dataclass
class PermGroup:
    """A set of automorphisms closed under composition, given by generators.

    `structure` names a closed enumeration scheme when one exists; otherwise
    elements come from generator closure.  `order_known` is trusted when set
    (it is cross-checked against enumeration in the tests).
    """

    n_vertices: int
    generators: list[Automorphism]
    structure: tuple | None = None
    order_known: int | None = None
    source: str = "explicit"
    graph: Graph | None = None
    _elements: list[tuple[int, ...]] | None = field(default=None, repr=False)

    def order(self, cap: int = DEFAULT_ELEMENT_CAP) -> int:
        if self.order_known is not None:
            return self.order_known
        n = len(self.elements(cap))
        self.order_known = n
        return n

    def is_trivial(self) -> bool:
        if self.order_known is not None:
            return self.order_known == 1
        return all(g.is_identity() for g in self.generators)

    def elements(self, cap: int = DEFAULT_ELEMENT_CAP) -> list[tuple[int, ...]]:
        if self._elements is None:
            if self.order_known is not None and self.order_known > cap:
                raise SearchBudgetExceeded(
                    f"group of order {self.order_known} above element cap {cap}")
            if self.structure is not None:
                elems = _enumerate_structure(self.structure, cap)
            else:
                elems = _closure(self.n_vertices,
                                 [g.images() for g in self.generators], cap)
            elems.sort()
            self._elements = elems
            if self.order_known is None:
                self.order_known = len(elems)
            elif self.order_known != len(elems):
                raise AssertionError(
                    f"order mismatch: formula {self.order_known}, enumerated {len(elems)}")
        return self._elements

    def element_auts(self, cap: int = DEFAULT_ELEMENT_CAP) -> list[Automorphism]:
        return [ExplicitPerm(p) for p in self.elements(cap)]

    def orbits(self) -> list[list[int]]:
        """Vertex orbits under the generators (union-find over images)."""
        parent = list(range(self.n_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            for v in range(self.n_vertices):
                a, b = find(v), find(g.apply(v))
                if a != b:
                    parent[a] = b
        buckets: dict[int, list[int]] = {}
        for v in range(self.n_vertices):
            buckets.setdefault(find(v), []).append(v)
        return sorted(buckets.values())

    def is_vertex_transitive(self) -> bool:
        return len(self.orbits()) <= 1


def _closure(nv: int, gen_images: list[tuple[int, ...]], cap: int) -> list[tuple[int, ...]]:
    """BFS closure of generator image arrays (numpy-batched for larger groups)."""
    ident = tuple(range(nv))
    gens = [g for g in gen_images if g != ident]
    if not gens:
        return [ident]
    if nv <= 255:
        import numpy as np

        garr = [np.array(g, dtype=np.uint8) for g in gens]
        ident_a = np.arange(nv, dtype=np.uint8)
        seen = {ident_a.tobytes()}
        frontier = ident_a[None, :]
        out = [ident_a.tobytes()]
        while len(frontier):
            batches = []
            for g in garr:
                batches.append(g[frontier])  # (sigma o tau)(v) = sigma(tau(v))
            fresh = []
            for batch in batches:
                for row in batch:
                    key = row.tobytes()
                    if key not in seen:
                        if len(seen) >= cap:
                            raise SearchBudgetExceeded(
                                f"group closure exceeded {cap} elements")
                        seen.add(key)
                        out.append(key)
                        fresh.append(row)
            frontier = np.array(fresh, dtype=np.uint8) if fresh else np.empty((0, nv), np.uint8)
        return [tuple(b) for b in out]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(g[x] for x in p)
                if q not in seen:
                    if len(seen) >= cap:
                        raise SearchBudgetExceeded(f"group closure exceeded {cap} elements")
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return list(seen)


def _enumerate_structure(structure: tuple, cap: int) -> list[tuple[int, ...]]:
    kind = structure[0]
    if kind == "hypercube":
        n = structure[1]
        total = (1 << n) * factorial(n)
        if total > cap:
            raise SearchBudgetExceeded(f"|Aut| = {total} above element cap {cap}")
        out = []
        for pi in permutations(range(n)):
            base = HypercubeAff(n, 0, pi).images()
            for c in range(1 << n):
                out.append(tuple(x ^ c for x in base))
        return out
    if kind == "folded":
        n = structure[1]
        total = (1 << n) * factorial(n + 1)
        if total > cap:
            raise SearchBudgetExceeded(f"|Aut| = {total} above element cap {cap}")
        out = []
        for pi in permutations(range(n + 1)):
            base = FoldedAff(n, 0, pi).images()
            for c in range(1 << n):
                out.append(tuple(x ^ c for x in base))
        return out
    if kind == "augmented":
        n = structure[1]
        total = (1 << n) * 8
        if total > cap:
            raise SearchBudgetExceeded(f"|Aut| = {total} above element cap {cap}")
        out = []
        for idx in range(1, 9):
            base = AugmentedAff(n, 0, idx).images()
            for c in range(1 << n):
                out.append(tuple(x ^ c for x in base))
        return out
    if kind == "ltq":
        n = structure[1]
        return [LtqTranslation(n, cp).images() for cp in range(1 << (n - 1))]
    if kind == "product":
        ga, gb = structure[1], structure[2]
        total = ga.order(cap) * gb.order(cap)
        if total > cap:
            raise SearchBudgetExceeded(f"|Aut| = {total} above element cap {cap}")
        nb = gb.n_vertices
        out = []
        for pa in ga.elements(cap):
            for pb in gb.elements(cap):
                out.append(tuple(pa[v // nb] * nb + pb[v % nb]
                                 for v in range(ga.n_vertices * nb)))
        return out
    raise AssertionError(f"unknown structure {kind!r}")


def is_automorphism(g: Graph, mapping) -> bool:
    """True iff `mapping` (callable or sequence) is a bijection preserving
    adjacency and non-adjacency."""
    nv = g.n_vertices
    if callable(mapping):
        img = [mapping(v) for v in range(nv)]
    else:
        img = list(mapping)
    if len(img) != nv or sorted(img) != list(range(nv)):
        return False
    for u in range(nv):
        row = 0
        r = g.rows[u]
        while r:
            low = r & -r
            row |= 1 << img[low.bit_length() - 1]
            r ^= low
        if row != g.rows[img[u]]:
            return False
    return True


def _searched_factor_group(spec: FamilySpec) -> PermGroup:
    from .search import search_automorphisms

    return search_automorphisms(build_family(spec))


def trivial_group(nv: int, graph: Graph | None = None) -> PermGroup:
    return PermGroup(nv, [], None, 1, "structured", graph, [tuple(range(nv))])


def structured_group(g: Graph) -> PermGroup:
    """The automorphism group in its closed structural form.

    Raises NoStructuredForm for families without one (even powers, Hamming
    graphs, and the small-n exceptions); callers fall back on search.
    """
    spec = g.family
    if spec is None:
        raise NoStructuredForm("no family tag on this graph")
    n = spec.n
    if spec.kind == HYPERCUBE or (spec.kind == POWER and spec.k % 2 == 1 and spec.k <= n - 2):
        gens = [HypercubeAff(n, 1 << b, tuple(range(n))) for b in range(n)]
        gens += [HypercubeAff(n, 0, _transposition(n, i, i + 1)) for i in range(n - 1)]
        order = (1 << n) * factorial(n)
        grp = PermGroup(1 << n, gens, ("hypercube", n), order, "structured", g)
    elif spec.kind == FOLDED and n >= 4:
        gens = [FoldedAff(n, 1 << b, tuple(range(n + 1))) for b in range(n)]
        gens += [FoldedAff(n, 0, _transposition(n + 1, i, i + 1)) for i in range(n)]
        order = (1 << n) * factorial(n + 1)
        grp = PermGroup(1 << n, gens, ("folded", n), order, "structured", g)
    elif spec.kind == AUGMENTED and n >= 4:
        gens = [AugmentedAff(n, 1 << b, 1) for b in range(n)]
        gens += [AugmentedAff(n, 0, idx) for idx in (2, 3, 5)]
        grp = PermGroup(1 << n, gens, ("augmented", n), (1 << n) * 8, "structured", g)
    elif spec.kind == LOCALLY_TWISTED and n >= 4:
        gens = [LtqTranslation(n, 1 << b) for b in range(n - 1)]
        grp = PermGroup(1 << n, gens, ("ltq", n), 1 << (n - 1), "structured", g)
    elif spec.kind == ENHANCED:
        k, ell = spec.k, n - spec.k + 1
        if k == 1:
            ga = trivial_group(1)
        else:
            ga = structured_group(build_family(FamilySpec(HYPERCUBE, k - 1)))
        if ell >= 4:
            gb = structured_group(build_family(FamilySpec(FOLDED, ell)))
        else:
            gb = _searched_factor_group(FamilySpec(FOLDED, ell))
        nb = 1 << ell
        gens: list[Automorphism] = [ProductAut(a, identity_aut(nb)) for a in ga.generators]
        gens += [ProductAut(identity_aut(1 << (k - 1)), b) for b in gb.generators]
        order = ga.order() * gb.order()
        grp = PermGroup(1 << n, gens, ("product", ga, gb), order, "structured", g)
    else:
        raise NoStructuredForm(f"no closed form for {spec.name()}")
    for gen in grp.generators:
        if not is_automorphism(g, gen):
            raise AssertionError(f"structured generator failed for {spec.name()}: {gen}")
    return grp


def _transposition(n: int, i: int, j: int) -> tuple[int, ...]:
    pi = list(range(n))
    pi[i], pi[j] = pi[j], pi[i]
    return tuple(pi)


def group_order(grp: PermGroup, cap: int = DEFAULT_ELEMENT_CAP) -> int:
    return grp.order(cap)


# ---------------------------------------------------------------------------
# stabilizers


def _hypercube_stab_columns(words, n: int) -> list[tuple[int, ...]]:
    ws = sorted(words)
    return [tuple((w >> (n - 1 - i)) & 1 for w in ws) for i in range(n)]


def _folded_stab_columns(words, n: int) -> list[tuple[int, ...]]:
    """Columns of the zero-extended words; the last column is all zeros."""
    ws = sorted(words)
    cols = [tuple((w >> (n - 1 - i)) & 1 for w in ws) for i in range(n)]
    cols.append(tuple(0 for _ in ws))
    return cols


def _xor_cols(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x ^ y for x, y in zip(a, b))


def hypercube_set_is_determining(words, n: int) -> bool:
    """Only the identity of Z_2^n x S_n fixes every word in `words` pointwise.

    After translating the set to contain zero, the translation part of any
    fixing automorphism must vanish, and a fixing bit permutation exists iff
    two position columns agree.
    """
    S = sorted(set(words))
    if not S:
        return n == 0
    a = S[0]
    cols = _hypercube_stab_columns([a ^ s for s in S], n)
    return len(set(cols)) == n


def folded_set_is_determining(words, n: int) -> bool:
    """Determining test in the folded-cube group (n >= 4).

    Works on the n+1 columns of the zero-extended translated words: a fixing
    symbol permutation exists iff two columns agree, or some column value E
    translates the column-value set onto itself (the symbol mapped to the
    all-ones word contributes the zero column shifted by E).
    """
    S = sorted(set(words))
    if not S:
        return False
    a = S[0]
    cols = _folded_stab_columns([a ^ s for s in S], n)
    colset = set(cols)
    if len(colset) != n + 1:
        return False
    for e in colset:
        if any(e):
            shifted = {_xor_cols(c, e) for c in colset}
            if shifted == colset:
                return False
    return True


def augmented_set_is_determining(words, n: int) -> bool:
    """Determining test in the augmented-cube group (n >= 4)."""
    S = sorted(set(words))
    if not S:
        return False
    a = S[0]
    moved = [a ^ s for s in S]
    for idx in range(2, 9):
        phi = AugmentedAff(n, 0, idx)
        if all(phi.apply(w) == w for w in moved):
            return False
    return True


def pointwise_stabilizer_is_trivial(grp: PermGroup, subset) -> bool:
    """Fast check that only the identity fixes every vertex of `subset`."""
    S = sorted(set(subset))
    if not S:
        return grp.is_trivial()
    st = grp.structure
    if st is not None and st[0] == "hypercube":
        return hypercube_set_is_determining(S, st[1])
    if st is not None and st[0] == "folded":
        return folded_set_is_determining(S, st[1])
    if st is not None and st[0] == "augmented":
        return augmented_set_is_determining(S, st[1])
    if st is not None and st[0] == "ltq":
        return True  # only the zero translation fixes any vertex
    if st is not None and st[0] == "product":
        ga, gb = st[1], st[2]
        nb = gb.n_vertices
        return (pointwise_stabilizer_is_trivial(ga, {v // nb for v in S})
                and pointwise_stabilizer_is_trivial(gb, {v % nb for v in S}))
    for p in grp.elements():
        if all(p[v] == v for v in S) and any(p[v] != v for v in range(grp.n_vertices)):
            return False
    return True


def pointwise_stabilizer(grp: PermGroup, subset) -> PermGroup:
    """Subgroup fixing every vertex of `subset`.

    Structured groups are solved on their coordinate data; enumerated groups
    are filtered directly.
    """
    S = sorted(set(subset))
    nv = grp.n_vertices
    if not S:
        return grp
    st = grp.structure
    if st is not None and st[0] == "hypercube":
        n = st[1]
        a = S[0]
        cols = _hypercube_stab_columns([a ^ s for s in S], n)
        classes: dict[tuple, list[int]] = {}
        for i, col in enumerate(cols):
            classes.setdefault(col, []).append(i)
        order = 1
        gens = []
        for idx in classes.values():
            order *= factorial(len(idx))
            for i, j in zip(idx, idx[1:]):
                pi = _transposition(n, i, j)
                c = a ^ _permute_positions(a, pi, n)
                gens.append(HypercubeAff(n, c, pi))
        return PermGroup(nv, gens, None, order, grp.source, grp.graph)
    if st is not None and st[0] == "folded":
        n = st[1]
        a = S[0]
        cols = _folded_stab_columns([a ^ s for s in S], n)
        classes: dict[tuple, list[int]] = {}
        for i, col in enumerate(cols):
            classes.setdefault(col, []).append(i)
        order = 0
        gens = []
        zero = tuple(0 for _ in S)
        values = set(classes)
        for e in values:
            shifted = {_xor_cols(c, e) for c in values}
            if shifted != values:
                continue
            if not all(len(classes[_xor_cols(c, e)]) == len(classes[c]) for c in values):
                continue
            term = 1
            for idx in classes.values():
                term *= factorial(len(idx))
            order += term
            if e == zero:
                for idx in classes.values():
                    for i, j in zip(idx, idx[1:]):
                        gens.append(_conjugated_folded(n, a, _transposition(n + 1, i, j)))
            else:
                pi = [0] * (n + 1)
                for c in values:
                    for i, j in zip(classes[c], classes[_xor_cols(c, e)]):
                        pi[j] = i  # image coordinate j reads source i
                gens.append(_conjugated_folded(n, a, tuple(pi)))
        return PermGroup(nv, gens, None, order, grp.source, grp.graph)
    if st is not None and st[0] == "augmented":
        n = st[1]
        a = S[0]
        moved = [a ^ s for s in S]
        keep = [idx for idx in range(1, 9)
                if all(AugmentedAff(n, 0, idx).apply(w) == w for w in moved)]
        gens = []
        for idx in keep:
            if idx == 1:
                continue
            phi = AugmentedAff(n, 0, idx)
            c = a ^ phi.apply(a)
            sigma = AugmentedAff(n, c, idx)
            if all(sigma.apply(s) == s for s in S):
                gens.append(sigma)
            else:
                perm = tuple(a ^ phi.apply(a ^ v) for v in range(nv))
                gens.append(ExplicitPerm(perm))
        return PermGroup(nv, gens, None, len(keep), grp.source, grp.graph)
    if st is not None and st[0] == "ltq":
        return trivial_group(nv, grp.graph)
    if st is not None and st[0] == "product":
        ga, gb = st[1], st[2]
        nb = gb.n_vertices
        sa = pointwise_stabilizer(ga, {v // nb for v in S})
        sb = pointwise_stabilizer(gb, {v % nb for v in S})
        gens = [ProductAut(x, identity_aut(nb)) for x in sa.generators]
        gens += [ProductAut(identity_aut(ga.n_vertices), y) for y in sb.generators]
        return PermGroup(nv, gens, ("product", sa, sb),
                         sa.order() * sb.order(), grp.source, grp.graph)
    elems = [p for p in grp.elements() if all(p[v] == v for v in S)]
    gens = [ExplicitPerm(p) for p in elems if any(p[v] != v for v in range(nv))]
    out = PermGroup(nv, gens, None, len(elems), grp.source, grp.graph)
    out._elements = sorted(elems)
    return out


def _conjugated_folded(n: int, a: int, pi: tuple[int, ...]) -> FoldedAff:
    base = FoldedAff(n, 0, pi)
    c = a ^ base.apply(a)
    return FoldedAff(n, c, pi)


def setwise_stabilizer(grp: PermGroup, subset, cap: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    """Subgroup mapping `subset` onto itself."""
    S = frozenset(subset)
    nv = grp.n_vertices
    if not S or len(S) == nv:
        return grp
    st = grp.structure
    if st is not None and st[0] == "augmented":
        n = st[1]
        elems = []
        for t in S:
            for idx in range(1, 9):
                phi = AugmentedAff(n, 0, idx)
                # sigma = rho_c o phi with sigma(min S ... ) -- anchor on 0:
                # sigma(s0) = t forces c = t ^ phi(s0)
                s0 = min(S)
                c = t ^ phi.apply(s0)
                sigma = AugmentedAff(n, c, idx)
                if all(sigma.apply(s) in S for s in S):
                    elems.append(sigma)
        gens = [e for e in elems if not e.is_identity()]
        return PermGroup(nv, gens, None, len(elems), grp.source, grp.graph)
    if st is not None and st[0] == "ltq":
        n = st[1]
        elems = []
        s0 = min(S)
        for t in S:
            d = s0 ^ t
            if d & 1:
                continue
            sigma = LtqTranslation(n, d >> 1)
            if all(sigma.apply(s) in S for s in S):
                elems.append(sigma)
        gens = [e for e in elems if e.c_prime]
        return PermGroup(nv, gens, None, len(set(e.c_prime for e in elems)),
                         grp.source, grp.graph)
    elems = [p for p in grp.elements(cap) if all(p[v] in S for v in S)]
    gens = [ExplicitPerm(p) for p in elems if any(p[v] != v for v in range(nv))]
    out = PermGroup(nv, gens, None, len(elems), grp.source, grp.graph)
    out._elements = sorted(elems)
    return out


def setwise_stabilizer_is_trivial(grp: PermGroup, subset, cap: int = DEFAULT_ELEMENT_CAP) -> bool:
    return setwise_stabilizer(grp, subset, cap).order(cap) == 1


# ---------------------------------------------------------------------------
# JSON serialization


def automorphism_to_json(a: Automorphism) -> dict:
    """Explicit image-array form plus the structural data when present."""
    out: dict = {"images": list(a.images())}
    if isinstance(a, HypercubeAff):
        out["form"] = {"kind": "hypercube_aff", "n": a.n, "c": a.c, "pi": list(a.pi)}
    elif isinstance(a, FoldedAff):
        out["form"] = {"kind": "folded_aff", "n": a.n, "c": a.c, "pi": list(a.pi)}
    elif isinstance(a, AugmentedAff):
        out["form"] = {"kind": "augmented_aff", "n": a.n, "c": a.c, "base": a.base}
    elif isinstance(a, LtqTranslation):
        out["form"] = {"kind": "ltq_translation", "n": a.n, "c_prime": a.c_prime}
    else:
        out["form"] = {"kind": "explicit"}
    return out


def automorphism_from_json(d: dict) -> Automorphism:
    form = d.get("form", {"kind": "explicit"})
    kind = form["kind"]
    if kind == "hypercube_aff":
        return HypercubeAff(form["n"], form["c"], tuple(form["pi"]))
    if kind == "folded_aff":
        return FoldedAff(form["n"], form["c"], tuple(form["pi"]))
    if kind == "augmented_aff":
        return AugmentedAff(form["n"], form["c"], form["base"])
    if kind == "ltq_translation":
        return LtqTranslation(form["n"], form["c_prime"])
    return ExplicitPerm(tuple(d["images"]))


def group_to_json(grp: PermGroup) -> dict:
    return {
        "n_vertices": grp.n_vertices,
        "order": grp.order_known,
        "source": grp.source,
        "generators": [automorphism_to_json(g) for g in grp.generators],
    }


def group_from_json(d: dict) -> PermGroup:
    gens = [automorphism_from_json(g) for g in d["generators"]]
    return PermGroup(d["n_vertices"], gens, None, d.get("order"),
                     d.get("source", "explicit"))
