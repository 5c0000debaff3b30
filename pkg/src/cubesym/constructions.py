"""Closed-form witness constructions for each family, paired with checks.

Every constructor returns vertices as word values and re-verifies its output
before returning: determining sets through the structural stabilizer tests,
2-distinguishing classes through the determining-plus-asymmetric-induced-
subgraph criterion, counts through independent enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, factorial

from .autgroup import (
    AugmentedAff,
    augmented_set_is_determining,
    folded_set_is_determining,
    hypercube_set_is_determining,
)
from .bitgraph import FamilySpec, Graph, graph_from_edges, hamming_words, word_digit
from .errors import ParameterOutOfRange
from .search import search_automorphisms


def _ceil_lg(n: int) -> int:
    return (n - 1).bit_length()


# ---------------------------------------------------------------------------
# characteristic matrices


@dataclass(frozen=True)
class CharMatrix:
    """Rows are the vertices of an ordered set written factor by factor."""

    entries: tuple[tuple[int, ...], ...]
    alphabet: int = 2

    @property
    def r(self) -> int:
        return len(self.entries)

    @property
    def n(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.n)]


def characteristic_matrix(words, n: int, m: int = 2) -> CharMatrix:
    """Characteristic matrix of an ordered vertex set over K_m^n coordinates."""
    rows = tuple(tuple(word_digit(w, j, n, m) for j in range(1, n + 1)) for w in words)
    return CharMatrix(rows, m)


def columns_isomorphic(a, b, m: int = 2) -> bool:
    """Two columns are isomorphic iff one is a symbol-relabelling of the other,
    i.e. they induce the same partition of the row indices."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise ParameterOutOfRange("columns of different length")
    if m == 2:
        return a == b or all(x ^ 1 == y for x, y in zip(a, b))
    part_a = {}
    part_b = {}
    for i, (x, y) in enumerate(zip(a, b)):
        part_a.setdefault(x, []).append(i)
        part_b.setdefault(y, []).append(i)
    return sorted(part_a.values()) == sorted(part_b.values())


def char_matrix_is_determining(x: CharMatrix) -> bool:
    """Pairwise non-isomorphic columns, each holding a determining set of its
    factor (any symbol for K_2, at least m-1 distinct symbols for K_m)."""
    cols = x.columns()
    m = x.alphabet
    for j, col in enumerate(cols):
        if len(set(col)) < m - 1:
            return False
        for k in range(j + 1, len(cols)):
            if columns_isomorphic(col, cols[k], m):
                return False
    return True


# ---------------------------------------------------------------------------
# Stirling numbers and Hamming graphs


def _stirling2_recurrence(r: int, m: int) -> int:
    if r < 0 or m < 0:
        raise ParameterOutOfRange("stirling2 needs r, m >= 0")
    if m == 0 or m > r:
        return 1 if r == m else 0
    table = {(0, 0): 1}
    for rr in range(1, r + 1):
        for mm in range(0, m + 1):
            if mm == 0:
                table[(rr, mm)] = 0
            else:
                table[(rr, mm)] = mm * table.get((rr - 1, mm), 0) + table.get((rr - 1, mm - 1), 0)
    return table[(r, m)]


def _stirling2_formula(r: int, m: int) -> int:
    """Inclusion-exclusion sum; exact in big integers."""
    if m == 0:
        return 1 if r == 0 else 0
    total = sum((-1) ** i * comb(m, i) * (m - i) ** r for i in range(m + 1))
    q, rem = divmod(total, factorial(m))
    assert rem == 0
    return q


def stirling2(r: int, m: int) -> int:
    """Partitions of an r-set into m nonempty unlabelled parts.

    The recurrence value is cross-checked against the summation formula.
    """
    val = _stirling2_recurrence(r, m)
    assert val == _stirling2_formula(r, m), (r, m)
    return val


def _hamming_threshold(r: int, m: int) -> int:
    return _stirling2_recurrence(r, m) + _stirling2_recurrence(r, m - 1)


def _hamming_threshold_closed(r: int, m: int) -> int:
    """The same count of usable non-isomorphic columns, in closed form."""
    if m == 2:
        return 2 ** (r - 1)
    total = (-1) ** (m - 1)
    total += sum((-1) ** i * comb(m - 1, i) * ((m - i) ** (r - 1) + (m - i - 1) ** r)
                 for i in range(m - 1))
    q, rem = divmod(total, factorial(m - 1))
    assert rem == 0
    return q


def hamming_det_number(m: int, n: int) -> int:
    """det(H(m,n)): the least r whose column budget S(r,m)+S(r,m-1) covers n.

    Both the Stirling form and the closed form are evaluated and must agree.
    """
    if m < 2 or n < 1:
        raise ParameterOutOfRange("hamming_det_number needs m >= 2, n >= 1")
    r = 1
    while True:
        t = _hamming_threshold(r, m)
        tc = _hamming_threshold_closed(r, m)
        assert t == tc, (r, m, t, tc)
        if n <= t:
            return r
        r += 1


def hamming_is_two_distinguishable(m: int, n: int) -> bool:
    return (m == 2 and n >= 4) or (m == 3 and n >= 3) or (m >= 4 and n >= 2)


@dataclass(frozen=True)
class HammingCostBounds:
    applicable: bool
    lo: int | None = None
    hi: int | None = None
    reason: str | None = None


def hamming_cost_bounds(m: int, n: int) -> HammingCostBounds:
    """Cost window {det, det+1} when the product-cost theorem applies."""
    if not hamming_is_two_distinguishable(m, n):
        return HammingCostBounds(False, reason="not 2-distinguishable")
    if m - 1 < 2:
        return HammingCostBounds(False, reason="m - 1 < 2")
    if n < m - 1:
        return HammingCostBounds(False, reason="n < m - 1")
    det = hamming_det_number(m, n)
    return HammingCostBounds(True, det, det + 1)


# ---------------------------------------------------------------------------
# closed-form determining numbers


def hypercube_det_number(n: int) -> int:
    if n < 1:
        return 0
    return _ceil_lg(n) + 1


def folded_det_number(n: int) -> int:
    if n == 1:
        return 1
    if n == 2:
        return 3
    if n == 3:
        return 6
    if _is_exceptional_folded(n):
        return _ceil_lg(n) + 2
    return _ceil_lg(n + 1) + 1


def _is_exceptional_folded(n: int) -> bool:
    """n of the form 2^m - 1 or 2^m - 3 with m >= 3."""
    for delta in (1, 3):
        t = n + delta
        if t >= 8 and t & (t - 1) == 0:
            return True
    return False


def enhanced_det_number(n: int, k: int) -> int:
    """det of the enhanced cube via its product decomposition."""
    if n < 2 or not 1 <= k <= n - 1:
        raise ParameterOutOfRange("enhanced_det_number needs n >= 2, 1 <= k <= n-1")
    return max(hypercube_det_number(k - 1), folded_det_number(n - k + 1))


# ---------------------------------------------------------------------------
# small induced subgraphs straight from the word rules


def _induced_by_rule(words, adjacent) -> Graph:
    ws = list(words)
    edges = [(i, j) for i, j in combinations(range(len(ws)), 2) if adjacent(ws[i], ws[j])]
    return graph_from_edges(len(ws), edges, FamilySpec("explicit"), tuple(ws))


def folded_induced(words, n: int) -> Graph:
    return _induced_by_rule(words, lambda u, v: hamming_words(u, v, n) in (1, n))


def hypercube_induced(words, n: int) -> Graph:
    return _induced_by_rule(words, lambda u, v: hamming_words(u, v, n) == 1)


def power2_induced(words, n: int) -> Graph:
    return _induced_by_rule(words, lambda u, v: 1 <= hamming_words(u, v, n) <= 2)


def _is_asymmetric_words(g: Graph) -> bool:
    return search_automorphisms(g).order() == 1


# ---------------------------------------------------------------------------
# hypercubes and their even powers


def hypercube_det_set(n: int) -> tuple[int, ...]:
    """Minimum determining set {V_0..V_r} of Q_n: V_i alternates blocks of
    2^(i-1) ones and zeros, truncated to length n; V_0 is the zero word."""
    if n < 2:
        raise ParameterOutOfRange("hypercube_det_set needs n >= 2")
    r = _ceil_lg(n)
    out = [0]
    for i in range(1, r + 1):
        block = 1 << (i - 1)
        w = 0
        for j in range(1, n + 1):
            if ((j - 1) // block) % 2 == 0:
                w |= 1 << (n - j)
        out.append(w)
    assert hypercube_set_is_determining(out, n)
    assert len(out) == hypercube_det_number(n)
    return tuple(sorted(out))


def hypercube_dist_class(n: int) -> tuple[int, ...]:
    """A color class of a 2-distinguishing coloring of Q_n (n >= 5): the
    prefix-ones path plus a pendant neighbour of its third vertex, giving a
    determining set with an asymmetric induced subgraph."""
    if n < 5:
        raise ParameterOutOfRange("hypercube_dist_class needs n >= 5")
    path = [_prefix_ones(i, n) for i in range(n + 1)]
    pendant = path[2] | 1  # flips the last position of the third path vertex
    cls = path + [pendant]
    assert hypercube_set_is_determining(cls, n)
    assert _is_asymmetric_words(hypercube_induced(cls, n))
    return tuple(sorted(cls))


def _prefix_ones(i: int, n: int) -> int:
    return ((1 << i) - 1) << (n - i)


def q2_witnesses(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Determining set and 2-distinguishing class for the square of Q_n.

    S is the prefix-ones chain U_0..U_{n-1}, certified determining by pinned
    equitable refinement (distance vectors alone do not separate all vertices
    for even n).  T = S + {w} induces the square of a path with a pendant
    edge, which is asymmetric, so T is a 2-distinguishing color class.
    """
    if n <= 3:
        raise ParameterOutOfRange("q2_witnesses needs n > 3")
    S = [_prefix_ones(i, n) for i in range(n)]
    w = (1 << (n - 1)) - 1  # zero in position 1, ones elsewhere
    T = S + [w]

    from .bitgraph import hypercube_power
    from .search import pinned_refinement_is_discrete

    g = hypercube_power(n, 2)
    assert pinned_refinement_is_discrete(g, S)

    gS = power2_induced(S, n)
    assert all(gS.has_edge(i, j) == (abs(i - j) <= 2) for i in range(n) for j in range(i + 1, n))
    return tuple(S), tuple(sorted(T))


def q2_class_is_asymmetric(n: int) -> bool:
    """Whether the q2 class T induces an asymmetric subgraph.

    True for n >= 5.  For n = 4 the induced subgraph is the square of P_4
    (K_4 minus an edge) with a pendant at an end, which keeps an internal
    swap of the two middle path vertices, so T is not a valid class there.
    """
    _, T = q2_witnesses(n)
    return _is_asymmetric_words(power2_induced(list(T), n))


# ---------------------------------------------------------------------------
# folded hypercubes


def fq_det_set(n: int) -> tuple[int, ...]:
    """Minimum determining set of FQ_n, following the parity/exception cases."""
    if n == 1:
        return (0,)
    if n == 2:
        return (0, 1, 2)
    if n == 3:
        return (0, 1, 2, 3, 4, 5)
    if _is_exceptional_folded(n):
        out = sorted(set(hypercube_det_set(n)) | {(1 << n) - 1})
    elif n % 2 == 0:
        out = _fq_det_even(n)
    else:
        out = _fq_det_odd(n)
    assert folded_set_is_determining(out, n), n
    assert len(out) == folded_det_number(n), n
    return tuple(sorted(out))


def _words_from_columns(cols: list[tuple[int, ...]], n: int) -> list[int]:
    """Rows of a column-listed 0/1 matrix as words (row t, position j)."""
    height = len(cols[0])
    words = []
    for t in range(height):
        w = 0
        for j, col in enumerate(cols):
            if col[t]:
                w |= 1 << (n - 1 - j)
        words.append(w)
    return words


def _fq_det_even(n: int) -> list[int]:
    m = _ceil_lg(n + 1)
    cols = [tuple((j >> (m - 1 - t)) & 1 for t in range(m)) for j in range(1, n + 1)]
    words = _words_from_columns(cols, n)
    return [0] + words


def _fq_det_odd(n: int) -> list[int]:
    """Odd n that is not adjacent to a power of two: pair complementary
    column vectors so the column sum lands outside the used columns."""
    m = _ceil_lg(n + 1)
    half = 1 << (m - 1)
    q = n - half
    assert q % 2 == 1 and 1 <= q <= half - 5, (n, q)
    width = m - 1
    full = (1 << width) - 1
    c = [None] * (half)  # c[1..half-1]
    c[1] = full
    for t in range(1, (half >> 1)):
        c[2 * t] = t
        c[2 * t + 1] = full ^ t
    cvec = lambda x: tuple((x >> (width - 1 - s)) & 1 for s in range(width))  # noqa: E731
    cols = [(1,) + cvec(c[j]) for j in range(1, half - 1)]
    cols.append((0,) + cvec(c[half - 1]))
    cols += [(0,) + cvec(c[i]) for i in range(1, q + 2)]
    assert len(cols) == n
    colsum = [0] * m
    for col in cols:
        for s in range(m):
            colsum[s] ^= col[s]
    colsum = tuple(colsum)
    if n % 4 == 1:
        assert colsum not in cols
    else:
        assert any(colsum)
    words = _words_from_columns(cols, n)
    return [0] + words


_FQ_CLASS_LITERALS = {
    # n = 4, 5: lexicographically least sets that are determining with an
    # asymmetric induced subgraph (no path-shaped set works at these sizes;
    # the natural flip-path constructions pick up chords and keep a swap)
    4: ["0000", "0001", "0010", "0011", "0100", "0101", "1000", "1011"],
    5: ["00000", "00001", "00010", "00011", "00100", "01001", "10100"],
    6: ["101010", "100010", "110010", "110011", "111011", "111111", "111101",
        "111100", "000000"],
    7: ["1010101", "1110101", "1100101", "1100111", "1100110", "1110110",
        "1111110", "1111100", "1111000", "1111111", "0000000", "1000000"],
}


def _flip_path(frm: int, to: int, n: int, reverse: bool = False) -> list[int]:
    """Vertices after `frm` obtained by flipping differing positions one at a
    time, leftmost first (rightmost first when `reverse`); ends with `to`."""
    out = []
    cur = frm
    positions = range(1, n + 1) if not reverse else range(n, 0, -1)
    for j in positions:
        bit = 1 << (n - j)
        if (cur ^ to) & bit:
            cur ^= bit
            out.append(cur)
    assert cur == to
    return out


def _path_flaws(path: list[int], n: int) -> tuple[int, int]:
    """(collisions, chords): repeated vertices, and non-consecutive pairs at
    Hamming distance 1 or n (folded adjacencies inside the path)."""
    collisions = len(path) - len(set(path))
    chords = 0
    for i in range(len(path)):
        for j in range(i + 2, len(path)):
            if hamming_words(path[i], path[j], n) in (1, n):
                chords += 1
    return collisions, chords


def fq_dist_structure(n: int) -> dict:
    """Path-and-branch data behind fq_dist_class for n >= 8.

    Each leg flips the differing positions leftmost first.  Truncation to a
    non-power-of-two length can make the literal flip order revisit a vertex
    or run a chord back into an earlier leg, so all per-leg orientation
    choices (leftmost- vs rightmost-first) are tried in lexicographic order
    and the first chord-free collision-free combination wins.
    """
    if n < 8:
        raise ParameterOutOfRange("the general construction starts at n = 8")
    from itertools import product

    full = (1 << n) - 1
    chain = _bo_vectors(n)
    legs = len(chain) - 1
    best = None
    for orient in product((False, True), repeat=legs):
        path = [chain[0]]
        for (a, b), rev in zip(zip(chain, chain[1:]), orient):
            path.extend(_flip_path(a, b, n, reverse=rev))
        collisions, chords = _path_flaws(path, n)
        if collisions == 0 and chords == 0:
            best = path
            break
        if collisions == 0 and best is None:
            best = path
    assert best is not None, n
    path = best
    hub = min(enumerate(path), key=lambda t: (hamming_words(t[1], full, n), t[0]))[1]
    branch = []
    if hub != full:
        seen = set(path)
        for rev in (False, True):
            branch = _flip_path(hub, full, n, reverse=rev)
            if not seen & set(branch):
                break
        assert not seen & set(branch), n
    vertices = path + branch + [0]
    assert len(set(vertices)) == len(vertices)
    return {"path": path, "hub": hub, "branch": branch, "vertices": vertices}


def _bo_vectors(n: int) -> list[int]:
    r = _ceil_lg(n)
    out = []
    for i in range(1, r + 1):
        block = 1 << (i - 1)
        w = 0
        for j in range(1, n + 1):
            if ((j - 1) // block) % 2 == 0:
                w |= 1 << (n - j)
        out.append(w)
    return out


def fq_dist_class(n: int) -> tuple[int, ...]:
    """A 2-distinguishing color class of FQ_n (n >= 4): a determining set
    inducing an asymmetric subgraph.  Literal sets for 4 <= n <= 7, the
    path-tree construction beyond."""
    if n < 4:
        raise ParameterOutOfRange("fq_dist_class needs n >= 4")
    if n <= 7:
        cls = [int(s, 2) for s in _FQ_CLASS_LITERALS[n]]
    else:
        data = fq_dist_structure(n)
        cls = list(data["vertices"])
        if not _is_asymmetric_words(folded_induced(cls, n)):
            cls = _fq_break_symmetry(cls, n)
    assert folded_set_is_determining(cls, n), n
    assert _is_asymmetric_words(folded_induced(cls, n)), n
    return tuple(sorted(cls))


def _fq_break_symmetry(cls: list[int], n: int) -> list[int]:
    """Deterministically extend a determining class until its induced
    subgraph is asymmetric: first the pendant 10..0 at the zero vertex, then
    the lex-least word with exactly one neighbour in the class that works.
    (Truncation to non-power-of-two lengths can collapse the path-and-branch
    tree into a plain path, which a well-placed pendant repairs.)
    """
    base = set(cls)
    candidates = [1 << (n - 1)]
    candidates += [w for w in range(1 << n) if w not in base]
    for w in candidates:
        if w in base:
            continue
        deg = sum(1 for v in cls if hamming_words(w, v, n) in (1, n))
        if deg != 1:
            continue
        trial = cls + [w]
        if _is_asymmetric_words(folded_induced(trial, n)):
            return trial
    raise AssertionError(f"no single pendant restores asymmetry for n={n}")


def fq_dist_class_size_bound(n: int) -> int:
    """Size budget for the constructed class: the path length bound plus the
    branch-and-pendants allowance."""
    r = _ceil_lg(n)
    return 1 + (r - 1) * n // 2 + n // 4 + 3


# ---------------------------------------------------------------------------
# augmented hypercubes


def aq_det_witness(n: int) -> tuple[int, ...]:
    """Minimum determining set of AQ_n for n >= 4; oracle literals below."""
    if n < 4:
        from .bitgraph import augmented_hypercube
        from .oracle import oracle_determining_number

        return tuple(oracle_determining_number(augmented_hypercube(n)).witness)
    if n >= 6:
        y = (1 << (n - 1)) | (((1 << (n - 4)) - 1) << 3) | 1
        out = (0, y)
    else:
        out = (0, 1, 1 << (n - 1))
    assert augmented_set_is_determining(out, n), n
    return tuple(sorted(out))


def aq_no_2subset_is_determining(n: int) -> bool:
    """Exhaustively confirms that no 2-subset of AQ_n (n in {4, 5}) is
    determining (via translation to the zero vertex)."""
    return not any(augmented_set_is_determining((0, v), n) for v in range(1, 1 << n))


def aq_cost_class(n: int) -> tuple[int, ...]:
    """3-element class {0, 1..0..1, 0 1..1 0} with trivial setwise stabilizer."""
    if n < 4:
        raise ParameterOutOfRange("aq_cost_class needs n >= 4")
    cls = (0, (1 << (n - 1)) | 1, (1 << (n - 1)) - 2)
    assert augmented_setwise_is_trivial(cls, n), n
    return cls


def augmented_setwise_is_trivial(words, n: int) -> bool:
    """Exact setwise-stabilizer triviality in the augmented-cube group."""
    S = frozenset(words)
    s0 = min(S)
    for t in S:
        for idx in range(1, 9):
            phi = AugmentedAff(n, 0, idx)
            c = t ^ phi.apply(s0)
            if c == 0 and idx == 1:
                continue
            sigma = AugmentedAff(n, c, idx)
            if all(sigma.apply(s) in S for s in S):
                return False
    return True


def aq_no_2subset_cost_class(g: Graph) -> bool:
    """Exhaustive over 2-subsets: each is preserved by the translation
    swapping its two elements, so its setwise stabilizer is nontrivial.
    Returns True iff that argument holds for every pair of `g`."""
    from .autgroup import is_automorphism

    nv = g.n_vertices
    trans_ok: dict[int, bool] = {0: True}
    for a in range(nv):
        for b in range(a + 1, nv):
            c = a ^ b
            ok = trans_ok.get(c)
            if ok is None:
                ok = is_automorphism(g, lambda v, c=c: v ^ c)
                trans_ok[c] = ok
            swap = (c ^ a == b and c ^ b == a)
            if not (ok and swap):
                return False
    return True


# ---------------------------------------------------------------------------
# locally twisted hypercubes


def ltq_witnesses(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(determining set, 2-distinguishing class) for LTQ_n."""
    if n < 3:
        raise ParameterOutOfRange("ltq_witnesses needs n >= 3")
    if n == 3:
        from .bitgraph import locally_twisted_hypercube
        from .oracle import oracle_cost, oracle_determining_number

        g = locally_twisted_hypercube(3)
        det = oracle_determining_number(g)
        cost = oracle_cost(g)
        return tuple(det.witness), tuple(cost.witness)
    # only the zero translation fixes any single vertex
    return (0,), (0,)


# ---------------------------------------------------------------------------
# enhanced hypercubes: 2-distinguishing class candidates


def enhanced_dist_class_candidates(n: int, k: int) -> list[tuple[int, ...]]:
    """Candidate 2-distinguishing classes for the enhanced cube, built from
    the product structure; each must still be verified by the caller."""
    if k == 1:
        return [fq_dist_class(n)] if n >= 4 else []
    na, nb = 1 << (k - 1), 1 << (n - k + 1)
    out = []
    # rows = prefix factor with pairwise distinct row sizes, columns chained so
    # the pinned prefix of the chain is a determining set of the suffix factor
    det_b = _factor_det_sequence("folded", n - k + 1)
    if len(det_b) <= na - 1 <= nb:
        chain = det_b + [v for v in range(nb) if v not in det_b]
        cls = []
        for i in range(na):
            cls.extend(i * nb + c for c in chain[:i])
        out.append(tuple(sorted(cls)))
    det_a = _factor_det_sequence("hypercube", k - 1)
    if nb - 1 <= na and len(det_a) <= nb - 1:
        chain = det_a + [v for v in range(na) if v not in det_a]
        cls = []
        for j in range(nb):
            cls.extend(a * nb + j for a in chain[:j])
        out.append(tuple(sorted(cls)))
    if k == 2 and n - 1 >= 4:
        out.append(fq_dist_class(n - 1))  # one K_2 copy colored, the other plain
    return out


def _factor_det_sequence(kind: str, n: int) -> list[int]:
    if kind == "hypercube":
        if n == 0:
            return []
        if n == 1:
            return [0]
        return list(hypercube_det_set(n))
    return list(fq_det_set(n))
