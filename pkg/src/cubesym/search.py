"""Generic automorphism-group search by equitable refinement and backtracking.

The search tree individualizes one vertex of the first smallest non-singleton
cell at each node and refines to an equitable partition.  Discrete partitions
are leaves; a leaf whose relabelled adjacency matrix matches the first leaf's
yields an automorphism.  Siblings are pruned by the orbits of the already
discovered automorphisms that fix the node's individualized prefix, and
subtrees whose refinement trace diverges from the first path are cut.

The group order is |orbit(b1)| * |orbit(b2) under stab(b1)| * ... along the
first path, which the tests cross-check against full element enumeration.
"""

from __future__ import annotations

from .autgroup import ExplicitPerm, PermGroup
from .bitgraph import Graph
from .errors import SearchBudgetExceeded

DEFAULT_SEARCH_VERTEX_CAP = 4096
DEFAULT_NODE_BUDGET = 100_000_000


def _cell_mask(cell) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def _refine(rows, cells, splitters):
    """Equitable refinement; returns (cells, trace) with a label-free trace."""
    queue = list(splitters)
    trace = []
    while queue:
        wmask = queue.pop()
        new_cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault((rows[v] & wmask).bit_count(), []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
                continue
            changed = True
            keys = sorted(groups)
            trace.append((len(cell), tuple(keys), tuple(len(groups[k]) for k in keys)))
            for k in keys:
                frag = groups[k]
                new_cells.append(frag)
                queue.append(_cell_mask(frag))
        if changed:
            cells = new_cells
    return cells, tuple(trace)


def _leaf_certificate(rows, labeling) -> bytes:
    """Adjacency matrix bits in leaf order."""
    n = len(labeling)
    pos = [0] * n
    for i, v in enumerate(labeling):
        pos[v] = i
    acc = 0
    nbits = 0
    for i in range(n):
        row = rows[labeling[i]]
        rebased = 0
        while row:
            low = row & -row
            rebased |= 1 << pos[low.bit_length() - 1]
            row ^= low
        acc = (acc << n) | rebased
        nbits += n
    return acc.to_bytes((nbits + 7) // 8, "big")


def _orbit_reps_filter(n_vertices, gens, prefix):
    """Union-find orbits under the found generators that fix `prefix` pointwise."""
    fixing = [g for g in gens if all(g[v] == v for v in prefix)]
    if not fixing:
        return None
    parent = list(range(n_vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in fixing:
        for v in range(n_vertices):
            a, b = find(v), find(g[v])
            if a != b:
                parent[a] = b
    return find


def pinned_refinement_is_discrete(g: Graph, pinned) -> bool:
    """Sound determining-set certificate: seed an equitable refinement with
    each pinned vertex in its own cell; if the refinement is discrete, every
    automorphism fixing the pinned set pointwise fixes all cells, hence all
    vertices.  (A non-discrete result is inconclusive, not a refutation.)
    """
    pinned = list(dict.fromkeys(pinned))
    inset = set(pinned)
    rest = [v for v in range(g.n_vertices) if v not in inset]
    cells = [[v] for v in pinned] + ([rest] if rest else [])
    refined, _ = _refine(g.rows, cells, [_cell_mask(c) for c in cells])
    return all(len(c) == 1 for c in refined)


def search_automorphisms(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET,
                         vertex_cap: int = DEFAULT_SEARCH_VERTEX_CAP) -> PermGroup:
    """The full automorphism group of `g`, found by refinement search."""
    n = g.n_vertices
    if n > vertex_cap:
        raise SearchBudgetExceeded(f"{n} vertices above the search cap {vertex_cap}")
    if n == 0:
        return PermGroup(0, [], None, 1, "searched", g, [()])
    rows = g.rows

    gens: list[tuple[int, ...]] = []
    state = {
        "nodes": 0,
        "first_leaf": None,   # labeling tuple
        "first_cert": None,
        "first_path_inv": {},  # depth -> trace invariant
        "base": [],            # individualized vertices along the first path
    }

    def dfs(cells, depth, prefix):
        state["nodes"] += 1
        if state["nodes"] > node_budget:
            raise SearchBudgetExceeded(f"search exceeded {node_budget} nodes")

        target = None
        for cell in cells:
            if len(cell) > 1 and (target is None or len(cell) < len(target)):
                target = cell
        if target is None:
            labeling = tuple(c[0] for c in cells)
            if state["first_leaf"] is None:
                state["first_leaf"] = labeling
                state["first_cert"] = _leaf_certificate(rows, labeling)
                return
            if _leaf_certificate(rows, labeling) == state["first_cert"]:
                first = state["first_leaf"]
                perm = [0] * n
                for i in range(n):
                    perm[first[i]] = labeling[i]
                gens.append(tuple(perm))
            return

        on_first_path = state["first_leaf"] is None
        explored = []
        for v in sorted(target):
            if explored:
                find = _orbit_reps_filter(n, gens, prefix)
                if find is not None and any(find(v) == find(w) for w in explored):
                    continue
            rest = [w for w in target if w != v]
            child_cells = []
            for cell in cells:
                if cell is target:
                    child_cells.append([v])
                    child_cells.append(rest)
                else:
                    child_cells.append(cell)
            refined, trace = _refine(rows, child_cells, [1 << v])
            if on_first_path and state["first_leaf"] is None:
                state["first_path_inv"][depth] = trace
                state["base"].append(v)
                dfs(refined, depth + 1, prefix + [v])
            else:
                ref_inv = state["first_path_inv"].get(depth)
                if ref_inv is not None and trace != ref_inv:
                    explored.append(v)
                    continue
                dfs(refined, depth + 1, prefix + [v])
            explored.append(v)

    start_cells, start_trace = _refine(rows, [list(range(n))], [ (1 << n) - 1 ])
    dfs(start_cells, 0, [])

    # order = product of base-point orbit sizes along the stabilizer chain
    order = 1
    base = state["base"]
    for i, b in enumerate(base):
        fixing = [p for p in gens if all(p[v] == v for v in base[:i])]
        orbit = {b}
        frontier = [b]
        while frontier:
            nxt = []
            for x in frontier:
                for p in fixing:
                    y = p[x]
                    if y not in orbit:
                        orbit.add(y)
                        nxt.append(y)
            frontier = nxt
        order *= len(orbit)

    uniq = sorted(set(gens))
    return PermGroup(n, [ExplicitPerm(p) for p in uniq], None, order, "searched", g)
