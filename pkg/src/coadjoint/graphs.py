"""Graph representations and basic operations.

Simple graphs are stored as per-vertex adjacency bitmasks (n <= 32, so a row
fits a machine word).  Multigraphs additionally carry edge multiplicities and
per-vertex loop counts; they only appear inside Tutte deletion-contraction.
All values are immutable; every operation returns a new graph.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import CapacityError, Graph6Error, InvalidEdgeError

MAX_VERTICES = 32
CANON_MAX_VERTICES = 10
ENUM_MAX_VERTICES = 6


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    adj: tuple  # adj[v] = bitmask of neighbors of v

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count != n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"neighbor index >= n in row {v}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v, row in enumerate(self.adj):
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency {v}-{u}")

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def edges(self):
        """Edges as (u, v) pairs with u < v, lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def edge_count(self):
        return sum(bin(row).count("1") for row in self.adj) // 2

    def degree(self, v):
        return bin(self.adj[v]).count("1")

    def degrees(self):
        return tuple(self.degree(v) for v in range(self.n))


def bits(mask):
    """Indices of set bits, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def from_edges(n, edges):
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError("loop edge in simple graph")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return SimpleGraph(n, tuple(rows))


def empty_graph(n):
    return SimpleGraph(n, (0,) * n)


def complete_graph(n):
    full = (1 << n) - 1
    return SimpleGraph(n, tuple(full ^ (1 << v) for v in range(n)))


def complete_bipartite(m, n):
    left = (1 << m) - 1
    right = ((1 << (m + n)) - 1) ^ left
    rows = [right] * m + [left] * n
    return SimpleGraph(m + n, tuple(rows))


def path_graph(n):
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    if n < 3:
        raise ValueError("cycle needs >= 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def build_named(family, *sizes):
    """Standard labeled graph of a named family."""
    builders = {
        "empty": empty_graph,
        "complete": complete_graph,
        "complete_bipartite": complete_bipartite,
        "path": path_graph,
        "cycle": cycle_graph,
    }
    if family not in builders:
        raise ValueError(f"unknown graph family {family!r}")
    if any(s < 0 for s in sizes):
        raise ValueError("negative size")
    if sum(sizes) > MAX_VERTICES:
        raise CapacityError(f"total vertices {sum(sizes)} > {MAX_VERTICES}")
    return builders[family](*sizes)


# The four merge rules share one shape: delete u and v, append a vertex w,
# join w to some combination of the punctured neighborhoods.
MERGE_MODES = ("empty", "union", "intersection", "symdiff")


def merge_edge(g, e, mode):
    """Contract edge e = (u, v) into a new last vertex w.

    w's neighborhood is the empty set / union / intersection / symmetric
    difference of N(u)\\{v} and N(v)\\{u}, per mode.
    """
    u, v = e
    if u > v:
        u, v = v, u
    if not (0 <= u < v < g.n) or not g.has_edge(u, v):
        raise InvalidEdgeError(f"({u},{v}) is not an edge")
    if mode not in MERGE_MODES:
        raise ValueError(f"unknown merge mode {mode!r}")

    nu = g.adj[u] & ~(1 << v)
    nv = g.adj[v] & ~(1 << u)
    if mode == "empty":
        nw = 0
    elif mode == "union":
        nw = nu | nv
    elif mode == "intersection":
        nw = nu & nv
    else:
        nw = nu ^ nv

    keep = [t for t in range(g.n) if t not in (u, v)]
    relabel = {old: new for new, old in enumerate(keep)}
    m = g.n - 1
    rows = [0] * m
    w = m - 1
    for old in keep:
        new = relabel[old]
        for t in bits(g.adj[old]):
            if t in relabel:
                rows[new] |= 1 << relabel[t]
        if nw >> old & 1:
            rows[new] |= 1 << w
            rows[w] |= 1 << new
    return SimpleGraph(m, tuple(rows))


def delete_edge(g, e):
    u, v = e
    if not g.has_edge(u, v):
        raise InvalidEdgeError(f"({u},{v}) is not an edge")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return SimpleGraph(g.n, tuple(rows))


def delete_vertices(g, vertices):
    """Remove the given vertices; survivors keep their relative order."""
    drop = set(vertices)
    keep = [t for t in range(g.n) if t not in drop]
    relabel = {old: new for new, old in enumerate(keep)}
    rows = [0] * len(keep)
    for old in keep:
        for t in bits(g.adj[old]):
            if t in relabel:
                rows[relabel[old]] |= 1 << relabel[t]
    return SimpleGraph(len(keep), tuple(rows))


def induced_subgraph(g, vertex_mask):
    """Induced subgraph on the set bits of vertex_mask, relabeled 0..k-1."""
    keep = bits(vertex_mask)
    relabel = {old: new for new, old in enumerate(keep)}
    rows = [0] * len(keep)
    for old in keep:
        for t in bits(g.adj[old] & vertex_mask):
            rows[relabel[old]] |= 1 << relabel[t]
    return SimpleGraph(len(keep), tuple(rows))


def relabel(g, perm):
    """Image of g under the vertex permutation perm (old index -> new index)."""
    rows = [0] * g.n
    for old in range(g.n):
        for t in bits(g.adj[old]):
            rows[perm[old]] |= 1 << perm[t]
    return SimpleGraph(g.n, tuple(rows))


def components_of_subset(g, edge_subset):
    """Number of connected components of (V(g), A), isolated vertices included."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = g.n
    for u, v in edge_subset:
        if not g.has_edge(u, v):
            raise InvalidEdgeError(f"({u},{v}) is not an edge")
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            count -= 1
    return count


def component_masks(g):
    """Vertex masks of the connected components of g."""
    seen = 0
    out = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        mask = 1 << start
        frontier = [start]
        while frontier:
            v = frontier.pop()
            new = g.adj[v] & ~mask
            mask |= new
            frontier.extend(bits(new))
        seen |= mask
        out.append(mask)
    return out


# ---------------------------------------------------------------------------
# Canonical labeling
#
# Lexicographically minimal upper-triangle bitstring over all relabelings,
# found by a prefix-pruned DFS: at each position only the vertices producing
# the minimal next column are explored, and global twins (vertices whose
# neighborhoods agree off each other, so swapping them is an automorphism)
# collapse to one branch.  Handles the regular graphs where plain
# degree-sequence pruning does nothing.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CanonKey:
    n: int
    bits: int  # upper-triangle bitstring, column-major, of the minimal relabeling


def canonical_key(g):
    if g.n > CANON_MAX_VERTICES:
        raise CapacityError(f"canonical_key capped at n = {CANON_MAX_VERTICES}")
    if g.n <= 1:
        return CanonKey(g.n, 0)

    adj = g.adj
    n = g.n
    best = [None]

    def chunk(v, placed):
        c = 0
        for p in placed:
            c = c << 1 | (adj[v] >> p & 1)
        return c

    def rec(placed, prefix, remaining):
        if not remaining:
            if best[0] is None or prefix < best[0]:
                best[0] = prefix
            return
        j = len(placed)
        cands = {}
        for v in remaining:
            cands.setdefault(chunk(v, placed), []).append(v)
        c = min(cands)
        new_prefix = prefix << j | c
        # prune: a longer prefix can never beat a shorter best here because
        # all full strings have equal length; compare only at equal depth
        if best[0] is not None:
            done_bits = j * (j + 1) // 2
            total_bits = n * (n - 1) // 2
            if new_prefix > best[0] >> (total_bits - done_bits):
                return
        reps = []
        for v in cands[c]:
            if any((adj[v] & ~(1 << r)) == (adj[r] & ~(1 << v)) for r in reps):
                continue
            reps.append(v)
        rest = remaining
        for v in reps:
            rec(placed + [v], new_prefix, [u for u in rest if u != v])

    order = sorted(range(n), key=g.degree)
    rec([], 0, order)
    return CanonKey(n, best[0])


# ---------------------------------------------------------------------------
# graph6 (short format, no header, 0 <= n <= 32)
# ---------------------------------------------------------------------------

def parse_graph6(text):
    s = text.strip()
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    n = ord(s[0]) - 63
    if not 0 <= n <= 62:
        raise Graph6Error(f"bad size byte {s[0]!r}", 0)
    if n > MAX_VERTICES:
        raise Graph6Error(f"n = {n} exceeds cap {MAX_VERTICES}", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) != 1 + nbytes:
        raise Graph6Error(f"expected {1 + nbytes} bytes for n = {n}, got {len(s)}", len(s))
    bitstream = 0
    for i, ch in enumerate(s[1:]):
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise Graph6Error(f"byte {ch!r} out of graph6 range", 1 + i)
        bitstream = bitstream << 6 | val
    pad = 6 * nbytes - nbits
    if bitstream & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", len(s) - 1)
    bitstream >>= pad
    rows = [0] * n
    pos = nbits
    for v in range(1, n):
        for u in range(v):
            pos -= 1
            if bitstream >> pos & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return SimpleGraph(n, tuple(rows))


def emit_graph6(g):
    n = g.n
    nbits = n * (n - 1) // 2
    stream = 0
    for v in range(1, n):
        for u in range(v):
            stream = stream << 1 | (g.adj[u] >> v & 1)
    pad = (6 - nbits % 6) % 6
    stream <<= pad
    nbytes = (nbits + 5) // 6
    chars = [chr(63 + n)]
    for i in range(nbytes - 1, -1, -1):
        chars.append(chr(63 + (stream >> 6 * i & 63)))
    return "".join(chars)


def enumerate_labeled_graphs(n):
    """All 2^(n(n-1)/2) labeled simple graphs on n vertices, each once."""
    if n > ENUM_MAX_VERTICES:
        raise CapacityError(f"labeled enumeration capped at n = {ENUM_MAX_VERTICES}")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        m = mask
        for u, v in pairs:
            if m & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            m >>= 1
        yield SimpleGraph(n, tuple(rows))


# ---------------------------------------------------------------------------
# Multigraphs (Tutte deletion-contraction only)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MultiGraph:
    n: int
    mult: tuple   # sorted tuple of ((u, v), multiplicity), u < v, multiplicity >= 1
    loops: tuple  # per-vertex loop counts

    @staticmethod
    def from_simple(g):
        return MultiGraph(g.n, tuple(((u, v), 1) for u, v in g.edges()), (0,) * g.n)

    @staticmethod
    def from_dict(n, mult, loops):
        items = tuple(sorted((e, m) for e, m in mult.items() if m > 0))
        return MultiGraph(n, items, tuple(loops))

    def underlying_simple(self):
        return from_edges(self.n, [e for e, _ in self.mult])

    def edge_count(self):
        return sum(m for _, m in self.mult) + sum(self.loops)

    def loop_count(self):
        return sum(self.loops)

    def delete_one(self, e):
        """Remove one copy of edge e."""
        mult = dict(self.mult)
        if mult.get(e, 0) < 1:
            raise InvalidEdgeError(f"{e} is not an edge")
        mult[e] -= 1
        return MultiGraph.from_dict(self.n, mult, self.loops)

    def drop_loop(self, v):
        if self.loops[v] < 1:
            raise InvalidEdgeError(f"no loop at {v}")
        loops = list(self.loops)
        loops[v] -= 1
        return MultiGraph(self.n, self.mult, tuple(loops))

    def contract_one(self, e):
        """Contract one copy of e = (u, v); parallels become loops at w."""
        u, v = e
        old = dict(self.mult)
        if old.get(e, 0) < 1:
            raise InvalidEdgeError(f"{e} is not an edge")
        keep = [t for t in range(self.n) if t not in (u, v)]
        relabel = {t: i for i, t in enumerate(keep)}
        m = self.n - 1
        w = m - 1
        mult = {}
        loops = [0] * m
        for i, t in enumerate(keep):
            loops[i] = self.loops[t]
        loops[w] = self.loops[u] + self.loops[v] + old[e] - 1
        for (a, b), k in old.items():
            if (a, b) == e:
                continue
            na = relabel.get(a, w)
            nb = relabel.get(b, w)
            key = (min(na, nb), max(na, nb))
            mult[key] = mult.get(key, 0) + k
        return MultiGraph.from_dict(m, mult, loops)


def multigraph_canonical_key(mg):
    """Isomorphism-complete key for a multigraph, n <= 10.

    Same prefix-pruned DFS as canonical_key, but columns are multiplicity
    tuples and each vertex carries its loop count.
    """
    n = mg.n
    if n > CANON_MAX_VERTICES:
        raise CapacityError(f"multigraph canonical key capped at n = {CANON_MAX_VERTICES}")
    if n == 0:
        return (0, ())
    w = {}
    for (u, v), k in mg.mult:
        w[(u, v)] = k
        w[(v, u)] = k

    best = [None]

    def rec(placed, prefix, remaining):
        if not remaining:
            if best[0] is None or prefix < best[0]:
                best[0] = prefix
            return
        cands = {}
        for v in remaining:
            col = (mg.loops[v],) + tuple(w.get((v, p), 0) for p in placed)
            cands.setdefault(col, []).append(v)
        c = min(cands)
        new_prefix = prefix + c
        depth = len(new_prefix)
        if best[0] is not None and new_prefix > best[0][:depth]:
            return
        for v in cands[c]:
            rec(placed + [v], new_prefix, [u for u in remaining if u != v])

    deg = [mg.loops[v] * 2 for v in range(n)]
    for (u, v), k in mg.mult:
        deg[u] += k
        deg[v] += k
    rec([], (), sorted(range(n), key=lambda v: deg[v]))
    return (n, best[0])
