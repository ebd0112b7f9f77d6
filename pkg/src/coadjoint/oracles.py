"""Independent brute-force computations used to cross-check every fast route.

Everything here enumerates: edge subsets for the partition function, raw
colorings, matchings, clique partitions, and permutations for the zigzag
numbers.  Deliberately unclever so it can serve as ground truth.
"""

from collections import Counter
from fractions import Fraction
from itertools import permutations

from .errors import CapacityError, ConsistencyError
from .family import set_partitions
from .graphs import bits
from .polynomials import Poly

SUBSET_MAX_EDGES = 24


def subset_component_tally(g):
    """Count edge subsets by (component count, subset size).

    Returns a Counter mapping (k(A), |A|) -> number of subsets A.  Subsets
    are visited in lowest-set-bit order so each one is derived from a
    predecessor by adding a single edge to a stored vertex partition.
    """
    edges = g.edges()
    m = len(edges)
    if m > SUBSET_MAX_EDGES:
        raise CapacityError(f"|E| = {m} exceeds subset cap {SUBSET_MAX_EDGES}")
    n = g.n
    shift = 5  # component rep per vertex, 5 bits; n <= 32
    init = sum(v << (shift * v) for v in range(n))
    mask5 = 31

    parts = [0] * (1 << m)
    kcounts = [0] * (1 << m)
    parts[0] = init
    kcounts[0] = n
    tally = Counter()
    tally[(n, 0)] = 1
    for s in range(1, 1 << m):
        low = s & -s
        u, v = edges[low.bit_length() - 1]
        prev = s ^ low
        code = parts[prev]
        k = kcounts[prev]
        ru = code >> (shift * u) & mask5
        rv = code >> (shift * v) & mask5
        if ru != rv:
            keep, drop = (ru, rv) if ru < rv else (rv, ru)
            new = 0
            for t in range(n):
                r = code >> (shift * t) & mask5
                if r == drop:
                    r = keep
                new |= r << (shift * t)
            code = new
            k -= 1
        parts[s] = code
        kcounts[s] = k
        tally[(k, bin(s).count("1"))] += 1
    return tally


def partition_function(g, weights):
    """Z_G(q, v) = sum over edge subsets A of q^k(A) * prod of v_e for e in A.

    weights: a single exact value applied to every edge, or a mapping from
    (u, v) edges to exact values.  Returns a Poly in q.
    """
    edges = g.edges()
    m = len(edges)
    if m > SUBSET_MAX_EDGES:
        raise CapacityError(f"|E| = {m} exceeds subset cap {SUBSET_MAX_EDGES}")
    if isinstance(weights, dict):
        per_edge = [weights[e] for e in edges]
    else:
        per_edge = [weights] * m

    if all(w == per_edge[0] for w in per_edge):
        v = per_edge[0] if per_edge else 0
        coeffs = [0] * (g.n + 1)
        for (k, a), cnt in subset_component_tally(g).items():
            coeffs[k] += cnt * v ** a
        return Poly(coeffs)

    coeffs = [0] * (g.n + 1)
    for s in range(1 << m):
        prod = 1
        sub = []
        t = s
        i = 0
        while t:
            if t & 1:
                prod *= per_edge[i]
                sub.append(edges[i])
            t >>= 1
            i += 1
        coeffs[_component_count(g.n, sub)] += prod
    return Poly(coeffs)


def _component_count(n, edge_list):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    k = n
    for u, v in edge_list:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            k -= 1
    return k


def coadjoint_from_tally(n, tally):
    """Co-adjoint polynomial from a subset tally: 2^-n * Z(2x, -2).

    Each coefficient 2^(k-n) * sum over subsets with k components of (-2)^|A|
    is formed as an exact rational and asserted integral.
    """
    sums = [0] * (n + 1)
    for (k, a), cnt in tally.items():
        sums[k] += cnt * (-2) ** a
    coeffs = []
    for k in range(n + 1):
        t_k = Fraction(sums[k], 1 << (n - k))
        if t_k.denominator != 1:
            raise ConsistencyError(f"non-integer coefficient at x^{k}: {t_k}")
        coeffs.append(t_k.numerator)
    return Poly(coeffs)


def coadjoint_via_Z(g):
    """Co-adjoint polynomial by direct edge-subset enumeration."""
    return coadjoint_from_tally(g.n, subset_component_tally(g))


COLORING_MAX = (6, 6)  # (colors, vertices)


def count_colorings(g, q):
    """Proper q-colorings by exhaustive assignment."""
    if q > COLORING_MAX[0] or g.n > COLORING_MAX[1]:
        raise CapacityError(f"coloring enumeration capped at q <= {COLORING_MAX[0]}, n <= {COLORING_MAX[1]}")
    colors = [0] * g.n

    def rec(v):
        if v == g.n:
            return 1
        total = 0
        earlier = g.adj[v] & ((1 << v) - 1)
        for c in range(q):
            if all(colors[u] != c for u in bits(earlier)):
                colors[v] = c
                total += rec(v + 1)
        return total

    return rec(0)


MATCHING_MAX_VERTICES = 10


def count_matchings(g):
    """Matching counts by size: [m_0, m_1, ...] with m_0 = 1."""
    if g.n > MATCHING_MAX_VERTICES:
        raise CapacityError(f"matching enumeration capped at n = {MATCHING_MAX_VERTICES}")
    counts = Counter()

    def rec(edges, size):
        counts[size] += 1
        for i, (u, v) in enumerate(edges):
            rest = [(a, b) for a, b in edges[i + 1 :] if len({a, b, u, v}) == 4]
            rec(rest, size + 1)

    rec(g.edges(), 0)
    top = max(counts)
    return [counts[k] for k in range(top + 1)]


def count_clique_partitions(g):
    """a_k = number of vertex partitions into k blocks that all induce cliques.

    Returns [a_0, a_1, ..., a_n] with a_0 = 0 for n >= 1.
    """
    if g.n > MATCHING_MAX_VERTICES:
        raise CapacityError(f"partition enumeration capped at n = {MATCHING_MAX_VERTICES}")
    out = [0] * (g.n + 1)
    if g.n == 0:
        out = [1]
        return out
    for part in set_partitions(list(range(g.n))):
        if all(_is_clique(g, block) for block in part):
            out[len(part)] += 1
    return out


def _is_clique(g, block):
    return all(g.has_edge(u, v) for i, u in enumerate(block) for v in block[i + 1 :])


ZIGZAG_MAX = 12
ZIGZAG_BRUTE_MAX = 9


def zigzag_numbers(max_n):
    """E_0..E_max_n, the counts of up-down alternating permutations.

    Computed by the boustrophedon (Seidel-Entringer) triangle and, where
    feasible, re-counted by scanning permutations; disagreement is fatal.
    """
    if max_n > ZIGZAG_MAX:
        raise CapacityError(f"zigzag cap is {ZIGZAG_MAX}")
    out = []
    row = [1]
    out.append(1)
    for n in range(1, max_n + 1):
        prev = row
        row = [0]
        for k in range(1, n + 1):
            row.append(row[k - 1] + prev[n - k])
        out.append(row[n])
    for m in range(min(max_n, ZIGZAG_BRUTE_MAX) + 1):
        brute = _count_alternating(m)
        if brute != out[m]:
            raise ConsistencyError(f"zigzag mismatch at {m}: triangle {out[m]}, brute {brute}")
    return out


def _count_alternating(m):
    if m <= 1:
        return 1
    total = 0
    for perm in permutations(range(m)):
        ok = True
        for i in range(m - 1):
            rising = perm[i] < perm[i + 1]
            if rising != (i % 2 == 0):
                ok = False
                break
        if ok:
            total += 1
    return total
