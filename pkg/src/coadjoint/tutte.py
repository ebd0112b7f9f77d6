"""Tutte polynomial by two routes, plus its specializations.

Route one expands the edge-subset definition; route two runs
deletion-contraction on multigraphs (contraction keeps parallel edges and
loops).  The two must agree coefficientwise, which the tests assert.
"""

from fractions import Fraction

from .errors import CapacityError, InvalidEdgeError
from .graphs import (
    CANON_MAX_VERTICES,
    MultiGraph,
    component_masks,
    delete_vertices,
    multigraph_canonical_key,
)
from .oracles import SUBSET_MAX_EDGES, subset_component_tally
from .polynomials import BiPoly, Poly


def _as_multigraph(g):
    return g if isinstance(g, MultiGraph) else MultiGraph.from_simple(g)


def multi_subset_tally(mg):
    """(k(A), |A|) tally over subsets of the edge multiset, loops included."""
    instances = []
    for (u, v), k in mg.mult:
        instances.extend([(u, v)] * k)
    loops = mg.loop_count()
    m = len(instances) + loops
    if m > SUBSET_MAX_EDGES:
        raise CapacityError(f"|E| = {m} exceeds subset cap {SUBSET_MAX_EDGES}")

    tally = {}
    base = {}
    for s in range(1 << len(instances)):
        sub = [instances[i] for i in range(len(instances)) if s >> i & 1]
        k = _components(mg.n, sub)
        key = (k, len(sub))
        base[key] = base.get(key, 0) + 1
    # each loop is in or out independently; neither changes components
    from math import comb

    for (k, a), cnt in base.items():
        for j in range(loops + 1):
            key = (k, a + j)
            tally[key] = tally.get(key, 0) + cnt * comb(loops, j)
    return tally


def _components(n, edge_list):
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


def tutte_from_tally(n, k_full, tally):
    """T(x, y) = sum over subsets of (x-1)^(k(A)-k(E)) (y-1)^(k(A)+|A|-n)."""
    xm1 = Poly([-1, 1])
    ym1 = Poly([-1, 1])
    acc = BiPoly.zero()
    for (k, a), cnt in tally.items():
        px = Poly([1])
        for _ in range(k - k_full):
            px = px * xm1
        py = Poly([1])
        for _ in range(k + a - n):
            py = py * ym1
        acc = acc + BiPoly.outer(px.scale(cnt), py)
    return acc


def tutte_subset(g):
    """Tutte polynomial straight from the subset definition."""
    mg = _as_multigraph(g)
    if mg.loop_count() == 0 and all(k == 1 for _, k in mg.mult):
        simple = mg.underlying_simple()
        tally = subset_component_tally(simple)
    else:
        tally = multi_subset_tally(mg)
    k_full = _components(mg.n, [e for e, _ in mg.mult])
    return tutte_from_tally(mg.n, k_full, tally)


_dc_memo = {}


def clear_memo():
    _dc_memo.clear()


def tutte_dc(g):
    """Tutte polynomial by deletion-contraction on multigraphs.

    Loop edges factor out a y each; bridges an x; any other edge splits into
    delete + contract.  Memoized on a multigraph canonical key.
    """
    mg = _as_multigraph(g)
    if mg.edge_count() == 0:
        return BiPoly.constant(1)

    key = None
    if mg.n <= CANON_MAX_VERTICES:
        key = multigraph_canonical_key(mg)
        hit = _dc_memo.get(key)
        if hit is not None:
            return hit

    loop_v = next((v for v in range(mg.n) if mg.loops[v]), None)
    if loop_v is not None:
        result = BiPoly.outer(Poly([1]), Poly([0, 1])) * tutte_dc(mg.drop_loop(loop_v))
    else:
        e = _pick_edge(mg)
        if e is None:
            # every remaining edge instance is a bridge
            e = mg.mult[0][0]
            result = BiPoly.outer(Poly([0, 1]), Poly([1])) * tutte_dc(mg.delete_one(e))
        else:
            result = tutte_dc(mg.delete_one(e)) + tutte_dc(mg.contract_one(e))
    if key is not None:
        _dc_memo[key] = result
    return result


def _pick_edge(mg):
    """Some non-bridge edge instance, or None if all edges are bridges."""
    for e, k in mg.mult:
        if k >= 2:
            return e
    simple_edges = [e for e, _ in mg.mult]
    k_full = _components(mg.n, simple_edges)
    for e in simple_edges:
        rest = [f for f in simple_edges if f != e]
        if _components(mg.n, rest) == k_full:
            return e
    return None


def coadjoint_from_tutte_tally(n, tally):
    """(-1)^(n - k(E)) x^k(E) T(G, 1-x, -1), evaluated straight on subset stats.

    Substituting x -> 1-x, y -> -1 turns the shifted-variable subset terms
    into (-x)^(k(A)-k(E)) (-2)^(k(A)+|A|-n); the k(E) factors cancel, leaving
    coefficient of x^k = (-1)^(n+k) * sum over |A| with k(A)=k of (-2)^(k+|A|-n).
    """
    coeffs = [0] * (n + 1)
    for (k, a), cnt in tally.items():
        coeffs[k] += cnt * (-1) ** (n + k) * (-2) ** (k + a - n)
    return Poly(coeffs)


_eval_memo = {}


def tutte_eval(g, x, y):
    """T(G, x, y) at an exact point, by memoized deletion-contraction.

    Point evaluation keeps the recursion cheap enough for K_8, where the
    full polynomial subset sum is out of reach.
    """
    mg = _as_multigraph(g)
    if mg.edge_count() == 0:
        return 1

    key = None
    if mg.n <= CANON_MAX_VERTICES:
        key = (multigraph_canonical_key(mg), x, y)
        hit = _eval_memo.get(key)
        if hit is not None:
            return hit

    loop_v = next((v for v in range(mg.n) if mg.loops[v]), None)
    if loop_v is not None:
        result = y * tutte_eval(mg.drop_loop(loop_v), x, y)
    else:
        e = _pick_edge(mg)
        if e is None:
            e = mg.mult[0][0]
            result = x * tutte_eval(mg.delete_one(e), x, y)
        else:
            result = tutte_eval(mg.delete_one(e), x, y) + tutte_eval(mg.contract_one(e), x, y)
    if key is not None:
        _eval_memo[key] = result
    return result


def specialize_coadjoint(g, tutte=None):
    """(-1)^(n - k(G)) x^k(G) T(G, 1-x, -1)."""
    t = tutte if tutte is not None else tutte_subset(g)
    k = len(component_masks(g))
    uni = t.eval_y(-1).compose(Poly([1, -1]))  # x -> 1 - x
    sign = -1 if (g.n - k) % 2 else 1
    return uni.scale(sign).shift_degree(k)


def specialize_chromatic(g, tutte=None):
    """(-1)^(n - k(G)) x^k(G) T(G, 1-x, 0)."""
    t = tutte if tutte is not None else tutte_subset(g)
    k = len(component_masks(g))
    uni = t.eval_y(0).compose(Poly([1, -1]))
    sign = -1 if (g.n - k) % 2 else 1
    return uni.scale(sign).shift_degree(k)


def z_t_conversion_check(g, points):
    """Check T(x,y) = (x-1)^-k(E) (y-1)^-n Z((x-1)(y-1), y-1) at rational points."""
    from .oracles import partition_function

    t = tutte_subset(g)
    k_full = len(component_masks(g))
    for x, y in points:
        x, y = Fraction(x), Fraction(y)
        if x == 1 or y == 1:
            raise ValueError("conversion is singular at x = 1 or y = 1")
        z = partition_function(g, y - 1)((x - 1) * (y - 1))
        rhs = z / (x - 1) ** k_full / (y - 1) ** g.n
        if t(x, y) != rhs:
            return False
    return True


def merino_check(g, e):
    """Does T(G, 1, -1) equal T(G - {u, v}, 2, -1) with both endpoints removed?"""
    u, v = e
    if not g.has_edge(u, v):
        raise InvalidEdgeError(f"({u},{v}) is not an edge")
    lhs = tutte_subset(g)(1, -1)
    rhs = tutte_subset(delete_vertices(g, (u, v)))(2, -1)
    return lhs == rhs
