"""The shared edge recursion f(G) = f(G - e) - f(G ∘ e) for all four kinds.

Each kind differs only in how the contracted vertex is wired: nothing
(matching), union (chromatic), intersection (adjoint), or symmetric
difference (co-adjoint).  Base case: the edgeless n-vertex graph gives x^n.
"""

import enum

from .errors import CapacityError
from .graphs import (
    CANON_MAX_VERTICES,
    MAX_VERTICES,
    canonical_key,
    component_masks,
    delete_edge,
    induced_subgraph,
    merge_edge,
)
from .polynomials import BiPoly, Poly, substitute_sum


class FamilyKind(enum.Enum):
    MATCHING = "empty"
    CHROMATIC = "union"
    ADJOINT = "intersection"
    COADJOINT = "symdiff"

    @property
    def merge_mode(self):
        return self.value


_memo = {}


def clear_memo():
    _memo.clear()


def _first_edge(g):
    for u in range(g.n):
        rest = g.adj[u] >> (u + 1)
        if rest:
            low = rest & -rest
            return (u, u + 1 + low.bit_length() - 1)
    return None


def family_poly(g, kind, _split=True):
    """Family polynomial of g by memoized deletion-merge recursion.

    Memoization is keyed by (canonical key, kind), so isomorphic subproblems
    are computed once; graphs split multiplicatively over components (a
    property the test suite verifies against the plain recursion).
    """
    if g.n > MAX_VERTICES:
        raise CapacityError(f"n = {g.n} exceeds {MAX_VERTICES}")
    e = _first_edge(g)
    if e is None:
        return Poly.monomial(g.n)

    if _split:
        comps = component_masks(g)
        if len(comps) > 1:
            acc = Poly([1])
            for mask in comps:
                acc = acc * family_poly(induced_subgraph(g, mask), kind)
            return acc

    key = None
    if g.n <= CANON_MAX_VERTICES:
        key = (canonical_key(g), kind)
        hit = _memo.get(key)
        if hit is not None:
            return hit

    result = family_poly(delete_edge(g, e), kind) - family_poly(
        merge_edge(g, e, kind.merge_mode), kind
    )
    if key is not None:
        _memo[key] = result
    return result


def family_poly_plain(g, kind, pick_edge=None):
    """Unmemoized recursion with a caller-chosen edge order.

    pick_edge(edge_list) returns the edge to recurse on; defaults to the
    lexicographically smallest.  Used to test order-independence.
    """
    edges = g.edges()
    if not edges:
        return Poly.monomial(g.n)
    e = pick_edge(edges) if pick_edge else edges[0]
    return family_poly_plain(delete_edge(g, e), kind, pick_edge) - family_poly_plain(
        merge_edge(g, e, kind.merge_mode), kind, pick_edge
    )


def b_of(kind, g):
    """x^1-coefficient of the family polynomial of a connected graph."""
    if g.n < 1 or len(component_masks(g)) != 1:
        raise ValueError("b_of requires a connected graph with >= 1 vertex")
    return family_poly(g, kind).coeff(1)


def make_b_function(kind):
    """Total b-function: x^1-coefficient on any induced subgraph.

    On disconnected graphs this vanishes for all four kinds (verified by
    test), which makes partition sums total without special-casing.
    """
    cache = {}

    def b(h):
        key = canonical_key(h) if h.n <= CANON_MAX_VERTICES else None
        if key is not None and key in cache:
            return cache[key]
        val = family_poly(h, kind).coeff(1)
        if key is not None:
            cache[key] = val
        return val

    return b


def set_partitions(items):
    """All partitions of a list into non-empty blocks."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


F_B_MAX_VERTICES = 10


def f_b_construct(g, b):
    """Polynomial sum over vertex-set partitions with one b-factor per block.

    Coefficient of x^k sums b(G[S_1])...b(G[S_k]) over partitions of V(g)
    into exactly k blocks.
    """
    if g.n > F_B_MAX_VERTICES:
        raise CapacityError(f"partition enumeration capped at n = {F_B_MAX_VERTICES}")
    if g.n == 0:
        return Poly([1])
    coeffs = [0] * (g.n + 1)
    for part in set_partitions(list(range(g.n))):
        prod = 1
        for block in part:
            mask = 0
            for v in block:
                mask |= 1 << v
            prod *= b(induced_subgraph(g, mask))
            if prod == 0:
                break
        coeffs[len(part)] += prod
    return Poly(coeffs)


EXP_CHECK_MAX_VERTICES = 7


def exp_type_check(g, kind):
    """Does sum_S f(G[S], x) f(G[V\\S], y) equal f(G, x+y) exactly?"""
    if g.n > EXP_CHECK_MAX_VERTICES:
        raise CapacityError(f"subset enumeration capped at n = {EXP_CHECK_MAX_VERTICES}")
    full = (1 << g.n) - 1
    lhs = BiPoly.zero()
    for s in range(full + 1):
        px = family_poly(induced_subgraph(g, s), kind)
        py = family_poly(induced_subgraph(g, full ^ s), kind)
        lhs = lhs + BiPoly.outer(px, py)
    return lhs == substitute_sum(family_poly(g, kind))
