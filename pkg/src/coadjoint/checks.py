"""Identity suites cross-verifying the computation routes against each other.

Each suite returns a list of CheckResult(name, passed, detail); the CLI and
the acceptance tests both run these.
"""

import random
from collections import namedtuple

from .analysis import eulerian_consequence_check, poly_roots, sokal_constant
from .family import (
    FamilyKind,
    exp_type_check,
    f_b_construct,
    family_poly,
    family_poly_plain,
    make_b_function,
)
from .graphs import (
    complete_bipartite,
    complete_graph,
    component_masks,
    enumerate_labeled_graphs,
)
from .oracles import (
    coadjoint_from_tally,
    count_colorings,
    subset_component_tally,
    zigzag_numbers,
)
from .polynomials import reflect_negate
from .series import build_F, egf_reconstruct
from .tutte import (
    coadjoint_from_tutte_tally,
    merino_check,
    specialize_chromatic,
    specialize_coadjoint,
    tutte_dc,
    tutte_eval,
    tutte_from_tally,
    tutte_subset,
)

CheckResult = namedtuple("CheckResult", "name passed detail")

ALL_KINDS = tuple(FamilyKind)


def _result(name, passed, detail=""):
    return CheckResult(name, passed, detail)


def _all_graphs_upto(max_n):
    for n in range(max_n + 1):
        yield from enumerate_labeled_graphs(n)


def check_recursion(max_n=5, orders=20, seed=20230817):
    """Order-independence: random edge orders reproduce the memoized result."""
    rng = random.Random(seed)
    bad = 0
    total = 0
    for g in _all_graphs_upto(max_n):
        for kind in ALL_KINDS:
            expected = family_poly(g, kind)
            for _ in range(orders):
                got = family_poly_plain(g, kind, pick_edge=rng.choice)
                total += 1
                if got != expected:
                    bad += 1
    return [
        _result(
            f"recursion order-independence (n <= {max_n}, {orders} orders, 4 kinds)",
            bad == 0,
            f"{total - bad}/{total} runs matched",
        )
    ]


def check_exp_type(max_n=5):
    """The subset convolution identity and the b-function reconstruction."""
    results = []
    for kind in ALL_KINDS:
        bad = sum(1 for g in _all_graphs_upto(max_n) if not exp_type_check(g, kind))
        results.append(
            _result(f"exponential-type identity, {kind.name.lower()} (n <= {max_n})", bad == 0)
        )
    for kind in ALL_KINDS:
        b = make_b_function(kind)
        bad = sum(
            1
            for g in _all_graphs_upto(max_n)
            if f_b_construct(g, b) != family_poly(g, kind)
        )
        results.append(
            _result(f"partition-sum reconstruction, {kind.name.lower()} (n <= {max_n})", bad == 0)
        )
    disc_bad = sum(
        1
        for g in _all_graphs_upto(max_n)
        if len(component_masks(g)) > 1
        for kind in ALL_KINDS
        if family_poly(g, kind).coeff(1) != 0
    )
    results.append(
        _result(f"x^1 coefficient vanishes on disconnected graphs (n <= {max_n})", disc_bad == 0)
    )
    return results


def check_tutte(max_n=5):
    """Three-way co-adjoint equivalence plus the Tutte-route consistency checks."""
    results = []
    bad = 0
    total = 0
    for g in _all_graphs_upto(max_n):
        tally = subset_component_tally(g)
        via_recursion = family_poly(g, FamilyKind.COADJOINT)
        via_z = coadjoint_from_tally(g.n, tally)
        via_tutte = coadjoint_from_tutte_tally(g.n, tally)
        total += 1
        if not (via_recursion == via_z == via_tutte):
            bad += 1
    results.append(
        _result(
            f"co-adjoint three-way equivalence (n <= {max_n})",
            bad == 0,
            f"{total - bad}/{total} graphs",
        )
    )

    small_max = min(max_n, 5)
    dc_bad = sum(1 for g in _all_graphs_upto(small_max) if tutte_dc(g) != tutte_subset(g))
    for n in range(1, 7):
        if tutte_dc(complete_graph(n)) != tutte_subset(complete_graph(n)):
            dc_bad += 1
    for n in range(1, 4):
        if tutte_dc(complete_bipartite(n, n)) != tutte_subset(complete_bipartite(n, n)):
            dc_bad += 1
    results.append(
        _result(
            f"deletion-contraction vs subset definition (n <= {small_max}, K_n n<=6, K_nn n<=3)",
            dc_bad == 0,
        )
    )

    spec_bad = 0
    for g in _all_graphs_upto(small_max):
        t = tutte_from_tally(g.n, len(component_masks(g)), subset_component_tally(g))
        if specialize_coadjoint(g, tutte=t) != family_poly(g, FamilyKind.COADJOINT):
            spec_bad += 1
        chrom = specialize_chromatic(g, tutte=t)
        if any(chrom(q) != count_colorings(g, q) for q in range(5)):
            spec_bad += 1
    results.append(
        _result(
            f"Tutte specializations: co-adjoint and chromatic-vs-colorings (n <= {small_max})",
            spec_bad == 0,
        )
    )
    return results


def check_merino(max_kn=6, max_knn=4):
    """The T(G,1,-1) = T(G-{u,v},2,-1) identity and the sequence cross-checks."""
    results = []
    bad = 0
    for n in range(2, max_kn + 1):
        g = complete_graph(n)
        bad += sum(1 for e in g.edges() if not merino_check(g, e))
    for n in range(1, max_knn + 1):
        g = complete_bipartite(n, n)
        bad += sum(1 for e in g.edges() if not merino_check(g, e))
    results.append(
        _result(f"vertex-pair deletion identity, K_n (n <= {max_kn}) and K_nn (n <= {max_knn})", bad == 0)
    )

    zz = zigzag_numbers(8)
    zz_bad = sum(1 for n in range(1, 9) if tutte_eval(complete_graph(n), 1, -1) != zz[n - 1])
    results.append(_result("T(K_n, 1, -1) matches zigzag numbers (n <= 8)", zz_bad == 0))

    seq_bad = 0
    for n in range(1, 7):
        lhs = (-1) ** n * family_poly(complete_graph(n), FamilyKind.COADJOINT)(-1)
        rhs = abs(family_poly(complete_graph(n + 2), FamilyKind.COADJOINT).coeff(1))
        if lhs != rhs:
            seq_bad += 1
    results.append(
        _result("(-1)^n P(K_n, -1) equals |x-coeff of P(K_n+2)| (n <= 6)", seq_bad == 0)
    )

    bip_bad = 0
    for n in range(1, 5):
        lhs = family_poly(complete_bipartite(n, n), FamilyKind.COADJOINT)(-1)
        rhs = abs(
            family_poly(complete_bipartite(n + 1, n + 1), FamilyKind.COADJOINT).coeff(1)
        )
        if lhs != rhs:
            bip_bad += 1
    results.append(
        _result("P(K_nn, -1) equals |x-coeff of P(K_n+1,n+1)| (n <= 4)", bip_bad == 0)
    )
    return results


def check_eulerian(max_n=6):
    bad = sum(1 for g in _all_graphs_upto(max_n) if not eulerian_consequence_check(g))
    return [_result(f"|P(G,1)| parity consequence (n <= {max_n})", bad == 0)]


def check_alternating_signs(max_n=6):
    bad = 0
    for g in _all_graphs_upto(max_n):
        p = family_poly(g, FamilyKind.COADJOINT)
        if any((-1) ** (g.n - k) * p.coeff(k) < 0 for k in range(g.n + 1)):
            bad += 1
    return [_result(f"alternating coefficient signs (n <= {max_n})", bad == 0)]


RESIDUAL_TOL = 1e-8


def check_sokal(max_n=6, include_large=True):
    """Root-modulus bound K * max-degree, deduplicated by (polynomial, degree)."""
    results = []
    k_const = sokal_constant(1e-6)
    k_ok = abs(k_const - 7.963907) < 1e-5
    results.append(_result("root-bound constant = 7.963907 +- 1e-5", k_ok, f"got {k_const:.7f}"))

    seen = set()
    bad = 0
    worst_residual = 0.0
    for g in _all_graphs_upto(max_n):
        if g.edge_count() == 0:
            continue
        p = family_poly(g, FamilyKind.COADJOINT)
        max_deg = max(g.degrees())
        key = (p.coeffs, max_deg)
        if key in seen:
            continue
        seen.add(key)
        rs = poly_roots(p)
        worst_residual = max(worst_residual, rs.max_residual)
        if rs.max_modulus > k_const * max_deg + 1e-6:
            bad += 1
    if include_large:
        for g in (complete_graph(8), complete_bipartite(5, 5)):
            p = family_poly(g, FamilyKind.COADJOINT)
            rs = poly_roots(p)
            worst_residual = max(worst_residual, rs.max_residual)
            if rs.max_modulus > k_const * max(g.degrees()) + 1e-6:
                bad += 1
    results.append(
        _result(
            f"root-modulus bound (n <= {max_n}{', K_8, K_5,5' if include_large else ''})",
            bad == 0,
        )
    )
    results.append(
        _result("root residuals < 1e-8", worst_residual < RESIDUAL_TOL, f"worst {worst_residual:.2e}")
    )
    return results


def check_egf(max_n=8, f_order=12):
    """EGF reconstruction of the complete-graph polynomials."""
    results = []
    try:
        build_F(f_order)
        results.append(_result(f"F integral form agrees with log form (order {f_order})", True))
    except Exception as exc:  # ConsistencyError means a real failure
        results.append(_result(f"F integral form agrees with log form (order {f_order})", False, str(exc)))
    polys = egf_reconstruct(max_n)
    bad = sum(
        1
        for n in range(max_n + 1)
        if polys[n] != reflect_negate(family_poly(complete_graph(n), FamilyKind.COADJOINT))
    )
    results.append(
        _result(f"n! [z^n] exp(xF) equals (-1)^n P(K_n, -x) (n <= {max_n})", bad == 0)
    )
    return results


SUITES = {
    "recursion": lambda max_n: check_recursion(max_n),
    "exp-type": lambda max_n: check_exp_type(max_n),
    "tutte": lambda max_n: check_tutte(max_n),
    "merino": lambda max_n: check_merino(),
    "eulerian": lambda max_n: check_eulerian(max_n),
    "sokal": lambda max_n: check_sokal(max_n),
    "egf": lambda max_n: check_egf(),
}


def run_suites(names, max_n=5):
    results = []
    for name in names:
        results.extend(SUITES[name](max_n))
    return results
