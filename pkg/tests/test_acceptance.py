"""Acceptance suite. Each criterion prints one PASS/FAIL line (run with ``-s``).

The three sweep criteria share a single sweep: every connected labeled graph
on at most 6 vertices plus 1000 seeded random connected graphs, n in [7, 18].
"""

import math
import time

import pytest

from metdom import generators as gen
from metdom.bounds import bound_diameter, bound_domination, corollary_bounds
from metdom.domination import domination_number
from metdom.graph import Graph, degree_sequence, diameter, girth, laplacian_max_eigenvalue
from metdom.resolve import metric_dimension
from metdom.sweep import verify

import oracles

SWEEP_SECONDS = 300


def report(number, ok, detail):
    print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
    assert ok, detail


@pytest.fixture(scope="module")
def sweep():
    start = time.perf_counter()
    result = verify(count=1000, min_n=7, max_n=18, seed=0, exhaustive_upto=6)
    return result, time.perf_counter() - start


def test_criterion_1_domination_bound(sweep):
    result, elapsed = sweep
    bad = result.violations["domination_bound"]
    ok = bad == 0 and result.random == 1000 and elapsed < SWEEP_SECONDS
    report(1, ok, f"beta <= n - gamma on {result.graphs} graphs ({result.exhaustive} exhaustive, "
                  f"{result.random} random), {bad} violations, {elapsed:.1f}s")


def test_criterion_2_equality(sweep):
    result, _ = sweep
    bad = result.violations["equality"]
    report(2, bad == 0, f"equality iff complete or complete bipartite: {result.equality_cases} "
                        f"equality cases, {bad} mismatches")


def test_criterion_3_construction(sweep):
    result, _ = sweep
    bad = result.violations["construction"]
    detail = [f.violations["construction"] for f in result.failures if "construction" in f.violations]
    report(3, bad == 0, f"resolving set from dominating set: {bad} graphs with problems {detail[:3]}")


def test_criterion_4_subdivided_wheel():
    G = gen.subdivided_wheel(6)
    gamma = domination_number(G).gamma
    d = diameter(G)
    by_dom = bound_domination(G, gamma).value
    by_diam = bound_diameter(G).value
    ok = G.n == 19 and gamma == 7 and d <= 6 and by_dom == 12 and by_diam >= 13 and by_dom < by_diam
    report(4, ok, f"subdivided wheel k=6: n={G.n}, gamma={gamma}, diam={d}, "
                  f"n-gamma={by_dom} < n-diam={by_diam}")


def test_criterion_5_kneser():
    start = time.perf_counter()
    G = gen.kneser(7, 3)
    degs = set(degree_sequence(G))
    g, d = girth(G), diameter(G)
    mu = laplacian_max_eigenvalue(G)
    entries = {e.name: e for e in corollary_bounds(G)}
    values = [entries[k].value for k in ("min_degree", "twice_min_degree", "max_degree_cover",
                                         "degree_sequence", "laplacian")]
    real = entries["laplacian"].real_value
    elapsed = time.perf_counter() - start
    ok = (G.n == 35 and degs == {4} and g == 6 and d == 3 and abs(mu - 7.0) <= 1e-6
          and values == [31, 29, 28, 28, 30] and abs(real - 30.0) <= 1e-6 and elapsed < 30)
    report(5, ok, f"KG(7,3): n={G.n}, degrees={sorted(degs)}, girth={g}, diam={d}, mu={mu:.9f}, "
                  f"bounds={values}, real laplacian bound={real:.9f}, {elapsed:.2f}s")


def named_cases():
    P = gen.petersen()
    yield "Petersen beta", metric_dimension(P).beta, 3, P, "beta"
    yield "Petersen gamma", domination_number(P).gamma, 3, P, "gamma"
    for n in range(3, 13):
        yield f"beta(P_{n})", metric_dimension(gen.path(n)).beta, 1, gen.path(n), "beta"
        yield f"beta(C_{n})", metric_dimension(gen.cycle(n)).beta, 2, gen.cycle(n), "beta"
    for n in range(3, 16):
        yield f"gamma(P_{n})", domination_number(gen.path(n)).gamma, math.ceil(n / 3), gen.path(n), "gamma"
        yield f"gamma(C_{n})", domination_number(gen.cycle(n)).gamma, math.ceil(n / 3), gen.cycle(n), "gamma"
    for n in range(1, 13):
        K = gen.complete(n)
        yield f"beta(K_{n})", metric_dimension(K).beta, n - 1, K, "beta"
    for s in range(2, 6):
        for t in range(2, 6):
            K = gen.complete_bipartite(s, t)
            yield f"beta(K_{s},{t})", metric_dimension(K).beta, s + t - 2, K, "beta"
            yield f"gamma(K_{s},{t})", domination_number(K).gamma, 2, K, "gamma"


def test_criterion_6_named_values():
    wrong, checked = [], 0
    for name, got, expected, G, kind in named_cases():
        if got != expected:
            wrong.append(f"{name}={got}, expected {expected}")
        if G.n <= 8:
            brute = (oracles.brute_metric_dimension if kind == "beta" else oracles.brute_domination_number)
            if brute(G)[0] != got:
                wrong.append(f"{name}={got} disagrees with enumeration oracle")
            checked += 1
    report(6, not wrong, f"named exact values, {checked} cross-checked by enumeration; problems: {wrong}")


def test_criterion_7_bound_soundness(sweep):
    result, _ = sweep
    bad = result.violations["bounds"]
    report(7, bad == 0, f"every applicable bound sound on {result.graphs} graphs, {bad} violations")


def test_criterion_8_spectral():
    worst, count = 0.0, 0
    for n in range(2, 7):
        for edges in oracles.all_graphs(n):
            G = Graph(n, edges)
            worst = max(worst, abs(laplacian_max_eigenvalue(G) - oracles.charpoly_max_eigenvalue(G)))
            count += 1
    named = [(gen.complete(n), n) for n in range(2, 13)]
    named += [(gen.complete_bipartite(s, t), s + t) for s in range(2, 7) for t in range(2, 7)]
    named_err = max(abs(laplacian_max_eigenvalue(G) - exact) for G, exact in named)
    ok = worst <= 1e-8 and named_err <= 1e-8
    report(8, ok, f"mu_max vs characteristic polynomial on {count} graphs, max error {worst:.2e}; "
                  f"K_n and K_s,t max error {named_err:.2e}")
