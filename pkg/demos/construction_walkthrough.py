"""Turning a minimum dominating set into a resolving set of size n - gamma.

Two normalization passes run first: false twins inside the set are swapped
out, then every vertex without a private neighbor is swapped for an outside
neighbor. The complement of the result resolves the graph.
"""

from metdom import generators as gen
from metdom.constructive import classify_equality, resolving_from_dominating
from metdom.domination import private_neighbors
from metdom.graph import Graph
from metdom.resolve import is_resolving_set, metric_representation


def walk(name, G):
    built = resolving_from_dominating(G)
    print(f"== {name}: n={G.n}")
    print("   start:", built.trace.initial_set)
    for step in built.trace.steps:
        print(f"   swap {step.removed} -> {step.inserted} ({step.reason})")
    S = built.dominating_set
    print("   dominating set:", S)
    print("   private neighbors:", {u: private_neighbors(G, S, u) for u in S})
    W = built.resolving_set
    print("   resolving set:", W, "resolves:", bool(is_resolving_set(G, W)))
    print("   classification:", classify_equality(G))


# A small tree where fixing one vertex leaves another without a private neighbor
walk("tree", Graph(6, [(0, 3), (0, 5), (1, 4), (2, 3), (3, 4)]))
walk("C_4", gen.cycle(4))
walk("K_2,3", gen.complete_bipartite(2, 3))
walk("Petersen", gen.petersen())

G = gen.cycle(6)
W = resolving_from_dominating(G).resolving_set
print("\nC_6 representations w.r.t.", W)
for v in range(G.n):
    print(f"   {v}: {metric_representation(G, v, W)}")
