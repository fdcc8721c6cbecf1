"""Subdivided wheels: n - gamma beats n - diam as an upper bound on beta.

Each spoke of the wheel is subdivided twice, so the graph has 3k + 1
vertices but a small diameter. The domination number grows like k + 1,
which keeps n - gamma well below n - diam.
"""

from metdom import generators as gen
from metdom.bounds import bound_diameter, bound_domination
from metdom.domination import domination_number
from metdom.graph import diameter
from metdom.resolve import metric_dimension

print(f"{'k':>3} {'n':>4} {'diam':>5} {'gamma':>6} {'n-diam':>7} {'n-gamma':>8} {'beta':>5}")
for k in range(3, 9):
    G = gen.subdivided_wheel(k)
    gamma = domination_number(G).gamma
    beta = metric_dimension(G).beta if G.n <= 19 else None
    print(f"{k:>3} {G.n:>4} {diameter(G):>5} {gamma:>6} "
          f"{bound_diameter(G).value:>7} {bound_domination(G, gamma).value:>8} "
          f"{beta if beta is not None else '-':>5}")

# k = 6 is the worked case: 19 vertices, gamma = 7, so n - gamma = 12
G = gen.subdivided_wheel(6)
res = domination_number(G)
print("\nminimum dominating set of the k=6 wheel:", res.dominating_set)
