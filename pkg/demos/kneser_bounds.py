"""Lower bounds on gamma, and the matching upper bounds on beta, for KG(7,3).

KG(7,3) is 4-regular on 35 vertices with girth 6. The Laplacian bound is
evaluated both in its integer (ceiling) form and its real form.
"""

from metdom import generators as gen
from metdom.bounds import corollary_bounds, gamma_lower_bounds
from metdom.errors import BudgetExceeded
from metdom.graph import degree_sequence, diameter, girth, laplacian_max_eigenvalue
from metdom.resolve import metric_dimension

G = gen.kneser(7, 3)
print(f"n={G.n} m={G.m} degrees={sorted(set(degree_sequence(G)))} "
      f"girth={girth(G)} diam={diameter(G)}")
print(f"largest Laplacian eigenvalue: {laplacian_max_eigenvalue(G):.12f}")

print(f"\n{'bound':<18} {'gamma >=':>9} {'beta <=':>8}  condition")
for lo, hi in zip(gamma_lower_bounds(G), corollary_bounds(G)):
    if not lo.applicable:
        print(f"{lo.name:<18} {'-':>9} {'-':>8}  {lo.condition} (not met)")
        continue
    real = f"  (real {hi.real_value:.6f})" if hi.real_value is not None else ""
    print(f"{lo.name:<18} {lo.value:>9} {hi.value:>8}  {lo.condition}{real}")

# Exact beta on 35 vertices is a real search; a node budget keeps it bounded.
try:
    print("\nbeta =", metric_dimension(G, budget=2_000_000).beta)
except BudgetExceeded as exc:
    print(f"\nbeta search stopped after {exc.examined} nodes; best known <= {exc.upper_bound}")
