"""A reduced property sweep with a per-order tally.

The full acceptance sweep (every connected graph on up to 6 vertices plus
1000 random graphs) is `metdom verify`; this one is small enough to read.
"""

from collections import Counter, defaultdict

from metdom.sweep import verify

equality = Counter()
slack = defaultdict(Counter)


def tally(i, check):
    if check.verdict != "StrictInequality":
        equality[check.verdict] += 1
    slack[check.n][check.n - check.gamma - check.beta] += 1


result = verify(count=200, min_n=7, max_n=12, seed=1, exhaustive_upto=5, on_graph=tally)
print(f"graphs: {result.graphs} ({result.exhaustive} exhaustive, {result.random} random)")
print("violations:", result.violations)
print("equality cases by class:", dict(equality))
print("\nslack n - gamma - beta by order:")
for n in sorted(slack):
    print(f"  n={n:>2}: " + ", ".join(f"{s}:{c}" for s, c in sorted(slack[n].items())))
