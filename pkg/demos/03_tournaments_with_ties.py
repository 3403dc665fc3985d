"""
Tournaments with ties
=====================

Allow each pair of players either one arc or a tie (both arcs), with weight
``rho - 1`` per tie.  The total weight on ``n`` vertices is
``(rho+1)^C(n,2)``, the same as for graphs, yet the natural decomposition is
a sequence of strongly connected blocks.
"""

# %%
from antiseq import d_coefficients, enumerate_tournament_components, get_model, it_weights

for k in range(1, 5):
    hist = enumerate_tournament_components(k)
    print(k, {c: str(w) for c, w in hist.by_components.items()})

# %%
# At ``rho = 1`` ties weigh nothing and the single-block bucket counts
# irreducible tournaments.
print([str(enumerate_tournament_components(k).by_components[1](1)) for k in range(1, 5)])

# %%
# Blocks in a fixed order can be assembled from the irreducible bucket alone.
# Both routes give the same weights.
for k in range(5):
    for j in range(k + 1):
        assert it_weights(k, j, "direct") == it_weights(k, j, "convolution")

# %%
# The sequence decomposition gives its own coefficient table.
ties = get_model("tournaments_ties")
for m in range(1, 4):
    print(f"m={m}:", [str(q) for q in d_coefficients(ties, m, 4).d])
