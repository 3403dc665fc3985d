"""
Connectivity of random graphs, term by term
===========================================

A labeled graph on ``n`` vertices is a set of connected graphs, so the
probability that a uniform graph is connected has an asymptotic expansion
whose coefficients are total weights of a derived virtual species.
"""

# %%
# The coefficients
# ----------------
# ``d_coefficients`` returns the raw values ``d_k``.  For ``m = 1`` the
# expansion reads ``1 - sum_k c_k binom(n, k) a_{n-k}/a_n`` with
# ``c_k = -d_k``.

from fractions import Fraction

from antiseq import d_coefficients, expansion_terms, get_model

graphs = get_model("simple_graphs")
table = d_coefficients(graphs, 1, 6)
print("d_k:", [str(d) for d in table.d])
print("c_k:", [str(-d) for d in table.d[1:]])

# %%
# The ``c_k`` are counts of irreducible tournaments: 1, 0, 2, 24, 544, ...
# So the second term vanishes, and at ``n = 10`` the first-order partial sum
# is ``1 - 10/2^9``.

ev = expansion_terms(graphs, 1, 10, 4)
for k, (t, s) in enumerate(zip(ev.terms, ev.partial_sums)):
    print(f"k={k}  term={float(t):+.3e}  partial={float(s):.12f}")
print("exact      ", float(ev.exact_probability))

# %%
# Sparser graphs
# --------------
# Each edge present with probability ``p`` means weight ``rho = p/(1-p)``
# per edge.  At ``p = 1/4`` the coefficients become rationals.

p = Fraction(1, 4)
quarter = expansion_terms(get_model("er"), 1, 20, 4, rho=p / (1 - p))
print("coefficients at p=1/4:", [str(d) for d in quarter.coefficients])
print("residual after each order:", [f"{float(r):.2e}" for r in quarter.residuals])
