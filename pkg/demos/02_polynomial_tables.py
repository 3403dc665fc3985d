"""
Coefficients as polynomials in the edge weight
==============================================

Keeping ``rho`` symbolic turns every coefficient ``d_{k,m}`` into a
polynomial.  The same tables come out of brute-force enumeration, which
never touches a generating series.
"""

# %%
from antiseq import d_coefficients, get_model, p_polynomial
from antiseq.algebra import Poly

er = get_model("er")
for m in range(1, 6):
    row = d_coefficients(er, m, 4).d
    print(f"m={m}: " + " | ".join(str(p) for p in row))

# %%
# Enumeration route: sum over all graphs on ``[k]``, weighting each by
# ``rho^edges`` and by a signed binomial in its number of components.

for k in range(5):
    assert all(p_polynomial(k, m) == d_coefficients(er, m, 4).d[k] for m in range(1, 6))
print("enumeration agrees with the series engine for k <= 4")

# %%
# Summed down a column the entries cancel, except at ``k = 0``.
cols = [sum((d_coefficients(er, m, 4).d[k] for m in range(1, 6)), Poly()) for k in range(5)]
print("column sums:", [str(c) for c in cols])
