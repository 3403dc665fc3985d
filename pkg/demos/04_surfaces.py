"""
Surfaces glued from polygons
============================

Gluing labeled polygons side to side yields surfaces that are disjoint
unions of connected ones.  When the perimeter is odd, only an even number of
polygons can be glued, so the weights live on a stride of 2.
"""

# %%
from antiseq import d_coefficients, exact_probability, gargantuan_probe, get_model, leading_term

tri = get_model("triangulations")
print("stride:", tri.stride)
print("-d_{2k,1}:", [str(-d) for d in d_coefficients(tri, 1, 4).d[1:]])

# %%
# Growth check.  A pass is evidence from a finite window, not a proof.
for model in (get_model("qss"), tri, get_model("gem", D=3), get_model("constant_test")):
    print(f"{model.id:<15} {gargantuan_probe(model, 24).verdict}")

# %%
# Disconnection rates
# -------------------
# Square-tiled surfaces fall apart into two pieces with probability close to
# ``1/(4n)``.  The first correction is of relative size ``1/n``, which is
# visible at small sizes.
qss = get_model("qss")
for n in (10, 20, 40, 80):
    print(n, f"{float(exact_probability(qss, 2, n) * 4 * n):.4f}")

# %%
# Closed forms of the dominant term.  Sizes are raw: for stride-2 families
# the argument counts polygons or simplices.
for model, m, n in ((qss, 2, 100), (get_model("p_angulations", P=4), 2, 50), (get_model("gem", D=3), 2, 20)):
    lt = leading_term(model, m, n)
    print(f"{model.id:<14} n={n}  exact term {float(lt.value):.5f}  form {lt.form_value}")
