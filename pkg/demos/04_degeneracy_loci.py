# %% [markdown]
# Orbit closures as degeneracy loci
#
# Each orbit closure is cut out by rank conditions on the form restricted to
# pieces of the flag. We build a representative flag, check its Gram matrix,
# and rewrite the class in Chern classes of the tautological quotients.

# %%
import numpy as np

from korbits.class_engine import compute_classes
from korbits.combinatorics import Family, Permutation, SymmetricPairConfig, rank_table
from korbits.degeneracy import (gram_matrix, rank_conditions, rectangle_ranks,
                                representative_flag, to_chern_formula)

cfg = SymmetricPairConfig(Family.O_ODD, 2)
b = Permutation.parse("(2,4)", 5)
flag = representative_flag(b, cfg)
print("flag:", flag)
g = gram_matrix(flag, cfg)
print(g)
print("ranks match:", np.array_equal(rectangle_ranks(g), rank_table(b)))

# %%
for i, j, r in rank_conditions(b, cfg):
    print(f"rank(F_{i} x F_{j}) <= {r}")

# %%
_, table = compute_classes(cfg)
p = table.lookup("(2,4)")
print("class:", p)
print("chern:", to_chern_formula(p, cfg).to_text())

# %% [markdown]
# In the split case the Euler class e shows up.

# %%
so = SymmetricPairConfig(Family.SO_EVEN, 2)
_, t = compute_classes(so)
print(to_chern_formula(t.lookup("-(1,3)(2,4)"), so).to_text())
