# %% [markdown]
# Splitting orbits for the special orthogonal group
#
# With SO(4) in place of O(4), fixed-point-free parameters split into two
# orbits, labelled + and -. Their classes involve the Euler class through the
# y variables, and the two halves add up to the O(4) class.

# %%
from korbits.class_engine import compute_classes
from korbits.combinatorics import Family, SymmetricPairConfig

so = SymmetricPairConfig(Family.SO_EVEN, 2)
o = SymmetricPairConfig(Family.O_EVEN, 2)
_, t_so = compute_classes(so)
_, t_o = compute_classes(o)
print(t_so.to_text())

# %%
for label in ("(1,4)(2,3)", "(1,3)(2,4)", "(1,2)(3,4)"):
    total = t_so.lookup("+" + label) + t_so.lookup("-" + label)
    print(label, total == t_o.lookup(label), total)

# %% [markdown]
# The sign of a split edge is decided by restricting the divided difference at
# one representative fixed point of each candidate component.

# %%
from korbits.closed_orbits import closed_orbit_classes
from korbits.weak_order import component_representative, resolve_split_edge

for datum in closed_orbit_classes(so):
    b = datum.parameter
    print(b.label(), "reps:",
          component_representative(b.involution, "+", so).one_line(),
          component_representative(b.involution, "-", so).one_line(),
          "s1 goes to", resolve_split_edge(b, 1, so, datum.polynomial))
