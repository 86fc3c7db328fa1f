# %% [markdown]
# Walking up the weak order
#
# Starting from the closed orbit, each simple reflection either leaves the
# orbit alone or moves it one step toward the dense orbit. Black edges carry
# degree 1, blue edges degree 2. The class of the target is the divided
# difference of the source class divided by that degree.

# %%
from korbits.class_engine import compute_classes
from korbits.combinatorics import Family, SymmetricPairConfig
from korbits.polyring import divided_difference

cfg = SymmetricPairConfig(Family.O_ODD, 1)
graph, table = compute_classes(cfg)
for e in graph.edges:
    print(f"{e.source.label():8s} --s{e.root}/{e.degree} ({e.color})--> {e.target.label()}")

# %%
# Replaying every edge by hand reproduces the table.
for e in graph.edges:
    assert divided_difference(table[e.source], e.root) / e.degree == table[e.target]
print(table.to_text())

# %% [markdown]
# Larger graphs get big fast; DOT output can be piped into graphviz.

# %%
for n in (1, 2, 3):
    g, _ = compute_classes(SymmetricPairConfig(Family.O_ODD, n))
    print(f"n={n}: {len(g.nodes)} orbits, {len(g.edges)} edges")
print(compute_classes(SymmetricPairConfig(Family.SP, 2))[0].to_dot())
