# %% [markdown]
# Closed orbits and their restrictions
#
# Every family has one closed orbit (two for the split even case). Its class is
# given by a product formula. Here we restrict that class to each torus fixed
# point and watch it vanish away from the orbit.

# %%
from korbits.closed_orbits import closed_orbit_classes
from korbits.combinatorics import Family, SymmetricPairConfig
from korbits.localization import verify_closed_orbit_class

cfg = SymmetricPairConfig(Family.O_ODD, 1)
for datum in closed_orbit_classes(cfg):
    print(datum.parameter.label(), "->", datum.polynomial)

# %% [markdown]
# The oracle restricts the class at every permutation of the ambient space and
# compares against the product of tangent weights at fixed points on the orbit.

# %%
for n in (1, 2, 3):
    for fam in Family:
        cfg = SymmetricPairConfig(fam, n)
        for datum in closed_orbit_classes(cfg):
            rep = verify_closed_orbit_class(datum.polynomial, cfg, datum.parameter.component)
            print(f"{fam.value:8s} n={n} {datum.parameter.label():22s} "
                  f"{len(rep):5d} restrictions  {'ok' if rep.passed else 'FAILED'}")
