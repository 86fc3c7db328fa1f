"""
Restriction to torus-fixed points and the localization checks built on it.

The fixed points of the flag variety are the coordinate flags, indexed by
``w`` in ``S_N``.  A class ``f(x, y)`` restricts at ``w`` to
``f(rho(X_{w(1)}), ..., rho(X_{w(N)}), Y)`` where ``rho`` sends each ``X_i``
to ``±Y_k`` or ``0``.  For the closed orbits the restriction at one of their
own fixed points is the product of the normal weights there; at every other
fixed point it is zero.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

import numpy as np

from .combinatorics import (Family, Permutation, Sign, SymmetricPairConfig,
                            weyl_k_fixed_points)
from .degeneracy import (FlagBasis, check_orbit_parameter, gram_matrix,
                         rectangle_ranks)
from .combinatorics import rank_table
from .polyring import LinearWeight, PolyRing, Polynomial

__all__ = [
    "RestrictionMap", "RootSystemK", "VerificationRow", "VerificationReport",
    "restriction_map", "k_roots", "normal_weights", "normal_weight_product",
    "fixed_point_in_orbit_closure", "closure_fixed_points",
    "FixedPointRestrictor", "verify_closed_orbit_class",
    "verify_vanishing_outside_closure", "all_permutations",
]


@dataclass(frozen=True)
class RestrictionMap:
    """``images[i-1] = rho(X_i)``."""

    images: tuple[LinearWeight, ...]

    def __call__(self, i: int) -> LinearWeight:
        return self.images[i - 1]


@lru_cache(maxsize=None)
def restriction_map(config: SymmetricPairConfig) -> RestrictionMap:
    n, N = config.rank, config.ambient
    imgs = [LinearWeight.zero(n)] * N
    for i in range(1, n + 1):
        imgs[i - 1] = LinearWeight.basis(i, n)
        imgs[N - i] = LinearWeight.basis(i, n, -1)
    return RestrictionMap(tuple(imgs))


@dataclass(frozen=True)
class RootSystemK:
    roots: tuple[LinearWeight, ...]

    def __contains__(self, w: LinearWeight) -> bool:
        return w in self.roots


@lru_cache(maxsize=None)
def k_roots(config: SymmetricPairConfig) -> RootSystemK:
    """Roots of ``K`` on the small torus.

    Odd orthogonal: ``±Y_i, ±(Y_i ± Y_j)``; even orthogonal: ``±(Y_i ± Y_j)``;
    symplectic: ``±(Y_i ± Y_j), ±2Y_i``.
    """
    n = config.rank
    Y = [LinearWeight.basis(i, n) for i in range(1, n + 1)]
    roots: list[LinearWeight] = []
    for i, j in itertools.combinations(range(n), 2):
        for s in (1, -1):
            roots += [Y[i] + Y[j] * s, -(Y[i] + Y[j] * s)]
    if config.family is Family.O_ODD:
        roots += [y for i in range(n) for y in (Y[i], -Y[i])]
    elif config.family is Family.SP:
        roots += [y for i in range(n) for y in (Y[i] * 2, Y[i] * -2)]
    return RootSystemK(tuple(roots))


@lru_cache(maxsize=None)
def _fixed_point_set(config: SymmetricPairConfig, component: Optional[Sign]) -> frozenset:
    if config.family is not Family.SO_EVEN:
        component = None
    return frozenset(weyl_k_fixed_points(config, component))


def normal_weights(w: Permutation, config: SymmetricPairConfig,
                   component: Optional[Sign] = None) -> list[LinearWeight]:
    """Weights of the small torus on the normal space to the closed orbit at ``w``.

    Restrict every ``X_{w(i)} - X_{w(j)}`` (``i < j``) and then, for each root of
    ``K`` present, remove one occurrence.  For SO_EVEN, ``component`` picks
    the closed orbit; ``None`` means their union.
    """
    if w not in _fixed_point_set(config, component):
        raise ValueError(f"{w} is not a fixed point of the closed orbit "
                         f"({config}, component={component})")
    rho = restriction_map(config)
    N = config.ambient
    multiset = Counter(rho(w(i)) - rho(w(j))
                       for i in range(1, N + 1) for j in range(i + 1, N + 1))
    for root in set(k_roots(config).roots):
        if multiset[root] > 0:
            multiset[root] -= 1
    out = sorted(multiset.elements(), key=lambda v: v.coeffs, reverse=True)
    if any(v.is_zero() for v in out):
        raise AssertionError(f"zero normal weight at {w} for {config}")
    return out


def normal_weight_product(w: Permutation, config: SymmetricPairConfig,
                          component: Optional[Sign] = None) -> Polynomial:
    ring = PolyRing(config.ambient, config.rank)
    out = ring.one
    for v in normal_weights(w, config, component):
        out = out * v.as_polynomial(ring)
    return out


def fixed_point_in_orbit_closure(w: Permutation, b: Permutation,
                                 config: SymmetricPairConfig) -> bool:
    """Does the coordinate flag of ``w`` satisfy ``rank <= r_b(i,j)`` everywhere?"""
    check_orbit_parameter(b, config)
    ranks = rectangle_ranks(gram_matrix(FlagBasis.coordinate(w), config))
    return bool(np.all(ranks <= rank_table(b)))


def all_permutations(N: int) -> list[Permutation]:
    return [Permutation(p) for p in itertools.permutations(range(1, N + 1))]


@lru_cache(maxsize=None)
def _coordinate_flag_ranks(config: SymmetricPairConfig):
    return tuple((w, rectangle_ranks(gram_matrix(FlagBasis.coordinate(w), config)))
                 for w in all_permutations(config.ambient))


def closure_fixed_points(b: Permutation, config: SymmetricPairConfig) -> list[Permutation]:
    """All ``w`` whose coordinate flag lies in the closure of the orbit of ``b``."""
    check_orbit_parameter(b, config)
    rb = rank_table(b)
    return [w for w, ranks in _coordinate_flag_ranks(config) if np.all(ranks <= rb)]


class FixedPointRestrictor:
    """Vectorised restriction of one polynomial at many fixed points.

    Every ``rho(X_k)`` is ``0`` or ``±Y_m``, so restricting a monomial only
    relabels exponents and possibly flips the sign; terms are then merged by
    sorting integer keys.  Agrees with
    :func:`korbits.polyring.restrict_at_fixed_point` term for term.
    """

    def __init__(self, p: Polynomial, config: SymmetricPairConfig):
        ring = p.ring
        if ring.nx != config.ambient or ring.ny != config.rank:
            raise ValueError(f"{ring} does not match {config}")
        self.p, self.config, self.ring = p, config, ring
        terms = p.terms()
        nx = ring.nx
        if terms:
            E = np.array([e for e, _ in terms], dtype=np.int64)
        else:
            E = np.zeros((0, ring.nvars), dtype=np.int64)
        self._Ex, self._Ey = E[:, :nx], E[:, nx:]
        coeffs = [c for _, c in terms]
        if all(isinstance(c, int) for c in coeffs) and sum(abs(c) for c in coeffs) < 2 ** 62:
            self._coeffs = np.array(coeffs, dtype=np.int64)
        else:
            self._coeffs = np.array(coeffs, dtype=object)
        self._radix = int(p.degree()) + 1 if terms else 1
        rho = restriction_map(config)
        # rho(X_k) as (target y column or -1, sign)
        self._rho = [(-1, 1) if v.is_zero() else
                     next((m, c) for m, c in enumerate(v.coeffs) if c)
                     for v in rho.images]

    def restrict(self, w: Permutation) -> Polynomial:
        ring = self.ring
        nx, ny = ring.nx, ring.ny
        if not len(self._coeffs):
            return ring.zero
        target = np.empty(nx, dtype=np.int64)
        neg = np.zeros(nx, dtype=bool)
        for i in range(nx):
            m, s = self._rho[w.word[i] - 1]
            target[i] = m
            neg[i] = s < 0
        dead = target < 0
        Ex = self._Ex
        alive = ~np.any(Ex[:, dead] > 0, axis=1) if dead.any() else np.ones(len(Ex), bool)
        if not alive.any():
            return ring.zero
        Ex, Ey, coeffs = Ex[alive], self._Ey[alive], self._coeffs[alive]
        M = np.zeros((nx, ny), dtype=np.int64)
        live = ~dead
        M[np.nonzero(live)[0], target[live]] = 1
        Y = Ey + Ex @ M
        parity = (Ex[:, neg].sum(axis=1) & 1) if neg.any() else np.zeros(len(Ex), np.int64)
        signed = np.where(parity == 1, -coeffs, coeffs)
        if ny:
            keys = Y @ (self._radix ** np.arange(ny - 1, -1, -1, dtype=np.int64))
        else:
            keys = np.zeros(len(Y), dtype=np.int64)
        order = np.argsort(keys, kind="stable")
        keys, Y, signed = keys[order], Y[order], signed[order]
        starts = np.flatnonzero(np.r_[True, keys[1:] != keys[:-1]])
        sums = np.add.reduceat(signed, starts)
        zero_x = (0,) * nx
        out = {}
        for s, c in zip(starts, sums):
            c = int(c) if not hasattr(c, "denominator") or c.denominator == 1 else c
            if c:
                out[zero_x + tuple(int(a) for a in Y[s])] = c
        return Polynomial(ring, out)


@dataclass
class VerificationRow:
    w: Permutation
    expected: Polynomial
    actual: Polynomial
    passed: bool

    def to_json(self) -> dict:
        return {"w": self.w.one_line(), "expected": str(self.expected),
                "actual": str(self.actual), "pass": self.passed}


@dataclass
class VerificationReport:
    """Per-fixed-point comparison rows, ordered by ``w``."""

    name: str
    rows: list[VerificationRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    @property
    def failures(self) -> list[VerificationRow]:
        return [r for r in self.rows if not r.passed]

    def __len__(self):
        return len(self.rows)

    def summary(self) -> str:
        nfail = len(self.failures)
        status = "PASS" if not nfail else "FAIL"
        return f"{status} {self.name}: {len(self.rows) - nfail}/{len(self.rows)} fixed points agree"

    def to_json(self) -> dict:
        return {"name": self.name, "pass": self.passed,
                "rows": [r.to_json() for r in self.rows]}


def verify_closed_orbit_class(p: Polynomial, config: SymmetricPairConfig,
                              component: Optional[Sign] = None,
                              name: str | None = None) -> VerificationReport:
    """Compare restrictions of ``p`` with normal-weight products at every ``w``."""
    fixed = _fixed_point_set(config, component)
    fast = FixedPointRestrictor(p, config)
    zero = p.ring.zero
    report = VerificationReport(name or f"closed orbit {config} {component or ''}".strip())
    for w in all_permutations(config.ambient):
        expected = normal_weight_product(w, config, component) if w in fixed else zero
        actual = fast.restrict(w)
        report.rows.append(VerificationRow(w, expected, actual, actual == expected))
    return report


def verify_vanishing_outside_closure(p: Polynomial, b: Permutation,
                                     config: SymmetricPairConfig,
                                     name: str | None = None) -> VerificationReport:
    """``p`` must restrict to zero at every fixed point outside the closure of ``b``.

    For SO_EVEN, ``b`` is the underlying involution, so only the closure of
    the full O(2n)-orbit is used.
    """
    check_orbit_parameter(b, config)
    fast = FixedPointRestrictor(p, config)
    zero = p.ring.zero
    report = VerificationReport(name or f"vanishing {config} {b.cycle_string()}")
    rb = rank_table(b)
    for w, ranks in _coordinate_flag_ranks(config):
        if np.all(ranks <= rb):
            continue
        actual = fast.restrict(w)
        report.rows.append(VerificationRow(w, zero, actual, actual.is_zero()))
    return report
