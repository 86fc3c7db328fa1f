"""Polynomial representatives of the closed-orbit classes."""

from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import Family, Permutation, SymmetricPairConfig, weyl_k_fixed_points
from .polyring import PolyRing, Polynomial
from .weak_order import OrbitParameter, closed_parameters

__all__ = ["ClosedOrbitDatum", "closed_orbit_classes", "alternate_odd_orthogonal_class"]


@dataclass(frozen=True)
class ClosedOrbitDatum:
    parameter: OrbitParameter
    polynomial: Polynomial
    fixed_points: tuple[Permutation, ...]

    @property
    def class_(self) -> Polynomial:
        return self.polynomial


def _pair_product(ring: PolyRing, n: int, N: int) -> Polynomial:
    # prod_{i<j<=n} (x_i + x_j)(x_i + x_{N+1-j})
    x = ring.x
    out = ring.one
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out = out * (x(i) + x(j)) * (x(i) + x(N + 1 - j))
    return out


def _odd_orthogonal(ring: PolyRing, n: int) -> Polynomial:
    x, N = ring.x, 2 * n + 1
    out = ring.const((-2) ** n)
    for i in range(1, n + 1):
        out = out * (x(i) + x(n + 1)) * (x(n + 1) + x(N + 1 - i))
    return out * _pair_product(ring, n, N)


def alternate_odd_orthogonal_class(n: int) -> Polynomial:
    """Second representative of the odd orthogonal closed orbit, using y's.

    ``(-2)^n prod (x_{n+1} + y_i)(x_{n+1} - y_i) prod_{i<j} (x_i+x_j)(x_i+x_{2n+2-j})``.
    Differs from the x-only class by an element that restricts to zero at
    every fixed point.
    """
    N = 2 * n + 1
    ring = PolyRing(N, n)
    x, y = ring.x, ring.y
    out = ring.const((-2) ** n)
    for i in range(1, n + 1):
        out = out * (x(n + 1) + y(i)) * (x(n + 1) - y(i))
    return out * _pair_product(ring, n, N)


def _even_orthogonal(ring: PolyRing, n: int, sign: int) -> Polynomial:
    xs, ys = ring.one, ring.one
    for i in range(1, n + 1):
        xs = xs * ring.x(i)
        ys = ys * ring.y(i)
    return (xs + ys * sign) * _pair_product(ring, n, 2 * n) * 2 ** (n - 1)


def closed_orbit_classes(config: SymmetricPairConfig) -> list[ClosedOrbitDatum]:
    n, N = config.rank, config.ambient
    ring = PolyRing(N, n)
    fam = config.family
    if fam is Family.O_ODD:
        polys = [_odd_orthogonal(ring, n)]
    elif fam is Family.SO_EVEN:
        polys = [_even_orthogonal(ring, n, 1), _even_orthogonal(ring, n, -1)]
    elif fam is Family.O_EVEN:
        polys = [_even_orthogonal(ring, n, 1) + _even_orthogonal(ring, n, -1)]
    else:
        polys = [_pair_product(ring, n, N)]
    out = []
    for param, poly in zip(closed_parameters(config), polys):
        pts = weyl_k_fixed_points(config, param.component)
        out.append(ClosedOrbitDatum(param, poly, tuple(pts)))
    return out
