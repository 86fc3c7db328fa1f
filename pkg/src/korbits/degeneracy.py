"""
Flags, Gram matrices, rank conditions, and the Chern-class rewriting of
equivariant classes.

A flag is given by an ordered basis ``v_1..v_N`` with ``F_i = span(v_1..v_i)``.
The rank of the form restricted to ``F_i x F_j`` is the rank of the upper-left
``i x j`` block of the Gram matrix in that basis.

The Chern-class translation is purely formal: ``x_i`` becomes
``c_1(F_i/F_{i-1})`` and the monomial ``y_1...y_n`` becomes an Euler class
``e``.  The sign of ``e`` is only defined up to a global choice; we keep the
sign carried by ``y_1...y_n``.  Whether the user's bundle data is generic
enough for the formula to compute the locus class is not checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .combinatorics import Family, Permutation, SymmetricPairConfig, rank_table
from .polyring import PolyRing, Polynomial

__all__ = [
    "FlagBasis", "ChernFormula", "YDisciplineError", "gram_form",
    "representative_flag", "gram_matrix", "exact_rank", "rectangle_ranks",
    "is_monomial_with_pattern", "verify_orbit_membership", "rank_conditions",
    "to_chern_formula", "check_orbit_parameter",
]


class YDisciplineError(ValueError):
    """A y-monomial other than ``y_1...y_n`` occurred in a class."""


@dataclass(frozen=True)
class FlagBasis:
    """Ordered basis of ``C^N``; row ``i`` is ``v_{i+1}``."""

    vectors: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        vecs = tuple(tuple(int(a) for a in v) for v in self.vectors)
        N = len(vecs)
        if any(len(v) != N for v in vecs):
            raise ValueError("a full flag needs N vectors of length N")
        supports = [tuple(k for k, a in enumerate(v) if a) for v in vecs]
        if all(len(s) == 1 for s in supports):
            independent = len(set(supports)) == N
        else:
            independent = exact_rank(np.array(vecs, dtype=object).reshape(N, N)) == N
        if not independent:
            raise ValueError("flag vectors are linearly dependent")
        object.__setattr__(self, "vectors", vecs)

    @classmethod
    def coordinate(cls, w: Permutation) -> FlagBasis:
        """The flag ``<e_{w(1)}, ..., e_{w(N)}>``."""
        N = w.N
        return cls(tuple(tuple(int(k == w(i)) for k in range(1, N + 1))
                         for i in range(1, N + 1)))

    @property
    def N(self) -> int:
        return len(self.vectors)

    def matrix(self) -> np.ndarray:
        return np.array(self.vectors, dtype=np.int64)

    def as_permutation(self) -> Permutation | None:
        """The permutation ``w`` if this is a coordinate flag, else ``None``."""
        word = []
        for v in self.vectors:
            nz = [k for k, a in enumerate(v, 1) if a]
            if len(nz) != 1:
                return None
            word.append(nz[0])
        return Permutation(tuple(word))

    def __str__(self):
        return "<" + ", ".join(_vector_str(v) for v in self.vectors) + ">"

    def to_latex(self) -> str:
        body = ",".join(_vector_str(v, latex=True) for v in self.vectors)
        return r"\left\langle " + body + r" \right\rangle"


def _vector_str(v: Sequence[int], latex: bool = False) -> str:
    out = ""
    for k, a in enumerate(v, 1):
        if not a:
            continue
        name = f"e_{{{k}}}" if latex else f"e{k}"
        mag = "" if abs(a) == 1 else str(abs(a))
        if not out:
            out = ("-" if a < 0 else "") + mag + name
        else:
            out += ("-" if a < 0 else "+") + mag + name
    return out or "0"


@lru_cache(maxsize=None)
def _gram_form(family: Family, N: int) -> np.ndarray:
    g = np.zeros((N, N), dtype=np.int64)
    for i in range(N):
        j = N - 1 - i
        if family is Family.SP:
            g[i, j] = 1 if i < N // 2 else -1
        else:
            g[i, j] = 1
    g.setflags(write=False)
    return g


def gram_form(config: SymmetricPairConfig) -> np.ndarray:
    """Matrix of the family's form on the standard basis.

    Orthogonal: ``<e_i, e_j> = δ_{i, N+1-j}``.  Symplectic: ``J_{n,n}``, so
    ``<e_i, e_{2n+1-i}>`` is ``+1`` for ``i <= n`` and ``-1`` for ``i > n``.
    """
    return _gram_form(config.family, config.ambient)


def gram_matrix(basis: FlagBasis, config: SymmetricPairConfig) -> np.ndarray:
    if basis.N != config.ambient:
        raise ValueError(f"flag in C^{basis.N} but {config} needs C^{config.ambient}")
    V = basis.matrix()
    return V @ gram_form(config) @ V.T


def exact_rank(mat) -> int:
    """Rank over Q by fraction-exact Gaussian elimination."""
    rows = [[Fraction(int(a)) for a in row] for row in np.asarray(mat, dtype=object)]
    if not rows or not rows[0]:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank]
        for r in range(rank + 1, len(rows)):
            f = rows[r][col] / p[col]
            if f:
                rows[r] = [a - f * b for a, b in zip(rows[r], p)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def rectangle_ranks(gram: np.ndarray) -> np.ndarray:
    """Ranks of all upper-left ``i x j`` blocks; entry ``[i-1, j-1]``.

    A monomial matrix has block rank equal to its count of nonzero entries
    in the block, so that case is a cumulative sum; anything else goes
    through :func:`exact_rank`.
    """
    g = np.asarray(gram)
    nz = g != 0
    if np.all(nz.sum(axis=0) == 1) and np.all(nz.sum(axis=1) == 1):
        return nz.astype(np.int64).cumsum(axis=0).cumsum(axis=1)
    R, C = g.shape
    out = np.zeros((R, C), dtype=np.int64)
    for i in range(1, R + 1):
        for j in range(1, C + 1):
            out[i - 1, j - 1] = exact_rank(g[:i, :j])
    return out


def is_monomial_with_pattern(gram: np.ndarray, b: Permutation) -> bool:
    """Each row ``i`` has exactly one nonzero entry, in column ``b(i)``."""
    g = np.asarray(gram)
    expected = np.zeros_like(g, dtype=bool)
    expected[np.arange(b.N), np.asarray(b.word) - 1] = True
    return bool(np.array_equal(g != 0, expected))


def check_orbit_parameter(b: Permutation, config: SymmetricPairConfig) -> None:
    if b.N != config.ambient:
        raise ValueError(f"{b} is not in S_{config.ambient}")
    if not b.is_involution():
        raise ValueError(f"{b.cycle_string()} is not an involution")
    if config.family is Family.SP and b.fixed_points():
        raise ValueError(f"{b.cycle_string()} has fixed points; symplectic orbits "
                         "are indexed by fixed-point-free involutions")


def representative_flag(b: Permutation, config: SymmetricPairConfig) -> FlagBasis:
    """A basis in which the form's Gram matrix is monomial with pattern ``b``.

    Orthogonal: each 2-cycle ``(i, b(i))`` with ``i < b(i)`` takes
    ``(e_k, e_{N+1-k})`` for the next unused ``k`` (never the middle index).
    For odd ``N`` the first fixed point takes the middle vector; the other
    fixed points are paired in increasing order and take
    ``e_k + e_{N+1-k}``, ``e_k - e_{N+1-k}``.

    Symplectic: the ``j``-th 2-cycle ``i < b(i)`` takes ``v_i = e_j`` and
    ``v_{b(i)} = e_{2n+1-j}``.

    >>> cfg = SymmetricPairConfig(Family.O_ODD, 2)
    >>> str(representative_flag(Permutation.parse("(2,4)", 5), cfg))
    '<e3, e1, e2+e4, e5, e2-e4>'
    """
    check_orbit_parameter(b, config)
    N, n = config.ambient, config.rank
    vecs: list[list[int] | None] = [None] * N

    def e(k):
        v = [0] * N
        v[k - 1] = 1
        return v

    k = 1
    for i in range(1, N + 1):
        if b(i) > i:
            vecs[i - 1] = e(k)
            vecs[b(i) - 1] = e(N + 1 - k)
            k += 1
    fixed = b.fixed_points()
    if config.family is Family.O_ODD:
        if len(fixed) % 2 != 1:
            raise AssertionError("an involution of S_{2n+1} has an odd number of fixed points")
        vecs[fixed[0] - 1] = e(n + 1)
        fixed = fixed[1:]
    elif len(fixed) % 2:
        raise AssertionError("an involution of S_{2n} has an even number of fixed points")
    for i1, i2 in zip(fixed[::2], fixed[1::2]):
        lo, hi = e(k), e(N + 1 - k)
        vecs[i1 - 1] = [a + c for a, c in zip(lo, hi)]
        vecs[i2 - 1] = [a - c for a, c in zip(lo, hi)]
        k += 1
    return FlagBasis(tuple(tuple(v) for v in vecs))


def verify_orbit_membership(basis: FlagBasis, b: Permutation,
                            config: SymmetricPairConfig) -> bool:
    """True iff every block rank equals ``r_b(i,j)`` exactly."""
    ranks = rectangle_ranks(gram_matrix(basis, config))
    return bool(np.array_equal(ranks, rank_table(b)))


def rank_conditions(b: Permutation, config: SymmetricPairConfig,
                    nontrivial: bool = True) -> list[tuple[int, int, int]]:
    """Triples ``(i, j, r_b(i,j))`` defining the closure of the orbit of ``b``.

    With ``nontrivial`` set, bounds implied by ``rank <= min(i, j)`` are dropped.
    """
    check_orbit_parameter(b, config)
    table = rank_table(b)
    N = b.N
    return [(i, j, int(table[i - 1, j - 1]))
            for i in range(1, N + 1) for j in range(1, N + 1)
            if not nontrivial or table[i - 1, j - 1] < min(i, j)]


@dataclass(frozen=True)
class ChernFormula:
    """Formal polynomial in ``c_1(F_k/F_{k-1})`` and an Euler class ``e``.

    Stored as a polynomial whose x-slots are the Chern symbols and whose single
    y-slot is ``e``.
    """

    expression: Polynomial
    rank: int

    @property
    def N(self) -> int:
        return self.expression.ring.nx

    def degree(self) -> int:
        """Cohomological degree in units of ``c_1``, with ``e`` of degree ``n``."""
        nx = self.N
        if self.expression.is_zero():
            return -1
        return max(sum(ex[:nx]) + self.rank * ex[nx] for ex, _ in self.expression)

    def uses_euler(self) -> bool:
        return self.expression.uses_y()

    def to_text(self) -> str:
        return _render_chern(self, latex=False)

    def to_latex(self) -> str:
        return _render_chern(self, latex=True)

    def __str__(self):
        return self.to_text()


def _chern_symbol(k: int, latex: bool) -> str:
    if latex:
        return "c_1(F_{1})" if k == 1 else f"c_1(F_{{{k}}}/F_{{{k - 1}}})"
    return "c1(F_1)" if k == 1 else f"c1(F_{k}/F_{k - 1})"


def _render_chern(f: ChernFormula, latex: bool) -> str:
    terms = f.expression.terms()
    if not terms:
        return "0"
    nx = f.N
    out = []
    for idx, (ex, c) in enumerate(terms):
        factors = []
        if ex[nx]:
            factors.append("e")
        for k in range(1, nx + 1):
            d = ex[k - 1]
            if not d:
                continue
            sym = _chern_symbol(k, latex)
            if d == 1:
                factors.append(sym)
            else:
                factors.append(f"{sym}^{{{d}}}" if latex else f"{sym}^{d}")
        joiner = " " if latex else "*"
        mono = joiner.join(factors)
        neg = c < 0
        mag = -c if neg else c
        if mono:
            body = mono if mag == 1 else f"{mag}{joiner}{mono}"
        else:
            body = str(mag)
        if idx == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def to_chern_formula(p: Polynomial, config: SymmetricPairConfig) -> ChernFormula:
    """Rewrite ``x_i -> c_1(F_i/F_{i-1})`` and ``y_1...y_n -> e``.

    Raises :class:`YDisciplineError` if some term carries a y-monomial other
    than ``1`` or ``y_1...y_n``.
    """
    ring = p.ring
    if ring.nx != config.ambient or ring.ny != config.rank:
        raise ValueError(f"polynomial ring {ring} does not match {config}")
    nx, ny = ring.nx, ring.ny
    full = (1,) * ny
    target = PolyRing(nx, 1)
    terms = {}
    for ex, c in p:
        ys = ex[nx:]
        if not any(ys):
            terms[ex[:nx] + (0,)] = c
        elif ys == full:
            terms[ex[:nx] + (1,)] = c
        else:
            raise YDisciplineError(
                f"term with y-exponents {ys} is not a multiple of y_1...y_{ny}")
    return ChernFormula(target.from_terms(terms), config.rank)
