"""
Permutations, signed permutations and involutions.

Permutations are stored in one-line notation as tuples of the values
``w(1), ..., w(N)``. Products are compositions of functions, so
``s_i * b`` swaps the *values* ``i`` and ``i+1`` of ``b`` while ``b * s_i``
swaps the entries in *positions* ``i`` and ``i+1``.

>>> Permutation.parse("2314").cycle_string()
'(1,2,3)'
>>> length(Permutation.parse("2314"))
2
>>> absolute_value(SignedPermutation.parse("1 3- 2-")).one_line()
'132'
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from typing import Iterator, Literal, Optional, Sequence

import numpy as np

__all__ = [
    "Family", "SymmetricPairConfig", "Permutation", "SignedPermutation",
    "Sign", "length", "embed_signed", "absolute_value", "rank_numbers",
    "rank_table", "permutation_from_rank_table", "enumerate_involutions",
    "enumerate_fpf_involutions", "enumerate_signed_permutations",
    "weyl_k_fixed_points", "longest_element", "simple_transposition",
]

Sign = Literal["+", "-"]


class Family(enum.Enum):
    """The four symmetric pairs handled by the package."""

    O_ODD = "o-odd"
    O_EVEN = "o-even"
    SO_EVEN = "so-even"
    SP = "sp"

    @classmethod
    def parse(cls, name: str | Family) -> Family:
        if isinstance(name, Family):
            return name
        key = name.strip().lower().replace("_", "-")
        for fam in cls:
            if fam.value == key:
                return fam
        raise ValueError(f"unknown family {name!r}; expected one of "
                         f"{', '.join(f.value for f in cls)}")

    @property
    def orthogonal(self) -> bool:
        return self is not Family.SP


@dataclass(frozen=True)
class SymmetricPairConfig:
    """A family together with its rank ``n``.

    The ambient dimension is ``2n+1`` for the odd orthogonal family and
    ``2n`` otherwise.
    """

    family: Family
    rank: int

    def __post_init__(self):
        object.__setattr__(self, "family", Family.parse(self.family))
        if not isinstance(self.rank, (int, np.integer)) or self.rank < 1:
            raise ValueError(f"rank must be a positive integer, got {self.rank!r}")
        object.__setattr__(self, "rank", int(self.rank))

    @property
    def ambient(self) -> int:
        return 2 * self.rank + 1 if self.family is Family.O_ODD else 2 * self.rank

    # short aliases used throughout
    @property
    def n(self) -> int:
        return self.rank

    @property
    def N(self) -> int:
        return self.ambient

    def __str__(self):
        return f"{self.family.value}(n={self.rank})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of ``{1..N}`` in one-line notation."""

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(v) for v in self.word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"{word} is not a permutation of 1..{len(word)}")
        object.__setattr__(self, "word", word)

    @classmethod
    def identity(cls, N: int) -> Permutation:
        return cls(tuple(range(1, N + 1)))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], N: int) -> Permutation:
        word = list(range(1, N + 1))
        seen: set[int] = set()
        for cyc in cycles:
            for a in cyc:
                if not 1 <= a <= N or a in seen:
                    raise ValueError(f"bad cycle {tuple(cyc)} for N={N}")
                seen.add(a)
            for a, b in zip(cyc, tuple(cyc[1:]) + tuple(cyc[:1])):
                word[a - 1] = b
        return cls(tuple(word))

    @classmethod
    def parse(cls, text: str, N: Optional[int] = None) -> Permutation:
        """Parse one-line (``"2314"``, ``"2 3 1 4"``) or cycle (``"(1,2,3)"``) text.

        Cycle notation and the keyword ``id`` need ``N``; a one-line word
        fixes its own size.
        """
        s = text.strip()
        if s.lower() in ("id", "e", "1") and N is not None:
            return cls.identity(N)
        if s.startswith("("):
            if N is None:
                raise ValueError("cycle notation needs the ambient size N")
            if _CYCLE_RE.sub("", s).strip():
                raise ValueError(f"cannot parse cycle notation {text!r}")
            cycles = [[int(a) for a in grp.split(",") if a.strip()]
                      for grp in _CYCLE_RE.findall(s)]
            return cls.from_cycles(cycles, N)
        if re.fullmatch(r"\d+", s):
            word = tuple(int(c) for c in s)
        else:
            word = tuple(int(c) for c in re.split(r"[\s,]+", s) if c)
        p = cls(word)
        if N is not None and p.N != N:
            raise ValueError(f"{text!r} has size {p.N}, expected {N}")
        return p

    @property
    def N(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __len__(self):
        return len(self.word)

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def __mul__(self, other: Permutation) -> Permutation:
        # (self * other)(i) = self(other(i))
        if self.N != other.N:
            raise ValueError("permutations of different sizes")
        return Permutation(tuple(self.word[v - 1] for v in other.word))

    def inverse(self) -> Permutation:
        inv = [0] * self.N
        for i, v in enumerate(self.word, 1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def length(self) -> int:
        return length(self)

    def is_involution(self) -> bool:
        return all(self.word[v - 1] == i for i, v in enumerate(self.word, 1))

    def fixed_points(self) -> list[int]:
        return [i for i, v in enumerate(self.word, 1) if i == v]

    def is_fpf_involution(self) -> bool:
        return self.is_involution() and not self.fixed_points()

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest entry."""
        out, seen = [], set()
        for start in range(1, self.N + 1):
            if start in seen:
                continue
            cyc, a = [], start
            while a not in seen:
                seen.add(a)
                cyc.append(a)
                a = self.word[a - 1]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "id"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)

    def one_line(self) -> str:
        sep = "" if self.N < 10 else " "
        return sep.join(map(str, self.word))

    def left_simple(self, i: int) -> Permutation:
        """``s_i * self``: exchange the values ``i`` and ``i+1``."""
        swap = {i: i + 1, i + 1: i}
        return Permutation(tuple(swap.get(v, v) for v in self.word))

    def right_simple(self, i: int) -> Permutation:
        """``self * s_i``: exchange the entries in positions ``i`` and ``i+1``."""
        w = list(self.word)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(tuple(w))

    def conjugate_simple(self, i: int) -> Permutation:
        return self.left_simple(i).right_simple(i)

    def __str__(self):
        return self.one_line()


@dataclass(frozen=True, order=True)
class SignedPermutation:
    """A signed permutation of ``{1..n}``: ``word[i-1] = ±|w(i)|``."""

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(v) for v in self.word)
        if sorted(abs(v) for v in word) != list(range(1, len(word) + 1)):
            raise ValueError(f"{word} is not a signed permutation")
        object.__setattr__(self, "word", word)

    @classmethod
    def parse(cls, text: str) -> SignedPermutation:
        """Parse ``"1 3- 2-"``, ``"13-2-"`` or ``"1,-3,-2"``."""
        s = text.strip()
        if re.search(r"[\s,]", s):
            toks = [t for t in re.split(r"[\s,]+", s) if t]
        else:
            # compact form: single digits, each optionally followed by "-"
            toks = re.findall(r"\d-?", s)
            if "".join(toks) != s:
                raise ValueError(f"cannot parse signed permutation {text!r}")
        word = []
        for t in toks:
            m = re.fullmatch(r"(-?)(\d+)(-?)", t)
            if m is None or (m.group(1) and m.group(3)):
                raise ValueError(f"bad signed entry {t!r}")
            word.append(-int(m.group(2)) if (m.group(1) or m.group(3)) else int(m.group(2)))
        return cls(tuple(word))

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def sign_changes(self) -> int:
        return sum(1 for v in self.word if v < 0)

    def __str__(self):
        return " ".join(f"{abs(v)}-" if v < 0 else str(v) for v in self.word)


def length(p: Permutation) -> int:
    """Number of inversions of ``p``."""
    w = p.word
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def longest_element(N: int) -> Permutation:
    return Permutation(tuple(range(N, 0, -1)))


def simple_transposition(i: int, N: int) -> Permutation:
    if not 1 <= i < N:
        raise ValueError(f"s_{i} does not exist in S_{N}")
    return Permutation.identity(N).right_simple(i)


def embed_signed(s: SignedPermutation, config: SymmetricPairConfig) -> Permutation:
    """Image of a signed permutation of ``{1..n}`` in ``S_N``.

    Negative entries ``-k`` go to ``N+1-k``, and the second half is forced
    by ``σ(N+1-i) = N+1-σ(i)``; for odd ``N`` the middle letter is fixed.
    """
    n, N = config.rank, config.ambient
    if s.n != n:
        raise ValueError(f"signed permutation of rank {s.n} does not match {config}")
    word = [0] * N
    for i, v in enumerate(s.word, 1):
        sigma = v if v > 0 else N + 1 - abs(v)
        word[i - 1] = sigma
        word[N - i] = N + 1 - sigma
    if N % 2:
        word[n] = n + 1
    return Permutation(tuple(word))


def absolute_value(s: SignedPermutation) -> Permutation:
    return Permutation(tuple(abs(v) for v in s.word))


def rank_numbers(b: Permutation, i: int, j: int) -> int:
    """``r_b(i,j) = #{k <= i : b(k) <= j}``; zero when ``i`` or ``j`` is 0."""
    if not b.is_involution():
        raise ValueError(f"{b} is not an involution")
    if not (0 <= i <= b.N and 0 <= j <= b.N):
        raise ValueError(f"indices ({i},{j}) out of range for S_{b.N}")
    return sum(1 for k in range(1, i + 1) if b(k) <= j)


def rank_table(p: Permutation) -> np.ndarray:
    """All counts ``#{k <= i : p(k) <= j}`` as an ``N x N`` array (entry ``[i-1, j-1]``).

    Works for any permutation, not only involutions.
    """
    N = p.N
    mat = np.zeros((N, N), dtype=np.int64)
    mat[np.arange(N), np.asarray(p.word) - 1] = 1
    return mat.cumsum(axis=0).cumsum(axis=1)


def permutation_from_rank_table(table: np.ndarray) -> Permutation:
    """Recover ``p`` from :func:`rank_table` output."""
    t = np.pad(np.asarray(table), ((1, 0), (1, 0)))
    mat = t[1:, 1:] - t[:-1, 1:] - t[1:, :-1] + t[:-1, :-1]
    if not (np.all((mat == 0) | (mat == 1)) and np.all(mat.sum(0) == 1)
            and np.all(mat.sum(1) == 1)):
        raise ValueError("table is not the rank table of a permutation")
    return Permutation(tuple(int(j) + 1 for j in mat.argmax(axis=1)))


def _involutions(letters: list[int], fpf: bool) -> Iterator[dict[int, int]]:
    if not letters:
        yield {}
        return
    a, rest = letters[0], letters[1:]
    if not fpf:
        for m in _involutions(rest, fpf):
            yield {a: a, **m}
    for k, c in enumerate(rest):
        for m in _involutions(rest[:k] + rest[k + 1:], fpf):
            yield {a: c, c: a, **m}


def enumerate_involutions(N: int) -> list[Permutation]:
    """All involutions of ``S_N`` in lexicographic order of one-line words."""
    if N < 1:
        raise ValueError("N must be positive")
    out = [Permutation(tuple(m[i] for i in range(1, N + 1)))
           for m in _involutions(list(range(1, N + 1)), fpf=False)]
    return sorted(out)


def enumerate_fpf_involutions(N: int) -> list[Permutation]:
    """All fixed-point-free involutions of ``S_N`` (``N`` even), lex order."""
    if N < 2 or N % 2:
        raise ValueError(f"fixed-point-free involutions need even N >= 2, got {N}")
    out = [Permutation(tuple(m[i] for i in range(1, N + 1)))
           for m in _involutions(list(range(1, N + 1)), fpf=True)]
    return sorted(out)


def enumerate_signed_permutations(n: int) -> list[SignedPermutation]:
    out = []
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            out.append(SignedPermutation(tuple(s * v for s, v in zip(signs, perm))))
    return out


def weyl_k_fixed_points(config: SymmetricPairConfig,
                        component: Optional[Sign] = None) -> list[Permutation]:
    """Torus-fixed points of the closed orbit(s), as elements of ``S_N``.

    For SO_EVEN, ``component='+'`` selects even numbers of sign changes and
    ``'-'`` odd ones; ``None`` (and every other family) keeps all signed
    permutations.
    """
    keep = None
    if config.family is Family.SO_EVEN and component is not None:
        if component not in ("+", "-"):
            raise ValueError(f"component must be '+' or '-', got {component!r}")
        keep = 0 if component == "+" else 1
    pts = {embed_signed(s, config) for s in enumerate_signed_permutations(config.rank)
           if keep is None or s.sign_changes() % 2 == keep}
    return sorted(pts)
